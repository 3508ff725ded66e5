#![no_main]

use libfuzzer_sys::fuzz_target;
use rigidcurve::wire::CurveFile;

fuzz_target!(|data: &[u8]| {
    let Ok(s) = std::str::from_utf8(data) else { return };
    if let Ok(f) = CurveFile::from_json(s) {
        let text = f.to_json();
        let back = CurveFile::from_json(&text).expect("reparse");
        assert_eq!(back.to_json(), text);
    }
});
