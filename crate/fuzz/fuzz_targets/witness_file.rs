#![no_main]

use libfuzzer_sys::fuzz_target;
use rigidcurve::wire::WitnessFile;

fuzz_target!(|data: &[u8]| {
    let Ok(s) = std::str::from_utf8(data) else { return };
    if let Ok(f) = WitnessFile::from_json(s) {
        let text = f.to_json();
        assert_eq!(WitnessFile::from_json(&text).expect("reparse"), f);
    }
});
