#![no_main]

use libfuzzer_sys::fuzz_target;
use rigidcurve::curvelocal::SingTypeTag;

fuzz_target!(|data: &[u8]| {
    let Ok(s) = std::str::from_utf8(data) else { return };
    if let Ok(t) = s.parse::<SingTypeTag>() {
        assert_eq!(t.to_string().parse::<SingTypeTag>().expect("reparse"), t);
        let _ = t.delta();
    }
});
