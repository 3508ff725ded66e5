#![no_main]

use libfuzzer_sys::fuzz_target;
use rigidcurve::exactalg::parse_tern_json;

fuzz_target!(|data: &[u8]| {
    let Ok(s) = std::str::from_utf8(data) else { return };
    if let Ok(f) = parse_tern_json(s) {
        let text = serde_json::to_string(&f).expect("serialize");
        assert_eq!(parse_tern_json(&text).expect("reparse"), f);
    }
});
