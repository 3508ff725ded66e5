#![no_main]

use libfuzzer_sys::fuzz_target;
use rigidcurve::exactalg::Rat;

fuzz_target!(|data: &[u8]| {
    let Ok(s) = std::str::from_utf8(data) else { return };
    if let Ok(r) = s.parse::<Rat>() {
        assert_eq!(r.to_string().parse::<Rat>().expect("reparse"), r);
    }
});
