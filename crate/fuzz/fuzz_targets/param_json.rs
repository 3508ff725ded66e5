#![no_main]

use libfuzzer_sys::fuzz_target;
use rigidcurve::curvelocal::ParamCurve;
use rigidcurve::exactalg::{Rat, UniPoly};

fuzz_target!(|data: &[u8]| {
    let Ok(s) = std::str::from_utf8(data) else { return };
    if let Ok(c) = serde_json::from_str::<ParamCurve>(s) {
        let text = serde_json::to_string(&c).expect("serialize");
        assert_eq!(serde_json::from_str::<ParamCurve>(&text).expect("reparse").coords(), c.coords());
    }
    if let Ok(p) = serde_json::from_str::<UniPoly<Rat>>(s) {
        let text = serde_json::to_string(&p).expect("serialize");
        assert_eq!(serde_json::from_str::<UniPoly<Rat>>(&text).expect("reparse"), p);
    }
});
