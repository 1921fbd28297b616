#![no_main]

use libfuzzer_sys::fuzz_target;
use liekit::repcore::Representation;
use liekit::{BigRational, Complex64};

fuzz_target!(|data: &str| {
    if let Ok(r) = Representation::<BigRational>::from_json_str(data) {
        let again = Representation::<BigRational>::from_json(&r.to_json()).unwrap();
        assert_eq!(again.dim(), r.dim());
    }
    Representation::<Complex64>::from_json_str(data).ok();
});
