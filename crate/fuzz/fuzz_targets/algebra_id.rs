#![no_main]

use libfuzzer_sys::fuzz_target;
use liekit::liealg::AlgebraId;

fuzz_target!(|data: &str| {
    if let Ok(a) = data.parse::<AlgebraId>() {
        assert_eq!(a.to_string().parse::<AlgebraId>().unwrap(), a);
    }
});
