#![no_main]

use libfuzzer_sys::fuzz_target;
use liekit::repsl3::{weights_from_csv, weights_to_csv};

fuzz_target!(|data: &str| {
    if let Ok(w) = weights_from_csv(data) {
        assert_eq!(weights_from_csv(&weights_to_csv(&w)).unwrap(), w);
    }
});
