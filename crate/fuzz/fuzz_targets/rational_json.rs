#![no_main]

use libfuzzer_sys::fuzz_target;
use liekit::matcore::json::{rational_from_str, rational_to_json};

fuzz_target!(|data: &str| {
    if let Ok(m) = rational_from_str(data) {
        assert_eq!(rational_from_str(&rational_to_json(&m).to_string()).unwrap(), m);
    }
});
