#![no_main]

use libfuzzer_sys::fuzz_target;
use liekit::matcore::json::{complex_from_str, complex_to_json};

fuzz_target!(|data: &str| {
    if let Ok(m) = complex_from_str(data) {
        let again = complex_from_str(&complex_to_json(&m).to_string()).expect("printed matrix parses");
        assert_eq!(again.shape(), m.shape());
    }
});
