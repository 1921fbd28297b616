#![no_main]

use libfuzzer_sys::fuzz_target;
use liekit::groups::GroupId;

fuzz_target!(|data: &str| {
    if let Ok(g) = data.parse::<GroupId>() {
        assert_eq!(g.to_string().parse::<GroupId>().unwrap(), g);
    }
});
