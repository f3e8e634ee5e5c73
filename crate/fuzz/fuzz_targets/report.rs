#![no_main]

use libfuzzer_sys::fuzz_target;
use meanconvex::report::{decode_report, to_json};

fuzz_target!(|data: &[u8]| {
    let Ok(s) = std::str::from_utf8(data) else {
        return;
    };
    if let Ok(report) = decode_report(s) {
        // Encoding is a fixed point after one decode.
        let once = to_json(&report).unwrap();
        let again = to_json(&decode_report(&once).unwrap()).unwrap();
        assert_eq!(once, again);
    }
});
