#![no_main]

use libfuzzer_sys::fuzz_target;
use meanconvex::parse;

fuzz_target!(|data: &[u8]| {
    let Ok(s) = std::str::from_utf8(data) else {
        return;
    };
    let _ = parse::parse_weight(s);
    if let Ok(f) = parse::parse_function(s) {
        let _ = f.value(0.5);
    }
    if let Ok((lo, hi)) = parse::parse_domain(s) {
        assert!(lo < hi);
    }
    if let Ok(id) = parse::parse_theorem(s) {
        assert_eq!(parse::parse_theorem(id.as_str()), Ok(id));
    }
    let _ = parse::parse_class(s);
    let _ = parse::parse_sense(s);
    let _ = parse::parse_corollary(s);
    let _ = parse::parse_equality_family(s);
});
