#![no_main]

use libfuzzer_sys::fuzz_target;
use semigroup_patterns::Pattern;

fuzz_target!(|bytes: &[u8]| {
    let Ok(text) = std::str::from_utf8(bytes) else {
        return;
    };
    if let Ok(p) = text.parse::<Pattern>() {
        let back: Pattern = p.to_string().parse().expect("display output parses");
        assert_eq!(back, p);
        let _ = p.admissibility_degree();
        let _ = p.boolean_decomposition();
    }
});
