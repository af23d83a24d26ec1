#![no_main]

use libfuzzer_sys::fuzz_target;
use semigroup_patterns::{NumericalSemigroup, Pattern};

fuzz_target!(|bytes: &[u8]| {
    if let Ok(p) = serde_json::from_slice::<Pattern>(bytes) {
        let json = serde_json::to_vec(&p).unwrap();
        assert_eq!(serde_json::from_slice::<Pattern>(&json).unwrap(), p);
    }
    if bytes.len() > 64 {
        return;
    }
    if let Ok(s) = serde_json::from_slice::<NumericalSemigroup>(bytes) {
        let json = serde_json::to_vec(&s).unwrap();
        assert_eq!(
            serde_json::from_slice::<NumericalSemigroup>(&json).unwrap(),
            s
        );
    }
});
