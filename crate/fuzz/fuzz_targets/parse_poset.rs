#![no_main]

use libfuzzer_sys::fuzz_target;
use locex_core::io::{parse_poset, write_poset};

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    if let Ok(p) = parse_poset(text) {
        assert_eq!(parse_poset(&write_poset(&p)).unwrap(), p);
    }
});
