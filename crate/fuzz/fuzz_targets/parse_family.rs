#![no_main]

use libfuzzer_sys::fuzz_target;
use locex_core::io::{parse_family, write_family};

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    if let Ok(f) = parse_family(text) {
        assert_eq!(parse_family(&write_family(&f)).unwrap(), f);
    }
});
