#![no_main]

use libfuzzer_sys::fuzz_target;
use locex_core::io::{parse_sequence, write_sequence};

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    if let Ok(s) = parse_sequence(text) {
        // Decimal input always has a terminating expansion, so it writes back exactly.
        assert_eq!(parse_sequence(&write_sequence(&s)).unwrap(), s);
    }
});
