#![no_main]

use libfuzzer_sys::fuzz_target;
use locex_core::io::{parse_ex_cache, write_ex_cache};

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    if let Ok(entries) = parse_ex_cache(text) {
        assert_eq!(parse_ex_cache(&write_ex_cache(&entries)).unwrap(), entries);
    }
});
