#![no_main]

use libfuzzer_sys::fuzz_target;
use locex_core::io::parse_sigma;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    if let Ok(order) = parse_sigma(text) {
        let mut sorted = order.clone();
        sorted.sort_unstable();
        assert!(sorted.iter().enumerate().all(|(i, &x)| i == x));
    }
});
