#![no_main]

use libfuzzer_sys::fuzz_target;
use locex_core::ExactRational;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    if let Ok(r) = text.parse::<ExactRational>() {
        assert_eq!(r.to_string().parse::<ExactRational>().unwrap(), r);
    }
    let _ = ExactRational::from_decimal(text);
});
