#![no_main]

use libfuzzer_sys::fuzz_target;
use locex_core::report::{parse_reports, render_reports};
use locex_core::ReportFormat;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    if let Ok(records) = parse_reports(text) {
        if records.is_empty() {
            return;
        }
        let again = render_reports(&records, ReportFormat::Json).unwrap();
        assert_eq!(parse_reports(&again).unwrap(), records);
    }
});
