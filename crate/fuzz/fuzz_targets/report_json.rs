#![no_main]

use cayleylab::cli::parse_report_json;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    if let Ok(report) = parse_report_json(text) {
        let again = parse_report_json(&report.to_json()).expect("a valid report round-trips");
        assert_eq!(again, report);
    }
});
