#![no_main]

use cayleylab::cli::parse_transposition;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    if let Ok(text) = std::str::from_utf8(data) {
        if let Ok(t) = parse_transposition(text) {
            let (a, b) = t.points();
            assert!(a < b);
        }
    }
});
