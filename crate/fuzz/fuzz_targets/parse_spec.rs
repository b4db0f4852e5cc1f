#![no_main]

use cayleylab::cli::parse_spec;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    if let Ok(s) = parse_spec(text) {
        // rendering a parsed set gives the same edges back
        let again = parse_spec(&s.to_string()).expect("rendered spec parses");
        assert_eq!(again.edges(), s.edges());
    }
});
