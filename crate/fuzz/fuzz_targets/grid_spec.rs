#![no_main]

use kratzer_cli::grid::{parse_grid, parse_index_grid, MAX_POINTS};
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    if let Ok(spec) = std::str::from_utf8(data) {
        if let Ok(points) = parse_grid(spec) {
            assert!(!points.is_empty() && points.len() <= MAX_POINTS);
            assert!(points.iter().all(|p| p.is_finite()));
        }
        let _ = parse_index_grid(spec);
    }
});
