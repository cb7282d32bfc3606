#![no_main]

use kratzer_cli::config::parse_config;
use kratzer_cli::{Command, RunConfig};
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Some((&selector, rest)) = data.split_first() else { return };
    let command = match selector % 14 {
        0 => Command::Spectrum,
        1 => Command::Critical,
        2 => Command::Wavefunction,
        3 => Command::Relativistic,
        4 => Command::Table1,
        k => Command::Figure(k - 4),
    };
    if let Ok(text) = std::str::from_utf8(rest) {
        if let Ok(map) = parse_config(text) {
            let _ = RunConfig::from_map(command, &map);
        }
    }
});
