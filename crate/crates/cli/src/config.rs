//! Flat `key = value` configuration files.
//!
//! ```text
//! # Table 1 with Schrödinger coupling
//! coupling = schrodinger
//! Dr = -0.3:0.9:0.3
//! format = json
//! ```

use std::collections::BTreeMap;
use thiserror::Error;

/// Keys accepted in config files and as `--flag` overrides.
pub const KEYS: &[&str] = &[
    "n", "m", "branch", "Dr", "Dtheta", "Z", "alpha", "mode", "format", "out", "tol", "coupling", "r", "theta",
];

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ConfigError {
    #[error("line {line}: expected 'key = value'")]
    Syntax { line: usize },
    #[error("line {line}: unknown key '{key}'")]
    UnknownKey { line: usize, key: String },
    #[error("line {line}: '{key}' set twice")]
    Duplicate { line: usize, key: String },
    #[error("line {line}: empty value for '{key}'")]
    EmptyValue { line: usize, key: String },
}

/// Parse a config file. `#` starts a comment; blank lines are ignored.
pub fn parse_config(text: &str) -> Result<BTreeMap<String, String>, ConfigError> {
    let mut map = BTreeMap::new();
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let content = raw.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        let (key, value) = content.split_once('=').ok_or(ConfigError::Syntax { line })?;
        let (key, value) = (key.trim(), value.trim());
        if !KEYS.contains(&key) {
            return Err(ConfigError::UnknownKey { line, key: key.to_string() });
        }
        if value.is_empty() {
            return Err(ConfigError::EmptyValue { line, key: key.to_string() });
        }
        if map.insert(key.to_string(), value.to_string()).is_some() {
            return Err(ConfigError::Duplicate { line, key: key.to_string() });
        }
    }
    Ok(map)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_comments_and_whitespace() {
        let map = parse_config("# header\n\nDr = 0.3 # trailing\n  n=1:3:1\r\nformat= json\n").unwrap();
        assert_eq!(map["Dr"], "0.3");
        assert_eq!(map["n"], "1:3:1");
        assert_eq!(map["format"], "json");
        assert_eq!(map.len(), 3);
    }

    #[test]
    fn reports_line_numbers() {
        assert_eq!(parse_config("n = 1\nbogus"), Err(ConfigError::Syntax { line: 2 }));
        assert_eq!(
            parse_config("\nq = 1"),
            Err(ConfigError::UnknownKey { line: 2, key: "q".into() })
        );
        assert_eq!(
            parse_config("m=1\nm=2"),
            Err(ConfigError::Duplicate { line: 2, key: "m".into() })
        );
        assert_eq!(
            parse_config("out ="),
            Err(ConfigError::EmptyValue { line: 1, key: "out".into() })
        );
    }
}
