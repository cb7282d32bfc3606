//! Parameter grids: `start:stop:step`, plain values, or comma lists of both.

use thiserror::Error;

/// Upper bound on the number of points a single grid may expand to.
pub const MAX_POINTS: usize = 100_000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GridError {
    #[error("empty grid")]
    Empty,
    #[error("'{0}' is not a number")]
    NotANumber(String),
    #[error("'{0}': expected a value or start:stop:step")]
    Shape(String),
    #[error("'{0}': bounds and step must be finite")]
    NonFinite(String),
    #[error("'{0}': step must be positive")]
    Step(String),
    #[error("'{0}': stop is below start")]
    Reversed(String),
    #[error("grid expands to more than {MAX_POINTS} points")]
    TooLarge,
    #[error("'{0}' is not a non-negative integer")]
    NotAnIndex(String),
}

fn number(s: &str) -> Result<f64, GridError> {
    let s = s.trim();
    s.parse::<f64>().map_err(|_| GridError::NotANumber(s.to_string()))
}

/// Round to 12 significant digits so that `−0.3 + 3·0.3` prints and
/// computes as `0.6`.
fn snap(x: f64) -> f64 {
    if x == 0.0 {
        return 0.0;
    }
    format!("{x:.11e}").parse().unwrap_or(x)
}

/// Expand a grid expression into its points, in order.
pub fn parse_grid(spec: &str) -> Result<Vec<f64>, GridError> {
    if spec.trim().is_empty() {
        return Err(GridError::Empty);
    }
    let mut out = Vec::new();
    for item in spec.split(',') {
        let item = item.trim();
        let parts: Vec<&str> = item.split(':').collect();
        match parts.as_slice() {
            [v] => {
                let v = number(v)?;
                if !v.is_finite() {
                    return Err(GridError::NonFinite(item.to_string()));
                }
                out.push(v);
            }
            [a, b, c] => {
                let (start, stop, step) = (number(a)?, number(b)?, number(c)?);
                if !(start.is_finite() && stop.is_finite() && step.is_finite()) {
                    return Err(GridError::NonFinite(item.to_string()));
                }
                if !(step > 0.0) {
                    return Err(GridError::Step(item.to_string()));
                }
                if stop < start {
                    return Err(GridError::Reversed(item.to_string()));
                }
                let span = (stop - start) / step;
                if !(span < MAX_POINTS as f64) {
                    return Err(GridError::TooLarge);
                }
                // inclusive of stop up to rounding in the step
                let count = (span + 1e-9).floor() as usize + 1;
                out.extend((0..count).map(|i| snap(start + i as f64 * step)));
            }
            _ => return Err(GridError::Shape(item.to_string())),
        }
        if out.len() > MAX_POINTS {
            return Err(GridError::TooLarge);
        }
    }
    Ok(out)
}

/// A grid whose points must all be non-negative integers.
pub fn parse_index_grid(spec: &str) -> Result<Vec<u32>, GridError> {
    parse_grid(spec)?
        .into_iter()
        .map(|v| {
            if v >= 0.0 && v.fract() == 0.0 && v <= f64::from(u32::MAX) {
                Ok(v as u32)
            } else {
                Err(GridError::NotAnIndex(v.to_string()))
            }
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ranges_and_lists() {
        assert_eq!(parse_grid("0.5").unwrap(), vec![0.5]);
        assert_eq!(parse_grid("-0.3:0.9:0.3").unwrap(), vec![-0.3, 0.0, 0.3, 0.6, 0.9]);
        assert_eq!(parse_grid("0:1:0.4").unwrap(), vec![0.0, 0.4, 0.8]);
        assert_eq!(parse_grid("1, 3:4:1").unwrap(), vec![1.0, 3.0, 4.0]);
        assert_eq!(parse_index_grid("0:3:1").unwrap(), vec![0, 1, 2, 3]);
    }

    #[test]
    fn rejects_bad_input() {
        assert_eq!(parse_grid(""), Err(GridError::Empty));
        assert!(matches!(parse_grid("1:2"), Err(GridError::Shape(_))));
        assert!(matches!(parse_grid("0:1:0"), Err(GridError::Step(_))));
        assert!(matches!(parse_grid("0:1:-1"), Err(GridError::Step(_))));
        assert!(matches!(parse_grid("2:1:1"), Err(GridError::Reversed(_))));
        assert!(matches!(parse_grid("0:inf:1"), Err(GridError::NonFinite(_))));
        assert!(matches!(parse_grid("nan"), Err(GridError::NonFinite(_))));
        assert_eq!(parse_grid("0:1e9:1e-3"), Err(GridError::TooLarge));
        assert!(matches!(parse_index_grid("1.5"), Err(GridError::NotAnIndex(_))));
        assert!(matches!(parse_index_grid("-1"), Err(GridError::NotAnIndex(_))));
        assert!(matches!(parse_grid("a"), Err(GridError::NotANumber(_))));
    }
}
