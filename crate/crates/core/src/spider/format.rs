//! Instance text format:
//!
//! ```text
//! core = 2
//! left = 3, 1
//! right = 1,1
//! ```
//!
//! Whitespace is ignored, blank lines and `#` comments are skipped, and the
//! order of values on a side does not matter.

use super::{CanonicalDoubleSpider, DoubleSpiderSpec};
use crate::error::FormatError;

fn parse_int(value: &str, line: usize) -> Result<usize, FormatError> {
    value.parse().map_err(|_| FormatError::BadValue { line, value: value.to_string() })
}

pub fn parse_instance(text: &str) -> Result<DoubleSpiderSpec, FormatError> {
    let mut core = None;
    let mut left = None;
    let mut right = None;
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let content = raw.split('#').next().unwrap_or("");
        let compact: String = content.chars().filter(|c| !c.is_whitespace()).collect();
        if compact.is_empty() {
            continue;
        }
        let (key, value) = compact.split_once('=').ok_or(FormatError::MissingEquals { line })?;
        let slot = match key {
            "core" => {
                if core.replace(parse_int(value, line)?).is_some() {
                    return Err(FormatError::DuplicateKey { line, key: key.to_string() });
                }
                continue;
            }
            "left" => &mut left,
            "right" => &mut right,
            other => return Err(FormatError::UnknownKey { line, key: other.to_string() }),
        };
        if value.is_empty() {
            return Err(FormatError::BadValue { line, value: String::new() });
        }
        let values = value.split(',').map(|v| parse_int(v, line)).collect::<Result<Vec<_>, _>>()?;
        if slot.replace(values).is_some() {
            return Err(FormatError::DuplicateKey { line, key: key.to_string() });
        }
    }
    Ok(DoubleSpiderSpec::new(
        core.ok_or(FormatError::MissingKey("core"))?,
        left.ok_or(FormatError::MissingKey("left"))?,
        right.ok_or(FormatError::MissingKey("right"))?,
    ))
}

/// Writes the canonical form; the output parses back to the same instance.
pub fn format_instance(spider: &CanonicalDoubleSpider) -> String {
    let join = |v: &[usize]| v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",");
    format!("core = {}\nleft = {}\nright = {}\n", spider.core(), join(spider.left()), join(spider.right()))
}

#[cfg(test)]
mod tests {
    use super::super::canonicalize;
    use super::*;

    #[test]
    fn parses_with_loose_whitespace() {
        let spec = parse_instance("  core= 2\n\n left = 3 , 1 # the P3\nright=1,1\n").unwrap();
        assert_eq!(spec, DoubleSpiderSpec::new(2, vec![3, 1], vec![1, 1]));
    }

    #[test]
    fn round_trips_canonical_form() {
        let c = canonicalize(&DoubleSpiderSpec::new(3, vec![1, 5, 4], vec![2, 3])).unwrap();
        let back = canonicalize(&parse_instance(&format_instance(&c)).unwrap()).unwrap();
        assert_eq!(back, c);
    }

    #[test]
    fn reports_structural_errors() {
        assert_eq!(parse_instance("core = 1\nleft = 1,1\n"), Err(FormatError::MissingKey("right")));
        assert!(matches!(parse_instance("core = 1\ncore = 2\n"), Err(FormatError::DuplicateKey { line: 2, .. })));
        assert!(matches!(parse_instance("core = x\n"), Err(FormatError::BadValue { line: 1, .. })));
        assert!(matches!(parse_instance("middle = 1\n"), Err(FormatError::UnknownKey { .. })));
        assert!(matches!(parse_instance("core 1\n"), Err(FormatError::MissingEquals { line: 1 })));
        assert!(matches!(
            parse_instance("core = 1\nleft = 1,,1\nright = 1,1"),
            Err(FormatError::BadValue { line: 2, .. })
        ));
    }
}
