//! Parsing of `--functions` and `--methods` selections.

use ratiosect::benchsuite::FUNCTION_COUNT;
use ratiosect::{Method, MethodKind};

/// Parses ids such as `1-20`, `7,9,12` or `1-6,12`. Order is kept and
/// duplicates are dropped.
pub fn parse_ids(text: &str) -> Result<Vec<usize>, String> {
    let mut ids = Vec::new();
    for part in text.split(',').map(str::trim) {
        let (lo, hi) = match part.split_once('-') {
            Some((a, b)) => (parse_id(a)?, parse_id(b)?),
            None => {
                let id = parse_id(part)?;
                (id, id)
            }
        };
        if lo > hi {
            return Err(format!("empty range `{part}`"));
        }
        for id in lo..=hi {
            if !ids.contains(&id) {
                ids.push(id);
            }
        }
    }
    Ok(ids)
}

fn parse_id(s: &str) -> Result<usize, String> {
    let id: usize = s
        .trim()
        .parse()
        .map_err(|_| format!("`{s}` is not a function id"))?;
    if (1..=FUNCTION_COUNT).contains(&id) {
        Ok(id)
    } else {
        Err(format!("function id {id} is outside 1..={FUNCTION_COUNT}"))
    }
}

/// Parses a comma-separated method list. An item may carry its own ratio as
/// `name=c`; otherwise `default_c` applies to methods that take one.
pub fn parse_methods(text: &str, default_c: Option<f64>) -> Result<Vec<Method>, String> {
    text.split(',')
        .map(str::trim)
        .map(|item| {
            let (name, c) = match item.split_once('=') {
                Some((n, c)) => {
                    let c: f64 = c.parse().map_err(|_| format!("bad ratio in `{item}`"))?;
                    (n, Some(c))
                }
                None => (item, default_c),
            };
            let kind: MethodKind = name.parse()?;
            if c.is_some() && !kind.takes_ratio() && item.contains('=') {
                return Err(format!("`{name}` does not take a ratio"));
            }
            Method::new(kind, c).map_err(|e| e.to_string())
        })
        .collect()
}
