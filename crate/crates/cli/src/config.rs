//! Configuration files: a `rank N` line, then one `<letter> = q1 ... qN` line
//! per point. `#` starts a comment; blank lines are ignored.

use gcalg::exalg::MAX_AMBIENT;
use gcalg::scalar::parse_scalar;
use gcalg::whitney::{Configuration, Letter};

use crate::error::CliError;

fn err(line: usize, message: impl Into<String>) -> CliError {
    CliError::Config {
        line,
        message: message.into(),
    }
}

pub fn parse_config(text: &str) -> Result<Configuration, CliError> {
    let mut config: Option<Configuration> = None;
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let content = raw.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        let Some(c) = config.as_mut() else {
            let rank = content
                .strip_prefix("rank")
                .filter(|r| r.starts_with(char::is_whitespace))
                .ok_or_else(|| err(line, "expected `rank N` before any point"))?;
            let n: usize = rank
                .trim()
                .parse()
                .map_err(|_| err(line, format!("malformed rank `{}`", rank.trim())))?;
            if n == 0 || n > MAX_AMBIENT {
                return Err(err(line, format!("rank must be between 1 and {MAX_AMBIENT}")));
            }
            config = Some(Configuration::new(n));
            continue;
        };
        let (name, coords) = content
            .split_once('=')
            .ok_or_else(|| err(line, "expected `<letter> = <coordinates>`"))?;
        let name = name.trim();
        let mut chars = name.chars();
        match (chars.next(), chars.next()) {
            (Some(ch), None) if ch.is_ascii_alphabetic() => {}
            _ => return Err(err(line, format!("`{name}` is not a single letter"))),
        }
        let row = coords
            .split_whitespace()
            .map(|q| parse_scalar(q).ok_or_else(|| err(line, format!("malformed rational `{q}`"))))
            .collect::<Result<Vec<_>, _>>()?;
        if row.len() != c.ambient() {
            return Err(err(
                line,
                format!("`{name}` has {} coordinates, expected {}", row.len(), c.ambient()),
            ));
        }
        c.insert(Letter::new(name), row).map_err(|e| err(line, e.to_string()))?;
    }
    config.ok_or_else(|| err(1, "missing `rank N` line"))
}
