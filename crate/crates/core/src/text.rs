//! The plain-text poset format.
//!
//! ```text
//! # comment
//! elements: 0 a b 1
//! relations:
//! 0 a
//! a 1
//! ```
//!
//! Each relation line `x y` means `x < y`. Lines whose first non-blank
//! character is `#` are comments; blank lines are ignored.

use crate::error::{Error, Result};
use crate::poset::FinitePoset;

fn parse_error(line: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        message: message.into(),
    }
}

pub fn parse_poset(text: &str) -> Result<FinitePoset> {
    let mut elements: Option<Vec<String>> = None;
    let mut in_relations = false;
    let mut pairs: Vec<(String, String)> = Vec::new();

    for (idx, raw) in text.lines().enumerate() {
        let lineno = idx + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        if let Some(rest) = line.strip_prefix("elements:") {
            if elements.is_some() {
                return Err(parse_error(lineno, "duplicate `elements:` line"));
            }
            elements = Some(rest.split_whitespace().map(str::to_string).collect());
            continue;
        }
        if let Some(rest) = line.strip_prefix("relations:") {
            if elements.is_none() {
                return Err(parse_error(lineno, "`relations:` before `elements:`"));
            }
            if in_relations {
                return Err(parse_error(lineno, "duplicate `relations:` line"));
            }
            if !rest.trim().is_empty() {
                return Err(parse_error(lineno, "unexpected text after `relations:`"));
            }
            in_relations = true;
            continue;
        }
        if !in_relations {
            return Err(parse_error(
                lineno,
                format!("expected `elements:` or `relations:`, found `{line}`"),
            ));
        }
        let toks: Vec<&str> = line.split_whitespace().collect();
        let [a, b] = toks[..] else {
            return Err(parse_error(
                lineno,
                format!("relation lines need exactly two tokens, found {}", toks.len()),
            ));
        };
        pairs.push((a.to_string(), b.to_string()));
    }

    let Some(elements) = elements else {
        return Err(parse_error(0, "missing `elements:` line"));
    };
    FinitePoset::from_relations(&elements, &pairs)
}

/// Writes `p` with its cover pairs as relations. Parsing the output gives
/// back an equal poset.
pub fn write_poset(p: &FinitePoset) -> String {
    let mut out = String::from("elements:");
    for name in p.names() {
        out.push(' ');
        out.push_str(name);
    }
    out.push_str("\nrelations:\n");
    for (x, y) in p.cover_pairs() {
        out.push_str(p.name(x));
        out.push(' ');
        out.push_str(p.name(y));
        out.push('\n');
    }
    out
}
