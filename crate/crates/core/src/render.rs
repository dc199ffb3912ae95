//! Text renderings: DOT Hasse diagrams, the `f_z` table and its JSON form.

use serde_json::{json, Map, Value};

use crate::cayley::MapFamily;
use crate::poset::FinitePoset;

fn quote(name: &str) -> String {
    format!("\"{}\"", name.replace('\\', "\\\\").replace('"', "\\\""))
}

/// DOT digraph of the cover pairs, drawn bottom to top.
pub fn hasse_dot(p: &FinitePoset, graph_name: &str) -> String {
    let mut out = format!("digraph {graph_name} {{\n  rankdir=BT;\n");
    for name in p.names() {
        out.push_str(&format!("  {};\n", quote(name)));
    }
    for (x, y) in p.cover_pairs() {
        out.push_str(&format!("  {} -> {};\n", quote(p.name(x)), quote(p.name(y))));
    }
    out.push_str("}\n");
    out
}

/// One row per `x`, one column per map `f_z`, cells rendered as `{a,b}`.
pub fn embed_table(family: &MapFamily<'_>) -> String {
    let p = family.base;
    let mut rows: Vec<Vec<String>> = Vec::with_capacity(p.len() + 1);
    let mut header = vec!["x".to_string()];
    header.extend(p.names().iter().map(|z| format!("f_{z}")));
    rows.push(header);
    for x in p.elements() {
        let mut row = vec![p.name(x).to_string()];
        row.extend(p.elements().map(|z| p.format_set(family.value(z, x))));
        rows.push(row);
    }
    grid(&rows)
}

/// Aligned table with a rule under the first row. Cells are separated by
/// ` | `; every column but the last is padded to its widest cell.
pub fn grid(rows: &[Vec<String>]) -> String {
    let Some(first) = rows.first() else {
        return String::new();
    };
    let cols = first.len();
    let widths: Vec<usize> = (0..cols)
        .map(|c| rows.iter().map(|r| r[c].chars().count()).max().unwrap_or(0))
        .collect();
    let render = |row: &[String]| {
        let cells: Vec<String> = row
            .iter()
            .enumerate()
            .map(|(c, cell)| {
                if c + 1 == cols {
                    cell.clone()
                } else {
                    let pad = widths[c] - cell.chars().count();
                    format!("{cell}{}", " ".repeat(pad))
                }
            })
            .collect();
        cells.join(" | ")
    };
    let mut out = render(first);
    out.push('\n');
    let rule: Vec<String> = widths.iter().map(|&w| "-".repeat(w)).collect();
    out.push_str(&rule.join("-+-"));
    out.push('\n');
    for row in &rows[1..] {
        out.push_str(&render(row));
        out.push('\n');
    }
    out
}

/// `{"elements": [...], "maps": {"<a>": {"<x>": [...]}}}`, keys in element
/// order, antichains as sorted name arrays.
pub fn embed_json(family: &MapFamily<'_>) -> Value {
    let p = family.base;
    let mut maps = Map::new();
    for a in p.elements() {
        let mut values = Map::new();
        for x in p.elements() {
            let names: Vec<&str> = family.value(a, x).iter().map(|y| p.name(y)).collect();
            values.insert(p.name(x).to_string(), json!(names));
        }
        maps.insert(p.name(a).to_string(), Value::Object(values));
    }
    json!({ "elements": p.names(), "maps": maps })
}
