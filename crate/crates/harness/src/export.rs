//! DOT, CSV and JSONL renderings of enumerated carriers.

use std::fmt::Write;

use serde_json::json;

use crate::check::BitMatrix;

/// Hasse diagram of the strict order `less`: one node per label, one edge
/// per cover.
pub fn to_dot(name: &str, labels: &[String], less: &BitMatrix) -> String {
    let covers = less.transitive_reduction();
    let mut out = String::new();
    writeln!(out, "digraph \"{}\" {{", escape(name)).unwrap();
    writeln!(out, "  rankdir=BT;").unwrap();
    for (i, l) in labels.iter().enumerate() {
        writeln!(out, "  n{i} [label=\"{}\"];", escape(l)).unwrap();
    }
    for i in 0..labels.len() {
        for j in 0..labels.len() {
            if covers.get(i, j) {
                writeln!(out, "  n{i} -> n{j};").unwrap();
            }
        }
    }
    out.push_str("}\n");
    out
}

fn escape(s: &str) -> String {
    s.replace('\\', "\\\\").replace('"', "\\\"")
}

fn unescape(s: &str) -> String {
    let mut out = String::new();
    let mut chars = s.chars();
    while let Some(c) = chars.next() {
        if c == '\\' {
            if let Some(d) = chars.next() {
                out.push(d);
            }
        } else {
            out.push(c);
        }
    }
    out
}

/// Reads back what [`to_dot`] writes: node labels and the cover matrix.
pub fn parse_dot(text: &str) -> Option<(Vec<String>, BitMatrix)> {
    let mut labels = Vec::new();
    let mut edges = Vec::new();
    for line in text.lines().map(str::trim) {
        if let Some(rest) = line.strip_prefix('n') {
            if let Some((src, dst)) = rest.split_once(" -> n") {
                let a: usize = src.parse().ok()?;
                let b: usize = dst.trim_end_matches(';').parse().ok()?;
                edges.push((a, b));
            } else if let Some((id, tail)) = rest.split_once(" [label=\"") {
                let id: usize = id.parse().ok()?;
                if id != labels.len() {
                    return None;
                }
                labels.push(unescape(tail.strip_suffix("\"];")?));
            }
        }
    }
    let mut m = BitMatrix::new(labels.len());
    for (a, b) in edges {
        if a >= labels.len() || b >= labels.len() {
            return None;
        }
        m.set(a, b);
    }
    Some((labels, m))
}

/// Comparison matrix with a header row; entries are `<`, `=`, `>` or blank
/// for incomparable pairs.
pub fn to_csv(labels: &[String], entry: impl Fn(usize, usize) -> &'static str) -> String {
    let quote = |s: &str| format!("\"{}\"", s.replace('"', "\"\""));
    let mut out = String::new();
    out.push_str("term");
    for l in labels {
        out.push(',');
        out.push_str(&quote(l));
    }
    out.push('\n');
    for (i, l) in labels.iter().enumerate() {
        out.push_str(&quote(l));
        for j in 0..labels.len() {
            out.push(',');
            out.push_str(entry(i, j));
        }
        out.push('\n');
    }
    out
}

/// One `{"term", "height"}` object per line.
pub fn to_jsonl(terms: &[(String, usize)]) -> String {
    terms.iter().map(|(t, h)| json!({ "term": t, "height": h }).to_string() + "\n").collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn dot_round_trips_covers() {
        let labels: Vec<String> = ["a", "b\"q", "c", "d"].iter().map(|s| s.to_string()).collect();
        // a < b < d, a < c < d
        let less = BitMatrix::from_fn(4, |i, j| matches!((i, j), (0, 1) | (0, 2) | (0, 3) | (1, 3) | (2, 3)));
        let dot = to_dot("demo", &labels, &less);
        let (back, covers) = parse_dot(&dot).unwrap();
        assert_eq!(back, labels);
        assert_eq!(covers.count(), 4);
        assert_eq!(covers.closure(), less);
    }

    #[test]
    fn empty_documents_are_valid() {
        let dot = to_dot("empty", &[], &BitMatrix::new(0));
        assert_eq!(parse_dot(&dot).unwrap().0.len(), 0);
        assert_eq!(to_csv(&[], |_, _| ""), "term\n");
        assert_eq!(to_jsonl(&[]), "");
    }
}
