//! The `.hg` text format and its JSON mirror.

use std::fmt::Write as _;
use std::path::Path;

use crate::error::{Error, Result};
use crate::hg::Hypergraph;

/// Canonical text: header `r n`, then one edge per line in lexicographic order.
pub fn write_hg(h: &Hypergraph) -> String {
    let mut out = format!("{} {}\n", h.r(), h.n());
    for e in h.edges() {
        let line: Vec<String> = e.iter().map(|v| v.to_string()).collect();
        writeln!(out, "{}", line.join(" ")).unwrap();
    }
    out
}

pub fn read_hg(text: &str) -> Result<Hypergraph> {
    let mut header: Option<(usize, usize)> = None;
    let mut edges = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let nums: Vec<usize> = line
            .split_whitespace()
            .map(|t| t.parse::<usize>())
            .collect::<std::result::Result<_, _>>()
            .map_err(|e| Error::Parse { line: i + 1, msg: e.to_string() })?;
        match header {
            None => {
                if nums.len() != 2 {
                    return Err(Error::Parse { line: i + 1, msg: "header must be `r n`".into() });
                }
                header = Some((nums[0], nums[1]));
            }
            Some((r, _)) => {
                if nums.len() != r {
                    return Err(Error::Parse { line: i + 1, msg: format!("expected {r} indices") });
                }
                edges.push(nums);
            }
        }
    }
    let (r, n) = header.ok_or(Error::Parse { line: 0, msg: "missing header".into() })?;
    Hypergraph::from_edges(r, n, edges)
}

pub fn to_json(h: &Hypergraph) -> String {
    serde_json::to_string(h).expect("hypergraph serializes")
}

pub fn from_json(text: &str) -> Result<Hypergraph> {
    Ok(serde_json::from_str(text)?)
}

/// Reads `.json` as the JSON mirror and anything else as `.hg`.
pub fn load(path: &Path) -> Result<Hypergraph> {
    let text = std::fs::read_to_string(path)?;
    if path.extension().is_some_and(|e| e == "json") {
        from_json(&text)
    } else {
        read_hg(&text)
    }
}

pub fn save(h: &Hypergraph, path: &Path) -> Result<()> {
    let text = if path.extension().is_some_and(|e| e == "json") { to_json(h) } else { write_hg(h) };
    std::fs::write(path, text)?;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trip_and_comments() {
        let text = "# a comment\n3 5\n2 3 4\n0 1 2\n";
        let h = read_hg(text).unwrap();
        assert_eq!(write_hg(&h), "3 5\n0 1 2\n2 3 4\n");
        assert_eq!(read_hg(&write_hg(&h)).unwrap(), h);
        assert_eq!(from_json(&to_json(&h)).unwrap(), h);
        assert!(read_hg("3 5\n0 1\n").is_err());
        assert!(read_hg("3 5\n0 1 x\n").is_err());
        assert!(read_hg("").is_err());
    }
}
