//! File formats: the line-oriented poset text format, its JSON mirror, DOT
//! export of Hasse diagrams, embedding files, coloring files, and run
//! manifests.
//!
//! Text format, one relation per line:
//!
//! ```text
//! # comment
//! 0 < 1        # 1 covers 0
//! label 0 bottom
//! ```
//!
//! The number of points is one more than the largest index mentioned.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use posetdist_core::colorings::Embedding;
use posetdist_core::poset::{Poset, PosetError};
use posetdist_core::symmetry::Coloring;

#[derive(Debug)]
pub enum IoError {
    /// Malformed input with a 1-based line number.
    Parse { line: usize, message: String },
    /// Structural problem (cycle, bad index) reported by the poset builder.
    Poset(PosetError),
    Json(serde_json::Error),
}

impl std::fmt::Display for IoError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            IoError::Parse { line, message } => write!(f, "line {line}: {message}"),
            IoError::Poset(e) => write!(f, "{e}"),
            IoError::Json(e) => write!(f, "invalid JSON: {e}"),
        }
    }
}

impl std::error::Error for IoError {}

impl From<PosetError> for IoError {
    fn from(e: PosetError) -> Self {
        IoError::Poset(e)
    }
}

impl From<serde_json::Error> for IoError {
    fn from(e: serde_json::Error) -> Self {
        IoError::Json(e)
    }
}

// ---------------------------------------------------------------------------
// Text format
// ---------------------------------------------------------------------------

pub fn parse_poset_text(input: &str) -> Result<Poset, IoError> {
    let mut pairs: Vec<(usize, usize)> = Vec::new();
    let mut labels: Vec<(usize, String)> = Vec::new();
    let mut max_index: Option<usize> = None;

    for (lineno, raw) in input.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let mut bump = |i: usize| {
            max_index = Some(max_index.map_or(i, |m| m.max(i)));
        };
        if let Some(rest) = line.strip_prefix("label ") {
            let mut parts = rest.splitn(2, char::is_whitespace);
            let idx = parts
                .next()
                .and_then(|s| s.parse::<usize>().ok())
                .ok_or_else(|| IoError::Parse {
                    line: lineno + 1,
                    message: format!("expected `label <index> <name>`, got `{raw}`"),
                })?;
            let name = parts.next().unwrap_or("").trim();
            if name.is_empty() {
                return Err(IoError::Parse {
                    line: lineno + 1,
                    message: format!("label for point {idx} is empty"),
                });
            }
            bump(idx);
            labels.push((idx, name.to_string()));
        } else if let Some((a, b)) = line.split_once('<') {
            let a: usize = a.trim().parse().map_err(|_| IoError::Parse {
                line: lineno + 1,
                message: format!("expected `<index> < <index>`, got `{raw}`"),
            })?;
            let b: usize = b.trim().parse().map_err(|_| IoError::Parse {
                line: lineno + 1,
                message: format!("expected `<index> < <index>`, got `{raw}`"),
            })?;
            bump(a);
            bump(b);
            pairs.push((a, b));
        } else {
            return Err(IoError::Parse {
                line: lineno + 1,
                message: format!("unrecognized line `{raw}`"),
            });
        }
    }

    let n = max_index.map_or(0, |m| m + 1);
    let mut poset = Poset::from_cover_pairs(n, &pairs)?;
    for (i, name) in labels {
        poset.set_label(i, name);
    }
    Ok(poset)
}

pub fn poset_to_text(p: &Poset) -> String {
    let mut out = String::new();
    for &(a, b) in p.covers() {
        let _ = writeln!(out, "{a} < {b}");
    }
    for (i, label) in p.labels().iter().enumerate() {
        if let Some(l) = label {
            let _ = writeln!(out, "label {i} {l}");
        }
    }
    out
}

// ---------------------------------------------------------------------------
// JSON mirror
// ---------------------------------------------------------------------------

#[derive(Serialize, Deserialize)]
struct PosetJson {
    n: usize,
    covers: Vec<(usize, usize)>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    labels: Option<Vec<Option<String>>>,
}

pub fn parse_poset_json(input: &str) -> Result<Poset, IoError> {
    let data: PosetJson = serde_json::from_str(input)?;
    let mut poset = Poset::from_cover_pairs(data.n, &data.covers)?;
    if let Some(labels) = data.labels {
        for (i, label) in labels.into_iter().enumerate() {
            if let Some(l) = label {
                if i >= poset.n() {
                    return Err(IoError::Poset(PosetError::BadIndex {
                        index: i,
                        n: poset.n(),
                    }));
                }
                poset.set_label(i, l);
            }
        }
    }
    Ok(poset)
}

pub fn poset_to_json(p: &Poset) -> String {
    let labels = if p.labels().iter().any(|l| l.is_some()) {
        Some(p.labels().to_vec())
    } else {
        None
    };
    let data = PosetJson {
        n: p.n(),
        covers: p.covers().to_vec(),
        labels,
    };
    serde_json::to_string_pretty(&data).expect("poset serializes")
}

/// Parses a poset file by extension: `.json` for the JSON mirror, anything
/// else as the text format.
pub fn parse_poset_file(path: &std::path::Path, content: &str) -> Result<Poset, IoError> {
    if path.extension().and_then(|e| e.to_str()) == Some("json") {
        parse_poset_json(content)
    } else {
        parse_poset_text(content)
    }
}

// ---------------------------------------------------------------------------
// Colorings
// ---------------------------------------------------------------------------

/// Colorings serialize as a bare JSON array of color ids.
pub fn coloring_to_json(c: &Coloring) -> String {
    serde_json::to_string(c.colors()).expect("coloring serializes")
}

pub fn parse_coloring_json(input: &str) -> Result<Coloring, IoError> {
    let colors: Vec<usize> = serde_json::from_str(input)?;
    Ok(Coloring::compact(&colors))
}

/// `point color` lines, labels appended as comments when present.
pub fn coloring_to_text(p: &Poset, c: &Coloring) -> String {
    let mut out = String::new();
    for x in 0..p.n() {
        match p.label(x) {
            Some(l) => {
                let _ = writeln!(out, "{x} {} # {l}", c.color(x));
            }
            None => {
                let _ = writeln!(out, "{x} {}", c.color(x));
            }
        }
    }
    out
}

// ---------------------------------------------------------------------------
// DOT export
// ---------------------------------------------------------------------------

const DOT_PALETTE: [&str; 12] = [
    "lightgreen",
    "lightcoral",
    "lightskyblue",
    "gold",
    "plum",
    "sandybrown",
    "palegreen",
    "lightpink",
    "khaki",
    "lightseagreen",
    "thistle",
    "wheat",
];

/// Hasse diagram as a layered DOT digraph: edges point upward, points of a
/// rank share a layer.
pub fn poset_to_dot(p: &Poset, coloring: Option<&Coloring>) -> String {
    let mut out = String::from("digraph hasse {\n  rankdir=BT;\n  node [shape=ellipse];\n");
    for x in 0..p.n() {
        let mut attrs = format!("label=\"{}\"", p.display_label(x));
        if let Some(c) = coloring {
            let color = DOT_PALETTE[c.color(x) % DOT_PALETTE.len()];
            let _ = write!(
                attrs,
                ", style=filled, fillcolor=\"{color}\", tooltip=\"color {}\"",
                c.color(x)
            );
        }
        let _ = writeln!(out, "  n{x} [{attrs}];");
    }
    for level in p.rank_levels() {
        let _ = write!(out, "  {{ rank=same;");
        for x in level {
            let _ = write!(out, " n{x};");
        }
        let _ = writeln!(out, " }}");
    }
    for &(a, b) in p.covers() {
        let _ = writeln!(out, "  n{a} -> n{b} [arrowhead=none];");
    }
    out.push_str("}\n");
    out
}

// ---------------------------------------------------------------------------
// Embeddings
// ---------------------------------------------------------------------------

/// One line per rank: `rank <k>: <i> <j> ...`, points left to right.
pub fn parse_embedding(input: &str) -> Result<Embedding, IoError> {
    let mut rows: Vec<(usize, Vec<usize>)> = Vec::new();
    for (lineno, raw) in input.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let err = |message: String| IoError::Parse {
            line: lineno + 1,
            message,
        };
        let rest = line
            .strip_prefix("rank")
            .ok_or_else(|| err(format!("expected `rank <k>: ...`, got `{raw}`")))?;
        let (k, points) = rest
            .split_once(':')
            .ok_or_else(|| err(format!("missing `:` in `{raw}`")))?;
        let k: usize = k
            .trim()
            .parse()
            .map_err(|_| err(format!("bad rank number in `{raw}`")))?;
        let points: Vec<usize> = points
            .split_whitespace()
            .map(|s| s.parse::<usize>())
            .collect::<Result<_, _>>()
            .map_err(|_| err(format!("bad point index in `{raw}`")))?;
        rows.push((k, points));
    }
    rows.sort_by_key(|&(k, _)| k);
    for (expect, &(k, _)) in rows.iter().enumerate() {
        if k != expect {
            return Err(IoError::Parse {
                line: 0,
                message: format!("embedding ranks must be 0..{}, found rank {k}", rows.len()),
            });
        }
    }
    Ok(Embedding {
        rows: rows.into_iter().map(|(_, r)| r).collect(),
    })
}

pub fn embedding_to_text(e: &Embedding) -> String {
    let mut out = String::new();
    for (k, row) in e.rows.iter().enumerate() {
        let _ = write!(out, "rank {k}:");
        for x in row {
            let _ = write!(out, " {x}");
        }
        out.push('\n');
    }
    out
}

// ---------------------------------------------------------------------------
// Run manifests
// ---------------------------------------------------------------------------

/// Record of a CLI run: replaying the command on the same input reproduces
/// the outputs byte for byte (every operation is deterministic and seedless).
#[derive(Serialize, Deserialize, Debug, PartialEq, Eq)]
pub struct RunManifest {
    pub command: String,
    pub input_digest: String,
    pub outputs: Vec<String>,
    pub seedless: bool,
}

pub fn sha256_hex(data: &[u8]) -> String {
    hex::encode(Sha256::digest(data))
}

impl RunManifest {
    pub fn new(command: String, input: &[u8], outputs: Vec<String>) -> Self {
        RunManifest {
            command,
            input_digest: sha256_hex(input),
            outputs,
            seedless: true,
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("manifest serializes")
    }
}
