//! Plain-text edge-list ingestion and serialization.
//!
//! Format: one edge per line, two whitespace-separated node labels and an
//! optional third weight column. Labels may be arbitrary strings; they are
//! mapped to contiguous 0-based indices in first-appearance order.

use std::collections::HashMap;
use std::fs::File;
use std::io::{BufRead, BufReader, BufWriter, Write};
use std::path::Path;

use serde::{Deserialize, Serialize};

use super::{Edge, WeightedGraph};
use crate::error::{Error, Result};

/// How to obtain edge weights when loading a file.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize, Default)]
#[serde(rename_all = "kebab-case")]
pub enum WeightMode {
    /// Use the third column; it must exist and lie in `(0, 1]`.
    FromFile,
    /// Ignore any weight column and use 1 everywhere.
    #[default]
    Constant,
}

/// What got cleaned up while loading.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize)]
pub struct LoadReport {
    pub duplicate_edges_dropped: usize,
    pub self_loops_dropped: usize,
}

/// Reads an edge list. Duplicate edges are collapsed keeping the first
/// weight; self-loops are dropped. Both are counted in the report.
pub fn load_edge_list(
    path: impl AsRef<Path>,
    mode: WeightMode,
) -> Result<(WeightedGraph, LoadReport)> {
    let file = File::open(path.as_ref())?;
    let reader = BufReader::new(file);

    let mut labels: HashMap<String, usize> = HashMap::new();
    let mut next_id = 0usize;
    let mut intern = |label: &str, labels: &mut HashMap<String, usize>| -> usize {
        *labels.entry(label.to_string()).or_insert_with(|| {
            let id = next_id;
            next_id += 1;
            id
        })
    };

    let mut report = LoadReport::default();
    let mut seen: HashMap<(usize, usize), ()> = HashMap::new();
    let mut edges = Vec::new();

    for (idx, line) in reader.lines().enumerate() {
        let line = line?;
        let line_no = idx + 1;
        let trimmed = line.trim();
        if trimmed.is_empty() {
            continue;
        }
        let cols: Vec<&str> = trimmed.split_whitespace().collect();
        if cols.len() < 2 {
            return Err(Error::EdgeList {
                line: line_no,
                msg: format!("expected at least 2 columns, found {}", cols.len()),
            });
        }
        if cols.len() > 3 {
            return Err(Error::EdgeList {
                line: line_no,
                msg: format!("expected at most 3 columns, found {}", cols.len()),
            });
        }
        let weight = match mode {
            WeightMode::Constant => 1.0,
            WeightMode::FromFile => {
                let raw = cols.get(2).ok_or_else(|| Error::EdgeList {
                    line: line_no,
                    msg: "weight column required in from-file mode".into(),
                })?;
                let w: f64 = raw.parse().map_err(|_| Error::EdgeList {
                    line: line_no,
                    msg: format!("unparseable weight {raw:?}"),
                })?;
                if !(w > 0.0 && w <= 1.0) {
                    return Err(Error::EdgeList {
                        line: line_no,
                        msg: format!("weight {w} outside (0, 1]"),
                    });
                }
                w
            }
        };
        let a = intern(cols[0], &mut labels);
        let b = intern(cols[1], &mut labels);
        if a == b {
            report.self_loops_dropped += 1;
            continue;
        }
        let key = (a.min(b), a.max(b));
        if seen.insert(key, ()).is_some() {
            report.duplicate_edges_dropped += 1;
            continue;
        }
        edges.push(Edge {
            i: key.0,
            j: key.1,
            weight,
        });
    }

    let graph = WeightedGraph::new(next_id.max(1), edges)?;
    Ok((graph, report))
}

/// Writes the graph in the same format, weights with 17 significant digits.
pub fn write_edge_list(g: &WeightedGraph, mut w: impl Write) -> std::io::Result<()> {
    for e in g.edges() {
        writeln!(w, "{} {} {:.16e}", e.i, e.j, e.weight)?;
    }
    Ok(())
}

pub fn save_edge_list(g: &WeightedGraph, path: impl AsRef<Path>) -> Result<()> {
    let file = File::create(path.as_ref())?;
    let mut writer = BufWriter::new(file);
    write_edge_list(g, &mut writer)?;
    writer.flush()?;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    fn load_str(contents: &str, mode: WeightMode) -> Result<(WeightedGraph, LoadReport)> {
        let mut f = tempfile::NamedTempFile::new().unwrap();
        f.write_all(contents.as_bytes()).unwrap();
        load_edge_list(f.path(), mode)
    }

    #[test]
    fn triangle_with_constant_weights() {
        let (g, report) = load_str("0 1\n1 2\n0 2\n", WeightMode::Constant).unwrap();
        assert_eq!(g.n(), 3);
        assert_eq!(g.edge_count(), 3);
        assert_eq!(g.kappa(), 2.0);
        assert_eq!(report, LoadReport::default());
    }

    #[test]
    fn duplicates_collapse_keeping_first_weight() {
        let (g, report) = load_str("0 1 0.75\n0 1 0.25\n", WeightMode::FromFile).unwrap();
        assert_eq!(g.edge_count(), 1);
        assert_eq!(g.edges()[0].weight, 0.75);
        assert_eq!(report.duplicate_edges_dropped, 1);
        // Reversed orientation is the same undirected edge.
        let (g, report) = load_str("0 1\n1 0\n", WeightMode::Constant).unwrap();
        assert_eq!(g.edge_count(), 1);
        assert_eq!(report.duplicate_edges_dropped, 1);
    }

    #[test]
    fn labels_map_in_first_appearance_order() {
        let (g, _) = load_str("a b 0.5\nb c 0.25\n", WeightMode::FromFile).unwrap();
        assert_eq!(g.n(), 3);
        assert_eq!(g.edge_count(), 2);
        assert!((g.kappa() - 4.0 / 3.0).abs() < 1e-15);
        // a=0, b=1, c=2
        assert_eq!(g.edges()[0], Edge { i: 0, j: 1, weight: 0.5 });
        assert_eq!(g.edges()[1], Edge { i: 1, j: 2, weight: 0.25 });
    }

    #[test]
    fn self_loops_dropped_with_count() {
        let (g, report) = load_str("0 0\n0 1\n", WeightMode::Constant).unwrap();
        assert_eq!(g.edge_count(), 1);
        assert_eq!(report.self_loops_dropped, 1);
    }

    #[test]
    fn malformed_lines_error() {
        assert!(load_str("0\n", WeightMode::Constant).is_err());
        assert!(load_str("0 1 0.5 extra\n", WeightMode::Constant).is_err());
        assert!(load_str("0 1 1.5\n", WeightMode::FromFile).is_err());
        assert!(load_str("0 1 0\n", WeightMode::FromFile).is_err());
        assert!(load_str("0 1\n", WeightMode::FromFile).is_err());
        assert!(load_str("0 1 abc\n", WeightMode::FromFile).is_err());
    }

    #[test]
    fn unreadable_file_errors() {
        assert!(load_edge_list("/definitely/not/here.txt", WeightMode::Constant).is_err());
    }

    #[test]
    fn round_trip_preserves_graph() {
        let (g, _) = load_str("a b 0.5\nb c 0.25\nc d 0.125\n", WeightMode::FromFile).unwrap();
        let mut buf = Vec::new();
        write_edge_list(&g, &mut buf).unwrap();
        let text = String::from_utf8(buf).unwrap();
        let (h, _) = load_str(&text, WeightMode::FromFile).unwrap();
        assert_eq!(g, h);
    }
}
