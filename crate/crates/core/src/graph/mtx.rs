//! Matrix Market coordinate reader.
//!
//! Rows become nets and columns become vertices. Values are ignored, explicit
//! zeros count as structural nonzeros, and repeated entries collapse onto
//! their first occurrence.

use std::fs::File;
use std::io::{self, BufRead, BufReader, Write};
use std::path::Path;

use serde::Serialize;
use thiserror::Error;

use super::{BipartiteGraph, Id, UnipartiteGraph};

#[derive(Debug, Error)]
pub enum MtxError {
    #[error("i/o error: {0}")]
    Io(#[from] io::Error),
    #[error("line {line}: malformed header: {msg}")]
    Header { line: usize, msg: String },
    #[error("unsupported Matrix Market format: {0}")]
    Unsupported(String),
    #[error("line {line}: malformed entry: {msg}")]
    Malformed { line: usize, msg: String },
    #[error("line {line}: index out of range: ({row}, {col}) not within {rows}x{cols}")]
    IndexOutOfRange { line: usize, row: i64, col: i64, rows: usize, cols: usize },
    #[error("line {line}: entry count mismatch: header declares {expected}, found {found}")]
    EntryCount { line: usize, expected: usize, found: usize },
}

impl MtxError {
    /// 1-based line number the error refers to, if any.
    pub fn line(&self) -> Option<usize> {
        match self {
            MtxError::Header { line, .. }
            | MtxError::Malformed { line, .. }
            | MtxError::IndexOutOfRange { line, .. }
            | MtxError::EntryCount { line, .. } => Some(*line),
            _ => None,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MtxMeta {
    pub rows: usize,
    pub cols: usize,
    pub field: String,
    pub symmetry: String,
    /// Entries declared on the size line.
    pub declared_entries: usize,
    /// Stored nonzeros after mirroring and deduplication.
    pub stored_entries: usize,
    /// Entries dropped because the same position was already present.
    pub duplicates_collapsed: usize,
}

#[derive(Debug, Clone)]
pub struct MatrixMarket {
    pub graph: BipartiteGraph,
    pub meta: MtxMeta,
}

pub fn read_matrix_market_file(path: impl AsRef<Path>) -> Result<MatrixMarket, MtxError> {
    let file = File::open(path)?;
    load_matrix_market(BufReader::new(file))
}

pub fn load_matrix_market<R: BufRead>(reader: R) -> Result<MatrixMarket, MtxError> {
    let mut lines = reader.lines().enumerate().map(|(i, l)| (i + 1, l));

    let (line_no, header) = match lines.next() {
        Some((n, l)) => (n, l?),
        None => return Err(MtxError::Header { line: 1, msg: "empty input".into() }),
    };
    let tokens: Vec<String> = header.split_whitespace().map(str::to_ascii_lowercase).collect();
    if tokens.len() != 5 || tokens[0] != "%%matrixmarket" {
        return Err(MtxError::Header { line: line_no, msg: "expected '%%MatrixMarket matrix <format> <field> <symmetry>'".into() });
    }
    if tokens[1] != "matrix" {
        return Err(MtxError::Unsupported(format!("object '{}'", tokens[1])));
    }
    match tokens[2].as_str() {
        "coordinate" => {}
        "array" => return Err(MtxError::Unsupported("dense array format".into())),
        other => return Err(MtxError::Header { line: line_no, msg: format!("unknown format '{other}'") }),
    }
    let values_per_entry = match tokens[3].as_str() {
        "pattern" => 0,
        "real" | "integer" => 1,
        "complex" => 2,
        other => return Err(MtxError::Header { line: line_no, msg: format!("unknown field '{other}'") }),
    };
    let mirrored = match tokens[4].as_str() {
        "general" => false,
        "symmetric" | "skew-symmetric" | "hermitian" => true,
        other => return Err(MtxError::Header { line: line_no, msg: format!("unknown symmetry '{other}'") }),
    };

    // size line
    let mut size = None;
    let mut last_line = line_no;
    for (n, l) in lines.by_ref() {
        let l = l?;
        last_line = n;
        let t = l.trim();
        if t.is_empty() || t.starts_with('%') {
            continue;
        }
        let nums: Result<Vec<usize>, _> = t.split_whitespace().map(str::parse::<usize>).collect();
        match nums {
            Ok(v) if v.len() == 3 => size = Some((v[0], v[1], v[2])),
            _ => return Err(MtxError::Header { line: n, msg: format!("bad size line '{t}'") }),
        }
        break;
    }
    let (rows, cols, declared) =
        size.ok_or(MtxError::Header { line: last_line, msg: "missing size line".into() })?;
    if rows > Id::MAX as usize || cols > Id::MAX as usize {
        return Err(MtxError::Unsupported(format!("dimensions {rows}x{cols} exceed 32-bit ids")));
    }

    let mut entries: Vec<(Id, Id)> = Vec::with_capacity(if mirrored { 2 * declared } else { declared });
    let mut found = 0usize;
    for (n, l) in lines {
        let l = l?;
        last_line = n;
        let t = l.trim();
        if t.is_empty() || t.starts_with('%') {
            continue;
        }
        found += 1;
        if found > declared {
            return Err(MtxError::EntryCount { line: n, expected: declared, found });
        }
        let mut it = t.split_whitespace();
        let mut index = |what: &str| -> Result<i64, MtxError> {
            it.next()
                .ok_or_else(|| MtxError::Malformed { line: n, msg: format!("missing {what} index") })?
                .parse::<i64>()
                .map_err(|e| MtxError::Malformed { line: n, msg: format!("{what} index: {e}") })
        };
        let i = index("row")?;
        let j = index("column")?;
        let extra = it.count();
        if extra < values_per_entry {
            return Err(MtxError::Malformed { line: n, msg: format!("expected {values_per_entry} value field(s), found {extra}") });
        }
        if i < 1 || j < 1 || i as usize > rows || j as usize > cols {
            return Err(MtxError::IndexOutOfRange { line: n, row: i, col: j, rows, cols });
        }
        let (r, c) = ((i - 1) as Id, (j - 1) as Id);
        entries.push((r, c));
        if mirrored && r != c {
            entries.push((c, r));
        }
    }
    if found != declared {
        return Err(MtxError::EntryCount { line: last_line, expected: declared, found });
    }
    if mirrored && rows != cols {
        return Err(MtxError::Header { line: line_no, msg: format!("symmetric matrix must be square, got {rows}x{cols}") });
    }

    // bucket by row preserving file order, then drop repeated columns per row
    let mut row_offsets = vec![0usize; rows + 1];
    for &(r, _) in &entries {
        row_offsets[r as usize + 1] += 1;
    }
    for r in 0..rows {
        row_offsets[r + 1] += row_offsets[r];
    }
    let mut cursor = row_offsets.clone();
    let mut bucketed = vec![0 as Id; entries.len()];
    for &(r, c) in &entries {
        bucketed[cursor[r as usize]] = c;
        cursor[r as usize] += 1;
    }
    let mut stamp = vec![usize::MAX; cols];
    let mut net_offsets = Vec::with_capacity(rows + 1);
    net_offsets.push(0);
    let mut members = Vec::with_capacity(entries.len());
    for r in 0..rows {
        for &c in &bucketed[row_offsets[r]..row_offsets[r + 1]] {
            if stamp[c as usize] != r {
                stamp[c as usize] = r;
                members.push(c);
            }
        }
        net_offsets.push(members.len());
    }
    let stored = members.len();
    let graph = BipartiteGraph::from_net_csr(cols, net_offsets, members);
    Ok(MatrixMarket {
        graph,
        meta: MtxMeta {
            rows,
            cols,
            field: tokens[3].clone(),
            symmetry: tokens[4].clone(),
            declared_entries: declared,
            stored_entries: stored,
            duplicates_collapsed: entries.len() - stored,
        },
    })
}

/// Writes `graph` as a general pattern matrix: one row per net, one column per vertex.
pub fn write_matrix_market_bipartite<W: Write>(graph: &BipartiteGraph, mut out: W) -> io::Result<()> {
    writeln!(out, "%%MatrixMarket matrix coordinate pattern general")?;
    writeln!(out, "{} {} {}", graph.num_nets(), graph.num_vertices(), graph.num_edges())?;
    for (net, u) in graph.edges_by_net() {
        writeln!(out, "{} {}", net + 1, u + 1)?;
    }
    out.flush()
}

/// Writes `graph` as a symmetric pattern matrix holding the strictly lower triangle.
pub fn write_matrix_market_unipartite<W: Write>(graph: &UnipartiteGraph, mut out: W) -> io::Result<()> {
    writeln!(out, "%%MatrixMarket matrix coordinate pattern symmetric")?;
    let n = graph.num_vertices();
    writeln!(out, "{n} {n} {}", graph.num_edges())?;
    for v in 0..n {
        for &u in graph.nbor(v) {
            if (u as usize) < v {
                writeln!(out, "{} {}", v + 1, u + 1)?;
            }
        }
    }
    out.flush()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn load(s: &str) -> Result<MatrixMarket, MtxError> {
        load_matrix_market(s.as_bytes())
    }

    #[test]
    fn rows_become_nets() {
        let m = load("%%MatrixMarket matrix coordinate real general\n% c\n2 2 3\n1 1 1.0\n2 1 0.0\n2 2 -3\n").unwrap();
        let g = &m.graph;
        assert_eq!((g.num_nets(), g.num_vertices()), (2, 2));
        assert_eq!(g.vtxs(0), &[0]);
        assert_eq!(g.vtxs(1), &[0, 1]);
        assert_eq!(m.meta.duplicates_collapsed, 0);
    }

    #[test]
    fn symmetric_header_mirrors_entries() {
        let m = load("%%MatrixMarket matrix coordinate pattern symmetric\n3 3 3\n2 1\n3 2\n1 1\n").unwrap();
        let g = &m.graph;
        g.validate().unwrap();
        assert_eq!(g.num_edges(), 5);
        assert_eq!(g.vtxs(0), &[1, 0]);
        assert_eq!(g.vtxs(1), &[0, 2]);
        assert_eq!(g.vtxs(2), &[1]);
    }

    #[test]
    fn duplicates_collapse_and_are_counted() {
        let m = load("%%MatrixMarket matrix coordinate integer general\n2 3 4\n1 3 1\n1 1 1\n1 3 7\n2 2 1\n").unwrap();
        assert_eq!(m.graph.vtxs(0), &[2, 0]);
        assert_eq!(m.meta.duplicates_collapsed, 1);
        assert_eq!(m.meta.stored_entries, 3);
    }

    #[test]
    fn zero_index_rejected_with_line() {
        let e = load("%%MatrixMarket matrix coordinate pattern general\n2 2 1\n0 1\n").unwrap_err();
        assert_eq!(e.line(), Some(3));
        assert!(e.to_string().contains("index out of range"), "{e}");
    }

    #[test]
    fn entry_count_mismatch() {
        let e = load("%%MatrixMarket matrix coordinate pattern general\n2 2 3\n1 1\n2 2\n").unwrap_err();
        assert!(matches!(e, MtxError::EntryCount { expected: 3, found: 2, .. }));
        let e = load("%%MatrixMarket matrix coordinate pattern general\n2 2 1\n1 1\n2 2\n").unwrap_err();
        assert!(matches!(e, MtxError::EntryCount { line: 4, .. }));
    }

    #[test]
    fn writers_round_trip() {
        let g = crate::graph::generate_random_bipartite(40, 25, 4, 3).unwrap();
        let mut buf = Vec::new();
        write_matrix_market_bipartite(&g, &mut buf).unwrap();
        assert_eq!(load_matrix_market(buf.as_slice()).unwrap().graph, g);

        let u = crate::graph::generate_random_unipartite(30, 4, 3).unwrap();
        let mut buf = Vec::new();
        write_matrix_market_unipartite(&u, &mut buf).unwrap();
        let back = load_matrix_market(buf.as_slice()).unwrap().graph.to_unipartite().unwrap();
        for v in 0..30 {
            let mut a = u.nbor(v).to_vec();
            let mut b = back.nbor(v).to_vec();
            a.sort_unstable();
            b.sort_unstable();
            assert_eq!(a, b);
        }
    }

    #[test]
    fn array_format_unsupported() {
        let e = load("%%MatrixMarket matrix array real general\n2 2\n1\n2\n3\n4\n").unwrap_err();
        assert!(matches!(e, MtxError::Unsupported(_)));
    }

    #[test]
    fn malformed_header_and_values() {
        assert!(matches!(load("%%MatrixMarket matrix coordinate\n"), Err(MtxError::Header { line: 1, .. })));
        assert!(matches!(load("hello\n"), Err(MtxError::Header { .. })));
        let e = load("%%MatrixMarket matrix coordinate complex general\n1 1 1\n1 1 2.0\n").unwrap_err();
        assert!(matches!(e, MtxError::Malformed { line: 3, .. }));
    }
}
