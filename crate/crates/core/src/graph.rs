//! Finite directed graphs with a fixed edge enumeration.
//!
//! Vertices are 1..=n. Loops are allowed, duplicate edges are not. The edge
//! order is part of the data: edge j (1-based) is the j-th edge of the input
//! (file order for parsed graphs, the documented generation order for the
//! built-in families). Quotient-algebra relations are indexed by that order,
//! so it is preserved exactly.
//!
//! Text format: first non-comment line is the vertex count, every following
//! line is `s t` for an edge from s to t. Blank lines and lines starting with
//! `#` are ignored.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

/// A finite directed graph with ordered edges.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    n: u16,
    edges: Vec<(u16, u16)>,
    adjacency: Vec<bool>, // row-major n×n
}

impl Graph {
    pub fn new(n: u16, edges: Vec<(u16, u16)>) -> Result<Graph, GraphError> {
        let mut adjacency = alloc::vec![false; n as usize * n as usize];
        for &(s, t) in &edges {
            if s == 0 || s > n || t == 0 || t > n {
                return Err(GraphError::VertexOutOfRange { vertex: if s == 0 || s > n { s } else { t }, n });
            }
            let idx = (s as usize - 1) * n as usize + (t as usize - 1);
            if adjacency[idx] {
                return Err(GraphError::DuplicateEdge { s, t });
            }
            adjacency[idx] = true;
        }
        Ok(Graph { n, edges, adjacency })
    }

    /// Vertex count.
    pub fn n(&self) -> u16 {
        self.n
    }

    /// Edge count.
    pub fn m(&self) -> usize {
        self.edges.len()
    }

    /// Edges in canonical order.
    pub fn edges(&self) -> &[(u16, u16)] {
        &self.edges
    }

    /// The j-th edge, 1-based.
    pub fn edge(&self, j: usize) -> (u16, u16) {
        self.edges[j - 1]
    }

    pub fn has_edge(&self, s: u16, t: u16) -> bool {
        s >= 1 && s <= self.n && t >= 1 && t <= self.n
            && self.adjacency[(s as usize - 1) * self.n as usize + (t as usize - 1)]
    }

    /// Ordered pairs (i,k) with no edge i→k, in row-major order. Includes
    /// diagonal pairs when the vertex has no loop.
    pub fn non_edges(&self) -> Vec<(u16, u16)> {
        let mut v = Vec::new();
        for i in 1..=self.n {
            for k in 1..=self.n {
                if !self.has_edge(i, k) {
                    v.push((i, k));
                }
            }
        }
        v
    }

    pub fn out_degree(&self, v: u16) -> usize {
        (1..=self.n).filter(|&t| self.has_edge(v, t)).count()
    }

    pub fn in_degree(&self, v: u16) -> usize {
        (1..=self.n).filter(|&s| self.has_edge(s, v)).count()
    }

    pub fn has_loop(&self, v: u16) -> bool {
        self.has_edge(v, v)
    }

    /// Canonical text form; parses back to an equal graph.
    pub fn to_text(&self) -> String {
        let mut s = format!("{}\n", self.n);
        for &(a, b) in &self.edges {
            s.push_str(&format!("{} {}\n", a, b));
        }
        s
    }

    /// A stable identity string: vertex count plus the sorted edge set.
    /// Graphs that differ only in edge order get the same key.
    pub fn canonical_key(&self) -> String {
        let mut sorted = self.edges.clone();
        sorted.sort_unstable();
        let mut s = format!("n={};", self.n);
        for (i, &(a, b)) in sorted.iter().enumerate() {
            if i > 0 {
                s.push(',');
            }
            s.push_str(&format!("{}>{}", a, b));
        }
        s
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GraphError {
    Empty,
    BadVertexCount { line: usize },
    BadEdgeLine { line: usize },
    VertexOutOfRange { vertex: u16, n: u16 },
    VertexOutOfRangeAt { line: usize, vertex: u32, n: u16 },
    DuplicateEdge { s: u16, t: u16 },
    DuplicateEdgeAt { line: usize, s: u16, t: u16 },
    BadFamilyParameter { family: GraphFamily, n: u16 },
}

impl fmt::Display for GraphError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GraphError::Empty => write!(f, "empty graph input"),
            GraphError::BadVertexCount { line } => {
                write!(f, "line {}: expected the vertex count", line)
            }
            GraphError::BadEdgeLine { line } => {
                write!(f, "line {}: expected an edge `s t`", line)
            }
            GraphError::VertexOutOfRange { vertex, n } => {
                write!(f, "vertex {} outside 1..={}", vertex, n)
            }
            GraphError::VertexOutOfRangeAt { line, vertex, n } => {
                write!(f, "line {}: vertex {} outside 1..={}", line, vertex, n)
            }
            GraphError::DuplicateEdge { s, t } => write!(f, "duplicate edge ({}, {})", s, t),
            GraphError::DuplicateEdgeAt { line, s, t } => {
                write!(f, "line {}: duplicate edge ({}, {})", line, s, t)
            }
            GraphError::BadFamilyParameter { family, n } => {
                write!(f, "family {:?} not defined for n = {}", family, n)
            }
        }
    }
}

impl core::error::Error for GraphError {}

/// Parses the text format. Errors carry 1-based line numbers.
pub fn parse_graph(text: &str) -> Result<Graph, GraphError> {
    let mut n: Option<u16> = None;
    let mut edges: Vec<(u16, u16)> = Vec::new();
    let mut edge_lines: Vec<usize> = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        match n {
            None => {
                n = Some(line.parse().map_err(|_| GraphError::BadVertexCount { line: line_no })?);
            }
            Some(count) => {
                let mut it = line.split_whitespace();
                let s: u32 = it
                    .next()
                    .and_then(|t| t.parse().ok())
                    .ok_or(GraphError::BadEdgeLine { line: line_no })?;
                let t: u32 = it
                    .next()
                    .and_then(|t| t.parse().ok())
                    .ok_or(GraphError::BadEdgeLine { line: line_no })?;
                if it.next().is_some() {
                    return Err(GraphError::BadEdgeLine { line: line_no });
                }
                for v in [s, t] {
                    if v == 0 || v > count as u32 {
                        return Err(GraphError::VertexOutOfRangeAt { line: line_no, vertex: v, n: count });
                    }
                }
                edges.push((s as u16, t as u16));
                edge_lines.push(line_no);
            }
        }
    }
    let n = n.ok_or(GraphError::Empty)?;
    Graph::new(n, edges.clone()).map_err(|e| match e {
        GraphError::DuplicateEdge { s, t } => {
            // second occurrence determines the reported line
            let mut seen = alloc::collections::BTreeSet::new();
            let mut line = 0;
            for (k, &e2) in edges.iter().enumerate() {
                if !seen.insert(e2) && e2 == (s, t) {
                    line = edge_lines[k];
                    break;
                }
            }
            GraphError::DuplicateEdgeAt { line, s, t }
        }
        other => other,
    })
}

/// Canonical serialization, identical to [`Graph::to_text`].
pub fn serialize_graph(g: &Graph) -> String {
    g.to_text()
}

/// The built-in graph families.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GraphFamily {
    /// No edges.
    Empty,
    /// A loop at every vertex.
    Loops,
    /// Every ordered pair, loops included.
    Complete,
    /// Every ordered pair except loops.
    CompleteNoLoops,
    /// The directed n-cycle 1→2→...→n→1.
    Cycle,
    /// Four vertices carrying two opposite 2-cycles: 1⇄2 and 3⇄4. Its
    /// automorphism group is dihedral of order 8; its quantum symmetry
    /// algebra is the standard noncommutativity witness. `n` is ignored.
    D4,
}

/// Constructs a built-in graph. Edge orders are documented per family and are
/// part of the contract.
pub fn builtin_graph(family: GraphFamily, n: u16) -> Result<Graph, GraphError> {
    if n == 0 && !matches!(family, GraphFamily::D4) {
        return Err(GraphError::BadFamilyParameter { family, n });
    }
    let g = match family {
        GraphFamily::Empty => Graph::new(n, Vec::new())?,
        GraphFamily::Loops => Graph::new(n, (1..=n).map(|i| (i, i)).collect())?,
        GraphFamily::Complete => {
            let mut e = Vec::with_capacity(n as usize * n as usize);
            for i in 1..=n {
                for j in 1..=n {
                    e.push((i, j));
                }
            }
            Graph::new(n, e)?
        }
        GraphFamily::CompleteNoLoops => {
            let mut e = Vec::new();
            for i in 1..=n {
                for j in 1..=n {
                    if i != j {
                        e.push((i, j));
                    }
                }
            }
            Graph::new(n, e)?
        }
        GraphFamily::Cycle => {
            let mut e: Vec<(u16, u16)> = (1..n).map(|i| (i, i + 1)).collect();
            e.push((n, 1));
            if n == 1 {
                e = alloc::vec![(1, 1)];
            }
            Graph::new(n, e)?
        }
        GraphFamily::D4 => Graph::new(4, alloc::vec![(1, 2), (2, 1), (3, 4), (4, 3)])?,
    };
    Ok(g)
}
