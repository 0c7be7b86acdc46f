//! Undirected multigraphs, edge weights, orientations and cut data.
//!
//! Vertices are 0-based `usize` internally; the file format and all user
//! facing output are 1-based. Edges keep their input order and multiple
//! edges between the same endpoints are allowed; loops are not.
//!
//! Every edge carries a fixed sign convention: the smaller endpoint sees
//! the edge with sign +1, the larger with sign -1. An orientation is a
//! bitmask over edge indices; a set bit orients the edge from its larger
//! endpoint to its smaller endpoint (the head is the smaller endpoint),
//! a clear bit the opposite way.

use std::fmt;

use num_traits::Zero;

use crate::scalar::{parse_rational, Rational, Scalar};

/// Hard bound on edge count: orientation masks are `u32` and tilde
/// vectors are dense arrays of length 2^m.
pub const MAX_EDGES: usize = 24;

/// Default cap for the brute-force forest/tree enumeration oracles.
pub const FOREST_ORACLE_CAP: usize = 20;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Edge {
    pub u: usize,
    pub v: usize,
}

impl Edge {
    pub fn lo(&self) -> usize {
        self.u.min(self.v)
    }

    pub fn hi(&self) -> usize {
        self.u.max(self.v)
    }

    /// Sign of this edge at `vertex`: +1 at the smaller endpoint, -1 at
    /// the larger, 0 if not incident.
    pub fn sign_at(&self, vertex: usize) -> i8 {
        if vertex == self.lo() {
            1
        } else if vertex == self.hi() {
            -1
        } else {
            0
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    edges: Vec<Edge>,
}

/// Weights q_e per edge, in edge order. Exact rationals.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightAssignment {
    pub q: Vec<Rational>,
}

impl WeightAssignment {
    pub fn unit(m: usize) -> Self {
        WeightAssignment {
            q: vec![Rational::from_integer(1.into()); m],
        }
    }

    /// All edges share one value (the Hecke regime).
    pub fn constant(m: usize, value: Rational) -> Self {
        WeightAssignment {
            q: vec![value; m],
        }
    }

    pub fn len(&self) -> usize {
        self.q.len()
    }

    pub fn is_empty(&self) -> bool {
        self.q.is_empty()
    }

    pub fn has_zero(&self) -> bool {
        self.q.iter().any(Zero::is_zero)
    }

    /// Converts every weight into the scalar field.
    pub fn to_scalars<S: Scalar>(&self, cfg: &S::Config) -> Result<Vec<S>, crate::Error> {
        self.q
            .iter()
            .map(|w| S::from_rational(w, cfg).map_err(crate::Error::Scalar))
            .collect()
    }
}

/// An orientation of all edges, encoded as an edge-index bitmask.
/// Bit e set: edge e points from its larger endpoint to its smaller one.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Orientation(pub u32);

impl Orientation {
    pub fn contains(&self, edge: usize) -> bool {
        self.0 >> edge & 1 == 1
    }

    /// Head vertex of `edge` under this orientation.
    pub fn head(&self, edge: &Edge, index: usize) -> usize {
        if self.contains(index) {
            edge.lo()
        } else {
            edge.hi()
        }
    }

    /// Reverses every edge: the complement mask.
    pub fn reversed(&self, m: usize) -> Orientation {
        Orientation(!self.0 & ((1u32 << m) - 1))
    }
}

/// Crossing-edge counts of a vertex subset I.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CutData {
    /// Number of edges with one endpoint in I and one outside.
    pub total: usize,
    /// Crossing edges whose larger endpoint lies in I.
    pub larger_inside: usize,
    /// Crossing edges whose smaller endpoint lies in I.
    pub smaller_inside: usize,
}

/// Parse error for the graph file format, with 1-based line numbers.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GraphFileError {
    pub line: usize,
    pub kind: GraphFileErrorKind,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GraphFileErrorKind {
    MissingVertexCount,
    InvalidVertexCount(String),
    MalformedEdge(String),
    LoopEdge(usize),
    VertexOutOfRange { vertex: usize, n: usize },
    InvalidWeight(String),
}

impl fmt::Display for GraphFileError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        use GraphFileErrorKind::*;
        match &self.kind {
            MissingVertexCount => write!(f, "line {}: missing vertex count", self.line),
            InvalidVertexCount(s) => {
                write!(f, "line {}: invalid vertex count {s:?}", self.line)
            }
            MalformedEdge(s) => write!(f, "line {}: malformed edge line {s:?}", self.line),
            LoopEdge(v) => write!(f, "line {}: loop edge at vertex {}", self.line, v + 1),
            VertexOutOfRange { vertex, n } => write!(
                f,
                "line {}: vertex {} out of range 1..={}",
                self.line,
                vertex + 1,
                n
            ),
            InvalidWeight(s) => write!(f, "line {}: invalid weight {s:?}", self.line),
        }
    }
}

impl std::error::Error for GraphFileError {}

impl Graph {
    pub fn new(n: usize, pairs: Vec<(usize, usize)>) -> Graph {
        for &(u, v) in &pairs {
            assert!(u != v, "loop edge at vertex {u}");
            assert!(u < n && v < n, "edge ({u},{v}) out of range for n={n}");
        }
        Graph {
            n,
            edges: pairs.into_iter().map(|(u, v)| Edge { u, v }).collect(),
        }
    }

    /// Complete graph on n vertices, edges in lexicographic order.
    pub fn complete(n: usize) -> Graph {
        let mut pairs = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                pairs.push((u, v));
            }
        }
        Graph::new(n, pairs)
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn edge(&self, index: usize) -> &Edge {
        &self.edges[index]
    }

    pub fn orientation_count(&self) -> usize {
        1usize << self.edges.len()
    }

    /// True if the underlying undirected graph is connected.
    /// Vertex-free and single-vertex graphs count as connected.
    pub fn is_connected(&self) -> bool {
        if self.n <= 1 {
            return true;
        }
        let mut seen = vec![false; self.n];
        let mut stack = vec![0usize];
        seen[0] = true;
        while let Some(u) = stack.pop() {
            for e in &self.edges {
                let w = if e.u == u {
                    e.v
                } else if e.v == u {
                    e.u
                } else {
                    continue;
                };
                if !seen[w] {
                    seen[w] = true;
                    stack.push(w);
                }
            }
        }
        seen.iter().all(|&s| s)
    }

    /// Number of connected components (isolated vertices included).
    pub fn component_count(&self) -> usize {
        let mut dsu = DisjointSets::new(self.n);
        for e in &self.edges {
            dsu.union(e.u, e.v);
        }
        dsu.count
    }

    /// Crossing-edge counts for the vertex subset given as a bitmask.
    pub fn cut_data(&self, subset: u32) -> CutData {
        let inside = |v: usize| subset >> v & 1 == 1;
        let mut data = CutData {
            total: 0,
            larger_inside: 0,
            smaller_inside: 0,
        };
        for e in &self.edges {
            if inside(e.u) == inside(e.v) {
                continue;
            }
            data.total += 1;
            if inside(e.hi()) {
                data.larger_inside += 1;
            } else {
                data.smaller_inside += 1;
            }
        }
        data
    }

    /// The score vector of an orientation: coordinate i sums the weights
    /// of all edges whose head is vertex i.
    pub fn score_vector<S: Scalar>(&self, weights: &[S], o: Orientation) -> Vec<S> {
        assert_eq!(weights.len(), self.edges.len());
        let mut score = vec![S::zero(); self.n];
        for (idx, e) in self.edges.iter().enumerate() {
            score[o.head(e, idx)] += weights[idx].clone();
        }
        score
    }

    /// True if every vertex has a directed path to `root`.
    /// Rejects disconnected graphs: no orientation of one can qualify and
    /// a silent `false` would mask the modeling error.
    pub fn is_root_connected(&self, o: Orientation, root: usize) -> Result<bool, crate::Error> {
        assert!(root < self.n);
        if !self.is_connected() {
            return Err(crate::Error::Disconnected);
        }
        Ok(self.reaches_all_reversed(o, root))
    }

    /// Unchecked core of `is_root_connected`: walks reversed edges from
    /// `root` and tests whether it sweeps every vertex.
    pub(crate) fn reaches_all_reversed(&self, o: Orientation, root: usize) -> bool {
        let mut seen = vec![false; self.n];
        let mut stack = vec![root];
        seen[root] = true;
        let mut count = 1;
        while let Some(u) = stack.pop() {
            for (idx, e) in self.edges.iter().enumerate() {
                let head = o.head(e, idx);
                if head != u {
                    continue;
                }
                let tail = e.u + e.v - head;
                if !seen[tail] {
                    seen[tail] = true;
                    count += 1;
                    stack.push(tail);
                }
            }
        }
        count == self.n
    }

    /// Walks directed edges from `root` and tests whether it sweeps every
    /// vertex.
    pub(crate) fn reaches_all_forward(&self, o: Orientation, root: usize) -> bool {
        let mut seen = vec![false; self.n];
        let mut stack = vec![root];
        seen[root] = true;
        let mut count = 1;
        while let Some(u) = stack.pop() {
            for (idx, e) in self.edges.iter().enumerate() {
                let head = o.head(e, idx);
                let tail = e.u + e.v - head;
                if tail != u {
                    continue;
                }
                if !seen[head] {
                    seen[head] = true;
                    count += 1;
                    stack.push(head);
                }
            }
        }
        count == self.n
    }

    /// True if the orientation is strongly connected.
    pub fn is_strongly_connected(&self, o: Orientation) -> bool {
        if self.n == 0 {
            return true;
        }
        self.reaches_all_forward(o, 0) && self.reaches_all_reversed(o, 0)
    }

    /// True if the edge subset (bitmask) is acyclic.
    pub fn subset_is_forest(&self, subset: u32) -> bool {
        let mut dsu = DisjointSets::new(self.n);
        for (idx, e) in self.edges.iter().enumerate() {
            if subset >> idx & 1 == 1 && !dsu.union(e.u, e.v) {
                return false;
            }
        }
        true
    }

    /// Counts acyclic subsets of the edges selected by `within`.
    pub fn count_forest_subsets_within(&self, within: u32) -> u64 {
        let mut count = 0u64;
        let mut sub = within;
        loop {
            if self.subset_is_forest(sub) {
                count += 1;
            }
            if sub == 0 {
                break;
            }
            sub = (sub - 1) & within;
        }
        count
    }

    /// Brute-force count of all forests (acyclic edge subsets).
    pub fn enumerate_forests(&self, cap: usize) -> Result<u64, crate::Error> {
        let m = self.edges.len();
        if m > cap {
            return Err(crate::Error::CapExceeded {
                what: "forest enumeration edge count",
                needed: m,
                cap,
            });
        }
        Ok(self.count_forest_subsets_within(mask_of_width(m)))
    }

    /// Brute-force count of spanning trees of a connected graph.
    pub fn enumerate_spanning_trees(&self, cap: usize) -> Result<u64, crate::Error> {
        let m = self.edges.len();
        if m > cap {
            return Err(crate::Error::CapExceeded {
                what: "spanning tree enumeration edge count",
                needed: m,
                cap,
            });
        }
        if !self.is_connected() {
            return Err(crate::Error::Disconnected);
        }
        if self.n == 0 {
            return Ok(1);
        }
        let want = (self.n - 1) as u32;
        let mut count = 0u64;
        for sub in 0..=mask_of_width(m) {
            if sub.count_ones() == want && self.subset_is_forest(sub) {
                count += 1;
            }
        }
        Ok(count)
    }
}

/// All-ones mask over `m` edge bits.
pub fn mask_of_width(m: usize) -> u32 {
    assert!(m <= MAX_EDGES);
    if m == 0 {
        0
    } else {
        (1u32 << m) - 1
    }
}

/// Union-find over vertex indices.
struct DisjointSets {
    parent: Vec<usize>,
    count: usize,
}

impl DisjointSets {
    fn new(n: usize) -> Self {
        DisjointSets {
            parent: (0..n).collect(),
            count: n,
        }
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    /// Returns false if both endpoints were already in one component.
    fn union(&mut self, a: usize, b: usize) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        self.parent[ra] = rb;
        self.count -= 1;
        true
    }
}

/// Disjoint edge classes covering all edges, for per-class weights.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EdgePartition {
    pub classes: Vec<u32>,
}

impl EdgePartition {
    /// One class per edge.
    pub fn singletons(m: usize) -> Self {
        EdgePartition {
            classes: (0..m).map(|e| 1u32 << e).collect(),
        }
    }

    /// One class holding every edge.
    pub fn whole(m: usize) -> Self {
        EdgePartition {
            classes: if m == 0 {
                Vec::new()
            } else {
                vec![mask_of_width(m)]
            },
        }
    }

    /// All edges in one class except the given distinguished edge.
    pub fn one_off(m: usize, distinguished: usize) -> Self {
        assert!(distinguished < m);
        let rest = mask_of_width(m) & !(1u32 << distinguished);
        let mut classes = Vec::new();
        if rest != 0 {
            classes.push(rest);
        }
        classes.push(1u32 << distinguished);
        EdgePartition { classes }
    }

    pub fn class_count(&self) -> usize {
        self.classes.len()
    }

    /// Checks the classes are nonempty, disjoint and cover all `m` edges.
    pub fn validate(&self, m: usize) -> Result<(), crate::Error> {
        let full = mask_of_width(m);
        let mut seen = 0u32;
        for &class in &self.classes {
            if class == 0 {
                return Err(crate::Error::BadPartition("empty class".into()));
            }
            if class & !full != 0 {
                return Err(crate::Error::BadPartition(
                    "class mentions an edge index out of range".into(),
                ));
            }
            if class & seen != 0 {
                return Err(crate::Error::BadPartition(
                    "classes are not disjoint".into(),
                ));
            }
            seen |= class;
        }
        if seen != full {
            return Err(crate::Error::BadPartition(
                "classes do not cover every edge".into(),
            ));
        }
        Ok(())
    }

    /// Parses "1,2;3,4" style class lists of 1-based edge indices, with
    /// "a-b" ranges allowed.
    pub fn parse(text: &str, m: usize) -> Result<Self, crate::Error> {
        let bad = |msg: String| crate::Error::BadPartition(msg);
        let mut classes = Vec::new();
        for class_text in text.split(';') {
            let mut mask = 0u32;
            for item in class_text.split(',') {
                let item = item.trim();
                if item.is_empty() {
                    return Err(bad(format!("empty entry in class {class_text:?}")));
                }
                let (lo, hi) = match item.split_once('-') {
                    Some((a, b)) => {
                        let lo: usize = a.trim().parse().map_err(|_| bad(format!("bad edge index {a:?}")))?;
                        let hi: usize = b.trim().parse().map_err(|_| bad(format!("bad edge index {b:?}")))?;
                        (lo, hi)
                    }
                    None => {
                        let v: usize = item.parse().map_err(|_| bad(format!("bad edge index {item:?}")))?;
                        (v, v)
                    }
                };
                if lo == 0 || hi < lo || hi > m {
                    return Err(bad(format!("edge range {item:?} out of 1..={m}")));
                }
                for e in lo..=hi {
                    mask |= 1u32 << (e - 1);
                }
            }
            classes.push(mask);
        }
        let partition = EdgePartition { classes };
        partition.validate(m)?;
        Ok(partition)
    }
}

/// A parsed graph file: the graph plus its weight column (missing weights
/// default to 1).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GraphFile {
    pub graph: Graph,
    pub weights: WeightAssignment,
}

/// Parses the text graph format: the first non-comment line is the vertex
/// count, each following non-comment line is `i j` or `i j q` with
/// 1-based endpoints and a rational weight. Lines starting with `#` and
/// blank lines are ignored.
pub fn parse_graph(text: &str) -> Result<GraphFile, GraphFileError> {
    let mut n: Option<usize> = None;
    let mut pairs = Vec::new();
    let mut q = Vec::new();
    let mut last_line = 0;
    for (lineno, raw) in text.lines().enumerate() {
        let lineno = lineno + 1;
        last_line = lineno;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let n = match n {
            Some(n) => n,
            None => {
                let parsed: usize = line.parse().map_err(|_| GraphFileError {
                    line: lineno,
                    kind: GraphFileErrorKind::InvalidVertexCount(line.to_string()),
                })?;
                n = Some(parsed);
                continue;
            }
        };
        let fields: Vec<&str> = line.split_whitespace().collect();
        if fields.len() != 2 && fields.len() != 3 {
            return Err(GraphFileError {
                line: lineno,
                kind: GraphFileErrorKind::MalformedEdge(line.to_string()),
            });
        }
        let endpoint = |s: &str| -> Result<usize, GraphFileError> {
            let v: usize = s.parse().map_err(|_| GraphFileError {
                line: lineno,
                kind: GraphFileErrorKind::MalformedEdge(line.to_string()),
            })?;
            if v == 0 || v > n {
                return Err(GraphFileError {
                    line: lineno,
                    kind: GraphFileErrorKind::VertexOutOfRange {
                        vertex: v.wrapping_sub(1),
                        n,
                    },
                });
            }
            Ok(v - 1)
        };
        let u = endpoint(fields[0])?;
        let v = endpoint(fields[1])?;
        if u == v {
            return Err(GraphFileError {
                line: lineno,
                kind: GraphFileErrorKind::LoopEdge(u),
            });
        }
        let weight = match fields.get(2) {
            Some(s) => parse_rational(s).ok_or(GraphFileError {
                line: lineno,
                kind: GraphFileErrorKind::InvalidWeight(s.to_string()),
            })?,
            None => Rational::from_integer(1.into()),
        };
        pairs.push((u, v));
        q.push(weight);
    }
    let n = n.ok_or(GraphFileError {
        line: last_line.max(1),
        kind: GraphFileErrorKind::MissingVertexCount,
    })?;
    Ok(GraphFile {
        graph: Graph::new(n, pairs),
        weights: WeightAssignment { q },
    })
}
