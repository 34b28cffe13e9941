//! Simple undirected graphs on a labeled vertex set `[n] = {1, ..., n}`.
//!
//! A [`Graph`] is an immutable value: edges are kept as a sorted list of
//! normalized pairs together with a dense bit matrix for constant-time
//! adjacency queries. Every rewrite returns a new graph.

use std::cmp::Ordering;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::str::FromStr;

use crate::error::{Error, Result};

/// Vertex label, 1-based.
pub type Vertex = u32;

/// Unordered vertex pair stored with the smaller endpoint first.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Edge {
    lo: Vertex,
    hi: Vertex,
}

impl Edge {
    /// Normalizes `{a, b}`. The caller guarantees `a != b`.
    pub fn new(a: Vertex, b: Vertex) -> Self {
        debug_assert_ne!(a, b, "loop edge");
        if a < b {
            Edge { lo: a, hi: b }
        } else {
            Edge { lo: b, hi: a }
        }
    }

    pub fn lo(self) -> Vertex {
        self.lo
    }

    pub fn hi(self) -> Vertex {
        self.hi
    }

    pub fn endpoints(self) -> (Vertex, Vertex) {
        (self.lo, self.hi)
    }

    pub fn contains(self, v: Vertex) -> bool {
        self.lo == v || self.hi == v
    }

    /// The endpoint that is not `v`.
    pub fn other(self, v: Vertex) -> Vertex {
        if self.lo == v {
            self.hi
        } else {
            self.lo
        }
    }

    pub fn shares_vertex(self, other: Edge) -> bool {
        self.contains(other.lo) || self.contains(other.hi)
    }
}

impl fmt::Display for Edge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.lo, self.hi)
    }
}

#[derive(Clone)]
pub struct Graph {
    n: usize,
    edges: Vec<Edge>,
    words: usize,
    bits: Vec<u64>,
}

impl Graph {
    /// Builds a graph on `[n]` from an edge list.
    ///
    /// Loops, out-of-range endpoints and repeated pairs (in either
    /// orientation) are rejected rather than dropped.
    pub fn new(n: usize, pairs: &[(Vertex, Vertex)]) -> Result<Self> {
        let mut edges = Vec::with_capacity(pairs.len());
        for &(u, v) in pairs {
            if u == v {
                return Err(Error::LoopEdge(u));
            }
            let in_range = |x: Vertex| x >= 1 && (x as usize) <= n;
            if !in_range(u) || !in_range(v) {
                return Err(Error::VertexOutOfRange { u, v, n });
            }
            edges.push(Edge::new(u, v));
        }
        edges.sort_unstable();
        if let Some(w) = edges.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::DuplicateEdge(w[0].lo, w[0].hi));
        }
        Ok(Self::from_sorted(n, edges))
    }

    /// Graph on `[n]` with no edges.
    pub fn empty(n: usize) -> Self {
        Self::from_sorted(n, Vec::new())
    }

    /// `edges` must be sorted, duplicate-free and within `[n]`.
    pub(crate) fn from_sorted(n: usize, edges: Vec<Edge>) -> Self {
        debug_assert!(edges.windows(2).all(|w| w[0] < w[1]));
        let words = n.div_ceil(64).max(1);
        let mut bits = vec![0u64; n * words];
        for e in &edges {
            let (u, v) = (e.lo as usize - 1, e.hi as usize - 1);
            bits[u * words + v / 64] |= 1 << (v % 64);
            bits[v * words + u / 64] |= 1 << (u % 64);
        }
        Graph {
            n,
            edges,
            words,
            bits,
        }
    }

    pub(crate) fn from_unsorted(n: usize, mut edges: Vec<Edge>) -> Self {
        edges.sort_unstable();
        Self::from_sorted(n, edges)
    }

    /// Order `|G|`.
    pub fn order(&self) -> usize {
        self.n
    }

    /// Size `‖G‖`.
    pub fn size(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn vertices(&self) -> impl Iterator<Item = Vertex> {
        1..=self.n as Vertex
    }

    pub fn contains_vertex(&self, v: Vertex) -> bool {
        v >= 1 && v as usize <= self.n
    }

    pub fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        if u == v || !self.contains_vertex(u) || !self.contains_vertex(v) {
            return false;
        }
        let (u, v) = (u as usize - 1, v as usize - 1);
        self.bits[u * self.words + v / 64] & (1 << (v % 64)) != 0
    }

    pub fn contains_edge(&self, e: Edge) -> bool {
        self.has_edge(e.lo, e.hi)
    }

    fn row(&self, v: Vertex) -> &[u64] {
        let start = (v as usize - 1) * self.words;
        &self.bits[start..start + self.words]
    }

    /// Neighbors of `v` in increasing order.
    pub fn neighbors(&self, v: Vertex) -> Neighbors<'_> {
        Neighbors {
            row: self.row(v),
            word: 0,
            current: self.row(v).first().copied().unwrap_or(0),
        }
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.row(v).iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn degree_function(&self) -> DegreeFunction {
        DegreeFunction(self.vertices().map(|v| self.degree(v) as u32).collect())
    }

    pub fn is_isolated(&self, v: Vertex) -> bool {
        self.row(v).iter().all(|&w| w == 0)
    }

    /// `G - e`; returns an identical copy when `e` is absent.
    pub fn without_edge(&self, e: Edge) -> Graph {
        let edges = self.edges.iter().copied().filter(|&f| f != e).collect();
        Self::from_sorted(self.n, edges)
    }

    /// Keeps only the edges accepted by `keep`, on the same vertex set.
    pub fn edge_subgraph(&self, mut keep: impl FnMut(Edge) -> bool) -> Graph {
        let edges = self.edges.iter().copied().filter(|&e| keep(e)).collect();
        Self::from_sorted(self.n, edges)
    }

    /// Removes `remove` and inserts `add`. Callers guarantee `remove ⊆ E` and
    /// `add ∩ E = ∅`.
    pub(crate) fn rewired(&self, remove: [Edge; 2], add: [Edge; 2]) -> Graph {
        let mut edges: Vec<Edge> = self
            .edges
            .iter()
            .copied()
            .filter(|e| !remove.contains(e))
            .collect();
        for e in add {
            let at = edges.binary_search(&e).unwrap_err();
            edges.insert(at, e);
        }
        Self::from_sorted(self.n, edges)
    }

    /// Connected components, each sorted, listed by smallest vertex.
    pub fn components(&self) -> Components {
        let mut label = vec![usize::MAX; self.n];
        let mut parts = Vec::new();
        let mut stack = Vec::new();
        for s in self.vertices() {
            if label[s as usize - 1] != usize::MAX {
                continue;
            }
            let id = parts.len();
            let mut part = vec![s];
            label[s as usize - 1] = id;
            stack.push(s);
            while let Some(x) = stack.pop() {
                for y in self.neighbors(x) {
                    if label[y as usize - 1] == usize::MAX {
                        label[y as usize - 1] = id;
                        part.push(y);
                        stack.push(y);
                    }
                }
            }
            part.sort_unstable();
            parts.push(part);
        }
        Components { label, parts }
    }

    /// `κ(G)`.
    pub fn kappa(&self) -> usize {
        self.components().count()
    }

    pub fn is_connected(&self) -> bool {
        self.kappa() <= 1
    }

    /// Vertex sequence of a path from `from` to `to` found by BFS (the unique
    /// path when the two lie in the same tree).
    pub fn path(&self, from: Vertex, to: Vertex) -> Option<Vec<Vertex>> {
        let mut parent = vec![0 as Vertex; self.n + 1];
        parent[from as usize] = from;
        let mut queue = std::collections::VecDeque::from([from]);
        while let Some(x) = queue.pop_front() {
            if x == to {
                let mut path = vec![to];
                let mut cur = to;
                while cur != from {
                    cur = parent[cur as usize];
                    path.push(cur);
                }
                path.reverse();
                return Some(path);
            }
            for y in self.neighbors(x) {
                if parent[y as usize] == 0 {
                    parent[y as usize] = x;
                    queue.push_back(y);
                }
            }
        }
        None
    }

    /// Edge list as `(u, v)` pairs with `u < v`.
    pub fn edge_pairs(&self) -> Vec<(Vertex, Vertex)> {
        self.edges.iter().map(|e| e.endpoints()).collect()
    }
}

pub struct Neighbors<'a> {
    row: &'a [u64],
    word: usize,
    current: u64,
}

impl Iterator for Neighbors<'_> {
    type Item = Vertex;

    fn next(&mut self) -> Option<Vertex> {
        loop {
            if self.current != 0 {
                let bit = self.current.trailing_zeros() as usize;
                self.current &= self.current - 1;
                return Some((self.word * 64 + bit + 1) as Vertex);
            }
            self.word += 1;
            if self.word >= self.row.len() {
                return None;
            }
            self.current = self.row[self.word];
        }
    }
}

impl PartialEq for Graph {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.edges == other.edges
    }
}

impl Eq for Graph {}

impl Hash for Graph {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.n.hash(state);
        self.edges.hash(state);
    }
}

impl PartialOrd for Graph {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Canonical order: by order, then lexicographically by sorted edge list.
impl Ord for Graph {
    fn cmp(&self, other: &Self) -> Ordering {
        self.n
            .cmp(&other.n)
            .then_with(|| self.edges.cmp(&other.edges))
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, [", self.n)?;
        for (i, e) in self.edges.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "{e}")?;
        }
        write!(f, "])")
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Components {
    label: Vec<usize>,
    parts: Vec<Vec<Vertex>>,
}

impl Components {
    pub fn count(&self) -> usize {
        self.parts.len()
    }

    pub fn parts(&self) -> &[Vec<Vertex>] {
        &self.parts
    }

    /// Index of the component containing `v`.
    pub fn of(&self, v: Vertex) -> usize {
        self.label[v as usize - 1]
    }

    pub fn same(&self, u: Vertex, v: Vertex) -> bool {
        self.of(u) == self.of(v)
    }
}

/// Labeled degree sequence: `degrees[i]` is the degree of vertex `i + 1`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DegreeFunction(Vec<u32>);

impl DegreeFunction {
    pub fn new(degrees: Vec<u32>) -> Self {
        DegreeFunction(degrees)
    }

    pub fn order(&self) -> usize {
        self.0.len()
    }

    pub fn degree(&self, v: Vertex) -> u32 {
        self.0[v as usize - 1]
    }

    pub fn as_slice(&self) -> &[u32] {
        &self.0
    }

    pub fn total(&self) -> u64 {
        self.0.iter().map(|&d| d as u64).sum()
    }

    /// Non-increasing rearrangement.
    pub fn sorted(&self) -> Vec<u32> {
        let mut d = self.0.clone();
        d.sort_unstable_by(|a, b| b.cmp(a));
        d
    }

    /// Unlabeled comparison: equal as multisets.
    pub fn same_multiset(&self, other: &DegreeFunction) -> bool {
        self.sorted() == other.sorted()
    }
}

impl fmt::Display for DegreeFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, d) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{d}")?;
        }
        Ok(())
    }
}

impl FromStr for DegreeFunction {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() {
            return Ok(DegreeFunction(Vec::new()));
        }
        s.split(',')
            .map(|t| {
                t.trim().parse::<u32>().map_err(|e| Error::Parse {
                    line: 1,
                    msg: format!("bad degree {t:?}: {e}"),
                })
            })
            .collect::<Result<Vec<_>>>()
            .map(DegreeFunction)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c4() -> Graph {
        Graph::new(4, &[(1, 2), (2, 3), (3, 4), (4, 1)]).unwrap()
    }

    #[test]
    fn build_c4() {
        let g = c4();
        assert_eq!(g.order(), 4);
        assert_eq!(g.size(), 4);
        assert!(g.has_edge(1, 4) && g.has_edge(4, 1));
        assert!(!g.has_edge(1, 3));
    }

    #[test]
    fn build_rejects_bad_input() {
        assert_eq!(Graph::new(3, &[(1, 1)]), Err(Error::LoopEdge(1)));
        assert_eq!(
            Graph::new(2, &[(1, 3)]),
            Err(Error::VertexOutOfRange { u: 1, v: 3, n: 2 })
        );
        assert_eq!(
            Graph::new(3, &[(0, 1)]).unwrap_err(),
            Error::VertexOutOfRange { u: 0, v: 1, n: 3 }
        );
        assert_eq!(
            Graph::new(3, &[(1, 2), (2, 1)]),
            Err(Error::DuplicateEdge(1, 2))
        );
    }

    #[test]
    fn degrees() {
        assert_eq!(c4().degree_function().as_slice(), &[2, 2, 2, 2]);
        assert_eq!(Graph::empty(3).degree_function().as_slice(), &[0, 0, 0]);
        let g = Graph::new(4, &[(1, 2), (2, 3), (3, 1), (1, 4)]).unwrap();
        assert_eq!(g.degree_function().as_slice(), &[3, 2, 2, 1]);
        assert_eq!(g.degree_function().total(), 2 * g.size() as u64);
    }

    #[test]
    fn component_counts() {
        assert_eq!(c4().kappa(), 1);
        let two = Graph::new(6, &[(1, 2), (2, 3), (3, 1), (4, 5), (5, 6), (6, 4)]).unwrap();
        assert_eq!(two.kappa(), 2);
        assert_eq!(two.components().parts(), &[vec![1, 2, 3], vec![4, 5, 6]]);
        assert_eq!(Graph::empty(5).kappa(), 5);
    }

    #[test]
    fn neighbors_past_one_word() {
        let g = Graph::new(130, &[(1, 70), (1, 130), (1, 2)]).unwrap();
        assert_eq!(g.neighbors(1).collect::<Vec<_>>(), vec![2, 70, 130]);
        assert_eq!(g.neighbors(130).collect::<Vec<_>>(), vec![1]);
        assert_eq!(g.degree(1), 3);
    }

    #[test]
    fn tree_path() {
        let g = Graph::new(5, &[(1, 2), (2, 3), (3, 4), (2, 5)]).unwrap();
        assert_eq!(g.path(5, 4), Some(vec![5, 2, 3, 4]));
        assert_eq!(g.path(1, 1), Some(vec![1]));
        assert_eq!(Graph::empty(2).path(1, 2), None);
    }

    #[test]
    fn degree_function_parse_and_multiset() {
        let d: DegreeFunction = "3, 2,2,1".parse().unwrap();
        assert_eq!(d.as_slice(), &[3, 2, 2, 1]);
        assert_eq!(d.to_string(), "3,2,2,1");
        let e = DegreeFunction::new(vec![1, 2, 3, 2]);
        assert!(d.same_multiset(&e));
        assert_ne!(d, e);
        assert!("1,x".parse::<DegreeFunction>().is_err());
    }
}
