//! Exhaustive enumeration of labeled graphs with a fixed degree function and
//! the switch metagraph on top of it.

use std::collections::{BTreeMap, HashMap, VecDeque};
use std::fmt::Write as _;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{DegreeFunction, Edge, Graph, Vertex};
use crate::planner::SwitchSequence;
use crate::structure::Family;
use crate::switch::{canonical_matrices, MatrixJson, SwitchMatrix};

/// Largest order `enumerate_family` accepts for a family.
pub fn enumeration_bound(family: Family) -> usize {
    match family {
        Family::Tree | Family::Forest | Family::Unicyclic => 8,
        Family::Pseudoforest | Family::Plain => 7,
    }
}

fn check_bound(n: usize, family: Family) -> Result<()> {
    let limit = enumeration_bound(family);
    if n > limit {
        return Err(Error::BoundExceeded { n, limit });
    }
    Ok(())
}

/// Union-find with rollback. Each root carries whether its component
/// already holds a cycle.
struct Dsu {
    parent: Vec<usize>,
    size: Vec<usize>,
    cyclic: Vec<bool>,
    cycles: usize,
    history: Vec<Option<(usize, usize)>>,
}

impl Dsu {
    fn new(n: usize) -> Self {
        Dsu {
            parent: (0..=n).collect(),
            size: vec![1; n + 1],
            cyclic: vec![false; n + 1],
            cycles: 0,
            history: Vec::new(),
        }
    }

    fn find(&self, mut x: usize) -> usize {
        while self.parent[x] != x {
            x = self.parent[x];
        }
        x
    }

    /// Adds an edge if the result stays within `max_cycles` per component and
    /// `total` overall. Returns false and leaves the state alone otherwise.
    fn add(&mut self, u: usize, v: usize, per_component: usize, total: usize) -> bool {
        if per_component == usize::MAX {
            self.history.push(None);
            return true;
        }
        let (ru, rv) = (self.find(u), self.find(v));
        if ru == rv {
            if per_component == 0 || self.cyclic[ru] || self.cycles >= total {
                return false;
            }
            self.cyclic[ru] = true;
            self.cycles += 1;
            self.history.push(Some((ru, usize::MAX)));
            return true;
        }
        if self.cyclic[ru] && self.cyclic[rv] && per_component < 2 {
            return false;
        }
        let (big, small) = if self.size[ru] >= self.size[rv] {
            (ru, rv)
        } else {
            (rv, ru)
        };
        self.parent[small] = big;
        self.size[big] += self.size[small];
        let was_cyclic = self.cyclic[big];
        self.cyclic[big] |= self.cyclic[small];
        self.history.push(Some((small, usize::from(was_cyclic))));
        true
    }

    fn undo(&mut self) {
        match self.history.pop().flatten() {
            Some((root, usize::MAX)) => {
                self.cyclic[root] = false;
                self.cycles -= 1;
            }
            Some((small, was_cyclic)) => {
                let big = self.parent[small];
                self.parent[small] = small;
                self.size[big] -= self.size[small];
                self.cyclic[big] = was_cyclic == 1;
            }
            None => {}
        }
    }
}

struct Enumerator {
    n: usize,
    residual: Vec<u32>,
    edges: Vec<Edge>,
    dsu: Dsu,
    per_component: usize,
    total_cycles: usize,
    family: Family,
    out: Vec<Graph>,
}

impl Enumerator {
    fn next_vertex(&self, from: usize) -> Option<usize> {
        (from..=self.n).find(|&v| self.residual[v] > 0)
    }

    fn run(&mut self, from: usize) {
        let Some(v) = self.next_vertex(from) else {
            let g = Graph::from_unsorted(self.n, self.edges.clone());
            if self.family.contains(&g) {
                self.out.push(g);
            }
            return;
        };
        let need = self.residual[v];
        self.residual[v] = 0;
        self.choose(v, v + 1, need);
        self.residual[v] = need;
    }

    /// Picks `need` more partners for `v` among vertices `>= start`.
    fn choose(&mut self, v: usize, start: usize, need: u32) {
        if need == 0 {
            self.run(v + 1);
            return;
        }
        let available = (start..=self.n).filter(|&u| self.residual[u] > 0).count();
        if available < need as usize {
            return;
        }
        for u in start..=self.n {
            if self.residual[u] == 0 {
                continue;
            }
            if !self.dsu.add(v, u, self.per_component, self.total_cycles) {
                continue;
            }
            self.residual[u] -= 1;
            self.edges.push(Edge::new(v as Vertex, u as Vertex));
            self.choose(v, u + 1, need - 1);
            self.edges.pop();
            self.residual[u] += 1;
            self.dsu.undo();
        }
    }
}

/// Every labeled graph on `[n]` with degree function `s` that belongs to
/// `family`, sorted by edge list.
pub fn enumerate_family(s: &DegreeFunction, family: Family) -> Result<Vec<Graph>> {
    let n = s.order();
    check_bound(n, family)?;
    if s.total() % 2 == 1 || s.as_slice().iter().any(|&d| d as usize >= n.max(1)) {
        return Ok(Vec::new());
    }
    let m = (s.total() / 2) as usize;
    let (per_component, total_cycles) = match family {
        Family::Tree | Family::Forest => (0, 0),
        Family::Unicyclic => {
            if m != n {
                return Ok(Vec::new());
            }
            (1, 1)
        }
        Family::Pseudoforest => (1, usize::MAX),
        Family::Plain => (usize::MAX, usize::MAX),
    };
    let mut residual = vec![0];
    residual.extend_from_slice(s.as_slice());
    let mut e = Enumerator {
        n,
        residual,
        edges: Vec::with_capacity(m),
        dsu: Dsu::new(n),
        per_component,
        total_cycles,
        family,
        out: Vec::new(),
    };
    e.run(1);
    e.out.sort();
    Ok(e.out)
}

/// Every labeled graph on `[n]` in `family`, whatever its degrees, grouped
/// by degree function.
pub fn enumerate_by_degrees(
    n: usize,
    family: Family,
) -> Result<BTreeMap<DegreeFunction, Vec<Graph>>> {
    check_bound(n, family)?;
    let mut groups: BTreeMap<DegreeFunction, Vec<Graph>> = BTreeMap::new();
    for g in all_graphs(n)? {
        if family.contains(&g) {
            groups.entry(g.degree_function()).or_default().push(g);
        }
    }
    for v in groups.values_mut() {
        v.sort();
    }
    Ok(groups)
}

/// All `2^(n choose 2)` labeled graphs on `[n]`, for `n <= 7`.
pub fn all_graphs(n: usize) -> Result<impl Iterator<Item = Graph>> {
    if n > 7 {
        return Err(Error::BoundExceeded { n, limit: 7 });
    }
    let pairs: Vec<Edge> = (1..=n as Vertex)
        .flat_map(|u| (u + 1..=n as Vertex).map(move |v| Edge::new(u, v)))
        .collect();
    let count = 1u64 << pairs.len();
    Ok((0..count).map(move |mask| {
        let edges = pairs
            .iter()
            .enumerate()
            .filter(|(i, _)| mask >> i & 1 == 1)
            .map(|(_, &e)| e)
            .collect();
        Graph::from_sorted(n, edges)
    }))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Link {
    pub from: usize,
    pub to: usize,
    pub matrix: SwitchMatrix,
}

/// Family members as nodes, single family-preserving switches as links.
#[derive(Debug, Clone)]
pub struct Metagraph {
    pub family: Family,
    pub nodes: Vec<Graph>,
    pub links: Vec<Link>,
    index: HashMap<Graph, usize>,
    adjacency: Vec<Vec<usize>>,
}

impl Metagraph {
    /// Builds the metagraph over `nodes`, keeping the links accepted by
    /// `keep` among the canonical family-preserving switches.
    pub fn from_nodes(
        family: Family,
        mut nodes: Vec<Graph>,
        mut keep: impl FnMut(&Graph, SwitchMatrix) -> bool,
    ) -> Self {
        nodes.sort();
        nodes.dedup();
        let index: HashMap<Graph, usize> = nodes
            .iter()
            .enumerate()
            .map(|(i, g)| (g.clone(), i))
            .collect();
        let mut links = Vec::new();
        let mut adjacency = vec![Vec::new(); nodes.len()];
        for (i, g) in nodes.iter().enumerate() {
            for m in canonical_matrices(g) {
                if !m.is_interchangeable(g) || !keep(g, m) {
                    continue;
                }
                let image = m.apply(g);
                if let Some(&j) = index.get(&image) {
                    links.push(Link {
                        from: i,
                        to: j,
                        matrix: m,
                    });
                    adjacency[i].push(j);
                }
            }
        }
        Metagraph {
            family,
            nodes,
            links,
            index,
            adjacency,
        }
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    pub fn node_index(&self, g: &Graph) -> Option<usize> {
        self.index.get(g).copied()
    }

    pub fn neighbors(&self, i: usize) -> &[usize] {
        &self.adjacency[i]
    }

    /// BFS distances from node `i`; `None` for unreachable nodes.
    pub fn distances(&self, i: usize) -> Vec<Option<usize>> {
        self.bfs(i).0
    }

    fn bfs(&self, i: usize) -> (Vec<Option<usize>>, Vec<Option<usize>>) {
        let mut dist = vec![None; self.nodes.len()];
        let mut via = vec![None; self.nodes.len()];
        let mut queue = VecDeque::new();
        dist[i] = Some(0);
        queue.push_back(i);
        while let Some(x) = queue.pop_front() {
            let d = dist[x].unwrap();
            for &y in &self.adjacency[x] {
                if dist[y].is_none() {
                    dist[y] = Some(d + 1);
                    via[y] = Some(x);
                    queue.push_back(y);
                }
            }
        }
        (dist, via)
    }

    pub fn is_berge_connected(&self) -> bool {
        self.nodes.is_empty() || self.distances(0).iter().all(Option::is_some)
    }

    /// Eccentricity of each node, or `None` if the metagraph is disconnected.
    pub fn eccentricities(&self) -> Option<Vec<usize>> {
        (0..self.nodes.len())
            .map(|i| {
                self.distances(i)
                    .into_iter()
                    .try_fold(0, |acc, d| d.map(|d| acc.max(d)))
            })
            .collect()
    }

    pub fn diameter(&self) -> Option<usize> {
        self.eccentricities()
            .map(|e| e.into_iter().max().unwrap_or(0))
    }

    /// A shortest family-preserving switch sequence from `from` to `to`.
    pub fn shortest_path(&self, from: &Graph, to: &Graph) -> Result<Option<SwitchSequence>> {
        let i = self.node_index(from).ok_or(Error::NodeNotFound)?;
        let j = self.node_index(to).ok_or(Error::NodeNotFound)?;
        let (dist, via) = self.bfs(i);
        if dist[j].is_none() {
            return Ok(None);
        }
        let mut path = vec![j];
        while let Some(p) = via[*path.last().unwrap()] {
            path.push(p);
        }
        path.reverse();
        let steps = path
            .windows(2)
            .map(|w| {
                self.links
                    .iter()
                    .find(|l| l.from == w[0] && l.to == w[1])
                    .map(|l| l.matrix)
                    .expect("BFS follows links")
            })
            .collect();
        Ok(Some(SwitchSequence::new(self.family, from.clone(), steps)))
    }

    pub fn to_json(&self) -> MetagraphJson {
        MetagraphJson {
            family: self.family.name(),
            connected: self.is_berge_connected(),
            diameter: self.diameter(),
            nodes: self
                .nodes
                .iter()
                .enumerate()
                .map(|(id, g)| NodeJson {
                    id,
                    edges: g.edge_pairs().into_iter().map(|(u, v)| [u, v]).collect(),
                })
                .collect(),
            links: self
                .links
                .iter()
                .map(|l| LinkJson {
                    from: l.from,
                    to: l.to,
                    matrix: l.matrix.into(),
                })
                .collect(),
        }
    }

    /// Undirected DOT rendering; each link pair appears once.
    pub fn to_dot(&self) -> String {
        let mut out = String::from("graph metagraph {\n");
        for (i, g) in self.nodes.iter().enumerate() {
            let label: Vec<String> = g.edges().iter().map(|e| e.to_string()).collect();
            let _ = writeln!(out, "  {i} [label=\"{}\"];", label.join(" "));
        }
        for l in self.links.iter().filter(|l| l.from < l.to) {
            let _ = writeln!(out, "  {} -- {} [label=\"{}\"];", l.from, l.to, l.matrix);
        }
        out.push_str("}\n");
        out
    }
}

#[derive(Debug, Serialize)]
pub struct MetagraphJson {
    pub family: &'static str,
    pub connected: bool,
    pub diameter: Option<usize>,
    pub nodes: Vec<NodeJson>,
    pub links: Vec<LinkJson>,
}

#[derive(Debug, Serialize)]
pub struct NodeJson {
    pub id: usize,
    pub edges: Vec<[Vertex; 2]>,
}

#[derive(Debug, Serialize)]
pub struct LinkJson {
    pub from: usize,
    pub to: usize,
    pub matrix: MatrixJson,
}

/// Metagraph of `family` members with degree function `s`.
pub fn build_metagraph(s: &DegreeFunction, family: Family) -> Result<Metagraph> {
    let nodes = enumerate_family(s, family)?;
    Ok(Metagraph::from_nodes(family, nodes, |_, _| true))
}

/// Same nodes as [`build_metagraph`], but only links accepted by `keep`.
pub fn build_metagraph_filtered(
    s: &DegreeFunction,
    family: Family,
    keep: impl FnMut(&Graph, SwitchMatrix) -> bool,
) -> Result<Metagraph> {
    let nodes = enumerate_family(s, family)?;
    Ok(Metagraph::from_nodes(family, nodes, keep))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::structure::decompose;

    fn s(d: &[u32]) -> DegreeFunction {
        DegreeFunction::new(d.to_vec())
    }

    #[test]
    fn four_cycles() {
        let u = enumerate_family(&s(&[2, 2, 2, 2]), Family::Unicyclic).unwrap();
        assert_eq!(u.len(), 3);
        let m = build_metagraph(&s(&[2, 2, 2, 2]), Family::Unicyclic).unwrap();
        assert_eq!(m.len(), 3);
        assert!(m.is_berge_connected());
    }

    #[test]
    fn triangle_with_pendant_is_alone() {
        let u = enumerate_family(&s(&[3, 2, 2, 1]), Family::Unicyclic).unwrap();
        assert_eq!(
            u,
            vec![Graph::new(4, &[(1, 2), (2, 3), (3, 1), (1, 4)]).unwrap()]
        );
        let m = build_metagraph(&s(&[3, 2, 2, 1]), Family::Unicyclic).unwrap();
        assert!(m.links.is_empty());
        assert!(m.is_berge_connected());
        assert_eq!(m.diameter(), Some(0));
    }

    #[test]
    fn odd_sum_and_bounds() {
        assert!(enumerate_family(&s(&[1, 1, 1]), Family::Plain)
            .unwrap()
            .is_empty());
        let big = s(&[2; 9]);
        assert_eq!(
            enumerate_family(&big, Family::Unicyclic),
            Err(Error::BoundExceeded { n: 9, limit: 8 })
        );
        assert!(enumerate_family(&s(&[2; 8]), Family::Unicyclic).is_ok());
        assert_eq!(
            enumerate_family(&s(&[2; 8]), Family::Pseudoforest).map(|_| ()),
            Err(Error::BoundExceeded { n: 8, limit: 7 })
        );
    }

    #[test]
    fn backtracking_matches_brute_force() {
        for n in 1..=6 {
            for family in [
                Family::Tree,
                Family::Forest,
                Family::Unicyclic,
                Family::Pseudoforest,
                Family::Plain,
            ] {
                let groups = enumerate_by_degrees(n, family).unwrap();
                for (d, members) in &groups {
                    assert_eq!(
                        &enumerate_family(d, family).unwrap(),
                        members,
                        "{family} {d}"
                    );
                }
            }
        }
    }

    #[test]
    fn links_are_symmetric() {
        let m = build_metagraph(&s(&[3, 2, 2, 2, 2, 1]), Family::Pseudoforest).unwrap();
        for l in &m.links {
            assert!(l.matrix.is_interchangeable(&m.nodes[l.from]));
            assert_eq!(l.matrix.apply(&m.nodes[l.from]), m.nodes[l.to]);
            let back = l.matrix.inverse().canonical();
            assert!(m
                .links
                .iter()
                .any(|k| k.from == l.to && k.to == l.from && k.matrix == back));
        }
    }

    #[test]
    fn cycle_only_non_breakers_disconnect() {
        let d = s(&[3, 2, 2, 2, 1]);
        let full = build_metagraph(&d, Family::Unicyclic).unwrap();
        assert!(full.is_berge_connected());
        let restricted = build_metagraph_filtered(&d, Family::Unicyclic, |g, m| {
            let dec = decompose(g);
            m.removed().iter().all(|&e| dec.is_cycle_edge(e)) && !m.is_breaker(g)
        })
        .unwrap();
        assert_eq!(restricted.len(), full.len());
        assert!(!restricted.is_berge_connected());
        assert_eq!(restricted.diameter(), None);
    }

    #[test]
    fn shortest_paths() {
        let d = s(&[2; 5]);
        let m = build_metagraph(&d, Family::Unicyclic).unwrap();
        assert_eq!(m.len(), 12);
        let a = m.nodes[0].clone();
        let b = m.nodes[11].clone();
        let seq = m.shortest_path(&a, &b).unwrap().unwrap();
        assert_eq!(seq.end(), b);
        assert_eq!(Some(seq.len()), m.distances(0)[11]);
        let stranger = Graph::new(5, &[(1, 2)]).unwrap();
        assert_eq!(
            m.shortest_path(&stranger, &b).map(|_| ()),
            Err(Error::NodeNotFound)
        );
    }

    #[test]
    fn exports() {
        let m = build_metagraph(&s(&[2, 2, 2, 2]), Family::Unicyclic).unwrap();
        let dot = m.to_dot();
        assert!(dot.starts_with("graph metagraph {"));
        assert_eq!(dot.matches(" -- ").count(), m.links.len() / 2);
        let json = serde_json::to_value(m.to_json()).unwrap();
        assert_eq!(json["nodes"].as_array().unwrap().len(), 3);
        assert_eq!(json["connected"], true);
    }
}
