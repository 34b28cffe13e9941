//! Exact values of the nine 2-switch-stable parameters on small graphs.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{DegreeFunction, Graph};
use crate::oracle::enumerate_family;
use crate::structure::Family;
use crate::switch::SwitchMatrix;

/// Largest order `evaluate` accepts.
pub const BUDGET: usize = 16;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ParameterId {
    Matching,
    Independence,
    Domination,
    PathCover,
    EdgeCover,
    VertexCover,
    Chromatic,
    Clique,
    Components,
}

impl ParameterId {
    pub const ALL: [ParameterId; 9] = [
        ParameterId::Matching,
        ParameterId::Independence,
        ParameterId::Domination,
        ParameterId::PathCover,
        ParameterId::EdgeCover,
        ParameterId::VertexCover,
        ParameterId::Chromatic,
        ParameterId::Clique,
        ParameterId::Components,
    ];

    pub fn name(self) -> &'static str {
        match self {
            ParameterId::Matching => "matching",
            ParameterId::Independence => "independence",
            ParameterId::Domination => "domination",
            ParameterId::PathCover => "path_cover",
            ParameterId::EdgeCover => "edge_cover",
            ParameterId::VertexCover => "vertex_cover",
            ParameterId::Chromatic => "chromatic",
            ParameterId::Clique => "clique",
            ParameterId::Components => "components",
        }
    }
}

impl fmt::Display for ParameterId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for ParameterId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let key = s.trim().to_ascii_lowercase().replace('-', "_");
        ParameterId::ALL
            .into_iter()
            .find(|p| p.name() == key)
            .ok_or_else(|| Error::Parse {
                line: 0,
                msg: format!("unknown parameter {s:?}"),
            })
    }
}

/// Adjacency as bitmasks over 0-based vertex indices.
struct Masks {
    n: usize,
    adj: Vec<u32>,
}

impl Masks {
    fn new(g: &Graph) -> Self {
        let n = g.order();
        let mut adj = vec![0u32; n];
        for e in g.edges() {
            let (u, v) = ((e.lo() - 1) as usize, (e.hi() - 1) as usize);
            adj[u] |= 1 << v;
            adj[v] |= 1 << u;
        }
        Masks { n, adj }
    }

    fn full(&self) -> u32 {
        if self.n == 32 {
            u32::MAX
        } else {
            (1u32 << self.n) - 1
        }
    }

    fn complement(&self) -> Masks {
        let full = self.full();
        let adj = (0..self.n)
            .map(|v| full & !self.adj[v] & !(1 << v))
            .collect();
        Masks { n: self.n, adj }
    }
}

fn lowest(mask: u32) -> usize {
    mask.trailing_zeros() as usize
}

fn bits(mut mask: u32) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        (mask != 0).then(|| {
            let v = lowest(mask);
            mask &= mask - 1;
            v
        })
    })
}

/// Memoized minimum over subsets, indexed by the still-open vertex mask.
struct Memo(Vec<u8>);

impl Memo {
    const UNSET: u8 = u8::MAX;

    fn new(n: usize) -> Self {
        Memo(vec![Self::UNSET; 1 << n])
    }

    fn get(&self, mask: u32) -> Option<u8> {
        let v = self.0[mask as usize];
        (v != Self::UNSET).then_some(v)
    }

    fn set(&mut self, mask: u32, v: u8) -> u8 {
        self.0[mask as usize] = v;
        v
    }
}

fn matching(m: &Masks) -> usize {
    fn go(m: &Masks, open: u32, memo: &mut Memo) -> u8 {
        if open == 0 {
            return 0;
        }
        if let Some(v) = memo.get(open) {
            return v;
        }
        let v = lowest(open);
        let rest = open & !(1 << v);
        let mut best = go(m, rest, memo);
        for u in bits(m.adj[v] & rest) {
            best = best.max(1 + go(m, rest & !(1 << u), memo));
        }
        memo.set(open, best)
    }
    go(m, m.full(), &mut Memo::new(m.n)) as usize
}

fn independence(m: &Masks) -> usize {
    fn go(m: &Masks, open: u32) -> usize {
        if open == 0 {
            return 0;
        }
        let v = lowest(open);
        let rest = open & !(1 << v);
        let nbrs = m.adj[v] & rest;
        if nbrs == 0 {
            return 1 + go(m, rest);
        }
        go(m, rest).max(1 + go(m, rest & !nbrs))
    }
    go(m, m.full())
}

fn vertex_cover(m: &Masks) -> usize {
    // Branch on an uncovered edge: one of its endpoints joins the cover.
    fn go(m: &Masks, alive: u32, memo: &mut Memo) -> u8 {
        let Some(v) = bits(alive).find(|&v| m.adj[v] & alive != 0) else {
            return 0;
        };
        if let Some(x) = memo.get(alive) {
            return x;
        }
        let u = lowest(m.adj[v] & alive);
        let best = 1 + go(m, alive & !(1 << v), memo).min(go(m, alive & !(1 << u), memo));
        memo.set(alive, best)
    }
    go(m, m.full(), &mut Memo::new(m.n)) as usize
}

fn edge_cover(m: &Masks) -> usize {
    fn go(m: &Masks, open: u32, all: u32, memo: &mut Memo) -> u8 {
        if open == 0 {
            return 0;
        }
        if let Some(v) = memo.get(open) {
            return v;
        }
        let v = lowest(open);
        let rest = open & !(1 << v);
        let best = bits(m.adj[v] & all)
            .map(|u| 1 + go(m, rest & !(1 << u), all, memo))
            .min()
            .expect("no isolated vertices");
        memo.set(open, best)
    }
    let all = m.full();
    go(m, all, all, &mut Memo::new(m.n)) as usize
}

fn domination(m: &Masks) -> usize {
    // The lowest undominated vertex needs a dominator in its closed neighborhood.
    fn go(m: &Masks, open: u32, memo: &mut Memo) -> u8 {
        if open == 0 {
            return 0;
        }
        if let Some(v) = memo.get(open) {
            return v;
        }
        let v = lowest(open);
        let best = bits(m.adj[v] | 1 << v)
            .map(|w| 1 + go(m, open & !(m.adj[w] | 1 << w), memo))
            .min()
            .unwrap();
        memo.set(open, best)
    }
    go(m, m.full(), &mut Memo::new(m.n)) as usize
}

fn chromatic(m: &Masks) -> usize {
    fn colorable(m: &Masks, colors: &mut [usize], v: usize, k: usize) -> bool {
        if v == m.n {
            return true;
        }
        // Symmetry breaking: vertex v may open at most one new color.
        let used = colors[..v].iter().copied().max().map_or(0, |c| c + 1);
        for c in 0..k.min(used + 1) {
            if bits(m.adj[v] & ((1 << v) - 1)).all(|u| colors[u] != c) {
                colors[v] = c;
                if colorable(m, colors, v + 1, k) {
                    return true;
                }
            }
        }
        false
    }
    if m.n == 0 {
        return 0;
    }
    let mut colors = vec![0; m.n];
    (1..=m.n)
        .find(|&k| colorable(m, &mut colors, 0, k))
        .unwrap_or(m.n)
}

fn path_cover(m: &Masks) -> usize {
    // Vertices are added one at a time; the newest one either extends the
    // current path or starts a new one. For each covered set keep the best
    // path count and the ends of the current path that achieve it.
    let size = 1usize << m.n;
    let mut best = vec![u8::MAX; size];
    let mut ends = vec![0u32; size];
    best[0] = 0;
    for s in 0..size {
        let count = best[s];
        if count == u8::MAX {
            continue;
        }
        let set = s as u32;
        let reach = bits(ends[s]).fold(0u32, |acc, u| acc | m.adj[u]);
        for v in bits(m.full() & !set) {
            let t = (set | 1 << v) as usize;
            let c = if reach >> v & 1 == 1 {
                count
            } else {
                count + 1
            };
            if c < best[t] {
                best[t] = c;
                ends[t] = 1 << v;
            } else if c == best[t] {
                ends[t] |= 1 << v;
            }
        }
    }
    best[size - 1] as usize
}

/// Exact value of `p` on `g`.
pub fn evaluate(p: ParameterId, g: &Graph) -> Result<usize> {
    let n = g.order();
    if n > BUDGET {
        return Err(Error::BudgetExceeded { n, limit: BUDGET });
    }
    let m = Masks::new(g);
    Ok(match p {
        ParameterId::Matching => matching(&m),
        ParameterId::Independence => independence(&m),
        ParameterId::Domination => domination(&m),
        ParameterId::PathCover => path_cover(&m),
        ParameterId::EdgeCover => {
            if g.vertices().any(|v| g.is_isolated(v)) {
                return Err(Error::UndefinedParameter(
                    "edge cover of a graph with an isolated vertex",
                ));
            }
            edge_cover(&m)
        }
        ParameterId::VertexCover => vertex_cover(&m),
        ParameterId::Chromatic => chromatic(&m),
        ParameterId::Clique => independence(&m.complement()),
        ParameterId::Components => g.kappa(),
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct StabilityCheck {
    pub before: usize,
    pub after: usize,
}

impl StabilityCheck {
    pub fn delta(self) -> i64 {
        self.after as i64 - self.before as i64
    }

    pub fn is_stable(self) -> bool {
        self.delta().abs() <= 1
    }
}

/// Values of `p` before and after applying `a` to `g`.
pub fn stability_check(p: ParameterId, g: &Graph, a: SwitchMatrix) -> Result<StabilityCheck> {
    Ok(StabilityCheck {
        before: evaluate(p, g)?,
        after: evaluate(p, &a.apply(g))?,
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntervalReport {
    pub parameter: ParameterId,
    pub family: Family,
    pub degree_function: DegreeFunction,
    pub min: usize,
    pub max: usize,
    pub realized: BTreeSet<usize>,
    /// Smallest member realizing each value.
    pub witnesses: BTreeMap<usize, Graph>,
    pub members: usize,
}

impl IntervalReport {
    pub fn is_contiguous(&self) -> bool {
        self.realized.len() == self.max - self.min + 1
    }

    /// Values in `[min, max]` that no member realizes.
    pub fn gaps(&self) -> Vec<usize> {
        (self.min..=self.max)
            .filter(|v| !self.realized.contains(v))
            .collect()
    }

    pub fn to_json(&self) -> serde_json::Value {
        let witnesses: serde_json::Map<String, serde_json::Value> = self
            .witnesses
            .iter()
            .map(|(v, g)| (v.to_string(), serde_json::json!(g.edge_pairs())))
            .collect();
        serde_json::json!({
            "parameter": self.parameter,
            "family": self.family.name(),
            "degree_function": self.degree_function.to_string(),
            "members": self.members,
            "min": self.min,
            "max": self.max,
            "realized": self.realized,
            "contiguous": self.is_contiguous(),
            "witnesses": witnesses,
        })
    }
}

impl fmt::Display for IntervalReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let realized: Vec<String> = self.realized.iter().map(|v| v.to_string()).collect();
        writeln!(f, "{:<12}{}", "parameter", self.parameter)?;
        writeln!(f, "{:<12}{}", "family", self.family)?;
        writeln!(f, "{:<12}{}", "degrees", self.degree_function)?;
        writeln!(f, "{:<12}{}", "members", self.members)?;
        writeln!(f, "{:<12}{}", "min", self.min)?;
        writeln!(f, "{:<12}{}", "max", self.max)?;
        writeln!(f, "{:<12}{}", "realized", realized.join(","))?;
        write!(
            f,
            "{:<12}{}",
            "contiguous",
            if self.is_contiguous() { "yes" } else { "no" }
        )?;
        for (v, g) in &self.witnesses {
            let edges: Vec<String> = g
                .edges()
                .iter()
                .map(|e| format!("{}-{}", e.lo(), e.hi()))
                .collect();
            write!(f, "\n{:<12}{}", format!("value {v}"), edges.join(" "))?;
        }
        Ok(())
    }
}

/// Realized values of `p` over a list of family members.
pub fn interval_over(
    p: ParameterId,
    family: Family,
    degree_function: DegreeFunction,
    members: &[Graph],
) -> Result<IntervalReport> {
    let mut witnesses = BTreeMap::new();
    for g in members {
        witnesses
            .entry(evaluate(p, g)?)
            .or_insert_with(|| g.clone());
    }
    let realized: BTreeSet<usize> = witnesses.keys().copied().collect();
    let (Some(&min), Some(&max)) = (realized.first(), realized.last()) else {
        return Err(Error::EmptyFamily);
    };
    Ok(IntervalReport {
        parameter: p,
        family,
        degree_function,
        min,
        max,
        realized,
        witnesses,
        members: members.len(),
    })
}

/// Realized values of `p` over every member of the family with degrees `s`.
pub fn interval_report(
    p: ParameterId,
    s: &DegreeFunction,
    family: Family,
) -> Result<IntervalReport> {
    let members = enumerate_family(s, family)?;
    interval_over(p, family, s.clone(), &members)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Vertex;
    use crate::oracle::all_graphs;
    use crate::switch::canonical_matrices;

    fn g(n: usize, e: &[(Vertex, Vertex)]) -> Graph {
        Graph::new(n, e).unwrap()
    }

    fn cycle(n: usize) -> Graph {
        let e: Vec<_> = (1..=n as Vertex)
            .map(|v| (v, v % n as Vertex + 1))
            .collect();
        g(n, &e)
    }

    fn pendant_triangle() -> Graph {
        g(4, &[(1, 2), (2, 3), (3, 1), (1, 4)])
    }

    #[test]
    fn known_values() {
        use ParameterId::*;
        assert_eq!(evaluate(Matching, &cycle(6)), Ok(3));
        assert_eq!(evaluate(Chromatic, &cycle(5)), Ok(3));
        assert_eq!(evaluate(Chromatic, &cycle(6)), Ok(2));
        assert_eq!(evaluate(Domination, &pendant_triangle()), Ok(1));
        assert_eq!(evaluate(Independence, &cycle(7)), Ok(3));
        assert_eq!(evaluate(Clique, &pendant_triangle()), Ok(3));
        assert_eq!(evaluate(PathCover, &pendant_triangle()), Ok(1));
        assert_eq!(evaluate(PathCover, &g(4, &[(1, 2), (1, 3), (1, 4)])), Ok(2));
        assert_eq!(evaluate(PathCover, &Graph::empty(3)), Ok(3));
        assert_eq!(evaluate(EdgeCover, &cycle(5)), Ok(3));
        assert_eq!(evaluate(VertexCover, &cycle(5)), Ok(3));
        assert_eq!(evaluate(Components, &Graph::empty(4)), Ok(4));
    }

    #[test]
    fn empty_and_undefined() {
        for p in ParameterId::ALL {
            if p != ParameterId::EdgeCover {
                assert_eq!(evaluate(p, &Graph::empty(0)), Ok(0), "{p}");
            }
        }
        assert!(matches!(
            evaluate(ParameterId::EdgeCover, &g(3, &[(1, 2)])),
            Err(Error::UndefinedParameter(_))
        ));
        assert_eq!(
            evaluate(ParameterId::Matching, &Graph::empty(17)),
            Err(Error::BudgetExceeded { n: 17, limit: 16 })
        );
        assert!(evaluate(ParameterId::Chromatic, &cycle(16)).is_ok());
    }

    #[test]
    fn dualities_hold_on_small_graphs() {
        for n in 1..=5 {
            for x in all_graphs(n).unwrap() {
                let nu = evaluate(ParameterId::Matching, &x).unwrap();
                let alpha = evaluate(ParameterId::Independence, &x).unwrap();
                let tau = evaluate(ParameterId::VertexCover, &x).unwrap();
                assert_eq!(alpha + tau, n);
                if let Ok(rho) = evaluate(ParameterId::EdgeCover, &x) {
                    assert_eq!(nu + rho, n);
                }
            }
        }
    }

    #[test]
    fn path_cover_against_permutations() {
        // A cover by k paths is a vertex ordering with n - k consecutive
        // adjacent pairs at most, so try every ordering.
        fn brute(x: &Graph) -> usize {
            let n = x.order();
            let mut order: Vec<Vertex> = x.vertices().collect();
            let mut best = n;
            permute(&mut order, 0, &mut |p| {
                let breaks = p.windows(2).filter(|w| !x.has_edge(w[0], w[1])).count();
                best = best.min(breaks + 1);
            });
            best
        }
        fn permute(v: &mut Vec<Vertex>, k: usize, f: &mut impl FnMut(&[Vertex])) {
            if k == v.len() {
                f(v);
                return;
            }
            for i in k..v.len() {
                v.swap(k, i);
                permute(v, k + 1, f);
                v.swap(k, i);
            }
        }
        for x in all_graphs(5).unwrap() {
            assert_eq!(
                evaluate(ParameterId::PathCover, &x).unwrap(),
                brute(&x),
                "{x:?}"
            );
        }
    }

    #[test]
    fn stability_examples() {
        let c6 = cycle(6);
        let breaker = SwitchMatrix::new(1, 2, 5, 4);
        let r = stability_check(ParameterId::Components, &c6, breaker).unwrap();
        assert_eq!((r.before, r.after, r.delta()), (1, 2, 1));
        assert!(r.is_stable());
        let trivial = SwitchMatrix::new(1, 2, 2, 3);
        let r = stability_check(ParameterId::Matching, &c6, trivial).unwrap();
        assert_eq!(r.delta(), 0);
        for m in canonical_matrices(&pendant_triangle()) {
            for p in ParameterId::ALL {
                assert!(stability_check(p, &pendant_triangle(), m)
                    .unwrap()
                    .is_stable());
            }
        }
    }

    #[test]
    fn interval_examples() {
        let all_two = DegreeFunction::new(vec![2; 6]);
        let r = interval_report(ParameterId::Matching, &all_two, Family::Unicyclic).unwrap();
        assert_eq!((r.min, r.max), (3, 3));
        assert_eq!(r.realized, BTreeSet::from([3]));
        assert_eq!(r.members, 60);

        let s = DegreeFunction::new(vec![3, 2, 2, 2, 2, 1]);
        let r = interval_report(ParameterId::Independence, &s, Family::Unicyclic).unwrap();
        assert!(r.is_contiguous());
        assert!(r.gaps().is_empty());
        for (v, w) in &r.witnesses {
            assert_eq!(evaluate(ParameterId::Independence, w).unwrap(), *v);
        }
        let text = r.to_string();
        assert!(text.contains("contiguous  yes"));

        let bad = DegreeFunction::new(vec![2, 2, 1, 1]);
        assert_eq!(
            interval_report(ParameterId::Matching, &bad, Family::Unicyclic),
            Err(Error::EmptyFamily)
        );
    }

    #[test]
    fn parameter_names_round_trip() {
        for p in ParameterId::ALL {
            assert_eq!(p.name().parse::<ParameterId>().unwrap(), p);
            assert_eq!(serde_json::to_value(p).unwrap(), p.name());
        }
        assert_eq!(
            "path-cover".parse::<ParameterId>().unwrap(),
            ParameterId::PathCover
        );
        assert!("girth".parse::<ParameterId>().is_err());
    }
}
