//! Cycle/forest decomposition and the family predicates built on it.
//!
//! `Cycles(G)` is taken to be the set of non-bridge edges, `Forest(G)` the
//! bridges. On pseudoforests this is exactly the unique cycle of every
//! unicyclic component.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Components, Edge, Graph, Vertex};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CycleForestDecomposition {
    cycle_edges: Vec<Edge>,
    forest_edges: Vec<Edge>,
    on_cycle: Vec<bool>,
}

impl CycleForestDecomposition {
    pub fn cycle_edges(&self) -> &[Edge] {
        &self.cycle_edges
    }

    pub fn forest_edges(&self) -> &[Edge] {
        &self.forest_edges
    }

    pub fn cycle_vertices(&self) -> Vec<Vertex> {
        (1..=self.on_cycle.len() as Vertex)
            .filter(|&v| self.is_cycle_vertex(v))
            .collect()
    }

    pub fn is_cycle_vertex(&self, v: Vertex) -> bool {
        self.on_cycle[v as usize - 1]
    }

    pub fn is_cycle_edge(&self, e: Edge) -> bool {
        self.cycle_edges.binary_search(&e).is_ok()
    }

    pub fn is_forest_edge(&self, e: Edge) -> bool {
        self.forest_edges.binary_search(&e).is_ok()
    }

    /// `Cycles(G)` as a spanning subgraph.
    pub fn cycles_graph(&self, g: &Graph) -> Graph {
        Graph::from_sorted(g.order(), self.cycle_edges.clone())
    }

    /// `Forest(G)` on the full vertex set.
    pub fn forest_graph(&self, g: &Graph) -> Graph {
        Graph::from_sorted(g.order(), self.forest_edges.clone())
    }
}

/// Splits `E(G)` into cycle edges and bridges; valid for every graph.
pub fn decompose(g: &Graph) -> CycleForestDecomposition {
    let bridge = bridges(g);
    let mut cycle_edges = Vec::new();
    let mut forest_edges = Vec::new();
    let mut on_cycle = vec![false; g.order()];
    for (&e, &is_bridge) in g.edges().iter().zip(&bridge) {
        if is_bridge {
            forest_edges.push(e);
        } else {
            on_cycle[e.lo() as usize - 1] = true;
            on_cycle[e.hi() as usize - 1] = true;
            cycle_edges.push(e);
        }
    }
    CycleForestDecomposition {
        cycle_edges,
        forest_edges,
        on_cycle,
    }
}

/// [`decompose`] restricted to pseudoforests.
pub fn decompose_strict(g: &Graph) -> Result<CycleForestDecomposition> {
    if !is_pseudoforest(g) {
        return Err(Error::NotPseudoforest);
    }
    Ok(decompose(g))
}

/// `bridge[i]` tells whether `g.edges()[i]` is a bridge. Iterative low-link.
fn bridges(g: &Graph) -> Vec<bool> {
    let n = g.order();
    let edges = g.edges();
    // Incidence lists by edge index so parallel traversal of the tree edge is
    // recognised by index rather than by endpoint.
    let mut incident: Vec<Vec<(Vertex, usize)>> = vec![Vec::new(); n + 1];
    for (i, e) in edges.iter().enumerate() {
        incident[e.lo() as usize].push((e.hi(), i));
        incident[e.hi() as usize].push((e.lo(), i));
    }
    let mut disc = vec![0usize; n + 1];
    let mut low = vec![0usize; n + 1];
    let mut bridge = vec![false; edges.len()];
    let mut time = 0;
    // (vertex, edge used to enter it, next incidence position)
    let mut stack: Vec<(Vertex, usize, usize)> = Vec::new();
    for root in 1..=n as Vertex {
        if disc[root as usize] != 0 {
            continue;
        }
        time += 1;
        disc[root as usize] = time;
        low[root as usize] = time;
        stack.push((root, usize::MAX, 0));
        while let Some(&mut (v, via, ref mut pos)) = stack.last_mut() {
            if let Some(&(w, idx)) = incident[v as usize].get(*pos) {
                *pos += 1;
                if idx == via {
                    continue;
                }
                if disc[w as usize] == 0 {
                    time += 1;
                    disc[w as usize] = time;
                    low[w as usize] = time;
                    stack.push((w, idx, 0));
                } else {
                    low[v as usize] = low[v as usize].min(disc[w as usize]);
                }
            } else {
                stack.pop();
                if let Some(&(parent, _, _)) = stack.last() {
                    low[parent as usize] = low[parent as usize].min(low[v as usize]);
                    if low[v as usize] > disc[parent as usize] {
                        bridge[via] = true;
                    }
                }
            }
        }
    }
    bridge
}

/// Per-component `(order, size)`, indexed like [`Graph::components`].
pub(crate) fn component_sizes(g: &Graph, comps: &Components) -> Vec<(usize, usize)> {
    let mut sizes: Vec<(usize, usize)> = comps.parts().iter().map(|p| (p.len(), 0)).collect();
    for e in g.edges() {
        sizes[comps.of(e.lo())].1 += 1;
    }
    sizes
}

/// Every component has at most as many edges as vertices.
pub fn is_pseudoforest(g: &Graph) -> bool {
    let comps = g.components();
    component_sizes(g, &comps).iter().all(|&(v, e)| e <= v)
}

pub fn is_forest(g: &Graph) -> bool {
    g.size() + g.kappa() == g.order()
}

pub fn is_tree(g: &Graph) -> bool {
    g.order() >= 1 && g.size() + 1 == g.order() && g.is_connected()
}

/// Connected with `‖G‖ = |G|` (cycle graphs included).
pub fn is_unicyclic(g: &Graph) -> bool {
    g.order() >= 3 && g.size() == g.order() && g.is_connected()
}

pub fn is_cycle_graph(g: &Graph) -> bool {
    is_unicyclic(g) && g.vertices().all(|v| g.degree(v) == 2)
}

/// Number of components with at least as many edges as vertices. Equals
/// `cycles(G)` whenever `c(G) <= 1`.
pub fn cyclic_components(g: &Graph) -> usize {
    let comps = g.components();
    component_sizes(g, &comps)
        .iter()
        .filter(|&&(v, e)| e >= v)
        .count()
}

/// `cycles(G)` for pseudoforests: the number of unicyclic components.
pub fn cycles(g: &Graph) -> Result<usize> {
    if !is_pseudoforest(g) {
        return Err(Error::NotPseudoforest);
    }
    Ok(cyclic_components(g))
}

/// Cyclicity `c(G)`, computed only where it is at most one.
pub fn cyclicity(g: &Graph) -> Result<usize> {
    cycles(g).map(|c| c.min(1))
}

/// `ζ(G) = κ(G) - cycles(G)`, which equals `|G| - ‖G‖` on pseudoforests.
pub fn zeta(g: &Graph) -> Result<usize> {
    let c = cycles(g)?;
    Ok(g.kappa() - c)
}

/// Most specific structural label of a graph.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum FamilyLabel {
    Tree,
    Forest,
    Cycle,
    Unicyclic,
    Pseudoforest,
    Other,
}

impl FamilyLabel {
    pub fn name(self) -> &'static str {
        match self {
            FamilyLabel::Tree => "tree",
            FamilyLabel::Forest => "forest",
            FamilyLabel::Cycle => "cycle",
            FamilyLabel::Unicyclic => "unicyclic",
            FamilyLabel::Pseudoforest => "pseudoforest",
            FamilyLabel::Other => "other",
        }
    }
}

impl fmt::Display for FamilyLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

pub fn classify_family(g: &Graph) -> FamilyLabel {
    let comps = g.components();
    let sizes = component_sizes(g, &comps);
    if sizes.iter().any(|&(v, e)| e > v) {
        return FamilyLabel::Other;
    }
    let cyclic = sizes.iter().filter(|&&(v, e)| e == v).count();
    match (comps.count(), cyclic) {
        (0, _) => FamilyLabel::Forest,
        (1, 0) => FamilyLabel::Tree,
        (_, 0) => FamilyLabel::Forest,
        (1, _) if g.vertices().all(|v| g.degree(v) == 2) => FamilyLabel::Cycle,
        (1, _) => FamilyLabel::Unicyclic,
        _ => FamilyLabel::Pseudoforest,
    }
}

/// Graph families closed under their own kind of 2-switch.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Family {
    Tree,
    Forest,
    Unicyclic,
    Pseudoforest,
    /// All simple graphs.
    Plain,
}

impl Family {
    pub fn contains(self, g: &Graph) -> bool {
        match self {
            Family::Tree => is_tree(g),
            Family::Forest => is_forest(g),
            Family::Unicyclic => is_unicyclic(g),
            Family::Pseudoforest => is_pseudoforest(g),
            Family::Plain => true,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Family::Tree => "tree",
            Family::Forest => "forest",
            Family::Unicyclic => "unicyclic",
            Family::Pseudoforest => "pseudoforest",
            Family::Plain => "plain",
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "t" | "tree" => Ok(Family::Tree),
            "f" | "forest" => Ok(Family::Forest),
            "u" | "unicyclic" => Ok(Family::Unicyclic),
            "p" | "pseudoforest" => Ok(Family::Pseudoforest),
            "plain" | "any" | "g" => Ok(Family::Plain),
            _ => Err(Error::Parse {
                line: 1,
                msg: format!("unknown family {s:?}"),
            }),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(n: usize, e: &[(Vertex, Vertex)]) -> Graph {
        Graph::new(n, e).unwrap()
    }

    fn tadpole() -> Graph {
        g(4, &[(1, 2), (2, 3), (3, 1), (1, 4)])
    }

    #[test]
    fn triangle_with_pendant() {
        let d = decompose(&tadpole());
        assert_eq!(
            d.cycle_edges(),
            &[Edge::new(1, 2), Edge::new(1, 3), Edge::new(2, 3)]
        );
        assert_eq!(d.forest_edges(), &[Edge::new(1, 4)]);
        assert_eq!(d.cycle_vertices(), vec![1, 2, 3]);
    }

    #[test]
    fn tree_and_cycle_extremes() {
        let t = g(5, &[(1, 2), (2, 3), (2, 4), (4, 5)]);
        let d = decompose(&t);
        assert!(d.cycle_edges().is_empty());
        assert_eq!(d.forest_edges(), t.edges());

        let c5 = g(5, &[(1, 2), (2, 3), (3, 4), (4, 5), (5, 1)]);
        let d = decompose(&c5);
        assert!(d.forest_edges().is_empty());
        assert_eq!(d.cycle_vertices(), vec![1, 2, 3, 4, 5]);
    }

    #[test]
    fn bridges_between_cycles_are_forest_edges() {
        // two triangles joined by the bridge 3-4
        let x = g(6, &[(1, 2), (2, 3), (3, 1), (3, 4), (4, 5), (5, 6), (6, 4)]);
        let d = decompose(&x);
        assert_eq!(d.forest_edges(), &[Edge::new(3, 4)]);
        assert_eq!(d.cycle_edges().len(), 6);
        assert_eq!(decompose_strict(&x), Err(Error::NotPseudoforest));
    }

    #[test]
    fn cycles_and_cyclicity() {
        let forest = g(5, &[(1, 2), (3, 4)]);
        assert_eq!(cycles(&forest), Ok(0));
        assert_eq!(cyclicity(&forest), Ok(0));
        assert_eq!(cycles(&tadpole()), Ok(1));
        assert_eq!(cyclicity(&tadpole()), Ok(1));
        let two = g(
            9,
            &[
                (1, 2),
                (2, 3),
                (3, 1),
                (4, 5),
                (5, 6),
                (6, 4),
                (7, 8),
                (8, 9),
            ],
        );
        assert_eq!(cycles(&two), Ok(2));
        assert_eq!(cyclicity(&two), Ok(1));
        let k4 = g(4, &[(1, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4)]);
        assert_eq!(cycles(&k4), Err(Error::NotPseudoforest));
        assert_eq!(cyclic_components(&k4), 1);
    }

    #[test]
    fn zeta_values() {
        assert_eq!(zeta(&tadpole()), Ok(0));
        assert_eq!(zeta(&g(6, &[(1, 2), (3, 4), (5, 6)])), Ok(3));
        let x = g(
            9,
            &[
                (1, 2),
                (2, 3),
                (3, 1),
                (4, 5),
                (5, 6),
                (6, 4),
                (7, 8),
                (8, 9),
            ],
        );
        assert_eq!(zeta(&x), Ok(1));
        assert_eq!(zeta(&x).unwrap(), x.order() - x.size());
    }

    #[test]
    fn family_labels() {
        let c7 = g(7, &[(1, 2), (2, 3), (3, 4), (4, 5), (5, 6), (6, 7), (7, 1)]);
        assert_eq!(classify_family(&c7), FamilyLabel::Cycle);
        assert_eq!(classify_family(&tadpole()), FamilyLabel::Unicyclic);
        let k4 = g(4, &[(1, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4)]);
        assert_eq!(classify_family(&k4), FamilyLabel::Other);
        assert_eq!(classify_family(&g(3, &[(1, 2), (2, 3)])), FamilyLabel::Tree);
        assert_eq!(classify_family(&g(3, &[(1, 2)])), FamilyLabel::Forest);
        assert_eq!(classify_family(&Graph::empty(1)), FamilyLabel::Tree);
        let pf = g(7, &[(1, 2), (2, 3), (3, 1), (4, 5)]);
        assert_eq!(classify_family(&pf), FamilyLabel::Pseudoforest);
    }

    #[test]
    fn family_membership_is_inclusive() {
        let c4 = g(4, &[(1, 2), (2, 3), (3, 4), (4, 1)]);
        assert!(Family::Unicyclic.contains(&c4));
        assert!(Family::Pseudoforest.contains(&c4));
        assert!(!Family::Forest.contains(&c4));
        let path = g(4, &[(1, 2), (2, 3), (3, 4)]);
        assert!(Family::Tree.contains(&path) && Family::Forest.contains(&path));
        assert!(Family::Pseudoforest.contains(&path));
        assert_eq!("u".parse::<Family>(), Ok(Family::Unicyclic));
        assert!("x".parse::<Family>().is_err());
    }
}
