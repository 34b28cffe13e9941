//! Structural deciders for t-, u- and p-switches that work from the edge
//! placement in the cycle/forest decomposition instead of classifying the
//! image graph.

use crate::error::{Error, Result};
use crate::graph::{Edge, Graph, Vertex};
use crate::structure::{self, decompose, CycleForestDecomposition};
use crate::switch::SwitchMatrix;

/// Decides whether `m` keeps the tree containing `a, b, c, d` a tree.
///
/// Removing `ab` and `cd` leaves three pieces; the image is a tree iff the
/// tree path from `a` to `c` passes through exactly one of `b`, `d`.
fn keeps_tree(g: &Graph, m: SwitchMatrix) -> bool {
    let path = g.path(m.a, m.c).expect("a and c lie in one tree");
    let has = |x: Vertex| path.contains(&x);
    has(m.b) != has(m.d)
}

/// t-switch test on a tree.
pub fn is_t_switch(m: SwitchMatrix, tree: &Graph) -> Result<bool> {
    if !structure::is_tree(tree) {
        return Err(Error::NotTree);
    }
    if m.is_trivial(tree) {
        return Err(Error::TrivialSwitch);
    }
    Ok(keeps_tree(tree, m))
}

/// Whether `m`, with both edges on the cycle of a unicyclic graph, splits
/// that cycle in two. Walks the cycle from `b` away from `a`: meeting `d`
/// before `c` means the new edges close two separate cycles.
fn splits_cycle(g: &Graph, dec: &CycleForestDecomposition, m: SwitchMatrix) -> bool {
    let (mut prev, mut cur) = (m.a, m.b);
    loop {
        if cur == m.c {
            return false;
        }
        if cur == m.d {
            return true;
        }
        let next = g
            .neighbors(cur)
            .find(|&y| y != prev && dec.is_cycle_edge(Edge::new(cur, y)))
            .expect("cycle vertices have two cycle neighbors");
        prev = cur;
        cur = next;
    }
}

/// Which of the three placements of a u-switch's edges applies.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum UPlacement {
    BothForest,
    Mixed,
    BothCycle,
}

pub fn u_placement(m: SwitchMatrix, dec: &CycleForestDecomposition) -> UPlacement {
    let [e1, e2] = m.removed();
    match (dec.is_cycle_edge(e1), dec.is_cycle_edge(e2)) {
        (false, false) => UPlacement::BothForest,
        (true, true) => UPlacement::BothCycle,
        _ => UPlacement::Mixed,
    }
}

/// Decides whether a nontrivial switch on a unicyclic graph is a u-switch.
///
/// Both edges in `Forest(U)`: u-switch iff a t-switch on `U - e` for a cycle
/// edge `e`. One edge on the cycle: always. Both on the cycle: iff it does
/// not split the cycle.
pub fn classify_u_switch(m: SwitchMatrix, u: &Graph) -> Result<bool> {
    if !structure::is_unicyclic(u) {
        return Err(Error::NotUnicyclic);
    }
    if m.is_trivial(u) {
        return Err(Error::TrivialSwitch);
    }
    let dec = decompose(u);
    Ok(match u_placement(m, &dec) {
        UPlacement::BothForest => {
            let e = dec.cycle_edges()[0];
            keeps_tree(&u.without_edge(e), m)
        }
        UPlacement::Mixed => true,
        UPlacement::BothCycle => !splits_cycle(u, &dec, m),
    })
}

/// Placement of a switch's edges in a pseudoforest.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PPlacement {
    /// Both in `Forest(U)` of one unicyclic `U`, in different trees of
    /// `Forest(U)`.
    SplitForestOfOneUnicyclic,
    /// Both in the same tree of `Forest(U)` for a unicyclic `U`.
    SharedForestOfOneUnicyclic,
    /// In `Forest(U)` and `Forest(U')` of two different unicyclic components.
    ForestsOfTwoUnicyclic,
    /// Every remaining placement.
    Other,
}

pub fn p_placement(m: SwitchMatrix, g: &Graph, dec: &CycleForestDecomposition) -> PPlacement {
    let [e1, e2] = m.removed();
    if dec.is_cycle_edge(e1) || dec.is_cycle_edge(e2) {
        return PPlacement::Other;
    }
    let comps = g.components();
    let sizes = structure::component_sizes(g, &comps);
    let (k1, k2) = (comps.of(m.a), comps.of(m.c));
    let unicyclic = |k: usize| sizes[k].0 == sizes[k].1;
    if !unicyclic(k1) || !unicyclic(k2) {
        return PPlacement::Other;
    }
    if k1 != k2 {
        return PPlacement::ForestsOfTwoUnicyclic;
    }
    let forest = dec.forest_graph(g).components();
    if forest.same(m.a, m.c) {
        PPlacement::SharedForestOfOneUnicyclic
    } else {
        PPlacement::SplitForestOfOneUnicyclic
    }
}

/// Decides whether a nontrivial switch on a pseudoforest is a p-switch.
///
/// Edges in different trees of `Forest(U)`: iff a t-switch on `U - e`.
/// Edges in `Forest(U)` and `Forest(U')`: exactly one of `(a b; c d)` and
/// `(a b; d c)` qualifies; settled by switching the two components. Edges in
/// one tree of `Forest(U)`: settled by switching `U`, since the switch may
/// close a second cycle through the tree's root. Everything else: always.
pub fn classify_p_switch(m: SwitchMatrix, g: &Graph) -> Result<bool> {
    if !structure::is_pseudoforest(g) {
        return Err(Error::NotPseudoforest);
    }
    if m.is_trivial(g) {
        return Err(Error::TrivialSwitch);
    }
    let dec = decompose(g);
    Ok(match p_placement(m, g, &dec) {
        PPlacement::SplitForestOfOneUnicyclic => {
            let comps = g.components();
            let k = comps.of(m.a);
            let e = *dec
                .cycle_edges()
                .iter()
                .find(|e| comps.of(e.lo()) == k)
                .expect("unicyclic component has a cycle edge");
            keeps_tree(&g.without_edge(e), m)
        }
        PPlacement::SharedForestOfOneUnicyclic | PPlacement::ForestsOfTwoUnicyclic => {
            let comps = g.components();
            let (k1, k2) = (comps.of(m.a), comps.of(m.c));
            let local = g.edge_subgraph(|e| {
                let k = comps.of(e.lo());
                k == k1 || k == k2
            });
            structure::is_pseudoforest(&m.apply(&local))
        }
        PPlacement::Other => true,
    })
}
