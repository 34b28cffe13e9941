use crate::error::{Error, Result};
use crate::graph::{Edge, Graph, Vertex};
use crate::structure::{is_forest, is_tree, Family};
use crate::switch::SwitchMatrix;

use super::SwitchSequence;

/// f-switch sequence from `f` to `f2` (t-switches when both are trees).
pub fn forest_transition(f: &Graph, f2: &Graph) -> Result<SwitchSequence> {
    if !is_forest(f) || !is_forest(f2) {
        return Err(Error::NotForest);
    }
    if f.degree_function() != f2.degree_function() {
        return Err(Error::DegreeMismatch);
    }
    let family = if is_tree(f) {
        Family::Tree
    } else {
        Family::Forest
    };
    Ok(SwitchSequence::new(family, f.clone(), forest_steps(f, f2)))
}

/// Smallest vertex that is a leaf with the same neighbor in both graphs.
pub(crate) fn find_shared_leaf(a: &Graph, b: &Graph) -> Option<(Vertex, Vertex)> {
    a.vertices().find_map(|l| {
        if a.degree(l) != 1 || b.degree(l) != 1 {
            return None;
        }
        let v = a.neighbors(l).next()?;
        b.has_edge(l, v).then_some((l, v))
    })
}

/// Core of the forest planner. Both inputs are forests with the same labeled
/// degrees; isolated vertices are allowed and never touched.
///
/// Each round either forgets a shared leaf or performs one switch on the
/// current forest that attaches a leaf of the target to its target neighbor.
pub(crate) fn forest_steps(f: &Graph, f2: &Graph) -> Vec<SwitchMatrix> {
    let mut cur = f.clone();
    let mut goal = f2.clone();
    let mut steps = Vec::new();
    while cur != goal {
        if let Some((l, v)) = find_shared_leaf(&cur, &goal) {
            let e = Edge::new(l, v);
            cur = cur.without_edge(e);
            goal = goal.without_edge(e);
            continue;
        }
        let leaves: Vec<(Vertex, Vertex)> = goal
            .vertices()
            .filter(|&l| goal.degree(l) == 1)
            .map(|l| (l, goal.neighbors(l).next().unwrap()))
            .collect();
        // A leaf whose target neighbor has degree >= 2 can always be moved.
        // Otherwise the goal is a matching and so is the current forest.
        let (l, v) = leaves
            .iter()
            .copied()
            .find(|&(_, v)| goal.degree(v) >= 2)
            .unwrap_or(leaves[0]);
        let m = attach_leaf(&cur, l, v);
        debug_assert!(m.is_interchangeable(&cur));
        cur = m.apply(&cur);
        debug_assert!(is_forest(&cur));
        steps.push(m);
    }
    steps
}

/// The f-switch `(l u; v w)` adding `lv`, where `u` is the neighbor of the
/// leaf `l`. If `v` is in the tree of `l`, `w` is taken off the `l`-`v` path
/// so the tree stays connected; otherwise any neighbor of `v` works.
fn attach_leaf(f: &Graph, l: Vertex, v: Vertex) -> SwitchMatrix {
    let u = f.neighbors(l).next().expect("leaf has a neighbor");
    let w = match f.path(l, v) {
        Some(path) => {
            let before_v = path[path.len() - 2];
            f.neighbors(v)
                .find(|&w| w != before_v)
                .expect("target has a neighbor off the path")
        }
        None => f.neighbors(v).next().expect("target is not isolated"),
    };
    SwitchMatrix::new(l, u, v, w)
}
