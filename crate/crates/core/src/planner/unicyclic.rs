use std::collections::VecDeque;

use crate::error::{Error, Result};
use crate::graph::{Edge, Graph, Vertex};
use crate::structure::{decompose, is_cycle_graph, is_unicyclic, CycleForestDecomposition, Family};
use crate::switch::SwitchMatrix;

use super::forest::{find_shared_leaf, forest_steps};
use super::{invert_steps, SwitchSequence};

/// Which of the two graphs a switch was applied to.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Side {
    First,
    Second,
}

/// A vertex that is a leaf in both graphs with the same neighbor, if any.
pub fn shared_leaf(g: &Graph, h: &Graph) -> Option<Vertex> {
    find_shared_leaf(g, h).map(|(l, _)| l)
}

/// u-switch on `u` whose image contains the edge `{leaf, target}`.
pub fn leaf_move(u: &Graph, leaf: Vertex, target: Vertex) -> Result<SwitchMatrix> {
    if !is_unicyclic(u) {
        return Err(Error::NotUnicyclic);
    }
    if !u.contains_vertex(leaf) || !u.contains_vertex(target) {
        return Err(Error::InvalidLeafMove {
            leaf,
            target,
            reason: "vertex outside the graph",
        });
    }
    leaf_move_in(u, &decompose(u), leaf, target)
}

/// Works on any graph whose non-isolated part is unicyclic.
fn leaf_move_in(
    g: &Graph,
    dec: &CycleForestDecomposition,
    leaf: Vertex,
    target: Vertex,
) -> Result<SwitchMatrix> {
    let invalid = |reason| {
        Err(Error::InvalidLeafMove {
            leaf,
            target,
            reason,
        })
    };
    if g.degree(leaf) != 1 {
        return invalid("leaf does not have degree 1");
    }
    let nb = g.neighbors(leaf).next().unwrap();
    if target == leaf || target == nb {
        return invalid("target is the leaf or its neighbor");
    }
    if g.degree(target) < 2 {
        return invalid("target has degree below 2");
    }
    let nb_on_cycle = dec.is_cycle_vertex(nb);
    let target_on_cycle = dec.is_cycle_vertex(target);

    let witness = if !nb_on_cycle && target_on_cycle {
        // w is a cycle neighbor of the target not adjacent to nb
        g.neighbors(target)
            .find(|&w| w != nb && dec.is_cycle_edge(Edge::new(target, w)) && !g.has_edge(nb, w))
    } else if nb_on_cycle && target_on_cycle && g.degree(target) == 2 {
        return Err(Error::CaseNotCovered {
            leaf,
            neighbor: nb,
            target,
        });
    } else {
        // Every path from the leaf to w runs nb ... target w.
        let near = reachable_avoiding(g, nb, target);
        g.neighbors(target).find(|&w| !near[w as usize])
    };
    let w = witness.ok_or(Error::NoWitness { leaf, target })?;
    let m = SwitchMatrix::new(leaf, nb, target, w);
    debug_assert!(m.is_interchangeable(g));
    Ok(m)
}

/// `seen[x]` tells whether `x` is reachable from `from` in `g - avoid`.
fn reachable_avoiding(g: &Graph, from: Vertex, avoid: Vertex) -> Vec<bool> {
    let mut seen = vec![false; g.order() + 1];
    seen[from as usize] = true;
    seen[avoid as usize] = true;
    let mut queue = VecDeque::from([from]);
    while let Some(x) = queue.pop_front() {
        for y in g.neighbors(x) {
            if !seen[y as usize] {
                seen[y as usize] = true;
                queue.push_back(y);
            }
        }
    }
    seen[avoid as usize] = false;
    seen
}

/// One u-switch, on either graph, after which the two share a leaf.
pub fn make_shared_leaf(u: &Graph, u2: &Graph) -> Result<(Side, SwitchMatrix)> {
    if !is_unicyclic(u) || !is_unicyclic(u2) {
        return Err(Error::NotUnicyclic);
    }
    if u.degree_function() != u2.degree_function() {
        return Err(Error::DegreeMismatch);
    }
    if is_cycle_graph(u) {
        return Err(Error::IsCycle);
    }
    shared_leaf_step(u, u2)
}

fn shared_leaf_step(u: &Graph, u2: &Graph) -> Result<(Side, SwitchMatrix)> {
    if find_shared_leaf(u, u2).is_some() {
        return Err(Error::AlreadyShared);
    }
    let leaf = u
        .vertices()
        .find(|&v| u.degree(v) == 1)
        .ok_or(Error::IsCycle)?;
    let here = u.neighbors(leaf).next().unwrap();
    let there = u2.neighbors(leaf).next().unwrap();
    match leaf_move_in(u, &decompose(u), leaf, there) {
        Ok(m) => Ok((Side::First, m)),
        // The target sits on the cycle of `u` with degree 2, so it is off the
        // cycle of `u2` and `here` has degree >= 3: move the leaf in `u2`.
        Err(Error::CaseNotCovered { .. }) => {
            leaf_move_in(u2, &decompose(u2), leaf, here).map(|m| (Side::Second, m))
        }
        Err(e) => Err(e),
    }
}

/// u-switch on the cycle `c` whose image is a cycle containing `{u, v}`.
pub fn cycle_shared_edge(c: &Graph, u: Vertex, v: Vertex) -> Result<SwitchMatrix> {
    if !is_cycle_graph(c) {
        return Err(Error::NotCycle);
    }
    if u == v || c.has_edge(u, v) {
        return Err(Error::Adjacent(u, v));
    }
    if !c.contains_vertex(u) || !c.contains_vertex(v) {
        return Err(Error::NotCycle);
    }
    Ok(cycle_shared_edge_in(c, u, v))
}

/// Walk from `u` through its smallest neighbor `x` to `v`; `w` is the
/// neighbor of `v` past the walk.
fn cycle_shared_edge_in(c: &Graph, u: Vertex, v: Vertex) -> SwitchMatrix {
    let x = c.neighbors(u).next().unwrap();
    let (mut prev, mut cur) = (u, x);
    while cur != v {
        let next = c.neighbors(cur).find(|&y| y != prev).unwrap();
        prev = cur;
        cur = next;
    }
    let w = c.neighbors(v).find(|&y| y != prev).unwrap();
    SwitchMatrix::new(u, x, v, w)
}

/// u-switch sequence between two labeled cycles on the same vertex set.
pub fn cycle_transition(c: &Graph, c2: &Graph) -> Result<SwitchSequence> {
    if !is_cycle_graph(c) || !is_cycle_graph(c2) {
        return Err(Error::NotCycle);
    }
    if c.order() != c2.order() {
        return Err(Error::DegreeMismatch);
    }
    Ok(SwitchSequence::new(
        Family::Unicyclic,
        c.clone(),
        cycle_steps(c, c2),
    ))
}

/// Isolated vertices allowed; the rest of each graph is one cycle on the
/// same vertices.
fn cycle_steps(c: &Graph, c2: &Graph) -> Vec<SwitchMatrix> {
    if c == c2 {
        return Vec::new();
    }
    let mut steps = Vec::new();
    let mut cur = c.clone();
    if !cur.edges().iter().any(|&e| c2.contains_edge(e)) {
        let u = cur.vertices().find(|&v| !cur.is_isolated(v)).unwrap();
        let v = c2.neighbors(u).next().unwrap();
        let m = cycle_shared_edge_in(&cur, u, v);
        cur = m.apply(&cur);
        steps.push(m);
    }
    let e = *cur
        .edges()
        .iter()
        .find(|&&e| c2.contains_edge(e))
        .expect("a shared edge exists");
    // The paths C - e and C' - e have the ends of e as their only leaves, so
    // no intermediate path contains e and re-adding it gives a cycle.
    steps.extend(forest_steps(&cur.without_edge(e), &c2.without_edge(e)));
    steps
}

fn support_is_cycle(g: &Graph) -> bool {
    g.vertices().all(|v| matches!(g.degree(v), 0 | 2))
}

/// u-switch sequence from `u` to `u2`, both unicyclic with equal labeled
/// degrees.
pub fn unicyclic_transition(u: &Graph, u2: &Graph) -> Result<SwitchSequence> {
    if !is_unicyclic(u) || !is_unicyclic(u2) {
        return Err(Error::NotUnicyclic);
    }
    if u.degree_function() != u2.degree_function() {
        return Err(Error::DegreeMismatch);
    }
    let steps = unicyclic_steps(u, u2)?;
    Ok(SwitchSequence::new(Family::Unicyclic, u.clone(), steps))
}

/// Shared-leaf induction on graphs whose non-isolated parts are unicyclic.
/// Switches applied to the second graph are inverted and appended in
/// reverse.
pub(crate) fn unicyclic_steps(u: &Graph, u2: &Graph) -> Result<Vec<SwitchMatrix>> {
    let mut a = u.clone();
    let mut b = u2.clone();
    let mut forward = Vec::new();
    let mut backward = Vec::new();
    while a != b {
        if support_is_cycle(&a) {
            forward.extend(cycle_steps(&a, &b));
            break;
        }
        if let Some((l, v)) = find_shared_leaf(&a, &b) {
            let e = Edge::new(l, v);
            a = a.without_edge(e);
            b = b.without_edge(e);
            continue;
        }
        match shared_leaf_step(&a, &b)? {
            (Side::First, m) => {
                a = m.apply(&a);
                forward.push(m);
            }
            (Side::Second, m) => {
                b = m.apply(&b);
                backward.push(m);
            }
        }
    }
    forward.extend(invert_steps(&backward));
    Ok(forward)
}
