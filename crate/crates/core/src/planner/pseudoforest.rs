use crate::error::{Error, Result};
use crate::graph::{Edge, Graph};
use crate::structure::{self, component_sizes, decompose, is_pseudoforest, Family};
use crate::switch::SwitchMatrix;

use super::forest::forest_steps;
use super::unicyclic::unicyclic_steps;
use super::{invert_steps, SwitchSequence};

/// Smallest cycle edge of each cyclic component and smallest edge of each
/// tree component that has one, both listed by smallest vertex.
struct Layout {
    cyclic: Vec<Edge>,
    trees: Vec<Edge>,
}

fn layout(g: &Graph) -> Layout {
    let comps = g.components();
    let sizes = component_sizes(g, &comps);
    let dec = decompose(g);
    let mut cyclic = vec![None; comps.count()];
    let mut trees = vec![None; comps.count()];
    for &e in g.edges() {
        let k = comps.of(e.lo());
        let slot = if sizes[k].0 == sizes[k].1 {
            if !dec.is_cycle_edge(e) {
                continue;
            }
            &mut cyclic[k]
        } else {
            &mut trees[k]
        };
        if slot.is_none() {
            *slot = Some(e);
        }
    }
    Layout {
        cyclic: cyclic.into_iter().flatten().collect(),
        trees: trees.into_iter().flatten().collect(),
    }
}

/// Switch between two edges taken in the given order, `(a b; c d)`.
fn join(e1: Edge, e2: Edge) -> SwitchMatrix {
    let (a, b) = e1.endpoints();
    let (c, d) = e2.endpoints();
    SwitchMatrix::new(a, b, c, d)
}

/// Merges every unicyclic component into one by switching cycle edges of
/// two components at a time. Tree components are left alone.
fn glue_steps(g: &Graph) -> (Vec<SwitchMatrix>, Graph) {
    let mut cur = g.clone();
    let mut steps = Vec::new();
    loop {
        let lay = layout(&cur);
        if lay.cyclic.len() < 2 {
            return (steps, cur);
        }
        let m = join(lay.cyclic[0], lay.cyclic[1]);
        debug_assert!(m.is_interchangeable(&cur));
        cur = m.apply(&cur);
        steps.push(m);
    }
}

/// Glues the cyclic components together, then breaks the remaining cycle
/// with an edge of a tree component.
fn break_steps(g: &Graph) -> Result<(Vec<SwitchMatrix>, Graph)> {
    let (mut steps, mut cur) = glue_steps(g);
    let lay = layout(&cur);
    if let Some(&cycle_edge) = lay.cyclic.first() {
        let tree_edge = *lay.trees.first().ok_or(Error::IsolatedTreesOnly)?;
        let m = join(tree_edge, cycle_edge);
        debug_assert!(m.is_interchangeable(&cur));
        cur = m.apply(&cur);
        steps.push(m);
    }
    Ok((steps, cur))
}

/// p-switch sequence turning a pseudoforest whose components are all
/// unicyclic into a unicyclic graph, in `κ(G) - 1` steps.
pub fn glue_to_unicyclic(g: &Graph) -> Result<SwitchSequence> {
    let cycles = structure::cycles(g)?;
    if cycles < g.kappa() {
        return Err(Error::ZetaPositive);
    }
    let (steps, _) = glue_steps(g);
    Ok(SwitchSequence::new(Family::Pseudoforest, g.clone(), steps))
}

/// p-switch sequence turning a pseudoforest with a tree component into a
/// forest.
pub fn break_to_forest(g: &Graph) -> Result<SwitchSequence> {
    let cycles = structure::cycles(g)?;
    if cycles > 0 && cycles == g.kappa() {
        return Err(Error::ZetaZero);
    }
    let (steps, _) = break_steps(g)?;
    Ok(SwitchSequence::new(Family::Pseudoforest, g.clone(), steps))
}

/// Components with at least one edge.
fn nontrivial_components(g: &Graph) -> usize {
    let comps = g.components();
    comps.parts().iter().filter(|p| p.len() > 1).count()
}

/// p-switch sequence between two pseudoforests with equal labeled degrees.
///
/// Isolated vertices never take part in a switch, so the regime is decided
/// on the rest of the graph: if every nontrivial component is unicyclic both
/// graphs are glued into unicyclic graphs and joined by a u-switch sequence,
/// otherwise both are broken into forests and joined by f-switches. The
/// second graph's normalization is appended reversed and inverted.
pub fn pseudoforest_transition(g: &Graph, h: &Graph) -> Result<SwitchSequence> {
    if !is_pseudoforest(g) || !is_pseudoforest(h) {
        return Err(Error::NotPseudoforest);
    }
    if g.degree_function() != h.degree_function() {
        return Err(Error::DegreeMismatch);
    }
    if g == h {
        return Ok(SwitchSequence::empty(Family::Pseudoforest, g.clone()));
    }
    let all_cyclic = |x: &Graph| structure::cyclic_components(x) == nontrivial_components(x);
    let mut steps;
    let tail;
    if all_cyclic(g) {
        debug_assert!(all_cyclic(h));
        let (sg, gu) = glue_steps(g);
        let (sh, hu) = glue_steps(h);
        steps = sg;
        steps.extend(unicyclic_steps(&gu, &hu)?);
        tail = sh;
    } else {
        let (sg, gf) = break_steps(g)?;
        let (sh, hf) = break_steps(h)?;
        steps = sg;
        steps.extend(forest_steps(&gf, &hf));
        tail = sh;
    }
    steps.extend(invert_steps(&tail));
    Ok(SwitchSequence::new(Family::Pseudoforest, g.clone(), steps))
}
