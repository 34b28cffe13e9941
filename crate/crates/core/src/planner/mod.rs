//! Switch sequences that stay inside one family at every step.
//!
//! Each planner follows a shared-leaf induction: make the two graphs agree on
//! one pendant edge, forget that edge, and continue on what is left. Edges
//! that are forgotten are never touched again, so every switch found for the
//! reduced pair is valid verbatim for the original pair.

mod forest;
mod pseudoforest;
mod unicyclic;

use serde::{Deserialize, Serialize};

use crate::graph::{DegreeFunction, Graph};
use crate::structure::{classify_family, Family, FamilyLabel};
use crate::switch::SwitchMatrix;

pub use forest::forest_transition;
pub use pseudoforest::{break_to_forest, glue_to_unicyclic, pseudoforest_transition};
pub use unicyclic::{
    cycle_shared_edge, cycle_transition, leaf_move, make_shared_leaf, shared_leaf,
    unicyclic_transition, Side,
};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SwitchSequence {
    pub family: Family,
    pub start: Graph,
    pub steps: Vec<SwitchMatrix>,
}

impl SwitchSequence {
    pub fn new(family: Family, start: Graph, steps: Vec<SwitchMatrix>) -> Self {
        SwitchSequence {
            family,
            start,
            steps,
        }
    }

    /// The empty sequence `(∅)` at `start`.
    pub fn empty(family: Family, start: Graph) -> Self {
        Self::new(family, start, Vec::new())
    }

    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    /// Start graph followed by every image, `len() + 1` graphs in all.
    pub fn graphs(&self) -> Vec<Graph> {
        let mut out = Vec::with_capacity(self.steps.len() + 1);
        out.push(self.start.clone());
        for m in &self.steps {
            let next = m.apply(out.last().unwrap());
            out.push(next);
        }
        out
    }

    pub fn end(&self) -> Graph {
        self.steps
            .iter()
            .fold(self.start.clone(), |g, m| m.apply(&g))
    }

    /// The sequence walked backwards: starts at [`end`](Self::end) and
    /// applies the inverses in reverse order.
    pub fn reversed(&self) -> SwitchSequence {
        SwitchSequence::new(self.family, self.end(), invert_steps(&self.steps))
    }
}

pub(crate) fn invert_steps(steps: &[SwitchMatrix]) -> Vec<SwitchMatrix> {
    steps.iter().rev().map(|m| m.inverse()).collect()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum ViolationKind {
    StartOutsideFamily { label: FamilyLabel },
    TrivialStep,
    LeftFamily { label: FamilyLabel },
    DegreeChanged,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Violation {
    /// Index of the offending step; 0 for a bad start graph.
    pub index: usize,
    #[serde(flatten)]
    pub kind: ViolationKind,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerificationReport {
    /// Steps replayed successfully.
    pub checked: usize,
    /// Last graph reached before stopping.
    pub final_graph: Graph,
    pub violation: Option<Violation>,
}

impl VerificationReport {
    pub fn is_ok(&self) -> bool {
        self.violation.is_none()
    }
}

/// Replays `seq`, stopping at the first step that is trivial, leaves the
/// family, or changes a vertex degree.
pub fn verify_sequence(seq: &SwitchSequence) -> VerificationReport {
    let mut cur = seq.start.clone();
    let degrees: DegreeFunction = cur.degree_function();
    let stop = |cur: Graph, checked: usize, index: usize, kind| VerificationReport {
        checked,
        final_graph: cur,
        violation: Some(Violation { index, kind }),
    };
    if !seq.family.contains(&cur) {
        let label = classify_family(&cur);
        return stop(cur, 0, 0, ViolationKind::StartOutsideFamily { label });
    }
    for (i, m) in seq.steps.iter().enumerate() {
        if !m.is_interchangeable(&cur) {
            return stop(cur, i, i, ViolationKind::TrivialStep);
        }
        let next = m.apply(&cur);
        if next.degree_function() != degrees {
            return stop(cur, i, i, ViolationKind::DegreeChanged);
        }
        if !seq.family.contains(&next) {
            let label = classify_family(&next);
            return stop(next, i, i, ViolationKind::LeftFamily { label });
        }
        cur = next;
    }
    VerificationReport {
        checked: seq.steps.len(),
        final_graph: cur,
        violation: None,
    }
}
