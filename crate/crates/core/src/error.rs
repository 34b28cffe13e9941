use crate::graph::Vertex;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("loop edge at vertex {0}")]
    LoopEdge(Vertex),
    #[error("edge {{{u},{v}}} has an endpoint outside [1, {n}]")]
    VertexOutOfRange { u: Vertex, v: Vertex, n: usize },
    #[error("duplicate edge {{{0},{1}}}")]
    DuplicateEdge(Vertex, Vertex),

    #[error("graph is not a pseudoforest")]
    NotPseudoforest,
    #[error("graph is not unicyclic")]
    NotUnicyclic,
    #[error("graph is not a forest")]
    NotForest,
    #[error("graph is not a tree")]
    NotTree,
    #[error("graph is not a cycle")]
    NotCycle,
    #[error("graph is a cycle")]
    IsCycle,
    #[error("switch matrix is trivial for this graph")]
    TrivialSwitch,
    #[error("graphs do not have the same labeled degree function")]
    DegreeMismatch,

    #[error("leaf {leaf} cannot be moved to {target}: {reason}")]
    InvalidLeafMove {
        leaf: Vertex,
        target: Vertex,
        reason: &'static str,
    },
    #[error("no lemma covers moving leaf {leaf} (neighbor {neighbor}) to {target}")]
    CaseNotCovered {
        leaf: Vertex,
        neighbor: Vertex,
        target: Vertex,
    },
    #[error("no witness vertex found for leaf {leaf} and target {target}")]
    NoWitness { leaf: Vertex, target: Vertex },
    #[error("graphs already share a leaf")]
    AlreadyShared,
    #[error("vertices {0} and {1} are adjacent")]
    Adjacent(Vertex, Vertex),
    #[error("pseudoforest has a tree component (cycles < components)")]
    ZetaPositive,
    #[error("pseudoforest has no tree component (cycles = components)")]
    ZetaZero,
    #[error("every tree component is an isolated vertex; no switch can break the cycles")]
    IsolatedTreesOnly,

    #[error("order {n} exceeds the exact-computation budget of {limit}")]
    BudgetExceeded { n: usize, limit: usize },
    #[error("parameter {0} is undefined for this graph")]
    UndefinedParameter(&'static str),
    #[error("degree function is not realizable in the family")]
    EmptyFamily,
    #[error("order {n} exceeds the enumeration bound of {limit}")]
    BoundExceeded { n: usize, limit: usize },
    #[error("graph is not a node of the metagraph")]
    NodeNotFound,

    #[error("parse error on line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("invalid JSON: {0}")]
    Json(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

impl Error {
    /// Stable kebab-case name of the variant, for machine-readable output.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::LoopEdge(_) => "loop-edge",
            Error::VertexOutOfRange { .. } => "vertex-out-of-range",
            Error::DuplicateEdge(..) => "duplicate-edge",
            Error::NotPseudoforest => "not-pseudoforest",
            Error::NotUnicyclic => "not-unicyclic",
            Error::NotForest => "not-forest",
            Error::NotTree => "not-tree",
            Error::NotCycle => "not-cycle",
            Error::IsCycle => "is-cycle",
            Error::TrivialSwitch => "trivial-switch",
            Error::DegreeMismatch => "degree-mismatch",
            Error::InvalidLeafMove { .. } => "invalid-leaf-move",
            Error::CaseNotCovered { .. } => "case-not-covered",
            Error::NoWitness { .. } => "no-witness",
            Error::AlreadyShared => "already-shared",
            Error::Adjacent(..) => "adjacent",
            Error::ZetaPositive => "zeta-positive",
            Error::ZetaZero => "zeta-zero",
            Error::IsolatedTreesOnly => "isolated-trees-only",
            Error::BudgetExceeded { .. } => "budget-exceeded",
            Error::UndefinedParameter(_) => "undefined-parameter",
            Error::EmptyFamily => "empty-family",
            Error::BoundExceeded { .. } => "bound-exceeded",
            Error::NodeNotFound => "node-not-found",
            Error::Parse { .. } => "parse",
            Error::Json(_) => "json",
        }
    }
}
