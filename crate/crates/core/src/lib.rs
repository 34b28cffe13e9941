//! 2-switch calculus on labeled graphs with a fixed degree function.
//!
//! The crate covers four layers:
//!
//! * [`graph`] and [`structure`]: simple graphs on `[n]`, components, and the
//!   split of the edge set into cycle edges and bridges.
//! * [`switch`] and [`characterize`]: the 2-switch itself plus deciders for
//!   when it keeps a tree, unicyclic graph or pseudoforest in its family.
//! * [`planner`]: explicit switch sequences between two members of the same
//!   family that never leave that family.
//! * [`params`] and [`oracle`]: exact graph parameters and exhaustive
//!   enumeration used to check the other layers.
//! * [`io`] and [`random`]: edge-list and sequence JSON formats, and random
//!   generators for property tests.

pub mod characterize;
pub mod error;
pub mod graph;
pub mod io;
pub mod oracle;
pub mod params;
pub mod planner;
pub mod random;
pub mod structure;
pub mod switch;

pub use error::{Error, Result};
pub use graph::{DegreeFunction, Edge, Graph, Vertex};
pub use oracle::{build_metagraph, enumerate_family, Metagraph};
pub use params::{evaluate, ParameterId};
pub use planner::{verify_sequence, SwitchSequence, VerificationReport};
pub use structure::{classify_family, decompose, CycleForestDecomposition, Family, FamilyLabel};
pub use switch::{classify_switch_direct, SwitchClass, SwitchMatrix, SwitchTag};
