//! Complementary prisms and 3-role assignments.
//!
//! A role assignment maps the vertices of a graph onto the vertices of a
//! (possibly looped) role graph so that the roles seen in each vertex's
//! neighbourhood are exactly the neighbours of its own role. This crate
//! decides in `O(n²)` whether the complementary prism `G·Ḡ` admits one with
//! three roles, builds explicit witnesses, and checks both against an
//! exhaustive search.

pub mod census;
pub mod characterization;
pub mod error;
pub mod format;
pub mod graph;
pub mod prism;
pub mod role;
pub mod solver;
pub mod witness;

pub use characterization::{decide, DecisionReport, Side, Verdict};
pub use error::{GraphError, ParseError, RoleError, WitnessError};
pub use format::Format;
pub use graph::{Graph, VertexSet};
pub use prism::{complementary_prism, PrismGraph};
pub use role::{Assignment, RoleGraph};
pub use solver::{brute_force_solve, SolveOutcome};
pub use witness::{construct, construct_with_budget, WitnessTrace};
