use thiserror::Error;

use crate::characterization::DecisionReport;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("the empty graph has no complementary prism")]
    Empty,
}

/// Position of a parse failure. Lines are 1-based; `byte` is the 0-based
/// offset into the whole input.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}, byte {byte}: {message}")]
pub struct ParseError {
    pub line: usize,
    pub byte: usize,
    pub message: String,
}

impl ParseError {
    pub(crate) fn new(line: usize, byte: usize, message: impl Into<String>) -> Self {
        ParseError {
            line,
            byte,
            message: message.into(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RoleError {
    #[error("assignment covers {got} vertices, graph has {expected}")]
    Partial { expected: usize, got: usize },
    #[error("role {role} at vertex {vertex} is outside 1..={r}")]
    RoleOutOfRange { vertex: usize, role: u8, r: usize },
    #[error("role {0} is assigned to no vertex")]
    NotSurjective(u8),
    #[error("role count {0} is not supported (must be 1..=64)")]
    RoleCount(usize),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum WitnessError {
    /// A builder's precondition does not hold; `clause` names the first one
    /// that failed.
    #[error("{construction}: hypothesis failed: {clause}")]
    Hypothesis {
        construction: &'static str,
        clause: &'static str,
    },
    /// The labeling was emitted but does not verify. Always a defect.
    #[error("{construction}: labeling does not verify ({detail})")]
    Unverified {
        construction: &'static str,
        detail: String,
    },
    #[error("the prism has no 3-role assignment: {0}")]
    NoAssignment(DecisionReport),
    #[error(transparent)]
    Graph(#[from] GraphError),
}
