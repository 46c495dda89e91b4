use alloc::string::String;
use core::fmt;

use crate::Vertex;

/// Why a vertex cannot be taken in the current position.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum IllegalReason {
    CutVertex,
    AlreadyTaken,
    OutOfRange,
}

impl fmt::Display for IllegalReason {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            IllegalReason::CutVertex => "vertex is a cut vertex of the current graph",
            IllegalReason::AlreadyTaken => "vertex has already been taken",
            IllegalReason::OutOfRange => "vertex does not exist in this graph",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("vertex count {0} is outside 1..=62")]
    VertexCount(usize),
    #[error("vertex {vertex} is out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: Vertex, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(Vertex),
    #[error("vertex set is empty")]
    EmptyView,
    #[error("induced subgraph is disconnected")]
    Disconnected,
    #[error("vertex {0} is not in the active vertex set")]
    NotActive(Vertex),
    #[error("operation needs at least {needed} vertices, view has {got}")]
    TooSmall { needed: usize, got: usize },
    #[error("graph has {n} vertices; this operation supports at most {limit}")]
    TooLarge { n: usize, limit: usize },
    #[error("weight vector has length {got}, graph has {expected} vertices")]
    WeightLength { expected: usize, got: usize },
    #[error("weight {weight} at vertex {vertex} is not in {{0,1}}")]
    NonBinaryWeight { vertex: Vertex, weight: i64 },
    #[error("the game is over")]
    GameOver,
    #[error("illegal move {vertex}: {reason}")]
    IllegalMove { vertex: Vertex, reason: IllegalReason },
    #[error("{0}")]
    Shape(&'static str),
}

/// Failure of a strategy to produce a move.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum StrategyError {
    /// The position does not satisfy the strategy's applicability condition.
    #[error("strategy not applicable: {0}")]
    Precondition(String),
    /// The game so far deviates from what the strategy planned.
    #[error("state inconsistent with plan: {0}")]
    Inconsistent(String),
    #[error(transparent)]
    Engine(#[from] Error),
}

pub type Result<T, E = Error> = core::result::Result<T, E>;
