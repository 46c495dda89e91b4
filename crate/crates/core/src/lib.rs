//! Exact search for the graph grabbing game.
//!
//! Two players, Alice first, alternately remove a non-cut vertex of a
//! connected weighted graph and collect its weight; Alice wins with at least
//! half of the total. This crate provides the graph predicates the game
//! depends on, a memoized game-value solver, the constructive strategies for
//! {0,1}-weighted graphs with and without induced fully spiked cycles, and
//! brute-force classification into the families A₂ and H₂.
//!
//! The crate is `no_std` and only needs `alloc`.
#![no_std]

extern crate alloc;

pub mod classify;
pub mod engine;
pub mod error;
pub mod families;
pub mod graph;
pub mod interval;
pub mod strategy;
pub mod vertex_set;
pub mod weights;

/// Vertex ids run from 0 to n − 1.
pub type Vertex = usize;

pub use classify::{in_a2, in_h2, A2Verdict, ClassificationRecord, H2Counterexample};
pub use engine::{alice_wins_optimal, game_value, verify_strategy, GameState, GameValue, Move, Side, Solver, VerificationResult};
pub use error::{Error, IllegalReason, StrategyError};
pub use families::{Parity, SpikedCycleWitness};
pub use graph::{Graph, SubgraphView, MAX_VERTICES};
pub use strategy::Strategy;
pub use vertex_set::VertexSet;
pub use weights::WeightFn;
