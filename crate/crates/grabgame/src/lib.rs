//! File formats, scans, verification suites and the play service for the
//! graph grabbing game. Game logic lives in `grabgame_core`.

pub mod data;
pub mod doc;
pub mod graph6;
pub mod input;
pub mod play;
pub mod report;
pub mod scan;
pub mod server;
pub mod session;
pub mod verify;

pub use doc::{emit_weighted_doc, parse_weighted_doc, WeightedGraphDoc};
pub use graph6::{emit_graph6, parse_graph6};
