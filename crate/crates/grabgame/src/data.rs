//! Bundled graph lists.

use grabgame_core::Graph;

use crate::graph6::parse_graph6;

/// All 853 connected graphs on 7 vertices up to isomorphism, one graph6 line each.
pub const CONNECTED7_G6: &str = include_str!("../data/connected7.g6");

pub fn connected7() -> Vec<Graph> {
    CONNECTED7_G6
        .lines()
        .filter(|l| !l.trim().is_empty())
        .map(|l| parse_graph6(l).expect("bundled graph6 is valid"))
        .collect()
}
