//! Named graph families and detection of induced fully spiked cycles.

use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::graph::{Graph, SubgraphView, MAX_VERTICES};
use crate::vertex_set::VertexSet;
use crate::weights::WeightFn;
use crate::Vertex;

pub fn path(n: usize) -> Result<Graph> {
    let edges: Vec<_> = (1..n).map(|v| (v - 1, v)).collect();
    Graph::new(n, &edges)
}

pub fn cycle(n: usize) -> Result<Graph> {
    if n < 3 {
        return Err(Error::TooSmall { needed: 3, got: n });
    }
    let edges: Vec<_> = (0..n).map(|v| (v, (v + 1) % n)).collect();
    Graph::new(n, &edges)
}

pub fn complete(n: usize) -> Result<Graph> {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            edges.push((u, v));
        }
    }
    Graph::new(n, &edges)
}

/// The cycle `C_m` with a pendant leaf on every cycle vertex.
///
/// Ids `0..m` run around the cycle; pendant `m + i` hangs off cycle vertex `i`.
pub fn fully_spiked_cycle(m: usize) -> Result<Graph> {
    if m < 3 {
        return Err(Error::TooSmall { needed: 3, got: m });
    }
    if 2 * m > MAX_VERTICES {
        return Err(Error::VertexCount(2 * m));
    }
    let mut edges: Vec<_> = (0..m).map(|v| (v, (v + 1) % m)).collect();
    edges.extend((0..m).map(|v| (v, v + m)));
    Graph::new(2 * m, &edges)
}

/// Cycle length `m` if `g` is exactly `fully_spiked_cycle(m)` in its canonical labeling.
pub fn canonical_spiked_cycle_length(g: &Graph) -> Option<usize> {
    let m = g.n() / 2;
    if !g.n().is_multiple_of(2) || m < 3 {
        return None;
    }
    (fully_spiked_cycle(m).ok()? == *g).then_some(m)
}

/// Weight 1 on every cycle vertex and 0 on every pendant of a fully spiked odd cycle.
pub fn prop8_weights(g: &Graph) -> Result<WeightFn> {
    match canonical_spiked_cycle_length(g) {
        Some(m) if m % 2 == 1 => {
            let mut w = alloc::vec![0i64; 2 * m];
            w[..m].fill(1);
            WeightFn::binary(w)
        }
        Some(_) => Err(Error::Shape("fully spiked cycle has even length")),
        None => Err(Error::Shape("graph is not a canonically labeled fully spiked cycle")),
    }
}

/// Which cycle lengths a spiked-cycle search accepts.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Parity {
    All,
    Odd,
    Even,
}

impl Parity {
    pub fn accepts(self, m: usize) -> bool {
        match self {
            Parity::All => true,
            Parity::Odd => m % 2 == 1,
            Parity::Even => m.is_multiple_of(2),
        }
    }
}

/// An induced fully spiked cycle inside a host graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpikedCycleWitness {
    /// Cycle vertices in cyclic order.
    pub cycle: Vec<Vertex>,
    /// `pendants[i]` is the private leaf of `cycle[i]`.
    pub pendants: Vec<Vertex>,
}

impl SpikedCycleWitness {
    pub fn len(&self) -> usize {
        self.cycle.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cycle.is_empty()
    }

    pub fn vertices(&self) -> VertexSet {
        self.cycle.iter().chain(&self.pendants).copied().collect()
    }

    /// Checks that the witness vertices induce exactly `C*_m` in `host`,
    /// following the stated cycle order and pendant alignment.
    pub fn is_valid_in(&self, host: &Graph) -> bool {
        let m = self.cycle.len();
        if m < 3 || self.pendants.len() != m {
            return false;
        }
        if self.cycle.iter().chain(&self.pendants).any(|&v| v >= host.n()) {
            return false;
        }
        let all = self.vertices();
        if all.len() != 2 * m {
            return false;
        }
        (0..m).all(|i| {
            let x = self.cycle[i];
            let y = self.pendants[i];
            let expected_x: VertexSet = [self.cycle[(i + 1) % m], self.cycle[(i + m - 1) % m], y].into_iter().collect();
            host.neighbors(x) & all == expected_x && host.neighbors(y) & all == VertexSet::singleton(x)
        })
    }
}

/// Searches `view` for an induced `C*_m` whose cycle length matches `parity`.
///
/// Chordless cycles are scanned in enumeration order; pendants are assigned
/// by backtracking over ascending ids, so the witness is deterministic.
pub fn find_induced_fully_spiked_cycle(view: &SubgraphView<'_>, parity: Parity) -> Option<SpikedCycleWitness> {
    let g = view.graph();
    let active = view.active();
    for cycle in view.chordless_cycles() {
        let m = cycle.len();
        if !parity.accepts(m) || 2 * m > active.len() {
            continue;
        }
        let on_cycle: VertexSet = cycle.iter().copied().collect();
        let off_cycle = active - on_cycle;
        // Candidates for the pendant of x are the vertices whose only cycle neighbor is x.
        let candidates: Vec<VertexSet> = cycle
            .iter()
            .map(|&x| {
                off_cycle
                    .iter()
                    .filter(|&u| g.neighbors(u) & on_cycle == VertexSet::singleton(x))
                    .collect()
            })
            .collect();
        if candidates.iter().any(|c| c.is_empty()) {
            continue;
        }
        let mut chosen = Vec::with_capacity(m);
        if assign_pendants(g, &candidates, &mut chosen) {
            return Some(SpikedCycleWitness { cycle, pendants: chosen });
        }
    }
    None
}

fn assign_pendants(g: &Graph, candidates: &[VertexSet], chosen: &mut Vec<Vertex>) -> bool {
    let i = chosen.len();
    if i == candidates.len() {
        return true;
    }
    let taken: VertexSet = chosen.iter().copied().collect();
    let mut clash = taken;
    for &y in chosen.iter() {
        clash |= g.neighbors(y);
    }
    for y in candidates[i] - clash {
        chosen.push(y);
        if assign_pendants(g, candidates, chosen) {
            return true;
        }
        chosen.pop();
    }
    false
}

pub fn is_cstar_free(view: &SubgraphView<'_>) -> bool {
    find_induced_fully_spiked_cycle(view, Parity::All).is_none()
}

pub fn is_odd_cstar_free(view: &SubgraphView<'_>) -> bool {
    find_induced_fully_spiked_cycle(view, Parity::Odd).is_none()
}
