//! Brute-force membership in A₂ and H₂, small-graph enumeration, and the
//! per-graph record used by the odd-C* conjecture scan.
//!
//! A graph is in A₂ when Alice wins under every {0,1} weighting, and in H₂
//! when every connected induced subgraph on an even number (at least 2) of
//! vertices is in A₂.

use alloc::collections::BTreeSet;
use alloc::vec::Vec;

use crate::engine::PositionTable;
use crate::error::{Error, Result};
use crate::families::{find_induced_fully_spiked_cycle, Parity, SpikedCycleWitness};
use crate::graph::Graph;
use crate::vertex_set::{subsets_of_size, VertexSet};
use crate::weights::WeightFn;
use crate::Vertex;

pub const MAX_A2_VERTICES: usize = 14;
pub const MAX_H2_VERTICES: usize = 12;
pub const MAX_ENUMERATION_VERTICES: usize = 6;
pub const MAX_CANONICAL_VERTICES: usize = 8;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct A2Verdict {
    pub holds: bool,
    /// First weighting (binary counting from all zeros) on which Alice loses.
    pub counterexample: Option<WeightFn>,
}

/// Tries all 2ⁿ {0,1} weightings of `g`.
pub fn in_a2(g: &Graph) -> Result<A2Verdict> {
    if g.n() > MAX_A2_VERTICES {
        return Err(Error::TooLarge { n: g.n(), limit: MAX_A2_VERTICES });
    }
    let table = PositionTable::new(g)?;
    let mut scratch = Vec::with_capacity(table.position_count());
    for mask in 0..1u64 << g.n() {
        let w = WeightFn::from_mask(g.n(), mask);
        if !table.full_value(&w, &mut scratch)?.mover_secures_half() {
            return Ok(A2Verdict { holds: false, counterexample: Some(w) });
        }
    }
    Ok(A2Verdict { holds: true, counterexample: None })
}

/// A losing instance inside the graph: the induced subgraph on `subset`,
/// relabeled in ascending id order, under `weights`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct H2Counterexample {
    pub subset: VertexSet,
    pub weights: WeightFn,
}

/// First even connected induced subgraph (by size, then by mask) outside A₂.
pub fn find_h2_counterexample(g: &Graph) -> Result<Option<H2Counterexample>> {
    if g.n() > MAX_H2_VERTICES {
        return Err(Error::TooLarge { n: g.n(), limit: MAX_H2_VERTICES });
    }
    for size in (2..=g.n()).step_by(2) {
        for subset in subsets_of_size(g.n(), size) {
            if !g.is_connected_set(subset) {
                continue;
            }
            let (sub, _) = g.induced(subset)?.to_graph();
            if let Some(weights) = in_a2(&sub)?.counterexample {
                return Ok(Some(H2Counterexample { subset, weights }));
            }
        }
    }
    Ok(None)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassificationRecord {
    pub graph: Graph,
    pub in_a2: bool,
    pub in_h2: bool,
    pub odd_cstar_free: bool,
    pub h2_counterexample: Option<H2Counterexample>,
    /// An induced fully spiked odd cycle, present iff `odd_cstar_free` is false.
    pub witness: Option<SpikedCycleWitness>,
}

impl ClassificationRecord {
    pub fn n(&self) -> usize {
        self.graph.n()
    }

    /// The conjectured characterization holds for this graph.
    pub fn conjecture_consistent(&self) -> bool {
        self.in_h2 == self.odd_cstar_free
    }
}

/// Full record for a connected graph: A₂ and H₂ verdicts plus the odd-C* test.
pub fn in_h2(g: &Graph) -> Result<ClassificationRecord> {
    if g.n() > MAX_H2_VERTICES {
        return Err(Error::TooLarge { n: g.n(), limit: MAX_H2_VERTICES });
    }
    let a2 = in_a2(g)?;
    let h2_counterexample = find_h2_counterexample(g)?;
    let witness = find_induced_fully_spiked_cycle(&g.view(), Parity::Odd);
    Ok(ClassificationRecord {
        graph: g.clone(),
        in_a2: a2.holds,
        in_h2: h2_counterexample.is_none(),
        odd_cstar_free: witness.is_none(),
        h2_counterexample,
        witness,
    })
}

/// Upper-triangle adjacency bits in column order x(0,1), x(0,2), x(1,2), …,
/// with x(0,1) as the most significant bit. Requires `n ≤ 11`.
fn adjacency_code(g: &Graph, order: &[Vertex]) -> u64 {
    let mut code = 0u64;
    for j in 1..order.len() {
        let nb = g.neighbors(order[j]);
        for &vi in &order[..j] {
            code = (code << 1) | nb.contains(vi) as u64;
        }
    }
    code
}

fn graph_from_code(n: usize, code: u64) -> Graph {
    let bits = n * (n - 1) / 2;
    let mut edges = Vec::new();
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            if (code >> (bits - 1 - k)) & 1 == 1 {
                edges.push((i, j));
            }
            k += 1;
        }
    }
    Graph::new(n, &edges).expect("code describes a valid graph")
}

/// Relabeling of `g` whose adjacency bit string is lexicographically least,
/// found by trying all n! orders. Isomorphic graphs get equal forms.
pub fn canonical_form(g: &Graph) -> Result<Graph> {
    Ok(graph_from_code(g.n(), canonical_code(g)?))
}

pub fn canonical_code(g: &Graph) -> Result<u64> {
    let n = g.n();
    if n > MAX_CANONICAL_VERTICES {
        return Err(Error::TooLarge { n, limit: MAX_CANONICAL_VERTICES });
    }
    // Heap's algorithm over `order`; `order[i]` is the old vertex given new label i.
    let mut order: Vec<Vertex> = (0..n).collect();
    let mut counters = alloc::vec![0usize; n];
    let mut best = adjacency_code(g, &order);
    let mut i = 0;
    while i < n {
        if counters[i] < i {
            if i % 2 == 0 {
                order.swap(0, i);
            } else {
                order.swap(counters[i], i);
            }
            best = best.min(adjacency_code(g, &order));
            counters[i] += 1;
            i = 0;
        } else {
            counters[i] = 0;
            i += 1;
        }
    }
    Ok(best)
}

/// All connected graphs on `n` vertices, one per isomorphism class, in
/// canonical form and ascending canonical code.
pub fn enumerate_connected_graphs(n: usize) -> Result<Vec<Graph>> {
    if n == 0 {
        return Err(Error::VertexCount(0));
    }
    if n > MAX_ENUMERATION_VERTICES {
        return Err(Error::TooLarge { n, limit: MAX_ENUMERATION_VERTICES });
    }
    let pairs = n * (n - 1) / 2;
    let mut classes = BTreeSet::new();
    for code in 0..1u64 << pairs {
        let g = graph_from_code(n, code);
        if g.view().is_connected() {
            classes.insert(canonical_code(&g)?);
        }
    }
    Ok(classes.into_iter().map(|c| graph_from_code(n, c)).collect())
}

/// Classifies each graph in order; errors are kept per graph.
pub fn scan_conjecture<'a, I>(graphs: I) -> Vec<Result<ClassificationRecord>>
where
    I: IntoIterator<Item = &'a Graph>,
{
    graphs.into_iter().map(in_h2).collect()
}
