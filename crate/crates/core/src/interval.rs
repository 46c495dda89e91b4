//! Interval graph recognition by exhaustive search, for small graphs.
//!
//! A graph is an interval graph iff its maximal cliques can be put in a line
//! so that the cliques containing any given vertex are consecutive.

use alloc::vec::Vec;

use crate::graph::Graph;
use crate::vertex_set::VertexSet;

/// All maximal cliques (Bron–Kerbosch with pivoting).
pub fn maximal_cliques(g: &Graph) -> Vec<VertexSet> {
    fn expand(g: &Graph, r: VertexSet, p: VertexSet, x: VertexSet, out: &mut Vec<VertexSet>) {
        if p.is_empty() {
            if x.is_empty() {
                out.push(r);
            }
            return;
        }
        let pivot = (p | x).iter().max_by_key(|&u| (g.neighbors(u) & p).len()).unwrap();
        let (mut p, mut x) = (p, x);
        for v in p - g.neighbors(pivot) {
            let nb = g.neighbors(v);
            expand(g, r.with(v), p & nb, x & nb, out);
            p.remove(v);
            x.insert(v);
        }
    }
    let mut out = Vec::new();
    expand(g, VertexSet::EMPTY, g.vertices(), VertexSet::EMPTY, &mut out);
    out.sort();
    out
}

/// Whether some ordering of the maximal cliques has the consecutive property.
pub fn is_interval_graph(g: &Graph) -> bool {
    clique_path(g).is_some()
}

/// A consecutive ordering of the maximal cliques, if one exists.
pub fn clique_path(g: &Graph) -> Option<Vec<VertexSet>> {
    fn place(cliques: &[VertexSet], used: &mut Vec<bool>, order: &mut Vec<VertexSet>, closed: VertexSet) -> bool {
        if order.len() == cliques.len() {
            return true;
        }
        let open = order.last().copied().unwrap_or(VertexSet::EMPTY);
        for i in 0..cliques.len() {
            if used[i] || !(cliques[i] & closed).is_empty() {
                continue;
            }
            used[i] = true;
            order.push(cliques[i]);
            // Vertices of the previous clique missing from this one may never reappear.
            if place(cliques, used, order, closed | (open - cliques[i])) {
                return true;
            }
            order.pop();
            used[i] = false;
        }
        false
    }
    let cliques = maximal_cliques(g);
    let mut used = alloc::vec![false; cliques.len()];
    let mut order = Vec::with_capacity(cliques.len());
    place(&cliques, &mut used, &mut order, VertexSet::EMPTY).then_some(order)
}
