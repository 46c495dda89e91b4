#![allow(dead_code)]

use grabgame_core::{Graph, VertexSet};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Random graph with independent edges.
pub fn random_graph(rng: &mut impl Rng, n: usize, p: f64) -> Graph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.random_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::new(n, &edges).unwrap()
}

pub fn random_connected_graph(rng: &mut impl Rng, n: usize, p: f64) -> Graph {
    loop {
        let g = random_graph(rng, n, p);
        if bfs_connected(&g, g.vertices()) {
            return g;
        }
    }
}

/// Adjacency lists built from the edge list, independent of the bitset code paths.
pub fn adjacency_lists(g: &Graph) -> Vec<Vec<usize>> {
    let mut adj = vec![Vec::new(); g.n()];
    for (u, v) in g.edges() {
        adj[u].push(v);
        adj[v].push(u);
    }
    adj
}

/// Queue-based reachability over adjacency lists.
pub fn bfs_connected(g: &Graph, set: VertexSet) -> bool {
    let members: Vec<usize> = set.iter().collect();
    let Some(&start) = members.first() else { return true };
    let adj = adjacency_lists(g);
    let mut seen = vec![false; g.n()];
    let mut queue = std::collections::VecDeque::from([start]);
    seen[start] = true;
    let mut count = 1;
    while let Some(u) = queue.pop_front() {
        for &v in &adj[u] {
            if set.contains(v) && !seen[v] {
                seen[v] = true;
                count += 1;
                queue.push_back(v);
            }
        }
    }
    count == members.len()
}

/// Every connected labeled graph on `n` vertices (no isomorphism reduction).
pub fn all_labeled_connected(n: usize) -> Vec<Graph> {
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|v| (0..v).map(move |u| (u, v))).collect();
    (0..1u64 << pairs.len())
        .map(|mask| {
            let edges: Vec<_> = pairs.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, &e)| e).collect();
            Graph::new(n, &edges).unwrap()
        })
        .filter(|g| bfs_connected(g, g.vertices()))
        .collect()
}

/// Induced-subgraph isomorphism by plain backtracking: does `pattern`
/// embed into the subgraph of `host` induced by `active`?
pub fn embeds_induced(pattern: &Graph, host: &Graph, active: VertexSet) -> bool {
    fn go(pattern: &Graph, host: &Graph, active: VertexSet, map: &mut Vec<usize>) -> bool {
        let i = map.len();
        if i == pattern.n() {
            return true;
        }
        for h in active.iter() {
            if map.contains(&h) {
                continue;
            }
            let ok = (0..i).all(|j| pattern.has_edge(i, j) == host.has_edge(h, map[j]));
            if ok {
                map.push(h);
                if go(pattern, host, active, map) {
                    return true;
                }
                map.pop();
            }
        }
        false
    }
    pattern.n() <= active.len() && go(pattern, host, active, &mut Vec::new())
}
