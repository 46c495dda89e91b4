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

/// graph6 decoding through an explicit bit string, written separately from the library codec.
pub fn reference_graph6_edges(s: &str) -> (usize, Vec<(usize, usize)>) {
    let bytes = s.as_bytes();
    let n = (bytes[0] - 63) as usize;
    let bits: String = bytes[1..].iter().map(|b| format!("{:06b}", b - 63)).collect();
    let mut pairs = Vec::new();
    for j in 0..n {
        for i in 0..j {
            pairs.push((i, j));
        }
    }
    let edges = pairs.into_iter().zip(bits.chars()).filter(|(_, c)| *c == '1').map(|(e, _)| e).collect();
    (n, edges)
}
