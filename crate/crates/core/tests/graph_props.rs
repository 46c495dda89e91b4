mod common;

use std::collections::BTreeSet;

use common::*;
use grabgame_core::classify::enumerate_connected_graphs;
use grabgame_core::families::{find_induced_fully_spiked_cycle, fully_spiked_cycle, is_cstar_free, Parity};
use grabgame_core::vertex_set::subsets_of_size;
use grabgame_core::{Graph, VertexSet};
use proptest::prelude::*;

fn small_graphs() -> Vec<Graph> {
    let mut graphs: Vec<Graph> = (1..=6).flat_map(|n| enumerate_connected_graphs(n).unwrap()).collect();
    let mut r = rng(7);
    graphs.extend((0..400).map(|_| random_connected_graph(&mut r, 7, 0.35)));
    graphs
}

/// Ω by definition: remove each vertex and re-check connectivity with a queue BFS.
fn omega_oracle(g: &Graph, set: VertexSet) -> VertexSet {
    if set.len() == 1 {
        return set;
    }
    set.iter().filter(|&v| bfs_connected(g, set.without(v))).collect()
}

#[test]
fn omega_routes_agree() {
    for g in small_graphs() {
        let view = g.view();
        let direct = view.non_cut_vertices().unwrap();
        assert_eq!(direct, view.non_cut_vertices_lowlink().unwrap(), "{g:?}");
        assert_eq!(direct, omega_oracle(&g, g.vertices()), "{g:?}");
    }
}

#[test]
fn omega_shrinks_exactly_when_no_spike_is_taken() {
    for g in small_graphs().into_iter().filter(|g| g.n() >= 3) {
        let view = g.view();
        let omega = view.non_cut_vertices().unwrap();
        for v in omega {
            let after = view.without(v).unwrap().unwrap().non_cut_vertices().unwrap();
            assert_eq!(after.is_subset(omega), !view.is_spike(v).unwrap(), "{g:?} v={v}");
        }
    }
}

/// v is on a cycle iff some edge at v is not a bridge.
fn on_cycle_oracle(g: &Graph, set: VertexSet, v: usize) -> bool {
    let adj = adjacency_lists(g);
    adj[v].iter().filter(|&&u| set.contains(u)).any(|&u| {
        let mut seen = vec![false; g.n()];
        let mut stack = vec![v];
        seen[v] = true;
        while let Some(x) = stack.pop() {
            for &y in &adj[x] {
                if set.contains(y) && !seen[y] && !(x == v && y == u) {
                    seen[y] = true;
                    stack.push(y);
                }
            }
        }
        seen[u]
    })
}

/// Vertex sets inducing a cycle: connected and 2-regular.
fn induced_cycle_sets(g: &Graph, set: VertexSet) -> BTreeSet<u64> {
    let mut out = BTreeSet::new();
    for k in 3..=set.len() {
        for s in subsets_of_size(g.n(), k).filter(|s| s.is_subset(set)) {
            if s.iter().all(|v| (g.neighbors(v) & s).len() == 2) && bfs_connected(g, s) {
                out.insert(s.bits());
            }
        }
    }
    out
}

#[test]
fn chordless_cycles_match_brute_force() {
    for g in small_graphs() {
        let cycles = g.view().chordless_cycles();
        let mut sets = BTreeSet::new();
        for c in &cycles {
            let s: VertexSet = c.iter().copied().collect();
            assert_eq!(s.len(), c.len());
            for i in 0..c.len() {
                assert!(g.has_edge(c[i], c[(i + 1) % c.len()]));
            }
            assert!(c[0] == *c.iter().min().unwrap() && c[1] < *c.last().unwrap());
            assert!(sets.insert(s.bits()), "duplicate cycle in {g:?}");
        }
        assert_eq!(sets, induced_cycle_sets(&g, g.vertices()), "{g:?}");
    }
}

#[test]
fn cycle_membership_three_ways() {
    for g in small_graphs() {
        let view = g.view();
        let chordless: VertexSet = view.chordless_cycles().iter().flatten().copied().collect();
        let simple: VertexSet = view.simple_cycles().iter().flatten().copied().collect();
        for v in g.vertices() {
            let fast = view.lies_on_cycle(v).unwrap();
            assert_eq!(fast, on_cycle_oracle(&g, g.vertices(), v), "{g:?} v={v}");
            assert_eq!(fast, chordless.contains(v));
            assert_eq!(fast, simple.contains(v));
        }
    }
}

#[test]
fn connectivity_matches_bfs_on_random_views() {
    let mut r = rng(11);
    for i in 0..10_000 {
        let n = 2 + i % 20;
        let g = random_graph(&mut r, n, 0.15);
        let mask = rand::Rng::random::<u64>(&mut r) & g.vertices().bits();
        let set = VertexSet::from_bits(mask);
        if set.is_empty() {
            continue;
        }
        assert_eq!(g.induced(set).unwrap().is_connected(), bfs_connected(&g, set));
    }
}

#[test]
fn cstar_detection_matches_embedding_search() {
    let mut r = rng(23);
    let mut graphs = small_graphs();
    graphs.extend((0..1500).map(|_| random_connected_graph(&mut r, 8, 0.3)));
    // Dense-enough-to-matter 8-vertex graphs built around C4* and C3*.
    graphs.push(fully_spiked_cycle(4).unwrap());
    let patterns: Vec<Graph> = (3..=4).map(|m| fully_spiked_cycle(m).unwrap()).collect();
    let mut found = [0usize; 2];
    for g in &graphs {
        let view = g.view();
        let by_len: Vec<bool> = patterns.iter().map(|p| embeds_induced(p, g, g.vertices())).collect();
        let odd = find_induced_fully_spiked_cycle(&view, Parity::Odd);
        let even = find_induced_fully_spiked_cycle(&view, Parity::Even);
        let any = find_induced_fully_spiked_cycle(&view, Parity::All);
        assert_eq!(odd.is_some(), by_len[0], "{g:?}");
        assert_eq!(even.is_some(), by_len[1], "{g:?}");
        assert_eq!(any.is_some(), by_len[0] || by_len[1]);
        for w in [odd, even, any].into_iter().flatten() {
            assert!(w.is_valid_in(g), "{w:?} in {g:?}");
        }
        found[0] += by_len[0] as usize;
        found[1] += by_len[1] as usize;
    }
    assert!(found[0] > 0 && found[1] > 0, "oracle comparison never saw a positive: {found:?}");
}

#[test]
fn cstar_freeness_is_hereditary() {
    let mut r = rng(31);
    for _ in 0..300 {
        let g = random_connected_graph(&mut r, 9, 0.3);
        if !is_cstar_free(&g.view()) {
            continue;
        }
        for _ in 0..10 {
            let sub = VertexSet::from_bits(rand::Rng::random::<u64>(&mut r) & g.vertices().bits());
            if sub.is_empty() || !g.is_connected_set(sub) {
                continue;
            }
            assert!(is_cstar_free(&g.induced(sub).unwrap()));
        }
    }
}

#[test]
fn small_graphs_are_cstar_free() {
    for n in 1..=5 {
        for g in enumerate_connected_graphs(n).unwrap() {
            assert!(find_induced_fully_spiked_cycle(&g.view(), Parity::All).is_none());
        }
    }
}

fn arb_graph() -> impl Strategy<Value = Graph> {
    (1usize..=10).prop_flat_map(|n| {
        proptest::collection::vec(any::<bool>(), n * (n - 1) / 2).prop_map(move |bits| {
            let pairs: Vec<(usize, usize)> = (0..n).flat_map(|v| (0..v).map(move |u| (u, v))).collect();
            let edges: Vec<_> = pairs.into_iter().zip(bits).filter(|(_, b)| *b).map(|(e, _)| e).collect();
            Graph::new(n, &edges).unwrap()
        })
    })
}

proptest! {
    #[test]
    fn adjacency_is_symmetric_and_irreflexive(g in arb_graph()) {
        for v in g.vertices() {
            prop_assert!(!g.neighbors(v).contains(v));
            for u in g.neighbors(v) {
                prop_assert!(g.neighbors(u).contains(v));
            }
        }
        prop_assert_eq!(Graph::new(g.n(), &g.edges()).unwrap(), g.clone());
    }

    #[test]
    fn omega_routes_agree_on_arbitrary_views(g in arb_graph(), mask in any::<u64>()) {
        let set = VertexSet::from_bits(mask & g.vertices().bits());
        prop_assume!(!set.is_empty() && g.is_connected_set(set));
        let view = g.induced(set).unwrap();
        prop_assert_eq!(view.non_cut_vertices().unwrap(), view.non_cut_vertices_lowlink().unwrap());
        prop_assert_eq!(view.non_cut_vertices().unwrap(), omega_oracle(&g, set));
    }
}
