mod common;

use common::*;
use grabgame::doc::{emit_weighted_doc, parse_weighted_doc, WeightedGraphDoc};
use grabgame::graph6::{emit_graph6, parse_graph6};
use grabgame::report::{write_csv, CSV_HEADER};
use grabgame::scan::{graph6_inputs, scan};
use grabgame_core::classify::enumerate_connected_graphs;
use grabgame_core::families::complete;
use grabgame_core::{Graph, WeightFn};
use proptest::prelude::*;
use rand::Rng;

#[test]
fn graph6_round_trips_on_enumeration_and_random_graphs() {
    let mut graphs: Vec<Graph> = (1..=6).flat_map(|n| enumerate_connected_graphs(n).unwrap()).collect();
    assert_eq!(graphs.len(), 143);
    let mut r = rng(62);
    for _ in 0..1000 {
        let n = r.random_range(1..=62);
        let p = r.random_range(0.0..1.0);
        graphs.push(random_graph(&mut r, n, p));
    }
    for g in &graphs {
        let s = emit_graph6(g);
        assert_eq!(&parse_graph6(&s).unwrap(), g);
        assert_eq!(emit_graph6(&parse_graph6(&s).unwrap()), s);
        let (n, edges) = reference_graph6_edges(&s);
        assert_eq!(n, g.n());
        assert_eq!(edges, {
            let mut e = g.edges();
            e.sort_by_key(|&(u, v)| (v, u));
            e
        });
    }
    assert_eq!(parse_graph6("Bw").unwrap(), complete(3).unwrap());
    assert_eq!(emit_graph6(&complete(3).unwrap()), "Bw");
}

#[test]
fn graph6_rejects_oversized_and_garbled_input() {
    // 63 vertices need the long form.
    let long = format!("~?@~{}", "?".repeat(325));
    assert!(parse_graph6(&long).is_err());
    assert!(parse_graph6("Bw w").is_err());
    assert!(parse_graph6("C~~").is_err());
}

#[test]
fn csv_columns_are_constant() {
    let text = "Bw\nnot graph6\n\nE@UW\nBW\n";
    let outcome = scan(graph6_inputs(text), 2);
    let errors: Vec<_> = outcome.errors().collect();
    assert_eq!(errors.len(), 1);
    assert_eq!(errors[0].0, Some(2));
    let mut buf = Vec::new();
    write_csv(&mut buf, outcome.records()).unwrap();
    let out = String::from_utf8(buf).unwrap();
    let mut rows = csv::Reader::from_reader(out.as_bytes());
    assert_eq!(rows.headers().unwrap().iter().collect::<Vec<_>>(), CSV_HEADER);
    let records: Vec<csv::StringRecord> = rows.records().map(Result::unwrap).collect();
    assert_eq!(records.len(), 3);
    assert!(records.iter().all(|r| r.len() == CSV_HEADER.len()));
    // C3*: its whole vertex set with weight 1 on the triangle.
    assert_eq!(&records[1][0], "E@UW");
    assert_eq!(&records[1][3], "false");
    assert_eq!(&records[1][5], "true");
    assert_eq!(&records[1][6], "0 1 2 3 4 5");
    let w = WeightFn::from_bitstring(&records[1][7]).unwrap();
    assert_eq!(w.total(), 3);
}

#[test]
fn disconnected_lines_are_reported_not_dropped() {
    let outcome = scan(graph6_inputs("B?\nBw\n"), 1);
    let errors: Vec<_> = outcome.errors().collect();
    assert_eq!(errors.len(), 1);
    assert_eq!(errors[0].0, Some(1));
    assert_eq!(outcome.records().count(), 1);
}

#[test]
fn scan_order_is_independent_of_workers() {
    let text: String = (1..=5)
        .flat_map(|n| enumerate_connected_graphs(n).unwrap())
        .map(|g| emit_graph6(&g) + "\n")
        .collect();
    let one: Vec<_> = scan(graph6_inputs(&text), 1).records().cloned().collect();
    let four: Vec<_> = scan(graph6_inputs(&text), 4).records().cloned().collect();
    assert_eq!(one, four);
    let order: Vec<String> = one.iter().map(|r| emit_graph6(&r.graph)).collect();
    assert_eq!(order, text.lines().collect::<Vec<_>>());
}

proptest! {
    #[test]
    fn weighted_doc_round_trips(n in 1usize..20, edge_bits in any::<u64>(), mask in any::<u64>(), integer in any::<bool>()) {
        let pairs: Vec<(usize, usize)> = (0..n).flat_map(|v| (0..v).map(move |u| (u, v))).collect();
        let edges: Vec<_> = pairs.iter().enumerate().filter(|(i, _)| edge_bits >> (i % 64) & 1 == 1).map(|(_, &e)| e).collect();
        let g = Graph::new(n, &edges).unwrap();
        let w = if integer {
            WeightFn::integer((0..n).map(|v| (mask >> v & 7) as i64 - 3).collect())
        } else {
            WeightFn::from_mask(n, mask)
        };
        let mut doc = WeightedGraphDoc::new(g, w).unwrap();
        doc.name = Some(format!("graph {n}"));
        let text = emit_weighted_doc(&doc);
        prop_assert_eq!(parse_weighted_doc(&text).unwrap(), doc);
    }

    #[test]
    fn graph6_decodes_any_well_formed_body(n in 1usize..40, seed in any::<u64>()) {
        let len = (n * (n - 1) / 2).div_ceil(6);
        let mut state = seed;
        let body: String = (0..len).map(|_| {
            state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            (63 + (state >> 58) as u8) as char
        }).collect();
        let s = format!("{}{}", (n as u8 + 63) as char, body);
        let g = parse_graph6(&s).unwrap();
        let (rn, edges) = reference_graph6_edges(&s);
        prop_assert_eq!(rn, g.n());
        let mut got = g.edges();
        got.sort_by_key(|&(u, v)| (v, u));
        prop_assert_eq!(got, edges);
    }
}
