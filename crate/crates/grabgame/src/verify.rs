//! Property suites behind `grabgame verify`.

use std::fmt;
use std::str::FromStr;

use grabgame_core::classify::{canonical_form, enumerate_connected_graphs, find_h2_counterexample, in_a2, in_h2};
use grabgame_core::engine::{verify_strategy, GameState};
use grabgame_core::families::{fully_spiked_cycle, is_cstar_free, prop8_weights};
use grabgame_core::strategy::{cstar_free_case, CStarFreeAlice, CStarFreeCase, EvenSpikedCycleAlice, SpikedOddPairingBob};
use grabgame_core::{game_value, Graph, Side, Strategy, StrategyError, Vertex, WeightFn};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::data::connected7;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Suite {
    OmegaSpike,
    CycleNoncut,
    CstarFreeH2,
    EvenSpiked,
    OddSpiked,
    RemarkSix,
}

impl Suite {
    pub const ALL: [Suite; 6] =
        [Suite::OmegaSpike, Suite::CycleNoncut, Suite::CstarFreeH2, Suite::EvenSpiked, Suite::OddSpiked, Suite::RemarkSix];

    pub fn id(self) -> &'static str {
        match self {
            Suite::OmegaSpike => "omega-spike",
            Suite::CycleNoncut => "cycle-noncut",
            Suite::CstarFreeH2 => "cstar-free-h2",
            Suite::EvenSpiked => "even-spiked",
            Suite::OddSpiked => "odd-spiked",
            Suite::RemarkSix => "remark-six",
        }
    }

    pub fn run(self) -> SuiteReport {
        match self {
            Suite::OmegaSpike => omega_spike(),
            Suite::CycleNoncut => cycle_noncut(),
            Suite::CstarFreeH2 => cstar_free_h2(),
            Suite::EvenSpiked => even_spiked(),
            Suite::OddSpiked => odd_spiked(),
            Suite::RemarkSix => remark_six(),
        }
    }
}

impl FromStr for Suite {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        Suite::ALL.into_iter().find(|t| t.id() == s).ok_or_else(|| {
            let ids: Vec<_> = Suite::ALL.iter().map(|t| t.id()).collect();
            format!("unknown suite `{s}` (expected one of {})", ids.join(", "))
        })
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

const KEPT_FAILURES: usize = 10;

#[derive(Debug, Clone)]
pub struct SuiteReport {
    pub suite: Suite,
    pub checks: u64,
    pub failures: u64,
    /// The first few failures, for display.
    pub examples: Vec<String>,
    pub notes: Vec<String>,
}

impl SuiteReport {
    fn new(suite: Suite) -> Self {
        Self { suite, checks: 0, failures: 0, examples: Vec::new(), notes: Vec::new() }
    }

    pub fn passed(&self) -> bool {
        self.failures == 0 && self.checks > 0
    }

    fn check(&mut self, ok: bool, describe: impl FnOnce() -> String) {
        self.checks += 1;
        if !ok {
            self.fail(describe());
        }
    }

    fn fail(&mut self, msg: String) {
        self.failures += 1;
        if self.examples.len() < KEPT_FAILURES {
            self.examples.push(msg);
        }
    }

    fn merge(&mut self, other: SuiteReport) {
        self.checks += other.checks;
        for e in other.examples {
            if self.examples.len() < KEPT_FAILURES {
                self.examples.push(e);
            }
        }
        self.failures += other.failures;
    }
}

impl fmt::Display for SuiteReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let status = if self.passed() { "PASS" } else { "FAIL" };
        write!(f, "{status} {}: {} checks, {} failures", self.suite, self.checks, self.failures)?;
        for n in &self.notes {
            write!(f, "\n  {n}")?;
        }
        for e in &self.examples {
            write!(f, "\n  failure: {e}")?;
        }
        Ok(())
    }
}

fn up_to_six() -> Vec<Graph> {
    (1..=6).flat_map(|n| enumerate_connected_graphs(n).expect("n <= 6")).collect()
}

/// Connected G(n, p) samples by rejection.
pub fn random_connected_graphs(seed: u64, n: usize, p: f64, count: usize) -> Vec<Graph> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::with_capacity(count);
    while out.len() < count {
        let mut edges = Vec::new();
        for v in 1..n {
            for u in 0..v {
                if rng.random_bool(p) {
                    edges.push((u, v));
                }
            }
        }
        let g = Graph::new(n, &edges).expect("valid edges");
        if g.view().is_connected() {
            out.push(g);
        }
    }
    out
}

fn omega_spike() -> SuiteReport {
    let mut rep = SuiteReport::new(Suite::OmegaSpike);
    let mut graphs = up_to_six();
    let enumerated = graphs.len();
    graphs.extend(random_connected_graphs(7, 7, 0.35, 1000));
    let (mut spikes, mut others) = (0u64, 0u64);
    for g in &graphs {
        if g.n() < 3 {
            continue;
        }
        let view = g.view();
        let omega = view.non_cut_vertices().expect("connected");
        for x in omega {
            let after = view.without(x).expect("in range").expect("nonempty").non_cut_vertices().expect("connected");
            let spike = view.is_spike(x).expect("in range");
            if spike {
                spikes += 1;
            } else {
                others += 1;
            }
            rep.check(after.is_subset(omega) == !spike, || {
                format!("{:?}, x = {x}: spike = {spike}, Ω(G−x) ⊆ Ω(G) = {}", g.edges(), after.is_subset(omega))
            });
        }
    }
    rep.notes.push(format!("{enumerated} enumerated graphs (n <= 6) and 1000 random graphs (n = 7)"));
    rep.notes.push(format!("{spikes} spike cases, {others} non-spike cases"));
    rep
}

fn cycle_noncut() -> SuiteReport {
    let mut rep = SuiteReport::new(Suite::CycleNoncut);
    let mut graphs = up_to_six();
    graphs.extend(connected7());
    let mut free = 0;
    for g in graphs.iter().filter(|g| is_cstar_free(&g.view())) {
        free += 1;
        let view = g.view();
        let omega = view.non_cut_vertices().expect("connected");
        for cycle in view.simple_cycles() {
            rep.check(cycle.iter().any(|&v| omega.contains(v)), || {
                format!("{:?}: cycle {cycle:?} avoids Ω = {:?}", g.edges(), omega.iter().collect::<Vec<_>>())
            });
        }
    }
    rep.notes.push(format!("{free} connected C*-free graphs with n <= 7, every simple cycle checked"));
    rep
}

/// The C*-free rule for Alice, additionally checking that, when it takes a
/// vertex on a cycle, no new non-cut vertex appears for Bob.
pub struct CheckedCStarFreeAlice {
    inner: CStarFreeAlice,
    pub cycle_moves: u64,
}

impl CheckedCStarFreeAlice {
    pub fn new() -> Self {
        Self { inner: CStarFreeAlice::new(), cycle_moves: 0 }
    }
}

impl Default for CheckedCStarFreeAlice {
    fn default() -> Self {
        Self::new()
    }
}

impl Strategy for CheckedCStarFreeAlice {
    fn select(&mut self, state: &GameState) -> Result<Vertex, StrategyError> {
        if let CStarFreeCase::CycleVertex(x) = cstar_free_case(state)? {
            self.cycle_moves += 1;
            let g = state.graph();
            let before = g.induced(state.remaining())?.non_cut_vertices()?;
            let after = g.induced(state.remaining().without(x))?.non_cut_vertices()?;
            if !after.is_subset(before) || after.iter().any(|v| state.weights().get(v) != 0) {
                return Err(StrategyError::Inconsistent(format!("taking {x} exposes a new non-cut vertex")));
            }
        }
        self.inner.select(state)
    }
}

fn cstar_free_h2() -> SuiteReport {
    let graphs: Vec<Graph> = [2, 4, 6]
        .into_iter()
        .flat_map(|n| enumerate_connected_graphs(n).expect("n <= 6"))
        .filter(|g| is_cstar_free(&g.view()))
        .collect();
    let per_graph: Vec<(SuiteReport, u64, u64)> = graphs
        .par_iter()
        .map(|g| {
            let mut rep = SuiteReport::new(Suite::CstarFreeH2);
            let (mut leaves, mut cycle_moves) = (0, 0);
            for mask in 0..1u64 << g.n() {
                let w = WeightFn::from_mask(g.n(), mask);
                let mut alice = CheckedCStarFreeAlice::new();
                let res = verify_strategy(g, &w, &mut alice, Side::Alice, |s| s.margin(Side::Alice) >= 0)
                    .expect("valid instance");
                leaves += res.leaves_checked;
                cycle_moves += alice.cycle_moves;
                rep.check(res.holds, || format!("{:?} weights {}: {:?}", g.edges(), w.to_bitstring().unwrap(), res));
            }
            (rep, leaves, cycle_moves)
        })
        .collect();
    let mut rep = SuiteReport::new(Suite::CstarFreeH2);
    let (mut leaves, mut cycle_moves) = (0, 0);
    for (r, l, c) in per_graph {
        rep.merge(r);
        leaves += l;
        cycle_moves += c;
    }
    rep.notes.push(format!("{} graphs (n in {{2,4,6}}), {} weightings, {leaves} Bob lines", graphs.len(), rep.checks));
    rep.notes.push(format!("{cycle_moves} cycle-vertex moves, each leaving Bob only weight-0 non-cut vertices"));
    rep
}

fn even_spiked() -> SuiteReport {
    let mut rep = SuiteReport::new(Suite::EvenSpiked);
    let c4 = fully_spiked_cycle(4).expect("m = 4");

    let mut subgraphs = 0u64;
    for size in (2..=8).step_by(2) {
        for s in grabgame_core::vertex_set::subsets_of_size(8, size).filter(|&s| c4.is_connected_set(s)) {
            subgraphs += 1;
            let (sub, _) = c4.induced(s).expect("in range").to_graph();
            let verdict = in_a2(&sub).expect("small");
            rep.check(verdict.holds, || format!("C4* subset {:?} fails with {:?}", s.iter().collect::<Vec<_>>(), verdict.counterexample));
        }
    }
    let cx = find_h2_counterexample(&c4).expect("small");
    rep.check(cx.is_none(), || format!("in_h2(C4*) reported counterexample {cx:?}"));
    rep.notes.push(format!("in_h2(C4*): {subgraphs} even connected induced subgraphs, all weightings"));

    let mut leaves = 0;
    for mask in 0..256u64 {
        let w = WeightFn::from_mask(8, mask);
        let res = verify_strategy(&c4, &w, &mut EvenSpikedCycleAlice::new(), Side::Alice, |s| s.margin(Side::Alice) >= 0)
            .expect("valid instance");
        leaves += res.leaves_checked;
        rep.check(res.holds, || format!("C4* weights {}: {res:?}", w.to_bitstring().unwrap()));
    }
    rep.notes.push(format!("even-spiked-cycle strategy on C4*: 256 weightings, {leaves} Bob lines"));

    let c6 = fully_spiked_cycle(6).expect("m = 6");
    let verdict = in_a2(&c6).expect("12 vertices");
    rep.check(verdict.holds, || format!("C6* fails A2 with {:?}", verdict.counterexample));
    rep.notes.push("C6* whole graph: Alice wins all 4096 weightings under optimal play".to_string());

    let mut leaves = 0;
    for mask in 0..1u64 << 12 {
        let w = WeightFn::from_mask(12, mask);
        let res = verify_strategy(&c6, &w, &mut EvenSpikedCycleAlice::new(), Side::Alice, |s| s.margin(Side::Alice) >= 0)
            .expect("valid instance");
        leaves += res.leaves_checked;
        rep.check(res.holds, || format!("C6* weights {}: {res:?}", w.to_bitstring().unwrap()));
    }
    rep.notes.push(format!("even-spiked-cycle strategy on C6*: 4096 weightings, {leaves} Bob lines"));
    rep
}

fn odd_spiked() -> SuiteReport {
    let mut rep = SuiteReport::new(Suite::OddSpiked);
    for m in [3, 5, 7] {
        let g = fully_spiked_cycle(m).expect("odd m");
        let w = prop8_weights(&g).expect("canonical labels");
        let mut bob = SpikedOddPairingBob::new();
        let mut lines = 0u64;
        let res = verify_strategy(&g, &w, &mut bob, Side::Bob, |s| {
            lines += 1;
            let t = s.transcript();
            s.margin(Side::Bob) == 1 && t[2..].chunks(2).all(|r| w.get(r[0].vertex) == w.get(r[1].vertex))
        })
        .expect("valid instance");
        rep.checks += lines;
        if !res.holds {
            rep.fail(format!("C{m}*: {res:?}"));
        }
        rep.check(res.worst_margin == Some(1), || format!("C{m}*: worst margin {:?}", res.worst_margin));
        let d = game_value(&g, &w, g.vertices()).expect("bounded").0;
        rep.check(d == -1, || format!("C{m}*: solver value {d}, expected -1"));
        rep.notes.push(format!("C{m}*: {} Alice lines, Bob ahead by exactly 1 on each, d = {d}", res.leaves_checked));
    }
    rep
}

fn remark_six() -> SuiteReport {
    let mut rep = SuiteReport::new(Suite::RemarkSix);
    let graphs = up_to_six();
    let outside: Vec<Graph> = graphs
        .par_iter()
        .filter(|g| !in_h2(g).expect("n <= 6").in_h2)
        .cloned()
        .collect();
    rep.checks = graphs.len() as u64;
    let c3 = canonical_form(&fully_spiked_cycle(3).expect("m = 3")).expect("small");
    let labels = |g: &Graph| crate::graph6::emit_graph6(g);
    if outside.len() != 1 || canonical_form(&outside[0]).expect("small") != c3 {
        let found: Vec<String> = outside.iter().map(labels).collect();
        rep.fail(format!("graphs outside H2: {found:?}, expected only C3* ({})", labels(&c3)));
    }
    rep.notes.push(format!(
        "{} connected graphs with n <= 6, outside H2: {:?}",
        graphs.len(),
        outside.iter().map(labels).collect::<Vec<_>>()
    ));
    rep
}
