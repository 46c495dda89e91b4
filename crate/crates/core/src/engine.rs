//! Game mechanics and the exact game-value solver.
//!
//! Values are negamax differences: `d(S)` is the best the player to move can
//! achieve, as their own total minus the opponent's, from the position where
//! `S` remains. `d(∅) = 0` and `d(S) = max_{v ∈ Ω(S)} w(v) − d(S ∖ {v})`. The
//! side to move is determined by how many vertices are gone, so positions are
//! memoized on the remaining set alone.

use alloc::collections::BTreeMap;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::error::{Error, IllegalReason, Result};
use crate::graph::Graph;
use crate::strategy::Strategy;
use crate::vertex_set::VertexSet;
use crate::weights::WeightFn;
use crate::Vertex;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Side {
    Alice,
    Bob,
}

impl Side {
    pub fn other(self) -> Side {
        match self {
            Side::Alice => Side::Bob,
            Side::Bob => Side::Alice,
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Side::Alice => "alice",
            Side::Bob => "bob",
        }
    }
}

impl fmt::Display for Side {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Side::Alice => "Alice",
            Side::Bob => "Bob",
        })
    }
}

/// One entry of a game transcript.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Move {
    pub side: Side,
    pub vertex: Vertex,
}

/// A position of the grabbing game together with its history.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GameState {
    graph: Graph,
    weights: WeightFn,
    remaining: VertexSet,
    alice_score: i64,
    bob_score: i64,
    transcript: Vec<Move>,
}

impl GameState {
    /// Starts a game; Alice moves first.
    pub fn new(graph: Graph, weights: WeightFn) -> Result<Self> {
        weights.check_against(&graph)?;
        if !graph.view().is_connected() {
            return Err(Error::Disconnected);
        }
        let remaining = graph.vertices();
        Ok(GameState { graph, weights, remaining, alice_score: 0, bob_score: 0, transcript: Vec::new() })
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn weights(&self) -> &WeightFn {
        &self.weights
    }

    pub fn remaining(&self) -> VertexSet {
        self.remaining
    }

    pub fn transcript(&self) -> &[Move] {
        &self.transcript
    }

    pub fn score(&self, side: Side) -> i64 {
        match side {
            Side::Alice => self.alice_score,
            Side::Bob => self.bob_score,
        }
    }

    /// `side`'s score minus the opponent's.
    pub fn margin(&self, side: Side) -> i64 {
        self.score(side) - self.score(side.other())
    }

    pub fn to_move(&self) -> Side {
        if self.transcript.len().is_multiple_of(2) {
            Side::Alice
        } else {
            Side::Bob
        }
    }

    pub fn is_over(&self) -> bool {
        self.remaining.is_empty()
    }

    /// Alice wins ties: she needs at least half the total weight.
    pub fn winner(&self) -> Option<Side> {
        self.is_over()
            .then_some(if self.alice_score >= self.bob_score { Side::Alice } else { Side::Bob })
    }

    /// The non-cut vertices of the remaining graph.
    pub fn legal_moves(&self) -> Result<VertexSet> {
        if self.is_over() {
            return Err(Error::GameOver);
        }
        Ok(self.graph.non_cut_set(self.remaining))
    }

    pub fn check_move(&self, v: Vertex) -> Result<()> {
        if self.is_over() {
            return Err(Error::GameOver);
        }
        let reason = if v >= self.graph.n() {
            IllegalReason::OutOfRange
        } else if !self.remaining.contains(v) {
            IllegalReason::AlreadyTaken
        } else if !self.graph.non_cut_set(self.remaining).contains(v) {
            IllegalReason::CutVertex
        } else {
            return Ok(());
        };
        Err(Error::IllegalMove { vertex: v, reason })
    }

    /// Removes `v` and credits its weight to the side to move.
    pub fn apply_move(&mut self, v: Vertex) -> Result<()> {
        self.check_move(v)?;
        let side = self.to_move();
        match side {
            Side::Alice => self.alice_score += self.weights.get(v),
            Side::Bob => self.bob_score += self.weights.get(v),
        }
        self.remaining.remove(v);
        self.transcript.push(Move { side, vertex: v });
        Ok(())
    }

    /// Copying form of [`Self::apply_move`].
    pub fn with_move(&self, v: Vertex) -> Result<GameState> {
        let mut next = self.clone();
        next.apply_move(v)?;
        Ok(next)
    }

    /// Takes back the last move.
    pub fn undo_move(&mut self) -> Option<Move> {
        let mv = self.transcript.pop()?;
        match mv.side {
            Side::Alice => self.alice_score -= self.weights.get(mv.vertex),
            Side::Bob => self.bob_score -= self.weights.get(mv.vertex),
        }
        self.remaining.insert(mv.vertex);
        Some(mv)
    }
}

/// Optimal mover-minus-opponent difference of a position.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub struct GameValue(pub i64);

impl GameValue {
    /// The mover gets at least half of what remains.
    pub fn mover_secures_half(self) -> bool {
        self.0 >= 0
    }
}

enum Memo {
    Dense(Vec<i64>),
    Sparse(BTreeMap<u64, i64>),
}

const DENSE_MEMO_MAX_N: usize = 16;
const UNSET: i64 = i64::MIN;

/// Memoized negamax over remaining-vertex subsets of one weighted graph.
pub struct Solver {
    graph: Graph,
    weights: WeightFn,
    memo: Memo,
}

impl Solver {
    pub fn new(graph: Graph, weights: WeightFn) -> Result<Self> {
        weights.check_against(&graph)?;
        let memo = if graph.n() <= DENSE_MEMO_MAX_N {
            Memo::Dense(vec![UNSET; 1 << graph.n()])
        } else {
            Memo::Sparse(BTreeMap::new())
        };
        Ok(Solver { graph, weights, memo })
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn weights(&self) -> &WeightFn {
        &self.weights
    }

    /// Value of the position where `subset` remains; `subset` must induce a
    /// connected subgraph or be empty.
    pub fn value(&mut self, subset: VertexSet) -> Result<GameValue> {
        if !subset.is_subset(self.graph.vertices()) {
            return Err(Error::VertexOutOfRange { vertex: (subset - self.graph.vertices()).first().unwrap(), n: self.graph.n() });
        }
        if !self.graph.is_connected_set(subset) {
            return Err(Error::Disconnected);
        }
        Ok(GameValue(self.solve(subset)))
    }

    fn solve(&mut self, s: VertexSet) -> i64 {
        if s.is_empty() {
            return 0;
        }
        match &self.memo {
            Memo::Dense(t) if t[s.bits() as usize] != UNSET => return t[s.bits() as usize],
            Memo::Sparse(m) => {
                if let Some(&d) = m.get(&s.bits()) {
                    return d;
                }
            }
            _ => {}
        }
        let mut best = i64::MIN;
        for v in self.graph.non_cut_set(s) {
            best = best.max(self.weights.get(v) - self.solve(s.without(v)));
        }
        match &mut self.memo {
            Memo::Dense(t) => t[s.bits() as usize] = best,
            Memo::Sparse(m) => {
                m.insert(s.bits(), best);
            }
        }
        best
    }

    /// `(v, w(v) − d(S ∖ {v}))` for each legal `v`: the mover's value of each move.
    pub fn move_values(&mut self, subset: VertexSet) -> Result<Vec<(Vertex, i64)>> {
        self.value(subset)?;
        Ok(self
            .graph
            .non_cut_set(subset)
            .iter()
            .map(|v| (v, self.weights.get(v) - self.solve(subset.without(v))))
            .collect())
    }

    /// Lowest-id maximizer among the legal moves, `None` when nothing remains.
    pub fn optimal_move(&mut self, subset: VertexSet) -> Result<Option<Vertex>> {
        let values = self.move_values(subset)?;
        let best = values.iter().map(|&(_, d)| d).max();
        Ok(best.and_then(|b| values.iter().find(|&&(_, d)| d == b).map(|&(v, _)| v)))
    }

    /// The line obtained by both sides always playing [`Self::optimal_move`].
    pub fn principal_line(&mut self, subset: VertexSet) -> Result<Vec<Vertex>> {
        let mut line = Vec::new();
        let mut s = subset;
        while let Some(v) = self.optimal_move(s)? {
            line.push(v);
            s.remove(v);
        }
        Ok(line)
    }
}

/// d for the position where `subset` remains.
pub fn game_value(g: &Graph, w: &WeightFn, subset: VertexSet) -> Result<GameValue> {
    Solver::new(g.clone(), w.clone())?.value(subset)
}

/// Whether Alice gets at least half the total weight under optimal play.
pub fn alice_wins_optimal(g: &Graph, w: &WeightFn) -> Result<bool> {
    Ok(game_value(g, w, g.vertices())?.mover_secures_half())
}

/// Every position reachable from the full graph, with its legal moves,
/// computed once so many weightings can be solved without recomputing Ω.
pub struct PositionTable {
    n: usize,
    /// Reachable nonempty subsets, ascending by size.
    positions: Vec<VertexSet>,
    /// Per position, `(vertex, index of the successor or usize::MAX for ∅)`.
    successors: Vec<Vec<(Vertex, usize)>>,
}

impl PositionTable {
    pub fn new(g: &Graph) -> Result<Self> {
        if !g.view().is_connected() {
            return Err(Error::Disconnected);
        }
        let mut seen = BTreeMap::new();
        let mut stack = vec![g.vertices()];
        seen.insert(g.vertices().bits(), ());
        while let Some(s) = stack.pop() {
            for v in g.non_cut_set(s) {
                let t = s.without(v);
                if !t.is_empty() && seen.insert(t.bits(), ()).is_none() {
                    stack.push(t);
                }
            }
        }
        let mut positions: Vec<VertexSet> = seen.keys().map(|&b| VertexSet::from_bits(b)).collect();
        positions.sort_by_key(|s| (s.len(), s.bits()));
        let index: BTreeMap<u64, usize> = positions.iter().enumerate().map(|(i, s)| (s.bits(), i)).collect();
        let successors = positions
            .iter()
            .map(|&s| {
                g.non_cut_set(s)
                    .iter()
                    .map(|v| {
                        let t = s.without(v);
                        (v, if t.is_empty() { usize::MAX } else { index[&t.bits()] })
                    })
                    .collect()
            })
            .collect();
        Ok(PositionTable { n: g.n(), positions, successors })
    }

    pub fn position_count(&self) -> usize {
        self.positions.len()
    }

    /// Value of the full graph under `w`; `scratch` is reused between calls.
    pub fn full_value(&self, w: &WeightFn, scratch: &mut Vec<i64>) -> Result<GameValue> {
        if w.len() != self.n {
            return Err(Error::WeightLength { expected: self.n, got: w.len() });
        }
        scratch.clear();
        scratch.resize(self.positions.len(), 0);
        for i in 0..self.positions.len() {
            let mut best = i64::MIN;
            for &(v, j) in &self.successors[i] {
                let rest = if j == usize::MAX { 0 } else { scratch[j] };
                best = best.max(w.get(v) - rest);
            }
            scratch[i] = best;
        }
        Ok(GameValue(*scratch.last().expect("full graph is a position")))
    }
}

/// Why a strategy verification failed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FailureReason {
    /// A finished game violated the predicate.
    Predicate,
    /// The strategy returned a vertex that cannot be taken.
    IllegalMove { vertex: Vertex, reason: String },
    /// The strategy refused to move.
    Strategy(String),
}

/// Outcome of exhaustively playing a strategy against every opponent line.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerificationResult {
    pub holds: bool,
    pub leaves_checked: u64,
    /// Minimum final margin for the verified side over all finished games;
    /// `None` when no game reached the end.
    pub worst_margin: Option<i64>,
    pub failing_transcript: Option<Vec<Move>>,
    pub failure_reason: Option<FailureReason>,
}

/// Plays `strat` for `side` against every possible sequence of opponent
/// moves and checks `predicate` on each finished game.
///
/// A strategy error or illegal move is recorded as a failure, and the
/// search continues through the other lines so `worst_margin` covers every
/// finished game. The first failure found is reported.
pub fn verify_strategy<S, P>(g: &Graph, w: &WeightFn, strat: &mut S, side: Side, mut predicate: P) -> Result<VerificationResult>
where
    S: Strategy + ?Sized,
    P: FnMut(&GameState) -> bool,
{
    struct Search<'a, S: ?Sized, P> {
        strat: &'a mut S,
        side: Side,
        predicate: P,
        result: VerificationResult,
    }

    impl<S: Strategy + ?Sized, P: FnMut(&GameState) -> bool> Search<'_, S, P> {
        fn fail(&mut self, state: &GameState, reason: FailureReason) {
            self.result.holds = false;
            if self.result.failing_transcript.is_none() {
                self.result.failing_transcript = Some(state.transcript().to_vec());
                self.result.failure_reason = Some(reason);
            }
        }

        fn run(&mut self, state: &mut GameState) {
            if state.is_over() {
                self.result.leaves_checked += 1;
                let m = state.margin(self.side);
                self.result.worst_margin = Some(self.result.worst_margin.map_or(m, |w| w.min(m)));
                if !(self.predicate)(state) {
                    self.fail(state, FailureReason::Predicate);
                }
                return;
            }
            if state.to_move() == self.side {
                match self.strat.select(state) {
                    Ok(v) => match state.apply_move(v) {
                        Ok(()) => {
                            self.run(state);
                            state.undo_move();
                        }
                        Err(e) => {
                            let reason = match e {
                                Error::IllegalMove { reason, .. } => reason.to_string(),
                                other => other.to_string(),
                            };
                            let mut shown = state.clone();
                            shown.transcript.push(Move { side: self.side, vertex: v });
                            self.fail(&shown, FailureReason::IllegalMove { vertex: v, reason });
                        }
                    },
                    Err(e) => self.fail(state, FailureReason::Strategy(e.to_string())),
                }
            } else {
                let moves = state.legal_moves().expect("game not over");
                for v in moves {
                    state.apply_move(v).expect("legal move");
                    self.run(state);
                    state.undo_move();
                }
            }
        }
    }

    let mut state = GameState::new(g.clone(), w.clone())?;
    let mut search = Search {
        strat,
        side,
        predicate: &mut predicate,
        result: VerificationResult {
            holds: true,
            leaves_checked: 0,
            worst_margin: None,
            failing_transcript: None,
            failure_reason: None,
        },
    };
    search.run(&mut state);
    Ok(search.result)
}
