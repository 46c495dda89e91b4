//! Deterministic move-selection strategies.
//!
//! Three of them are constructive: Alice on C*-free even graphs, Alice on a
//! fully spiked even cycle, and Bob's pairing answer on a fully spiked odd
//! cycle carrying weight 1 on the cycle. [`OptimalStrategy`] plays perfectly
//! using the solver. All tie-breaks pick the lowest vertex id.

use alloc::format;
use alloc::string::ToString;
use alloc::vec;
use alloc::vec::Vec;

use crate::engine::{GameState, Side, Solver};
use crate::error::{Error, StrategyError};
use crate::families::{canonical_spiked_cycle_length, is_cstar_free, prop8_weights};
use crate::vertex_set::VertexSet;
use crate::Vertex;

/// A deterministic choice of move for the side to move.
pub trait Strategy {
    fn select(&mut self, state: &GameState) -> Result<Vertex, StrategyError>;
}

impl<S: Strategy + ?Sized> Strategy for &mut S {
    fn select(&mut self, state: &GameState) -> Result<Vertex, StrategyError> {
        (**self).select(state)
    }
}

impl<S: Strategy + ?Sized> Strategy for alloc::boxed::Box<S> {
    fn select(&mut self, state: &GameState) -> Result<Vertex, StrategyError> {
        (**self).select(state)
    }
}

fn precondition(msg: &str) -> StrategyError {
    StrategyError::Precondition(msg.to_string())
}

/// Perfect play: the lowest-id move attaining the game value.
///
/// The solver table is kept across calls and rebuilt when the game changes.
#[derive(Default)]
pub struct OptimalStrategy {
    solver: Option<Solver>,
}

impl OptimalStrategy {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn solver_for(&mut self, state: &GameState) -> Result<&mut Solver, StrategyError> {
        let stale = match &self.solver {
            Some(s) => s.graph() != state.graph() || s.weights() != state.weights(),
            None => true,
        };
        if stale {
            self.solver = Some(Solver::new(state.graph().clone(), state.weights().clone())?);
        }
        Ok(self.solver.as_mut().unwrap())
    }
}

impl Strategy for OptimalStrategy {
    fn select(&mut self, state: &GameState) -> Result<Vertex, StrategyError> {
        let remaining = state.remaining();
        self.solver_for(state)?
            .optimal_move(remaining)?
            .ok_or(StrategyError::Engine(Error::GameOver))
    }
}

/// Which branch Alice's C*-free rule takes in a position.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CStarFreeCase {
    /// Some non-cut vertex has weight 1; take the lowest such.
    WeightOne(Vertex),
    /// Every non-cut vertex has weight 0; take the lowest non-cut vertex on a cycle.
    CycleVertex(Vertex),
    /// The remaining graph is a tree with all non-cut weights 0; defer to the solver.
    TreeFallback,
}

/// Classifies the position for [`CStarFreeAlice`], checking its applicability.
pub fn cstar_free_case(state: &GameState) -> Result<CStarFreeCase, StrategyError> {
    if state.is_over() {
        return Err(StrategyError::Engine(Error::GameOver));
    }
    if state.to_move() != Side::Alice {
        return Err(precondition("Alice is not to move"));
    }
    let remaining = state.remaining();
    if !remaining.len().is_multiple_of(2) {
        return Err(precondition("remaining graph has an odd number of vertices"));
    }
    if !state.weights().is_binary() {
        return Err(precondition("weights are not all 0 or 1"));
    }
    let view = state.graph().induced(remaining)?;
    if !is_cstar_free(&view) {
        return Err(precondition("remaining graph contains an induced fully spiked cycle"));
    }
    let omega = view.non_cut_vertices()?;
    if let Some(v) = omega.iter().find(|&v| state.weights().get(v) == 1) {
        return Ok(CStarFreeCase::WeightOne(v));
    }
    if view.is_tree() {
        return Ok(CStarFreeCase::TreeFallback);
    }
    for v in omega {
        if view.lies_on_cycle(v)? {
            return Ok(CStarFreeCase::CycleVertex(v));
        }
    }
    Err(StrategyError::Inconsistent("C*-free graph with a cycle but no non-cut vertex on a cycle".to_string()))
}

/// Alice on a connected even C*-free graph with {0,1} weights.
#[derive(Default)]
pub struct CStarFreeAlice {
    fallback: OptimalStrategy,
}

impl CStarFreeAlice {
    pub fn new() -> Self {
        Self::default()
    }
}

impl Strategy for CStarFreeAlice {
    fn select(&mut self, state: &GameState) -> Result<Vertex, StrategyError> {
        match cstar_free_case(state)? {
            CStarFreeCase::WeightOne(v) | CStarFreeCase::CycleVertex(v) => Ok(v),
            CStarFreeCase::TreeFallback => self.fallback.select(state),
        }
    }
}

/// One-shot form of [`CStarFreeAlice`].
pub fn alice_cstar_free_move(state: &GameState) -> Result<Vertex, StrategyError> {
    CStarFreeAlice::new().select(state)
}

/// Alice's opening move on a canonically labeled fully spiked even cycle.
pub fn alice_even_spiked_cycle_move(state: &GameState) -> Result<Vertex, StrategyError> {
    let m = match canonical_spiked_cycle_length(state.graph()) {
        Some(m) if m % 2 == 0 => m,
        _ => return Err(precondition("graph is not a canonically labeled fully spiked even cycle")),
    };
    if !state.transcript().is_empty() {
        return Err(precondition("only the opening move is covered"));
    }
    let w = state.weights();
    if !w.is_binary() {
        return Err(precondition("weights are not all 0 or 1"));
    }
    let leaves = m..2 * m;
    if let Some(y) = leaves.clone().find(|&y| w.get(y) == 1) {
        return Ok(y);
    }
    if w.total() % 2 == 1 {
        // All leaves are 0 and the count of 1s is odd, so with m even some cycle vertex is 0.
        return leaves
            .clone()
            .find(|&y| w.get(y - m) == 0)
            .ok_or_else(|| StrategyError::Inconsistent("no leaf with a weight-0 neighbor".to_string()));
    }
    Ok(m)
}

/// Alice on a fully spiked even cycle: the opening rule, then the C*-free rule
/// on the residual graph.
#[derive(Default)]
pub struct EvenSpikedCycleAlice {
    rest: CStarFreeAlice,
}

impl EvenSpikedCycleAlice {
    pub fn new() -> Self {
        Self::default()
    }
}

impl Strategy for EvenSpikedCycleAlice {
    fn select(&mut self, state: &GameState) -> Result<Vertex, StrategyError> {
        if state.transcript().is_empty() {
            alice_even_spiked_cycle_move(state)
        } else {
            self.rest.select(state)
        }
    }
}

/// Label of a surviving vertex once `a₁` and `b₁` are gone from `C*_{2k+1}`:
/// the cycle breaks into a path `x₁ … x_{2k}` with pendants `y₁ … y_{2k}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PairLabel {
    /// `x_i`, 1-based.
    Path(usize),
    /// `y_i`, 1-based.
    Pendant(usize),
}

/// Bob's pairing on `C*_{2k+1} − {a₁, b₁}`: `x_{2i−1} ↔ x_{2i}` and `y_{2i−1} ↔ y_{2i}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PairingPlan {
    pub a1: Vertex,
    pub b1: Vertex,
    partner: Vec<Option<Vertex>>,
    labels: Vec<Option<PairLabel>>,
}

impl PairingPlan {
    pub fn partner(&self, v: Vertex) -> Option<Vertex> {
        self.partner.get(v).copied().flatten()
    }

    pub fn label(&self, v: Vertex) -> Option<PairLabel> {
        self.labels.get(v).copied().flatten()
    }

    /// Original id of `x_i` (1-based).
    pub fn path_vertex(&self, i: usize) -> Option<Vertex> {
        self.labels.iter().position(|&l| l == Some(PairLabel::Path(i)))
    }

    /// Original id of `y_i` (1-based).
    pub fn pendant_vertex(&self, i: usize) -> Option<Vertex> {
        self.labels.iter().position(|&l| l == Some(PairLabel::Pendant(i)))
    }

    pub fn paired(&self) -> VertexSet {
        self.partner.iter().enumerate().filter(|(_, p)| p.is_some()).map(|(v, _)| v).collect()
    }
}

/// Plan for Bob once Alice has opened with the leaf `a1` on `C*_{2k+1}`.
///
/// `x₁` is the cycle neighbor of `b₁` with the smaller id, and the labels
/// continue around the cycle away from `b₁`.
pub fn make_pairing_plan(g: &crate::graph::Graph, a1: Vertex) -> Result<PairingPlan, StrategyError> {
    let m = match canonical_spiked_cycle_length(g) {
        Some(m) if m % 2 == 1 => m,
        _ => return Err(precondition("graph is not a canonically labeled fully spiked odd cycle")),
    };
    if !(m..2 * m).contains(&a1) {
        return Err(precondition("opening vertex is not a leaf"));
    }
    let b1 = a1 - m;
    let forward = (b1 + 1) % m;
    let backward = (b1 + m - 1) % m;
    let step = if forward < backward { 1 } else { m - 1 };
    let mut partner = vec![None; 2 * m];
    let mut labels = vec![None; 2 * m];
    let xs: Vec<Vertex> = (1..m).map(|j| (b1 + j * step) % m).collect();
    for (j, &x) in xs.iter().enumerate() {
        labels[x] = Some(PairLabel::Path(j + 1));
        labels[x + m] = Some(PairLabel::Pendant(j + 1));
    }
    for pair in xs.chunks(2) {
        let (p, q) = (pair[0], pair[1]);
        partner[p] = Some(q);
        partner[q] = Some(p);
        partner[p + m] = Some(q + m);
        partner[q + m] = Some(p + m);
    }
    Ok(PairingPlan { a1, b1, partner, labels })
}

/// Bob's reply under `plan`: `b₁` first, then the partner of Alice's last move.
pub fn bob_spiked_odd_pairing_move(state: &GameState, plan: &PairingPlan) -> Result<Vertex, StrategyError> {
    if state.to_move() != Side::Bob || state.is_over() {
        return Err(precondition("Bob is not to move"));
    }
    let t = state.transcript();
    if t[0].vertex != plan.a1 {
        return Err(StrategyError::Inconsistent(format!("Alice opened with {}, plan expects {}", t[0].vertex, plan.a1)));
    }
    if t.len() == 1 {
        return Ok(plan.b1);
    }
    if t[1].vertex != plan.b1 {
        return Err(StrategyError::Inconsistent("Bob's first move was not b1".to_string()));
    }
    for round in t[2..].chunks(2) {
        if let [a, b] = round {
            if plan.partner(a.vertex) != Some(b.vertex) {
                return Err(StrategyError::Inconsistent(format!("{} was not answered by its partner", a.vertex)));
            }
        }
    }
    let last = t.last().unwrap().vertex;
    plan.partner(last)
        .ok_or_else(|| StrategyError::Inconsistent(format!("vertex {last} has no partner")))
}

/// Bob's pairing strategy on `C*_{2k+1}` with weight 1 on the cycle vertices.
/// The plan is derived from Alice's opening move.
#[derive(Default)]
pub struct SpikedOddPairingBob {
    plan: Option<PairingPlan>,
}

impl SpikedOddPairingBob {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn plan(&self) -> Option<&PairingPlan> {
        self.plan.as_ref()
    }
}

impl Strategy for SpikedOddPairingBob {
    fn select(&mut self, state: &GameState) -> Result<Vertex, StrategyError> {
        let a1 = state
            .transcript()
            .first()
            .ok_or_else(|| precondition("Bob is not to move"))?
            .vertex;
        if self.plan.as_ref().map(|p| p.a1) != Some(a1) {
            if prop8_weights(state.graph()).ok().as_ref() != Some(state.weights()) {
                return Err(precondition("weights are not 1 on the cycle and 0 on the leaves"));
            }
            self.plan = Some(make_pairing_plan(state.graph(), a1)?);
        }
        bob_spiked_odd_pairing_move(state, self.plan.as_ref().unwrap())
    }
}
