//! Human-versus-engine games shared by `play` and `serve`.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;
use std::sync::{Arc, Mutex};
use std::time::{Duration, Instant};

use grabgame_core::engine::{GameState, Solver};
use grabgame_core::families::{canonical_spiked_cycle_length, is_cstar_free, prop8_weights};
use grabgame_core::strategy::{CStarFreeAlice, EvenSpikedCycleAlice, OptimalStrategy, SpikedOddPairingBob};
use grabgame_core::{Graph, IllegalReason, Side, Strategy, Vertex, WeightFn};
use serde::Serialize;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EnginePolicy {
    Optimal,
    Paper,
}

impl FromStr for EnginePolicy {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "optimal" => Ok(EnginePolicy::Optimal),
            "paper" => Ok(EnginePolicy::Paper),
            _ => Err(format!("unknown engine policy `{s}` (expected optimal or paper)")),
        }
    }
}

pub fn parse_side(s: &str) -> Result<Side, String> {
    match s {
        "alice" => Ok(Side::Alice),
        "bob" => Ok(Side::Bob),
        _ => Err(format!("unknown side `{s}` (expected alice or bob)")),
    }
}

/// Which strategy drives the engine.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EngineKind {
    Optimal,
    CStarFree,
    EvenSpikedCycle,
    OddSpikedPairing,
}

impl EngineKind {
    /// Dispatch for the `paper` policy:
    /// - engine is Bob on a canonically labeled C*_m, m odd, with weight 1 on the cycle and 0 on the leaves: pairing;
    /// - engine is Alice on a canonically labeled C*_m, m even, binary weights: even spiked cycle opening;
    /// - engine is Alice on an even C*-free graph with binary weights: the C*-free rule;
    /// - otherwise optimal play.
    pub fn dispatch(policy: EnginePolicy, g: &Graph, w: &WeightFn, engine: Side) -> EngineKind {
        if policy == EnginePolicy::Optimal {
            return EngineKind::Optimal;
        }
        let spiked = canonical_spiked_cycle_length(g);
        match engine {
            Side::Bob if spiked.is_some_and(|m| m % 2 == 1) && prop8_weights(g).ok().as_ref() == Some(w) => {
                EngineKind::OddSpikedPairing
            }
            Side::Alice if w.is_binary() && spiked.is_some_and(|m| m % 2 == 0) => EngineKind::EvenSpikedCycle,
            Side::Alice if w.is_binary() && g.n().is_multiple_of(2) && is_cstar_free(&g.view()) => EngineKind::CStarFree,
            _ => EngineKind::Optimal,
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            EngineKind::Optimal => "optimal",
            EngineKind::CStarFree => "cstar-free",
            EngineKind::EvenSpikedCycle => "even-spiked-cycle",
            EngineKind::OddSpikedPairing => "odd-spiked-pairing",
        }
    }
}

enum Engine {
    Optimal,
    CStarFree(CStarFreeAlice),
    EvenSpikedCycle(EvenSpikedCycleAlice),
    OddSpikedPairing(SpikedOddPairingBob),
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum SessionError {
    #[error("the game is over")]
    GameOver,
    #[error("vertex {vertex} is out of range")]
    OutOfRange { vertex: Vertex },
    #[error("{0}")]
    Illegal(String),
    #[error(transparent)]
    Invalid(grabgame_core::Error),
}

pub struct Session {
    pub id: String,
    pub human_side: Side,
    pub policy: EnginePolicy,
    pub engine_kind: EngineKind,
    state: GameState,
    engine: Engine,
    solver: Solver,
    optimal: OptimalStrategy,
    /// Engine moves that fell back to optimal play because the dispatched strategy declined.
    pub fallbacks: usize,
}

impl Session {
    pub fn new(graph: Graph, weights: WeightFn, human_side: Side, policy: EnginePolicy) -> Result<Self, grabgame_core::Error> {
        let state = GameState::new(graph.clone(), weights.clone())?;
        let solver = Solver::new(graph.clone(), weights.clone())?;
        let engine_kind = EngineKind::dispatch(policy, &graph, &weights, human_side.other());
        let engine = match engine_kind {
            EngineKind::Optimal => Engine::Optimal,
            EngineKind::CStarFree => Engine::CStarFree(CStarFreeAlice::new()),
            EngineKind::EvenSpikedCycle => Engine::EvenSpikedCycle(EvenSpikedCycleAlice::new()),
            EngineKind::OddSpikedPairing => Engine::OddSpikedPairing(SpikedOddPairingBob::new()),
        };
        let mut s = Session {
            id: uuid::Uuid::new_v4().to_string(),
            human_side,
            policy,
            engine_kind,
            state,
            engine,
            solver,
            optimal: OptimalStrategy::new(),
            fallbacks: 0,
        };
        s.run_engine();
        Ok(s)
    }

    pub fn state(&self) -> &GameState {
        &self.state
    }

    fn engine_move(&mut self) -> Vertex {
        let chosen = match &mut self.engine {
            Engine::Optimal => None,
            Engine::CStarFree(s) => Some(s.select(&self.state)),
            Engine::EvenSpikedCycle(s) => Some(s.select(&self.state)),
            Engine::OddSpikedPairing(s) => Some(s.select(&self.state)),
        };
        match chosen {
            Some(Ok(v)) if self.state.check_move(v).is_ok() => v,
            other => {
                if other.is_some() {
                    self.fallbacks += 1;
                }
                self.optimal
                    .select(&self.state)
                    .expect("optimal play exists in every nonterminal position")
            }
        }
    }

    fn run_engine(&mut self) {
        while !self.state.is_over() && self.state.to_move() != self.human_side {
            let v = self.engine_move();
            self.state.apply_move(v).expect("engine move is legal");
        }
    }

    /// Applies the human move, then engine replies until the human is to move again.
    pub fn human_move(&mut self, v: Vertex) -> Result<(), SessionError> {
        if self.state.is_over() {
            return Err(SessionError::GameOver);
        }
        match self.state.check_move(v) {
            Ok(()) => {}
            Err(grabgame_core::Error::IllegalMove { reason: IllegalReason::OutOfRange, .. })
            | Err(grabgame_core::Error::VertexOutOfRange { .. }) => return Err(SessionError::OutOfRange { vertex: v }),
            Err(grabgame_core::Error::IllegalMove { reason, .. }) => return Err(SessionError::Illegal(reason.to_string())),
            Err(grabgame_core::Error::GameOver) => return Err(SessionError::GameOver),
            Err(e) => return Err(SessionError::Invalid(e)),
        }
        self.state.apply_move(v).map_err(SessionError::Invalid)?;
        self.run_engine();
        Ok(())
    }

    /// Game value of the current position for the player to move.
    pub fn value(&mut self) -> i64 {
        self.solver.value(self.state.remaining()).expect("bounded position").0
    }

    /// `w(v) − d(S − v)` for each legal move of the player to move.
    pub fn analysis(&mut self) -> Vec<MoveAnalysis> {
        if self.state.is_over() {
            return Vec::new();
        }
        self.solver
            .move_values(self.state.remaining())
            .expect("bounded position")
            .into_iter()
            .map(|(vertex, value_after_move)| MoveAnalysis { vertex, value_after_move })
            .collect()
    }

    pub fn view(&self) -> StateView {
        StateView::of(&self.state)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, serde::Deserialize)]
pub struct MoveAnalysis {
    pub vertex: Vertex,
    pub value_after_move: i64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, serde::Deserialize)]
pub struct Scores {
    pub alice: i64,
    pub bob: i64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, serde::Deserialize)]
pub struct MoveView {
    pub side: String,
    pub vertex: Vertex,
}

/// JSON shape of a game position.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, serde::Deserialize)]
pub struct StateView {
    pub n: usize,
    pub edges: Vec<[Vertex; 2]>,
    pub weights: Vec<i64>,
    pub remaining: Vec<Vertex>,
    pub scores: Scores,
    pub to_move: Option<String>,
    pub legal_moves: Vec<Vertex>,
    pub transcript: Vec<MoveView>,
    pub game_over: bool,
    pub winner: Option<String>,
}

impl StateView {
    pub fn of(s: &GameState) -> Self {
        let over = s.is_over();
        StateView {
            n: s.graph().n(),
            edges: s.graph().edges().into_iter().map(|(u, v)| [u, v]).collect(),
            weights: s.weights().as_slice().to_vec(),
            remaining: s.remaining().iter().collect(),
            scores: Scores { alice: s.score(Side::Alice), bob: s.score(Side::Bob) },
            to_move: (!over).then(|| s.to_move().as_str().to_string()),
            legal_moves: if over { Vec::new() } else { s.legal_moves().map(|m| m.iter().collect()).unwrap_or_default() },
            transcript: s
                .transcript()
                .iter()
                .map(|m| MoveView { side: m.side.as_str().to_string(), vertex: m.vertex })
                .collect(),
            game_over: over,
            winner: s.winner().map(|w| w.as_str().to_string()),
        }
    }
}

/// "Bob wins by 1", or `None` while the game runs.
pub fn result_banner(s: &GameState) -> Option<String> {
    let winner = s.winner()?;
    let margin = s.margin(winner);
    Some(if margin == 0 { format!("{winner} wins on a tie (0)") } else { format!("{winner} wins by {margin}") })
}

impl fmt::Debug for Session {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Session")
            .field("id", &self.id)
            .field("human_side", &self.human_side)
            .field("engine_kind", &self.engine_kind)
            .field("remaining", &self.state.remaining())
            .finish()
    }
}

pub const DEFAULT_IDLE_TIMEOUT: Duration = Duration::from_secs(30 * 60);

struct Entry {
    session: Arc<Mutex<Session>>,
    last_used: Instant,
}

/// In-memory sessions, evicted after an idle timeout.
pub struct SessionStore {
    sessions: Mutex<HashMap<String, Entry>>,
    idle_timeout: Duration,
}

impl SessionStore {
    pub fn new(idle_timeout: Duration) -> Self {
        Self { sessions: Mutex::new(HashMap::new()), idle_timeout }
    }

    pub fn insert(&self, session: Session) -> (String, Arc<Mutex<Session>>) {
        let id = session.id.clone();
        let session = Arc::new(Mutex::new(session));
        let entry = Entry { session: session.clone(), last_used: Instant::now() };
        self.sessions.lock().unwrap().insert(id.clone(), entry);
        (id, session)
    }

    pub fn get(&self, id: &str) -> Option<Arc<Mutex<Session>>> {
        self.get_at(id, Instant::now())
    }

    fn get_at(&self, id: &str, now: Instant) -> Option<Arc<Mutex<Session>>> {
        let mut map = self.sessions.lock().unwrap();
        let entry = map.get_mut(id)?;
        if now.saturating_duration_since(entry.last_used) > self.idle_timeout {
            map.remove(id);
            return None;
        }
        entry.last_used = now;
        Some(entry.session.clone())
    }

    pub fn remove(&self, id: &str) -> bool {
        self.sessions.lock().unwrap().remove(id).is_some()
    }

    /// Drops sessions idle for longer than the timeout; returns how many.
    pub fn evict_idle(&self, now: Instant) -> usize {
        let mut map = self.sessions.lock().unwrap();
        let before = map.len();
        map.retain(|_, e| now.saturating_duration_since(e.last_used) <= self.idle_timeout);
        before - map.len()
    }

    pub fn len(&self) -> usize {
        self.sessions.lock().unwrap().len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn idle_timeout(&self) -> Duration {
        self.idle_timeout
    }
}
