//! JSON session API under `/api`.

use std::sync::Arc;
use std::time::{Duration, Instant};

use axum::body::Bytes;
use axum::extract::{Path, State};
use axum::http::StatusCode;
use axum::response::{IntoResponse, Response};
use axum::routing::{get, post};
use axum::{Json, Router};
use grabgame_core::{Graph, Vertex, WeightFn};
use serde::Deserialize;
use serde_json::{json, Value};

use crate::graph6::parse_graph6;
use crate::session::{parse_side, result_banner, EnginePolicy, Session, SessionError, SessionStore};

/// Largest graph accepted for a session; the solver backs every analysis call.
pub const MAX_SESSION_VERTICES: usize = 20;

#[derive(Debug)]
pub struct ApiError(StatusCode, String);

impl ApiError {
    fn bad_request(msg: impl Into<String>) -> Self {
        ApiError(StatusCode::BAD_REQUEST, msg.into())
    }

    fn not_found() -> Self {
        ApiError(StatusCode::NOT_FOUND, "unknown session".into())
    }
}

impl IntoResponse for ApiError {
    fn into_response(self) -> Response {
        (self.0, Json(json!({ "error": self.1 }))).into_response()
    }
}

impl From<SessionError> for ApiError {
    fn from(e: SessionError) -> Self {
        match e {
            SessionError::OutOfRange { .. } | SessionError::Invalid(_) => ApiError::bad_request(e.to_string()),
            SessionError::GameOver | SessionError::Illegal(_) => ApiError(StatusCode::CONFLICT, e.to_string()),
        }
    }
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct CreateRequest {
    graph6: Option<String>,
    n: Option<usize>,
    edges: Option<Vec<[Vertex; 2]>>,
    weights: Option<Vec<i64>>,
    human_side: String,
    #[serde(default)]
    engine_policy: Option<String>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct MoveRequest {
    vertex: Vertex,
}

fn parse_json<T: serde::de::DeserializeOwned>(body: &[u8]) -> Result<T, ApiError> {
    serde_json::from_slice(body).map_err(|e| ApiError::bad_request(format!("malformed request body: {e}")))
}

fn build_session(req: CreateRequest) -> Result<Session, ApiError> {
    let graph = match (req.graph6, req.n) {
        (Some(g6), None) => parse_graph6(&g6).map_err(|e| ApiError::bad_request(e.to_string()))?,
        (None, Some(n)) => {
            let edges: Vec<(Vertex, Vertex)> = req.edges.unwrap_or_default().into_iter().map(|[u, v]| (u, v)).collect();
            Graph::new(n, &edges).map_err(|e| ApiError::bad_request(e.to_string()))?
        }
        _ => return Err(ApiError::bad_request("give exactly one of `graph6` or `n` with `edges`")),
    };
    if graph.n() > MAX_SESSION_VERTICES {
        return Err(ApiError::bad_request(format!("sessions support at most {MAX_SESSION_VERTICES} vertices")));
    }
    let weights = match req.weights {
        Some(w) => WeightFn::binary(w).map_err(|e| ApiError::bad_request(e.to_string()))?,
        None => WeightFn::zeros(graph.n()),
    };
    let human_side = parse_side(&req.human_side).map_err(ApiError::bad_request)?;
    let policy = match req.engine_policy.as_deref() {
        None => EnginePolicy::Optimal,
        Some(p) => p.parse().map_err(ApiError::bad_request)?,
    };
    Session::new(graph, weights, human_side, policy).map_err(|e| ApiError::bad_request(e.to_string()))
}

fn state_json(s: &Session) -> Value {
    json!({
        "state": s.view(),
        "engine": s.engine_kind.as_str(),
        "result": result_banner(s.state()),
    })
}

type Store = Arc<SessionStore>;

async fn create(State(store): State<Store>, body: Bytes) -> Result<Json<Value>, ApiError> {
    let req: CreateRequest = parse_json(&body)?;
    let session = tokio::task::spawn_blocking(move || build_session(req))
        .await
        .map_err(|e| ApiError(StatusCode::INTERNAL_SERVER_ERROR, e.to_string()))??;
    let mut out = state_json(&session);
    let (id, _) = store.insert(session);
    out["session_id"] = Value::String(id);
    Ok(Json(out))
}

async fn show(State(store): State<Store>, Path(id): Path<String>) -> Result<Json<Value>, ApiError> {
    let session = store.get(&id).ok_or_else(ApiError::not_found)?;
    let s = session.lock().unwrap();
    Ok(Json(state_json(&s)))
}

async fn play_move(State(store): State<Store>, Path(id): Path<String>, body: Bytes) -> Result<Json<Value>, ApiError> {
    let session = store.get(&id).ok_or_else(ApiError::not_found)?;
    let req: MoveRequest = parse_json(&body)?;
    tokio::task::spawn_blocking(move || {
        let mut s = session.lock().unwrap();
        s.human_move(req.vertex)?;
        Ok(Json(state_json(&s)))
    })
    .await
    .map_err(|e| ApiError(StatusCode::INTERNAL_SERVER_ERROR, e.to_string()))?
}

async fn analysis(State(store): State<Store>, Path(id): Path<String>) -> Result<Json<Value>, ApiError> {
    let session = store.get(&id).ok_or_else(ApiError::not_found)?;
    tokio::task::spawn_blocking(move || {
        let mut s = session.lock().unwrap();
        Ok(Json(serde_json::to_value(s.analysis()).expect("serializable")))
    })
    .await
    .map_err(|e| ApiError(StatusCode::INTERNAL_SERVER_ERROR, e.to_string()))?
}

async fn delete(State(store): State<Store>, Path(id): Path<String>) -> Result<Json<Value>, ApiError> {
    if store.remove(&id) {
        Ok(Json(json!({})))
    } else {
        Err(ApiError::not_found())
    }
}

pub fn router(store: Store) -> Router {
    Router::new()
        .route("/api/session", post(create))
        .route("/api/session/{id}", get(show).delete(delete))
        .route("/api/session/{id}/move", post(play_move))
        .route("/api/session/{id}/analysis", get(analysis))
        .with_state(store)
}

/// Serves until ctrl-c; idle sessions are swept once a minute.
pub async fn serve(port: u16, idle_timeout: Duration) -> std::io::Result<()> {
    let store = Arc::new(SessionStore::new(idle_timeout));
    let sweeper = store.clone();
    tokio::spawn(async move {
        let mut tick = tokio::time::interval(Duration::from_secs(60));
        loop {
            tick.tick().await;
            sweeper.evict_idle(Instant::now());
        }
    });
    let listener = tokio::net::TcpListener::bind(("0.0.0.0", port)).await?;
    eprintln!("listening on http://{}", listener.local_addr()?);
    axum::serve(listener, router(store))
        .with_graceful_shutdown(async {
            let _ = tokio::signal::ctrl_c().await;
        })
        .await
}
