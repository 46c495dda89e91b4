use std::sync::Arc;

use axum::body::Body;
use axum::http::{Request, StatusCode};
use axum::Router;
use grabgame::server::router;
use grabgame::session::{SessionStore, DEFAULT_IDLE_TIMEOUT};
use grabgame_core::families::{fully_spiked_cycle, prop8_weights};
use grabgame_core::{game_value, Graph, VertexSet, WeightFn};
use http_body_util::BodyExt;
use serde_json::{json, Value};
use tower::ServiceExt;

fn app() -> Router {
    router(Arc::new(SessionStore::new(DEFAULT_IDLE_TIMEOUT)))
}

async fn call(app: &Router, method: &str, uri: &str, body: Option<Value>) -> (StatusCode, Value) {
    let req = Request::builder().method(method).uri(uri).header("content-type", "application/json");
    let req = match body {
        Some(b) => req.body(Body::from(b.to_string())).unwrap(),
        None => req.body(Body::empty()).unwrap(),
    };
    let resp = app.clone().oneshot(req).await.unwrap();
    let status = resp.status();
    let bytes = resp.into_body().collect().await.unwrap().to_bytes();
    (status, serde_json::from_slice(&bytes).unwrap_or(Value::Null))
}

fn c3_prop8_request() -> Value {
    let g = fully_spiked_cycle(3).unwrap();
    json!({
        "graph6": grabgame::emit_graph6(&g),
        "weights": prop8_weights(&g).unwrap().as_slice(),
        "human_side": "alice",
        "engine_policy": "paper",
    })
}

fn value_of(state: &Value) -> i64 {
    let n = state["n"].as_u64().unwrap() as usize;
    let edges: Vec<(usize, usize)> = state["edges"]
        .as_array()
        .unwrap()
        .iter()
        .map(|e| (e[0].as_u64().unwrap() as usize, e[1].as_u64().unwrap() as usize))
        .collect();
    let g = Graph::new(n, &edges).unwrap();
    let w = WeightFn::integer(state["weights"].as_array().unwrap().iter().map(|x| x.as_i64().unwrap()).collect());
    let remaining: VertexSet = state["remaining"].as_array().unwrap().iter().map(|v| v.as_u64().unwrap() as usize).collect();
    game_value(&g, &w, remaining).unwrap().0
}

/// Replays `prefix` in a fresh session and returns the session id and state.
async fn replay(app: &Router, prefix: &[u64]) -> (String, Value) {
    let (status, created) = call(app, "POST", "/api/session", Some(c3_prop8_request())).await;
    assert_eq!(status, StatusCode::OK);
    let id = created["session_id"].as_str().unwrap().to_string();
    let mut state = created["state"].clone();
    for &v in prefix {
        let (status, body) = call(app, "POST", &format!("/api/session/{id}/move"), Some(json!({ "vertex": v }))).await;
        assert_eq!(status, StatusCode::OK, "{body}");
        state = body["state"].clone();
    }
    (id, state)
}

#[tokio::test]
async fn every_human_line_on_c3_star_ends_with_bob_ahead_by_one() {
    let app = app();
    let mut stack: Vec<Vec<u64>> = vec![Vec::new()];
    let mut finished = 0;
    while let Some(prefix) = stack.pop() {
        let (id, state) = replay(&app, &prefix).await;
        if state["game_over"].as_bool().unwrap() {
            let (_, body) = call(&app, "GET", &format!("/api/session/{id}"), None).await;
            assert_eq!(body["result"], "Bob wins by 1");
            assert_eq!(body["state"]["winner"], "bob");
            assert_eq!(body["state"]["scores"]["bob"].as_i64().unwrap() - body["state"]["scores"]["alice"].as_i64().unwrap(), 1);
            finished += 1;
        } else {
            // Human to move; the analysis maximum is the game value of the position.
            assert_eq!(state["to_move"], "alice");
            let (status, analysis) = call(&app, "GET", &format!("/api/session/{id}/analysis"), None).await;
            assert_eq!(status, StatusCode::OK);
            let values: Vec<i64> = analysis.as_array().unwrap().iter().map(|a| a["value_after_move"].as_i64().unwrap()).collect();
            assert_eq!(values.iter().max().copied(), Some(value_of(&state)));
            let moves: Vec<u64> = analysis.as_array().unwrap().iter().map(|a| a["vertex"].as_u64().unwrap()).collect();
            let legal: Vec<u64> = state["legal_moves"].as_array().unwrap().iter().map(|v| v.as_u64().unwrap()).collect();
            assert_eq!(moves, legal);
            for v in legal {
                let mut next = prefix.clone();
                next.push(v);
                stack.push(next);
            }
        }
        assert_eq!(call(&app, "DELETE", &format!("/api/session/{id}"), None).await.0, StatusCode::OK);
    }
    assert_eq!(finished, 12);
}

#[tokio::test]
async fn state_shape_and_errors() {
    let app = app();
    let (status, created) =
        call(&app, "POST", "/api/session", Some(json!({"n": 3, "edges": [[0, 1], [1, 2]], "weights": [0, 1, 0], "human_side": "alice"}))).await;
    assert_eq!(status, StatusCode::OK);
    let id = created["session_id"].as_str().unwrap();
    let state = &created["state"];
    for key in ["n", "edges", "weights", "remaining", "scores", "to_move", "legal_moves", "transcript", "game_over", "winner"] {
        assert!(state.get(key).is_some(), "missing {key}");
    }
    assert_eq!(state["legal_moves"], json!([0, 2]));
    assert_eq!(state["winner"], Value::Null);

    let (status, body) = call(&app, "POST", &format!("/api/session/{id}/move"), Some(json!({"vertex": 1}))).await;
    assert_eq!(status, StatusCode::CONFLICT);
    assert_eq!(body["error"], "vertex is a cut vertex of the current graph");
    assert_eq!(call(&app, "POST", &format!("/api/session/{id}/move"), Some(json!({"vertex": "x"}))).await.0, StatusCode::BAD_REQUEST);
    assert_eq!(call(&app, "POST", &format!("/api/session/{id}/move"), Some(json!({"vertex": 9}))).await.0, StatusCode::BAD_REQUEST);

    let (status, body) = call(&app, "POST", &format!("/api/session/{id}/move"), Some(json!({"vertex": 0}))).await;
    assert_eq!(status, StatusCode::OK);
    // Engine (Bob) replied with the middle vertex, Alice takes the last one.
    assert_eq!(body["state"]["transcript"], json!([{"side": "alice", "vertex": 0}, {"side": "bob", "vertex": 1}]));
    let (_, body) = call(&app, "POST", &format!("/api/session/{id}/move"), Some(json!({"vertex": 2}))).await;
    assert_eq!(body["state"]["game_over"], true);
    assert_eq!(body["state"]["winner"], "bob");
    assert_eq!(call(&app, "POST", &format!("/api/session/{id}/move"), Some(json!({"vertex": 2}))).await.0, StatusCode::CONFLICT);
    assert_eq!(call(&app, "GET", &format!("/api/session/{id}/analysis"), None).await.1, json!([]));

    assert_eq!(call(&app, "DELETE", &format!("/api/session/{id}"), None).await.1, json!({}));
    assert_eq!(call(&app, "GET", &format!("/api/session/{id}"), None).await.0, StatusCode::NOT_FOUND);
    assert_eq!(call(&app, "DELETE", &format!("/api/session/{id}"), None).await.0, StatusCode::NOT_FOUND);
    assert_eq!(call(&app, "GET", "/api/session/nope/analysis", None).await.0, StatusCode::NOT_FOUND);
}

#[tokio::test]
async fn malformed_session_requests_are_rejected() {
    let app = app();
    let bad = [
        json!({"graph6": "B?", "weights": [0, 0, 0], "human_side": "alice"}),
        json!({"graph6": "Bw", "weights": [0, 2, 0], "human_side": "alice"}),
        json!({"graph6": "Bw", "weights": [0, 1], "human_side": "alice"}),
        json!({"graph6": "Bw", "weights": [0, 1, 0], "human_side": "carol"}),
        json!({"graph6": "Bw", "weights": [0, 1, 0], "human_side": "bob", "engine_policy": "random"}),
        json!({"graph6": "B", "weights": [0, 1, 0], "human_side": "bob"}),
        json!({"n": 3, "edges": [[0, 3]], "weights": [0, 1, 0], "human_side": "bob"}),
        json!({"graph6": "Bw", "n": 3, "weights": [0, 1, 0], "human_side": "bob"}),
        json!({"weights": [0, 1, 0], "human_side": "bob"}),
    ];
    for body in bad {
        assert_eq!(call(&app, "POST", "/api/session", Some(body.clone())).await.0, StatusCode::BAD_REQUEST, "{body}");
    }
    let req = Request::builder().method("POST").uri("/api/session").body(Body::from("{not json")).unwrap();
    assert_eq!(app.clone().oneshot(req).await.unwrap().status(), StatusCode::BAD_REQUEST);
}

#[tokio::test]
async fn engine_moves_first_when_human_is_bob() {
    let app = app();
    let g = fully_spiked_cycle(4).unwrap();
    let body = json!({"graph6": grabgame::emit_graph6(&g), "weights": [1, 0, 0, 0, 0, 0, 0, 1], "human_side": "bob", "engine_policy": "paper"});
    let (status, created) = call(&app, "POST", "/api/session", Some(body)).await;
    assert_eq!(status, StatusCode::OK);
    assert_eq!(created["engine"], "even-spiked-cycle");
    // Opening rule: a leaf of weight 1.
    assert_eq!(created["state"]["transcript"], json!([{"side": "alice", "vertex": 7}]));
    assert_eq!(created["state"]["to_move"], "bob");
}
