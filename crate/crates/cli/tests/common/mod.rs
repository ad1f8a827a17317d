//! Helpers shared by the HTTP tests and the acceptance run.
#![allow(dead_code)]

use axum::body::Body;
use axum::http::{Request, StatusCode};
use axum::Router;
use clusterkit::quiver::Quiver;
use clusterkit::seed::Seed;
use clusterkit_cli::service::{router, AppState};
use http_body_util::BodyExt;
use rand::{Rng, SeedableRng};
use serde_json::{json, Value};
use tower::ServiceExt;

pub async fn send(app: &Router, method: &str, uri: &str, body: Option<Value>) -> (StatusCode, Value) {
    let req = Request::builder().method(method).uri(uri).header("content-type", "application/json");
    let req = match body {
        Some(b) => req.body(Body::from(b.to_string())).unwrap(),
        None => req.body(Body::empty()).unwrap(),
    };
    let resp = app.clone().oneshot(req).await.unwrap();
    let status = resp.status();
    let bytes = resp.into_body().collect().await.unwrap().to_bytes();
    let value = if bytes.is_empty() { Value::Null } else { serde_json::from_slice(&bytes).unwrap() };
    (status, value)
}

pub async fn send_raw(app: &Router, method: &str, uri: &str, body: &str) -> StatusCode {
    let req = Request::builder()
        .method(method)
        .uri(uri)
        .header("content-type", "application/json")
        .body(Body::from(body.to_string()))
        .unwrap();
    app.clone().oneshot(req).await.unwrap().status()
}

pub fn app() -> Router {
    router(AppState::new(10_000))
}

pub fn a2() -> Value {
    json!({ "quiver": { "n": 2, "arrows": [[1, 2, 1]] } })
}

pub async fn create(app: &Router, quiver: Value) -> String {
    let (status, body) = send(app, "POST", "/sessions", Some(quiver)).await;
    assert_eq!(status, StatusCode::CREATED);
    body["id"].as_str().unwrap().to_string()
}

/// What the service should report, computed from library calls only.
pub fn expected(seed: &Seed, history: &[usize]) -> Value {
    json!({
        "quiver": serde_json::to_value(seed.quiver().to_json()).unwrap(),
        "cluster": seed.cluster().iter().map(|v| v.to_string()).collect::<Vec<_>>(),
        "cluster_terms": seed.cluster().iter().map(|v| serde_json::to_value(v.to_json()).unwrap()).collect::<Vec<_>>(),
        "coefficients": seed.coefficients().iter().map(|v| v.to_string()).collect::<Vec<_>>(),
        "history": history.iter().map(|k| k + 1).collect::<Vec<_>>(),
    })
}

pub fn strip_classification(mut v: Value) -> Value {
    v.as_object_mut().unwrap().remove("classification");
    v
}

/// Drives `count` random mutate/undo/get scripts and compares every
/// response with the same steps done through the library. Returns the
/// number of compared states.
pub async fn random_scripts(app: &Router, count: usize, rng_seed: u64) -> usize {
    let quivers = [
        json!({ "n": 2, "arrows": [[1, 2, 1]] }),
        json!({ "n": 3, "arrows": [[1, 2, 1], [2, 3, 1]] }),
        json!({ "n": 3, "arrows": [[1, 2, 1], [2, 3, 1], [3, 1, 1]] }),
        json!({ "n": 4, "arrows": [[1, 2, 1], [3, 2, 1], [4, 2, 1]] }),
        json!({ "n": 2, "arrows": [[1, 2, 2]] }),
        json!({ "n": 2, "frozen": 2, "arrows": [[1, 2, 1], [1, 3, 1], [2, 4, 1]] }),
    ];
    let mut rng = rand::rngs::StdRng::seed_from_u64(rng_seed);
    let mut compared = 0;
    for script in 0..count {
        let qjson = quivers[script % quivers.len()].clone();
        let q = Quiver::from_json(&serde_json::from_value(qjson.clone()).unwrap()).unwrap();
        let id = create(app, json!({ "quiver": qjson })).await;
        let mut stack: Vec<Seed> = vec![Seed::initial(&q)];
        let mut history: Vec<usize> = Vec::new();
        for _ in 0..rng.gen_range(5..20) {
            let action = rng.gen_range(0..10);
            let (status, body) = if action < 6 {
                let k = rng.gen_range(0..=q.n() + 1);
                let resp = send(app, "POST", &format!("/sessions/{id}/mutate"), Some(json!({ "vertex": k }))).await;
                if (1..=q.n()).contains(&k) {
                    assert_eq!(resp.0, StatusCode::OK);
                    let next = stack.last().unwrap().mutate(k - 1).unwrap();
                    stack.push(next);
                    history.push(k - 1);
                } else {
                    assert_eq!(resp.0, StatusCode::BAD_REQUEST);
                    continue;
                }
                resp
            } else if action < 9 {
                let resp = send(app, "POST", &format!("/sessions/{id}/undo"), None).await;
                if history.is_empty() {
                    assert_eq!(resp.0, StatusCode::CONFLICT);
                    continue;
                }
                stack.pop();
                history.pop();
                resp
            } else {
                send(app, "GET", &format!("/sessions/{id}"), None).await
            };
            assert_eq!(status, StatusCode::OK);
            compared += 1;
            assert_eq!(
                strip_classification(body["state"].clone()),
                expected(stack.last().unwrap(), &history),
                "script {script}"
            );
        }
        // replaying the history from the initial seed reproduces the state
        let mut replay = Seed::initial(&q);
        for &k in &history {
            replay = replay.mutate(k).unwrap();
        }
        assert_eq!(&replay, stack.last().unwrap());
        assert_eq!(send(app, "DELETE", &format!("/sessions/{id}"), None).await.0, StatusCode::NO_CONTENT);
    }
    compared
}
