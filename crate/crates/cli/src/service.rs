//! HTTP/JSON session service.
//!
//! A session holds an initial seed and the list of mutations applied to it.
//! Vertices are 1-indexed on the wire; exact coefficients travel as strings.

use axum::body::Bytes;
use axum::extract::{Path, Query, State};
use axum::http::StatusCode;
use axum::response::{IntoResponse, Response};
use axum::routing::{get, post};
use axum::{Json, Router};
use clusterkit::laurent::LaurentJson;
use clusterkit::polygon::{find_triangulation, Diagonal, Triangulation, TriangulationJson};
use clusterkit::quiver::{Quiver, QuiverJson};
use clusterkit::seed::{exchange_graph, ExchangeGraphJson, GraphResult, Seed, SeedError, SeedJson};
use serde::{Deserialize, Serialize};
use serde_json::json;
use std::collections::HashMap;
use std::path::PathBuf;
use std::sync::{Arc, Mutex};

/// Largest exchange polynomial a mutation request may build.
pub const MUTATION_TERM_BUDGET: usize = 200_000;

// ---- Sessions ----

#[derive(Clone, Debug)]
pub struct Session {
    pub id: String,
    pub initial: Seed,
    /// `(vertex, seed before the mutation)`, oldest first.
    pub history: Vec<(usize, Seed)>,
    pub current: Seed,
    diagram: String,
    finiteness: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Classification {
    pub diagram: String,
    pub finiteness: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct StateJson {
    pub quiver: QuiverJson,
    /// Rendered variables, `x1` first.
    pub cluster: Vec<String>,
    /// The same variables term by term.
    pub cluster_terms: Vec<LaurentJson>,
    /// Coefficient variables, when the quiver has frozen vertices.
    pub coefficients: Vec<String>,
    /// Mutated vertices, oldest first (1-indexed).
    pub history: Vec<usize>,
    pub classification: Classification,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SessionJson {
    pub id: String,
    pub state: StateJson,
}

impl Session {
    pub fn new(id: String, quiver: &Quiver, max_nodes: usize) -> Self {
        let initial = Seed::initial(quiver);
        Session {
            id,
            current: initial.clone(),
            initial,
            history: Vec::new(),
            diagram: quiver.principal_part().classify_diagram().to_string(),
            finiteness: quiver.is_mutation_finite(max_nodes).to_string(),
        }
    }

    pub fn state(&self) -> StateJson {
        seed_state(
            &self.current,
            self.history.iter().map(|(k, _)| k + 1).collect(),
            Classification {
                diagram: self.diagram.clone(),
                finiteness: self.finiteness.clone(),
            },
        )
    }

    pub fn to_json(&self) -> SessionJson {
        SessionJson {
            id: self.id.clone(),
            state: self.state(),
        }
    }

    pub fn mutate(&mut self, k: usize) -> Result<(), SeedError> {
        let next = self.current.mutate_bounded(k, MUTATION_TERM_BUDGET)?;
        let prev = std::mem::replace(&mut self.current, next);
        self.history.push((k, prev));
        Ok(())
    }

    /// False when there is nothing to undo.
    pub fn undo(&mut self) -> bool {
        match self.history.pop() {
            Some((_, prev)) => {
                self.current = prev;
                true
            }
            None => false,
        }
    }

    /// The triangulation matched with the current seed: diagonal `i` goes
    /// with vertex `i`. `None` unless the quiver is of type A.
    pub fn polygon(&self) -> Option<(Triangulation, Vec<Diagonal>)> {
        let (mut t, mut ds) = find_triangulation(self.initial.quiver())?;
        for &(k, _) in &self.history {
            let flipped = t.flip(ds[k]).ok()?;
            ds[k] = *flipped.diagonals().iter().find(|d| !t.contains(**d))?;
            t = flipped;
        }
        Some((t, ds))
    }
}

pub fn seed_state(seed: &Seed, history: Vec<usize>, classification: Classification) -> StateJson {
    StateJson {
        quiver: seed.quiver().to_json(),
        cluster: seed.cluster().iter().map(ToString::to_string).collect(),
        cluster_terms: seed.cluster().iter().map(|v| v.to_json()).collect(),
        coefficients: seed.coefficients().iter().map(ToString::to_string).collect(),
        history,
        classification,
    }
}

// ---- Store ----

#[derive(Clone)]
pub struct AppState {
    inner: Arc<Inner>,
}

struct Inner {
    sessions: Mutex<HashMap<String, Arc<Mutex<Session>>>>,
    max_nodes: usize,
}

#[derive(Serialize, Deserialize)]
struct SnapshotJson {
    sessions: Vec<SnapshotSession>,
}

#[derive(Serialize, Deserialize)]
struct SnapshotSession {
    id: String,
    initial: SeedJson,
    history: Vec<usize>,
}

impl AppState {
    pub fn new(max_nodes: usize) -> Self {
        AppState {
            inner: Arc::new(Inner {
                sessions: Mutex::new(HashMap::new()),
                max_nodes,
            }),
        }
    }

    pub fn max_nodes(&self) -> usize {
        self.inner.max_nodes
    }

    pub fn create(&self, quiver: &Quiver) -> SessionJson {
        let id = loop {
            let id = format!("{:016x}", rand::random::<u64>());
            if !self.inner.sessions.lock().expect("lock").contains_key(&id) {
                break id;
            }
        };
        let session = Session::new(id.clone(), quiver, self.inner.max_nodes);
        let out = session.to_json();
        self.inner.sessions.lock().expect("lock").insert(id, Arc::new(Mutex::new(session)));
        out
    }

    pub fn get(&self, id: &str) -> Option<Arc<Mutex<Session>>> {
        self.inner.sessions.lock().expect("lock").get(id).cloned()
    }

    pub fn remove(&self, id: &str) -> bool {
        self.inner.sessions.lock().expect("lock").remove(id).is_some()
    }

    pub fn len(&self) -> usize {
        self.inner.sessions.lock().expect("lock").len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// Writes every session as its initial seed and mutation list.
    pub fn save_snapshot(&self, path: &std::path::Path) -> std::io::Result<()> {
        let sessions: Vec<Arc<Mutex<Session>>> = self.inner.sessions.lock().expect("lock").values().cloned().collect();
        let mut snap = SnapshotJson {
            sessions: sessions
                .iter()
                .map(|s| {
                    let s = s.lock().expect("lock");
                    SnapshotSession {
                        id: s.id.clone(),
                        initial: s.initial.to_json(),
                        history: s.history.iter().map(|(k, _)| k + 1).collect(),
                    }
                })
                .collect(),
        };
        snap.sessions.sort_by(|a, b| a.id.cmp(&b.id));
        std::fs::write(path, serde_json::to_string_pretty(&snap).expect("serialisable"))
    }

    /// Restores sessions by replaying their mutations.
    pub fn load_snapshot(&self, path: &std::path::Path) -> Result<usize, String> {
        let text = std::fs::read_to_string(path).map_err(|e| e.to_string())?;
        let snap: SnapshotJson = serde_json::from_str(&text).map_err(|e| e.to_string())?;
        let count = snap.sessions.len();
        for s in snap.sessions {
            let initial = Seed::from_json(&s.initial).map_err(|e| e.to_string())?;
            let mut session = Session::new(s.id.clone(), initial.quiver(), self.inner.max_nodes);
            session.initial = initial.clone();
            session.current = initial;
            for k in s.history {
                let k = k.checked_sub(1).ok_or("vertices are 1-indexed")?;
                session.mutate(k).map_err(|e| e.to_string())?;
            }
            self.inner.sessions.lock().expect("lock").insert(s.id, Arc::new(Mutex::new(session)));
        }
        Ok(count)
    }
}

// ---- Routes ----

pub fn router(state: AppState) -> Router {
    Router::new()
        .route("/sessions", post(create_session))
        .route("/sessions/{id}", get(get_session).delete(delete_session))
        .route("/sessions/{id}/mutate", post(mutate))
        .route("/sessions/{id}/undo", post(undo))
        .route("/sessions/{id}/neighbors", get(neighbors))
        .route("/sessions/{id}/exchange-graph", get(graph))
        .route("/sessions/{id}/polygon", get(polygon))
        .with_state(state)
}

fn error(status: StatusCode, message: impl Into<String>) -> Response {
    (status, Json(json!({ "error": message.into() }))).into_response()
}

fn not_found(id: &str) -> Response {
    error(StatusCode::NOT_FOUND, format!("no session {id}"))
}

#[derive(Deserialize)]
struct CreateBody {
    quiver: QuiverJson,
}

async fn create_session(State(state): State<AppState>, body: Bytes) -> Response {
    let parsed: Result<CreateBody, String> = serde_json::from_slice(&body).map_err(|e| e.to_string());
    let quiver = parsed.and_then(|b| Quiver::from_json(&b.quiver).map_err(|e| e.to_string()));
    match quiver {
        Ok(q) => (StatusCode::CREATED, Json(state.create(&q))).into_response(),
        Err(e) => error(StatusCode::UNPROCESSABLE_ENTITY, e),
    }
}

async fn get_session(State(state): State<AppState>, Path(id): Path<String>) -> Response {
    match state.get(&id) {
        Some(s) => Json(s.lock().expect("lock").to_json()).into_response(),
        None => not_found(&id),
    }
}

async fn delete_session(State(state): State<AppState>, Path(id): Path<String>) -> Response {
    if state.remove(&id) {
        StatusCode::NO_CONTENT.into_response()
    } else {
        not_found(&id)
    }
}

#[derive(Deserialize)]
struct MutateBody {
    vertex: serde_json::Value,
}

/// Accepts `1` or `"1"`.
fn vertex_of(v: &serde_json::Value) -> Option<usize> {
    match v {
        serde_json::Value::Number(n) => n.as_u64().map(|k| k as usize),
        serde_json::Value::String(s) => s.trim().parse().ok(),
        _ => None,
    }
}

async fn mutate(State(state): State<AppState>, Path(id): Path<String>, body: Bytes) -> Response {
    let Some(session) = state.get(&id) else {
        return not_found(&id);
    };
    let mut s = session.lock().expect("lock");
    let n = s.current.n();
    let k = serde_json::from_slice::<MutateBody>(&body).ok().and_then(|b| vertex_of(&b.vertex));
    let k = match k {
        Some(k) if (1..=n).contains(&k) => k - 1,
        _ => return error(StatusCode::BAD_REQUEST, format!("vertex must be a mutable vertex 1..={n}")),
    };
    match s.mutate(k) {
        Ok(()) => Json(s.to_json()).into_response(),
        Err(e @ SeedError::ScaleExceeded { .. }) => error(StatusCode::PAYLOAD_TOO_LARGE, e.to_string()),
        Err(e) => error(StatusCode::BAD_REQUEST, e.to_string()),
    }
}

async fn undo(State(state): State<AppState>, Path(id): Path<String>) -> Response {
    let Some(session) = state.get(&id) else {
        return not_found(&id);
    };
    let mut s = session.lock().expect("lock");
    if s.undo() {
        Json(s.to_json()).into_response()
    } else {
        error(StatusCode::CONFLICT, "history is empty")
    }
}

#[derive(Serialize)]
struct Preview {
    vertex: usize,
    state: StateJson,
}

async fn neighbors(State(state): State<AppState>, Path(id): Path<String>) -> Response {
    let Some(session) = state.get(&id) else {
        return not_found(&id);
    };
    let s = session.lock().expect("lock").clone();
    let mut out = Vec::new();
    for k in 0..s.current.n() {
        let mut preview = s.clone();
        match preview.mutate(k) {
            Ok(()) => out.push(Preview {
                vertex: k + 1,
                state: preview.state(),
            }),
            Err(e @ SeedError::ScaleExceeded { .. }) => return error(StatusCode::PAYLOAD_TOO_LARGE, e.to_string()),
            Err(e) => return error(StatusCode::BAD_REQUEST, e.to_string()),
        }
    }
    Json(json!({ "id": s.id, "neighbors": out })).into_response()
}

#[derive(Deserialize)]
struct GraphQuery {
    max: Option<usize>,
}

async fn graph(State(state): State<AppState>, Path(id): Path<String>, Query(query): Query<GraphQuery>) -> Response {
    let Some(session) = state.get(&id) else {
        return not_found(&id);
    };
    let current = session.lock().expect("lock").current.clone();
    let max = query.max.unwrap_or(state.max_nodes());
    let result = tokio::task::spawn_blocking(move || exchange_graph(&current, max)).await;
    match result {
        Ok(Ok(GraphResult::Finite(g))) => {
            let body: ExchangeGraphJson = g.to_json();
            Json(body).into_response()
        }
        Ok(Ok(GraphResult::ExceededLimit)) => error(StatusCode::PAYLOAD_TOO_LARGE, format!("more than {max} seeds")),
        Ok(Err(e @ SeedError::ScaleExceeded { .. })) => error(StatusCode::PAYLOAD_TOO_LARGE, e.to_string()),
        Ok(Err(e)) => error(StatusCode::BAD_REQUEST, e.to_string()),
        Err(e) => error(StatusCode::INTERNAL_SERVER_ERROR, e.to_string()),
    }
}

#[derive(Serialize, Deserialize, Debug, PartialEq, Eq)]
pub struct PolygonJson {
    pub triangulation: TriangulationJson,
    /// Diagonal matched with each vertex, in vertex order.
    pub vertex_diagonals: Vec<[usize; 2]>,
    pub svg: String,
}

async fn polygon(State(state): State<AppState>, Path(id): Path<String>) -> Response {
    let Some(session) = state.get(&id) else {
        return not_found(&id);
    };
    let s = session.lock().expect("lock").clone();
    let Some((t, ds)) = s.polygon() else {
        return error(StatusCode::NOT_FOUND, "not of type A");
    };
    let cluster = s.current.cluster_strings();
    let labels: Vec<String> = t
        .diagonals()
        .iter()
        .map(|d| ds.iter().position(|x| x == d).map(|i| cluster[i].clone()).unwrap_or_default())
        .collect();
    Json(PolygonJson {
        triangulation: t.to_json(),
        vertex_diagonals: ds.iter().map(|d| [d.0, d.1]).collect(),
        svg: t.to_svg(Some(&labels)),
    })
    .into_response()
}

/// Serves until ctrl-c, then writes the snapshot if one is configured.
pub async fn serve(port: u16, snapshot: Option<PathBuf>, max_nodes: usize) -> std::io::Result<()> {
    let state = AppState::new(max_nodes);
    if let Some(path) = snapshot.as_deref().filter(|p| p.exists()) {
        state
            .load_snapshot(path)
            .map_err(|e| std::io::Error::new(std::io::ErrorKind::InvalidData, e))?;
    }
    let listener = tokio::net::TcpListener::bind(("127.0.0.1", port)).await?;
    eprintln!("listening on http://{}", listener.local_addr()?);
    axum::serve(listener, router(state.clone()))
        .with_graceful_shutdown(async {
            let _ = tokio::signal::ctrl_c().await;
        })
        .await?;
    if let Some(path) = snapshot {
        state.save_snapshot(&path)?;
    }
    Ok(())
}
