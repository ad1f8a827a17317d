//! Acceptance run: one PASS/FAIL line per criterion.
//!
//! Built with `harness = false`, so the lines are printed on every run.
//! The process exits non-zero when a criterion fails that is not listed in
//! [`KNOWN_UNATTAINABLE`].

mod common;

use axum::http::StatusCode;
use clusterkit::clustercat::{cc_expand, cc_extract, chi_oracle, subvectors, CCObject, ClusterCategory};
use clusterkit::laurent::LaurentPoly;
use clusterkit::polygon::{align_models, crossing_matches_ext, diagonals, flip_graph, triangulations};
use clusterkit::qp::{jacobian_presentation, mutate_qp, relation_extension, ArrowQuiver, PathSum, Potential, QP};
use clusterkit::quiver::{Finiteness, MutationClass, Quiver};
use clusterkit::repn::{
    apr_tilt, ar_quiver, build_indecomposable, hom_dim, indecomposables, is_sincere, positive_roots, ExtTable, Mesh,
    Representation,
};
use clusterkit::seed::{cluster_variables, exchange_graph, random_path, verify_path, PathVerdict, Seed};
use clusterkit::BigRational;
use rand::SeedableRng;
use serde_json::json;
use std::collections::{BTreeMap, BTreeSet, HashSet, VecDeque};
use std::time::{Duration, Instant};

/// Criteria that cannot be met at desk scale; see the decisions ledger.
const KNOWN_UNATTAINABLE: &[&str] = &["laurent-positivity"];

/// Term budget per exchange polynomial in the Laurent run.
const LAURENT_BUDGET: usize = 20_000;

type Outcome = Result<String, String>;

/// Per quiver: name, [verified, over budget, counterexamples], failure notes.
type LaurentTally<'a> = (&'a str, [usize; 3], Vec<String>);

fn ensure(ok: bool, msg: impl Into<String>) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg.into())
    }
}

fn within(elapsed: Duration, limit: Duration) -> Result<(), String> {
    ensure(elapsed < limit, format!("took {elapsed:.2?}, limit {limit:?}"))
}

fn err<E: std::fmt::Debug>(e: E) -> String {
    format!("{e:?}")
}

fn a2() -> Quiver {
    Quiver::path(2)
}

fn a3() -> Quiver {
    Quiver::path(3)
}

fn d4() -> Quiver {
    Quiver::from_arrows(4, 0, &[(0, 1, 1), (2, 1, 1), (3, 1, 1)]).unwrap()
}

// ---- Exchange graphs ----

fn a2_enumeration() -> Outcome {
    let start = Instant::now();
    let g = exchange_graph(&Seed::initial(&a2()), 100).map_err(err)?.finite().ok_or("limit")?;
    ensure(g.len() == 5, format!("{} seeds", g.len()))?;
    // a 5-cycle: connected, every node of degree 2
    let mut adj: Vec<BTreeSet<usize>> = vec![BTreeSet::new(); g.len()];
    for &(u, _, v) in &g.edges {
        adj[u].insert(v);
        adj[v].insert(u);
    }
    ensure(adj.iter().all(|a| a.len() == 2), "not 2-regular")?;
    let mut seen = BTreeSet::from([0]);
    let mut queue = VecDeque::from([0]);
    while let Some(u) = queue.pop_front() {
        for &v in &adj[u] {
            if seen.insert(v) {
                queue.push_back(v);
            }
        }
    }
    ensure(seen.len() == 5, "not connected")?;
    let vars: BTreeSet<LaurentPoly> = cluster_variables(&Seed::initial(&a2()), 100)
        .map_err(err)?
        .finite()
        .ok_or("limit")?
        .into_iter()
        .collect();
    let want: BTreeSet<LaurentPoly> = ["x1", "x2", "(1+x2)/x1", "(1+x1)/x2", "(1+x1+x2)/(x1*x2)"]
        .iter()
        .map(|s| LaurentPoly::parse(s, 2).unwrap())
        .collect();
    ensure(vars == want, format!("variables {vars:?}"))?;
    within(start.elapsed(), Duration::from_secs(1))?;
    Ok("5 seeds on a 5-cycle, 5 variables".into())
}

fn a3_enumeration() -> Outcome {
    let start = Instant::now();
    let s = Seed::initial(&a3());
    let g = exchange_graph(&s, 100).map_err(err)?.finite().ok_or("limit")?;
    ensure(g.len() == 14, format!("{} seeds", g.len()))?;
    let vars = g.variables();
    ensure(vars.len() == 9, format!("{} variables", vars.len()))?;
    let initial: BTreeSet<LaurentPoly> = s.cluster().iter().cloned().collect();
    let denoms: BTreeSet<Vec<i64>> = vars
        .iter()
        .filter(|v| !initial.contains(*v))
        .map(|v| v.denominator_vector())
        .collect::<Result<_, _>>()
        .map_err(err)?;
    // positive roots of A3: the intervals of consecutive vertices
    let roots: BTreeSet<Vec<i64>> = (0..3)
        .flat_map(|i| (i..3).map(move |j| (0..3).map(|k| i64::from(i <= k && k <= j)).collect()))
        .collect();
    ensure(denoms == roots, format!("denominators {denoms:?}"))?;
    within(start.elapsed(), Duration::from_secs(5))?;
    Ok("14 seeds, 9 variables, denominators = 6 positive roots".into())
}

fn laurent_positivity() -> Outcome {
    let cases = [
        ("A3", a3()),
        ("Kronecker", Quiver::from_arrows(2, 0, &[(0, 1, 2)]).unwrap()),
        ("1=>2->3", Quiver::from_arrows(3, 0, &[(0, 1, 2), (1, 2, 1)]).unwrap()),
    ];
    let results: Vec<LaurentTally> = std::thread::scope(|scope| {
        let handles: Vec<_> = cases
            .iter()
            .map(|(name, q)| {
                scope.spawn(move || {
                    let mut rng = rand::rngs::StdRng::seed_from_u64(7);
                    let mut counts = [0usize; 3];
                    let mut bad = Vec::new();
                    for trial in 0..20 {
                        let path = random_path(q.n(), 12, &mut rng);
                        match verify_path(q, &path, LAURENT_BUDGET, &mut rng) {
                            Ok(PathVerdict::Verified) => counts[0] += 1,
                            Ok(PathVerdict::ScaleExceeded { .. }) => counts[1] += 1,
                            Ok(v) => {
                                counts[2] += 1;
                                bad.push(format!("{name} trial {trial}: {v:?}"));
                            }
                            Err(e) => {
                                counts[2] += 1;
                                bad.push(format!("{name} trial {trial}: {e}"));
                            }
                        }
                    }
                    (*name, counts, bad)
                })
            })
            .collect();
        handles.into_iter().map(|h| h.join().unwrap()).collect()
    });
    let summary: Vec<String> = results
        .iter()
        .map(|(name, c, _)| format!("{name}: {} verified, {} over budget, {} counterexamples", c[0], c[1], c[2]))
        .collect();
    let summary = summary.join("; ");
    let bad: Vec<&String> = results.iter().flat_map(|r| &r.2).collect();
    if !bad.is_empty() {
        return Err(format!("{summary}; {bad:?}"));
    }
    ensure(results.iter().all(|r| r.1[1] == 0), format!("{summary} (budget {LAURENT_BUDGET} terms)"))?;
    Ok(summary)
}

// ---- Mutation classes ----

/// Matrix mutation with overflow reported as `None`.
fn fz_mutate(b: &[Vec<i64>], k: usize) -> Option<Vec<Vec<i64>>> {
    let n = b.len();
    let mut out = b.to_vec();
    for i in 0..n {
        for j in 0..n {
            out[i][j] = if i == k || j == k {
                -b[i][j]
            } else {
                let t = b[i][k].checked_abs()?.checked_mul(b[k][j])?;
                let u = b[i][k].checked_mul(b[k][j].checked_abs()?)?;
                b[i][j].checked_add(t.checked_add(u)? / 2)?
            };
        }
    }
    Some(out)
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for pos in 0..n {
            let mut q = p.clone();
            q.insert(pos, n - 1);
            out.push(q);
        }
    }
    out
}

fn brute_canonical(b: &[Vec<i64>], perms: &[Vec<usize>]) -> Vec<Vec<i64>> {
    let n = b.len();
    perms
        .iter()
        .map(|p| (0..n).map(|i| (0..n).map(|j| b[p[i]][p[j]]).collect()).collect::<Vec<Vec<i64>>>())
        .min()
        .unwrap()
}

/// Breadth-first search of the mutation class; `None` past `cap` classes.
fn brute_class(b: &[Vec<i64>], cap: usize) -> Option<usize> {
    let perms = permutations(b.len());
    let start = brute_canonical(b, &perms);
    let mut seen: HashSet<Vec<Vec<i64>>> = HashSet::from([start.clone()]);
    let mut queue = VecDeque::from([start]);
    while let Some(m) = queue.pop_front() {
        for k in 0..m.len() {
            let c = brute_canonical(&fz_mutate(&m, k)?, &perms);
            if seen.insert(c.clone()) {
                if seen.len() > cap {
                    return None;
                }
                queue.push_back(c);
            }
        }
    }
    Some(seen.len())
}

/// Acyclic quivers on `n` vertices with multiplicities at most 2, one per
/// isomorphism class. Every acyclic quiver has a topological order, so
/// upper-triangular arrows cover all of them.
fn acyclic_quivers(n: usize) -> Vec<Vec<Vec<i64>>> {
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|i| ((i + 1)..n).map(move |j| (i, j))).collect();
    let perms = permutations(n);
    let mut out = BTreeSet::new();
    for code in 0..3usize.pow(pairs.len() as u32) {
        let mut m = vec![vec![0i64; n]; n];
        let mut c = code;
        for &(i, j) in &pairs {
            let v = (c % 3) as i64;
            c /= 3;
            m[i][j] = v;
            m[j][i] = -v;
        }
        out.insert(brute_canonical(&m, &perms));
    }
    out.into_iter().collect()
}

fn mutation_finiteness() -> Outcome {
    const CAP: usize = 500;
    let mut checked = 0;
    let mut finite = 0;
    for n in 1..=4 {
        for m in acyclic_quivers(n) {
            let q = Quiver::from_matrix(n, 0, &m).map_err(err)?;
            let theorem = match q.is_mutation_finite(CAP) {
                Finiteness::FiniteByTheorem => true,
                Finiteness::InfiniteByTheorem => false,
                other => return Err(format!("{q}: {other} for an acyclic quiver")),
            };
            let search = brute_class(&m, CAP).is_some();
            ensure(theorem == search, format!("{q}: theorem {theorem}, search {search}"))?;
            checked += 1;
            finite += usize::from(search);
        }
    }
    let class = match a3().mutation_class(100) {
        MutationClass::Finite(c) => c.len(),
        MutationClass::ExceededLimit => return Err("A3 class exceeded".into()),
    };
    ensure(class == 4, format!("A3 class has {class} quivers"))?;
    ensure(brute_class(&a3().matrix(), 100) == Some(4), "oracle disagrees on A3")?;
    Ok(format!("{checked} acyclic quivers ({finite} finite) agree; A3 class has 4"))
}

// ---- Representations ----

fn representation_side() -> Outcome {
    let q = a3();
    let arq = ar_quiver(&q).map_err(err)?;
    let mesh = |l: [i64; 3], m: &[[i64; 3]], r: [i64; 3]| Mesh {
        left: l.to_vec(),
        middle: m.iter().map(|d| d.to_vec()).collect(),
        right: r.to_vec(),
    };
    // S3 -> P2 -> S2, S2 -> P1/S3 -> S1, P2 -> P1 + S2 -> P1/S3
    let want: BTreeSet<Mesh> = [
        mesh([0, 0, 1], &[[0, 1, 1]], [0, 1, 0]),
        mesh([0, 1, 0], &[[1, 1, 0]], [1, 0, 0]),
        mesh([0, 1, 1], &[[0, 1, 0], [1, 1, 1]], [1, 1, 0]),
    ]
    .into_iter()
    .collect();
    let got: BTreeSet<Mesh> = arq.meshes().into_iter().collect();
    ensure(got == want, format!("meshes {got:?}"))?;

    // reflection at the sink 3
    let reflected = q.mutate(2).map_err(err)?;
    let s3 = vec![0, 0, 1];
    let target: BTreeSet<Vec<i64>> = positive_roots(&reflected).map_err(err)?.into_iter().filter(|d| *d != s3).collect();
    let mut image = BTreeSet::new();
    for m in indecomposables(&q).map_err(err)? {
        if *m.dims() == s3 {
            continue;
        }
        let r = m.reflect_at_sink(2).map_err(err)?;
        ensure(*r.quiver() == reflected, "reflection lands on the wrong quiver")?;
        ensure(hom_dim(&r, &r).map_err(err)? == 1, format!("image of {:?} decomposes", m.dims()))?;
        ensure(image.insert(r.dims().clone()), "reflection is not injective")?;
    }
    ensure(image == target, format!("image {image:?}"))?;

    let t = apr_tilt(&q, 2).map_err(err)?;
    let want_quiver = Quiver::from_arrows(3, 0, &[(0, 1, 1), (2, 1, 1)]).map_err(err)?;
    ensure(t.quiver == want_quiver, format!("tilted quiver {}", t.quiver))?;
    Ok("3 meshes, reflection bijection on 5 modules, tilt at 3 gives 1->2<-3".into())
}

fn tilting_complements() -> Outcome {
    let mut total = 0;
    for q in [a2(), a3()] {
        let n = q.n();
        let table = ExtTable::new(&q).map_err(err)?;
        let count = table.roots.len();
        // every rigid set of n-1 indecomposables
        let mut almost: Vec<Vec<usize>> = vec![Vec::new()];
        for _ in 0..(n - 1) {
            let mut next = Vec::new();
            for set in &almost {
                let from = set.last().map_or(0, |&x| x + 1);
                for x in from..count {
                    if table.compatible(x, x) && set.iter().all(|&y| table.compatible(x, y)) {
                        let mut s = set.clone();
                        s.push(x);
                        next.push(s);
                    }
                }
            }
            almost = next;
        }
        for set in almost {
            let dims: Vec<Vec<i64>> = set.iter().map(|&i| table.roots[i].clone()).collect();
            let completions = clusterkit::repn::complements_in(&table, &dims).map_err(err)?;
            let want = if is_sincere(&dims) { 2 } else { 1 };
            ensure(completions.len() == want, format!("{dims:?} has {} complements", completions.len()))?;
            total += 1;
        }
    }
    Ok(format!("{total} almost complete tilting modules checked"))
}

// ---- Cluster categories ----

fn cluster_category() -> Outcome {
    let mut parts = Vec::new();
    for (name, q, want) in [("A2", a2(), 5), ("A3", a3(), 14), ("D4", d4(), 50)] {
        let cat = ClusterCategory::new(&q).map_err(err)?;
        let sets = cat.cluster_tilting_sets();
        ensure(sets.len() == want, format!("{name}: {} sets", sets.len()))?;
        let seeds = exchange_graph(&Seed::initial(&q), 1000).map_err(err)?.finite().ok_or("limit")?.len();
        ensure(seeds == want, format!("{name}: {seeds} seeds"))?;
        ensure(cat.maximal_rigid_is_n(), format!("{name}: larger rigid set"))?;
        // (C1) every almost complete set has two completions
        for set in &sets {
            for drop in set {
                let rest: Vec<CCObject> = set.iter().filter(|x| *x != drop).cloned().collect();
                let c = cat.completions(&rest).map_err(err)?;
                ensure(c.len() == 2, format!("{name}: {rest:?} has {} completions", c.len()))?;
            }
        }
        let g = cat.ct_graph().map_err(err)?;
        ensure(g.nodes.len() == want && g.is_regular(), format!("{name}: ct graph"))?;
        for node in &g.nodes {
            // (C3) loop and 2-cycle free: skew-symmetric with zero diagonal
            let sq = &node.seed_quiver;
            for i in 0..sq.n() {
                ensure(sq.b(i, i) == 0, format!("{name}: loop"))?;
                for j in 0..sq.n() {
                    ensure(sq.b(i, j) == -sq.b(j, i), format!("{name}: 2-cycle"))?;
                }
            }
        }
        // (C4) every edge of the graph carries quiver mutation
        for &(u, i, v) in &g.edges {
            let mutated = cat.mutate_ct(&g.nodes[u], i).map_err(err)?;
            let target = &g.nodes[v];
            let pos: Vec<usize> = mutated
                .summands
                .iter()
                .map(|x| target.summands.iter().position(|y| y == x).ok_or("summands differ"))
                .collect::<Result<_, _>>()?;
            for a in 0..q.n() {
                for b in 0..q.n() {
                    ensure(
                        target.seed_quiver.b(pos[a], pos[b]) == mutated.seed_quiver.b(a, b),
                        format!("{name}: edge ({u},{i},{v}) breaks consistency"),
                    )?;
                }
            }
        }
        parts.push(format!("{name} {want}"));
    }
    Ok(format!("{}; C1, C3, C4 hold", parts.join(", ")))
}

fn cc_map() -> Outcome {
    let start = Instant::now();
    let s2 = Representation::simple(&a3(), 1);
    let chi: BTreeMap<Vec<i64>, i64> = subvectors(&[0, 1, 0])
        .into_iter()
        .map(|e| chi_oracle(&s2, &e).map(|c| (e, c)))
        .collect::<Result<_, _>>()
        .map_err(err)?;
    let x = cc_expand(&a3(), &[0, 1, 0], &chi);
    ensure(x == LaurentPoly::parse("(x1+x3)/x2", 3).unwrap(), format!("X_S2 = {x}"))?;
    let mut values = 0;
    let mut variables = 0;
    for q in [a2(), a3()] {
        let cat = ClusterCategory::new(&q).map_err(err)?;
        let seed = Seed::initial(&q);
        let vars = cluster_variables(&seed, 100).map_err(err)?.finite().ok_or("limit")?;
        for v in vars.iter().filter(|v| !seed.cluster().contains(v)) {
            let CCObject::Module(m) = cat.alpha(v).map_err(err)? else {
                return Err(format!("{v} maps to a shift"));
            };
            let rep = build_indecomposable(&q, &m).map_err(err)?;
            let extracted = cc_extract(v, &q, &m).map_err(err)?;
            for e in subvectors(&m) {
                let want = chi_oracle(&rep, &e).map_err(err)?;
                let got = extracted.get(&e).copied().unwrap_or(0);
                ensure(got == want, format!("{v}, e = {e:?}: extracted {got}, oracle {want}"))?;
                values += 1;
            }
            variables += 1;
        }
    }
    within(start.elapsed(), Duration::from_secs(60))?;
    Ok(format!("X_S2 = {x}; {values} values over {variables} variables agree"))
}

// ---- Polygons ----

fn polygon_model() -> Outcome {
    ensure(diagonals(5).map_err(err)?.len() == 5, "pentagon diagonals")?;
    ensure(triangulations(5).map_err(err)?.len() == 5, "pentagon triangulations")?;
    ensure(triangulations(6).map_err(err)?.len() == 14, "hexagon triangulations")?;
    let mut pairs = 0;
    for q in [a2(), a3(), Quiver::from_arrows(3, 0, &[(1, 0, 1), (1, 2, 1)]).unwrap()] {
        let al = align_models(&q).map_err(err)?;
        let cat = ClusterCategory::new(&q).map_err(err)?;
        let ct = cat.ct_graph().map_err(err)?;
        let flips = flip_graph(q.n() + 3).map_err(err)?;
        for (u, t) in flips.nodes.iter().enumerate() {
            let node = &ct.nodes[al.tilting[u]];
            let tq = t.quiver();
            // position of each diagonal's object among the summands
            let pos: Vec<usize> = t
                .diagonals()
                .iter()
                .map(|d| node.summands.iter().position(|x| Some(x) == al.object(*d)).ok_or("unmatched diagonal"))
                .collect::<Result<_, _>>()?;
            for a in 0..q.n() {
                for b in 0..q.n() {
                    ensure(tq.b(a, b) == node.seed_quiver.b(pos[a], pos[b]), format!("{t}: quivers differ"))?;
                }
            }
        }
        ensure(crossing_matches_ext(&cat, &al).map_err(err)?, "crossing differs from Ext")?;
        pairs += al.objects.len() * al.objects.len();
    }
    Ok(format!("5 diagonals, 5 and 14 triangulations; aligned, {pairs} crossing pairs agree"))
}

// ---- Quivers with potential ----

fn qp_mutation() -> Outcome {
    let q = ArrowQuiver::from_triples(3, &[("a", 0, 1), ("b", 1, 2), ("c", 2, 0)]).map_err(err)?;
    let qp = QP::new(q, Potential::from_cycles(&[(&["c", "b", "a"], 1)])).map_err(err)?;
    let m = mutate_qp(&qp, 1, 12).map_err(err)?;
    let want = Quiver::from_arrows(3, 0, &[(1, 0, 1), (2, 1, 1)]).unwrap();
    ensure(m.quiver.to_quiver() == want, format!("mutated quiver {}", m.quiver.to_quiver()))?;
    ensure(m.potential.is_zero(), format!("potential {}", m))?;

    let tri = ArrowQuiver::from_triples(3, &[("α", 0, 1), ("β", 1, 2), ("γ", 2, 0)]).map_err(err)?;
    let qp = QP::new(tri, Potential::from_cycles(&[(&["γ", "β", "α"], 1)])).map_err(err)?;
    let rels: BTreeSet<String> = jacobian_presentation(&qp).1.iter().map(ToString::to_string).collect();
    let want: BTreeSet<String> = ["γβ", "αγ", "βα"].iter().map(|s| s.to_string()).collect();
    ensure(rels == want, format!("relations {rels:?}"))?;

    let path = ArrowQuiver::from_triples(3, &[("α", 0, 1), ("β", 1, 2)]).map_err(err)?;
    let rel = PathSum([(vec!["β".to_string(), "α".to_string()], BigRational::from_integer(1.into()))].into_iter().collect());
    let ext = relation_extension(&path, &[rel]).map_err(err)?;
    ensure(ext.to_quiver() == Quiver::cycle(3), format!("extension {}", ext.to_quiver()))?;
    Ok("1<-2<-3 with W = 0; relations {γβ, αγ, βα}; extension is the 3-cycle".into())
}

// ---- Service ----

async fn service_checks() -> Outcome {
    let app = common::app();
    let compared = common::random_scripts(&app, 100, 2024).await;
    let mut seen: BTreeSet<u16> = BTreeSet::new();
    let (status, created) = common::send(&app, "POST", "/sessions", Some(common::a2())).await;
    seen.insert(status.as_u16());
    let id = created["id"].as_str().ok_or("no id")?.to_string();
    let calls = [
        ("GET", format!("/sessions/{id}"), None),
        ("POST", format!("/sessions/{id}/undo"), None),
        ("POST", format!("/sessions/{id}/mutate"), Some(json!({"vertex": 7}))),
        ("POST", format!("/sessions/{id}/mutate"), Some(json!({"vertex": 1}))),
        ("POST", format!("/sessions/{id}/undo"), None),
        ("GET", format!("/sessions/{id}/neighbors"), None),
        ("GET", format!("/sessions/{id}/exchange-graph?max=3"), None),
        ("GET", format!("/sessions/{id}/polygon"), None),
        ("POST", "/sessions".to_string(), Some(json!({"quiver": {"n": 1, "arrows": [[1, 1, 1]]}}))),
        ("DELETE", format!("/sessions/{id}"), None),
        ("GET", format!("/sessions/{id}"), None),
    ];
    for (method, uri, body) in calls {
        seen.insert(common::send(&app, method, &uri, body).await.0.as_u16());
    }
    let kron = common::create(&app, json!({"quiver": {"n": 2, "arrows": [[1, 2, 2]]}})).await;
    seen.insert(common::send(&app, "GET", &format!("/sessions/{kron}/polygon"), None).await.0.as_u16());
    let want: BTreeSet<u16> = [
        StatusCode::OK,
        StatusCode::CREATED,
        StatusCode::NO_CONTENT,
        StatusCode::BAD_REQUEST,
        StatusCode::NOT_FOUND,
        StatusCode::CONFLICT,
        StatusCode::PAYLOAD_TOO_LARGE,
        StatusCode::UNPROCESSABLE_ENTITY,
    ]
    .iter()
    .map(|s| s.as_u16())
    .collect();
    ensure(seen == want, format!("statuses {seen:?}"))?;
    Ok(format!("100 scripts, {compared} states bit-exact; statuses {seen:?}"))
}

fn service() -> Outcome {
    let rt = tokio::runtime::Builder::new_current_thread().enable_all().build().map_err(err)?;
    rt.block_on(service_checks())
}

// ---- Runner ----

fn main() {
    let criteria: Vec<(&str, fn() -> Outcome)> = vec![
        ("a2-enumeration", a2_enumeration),
        ("a3-enumeration", a3_enumeration),
        ("laurent-positivity", laurent_positivity),
        ("mutation-finiteness", mutation_finiteness),
        ("representations", representation_side),
        ("tilting-complements", tilting_complements),
        ("cluster-category", cluster_category),
        ("cc-map", cc_map),
        ("polygon-model", polygon_model),
        ("qp-mutation", qp_mutation),
        ("service", service),
    ];
    let mut unexpected = Vec::new();
    let mut failed = 0;
    for (name, run) in criteria {
        let start = Instant::now();
        let outcome = std::panic::catch_unwind(run).unwrap_or_else(|_| Err("panicked".into()));
        let elapsed = start.elapsed();
        match outcome {
            Ok(detail) => println!("PASS  {name:<20} {:>8.2}s  {detail}", elapsed.as_secs_f64()),
            Err(detail) => {
                failed += 1;
                let note = if KNOWN_UNATTAINABLE.contains(&name) {
                    " [known unattainable]"
                } else {
                    unexpected.push(name);
                    ""
                };
                println!("FAIL  {name:<20} {:>8.2}s  {detail}{note}", elapsed.as_secs_f64());
            }
        }
    }
    println!("{} criteria, {failed} failed, {} unexpected", 11, unexpected.len());
    if !unexpected.is_empty() {
        std::process::exit(1);
    }
}
