//! Seeds, seed mutation and exchange graphs.
//!
//! A [`Seed`] over a quiver with `n` mutable and `m` frozen vertices holds
//! `n` cluster variables, each a Laurent polynomial in the `n + m` initial
//! variables `x1..x{n+m}`. The frozen variables `x{n+1}..x{n+m}` are the
//! coefficients; they never mutate.

use crate::laurent::{LaurentError, LaurentJson, LaurentPoly};
use crate::quiver::{Quiver, QuiverError, QuiverJson};
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use rand::Rng;
use serde::{Deserialize, Serialize};
use std::collections::{BTreeSet, HashMap};
use std::fmt;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SeedError {
    #[error(transparent)]
    Quiver(#[from] QuiverError),
    #[error(transparent)]
    Laurent(#[from] LaurentError),
    /// Only reachable through an arithmetic bug; carries the failing seed.
    #[error("exchange relation at vertex {vertex} is not exactly divisible; seed: {seed}")]
    InexactDivision { vertex: usize, seed: String },
    #[error("exchange polynomial at vertex {vertex} exceeds {limit} terms")]
    ScaleExceeded { vertex: usize, limit: usize },
    #[error("cluster has {got} entries, expected {expected}")]
    ClusterSize { got: usize, expected: usize },
}

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Seed {
    quiver: Quiver,
    cluster: Vec<LaurentPoly>,
}

impl Seed {
    /// The seed `((x1, ..., xn; x{n+1}, ..., x{n+m}), q)`.
    pub fn initial(q: &Quiver) -> Seed {
        let total = q.size();
        Seed {
            quiver: q.clone(),
            cluster: (0..q.n()).map(|i| LaurentPoly::var(total, i)).collect(),
        }
    }

    pub fn from_parts(quiver: Quiver, cluster: Vec<LaurentPoly>) -> Result<Seed, SeedError> {
        if cluster.len() != quiver.n() {
            return Err(SeedError::ClusterSize {
                got: cluster.len(),
                expected: quiver.n(),
            });
        }
        for v in &cluster {
            if v.nvars() != quiver.size() {
                return Err(LaurentError::NvarsMismatch(v.nvars(), quiver.size()).into());
            }
        }
        Ok(Seed { quiver, cluster })
    }

    pub fn quiver(&self) -> &Quiver {
        &self.quiver
    }

    pub fn cluster(&self) -> &[LaurentPoly] {
        &self.cluster
    }

    pub fn n(&self) -> usize {
        self.quiver.n()
    }

    /// The frozen initial variables.
    pub fn coefficients(&self) -> Vec<LaurentPoly> {
        let total = self.quiver.size();
        (self.quiver.n()..total).map(|i| LaurentPoly::var(total, i)).collect()
    }

    fn entry(&self, j: usize) -> LaurentPoly {
        if j < self.quiver.n() {
            self.cluster[j].clone()
        } else {
            LaurentPoly::var(self.quiver.size(), j)
        }
    }

    /// The two exchange monomials at `k`: products over arrows into and out of `k`.
    pub fn exchange_monomials(&self, k: usize) -> (LaurentPoly, LaurentPoly) {
        self.exchange_monomials_bounded(k, usize::MAX).expect("unbounded")
    }

    fn exchange_monomials_bounded(&self, k: usize, limit: usize) -> Result<(LaurentPoly, LaurentPoly), LaurentError> {
        let total = self.quiver.size();
        let mut m1 = LaurentPoly::one(total);
        let mut m2 = LaurentPoly::one(total);
        for j in 0..total {
            let b = self.quiver.b(j, k);
            if b > 0 {
                m1 = m1.mul_bounded(&self.entry(j).pow_bounded(b as u32, limit)?, limit)?;
            } else if b < 0 {
                m2 = m2.mul_bounded(&self.entry(j).pow_bounded((-b) as u32, limit)?, limit)?;
            }
        }
        Ok((m1, m2))
    }

    /// Seed mutation at the mutable vertex `k`.
    pub fn mutate(&self, k: usize) -> Result<Seed, SeedError> {
        self.mutate_bounded(k, usize::MAX)
    }

    /// Seed mutation that refuses to build exchange polynomials with more
    /// than `limit` terms.
    pub fn mutate_bounded(&self, k: usize, limit: usize) -> Result<Seed, SeedError> {
        let quiver = self.quiver.mutate(k)?;
        let (m1, m2) = self
            .exchange_monomials_bounded(k, limit)
            .map_err(|_| SeedError::ScaleExceeded { vertex: k, limit })?;
        let new = (&m1 + &m2).try_div(&self.cluster[k]).map_err(|e| match e {
            LaurentError::NotDivisible => SeedError::InexactDivision {
                vertex: k,
                seed: self.to_string(),
            },
            other => other.into(),
        })?;
        let mut cluster = self.cluster.clone();
        cluster[k] = new;
        Ok(Seed { quiver, cluster })
    }

    /// Applies mutations in order, returning every intermediate seed
    /// (the starting seed first).
    pub fn mutate_path(&self, path: &[usize]) -> Result<Vec<Seed>, SeedError> {
        let mut out = vec![self.clone()];
        for &k in path {
            let next = out.last().expect("nonempty").mutate(k)?;
            out.push(next);
        }
        Ok(out)
    }

    /// Representative of the seed up to simultaneous relabelling of the
    /// mutable vertices and cluster entries, plus the permutation used.
    pub fn canonical(&self) -> (Seed, Vec<usize>) {
        let n = self.n();
        let mut best: Option<(Vec<LaurentPoly>, Vec<usize>)> = None;
        for perm in self.quiver.canonical_perms() {
            let cluster: Vec<LaurentPoly> = perm[..n].iter().map(|&i| self.cluster[i].clone()).collect();
            if best.as_ref().is_none_or(|(c, _)| cluster < *c) {
                best = Some((cluster, perm));
            }
        }
        let (cluster, perm) = best.expect("at least one canonical permutation");
        (
            Seed {
                quiver: self.quiver.permute(&perm),
                cluster,
            },
            perm,
        )
    }

    /// The cluster as an unordered set.
    pub fn cluster_set(&self) -> BTreeSet<LaurentPoly> {
        self.cluster.iter().cloned().collect()
    }

    pub fn cluster_strings(&self) -> Vec<String> {
        self.cluster.iter().map(ToString::to_string).collect()
    }

    pub fn to_json(&self) -> SeedJson {
        SeedJson {
            quiver: self.quiver.to_json(),
            cluster: self.cluster.iter().map(LaurentPoly::to_json).collect(),
        }
    }

    pub fn from_json(json: &SeedJson) -> Result<Seed, SeedError> {
        let quiver = Quiver::from_json(&json.quiver)?;
        let cluster = json
            .cluster
            .iter()
            .map(LaurentPoly::from_json)
            .collect::<Result<Vec<_>, _>>()?;
        Seed::from_parts(quiver, cluster)
    }
}

impl fmt::Display for Seed {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(({})", self.cluster_strings().join(", "))?;
        let coeffs: Vec<String> = self.coefficients().iter().map(ToString::to_string).collect();
        if !coeffs.is_empty() {
            write!(f, "; {}", coeffs.join(", "))?;
        }
        write!(f, "), {})", self.quiver)
    }
}

/// `{"quiver": <quiver JSON>, "cluster": [<Laurent JSON>, ...]}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SeedJson {
    pub quiver: QuiverJson,
    pub cluster: Vec<LaurentJson>,
}

// ---- Exchange graph ----

/// Result of a bounded enumeration.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GraphResult<T> {
    Finite(T),
    ExceededLimit,
}

impl<T> GraphResult<T> {
    pub fn finite(self) -> Option<T> {
        match self {
            GraphResult::Finite(t) => Some(t),
            GraphResult::ExceededLimit => None,
        }
    }
}

/// Seeds up to relabelling, joined by mutations.
///
/// Node `0` is the root. Edge `(u, k, v)` means mutating the canonical seed
/// `u` at its vertex `k` gives a seed whose canonical form is `v`; each
/// undirected edge therefore appears once from each end.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExchangeGraph {
    pub nodes: Vec<Seed>,
    pub edges: Vec<(usize, usize, usize)>,
    pub root: usize,
}

/// Breadth-first enumeration of the exchange graph. Node ids follow BFS
/// order with children visited by vertex index, so they are reproducible.
pub fn exchange_graph(s: &Seed, max_nodes: usize) -> Result<GraphResult<ExchangeGraph>, SeedError> {
    let root = s.canonical().0;
    let mut ids: HashMap<Seed, usize> = HashMap::new();
    ids.insert(root.clone(), 0);
    let mut nodes = vec![root];
    let mut edges = Vec::new();
    let mut next = 0;
    while next < nodes.len() {
        let u = nodes[next].clone();
        for k in 0..u.n() {
            let child = u.mutate(k)?.canonical().0;
            let v = match ids.get(&child) {
                Some(&v) => v,
                None => {
                    if nodes.len() >= max_nodes {
                        return Ok(GraphResult::ExceededLimit);
                    }
                    ids.insert(child.clone(), nodes.len());
                    nodes.push(child);
                    nodes.len() - 1
                }
            };
            edges.push((next, k, v));
        }
        next += 1;
    }
    Ok(GraphResult::Finite(ExchangeGraph { nodes, edges, root: 0 }))
}

/// All cluster variables reachable from `s`, sorted.
pub fn cluster_variables(s: &Seed, max_nodes: usize) -> Result<GraphResult<Vec<LaurentPoly>>, SeedError> {
    Ok(match exchange_graph(s, max_nodes)? {
        GraphResult::Finite(g) => GraphResult::Finite(g.variables()),
        GraphResult::ExceededLimit => GraphResult::ExceededLimit,
    })
}

impl ExchangeGraph {
    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    pub fn variables(&self) -> Vec<LaurentPoly> {
        let set: BTreeSet<LaurentPoly> = self.nodes.iter().flat_map(|s| s.cluster.iter().cloned()).collect();
        set.into_iter().collect()
    }

    /// Neighbour ids of `u`, one per mutable vertex.
    pub fn neighbors(&self, u: usize) -> Vec<usize> {
        self.edges.iter().filter(|e| e.0 == u).map(|e| e.2).collect()
    }

    /// Each node has exactly one edge per mutable vertex and every edge has
    /// a reverse edge.
    pub fn is_regular(&self) -> bool {
        let n = self.nodes.first().map_or(0, Seed::n);
        let mut out_deg = vec![0usize; self.nodes.len()];
        let mut pairs: HashMap<(usize, usize), i64> = HashMap::new();
        for &(u, _, v) in &self.edges {
            out_deg[u] += 1;
            *pairs.entry((u.min(v), u.max(v))).or_default() += if u <= v { 1 } else { -1 };
        }
        out_deg.iter().all(|&d| d == n) && pairs.values().all(|&c| c == 0)
    }

    /// True when no two nodes have the same cluster as a set.
    pub fn seed_determined_by_cluster(&self) -> bool {
        let mut seen = BTreeSet::new();
        self.nodes.iter().all(|s| seen.insert(s.cluster_set()))
    }

    pub fn to_dot(&self) -> String {
        let mut out = String::from("graph exchange {\n");
        for (i, s) in self.nodes.iter().enumerate() {
            out.push_str(&format!("  {i} [label=\"{}\"];\n", s.cluster_strings().join(", ")));
        }
        for &(u, k, v) in &self.edges {
            if u < v {
                out.push_str(&format!("  {u} -- {v} [label=\"{}\"];\n", k + 1));
            }
        }
        out.push_str("}\n");
        out
    }

    pub fn to_json(&self) -> ExchangeGraphJson {
        ExchangeGraphJson {
            root: self.root,
            nodes: self
                .nodes
                .iter()
                .enumerate()
                .map(|(id, s)| NodeJson {
                    id,
                    quiver: s.quiver.to_json(),
                    cluster: s.cluster_strings(),
                })
                .collect(),
            edges: self.edges.iter().map(|&(u, k, v)| [u, k + 1, v]).collect(),
        }
    }
}

/// Adjacency export; `edges` entries are `[from, vertex, to]` with 1-indexed vertices.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExchangeGraphJson {
    pub root: usize,
    pub nodes: Vec<NodeJson>,
    pub edges: Vec<[usize; 3]>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct NodeJson {
    pub id: usize,
    pub quiver: QuiverJson,
    pub cluster: Vec<String>,
}

// ---- Verification ----

/// Replays `path` twice: once in the Laurent ring and once numerically in
/// the field of fractions at a random positive rational point. True when
/// every cluster variable met along the way evaluates to the field value.
pub fn check_laurent_path<R: Rng>(q: &Quiver, path: &[usize], rng: &mut R) -> Result<bool, SeedError> {
    let total = q.size();
    let point: Vec<BigRational> = (0..total)
        .map(|_| BigRational::new(rng.gen_range(1..=97).into(), rng.gen_range(1..=13).into()))
        .collect();
    let seeds = Seed::initial(q).mutate_path(path)?;
    let mut values: Vec<BigRational> = point.clone();
    for (step, &k) in path.iter().enumerate() {
        let b = &seeds[step].quiver;
        let mut m1 = BigRational::one();
        let mut m2 = BigRational::one();
        for (j, v) in values.iter().enumerate() {
            let e = b.b(j, k);
            if e > 0 {
                m1 *= v.pow(e as i32);
            } else if e < 0 {
                m2 *= v.pow((-e) as i32);
            }
        }
        values[k] = (m1 + m2) / &values[k];
        for (i, var) in seeds[step + 1].cluster.iter().enumerate() {
            if var.eval(&point)? != values[i] {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Outcome of [`verify_path`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PathVerdict {
    /// Every variable is a Laurent polynomial agreeing with the field
    /// computation, with positive coefficients.
    Verified,
    /// A division was inexact, or a value disagreed with the field.
    NotLaurent { step: usize },
    NotPositive { step: usize },
    /// An exchange polynomial exceeded the term budget at this step.
    ScaleExceeded { step: usize },
}

/// Replays `path` in the Laurent ring (exchange polynomials capped at
/// `limit` terms) and in the field at a random positive rational point,
/// checking the Laurent property and positivity of each new variable.
pub fn verify_path<R: Rng>(q: &Quiver, path: &[usize], limit: usize, rng: &mut R) -> Result<PathVerdict, SeedError> {
    let total = q.size();
    let point: Vec<BigRational> = (0..total)
        .map(|_| BigRational::new(rng.gen_range(1..=97).into(), rng.gen_range(1..=13).into()))
        .collect();
    let mut seed = Seed::initial(q);
    let mut values = point.clone();
    for (step, &k) in path.iter().enumerate() {
        let b = &seed.quiver;
        let mut m1 = BigRational::one();
        let mut m2 = BigRational::one();
        for (j, v) in values.iter().enumerate() {
            let e = b.b(j, k);
            if e > 0 {
                m1 *= v.pow(e as i32);
            } else if e < 0 {
                m2 *= v.pow((-e) as i32);
            }
        }
        values[k] = (m1 + m2) / &values[k];
        seed = match seed.mutate_bounded(k, limit) {
            Ok(s) => s,
            Err(SeedError::ScaleExceeded { .. }) => return Ok(PathVerdict::ScaleExceeded { step }),
            Err(SeedError::InexactDivision { .. }) => return Ok(PathVerdict::NotLaurent { step }),
            Err(e) => return Err(e),
        };
        let v = &seed.cluster[k];
        if v.eval(&point)? != values[k] {
            return Ok(PathVerdict::NotLaurent { step });
        }
        if !check_positivity(v) {
            return Ok(PathVerdict::NotPositive { step });
        }
    }
    Ok(PathVerdict::Verified)
}

/// Random mutation sequence without immediate repeats (for `n >= 2`).
pub fn random_path<R: Rng>(n: usize, depth: usize, rng: &mut R) -> Vec<usize> {
    let mut out: Vec<usize> = Vec::with_capacity(depth);
    for _ in 0..depth {
        let k = loop {
            let k = rng.gen_range(0..n);
            if n < 2 || out.last() != Some(&k) {
                break k;
            }
        };
        out.push(k);
    }
    out
}

/// Positivity of the reduced numerator, which has the same coefficients as `v`.
pub fn check_positivity(v: &LaurentPoly) -> bool {
    !v.is_zero() && v.has_positive_coefficients()
}

/// Sufficient test that `f / x^d` is in reduced form: `f(e_i) > 0` for every
/// `i` with `d_i > 0`, where `e_i` is 0 in slot `i` and 1 elsewhere.
pub fn certify_reduced(f: &LaurentPoly, d: &[i64]) -> bool {
    (0..d.len()).filter(|&i| d[i] > 0).all(|i| {
        let point: Vec<BigRational> = (0..f.nvars())
            .map(|j| if j == i { BigRational::zero() } else { BigRational::one() })
            .collect();
        f.eval(&point).is_ok_and(|v| v.is_positive())
    })
}
