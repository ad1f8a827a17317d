//! The cluster category of a Dynkin quiver, combinatorially.
//!
//! Indecomposable objects are the indecomposable modules (keyed by dimension
//! vector) together with the shifted projectives `P_i[1]`. Ext¹ in the
//! cluster category is symmetrised module Ext¹, plus `dim M_i` between
//! `P_i[1]` and `M`.
//!
//! Also here: the Caldero–Chapoton expansion, its inverse, and an
//! independent finite-field oracle for Euler characteristics of quiver
//! Grassmannians.

use crate::laurent::LaurentPoly;
use crate::linalg::{Field, Fp, Matrix};
use crate::quiver::Quiver;
use crate::repn::{self, euler_form, DimVector, ExtTable, ReprError, Representation};
use crate::seed::{cluster_variables, GraphResult, Seed};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};
use std::collections::{BTreeMap, BTreeSet, HashMap, VecDeque};
use std::fmt;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CatError {
    #[error(transparent)]
    Repr(#[from] ReprError),
    #[error("object {0} does not belong to this category")]
    UnknownObject(String),
    #[error("no unique exchange partner at position {position}: {count} candidates")]
    NotUnique { position: usize, count: usize },
    #[error("cluster structure violated: {0}")]
    Structure(String),
    #[error("{0} is not a cluster variable of this quiver")]
    NotClusterVariable(String),
    #[error("denominator {0:?} is not a positive root")]
    NotRoot(DimVector),
    #[error("not a Caldero–Chapoton expansion: {0}")]
    NotExpansion(String),
    #[error("scale limit exceeded: {0}")]
    ScaleExceeded(String),
    #[error("point counts are not polynomial: {0}")]
    Interpolation(String),
    #[error("module is not rigid")]
    NotRigid,
}

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub enum CCObject {
    Module(DimVector),
    /// `P_i[1]`, 0-indexed vertex.
    Shift(usize),
}

impl fmt::Display for CCObject {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CCObject::Module(d) => {
                let s: Vec<String> = d.iter().map(i64::to_string).collect();
                write!(f, "M({})", s.join(","))
            }
            CCObject::Shift(i) => write!(f, "P{}[1]", i + 1),
        }
    }
}

/// `{"kind":"module","dim":[1,1,0]}` or `{"kind":"shift","vertex":2}` (1-indexed).
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum CCObjectJson {
    Module { dim: DimVector },
    Shift { vertex: usize },
}

impl CCObject {
    pub fn to_json(&self) -> CCObjectJson {
        match self {
            CCObject::Module(d) => CCObjectJson::Module { dim: d.clone() },
            CCObject::Shift(i) => CCObjectJson::Shift { vertex: i + 1 },
        }
    }

    pub fn from_json(j: &CCObjectJson) -> Option<Self> {
        match j {
            CCObjectJson::Module { dim } => Some(CCObject::Module(dim.clone())),
            CCObjectJson::Shift { vertex } => vertex.checked_sub(1).map(CCObject::Shift),
        }
    }
}

/// A cluster tilting object with its summands in position order and the
/// quiver of its tilting seed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClusterTilting {
    pub summands: Vec<CCObject>,
    pub seed_quiver: Quiver,
}

impl ClusterTilting {
    pub fn summand_set(&self) -> BTreeSet<CCObject> {
        self.summands.iter().cloned().collect()
    }
}

/// Ext¹ data for the cluster category of a Dynkin quiver.
pub struct ClusterCategory {
    quiver: Quiver,
    table: ExtTable,
    objects: Vec<CCObject>,
    index: HashMap<CCObject, usize>,
    ext: Vec<Vec<usize>>,
}

impl ClusterCategory {
    pub fn new(q: &Quiver) -> Result<Self, CatError> {
        let table = ExtTable::new(q)?;
        let n = q.n();
        let mut objects: Vec<CCObject> = table.roots.iter().cloned().map(CCObject::Module).collect();
        objects.extend((0..n).map(CCObject::Shift));
        let index = objects.iter().cloned().enumerate().map(|(i, o)| (o, i)).collect();
        let count = objects.len();
        let mut ext = vec![vec![0; count]; count];
        for x in 0..count {
            for y in 0..count {
                ext[x][y] = match (&objects[x], &objects[y]) {
                    (CCObject::Module(_), CCObject::Module(_)) => table.ext[x][y] + table.ext[y][x],
                    (CCObject::Shift(i), CCObject::Module(d)) | (CCObject::Module(d), CCObject::Shift(i)) => d[*i] as usize,
                    (CCObject::Shift(_), CCObject::Shift(_)) => 0,
                };
            }
        }
        Ok(ClusterCategory {
            quiver: q.clone(),
            table,
            objects,
            index,
            ext,
        })
    }

    pub fn quiver(&self) -> &Quiver {
        &self.quiver
    }

    /// Indecomposables: modules in root order, then `P_1[1], ..., P_n[1]`.
    pub fn objects(&self) -> &[CCObject] {
        &self.objects
    }

    pub fn modules(&self) -> &[Representation] {
        &self.table.modules
    }

    fn idx(&self, x: &CCObject) -> Result<usize, CatError> {
        self.index.get(x).copied().ok_or_else(|| CatError::UnknownObject(x.to_string()))
    }

    pub fn ext1(&self, x: &CCObject, y: &CCObject) -> Result<usize, CatError> {
        Ok(self.ext[self.idx(x)?][self.idx(y)?])
    }

    fn compatible(&self, a: usize, b: usize) -> bool {
        self.ext[a][b] == 0
    }

    /// All cluster tilting objects, as sets of objects (sorted).
    pub fn cluster_tilting_sets(&self) -> Vec<BTreeSet<CCObject>> {
        repn::cliques(self.objects.len(), self.quiver.n(), |a, b| self.compatible(a, b))
            .into_iter()
            .map(|c| c.into_iter().map(|i| self.objects[i].clone()).collect())
            .collect()
    }

    /// True when no rigid set has more than `n` summands.
    pub fn maximal_rigid_is_n(&self) -> bool {
        let n = self.quiver.n();
        repn::cliques(self.objects.len(), n + 1, |a, b| self.compatible(a, b)).is_empty()
    }

    /// Every `X` outside `almost` with `almost ⊕ X` rigid.
    pub fn completions(&self, almost: &[CCObject]) -> Result<Vec<CCObject>, CatError> {
        let idx: Vec<usize> = almost.iter().map(|x| self.idx(x)).collect::<Result<_, _>>()?;
        Ok((0..self.objects.len())
            .filter(|x| !idx.contains(x))
            .filter(|&x| self.compatible(x, x) && idx.iter().all(|&a| self.compatible(a, x)))
            .map(|x| self.objects[x].clone())
            .collect())
    }

    /// The root tilting seed `(P_1[1] ⊕ ... ⊕ P_n[1], Q)`.
    pub fn root(&self) -> ClusterTilting {
        ClusterTilting {
            summands: (0..self.quiver.n()).map(CCObject::Shift).collect(),
            seed_quiver: self.quiver.clone(),
        }
    }

    /// Exchanges summand `i` for its unique other completion; the seed
    /// quiver mutates at `i`.
    pub fn mutate_ct(&self, t: &ClusterTilting, i: usize) -> Result<ClusterTilting, CatError> {
        let mut rest = t.summands.clone();
        let old = rest.remove(i);
        let candidates: Vec<CCObject> = self.completions(&rest)?.into_iter().filter(|x| *x != old).collect();
        if candidates.len() != 1 {
            return Err(CatError::NotUnique {
                position: i,
                count: candidates.len(),
            });
        }
        let mut summands = t.summands.clone();
        summands[i] = candidates[0].clone();
        let seed_quiver = t
            .seed_quiver
            .mutate(i)
            .map_err(|e| CatError::Structure(e.to_string()))?;
        Ok(ClusterTilting { summands, seed_quiver })
    }

    /// Breadth-first exploration of the cluster tilting graph from the root,
    /// propagating seed quivers by mutation. Reaching a known object along a
    /// new path must give the same seed quiver up to the matching of summands.
    pub fn ct_graph(&self) -> Result<CtGraph, CatError> {
        let n = self.quiver.n();
        let root = self.root();
        let mut ids: HashMap<BTreeSet<CCObject>, usize> = HashMap::new();
        ids.insert(root.summand_set(), 0);
        let mut nodes = vec![root];
        let mut edges = Vec::new();
        let mut queue = VecDeque::from([0usize]);
        while let Some(u) = queue.pop_front() {
            for i in 0..n {
                let t = self.mutate_ct(&nodes[u], i)?;
                let key = t.summand_set();
                let v = match ids.get(&key) {
                    Some(&v) => {
                        let perm: Vec<usize> = nodes[v]
                            .summands
                            .iter()
                            .map(|x| t.summands.iter().position(|y| y == x).expect("same summands"))
                            .collect();
                        if t.seed_quiver.permute(&perm) != nodes[v].seed_quiver {
                            return Err(CatError::Structure(format!(
                                "seed quiver of {{{}}} depends on the path",
                                nodes[v].summands.iter().map(ToString::to_string).collect::<Vec<_>>().join(", ")
                            )));
                        }
                        v
                    }
                    None => {
                        ids.insert(key, nodes.len());
                        nodes.push(t);
                        queue.push_back(nodes.len() - 1);
                        nodes.len() - 1
                    }
                };
                edges.push((u, i, v));
            }
        }
        let graph = CtGraph { nodes, edges };
        if graph.nodes.len() != self.cluster_tilting_sets().len() {
            return Err(CatError::Structure("cluster tilting graph is not connected".into()));
        }
        for q in graph.nodes.iter().map(|t| &t.seed_quiver) {
            if (0..n).any(|i| q.b(i, i) != 0 || (0..n).any(|j| q.b(i, j) != -q.b(j, i))) {
                return Err(CatError::Structure("seed quiver is not skew-symmetric".into()));
            }
        }
        Ok(graph)
    }

    /// `α`: initial variables go to shifted projectives, any other cluster
    /// variable to the module whose dimension vector is its denominator.
    pub fn alpha(&self, v: &LaurentPoly) -> Result<CCObject, CatError> {
        let n = self.quiver.n();
        if v.nvars() != n {
            return Err(CatError::NotClusterVariable(v.to_string()));
        }
        if let Some(i) = (0..n).find(|&i| *v == LaurentPoly::var(n, i)) {
            return Ok(CCObject::Shift(i));
        }
        let d = v.denominator_vector().map_err(|_| CatError::NotClusterVariable(v.to_string()))?;
        if self.table.index_of(&d).is_none() {
            return Err(CatError::NotRoot(d));
        }
        Ok(CCObject::Module(d))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CtGraph {
    pub nodes: Vec<ClusterTilting>,
    /// `(u, i, v)`: exchanging position `i` of node `u` gives node `v`.
    pub edges: Vec<(usize, usize, usize)>,
}

impl CtGraph {
    pub fn is_regular(&self) -> bool {
        let n = self.nodes.first().map_or(0, |t| t.summands.len());
        let mut deg = vec![0; self.nodes.len()];
        for &(u, _, _) in &self.edges {
            deg[u] += 1;
        }
        deg.iter().all(|&d| d == n)
    }

    pub fn index_of(&self, set: &BTreeSet<CCObject>) -> Option<usize> {
        self.nodes.iter().position(|t| t.summand_set() == *set)
    }

    pub fn to_dot(&self) -> String {
        let mut out = String::from("graph ct {\n");
        for (i, t) in self.nodes.iter().enumerate() {
            let label: Vec<String> = t.summands.iter().map(ToString::to_string).collect();
            out.push_str(&format!("  {i} [label=\"{}\"];\n", label.join(" + ")));
        }
        for &(u, i, v) in &self.edges {
            if u < v {
                out.push_str(&format!("  {u} -- {v} [label=\"{}\"];\n", i + 1));
            }
        }
        out.push_str("}\n");
        out
    }
}

/// Checks that `α` is a bijection from cluster variables to indecomposable
/// objects sending every cluster to a cluster tilting object whose seed
/// quiver matches the seed's quiver.
pub fn verify_alpha_bijection(q: &Quiver, max_nodes: usize) -> Result<(), CatError> {
    let cat = ClusterCategory::new(q)?;
    let ct = cat.ct_graph()?;
    let graph = match crate::seed::exchange_graph(&Seed::initial(q), max_nodes) {
        Ok(GraphResult::Finite(g)) => g,
        _ => return Err(CatError::ScaleExceeded("exchange graph".into())),
    };
    let vars = graph.variables();
    let images: BTreeSet<CCObject> = vars.iter().map(|v| cat.alpha(v)).collect::<Result<_, _>>()?;
    if images.len() != vars.len() || images.len() != cat.objects().len() {
        return Err(CatError::Structure(format!(
            "{} variables map to {} of {} objects",
            vars.len(),
            images.len(),
            cat.objects().len()
        )));
    }
    for seed in &graph.nodes {
        let objs: Vec<CCObject> = seed.cluster().iter().map(|v| cat.alpha(v)).collect::<Result<_, _>>()?;
        let set: BTreeSet<CCObject> = objs.iter().cloned().collect();
        let node = ct
            .index_of(&set)
            .ok_or_else(|| CatError::Structure("cluster does not map to a cluster tilting object".into()))?;
        let t = &ct.nodes[node];
        let pos: Vec<usize> = objs
            .iter()
            .map(|x| t.summands.iter().position(|y| y == x).expect("same set"))
            .collect();
        let n = q.n();
        for a in 0..n {
            for b in 0..n {
                if seed.quiver().b(a, b) != t.seed_quiver.b(pos[a], pos[b]) {
                    return Err(CatError::Structure("seed quiver differs from tilting seed quiver".into()));
                }
            }
        }
    }
    Ok(())
}

// ---- Caldero–Chapoton ----

/// Exponent vector of the `e` summand of `X_M`:
/// `g_i(e) = -<e, α_i> - <α_i, m - e>`.
pub fn cc_exponent(q: &Quiver, m: &[i64], e: &[i64]) -> Vec<i64> {
    let n = q.n();
    let rest: Vec<i64> = m.iter().zip(e).map(|(a, b)| a - b).collect();
    (0..n)
        .map(|i| {
            let alpha = repn::simple_root(n, i);
            -euler_form(q, e, &alpha) - euler_form(q, &alpha, &rest)
        })
        .collect()
}

/// All `e` with `0 <= e <= m`, lexicographically.
pub fn subvectors(m: &[i64]) -> Vec<DimVector> {
    let mut out = vec![Vec::new()];
    for &mi in m {
        out = out
            .into_iter()
            .flat_map(|p: DimVector| {
                (0..=mi.max(0)).map(move |k| {
                    let mut v = p.clone();
                    v.push(k);
                    v
                })
            })
            .collect();
    }
    out
}

/// `X_M = Σ_e χ(e) Π_i u_i^{g_i(e)}`.
pub fn cc_expand(q: &Quiver, m: &[i64], chi: &BTreeMap<DimVector, i64>) -> LaurentPoly {
    let n = q.n();
    LaurentPoly::from_terms(
        n,
        chi.iter().map(|(e, &c)| {
            let g: Vec<i32> = cc_exponent(q, m, e).into_iter().map(|x| x as i32).collect();
            (g, BigRational::from_integer(BigInt::from(c)))
        }),
    )
}

/// Recovers the table `e ↦ χ(Gr_e(M))` from a cluster variable `v` with
/// denominator vector `m`.
///
/// `e ↦ g(e)` need not be injective (on the path `1 → 2 → 3` with
/// `m = (1,1,1)`, `e = 0` and `e = (1,0,1)` collide), so monomials whose
/// exponent has several preimages are resolved with principal
/// coefficients: the same variable computed over the quiver with a frozen
/// vertex `i'` and an arrow `i → i'` for each `i` records `e` in its
/// coefficient exponents. Every assignment is checked against `g`, and the
/// whole table against `v` by re-expansion.
pub fn cc_extract(v: &LaurentPoly, q: &Quiver, m: &[i64]) -> Result<BTreeMap<DimVector, i64>, CatError> {
    let n = q.n();
    if v.nvars() != n {
        return Err(CatError::NotExpansion("wrong number of variables".into()));
    }
    let d = v.denominator_vector().map_err(|_| CatError::NotExpansion("zero".into()))?;
    if d != m || m.iter().all(|&x| x == 0) {
        return Err(CatError::NotExpansion(format!("denominator {d:?} does not match {m:?}")));
    }
    let mut fibres: BTreeMap<Vec<i64>, Vec<DimVector>> = BTreeMap::new();
    for e in subvectors(m) {
        fibres.entry(cc_exponent(q, m, &e)).or_default().push(e);
    }
    let mut chi = BTreeMap::new();
    let mut ambiguous = false;
    for (exp, c) in v.terms() {
        let exp: Vec<i64> = exp.iter().map(|&x| i64::from(x)).collect();
        let c = integer(c).ok_or_else(|| CatError::NotExpansion("non-integer coefficient".into()))?;
        match fibres.get(&exp).map(Vec::as_slice) {
            None => return Err(CatError::NotExpansion(format!("exponent {exp:?} outside the image"))),
            Some([e]) => {
                chi.insert(e.clone(), c);
            }
            Some(_) => ambiguous = true,
        }
    }
    if ambiguous {
        chi = extract_with_coefficients(v, q, m)?;
    }
    if cc_expand(q, m, &chi) != *v {
        return Err(CatError::NotExpansion("re-expansion differs".into()));
    }
    Ok(chi)
}

fn integer(c: &BigRational) -> Option<i64> {
    if c.is_integer() {
        c.numer().to_i64()
    } else {
        None
    }
}

fn extract_with_coefficients(v: &LaurentPoly, q: &Quiver, m: &[i64]) -> Result<BTreeMap<DimVector, i64>, CatError> {
    let n = q.n();
    let mut arrows: Vec<(usize, usize, i64)> = q.arrows();
    arrows.extend((0..n).map(|i| (i, n + i, 1)));
    let principal = Quiver::from_arrows(n, n, &arrows).map_err(|e| CatError::Structure(e.to_string()))?;
    let vars = match cluster_variables(&Seed::initial(&principal), 100_000) {
        Ok(GraphResult::Finite(vars)) => vars,
        _ => return Err(CatError::ScaleExceeded("principal coefficient exchange graph".into())),
    };
    let lift = vars
        .into_iter()
        .find(|w| w.specialize_tail(n) == *v)
        .ok_or_else(|| CatError::NotClusterVariable(v.to_string()))?;
    let mut chi = BTreeMap::new();
    for (exp, c) in lift.terms() {
        let x: Vec<i64> = exp[..n].iter().map(|&a| i64::from(a)).collect();
        let y: Vec<i64> = exp[n..].iter().map(|&a| i64::from(a)).collect();
        let c = integer(c).ok_or_else(|| CatError::NotExpansion("non-integer coefficient".into()))?;
        let co: Vec<i64> = m.iter().zip(&y).map(|(a, b)| a - b).collect();
        let in_box = |e: &[i64]| e.iter().zip(m).all(|(a, b)| *a >= 0 && a <= b);
        let e = if in_box(&y) && cc_exponent(q, m, &y) == x {
            y
        } else if in_box(&co) && cc_exponent(q, m, &co) == x {
            co
        } else {
            return Err(CatError::NotExpansion(format!("coefficient exponent {y:?} does not fit")));
        };
        if chi.insert(e, c).is_some() {
            return Err(CatError::NotExpansion("repeated subvector".into()));
        }
    }
    Ok(chi)
}

// ---- Finite-field oracle ----

/// Largest vertex dimension accepted by the point counter.
pub const MAX_POINT_DIM: i64 = 3;
/// Primes available to the point counter.
pub const PRIMES: [u64; 4] = [2, 3, 5, 7];

/// Number of subrepresentations of `M ⊗ F_p` of dimension vector `e`.
pub fn grassmannian_points(m: &Representation, e: &[i64], p: u64) -> Result<u64, CatError> {
    if m.dims().iter().any(|&d| d > MAX_POINT_DIM) {
        return Err(CatError::ScaleExceeded(format!("dimensions above {MAX_POINT_DIM}")));
    }
    if e.len() != m.dims().len() || e.iter().zip(m.dims()).any(|(a, b)| *a < 0 || a > b) {
        return Err(CatError::ScaleExceeded("e is not a subvector of dim M".into()));
    }
    match p {
        2 => count_points::<2>(m, e),
        3 => count_points::<3>(m, e),
        5 => count_points::<5>(m, e),
        7 => count_points::<7>(m, e),
        _ => Err(CatError::ScaleExceeded(format!("prime {p} not supported"))),
    }
}

/// Subspaces of `F_P^dim` of dimension `k`, as `k × dim` matrices in
/// reduced row echelon form.
fn subspaces<const P: u64>(dim: usize, k: usize) -> Vec<Matrix<Fp<P>>> {
    let mut out = Vec::new();
    let mut pivots = Vec::new();
    choose(dim, k, 0, &mut pivots, &mut |piv: &[usize]| {
        // free entries: row r, column c > piv[r], c not a pivot
        let free: Vec<(usize, usize)> = (0..k)
            .flat_map(|r| ((piv[r] + 1)..dim).filter(|c| !piv.contains(c)).map(move |c| (r, c)))
            .collect();
        let total = (P as usize).pow(free.len() as u32);
        for mut code in 0..total {
            let mut mat = Matrix::zeros(k, dim);
            for (r, &c) in piv.iter().enumerate() {
                mat.set(r, c, <Fp<P> as Field>::one());
            }
            for &(r, c) in &free {
                mat.set(r, c, Fp::<P>((code % P as usize) as u64));
                code /= P as usize;
            }
            out.push(mat);
        }
    });
    out
}

fn choose(n: usize, k: usize, start: usize, cur: &mut Vec<usize>, f: &mut dyn FnMut(&[usize])) {
    if cur.len() == k {
        f(cur);
        return;
    }
    for i in start..n {
        cur.push(i);
        choose(n, k, i + 1, cur, f);
        cur.pop();
    }
}

fn count_points<const P: u64>(m: &Representation, e: &[i64]) -> Result<u64, CatError> {
    let maps = m
        .maps_mod::<P>()
        .ok_or_else(|| CatError::ScaleExceeded(format!("maps do not reduce modulo {P}")))?;
    let arrows = repn::arrow_list(m.quiver());
    let n = e.len();
    let choices: Vec<Vec<Matrix<Fp<P>>>> = (0..n)
        .map(|v| subspaces::<P>(m.dims()[v] as usize, e[v] as usize))
        .collect();
    let mut chosen: Vec<usize> = Vec::with_capacity(n);
    let mut count = 0u64;
    count_rec(&choices, &arrows, &maps, &mut chosen, &mut count);
    Ok(count)
}

/// `f(U_v) ⊆ U_w`, with subspaces given by row bases.
fn maps_into<F: Field>(f: &Matrix<F>, uv: &Matrix<F>, uw: &Matrix<F>) -> bool {
    if uv.rows() == 0 {
        return true;
    }
    let images = f.mul(&uv.transpose()).transpose();
    if uw.rows() == 0 {
        return images.is_zero();
    }
    Matrix::vstack(uw.cols(), &[uw.clone(), images]).rank() == uw.rows()
}

fn count_rec<const P: u64>(
    choices: &[Vec<Matrix<Fp<P>>>],
    arrows: &[(usize, usize)],
    maps: &[Matrix<Fp<P>>],
    chosen: &mut Vec<usize>,
    count: &mut u64,
) {
    let v = chosen.len();
    if v == choices.len() {
        *count += 1;
        return;
    }
    for c in 0..choices[v].len() {
        chosen.push(c);
        let ok = arrows.iter().zip(maps).all(|(&(s, t), f)| {
            if s.max(t) != v {
                return true;
            }
            maps_into(f, &choices[s][chosen[s]], &choices[t][chosen[t]])
        });
        if ok {
            count_rec(choices, arrows, maps, chosen, count);
        }
        chosen.pop();
    }
}

/// `χ(Gr_e(M))` by interpolating the point counts over `F_2, F_3, F_5, F_7`
/// and evaluating the counting polynomial at 1. Unused primes must agree
/// with the interpolant.
pub fn chi_oracle(m: &Representation, e: &[i64]) -> Result<i64, CatError> {
    if repn::ext_dim(m, m)? != 0 {
        return Err(CatError::NotRigid);
    }
    let degree: i64 = e.iter().zip(m.dims()).map(|(a, b)| a * (b - a)).sum();
    let needed = degree as usize + 1;
    if needed > PRIMES.len() {
        return Err(CatError::ScaleExceeded(format!("degree bound {degree} needs {needed} primes")));
    }
    let points: Vec<(BigRational, BigRational)> = PRIMES
        .iter()
        .map(|&p| {
            grassmannian_points(m, e, p).map(|c| (BigRational::from_integer(p.into()), BigRational::from_integer(c.into())))
        })
        .collect::<Result<_, _>>()?;
    let (fit, check) = points.split_at(needed);
    let interp = |x: &BigRational| -> BigRational {
        let mut sum = <BigRational as Zero>::zero();
        for (i, (xi, yi)) in fit.iter().enumerate() {
            let mut term = yi.clone();
            for (j, (xj, _)) in fit.iter().enumerate() {
                if i != j {
                    term *= (x - xj) / (xi - xj);
                }
            }
            sum += term;
        }
        sum
    };
    for (x, y) in check {
        if interp(x) != *y {
            return Err(CatError::Interpolation(format!("count at p = {x} is {y}, interpolant gives {}", interp(x))));
        }
    }
    let value = interp(&<BigRational as One>::one());
    integer(&value).ok_or_else(|| CatError::Interpolation(format!("χ = {value} is not an integer")))
}
