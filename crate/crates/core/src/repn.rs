//! Representations of acyclic quivers over the rationals.
//!
//! A [`Representation`] assigns a vector space `k^{d_i}` to each vertex and a
//! matrix to each arrow (one matrix per arrow, so an arrow of multiplicity two
//! carries two matrices). Paths compose right to left, and `P_i` is spanned by
//! the paths starting at `i`, so `Hom(P_i, M) = M_i`.
//!
//! For Dynkin quivers the indecomposables are built from positive roots by
//! reflection functors, and modules are keyed by dimension vector.

use crate::linalg::{rational_to_string, parse_rational, Field, Fp, Matrix};
use crate::quiver::{DiagramClass, Quiver};
use num_rational::BigRational;
use serde::{Deserialize, Serialize};
use std::collections::{BTreeMap, BTreeSet, VecDeque};
use thiserror::Error;

pub type DimVector = Vec<i64>;
type Q = BigRational;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ReprError {
    #[error("quiver is not of Dynkin type")]
    NotDynkin,
    #[error("quiver has an oriented cycle")]
    NotAcyclic,
    #[error("representations are defined on quivers without frozen vertices")]
    Frozen,
    #[error("vertex {0} is not a sink")]
    NotSink(usize),
    #[error("vertex {0} is not a source")]
    NotSource(usize),
    #[error("{0:?} is not a positive root")]
    NotPositiveRoot(DimVector),
    #[error("representations live on different quivers")]
    QuiverMismatch,
    #[error("matrix shapes do not match the dimension vector")]
    Shape,
    #[error("knitting failed: {0}")]
    Knitting(String),
    #[error("invalid representation JSON: {0}")]
    Json(String),
}

/// One entry per arrow, multiplicities expanded, in lexicographic order.
pub fn arrow_list(q: &Quiver) -> Vec<(usize, usize)> {
    q.arrows()
        .into_iter()
        .filter(|&(i, j, _)| i < q.n() && j < q.n())
        .flat_map(|(i, j, w)| std::iter::repeat_n((i, j), w as usize))
        .collect()
}

fn check_quiver(q: &Quiver) -> Result<(), ReprError> {
    if q.frozen() != 0 {
        return Err(ReprError::Frozen);
    }
    if !q.is_acyclic() {
        return Err(ReprError::NotAcyclic);
    }
    Ok(())
}

fn check_dynkin(q: &Quiver) -> Result<(), ReprError> {
    check_quiver(q)?;
    match q.classify_diagram() {
        DiagramClass::Dynkin(_) => Ok(()),
        _ => Err(ReprError::NotDynkin),
    }
}

// ---- Euler form ----

/// `E = I - A` with `A[i][j]` the number of arrows `i → j`.
pub fn euler_matrix(q: &Quiver) -> Vec<Vec<i64>> {
    let n = q.n();
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| i64::from(i == j) - q.b(i, j).max(0))
                .collect()
        })
        .collect()
}

/// `<d, e> = sum_i d_i e_i - sum_{i → j} d_i e_j`.
pub fn euler_form(q: &Quiver, d: &[i64], e: &[i64]) -> i64 {
    let em = euler_matrix(q);
    let n = q.n();
    (0..n).flat_map(|i| (0..n).map(move |j| (i, j))).map(|(i, j)| d[i] * em[i][j] * e[j]).sum()
}

/// Simple reflection: `s_i(d)_i = sum_j |b_ij| d_j - d_i`.
pub fn reflect_dims(q: &Quiver, d: &[i64], i: usize) -> DimVector {
    let mut out = d.to_vec();
    out[i] = (0..q.n()).map(|j| q.b(i, j).abs() * d[j]).sum::<i64>() - d[i];
    out
}

/// `counts[i][j]` = number of paths from `i` to `j` (including the trivial one).
pub fn path_counts(q: &Quiver) -> Vec<Vec<i64>> {
    let n = q.n();
    let mut order = Vec::with_capacity(n);
    let mut indeg: Vec<usize> = (0..n).map(|j| (0..n).filter(|&i| q.b(i, j) > 0).count()).collect();
    let mut queue: VecDeque<usize> = (0..n).filter(|&v| indeg[v] == 0).collect();
    while let Some(v) = queue.pop_front() {
        order.push(v);
        for w in 0..n {
            if q.b(v, w) > 0 {
                indeg[w] -= 1;
                if indeg[w] == 0 {
                    queue.push_back(w);
                }
            }
        }
    }
    let mut counts = vec![vec![0i64; n]; n];
    for i in 0..n {
        counts[i][i] = 1;
        for &v in &order {
            if counts[i][v] == 0 {
                continue;
            }
            for w in 0..n {
                let m = q.b(v, w);
                if m > 0 {
                    counts[i][w] += counts[i][v] * m;
                }
            }
        }
    }
    counts
}

pub fn projective_dims(q: &Quiver, i: usize) -> DimVector {
    path_counts(q)[i].clone()
}

pub fn injective_dims(q: &Quiver, i: usize) -> DimVector {
    path_counts(q).iter().map(|row| row[i]).collect()
}

pub fn simple_root(n: usize, i: usize) -> DimVector {
    let mut d = vec![0; n];
    d[i] = 1;
    d
}

/// True when every vertex occurs in some vector of `set`.
pub fn is_sincere(set: &[DimVector]) -> bool {
    let Some(first) = set.first() else {
        return false;
    };
    (0..first.len()).all(|i| set.iter().any(|d| d[i] > 0))
}

/// All positive roots of a Dynkin quiver, sorted by height then lexicographically.
pub fn positive_roots(q: &Quiver) -> Result<Vec<DimVector>, ReprError> {
    check_dynkin(q)?;
    let n = q.n();
    let mut seen: BTreeSet<DimVector> = (0..n).map(|i| simple_root(n, i)).collect();
    let mut queue: VecDeque<DimVector> = seen.iter().cloned().collect();
    while let Some(d) = queue.pop_front() {
        for i in 0..n {
            let r = reflect_dims(q, &d, i);
            if r.iter().all(|&x| x >= 0) && r.iter().any(|&x| x > 0) && seen.insert(r.clone()) {
                queue.push_back(r);
            }
        }
    }
    let mut roots: Vec<DimVector> = seen.into_iter().collect();
    roots.sort_by_key(|d| (d.iter().sum::<i64>(), d.clone()));
    Ok(roots)
}

// ---- Representations ----

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Representation {
    quiver: Quiver,
    dims: DimVector,
    maps: Vec<Matrix<Q>>,
}

impl Representation {
    /// `maps` follows [`arrow_list`]; each map for `i → j` is `dims[j] × dims[i]`.
    pub fn new(quiver: &Quiver, dims: DimVector, maps: Vec<Matrix<Q>>) -> Result<Self, ReprError> {
        check_quiver(quiver)?;
        let arrows = arrow_list(quiver);
        if dims.len() != quiver.n() || dims.iter().any(|&d| d < 0) || maps.len() != arrows.len() {
            return Err(ReprError::Shape);
        }
        for (&(i, j), m) in arrows.iter().zip(&maps) {
            if m.rows() != dims[j] as usize || m.cols() != dims[i] as usize {
                return Err(ReprError::Shape);
            }
        }
        Ok(Representation {
            quiver: quiver.clone(),
            dims,
            maps,
        })
    }

    pub fn zero(q: &Quiver) -> Self {
        let maps = arrow_list(q).iter().map(|_| Matrix::zeros(0, 0)).collect();
        Representation {
            quiver: q.clone(),
            dims: vec![0; q.n()],
            maps,
        }
    }

    pub fn simple(q: &Quiver, i: usize) -> Self {
        let dims = simple_root(q.n(), i);
        let maps = arrow_list(q)
            .iter()
            .map(|&(s, t)| Matrix::zeros(dims[t] as usize, dims[s] as usize))
            .collect();
        Representation {
            quiver: q.clone(),
            dims,
            maps,
        }
    }

    pub fn quiver(&self) -> &Quiver {
        &self.quiver
    }

    pub fn dims(&self) -> &DimVector {
        &self.dims
    }

    pub fn maps(&self) -> &[Matrix<Q>] {
        &self.maps
    }

    pub fn is_zero(&self) -> bool {
        self.dims.iter().all(|&d| d == 0)
    }

    fn arrow_map(&self) -> BTreeMap<(usize, usize), Vec<Matrix<Q>>> {
        let mut out: BTreeMap<(usize, usize), Vec<Matrix<Q>>> = BTreeMap::new();
        for (a, m) in arrow_list(&self.quiver).into_iter().zip(&self.maps) {
            out.entry(a).or_default().push(m.clone());
        }
        out
    }

    fn from_arrow_map(quiver: Quiver, dims: DimVector, mut map: BTreeMap<(usize, usize), Vec<Matrix<Q>>>) -> Self {
        let maps = arrow_list(&quiver)
            .iter()
            .map(|a| map.get_mut(a).expect("arrow present").remove(0))
            .collect();
        Representation { quiver, dims, maps }
    }

    /// Reflection functor at a sink `i`: `V_i` becomes the kernel of the
    /// sum of the incoming maps, and the reversed arrows carry the
    /// components of the kernel inclusion.
    pub fn reflect_at_sink(&self, i: usize) -> Result<Representation, ReprError> {
        if !self.quiver.is_sink(i) {
            return Err(ReprError::NotSink(i));
        }
        let arrows = arrow_list(&self.quiver);
        let incoming: Vec<usize> = (0..arrows.len()).filter(|&a| arrows[a].1 == i).collect();
        let blocks: Vec<Matrix<Q>> = incoming.iter().map(|&a| self.maps[a].clone()).collect();
        let h = Matrix::hstack(self.dims[i] as usize, &blocks);
        let kernel = h.kernel();
        let k = kernel.cols();
        let mut map = self.arrow_map();
        for &(s, t) in &arrows {
            if t == i {
                map.remove(&(s, t));
            }
        }
        let mut offset = 0;
        for &a in &incoming {
            let j = arrows[a].0;
            let dj = self.dims[j] as usize;
            map.entry((i, j)).or_default().push(kernel.block(offset, offset + dj, 0, k));
            offset += dj;
        }
        let mut dims = self.dims.clone();
        dims[i] = k as i64;
        let quiver = self.quiver.mutate(i).expect("sink is mutable");
        Ok(Self::from_arrow_map(quiver, dims, map))
    }

    /// Reflection functor at a source `i`: `V_i` becomes the cokernel of the
    /// stacked outgoing maps.
    pub fn reflect_at_source(&self, i: usize) -> Result<Representation, ReprError> {
        if !self.quiver.is_source(i) {
            return Err(ReprError::NotSource(i));
        }
        let arrows = arrow_list(&self.quiver);
        let outgoing: Vec<usize> = (0..arrows.len()).filter(|&a| arrows[a].0 == i).collect();
        let blocks: Vec<Matrix<Q>> = outgoing.iter().map(|&a| self.maps[a].clone()).collect();
        let g = Matrix::vstack(self.dims[i] as usize, &blocks);
        let coker = g.left_kernel();
        let c = coker.rows();
        let mut map = self.arrow_map();
        for &(s, t) in &arrows {
            if s == i {
                map.remove(&(s, t));
            }
        }
        let mut offset = 0;
        for &a in &outgoing {
            let j = arrows[a].1;
            let dj = self.dims[j] as usize;
            map.entry((j, i)).or_default().push(coker.block(0, c, offset, offset + dj));
            offset += dj;
        }
        let mut dims = self.dims.clone();
        dims[i] = c as i64;
        let quiver = self.quiver.mutate(i).expect("source is mutable");
        Ok(Self::from_arrow_map(quiver, dims, map))
    }

    /// Maps reduced modulo `P`; `None` if a denominator vanishes.
    pub fn maps_mod<const P: u64>(&self) -> Option<Vec<Matrix<Fp<P>>>> {
        self.maps.iter().map(Matrix::reduce_mod::<P>).collect()
    }

    pub fn to_json(&self) -> RepresentationJson {
        RepresentationJson {
            dims: self.dims.clone(),
            maps: arrow_list(&self.quiver)
                .iter()
                .zip(&self.maps)
                .map(|(&(s, t), m)| ArrowMapJson {
                    src: s + 1,
                    dst: t + 1,
                    matrix: m.data().iter().map(rational_to_string).collect(),
                })
                .collect(),
        }
    }

    pub fn from_json(q: &Quiver, json: &RepresentationJson) -> Result<Self, ReprError> {
        let arrows = arrow_list(q);
        if json.maps.len() != arrows.len() || json.dims.len() != q.n() {
            return Err(ReprError::Shape);
        }
        let mut maps = Vec::with_capacity(arrows.len());
        for (&(s, t), m) in arrows.iter().zip(&json.maps) {
            if (m.src, m.dst) != (s + 1, t + 1) {
                return Err(ReprError::Json(format!("expected arrow {}->{}", s + 1, t + 1)));
            }
            let data: Option<Vec<Q>> = m.matrix.iter().map(|x| parse_rational(x)).collect();
            let data = data.ok_or_else(|| ReprError::Json("bad matrix entry".into()))?;
            let (r, c) = (json.dims[t].max(0) as usize, json.dims[s].max(0) as usize);
            if data.len() != r * c {
                return Err(ReprError::Shape);
            }
            maps.push(Matrix::from_vec(r, c, data));
        }
        Self::new(q, json.dims.clone(), maps)
    }
}

/// `{"dims":[1,1,0],"maps":[{"src":1,"dst":2,"matrix":["1"]}]}`, matrices row-major.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RepresentationJson {
    pub dims: DimVector,
    pub maps: Vec<ArrowMapJson>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ArrowMapJson {
    pub src: usize,
    pub dst: usize,
    pub matrix: Vec<String>,
}

/// An indecomposable of dimension vector `d`: reflect at sinks until `d`
/// becomes simple, then climb back with source reflections.
pub fn build_indecomposable(q: &Quiver, d: &[i64]) -> Result<Representation, ReprError> {
    let roots = positive_roots(q)?;
    if !roots.iter().any(|r| r == d) {
        return Err(ReprError::NotPositiveRoot(d.to_vec()));
    }
    let n = q.n();
    let mut cur_q = q.clone();
    let mut cur_d = d.to_vec();
    let mut steps = Vec::new();
    while cur_d.iter().sum::<i64>() != 1 {
        if steps.len() > 64 * n * n + 64 {
            return Err(ReprError::NotPositiveRoot(d.to_vec()));
        }
        let i = (0..n).find(|&v| cur_q.is_sink(v)).expect("acyclic quivers have sinks");
        cur_d = reflect_dims(&cur_q, &cur_d, i);
        if cur_d.iter().any(|&x| x < 0) {
            return Err(ReprError::NotPositiveRoot(d.to_vec()));
        }
        cur_q = cur_q.mutate(i).expect("mutable");
        steps.push(i);
    }
    let j = cur_d.iter().position(|&x| x == 1).expect("simple root");
    let mut rep = Representation::simple(&cur_q, j);
    for &i in steps.iter().rev() {
        rep = rep.reflect_at_source(i)?;
    }
    debug_assert_eq!(rep.quiver, *q);
    debug_assert_eq!(rep.dims, d);
    Ok(rep)
}

/// The indecomposables of a Dynkin quiver, in [`positive_roots`] order.
pub fn indecomposables(q: &Quiver) -> Result<Vec<Representation>, ReprError> {
    positive_roots(q)?.iter().map(|d| build_indecomposable(q, d)).collect()
}

// ---- Hom and Ext ----

/// The map `δ: ⊕_v Hom(M_v, N_v) → ⊕_{a: v→w} Hom(M_v, N_w)`,
/// `(h_v) ↦ (h_w f_a - g_a h_v)`. Its kernel is `Hom(M, N)` and its
/// cokernel `Ext¹(M, N)`.
fn intertwiner_system<F: Field>(
    arrows: &[(usize, usize)],
    dm: &[usize],
    dn: &[usize],
    fm: &[Matrix<F>],
    gn: &[Matrix<F>],
) -> Matrix<F> {
    let n = dm.len();
    let mut var_offset = vec![0usize; n + 1];
    for v in 0..n {
        var_offset[v + 1] = var_offset[v] + dn[v] * dm[v];
    }
    let vars = var_offset[n];
    let eqs: usize = arrows.iter().map(|&(v, w)| dn[w] * dm[v]).sum();
    let mut sys = Matrix::<F>::zeros(eqs, vars);
    let var = |v: usize, r: usize, c: usize| var_offset[v] + r * dm[v] + c;
    let mut row = 0;
    for (a, &(v, w)) in arrows.iter().enumerate() {
        for r in 0..dn[w] {
            for c in 0..dm[v] {
                // (h_w f_a)[r][c] = sum_t h_w[r][t] f_a[t][c]
                for t in 0..dm[w] {
                    let coef = fm[a].get(t, c).clone();
                    if !coef.is_zero() {
                        let idx = var(w, r, t);
                        let cur = sys.get(row, idx).clone();
                        sys.set(row, idx, cur.add(&coef));
                    }
                }
                // -(g_a h_v)[r][c] = -sum_t g_a[r][t] h_v[t][c]
                for t in 0..dn[v] {
                    let coef = gn[a].get(r, t).clone();
                    if !coef.is_zero() {
                        let idx = var(v, t, c);
                        let cur = sys.get(row, idx).clone();
                        sys.set(row, idx, cur.sub(&coef));
                    }
                }
                row += 1;
            }
        }
    }
    sys
}

fn same_quiver(m: &Representation, n: &Representation) -> Result<(), ReprError> {
    if m.quiver == n.quiver {
        Ok(())
    } else {
        Err(ReprError::QuiverMismatch)
    }
}

fn udims(r: &Representation) -> Vec<usize> {
    r.dims.iter().map(|&d| d as usize).collect()
}

fn system(m: &Representation, n: &Representation) -> Matrix<Q> {
    intertwiner_system(&arrow_list(&m.quiver), &udims(m), &udims(n), &m.maps, &n.maps)
}

pub fn hom_dim(m: &Representation, n: &Representation) -> Result<usize, ReprError> {
    same_quiver(m, n)?;
    let sys = system(m, n);
    Ok(sys.cols() - sys.rank())
}

/// `dim Ext¹(M, N) = dim Hom(M, N) - <dim M, dim N>`.
pub fn ext_dim(m: &Representation, n: &Representation) -> Result<usize, ReprError> {
    let hom = hom_dim(m, n)? as i64;
    let ext = hom - euler_form(&m.quiver, &m.dims, &n.dims);
    usize::try_from(ext).map_err(|_| ReprError::Knitting("negative Ext dimension".into()))
}

/// `dim Ext¹(M, N)` as the cokernel dimension of the intertwiner map,
/// without the Euler form.
pub fn ext_dim_direct(m: &Representation, n: &Representation) -> Result<usize, ReprError> {
    same_quiver(m, n)?;
    let sys = system(m, n);
    Ok(sys.rows() - sys.rank())
}

/// `dim Hom(M, N)` computed over `F_P`; `None` if reduction fails.
pub fn hom_dim_mod<const P: u64>(m: &Representation, n: &Representation) -> Result<Option<usize>, ReprError> {
    same_quiver(m, n)?;
    let (Some(fm), Some(gn)) = (m.maps_mod::<P>(), n.maps_mod::<P>()) else {
        return Ok(None);
    };
    let sys = intertwiner_system(&arrow_list(&m.quiver), &udims(m), &udims(n), &fm, &gn);
    Ok(Some(sys.cols() - sys.rank()))
}

/// A basis of `Hom(M, N)`; each element is one matrix per vertex.
pub fn hom_basis(m: &Representation, n: &Representation) -> Result<Vec<Vec<Matrix<Q>>>, ReprError> {
    same_quiver(m, n)?;
    let sys = system(m, n);
    let kernel = sys.kernel();
    let (dm, dn) = (udims(m), udims(n));
    let mut out = Vec::with_capacity(kernel.cols());
    for col in 0..kernel.cols() {
        let mut offset = 0;
        let mut maps = Vec::with_capacity(dm.len());
        for v in 0..dm.len() {
            let mut h = Matrix::zeros(dn[v], dm[v]);
            for r in 0..dn[v] {
                for c in 0..dm[v] {
                    h.set(r, c, kernel.get(offset + r * dm[v] + c, col).clone());
                }
            }
            offset += dn[v] * dm[v];
            maps.push(h);
        }
        out.push(maps);
    }
    Ok(out)
}

// ---- Auslander–Reiten quiver ----

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ARQuiver {
    /// Indecomposables, in knitting order (projectives first).
    pub vertices: Vec<DimVector>,
    /// Irreducible maps `(from, to, multiplicity)` between vertex indices.
    pub arrows: Vec<(usize, usize, usize)>,
    /// `tau[c] = Some(a)` when `a = τ c`; `None` for projectives.
    pub tau: Vec<Option<usize>>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Translate {
    Module(DimVector),
    Projective,
}

/// An almost split sequence `0 → left → ⊕ middle → right → 0`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct Mesh {
    pub left: DimVector,
    pub middle: Vec<DimVector>,
    pub right: DimVector,
}

/// Knits the AR quiver from the projectives using mesh additivity:
/// `dim τ⁻¹X = Σ dim(successors of X) - dim X`.
pub fn ar_quiver(q: &Quiver) -> Result<ARQuiver, ReprError> {
    let roots = positive_roots(q)?;
    let n = q.n();
    let counts = path_counts(q);
    let injectives: BTreeSet<DimVector> = (0..n).map(|i| counts.iter().map(|row| row[i]).collect()).collect();

    let mut vertices: Vec<DimVector> = (0..n).map(|i| counts[i].clone()).collect();
    // preds[x] = irreducible maps into x, as (vertex, multiplicity)
    let mut preds: Vec<Vec<(usize, usize)>> = (0..n)
        .map(|i| (0..n).filter(|&j| q.b(i, j) > 0).map(|j| (j, q.b(i, j) as usize)).collect())
        .collect();
    let mut tau: Vec<Option<usize>> = vec![None; n];
    let mut tau_inv: Vec<Option<usize>> = vec![None; n];
    let mut processed: Vec<bool> = vec![false; n];
    let mut arrows = Vec::new();

    while let Some(x) = (0..vertices.len()).find(|&x| !processed[x] && preds[x].iter().all(|&(y, _)| processed[y])) {
        processed[x] = true;
        let mut succ: BTreeMap<usize, usize> = BTreeMap::new();
        for &(y, mult) in &preds[x] {
            if let Some(z) = tau_inv[y] {
                *succ.entry(z).or_default() += mult;
            }
        }
        for p in 0..n {
            for &(y, mult) in &preds[p] {
                if y == x {
                    *succ.entry(p).or_default() += mult;
                }
            }
        }
        for (&z, &mult) in &succ {
            arrows.push((x, z, mult));
        }
        if injectives.contains(&vertices[x]) {
            continue;
        }
        let mut d: DimVector = vertices[x].iter().map(|v| -v).collect();
        for (&z, &mult) in &succ {
            for i in 0..n {
                d[i] += vertices[z][i] * mult as i64;
            }
        }
        if d.iter().any(|&v| v < 0) || d.iter().all(|&v| v == 0) {
            return Err(ReprError::Knitting(format!("τ⁻¹ of {:?} has dimension {:?}", vertices[x], d)));
        }
        if vertices.len() > roots.len() {
            return Err(ReprError::Knitting("more vertices than positive roots".into()));
        }
        let id = vertices.len();
        vertices.push(d);
        preds.push(succ.into_iter().collect());
        tau.push(Some(x));
        tau_inv.push(None);
        processed.push(false);
        tau_inv[x] = Some(id);
    }
    if processed.iter().any(|&p| !p) {
        return Err(ReprError::Knitting("unprocessed vertices remain".into()));
    }
    let found: BTreeSet<&DimVector> = vertices.iter().collect();
    if found.len() != vertices.len() || vertices.len() != roots.len() || roots.iter().any(|r| !found.contains(r)) {
        return Err(ReprError::Knitting("vertices do not match the positive roots".into()));
    }
    Ok(ARQuiver { vertices, arrows, tau })
}

impl ARQuiver {
    pub fn index_of(&self, d: &[i64]) -> Option<usize> {
        self.vertices.iter().position(|v| v == d)
    }

    pub fn tau(&self, d: &[i64]) -> Option<Translate> {
        let x = self.index_of(d)?;
        Some(match self.tau[x] {
            Some(a) => Translate::Module(self.vertices[a].clone()),
            None => Translate::Projective,
        })
    }

    /// `τ⁻¹ d`, or `None` for injectives and unknown vectors.
    pub fn tau_inverse(&self, d: &[i64]) -> Option<DimVector> {
        let x = self.index_of(d)?;
        self.tau.iter().position(|&t| t == Some(x)).map(|c| self.vertices[c].clone())
    }

    /// Every almost split sequence, one per non-projective vertex.
    pub fn meshes(&self) -> Vec<Mesh> {
        let mut out = Vec::new();
        for (c, t) in self.tau.iter().enumerate() {
            let Some(a) = *t else { continue };
            let mut middle = Vec::new();
            for &(from, to, mult) in &self.arrows {
                if from == a {
                    debug_assert!(self.arrows.iter().any(|&(f, t2, _)| f == to && t2 == c));
                    for _ in 0..mult {
                        middle.push(self.vertices[to].clone());
                    }
                }
            }
            middle.sort();
            out.push(Mesh {
                left: self.vertices[a].clone(),
                middle,
                right: self.vertices[c].clone(),
            });
        }
        out
    }

    /// `dim B = dim A + dim C` at every mesh.
    pub fn mesh_additive(&self) -> bool {
        self.meshes().iter().all(|m| {
            (0..m.left.len()).all(|i| m.middle.iter().map(|d| d[i]).sum::<i64>() == m.left[i] + m.right[i])
        })
    }

    /// DOT with solid irreducible maps and dashed τ arrows.
    pub fn to_dot(&self) -> String {
        let label = |d: &DimVector| d.iter().map(i64::to_string).collect::<Vec<_>>().join("");
        let mut out = String::from("digraph ar {\n  rankdir=LR;\n");
        for (i, d) in self.vertices.iter().enumerate() {
            out.push_str(&format!("  {i} [label=\"{}\"];\n", label(d)));
        }
        for &(a, b, m) in &self.arrows {
            let extra = if m > 1 { format!(" [label=\"{m}\"]") } else { String::new() };
            out.push_str(&format!("  {a} -> {b}{extra};\n"));
        }
        for (c, t) in self.tau.iter().enumerate() {
            if let Some(a) = t {
                out.push_str(&format!("  {c} -> {a} [style=dashed];\n"));
            }
        }
        out.push_str("}\n");
        out
    }
}

// ---- Tilting theory ----

/// Ext-compatibility data for the indecomposables of a Dynkin quiver.
pub struct ExtTable {
    pub roots: Vec<DimVector>,
    pub modules: Vec<Representation>,
    /// `ext[a][b] = dim Ext¹(M_a, M_b)`.
    pub ext: Vec<Vec<usize>>,
}

impl ExtTable {
    pub fn new(q: &Quiver) -> Result<Self, ReprError> {
        let modules = indecomposables(q)?;
        let roots: Vec<DimVector> = modules.iter().map(|m| m.dims.clone()).collect();
        let mut ext = vec![vec![0; modules.len()]; modules.len()];
        for (a, ma) in modules.iter().enumerate() {
            for (b, mb) in modules.iter().enumerate() {
                ext[a][b] = ext_dim(ma, mb)?;
            }
        }
        Ok(ExtTable { roots, modules, ext })
    }

    pub fn index_of(&self, d: &[i64]) -> Option<usize> {
        self.roots.iter().position(|r| r == d)
    }

    pub fn compatible(&self, a: usize, b: usize) -> bool {
        self.ext[a][b] == 0 && self.ext[b][a] == 0
    }
}

/// Cliques of size exactly `size` in a compatibility relation on `0..count`,
/// in lexicographic order.
pub(crate) fn cliques(count: usize, size: usize, compatible: impl Fn(usize, usize) -> bool) -> Vec<Vec<usize>> {
    fn go(
        start: usize,
        count: usize,
        size: usize,
        cur: &mut Vec<usize>,
        out: &mut Vec<Vec<usize>>,
        compatible: &dyn Fn(usize, usize) -> bool,
    ) {
        if cur.len() == size {
            out.push(cur.clone());
            return;
        }
        for v in start..count {
            if compatible(v, v) && cur.iter().all(|&u| compatible(u, v)) {
                cur.push(v);
                go(v + 1, count, size, cur, out, compatible);
                cur.pop();
            }
        }
    }
    let mut out = Vec::new();
    go(0, count, size, &mut Vec::new(), &mut out, &compatible);
    out
}

/// All basic tilting modules, as sets of dimension vectors.
pub fn tilting_modules(q: &Quiver) -> Result<Vec<Vec<DimVector>>, ReprError> {
    let table = ExtTable::new(q)?;
    Ok(cliques(table.roots.len(), q.n(), |a, b| table.compatible(a, b))
        .into_iter()
        .map(|c| c.into_iter().map(|i| table.roots[i].clone()).collect())
        .collect())
}

/// All indecomposables completing a rigid set of size `n - 1` to a tilting module.
pub fn complements(q: &Quiver, almost: &[DimVector]) -> Result<Vec<DimVector>, ReprError> {
    let table = ExtTable::new(q)?;
    complements_in(&table, almost)
}

pub fn complements_in(table: &ExtTable, almost: &[DimVector]) -> Result<Vec<DimVector>, ReprError> {
    let idx: Vec<usize> = almost
        .iter()
        .map(|d| table.index_of(d).ok_or_else(|| ReprError::NotPositiveRoot(d.clone())))
        .collect::<Result<_, _>>()?;
    Ok((0..table.roots.len())
        .filter(|x| !idx.contains(x))
        .filter(|&x| table.compatible(x, x) && idx.iter().all(|&a| table.compatible(a, x)))
        .map(|x| table.roots[x].clone())
        .collect())
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AprTilt {
    /// `T_j = P_j` for `j != i` and `T_i = τ⁻¹ P_i`.
    pub summands: Vec<DimVector>,
    /// Gabriel quiver of `End(T)^op`; vertex `a` corresponds to `T_a`.
    pub quiver: Quiver,
}

/// APR tilt at the sink `i`.
pub fn apr_tilt(q: &Quiver, i: usize) -> Result<AprTilt, ReprError> {
    check_dynkin(q)?;
    if !q.is_sink(i) {
        return Err(ReprError::NotSink(i));
    }
    let arq = ar_quiver(q)?;
    let n = q.n();
    let summands: Vec<DimVector> = (0..n)
        .map(|j| {
            let p = projective_dims(q, j);
            if j == i {
                arq.tau_inverse(&p).ok_or_else(|| ReprError::Knitting("P_i is injective".into()))
            } else {
                Ok(p)
            }
        })
        .collect::<Result<_, _>>()?;
    let modules: Vec<Representation> = summands.iter().map(|d| build_indecomposable(q, d)).collect::<Result<_, _>>()?;
    Ok(AprTilt {
        quiver: endomorphism_quiver(&modules)?,
        summands,
    })
}

/// Gabriel quiver of `End(⊕ T_a)^op` for pairwise non-isomorphic
/// indecomposables with trivial endomorphism rings: the arrows `a → b`
/// number `dim rad(T_b, T_a) - dim rad²(T_b, T_a)`.
pub fn endomorphism_quiver(modules: &[Representation]) -> Result<Quiver, ReprError> {
    let t = modules.len();
    let mut homs: Vec<Vec<Vec<Vec<Matrix<Q>>>>> = vec![vec![Vec::new(); t]; t];
    for x in 0..t {
        for y in 0..t {
            if x != y {
                homs[x][y] = hom_basis(&modules[x], &modules[y])?;
            }
        }
    }
    let mut arrows = Vec::new();
    for a in 0..t {
        for b in 0..t {
            if a == b || homs[b][a].is_empty() {
                continue;
            }
            let mut products: Vec<Vec<Q>> = Vec::new();
            for c in 0..t {
                if c == a || c == b {
                    continue;
                }
                for f in &homs[b][c] {
                    for g in &homs[c][a] {
                        let flat: Vec<Q> = g
                            .iter()
                            .zip(f)
                            .flat_map(|(gv, fv)| gv.mul(fv).data().to_vec())
                            .collect();
                        products.push(flat);
                    }
                }
            }
            let rad2 = if products.is_empty() {
                0
            } else {
                Matrix::from_rows(products).rank()
            };
            let count = homs[b][a].len() - rad2;
            if count > 0 {
                arrows.push((a, b, count as i64));
            }
        }
    }
    Quiver::from_arrows(t, 0, &arrows).map_err(|e| ReprError::Knitting(e.to_string()))
}
