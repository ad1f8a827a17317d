//! Quivers with potential.
//!
//! Paths and cycles are written in composition order: `["c","b","a"]` is
//! `a` followed by `b` followed by `c`. A potential is a finite sum of
//! cycles, each stored in its lexicographically smallest rotation.

use crate::linalg::{parse_rational, rational_to_string};
use crate::quiver::Quiver;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};
use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum QpError {
    #[error("unknown arrow {0:?}")]
    UnknownArrow(String),
    #[error("duplicate arrow name {0:?}")]
    DuplicateName(String),
    #[error("arrow {0:?} is a loop")]
    Loop(String),
    #[error("vertex {0} out of range")]
    VertexOutOfRange(usize),
    #[error("{0:?} is not a closed composable cycle")]
    NotCycle(Vec<String>),
    #[error("relation {0} has no common source and target")]
    BadRelation(usize),
    #[error("2-cycle through vertex {0}")]
    TwoCycleAt(usize),
    #[error("bad coefficient {0:?}")]
    Coefficient(String),
    #[error("reduction incomplete: degree bound {0} reached")]
    ReductionIncomplete(usize),
    #[error("json: {0}")]
    Json(String),
}

pub type Word = Vec<String>;

// ---- Arrow quivers ----

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Arrow {
    pub name: String,
    /// 0-indexed.
    pub src: usize,
    pub dst: usize,
}

/// A quiver with named arrows. 2-cycles are allowed; loops are not.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ArrowQuiver {
    vertices: usize,
    arrows: Vec<Arrow>,
}

impl ArrowQuiver {
    pub fn new(vertices: usize, arrows: Vec<Arrow>) -> Result<Self, QpError> {
        let mut names = BTreeSet::new();
        for a in &arrows {
            if a.src >= vertices || a.dst >= vertices {
                return Err(QpError::VertexOutOfRange(a.src.max(a.dst) + 1));
            }
            if a.src == a.dst {
                return Err(QpError::Loop(a.name.clone()));
            }
            if !names.insert(a.name.clone()) {
                return Err(QpError::DuplicateName(a.name.clone()));
            }
        }
        Ok(ArrowQuiver { vertices, arrows })
    }

    /// `(name, src, dst)` triples, 0-indexed.
    pub fn from_triples(vertices: usize, arrows: &[(&str, usize, usize)]) -> Result<Self, QpError> {
        Self::new(
            vertices,
            arrows
                .iter()
                .map(|&(n, s, d)| Arrow {
                    name: n.to_string(),
                    src: s,
                    dst: d,
                })
                .collect(),
        )
    }

    /// One arrow per unit of multiplicity, named `a1, a2, ...` in
    /// lexicographic order of endpoints. Frozen vertices are ignored.
    pub fn from_quiver(q: &Quiver) -> Self {
        let n = q.n();
        let mut arrows = Vec::new();
        for i in 0..n {
            for j in 0..n {
                for _ in 0..q.b(i, j).max(0) {
                    arrows.push(Arrow {
                        name: format!("a{}", arrows.len() + 1),
                        src: i,
                        dst: j,
                    });
                }
            }
        }
        ArrowQuiver { vertices: n, arrows }
    }

    pub fn vertices(&self) -> usize {
        self.vertices
    }

    pub fn arrows(&self) -> &[Arrow] {
        &self.arrows
    }

    pub fn arrow(&self, name: &str) -> Option<&Arrow> {
        self.arrows.iter().find(|a| a.name == name)
    }

    /// Signed adjacency; parallel and antiparallel arrows cancel.
    pub fn to_quiver(&self) -> Quiver {
        let mut m = vec![vec![0i64; self.vertices]; self.vertices];
        for a in &self.arrows {
            m[a.src][a.dst] += 1;
            m[a.dst][a.src] -= 1;
        }
        Quiver::from_matrix(self.vertices, 0, &m).expect("signed adjacency is skew-symmetric")
    }

    pub fn has_two_cycle_at(&self, k: usize) -> bool {
        self.arrows.iter().any(|a| {
            (a.src == k || a.dst == k) && self.arrows.iter().any(|b| b.src == a.dst && b.dst == a.src)
        })
    }

    /// Source and target of a path, or `None` if it is empty, mentions an
    /// unknown arrow or is not composable.
    pub fn endpoints(&self, path: &[String]) -> Option<(usize, usize)> {
        let arrows: Vec<&Arrow> = path.iter().map(|n| self.arrow(n)).collect::<Option<_>>()?;
        // composition order: the last arrow is applied first
        for w in arrows.windows(2) {
            if w[1].dst != w[0].src {
                return None;
            }
        }
        Some((arrows.last()?.src, arrows.first()?.dst))
    }

    pub fn is_cycle(&self, path: &[String]) -> bool {
        matches!(self.endpoints(path), Some((s, t)) if s == t)
    }
}

// ---- Path sums and potentials ----

/// A linear combination of paths.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct PathSum(pub BTreeMap<Word, BigRational>);

impl PathSum {
    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    fn add_term(&mut self, w: Word, c: BigRational) {
        let e = self.0.entry(w).or_insert_with(BigRational::zero);
        *e += c;
        if e.is_zero() {
            self.0.retain(|_, v| !v.is_zero());
        }
    }
}

fn write_sum(f: &mut fmt::Formatter<'_>, terms: &BTreeMap<Word, BigRational>) -> fmt::Result {
    if terms.is_empty() {
        return write!(f, "0");
    }
    for (i, (w, c)) in terms.iter().enumerate() {
        let word = w.concat();
        let neg = c.is_negative();
        let abs = c.abs();
        match (i, neg) {
            (0, true) => write!(f, "-")?,
            (0, false) => {}
            (_, true) => write!(f, " - ")?,
            (_, false) => write!(f, " + ")?,
        }
        if abs.is_one() {
            write!(f, "{word}")?;
        } else {
            write!(f, "{}*{word}", rational_to_string(&abs))?;
        }
    }
    Ok(())
}

impl fmt::Display for PathSum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_sum(f, &self.0)
    }
}

/// Lexicographically smallest rotation.
pub fn canonical_rotation(w: &[String]) -> Word {
    (0..w.len())
        .map(|r| {
            let mut v = w[r..].to_vec();
            v.extend_from_slice(&w[..r]);
            v
        })
        .min()
        .unwrap_or_default()
}

/// Finite sum of cycles with nonzero rational coefficients.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct Potential(BTreeMap<Word, BigRational>);

impl Potential {
    pub fn zero() -> Self {
        Potential(BTreeMap::new())
    }

    pub fn terms(&self) -> &BTreeMap<Word, BigRational> {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn add_cycle(&mut self, w: &[String], c: BigRational) {
        let key = canonical_rotation(w);
        let e = self.0.entry(key.clone()).or_insert_with(BigRational::zero);
        *e += c;
        if e.is_zero() {
            self.0.remove(&key);
        }
    }

    pub fn from_cycles(cycles: &[(&[&str], i64)]) -> Self {
        let mut p = Potential::zero();
        for (w, c) in cycles {
            let w: Word = w.iter().map(|s| s.to_string()).collect();
            p.add_cycle(&w, BigRational::from_integer((*c).into()));
        }
        p
    }

    pub fn max_degree(&self) -> usize {
        self.0.keys().map(Vec::len).max().unwrap_or(0)
    }

    pub fn mentions(&self, name: &str) -> bool {
        self.0.keys().any(|w| w.iter().any(|x| x == name))
    }
}

impl fmt::Display for Potential {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_sum(f, &self.0)
    }
}

/// `∂W/∂a`: every occurrence of `a` is rotated to the end of its cycle
/// (first in path order) and deleted.
pub fn cyclic_derivative(w: &Potential, a: &str) -> PathSum {
    let mut out = PathSum::default();
    for (word, c) in &w.0 {
        for (i, x) in word.iter().enumerate() {
            if x == a {
                let mut p: Word = word[i + 1..].to_vec();
                p.extend_from_slice(&word[..i]);
                out.add_term(p, c.clone());
            }
        }
    }
    out
}

// ---- Quivers with potential ----

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QP {
    pub quiver: ArrowQuiver,
    pub potential: Potential,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ArrowJson {
    pub name: String,
    pub src: usize,
    pub dst: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermJson {
    pub coef: String,
    pub cycle: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct QpJson {
    #[serde(default)]
    pub vertices: Option<usize>,
    pub arrows: Vec<ArrowJson>,
    #[serde(default)]
    pub potential: Vec<TermJson>,
}

impl QP {
    pub fn new(quiver: ArrowQuiver, potential: Potential) -> Result<Self, QpError> {
        for w in potential.0.keys() {
            if let Some(x) = w.iter().find(|x| quiver.arrow(x).is_none()) {
                return Err(QpError::UnknownArrow(x.clone()));
            }
            if !quiver.is_cycle(w) {
                return Err(QpError::NotCycle(w.clone()));
            }
        }
        Ok(QP { quiver, potential })
    }

    pub fn to_json(&self) -> QpJson {
        QpJson {
            vertices: Some(self.quiver.vertices),
            arrows: self
                .quiver
                .arrows
                .iter()
                .map(|a| ArrowJson {
                    name: a.name.clone(),
                    src: a.src + 1,
                    dst: a.dst + 1,
                })
                .collect(),
            potential: self
                .potential
                .0
                .iter()
                .map(|(w, c)| TermJson {
                    coef: rational_to_string(c),
                    cycle: w.clone(),
                })
                .collect(),
        }
    }

    pub fn from_json(j: &QpJson) -> Result<Self, QpError> {
        let max_vertex = j.arrows.iter().map(|a| a.src.max(a.dst)).max().unwrap_or(0);
        let vertices = j.vertices.unwrap_or(max_vertex);
        let arrows = j
            .arrows
            .iter()
            .map(|a| {
                if a.src == 0 || a.dst == 0 {
                    return Err(QpError::VertexOutOfRange(0));
                }
                Ok(Arrow {
                    name: a.name.clone(),
                    src: a.src - 1,
                    dst: a.dst - 1,
                })
            })
            .collect::<Result<_, _>>()?;
        let quiver = ArrowQuiver::new(vertices, arrows)?;
        let mut potential = Potential::zero();
        for t in &j.potential {
            let c = parse_rational(&t.coef).ok_or_else(|| QpError::Coefficient(t.coef.clone()))?;
            if t.cycle.is_empty() {
                return Err(QpError::NotCycle(Vec::new()));
            }
            potential.add_cycle(&t.cycle, c);
        }
        QP::new(quiver, potential)
    }

    pub fn from_json_str(s: &str) -> Result<Self, QpError> {
        let j: QpJson = serde_json::from_str(s).map_err(|e| QpError::Json(e.to_string()))?;
        Self::from_json(&j)
    }
}

impl fmt::Display for QP {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let arrows: Vec<String> = self
            .quiver
            .arrows
            .iter()
            .map(|a| format!("{}:{}->{}", a.name, a.src + 1, a.dst + 1))
            .collect();
        write!(f, "arrows {{{}}}, W = {}", arrows.join(", "), self.potential)
    }
}

/// The quiver and the nonzero cyclic derivatives, in arrow order.
pub fn jacobian_presentation(qp: &QP) -> (ArrowQuiver, Vec<PathSum>) {
    let rels = qp
        .quiver
        .arrows
        .iter()
        .map(|a| cyclic_derivative(&qp.potential, &a.name))
        .filter(|r| !r.is_zero())
        .collect();
    (qp.quiver.clone(), rels)
}

/// Adds an arrow `j → i` for each relation from `i` to `j`. New arrows are
/// named `r1, r2, ...` (skipping names already taken).
pub fn relation_extension(q: &ArrowQuiver, relations: &[PathSum]) -> Result<ArrowQuiver, QpError> {
    let mut arrows = q.arrows.clone();
    let mut counter = 0;
    for (idx, rel) in relations.iter().enumerate() {
        let ends: BTreeSet<(usize, usize)> = rel
            .0
            .keys()
            .map(|p| q.endpoints(p).ok_or(QpError::BadRelation(idx)))
            .collect::<Result<_, _>>()?;
        let [(i, j)] = ends.into_iter().collect::<Vec<_>>()[..] else {
            return Err(QpError::BadRelation(idx));
        };
        let name = loop {
            counter += 1;
            let name = format!("r{counter}");
            if !arrows.iter().any(|a| a.name == name) {
                break name;
            }
        };
        arrows.push(Arrow { name, src: j, dst: i });
    }
    ArrowQuiver::new(q.vertices, arrows)
}

/// Premutation at `k`: each path `b·a` through `k` becomes an arrow `[ba]`,
/// arrows at `k` are reversed (`a*`, `b*`), and
/// `W̃ = [W] + Σ a* b* [ba]`.
pub fn premutate(qp: &QP, k: usize) -> Result<QP, QpError> {
    let q = &qp.quiver;
    if k >= q.vertices {
        return Err(QpError::VertexOutOfRange(k + 1));
    }
    if q.has_two_cycle_at(k) {
        return Err(QpError::TwoCycleAt(k + 1));
    }
    let incoming: Vec<&Arrow> = q.arrows.iter().filter(|a| a.dst == k).collect();
    let outgoing: Vec<&Arrow> = q.arrows.iter().filter(|a| a.src == k).collect();
    let star = |a: &Arrow| format!("{}*", a.name);
    let composite = |b: &Arrow, a: &Arrow| format!("[{}{}]", b.name, a.name);
    let mut arrows: Vec<Arrow> = q
        .arrows
        .iter()
        .map(|a| {
            if a.src == k || a.dst == k {
                Arrow {
                    name: star(a),
                    src: a.dst,
                    dst: a.src,
                }
            } else {
                a.clone()
            }
        })
        .collect();
    for b in &outgoing {
        for a in &incoming {
            arrows.push(Arrow {
                name: composite(b, a),
                src: a.src,
                dst: b.dst,
            });
        }
    }
    let quiver = ArrowQuiver::new(q.vertices, arrows)?;

    let mut w = Potential::zero();
    for (word, c) in &qp.potential.0 {
        // rotate so the first arrow applied does not leave k
        let len = word.len();
        let start = (0..len)
            .find(|&r| q.arrow(&word[(r + len - 1) % len]).expect("checked").src != k)
            .ok_or_else(|| QpError::NotCycle(word.clone()))?;
        let mut rot: Word = word[start..].to_vec();
        rot.extend_from_slice(&word[..start]);
        // scan in path order (right to left), fusing b·a through k
        let mut out: Word = Vec::new();
        let mut i = len;
        while i > 0 {
            let a = q.arrow(&rot[i - 1]).expect("checked");
            if a.dst == k {
                let b = q.arrow(&rot[i - 2]).expect("arrow after entering k");
                out.push(composite(b, a));
                i -= 2;
            } else {
                out.push(a.name.clone());
                i -= 1;
            }
        }
        out.reverse();
        w.add_cycle(&out, c.clone());
    }
    for a in &incoming {
        for b in &outgoing {
            w.add_cycle(&[star(a), star(b), composite(b, a)], BigRational::one());
        }
    }
    QP::new(quiver, w)
}

/// Replaces every occurrence of `x` in `w` by `x + p`, giving up once a
/// term exceeds `max_degree`.
fn substitute(w: &Potential, x: &str, p: &PathSum, max_degree: usize) -> Result<Potential, QpError> {
    let mut out = Potential::zero();
    for (word, c) in &w.0 {
        let mut partial: Vec<(Word, BigRational)> = vec![(Vec::new(), c.clone())];
        for y in word {
            let mut next = Vec::new();
            for (pre, pc) in partial {
                if y == x {
                    for (path, qc) in &p.0 {
                        let mut v = pre.clone();
                        v.extend_from_slice(path);
                        next.push((v, &pc * qc));
                    }
                }
                let mut v = pre;
                v.push(y.clone());
                next.push((v, pc));
            }
            if next.iter().any(|(v, _)| v.len() > max_degree) {
                return Err(QpError::ReductionIncomplete(max_degree));
            }
            partial = next;
        }
        for (v, pc) in partial {
            out.add_cycle(&v, pc);
        }
    }
    Ok(out)
}

/// Removes degree-2 terms `λ·uv` by alternately substituting
/// `v ↦ v − ∂_u(W')/λ` and `u ↦ u − ∂_v(W')/λ`, where `W' = W − λ·uv`,
/// until `W'` avoids `u` and `v`; then deletes `u`, `v` and the term.
pub fn reduce(qp: &QP, max_degree: usize) -> Result<QP, QpError> {
    let mut quiver = qp.quiver.clone();
    let mut w = qp.potential.clone();
    if w.max_degree() > max_degree {
        return Err(QpError::ReductionIncomplete(max_degree));
    }
    while let Some(key) = w.0.keys().find(|k| k.len() == 2).cloned() {
        let (u, v) = (key[0].clone(), key[1].clone());
        loop {
            let lambda = w.0.get(&key).cloned().ok_or(QpError::ReductionIncomplete(max_degree))?;
            let mut rest = w.clone();
            rest.0.remove(&key);
            let (has_u, has_v) = (rest.mentions(&u), rest.mentions(&v));
            if !has_u && !has_v {
                w = rest;
                break;
            }
            let (target, deriv) = if has_u { (&v, cyclic_derivative(&rest, &u)) } else { (&u, cyclic_derivative(&rest, &v)) };
            let shift = PathSum(deriv.0.into_iter().map(|(p, c)| (p, -c / &lambda)).collect());
            w = substitute(&w, target, &shift, max_degree)?;
        }
        quiver.arrows.retain(|a| a.name != u && a.name != v);
    }
    QP::new(quiver, w)
}

/// Premutation followed by reduction.
pub fn mutate_qp(qp: &QP, k: usize, max_degree: usize) -> Result<QP, QpError> {
    reduce(&premutate(qp, k)?, max_degree)
}

/// Sum of all chordless oriented 3-cycles of a signed quiver's arrow
/// realisation, each with coefficient 1.
pub fn triangle_potential(q: &ArrowQuiver) -> Potential {
    let mut w = Potential::zero();
    let arrows = &q.arrows;
    for a in arrows {
        for b in arrows.iter().filter(|b| b.src == a.dst) {
            for c in arrows.iter().filter(|c| c.src == b.dst && c.dst == a.src) {
                if a.name < b.name && a.name < c.name {
                    w.add_cycle(&[c.name.clone(), b.name.clone(), a.name.clone()], BigRational::one());
                }
            }
        }
    }
    w
}
