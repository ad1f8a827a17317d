//! Quivers as skew-symmetric exchange matrices.
//!
//! A [`Quiver`] has `n` mutable vertices followed by `m` frozen ones and is
//! stored as its signed exchange matrix: `b[i][j]` is the number of arrows
//! `i → j` minus the number of arrows `j → i`. Storing one signed entry per
//! pair means loops and oriented 2-cycles cannot be represented at all.
//!
//! Vertices are 0-indexed in the Rust API. The JSON format (see
//! [`QuiverJson`]) is 1-indexed.

use serde::{Deserialize, Serialize};
use std::collections::{BTreeSet, VecDeque};
use std::fmt;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum QuiverError {
    #[error("vertex {vertex} out of range (quiver has {count} vertices)")]
    VertexOutOfRange { vertex: usize, count: usize },
    #[error("vertex {vertex} is frozen and cannot be mutated")]
    FrozenVertex { vertex: usize },
    #[error("matrix is not skew-symmetric at ({0}, {1})")]
    NotSkewSymmetric(usize, usize),
    #[error("matrix has wrong shape")]
    Shape,
    #[error("loop at vertex {0}")]
    Loop(usize),
    #[error("arrows in both directions between {0} and {1}")]
    TwoCycle(usize, usize),
    #[error("pair ({0}, {1}) listed more than once")]
    DuplicatePair(usize, usize),
    #[error("arrow multiplicity must be at least 1, got {0}")]
    BadMultiplicity(i64),
    #[error("exchange matrix entry overflowed during mutation")]
    Overflow,
    #[error("invalid quiver JSON: {0}")]
    Json(String),
}

/// Skew-symmetric exchange matrix with optional frozen vertices.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Quiver {
    n: usize,
    m: usize,
    b: Vec<i64>,
}

impl Quiver {
    /// `n` mutable and `m` frozen vertices, no arrows.
    pub fn empty(n: usize, m: usize) -> Self {
        let size = n + m;
        Quiver {
            n,
            m,
            b: vec![0; size * size],
        }
    }

    /// Builds from `(src, dst, multiplicity)` triples (0-indexed).
    pub fn from_arrows(n: usize, m: usize, arrows: &[(usize, usize, i64)]) -> Result<Self, QuiverError> {
        let mut q = Self::empty(n, m);
        let size = n + m;
        let mut seen = BTreeSet::new();
        for &(i, j, w) in arrows {
            for v in [i, j] {
                if v >= size {
                    return Err(QuiverError::VertexOutOfRange { vertex: v, count: size });
                }
            }
            if i == j {
                return Err(QuiverError::Loop(i));
            }
            if w < 1 {
                return Err(QuiverError::BadMultiplicity(w));
            }
            if seen.contains(&(i, j)) {
                return Err(QuiverError::DuplicatePair(i, j));
            }
            if seen.contains(&(j, i)) {
                return Err(QuiverError::TwoCycle(i, j));
            }
            seen.insert((i, j));
            q.b[i * size + j] = w;
            q.b[j * size + i] = -w;
        }
        Ok(q)
    }

    /// Builds from a full exchange matrix, checking skew-symmetry.
    pub fn from_matrix(n: usize, m: usize, rows: &[Vec<i64>]) -> Result<Self, QuiverError> {
        let size = n + m;
        if rows.len() != size || rows.iter().any(|r| r.len() != size) {
            return Err(QuiverError::Shape);
        }
        for i in 0..size {
            if rows[i][i] != 0 {
                return Err(QuiverError::Loop(i));
            }
            for j in 0..size {
                if rows[i][j] != -rows[j][i] {
                    return Err(QuiverError::NotSkewSymmetric(i, j));
                }
            }
        }
        Ok(Quiver {
            n,
            m,
            b: rows.iter().flatten().copied().collect(),
        })
    }

    /// Linearly oriented path `0 → 1 → … → n-1`.
    pub fn path(n: usize) -> Self {
        let arrows: Vec<_> = (1..n).map(|i| (i - 1, i, 1)).collect();
        Self::from_arrows(n, 0, &arrows).expect("path is a valid quiver")
    }

    /// Oriented cycle `0 → 1 → … → n-1 → 0`.
    pub fn cycle(n: usize) -> Self {
        let arrows: Vec<_> = (0..n).map(|i| (i, (i + 1) % n, 1)).collect();
        Self::from_arrows(n, 0, &arrows).expect("cycle is a valid quiver")
    }

    /// Mutable vertex count.
    pub fn n(&self) -> usize {
        self.n
    }

    /// Frozen vertex count.
    pub fn frozen(&self) -> usize {
        self.m
    }

    pub fn size(&self) -> usize {
        self.n + self.m
    }

    pub fn b(&self, i: usize, j: usize) -> i64 {
        self.b[i * self.size() + j]
    }

    fn set(&mut self, i: usize, j: usize, v: i64) {
        let s = self.size();
        self.b[i * s + j] = v;
    }

    pub fn matrix(&self) -> Vec<Vec<i64>> {
        self.b.chunks(self.size().max(1)).map(<[i64]>::to_vec).take(self.size()).collect()
    }

    /// Positive entries as `(src, dst, multiplicity)`, in lexicographic order.
    pub fn arrows(&self) -> Vec<(usize, usize, i64)> {
        let s = self.size();
        let mut out = Vec::new();
        for i in 0..s {
            for j in 0..s {
                let v = self.b(i, j);
                if v > 0 && !(i >= self.n && j >= self.n) {
                    out.push((i, j, v));
                }
            }
        }
        out
    }

    /// Fomin–Zelevinsky mutation at the mutable vertex `k`.
    pub fn mutate(&self, k: usize) -> Result<Quiver, QuiverError> {
        if k >= self.size() {
            return Err(QuiverError::VertexOutOfRange { vertex: k, count: self.size() });
        }
        if k >= self.n {
            return Err(QuiverError::FrozenVertex { vertex: k });
        }
        let s = self.size();
        let mut out = self.clone();
        for i in 0..s {
            for j in 0..s {
                if i >= self.n && j >= self.n {
                    continue;
                }
                let v = if i == k || j == k {
                    -self.b(i, j)
                } else {
                    let bik = self.b(i, k);
                    let bkj = self.b(k, j);
                    let t1 = bik.abs().checked_mul(bkj).ok_or(QuiverError::Overflow)?;
                    let t2 = bik.checked_mul(bkj.abs()).ok_or(QuiverError::Overflow)?;
                    let delta = t1.checked_add(t2).ok_or(QuiverError::Overflow)? / 2;
                    self.b(i, j).checked_add(delta).ok_or(QuiverError::Overflow)?
                };
                out.set(i, j, v);
            }
        }
        Ok(out)
    }

    /// Relabels vertices: vertex `perm[p]` of `self` becomes vertex `p`.
    /// Frozen vertices must be fixed by `perm`.
    pub fn permute(&self, perm: &[usize]) -> Quiver {
        let s = self.size();
        assert_eq!(perm.len(), s, "permutation has wrong length");
        let mut out = Self::empty(self.n, self.m);
        for p in 0..s {
            for q in 0..s {
                out.set(p, q, self.b(perm[p], perm[q]));
            }
        }
        out
    }

    /// Mutable part only, frozen vertices dropped.
    pub fn principal_part(&self) -> Quiver {
        let mut out = Self::empty(self.n, 0);
        for i in 0..self.n {
            for j in 0..self.n {
                out.set(i, j, self.b(i, j));
            }
        }
        out
    }

    pub fn is_sink(&self, i: usize) -> bool {
        (0..self.n).all(|j| self.b(i, j) <= 0)
    }

    pub fn is_source(&self, i: usize) -> bool {
        (0..self.n).all(|j| self.b(i, j) >= 0)
    }

    /// True iff the mutable part has no oriented cycle.
    pub fn is_acyclic(&self) -> bool {
        let n = self.n;
        let mut indeg: Vec<usize> = (0..n)
            .map(|j| (0..n).filter(|&i| self.b(i, j) > 0).count())
            .collect();
        let mut queue: VecDeque<usize> = (0..n).filter(|&v| indeg[v] == 0).collect();
        let mut seen = 0;
        while let Some(v) = queue.pop_front() {
            seen += 1;
            for w in 0..n {
                if self.b(v, w) > 0 {
                    indeg[w] -= 1;
                    if indeg[w] == 0 {
                        queue.push_back(w);
                    }
                }
            }
        }
        seen == n
    }

    /// Connected components of the mutable part, each sorted.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let n = self.n;
        let mut comp = vec![usize::MAX; n];
        let mut out = Vec::new();
        for start in 0..n {
            if comp[start] != usize::MAX {
                continue;
            }
            let id = out.len();
            let mut members = vec![start];
            comp[start] = id;
            let mut stack = vec![start];
            while let Some(v) = stack.pop() {
                for w in 0..n {
                    if self.b(v, w) != 0 && comp[w] == usize::MAX {
                        comp[w] = id;
                        members.push(w);
                        stack.push(w);
                    }
                }
            }
            members.sort_unstable();
            out.push(members);
        }
        out
    }

    /// Full subquiver on the given mutable vertices (no frozen part).
    pub fn induced(&self, vertices: &[usize]) -> Quiver {
        let k = vertices.len();
        let mut out = Self::empty(k, 0);
        for (p, &i) in vertices.iter().enumerate() {
            for (q, &j) in vertices.iter().enumerate() {
                out.set(p, q, self.b(i, j));
            }
        }
        out
    }

    pub fn to_json(&self) -> QuiverJson {
        QuiverJson {
            n: self.n,
            frozen: self.m,
            arrows: self
                .arrows()
                .into_iter()
                .map(|(i, j, w)| [i as i64 + 1, j as i64 + 1, w])
                .collect(),
        }
    }

    pub fn from_json(json: &QuiverJson) -> Result<Self, QuiverError> {
        let size = json.n + json.frozen;
        let mut arrows = Vec::with_capacity(json.arrows.len());
        for &[i, j, w] in &json.arrows {
            for v in [i, j] {
                if v < 1 || v as usize > size {
                    return Err(QuiverError::VertexOutOfRange {
                        vertex: v.max(0) as usize,
                        count: size,
                    });
                }
            }
            arrows.push((i as usize - 1, j as usize - 1, w));
        }
        Self::from_arrows(json.n, json.frozen, &arrows)
    }

    pub fn from_json_str(s: &str) -> Result<Self, QuiverError> {
        let json: QuiverJson = serde_json::from_str(s).map_err(|e| QuiverError::Json(e.to_string()))?;
        Self::from_json(&json)
    }
}

impl fmt::Display for Quiver {
    /// `1->2, 2=>3 (x2)`-style arrow list, 1-indexed; frozen vertices starred.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = |v: usize| {
            if v < self.n {
                format!("{}", v + 1)
            } else {
                format!("{}*", v + 1)
            }
        };
        let arrows = self.arrows();
        if arrows.is_empty() {
            return write!(f, "{} vertices, no arrows", self.size());
        }
        let parts: Vec<String> = arrows
            .iter()
            .map(|&(i, j, w)| {
                if w == 1 {
                    format!("{}->{}", name(i), name(j))
                } else {
                    format!("{}-{}->{}", name(i), w, name(j))
                }
            })
            .collect();
        write!(f, "{}", parts.join(", "))
    }
}

/// Wire format: `{"n":3,"frozen":0,"arrows":[[1,2,1],[2,3,1]]}`, where
/// `[i, j, w]` means `w` arrows `i → j`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct QuiverJson {
    pub n: usize,
    #[serde(default)]
    pub frozen: usize,
    pub arrows: Vec<[i64; 3]>,
}

// ---- Classification ----

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum DynkinType {
    A(usize),
    D(usize),
    E6,
    E7,
    E8,
}

/// Extended Dynkin diagrams; `A(n)` is Ã_n (with `n + 1` vertices).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ExtendedType {
    A(usize),
    D(usize),
    E6,
    E7,
    E8,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum DiagramClass {
    Dynkin(DynkinType),
    ExtendedDynkin(ExtendedType),
    /// Two vertices joined by three or more arrows.
    TwoVertex,
    Other,
}

impl fmt::Display for DynkinType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DynkinType::A(n) => write!(f, "A{n}"),
            DynkinType::D(n) => write!(f, "D{n}"),
            DynkinType::E6 => write!(f, "E6"),
            DynkinType::E7 => write!(f, "E7"),
            DynkinType::E8 => write!(f, "E8"),
        }
    }
}

impl fmt::Display for ExtendedType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExtendedType::A(n) => write!(f, "~A{n}"),
            ExtendedType::D(n) => write!(f, "~D{n}"),
            ExtendedType::E6 => write!(f, "~E6"),
            ExtendedType::E7 => write!(f, "~E7"),
            ExtendedType::E8 => write!(f, "~E8"),
        }
    }
}

impl fmt::Display for DiagramClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DiagramClass::Dynkin(t) => write!(f, "Dynkin({t})"),
            DiagramClass::ExtendedDynkin(t) => write!(f, "ExtendedDynkin({t})"),
            DiagramClass::TwoVertex => write!(f, "TwoVertex"),
            DiagramClass::Other => write!(f, "Other"),
        }
    }
}

impl Quiver {
    /// Classifies the underlying unoriented multigraph of the mutable part.
    /// Disconnected diagrams are `Other`.
    pub fn classify_diagram(&self) -> DiagramClass {
        classify_graph(&self.principal_part())
    }
}

fn classify_graph(q: &Quiver) -> DiagramClass {
    let n = q.n();
    if n == 0 || q.components().len() != 1 {
        return DiagramClass::Other;
    }
    let mult = |i: usize, j: usize| q.b(i, j).unsigned_abs();
    let max_mult = (0..n).flat_map(|i| (0..n).map(move |j| (i, j))).map(|(i, j)| mult(i, j)).max().unwrap_or(0);
    if max_mult > 1 {
        return match (n, max_mult) {
            (2, 2) => DiagramClass::ExtendedDynkin(ExtendedType::A(1)),
            (2, _) => DiagramClass::TwoVertex,
            _ => DiagramClass::Other,
        };
    }
    let adj: Vec<Vec<usize>> = (0..n).map(|i| (0..n).filter(|&j| mult(i, j) == 1).collect()).collect();
    let deg: Vec<usize> = adj.iter().map(Vec::len).collect();
    let edges: usize = deg.iter().sum::<usize>() / 2;

    if edges == n {
        // single cycle
        return if n >= 3 && deg.iter().all(|&d| d == 2) {
            DiagramClass::ExtendedDynkin(ExtendedType::A(n - 1))
        } else {
            DiagramClass::Other
        };
    }
    if edges != n - 1 {
        return DiagramClass::Other;
    }
    // trees from here on
    let branch: Vec<usize> = (0..n).filter(|&v| deg[v] >= 3).collect();
    match branch.as_slice() {
        [] => DiagramClass::Dynkin(DynkinType::A(n)),
        [c] if deg[*c] == 4 => {
            if n == 5 {
                DiagramClass::ExtendedDynkin(ExtendedType::D(4))
            } else {
                DiagramClass::Other
            }
        }
        [c] if deg[*c] == 3 => {
            let mut arms: Vec<usize> = adj[*c].iter().map(|&w| arm_length(&adj, *c, w)).collect();
            arms.sort_unstable();
            match arms.as_slice() {
                [1, 1, k] => DiagramClass::Dynkin(DynkinType::D(k + 3)),
                [1, 2, 2] => DiagramClass::Dynkin(DynkinType::E6),
                [1, 2, 3] => DiagramClass::Dynkin(DynkinType::E7),
                [1, 2, 4] => DiagramClass::Dynkin(DynkinType::E8),
                [2, 2, 2] => DiagramClass::ExtendedDynkin(ExtendedType::E6),
                [1, 3, 3] => DiagramClass::ExtendedDynkin(ExtendedType::E7),
                [1, 2, 5] => DiagramClass::ExtendedDynkin(ExtendedType::E8),
                _ => DiagramClass::Other,
            }
        }
        [a, b] if deg[*a] == 3 && deg[*b] == 3 => {
            let leaves = |c: usize| adj[c].iter().filter(|&&w| deg[w] == 1).count();
            if leaves(*a) == 2 && leaves(*b) == 2 {
                DiagramClass::ExtendedDynkin(ExtendedType::D(n - 1))
            } else {
                DiagramClass::Other
            }
        }
        _ => DiagramClass::Other,
    }
}

/// Number of vertices on the arm leaving `center` through `first`.
/// Only called on trees whose other vertices have degree at most 2.
fn arm_length(adj: &[Vec<usize>], center: usize, first: usize) -> usize {
    let mut len = 1;
    let (mut prev, mut cur) = (center, first);
    loop {
        let next: Vec<usize> = adj[cur].iter().copied().filter(|&w| w != prev).collect();
        match next.as_slice() {
            [w] => {
                prev = cur;
                cur = *w;
                len += 1;
            }
            _ => return len,
        }
    }
}

// ---- Canonical form ----

impl Quiver {
    /// Canonical representative under relabelling of mutable vertices
    /// (frozen vertices stay fixed), plus a witnessing permutation:
    /// `canonical = self.permute(&perm)`.
    pub fn canonical_form(&self) -> (Quiver, Vec<usize>) {
        let mut perms = self.canonical_perms();
        let perm = perms.swap_remove(0);
        (self.permute(&perm), perm)
    }

    /// Every permutation attaining the canonical form, sorted. Two of them
    /// differ by an automorphism of the quiver.
    ///
    /// The order minimised is lexicographic on the key made of the sorted
    /// refined vertex colours followed by the upper-triangular entries read
    /// column by column (with each vertex's frozen entries appended after its
    /// column). Because the colour sequence comes first, only permutations
    /// listing vertices in colour order can be optimal, which prunes the
    /// search. Cost is exponential in the size of the largest colour class.
    pub fn canonical_perms(&self) -> Vec<Vec<usize>> {
        let n = self.n;
        let colors = self.refined_colors();
        let mut slots: Vec<usize> = colors.clone();
        slots.sort_unstable();
        let mut search = CanonSearch {
            q: self,
            colors: &colors,
            slots: &slots,
            perm: Vec::with_capacity(n),
            used: vec![false; n],
            key: Vec::new(),
            best_key: None,
            best: Vec::new(),
        };
        search.run();
        let frozen: Vec<usize> = (n..self.size()).collect();
        let mut out: Vec<Vec<usize>> = search
            .best
            .into_iter()
            .map(|mut p| {
                p.extend_from_slice(&frozen);
                p
            })
            .collect();
        out.sort();
        out
    }

    /// All isomorphisms `f` onto `other` fixing frozen vertices, as vertex
    /// maps: `other.b(f[i], f[j]) == self.b(i, j)`.
    pub fn isomorphisms(&self, other: &Quiver) -> Vec<Vec<usize>> {
        if self.n != other.n || self.m != other.m {
            return Vec::new();
        }
        let theirs = other.canonical_perms().swap_remove(0);
        let target = other.permute(&theirs);
        let mine = self.canonical_perms();
        if self.permute(&mine[0]) != target {
            return Vec::new();
        }
        mine.into_iter()
            .map(|pa| {
                let mut f = vec![0; self.size()];
                for (p, &v) in pa.iter().enumerate() {
                    f[v] = theirs[p];
                }
                f
            })
            .collect()
    }

    /// Iterated colour refinement of the mutable vertices. Colours are ranks
    /// of signatures, so they are invariant under relabelling.
    fn refined_colors(&self) -> Vec<usize> {
        let n = self.n;
        let mut colors = vec![0usize; n];
        let mut classes = 1;
        loop {
            let sigs: Vec<(usize, Vec<(i64, usize)>, Vec<i64>)> = (0..n)
                .map(|v| {
                    let mut nb: Vec<(i64, usize)> = (0..n)
                        .filter(|&u| u != v && self.b(v, u) != 0)
                        .map(|u| (self.b(v, u), colors[u]))
                        .collect();
                    nb.sort_unstable();
                    let frozen: Vec<i64> = (n..self.size()).map(|f| self.b(v, f)).collect();
                    (colors[v], nb, frozen)
                })
                .collect();
            let mut uniq = sigs.clone();
            uniq.sort();
            uniq.dedup();
            let next: Vec<usize> = sigs
                .iter()
                .map(|s| uniq.binary_search(s).expect("signature present"))
                .collect();
            let count = uniq.len();
            colors = next;
            if count == classes {
                return colors;
            }
            classes = count;
        }
    }
}

struct CanonSearch<'a> {
    q: &'a Quiver,
    colors: &'a [usize],
    slots: &'a [usize],
    perm: Vec<usize>,
    used: Vec<bool>,
    key: Vec<i64>,
    best_key: Option<Vec<i64>>,
    best: Vec<Vec<usize>>,
}

impl CanonSearch<'_> {
    fn run(&mut self) {
        let pos = self.perm.len();
        if pos == self.q.n {
            match &self.best_key {
                Some(b) if self.key > *b => {}
                Some(b) if self.key == *b => self.best.push(self.perm.clone()),
                _ => {
                    self.best_key = Some(self.key.clone());
                    self.best = vec![self.perm.clone()];
                }
            }
            return;
        }
        for v in 0..self.q.n {
            if self.used[v] || self.colors[v] != self.slots[pos] {
                continue;
            }
            let mark = self.key.len();
            for &u in &self.perm {
                self.key.push(self.q.b(u, v));
            }
            for f in self.q.n..self.q.size() {
                self.key.push(self.q.b(v, f));
            }
            let prune = match &self.best_key {
                Some(b) => self.key.as_slice() > &b[..self.key.len()],
                None => false,
            };
            if !prune {
                self.used[v] = true;
                self.perm.push(v);
                self.run();
                self.perm.pop();
                self.used[v] = false;
            }
            self.key.truncate(mark);
        }
    }
}

// ---- Mutation classes ----

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum MutationClass {
    /// Canonical representatives, sorted.
    Finite(Vec<Quiver>),
    ExceededLimit,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Finiteness {
    FiniteByTheorem,
    FiniteByBfs,
    InfiniteByTheorem,
    Inconclusive,
}

impl fmt::Display for Finiteness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Finiteness::FiniteByTheorem => "FiniteByTheorem",
            Finiteness::FiniteByBfs => "FiniteByBFS",
            Finiteness::InfiniteByTheorem => "InfiniteByTheorem",
            Finiteness::Inconclusive => "Inconclusive",
        };
        f.write_str(s)
    }
}

impl Quiver {
    /// Breadth-first closure under mutation, up to isomorphism.
    ///
    /// Levels are processed in canonical order, so the result does not depend
    /// on hashing. An entry overflowing `i64` also reports `ExceededLimit`:
    /// such a class cannot be enumerated anyway.
    pub fn mutation_class(&self, max_size: usize) -> MutationClass {
        let start = self.canonical_form().0;
        let mut seen: BTreeSet<Quiver> = BTreeSet::new();
        seen.insert(start.clone());
        let mut frontier = vec![start];
        while !frontier.is_empty() {
            let mut next = BTreeSet::new();
            for q in &frontier {
                for k in 0..q.n() {
                    let Ok(child) = q.mutate(k) else {
                        return MutationClass::ExceededLimit;
                    };
                    let canon = child.canonical_form().0;
                    if !seen.contains(&canon) {
                        seen.insert(canon.clone());
                        next.insert(canon);
                        if seen.len() > max_size {
                            return MutationClass::ExceededLimit;
                        }
                    }
                }
            }
            frontier = next.into_iter().collect();
        }
        MutationClass::Finite(seen.into_iter().collect())
    }

    /// Decides finiteness of the mutation class of the mutable part.
    ///
    /// For acyclic quivers each connected component is finite exactly when it
    /// has at most two vertices or is a Dynkin or extended Dynkin diagram.
    /// Otherwise a bounded search is run.
    pub fn is_mutation_finite(&self, max_size: usize) -> Finiteness {
        let q = self.principal_part();
        if q.is_acyclic() {
            let finite = q.components().iter().all(|c| {
                c.len() <= 2
                    || matches!(
                        q.induced(c).classify_diagram(),
                        DiagramClass::Dynkin(_) | DiagramClass::ExtendedDynkin(_)
                    )
            });
            return if finite {
                Finiteness::FiniteByTheorem
            } else {
                Finiteness::InfiniteByTheorem
            };
        }
        match q.mutation_class(max_size) {
            MutationClass::Finite(_) => Finiteness::FiniteByBfs,
            MutationClass::ExceededLimit => Finiteness::Inconclusive,
        }
    }
}
