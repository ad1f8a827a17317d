//! Triangulations of a polygon as a model for type A.
//!
//! Polygon vertices are labelled `1..=N` counterclockwise. Within each
//! triangle `a < b < c` the sides are rotated counterclockwise,
//! `(a,b) → (b,c) → (c,a)`, and each consecutive pair of diagonals gives
//! an arrow.

use crate::clustercat::{CCObject, CatError, ClusterCategory};
use crate::quiver::{DiagramClass, DynkinType, Quiver};
use serde::{Deserialize, Serialize};
use std::collections::{BTreeMap, BTreeSet, HashMap, VecDeque};
use std::fmt;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PolygonError {
    #[error("a polygon needs at least 4 vertices, got {0}")]
    TooSmall(usize),
    #[error("({0},{1}) is not a diagonal of the {2}-gon")]
    NotDiagonal(usize, usize, usize),
    #[error("diagonal {0} is not in the triangulation")]
    NotInTriangulation(Diagonal),
    #[error("not a triangulation: {0}")]
    Invalid(String),
    #[error("models do not align: {0}")]
    Alignment(String),
    #[error(transparent)]
    Category(#[from] CatError),
}

/// A diagonal `(i, j)` with `i < j`, 1-indexed.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Serialize, Deserialize)]
pub struct Diagonal(pub usize, pub usize);

impl fmt::Display for Diagonal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.0, self.1)
    }
}

impl Diagonal {
    pub fn new(ngon: usize, a: usize, b: usize) -> Result<Self, PolygonError> {
        let (i, j) = (a.min(b), a.max(b));
        if i < 1 || j > ngon || j - i < 2 || (i == 1 && j == ngon) {
            return Err(PolygonError::NotDiagonal(a, b, ngon));
        }
        Ok(Diagonal(i, j))
    }
}

/// True when the endpoints strictly interleave.
pub fn crossing(d1: Diagonal, d2: Diagonal) -> bool {
    let inside = |x: usize| d1.0 < x && x < d1.1;
    let ends = [d2.0, d2.1];
    if ends.iter().any(|&x| x == d1.0 || x == d1.1) {
        return false;
    }
    inside(d2.0) != inside(d2.1)
}

pub fn diagonals(ngon: usize) -> Result<Vec<Diagonal>, PolygonError> {
    if ngon < 4 {
        return Err(PolygonError::TooSmall(ngon));
    }
    Ok((1..=ngon)
        .flat_map(|i| ((i + 2)..=ngon).map(move |j| (i, j)))
        .filter(|&(i, j)| !(i == 1 && j == ngon))
        .map(|(i, j)| Diagonal(i, j))
        .collect())
}

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Triangulation {
    ngon: usize,
    /// Sorted; position `p` is quiver vertex `p`.
    diagonals: Vec<Diagonal>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TriangulationJson {
    pub ngon: usize,
    pub diagonals: Vec<[usize; 2]>,
}

impl Triangulation {
    pub fn new(ngon: usize, mut diagonals: Vec<Diagonal>) -> Result<Self, PolygonError> {
        if ngon < 4 {
            return Err(PolygonError::TooSmall(ngon));
        }
        for d in &diagonals {
            Diagonal::new(ngon, d.0, d.1)?;
        }
        diagonals.sort();
        diagonals.dedup();
        if diagonals.len() != ngon - 3 {
            return Err(PolygonError::Invalid(format!(
                "{} diagonals, expected {}",
                diagonals.len(),
                ngon - 3
            )));
        }
        for (a, &d1) in diagonals.iter().enumerate() {
            if let Some(&d2) = diagonals[a + 1..].iter().find(|&&d2| crossing(d1, d2)) {
                return Err(PolygonError::Invalid(format!("{d1} crosses {d2}")));
            }
        }
        Ok(Triangulation { ngon, diagonals })
    }

    pub fn ngon(&self) -> usize {
        self.ngon
    }

    pub fn diagonals(&self) -> &[Diagonal] {
        &self.diagonals
    }

    pub fn contains(&self, d: Diagonal) -> bool {
        self.diagonals.binary_search(&d).is_ok()
    }

    fn is_side(&self, a: usize, b: usize) -> bool {
        let (i, j) = (a.min(b), a.max(b));
        j - i == 1 || (i == 1 && j == self.ngon) || self.contains(Diagonal(i, j))
    }

    /// All triangles `(a, b, c)`, `a < b < c`.
    pub fn triangles(&self) -> Vec<(usize, usize, usize)> {
        let n = self.ngon;
        let mut out = Vec::new();
        for a in 1..=n {
            for b in (a + 1)..=n {
                if !self.is_side(a, b) {
                    continue;
                }
                for c in (b + 1)..=n {
                    if self.is_side(b, c) && self.is_side(a, c) {
                        out.push((a, b, c));
                    }
                }
            }
        }
        out
    }

    /// Replaces `d` by the other diagonal of the quadrilateral formed by the
    /// two triangles on either side of it.
    pub fn flip(&self, d: Diagonal) -> Result<Triangulation, PolygonError> {
        if !self.contains(d) {
            return Err(PolygonError::NotInTriangulation(d));
        }
        let apexes: Vec<usize> = self
            .triangles()
            .into_iter()
            .filter_map(|(a, b, c)| match [a, b, c].iter().filter(|&&v| v != d.0 && v != d.1).collect::<Vec<_>>()[..] {
                [&x] => Some(x),
                _ => None,
            })
            .collect();
        let [c1, c2] = apexes[..] else {
            return Err(PolygonError::Invalid(format!("{d} does not bound two triangles")));
        };
        let new = Diagonal(c1.min(c2), c1.max(c2));
        let diagonals = self.diagonals.iter().map(|&x| if x == d { new } else { x }).collect();
        Triangulation::new(self.ngon, diagonals)
    }

    /// Flip of the diagonal at quiver vertex `k`; the flipped diagonal keeps
    /// position `k` in the returned list.
    pub fn flip_at(&self, k: usize) -> Result<(Triangulation, Vec<Diagonal>), PolygonError> {
        let d = *self
            .diagonals
            .get(k)
            .ok_or_else(|| PolygonError::Invalid(format!("no diagonal at position {k}")))?;
        let t = self.flip(d)?;
        let new = *t.diagonals.iter().find(|x| !self.contains(**x)).expect("flip changes one diagonal");
        let mut order = self.diagonals.clone();
        order[k] = new;
        Ok((t, order))
    }

    /// Quiver on the diagonals (in sorted order).
    pub fn quiver(&self) -> Quiver {
        let pos: HashMap<Diagonal, usize> = self.diagonals.iter().enumerate().map(|(p, &d)| (d, p)).collect();
        let mut arrows = Vec::new();
        for (a, b, c) in self.triangles() {
            let sides = [Diagonal(a, b), Diagonal(b, c), Diagonal(a, c)];
            for s in 0..3 {
                if let (Some(&u), Some(&v)) = (pos.get(&sides[s]), pos.get(&sides[(s + 1) % 3])) {
                    arrows.push((u, v, 1));
                }
            }
        }
        Quiver::from_arrows(self.diagonals.len(), 0, &arrows).expect("triangulation quiver is valid")
    }

    pub fn to_json(&self) -> TriangulationJson {
        TriangulationJson {
            ngon: self.ngon,
            diagonals: self.diagonals.iter().map(|d| [d.0, d.1]).collect(),
        }
    }

    pub fn from_json(j: &TriangulationJson) -> Result<Self, PolygonError> {
        Triangulation::new(j.ngon, j.diagonals.iter().map(|d| Diagonal(d[0].min(d[1]), d[0].max(d[1]))).collect())
    }

    /// The polygon on the unit circle with the diagonals drawn in. `labels`
    /// optionally names each diagonal (in sorted order).
    pub fn to_svg(&self, labels: Option<&[String]>) -> String {
        let n = self.ngon;
        let point = |v: usize| {
            let angle = std::f64::consts::TAU * (v as f64 - 1.0) / n as f64 - std::f64::consts::FRAC_PI_2;
            (angle.cos(), -angle.sin())
        };
        let mut out = String::from(
            "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"-1.3 -1.3 2.6 2.6\" width=\"400\" height=\"400\">\n",
        );
        let outline: Vec<String> = (1..=n)
            .map(|v| {
                let (x, y) = point(v);
                format!("{x:.4},{y:.4}")
            })
            .collect();
        out.push_str(&format!(
            "  <polygon points=\"{}\" fill=\"none\" stroke=\"black\" stroke-width=\"0.02\"/>\n",
            outline.join(" ")
        ));
        for (p, d) in self.diagonals.iter().enumerate() {
            let (x1, y1) = point(d.0);
            let (x2, y2) = point(d.1);
            out.push_str(&format!(
                "  <line class=\"diagonal\" data-vertex=\"{}\" data-diagonal=\"{},{}\" x1=\"{x1:.4}\" y1=\"{y1:.4}\" x2=\"{x2:.4}\" y2=\"{y2:.4}\" stroke=\"steelblue\" stroke-width=\"0.03\"/>\n",
                p + 1,
                d.0,
                d.1
            ));
            if let Some(label) = labels.and_then(|l| l.get(p)) {
                out.push_str(&format!(
                    "  <text x=\"{:.4}\" y=\"{:.4}\" font-size=\"0.1\">{}</text>\n",
                    (x1 + x2) / 2.0,
                    (y1 + y2) / 2.0,
                    escape(label)
                ));
            }
        }
        for v in 1..=n {
            let (x, y) = point(v);
            out.push_str(&format!(
                "  <text x=\"{:.4}\" y=\"{:.4}\" font-size=\"0.12\" text-anchor=\"middle\">{v}</text>\n",
                x * 1.15,
                y * 1.15 + 0.04
            ));
        }
        out.push_str("</svg>\n");
        out
    }
}

fn escape(s: &str) -> String {
    s.replace('&', "&amp;").replace('<', "&lt;").replace('>', "&gt;")
}

impl fmt::Display for Triangulation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.diagonals.iter().map(ToString::to_string).collect();
        write!(f, "{{{}}}", parts.join(", "))
    }
}

/// All triangulations, sorted by diagonal set.
pub fn triangulations(ngon: usize) -> Result<Vec<Triangulation>, PolygonError> {
    if ngon < 4 {
        return Err(PolygonError::TooSmall(ngon));
    }
    let vertices: Vec<usize> = (1..=ngon).collect();
    let mut out: Vec<Triangulation> = ears(&vertices)
        .into_iter()
        .map(|ds| Triangulation::new(ngon, ds).expect("ear recursion yields triangulations"))
        .collect();
    out.sort();
    Ok(out)
}

/// Triangulations of the convex polygon on `vs` (in order), as diagonal
/// lists: the base `(vs[0], vs[last])` lies in one triangle with some apex.
fn ears(vs: &[usize]) -> Vec<Vec<Diagonal>> {
    if vs.len() < 3 {
        return vec![Vec::new()];
    }
    let (first, last) = (vs[0], vs[vs.len() - 1]);
    let mut out = Vec::new();
    for m in 1..vs.len() - 1 {
        let apex = vs[m];
        let left = ears(&vs[..=m]);
        let right = ears(&vs[m..]);
        for l in &left {
            for r in &right {
                let mut ds = l.clone();
                ds.extend_from_slice(r);
                if m > 1 {
                    ds.push(Diagonal(first.min(apex), first.max(apex)));
                }
                if m < vs.len() - 2 {
                    ds.push(Diagonal(apex.min(last), apex.max(last)));
                }
                out.push(ds);
            }
        }
    }
    out
}

/// `{(1,3), (1,4), ..., (1,N-1)}`.
pub fn fan(ngon: usize) -> Result<Triangulation, PolygonError> {
    Triangulation::new(ngon, (3..ngon).map(|j| Diagonal(1, j)).collect())
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FlipGraph {
    pub nodes: Vec<Triangulation>,
    /// `(u, k, v)`: flipping the diagonal at position `k` of `u` gives `v`.
    pub edges: Vec<(usize, usize, usize)>,
}

impl FlipGraph {
    pub fn is_regular(&self) -> bool {
        let mut deg = vec![0usize; self.nodes.len()];
        for &(u, _, _) in &self.edges {
            deg[u] += 1;
        }
        let n = self.nodes.first().map_or(0, |t| t.diagonals.len());
        deg.iter().all(|&d| d == n)
    }

    pub fn is_connected(&self) -> bool {
        let mut seen = vec![false; self.nodes.len()];
        let mut stack = vec![0];
        while let Some(u) = stack.pop() {
            if std::mem::replace(&mut seen[u], true) {
                continue;
            }
            stack.extend(self.edges.iter().filter(|e| e.0 == u).map(|e| e.2));
        }
        seen.iter().all(|&s| s)
    }
}

pub fn flip_graph(ngon: usize) -> Result<FlipGraph, PolygonError> {
    let nodes = triangulations(ngon)?;
    let index: HashMap<&Triangulation, usize> = nodes.iter().enumerate().map(|(i, t)| (t, i)).collect();
    let mut edges = Vec::new();
    for (u, t) in nodes.iter().enumerate() {
        for (k, &d) in t.diagonals.iter().enumerate() {
            let v = index[&t.flip(d)?];
            edges.push((u, k, v));
        }
    }
    Ok(FlipGraph { nodes, edges })
}

/// A triangulation whose quiver is isomorphic to `q`, with the diagonal
/// matched to each vertex of `q`.
pub fn find_triangulation(q: &Quiver) -> Option<(Triangulation, Vec<Diagonal>)> {
    if q.frozen() != 0 || q.n() == 0 {
        return None;
    }
    let ngon = q.n() + 3;
    triangulations(ngon).ok()?.into_iter().find_map(|t| {
        let f = q.isomorphisms(&t.quiver()).into_iter().next()?;
        let ds = f.iter().map(|&p| t.diagonals[p]).collect();
        Some((t, ds))
    })
}

/// The matching between the flip graph of the `(n+3)`-gon and the cluster
/// tilting graph of an `A_n` quiver.
#[derive(Clone, Debug)]
pub struct Alignment {
    /// `tilting[u]` is the cluster tilting node matched with triangulation `u`.
    pub tilting: Vec<usize>,
    pub objects: BTreeMap<Diagonal, CCObject>,
}

impl Alignment {
    pub fn object(&self, d: Diagonal) -> Option<&CCObject> {
        self.objects.get(&d)
    }
}

/// Aligns triangulations with cluster tilting objects by simultaneous BFS
/// from the fan, matched with a cluster tilting object whose seed quiver is
/// isomorphic to the fan's quiver. Every flip must correspond to a
/// mutation, every diagonal to a single object, and every triangulation
/// quiver must equal the matched seed quiver under the diagonal matching.
pub fn align_models(q: &Quiver) -> Result<Alignment, PolygonError> {
    let n = q.n();
    match q.classify_diagram() {
        DiagramClass::Dynkin(DynkinType::A(k)) if k == n => {}
        other => return Err(PolygonError::Alignment(format!("{other} is not of type A{n}"))),
    }
    let ngon = n + 3;
    let flips = flip_graph(ngon)?;
    let cat = ClusterCategory::new(q)?;
    let ct = cat.ct_graph()?;
    if flips.nodes.len() != ct.nodes.len() {
        return Err(PolygonError::Alignment(format!(
            "{} triangulations but {} cluster tilting objects",
            flips.nodes.len(),
            ct.nodes.len()
        )));
    }
    let root = fan(ngon)?;
    let root_id = flips.nodes.iter().position(|t| *t == root).expect("fan is a triangulation");
    let fan_quiver = root.quiver();
    let mut last = PolygonError::Alignment("no cluster tilting object has the fan quiver".into());
    for (c, node) in ct.nodes.iter().enumerate() {
        for f in fan_quiver.isomorphisms(&node.seed_quiver) {
            match try_align(&flips, &cat, &ct, root_id, c, &f) {
                Ok(a) => return Ok(a),
                Err(e) => last = e,
            }
        }
    }
    Err(last)
}

fn try_align(
    flips: &FlipGraph,
    cat: &ClusterCategory,
    ct: &crate::clustercat::CtGraph,
    root: usize,
    ct_root: usize,
    iso: &[usize],
) -> Result<Alignment, PolygonError> {
    let fail = |s: String| Err(PolygonError::Alignment(s));
    let mut tilting = vec![usize::MAX; flips.nodes.len()];
    let mut objects: BTreeMap<Diagonal, CCObject> = BTreeMap::new();
    let mut used: BTreeSet<CCObject> = BTreeSet::new();
    // pos[u][k]: summand position matched with diagonal position k of node u
    let mut pos: Vec<Vec<usize>> = vec![Vec::new(); flips.nodes.len()];
    tilting[root] = ct_root;
    pos[root] = iso.to_vec();
    let mut queue = VecDeque::from([root]);
    while let Some(u) = queue.pop_front() {
        let t = &flips.nodes[u];
        let node = &ct.nodes[tilting[u]];
        for (k, &d) in t.diagonals.iter().enumerate() {
            let obj = &node.summands[pos[u][k]];
            match objects.get(&d) {
                Some(o) if o != obj => return fail(format!("{d} matched with both {o} and {obj}")),
                Some(_) => {}
                None => {
                    if !used.insert(obj.clone()) {
                        return fail(format!("{obj} matched with two diagonals"));
                    }
                    objects.insert(d, obj.clone());
                }
            }
        }
        let tq = t.quiver();
        for a in 0..t.diagonals.len() {
            for b in 0..t.diagonals.len() {
                if tq.b(a, b) != node.seed_quiver.b(pos[u][a], pos[u][b]) {
                    return fail(format!("quiver of {t} differs from its seed quiver"));
                }
            }
        }
        for &(_, k, v) in flips.edges.iter().filter(|e| e.0 == u) {
            let i = pos[u][k];
            let w = ct
                .edges
                .iter()
                .find(|e| e.0 == tilting[u] && e.1 == i)
                .map(|e| e.2)
                .expect("ct graph is regular");
            let (_, order) = t.flip_at(k)?;
            let mutated = cat.mutate_ct(node, i)?;
            let target = &ct.nodes[w];
            // positions in v's sorted order, via the mutated object's summand order
            let vpos: Vec<usize> = flips.nodes[v]
                .diagonals
                .iter()
                .map(|d| {
                    let kk = order.iter().position(|x| x == d).expect("same diagonals");
                    let ii = if kk == k { i } else { pos[u][kk] };
                    let obj = &mutated.summands[ii];
                    target.summands.iter().position(|x| x == obj).expect("same summands")
                })
                .collect();
            if tilting[v] == usize::MAX {
                tilting[v] = w;
                pos[v] = vpos;
                queue.push_back(v);
            } else if tilting[v] != w {
                return fail(format!("{} reached along two paths with different objects", flips.nodes[v]));
            } else if pos[v] != vpos {
                return fail(format!("{} matched inconsistently", flips.nodes[v]));
            }
        }
    }
    if tilting.contains(&usize::MAX) {
        return fail("flip graph not covered".into());
    }
    let mut seen = tilting.clone();
    seen.sort_unstable();
    seen.dedup();
    if seen.len() != tilting.len() {
        return fail("two triangulations matched with one object".into());
    }
    Ok(Alignment { tilting, objects })
}

/// Checks crossing against Ext¹ on every pair of aligned diagonals.
pub fn crossing_matches_ext(cat: &ClusterCategory, al: &Alignment) -> Result<bool, PolygonError> {
    for (&d1, o1) in &al.objects {
        for (&d2, o2) in &al.objects {
            if crossing(d1, d2) != (cat.ext1(o1, o2)? != 0) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn counts() {
        assert_eq!(diagonals(5).unwrap().len(), 5);
        assert_eq!(diagonals(4).unwrap().len(), 2);
        assert_eq!(diagonals(6).unwrap().len(), 9);
        assert_eq!(triangulations(4).unwrap().len(), 2);
        assert_eq!(triangulations(5).unwrap().len(), 5);
        assert_eq!(triangulations(6).unwrap().len(), 14);
        assert_eq!(triangulations(8).unwrap().len(), 132);
        assert!(diagonals(3).is_err());
    }

    #[test]
    fn crossing_examples() {
        assert!(crossing(Diagonal(1, 3), Diagonal(2, 4)));
        assert!(!crossing(Diagonal(1, 3), Diagonal(1, 4)));
        assert!(!crossing(Diagonal(1, 3), Diagonal(3, 5)));
        assert!(crossing(Diagonal(2, 5), Diagonal(1, 3)));
        assert!(!crossing(Diagonal(2, 4), Diagonal(1, 5)));
    }

    #[test]
    fn flips() {
        let t = Triangulation::new(5, vec![Diagonal(1, 3), Diagonal(1, 4)]).unwrap();
        let f = t.flip(Diagonal(1, 3)).unwrap();
        assert_eq!(f.diagonals(), &[Diagonal(1, 4), Diagonal(2, 4)]);
        assert_eq!(f.flip(Diagonal(2, 4)).unwrap(), t);
        assert!(t.flip(Diagonal(2, 4)).is_err());
        let g = flip_graph(5).unwrap();
        assert!(g.is_regular() && g.is_connected());
        assert_eq!(g.edges.len(), 10);
        for n in 4..=8 {
            let g = flip_graph(n).unwrap();
            assert!(g.is_regular() && g.is_connected());
            for &(u, k, v) in &g.edges {
                assert!(g.edges.iter().any(|&(a, _, b)| a == v && b == u), "{n} {u} {k}");
            }
        }
    }

    #[test]
    fn quivers() {
        let t = Triangulation::new(5, vec![Diagonal(1, 3), Diagonal(1, 4)]).unwrap();
        assert_eq!(t.quiver().arrows(), vec![(1, 0, 1)]);
        let f = fan(6).unwrap();
        assert_eq!(f.quiver().arrows(), vec![(1, 0, 1), (2, 1, 1)]);
        let snake = Triangulation::new(6, vec![Diagonal(1, 3), Diagonal(3, 6), Diagonal(4, 6)]).unwrap();
        let q = snake.quiver();
        assert!(q.is_sink(1) && q.is_source(0) && q.is_source(2));
        let tri = Triangulation::new(6, vec![Diagonal(1, 3), Diagonal(3, 5), Diagonal(1, 5)]).unwrap();
        assert_eq!(tri.quiver().canonical_form().0, Quiver::cycle(3).canonical_form().0);
    }

    #[test]
    fn alignment() {
        for n in 1..=4 {
            let q = Quiver::path(n);
            let al = align_models(&q).unwrap();
            let cat = ClusterCategory::new(&q).unwrap();
            assert_eq!(al.objects.len(), n * (n + 3) / 2);
            assert!(crossing_matches_ext(&cat, &al).unwrap());
        }
        let alt = Quiver::from_arrows(3, 0, &[(1, 0, 1), (1, 2, 1)]).unwrap();
        align_models(&alt).unwrap();
        assert!(align_models(&Quiver::from_arrows(4, 0, &[(0, 1, 1), (2, 1, 1), (3, 1, 1)]).unwrap()).is_err());
    }

    #[test]
    fn matching_quivers() {
        let q = Quiver::cycle(3);
        let (t, ds) = find_triangulation(&q).unwrap();
        for i in 0..3 {
            for j in 0..3 {
                let pi = t.diagonals().iter().position(|d| *d == ds[i]).unwrap();
                let pj = t.diagonals().iter().position(|d| *d == ds[j]).unwrap();
                assert_eq!(t.quiver().b(pi, pj), q.b(i, j));
            }
        }
        assert!(find_triangulation(&Quiver::from_arrows(2, 0, &[(0, 1, 2)]).unwrap()).is_none());
    }

    #[test]
    fn svg_and_json() {
        let t = fan(5).unwrap();
        let svg = t.to_svg(None);
        assert!(svg.starts_with("<svg") && svg.matches("<line").count() == 2);
        assert_eq!(Triangulation::from_json(&t.to_json()).unwrap(), t);
    }
}
