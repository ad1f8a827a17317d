//! Multivariate Laurent polynomials over the rationals.
//!
//! A [`LaurentPoly`] is a sparse map from exponent vectors (entries may be
//! negative) to nonzero rational coefficients. Zero coefficients are never
//! stored, so structural equality is mathematical equality.
//!
//! Text form: a reduced fraction such as `(1+x1+x2)/(x1*x2)`, numerator
//! terms ordered by total degree and then by exponent vector descending.
//! Single terms use the `3/2*x1^-1*x2^2` style. [`LaurentPoly::parse`]
//! accepts both.

use crate::linalg::{parse_rational, rational_to_string};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};
use std::collections::{BTreeMap, HashMap};
use std::fmt;
use thiserror::Error;

pub type Exponent = Vec<i32>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum LaurentError {
    #[error("variable count mismatch: {0} vs {1}")]
    NvarsMismatch(usize, usize),
    #[error("division by the zero polynomial")]
    DivisionByZero,
    #[error("not divisible in the Laurent ring")]
    NotDivisible,
    #[error("zero polynomial has no reduced form")]
    ZeroPolynomial,
    #[error("evaluation at a pole")]
    Pole,
    #[error("parse error: {0}")]
    Parse(String),
    #[error("result exceeds the budget of {0} terms")]
    TooLarge(usize),
}

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct LaurentPoly {
    nvars: usize,
    terms: BTreeMap<Exponent, BigRational>,
}

/// `original = numerator / x^denominator`, numerator a polynomial not
/// divisible by any variable occurring in the denominator.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ReducedForm {
    pub numerator: LaurentPoly,
    pub denominator: Vec<i64>,
}

impl LaurentPoly {
    pub fn zero(nvars: usize) -> Self {
        LaurentPoly {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(nvars: usize) -> Self {
        Self::constant(nvars, BigRational::one())
    }

    pub fn constant(nvars: usize, c: BigRational) -> Self {
        Self::monomial(vec![0; nvars], c)
    }

    pub fn from_int(nvars: usize, c: i64) -> Self {
        Self::constant(nvars, BigRational::from_integer(BigInt::from(c)))
    }

    /// The variable `x_{i+1}`.
    pub fn var(nvars: usize, i: usize) -> Self {
        assert!(i < nvars, "variable index out of range");
        let mut e = vec![0; nvars];
        e[i] = 1;
        Self::monomial(e, BigRational::one())
    }

    pub fn monomial(exp: Exponent, coef: BigRational) -> Self {
        let nvars = exp.len();
        let mut terms = BTreeMap::new();
        if !coef.is_zero() {
            terms.insert(exp, coef);
        }
        LaurentPoly { nvars, terms }
    }

    /// Builds from arbitrary terms, merging duplicates and dropping zeros.
    pub fn from_terms(nvars: usize, terms: impl IntoIterator<Item = (Exponent, BigRational)>) -> Self {
        let mut out = Self::zero(nvars);
        for (e, c) in terms {
            assert_eq!(e.len(), nvars, "exponent length mismatch");
            out.add_term(e, c);
        }
        out
    }

    fn add_term(&mut self, e: Exponent, c: BigRational) {
        use std::collections::btree_map::Entry;
        match self.terms.entry(e) {
            Entry::Vacant(v) => {
                if !c.is_zero() {
                    v.insert(c);
                }
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn terms(&self) -> &BTreeMap<Exponent, BigRational> {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1
            && self.terms.iter().all(|(e, c)| c.is_one() && e.iter().all(|&x| x == 0))
    }

    pub fn is_monomial(&self) -> bool {
        self.terms.len() == 1
    }

    fn check(&self, other: &Self) -> Result<(), LaurentError> {
        if self.nvars == other.nvars {
            Ok(())
        } else {
            Err(LaurentError::NvarsMismatch(self.nvars, other.nvars))
        }
    }

    pub fn try_add(&self, other: &Self) -> Result<Self, LaurentError> {
        self.check(other)?;
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self, LaurentError> {
        self.try_add(&other.neg())
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self, LaurentError> {
        self.mul_bounded(other, usize::MAX)
    }

    /// Product, giving up with `TooLarge` once more than `limit` distinct
    /// monomials have been produced.
    pub fn mul_bounded(&self, other: &Self, limit: usize) -> Result<Self, LaurentError> {
        self.check(other)?;
        if self.terms.len() == 1 || other.terms.len() == 1 {
            let (mono, poly) = if self.terms.len() == 1 { (self, other) } else { (other, self) };
            let (me, mc) = mono.terms.iter().next().expect("one term");
            return Ok(poly.shift_scale(me, mc));
        }
        let integral = self.terms.values().chain(other.terms.values()).all(BigRational::is_integer);
        if integral {
            let acc = mul_terms(&self.terms, &other.terms, limit, |a: &BigRational, b: &BigRational| {
                a.numer() * b.numer()
            })?;
            return Ok(LaurentPoly {
                nvars: self.nvars,
                terms: acc
                    .into_iter()
                    .filter(|(_, c)| !c.is_zero())
                    .map(|(e, c)| (e, BigRational::from_integer(c)))
                    .collect(),
            });
        }
        let acc = mul_terms(&self.terms, &other.terms, limit, |a: &BigRational, b: &BigRational| a * b)?;
        Ok(LaurentPoly {
            nvars: self.nvars,
            terms: acc.into_iter().filter(|(_, c)| !c.is_zero()).collect(),
        })
    }

    /// Multiplies by the monomial `c * x^e`.
    fn shift_scale(&self, e: &[i32], c: &BigRational) -> Self {
        LaurentPoly {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .map(|(k, v)| (k.iter().zip(e).map(|(a, b)| a + b).collect(), v * c))
                .collect(),
        }
    }

    pub fn neg(&self) -> Self {
        LaurentPoly {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(e, c)| (e.clone(), -c)).collect(),
        }
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        if c.is_zero() {
            return Self::zero(self.nvars);
        }
        LaurentPoly {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(e, v)| (e.clone(), v * c)).collect(),
        }
    }

    pub fn pow(&self, k: u32) -> Self {
        self.pow_bounded(k, usize::MAX).expect("unbounded power")
    }

    pub fn pow_bounded(&self, k: u32, limit: usize) -> Result<Self, LaurentError> {
        let mut out = Self::one(self.nvars);
        for _ in 0..k {
            out = out.mul_bounded(self, limit)?;
        }
        Ok(out)
    }

    /// Exact division: returns `r` with `r * q == self`, or `NotDivisible`.
    ///
    /// Long division by leading terms in the lexicographic order. Every
    /// quotient term must lie in the box bounded by the exponent ranges of
    /// `self` and `q`, which makes failure detectable.
    pub fn try_div(&self, q: &Self) -> Result<Self, LaurentError> {
        self.check(q)?;
        if q.is_zero() {
            return Err(LaurentError::DivisionByZero);
        }
        if self.is_zero() {
            return Ok(Self::zero(self.nvars));
        }
        if q.terms.len() == 1 {
            let (e, c) = q.terms.iter().next().expect("one term");
            let inv_e: Exponent = e.iter().map(|x| -x).collect();
            return Ok(self.shift_scale(&inv_e, &c.recip()));
        }
        let (pmin, pmax) = self.exponent_bounds();
        let (qmin, qmax) = q.exponent_bounds();
        let lo: Vec<i32> = pmin.iter().zip(&qmin).map(|(a, b)| a - b).collect();
        let hi: Vec<i32> = pmax.iter().zip(&qmax).map(|(a, b)| a - b).collect();
        let integral = self.terms.values().chain(q.terms.values()).all(BigRational::is_integer);
        if integral {
            let a = self.terms.iter().map(|(e, c)| (e.clone(), c.numer().clone())).collect();
            let b = q.terms.iter().map(|(e, c)| (e.clone(), c.numer().clone())).collect();
            match long_division(a, &b, &lo, &hi) {
                Ok(quot) => {
                    return Ok(LaurentPoly {
                        nvars: self.nvars,
                        terms: quot.into_iter().map(|(e, c)| (e, BigRational::from_integer(c))).collect(),
                    })
                }
                Err(DivFailure::Exponents) => return Err(LaurentError::NotDivisible),
                Err(DivFailure::Coefficient) => {}
            }
        }
        let quot = long_division(self.terms.clone(), &q.terms, &lo, &hi).map_err(|_| LaurentError::NotDivisible)?;
        Ok(LaurentPoly {
            nvars: self.nvars,
            terms: quot,
        })
    }

    /// Per-variable minimum and maximum exponents; zeros for the zero polynomial.
    pub fn exponent_bounds(&self) -> (Vec<i32>, Vec<i32>) {
        if self.is_zero() {
            return (vec![0; self.nvars], vec![0; self.nvars]);
        }
        let mut lo = vec![i32::MAX; self.nvars];
        let mut hi = vec![i32::MIN; self.nvars];
        for e in self.terms.keys() {
            for i in 0..self.nvars {
                lo[i] = lo[i].min(e[i]);
                hi[i] = hi[i].max(e[i]);
            }
        }
        (lo, hi)
    }

    pub fn reduced_form(&self) -> Result<ReducedForm, LaurentError> {
        if self.is_zero() {
            return Err(LaurentError::ZeroPolynomial);
        }
        let (lo, _) = self.exponent_bounds();
        let d: Vec<i64> = lo.iter().map(|&x| i64::from((-x).max(0))).collect();
        let shift: Exponent = lo.iter().map(|&x| (-x).max(0)).collect();
        let numerator = self.shift_scale(&shift, &BigRational::one());
        Ok(ReducedForm {
            numerator,
            denominator: d,
        })
    }

    pub fn denominator_vector(&self) -> Result<Vec<i64>, LaurentError> {
        Ok(self.reduced_form()?.denominator)
    }

    pub fn eval(&self, point: &[BigRational]) -> Result<BigRational, LaurentError> {
        if point.len() != self.nvars {
            return Err(LaurentError::NvarsMismatch(self.nvars, point.len()));
        }
        let mut sum = BigRational::zero();
        for (e, c) in &self.terms {
            let mut t = c.clone();
            for (x, &k) in point.iter().zip(e) {
                if k == 0 {
                    continue;
                }
                if k < 0 && x.is_zero() {
                    return Err(LaurentError::Pole);
                }
                t *= x.pow(k);
            }
            sum += t;
        }
        Ok(sum)
    }

    pub fn has_positive_coefficients(&self) -> bool {
        self.terms.values().all(Signed::is_positive)
    }

    /// Sets the variables with index `>= keep` to 1 and drops them.
    pub fn specialize_tail(&self, keep: usize) -> Self {
        Self::from_terms(
            keep,
            self.terms.iter().map(|(e, c)| (e[..keep].to_vec(), c.clone())),
        )
    }

    /// Appends `extra` variables that do not occur.
    pub fn extend_vars(&self, extra: usize) -> Self {
        LaurentPoly {
            nvars: self.nvars + extra,
            terms: self
                .terms
                .iter()
                .map(|(e, c)| {
                    let mut e = e.clone();
                    e.resize(self.nvars + extra, 0);
                    (e, c.clone())
                })
                .collect(),
        }
    }

    pub fn to_json(&self) -> LaurentJson {
        LaurentJson {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .map(|(e, c)| TermJson {
                    coef: rational_to_string(c),
                    exp: e.clone(),
                })
                .collect(),
        }
    }

    pub fn from_json(json: &LaurentJson) -> Result<Self, LaurentError> {
        let mut terms = Vec::with_capacity(json.terms.len());
        for t in &json.terms {
            if t.exp.len() != json.nvars {
                return Err(LaurentError::NvarsMismatch(json.nvars, t.exp.len()));
            }
            let c = parse_rational(&t.coef).ok_or_else(|| LaurentError::Parse(format!("bad coefficient {:?}", t.coef)))?;
            terms.push((t.exp.clone(), c));
        }
        Ok(Self::from_terms(json.nvars, terms))
    }
}

enum DivFailure {
    Exponents,
    Coefficient,
}

trait Coef: Clone + Zero + for<'a> std::ops::SubAssign<&'a Self> {
    fn div_exact(&self, rhs: &Self) -> Option<Self>;
    fn times(&self, rhs: &Self) -> Self;
}

impl Coef for BigInt {
    fn div_exact(&self, rhs: &Self) -> Option<Self> {
        let (q, r) = num_integer::Integer::div_rem(self, rhs);
        r.is_zero().then_some(q)
    }
    fn times(&self, rhs: &Self) -> Self {
        self * rhs
    }
}

impl Coef for BigRational {
    fn div_exact(&self, rhs: &Self) -> Option<Self> {
        Some(self / rhs)
    }
    fn times(&self, rhs: &Self) -> Self {
        self * rhs
    }
}

/// Long division by leading terms in the lexicographic order. Quotient
/// exponents must stay in the box `[lo, hi]`.
fn long_division<T: Coef>(
    mut rem: BTreeMap<Exponent, T>,
    q: &BTreeMap<Exponent, T>,
    lo: &[i32],
    hi: &[i32],
) -> Result<BTreeMap<Exponent, T>, DivFailure> {
    use std::collections::btree_map::Entry;
    let (qe, qc) = q.iter().next_back().expect("nonzero divisor");
    let mut quot = BTreeMap::new();
    let mut key: Exponent = Vec::new();
    while let Some((re, rc)) = rem.iter().next_back() {
        let te: Exponent = re.iter().zip(qe).map(|(a, b)| a - b).collect();
        if te.iter().zip(lo.iter().zip(hi)).any(|(t, (l, h))| t < l || t > h) {
            return Err(DivFailure::Exponents);
        }
        let tc = rc.div_exact(qc).ok_or(DivFailure::Coefficient)?;
        for (e, c) in q {
            key.clear();
            key.extend(e.iter().zip(&te).map(|(a, b)| a + b));
            let delta = c.times(&tc);
            match rem.entry(key.clone()) {
                Entry::Vacant(v) => {
                    let mut z = T::zero();
                    z -= &delta;
                    v.insert(z);
                }
                Entry::Occupied(mut o) => {
                    *o.get_mut() -= &delta;
                    if o.get().is_zero() {
                        o.remove();
                    }
                }
            }
        }
        quot.insert(te, tc);
    }
    Ok(quot)
}

/// Schoolbook product accumulated in a hash map; `prod` multiplies coefficients.
fn mul_terms<T, F>(
    a: &BTreeMap<Exponent, BigRational>,
    b: &BTreeMap<Exponent, BigRational>,
    limit: usize,
    prod: F,
) -> Result<HashMap<Exponent, T>, LaurentError>
where
    T: std::ops::AddAssign,
    F: Fn(&BigRational, &BigRational) -> T,
{
    let mut acc: HashMap<Exponent, T> = HashMap::with_capacity((a.len() * b.len()).min(1 << 16));
    let mut key: Exponent = Vec::new();
    for (e1, c1) in a {
        for (e2, c2) in b {
            key.clear();
            key.extend(e1.iter().zip(e2).map(|(x, y)| x + y));
            let c = prod(c1, c2);
            match acc.get_mut(key.as_slice()) {
                Some(v) => *v += c,
                None => {
                    if acc.len() >= limit {
                        return Err(LaurentError::TooLarge(limit));
                    }
                    acc.insert(key.clone(), c);
                }
            }
        }
    }
    Ok(acc)
}

// ---- Operators ----

macro_rules! binop {
    ($tr:ident, $m:ident, $f:ident) => {
        impl std::ops::$tr<&LaurentPoly> for &LaurentPoly {
            type Output = LaurentPoly;
            fn $m(self, rhs: &LaurentPoly) -> LaurentPoly {
                self.$f(rhs).expect("variable count mismatch")
            }
        }
        impl std::ops::$tr<LaurentPoly> for LaurentPoly {
            type Output = LaurentPoly;
            fn $m(self, rhs: LaurentPoly) -> LaurentPoly {
                (&self).$f(&rhs).expect("variable count mismatch")
            }
        }
    };
}

binop!(Add, add, try_add);
binop!(Sub, sub, try_sub);
binop!(Mul, mul, try_mul);

impl std::ops::Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly::neg(self)
    }
}

// ---- Text form ----

/// Graded order: total degree ascending, then exponent vector descending.
fn graded_order(a: &Exponent, b: &Exponent) -> std::cmp::Ordering {
    let da: i64 = a.iter().map(|&x| i64::from(x)).sum();
    let db: i64 = b.iter().map(|&x| i64::from(x)).sum();
    da.cmp(&db).then_with(|| b.cmp(a))
}

fn monomial_string(e: &[i32]) -> String {
    let parts: Vec<String> = e
        .iter()
        .enumerate()
        .filter(|(_, &k)| k != 0)
        .map(|(i, &k)| if k == 1 { format!("x{}", i + 1) } else { format!("x{}^{}", i + 1, k) })
        .collect();
    parts.join("*")
}

/// One term with an explicit sign; `first` drops a leading `+`.
fn term_string(e: &[i32], c: &BigRational, first: bool) -> String {
    let sign = if c.is_negative() {
        "-"
    } else if first {
        ""
    } else {
        "+"
    };
    let a = c.abs();
    let mono = monomial_string(e);
    let body = if mono.is_empty() {
        rational_to_string(&a)
    } else if a.is_one() {
        mono
    } else {
        format!("{}*{}", rational_to_string(&a), mono)
    };
    format!("{sign}{body}")
}

impl LaurentPoly {
    /// Sum of terms in the graded order, negative exponents written inline.
    pub fn to_term_string(&self) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut keys: Vec<&Exponent> = self.terms.keys().collect();
        keys.sort_by(|a, b| graded_order(a, b));
        keys.iter()
            .enumerate()
            .map(|(i, e)| term_string(e, &self.terms[*e], i == 0))
            .collect()
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let Ok(rf) = self.reduced_form() else {
            return f.write_str("0");
        };
        if rf.denominator.iter().all(|&d| d == 0) {
            return f.write_str(&self.to_term_string());
        }
        let num = rf.numerator.to_term_string();
        let num = if rf.numerator.is_monomial() && !num.starts_with('-') {
            num
        } else {
            format!("({num})")
        };
        let den_exp: Vec<i32> = rf.denominator.iter().map(|&d| d as i32).collect();
        let den = monomial_string(&den_exp);
        if den_exp.iter().filter(|&&d| d != 0).count() == 1 {
            write!(f, "{num}/{den}")
        } else {
            write!(f, "{num}/({den})")
        }
    }
}

impl LaurentPoly {
    /// Parses the text form. Variables are `x1`..`x{nvars}`.
    pub fn parse(s: &str, nvars: usize) -> Result<Self, LaurentError> {
        let mut p = Parser {
            s: s.as_bytes(),
            pos: 0,
            nvars,
        };
        let out = p.sum()?;
        p.skip_ws();
        if p.pos != p.s.len() {
            return Err(p.err("trailing input"));
        }
        Ok(out)
    }
}

struct Parser<'a> {
    s: &'a [u8],
    pos: usize,
    nvars: usize,
}

impl Parser<'_> {
    fn err(&self, msg: &str) -> LaurentError {
        LaurentError::Parse(format!("{msg} at offset {}", self.pos))
    }

    fn skip_ws(&mut self) {
        while self.pos < self.s.len() && self.s[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.s.get(self.pos).copied()
    }

    fn sum(&mut self) -> Result<LaurentPoly, LaurentError> {
        let mut acc = LaurentPoly::zero(self.nvars);
        let mut first = true;
        loop {
            let neg = match self.peek() {
                Some(b'+') => {
                    self.pos += 1;
                    false
                }
                Some(b'-') => {
                    self.pos += 1;
                    true
                }
                _ if first => false,
                _ => return Ok(acc),
            };
            first = false;
            let t = self.product()?;
            acc = if neg { &acc - &t } else { &acc + &t };
        }
    }

    fn product(&mut self) -> Result<LaurentPoly, LaurentError> {
        let mut acc = self.factor()?;
        loop {
            match self.peek() {
                Some(b'*') => {
                    self.pos += 1;
                    acc = &acc * &self.factor()?;
                }
                Some(b'/') => {
                    self.pos += 1;
                    let d = self.factor()?;
                    acc = acc.try_div(&d)?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn factor(&mut self) -> Result<LaurentPoly, LaurentError> {
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let inner = self.sum()?;
                if self.peek() != Some(b')') {
                    return Err(self.err("expected ')'"));
                }
                self.pos += 1;
                self.power(inner)
            }
            Some(b'x') => {
                self.pos += 1;
                let i = self.unsigned()?;
                if i == 0 || i as usize > self.nvars {
                    return Err(self.err(&format!("variable x{i} out of range")));
                }
                self.power(LaurentPoly::var(self.nvars, i as usize - 1))
            }
            Some(c) if c.is_ascii_digit() => {
                let n = self.unsigned()?;
                Ok(LaurentPoly::constant(self.nvars, BigRational::from_integer(n.into())))
            }
            _ => Err(self.err("expected a term")),
        }
    }

    fn power(&mut self, base: LaurentPoly) -> Result<LaurentPoly, LaurentError> {
        if self.peek() != Some(b'^') {
            return Ok(base);
        }
        self.pos += 1;
        let neg = if self.peek() == Some(b'-') {
            self.pos += 1;
            true
        } else {
            false
        };
        let k = u32::try_from(self.unsigned()?).map_err(|_| self.err("exponent too large"))?;
        let p = base.pow(k);
        if neg {
            LaurentPoly::one(self.nvars).try_div(&p)
        } else {
            Ok(p)
        }
    }

    fn unsigned(&mut self) -> Result<u64, LaurentError> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.s.len() && self.s[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        std::str::from_utf8(&self.s[start..self.pos])
            .ok()
            .and_then(|t| t.parse().ok())
            .ok_or_else(|| self.err("expected a number"))
    }
}

// ---- JSON ----

/// `{"nvars":2,"terms":[{"coef":"1","exp":[-1,1]}]}`, terms in lexicographic order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LaurentJson {
    pub nvars: usize,
    pub terms: Vec<TermJson>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermJson {
    pub coef: String,
    pub exp: Vec<i32>,
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str, n: usize) -> LaurentPoly {
        LaurentPoly::parse(s, n).unwrap()
    }

    #[test]
    fn basic_ring_operations() {
        let x1 = LaurentPoly::var(2, 0);
        let x2 = LaurentPoly::var(2, 1);
        assert_eq!(&x1 + &x2, p("x1+x2", 2));
        let inv = LaurentPoly::one(2).try_div(&x1).unwrap();
        assert!((&inv * &x1).is_one());
        assert!((&x1 - &x1).is_zero());
    }

    #[test]
    fn division_examples() {
        let num = p("1+x1+x2+x1*x2", 2);
        assert_eq!(num.try_div(&p("1+x1", 2)).unwrap(), p("1+x2", 2));
        assert_eq!(p("1+x2", 2).try_div(&p("1+x1", 2)), Err(LaurentError::NotDivisible));
        assert_eq!(p("x1", 2).try_div(&LaurentPoly::zero(2)), Err(LaurentError::DivisionByZero));
        let q = p("x1^-1 + 2*x2", 2);
        let prod = &q * &p("x1 - x2^3", 2);
        assert_eq!(prod.try_div(&q).unwrap(), p("x1-x2^3", 2));
    }

    #[test]
    fn reduced_forms() {
        let v = p("(x2+1)/x3", 3);
        let rf = v.reduced_form().unwrap();
        assert_eq!(rf.numerator, p("1+x2", 3));
        assert_eq!(rf.denominator, vec![0, 0, 1]);
        let w = p("(1+x1+x2)/(x1*x2)", 2);
        assert_eq!(w.denominator_vector().unwrap(), vec![1, 1]);
        assert_eq!(p("x1", 2).denominator_vector().unwrap(), vec![0, 0]);
        assert_eq!(LaurentPoly::zero(2).reduced_form(), Err(LaurentError::ZeroPolynomial));
    }

    #[test]
    fn rendering() {
        assert_eq!(p("x2+1", 2).to_string(), "1+x2");
        assert_eq!(p("(x2+1)/x1", 2).to_string(), "(1+x2)/x1");
        assert_eq!(p("(1+x2+x1)/(x2*x1)", 2).to_string(), "(1+x1+x2)/(x1*x2)");
        assert_eq!(p("(x1+x3)/x2", 3).to_string(), "(x1+x3)/x2");
        assert_eq!(p("2/x1", 1).to_string(), "2/x1");
        assert_eq!(p("3/2*x1^-1*x2^2", 2).to_term_string(), "3/2*x1^-1*x2^2");
        assert_eq!(p("x1 - x2", 2).to_string(), "x1-x2");
        assert_eq!(LaurentPoly::zero(1).to_string(), "0");
    }

    #[test]
    fn parse_rejects_garbage() {
        for s in ["x3", "x0", "(x1", "1+", "x1 x2", "y1", "1/(1+x1)"] {
            assert!(LaurentPoly::parse(s, 2).is_err(), "{s}");
        }
    }

    #[test]
    fn evaluation() {
        let half = |a: i64| BigRational::from_integer(a.into());
        assert_eq!(p("1+x1+x2", 2).eval(&[half(1), half(0)]).unwrap(), half(2));
        assert_eq!(p("(1+x2)/x1", 2).eval(&[half(1), half(1)]).unwrap(), half(2));
        assert_eq!(p("x1^-1", 2).eval(&[half(0), half(1)]), Err(LaurentError::Pole));
    }

    #[test]
    fn positivity() {
        assert!(p("x1+x2", 2).has_positive_coefficients());
        assert!(!p("x1-x2", 2).has_positive_coefficients());
    }

    #[test]
    fn json_round_trip() {
        let v = p("(1+x1+x2)/(x1*x2)", 2);
        let j = serde_json::to_string(&v.to_json()).unwrap();
        assert!(j.starts_with(r#"{"nvars":2,"terms":[{"coef":"1","exp":[-1,-1]}"#));
        let back: LaurentJson = serde_json::from_str(&j).unwrap();
        assert_eq!(LaurentPoly::from_json(&back).unwrap(), v);
    }

    #[test]
    fn tail_specialization() {
        let v = p("(1+x1*x3)/x2", 3);
        assert_eq!(v.specialize_tail(2), p("(1+x1)/x2", 2));
        assert_eq!(p("x1", 1).extend_vars(2), p("x1", 3));
    }
}
