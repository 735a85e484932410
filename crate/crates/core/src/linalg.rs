//! Numeric kernel: exact rational vectors, halfspaces and the handful of
//! linear-algebra routines the polyhedral code needs.
//!
//! Incidence, containment and face decisions are made in exact rational
//! arithmetic. Metric quantities (angles, norms, volumes) are converted to
//! `f64` at the last step.

use std::fmt;
use std::ops::{Add, Index, Mul, Neg, Sub};

use num::bigint::BigInt;
use num::integer::Integer;
use num::rational::BigRational;
use num::traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Exact rational scalar.
pub type Rational = BigRational;

/// Default absolute tolerance for float comparisons.
pub const DEFAULT_ABS_TOL: f64 = 1e-9;
/// Default relative tolerance for float comparisons.
pub const DEFAULT_REL_TOL: f64 = 1e-9;

/// Float comparison tolerances shared by the metric layer.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Tolerance {
    pub abs: f64,
    pub rel: f64,
}

impl Default for Tolerance {
    fn default() -> Self {
        Self {
            abs: DEFAULT_ABS_TOL,
            rel: DEFAULT_REL_TOL,
        }
    }
}

impl Tolerance {
    pub fn approx_eq(&self, a: f64, b: f64) -> bool {
        let diff = (a - b).abs();
        diff <= self.abs || diff <= self.rel * a.abs().max(b.abs())
    }
}

pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn frac(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// Exact rational value of a finite float.
pub fn rat_from_f64(x: f64) -> Rational {
    Rational::from_float(x).unwrap_or_else(Rational::zero)
}

pub fn rat_to_f64(x: &Rational) -> f64 {
    x.to_f64().unwrap_or(f64::NAN)
}

/// Parses `"p/q"`, `"p"` or a decimal string such as `"-0.25"`.
pub fn parse_rational(s: &str) -> Option<Rational> {
    let s = s.trim();
    if let Some((p, q)) = s.split_once('/') {
        let p: BigInt = p.trim().parse().ok()?;
        let q: BigInt = q.trim().parse().ok()?;
        if q.is_zero() {
            return None;
        }
        return Some(Rational::new(p, q));
    }
    if let Some((int, dec)) = s.split_once('.') {
        let neg = int.starts_with('-');
        let int_part: BigInt = if int.is_empty() || int == "-" || int == "+" {
            BigInt::zero()
        } else {
            int.parse().ok()?
        };
        if dec.is_empty() || !dec.chars().all(|c| c.is_ascii_digit()) {
            return None;
        }
        let scale = num::pow(BigInt::from(10), dec.len());
        let frac_part: BigInt = dec.parse().ok()?;
        let mag = int_part.abs() * &scale + frac_part;
        let num = if neg { -mag } else { mag };
        return Some(Rational::new(num, scale));
    }
    let p: BigInt = s.parse().ok()?;
    Some(Rational::from_integer(p))
}

/// Rational with the smallest denominator in the closed interval `[lo, hi]`.
pub fn simplest_between(lo: &Rational, hi: &Rational) -> Rational {
    if lo > hi {
        return simplest_between(hi, lo);
    }
    if !lo.is_positive() && !hi.is_negative() {
        return Rational::zero();
    }
    if hi.is_negative() {
        return -simplest_between(&-hi, &-lo);
    }
    let fl = lo.floor();
    if &fl == lo {
        return fl;
    }
    let next = &fl + Rational::one();
    if &next <= hi {
        return next;
    }
    let inner = simplest_between(&(hi - &fl).recip(), &(lo - &fl).recip());
    fl + inner.recip()
}

/// Renders `p/q`, or `p` for integers.
pub fn format_rational(x: &Rational) -> String {
    if x.is_integer() {
        x.numer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

/// Vector of exact rationals.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct QVec(Vec<Rational>);

impl QVec {
    pub fn new(coords: Vec<Rational>) -> Self {
        Self(coords)
    }

    pub fn zeros(dim: usize) -> Self {
        Self(vec![Rational::zero(); dim])
    }

    pub fn from_ints(coords: &[i64]) -> Self {
        Self(coords.iter().map(|&c| rat(c)).collect())
    }

    /// Exact rational image of a float vector.
    pub fn from_f64s(coords: &[f64]) -> Self {
        Self(coords.iter().map(|&c| rat_from_f64(c)).collect())
    }

    pub fn unit(dim: usize, axis: usize) -> Self {
        let mut v = Self::zeros(dim);
        v.0[axis] = Rational::one();
        v
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn coords(&self) -> &[Rational] {
        &self.0
    }

    pub fn into_coords(self) -> Vec<Rational> {
        self.0
    }

    pub fn iter(&self) -> std::slice::Iter<'_, Rational> {
        self.0.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|c| c.is_zero())
    }

    pub fn dot(&self, other: &QVec) -> Rational {
        debug_assert_eq!(self.dim(), other.dim());
        self.0
            .iter()
            .zip(&other.0)
            .fold(Rational::zero(), |acc, (a, b)| acc + a * b)
    }

    pub fn norm_sq(&self) -> Rational {
        self.dot(self)
    }

    pub fn scale(&self, s: &Rational) -> QVec {
        QVec(self.0.iter().map(|c| c * s).collect())
    }

    pub fn to_f64(&self) -> Vec<f64> {
        self.0.iter().map(rat_to_f64).collect()
    }

    pub fn norm_f64(&self) -> f64 {
        norm(&self.to_f64())
    }

    /// Positive multiple with coprime integer coordinates. The zero vector
    /// is returned unchanged.
    pub fn primitive(&self) -> QVec {
        let ints = self.primitive_ints();
        QVec(ints.into_iter().map(Rational::from_integer).collect())
    }

    /// Coordinates of [`QVec::primitive`] as integers.
    pub fn primitive_ints(&self) -> Vec<BigInt> {
        let lcm = self
            .0
            .iter()
            .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let ints: Vec<BigInt> = self
            .0
            .iter()
            .map(|c| c.numer() * (&lcm / c.denom()))
            .collect();
        let g = ints.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c));
        if g.is_zero() {
            return ints;
        }
        ints.into_iter().map(|c| c / &g).collect()
    }

    /// Componentwise average of a nonempty list of vectors.
    pub fn mean(vectors: &[QVec]) -> Option<QVec> {
        let first = vectors.first()?;
        let mut acc = QVec::zeros(first.dim());
        for v in vectors {
            acc = &acc + v;
        }
        Some(acc.scale(&Rational::new(BigInt::one(), BigInt::from(vectors.len()))))
    }
}

impl Index<usize> for QVec {
    type Output = Rational;
    fn index(&self, i: usize) -> &Rational {
        &self.0[i]
    }
}

impl Add for &QVec {
    type Output = QVec;
    fn add(self, rhs: &QVec) -> QVec {
        QVec(self.0.iter().zip(&rhs.0).map(|(a, b)| a + b).collect())
    }
}

impl Sub for &QVec {
    type Output = QVec;
    fn sub(self, rhs: &QVec) -> QVec {
        QVec(self.0.iter().zip(&rhs.0).map(|(a, b)| a - b).collect())
    }
}

impl Neg for &QVec {
    type Output = QVec;
    fn neg(self) -> QVec {
        QVec(self.0.iter().map(|a| -a).collect())
    }
}

impl Mul<&Rational> for &QVec {
    type Output = QVec;
    fn mul(self, rhs: &Rational) -> QVec {
        self.scale(rhs)
    }
}

impl fmt::Display for QVec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{}", format_rational(c))?;
        }
        write!(f, ")")
    }
}

impl From<Vec<Rational>> for QVec {
    fn from(v: Vec<Rational>) -> Self {
        QVec(v)
    }
}

/// Closed halfspace `{x : <x, normal> <= offset}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Halfspace {
    pub normal: QVec,
    pub offset: Rational,
}

impl Halfspace {
    pub fn new(normal: QVec, offset: Rational) -> Self {
        Self { normal, offset }
    }

    /// `{x : <x, a> >= b}` written as `<x, -a> <= -b`.
    pub fn at_least(normal: QVec, bound: Rational) -> Self {
        Self {
            normal: -&normal,
            offset: -bound,
        }
    }

    pub fn dim(&self) -> usize {
        self.normal.dim()
    }

    pub fn contains(&self, x: &QVec) -> bool {
        x.dot(&self.normal) <= self.offset
    }

    pub fn is_tight(&self, x: &QVec) -> bool {
        x.dot(&self.normal) == self.offset
    }

    /// Same halfspace with primitive integer normal. Panics on a zero normal.
    pub fn canonical(&self) -> Halfspace {
        assert!(!self.normal.is_zero(), "halfspace with zero normal");
        let prim = self.normal.primitive();
        // prim = s * normal for some s > 0; find s from any nonzero coordinate.
        let i = (0..self.dim())
            .find(|&i| !self.normal[i].is_zero())
            .unwrap();
        let s = &prim[i] / &self.normal[i];
        Halfspace {
            normal: prim,
            offset: &self.offset * s,
        }
    }
}

impl fmt::Display for Halfspace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "<x,{}> <= {}",
            self.normal,
            format_rational(&self.offset)
        )
    }
}

pub fn dot(a: &QVec, b: &QVec) -> Result<Rational> {
    check_dim(a.dim(), b.dim())?;
    Ok(a.dot(b))
}

pub(crate) fn check_dim(expected: usize, got: usize) -> Result<()> {
    if expected != got {
        Err(Error::DimensionMismatch { expected, got })
    } else {
        Ok(())
    }
}

/// Result of maximizing a linear functional over a V-representation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LpValue {
    Finite(Rational),
    Unbounded,
}

impl LpValue {
    pub fn finite(&self) -> Option<&Rational> {
        match self {
            LpValue::Finite(v) => Some(v),
            LpValue::Unbounded => None,
        }
    }
}

/// `sup <direction, x>` over `conv(points) + pos(rays)`.
pub fn lp_max_over_vrep(direction: &QVec, points: &[QVec], rays: &[QVec]) -> Result<LpValue> {
    let n = direction.dim();
    if points.is_empty() {
        return Err(Error::InvalidInput(
            "V-representation without points".into(),
        ));
    }
    for v in points.iter().chain(rays) {
        check_dim(n, v.dim())?;
    }
    if rays.iter().any(|r| r.dot(direction).is_positive()) {
        return Ok(LpValue::Unbounded);
    }
    let best = points.iter().map(|p| p.dot(direction)).max().unwrap();
    Ok(LpValue::Finite(best))
}

/// Reduced row echelon form. Returns the nonzero rows and their pivot columns.
pub fn rref(rows: &[QVec], dim: usize) -> (Vec<QVec>, Vec<usize>) {
    let mut m: Vec<Vec<Rational>> = rows.iter().map(|r| r.coords().to_vec()).collect();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..dim {
        if r == m.len() {
            break;
        }
        let Some(p) = (r..m.len()).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        let inv = m[r][c].recip();
        for x in m[r].iter_mut() {
            *x *= &inv;
        }
        for i in 0..m.len() {
            if i != r && !m[i][c].is_zero() {
                let f = m[i][c].clone();
                for j in 0..dim {
                    let delta = &f * &m[r][j];
                    m[i][j] -= delta;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    m.truncate(r);
    (m.into_iter().map(QVec).collect(), pivots)
}

pub fn rank(rows: &[QVec], dim: usize) -> usize {
    rref(rows, dim).1.len()
}

/// Basis of `{x : <row, x> = 0 for every row}`.
pub fn nullspace(rows: &[QVec], dim: usize) -> Vec<QVec> {
    let (red, pivots) = rref(rows, dim);
    let free: Vec<usize> = (0..dim).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut v = vec![Rational::zero(); dim];
            v[f] = Rational::one();
            for (row, &p) in red.iter().zip(&pivots) {
                v[p] = -row[f].clone();
            }
            QVec(v)
        })
        .collect()
}

/// Indices of a maximal linearly independent subset, chosen greedily in order.
pub fn independent_subset(vectors: &[QVec], dim: usize) -> Vec<usize> {
    let mut chosen: Vec<usize> = Vec::new();
    // Incrementally reduced copies of the chosen vectors.
    let mut basis: Vec<(QVec, usize)> = Vec::new();
    for (idx, v) in vectors.iter().enumerate() {
        let mut w = v.coords().to_vec();
        for (b, p) in &basis {
            if !w[*p].is_zero() {
                let f = w[*p].clone();
                for j in 0..dim {
                    w[j] -= &f * &b[j];
                }
            }
        }
        if let Some(p) = (0..dim).find(|&j| !w[j].is_zero()) {
            let inv = w[p].recip();
            for x in w.iter_mut() {
                *x *= &inv;
            }
            let wq = QVec(w);
            // Keep the stored basis reduced in the new pivot column.
            for (b, _) in basis.iter_mut() {
                if !b[p].is_zero() {
                    let f = b[p].clone();
                    *b = &*b - &wq.scale(&f);
                }
            }
            basis.push((wq, p));
            chosen.push(idx);
        }
    }
    chosen
}

/// Solves the square system `a x = b`; `None` when singular.
pub fn solve_square(a: &[QVec], b: &[Rational]) -> Option<QVec> {
    let n = a.len();
    let mut m: Vec<Vec<Rational>> = a
        .iter()
        .zip(b)
        .map(|(row, bi)| {
            let mut r = row.coords().to_vec();
            r.push(bi.clone());
            r
        })
        .collect();
    for c in 0..n {
        let p = (c..n).find(|&i| !m[i][c].is_zero())?;
        m.swap(c, p);
        let inv = m[c][c].recip();
        for x in m[c].iter_mut() {
            *x *= &inv;
        }
        for i in 0..n {
            if i != c && !m[i][c].is_zero() {
                let f = m[i][c].clone();
                for j in c..=n {
                    let delta = &f * &m[c][j];
                    m[i][j] -= delta;
                }
            }
        }
    }
    Some(QVec(m.into_iter().map(|r| r[n].clone()).collect()))
}

/// Determinant of a square rational matrix given by rows.
pub fn determinant(rows: &[QVec]) -> Rational {
    let n = rows.len();
    let mut m: Vec<Vec<Rational>> = rows.iter().map(|r| r.coords().to_vec()).collect();
    let mut det = Rational::one();
    for c in 0..n {
        let Some(p) = (c..n).find(|&i| !m[i][c].is_zero()) else {
            return Rational::zero();
        };
        if p != c {
            m.swap(c, p);
            det = -det;
        }
        det *= &m[c][c];
        let inv = m[c][c].recip();
        for i in c + 1..n {
            if !m[i][c].is_zero() {
                let f = &m[i][c] * &inv;
                for j in c..n {
                    let delta = &f * &m[c][j];
                    m[i][j] -= delta;
                }
            }
        }
    }
    det
}

/// Gram matrix `G[i][j] = <v_i, v_j>`.
pub fn gram(vectors: &[QVec]) -> Vec<QVec> {
    vectors
        .iter()
        .map(|a| QVec(vectors.iter().map(|b| a.dot(b)).collect()))
        .collect()
}

/// Nearest point of `origin + span(basis)` to `x`, exact.
pub fn project_affine(x: &QVec, basis: &[QVec], origin: &QVec) -> Result<QVec> {
    let n = x.dim();
    check_dim(n, origin.dim())?;
    for b in basis {
        check_dim(n, b.dim())?;
    }
    if basis.is_empty() {
        return Ok(origin.clone());
    }
    let g = gram(basis);
    let diff = x - origin;
    let rhs: Vec<Rational> = basis.iter().map(|b| b.dot(&diff)).collect();
    let coef = solve_square(&g, &rhs).ok_or(Error::DependentBasis)?;
    let mut p = origin.clone();
    for (c, b) in coef.iter().zip(basis) {
        p = &p + &b.scale(c);
    }
    Ok(p)
}

// Float helpers for the metric layer.

pub fn fdot(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

pub fn norm(a: &[f64]) -> f64 {
    fdot(a, a).sqrt()
}

pub fn normalize(a: &[f64]) -> Vec<f64> {
    let l = norm(a);
    a.iter().map(|x| x / l).collect()
}

/// Angle between two nonzero float vectors, in radians.
pub fn angle(a: &[f64], b: &[f64]) -> f64 {
    let c = fdot(a, b) / (norm(a) * norm(b));
    c.clamp(-1.0, 1.0).acos()
}
