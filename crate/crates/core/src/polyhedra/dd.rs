//! Double description conversion between halfspace and generator form.
//!
//! Both directions reduce to one primitive: the extreme rays of a
//! polyhedral cone `{x : <row, x> <= 0}`. The cone is first split into its
//! lineality space and a pointed part living in the orthogonal complement;
//! the pointed part is enumerated with the incremental Motzkin scheme using
//! integer arithmetic and the combinatorial adjacency test.

use num::bigint::BigInt;
use num::integer::Integer;
use num::traits::{Signed, Zero};

use super::{HRep, VRep};
use crate::error::{Error, Result};
use crate::linalg::{
    independent_subset, nullspace, project_affine, rref, solve_square, Halfspace, QVec, Rational,
};

/// Lineality basis and extreme rays (modulo lineality) of a cone.
#[derive(Clone, Debug, Default)]
pub struct ConeGenerators {
    pub lineality: Vec<QVec>,
    pub rays: Vec<QVec>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
struct Bits(Vec<u64>);

impl Bits {
    fn new(len: usize) -> Self {
        Bits(vec![0; len.div_ceil(64)])
    }
    fn set(&mut self, i: usize) {
        self.0[i / 64] |= 1 << (i % 64);
    }
    fn and(&self, other: &Bits) -> Bits {
        Bits(self.0.iter().zip(&other.0).map(|(a, b)| a & b).collect())
    }
    fn count(&self) -> usize {
        self.0.iter().map(|w| w.count_ones() as usize).sum()
    }
    fn is_subset(&self, other: &Bits) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a & !b == 0)
    }
}

struct Ray {
    coords: Vec<BigInt>,
    zeros: Bits,
}

fn int_dot(a: &[BigInt], b: &[BigInt]) -> BigInt {
    a.iter()
        .zip(b)
        .fold(BigInt::zero(), |acc, (x, y)| acc + x * y)
}

fn make_primitive(mut v: Vec<BigInt>) -> Vec<BigInt> {
    let g = v.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c));
    if !g.is_zero() && g != BigInt::from(1) {
        for c in v.iter_mut() {
            *c = &*c / &g;
        }
    }
    v
}

/// Generators of `{x in R^dim : <row, x> <= 0 for every row}`.
pub fn cone_generators(rows: &[QVec], dim: usize) -> ConeGenerators {
    let lineality = nullspace(rows, dim);
    let (basis, _) = rref(rows, dim);
    let k = basis.len();
    if k == 0 {
        return ConeGenerators {
            lineality,
            rays: Vec::new(),
        };
    }
    // Coordinates y with x = sum_j y_j basis_j; the row a becomes (<a, basis_j>)_j.
    let reduced: Vec<Vec<BigInt>> = rows
        .iter()
        .map(|a| QVec::new(basis.iter().map(|b| a.dot(b)).collect()).primitive_ints())
        .collect();
    let as_q: Vec<QVec> = reduced
        .iter()
        .map(|r| QVec::new(r.iter().cloned().map(Rational::from_integer).collect()))
        .collect();

    let initial = independent_subset(&as_q, k);
    debug_assert_eq!(initial.len(), k);
    let m = rows.len();
    let mut order: Vec<usize> = initial.clone();
    order.extend((0..m).filter(|i| !initial.contains(i)));

    // Extreme rays of {y : M y <= 0} for square invertible M are the columns of -M^{-1}.
    let square: Vec<QVec> = initial.iter().map(|&i| as_q[i].clone()).collect();
    let mut rays: Vec<Ray> = (0..k)
        .map(|j| {
            let mut e = vec![Rational::zero(); k];
            e[j] = -Rational::from_integer(BigInt::from(1));
            let col = solve_square(&square, &e).expect("independent rows");
            let coords = col.primitive_ints();
            let mut zeros = Bits::new(m);
            for (pos, &row) in initial.iter().enumerate() {
                if pos != j {
                    zeros.set(row);
                }
            }
            Ray { coords, zeros }
        })
        .collect();

    for &row in &order[k..] {
        let a = &reduced[row];
        let vals: Vec<BigInt> = rays.iter().map(|r| int_dot(a, &r.coords)).collect();
        let pos: Vec<usize> = (0..rays.len()).filter(|&i| vals[i].is_positive()).collect();
        let neg: Vec<usize> = (0..rays.len()).filter(|&i| vals[i].is_negative()).collect();
        let mut fresh = Vec::new();
        for &p in &pos {
            for &q in &neg {
                let common = rays[p].zeros.and(&rays[q].zeros);
                if k >= 2 && common.count() < k - 2 {
                    continue;
                }
                let adjacent = rays
                    .iter()
                    .enumerate()
                    .all(|(r, ray)| r == p || r == q || !common.is_subset(&ray.zeros));
                if !adjacent {
                    continue;
                }
                let coords: Vec<BigInt> = rays[q]
                    .coords
                    .iter()
                    .zip(&rays[p].coords)
                    .map(|(x, y)| &vals[p] * x - &vals[q] * y)
                    .collect();
                let mut zeros = common;
                zeros.set(row);
                fresh.push(Ray {
                    coords: make_primitive(coords),
                    zeros,
                });
            }
        }
        let mut kept = Vec::with_capacity(rays.len() + fresh.len());
        for (i, mut ray) in rays.into_iter().enumerate() {
            if vals[i].is_zero() {
                ray.zeros.set(row);
                kept.push(ray);
            } else if vals[i].is_negative() {
                kept.push(ray);
            }
        }
        kept.extend(fresh);
        rays = kept;
    }

    let rays = rays
        .into_iter()
        .map(|r| {
            let mut x = QVec::zeros(dim);
            for (c, b) in r.coords.iter().zip(&basis) {
                x = &x + &b.scale(&Rational::from_integer(c.clone()));
            }
            x.primitive()
        })
        .collect();
    ConeGenerators { lineality, rays }
}

fn lift(v: &QVec, last: Rational) -> QVec {
    let mut c = v.coords().to_vec();
    c.push(last);
    QVec::new(c)
}

fn split_last(v: &QVec) -> (QVec, Rational) {
    let mut c = v.coords().to_vec();
    let last = c.pop().unwrap();
    (QVec::new(c), last)
}

/// Vertices and extreme rays of a pointed polyhedron given by halfspaces.
pub fn h_to_v(h: &HRep) -> Result<VRep> {
    let n = h.dim();
    let mut rows: Vec<QVec> = h
        .halfspaces()
        .iter()
        .map(|hs| lift(&hs.normal, -hs.offset.clone()))
        .collect();
    rows.push(lift(
        &QVec::zeros(n),
        -Rational::from_integer(BigInt::from(1)),
    ));
    let gens = cone_generators(&rows, n + 1);
    let mut points = Vec::new();
    let mut rays = Vec::new();
    for g in &gens.rays {
        let (x, s) = split_last(g);
        if s.is_positive() {
            points.push(x.scale(&s.recip()));
        } else if !x.is_zero() {
            rays.push(x.primitive());
        }
    }
    if points.is_empty() {
        return Err(Error::EmptyPolyhedron);
    }
    if !gens.lineality.is_empty() {
        return Err(Error::NonPointed);
    }
    points.sort();
    points.dedup();
    rays.sort();
    rays.dedup();
    Ok(VRep::from_parts(points, rays))
}

/// Facet halfspaces and affine-hull equalities of `conv(points) + pos(rays)`.
///
/// Equalities are returned as `(normal, value)` in reduced echelon form;
/// facet normals are orthogonal to every equality normal, so the output is
/// canonical for the set.
pub fn facets_and_equalities(v: &VRep) -> (Vec<Halfspace>, Vec<Halfspace>) {
    let n = v.dim();
    let mut rows: Vec<QVec> = v
        .points()
        .iter()
        .map(|p| lift(p, -Rational::from_integer(BigInt::from(1))))
        .collect();
    rows.extend(v.rays().iter().map(|r| lift(r, Rational::zero())));
    let gens = cone_generators(&rows, n + 1);

    let normals: Vec<QVec> = gens.lineality.iter().map(|l| split_last(l).0).collect();
    let (eq_basis, _) = rref(&normals, n);
    let p0 = &v.points()[0];
    let equalities: Vec<Halfspace> = eq_basis
        .iter()
        .map(|e| {
            let offset = p0.dot(e);
            Halfspace::new(e.clone(), offset).canonical()
        })
        .collect();

    let mut facets = Vec::new();
    for g in &gens.rays {
        let (a, beta) = split_last(g);
        if !v.points().iter().any(|p| p.dot(&a) == beta) {
            continue;
        }
        let a = if eq_basis.is_empty() {
            a
        } else {
            let proj = project_affine(&a, &eq_basis, &QVec::zeros(n)).expect("independent basis");
            &a - &proj
        };
        if a.is_zero() {
            continue;
        }
        let offset = v.points().iter().map(|p| p.dot(&a)).max().unwrap();
        facets.push(Halfspace::new(a, offset).canonical());
    }
    facets.sort();
    facets.dedup();
    (facets, equalities)
}

/// Minimal halfspace description; equalities appear as opposite pairs.
pub fn v_to_h(v: &VRep) -> HRep {
    let (facets, equalities) = facets_and_equalities(v);
    let mut all = facets;
    for e in equalities {
        all.push(Halfspace::new(-&e.normal, -e.offset.clone()));
        all.push(e);
    }
    HRep::new_unchecked(v.dim(), all)
}
