use num::traits::{One, Signed, Zero};

use super::faces::{direction_basis, Face};
use super::{HRep, Polyhedron, VRep};
use crate::error::{Error, Result};
use crate::linalg::{determinant, gram, rat, rat_to_f64, solve_square, QVec, Rational};

/// Volume `coeff * sqrt(gram)` of a k-dimensional polytope, where `gram` is
/// the Gram determinant of a fixed rational basis of its affine hull and
/// `coeff` is rational. Exact up to the final square root.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExactVolume {
    k: usize,
    coeff: Rational,
    gram: Rational,
}

impl ExactVolume {
    pub fn point() -> Self {
        Self {
            k: 0,
            coeff: Rational::one(),
            gram: Rational::one(),
        }
    }

    pub fn zero(k: usize) -> Self {
        Self {
            k,
            coeff: Rational::zero(),
            gram: Rational::one(),
        }
    }

    pub fn dim(&self) -> usize {
        self.k
    }

    pub fn coeff(&self) -> &Rational {
        &self.coeff
    }

    pub fn gram(&self) -> &Rational {
        &self.gram
    }

    /// Exact value when the Gram determinant is 1 (full-dimensional volumes
    /// in the standard basis).
    pub fn as_rational(&self) -> Option<Rational> {
        self.gram.is_one().then(|| self.coeff.clone())
    }

    /// Exact square of the volume.
    pub fn squared(&self) -> Rational {
        &self.coeff * &self.coeff * &self.gram
    }

    pub fn value(&self) -> f64 {
        rat_to_f64(&self.coeff) * rat_to_f64(&self.gram).sqrt()
    }
}

fn factorial(k: usize) -> Rational {
    (1..=k as i64).fold(Rational::one(), |acc, i| acc * rat(i))
}

/// Sums simplex volumes expressed in a common basis of the affine hull of
/// `ids` (vertex indices into `vertices`).
pub(crate) fn exact_volume_of_simplices(
    vertices: &[QVec],
    ids: &[usize],
    simplices: &[Vec<usize>],
    k: usize,
) -> ExactVolume {
    let pts: Vec<QVec> = ids.iter().map(|&i| vertices[i].clone()).collect();
    let basis = direction_basis(&pts, &[]);
    debug_assert_eq!(basis.len(), k);
    let g = gram(&basis);
    let gdet = determinant(&g);
    let mut total = Rational::zero();
    for s in simplices {
        let base = &vertices[s[0]];
        let coords: Vec<QVec> = s[1..]
            .iter()
            .map(|&v| {
                let e = &vertices[v] - base;
                let rhs: Vec<Rational> = basis.iter().map(|b| b.dot(&e)).collect();
                solve_square(&g, &rhs).expect("basis is independent")
            })
            .collect();
        total += determinant(&coords).abs();
    }
    ExactVolume {
        k,
        coeff: total / factorial(k),
        gram: gdet,
    }
}

/// (n-1)-dimensional volume of a bounded face in ambient dimension n.
/// Faces whose vertices span less than n-1 dimensions have volume 0.
pub fn facet_volume(f: &Face) -> Result<f64> {
    if !f.bounded {
        return Err(Error::Unbounded);
    }
    let n = f.ambient_dim();
    if f.dim > n - 1 {
        return Err(Error::WrongFaceDimension {
            expected: n - 1,
            got: f.dim,
        });
    }
    let p = Polyhedron::from_vrep(&VRep::new(f.vertices.clone(), Vec::new())?)?;
    if p.affine_dim() < n - 1 {
        return Ok(0.0);
    }
    p.volume()
}

/// n-volume of a bounded region given by halfspaces.
pub fn region_volume(h: &HRep) -> Result<f64> {
    let p = Polyhedron::from_hrep(h)?;
    if !p.is_bounded() {
        return Err(Error::Unbounded);
    }
    if !p.is_full_dimensional() {
        return Ok(0.0);
    }
    p.volume()
}
