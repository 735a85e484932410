//! Seeded random instances: pointed cones and C-pseudo-cones with small
//! integer data.

use std::sync::Arc;

use rand::Rng;

use crate::cone::PolyCone;
use crate::linalg::{frac, rat, Halfspace, QVec};
use crate::pseudocone::PseudoCone;

/// Pointed full-dimensional cone spanned by 3 to 6 integer vectors with
/// entries in `[-3, 3]` and positive coordinate sum.
pub fn random_cone(rng: &mut impl Rng, dim: usize) -> PolyCone {
    loop {
        let count = rng.random_range(3..=6);
        let gens: Vec<QVec> = (0..count)
            .map(|_| loop {
                let c: Vec<i64> = (0..dim).map(|_| rng.random_range(-3..=3)).collect();
                if c.iter().sum::<i64>() >= 1 {
                    break QVec::from_ints(&c);
                }
            })
            .collect();
        if let Ok(cone) = PolyCone::new(gens) {
            return cone;
        }
    }
}

/// Positive integer combination of the generators with coefficients in `[1, 3]`.
pub fn random_interior_vector(rng: &mut impl Rng, gens: &[QVec]) -> QVec {
    gens.iter().fold(QVec::zeros(gens[0].dim()), |acc, g| {
        &acc + &g.scale(&rat(rng.random_range(1..=3)))
    })
}

/// Offset `-p/q` in `[-3, -1/3]` with `q <= 3`.
fn random_offset(rng: &mut impl Rng) -> crate::linalg::Rational {
    loop {
        let q = rng.random_range(1..=3);
        let p = rng.random_range(1..=3 * q);
        let t = frac(p, q);
        if t >= frac(1, 3) {
            return -t;
        }
    }
}

/// `C ∩ ∩ H⁻(u_i, t_i)` with 2 to 8 normals `u_i ∈ int C°` and offsets in `[-3, -1/3]`.
pub fn random_pseudocone(rng: &mut impl Rng, cone: &Arc<PolyCone>) -> PseudoCone {
    let polar = cone.polar();
    let count = rng.random_range(2..=8);
    let halfspaces = (0..count)
        .map(|_| {
            Halfspace::new(
                random_interior_vector(rng, polar.generators()),
                random_offset(rng),
            )
        })
        .collect();
    PseudoCone::from_cone_and_halfspaces(Arc::clone(cone), halfspaces)
        .expect("interior normals give a pseudo-cone")
}

/// `conv{x_1, ..., x_k} + C` for 1 to 4 random points of `int C`. Such sets
/// have facets parallel to those of `C` and faces of every class.
pub fn random_point_pseudocone(rng: &mut impl Rng, cone: &Arc<PolyCone>) -> PseudoCone {
    let count = rng.random_range(1..=4);
    let points = (0..count)
        .map(|_| random_interior_vector(rng, cone.generators()))
        .collect();
    PseudoCone::from_points(Arc::clone(cone), points).expect("interior points give a pseudo-cone")
}

/// `count` instances, each with its own random cone.
pub fn gen_instances(rng: &mut impl Rng, dim: usize, count: usize) -> Vec<PseudoCone> {
    (0..count)
        .map(|_| {
            let cone = Arc::new(random_cone(rng, dim));
            random_pseudocone(rng, &cone)
        })
        .collect()
}
