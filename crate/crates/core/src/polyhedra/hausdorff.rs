use super::faces::direction_basis;
use super::{FaceLattice, Polyhedron, VRep};
use crate::error::{Error, Result};
use crate::linalg::{project_affine, rat_to_f64, QVec, Rational};

/// Exact squared Euclidean distance from `x` to a polyhedron.
///
/// The nearest point lies in the relative interior of some face and is the
/// projection of `x` onto that face's affine hull, so it suffices to
/// project onto every face and keep the feasible projections.
pub fn nearest_point_distance_sq(p: &Polyhedron, lattice: &FaceLattice, x: &QVec) -> Rational {
    if p.contains(x) {
        return Rational::from_integer(0.into());
    }
    let mut best: Option<Rational> = None;
    let mut consider = |vertices: &[QVec], rays: &[QVec]| {
        let basis = direction_basis(vertices, rays);
        let proj = project_affine(x, &basis, &vertices[0]).expect("independent basis");
        if p.contains(&proj) {
            let d = (x - &proj).norm_sq();
            if best.as_ref().is_none_or(|b| &d < b) {
                best = Some(d);
            }
        }
    };
    for f in lattice.faces() {
        consider(&f.vertices, &f.rays);
    }
    if !p.is_full_dimensional() {
        consider(p.vertices(), p.rays());
    }
    best.expect("some face contains the nearest point")
}

/// Euclidean distance from `x` to a polyhedron.
pub fn distance_to_polyhedron(p: &Polyhedron, x: &QVec) -> f64 {
    let lattice = p.face_lattice();
    rat_to_f64(&nearest_point_distance_sq(p, &lattice, x)).sqrt()
}

fn one_sided_sq(from: &Polyhedron, to: &Polyhedron, lattice: &FaceLattice) -> Rational {
    from.vertices()
        .iter()
        .map(|v| nearest_point_distance_sq(to, lattice, v))
        .max()
        .unwrap()
}

/// Hausdorff distance between two bounded polytopes.
///
/// For convex sets the largest distance from one set to the other is
/// attained at a vertex, so both one-sided maxima run over vertices only.
pub fn hausdorff_distance(a: &VRep, b: &VRep) -> Result<f64> {
    if !a.is_bounded() || !b.is_bounded() {
        return Err(Error::Unbounded);
    }
    let pa = Polyhedron::from_vrep(a)?;
    let pb = Polyhedron::from_vrep(b)?;
    Ok(hausdorff_polytopes(&pa, &pb))
}

pub(crate) fn hausdorff_polytopes(pa: &Polyhedron, pb: &Polyhedron) -> f64 {
    let la = pa.face_lattice();
    let lb = pb.face_lattice();
    let d = one_sided_sq(pa, pb, &lb).max(one_sided_sq(pb, pa, &la));
    rat_to_f64(&d).sqrt()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn vrep(points: &[&[i64]]) -> VRep {
        VRep::new(points.iter().map(|p| QVec::from_ints(p)).collect(), vec![]).unwrap()
    }

    #[test]
    fn identical_and_translated() {
        let a = vrep(&[&[0, 0], &[1, 0]]);
        assert_eq!(hausdorff_distance(&a, &a).unwrap(), 0.0);
        let b = vrep(&[&[0, 1], &[1, 1]]);
        assert!((hausdorff_distance(&a, &b).unwrap() - 1.0).abs() < 1e-15);
    }

    #[test]
    fn scaled_triangle_matches_sampling() {
        let a = vrep(&[&[0, 0], &[1, 0], &[0, 1]]);
        let b = vrep(&[&[0, 0], &[2, 0], &[0, 2]]);
        let d = hausdorff_distance(&a, &b).unwrap();
        // Support-function oracle: for convex bodies the Hausdorff distance
        // is the sup-norm of the difference of support functions on the circle.
        let (pa, pb) = (a.points(), b.points());
        let h = |pts: &[QVec], u: [f64; 2]| {
            pts.iter()
                .map(|p| {
                    let f = p.to_f64();
                    f[0] * u[0] + f[1] * u[1]
                })
                .fold(f64::NEG_INFINITY, f64::max)
        };
        let mut sup: f64 = 0.0;
        for i in 0..100_000 {
            let t = i as f64 / 100_000.0 * std::f64::consts::TAU;
            let u = [t.cos(), t.sin()];
            sup = sup.max((h(pa, u) - h(pb, u)).abs());
        }
        assert!((d - sup).abs() < 1e-6, "{d} vs {sup}");
        // (2,0) is farthest from a; its nearest point there is the vertex (1,0).
        assert!((d - 1.0).abs() < 1e-12);
    }

    #[test]
    fn unbounded_rejected() {
        let a = VRep::new(
            vec![QVec::from_ints(&[0, 0])],
            vec![QVec::from_ints(&[1, 0])],
        )
        .unwrap();
        assert_eq!(hausdorff_distance(&a, &a), Err(Error::Unbounded));
    }
}
