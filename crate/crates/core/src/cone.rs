//! The fixed cone `C`: a pointed, full-dimensional polyhedral cone with
//! both descriptions, its polar cone, the reference direction, truncations
//! and the angular boundary distance on the polar side.

use std::sync::{Arc, OnceLock};

use num::traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::linalg::{fdot, norm, normalize, rat, rat_to_f64, Halfspace, QVec, Rational};
use crate::polyhedra::{HRep, Polyhedron};

/// Smallest and largest supported ambient dimension.
pub const MIN_DIM: usize = 2;
pub const MAX_DIM: usize = 4;

/// Pointed full-dimensional polyhedral cone `C = pos(generators)
/// = {x : <x, w> <= 0 for every facet normal w}`.
#[derive(Debug)]
pub struct PolyCone {
    dim: usize,
    generators: Vec<QVec>,
    facet_normals: Vec<QVec>,
    v_dir: QVec,
    v_ref: Vec<f64>,
    unit_generators: Vec<Vec<f64>>,
    unit_volume: OnceLock<f64>,
    polar: OnceLock<Arc<PolyCone>>,
}

impl Clone for PolyCone {
    fn clone(&self) -> Self {
        Self {
            dim: self.dim,
            generators: self.generators.clone(),
            facet_normals: self.facet_normals.clone(),
            v_dir: self.v_dir.clone(),
            v_ref: self.v_ref.clone(),
            unit_generators: self.unit_generators.clone(),
            unit_volume: OnceLock::new(),
            polar: OnceLock::new(),
        }
    }
}

impl PartialEq for PolyCone {
    fn eq(&self, other: &Self) -> bool {
        self.generators == other.generators
    }
}

impl Eq for PolyCone {}

impl PolyCone {
    /// Builds the cone spanned by `generators`; redundant generators are
    /// dropped and the rest scaled to primitive integer vectors.
    pub fn new(generators: Vec<QVec>) -> Result<Self> {
        let dim = generators
            .first()
            .ok_or_else(|| Error::InvalidInput("cone without generators".into()))?
            .dim();
        if !(MIN_DIM..=MAX_DIM).contains(&dim) {
            return Err(Error::UnsupportedDimension(dim));
        }
        let p = Polyhedron::from_generators(vec![QVec::zeros(dim)], generators)?;
        if !p.is_full_dimensional() {
            return Err(Error::NotFullDimensional);
        }
        let generators = p.rays().to_vec();
        let facet_normals: Vec<QVec> = p.facets().iter().map(|h| h.normal.clone()).collect();
        let v_dir = choose_v_dir(dim, &generators, &facet_normals)?;
        let v_ref = normalize(&v_dir.to_f64());
        let unit_generators = generators.iter().map(|g| normalize(&g.to_f64())).collect();
        Ok(Self {
            dim,
            generators,
            facet_normals,
            v_dir,
            v_ref,
            unit_generators,
            unit_volume: OnceLock::new(),
            polar: OnceLock::new(),
        })
    }

    pub fn from_int_generators(gens: &[&[i64]]) -> Result<Self> {
        Self::new(gens.iter().map(|g| QVec::from_ints(g)).collect())
    }

    /// The nonnegative orthant of R^n.
    pub fn orthant(n: usize) -> Result<Self> {
        Self::new((0..n).map(|i| QVec::unit(n, i)).collect())
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Extreme rays, primitive and sorted.
    pub fn generators(&self) -> &[QVec] {
        &self.generators
    }

    /// Outer facet normals, primitive and sorted.
    pub fn facet_normals(&self) -> &[QVec] {
        &self.facet_normals
    }

    /// Halfspaces `<x, w> <= 0`.
    pub fn halfspaces(&self) -> Vec<Halfspace> {
        self.facet_normals
            .iter()
            .map(|w| Halfspace::new(w.clone(), Rational::zero()))
            .collect()
    }

    pub fn hrep(&self) -> HRep {
        HRep::new_unchecked(self.dim, self.halfspaces())
    }

    /// Rational direction in `int C` whose negative lies in `int C°`.
    pub fn v_dir(&self) -> &QVec {
        &self.v_dir
    }

    /// Unit reference vector, the normalization of [`PolyCone::v_dir`].
    pub fn v_ref(&self) -> &[f64] {
        &self.v_ref
    }

    pub fn unit_generators(&self) -> &[Vec<f64>] {
        &self.unit_generators
    }

    /// The polar cone; its generators are this cone's facet normals.
    pub fn polar(&self) -> PolyCone {
        (*self.polar_arc()).clone()
    }

    /// Shared handle to the polar cone, computed once.
    pub fn polar_arc(&self) -> Arc<PolyCone> {
        Arc::clone(self.polar.get_or_init(|| {
            Arc::new(
                PolyCone::new(self.facet_normals.clone()).expect("polar of a valid cone is valid"),
            )
        }))
    }

    pub fn contains(&self, x: &QVec) -> bool {
        self.facet_normals.iter().all(|w| !x.dot(w).is_positive())
    }

    pub fn interior_contains(&self, x: &QVec) -> bool {
        self.facet_normals.iter().all(|w| x.dot(w).is_negative())
    }

    /// `x` lies in `int C°`, that is `<x, g> < 0` for every generator.
    pub fn polar_interior_contains(&self, u: &QVec) -> bool {
        self.generators.iter().all(|g| u.dot(g).is_negative())
    }

    pub fn polar_contains(&self, u: &QVec) -> bool {
        self.generators.iter().all(|g| !u.dot(g).is_positive())
    }

    /// Whether some facet of `C` contains every listed point and ray.
    pub fn boundary_contains_all(&self, points: &[QVec], rays: &[QVec]) -> bool {
        self.facet_normals
            .iter()
            .any(|w| points.iter().chain(rays).all(|x| x.dot(w).is_zero()))
    }

    /// Level `s` with `<x, v_dir> = s` describing the same hyperplane as
    /// `<x, v_ref> = t`, rounded to a rational.
    pub fn level_for(&self, t: f64) -> Rational {
        crate::linalg::rat_from_f64(t * self.v_dir.norm_f64())
    }

    /// Inverse of [`PolyCone::level_for`].
    pub fn t_for_level(&self, level: &Rational) -> f64 {
        rat_to_f64(level) / self.v_dir.norm_f64()
    }

    /// Halfspace `<x, v_dir> <= level`.
    pub fn truncation_halfspace(&self, level: &Rational) -> Halfspace {
        Halfspace::new(self.v_dir.clone(), level.clone())
    }

    /// Bounded polytope `C ∩ {<x, v_dir> <= level}`.
    pub fn truncate(&self, level: &Rational) -> Result<HRep> {
        if !level.is_positive() {
            return Err(Error::NonPositiveLevel);
        }
        let mut h = self.halfspaces();
        h.push(self.truncation_halfspace(level));
        Ok(HRep::new_unchecked(self.dim, h))
    }

    /// Section `C ∩ {<x, v_dir> = level}` as a pair of opposite halfspaces.
    pub fn section(&self, level: &Rational) -> Result<HRep> {
        let mut h = self.truncate(level)?.halfspaces().to_vec();
        h.push(Halfspace::new(-&self.v_dir, -level.clone()));
        Ok(HRep::new_unchecked(self.dim, h))
    }

    /// Volume of `C ∩ {<x, v_dir> <= level}`.
    pub fn truncation_volume(&self, level: &Rational) -> f64 {
        let unit = *self.unit_volume.get_or_init(|| {
            Polyhedron::from_hrep(&self.truncate(&rat(1)).unwrap())
                .and_then(|p| p.volume())
                .expect("truncated cone is a polytope")
        });
        unit * rat_to_f64(level).powi(self.dim as i32)
    }

    /// For `u` in `int C°`: the negative number `max_g <g,u>/<g,v_dir>` over
    /// generators. Every `x` in `C` with `<x, v_dir> = s` has `<x, u> <= s * slope`.
    pub fn polar_slope(&self, u: &QVec) -> Rational {
        self.generators
            .iter()
            .map(|g| u.dot(g) / g.dot(&self.v_dir))
            .max()
            .unwrap()
    }

    /// Angular distance from a unit vector `u` in `int C°` to the boundary
    /// of the polar cone on the sphere.
    ///
    /// The nearest boundary point of a spherically convex region seen from
    /// an interior point lies on the great sphere of a closest facet, so the
    /// distance is the smallest angle to the great spheres `<x, g> = 0`.
    pub fn delta(&self, u: &[f64]) -> Result<f64> {
        if u.len() != self.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                got: u.len(),
            });
        }
        let len = norm(u);
        if (len - 1.0).abs() > 1e-6 {
            return Err(Error::InvalidInput(format!(
                "direction has norm {len}, expected 1"
            )));
        }
        let mut best = f64::INFINITY;
        for g in &self.unit_generators {
            let s = fdot(u, g) / len;
            if s >= 0.0 {
                return Err(Error::OutsideDomain);
            }
            best = best.min((-s).min(1.0).asin());
        }
        Ok(best)
    }

    /// Membership in `{u : delta(u) >= tau}`; directions outside `int C°`
    /// are not members.
    pub fn in_omega_bar(&self, u: &[f64], tau: f64) -> bool {
        self.delta(u).is_ok_and(|d| d >= tau)
    }

    /// Predicate form of [`PolyCone::in_omega_bar`].
    pub fn omega_bar(&self, tau: f64) -> impl Fn(&[f64]) -> bool + '_ {
        move |u| self.in_omega_bar(u, tau)
    }
}

fn choose_v_dir(dim: usize, generators: &[QVec], normals: &[QVec]) -> Result<QVec> {
    let valid = |v: &QVec| {
        generators.iter().all(|g| v.dot(g).is_positive())
            && normals.iter().all(|w| v.dot(w).is_negative())
    };
    let mut sum = QVec::zeros(dim);
    for g in generators {
        sum = &sum + g;
    }
    if valid(&sum) {
        return Ok(sum.primitive());
    }
    // A point of {<v,g> >= 1, <v,w> <= -1}, which is nonempty for pointed
    // full-dimensional cones.
    let mut hs: Vec<Halfspace> = generators
        .iter()
        .map(|g| Halfspace::at_least(g.clone(), rat(1)))
        .collect();
    hs.extend(normals.iter().map(|w| Halfspace::new(w.clone(), rat(-1))));
    let p = Polyhedron::from_halfspaces(dim, hs)
        .map_err(|_| Error::Internal("no reference direction for cone".into()))?;
    let v = p.vertices()[0].clone();
    if valid(&v) {
        Ok(v.primitive())
    } else {
        Err(Error::Internal("no reference direction for cone".into()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::{FRAC_PI_4, FRAC_PI_8, PI};

    #[test]
    fn polar_examples() {
        let c = PolyCone::orthant(2).unwrap();
        let p = c.polar();
        assert_eq!(
            p.generators(),
            &[QVec::from_ints(&[-1, 0]), QVec::from_ints(&[0, -1])]
        );
        assert_eq!(p.polar(), c);

        let c = PolyCone::from_int_generators(&[&[1, 0], &[1, 1]]).unwrap();
        let p = c.polar();
        let expected = PolyCone::from_int_generators(&[&[0, -1], &[-1, 1]]).unwrap();
        assert_eq!(p, expected);
        for g in c.generators() {
            for h in p.generators() {
                assert!(!g.dot(h).is_positive());
            }
        }
        let c3 = PolyCone::orthant(3).unwrap();
        assert_eq!(
            c3.polar(),
            PolyCone::from_int_generators(&[&[-1, 0, 0], &[0, -1, 0], &[0, 0, -1]]).unwrap()
        );
    }

    #[test]
    fn reference_direction() {
        let c = PolyCone::orthant(2).unwrap();
        let s = 0.5f64.sqrt();
        assert!((c.v_ref()[0] - s).abs() < 1e-15 && (c.v_ref()[1] - s).abs() < 1e-15);
        let c3 = PolyCone::orthant(3).unwrap();
        assert_eq!(c3.v_dir(), &QVec::from_ints(&[1, 1, 1]));
        let c = PolyCone::from_int_generators(&[&[1, 0], &[1, 1]]).unwrap();
        assert!(c.interior_contains(c.v_dir()));
        assert!(c.polar_interior_contains(&-c.v_dir()));
        // A cone wider than a right angle needs a different candidate.
        let wide = PolyCone::from_int_generators(&[&[1, -3], &[1, 3]]).unwrap();
        assert!(wide.interior_contains(wide.v_dir()));
        assert!(wide.polar_interior_contains(&-wide.v_dir()));
    }

    #[test]
    fn invalid_cones() {
        assert_eq!(
            PolyCone::from_int_generators(&[&[1, 0], &[-1, 0], &[0, 1]]).unwrap_err(),
            Error::NonPointed
        );
        assert_eq!(
            PolyCone::from_int_generators(&[&[1, 0, 0], &[0, 1, 0]]).unwrap_err(),
            Error::NotFullDimensional
        );
        assert_eq!(
            PolyCone::from_int_generators(&[&[1]]).unwrap_err(),
            Error::UnsupportedDimension(1)
        );
    }

    #[test]
    fn truncation_triangle() {
        let c = PolyCone::orthant(2).unwrap();
        // v_dir = (1,1): level 1 is the triangle (0,0),(1,0),(0,1).
        let p = Polyhedron::from_hrep(&c.truncate(&rat(1)).unwrap()).unwrap();
        assert_eq!(
            p.vertices(),
            &[
                QVec::from_ints(&[0, 0]),
                QVec::from_ints(&[0, 1]),
                QVec::from_ints(&[1, 0])
            ]
        );
        assert_eq!(
            c.level_for(0.5f64.sqrt()),
            crate::linalg::rat_from_f64(0.5f64.sqrt() * 2f64.sqrt())
        );
        assert!((c.truncation_volume(&rat(1)) - 0.5).abs() < 1e-15);
        let r = c.truncation_volume(&rat(4)) / c.truncation_volume(&rat(2));
        assert!((r - 4.0).abs() < 1e-12);
        assert_eq!(c.truncate(&rat(0)).unwrap_err(), Error::NonPositiveLevel);
    }

    #[test]
    fn delta_examples() {
        let c = PolyCone::orthant(2).unwrap();
        let at = |deg: f64| {
            let a = deg.to_radians();
            [a.cos(), a.sin()]
        };
        assert!((c.delta(&at(225.0)).unwrap() - FRAC_PI_4).abs() < 1e-12);
        for theta in [0.1, 0.5, 1.0, 1.4] {
            let u = [-f64::sin(theta), -f64::cos(theta)];
            let expected = theta.min(PI / 2.0 - theta);
            assert!((c.delta(&u).unwrap() - expected).abs() < 1e-12);
        }
        let c3 = PolyCone::orthant(3).unwrap();
        let s = -1.0 / 3f64.sqrt();
        assert!((c3.delta(&[s, s, s]).unwrap() - (1.0 / 3f64.sqrt()).asin()).abs() < 1e-12);
        assert_eq!(c.delta(&[1.0, 0.0]), Err(Error::OutsideDomain));

        assert!(c.in_omega_bar(&at(225.0), FRAC_PI_8));
        assert!(!c.in_omega_bar(&at(190.0), FRAC_PI_8));
        let pred = c.omega_bar(PI / 2.0);
        assert!((180..270).all(|d| !pred(&at(d as f64))));
    }
}
