//! Polyhedral C-pseudo-cones: closed convex sets `K ⊆ C` with `o ∉ K` and
//! recession cone `C`, together with their support, radial and distance
//! functionals and the set operations used by copolarity.

use std::sync::{Arc, OnceLock};

use num::traits::{Signed, Zero};

use crate::cone::PolyCone;
use crate::error::{Error, Result};
use crate::linalg::{fdot, normalize, rat, rat_to_f64, Halfspace, LpValue, QVec, Rational};
use crate::polyhedra::{
    hausdorff_distance, nearest_point_distance_sq, FaceLattice, HRep, Polyhedron, VRep,
};

/// Default angular resolution, in degrees, for sampling normal cones.
pub const DEFAULT_GRID_DEGREES: f64 = 1.0;

/// A C-pseudo-cone with synchronized halfspace and generator descriptions.
#[derive(Debug)]
pub struct PseudoCone {
    cone: Arc<PolyCone>,
    poly: Polyhedron,
    lattice: OnceLock<FaceLattice>,
}

impl Clone for PseudoCone {
    fn clone(&self) -> Self {
        Self {
            cone: Arc::clone(&self.cone),
            poly: self.poly.clone(),
            lattice: OnceLock::new(),
        }
    }
}

impl PartialEq for PseudoCone {
    fn eq(&self, other: &Self) -> bool {
        self.poly == other.poly && self.cone == other.cone
    }
}

impl Eq for PseudoCone {}

/// Boundary point `x` and outer normal `v` with `<x, v> = -1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CrucialPair {
    pub point: QVec,
    pub normal: QVec,
}

impl CrucialPair {
    /// `x ∈ ∂K`, `<x, v> = -1` and `h(K, v) = <x, v>`.
    pub fn is_valid_for(&self, k: &PseudoCone) -> bool {
        let x = &self.point;
        let v = &self.normal;
        k.contains(x)
            && k.on_boundary(x)
            && x.dot(v) == rat(-1)
            && k.support(v) == LpValue::Finite(rat(-1))
    }
}

impl PseudoCone {
    /// Checks the pseudo-cone invariants for `C ∩ halfspaces` given as an
    /// H-representation and builds both descriptions.
    pub fn validate(cone: Arc<PolyCone>, h: &HRep) -> Result<Self> {
        if h.dim() != cone.dim() {
            return Err(Error::DimensionMismatch {
                expected: cone.dim(),
                got: h.dim(),
            });
        }
        if h.contains(&QVec::zeros(h.dim())) {
            return Err(Error::OriginInK);
        }
        let poly = match Polyhedron::from_hrep(h) {
            Ok(p) => p,
            Err(Error::EmptyPolyhedron) => return Err(Error::EmptyIntersection),
            Err(Error::NonPointed) => return Err(Error::RecessionConeMismatch),
            Err(e) => return Err(e),
        };
        Self::from_polyhedron(cone, poly)
    }

    /// Pseudo-cone `conv(points) + C`.
    pub fn from_points(cone: Arc<PolyCone>, points: Vec<QVec>) -> Result<Self> {
        let poly = Polyhedron::from_generators(points, cone.generators().to_vec())?;
        if poly.contains(&QVec::zeros(cone.dim())) {
            return Err(Error::OriginInK);
        }
        Self::from_polyhedron(cone, poly)
    }

    pub fn from_halfspaces(cone: Arc<PolyCone>, halfspaces: Vec<Halfspace>) -> Result<Self> {
        let dim = cone.dim();
        Self::validate(cone, &HRep::new(dim, halfspaces)?)
    }

    /// `C` intersected with the given halfspaces.
    pub fn from_cone_and_halfspaces(
        cone: Arc<PolyCone>,
        halfspaces: Vec<Halfspace>,
    ) -> Result<Self> {
        let mut all = cone.halfspaces();
        all.extend(halfspaces);
        Self::from_halfspaces(cone, all)
    }

    /// Pseudo-cone whose cone is taken to be the recession cone of `poly`.
    pub fn with_own_recession_cone(poly: Polyhedron) -> Result<Self> {
        if poly.rays().is_empty() {
            return Err(Error::RecessionConeMismatch);
        }
        let cone = Arc::new(PolyCone::new(poly.rays().to_vec())?);
        Self::from_polyhedron(cone, poly)
    }

    pub fn from_polyhedron(cone: Arc<PolyCone>, poly: Polyhedron) -> Result<Self> {
        if poly.dim() != cone.dim() {
            return Err(Error::DimensionMismatch {
                expected: cone.dim(),
                got: poly.dim(),
            });
        }
        if poly.contains(&QVec::zeros(cone.dim())) {
            return Err(Error::OriginInK);
        }
        if poly.rays() != cone.generators() {
            return Err(Error::RecessionConeMismatch);
        }
        if !poly.vertices().iter().all(|v| cone.contains(v)) {
            return Err(Error::NotContainedInCone);
        }
        Ok(Self {
            cone,
            poly,
            lattice: OnceLock::new(),
        })
    }

    pub fn cone(&self) -> &PolyCone {
        &self.cone
    }

    pub fn cone_arc(&self) -> &Arc<PolyCone> {
        &self.cone
    }

    pub fn dim(&self) -> usize {
        self.poly.dim()
    }

    pub fn polyhedron(&self) -> &Polyhedron {
        &self.poly
    }

    /// Minimal halfspaces, sorted; offsets are `<= 0`.
    pub fn facets(&self) -> &[Halfspace] {
        self.poly.facets()
    }

    /// Facets with negative offset, i.e. those not containing the origin.
    pub fn proper_facets(&self) -> impl Iterator<Item = (usize, &Halfspace)> {
        self.facets()
            .iter()
            .enumerate()
            .filter(|(_, h)| h.offset.is_negative())
    }

    pub fn vertices(&self) -> &[QVec] {
        self.poly.vertices()
    }

    pub fn rays(&self) -> &[QVec] {
        self.poly.rays()
    }

    pub fn hrep(&self) -> HRep {
        self.poly.hrep()
    }

    pub fn vrep(&self) -> VRep {
        self.poly.vrep()
    }

    pub fn faces(&self) -> &FaceLattice {
        self.lattice.get_or_init(|| self.poly.face_lattice())
    }

    pub fn contains(&self, x: &QVec) -> bool {
        self.poly.contains(x)
    }

    pub fn on_boundary(&self, x: &QVec) -> bool {
        self.facets().iter().any(|h| h.is_tight(x))
    }

    /// `C \ K` is bounded: every facet not through the origin has its normal
    /// in the interior of the polar cone.
    pub fn is_c_full(&self) -> bool {
        self.proper_facets()
            .all(|(_, h)| self.cone.polar_interior_contains(&h.normal))
    }

    /// Level `s` such that every point of `C` with `<x, v_dir> >= s/2` lies
    /// in `K`. `None` unless `K` is C-full.
    pub fn complement_level(&self) -> Option<Rational> {
        if !self.is_c_full() {
            return None;
        }
        let mut level = Rational::zero();
        for (_, h) in self.proper_facets() {
            let need = &h.offset / self.cone.polar_slope(&h.normal);
            if need > level {
                level = need;
            }
        }
        Some(level * rat(2))
    }

    /// Dilation `x -> factor * x`, `factor > 0`.
    pub fn dilate(&self, factor: &Rational) -> Result<Self> {
        if !factor.is_positive() {
            return Err(Error::NonPositiveLevel);
        }
        Ok(Self {
            cone: Arc::clone(&self.cone),
            poly: self.poly.dilate(factor),
            lattice: OnceLock::new(),
        })
    }

    pub fn translate(&self, shift: &QVec) -> Result<Self> {
        Self::from_polyhedron(Arc::clone(&self.cone), self.poly.translate(shift))
    }

    /// `h(K, u) = sup <u, x>` over `K`.
    pub fn support(&self, u: &QVec) -> LpValue {
        self.poly.lp_max(u).expect("dimensions agree")
    }

    /// `-h(K, u)` for `u ∈ C°`; `None` when the support is unbounded.
    pub fn hbar(&self, u: &QVec) -> Option<Rational> {
        self.support(u).finite().map(|v| -v)
    }

    /// Float support value; `None` outside `C°` (up to rounding).
    pub fn support_f64(&self, u: &[f64]) -> Option<f64> {
        let scale = u.iter().map(|x| x.abs()).fold(0.0, f64::max);
        if self
            .rays()
            .iter()
            .any(|r| fdot(&r.to_f64(), u) > 1e-12 * scale * r.norm_f64())
        {
            return None;
        }
        Some(
            self.vertices()
                .iter()
                .map(|v| fdot(&v.to_f64(), u))
                .fold(f64::NEG_INFINITY, f64::max),
        )
    }

    pub fn hbar_f64(&self, u: &[f64]) -> Option<f64> {
        self.support_f64(u).map(|h| -h)
    }

    /// `min {λ : λx ∈ K}` for `x ∈ int C`.
    pub fn radial(&self, x: &QVec) -> Result<Rational> {
        if x.dim() != self.dim() {
            return Err(Error::DimensionMismatch {
                expected: self.dim(),
                got: x.dim(),
            });
        }
        if !self.cone.interior_contains(x) {
            return Err(Error::OutsideCone);
        }
        let mut best: Option<Rational> = None;
        for h in self.facets() {
            let d = x.dot(&h.normal);
            if d.is_negative() {
                let r = &h.offset / d;
                if best.as_ref().is_none_or(|b| &r > b) {
                    best = Some(r);
                }
            }
        }
        best.ok_or_else(|| Error::Internal("no facet bounds the ray".into()))
    }

    /// Exact squared distance of `K` from the origin.
    pub fn distance_b_sq(&self) -> Rational {
        nearest_point_distance_sq(&self.poly, self.faces(), &QVec::zeros(self.dim()))
    }

    /// `b(K)`: distance of `K` from the origin.
    pub fn distance_b(&self) -> f64 {
        rat_to_f64(&self.distance_b_sq()).sqrt()
    }

    /// Indices of faces whose normal cone meets the predicate: the faces
    /// making up the reverse spherical image. Normal cones are probed at
    /// their extreme directions and on a barycentric grid with the given
    /// angular resolution in degrees.
    pub fn reverse_spherical_image<P>(&self, predicate: P, grid_degrees: f64) -> Vec<usize>
    where
        P: Fn(&[f64]) -> bool,
    {
        let lattice = self.faces();
        let unit_normals: Vec<Vec<f64>> = self
            .facets()
            .iter()
            .map(|h| normalize(&h.normal.to_f64()))
            .collect();
        let mut out = Vec::new();
        for (idx, face) in lattice.faces().iter().enumerate() {
            let gens: Vec<&Vec<f64>> = face.active_set.iter().map(|&i| &unit_normals[i]).collect();
            if normal_cone_meets(&gens, self.dim(), grid_degrees, &predicate) {
                out.push(idx);
            }
        }
        out
    }

    /// `K ∩ L`.
    pub fn intersect(&self, other: &PseudoCone) -> Result<Self> {
        if self.cone != other.cone {
            return Err(Error::RecessionConeMismatch);
        }
        let h = self.hrep().meet(&other.hrep())?;
        Self::validate(Arc::clone(&self.cone), &h)
    }

    /// `conv(K ∪ L)`.
    pub fn conv_union(&self, other: &PseudoCone) -> Result<Self> {
        if self.cone != other.cone {
            return Err(Error::RecessionConeMismatch);
        }
        let mut points = self.vertices().to_vec();
        points.extend(other.vertices().iter().cloned());
        Self::from_points(Arc::clone(&self.cone), points)
    }

    /// `K ∩ {<x, v_dir> <= level}`.
    pub fn truncation(&self, level: &Rational) -> Result<Polyhedron> {
        let cut = self.cone.truncation_halfspace(level);
        self.poly.intersect_halfspaces(&[cut]).map_err(|e| match e {
            Error::EmptyPolyhedron => Error::EmptyIntersection,
            e => e,
        })
    }

    /// Hausdorff distance of the truncations of `K` and `L` at `level`.
    pub fn truncation_distance(&self, other: &PseudoCone, level: &Rational) -> Result<f64> {
        let a = self.truncation(level)?;
        let b = other.truncation(level)?;
        hausdorff_distance(&a.vrep(), &b.vrep())
    }

    /// One crucial pair per facet not through the origin (relative-interior
    /// point, scaled facet normal) and one per vertex lying on such facets
    /// (averaged scaled normals).
    pub fn crucial_pairs(&self) -> Vec<CrucialPair> {
        let lattice = self.faces();
        let scaled: Vec<Option<QVec>> = self
            .facets()
            .iter()
            .map(|h| {
                h.offset
                    .is_negative()
                    .then(|| h.normal.scale(&(-h.offset.clone()).recip()))
            })
            .collect();
        let mut out = Vec::new();
        for (i, s) in scaled.iter().enumerate() {
            let Some(normal) = s else { continue };
            let Some(f) = lattice.facet_face(i) else {
                continue;
            };
            out.push(CrucialPair {
                point: lattice.faces()[f].relative_interior_point(),
                normal: normal.clone(),
            });
        }
        for (_, face) in lattice.of_dim(0) {
            let normals: Vec<QVec> = face
                .active_set
                .iter()
                .filter_map(|&i| scaled[i].clone())
                .collect();
            if let Some(normal) = QVec::mean(&normals) {
                out.push(CrucialPair {
                    point: face.vertices[0].clone(),
                    normal,
                });
            }
        }
        out
    }
}

/// `shad conv A = conv(A) + pos(A)` for a finite set with `o ∉ conv A`.
pub fn shadow(points: &[QVec]) -> Result<VRep> {
    if origin_in_hull(points)? {
        return Err(Error::OriginInHull);
    }
    VRep::new(points.to_vec(), points.to_vec())
}

/// Exact test for `o ∈ conv(points)`: feasibility of
/// `λ >= 0, Σλ = 1, Σ λ_i p_i = 0`.
pub fn origin_in_hull(points: &[QVec]) -> Result<bool> {
    let Some(first) = points.first() else {
        return Err(Error::InvalidInput("empty point set".into()));
    };
    let n = first.dim();
    let m = points.len();
    let mut hs = Vec::new();
    for i in 0..m {
        hs.push(Halfspace::new(-&QVec::unit(m, i), Rational::zero()));
    }
    let ones = QVec::from_ints(&vec![1; m]);
    hs.push(Halfspace::new(ones.clone(), rat(1)));
    hs.push(Halfspace::new(-&ones, rat(-1)));
    for c in 0..n {
        let row = QVec::new(points.iter().map(|p| p[c].clone()).collect());
        if row.is_zero() {
            continue;
        }
        hs.push(Halfspace::new(row.clone(), Rational::zero()));
        hs.push(Halfspace::new(-&row, Rational::zero()));
    }
    match Polyhedron::from_halfspaces(m, hs) {
        Ok(_) => Ok(true),
        Err(Error::EmptyPolyhedron) => Ok(false),
        Err(e) => Err(e),
    }
}

/// Probes `pos(gens) ∩ S^{n-1}` for a direction satisfying the predicate.
fn normal_cone_meets<P>(gens: &[&Vec<f64>], n: usize, grid_degrees: f64, predicate: &P) -> bool
where
    P: Fn(&[f64]) -> bool,
{
    if gens.is_empty() {
        return false;
    }
    if gens.iter().any(|g| predicate(g)) {
        return true;
    }
    if gens.len() == 1 {
        return false;
    }
    // Any direction of the cone is a combination of at most n generators.
    let k = gens.len().min(n);
    let step = grid_degrees.to_radians().max(1e-6);
    let mut found = false;
    for_each_subset(gens.len(), k, &mut |subset: &[usize]| {
        if found {
            return;
        }
        let sub: Vec<&Vec<f64>> = subset.iter().map(|&i| gens[i]).collect();
        let widest = sub
            .iter()
            .flat_map(|a| sub.iter().map(move |b| fdot(a, b).clamp(-1.0, 1.0).acos()))
            .fold(0.0, f64::max);
        let divisions = ((widest / step).ceil() as usize).clamp(1, 720);
        for_each_composition(divisions, sub.len(), &mut |weights: &[usize]| {
            if found {
                return;
            }
            let mut d = vec![0.0; n];
            for (w, g) in weights.iter().zip(&sub) {
                for (x, y) in d.iter_mut().zip(g.iter()) {
                    *x += *w as f64 * y;
                }
            }
            let len = fdot(&d, &d).sqrt();
            if len > 0.0 {
                let u: Vec<f64> = d.iter().map(|x| x / len).collect();
                if predicate(&u) {
                    found = true;
                }
            }
        });
    });
    found
}

fn for_each_subset(m: usize, k: usize, f: &mut dyn FnMut(&[usize])) {
    fn rec(start: usize, m: usize, k: usize, cur: &mut Vec<usize>, f: &mut dyn FnMut(&[usize])) {
        if cur.len() == k {
            f(cur);
            return;
        }
        for i in start..m {
            cur.push(i);
            rec(i + 1, m, k, cur, f);
            cur.pop();
        }
    }
    rec(0, m, k, &mut Vec::new(), f);
}

/// Calls `f` on every vector of `parts` nonnegative integers summing to `total`.
fn for_each_composition(total: usize, parts: usize, f: &mut dyn FnMut(&[usize])) {
    fn rec(left: usize, parts: usize, cur: &mut Vec<usize>, f: &mut dyn FnMut(&[usize])) {
        if cur.len() + 1 == parts {
            cur.push(left);
            f(cur);
            cur.pop();
            return;
        }
        for x in 0..=left {
            cur.push(x);
            rec(left - x, parts, cur, f);
            cur.pop();
        }
    }
    rec(total, parts, &mut Vec::new(), f);
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::frac;
    use std::f64::consts::FRAC_PI_8;

    fn orthant2() -> Arc<PolyCone> {
        Arc::new(PolyCone::orthant(2).unwrap())
    }

    fn hs(normal: &[i64], offset: Rational) -> Halfspace {
        Halfspace::new(QVec::from_ints(normal), offset)
    }

    pub(crate) fn k1() -> PseudoCone {
        PseudoCone::from_cone_and_halfspaces(orthant2(), vec![hs(&[-1, -1], rat(-1))]).unwrap()
    }

    #[test]
    fn validation() {
        let k = k1();
        assert_eq!(
            k.vertices(),
            &[QVec::from_ints(&[0, 1]), QVec::from_ints(&[1, 0])]
        );
        let with_origin =
            PseudoCone::from_cone_and_halfspaces(orthant2(), vec![hs(&[-1, -1], rat(1))]);
        assert_eq!(with_origin.unwrap_err(), Error::OriginInK);
        let halfplane = PseudoCone::from_halfspaces(orthant2(), vec![hs(&[-1, 0], rat(-1))]);
        assert_eq!(halfplane.unwrap_err(), Error::RecessionConeMismatch);
        let empty = PseudoCone::from_cone_and_halfspaces(orthant2(), vec![hs(&[1, 1], rat(-1))]);
        assert_eq!(empty.unwrap_err(), Error::EmptyIntersection);
        let outside = PseudoCone::from_halfspaces(
            orthant2(),
            vec![hs(&[-1, 0], rat(1)), hs(&[0, -1], rat(-1))],
        );
        assert_eq!(outside.unwrap_err(), Error::NotContainedInCone);
    }

    #[test]
    fn support_values() {
        let k = k1();
        assert_eq!(
            k.support(&QVec::from_ints(&[-1, -1])),
            LpValue::Finite(rat(-1))
        );
        assert_eq!(
            k.support(&QVec::from_ints(&[-1, 0])),
            LpValue::Finite(rat(0))
        );
        assert_eq!(k.support(&QVec::from_ints(&[1, 0])), LpValue::Unbounded);
        let s = 0.5f64.sqrt();
        assert!((k.hbar_f64(&[-s, -s]).unwrap() - s).abs() < 1e-15);
    }

    #[test]
    fn radial_values() {
        let k = k1();
        assert_eq!(k.radial(&QVec::from_ints(&[1, 1])).unwrap(), frac(1, 2));
        assert_eq!(k.radial(&QVec::from_ints(&[2, 2])).unwrap(), frac(1, 4));
        let eps = frac(1, 1000);
        let x = QVec::new(vec![rat(1) + &eps, eps.clone()]);
        assert_eq!(k.radial(&x).unwrap(), (rat(1) + eps * rat(2)).recip());
        assert_eq!(
            k.radial(&QVec::from_ints(&[1, 0])).unwrap_err(),
            Error::OutsideCone
        );
    }

    #[test]
    fn distance_values() {
        let k = k1();
        assert_eq!(k.distance_b_sq(), frac(1, 2));
        let shifted = PseudoCone::from_points(orthant2(), vec![QVec::from_ints(&[1, 1])]).unwrap();
        assert_eq!(shifted.distance_b_sq(), rat(2));
        assert_eq!(k.dilate(&rat(3)).unwrap().distance_b_sq(), frac(9, 2));
    }

    #[test]
    fn shadow_examples() {
        let v = shadow(&[QVec::from_ints(&[1, 0]), QVec::from_ints(&[0, 1])]).unwrap();
        assert_eq!(Polyhedron::from_vrep(&v).unwrap(), *k1().polyhedron());
        let single = shadow(&[QVec::from_ints(&[2, 3])]).unwrap();
        assert_eq!(single.rays(), &[QVec::from_ints(&[2, 3])]);
        assert_eq!(
            shadow(&[QVec::from_ints(&[1, 0]), QVec::from_ints(&[-1, 0])]).unwrap_err(),
            Error::OriginInHull
        );
    }

    #[test]
    fn reverse_image() {
        let k = k1();
        let c = k.cone_arc().clone();
        let faces = k.reverse_spherical_image(c.omega_bar(FRAC_PI_8), DEFAULT_GRID_DEGREES);
        let l = k.faces();
        let dims: Vec<(usize, bool)> = faces
            .iter()
            .map(|&i| (l.faces()[i].dim, l.faces()[i].bounded))
            .collect();
        assert_eq!(dims, vec![(0, true), (0, true), (1, true)]);
        let only = |u: &[f64]| (u[0] - u[1]).abs() < 1e-12 && u[0] < 0.0;
        let faces = k.reverse_spherical_image(only, DEFAULT_GRID_DEGREES);
        // The vertices' normal cones contain the diagonal direction as an extreme ray.
        assert!(faces
            .iter()
            .any(|&i| l.faces()[i].dim == 1 && l.faces()[i].bounded));
    }

    #[test]
    fn set_operations() {
        let k = k1();
        let shifted =
            PseudoCone::from_cone_and_halfspaces(orthant2(), vec![hs(&[-1, 0], rat(-1))]).unwrap();
        assert_eq!(k.intersect(&shifted).unwrap(), shifted);
        assert_eq!(k.conv_union(&k).unwrap(), k);
        let a = PseudoCone::from_points(orthant2(), vec![QVec::from_ints(&[1, 0])]).unwrap();
        let b = PseudoCone::from_points(orthant2(), vec![QVec::from_ints(&[0, 1])]).unwrap();
        assert_eq!(a.conv_union(&b).unwrap(), k);
    }

    #[test]
    fn truncation_distances() {
        let k = k1();
        assert_eq!(k.truncation_distance(&k, &rat(3)).unwrap(), 0.0);
        let eps = frac(1, 10);
        let moved = k
            .translate(&QVec::new(vec![eps.clone(), eps.clone()]))
            .unwrap();
        for level in [rat(2), rat(4), rat(8)] {
            let d = k.truncation_distance(&moved, &level).unwrap();
            assert!(d <= 0.1 * 2f64.sqrt() + 1e-12);
        }
        assert_eq!(
            k.truncation_distance(&k, &frac(1, 2)).unwrap_err(),
            Error::EmptyIntersection
        );
    }

    #[test]
    fn crucial_pair_examples() {
        let k = k1();
        let pair = CrucialPair {
            point: QVec::from_ints(&[1, 0]),
            normal: QVec::from_ints(&[-1, -1]),
        };
        assert!(pair.is_valid_for(&k));
        let mid = CrucialPair {
            point: QVec::new(vec![frac(1, 2), frac(1, 2)]),
            normal: QVec::from_ints(&[-1, -1]),
        };
        assert!(mid.is_valid_for(&k));
        let bad = CrucialPair {
            point: QVec::from_ints(&[1, 0]),
            normal: QVec::from_ints(&[-2, -2]),
        };
        assert!(!bad.is_valid_for(&k));
        for p in k.crucial_pairs() {
            assert!(p.is_valid_for(&k), "{p:?}");
        }
    }

    #[test]
    fn complement_level_covers_complement() {
        let k = k1();
        assert!(k.is_c_full());
        let level = k.complement_level().unwrap();
        assert_eq!(level, rat(2));
        let open = PseudoCone::from_points(orthant2(), vec![QVec::from_ints(&[1, 1])]).unwrap();
        assert!(!open.is_c_full());
    }
}
