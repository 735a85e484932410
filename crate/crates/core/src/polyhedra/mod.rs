//! Polyhedra `conv(points) + pos(rays)` with synchronized halfspace and
//! generator descriptions, face lattices, volumes and Hausdorff distances.

mod dd;
mod faces;
mod hausdorff;
mod lincone;
mod volume;

pub use dd::{cone_generators, facets_and_equalities, h_to_v, v_to_h, ConeGenerators};
pub use faces::{Face, FaceLattice};
pub use hausdorff::{distance_to_polyhedron, hausdorff_distance, nearest_point_distance_sq};
pub use lincone::LinCone;
pub use volume::{facet_volume, region_volume, ExactVolume};

use crate::error::{Error, Result};
use crate::linalg::{check_dim, lp_max_over_vrep, rank, Halfspace, LpValue, QVec};

/// Finite list of halfspaces in canonical form (primitive normals, sorted,
/// no duplicates). Feasibility is checked when a [`Polyhedron`] is built.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct HRep {
    dim: usize,
    halfspaces: Vec<Halfspace>,
}

impl HRep {
    pub fn new(dim: usize, halfspaces: Vec<Halfspace>) -> Result<Self> {
        for h in &halfspaces {
            check_dim(dim, h.dim())?;
            if h.normal.is_zero() {
                return Err(Error::InvalidInput("halfspace with zero normal".into()));
            }
        }
        Ok(Self::new_unchecked(
            dim,
            halfspaces.iter().map(Halfspace::canonical).collect(),
        ))
    }

    pub(crate) fn new_unchecked(dim: usize, mut halfspaces: Vec<Halfspace>) -> Self {
        halfspaces.sort();
        halfspaces.dedup();
        Self { dim, halfspaces }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn halfspaces(&self) -> &[Halfspace] {
        &self.halfspaces
    }

    pub fn contains(&self, x: &QVec) -> bool {
        self.halfspaces.iter().all(|h| h.contains(x))
    }

    /// Union of the two constraint lists.
    pub fn meet(&self, other: &HRep) -> Result<HRep> {
        check_dim(self.dim, other.dim)?;
        let mut all = self.halfspaces.clone();
        all.extend(other.halfspaces.iter().cloned());
        Ok(Self::new_unchecked(self.dim, all))
    }
}

/// Generator description `conv(points) + pos(rays)` with canonical
/// ordering and primitive integer rays.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct VRep {
    points: Vec<QVec>,
    rays: Vec<QVec>,
}

impl VRep {
    pub fn new(points: Vec<QVec>, rays: Vec<QVec>) -> Result<Self> {
        let Some(first) = points.first() else {
            return Err(Error::InvalidInput(
                "V-representation without points".into(),
            ));
        };
        let n = first.dim();
        for v in points.iter().chain(&rays) {
            check_dim(n, v.dim())?;
        }
        let mut points = points;
        points.sort();
        points.dedup();
        let mut rays: Vec<QVec> = rays
            .iter()
            .filter(|r| !r.is_zero())
            .map(QVec::primitive)
            .collect();
        rays.sort();
        rays.dedup();
        Ok(Self { points, rays })
    }

    pub(crate) fn from_parts(points: Vec<QVec>, rays: Vec<QVec>) -> Self {
        Self { points, rays }
    }

    pub fn dim(&self) -> usize {
        self.points[0].dim()
    }

    pub fn points(&self) -> &[QVec] {
        &self.points
    }

    pub fn rays(&self) -> &[QVec] {
        &self.rays
    }

    pub fn is_bounded(&self) -> bool {
        self.rays.is_empty()
    }

    /// Concatenation of the generator lists.
    pub fn join(&self, other: &VRep) -> Result<VRep> {
        check_dim(self.dim(), other.dim())?;
        let mut p = self.points.clone();
        p.extend(other.points.iter().cloned());
        let mut r = self.rays.clone();
        r.extend(other.rays.iter().cloned());
        VRep::new(p, r)
    }
}

/// Nonempty pointed polyhedron with both descriptions in minimal canonical
/// form. Two polyhedra are equal exactly when the sets are equal.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Polyhedron {
    dim: usize,
    facets: Vec<Halfspace>,
    equalities: Vec<Halfspace>,
    vertices: Vec<QVec>,
    rays: Vec<QVec>,
}

impl Polyhedron {
    pub fn from_hrep(h: &HRep) -> Result<Self> {
        let v = h_to_v(h)?;
        let (facets, equalities) = facets_and_equalities(&v);
        Ok(Self {
            dim: h.dim(),
            facets,
            equalities,
            vertices: v.points,
            rays: v.rays,
        })
    }

    pub fn from_halfspaces(dim: usize, halfspaces: Vec<Halfspace>) -> Result<Self> {
        Self::from_hrep(&HRep::new(dim, halfspaces)?)
    }

    pub fn from_vrep(v: &VRep) -> Result<Self> {
        let (facets, equalities) = facets_and_equalities(v);
        let h = Self::hrep_of(v.dim(), &facets, &equalities);
        let minimal = h_to_v(&h)?;
        Ok(Self {
            dim: v.dim(),
            facets,
            equalities,
            vertices: minimal.points,
            rays: minimal.rays,
        })
    }

    pub fn from_generators(points: Vec<QVec>, rays: Vec<QVec>) -> Result<Self> {
        Self::from_vrep(&VRep::new(points, rays)?)
    }

    fn hrep_of(dim: usize, facets: &[Halfspace], equalities: &[Halfspace]) -> HRep {
        let mut all = facets.to_vec();
        for e in equalities {
            all.push(Halfspace::new(-&e.normal, -e.offset.clone()));
            all.push(e.clone());
        }
        HRep::new_unchecked(dim, all)
    }

    /// Ambient dimension.
    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Dimension of the affine hull.
    pub fn affine_dim(&self) -> usize {
        self.dim - self.equalities.len()
    }

    pub fn is_full_dimensional(&self) -> bool {
        self.equalities.is_empty()
    }

    pub fn facets(&self) -> &[Halfspace] {
        &self.facets
    }

    /// Affine-hull equations `<x, normal> = offset`.
    pub fn equalities(&self) -> &[Halfspace] {
        &self.equalities
    }

    pub fn vertices(&self) -> &[QVec] {
        &self.vertices
    }

    pub fn rays(&self) -> &[QVec] {
        &self.rays
    }

    pub fn is_bounded(&self) -> bool {
        self.rays.is_empty()
    }

    pub fn hrep(&self) -> HRep {
        Self::hrep_of(self.dim, &self.facets, &self.equalities)
    }

    pub fn vrep(&self) -> VRep {
        VRep::from_parts(self.vertices.clone(), self.rays.clone())
    }

    pub fn contains(&self, x: &QVec) -> bool {
        self.facets.iter().all(|h| h.contains(x)) && self.equalities.iter().all(|e| e.is_tight(x))
    }

    /// `sup <direction, x>` over the polyhedron.
    pub fn lp_max(&self, direction: &QVec) -> Result<LpValue> {
        lp_max_over_vrep(direction, &self.vertices, &self.rays)
    }

    /// Intersection with extra halfspaces.
    pub fn intersect_halfspaces(&self, extra: &[Halfspace]) -> Result<Polyhedron> {
        let mut all = self.hrep().halfspaces().to_vec();
        all.extend(extra.iter().cloned());
        Self::from_halfspaces(self.dim, all)
    }

    pub fn intersect(&self, other: &Polyhedron) -> Result<Polyhedron> {
        Self::from_hrep(&self.hrep().meet(&other.hrep())?)
    }

    /// Convex hull of the union.
    pub fn hull_union(&self, other: &Polyhedron) -> Result<Polyhedron> {
        Self::from_vrep(&self.vrep().join(&other.vrep())?)
    }

    /// Minkowski sum.
    pub fn sum(&self, other: &Polyhedron) -> Result<Polyhedron> {
        check_dim(self.dim, other.dim)?;
        let mut points = Vec::new();
        for a in &self.vertices {
            for b in &other.vertices {
                points.push(a + b);
            }
        }
        let mut rays = self.rays.clone();
        rays.extend(other.rays.iter().cloned());
        Self::from_generators(points, rays)
    }

    pub fn translate(&self, shift: &QVec) -> Polyhedron {
        let mut p = self.clone();
        for v in p.vertices.iter_mut() {
            *v = &*v + shift;
        }
        for h in p.facets.iter_mut().chain(p.equalities.iter_mut()) {
            h.offset += shift.dot(&h.normal);
        }
        p
    }

    /// Image under `x -> factor * x` for rational `factor > 0`.
    pub fn dilate(&self, factor: &crate::linalg::Rational) -> Polyhedron {
        let mut p = self.clone();
        for v in p.vertices.iter_mut() {
            *v = v.scale(factor);
        }
        for h in p.facets.iter_mut().chain(p.equalities.iter_mut()) {
            h.offset *= factor;
        }
        p.vertices.sort();
        p
    }

    /// Dimension of the set spanned by the difference vectors and rays.
    pub fn generator_dim(points: &[QVec], rays: &[QVec]) -> usize {
        let Some(p0) = points.first() else { return 0 };
        let mut dirs: Vec<QVec> = points[1..].iter().map(|p| p - p0).collect();
        dirs.extend(rays.iter().cloned());
        rank(&dirs, p0.dim())
    }

    pub fn face_lattice(&self) -> FaceLattice {
        FaceLattice::new(self)
    }

    /// Exact volume of a bounded polyhedron in its affine hull.
    pub fn exact_volume(&self) -> Result<ExactVolume> {
        if !self.is_bounded() {
            return Err(Error::Unbounded);
        }
        let lattice = self.face_lattice();
        Ok(lattice.polyhedron_volume(self))
    }

    /// Volume of a bounded polyhedron in its affine hull, as `f64`.
    pub fn volume(&self) -> Result<f64> {
        Ok(self.exact_volume()?.value())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::{rat, Rational};

    fn hs(normal: &[i64], offset: i64) -> Halfspace {
        Halfspace::new(QVec::from_ints(normal), rat(offset))
    }

    #[test]
    fn from_hrep_and_from_vrep_agree() {
        let a = Polyhedron::from_halfspaces(
            2,
            vec![hs(&[-1, 0], 0), hs(&[0, -1], 0), hs(&[-1, -1], -1)],
        )
        .unwrap();
        let b = Polyhedron::from_generators(
            vec![
                QVec::from_ints(&[1, 0]),
                QVec::from_ints(&[0, 1]),
                QVec::from_ints(&[3, 3]),
            ],
            vec![QVec::from_ints(&[2, 0]), QVec::from_ints(&[0, 5])],
        )
        .unwrap();
        assert_eq!(a, b);
        assert!(a.contains(&QVec::from_ints(&[1, 1])));
        assert!(!a.contains(&QVec::from_ints(&[0, 0])));
    }

    #[test]
    fn dilate_and_translate_match_rebuild() {
        let a = Polyhedron::from_halfspaces(
            2,
            vec![hs(&[-1, 0], 0), hs(&[0, -1], 0), hs(&[-1, -1], -1)],
        )
        .unwrap();
        let two = Rational::from_integer(2.into());
        let d = a.dilate(&two);
        let rebuilt = Polyhedron::from_halfspaces(
            2,
            vec![hs(&[-1, 0], 0), hs(&[0, -1], 0), hs(&[-1, -1], -2)],
        )
        .unwrap();
        assert_eq!(d, rebuilt);
        let t = a.translate(&QVec::from_ints(&[1, 1]));
        let rebuilt = Polyhedron::from_generators(
            vec![QVec::from_ints(&[2, 1]), QVec::from_ints(&[1, 2])],
            a.rays().to_vec(),
        )
        .unwrap();
        assert_eq!(t, rebuilt);
    }
}
