//! Copolarity `K ↦ K⋆ = {x : <x,y> <= -1 for all y ∈ K}` for polyhedral
//! pseudo-cones and finite point sets, conjugate faces and their
//! classification, and the normal, angle and tangent cone identities.

use std::fmt;
use std::sync::Arc;

use num::traits::{Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::cone::PolyCone;
use crate::error::{Error, Result};
use crate::linalg::{rat, Halfspace, LpValue, QVec, Rational};
use crate::polyhedra::{Face, LinCone, Polyhedron};
use crate::pseudocone::{shadow, CrucialPair, PseudoCone};

/// `K⋆`, a pseudo-cone for the polar cone `C°`. A facet `<x,u> <= t` with
/// `t < 0` contributes the point `u/|t|` and the ray `u`; a facet through
/// the origin contributes the ray `u`.
pub fn copolar(k: &PseudoCone) -> PseudoCone {
    let mut points = Vec::new();
    let mut rays = Vec::new();
    for h in k.facets() {
        if h.offset.is_negative() {
            points.push(h.normal.scale(&(-h.offset.clone()).recip()));
        }
        rays.push(h.normal.clone());
    }
    let poly = Polyhedron::from_generators(points, rays).expect("copolar has a point");
    PseudoCone::from_polyhedron(k.cone().polar_arc(), poly)
        .expect("copolar set is a pseudo-cone for the polar cone")
}

/// `A⋆ = ∩_{y ∈ A} {x : <x,y> <= -1}` for a finite set with `o ∉ conv A`
/// spanning the space. The result is a pseudo-cone for `(pos A)°`.
pub fn copolar_points(points: &[QVec]) -> Result<PseudoCone> {
    if crate::pseudocone::origin_in_hull(points)? {
        return Err(Error::OriginInHull);
    }
    let pos_a = PolyCone::new(points.to_vec()).map_err(|e| match e {
        Error::NotFullDimensional => Error::NonPointed,
        e => e,
    })?;
    let halfspaces = points
        .iter()
        .map(|y| Halfspace::new(y.clone(), rat(-1)))
        .collect();
    PseudoCone::from_halfspaces(pos_a.polar_arc(), halfspaces)
}

/// Right-hand side of `(K ∩ H⁻(u,0))⋆ = K⋆ + R≥0 u`, computed from `K⋆`.
/// Requires `-u ∉ C°` so that both sides are pointed and full-dimensional.
pub fn copolar_halfspace0(k: &PseudoCone, u: &QVec) -> Result<PseudoCone> {
    // The left-hand side must exist for the identity to make sense.
    k.polyhedron()
        .intersect_halfspaces(&[Halfspace::new(u.clone(), Rational::zero())])
        .map_err(|e| match e {
            Error::EmptyPolyhedron => Error::EmptyIntersection,
            e => e,
        })?;
    let star = copolar(k);
    let mut rays = star.rays().to_vec();
    rays.push(u.clone());
    let poly = Polyhedron::from_generators(star.vertices().to_vec(), rays)?;
    PseudoCone::with_own_recession_cone(poly)
}

/// `K ∩ H⁻(u,0)` as a pseudo-cone for its own recession cone.
pub fn cut_through_origin(k: &PseudoCone, u: &QVec) -> Result<PseudoCone> {
    let poly = k
        .polyhedron()
        .intersect_halfspaces(&[Halfspace::new(u.clone(), Rational::zero())])
        .map_err(|e| match e {
            Error::EmptyPolyhedron => Error::EmptyIntersection,
            e => e,
        })?;
    PseudoCone::with_own_recession_cone(poly)
}

/// Type of a face by boundedness and position relative to `∂C`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum FaceClass {
    /// Bounded, meets `int C`.
    BoundedInterior,
    /// Bounded, contained in `∂C`.
    BoundedBoundary,
    /// Unbounded, meets `int C`.
    UnboundedInterior,
    /// Unbounded, contained in `∂C`.
    UnboundedBoundary,
}

impl FaceClass {
    pub fn tag(&self) -> &'static str {
        match self {
            FaceClass::BoundedInterior => "B_IN",
            FaceClass::BoundedBoundary => "B_BD",
            FaceClass::UnboundedInterior => "U_IN",
            FaceClass::UnboundedBoundary => "U_BD",
        }
    }

    /// Class of the conjugate face; `None` for faces with empty conjugate.
    pub fn conjugate(&self) -> Option<FaceClass> {
        match self {
            FaceClass::BoundedInterior => Some(FaceClass::BoundedInterior),
            FaceClass::BoundedBoundary => Some(FaceClass::UnboundedInterior),
            FaceClass::UnboundedInterior => Some(FaceClass::BoundedBoundary),
            FaceClass::UnboundedBoundary => None,
        }
    }
}

impl fmt::Display for FaceClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

pub fn classify(k: &PseudoCone, f: &Face) -> FaceClass {
    let in_boundary = k.cone().boundary_contains_all(&f.vertices, &f.rays);
    match (f.bounded, in_boundary) {
        (true, false) => FaceClass::BoundedInterior,
        (true, true) => FaceClass::BoundedBoundary,
        (false, false) => FaceClass::UnboundedInterior,
        (false, true) => FaceClass::UnboundedBoundary,
    }
}

fn face_index(k: &PseudoCone, f: &Face) -> Result<usize> {
    let idx = k
        .faces()
        .find(&f.vertex_ids, &f.ray_ids)
        .ok_or(Error::NotAFace)?;
    let g = &k.faces().faces()[idx];
    if g.vertices != f.vertices || g.rays != f.rays {
        return Err(Error::NotAFace);
    }
    Ok(idx)
}

/// Index in `star`'s face lattice of `{x ∈ K⋆ : <x,y> = -1 for y ∈ F}`;
/// `None` when that set is empty. `star` must be the copolar of `k`.
pub fn conjugate_face(k: &PseudoCone, star: &PseudoCone, f: &Face) -> Result<Option<usize>> {
    face_index(k, f)?;
    let minus_one = rat(-1);
    let vertex_ids: Vec<usize> = star
        .vertices()
        .iter()
        .enumerate()
        .filter(|(_, w)| {
            f.vertices.iter().all(|y| w.dot(y) == minus_one)
                && f.rays.iter().all(|r| w.dot(r).is_zero())
        })
        .map(|(i, _)| i)
        .collect();
    if vertex_ids.is_empty() {
        return Ok(None);
    }
    let ray_ids: Vec<usize> = star
        .rays()
        .iter()
        .enumerate()
        .filter(|(_, z)| f.vertices.iter().chain(&f.rays).all(|y| z.dot(y).is_zero()))
        .map(|(i, _)| i)
        .collect();
    star.faces()
        .find(&vertex_ids, &ray_ids)
        .map(Some)
        .ok_or_else(|| Error::Internal("conjugate set is not a face of the copolar".into()))
}

/// Per-face entry of a [`DualityReport`].
#[derive(Clone, Debug)]
pub struct FaceDuality {
    pub face: usize,
    pub dim: usize,
    pub class: FaceClass,
    pub conjugate: Option<usize>,
    pub conjugate_dim: Option<usize>,
    pub conjugate_class: Option<FaceClass>,
}

/// Face classes of `K` and `K⋆` and the outcome of the conjugation laws.
#[derive(Clone, Debug)]
pub struct DualityReport {
    pub faces: Vec<FaceDuality>,
    pub copolar_classes: Vec<FaceClass>,
    /// Each class maps into the expected class; boundary-unbounded faces map to the empty set.
    pub class_bijections: bool,
    /// Conjugating twice returns the face.
    pub involution: bool,
    /// `dim F + dim F̂ = n - 1`.
    pub dimension_law: bool,
    /// `F ⊆ G` implies `Ĝ ⊆ F̂`.
    pub inclusion_reversing: bool,
    /// Every face of `K⋆` in a target class is hit.
    pub onto: bool,
}

impl DualityReport {
    pub fn all_hold(&self) -> bool {
        self.class_bijections
            && self.involution
            && self.dimension_law
            && self.inclusion_reversing
            && self.onto
    }

    /// Number of faces of `K` in each class, in the order B_IN, B_BD, U_IN, U_BD.
    pub fn class_counts(&self) -> [usize; 4] {
        count_classes(self.faces.iter().map(|f| f.class))
    }

    pub fn copolar_class_counts(&self) -> [usize; 4] {
        count_classes(self.copolar_classes.iter().copied())
    }
}

fn count_classes(it: impl Iterator<Item = FaceClass>) -> [usize; 4] {
    let mut c = [0; 4];
    for class in it {
        c[class as usize] += 1;
    }
    c
}

pub fn classify_faces(k: &PseudoCone) -> DualityReport {
    let star = copolar(k);
    classify_faces_with(k, &star)
}

/// As [`classify_faces`] with a precomputed copolar.
pub fn classify_faces_with(k: &PseudoCone, star: &PseudoCone) -> DualityReport {
    let n = k.dim();
    let lattice = k.faces();
    let star_lattice = star.faces();
    let copolar_classes: Vec<FaceClass> = star_lattice
        .faces()
        .iter()
        .map(|g| classify(star, g))
        .collect();

    let mut faces = Vec::new();
    let mut class_bijections = true;
    let mut involution = true;
    let mut dimension_law = true;
    for (i, f) in lattice.faces().iter().enumerate() {
        let class = classify(k, f);
        let conj = conjugate_face(k, star, f).ok().flatten();
        let entry = FaceDuality {
            face: i,
            dim: f.dim,
            class,
            conjugate: conj,
            conjugate_dim: conj.map(|j| star_lattice.faces()[j].dim),
            conjugate_class: conj.map(|j| copolar_classes[j]),
        };
        if entry.conjugate_class != class.conjugate() {
            class_bijections = false;
        }
        if let Some(j) = conj {
            let g = &star_lattice.faces()[j];
            if f.dim + g.dim + 1 != n {
                dimension_law = false;
            }
            // K⋆⋆ = K, so K plays the role of the copolar of K⋆.
            if conjugate_face(star, k, g).ok().flatten() != Some(i) {
                involution = false;
            }
        }
        faces.push(entry);
    }

    let mut inclusion_reversing = true;
    for a in &faces {
        for b in &faces {
            let (Some(ca), Some(cb)) = (a.conjugate, b.conjugate) else {
                continue;
            };
            if a.face != b.face && lattice.faces()[a.face].is_subface_of(&lattice.faces()[b.face]) {
                let (fa, fb) = (&star_lattice.faces()[ca], &star_lattice.faces()[cb]);
                if !fb.is_subface_of(fa) {
                    inclusion_reversing = false;
                }
            }
        }
    }

    let hit: Vec<usize> = faces.iter().filter_map(|f| f.conjugate).collect();
    let onto = copolar_classes
        .iter()
        .enumerate()
        .filter(|(_, c)| **c != FaceClass::UnboundedBoundary)
        .all(|(j, _)| hit.contains(&j));

    DualityReport {
        faces,
        copolar_classes,
        class_bijections,
        involution,
        dimension_law,
        inclusion_reversing,
        onto,
    }
}

/// Normal cone, angle cone and tangent cone of a polyhedral pseudo-cone at a face.
#[derive(Clone, Debug)]
pub struct LocalCones {
    /// Relative-interior point used as apex.
    pub apex: QVec,
    /// `N(P,F) = pos` of the active facet normals.
    pub normal: LinCone,
    /// `A(F,P) = ∩ (H_i⁻ - z)` over active halfspaces.
    pub angle: LinCone,
    /// `T(F,P) = A(F,P) + z`, as the homogenization cone
    /// `{(x,s) : <x,a_i> <= b_i s, s >= 0}`.
    pub tangent: LinCone,
}

fn homogenized(dim: usize, halfspaces: &[Halfspace]) -> LinCone {
    let mut rows: Vec<QVec> = halfspaces
        .iter()
        .map(|h| {
            let mut c = h.normal.coords().to_vec();
            c.push(-h.offset.clone());
            QVec::new(c)
        })
        .collect();
    let mut s = vec![Rational::zero(); dim + 1];
    s[dim] = rat(-1);
    rows.push(QVec::new(s));
    LinCone::from_constraints(dim + 1, &rows, &[])
}

pub fn normal_angle_tangent(k: &PseudoCone, f: &Face) -> Result<LocalCones> {
    face_index(k, f)?;
    let n = k.dim();
    let z = f.relative_interior_point();
    let active: Vec<&Halfspace> = f.active_set.iter().map(|&i| &k.facets()[i]).collect();
    let normals: Vec<QVec> = active.iter().map(|h| h.normal.clone()).collect();
    let shifted: Vec<Halfspace> = active
        .iter()
        .map(|h| Halfspace::new(h.normal.clone(), &h.offset - z.dot(&h.normal)))
        .collect();
    if shifted.iter().any(|h| !h.offset.is_zero()) {
        return Err(Error::Internal(
            "apex is not on the active hyperplanes".into(),
        ));
    }
    let tangent_halfspaces: Vec<Halfspace> = active.iter().map(|h| (*h).clone()).collect();
    Ok(LocalCones {
        apex: z,
        normal: LinCone::from_generators(n, &normals, &[]),
        angle: LinCone::from_constraints(n, &normals, &[]),
        tangent: homogenized(n, &tangent_halfspaces),
    })
}

/// `(shad F)⋆ = {x : <x,v> <= -1 for vertices v, <x,r> <= 0 for rays r}` as
/// a homogenization cone.
fn copolar_of_shadow(f: &Face) -> LinCone {
    let n = f.ambient_dim();
    let mut hs: Vec<Halfspace> = f
        .vertices
        .iter()
        .map(|v| Halfspace::new(v.clone(), rat(-1)))
        .collect();
    hs.extend(
        f.rays
            .iter()
            .map(|r| Halfspace::new(r.clone(), Rational::zero())),
    );
    homogenized(n, &hs)
}

/// Outcome of the local-cone identities at one face.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LocalIdentities {
    /// `N(P,F) = A(F,P)°`.
    pub normal_is_polar_of_angle: bool,
    /// `N(P⋆,F̂) = pos F`; `None` when the face has no conjugate.
    pub conjugate_normal_is_pos: Option<bool>,
    /// `A(F̂,P⋆) = (pos F)°`.
    pub conjugate_angle_is_polar_of_pos: Option<bool>,
    /// `T(F̂,P⋆) = (shad F)⋆`.
    pub conjugate_tangent_is_copolar_of_shadow: Option<bool>,
}

impl LocalIdentities {
    pub fn all_hold(&self) -> bool {
        self.normal_is_polar_of_angle
            && self.conjugate_normal_is_pos != Some(false)
            && self.conjugate_angle_is_polar_of_pos != Some(false)
            && self.conjugate_tangent_is_copolar_of_shadow != Some(false)
    }
}

pub fn local_identities(k: &PseudoCone, star: &PseudoCone, f: &Face) -> Result<LocalIdentities> {
    let local = normal_angle_tangent(k, f)?;
    let normal_is_polar_of_angle = local.normal == local.angle.polar();
    let conj = conjugate_face(k, star, f)?;
    let (a, b, c) = match conj {
        None => (None, None, None),
        Some(j) => {
            let g = &star.faces().faces()[j];
            let star_local = normal_angle_tangent(star, g)?;
            let mut gens = f.vertices.clone();
            gens.extend(f.rays.iter().cloned());
            let pos_f = LinCone::from_generators(k.dim(), &gens, &[]);
            (
                Some(star_local.normal == pos_f),
                Some(star_local.angle == pos_f.polar()),
                Some(star_local.tangent == copolar_of_shadow(f)),
            )
        }
    };
    Ok(LocalIdentities {
        normal_is_polar_of_angle,
        conjugate_normal_is_pos: a,
        conjugate_angle_is_polar_of_pos: b,
        conjugate_tangent_is_copolar_of_shadow: c,
    })
}

/// One named check of the identity battery.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdentityCheck {
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
}

/// Random point of `int C` with small positive integer coefficients on the generators.
pub fn sample_interior_point(cone: &PolyCone, rng: &mut impl Rng) -> QVec {
    let mut x = QVec::zeros(cone.dim());
    for g in cone.generators() {
        let c = rat(rng.random_range(1..=9));
        x = &x + &g.scale(&c);
    }
    x
}

/// Exact copolarity identities for one pseudo-cone and a partner with the
/// same cone: involution, recession duality, intersection and hull rules,
/// the halfspace rule, radial-support duality, the boundary criterion,
/// crucial-pair symmetry, the conjugate-face laws and the local-cone
/// identities. `samples` points of `int C` are drawn from `seed`.
pub fn check_identities(
    k: &PseudoCone,
    partner: &PseudoCone,
    samples: usize,
    seed: u64,
) -> Vec<IdentityCheck> {
    let mut out = Vec::new();
    let mut push = |name: &'static str, passed: bool, detail: String| {
        out.push(IdentityCheck {
            name,
            passed,
            detail,
        });
    };
    let star = copolar(k);
    let star_star = copolar(&star);
    push("involution", star_star == *k, String::new());
    push(
        "recession-duality",
        star.rays() == k.cone().polar().generators() && *star.cone() == k.cone().polar(),
        String::new(),
    );

    let partner_star = copolar(partner);
    match k.intersect(partner) {
        Ok(meet) => {
            let lhs = copolar(&meet);
            let rhs = star.conv_union(&partner_star);
            push(
                "copolar-of-intersection",
                rhs.as_ref().is_ok_and(|r| *r == lhs),
                String::new(),
            );
        }
        Err(e) => push("copolar-of-intersection", false, e.to_string()),
    }
    match k.conv_union(partner) {
        Ok(hull) => {
            let lhs = copolar(&hull);
            let rhs = star.intersect(&partner_star);
            push(
                "copolar-of-hull",
                rhs.as_ref().is_ok_and(|r| *r == lhs),
                String::new(),
            );
        }
        Err(e) => push("copolar-of-hull", false, e.to_string()),
    }

    // Facet normals of C leave K unchanged; differences of generators cut C.
    let mut halfspace_ok = true;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut directions = k.cone().facet_normals().to_vec();
    let gens = k.cone().generators();
    for i in 0..gens.len() {
        for j in 0..gens.len() {
            let u = &gens[i] - &gens[j];
            // For -u ∈ C° the cut is lower-dimensional and K⋆ + R≥0 u has lines.
            if i != j && !k.cone().polar_contains(&-&u) {
                directions.push(u);
            }
        }
    }
    for u in &directions {
        match (cut_through_origin(k, u), copolar_halfspace0(k, u)) {
            (Ok(lhs_set), Ok(rhs)) => halfspace_ok &= copolar(&lhs_set) == rhs,
            (Err(Error::EmptyIntersection), Err(Error::EmptyIntersection)) => {}
            _ => halfspace_ok = false,
        }
    }
    push("copolar-of-halfspace-cut", halfspace_ok, String::new());

    let mut radial_ok = true;
    let mut boundary_ok = true;
    for _ in 0..samples {
        let x = sample_interior_point(k.cone(), &mut rng);
        let rho = k.radial(&x).expect("interior point");
        let h = star.support(&x);
        radial_ok &= h == LpValue::Finite(-rho.recip());
        let on = x.scale(&rho);
        let inside = x.scale(&(&rho * rat(2)));
        let outside = x.scale(&(&rho / rat(2)));
        let h_on = star.support(&on);
        let h_in = star.support(&inside);
        let h_out = star.support(&outside);
        boundary_ok &= k.on_boundary(&on) && h_on == LpValue::Finite(rat(-1));
        boundary_ok &= !k.on_boundary(&inside) && h_in != LpValue::Finite(rat(-1));
        boundary_ok &= !k.contains(&outside) && h_out != LpValue::Finite(rat(-1));
    }
    push(
        "radial-support-duality",
        radial_ok,
        format!("{samples} samples"),
    );
    push(
        "boundary-criterion",
        boundary_ok,
        format!("{samples} samples"),
    );

    let pairs = k.crucial_pairs();
    let crucial_ok = pairs.iter().all(|p| {
        p.is_valid_for(k)
            && CrucialPair {
                point: p.normal.clone(),
                normal: p.point.clone(),
            }
            .is_valid_for(&star)
    });
    push(
        "crucial-pair-symmetry",
        crucial_ok,
        format!("{} pairs", pairs.len()),
    );

    let report = classify_faces_with(k, &star);
    push(
        "conjugate-class-bijections",
        report.class_bijections && report.onto,
        String::new(),
    );
    push("conjugate-involution", report.involution, String::new());
    push(
        "conjugate-dimension-law",
        report.dimension_law,
        String::new(),
    );
    push(
        "conjugate-inclusion-reversal",
        report.inclusion_reversing,
        String::new(),
    );

    let mut local_ok = true;
    let mut local_detail = String::new();
    for (i, f) in k.faces().faces().iter().enumerate() {
        if classify(k, f) == FaceClass::UnboundedBoundary {
            continue;
        }
        match local_identities(k, &star, f) {
            Ok(l) if l.all_hold() => {}
            Ok(l) => {
                local_ok = false;
                local_detail = format!("face {i}: {l:?}");
            }
            Err(e) => {
                local_ok = false;
                local_detail = format!("face {i}: {e}");
            }
        }
    }
    push("local-cone-identities", local_ok, local_detail);
    out
}

/// Shadow of a face's generating points, as a polyhedron.
pub fn shadow_of_face(f: &Face) -> Result<Polyhedron> {
    let mut points = f.vertices.clone();
    let v = shadow(&points)?;
    points = v.points().to_vec();
    let mut rays = v.rays().to_vec();
    rays.extend(f.rays.iter().cloned());
    Polyhedron::from_generators(points, rays)
}

/// Pseudo-cone for `C` spanned by the given cone handle and points.
pub fn from_points(cone: &Arc<PolyCone>, points: Vec<QVec>) -> Result<PseudoCone> {
    PseudoCone::from_points(Arc::clone(cone), points)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::frac;

    fn orthant(n: usize) -> Arc<PolyCone> {
        Arc::new(PolyCone::orthant(n).unwrap())
    }

    fn k1() -> PseudoCone {
        PseudoCone::from_cone_and_halfspaces(
            orthant(2),
            vec![Halfspace::new(QVec::from_ints(&[-1, -1]), rat(-1))],
        )
        .unwrap()
    }

    #[test]
    fn copolar_of_k1() {
        let star = copolar(&k1());
        assert_eq!(
            star.facets(),
            &[
                Halfspace::new(QVec::from_ints(&[0, 1]), rat(-1)),
                Halfspace::new(QVec::from_ints(&[1, 0]), rat(-1)),
            ]
        );
        assert_eq!(star.vertices(), &[QVec::from_ints(&[-1, -1])]);
        for w in star.vertices() {
            for y in k1().vertices() {
                assert!(w.dot(y) <= rat(-1));
            }
        }
        assert_eq!(copolar(&star), k1());
    }

    #[test]
    fn halfspace_copolar_contains_scaled_normal() {
        let u = QVec::from_ints(&[-1, -2]);
        let t = rat(-3);
        let k = PseudoCone::from_cone_and_halfspaces(
            orthant(2),
            vec![Halfspace::new(u.clone(), t.clone())],
        )
        .unwrap();
        let star = copolar(&k);
        let p = u.scale(&frac(1, 3));
        assert!(star.contains(&p));
        assert!(star.on_boundary(&p));
    }

    #[test]
    fn point_set_copolar() {
        let a = [QVec::from_ints(&[1, 0]), QVec::from_ints(&[0, 1])];
        let star = copolar_points(&a).unwrap();
        assert_eq!(
            star.facets(),
            &[
                Halfspace::new(QVec::from_ints(&[0, 1]), rat(-1)),
                Halfspace::new(QVec::from_ints(&[1, 0]), rat(-1)),
            ]
        );
        let twice = copolar(&star);
        assert_eq!(
            *twice.polyhedron(),
            Polyhedron::from_vrep(&shadow(&a).unwrap()).unwrap()
        );
        assert_eq!(
            copolar_points(&[QVec::from_ints(&[1, 0]), QVec::from_ints(&[-1, 0])]).unwrap_err(),
            Error::OriginInHull
        );
    }

    #[test]
    fn halfspace_rule() {
        let k = k1();
        let u = QVec::from_ints(&[-1, 1]);
        let lhs = copolar(&cut_through_origin(&k, &u).unwrap());
        let rhs = copolar_halfspace0(&k, &u).unwrap();
        assert_eq!(lhs, rhs);
        // A facet normal of C changes nothing.
        let w = QVec::from_ints(&[-1, 0]);
        assert_eq!(
            *copolar_halfspace0(&k, &w).unwrap().polyhedron(),
            *copolar(&k).polyhedron()
        );
        let v = k.cone().v_dir().clone();
        assert_eq!(
            copolar_halfspace0(&k, &v).unwrap_err(),
            Error::EmptyIntersection
        );
    }

    #[test]
    fn conjugates_of_k1() {
        let k = k1();
        let star = copolar(&k);
        let l = k.faces();
        let edge = l.faces().iter().find(|f| f.dim == 1 && f.bounded).unwrap();
        let j = conjugate_face(&k, &star, edge).unwrap().unwrap();
        let g = &star.faces().faces()[j];
        assert_eq!(g.dim, 0);
        assert_eq!(g.vertices, vec![QVec::from_ints(&[-1, -1])]);

        let vertex = l
            .faces()
            .iter()
            .find(|f| f.dim == 0 && f.vertices[0] == QVec::from_ints(&[1, 0]))
            .unwrap();
        assert_eq!(classify(&k, vertex), FaceClass::BoundedBoundary);
        let j = conjugate_face(&k, &star, vertex).unwrap().unwrap();
        let g = &star.faces().faces()[j];
        assert_eq!(g.vertices, vec![QVec::from_ints(&[-1, -1])]);
        assert_eq!(g.rays, vec![QVec::from_ints(&[0, -1])]);
        assert_eq!(classify(&star, g), FaceClass::UnboundedInterior);

        let ray_edge = l
            .faces()
            .iter()
            .find(|f| f.dim == 1 && f.rays == vec![QVec::from_ints(&[1, 0])])
            .unwrap();
        assert_eq!(classify(&k, ray_edge), FaceClass::UnboundedBoundary);
        assert_eq!(conjugate_face(&k, &star, ray_edge).unwrap(), None);
    }

    #[test]
    fn duality_reports() {
        let r = classify_faces(&k1());
        assert!(r.all_hold(), "{r:?}");
        assert_eq!(r.class_counts(), [1, 2, 0, 2]);
        assert_eq!(r.copolar_class_counts(), [1, 0, 2, 0]);

        let cut3 = PseudoCone::from_cone_and_halfspaces(
            orthant(3),
            vec![Halfspace::new(QVec::from_ints(&[-1, -1, -1]), rat(-1))],
        )
        .unwrap();
        let r = classify_faces(&cut3);
        assert!(r.all_hold(), "{r:?}");
        let facet = r
            .faces
            .iter()
            .find(|f| f.dim == 2 && f.class == FaceClass::BoundedInterior)
            .unwrap();
        assert_eq!(facet.conjugate_dim, Some(0));

        let shifted = PseudoCone::from_points(orthant(2), vec![QVec::from_ints(&[1, 2])]).unwrap();
        let r = classify_faces(&shifted);
        assert!(r.all_hold());
        assert_eq!(r.faces[0].class, FaceClass::BoundedInterior);
    }

    #[test]
    fn local_cones_of_k1() {
        let k = k1();
        let star = copolar(&k);
        let l = k.faces();
        let vertex = l
            .faces()
            .iter()
            .find(|f| f.dim == 0 && f.vertices[0] == QVec::from_ints(&[1, 0]))
            .unwrap();
        let local = normal_angle_tangent(&k, vertex).unwrap();
        let expected = LinCone::from_generators(
            2,
            &[QVec::from_ints(&[0, -1]), QVec::from_ints(&[-1, -1])],
            &[],
        );
        assert_eq!(local.normal, expected);

        let edge = l.faces().iter().find(|f| f.dim == 1 && f.bounded).unwrap();
        let local = normal_angle_tangent(&k, edge).unwrap();
        assert_eq!(
            local.normal,
            LinCone::from_generators(2, &[QVec::from_ints(&[-1, -1])], &[])
        );
        let ids = local_identities(&k, &star, edge).unwrap();
        assert!(ids.all_hold(), "{ids:?}");
        assert_eq!(ids.conjugate_normal_is_pos, Some(true));
        // T(F̂, K1⋆) = (shad F)⋆ = K1⋆ itself.
        let j = conjugate_face(&k, &star, edge).unwrap().unwrap();
        let t = normal_angle_tangent(&star, &star.faces().faces()[j])
            .unwrap()
            .tangent;
        assert_eq!(t, homogenized(2, star.facets()));
    }

    #[test]
    fn identity_battery_on_k1() {
        let partner = PseudoCone::from_points(
            orthant(2),
            vec![QVec::from_ints(&[2, 0]), QVec::from_ints(&[0, 3])],
        )
        .unwrap();
        for c in check_identities(&k1(), &partner, 20, 7) {
            assert!(c.passed, "{c:?}");
        }
    }
}
