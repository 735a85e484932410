use crate::cone::PolyCone;
use crate::error::{Error, Result};
use crate::linalg::{rat_from_f64, rat_to_f64, Halfspace, QVec};
use crate::polyhedra::Polyhedron;
use crate::pseudocone::PseudoCone;

/// `V_n(C \ K)` evaluated by two independent methods, or the flag for an
/// unbounded complement.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum CoconvexVolume {
    Finite {
        /// Volume of the truncated cone minus the truncated pseudo-cone.
        triangulation: f64,
        /// `(1/n) Σ h̄(K,u_i) S_i` over facets with normals in `int C°`.
        divergence: f64,
    },
    Infinite,
}

impl CoconvexVolume {
    pub fn is_finite(&self) -> bool {
        matches!(self, CoconvexVolume::Finite { .. })
    }

    /// Triangulation value, or `+∞`.
    pub fn value(&self) -> f64 {
        match self {
            CoconvexVolume::Finite { triangulation, .. } => *triangulation,
            CoconvexVolume::Infinite => f64::INFINITY,
        }
    }

    /// Relative disagreement of the two methods.
    pub fn relative_gap(&self) -> f64 {
        match self {
            CoconvexVolume::Finite {
                triangulation,
                divergence,
            } => {
                (triangulation - divergence).abs()
                    / triangulation
                        .abs()
                        .max(divergence.abs())
                        .max(f64::MIN_POSITIVE)
            }
            CoconvexVolume::Infinite => 0.0,
        }
    }
}

pub fn coconvex_volume(k: &PseudoCone) -> CoconvexVolume {
    let Some(level) = k.complement_level() else {
        return CoconvexVolume::Infinite;
    };
    let cut = k.truncation(&level).expect("level reaches K");
    let triangulation =
        k.cone().truncation_volume(&level) - cut.volume().expect("truncation is bounded");
    CoconvexVolume::Finite {
        triangulation,
        divergence: divergence_volume(k),
    }
}

/// `(1/n) Σ (|t_i| / |u_i|) S_i` over facets `<x,u_i> <= t_i` with `u_i ∈ int C°`.
pub fn divergence_volume(k: &PseudoCone) -> f64 {
    let lattice = k.faces();
    let mut total = 0.0;
    for (i, h) in k.proper_facets() {
        if !k.cone().polar_interior_contains(&h.normal) {
            continue;
        }
        let face = lattice.facet_face(i).expect("every facet has a face");
        let area = lattice.face_volume(k.polyhedron(), face).value();
        total += -rat_to_f64(&h.offset) / h.normal.norm_f64() * area;
    }
    total / k.dim() as f64
}

/// `V_n(C ∩ H⁺(u,-1))` for `u ∈ int C°`, the cap cut off by the hyperplane
/// at distance 1 from the origin.
pub fn cap_volume(cone: &PolyCone, u: &[f64]) -> Result<f64> {
    match cone.delta(u) {
        Ok(d) if d > 0.0 => {}
        Ok(_) => return Err(Error::OutsideDomain),
        Err(e) => return Err(e),
    }
    let normal = QVec::new(u.iter().map(|&x| rat_from_f64(-x)).collect());
    let mut hs = cone.halfspaces();
    hs.push(Halfspace::new(normal, rat_from_f64(1.0)));
    Polyhedron::from_halfspaces(cone.dim(), hs)?.volume()
}

/// Outcome of the dilatation inequality `h̄(K,u)^n V_n(C ∩ H⁺(u,-1)) <= V_n(C \ K)`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct DilatationReport {
    pub hbar: f64,
    pub cap_volume: f64,
    pub coconvex_volume: f64,
    /// Left-hand side `h̄^n V_n(C ∩ H⁺(u,-1))`.
    pub lhs: f64,
    pub holds: bool,
    pub delta: f64,
    /// `h̄(M,u) / δ_C(u)^{1/n}` for the dilate `M` of `K` with `V_n(C \ M) = 1`.
    pub ratio: f64,
}

/// Checks the dilatation inequality for a pseudo-cone with finite coconvex
/// volume, with relative slack `tol`.
pub fn dilatation_inequality_check(
    k: &PseudoCone,
    u: &[f64],
    tol: f64,
) -> Result<DilatationReport> {
    let cap = cap_volume(k.cone(), u)?;
    let delta = k.cone().delta(u)?;
    let volume = coconvex_volume(k);
    if !volume.is_finite() {
        return Err(Error::Unbounded);
    }
    let v = volume.value();
    let n = k.dim() as f64;
    let hbar = k.hbar_f64(u).unwrap_or(0.0).max(0.0);
    let lhs = hbar.powf(n) * cap;
    Ok(DilatationReport {
        hbar,
        cap_volume: cap,
        coconvex_volume: v,
        lhs,
        holds: lhs <= v * (1.0 + tol),
        delta,
        ratio: hbar / v.powf(1.0 / n) / delta.powf(1.0 / n),
    })
}

/// Largest norm of a point in the reverse spherical image of `{δ_C >= tau}`
/// together with the bound `b(K)/sin tau`.
pub fn reverse_image_radius(k: &PseudoCone, tau: f64, grid_degrees: f64) -> (f64, f64) {
    let faces = k.reverse_spherical_image(k.cone().omega_bar(tau), grid_degrees);
    let lattice = k.faces();
    let mut radius = 0.0f64;
    for idx in faces {
        let f = &lattice.faces()[idx];
        for v in &f.vertices {
            radius = radius.max(v.norm_f64());
        }
    }
    (radius, k.distance_b() / tau.sin())
}
