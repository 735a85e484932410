use std::sync::Arc;

use nalgebra::{DMatrix, DVector};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::measure::AtomicMeasure;
use crate::cone::PolyCone;
use crate::error::{Error, Result};
use num::traits::Signed;

use crate::linalg::{fdot, rat, rat_from_f64, simplest_between, Halfspace, QVec};
use crate::polyhedra::HRep;
use crate::pseudocone::PseudoCone;

pub const DEFAULT_MAX_ITER: usize = 10_000;
pub const DEFAULT_RESIDUAL_TOL: f64 = 1e-6;

/// Starting support numbers.
#[derive(Clone, Debug, PartialEq)]
pub enum Initialization {
    /// `h̄_i = 1` for every atom.
    Unit,
    /// Independent uniform draws from `[1/2, 2]`.
    Random(u64),
    Given(Vec<f64>),
}

#[derive(Clone, Debug, PartialEq)]
pub struct SolverConfig {
    pub max_iter: usize,
    /// Bound on `max_i |S_i - φ_i| / φ_i` at the returned solution.
    pub residual_tol: f64,
    pub init: Initialization,
}

impl Default for SolverConfig {
    fn default() -> Self {
        Self {
            max_iter: DEFAULT_MAX_ITER,
            residual_tol: DEFAULT_RESIDUAL_TOL,
            init: Initialization::Unit,
        }
    }
}

/// Solution data and diagnostics of a Minkowski solve.
#[derive(Clone, Debug, PartialEq)]
pub struct SolverState {
    /// Unit directions of the atoms.
    pub normals: Vec<Vec<f64>>,
    /// Support numbers `h̄(K,u_i)` of the solution.
    pub hbar: Vec<f64>,
    /// `V_n(C \ K)`.
    pub volume: f64,
    /// Facet areas `S_i` of the solution.
    pub facet_areas: Vec<f64>,
    /// `λ = V^{(n-1)/n}`, so that `K = λ^{1/(n-1)} M` with `V_n(C \ M) = 1`.
    pub lambda: f64,
    pub iterations: usize,
    pub residual: f64,
}

impl SolverState {
    /// Support numbers of the normalized minimizer `M`.
    pub fn normalized_hbar(&self) -> Vec<f64> {
        let n = self.normals.first().map_or(1, Vec::len) as f64;
        let s = self.volume.powf(1.0 / n);
        self.hbar.iter().map(|h| h / s).collect()
    }
}

/// `K(h̄) = C ∩ ∩_i H⁻(u_i, -h̄_i)` with its facet areas, built exactly
/// from rational snaps of the directions and support numbers.
#[derive(Clone, Debug)]
pub struct WulffShape {
    pub shape: PseudoCone,
    /// Facet index of each atom, `None` if its halfspace is redundant.
    pub facet_of_atom: Vec<Option<usize>>,
    pub areas: Vec<f64>,
    /// `(1/n) Σ h̄_i S_i`.
    pub volume: f64,
}

fn snap(v: &[f64]) -> QVec {
    QVec::new(v.iter().map(|&x| rat_from_f64(x)).collect())
}

impl WulffShape {
    pub fn new(cone: &Arc<PolyCone>, normals: &[Vec<f64>], hbar: &[f64]) -> Result<Self> {
        let halfspaces: Vec<Halfspace> = normals
            .iter()
            .zip(hbar)
            .map(|(u, &h)| Halfspace::new(snap(u), rat_from_f64(-h)))
            .collect();
        let shape = PseudoCone::from_cone_and_halfspaces(Arc::clone(cone), halfspaces)?;
        Ok(Self::from_pseudocone(shape, normals))
    }

    /// Facet data of an existing pseudo-cone for the given atom directions.
    pub fn from_pseudocone(shape: PseudoCone, normals: &[Vec<f64>]) -> Self {
        let lattice = shape.faces();
        let facet_of_atom: Vec<Option<usize>> = normals
            .iter()
            .map(|u| {
                let canonical = Halfspace::new(snap(u), rat(0)).canonical().normal;
                shape.facets().iter().position(|h| h.normal == canonical)
            })
            .collect();
        let areas: Vec<f64> = facet_of_atom
            .iter()
            .map(|f| {
                f.map_or(0.0, |i| {
                    let face = lattice.facet_face(i).expect("every facet has a face");
                    lattice.face_volume(shape.polyhedron(), face).value()
                })
            })
            .collect();
        let volume = normals
            .iter()
            .zip(&areas)
            .filter(|(_, s)| **s > 0.0)
            .map(|(u, s)| shape.hbar_f64(u).unwrap_or(0.0) * s)
            .sum::<f64>()
            / shape.dim() as f64;
        Self {
            shape,
            facet_of_atom,
            areas,
            volume,
        }
    }

    /// Support numbers `h̄(K, u_i)`.
    pub fn support_numbers(&self, normals: &[Vec<f64>]) -> Vec<f64> {
        normals
            .iter()
            .map(|u| self.shape.hbar_f64(u).unwrap_or(0.0))
            .collect()
    }

    /// Same shape with every facet offset replaced by the simplest rational
    /// within relative distance `rel`.
    fn simplified(&self, normals: &[Vec<f64>], rel: f64) -> Result<Self> {
        let tol = rat_from_f64(rel);
        let halfspaces = self
            .shape
            .facets()
            .iter()
            .map(|h| {
                let slack = h.offset.abs() * &tol;
                Halfspace::new(
                    h.normal.clone(),
                    simplest_between(&(&h.offset - &slack), &(&h.offset + &slack)),
                )
            })
            .collect();
        let shape = PseudoCone::validate(
            self.shape.cone_arc().clone(),
            &HRep::new(self.shape.dim(), halfspaces)?,
        )?;
        Ok(Self::from_pseudocone(shape, normals))
    }

    /// `∂S_i/∂h̄_j`. Off the diagonal this is `-vol_{n-2}(F_i ∩ F_j)/sin θ_ij`;
    /// the diagonal follows from `Σ_j h̄_j ∂S_i/∂h̄_j = (n-1) S_i`. Atoms
    /// without a facet get a unit diagonal entry.
    pub fn area_jacobian(&self, normals: &[Vec<f64>], hbar: &[f64]) -> DMatrix<f64> {
        let m = normals.len();
        let n = self.shape.dim();
        let mut atom_of_facet = vec![None; self.shape.facets().len()];
        for (a, f) in self.facet_of_atom.iter().enumerate() {
            if let Some(i) = f {
                atom_of_facet[*i] = Some(a);
            }
        }
        let lattice = self.shape.faces();
        let mut jac = DMatrix::zeros(m, m);
        for (idx, face) in lattice.of_dim(n - 2) {
            let atoms: Vec<usize> = face
                .active_set
                .iter()
                .filter_map(|&i| atom_of_facet[i])
                .collect();
            if atoms.len() != 2 || !face.bounded {
                continue;
            }
            let (a, b) = (atoms[0], atoms[1]);
            let c = fdot(&normals[a], &normals[b]);
            let sin = (1.0 - c * c).max(0.0).sqrt();
            let ridge = lattice.face_volume(self.shape.polyhedron(), idx).value();
            jac[(a, b)] -= ridge / sin;
            jac[(b, a)] -= ridge / sin;
        }
        for i in 0..m {
            if self.facet_of_atom[i].is_none() {
                jac[(i, i)] = 1.0;
                continue;
            }
            let off: f64 = (0..m)
                .filter(|&j| j != i)
                .map(|j| jac[(i, j)] * hbar[j])
                .sum();
            jac[(i, i)] = ((n as f64 - 1.0) * self.areas[i] - off) / hbar[i];
        }
        jac
    }
}

fn residual(areas: &[f64], weights: &[f64]) -> f64 {
    areas
        .iter()
        .zip(weights)
        .map(|(s, w)| (s - w).abs() / w)
        .fold(0.0, f64::max)
}

/// `V(h̄) - Σ φ_i h̄_i`, convex in `h̄`, minimized exactly where `S_i = φ_i`.
fn potential(w: &WulffShape, hbar: &[f64], weights: &[f64]) -> f64 {
    w.volume - fdot(hbar, weights)
}

/// Finds the pseudo-cone `K` for `C` with `S_{n-1}(K,·) = φ`.
///
/// Newton's method with backtracking minimizes `V(h̄) - Σ φ_i h̄_i`, whose
/// gradient is `S(h̄) - φ`. The minimizer solves the equivalent constrained
/// problem `min Σ φ_i h̄_i` subject to `V(h̄) = 1` after scaling by
/// `V^{-1/n}`, with Lagrange multiplier `λ = V^{(n-1)/n}`.
pub fn solve_minkowski(
    cone: &Arc<PolyCone>,
    phi: &AtomicMeasure,
    cfg: &SolverConfig,
) -> Result<(PseudoCone, SolverState)> {
    if phi.is_empty() {
        return Err(Error::InvalidMeasure("measure has no atoms".into()));
    }
    if cfg.residual_tol <= 0.0 {
        return Err(Error::InvalidInput(
            "residual tolerance must be positive".into(),
        ));
    }
    let normals = phi.directions();
    let weights = phi.weights();
    for u in &normals {
        match cone.delta(u) {
            Ok(d) if d > 0.0 => {}
            _ => return Err(Error::OutsideDomain),
        }
    }
    let m = normals.len();
    let mut hbar: Vec<f64> = match &cfg.init {
        Initialization::Unit => vec![1.0; m],
        Initialization::Random(seed) => {
            let mut rng = ChaCha8Rng::seed_from_u64(*seed);
            (0..m).map(|_| rng.random_range(0.5..2.0)).collect()
        }
        Initialization::Given(h) => {
            if h.len() != m || h.iter().any(|x| !(x.is_finite() && *x > 0.0)) {
                return Err(Error::InvalidInput(
                    "initial support numbers must be positive, one per atom".into(),
                ));
            }
            h.clone()
        }
    };
    let target = cfg.residual_tol * 1e-4;
    let mut shape = WulffShape::new(cone, &normals, &hbar)?;
    let mut value = potential(&shape, &hbar, &weights);
    let mut res = residual(&shape.areas, &weights);
    let mut iterations = 0;
    while res > target && iterations < cfg.max_iter {
        iterations += 1;
        let grad: Vec<f64> = shape
            .areas
            .iter()
            .zip(&weights)
            .map(|(s, w)| s - w)
            .collect();
        let jac = shape.area_jacobian(&normals, &hbar);
        let newton = jac
            .lu()
            .solve(&DVector::from_iterator(m, grad.iter().map(|g| -g)))
            .map(|d| d.as_slice().to_vec())
            .filter(|d| fdot(d, &grad) < 0.0 && d.iter().all(|x| x.is_finite()));
        let mut accepted = false;
        for direction in newton
            .into_iter()
            .chain(std::iter::once(grad.iter().map(|g| -g).collect()))
        {
            let slope = fdot(&direction, &grad);
            // Keep every support number above half its current value.
            let mut t: f64 = 1.0;
            for (h, d) in hbar.iter().zip(&direction) {
                if *d < 0.0 {
                    t = t.min(-0.5 * h / d);
                }
            }
            for _ in 0..60 {
                let trial: Vec<f64> = hbar
                    .iter()
                    .zip(&direction)
                    .map(|(h, d)| h + t * d)
                    .collect();
                if let Ok(w) = WulffShape::new(cone, &normals, &trial) {
                    let v = potential(&w, &trial, &weights);
                    if v <= value + 1e-4 * t * slope || residual(&w.areas, &weights) < res * 0.5 {
                        hbar = trial;
                        shape = w;
                        value = v;
                        accepted = true;
                        break;
                    }
                }
                t *= 0.5;
            }
            if accepted {
                break;
            }
        }
        res = residual(&shape.areas, &weights);
        if !accepted {
            break;
        }
    }
    if res > cfg.residual_tol || shape.facet_of_atom.iter().any(Option::is_none) {
        return Err(Error::NonConvergence {
            iterations,
            residual: res,
        });
    }
    if let Ok(w) = shape.simplified(&normals, 1e-10) {
        let r = residual(&w.areas, &weights);
        if r <= cfg.residual_tol && w.facet_of_atom.iter().all(Option::is_some) {
            shape = w;
            res = r;
        }
    }
    let hbar = shape.support_numbers(&normals);
    let n = cone.dim() as f64;
    let state = SolverState {
        normals,
        hbar,
        volume: shape.volume,
        facet_areas: shape.areas.clone(),
        lambda: shape.volume.powf((n - 1.0) / n),
        iterations,
        residual: res,
    };
    Ok((shape.shape, state))
}

/// Central finite differences of `h̄ ↦ V_n(C \ K(h̄))`.
pub fn volume_gradient_fd(
    cone: &Arc<PolyCone>,
    normals: &[Vec<f64>],
    hbar: &[f64],
    step: f64,
) -> Result<Vec<f64>> {
    let mut out = Vec::with_capacity(hbar.len());
    for i in 0..hbar.len() {
        let mut plus = hbar.to_vec();
        let mut minus = hbar.to_vec();
        plus[i] += step;
        minus[i] -= step;
        let vp =
            super::volume::coconvex_volume(&WulffShape::new(cone, normals, &plus)?.shape).value();
        let vm =
            super::volume::coconvex_volume(&WulffShape::new(cone, normals, &minus)?.shape).value();
        out.push((vp - vm) / (2.0 * step));
    }
    Ok(out)
}
