use std::sync::Arc;

use super::measure::AtomicMeasure;
use super::solver::{solve_minkowski, Initialization, SolverConfig};
use super::volume::{coconvex_volume, CoconvexVolume};
use crate::cone::PolyCone;
use crate::error::{Error, Result};
use crate::linalg::{normalize, rat, Rational};
use crate::pseudocone::PseudoCone;

/// Weight of the `m`-th dyadic atom.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum WeightRule {
    /// `2^{-m}`: the moment `Σ w δ^{1/n}` converges.
    Decaying,
    /// `2^{m}`: the moment diverges.
    Growing,
}

/// Atoms accumulating at one boundary ray of a planar polar cone: the
/// `m`-th direction is the first boundary ray of `C°` turned toward the
/// second by `θ/2^m`, where `θ` is the opening angle of `C°`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct DyadicGenerator {
    pub weights: WeightRule,
}

impl DyadicGenerator {
    pub fn atoms(&self, cone: &PolyCone, count: usize) -> Result<AtomicMeasure> {
        if cone.dim() != 2 {
            return Err(Error::UnsupportedDimension(cone.dim()));
        }
        let polar = cone.polar();
        let a = normalize(&polar.generators()[0].to_f64());
        let b = normalize(&polar.generators()[1].to_f64());
        let theta = crate::linalg::angle(&a, &b);
        // Unit vector orthogonal to a, pointing toward b.
        let dot = crate::linalg::fdot(&a, &b);
        let perp = normalize(&[b[0] - dot * a[0], b[1] - dot * a[1]]);
        let atoms = (1..=count)
            .map(|m| {
                let phi = theta / 2f64.powi(m as i32);
                let dir = vec![
                    phi.cos() * a[0] + phi.sin() * perp[0],
                    phi.cos() * a[1] + phi.sin() * perp[1],
                ];
                let w = match self.weights {
                    WeightRule::Decaying => 2f64.powi(-(m as i32)),
                    WeightRule::Growing => 2f64.powi(m as i32),
                };
                (dir, w)
            })
            .collect();
        AtomicMeasure::new(cone, atoms)
    }
}

/// Diagnostics of one pipeline stage.
#[derive(Clone, Debug, PartialEq)]
pub struct StageReport {
    pub stage: usize,
    pub tau: f64,
    pub atoms: usize,
    pub lambda: f64,
    /// Distance `b(K_j)` of the solution from the origin.
    pub distance_b: f64,
    pub volume: f64,
    /// `Σ w δ_C^{1/n}` over the atoms of this stage.
    pub delta_moment: f64,
    pub iterations: usize,
    pub residual: f64,
    /// `max |h̄(K_j,u) - h̄(K_{j-1},u)|` over the atoms of the first stage.
    pub hbar_change: Option<f64>,
    /// Hausdorff distances of the truncations of `K_{j-1}` and `K_j` at the
    /// ladder levels.
    pub truncation_distances: Option<Vec<f64>>,
}

#[derive(Clone, Debug, PartialEq)]
pub struct PipelineReport {
    /// Truncation levels (in units of `<x, v_dir>`) used for the distances.
    pub ladder: Vec<Rational>,
    pub stages: Vec<StageReport>,
}

impl PipelineReport {
    pub fn lambda_increasing(&self) -> bool {
        self.stages.windows(2).all(|w| w[1].lambda > w[0].lambda)
    }

    /// Smallest and largest `b(K_j)`.
    pub fn distance_b_range(&self) -> (f64, f64) {
        self.stages
            .iter()
            .fold((f64::INFINITY, 0.0f64), |(lo, hi), s| {
                (lo.min(s.distance_b), hi.max(s.distance_b))
            })
    }

    pub fn max_volume(&self) -> f64 {
        self.stages.iter().map(|s| s.volume).fold(0.0, f64::max)
    }

    /// Truncation distances at ladder level `rung` strictly decrease.
    pub fn distances_decreasing(&self, rung: usize) -> bool {
        let d: Vec<f64> = self
            .stages
            .iter()
            .filter_map(|s| s.truncation_distances.as_ref().map(|t| t[rung]))
            .collect();
        d.windows(2).all(|w| w[1] < w[0])
    }

    /// The `h̄` changes on the first-stage atoms decrease.
    pub fn hbar_changes_decreasing(&self) -> bool {
        let d: Vec<f64> = self.stages.iter().filter_map(|s| s.hbar_change).collect();
        d.windows(2).all(|w| w[1] <= w[0])
    }
}

/// Solves the Minkowski problem for the restrictions of `phi` to
/// `{δ_C >= τ_j}`, `τ_j = τ_1 / 2^{j-1}`, where `τ_1` is the largest `δ_C`
/// of an atom. Each stage starts from the previous solution.
pub fn truncation_pipeline(
    cone: &Arc<PolyCone>,
    phi: &AtomicMeasure,
    stages: usize,
    cfg: &SolverConfig,
) -> Result<PipelineReport> {
    let tau1 = phi
        .atoms()
        .iter()
        .map(|a| cone.delta(&a.direction).unwrap_or(0.0))
        .fold(0.0, f64::max);
    if tau1 <= 0.0 {
        return Err(Error::InvalidMeasure("measure has no atoms".into()));
    }
    let mut reports: Vec<StageReport> = Vec::new();
    let mut previous: Option<PseudoCone> = None;
    let mut solutions: Vec<PseudoCone> = Vec::new();
    let first_atoms = phi.restrict(|u| cone.delta(u).is_ok_and(|d| d >= tau1 * (1.0 - 1e-12)));
    for j in 1..=stages {
        let tau = tau1 / 2f64.powi(j as i32 - 1);
        let phi_j = phi.restrict(|u| cone.delta(u).is_ok_and(|d| d >= tau * (1.0 - 1e-12)));
        let mut stage_cfg = cfg.clone();
        if let Some(prev) = &previous {
            let init = phi_j
                .atoms()
                .iter()
                .map(|a| prev.hbar_f64(&a.direction).unwrap_or(1.0))
                .collect();
            stage_cfg.init = Initialization::Given(init);
        }
        let (k, state) = solve_minkowski(cone, &phi_j, &stage_cfg).map_err(|e| Error::Stage {
            stage: j,
            source: Box::new(e),
        })?;
        let hbar_change = previous.as_ref().map(|prev| {
            first_atoms
                .atoms()
                .iter()
                .map(|a| {
                    (k.hbar_f64(&a.direction).unwrap() - prev.hbar_f64(&a.direction).unwrap()).abs()
                })
                .fold(0.0, f64::max)
        });
        reports.push(StageReport {
            stage: j,
            tau,
            atoms: phi_j.len(),
            lambda: state.lambda,
            distance_b: k.distance_b(),
            volume: state.volume,
            delta_moment: phi_j.delta_moment(cone),
            iterations: state.iterations,
            residual: state.residual,
            hbar_change,
            truncation_distances: None,
        });
        previous = Some(k.clone());
        solutions.push(k);
    }

    // Ladder {2,4,8} t0, with t0 the smallest integer level reaching every
    // vertex of every solution.
    let t0 = solutions
        .iter()
        .map(|k| {
            k.vertices()
                .iter()
                .map(|x| x.dot(cone.v_dir()))
                .max()
                .expect("pseudo-cone has a vertex")
        })
        .max()
        .expect("at least one stage")
        .ceil();
    let ladder: Vec<Rational> = [2, 4, 8].iter().map(|&f| &t0 * rat(f)).collect();
    for j in 1..solutions.len() {
        let d = ladder
            .iter()
            .map(|level| solutions[j - 1].truncation_distance(&solutions[j], level))
            .collect::<Result<Vec<f64>>>()?;
        reports[j].truncation_distances = Some(d);
    }
    Ok(PipelineReport {
        ladder,
        stages: reports,
    })
}

/// One member `K_i = (K_0 ∩ C⁻(t_i)) + ε_i v + C` of the semicontinuity witness.
#[derive(Clone, Debug, PartialEq)]
pub struct SemicontinuityStep {
    pub cut_level: Rational,
    pub shift: Rational,
    pub volume: CoconvexVolume,
    /// Hausdorff distance to `K_0` after truncation at the fixed level.
    pub distance: f64,
}

/// Sequence `K_i = (K_0 ∩ C⁻(t_i)) + ε_i v_dir + C` with `t_i = 2^i level`
/// and `ε_i = 2^{-i} ε_0`. Each `K_i` has infinite coconvex volume while
/// `K_i → K_0`, so the volume is not upper semicontinuous.
pub fn semicontinuity_witness(
    k0: &PseudoCone,
    steps: usize,
    level: &Rational,
    shift: &Rational,
) -> Result<Vec<SemicontinuityStep>> {
    let v = k0.cone().v_dir().clone();
    let mut out = Vec::with_capacity(steps);
    for i in 1..=steps {
        let scale = Rational::from_integer(num::BigInt::from(1u64 << i.min(62)));
        let cut_level = level * &scale;
        let eps = shift / &scale;
        let cut = k0.truncation(&cut_level)?;
        let offset = v.scale(&eps);
        let points = cut.vertices().iter().map(|p| p + &offset).collect();
        let ki = PseudoCone::from_points(Arc::clone(k0.cone_arc()), points)?;
        out.push(SemicontinuityStep {
            volume: coconvex_volume(&ki),
            distance: ki.truncation_distance(k0, level)?,
            cut_level,
            shift: eps,
        });
    }
    Ok(out)
}
