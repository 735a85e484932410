//! Surface area measures, coconvex volumes and the Minkowski problem for
//! polyhedral C-close pseudo-cones.

mod measure;
mod pipeline;
mod solver;
mod volume;

pub use measure::{surface_area_measure, Atom, AtomicMeasure};
pub use pipeline::{
    semicontinuity_witness, truncation_pipeline, DyadicGenerator, PipelineReport,
    SemicontinuityStep, StageReport, WeightRule,
};
pub use solver::{
    solve_minkowski, volume_gradient_fd, Initialization, SolverConfig, SolverState, WulffShape,
    DEFAULT_MAX_ITER, DEFAULT_RESIDUAL_TOL,
};
pub use volume::{
    cap_volume, coconvex_volume, dilatation_inequality_check, divergence_volume,
    reverse_image_radius, CoconvexVolume, DilatationReport,
};
