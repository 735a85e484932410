//! Runs the truncation pipeline on dyadic atoms accumulating at the
//! boundary of the orthant's polar cone and prints the stage diagnostics.

use std::sync::Arc;

use pseudocone::cone::PolyCone;
use pseudocone::minkowski::{truncation_pipeline, DyadicGenerator, SolverConfig, WeightRule};

fn main() -> pseudocone::Result<()> {
    let stages = std::env::args()
        .nth(1)
        .and_then(|s| s.parse().ok())
        .unwrap_or(6);
    let cone = Arc::new(PolyCone::orthant(2)?);
    for weights in [WeightRule::Decaying, WeightRule::Growing] {
        let phi = DyadicGenerator { weights }.atoms(&cone, stages)?;
        let report = truncation_pipeline(&cone, &phi, stages, &SolverConfig::default())?;
        println!(
            "{weights:?} weights, ladder {:?}",
            report
                .ladder
                .iter()
                .map(|l| l.to_string())
                .collect::<Vec<_>>()
        );
        println!("stage  atoms  lambda      b(K)       volume     moment     dist@ladder");
        for s in &report.stages {
            let d = s
                .truncation_distances
                .as_ref()
                .map(|d| {
                    d.iter()
                        .map(|x| format!("{x:.3e}"))
                        .collect::<Vec<_>>()
                        .join(" ")
                })
                .unwrap_or_default();
            println!(
                "{:>5}  {:>5}  {:<10.6}  {:<9.6}  {:<9.6}  {:<9.6}  {d}",
                s.stage, s.atoms, s.lambda, s.distance_b, s.volume, s.delta_moment
            );
        }
        println!(
            "lambda increasing: {}, distances decreasing: {}\n",
            report.lambda_increasing(),
            (0..report.ladder.len()).all(|r| report.distances_decreasing(r))
        );
    }
    Ok(())
}
