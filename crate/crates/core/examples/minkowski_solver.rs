//! Reconstructs a pseudo-cone from its surface area measure and solves the
//! Minkowski problem for a hand-made measure.

use std::sync::Arc;

use pseudocone::cone::PolyCone;
use pseudocone::linalg::{rat, Halfspace, QVec};
use pseudocone::minkowski::{solve_minkowski, surface_area_measure, AtomicMeasure, SolverConfig};
use pseudocone::pseudocone::PseudoCone;

fn main() -> pseudocone::Result<()> {
    let cone = Arc::new(PolyCone::orthant(3)?);
    let k = PseudoCone::from_cone_and_halfspaces(
        cone.clone(),
        vec![
            Halfspace::new(QVec::from_ints(&[-1, -1, -1]), rat(-3)),
            Halfspace::new(QVec::from_ints(&[-2, -1, -1]), rat(-4)),
            Halfspace::new(QVec::from_ints(&[-1, -1, -3]), rat(-4)),
        ],
    )?;
    let phi = surface_area_measure(&k);
    println!("surface area measure of K:");
    for a in phi.atoms() {
        println!("  u = {:.4?}  weight {:.6}", a.direction, a.weight);
    }
    let (solved, state) = solve_minkowski(&cone, &phi, &SolverConfig::default())?;
    println!(
        "solver: {} iterations, residual {:.2e}, volume {:.6}, lambda {:.6}",
        state.iterations, state.residual, state.volume, state.lambda
    );
    println!("reconstruction equals K: {}", solved == k);

    // A measure with no known solution in closed form.
    let quadrant = Arc::new(PolyCone::orthant(2)?);
    let phi = AtomicMeasure::new(
        &quadrant,
        vec![(vec![-1.0, -0.2], 1.0), (vec![-1.0, -1.0], 0.5), (vec![-0.3, -1.0], 2.0)],
    )?;
    let (solved, state) = solve_minkowski(&quadrant, &phi, &SolverConfig::default())?;
    println!("support numbers {:.6?}", state.hbar);
    for v in solved.vertices() {
        println!("  vertex {:.6?}", v.to_f64());
    }
    let back = surface_area_measure(&solved);
    println!("max relative measure error {:.2e}", back.max_relative_difference(&phi).unwrap_or(f64::NAN));
    Ok(())
}
