//! Pseudo-cones with infinite coconvex volume converging to one with finite
//! volume: the volume is not continuous under truncation convergence.

use std::sync::Arc;

use pseudocone::cone::PolyCone;
use pseudocone::linalg::{rat, Halfspace, QVec};
use pseudocone::minkowski::{coconvex_volume, semicontinuity_witness};
use pseudocone::pseudocone::PseudoCone;

fn main() -> pseudocone::Result<()> {
    let cone = Arc::new(PolyCone::orthant(2)?);
    let k0 = PseudoCone::from_cone_and_halfspaces(cone, vec![Halfspace::new(QVec::from_ints(&[-1, -1]), rat(-1))])?;
    println!("V(C \\ K0) = {}", coconvex_volume(&k0).value());
    println!("step  cut level  shift     volume    distance to K0");
    for (i, s) in semicontinuity_witness(&k0, 8, &rat(4), &rat(1))?.iter().enumerate() {
        let volume = if s.volume.is_finite() { format!("{:.4}", s.volume.value()) } else { "inf".into() };
        println!("{i:>4}  {:>9}  {:<8}  {volume:<8}  {:.3e}", s.cut_level.to_string(), s.shift.to_string(), s.distance);
    }
    Ok(())
}
