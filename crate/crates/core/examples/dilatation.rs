//! Dilatation inequality `h̄(K,u)^n V(C ∩ H⁺(u,-1)) <= V(C \ K)` along a path
//! of normals running toward the boundary of the polar cone, and the radius
//! bound for the reverse spherical image.

use std::f64::consts::PI;
use std::sync::Arc;

use pseudocone::cone::PolyCone;
use pseudocone::linalg::{rat, Halfspace, QVec};
use pseudocone::minkowski::{coconvex_volume, dilatation_inequality_check, reverse_image_radius};
use pseudocone::pseudocone::PseudoCone;

fn main() -> pseudocone::Result<()> {
    let cone = Arc::new(PolyCone::orthant(2)?);
    let k = PseudoCone::from_cone_and_halfspaces(
        cone,
        vec![
            Halfspace::new(QVec::from_ints(&[-1, -2]), rat(-2)),
            Halfspace::new(QVec::from_ints(&[-2, -1]), rat(-2)),
        ],
    )?;
    let volume = coconvex_volume(&k);
    println!("V(C \\ K) = {:.6} (triangulation vs divergence gap {:.1e})", volume.value(), volume.relative_gap());
    println!("angle     delta     hbar      lhs       holds  hbar/delta^(1/n)");
    for step in 0..8 {
        let angle = PI + PI / 4.0 / 2f64.powi(step);
        let r = dilatation_inequality_check(&k, &[angle.cos(), angle.sin()], 1e-9)?;
        println!(
            "{:<8.4}  {:<8.5}  {:<8.5}  {:<8.5}  {:<5}  {:.5}",
            angle.to_degrees(),
            r.delta,
            r.hbar,
            r.lhs,
            r.holds,
            r.ratio
        );
    }
    for tau in [PI / 16.0, PI / 8.0, PI / 4.0] {
        let (radius, bound) = reverse_image_radius(&k, tau, 1.0);
        println!("tau = {tau:.4}: reverse image radius {radius:.5} <= b/sin(tau) = {bound:.5}");
    }
    Ok(())
}
