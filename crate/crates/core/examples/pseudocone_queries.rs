//! Support, radial function, distance from the origin, truncations and
//! crucial pairs of a pseudo-cone in the quadrant.

use std::sync::Arc;

use pseudocone::cone::PolyCone;
use pseudocone::linalg::{format_rational, frac, rat, Halfspace, QVec};
use pseudocone::pseudocone::PseudoCone;

fn main() -> pseudocone::Result<()> {
    let cone = Arc::new(PolyCone::orthant(2)?);
    let k = PseudoCone::from_cone_and_halfspaces(
        cone.clone(),
        vec![
            Halfspace::new(QVec::from_ints(&[-1, -3]), rat(-3)),
            Halfspace::new(QVec::from_ints(&[-1, -1]), rat(-2)),
            Halfspace::new(QVec::from_ints(&[-3, -1]), rat(-3)),
        ],
    )?;
    println!("vertices:");
    for v in k.vertices() {
        println!("  {v}");
    }
    println!("C-full: {}, b(K) = {:.6}", k.is_c_full(), k.distance_b());
    for u in [[-1, -1], [-1, -4], [-2, -1]] {
        let u = QVec::from_ints(&u);
        let h = k.support(&u).finite().map(format_rational).unwrap_or_else(|| "+inf".into());
        println!("h(K, {u}) = {h}");
    }
    for x in [[1, 1], [1, 5], [2, 1]] {
        let x = QVec::from_ints(&x);
        let rho = k.radial(&x)?;
        println!("rho(K, {x}) = {rho}, boundary point {}", x.scale(&rho));
    }
    let dilated = k.dilate(&frac(3, 2))?;
    for level in [4, 8, 16] {
        println!("truncation distance to 3/2 K at level {level}: {:.6}", k.truncation_distance(&dilated, &rat(level))?);
    }
    println!("crucial pairs (x, v) with <x,v> = -1:");
    for p in k.crucial_pairs() {
        println!("  {}  {}", p.point, p.normal);
    }
    Ok(())
}
