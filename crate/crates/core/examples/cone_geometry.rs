//! A pointed cone, its polar, the angular distance to the boundary of the
//! polar domain and truncations at a few levels.

use pseudocone::cone::PolyCone;
use pseudocone::linalg::{normalize, rat};

fn main() -> pseudocone::Result<()> {
    let cone = PolyCone::from_int_generators(&[&[1, 0, 0], &[0, 1, 0], &[1, 1, 2]])?;
    println!("generators:");
    for g in cone.generators() {
        println!("  {g}");
    }
    println!("facet normals:");
    for a in cone.facet_normals() {
        println!("  {a}");
    }
    let polar = cone.polar();
    println!("polar generators:");
    for g in polar.generators() {
        println!("  {g}");
    }
    println!("truncation direction v = {}", cone.v_dir());

    // delta shrinks to zero as u approaches the boundary of the polar cone.
    let inner: Vec<f64> = polar.unit_generators().iter().fold(vec![0.0; 3], |acc, g| {
        acc.iter().zip(g).map(|(a, b)| a + b).collect()
    });
    let edge = &polar.unit_generators()[0];
    for s in [0.0, 0.5, 0.9, 0.99] {
        let u: Vec<f64> = inner.iter().zip(edge).map(|(a, b)| (1.0 - s) * a + s * b).collect();
        let u = normalize(&u);
        println!("delta at mix {s:>4}: {:.6}", cone.delta(&u)?);
    }
    for level in [1, 2, 4] {
        println!("V(C ∩ {{<x,v> <= {level}}}) = {:.6}", cone.truncation_volume(&rat(level)));
    }
    Ok(())
}
