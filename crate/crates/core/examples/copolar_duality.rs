//! Copolar set, conjugate faces with their classes, and the identity battery
//! for a pseudo-cone generated by points.

use std::sync::Arc;

use pseudocone::cone::PolyCone;
use pseudocone::copolarity::{check_identities, classify_faces, copolar};
use pseudocone::linalg::QVec;
use pseudocone::pseudocone::PseudoCone;

fn main() -> pseudocone::Result<()> {
    let cone = Arc::new(PolyCone::from_int_generators(&[&[1, 0], &[1, 2]])?);
    let k = PseudoCone::from_points(
        cone.clone(),
        vec![QVec::from_ints(&[2, 1]), QVec::from_ints(&[3, 4]), QVec::from_ints(&[4, 3])],
    )?;
    let star = copolar(&k);
    println!("K:  vertices {:?}", k.vertices().iter().map(|v| v.to_string()).collect::<Vec<_>>());
    println!("K*: vertices {:?}", star.vertices().iter().map(|v| v.to_string()).collect::<Vec<_>>());
    println!("K* has recession cone generated by {:?}", star.rays().iter().map(|v| v.to_string()).collect::<Vec<_>>());
    println!("K** == K: {}", copolar(&star) == k);

    let report = classify_faces(&k);
    println!("face  dim  class  conjugate  dim  class");
    for f in &report.faces {
        let conj = f.conjugate.map(|j| j.to_string()).unwrap_or_else(|| "-".into());
        let conj_dim = f.conjugate_dim.map(|d| d.to_string()).unwrap_or_else(|| "-".into());
        let conj_class = f.conjugate_class.map(|c| c.to_string()).unwrap_or_else(|| "-".into());
        println!("{:>4}  {:>3}  {:<5}  {conj:>9}  {conj_dim:>3}  {conj_class}", f.face, f.dim, f.class.to_string());
    }
    println!("class counts K {:?}, K* {:?}", report.class_counts(), report.copolar_class_counts());

    let partner = PseudoCone::from_points(cone, vec![QVec::from_ints(&[3, 1]), QVec::from_ints(&[2, 3])])?;
    for check in check_identities(&k, &partner, 20, 1) {
        println!("{:<30} {}", check.name, if check.passed { "ok" } else { "FAILED" });
    }
    Ok(())
}
