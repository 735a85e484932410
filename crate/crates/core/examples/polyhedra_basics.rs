//! Double description, face lattice, exact volume and Hausdorff distance on
//! a small polytope and an unbounded polyhedron.

use pseudocone::linalg::{rat, Halfspace, QVec};
use pseudocone::polyhedra::{hausdorff_distance, Polyhedron};

fn main() -> pseudocone::Result<()> {
    // Unit square from halfspaces, then a triangle from generators.
    let square = Polyhedron::from_halfspaces(
        2,
        vec![
            Halfspace::new(QVec::from_ints(&[-1, 0]), rat(0)),
            Halfspace::new(QVec::from_ints(&[0, -1]), rat(0)),
            Halfspace::new(QVec::from_ints(&[1, 0]), rat(1)),
            Halfspace::new(QVec::from_ints(&[0, 1]), rat(1)),
        ],
    )?;
    println!("square vertices:");
    for v in square.vertices() {
        println!("  {v}");
    }
    let triangle = Polyhedron::from_generators(
        vec![QVec::from_ints(&[0, 0]), QVec::from_ints(&[1, 0]), QVec::from_ints(&[0, 1])],
        vec![],
    )?;
    println!("triangle facets:");
    for h in triangle.facets() {
        println!("  {h}");
    }
    println!("volumes: square {}, triangle {}", square.exact_volume()?.value(), triangle.exact_volume()?.value());
    println!("hausdorff(square, triangle) = {:.6}", hausdorff_distance(&square.vrep(), &triangle.vrep())?);

    // An unbounded polyhedron: the face lattice records bounded and unbounded faces.
    let wedge = Polyhedron::from_generators(
        vec![QVec::from_ints(&[1, 1])],
        vec![QVec::from_ints(&[1, 0]), QVec::from_ints(&[1, 2])],
    )?;
    let lattice = wedge.face_lattice();
    for dim in 0..2 {
        let (bounded, unbounded) = lattice.counts(dim);
        println!("wedge: {bounded} bounded and {unbounded} unbounded faces of dimension {dim}");
    }
    println!("sup <(1,-1), x> over the wedge: {:?}", wedge.lp_max(&QVec::from_ints(&[1, -1]))?);
    Ok(())
}
