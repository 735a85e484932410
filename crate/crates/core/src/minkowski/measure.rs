use crate::cone::PolyCone;
use crate::error::{Error, Result};
use crate::linalg::{angle, norm, normalize};
use crate::pseudocone::PseudoCone;

/// Directions closer than this (in radians) are merged into one atom.
const MERGE_ANGLE: f64 = 1e-12;

/// Point mass `weight` at the unit vector `direction`.
#[derive(Clone, Debug, PartialEq)]
pub struct Atom {
    pub direction: Vec<f64>,
    pub weight: f64,
}

/// Finite sum of point masses on the open set of unit vectors in `int C°`.
/// Atoms are sorted by direction and have distinct directions.
#[derive(Clone, Debug, Default, PartialEq)]
pub struct AtomicMeasure {
    atoms: Vec<Atom>,
}

impl AtomicMeasure {
    /// Normalizes the directions, merges repeated ones and checks that each
    /// lies in `int C°` and carries a positive finite weight.
    pub fn new(cone: &PolyCone, atoms: Vec<(Vec<f64>, f64)>) -> Result<Self> {
        let mut out: Vec<Atom> = Vec::new();
        for (dir, weight) in atoms {
            if dir.len() != cone.dim() {
                return Err(Error::DimensionMismatch {
                    expected: cone.dim(),
                    got: dir.len(),
                });
            }
            if !(weight.is_finite() && weight > 0.0) {
                return Err(Error::InvalidMeasure(format!(
                    "weight {weight} is not positive"
                )));
            }
            let len = norm(&dir);
            if !(len.is_finite() && len > 0.0) {
                return Err(Error::InvalidMeasure("zero direction".into()));
            }
            let direction = normalize(&dir);
            match cone.delta(&direction) {
                Ok(d) if d > 0.0 => {}
                _ => return Err(Error::OutsideDomain),
            }
            match out
                .iter_mut()
                .find(|a| angle(&a.direction, &direction) < MERGE_ANGLE)
            {
                Some(a) => a.weight += weight,
                None => out.push(Atom { direction, weight }),
            }
        }
        out.sort_by(|a, b| {
            a.direction
                .iter()
                .zip(&b.direction)
                .map(|(x, y)| x.total_cmp(y))
                .find(|o| o.is_ne())
                .unwrap_or(std::cmp::Ordering::Equal)
        });
        Ok(Self { atoms: out })
    }

    pub fn atoms(&self) -> &[Atom] {
        &self.atoms
    }

    pub fn len(&self) -> usize {
        self.atoms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.atoms.is_empty()
    }

    pub fn total_mass(&self) -> f64 {
        self.atoms.iter().map(|a| a.weight).sum()
    }

    pub fn directions(&self) -> Vec<Vec<f64>> {
        self.atoms.iter().map(|a| a.direction.clone()).collect()
    }

    pub fn weights(&self) -> Vec<f64> {
        self.atoms.iter().map(|a| a.weight).collect()
    }

    /// All weights multiplied by `factor > 0`.
    pub fn scale(&self, factor: f64) -> Self {
        Self {
            atoms: self
                .atoms
                .iter()
                .map(|a| Atom {
                    direction: a.direction.clone(),
                    weight: a.weight * factor,
                })
                .collect(),
        }
    }

    /// Restriction to the atoms whose direction satisfies the predicate.
    pub fn restrict(&self, keep: impl Fn(&[f64]) -> bool) -> Self {
        Self {
            atoms: self
                .atoms
                .iter()
                .filter(|a| keep(&a.direction))
                .cloned()
                .collect(),
        }
    }

    /// `Σ w δ_C(u)^{1/n}`. A finite moment guarantees that the Minkowski
    /// problem has a solution.
    pub fn delta_moment(&self, cone: &PolyCone) -> f64 {
        let n = cone.dim() as f64;
        self.atoms
            .iter()
            .map(|a| a.weight * cone.delta(&a.direction).unwrap_or(0.0).powf(1.0 / n))
            .sum()
    }

    /// Largest relative weight difference against another measure with the
    /// same directions; `None` if the directions differ.
    pub fn max_relative_difference(&self, other: &AtomicMeasure) -> Option<f64> {
        if self.len() != other.len() {
            return None;
        }
        let mut worst = 0.0f64;
        for (a, b) in self.atoms.iter().zip(&other.atoms) {
            if angle(&a.direction, &b.direction) > 1e-9 {
                return None;
            }
            worst = worst.max((a.weight - b.weight).abs() / a.weight.max(b.weight));
        }
        Some(worst)
    }
}

/// `S_{n-1}(K, ·)`: one atom per facet whose normal lies in `int C°`,
/// weighted by the facet's area.
pub fn surface_area_measure(k: &PseudoCone) -> AtomicMeasure {
    let lattice = k.faces();
    let mut atoms = Vec::new();
    for (i, h) in k.facets().iter().enumerate() {
        if !k.cone().polar_interior_contains(&h.normal) {
            continue;
        }
        let face = lattice.facet_face(i).expect("every facet has a face");
        let area = lattice.face_volume(k.polyhedron(), face).value();
        if area > 0.0 {
            atoms.push((h.normal.to_f64(), area));
        }
    }
    AtomicMeasure::new(k.cone(), atoms).expect("facet normals lie in the polar interior")
}
