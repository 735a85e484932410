use super::dd::cone_generators;
use crate::linalg::{rref, QVec};
use num::traits::Signed;
use num::traits::Zero;

/// Polyhedral cone that may contain lines, kept in both descriptions:
/// `pos(rays) + span(lineality) = {x : <x,a> <= 0 for a in inequalities,
/// <x,e> = 0 for e in equalities}`.
#[derive(Clone, Debug)]
pub struct LinCone {
    dim: usize,
    lineality: Vec<QVec>,
    rays: Vec<QVec>,
    inequalities: Vec<QVec>,
    equalities: Vec<QVec>,
}

fn with_negations(rows: &[QVec], lines: &[QVec]) -> Vec<QVec> {
    let mut all = rows.to_vec();
    for l in lines {
        all.push(l.clone());
        all.push(-l);
    }
    all
}

fn canonical(mut rays: Vec<QVec>) -> Vec<QVec> {
    rays = rays.iter().map(QVec::primitive).collect();
    rays.sort();
    rays.dedup();
    rays
}

impl LinCone {
    /// `pos(rays) + span(lineality)`.
    pub fn from_generators(dim: usize, rays: &[QVec], lineality: &[QVec]) -> Self {
        let polar = cone_generators(&with_negations(rays, lineality), dim);
        Self::from_constraints(dim, &polar.rays, &polar.lineality)
    }

    /// `{x : <x,a> <= 0, <x,e> = 0}`.
    pub fn from_constraints(dim: usize, inequalities: &[QVec], equalities: &[QVec]) -> Self {
        let gens = cone_generators(&with_negations(inequalities, equalities), dim);
        let polar = cone_generators(&with_negations(&gens.rays, &gens.lineality), dim);
        Self {
            dim,
            lineality: rref(&gens.lineality, dim).0,
            rays: canonical(gens.rays),
            inequalities: canonical(polar.rays),
            equalities: rref(&polar.lineality, dim).0,
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn rays(&self) -> &[QVec] {
        &self.rays
    }

    pub fn lineality(&self) -> &[QVec] {
        &self.lineality
    }

    pub fn inequalities(&self) -> &[QVec] {
        &self.inequalities
    }

    pub fn equalities(&self) -> &[QVec] {
        &self.equalities
    }

    pub fn contains(&self, x: &QVec) -> bool {
        self.inequalities.iter().all(|a| !x.dot(a).is_positive())
            && self.equalities.iter().all(|e| x.dot(e).is_zero())
    }

    /// `{y : <y, x> <= 0 for all x in the cone}`.
    pub fn polar(&self) -> LinCone {
        LinCone {
            dim: self.dim,
            lineality: self.equalities.clone(),
            rays: self.inequalities.clone(),
            inequalities: self.rays.clone(),
            equalities: self.lineality.clone(),
        }
    }

    /// Set equality, decided by mutual containment of generators.
    pub fn same_set(&self, other: &LinCone) -> bool {
        let inside = |a: &LinCone, b: &LinCone| {
            a.rays.iter().all(|r| b.contains(r))
                && a.lineality.iter().all(|l| b.contains(l) && b.contains(&-l))
        };
        self.dim == other.dim && inside(self, other) && inside(other, self)
    }
}

impl PartialEq for LinCone {
    fn eq(&self, other: &Self) -> bool {
        self.same_set(other)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn halfplane_and_polar() {
        let h = LinCone::from_constraints(2, &[QVec::from_ints(&[0, -1])], &[]);
        assert_eq!(h.lineality().len(), 1);
        assert_eq!(h.rays(), &[QVec::from_ints(&[0, 1])]);
        let p = h.polar();
        assert_eq!(
            p,
            LinCone::from_generators(2, &[QVec::from_ints(&[0, -1])], &[])
        );
        assert_eq!(p.polar(), h);
    }

    #[test]
    fn different_cones_differ() {
        let a = LinCone::from_generators(
            2,
            &[QVec::from_ints(&[1, 0]), QVec::from_ints(&[0, 1])],
            &[],
        );
        let b = LinCone::from_generators(
            2,
            &[QVec::from_ints(&[1, 0]), QVec::from_ints(&[1, 1])],
            &[],
        );
        assert_ne!(a, b);
        assert_eq!(
            a.polar(),
            LinCone::from_constraints(
                2,
                &[QVec::from_ints(&[0, 1]), QVec::from_ints(&[1, 0])],
                &[]
            )
        );
    }
}
