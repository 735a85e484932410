use std::collections::{HashMap, HashSet, VecDeque};

use super::volume::{exact_volume_of_simplices, ExactVolume};
use super::Polyhedron;
use crate::linalg::{independent_subset, QVec};
use num::traits::Zero;

/// Nonempty proper face of a polyhedron, described by the facets that are
/// tight on it and by the generators it contains.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Face {
    pub dim: usize,
    /// Indices into [`Polyhedron::facets`] of the halfspaces tight on the face.
    pub active_set: Vec<usize>,
    /// Indices into [`Polyhedron::vertices`].
    pub vertex_ids: Vec<usize>,
    /// Indices into [`Polyhedron::rays`].
    pub ray_ids: Vec<usize>,
    pub vertices: Vec<QVec>,
    pub rays: Vec<QVec>,
    pub bounded: bool,
}

impl Face {
    pub fn ambient_dim(&self) -> usize {
        self.vertices[0].dim()
    }

    /// Inclusion of faces of the same polyhedron.
    pub fn is_subface_of(&self, other: &Face) -> bool {
        self.vertex_ids.iter().all(|v| other.vertex_ids.contains(v))
            && self.ray_ids.iter().all(|r| other.ray_ids.contains(r))
    }

    /// Mean of the vertices plus the mean of the rays: a point in the
    /// relative interior.
    pub fn relative_interior_point(&self) -> QVec {
        let mut z = QVec::mean(&self.vertices).expect("face has a vertex");
        if let Some(r) = QVec::mean(&self.rays) {
            z = &z + &r;
        }
        z
    }

    /// Basis of the linear space parallel to the affine hull.
    pub fn direction_basis(&self) -> Vec<QVec> {
        direction_basis(&self.vertices, &self.rays)
    }
}

pub(crate) fn direction_basis(vertices: &[QVec], rays: &[QVec]) -> Vec<QVec> {
    let v0 = &vertices[0];
    let mut dirs: Vec<QVec> = vertices[1..].iter().map(|v| v - v0).collect();
    dirs.extend(rays.iter().cloned());
    let n = v0.dim();
    independent_subset(&dirs, n)
        .into_iter()
        .map(|i| dirs[i].clone())
        .collect()
}

/// All nonempty proper faces of a polyhedron, sorted by dimension and then
/// by generator indices.
#[derive(Clone, Debug)]
pub struct FaceLattice {
    faces: Vec<Face>,
    vertex_count: usize,
    ray_count: usize,
    affine_dim: usize,
}

fn incidence(p: &Polyhedron) -> (Vec<Vec<bool>>, Vec<Vec<bool>>) {
    let vert: Vec<Vec<bool>> = p
        .facets()
        .iter()
        .map(|h| p.vertices().iter().map(|v| h.is_tight(v)).collect())
        .collect();
    let ray: Vec<Vec<bool>> = p
        .facets()
        .iter()
        .map(|h| {
            p.rays()
                .iter()
                .map(|r| r.dot(&h.normal).is_zero())
                .collect()
        })
        .collect();
    (vert, ray)
}

impl FaceLattice {
    pub fn new(p: &Polyhedron) -> Self {
        let (vin, rin) = incidence(p);
        let nf = p.facets().len();
        let nv = p.vertices().len();
        let nr = p.rays().len();

        let closure = |vs: &[usize], rs: &[usize]| -> (Vec<usize>, Vec<usize>, Vec<usize>) {
            let active: Vec<usize> = (0..nf)
                .filter(|&f| vs.iter().all(|&v| vin[f][v]) && rs.iter().all(|&r| rin[f][r]))
                .collect();
            let cv = (0..nv)
                .filter(|&v| active.iter().all(|&f| vin[f][v]))
                .collect();
            let cr = (0..nr)
                .filter(|&r| active.iter().all(|&f| rin[f][r]))
                .collect();
            (active, cv, cr)
        };

        let mut seen: HashSet<(Vec<usize>, Vec<usize>)> = HashSet::new();
        let mut found: Vec<(Vec<usize>, Vec<usize>, Vec<usize>)> = Vec::new();
        let mut queue = VecDeque::new();
        for f in 0..nf {
            let vs: Vec<usize> = (0..nv).filter(|&v| vin[f][v]).collect();
            let rs: Vec<usize> = (0..nr).filter(|&r| rin[f][r]).collect();
            queue.push_back((vs, rs));
        }
        while let Some((vs, rs)) = queue.pop_front() {
            if vs.is_empty() {
                continue;
            }
            let (active, cv, cr) = closure(&vs, &rs);
            if active.is_empty() || !seen.insert((cv.clone(), cr.clone())) {
                continue;
            }
            for g in 0..nf {
                if active.contains(&g) {
                    continue;
                }
                let nvs: Vec<usize> = cv.iter().copied().filter(|&v| vin[g][v]).collect();
                let nrs: Vec<usize> = cr.iter().copied().filter(|&r| rin[g][r]).collect();
                if !nvs.is_empty() {
                    queue.push_back((nvs, nrs));
                }
            }
            found.push((active, cv, cr));
        }

        let mut faces: Vec<Face> = found
            .into_iter()
            .map(|(active_set, vertex_ids, ray_ids)| {
                let vertices: Vec<QVec> = vertex_ids
                    .iter()
                    .map(|&i| p.vertices()[i].clone())
                    .collect();
                let rays: Vec<QVec> = ray_ids.iter().map(|&i| p.rays()[i].clone()).collect();
                let dim = Polyhedron::generator_dim(&vertices, &rays);
                Face {
                    dim,
                    active_set,
                    bounded: rays.is_empty(),
                    vertex_ids,
                    ray_ids,
                    vertices,
                    rays,
                }
            })
            .collect();
        faces.sort_by(|a, b| {
            (a.dim, &a.vertex_ids, &a.ray_ids).cmp(&(b.dim, &b.vertex_ids, &b.ray_ids))
        });
        FaceLattice {
            faces,
            vertex_count: nv,
            ray_count: nr,
            affine_dim: p.affine_dim(),
        }
    }

    pub fn faces(&self) -> &[Face] {
        &self.faces
    }

    pub fn len(&self) -> usize {
        self.faces.len()
    }

    pub fn is_empty(&self) -> bool {
        self.faces.is_empty()
    }

    pub fn of_dim(&self, dim: usize) -> impl Iterator<Item = (usize, &Face)> {
        self.faces
            .iter()
            .enumerate()
            .filter(move |(_, f)| f.dim == dim)
    }

    /// Counts of `(bounded, unbounded)` faces of the given dimension.
    pub fn counts(&self, dim: usize) -> (usize, usize) {
        let b = self.of_dim(dim).filter(|(_, f)| f.bounded).count();
        let u = self.of_dim(dim).filter(|(_, f)| !f.bounded).count();
        (b, u)
    }

    /// Index of the face with exactly these generator indices.
    pub fn find(&self, vertex_ids: &[usize], ray_ids: &[usize]) -> Option<usize> {
        self.faces
            .iter()
            .position(|f| f.vertex_ids == vertex_ids && f.ray_ids == ray_ids)
    }

    /// Faces of dimension one less contained in the given face.
    pub fn children(&self, idx: usize) -> Vec<usize> {
        let f = &self.faces[idx];
        self.faces
            .iter()
            .enumerate()
            .filter(|(_, g)| g.dim + 1 == f.dim && g.is_subface_of(f))
            .map(|(i, _)| i)
            .collect()
    }

    /// The facet of the polyhedron supported by halfspace `facet`, if any.
    pub fn facet_face(&self, facet: usize) -> Option<usize> {
        self.faces
            .iter()
            .position(|f| f.dim + 1 == self.affine_dim && f.active_set.contains(&facet))
    }

    fn pulling(
        &self,
        idx: Option<usize>,
        memo: &mut HashMap<Option<usize>, Vec<Vec<usize>>>,
    ) -> Vec<Vec<usize>> {
        if let Some(s) = memo.get(&idx) {
            return s.clone();
        }
        let (dim, vertex_ids, children): (usize, Vec<usize>, Vec<usize>) = match idx {
            Some(i) => (
                self.faces[i].dim,
                self.faces[i].vertex_ids.clone(),
                self.children(i),
            ),
            None => (
                self.affine_dim,
                (0..self.vertex_count).collect(),
                self.of_dim(self.affine_dim.wrapping_sub(1))
                    .map(|(i, _)| i)
                    .collect(),
            ),
        };
        let result = if dim == 0 {
            vec![vec![vertex_ids[0]]]
        } else {
            let apex = vertex_ids[0];
            let mut out = Vec::new();
            for c in children {
                if self.faces[c].vertex_ids.contains(&apex) {
                    continue;
                }
                for s in self.pulling(Some(c), memo) {
                    let mut simplex = vec![apex];
                    simplex.extend(s);
                    out.push(simplex);
                }
            }
            out
        };
        memo.insert(idx, result.clone());
        result
    }

    /// Pulling triangulation of a bounded face, as lists of vertex indices.
    pub fn triangulate(&self, idx: usize) -> Vec<Vec<usize>> {
        self.pulling(Some(idx), &mut HashMap::new())
    }

    /// Exact volume of a bounded face in its own affine hull.
    pub fn face_volume(&self, p: &Polyhedron, idx: usize) -> ExactVolume {
        let f = &self.faces[idx];
        assert!(f.bounded, "volume of an unbounded face");
        if f.dim == 0 {
            return ExactVolume::point();
        }
        let simplices = self.triangulate(idx);
        exact_volume_of_simplices(p.vertices(), &f.vertex_ids, &simplices, f.dim)
    }

    /// Exact volume of the bounded polyhedron this lattice was built from.
    pub fn polyhedron_volume(&self, p: &Polyhedron) -> ExactVolume {
        assert_eq!(self.ray_count, 0, "volume of an unbounded polyhedron");
        if self.affine_dim == 0 {
            return ExactVolume::point();
        }
        let simplices = self.pulling(None, &mut HashMap::new());
        let ids: Vec<usize> = (0..self.vertex_count).collect();
        exact_volume_of_simplices(p.vertices(), &ids, &simplices, self.affine_dim)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::{rat, Halfspace, Rational};
    use num::traits::One;

    fn hs(normal: &[i64], offset: i64) -> Halfspace {
        Halfspace::new(QVec::from_ints(normal), rat(offset))
    }

    #[test]
    fn k1_lattice() {
        let p = Polyhedron::from_halfspaces(
            2,
            vec![hs(&[-1, 0], 0), hs(&[0, -1], 0), hs(&[-1, -1], -1)],
        )
        .unwrap();
        let l = p.face_lattice();
        assert_eq!(l.counts(0), (2, 0));
        assert_eq!(l.counts(1), (1, 2));
        assert_eq!(l.len(), 5);
    }

    #[test]
    fn orthant_lattice() {
        let p = Polyhedron::from_halfspaces(2, vec![hs(&[-1, 0], 0), hs(&[0, -1], 0)]).unwrap();
        let l = p.face_lattice();
        assert_eq!(l.counts(0), (1, 0));
        assert_eq!(l.counts(1), (0, 2));
    }

    #[test]
    fn cut_orthant_in_three_dimensions() {
        let p = Polyhedron::from_halfspaces(
            3,
            vec![
                hs(&[-1, 0, 0], 0),
                hs(&[0, -1, 0], 0),
                hs(&[0, 0, -1], 0),
                hs(&[-1, -1, -1], -1),
            ],
        )
        .unwrap();
        let l = p.face_lattice();
        assert_eq!(l.counts(0), (3, 0));
        assert_eq!(l.counts(1), (3, 3));
        assert_eq!(l.counts(2), (1, 3));
        // Every edge lies in exactly two facets.
        for (i, _) in l.of_dim(1) {
            let parents = l
                .faces()
                .iter()
                .filter(|g| g.dim == 2 && l.faces()[i].is_subface_of(g))
                .count();
            assert_eq!(parents, 2);
        }
    }

    #[test]
    fn cube_volume_and_triangulation() {
        let mut hsps = Vec::new();
        for i in 0..3 {
            let mut e = [0i64; 3];
            e[i] = 1;
            hsps.push(hs(&e, 1));
            e[i] = -1;
            hsps.push(hs(&e, 0));
        }
        let p = Polyhedron::from_halfspaces(3, hsps).unwrap();
        let l = p.face_lattice();
        assert_eq!(l.counts(2), (6, 0));
        assert!((p.volume().unwrap() - 1.0).abs() < 1e-12);
        assert_eq!(p.exact_volume().unwrap().coeff(), &Rational::one());
    }
}
