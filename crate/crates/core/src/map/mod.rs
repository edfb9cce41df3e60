//! Signed rotation systems.
//!
//! A [`CombinatorialMap`] stores darts `0..n`, a cyclic order of darts around
//! each vertex, a fixed-point-free edge involution and a sign per edge. Negative
//! edges reverse the local orientation when traversed, which is enough to
//! describe cellular embeddings on non-orientable surfaces too.

pub(crate) mod canon;
mod cover;
mod curve;
pub(crate) mod cut;
mod faces;
mod surface;

pub use canon::{are_isomorphic, canonical_code, CanonicalCode};
pub use cover::{orientable_double_cover, DoubleCover};
pub use curve::{CurvePoint, EmbeddedCurve, FaceArc, EDGE_PARAM_SCALE};
pub use cut::{cut_along_curve, CutResult, CutSide};
pub use faces::{trace_faces, Face, FaceTrace, Flag};
pub use surface::{surface_info, SurfaceInfo, SurfaceType};

use std::collections::VecDeque;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub type Dart = usize;
pub type VertexId = usize;
pub type EdgeId = usize;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Sign {
    Positive,
    Negative,
}

impl Sign {
    pub fn is_negative(self) -> bool {
        self == Sign::Negative
    }

    pub fn flip(self) -> Sign {
        match self {
            Sign::Positive => Sign::Negative,
            Sign::Negative => Sign::Positive,
        }
    }

    pub fn times(self, other: Sign) -> Sign {
        if self == other {
            Sign::Positive
        } else {
            Sign::Negative
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CombinatorialMap {
    rotations: Vec<Vec<Dart>>,
    pairing: Vec<Dart>,
    signs: Vec<Sign>,
    vertex_of: Vec<VertexId>,
    position: Vec<usize>,
    edge_of: Vec<EdgeId>,
    edge_first: Vec<Dart>,
}

impl CombinatorialMap {
    /// Builds a map from vertex rotations and a list of edges `(a, b, sign)`.
    pub fn new(rotations: Vec<Vec<Dart>>, edges: &[(Dart, Dart, Sign)]) -> Result<Self> {
        let n: usize = rotations.iter().map(Vec::len).sum();
        let mut pairing = vec![usize::MAX; n];
        let mut signs = vec![Sign::Positive; n];
        for &(a, b, s) in edges {
            if a >= n || b >= n {
                return Err(Error::MalformedMap(format!("edge ({a}, {b}) uses an unknown dart")));
            }
            if a == b {
                return Err(Error::MalformedMap(format!("edge pairs dart {a} with itself")));
            }
            if pairing[a] != usize::MAX || pairing[b] != usize::MAX {
                return Err(Error::MalformedMap(format!("dart in edge ({a}, {b}) is paired twice")));
            }
            pairing[a] = b;
            pairing[b] = a;
            signs[a] = s;
            signs[b] = s;
        }
        Self::from_parts(rotations, pairing, signs)
    }

    /// Builds a map from rotations, the pairing as a dart-indexed vector and per-dart signs.
    pub fn from_parts(rotations: Vec<Vec<Dart>>, pairing: Vec<Dart>, signs: Vec<Sign>) -> Result<Self> {
        let n = pairing.len();
        if rotations.is_empty() {
            return Err(Error::MalformedMap("map has no vertices".into()));
        }
        if signs.len() != n {
            return Err(Error::MalformedMap("sign table length differs from dart count".into()));
        }
        let mut vertex_of = vec![usize::MAX; n];
        let mut position = vec![0; n];
        for (v, rot) in rotations.iter().enumerate() {
            if rot.is_empty() {
                return Err(Error::MalformedMap(format!("vertex {v} has an empty rotation")));
            }
            for (i, &d) in rot.iter().enumerate() {
                if d >= n {
                    return Err(Error::MalformedMap(format!("dart {d} out of range")));
                }
                if vertex_of[d] != usize::MAX {
                    return Err(Error::MalformedMap(format!("dart {d} appears in two rotations")));
                }
                vertex_of[d] = v;
                position[d] = i;
            }
        }
        if let Some(d) = vertex_of.iter().position(|&v| v == usize::MAX) {
            return Err(Error::MalformedMap(format!("dart {d} belongs to no vertex")));
        }
        for d in 0..n {
            let p = pairing[d];
            if p >= n {
                return Err(Error::MalformedMap(format!("dart {d} is unpaired")));
            }
            if p == d {
                return Err(Error::MalformedMap(format!("dart {d} is a fixed point of the pairing")));
            }
            if pairing[p] != d {
                return Err(Error::MalformedMap(format!("pairing is not an involution at dart {d}")));
            }
            if signs[p] != signs[d] {
                return Err(Error::MalformedMap(format!("darts {d} and {p} carry different signs")));
            }
        }
        let mut edge_of = vec![usize::MAX; n];
        let mut edge_first = Vec::with_capacity(n / 2);
        for d in 0..n {
            if edge_of[d] == usize::MAX {
                edge_of[d] = edge_first.len();
                edge_of[pairing[d]] = edge_first.len();
                edge_first.push(d);
            }
        }
        Ok(CombinatorialMap { rotations, pairing, signs, vertex_of, position, edge_of, edge_first })
    }

    pub fn dart_count(&self) -> usize {
        self.pairing.len()
    }

    pub fn vertex_count(&self) -> usize {
        self.rotations.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edge_first.len()
    }

    pub fn rotation(&self, v: VertexId) -> &[Dart] {
        &self.rotations[v]
    }

    pub fn rotations(&self) -> &[Vec<Dart>] {
        &self.rotations
    }

    pub fn degree(&self, v: VertexId) -> usize {
        self.rotations[v].len()
    }

    pub fn vertex(&self, d: Dart) -> VertexId {
        self.vertex_of[d]
    }

    /// Index of `d` inside the rotation of its vertex.
    pub fn position(&self, d: Dart) -> usize {
        self.position[d]
    }

    /// The dart `k` steps counterclockwise from `d` around its vertex.
    pub fn rotate(&self, d: Dart, k: isize) -> Dart {
        let rot = &self.rotations[self.vertex_of[d]];
        let len = rot.len() as isize;
        let i = (self.position[d] as isize + k).rem_euclid(len);
        rot[i as usize]
    }

    pub fn next(&self, d: Dart) -> Dart {
        self.rotate(d, 1)
    }

    pub fn prev(&self, d: Dart) -> Dart {
        self.rotate(d, -1)
    }

    pub fn pair(&self, d: Dart) -> Dart {
        self.pairing[d]
    }

    pub fn sign(&self, d: Dart) -> Sign {
        self.signs[d]
    }

    pub fn edge(&self, d: Dart) -> EdgeId {
        self.edge_of[d]
    }

    /// Lowest dart of the edge; edge parameters are measured from its end.
    pub fn edge_first(&self, e: EdgeId) -> Dart {
        self.edge_first[e]
    }

    pub fn edge_darts(&self, e: EdgeId) -> (Dart, Dart) {
        let a = self.edge_first[e];
        (a, self.pairing[a])
    }

    pub fn edge_sign(&self, e: EdgeId) -> Sign {
        self.signs[self.edge_first[e]]
    }

    pub fn edges(&self) -> impl Iterator<Item = (Dart, Dart, Sign)> + '_ {
        self.edge_first.iter().map(move |&a| (a, self.pairing[a], self.signs[a]))
    }

    pub fn has_negative_edges(&self) -> bool {
        self.signs.iter().any(|s| s.is_negative())
    }

    /// Connected components as sorted vertex lists, ordered by least vertex.
    pub fn components(&self) -> Vec<Vec<VertexId>> {
        let mut seen = vec![false; self.vertex_count()];
        let mut out = Vec::new();
        for start in 0..self.vertex_count() {
            if seen[start] {
                continue;
            }
            seen[start] = true;
            let mut comp = vec![start];
            let mut queue = VecDeque::from([start]);
            while let Some(v) = queue.pop_front() {
                for &d in &self.rotations[v] {
                    let w = self.vertex_of[self.pairing[d]];
                    if !seen[w] {
                        seen[w] = true;
                        comp.push(w);
                        queue.push_back(w);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() == 1
    }

    /// Local orientation flips making every edge positive, found by spanning-tree
    /// normalization. `None` when some off-tree edge stays negative.
    pub fn orientation_switches(&self) -> Option<Vec<bool>> {
        let nv = self.vertex_count();
        let mut flip: Vec<Option<bool>> = vec![None; nv];
        for root in 0..nv {
            if flip[root].is_some() {
                continue;
            }
            flip[root] = Some(false);
            let mut queue = VecDeque::from([root]);
            while let Some(v) = queue.pop_front() {
                let fv = flip[v].unwrap();
                for &d in &self.rotations[v] {
                    let w = self.vertex_of[self.pairing[d]];
                    let want = fv ^ self.signs[d].is_negative();
                    match flip[w] {
                        None => {
                            flip[w] = Some(want);
                            queue.push_back(w);
                        }
                        Some(fw) if fw != want => return None,
                        Some(_) => {}
                    }
                }
            }
        }
        Some(flip.into_iter().map(Option::unwrap).collect())
    }

    pub fn is_orientable(&self) -> bool {
        self.orientation_switches().is_some()
    }

    /// Reverses the rotation at every vertex in `flipped` and negates the edges
    /// with exactly one end there. The embedding is unchanged.
    pub fn switch(&self, flipped: &[bool]) -> CombinatorialMap {
        let rotations = self
            .rotations
            .iter()
            .enumerate()
            .map(|(v, rot)| if flipped[v] { reversed_rotation(rot) } else { rot.clone() })
            .collect();
        let signs = (0..self.dart_count())
            .map(|d| {
                let a = flipped[self.vertex_of[d]];
                let b = flipped[self.vertex_of[self.pairing[d]]];
                if a != b {
                    self.signs[d].flip()
                } else {
                    self.signs[d]
                }
            })
            .collect();
        CombinatorialMap::from_parts(rotations, self.pairing.clone(), signs).expect("switch preserves validity")
    }

    /// An equivalent map with all edges positive, if the surface is orientable.
    pub fn normalized(&self) -> Option<CombinatorialMap> {
        self.orientation_switches().map(|f| self.switch(&f))
    }

    /// The same embedding seen from the other side: every rotation reversed.
    pub fn mirror(&self) -> CombinatorialMap {
        let rotations = self.rotations.iter().map(|r| reversed_rotation(r)).collect();
        CombinatorialMap::from_parts(rotations, self.pairing.clone(), self.signs.clone())
            .expect("mirror preserves validity")
    }

    /// Renames dart `d` to `perm[d]`; vertex order follows the renamed least dart.
    pub fn relabel(&self, perm: &[Dart]) -> CombinatorialMap {
        let n = self.dart_count();
        let mut rotations: Vec<Vec<Dart>> =
            self.rotations.iter().map(|r| r.iter().map(|&d| perm[d]).collect()).collect();
        rotations.sort_by_key(|r| *r.iter().min().unwrap());
        let mut pairing = vec![0; n];
        let mut signs = vec![Sign::Positive; n];
        for d in 0..n {
            pairing[perm[d]] = perm[self.pairing[d]];
            signs[perm[d]] = self.signs[d];
        }
        CombinatorialMap::from_parts(rotations, pairing, signs).expect("relabeling preserves validity")
    }
}

/// Reverses a cyclic order while keeping its first element in place.
pub(crate) fn reversed_rotation(rot: &[Dart]) -> Vec<Dart> {
    let mut out = Vec::with_capacity(rot.len());
    out.push(rot[0]);
    out.extend(rot[1..].iter().rev());
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn torus_one() -> CombinatorialMap {
        CombinatorialMap::new(vec![vec![0, 1, 2, 3]], &[(0, 2, Sign::Positive), (1, 3, Sign::Positive)]).unwrap()
    }

    #[test]
    fn rejects_fixed_point_and_double_pairing() {
        assert!(CombinatorialMap::new(vec![vec![0, 1]], &[(0, 0, Sign::Positive)]).is_err());
        assert!(CombinatorialMap::new(vec![vec![0, 1, 2]], &[(0, 1, Sign::Positive), (1, 2, Sign::Positive)]).is_err());
        assert!(CombinatorialMap::new(vec![vec![0, 1, 2, 3]], &[(0, 1, Sign::Positive)]).is_err());
        assert!(CombinatorialMap::new(vec![], &[]).is_err());
        assert!(CombinatorialMap::new(vec![vec![0, 1], vec![]], &[(0, 1, Sign::Positive)]).is_err());
    }

    #[test]
    fn rotation_steps_wrap() {
        let m = torus_one();
        assert_eq!(m.next(3), 0);
        assert_eq!(m.prev(0), 3);
        assert_eq!(m.rotate(1, 2), 3);
        assert_eq!(m.edge_count(), 2);
        assert_eq!(m.edge_darts(1), (1, 3));
    }

    #[test]
    fn klein_edge_breaks_orientability_and_switch_keeps_it() {
        let klein =
            CombinatorialMap::new(vec![vec![0, 1, 2, 3]], &[(0, 2, Sign::Positive), (1, 3, Sign::Negative)]).unwrap();
        assert!(!klein.is_orientable());
        assert!(torus_one().is_orientable());
        let two =
            CombinatorialMap::new(vec![vec![0, 1], vec![2, 3]], &[(0, 2, Sign::Negative), (1, 3, Sign::Negative)])
                .unwrap();
        let flips = two.orientation_switches().unwrap();
        let normal = two.switch(&flips);
        assert!(!normal.has_negative_edges());
    }
}
