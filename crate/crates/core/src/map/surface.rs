use serde::{Deserialize, Serialize};

use super::{trace_faces, CombinatorialMap};

/// Topological type of a closed connected surface: orientable genus, or the
/// cross-cap number for non-orientable surfaces.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SurfaceType {
    pub genus: u64,
    pub orientable: bool,
}

impl SurfaceType {
    pub fn euler_char(self) -> i64 {
        if self.orientable {
            2 - 2 * self.genus as i64
        } else {
            2 - self.genus as i64
        }
    }

    pub fn is_sphere(self) -> bool {
        self.orientable && self.genus == 0
    }

    pub fn is_projective_plane(self) -> bool {
        !self.orientable && self.genus == 1
    }
}

impl std::fmt::Display for SurfaceType {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match (self.orientable, self.genus) {
            (true, 0) => write!(f, "sphere"),
            (true, 1) => write!(f, "torus"),
            (true, g) => write!(f, "orientable surface of genus {g}"),
            (false, 1) => write!(f, "projective plane"),
            (false, 2) => write!(f, "Klein bottle"),
            (false, k) => write!(f, "non-orientable surface with {k} cross-caps"),
        }
    }
}

/// The closed surface a map is cellularly embedded in.
///
/// For disconnected maps `genus` is the sum over components and `orientable`
/// holds when every component is orientable.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct SurfaceInfo {
    pub euler_char: i64,
    pub orientable: bool,
    pub genus: u64,
    pub vertex_count: usize,
    pub edge_count: usize,
    pub face_count: usize,
    pub components: usize,
}

impl SurfaceInfo {
    pub fn surface_type(&self) -> SurfaceType {
        SurfaceType { genus: self.genus, orientable: self.orientable }
    }

    pub fn is_sphere(&self) -> bool {
        self.components == 1 && self.surface_type().is_sphere()
    }

    pub fn is_projective_plane(&self) -> bool {
        self.components == 1 && self.surface_type().is_projective_plane()
    }
}

pub fn surface_info(map: &CombinatorialMap) -> SurfaceInfo {
    let faces = trace_faces(map).face_count();
    let v = map.vertex_count();
    let e = map.edge_count();
    let euler_char = v as i64 - e as i64 + faces as i64;
    let components = map.components().len();
    let orientable = map.is_orientable();
    let deficit = 2 * components as i64 - euler_char;
    let genus = if orientable { deficit / 2 } else { deficit };
    SurfaceInfo {
        euler_char,
        orientable,
        genus: genus.max(0) as u64,
        vertex_count: v,
        edge_count: e,
        face_count: faces,
        components,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::map::Sign;

    #[test]
    fn torus_and_klein_bottle() {
        let torus =
            CombinatorialMap::new(vec![vec![0, 1, 2, 3]], &[(0, 2, Sign::Positive), (1, 3, Sign::Positive)]).unwrap();
        let s = surface_info(&torus);
        assert_eq!((s.euler_char, s.orientable, s.genus), (0, true, 1));
        let klein =
            CombinatorialMap::new(vec![vec![0, 1, 2, 3]], &[(0, 2, Sign::Positive), (1, 3, Sign::Negative)]).unwrap();
        let s = surface_info(&klein);
        assert_eq!((s.euler_char, s.orientable, s.genus), (0, false, 2));
        assert_eq!(s.surface_type().to_string(), "Klein bottle");
    }

    #[test]
    fn planar_figure_eight_curve_is_sphere() {
        // one vertex, two loops at adjacent darts
        let m =
            CombinatorialMap::new(vec![vec![0, 1, 2, 3]], &[(0, 1, Sign::Positive), (2, 3, Sign::Positive)]).unwrap();
        let s = surface_info(&m);
        assert_eq!((s.euler_char, s.face_count), (2, 3));
        assert!(s.is_sphere());
    }

    #[test]
    fn declared_types_have_expected_characteristic() {
        assert_eq!(SurfaceType { genus: 2, orientable: true }.euler_char(), -2);
        assert_eq!(SurfaceType { genus: 3, orientable: false }.euler_char(), -1);
        assert!(SurfaceType { genus: 1, orientable: false }.is_projective_plane());
    }
}
