use super::{CombinatorialMap, Dart, EdgeId};
use crate::map::curve::EDGE_PARAM_SCALE;

/// One step of a face boundary walk: leave the current vertex along `dart`,
/// with the local orientation at that vertex taken as-is (`forward`) or reversed.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Flag {
    pub dart: Dart,
    pub forward: bool,
}

impl Flag {
    pub fn new(dart: Dart, forward: bool) -> Self {
        Flag { dart, forward }
    }

    fn index(self) -> usize {
        2 * self.dart + usize::from(!self.forward)
    }

    /// Follow the edge, then turn to the next dart around the far vertex.
    pub fn step(self, map: &CombinatorialMap) -> Flag {
        let arrival = map.pair(self.dart);
        let forward = self.forward ^ map.sign(self.dart).is_negative();
        let dart = if forward { map.next(arrival) } else { map.prev(arrival) };
        Flag { dart, forward }
    }

    /// The same edge side traversed in the opposite direction.
    pub fn reverse(self, map: &CombinatorialMap) -> Flag {
        Flag { dart: map.pair(self.dart), forward: !(self.forward ^ map.sign(self.dart).is_negative()) }
    }

    /// Which of the two sides of its edge this flag runs along (0 or 1).
    pub fn side(self, map: &CombinatorialMap) -> usize {
        let first = map.edge_first(map.edge(self.dart));
        let canonical = if self.dart == first { self.forward } else { self.reverse(map).forward };
        usize::from(!canonical)
    }
}

/// A face boundary walk, one flag per edge side on the boundary.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Face {
    pub steps: Vec<Flag>,
}

impl Face {
    pub fn degree(&self) -> usize {
        self.steps.len()
    }
}

/// All faces of a map together with lookup tables from edge sides and vertex
/// corners to boundary positions.
#[derive(Debug, Clone)]
pub struct FaceTrace {
    pub faces: Vec<Face>,
    side_position: Vec<[(usize, usize); 2]>,
    corner_position: Vec<(usize, usize)>,
    flag_position: Vec<Option<(usize, usize)>>,
}

impl FaceTrace {
    pub fn face_count(&self) -> usize {
        self.faces.len()
    }

    pub fn degrees(&self) -> Vec<usize> {
        self.faces.iter().map(Face::degree).collect()
    }

    pub fn flag(&self, face: usize, pos: usize) -> Flag {
        self.faces[face].steps[pos]
    }

    pub fn edge_at(&self, map: &CombinatorialMap, face: usize, pos: usize) -> EdgeId {
        map.edge(self.flag(face, pos).dart)
    }

    /// Boundary position `(face, pos)` of the given side of an edge.
    pub fn side_position(&self, edge: EdgeId, side: usize) -> (usize, usize) {
        self.side_position[edge][side]
    }

    /// Boundary position of the opposite side of the edge traversed at `(face, pos)`.
    pub fn across(&self, map: &CombinatorialMap, face: usize, pos: usize) -> (usize, usize) {
        let flag = self.flag(face, pos);
        let e = map.edge(flag.dart);
        self.side_position[e][1 - flag.side(map)]
    }

    /// Position of a flag inside the chosen face walks, when it was chosen.
    pub fn flag_position(&self, flag: Flag) -> Option<(usize, usize)> {
        self.flag_position[flag.index()]
    }

    /// The corner passed just before step `pos`, named by the dart `x` such that
    /// the corner lies between `x` and its rotation successor.
    pub fn corner_at(&self, map: &CombinatorialMap, face: usize, pos: usize) -> Dart {
        let steps = &self.faces[face].steps;
        let here = steps[pos];
        let prev = steps[(pos + steps.len() - 1) % steps.len()];
        if here.forward {
            map.pair(prev.dart)
        } else {
            here.dart
        }
    }

    /// Boundary position at which the corner after dart `x` is visited.
    pub fn corner_position(&self, x: Dart) -> (usize, usize) {
        self.corner_position[x]
    }

    /// Offset along the boundary step `(face, pos)` of the edge point with
    /// parameter `t`, measured from the edge's first dart.
    pub fn edge_offset(&self, map: &CombinatorialMap, face: usize, pos: usize, t: u32) -> u32 {
        let d = self.flag(face, pos).dart;
        if map.edge_first(map.edge(d)) == d {
            t
        } else {
            EDGE_PARAM_SCALE - t
        }
    }
}

/// Traces every face of the map. Forward flags are preferred as orbit starts, so
/// an all-positive map yields the usual counterclockwise face walks.
pub fn trace_faces(map: &CombinatorialMap) -> FaceTrace {
    let n = map.dart_count();
    let mut visited = vec![false; 2 * n];
    let mut flag_position = vec![None; 2 * n];
    let mut faces = Vec::new();
    let starts = (0..n).map(|d| Flag::new(d, true)).chain((0..n).map(|d| Flag::new(d, false)));
    for start in starts {
        if visited[start.index()] {
            continue;
        }
        let face_id = faces.len();
        let mut steps = Vec::new();
        let mut f = start;
        loop {
            visited[f.index()] = true;
            flag_position[f.index()] = Some((face_id, steps.len()));
            steps.push(f);
            f = f.step(map);
            if f == start {
                break;
            }
        }
        for s in &steps {
            visited[s.reverse(map).index()] = true;
        }
        faces.push(Face { steps });
    }

    let mut side_position = vec![[(usize::MAX, usize::MAX); 2]; map.edge_count()];
    let mut corner_position = vec![(usize::MAX, usize::MAX); n];
    let mut trace = FaceTrace { faces, side_position: Vec::new(), corner_position: Vec::new(), flag_position };
    for (fi, face) in trace.faces.iter().enumerate() {
        for (p, flag) in face.steps.iter().enumerate() {
            side_position[map.edge(flag.dart)][flag.side(map)] = (fi, p);
            let x = trace.corner_at(map, fi, p);
            corner_position[x] = (fi, p);
        }
    }
    trace.side_position = side_position;
    trace.corner_position = corner_position;
    trace
}
