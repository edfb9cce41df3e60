//! Simple closed curves on the surface of a map, discretized by face corridors.
//!
//! A curve alternates between points where it meets the graph (an interior
//! point of an edge, or a pass through a vertex between two of its corners) and
//! arcs running through a single face. Faces are open disks, so an arc is
//! determined up to isotopy by the boundary positions of its two ends.

use std::collections::{BTreeMap, HashSet};

use serde::Serialize;

use super::{CombinatorialMap, Dart, EdgeId, FaceTrace, VertexId};
use crate::error::{Error, Result};

/// Edge parameters live in `(0, EDGE_PARAM_SCALE)`, measured from the edge's first dart.
pub const EDGE_PARAM_SCALE: u32 = 1 << 16;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum CurvePoint {
    /// Transverse crossing of an edge interior.
    OnEdge { edge: EdgeId, param: u32 },
    /// Pass through a vertex, arriving in corner `entry` and leaving from corner
    /// `exit` (corners named by the dart preceding them in the rotation).
    AtVertex { vertex: VertexId, entry: Dart, exit: Dart },
}

/// Arc inside `face` from boundary position `from` to boundary position `to`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct FaceArc {
    pub face: usize,
    pub from: usize,
    pub to: usize,
}

/// `arcs[i]` runs from `points[i]` to `points[i + 1]` (cyclically). A curve with
/// no points and a single arc is a contractible loop inside that arc's face.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct EmbeddedCurve {
    points: Vec<CurvePoint>,
    arcs: Vec<FaceArc>,
}

/// One chord of a face: the two ends as boundary keys.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) struct Chord {
    pub arc: usize,
    pub start: u64,
    pub end: u64,
}

impl EmbeddedCurve {
    pub fn new(points: Vec<CurvePoint>, arcs: Vec<FaceArc>) -> Self {
        EmbeddedCurve { points, arcs }
    }

    pub fn contractible(face: usize) -> Self {
        EmbeddedCurve { points: Vec::new(), arcs: vec![FaceArc { face, from: 0, to: 0 }] }
    }

    pub fn is_contractible_loop(&self) -> bool {
        self.points.is_empty()
    }

    pub fn points(&self) -> &[CurvePoint] {
        &self.points
    }

    pub fn arcs(&self) -> &[FaceArc] {
        &self.arcs
    }

    /// Number of points where the curve meets the graph.
    pub fn crossing_count(&self) -> usize {
        self.points.len()
    }

    /// Boundary key of the end of an arc at `pos` touching `point`.
    fn key(map: &CombinatorialMap, trace: &FaceTrace, face: usize, pos: usize, point: &CurvePoint) -> u64 {
        let offset = match *point {
            CurvePoint::OnEdge { param, .. } => trace.edge_offset(map, face, pos, param),
            CurvePoint::AtVertex { .. } => 0,
        };
        pos as u64 * EDGE_PARAM_SCALE as u64 + offset as u64
    }

    /// Chords grouped by face, with boundary keys for both ends.
    pub(crate) fn chords(&self, map: &CombinatorialMap, trace: &FaceTrace) -> BTreeMap<usize, Vec<Chord>> {
        let mut out: BTreeMap<usize, Vec<Chord>> = BTreeMap::new();
        let n = self.points.len();
        for (i, arc) in self.arcs.iter().enumerate() {
            let start = Self::key(map, trace, arc.face, arc.from, &self.points[i]);
            let end = Self::key(map, trace, arc.face, arc.to, &self.points[(i + 1) % n]);
            out.entry(arc.face).or_default().push(Chord { arc: i, start, end });
        }
        out
    }

    /// Checks incidences and simplicity against the map's face trace.
    pub fn validate(&self, map: &CombinatorialMap, trace: &FaceTrace) -> Result<()> {
        let bad = |msg: String| Err(Error::InvalidCurve(msg));
        if self.points.is_empty() {
            if self.arcs.len() != 1 || self.arcs[0].face >= trace.face_count() {
                return bad("a curve without crossing points must be a single loop in an existing face".into());
            }
            return Ok(());
        }
        let n = self.points.len();
        if self.arcs.len() != n {
            return bad(format!("{} points but {} arcs", n, self.arcs.len()));
        }
        for arc in &self.arcs {
            if arc.face >= trace.face_count() {
                return bad(format!("face {} does not exist", arc.face));
            }
            let deg = trace.faces[arc.face].degree();
            if arc.from >= deg || arc.to >= deg {
                return bad(format!("boundary position out of range in face {}", arc.face));
            }
        }
        let mut seen_edges = HashSet::new();
        let mut seen_vertices = HashSet::new();
        for (i, point) in self.points.iter().enumerate() {
            let leaving = self.arcs[i];
            let arriving = self.arcs[(i + n - 1) % n];
            match *point {
                CurvePoint::OnEdge { edge, param } => {
                    if edge >= map.edge_count() {
                        return bad(format!("edge {edge} does not exist"));
                    }
                    if param == 0 || param >= EDGE_PARAM_SCALE {
                        return bad(format!("edge parameter {param} is not interior"));
                    }
                    if !seen_edges.insert((edge, param)) {
                        return bad(format!("edge point ({edge}, {param}) is used twice"));
                    }
                    if trace.edge_at(map, leaving.face, leaving.from) != edge
                        || trace.edge_at(map, arriving.face, arriving.to) != edge
                    {
                        return bad(format!("arcs around point {i} do not touch edge {edge}"));
                    }
                    if trace.across(map, arriving.face, arriving.to) != (leaving.face, leaving.from) {
                        return bad(format!("curve does not cross edge {edge} at point {i}"));
                    }
                }
                CurvePoint::AtVertex { vertex, entry, exit } => {
                    if vertex >= map.vertex_count() || map.vertex(entry) != vertex || map.vertex(exit) != vertex {
                        return bad(format!("corners of point {i} are not at vertex {vertex}"));
                    }
                    if entry == exit {
                        return bad(format!("point {i} enters and leaves through the same corner"));
                    }
                    if !seen_vertices.insert(vertex) {
                        return bad(format!("vertex {vertex} is visited twice"));
                    }
                    if trace.corner_at(map, leaving.face, leaving.from) != exit
                        || trace.corner_at(map, arriving.face, arriving.to) != entry
                    {
                        return bad(format!("arcs around point {i} do not reach its corners"));
                    }
                }
            }
        }
        for (face, chords) in self.chords(map, trace) {
            let mut keys = HashSet::new();
            for c in &chords {
                if !keys.insert(c.start) || !keys.insert(c.end) {
                    return bad(format!("two arc ends coincide in face {face}"));
                }
            }
            for (i, a) in chords.iter().enumerate() {
                for b in &chords[i + 1..] {
                    if interleave(a, b) {
                        return bad(format!("arcs {} and {} cross inside face {face}", a.arc, b.arc));
                    }
                }
            }
        }
        Ok(())
    }
}

fn interleave(a: &Chord, b: &Chord) -> bool {
    let (lo, hi) = if a.start < a.end { (a.start, a.end) } else { (a.end, a.start) };
    let inside = |k: u64| lo < k && k < hi;
    inside(b.start) != inside(b.end)
}
