//! Cutting a surface along an embedded curve.
//!
//! The curve's arcs split faces into sub-faces; edges crossed by the curve split
//! into segments. Sub-faces glued along uncut edge segments and around vertices
//! off the curve form the pieces of the cut surface, and each piece's Euler
//! characteristic is counted with the curve copies on its boundary.

use std::collections::BTreeMap;

use serde::Serialize;

use super::curve::{Chord, EDGE_PARAM_SCALE};
use super::{trace_faces, CombinatorialMap, CurvePoint, Dart, EmbeddedCurve, FaceTrace, VertexId};
use crate::error::Result;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CutSide {
    /// Euler characteristic of the piece, including its boundary.
    pub euler_char: i64,
    /// Vertices of the map lying in this piece (vertices on the curve excluded).
    pub vertices: Vec<VertexId>,
    /// Faces of the map untouched by the curve and lying in this piece.
    pub faces: Vec<usize>,
    /// Number of edge segments (pieces of edges between vertices and curve points).
    pub segments: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CutResult {
    pub separates: bool,
    pub sides: Vec<CutSide>,
}

impl CutResult {
    pub fn bounds_disk(&self) -> bool {
        self.disk_sides().next().is_some()
    }

    /// Sides that are disks, when the curve separates.
    pub fn disk_sides(&self) -> impl Iterator<Item = &CutSide> {
        let sep = self.separates;
        self.sides.iter().filter(move |s| sep && s.euler_char == 1)
    }
}

struct UnionFind(Vec<usize>);

impl UnionFind {
    fn find(&mut self, x: usize) -> usize {
        let mut r = x;
        while self.0[r] != r {
            r = self.0[r];
        }
        let mut y = x;
        while self.0[y] != r {
            let next = self.0[y];
            self.0[y] = r;
            y = next;
        }
        r
    }

    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            self.0[ra.max(rb)] = ra.min(rb);
        }
    }
}

/// Sub-face layout of one face.
enum FaceRegions {
    Whole(usize),
    Split { keys: Vec<u64>, interval_region: Vec<usize> },
}

impl FaceRegions {
    fn region(&self, key: u64) -> usize {
        match self {
            FaceRegions::Whole(r) => *r,
            FaceRegions::Split { keys, interval_region } => {
                let j = match keys.partition_point(|&k| k < key) {
                    0 => keys.len() - 1,
                    p => p - 1,
                };
                interval_region[j]
            }
        }
    }
}

pub fn cut_along_curve(map: &CombinatorialMap, curve: &EmbeddedCurve) -> Result<CutResult> {
    let trace = trace_faces(map);
    cut_with_trace(map, &trace, curve)
}

pub(crate) fn cut_with_trace(map: &CombinatorialMap, trace: &FaceTrace, curve: &EmbeddedCurve) -> Result<CutResult> {
    curve.validate(map, trace)?;
    if curve.is_contractible_loop() {
        return Ok(cut_contractible(map, trace, curve.arcs()[0].face));
    }
    let scale = EDGE_PARAM_SCALE as u64;

    // sub-faces
    let chords = curve.chords(map, trace);
    let mut layouts = Vec::with_capacity(trace.face_count());
    let mut chord_sides: Vec<usize> = Vec::new();
    let mut region_face: Vec<usize> = Vec::new();
    for f in 0..trace.face_count() {
        match chords.get(&f) {
            None => {
                layouts.push(FaceRegions::Whole(chord_sides.len()));
                chord_sides.push(0);
                region_face.push(f);
            }
            Some(cs) => {
                let (layout, sides) = split_face(cs, chord_sides.len());
                for s in sides {
                    chord_sides.push(s);
                    region_face.push(f);
                }
                layouts.push(layout);
            }
        }
    }
    let region_count = chord_sides.len();
    let mut uf = UnionFind((0..region_count).collect());

    // edge segments
    let mut params: BTreeMap<usize, Vec<u32>> = BTreeMap::new();
    let mut on_curve = vec![None; map.vertex_count()];
    for (i, p) in curve.points().iter().enumerate() {
        match *p {
            CurvePoint::OnEdge { edge, param } => params.entry(edge).or_default().push(param),
            CurvePoint::AtVertex { vertex, .. } => on_curve[vertex] = Some(i),
        }
    }
    for ps in params.values_mut() {
        ps.sort_unstable();
    }
    // segment_region[e] lists the region of each segment of edge e, from its first dart
    let mut segment_region: Vec<Vec<usize>> = Vec::with_capacity(map.edge_count());
    for e in 0..map.edge_count() {
        let cuts = params.get(&e).map(Vec::as_slice).unwrap_or(&[]);
        let mut bounds = vec![0u32];
        bounds.extend_from_slice(cuts);
        bounds.push(EDGE_PARAM_SCALE);
        let mut regs = Vec::with_capacity(bounds.len() - 1);
        for w in bounds.windows(2) {
            let mid = w[0] + (w[1] - w[0]) / 2;
            let mut here = [0usize; 2];
            for (side, slot) in here.iter_mut().enumerate() {
                let (f, p) = trace.side_position(e, side);
                let key = p as u64 * scale + trace.edge_offset(map, f, p, mid) as u64;
                *slot = layouts[f].region(key);
            }
            uf.union(here[0], here[1]);
            regs.push(here[0]);
        }
        segment_region.push(regs);
    }
    let end_region = |d: Dart| -> usize {
        let e = map.edge(d);
        let regs = &segment_region[e];
        if map.edge_first(e) == d {
            regs[0]
        } else {
            regs[regs.len() - 1]
        }
    };

    // vertices: whole vertices off the curve, two copies for vertices on it
    let corner_region = |x: Dart| -> usize {
        let (f, p) = trace.corner_position(x);
        layouts[f].region(p as u64 * scale)
    };
    let mut vertex_copies: Vec<usize> = Vec::new();
    for v in 0..map.vertex_count() {
        let rot = map.rotation(v);
        match on_curve[v] {
            None => {
                let r0 = corner_region(rot[0]);
                for &x in rot {
                    uf.union(r0, corner_region(x));
                    uf.union(r0, end_region(x));
                }
            }
            Some(i) => {
                let CurvePoint::AtVertex { entry, exit, .. } = curve.points()[i] else { unreachable!() };
                for (from, to) in [(entry, exit), (exit, entry)] {
                    // darts strictly after corner `from` up to and including `to`
                    let mut group = Vec::new();
                    let mut d = map.next(from);
                    loop {
                        group.push(d);
                        if d == to {
                            break;
                        }
                        d = map.next(d);
                    }
                    let r0 = end_region(group[0]);
                    for (k, &g) in group.iter().enumerate() {
                        uf.union(r0, end_region(g));
                        if k + 1 < group.len() {
                            uf.union(r0, corner_region(g));
                        }
                    }
                    vertex_copies.push(r0);
                }
            }
        }
    }
    for (e, ps) in &params {
        for k in 0..ps.len() {
            vertex_copies.push(segment_region[*e][k]);
            vertex_copies.push(segment_region[*e][k + 1]);
        }
    }

    // tally per piece
    #[derive(Default)]
    struct Tally {
        v: i64,
        e: i64,
        f: i64,
        chord_sides: usize,
        vertices: Vec<VertexId>,
        faces: Vec<usize>,
        segments: usize,
    }
    let mut tallies: BTreeMap<usize, Tally> = BTreeMap::new();
    for r in 0..region_count {
        let t = tallies.entry(uf.find(r)).or_default();
        t.f += 1;
        t.e += chord_sides[r] as i64;
        t.chord_sides += chord_sides[r];
        if let FaceRegions::Whole(_) = layouts[region_face[r]] {
            t.faces.push(region_face[r]);
        }
    }
    for regs in &segment_region {
        for &r in regs {
            let t = tallies.get_mut(&uf.find(r)).unwrap();
            t.e += 1;
            t.segments += 1;
        }
    }
    for &r in &vertex_copies {
        tallies.get_mut(&uf.find(r)).unwrap().v += 1;
    }
    for v in 0..map.vertex_count() {
        if on_curve[v].is_none() {
            let t = tallies.get_mut(&uf.find(corner_region(map.rotation(v)[0]))).unwrap();
            t.v += 1;
            t.vertices.push(v);
        }
    }
    let sides: Vec<CutSide> = tallies
        .into_values()
        .filter(|t| t.chord_sides > 0)
        .map(|t| CutSide { euler_char: t.v - t.e + t.f, vertices: t.vertices, faces: t.faces, segments: t.segments })
        .collect();
    Ok(CutResult { separates: sides.len() == 2, sides })
}

/// Regions of a face split by chords; returns the layout and the number of chord
/// sides on the boundary of each new region.
fn split_face(chords: &[Chord], first_region: usize) -> (FaceRegions, Vec<usize>) {
    let mut ends: Vec<(u64, usize)> = Vec::with_capacity(2 * chords.len());
    for (i, c) in chords.iter().enumerate() {
        ends.push((c.start, i));
        ends.push((c.end, i));
    }
    ends.sort_unstable();
    let m = ends.len();
    let partner: Vec<usize> = (0..m).map(|j| (0..m).find(|&k| k != j && ends[k].1 == ends[j].1).unwrap()).collect();
    let mut interval_region = vec![usize::MAX; m];
    let mut sides = Vec::new();
    for start in 0..m {
        if interval_region[start] != usize::MAX {
            continue;
        }
        let region = first_region + sides.len();
        let mut count = 0;
        let mut j = start;
        loop {
            interval_region[j] = region;
            let end = (j + 1) % m;
            count += 1;
            j = partner[end];
            if j == start {
                break;
            }
        }
        sides.push(count);
    }
    (FaceRegions::Split { keys: ends.iter().map(|e| e.0).collect(), interval_region }, sides)
}

fn cut_contractible(map: &CombinatorialMap, trace: &FaceTrace, face: usize) -> CutResult {
    let v0 = map.vertex(trace.flag(face, 0).dart);
    let comp = map.components().into_iter().find(|c| c.binary_search(&v0).is_ok()).unwrap();
    let mut in_comp = vec![false; map.vertex_count()];
    for &v in &comp {
        in_comp[v] = true;
    }
    let faces: Vec<usize> = (0..trace.face_count()).filter(|&f| in_comp[map.vertex(trace.flag(f, 0).dart)]).collect();
    let edges = map.edges().filter(|&(a, _, _)| in_comp[map.vertex(a)]).count();
    let chi = comp.len() as i64 - edges as i64 + faces.len() as i64;
    let disk = CutSide { euler_char: 1, vertices: Vec::new(), faces: Vec::new(), segments: 0 };
    let rest = CutSide {
        euler_char: chi - 1,
        vertices: comp,
        faces: faces.into_iter().filter(|&f| f != face).collect(),
        segments: edges,
    };
    CutResult { separates: true, sides: vec![disk, rest] }
}
