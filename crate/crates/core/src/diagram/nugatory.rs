//! Nugatory crossings and their removal.
//!
//! A crossing is nugatory when a simple closed curve through two diagonally
//! opposite corners of it, and meeting the diagram nowhere else, bounds a disk.
//! On positive-genus surfaces the corner curve may exist without bounding a
//! disk, so every candidate is cut open and checked.

use serde::Serialize;

use super::{opposite, LinkDiagram};
use crate::map::cut::cut_with_trace;
use crate::map::{
    reversed_rotation, trace_faces, CombinatorialMap, CurvePoint, CutSide, Dart, EmbeddedCurve, FaceArc, FaceTrace,
    Sign, VertexId,
};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Nugatory {
    pub crossing: VertexId,
    pub curve: EmbeddedCurve,
    /// The disk bounded by `curve` (the smaller one when both sides are disks).
    pub disk: CutSide,
}

fn corner_curve(map: &CombinatorialMap, trace: &FaceTrace, v: VertexId, x: Dart) -> Option<EmbeddedCurve> {
    let y = map.rotate(x, 2);
    let (f1, p1) = trace.corner_position(x);
    let (f2, p2) = trace.corner_position(y);
    (f1 == f2).then(|| {
        EmbeddedCurve::new(
            vec![CurvePoint::AtVertex { vertex: v, entry: y, exit: x }],
            vec![FaceArc { face: f1, from: p1, to: p2 }],
        )
    })
}

fn nugatory_at(diagram: &LinkDiagram, trace: &FaceTrace, v: VertexId) -> Option<Nugatory> {
    let map = diagram.map();
    for k in 0..2 {
        let x = map.rotation(v)[k];
        let Some(curve) = corner_curve(map, trace, v, x) else { continue };
        let cut = cut_with_trace(map, trace, &curve).expect("corner curves are valid");
        if let Some(disk) = cut.disk_sides().min_by_key(|s| s.vertices.len()) {
            let disk = disk.clone();
            return Some(Nugatory { crossing: v, curve, disk });
        }
    }
    None
}

pub fn find_nugatory(diagram: &LinkDiagram) -> Vec<Nugatory> {
    let trace = trace_faces(diagram.map());
    (0..diagram.crossing_count()).filter_map(|v| nugatory_at(diagram, &trace, v)).collect()
}

pub fn is_reduced(diagram: &LinkDiagram) -> bool {
    let trace = trace_faces(diagram.map());
    (0..diagram.crossing_count()).all(|v| nugatory_at(diagram, &trace, v).is_none())
}

/// Removes the crossing by turning the disk over: the crossing's strands are
/// rejoined and every vertex inside the disk has its rotation reversed and its
/// over-strand exchanged. Returns `None` when a strand would lose its last
/// crossing, since crossingless loops have no representation.
fn untwist(diagram: &LinkDiagram, nug: &Nugatory) -> Option<LinkDiagram> {
    let map = diagram.map();
    let v = nug.crossing;
    let removed = map.rotation(v);
    let at_v = |d: Dart| map.vertex(d) == v;
    let n = map.dart_count();
    let mut new_pair = vec![usize::MAX; n];
    let mut new_sign = vec![Sign::Positive; n];
    let mut visited = 0;
    for y in 0..n {
        if at_v(y) || !at_v(map.pair(y)) {
            continue;
        }
        let mut sign = map.sign(y);
        let mut z = map.pair(y);
        loop {
            let w = opposite(map, z);
            visited += 2;
            sign = sign.times(map.sign(w));
            let p = map.pair(w);
            if !at_v(p) {
                new_pair[y] = p;
                new_sign[y] = sign;
                break;
            }
            z = p;
        }
    }
    // each chain is walked from both of its ends
    if visited < 8 {
        return None;
    }
    let mut inside = vec![false; map.vertex_count()];
    for &u in &nug.disk.vertices {
        inside[u] = true;
    }
    // compact renumbering without the removed darts
    let mut index = vec![usize::MAX; n];
    let mut next = 0;
    for d in 0..n {
        if !removed.contains(&d) {
            index[d] = next;
            next += 1;
        }
    }
    let mut rotations = Vec::new();
    let mut over = Vec::new();
    for u in 0..map.vertex_count() {
        if u == v {
            continue;
        }
        let rot: Vec<Dart> = map.rotation(u).iter().map(|&d| index[d]).collect();
        if inside[u] {
            rotations.push(reversed_rotation(&rot));
            over.push(index[map.next(diagram.over_dart(u))]);
        } else {
            rotations.push(rot);
            over.push(index[diagram.over_dart(u)]);
        }
    }
    let mut pairing = vec![0; next];
    let mut signs = vec![Sign::Positive; next];
    for d in 0..n {
        if index[d] == usize::MAX {
            continue;
        }
        let (p, s) = if at_v(map.pair(d)) { (new_pair[d], new_sign[d]) } else { (map.pair(d), map.sign(d)) };
        pairing[index[d]] = index[p];
        signs[index[d]] = s;
    }
    let new_map = CombinatorialMap::from_parts(rotations, pairing, signs).ok()?;
    Some(LinkDiagram::from_parts_unchecked(new_map, over))
}

/// Untwists nugatory crossings until none can be removed.
pub fn reduce(diagram: &LinkDiagram) -> LinkDiagram {
    let mut current = diagram.clone();
    'outer: loop {
        let trace = trace_faces(current.map());
        for v in 0..current.crossing_count() {
            if let Some(nug) = nugatory_at(&current, &trace, v) {
                if let Some(next) = untwist(&current, &nug) {
                    current = next;
                    continue 'outer;
                }
            }
        }
        return current;
    }
}
