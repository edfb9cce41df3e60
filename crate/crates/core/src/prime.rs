//! Obvious primeness: every simple closed curve meeting the diagram in two edge
//! points must bound a disk in which the diagram is a single unknotted arc.
//!
//! Up to isotopy such a curve is a pair of chords, one in each of two faces
//! `A` and `B`, through two edges that both separate `A` from `B`. The search
//! enumerates these chord pairs and cuts the surface along each.

use std::collections::BTreeSet;

use serde::Serialize;

use crate::certify::Citation;
use crate::diagram::{is_reduced, LinkDiagram};
use crate::error::{Error, Hypothesis, Result};
use crate::map::cut::cut_with_trace;
use crate::map::{
    surface_info, trace_faces, CombinatorialMap, CurvePoint, EmbeddedCurve, FaceArc, FaceTrace, EDGE_PARAM_SCALE,
};

/// A boundary position `(face, pos)` of a face walk.
pub type Occurrence = (usize, usize);

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TwoCutCandidate {
    /// The two edge sides in the first face; their opposite sides lie in a common face.
    pub occurrences: [Occurrence; 2],
    pub curve: EmbeddedCurve,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TwoCutVerdict {
    pub bounds_disk: bool,
    /// Fewest crossings on a disk side, if any side is a disk.
    pub disk_side_crossing_count: Option<usize>,
    /// Some disk side contains no crossing, so the diagram meets it in one arc.
    pub embedded_arc: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PrimeCheck {
    pub obviously_prime: bool,
    pub candidates: usize,
    /// First candidate, in enumeration order, that fails.
    pub witness: Option<TwoCutCandidate>,
}

fn two_point_curve(
    map: &CombinatorialMap,
    trace: &FaceTrace,
    (a, i): Occurrence,
    (_, j): Occurrence,
    (b, k): Occurrence,
    (_, l): Occurrence,
) -> Option<EmbeddedCurve> {
    let e1 = trace.edge_at(map, a, i);
    let e2 = trace.edge_at(map, a, j);
    let params: &[(u32, u32)] = if e1 != e2 {
        &[(EDGE_PARAM_SCALE / 2, EDGE_PARAM_SCALE / 2)]
    } else {
        &[(EDGE_PARAM_SCALE / 3, 2 * EDGE_PARAM_SCALE / 3), (2 * EDGE_PARAM_SCALE / 3, EDGE_PARAM_SCALE / 3)]
    };
    params.iter().find_map(|&(t1, t2)| {
        let curve = EmbeddedCurve::new(
            vec![CurvePoint::OnEdge { edge: e1, param: t1 }, CurvePoint::OnEdge { edge: e2, param: t2 }],
            vec![FaceArc { face: a, from: i, to: j }, FaceArc { face: b, from: l, to: k }],
        );
        curve.validate(map, trace).is_ok().then_some(curve)
    })
}

fn enumerate_with_trace(map: &CombinatorialMap, trace: &FaceTrace) -> Vec<TwoCutCandidate> {
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    for (a, face) in trace.faces.iter().enumerate() {
        for i in 0..face.degree() {
            for j in i + 1..face.degree() {
                let (b, k) = trace.across(map, a, i);
                let (b2, l) = trace.across(map, a, j);
                if b != b2 {
                    continue;
                }
                let here = ((a, i), (a, j));
                let there = ((b, k.min(l)), (b, k.max(l)));
                // Both chords join the same pair of sides: the corridors are isotopic
                // and the curve bounds a disk meeting the diagram in one arc.
                if here == there || !seen.insert(here.min(there)) {
                    continue;
                }
                if let Some(curve) = two_point_curve(map, trace, (a, i), (a, j), (b, k), (b, l)) {
                    out.push(TwoCutCandidate { occurrences: [(a, i), (a, j)], curve });
                }
            }
        }
    }
    out
}

/// All simple two-point curves, one per isotopy class of chord pair.
pub fn enumerate_two_cuts(map: &CombinatorialMap) -> Vec<TwoCutCandidate> {
    enumerate_with_trace(map, &trace_faces(map))
}

fn classify_with_trace(map: &CombinatorialMap, trace: &FaceTrace, candidate: &TwoCutCandidate) -> TwoCutVerdict {
    let cut = cut_with_trace(map, trace, &candidate.curve).expect("candidates are validated");
    let count = cut.disk_sides().map(|s| s.vertices.len()).min();
    // A crossing-free disk side carries edge segments only; exactly one means a single arc.
    let embedded_arc = cut.disk_sides().any(|s| s.vertices.is_empty() && s.segments == 1);
    TwoCutVerdict { bounds_disk: cut.bounds_disk(), disk_side_crossing_count: count, embedded_arc }
}

pub fn classify_two_cut(map: &CombinatorialMap, candidate: &TwoCutCandidate) -> TwoCutVerdict {
    classify_with_trace(map, &trace_faces(map), candidate)
}

/// The two-cut search with no hypothesis checks.
pub fn obviously_prime_unchecked(diagram: &LinkDiagram) -> PrimeCheck {
    let map = diagram.map();
    let trace = trace_faces(map);
    let candidates = enumerate_with_trace(map, &trace);
    let witness = candidates
        .iter()
        .find(|c| {
            let v = classify_with_trace(map, &trace, c);
            v.bounds_disk && !v.embedded_arc
        })
        .cloned();
    PrimeCheck { obviously_prime: witness.is_none(), candidates: candidates.len(), witness }
}

/// Obvious primeness of a connected, alternating, reduced diagram.
pub fn is_obviously_prime(diagram: &LinkDiagram) -> Result<PrimeCheck> {
    if !diagram.map().is_connected() {
        return Err(Error::PreconditionFailed(Hypothesis::Connected));
    }
    if !diagram.is_alternating().alternating {
        return Err(Error::PreconditionFailed(Hypothesis::Alternating));
    }
    if !is_reduced(diagram) {
        return Err(Error::PreconditionFailed(Hypothesis::Reduced));
    }
    Ok(obviously_prime_unchecked(diagram))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct PrimeCertificate {
    pub prime: bool,
    pub basis: Citation,
}

/// Primeness of the link in the thickened surface. For fully alternating
/// diagrams on orientable surfaces of positive genus, prime and obviously
/// prime coincide.
pub fn is_prime_certified(diagram: &LinkDiagram) -> Result<PrimeCertificate> {
    let info = surface_info(diagram.map());
    if !info.orientable {
        return Err(Error::PreconditionFailed(Hypothesis::OrientableSurface));
    }
    if info.genus == 0 {
        return Err(Error::PreconditionFailed(Hypothesis::PositiveGenus));
    }
    let prime = is_obviously_prime(diagram)?.obviously_prime;
    Ok(PrimeCertificate { prime, basis: Citation::PrimenessCriterion })
}
