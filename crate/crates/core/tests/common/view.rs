//! Library results translated into oracle terms for comparison.

use surflink::map::{trace_faces, CombinatorialMap};
use surflink::prime::{classify_two_cut, enumerate_two_cuts};

use super::OracleCut;

/// The library's two-point curves, sorted, with edges named by their least dart.
pub fn library_two_cuts(map: &CombinatorialMap) -> Vec<OracleCut> {
    let trace = trace_faces(map);
    let mut out: Vec<OracleCut> = enumerate_two_cuts(map)
        .iter()
        .map(|c| {
            let v = classify_two_cut(map, c);
            let e = |(f, p): (usize, usize)| {
                let (a, b) = map.edge_darts(trace.edge_at(map, f, p));
                a.min(b)
            };
            let (e1, e2) = (e(c.occurrences[0]), e(c.occurrences[1]));
            OracleCut {
                edges: (e1.min(e2), e1.max(e2)),
                bounds_disk: v.bounds_disk,
                disk_crossings: v.disk_side_crossing_count,
                embedded_arc: v.embedded_arc,
            }
        })
        .collect();
    out.sort();
    out
}
