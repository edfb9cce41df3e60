use super::{CombinatorialMap, Dart, VertexId};

/// Relabeling-invariant code of a map, optionally with a boolean mark per dart.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CanonicalCode(Vec<u64>);

/// Vertex and dart order realizing the canonical code.
#[derive(Debug, Clone)]
pub(crate) struct CanonicalOrder {
    /// Vertices in canonical order, each with the dart its rotation starts from.
    pub vertices: Vec<(VertexId, Dart)>,
}

fn encode(map: &CombinatorialMap, marks: Option<&[bool]>, start: Dart) -> (Vec<u64>, Vec<(VertexId, Dart)>) {
    let mut index: Vec<Option<usize>> = vec![None; map.vertex_count()];
    let mut order = vec![(map.vertex(start), start)];
    index[map.vertex(start)] = Some(0);
    let mut code = Vec::new();
    let mut i = 0;
    while i < order.len() {
        let (v, s) = order[i];
        let deg = map.degree(v);
        code.push(deg as u64);
        for k in 0..deg {
            let d = map.rotate(s, k as isize);
            let p = map.pair(d);
            let w = map.vertex(p);
            let wi = match index[w] {
                Some(wi) => wi,
                None => {
                    index[w] = Some(order.len());
                    order.push((w, p));
                    order.len() - 1
                }
            };
            let ws = order[wi].1;
            let offset = (map.position(p) + map.degree(w) - map.position(ws)) % map.degree(w);
            code.push(wi as u64);
            code.push(offset as u64);
            code.push(u64::from(map.sign(d).is_negative()));
            code.push(marks.map_or(0, |m| u64::from(m[d])));
        }
        i += 1;
    }
    (code, order)
}

pub(crate) fn canonical_order(map: &CombinatorialMap, marks: Option<&[bool]>) -> (CanonicalCode, CanonicalOrder) {
    let mut parts: Vec<(Vec<u64>, Vec<(VertexId, Dart)>)> = map
        .components()
        .iter()
        .map(|comp| {
            comp.iter()
                .flat_map(|&v| map.rotation(v).iter().copied())
                .map(|d| encode(map, marks, d))
                .min_by(|a, b| a.0.cmp(&b.0))
                .unwrap()
        })
        .collect();
    parts.sort_by(|a, b| a.0.cmp(&b.0));
    let mut code = Vec::new();
    let mut vertices = Vec::new();
    for (c, o) in parts {
        code.push(c.len() as u64);
        code.extend(c);
        vertices.extend(o);
    }
    (CanonicalCode(code), CanonicalOrder { vertices })
}

/// Darts grouped by canonical vertex order, and each dart's 1-based canonical label.
pub(crate) fn canonical_labels(map: &CombinatorialMap, marks: Option<&[bool]>) -> (Vec<Vec<Dart>>, Vec<usize>) {
    let (_, order) = canonical_order(map, marks);
    let mut label = vec![0usize; map.dart_count()];
    let mut rows = Vec::new();
    let mut next = 1;
    for &(v, start) in &order.vertices {
        let mut row = Vec::new();
        for k in 0..map.degree(v) {
            let d = map.rotate(start, k as isize);
            label[d] = next;
            row.push(d);
            next += 1;
        }
        rows.push(row);
    }
    (rows, label)
}

pub fn canonical_code(map: &CombinatorialMap, marks: Option<&[bool]>) -> CanonicalCode {
    canonical_order(map, marks).0
}

/// Isomorphism of signed rotation systems preserving every local orientation.
pub fn are_isomorphic(a: &CombinatorialMap, b: &CombinatorialMap) -> bool {
    a.dart_count() == b.dart_count()
        && a.vertex_count() == b.vertex_count()
        && canonical_code(a, None) == canonical_code(b, None)
}
