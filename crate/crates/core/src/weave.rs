//! Weaves: alternating diagrams read off quotients of 4-regular tilings, and the
//! bigon augmentation turning 3-regular quotients into 4-regular ones.

use serde::Serialize;

use crate::diagram::{alternating_assignment, reduce, LinkDiagram};
use crate::error::{Error, Result};
use crate::map::canon::canonical_labels;
use crate::map::{surface_info, CombinatorialMap, Dart, EdgeId, SurfaceInfo, VertexId};

/// A tiling's 1-skeleton modulo a symmetry subgroup, as a map with all
/// vertices of degree 3 or all of degree 4.
#[derive(Debug, Clone)]
pub struct TilingQuotient {
    map: CombinatorialMap,
    pub description: String,
}

impl TilingQuotient {
    pub fn new(map: CombinatorialMap, description: impl Into<String>) -> Result<Self> {
        let d0 = map.degree(0);
        if (d0 != 3 && d0 != 4) || (0..map.vertex_count()).any(|v| map.degree(v) != d0) {
            return Err(Error::MalformedMap("quotient vertices must all have degree 3 or all degree 4".into()));
        }
        Ok(TilingQuotient { map, description: description.into() })
    }

    pub fn map(&self) -> &CombinatorialMap {
        &self.map
    }

    pub fn degree(&self) -> usize {
        self.map.degree(0)
    }
}

/// Puts alternating crossings at the vertices of a 4-regular quotient.
pub fn weave_from_map(q: &TilingQuotient) -> Result<LinkDiagram> {
    if q.degree() != 4 {
        return Err(Error::PreconditionFailed(crate::error::Hypothesis::FourValent));
    }
    alternating_assignment(q.map())
}

type OrderedEdge = ((usize, usize), EdgeId, VertexId, VertexId);

/// Non-loop edges sorted by their canonical dart labels.
fn canonical_edge_order(map: &CombinatorialMap) -> Vec<OrderedEdge> {
    let (_, label) = canonical_labels(map, None);
    let mut order: Vec<OrderedEdge> = map
        .edges()
        .enumerate()
        .map(|(e, (a, b, _))| ((label[a].min(label[b]), label[a].max(label[b])), e, map.vertex(a), map.vertex(b)))
        .filter(|&(_, _, u, w)| u != w)
        .collect();
    order.sort_unstable();
    order
}

/// Include-first search over the ordered edges, so matchings are visited in
/// lexicographic order. `visit` returns true to stop.
fn each_matching(map: &CombinatorialMap, visit: &mut dyn FnMut(&[EdgeId]) -> bool) {
    struct Search<'a> {
        order: Vec<OrderedEdge>,
        // last position of an edge at each vertex, for pruning
        last: Vec<Option<usize>>,
        matched: Vec<bool>,
        chosen: Vec<EdgeId>,
        visit: &'a mut dyn FnMut(&[EdgeId]) -> bool,
    }
    impl Search<'_> {
        fn go(&mut self, i: usize) -> bool {
            let mut open = (0..self.matched.len()).filter(|&v| !self.matched[v]).peekable();
            if open.peek().is_none() {
                return (self.visit)(&self.chosen);
            }
            if open.any(|v| self.last[v].is_none_or(|l| l < i)) {
                return false;
            }
            let (_, e, u, w) = self.order[i];
            if !self.matched[u] && !self.matched[w] {
                self.matched[u] = true;
                self.matched[w] = true;
                self.chosen.push(e);
                let stop = self.go(i + 1);
                self.chosen.pop();
                self.matched[u] = false;
                self.matched[w] = false;
                if stop {
                    return true;
                }
            }
            self.go(i + 1)
        }
    }
    let order = canonical_edge_order(map);
    let mut last = vec![None; map.vertex_count()];
    for (i, &(_, _, u, w)) in order.iter().enumerate() {
        last[u] = Some(i);
        last[w] = Some(i);
    }
    let matched = vec![false; map.vertex_count()];
    Search { order, last, matched, chosen: Vec::new(), visit }.go(0);
}

/// Lexicographically least perfect matching, with edges ordered by their
/// canonical dart labels so the choice does not depend on how darts are named.
/// Loops never match. Edges come back in that canonical order.
pub fn perfect_matching(map: &CombinatorialMap) -> Option<Vec<EdgeId>> {
    let mut found = None;
    each_matching(map, &mut |m| {
        found = Some(m.to_vec());
        true
    });
    found
}

/// Every perfect matching, in the order [`perfect_matching`] prefers them.
pub fn perfect_matchings(map: &CombinatorialMap) -> Vec<Vec<EdgeId>> {
    let mut all = Vec::new();
    each_matching(map, &mut |m| {
        all.push(m.to_vec());
        false
    });
    all
}

/// Doubles every edge of the least perfect matching; each doubling adds one bigon face.
pub fn augment_three_regular(q: &TilingQuotient) -> Result<TilingQuotient> {
    if q.degree() != 3 {
        return Err(Error::MalformedMap("augmentation needs a 3-regular quotient".into()));
    }
    let matching = perfect_matching(q.map()).ok_or(Error::NoPerfectMatching)?;
    augment_along(q, &matching)
}

/// Doubles the given edges. The copy `a'` goes just before `a`; at the far end
/// the copy goes after `b`, or before it across a negative edge, so the two
/// parallel edges bound a bigon.
pub fn augment_along(q: &TilingQuotient, matching: &[EdgeId]) -> Result<TilingQuotient> {
    let map = q.map();
    let mut rotations = map.rotations().to_vec();
    let mut edges: Vec<(Dart, Dart, _)> = map.edges().collect();
    let mut next = map.dart_count();
    for &e in matching {
        let (a, b) = map.edge_darts(e);
        let sign = map.edge_sign(e);
        let (a2, b2) = (next, next + 1);
        next += 2;
        let ra = &mut rotations[map.vertex(a)];
        let ia = ra.iter().position(|&d| d == a).unwrap();
        ra.insert(ia, a2);
        let rb = &mut rotations[map.vertex(b)];
        let ib = rb.iter().position(|&d| d == b).unwrap();
        if sign.is_negative() {
            rb.insert(ib, b2);
        } else {
            rb.insert(ib + 1, b2);
        }
        edges.push((a2, b2, sign));
    }
    let augmented = CombinatorialMap::new(rotations, &edges)?;
    TilingQuotient::new(augmented, format!("{} with bigons", q.description))
}

/// Weave from a 3-regular quotient: the first matching, in preference order,
/// whose augmentation admits an alternating assignment. When none does, the
/// error is the one reported for the least matching.
pub fn weave_from_three_regular(q: &TilingQuotient) -> Result<(TilingQuotient, LinkDiagram)> {
    if q.degree() != 3 {
        return Err(Error::MalformedMap("augmentation needs a 3-regular quotient".into()));
    }
    let mut first_error = None;
    for matching in perfect_matchings(q.map()) {
        let aug = augment_along(q, &matching)?;
        match weave_from_map(&aug) {
            Ok(d) => return Ok((aug, d)),
            Err(e) => {
                first_error.get_or_insert(e);
            }
        }
    }
    Err(first_error.unwrap_or(Error::NoPerfectMatching))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct DensityStats {
    pub crossings_per_fundamental_domain: usize,
    pub component_count: usize,
    pub surface: SurfaceInfo,
    pub reduced_crossing_count: usize,
}

pub fn density_stats(diagram: &LinkDiagram) -> DensityStats {
    DensityStats {
        crossings_per_fundamental_domain: diagram.crossing_count(),
        component_count: diagram.components().len(),
        surface: surface_info(diagram.map()),
        reduced_crossing_count: reduce(diagram).crossing_count(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;
    use crate::map::trace_faces;

    #[test]
    fn theta_augments_to_two_crossings() {
        let theta = catalog::theta_torus();
        let before = surface_info(theta.map());
        let aug = augment_three_regular(&theta).unwrap();
        let after = surface_info(aug.map());
        assert_eq!(before.euler_char, after.euler_char);
        assert_eq!(after.edge_count, before.edge_count + 1);
        assert_eq!(after.face_count, before.face_count + 1);
        assert!(trace_faces(aug.map()).degrees().contains(&2));
        assert_eq!(aug.degree(), 4);
    }

    #[test]
    fn claw_has_no_matching() {
        assert!(perfect_matching(catalog::claw_with_loops().map()).is_none());
        assert!(matches!(augment_three_regular(&catalog::claw_with_loops()), Err(Error::NoPerfectMatching)));
        assert_eq!(perfect_matching(catalog::theta_torus().map()), Some(vec![0]));
    }

    #[test]
    fn weave_stats() {
        let w = weave_from_map(&catalog::square_weave_quotient()).unwrap();
        let s = density_stats(&w);
        assert_eq!((s.crossings_per_fundamental_domain, s.component_count, s.surface.genus), (2, 2, 1));
        let t = density_stats(&catalog::torus_one());
        assert_eq!((t.crossings_per_fundamental_domain, t.component_count, t.surface.genus), (1, 2, 1));
        assert!(weave_from_map(&catalog::theta_torus()).is_err());
    }
}
