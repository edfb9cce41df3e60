//! Link diagrams: 4-valent maps with an over-strand at every crossing.

mod nugatory;

pub use nugatory::{find_nugatory, is_reduced, reduce, Nugatory};

use std::collections::VecDeque;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::map::{surface_info, CombinatorialMap, Dart, SurfaceInfo, SurfaceType, VertexId};

/// One of the two strands through a crossing: `strand` 0 runs through rotation
/// positions 0 and 2, strand 1 through positions 1 and 3.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct PassId {
    pub crossing: VertexId,
    pub strand: u8,
}

impl PassId {
    fn node(self) -> usize {
        2 * self.crossing + self.strand as usize
    }

    fn from_node(n: usize) -> Self {
        PassId { crossing: n / 2, strand: (n % 2) as u8 }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct StrandPass {
    pub crossing: VertexId,
    pub is_over: bool,
    pub entering: Dart,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinkDiagram {
    map: CombinatorialMap,
    over: Vec<Dart>,
}

/// Dart across the crossing from `d`.
pub fn opposite(map: &CombinatorialMap, d: Dart) -> Dart {
    map.rotate(d, 2)
}

pub fn pass_of(map: &CombinatorialMap, d: Dart) -> PassId {
    PassId { crossing: map.vertex(d), strand: (map.position(d) % 2) as u8 }
}

fn check_four_valent(map: &CombinatorialMap) -> Result<()> {
    match (0..map.vertex_count()).find(|&v| map.degree(v) != 4) {
        Some(v) => Err(Error::MalformedDiagram(format!("vertex {v} has degree {}", map.degree(v)))),
        None => Ok(()),
    }
}

/// Strand walks of a 4-valent map as sequences of entering darts.
/// A walk enters a crossing at `a`, leaves at `opposite(a)` and follows the edge.
pub fn strand_walks(map: &CombinatorialMap) -> Vec<Vec<Dart>> {
    let mut used = vec![false; map.dart_count()];
    let mut walks = Vec::new();
    for start in 0..map.dart_count() {
        if used[start] {
            continue;
        }
        let mut walk = Vec::new();
        let mut a = start;
        loop {
            let b = opposite(map, a);
            used[a] = true;
            used[b] = true;
            walk.push(a);
            a = map.pair(b);
            if a == start {
                break;
            }
        }
        walks.push(walk);
    }
    walks
}

impl LinkDiagram {
    pub fn new(map: CombinatorialMap, over: Vec<Dart>) -> Result<Self> {
        check_four_valent(&map)?;
        if over.len() != map.vertex_count() {
            return Err(Error::MalformedDiagram("one over-dart per crossing is required".into()));
        }
        for (v, &d) in over.iter().enumerate() {
            if d >= map.dart_count() || map.vertex(d) != v {
                return Err(Error::MalformedDiagram(format!("over-dart {d} does not belong to crossing {v}")));
            }
        }
        Ok(LinkDiagram { map, over })
    }

    pub fn map(&self) -> &CombinatorialMap {
        &self.map
    }

    pub fn crossing_count(&self) -> usize {
        self.map.vertex_count()
    }

    pub fn over_dart(&self, v: VertexId) -> Dart {
        self.over[v]
    }

    pub fn over_darts(&self) -> &[Dart] {
        &self.over
    }

    /// Whether `d` belongs to the over-strand of its crossing.
    pub fn is_over(&self, d: Dart) -> bool {
        let v = self.map.vertex(d);
        self.map.position(d) % 2 == self.map.position(self.over[v]) % 2
    }

    /// Per-dart over marks, used for canonical codes.
    pub fn over_marks(&self) -> Vec<bool> {
        (0..self.map.dart_count()).map(|d| self.is_over(d)).collect()
    }

    pub fn components(&self) -> Vec<Vec<StrandPass>> {
        strand_walks(&self.map)
            .into_iter()
            .map(|w| {
                w.into_iter()
                    .map(|a| StrandPass { crossing: self.map.vertex(a), is_over: self.is_over(a), entering: a })
                    .collect()
            })
            .collect()
    }

    pub fn is_connected(&self) -> bool {
        self.map.is_connected()
    }

    /// Heights are read in each crossing's local chart, and a negative edge
    /// flips the chart, so across it "over then over" is a genuine alternation.
    pub fn is_alternating(&self) -> AlternationCheck {
        for (ci, comp) in self.components().iter().enumerate() {
            let k = comp.len();
            if k < 2 {
                continue;
            }
            for i in 0..k {
                let next = &comp[(i + 1) % k];
                let flipped = self.map.sign(opposite(&self.map, comp[i].entering)).is_negative();
                if (comp[i].is_over == next.is_over) != flipped {
                    return AlternationCheck {
                        alternating: false,
                        violation: Some(AlternationViolation {
                            component: ci,
                            crossing: next.crossing,
                            entering: next.entering,
                        }),
                    };
                }
            }
        }
        AlternationCheck { alternating: true, violation: None }
    }

    /// The same diagram with the other strand on top at one crossing.
    pub fn with_crossing_switched(&self, v: VertexId) -> LinkDiagram {
        let mut over = self.over.clone();
        over[v] = self.map.next(over[v]);
        LinkDiagram { map: self.map.clone(), over }
    }

    /// Renames darts by `perm`, keeping every over-strand.
    pub fn relabel(&self, perm: &[Dart]) -> LinkDiagram {
        let map = self.map.relabel(perm);
        let mut over = vec![0; map.vertex_count()];
        for &d in &self.over {
            let nd = perm[d];
            over[map.vertex(nd)] = nd;
        }
        LinkDiagram { map, over }
    }

    pub fn is_fully_alternating(&self, declared: Option<SurfaceType>) -> Result<FullAlternation> {
        is_fully_alternating(self, declared)
    }

    pub(crate) fn from_parts_unchecked(map: CombinatorialMap, over: Vec<Dart>) -> Self {
        LinkDiagram { map, over }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct AlternationViolation {
    pub component: usize,
    /// Crossing where two consecutive passes have the same height.
    pub crossing: VertexId,
    pub entering: Dart,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct AlternationCheck {
    pub alternating: bool,
    pub violation: Option<AlternationViolation>,
}

/// A constraint between two passes: their chart-relative heights must be equal
/// (`same`, consecutive passes across a negative edge) or must differ.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct PassEdge {
    pub a: PassId,
    pub b: PassId,
    pub same: bool,
}

/// Pass graph of a 4-valent map: nodes are [`PassId`]s, edges join the two
/// passes of a crossing and consecutive passes along a strand.
pub fn pass_graph_edges(map: &CombinatorialMap) -> Vec<PassEdge> {
    let mut edges = Vec::new();
    for v in 0..map.vertex_count() {
        edges.push(PassEdge {
            a: PassId { crossing: v, strand: 0 },
            b: PassId { crossing: v, strand: 1 },
            same: false,
        });
    }
    for walk in strand_walks(map) {
        if walk.len() < 2 {
            continue;
        }
        for i in 0..walk.len() {
            edges.push(PassEdge {
                a: pass_of(map, walk[i]),
                b: pass_of(map, walk[(i + 1) % walk.len()]),
                same: map.sign(opposite(map, walk[i])).is_negative(),
            });
        }
    }
    edges
}

/// Chooses over-strands so every strand alternates, by 2-colouring the pass
/// graph (colour 1 means over). Fails with a cycle of passes whose constraints
/// cannot all hold when no choice exists.
pub fn alternating_assignment(map: &CombinatorialMap) -> Result<LinkDiagram> {
    check_four_valent(map)?;
    let nodes = 2 * map.vertex_count();
    let mut adj = vec![Vec::new(); nodes];
    for e in pass_graph_edges(map) {
        let flip = u8::from(!e.same);
        adj[e.a.node()].push((e.b.node(), flip));
        adj[e.b.node()].push((e.a.node(), flip));
    }
    let mut color: Vec<Option<u8>> = vec![None; nodes];
    let mut parent = vec![usize::MAX; nodes];
    let mut depth = vec![0usize; nodes];
    for root in 0..nodes {
        if color[root].is_some() {
            continue;
        }
        color[root] = Some(1);
        let mut queue = VecDeque::from([root]);
        while let Some(u) = queue.pop_front() {
            let cu = color[u].unwrap();
            for &(w, flip) in &adj[u] {
                match color[w] {
                    None => {
                        color[w] = Some(cu ^ flip);
                        parent[w] = u;
                        depth[w] = depth[u] + 1;
                        queue.push_back(w);
                    }
                    Some(cw) if cw != cu ^ flip => {
                        return Err(Error::NotAlternatable { cycle: odd_cycle(u, w, &parent, &depth) });
                    }
                    Some(_) => {}
                }
            }
        }
    }
    let over = (0..map.vertex_count())
        .map(|v| {
            let strand = if color[2 * v] == Some(1) { 0 } else { 1 };
            map.rotation(v)[strand]
        })
        .collect();
    Ok(LinkDiagram { map: map.clone(), over })
}

fn odd_cycle(u: usize, w: usize, parent: &[usize], depth: &[usize]) -> Vec<PassId> {
    let (mut a, mut b) = (u, w);
    let mut left = vec![a];
    let mut right = vec![b];
    while depth[a] > depth[b] {
        a = parent[a];
        left.push(a);
    }
    while depth[b] > depth[a] {
        b = parent[b];
        right.push(b);
    }
    while a != b {
        a = parent[a];
        b = parent[b];
        left.push(a);
        right.push(b);
    }
    right.pop();
    left.extend(right.into_iter().rev());
    left.into_iter().map(PassId::from_node).collect()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct FullAlternation {
    pub alternating: bool,
    pub cellular: bool,
    pub surface: SurfaceInfo,
    /// Derived surface is the sphere or the projective plane.
    pub excluded_surface: bool,
    pub fully_alternating: bool,
}

pub fn is_fully_alternating(diagram: &LinkDiagram, declared: Option<SurfaceType>) -> Result<FullAlternation> {
    let surface = surface_info(diagram.map());
    if let Some(d) = declared {
        if d.euler_char() > surface.euler_char {
            return Err(Error::DeclaredSurfaceSmaller { declared: d.euler_char(), derived: surface.euler_char });
        }
    }
    let alternating = diagram.is_alternating().alternating;
    let cellular = surface.components == 1 && declared.is_none_or(|d| d == surface.surface_type());
    let excluded_surface = surface.is_sphere() || surface.is_projective_plane();
    Ok(FullAlternation {
        alternating,
        cellular,
        surface,
        excluded_surface,
        fully_alternating: alternating && cellular && !excluded_surface,
    })
}
