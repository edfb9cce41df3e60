#![allow(dead_code)]

//! Independent oracles and random generators shared by the integration tests.
//! Nothing here calls the library's face tracing, cutting, alternation or
//! canonicalization code; maps are read through their raw accessors only.

pub mod view;

use std::collections::{BTreeMap, HashMap};

use rand::rngs::StdRng;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};

use surflink::diagram::LinkDiagram;
use surflink::map::{CombinatorialMap, Dart, Sign};

/// Plain copy of a signed rotation system.
#[derive(Debug, Clone)]
pub struct Raw {
    pub rot: Vec<Vec<Dart>>,
    pub pair: Vec<Dart>,
    pub neg: Vec<bool>,
    pub vertex: Vec<usize>,
    pub pos: Vec<usize>,
}

impl Raw {
    pub fn of(map: &CombinatorialMap) -> Raw {
        let n = map.dart_count();
        let rot: Vec<Vec<Dart>> = map.rotations().to_vec();
        Raw::build(rot, (0..n).map(|d| map.pair(d)).collect(), (0..n).map(|d| map.sign(d) == Sign::Negative).collect())
    }

    fn build(rot: Vec<Vec<Dart>>, pair: Vec<Dart>, neg: Vec<bool>) -> Raw {
        let n = pair.len();
        let mut vertex = vec![0; n];
        let mut pos = vec![0; n];
        for (v, r) in rot.iter().enumerate() {
            for (i, &d) in r.iter().enumerate() {
                vertex[d] = v;
                pos[d] = i;
            }
        }
        Raw { rot, pair, neg, vertex, pos }
    }

    pub fn darts(&self) -> usize {
        self.pair.len()
    }

    pub fn next(&self, d: Dart) -> Dart {
        let r = &self.rot[self.vertex[d]];
        r[(self.pos[d] + 1) % r.len()]
    }

    pub fn edge_count(&self) -> usize {
        self.darts() / 2
    }
}

pub struct Dsu(Vec<usize>);

impl Dsu {
    pub fn new(n: usize) -> Self {
        Dsu((0..n).collect())
    }
    pub fn find(&mut self, x: usize) -> usize {
        if self.0[x] != x {
            let r = self.find(self.0[x]);
            self.0[x] = r;
        }
        self.0[x]
    }
    pub fn union(&mut self, a: usize, b: usize) {
        let (a, b) = (self.find(a), self.find(b));
        self.0[a] = b;
    }
    pub fn classes(&mut self) -> usize {
        (0..self.0.len()).filter(|&x| self.find(x) == x).count()
    }
}

/// Surface data computed from the flag graph: flags are (dart, side) with side 1
/// the sector after the dart in its rotation and side 0 the sector before.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct OracleSurface {
    pub chi: i64,
    pub orientable: bool,
    pub genus: u64,
    pub faces: usize,
    pub components: usize,
}

fn a0(raw: &Raw, f: usize) -> usize {
    let (d, s) = (f / 2, f % 2);
    let p = raw.pair[d];
    2 * p + if raw.neg[d] { s } else { 1 - s }
}

fn a1(raw: &Raw, f: usize) -> usize {
    let (d, s) = (f / 2, f % 2);
    if s == 1 {
        2 * raw.next(d)
    } else {
        let r = &raw.rot[raw.vertex[d]];
        2 * r[(raw.pos[d] + r.len() - 1) % r.len()] + 1
    }
}

fn a2(f: usize) -> usize {
    f ^ 1
}

pub fn oracle_face_sizes(raw: &Raw) -> Vec<usize> {
    let nf = 2 * raw.darts();
    let mut dsu = Dsu::new(nf);
    for f in 0..nf {
        dsu.union(f, a0(raw, f));
        dsu.union(f, a1(raw, f));
    }
    let mut sizes: BTreeMap<usize, usize> = BTreeMap::new();
    for f in 0..nf {
        *sizes.entry(dsu.find(f)).or_default() += 1;
    }
    let mut out: Vec<usize> = sizes.values().map(|s| s / 2).collect();
    out.sort_unstable();
    out
}

pub fn oracle_surface(map: &CombinatorialMap) -> OracleSurface {
    let raw = Raw::of(map);
    let nf = 2 * raw.darts();
    let faces = oracle_face_sizes(&raw).len();
    let mut comp = Dsu::new(nf);
    for f in 0..nf {
        comp.union(f, a0(&raw, f));
        comp.union(f, a1(&raw, f));
        comp.union(f, a2(f));
    }
    let components = comp.classes();
    // two-colour the flag graph; it is bipartite exactly on orientable components
    let mut colour = vec![u8::MAX; nf];
    let mut orientable = true;
    for s in 0..nf {
        if colour[s] != u8::MAX {
            continue;
        }
        colour[s] = 0;
        let mut stack = vec![s];
        while let Some(f) = stack.pop() {
            for g in [a0(&raw, f), a1(&raw, f), a2(f)] {
                if colour[g] == u8::MAX {
                    colour[g] = 1 - colour[f];
                    stack.push(g);
                } else if colour[g] == colour[f] {
                    orientable = false;
                }
            }
        }
    }
    let chi = raw.rot.len() as i64 - raw.edge_count() as i64 + faces as i64;
    let deficit = (2 * components as i64 - chi) as u64;
    OracleSurface { chi, orientable, genus: if orientable { deficit / 2 } else { deficit }, faces, components }
}

/// Flips local orientations so every edge is positive; `None` if impossible.
pub fn oracle_normalize(raw: &Raw) -> Option<Raw> {
    let nv = raw.rot.len();
    let mut flip = vec![None; nv];
    for s in 0..nv {
        if flip[s].is_some() {
            continue;
        }
        flip[s] = Some(false);
        let mut stack = vec![s];
        while let Some(v) = stack.pop() {
            for &d in &raw.rot[v] {
                let w = raw.vertex[raw.pair[d]];
                let want = flip[v].unwrap() ^ raw.neg[d];
                match flip[w] {
                    None => {
                        flip[w] = Some(want);
                        stack.push(w);
                    }
                    Some(f) if f != want => return None,
                    _ => {}
                }
            }
        }
    }
    let rot = raw
        .rot
        .iter()
        .enumerate()
        .map(|(v, r)| if flip[v].unwrap() { r.iter().rev().copied().collect() } else { r.clone() })
        .collect();
    Some(Raw::build(rot, raw.pair.clone(), vec![false; raw.darts()]))
}

/// Faces of an all-positive rotation system as orbits of `d -> next(pair(d))`;
/// the face of `d` lies to its right.
fn positive_faces(raw: &Raw) -> (Vec<usize>, usize) {
    let mut face = vec![usize::MAX; raw.darts()];
    let mut count = 0;
    for s in 0..raw.darts() {
        if face[s] != usize::MAX {
            continue;
        }
        let mut d = s;
        while face[d] == usize::MAX {
            face[d] = count;
            d = raw.next(raw.pair[d]);
        }
        count += 1;
    }
    (face, count)
}

/// Verdict on one two-point curve, computed by inserting the curve into the map.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct OracleCut {
    pub edges: (usize, usize),
    pub bounds_disk: bool,
    pub disk_crossings: Option<usize>,
    pub embedded_arc: bool,
}

/// Cuts along the curve crossing the edges of darts `d1` and `d2`, with one
/// chord in the face right of both and one in the face left of both. Returns
/// `None` if the chords cannot be drawn disjointly.
pub fn oracle_two_cut(raw: &Raw, d1: Dart, d2: Dart) -> Option<OracleCut> {
    let n = raw.darts();
    let (_, f0) = positive_faces(raw);
    let chi0 = raw.rot.len() as i64 - raw.edge_count() as i64 + f0 as i64;
    // curve vertex k has darts back, right, forward, left
    let mut rot = raw.rot.clone();
    let mut pair = raw.pair.clone();
    pair.resize(n + 8, 0);
    for (k, &d) in [d1, d2].iter().enumerate() {
        let base = n + 4 * k;
        rot.push(vec![base, base + 1, base + 2, base + 3]);
        let p = raw.pair[d];
        pair[d] = base;
        pair[base] = d;
        pair[p] = base + 2;
        pair[base + 2] = p;
    }
    let chords = [(n + 1, n + 5), (n + 3, n + 7)];
    for &(a, b) in &chords {
        pair[a] = b;
        pair[b] = a;
    }
    let refined = Raw::build(rot, pair, vec![false; n + 8]);
    let (face, nf) = positive_faces(&refined);
    let chi = refined.rot.len() as i64 - refined.edge_count() as i64 + nf as i64;
    if chi != chi0 {
        return None;
    }
    let is_chord = |d: Dart| chords.iter().any(|&(a, b)| d == a || d == b);
    let mut pieces = Dsu::new(nf);
    for d in 0..n + 8 {
        if !is_chord(d) {
            pieces.union(face[d], face[refined.pair[d]]);
        }
    }
    let mut chi_of: HashMap<usize, i64> = HashMap::new();
    let mut originals: HashMap<usize, usize> = HashMap::new();
    let mut segments: HashMap<usize, usize> = HashMap::new();
    for f in 0..nf {
        *chi_of.entry(pieces.find(f)).or_default() += 1;
    }
    for v in 0..raw.rot.len() {
        let p = pieces.find(face[raw.rot[v][0]]);
        *chi_of.entry(p).or_default() += 1;
        *originals.entry(p).or_default() += 1;
    }
    for k in 0..2 {
        for side in [n + 4 * k, n + 4 * k + 2] {
            *chi_of.entry(pieces.find(face[side])).or_default() += 1;
        }
    }
    for d in 0..n + 8 {
        let p = pieces.find(face[d]);
        // every dart is one side of one edge: chords count once per side,
        // ordinary edges once per edge
        if is_chord(d) {
            *chi_of.entry(p).or_default() -= 1;
        } else if d < refined.pair[d] {
            *chi_of.entry(p).or_default() -= 1;
            *segments.entry(p).or_default() += 1;
        }
    }
    let mut sides: Vec<usize> = chords.iter().flat_map(|&(a, b)| [face[a], face[b]]).map(|f| pieces.find(f)).collect();
    sides.sort_unstable();
    sides.dedup();
    let separates = sides.len() == 2;
    let disks: Vec<usize> =
        if separates { sides.iter().copied().filter(|p| chi_of[p] == 1).collect() } else { Vec::new() };
    let count = |p: &usize| originals.get(p).copied().unwrap_or(0);
    let e1 = d1.min(raw.pair[d1]);
    let e2 = d2.min(raw.pair[d2]);
    Some(OracleCut {
        edges: (e1.min(e2), e1.max(e2)),
        bounds_disk: !disks.is_empty(),
        disk_crossings: disks.iter().map(count).min(),
        embedded_arc: disks.iter().any(|p| count(p) == 0 && segments.get(p).copied().unwrap_or(0) == 1),
    })
}

/// Every simple two-point curve of an orientable map, by brute force over
/// unordered pairs of darts. `edges` are named by their least dart.
pub fn oracle_two_cuts(map: &CombinatorialMap) -> Option<Vec<OracleCut>> {
    let raw = oracle_normalize(&Raw::of(map))?;
    let (face, _) = positive_faces(&raw);
    let mut seen = std::collections::BTreeSet::new();
    let mut out = Vec::new();
    for d1 in 0..raw.darts() {
        for d2 in d1 + 1..raw.darts() {
            let (p1, p2) = (raw.pair[d1], raw.pair[d2]);
            if face[d1] != face[d2] || face[p1] != face[p2] {
                continue;
            }
            let here = (d1, d2);
            let there = (p1.min(p2), p1.max(p2));
            if here == there || !seen.insert(here.min(there)) {
                continue;
            }
            if let Some(cut) = oracle_two_cut(&raw, d1, d2) {
                out.push(cut);
            }
        }
    }
    out.sort();
    Some(out)
}

pub fn oracle_obviously_prime(map: &CombinatorialMap) -> Option<bool> {
    Some(oracle_two_cuts(map)?.iter().all(|c| !c.bounds_disk || c.embedded_arc))
}

/// Passes along strands: entering at dart `a`, a strand leaves through the dart
/// two steps round the rotation and enters the next crossing at its partner.
pub fn oracle_strands(raw: &Raw) -> Vec<Vec<Dart>> {
    let mut used = vec![false; raw.darts()];
    let mut walks = Vec::new();
    for s in 0..raw.darts() {
        if used[s] {
            continue;
        }
        let mut walk = Vec::new();
        let mut a = s;
        while !used[a] {
            let r = &raw.rot[raw.vertex[a]];
            let out = r[(raw.pos[a] + 2) % 4];
            used[a] = true;
            used[out] = true;
            walk.push(a);
            a = raw.pair[out];
        }
        walks.push(walk);
    }
    walks
}

/// Height of the pass entering at `a` when crossing `v` has its over strand
/// through rotation positions `over_pos` and `over_pos + 2`.
fn is_over(raw: &Raw, a: Dart, over_pos: &[usize]) -> bool {
    raw.pos[a] % 2 == over_pos[raw.vertex[a]] % 2
}

/// Heights are chart-relative; a negative edge reverses the chart and with it
/// the meaning of "over", so consecutive labels must then agree.
pub fn oracle_alternates(raw: &Raw, over_pos: &[usize]) -> bool {
    oracle_strands(raw).iter().all(|w| {
        w.len() < 2
            || (0..w.len()).all(|i| {
                let out = raw.rot[raw.vertex[w[i]]][(raw.pos[w[i]] + 2) % 4];
                let differ = is_over(raw, w[i], over_pos) != is_over(raw, w[(i + 1) % w.len()], over_pos);
                differ != raw.neg[out]
            })
    })
}

/// Whether some over/under choice alternates, by trying all of them.
pub fn oracle_alternatable(map: &CombinatorialMap) -> bool {
    let raw = Raw::of(map);
    let nv = raw.rot.len();
    (0..1u32 << nv).any(|bits| {
        let over: Vec<usize> = (0..nv).map(|v| ((bits >> v) & 1) as usize).collect();
        oracle_alternates(&raw, &over)
    })
}

pub fn diagram_alternates(diagram: &LinkDiagram) -> bool {
    let raw = Raw::of(diagram.map());
    let over: Vec<usize> = (0..raw.rot.len()).map(|v| raw.pos[diagram.over_dart(v)]).collect();
    oracle_alternates(&raw, &over)
}

/// Pass-graph constraints on nodes `2 * crossing + strand`; the flag is true
/// when the two heights must differ.
pub fn oracle_pass_graph(raw: &Raw) -> Vec<(usize, usize, bool)> {
    let node = |a: Dart| 2 * raw.vertex[a] + raw.pos[a] % 2;
    let mut edges: Vec<(usize, usize, bool)> = (0..raw.rot.len()).map(|v| (2 * v, 2 * v + 1, true)).collect();
    for w in oracle_strands(raw) {
        if w.len() >= 2 {
            for i in 0..w.len() {
                let out = raw.rot[raw.vertex[w[i]]][(raw.pos[w[i]] + 2) % 4];
                edges.push((node(w[i]), node(w[(i + 1) % w.len()]), !raw.neg[out]));
            }
        }
    }
    edges
}

/// A witness cycle is valid when consecutive nodes are joined by constraints
/// that can be chosen with an odd number of "differ" edges.
pub fn oracle_inconsistent_cycle(raw: &Raw, cycle: &[usize]) -> bool {
    let edges = oracle_pass_graph(raw);
    // parities reachable so far
    let mut reach = [true, false];
    for k in 0..cycle.len() {
        let (a, b) = (cycle[k], cycle[(k + 1) % cycle.len()]);
        let labels: Vec<bool> =
            edges.iter().filter(|&&(x, y, _)| (x, y) == (a, b) || (x, y) == (b, a)).map(|&(_, _, d)| d).collect();
        if labels.is_empty() {
            return false;
        }
        let mut next = [false, false];
        for p in 0..2 {
            if reach[p] {
                for &d in &labels {
                    next[p ^ usize::from(d)] = true;
                }
            }
        }
        reach = next;
    }
    reach[1]
}

/// Isomorphism of connected diagrams (rotations, pairing, signs and over
/// strands) by trying every image of dart 0.
pub fn oracle_isomorphic(a: &LinkDiagram, b: &LinkDiagram, mirror: bool) -> bool {
    let ra = Raw::of(a.map());
    let mut rb = Raw::of(b.map());
    if mirror {
        rb = Raw::build(
            rb.rot.iter().map(|r| r.iter().rev().copied().collect()).collect(),
            rb.pair.clone(),
            rb.neg.clone(),
        );
    }
    if ra.darts() != rb.darts() || ra.rot.len() != rb.rot.len() {
        return false;
    }
    let over_a = |d: Dart| a.is_over(d);
    let over_b = |d: Dart| b.is_over(d);
    (0..rb.darts()).any(|t| {
        let mut f = vec![usize::MAX; ra.darts()];
        let mut used = vec![false; rb.darts()];
        let mut stack = vec![(0, t)];
        while let Some((x, y)) = stack.pop() {
            if f[x] != usize::MAX {
                if f[x] != y {
                    return false;
                }
                continue;
            }
            if used[y]
                || ra.neg[x] != rb.neg[y]
                || over_a(x) != over_b(y)
                || ra.rot[ra.vertex[x]].len() != rb.rot[rb.vertex[y]].len()
            {
                return false;
            }
            f[x] = y;
            used[y] = true;
            stack.push((ra.next(x), rb.next(y)));
            stack.push((ra.pair[x], rb.pair[y]));
        }
        f.iter().all(|&y| y != usize::MAX)
    })
}

/// Random 4-regular signed map with `nv` vertices; loops and multi-edges allowed.
pub fn random_map(rng: &mut StdRng, nv: usize, negative_rate: f64) -> CombinatorialMap {
    random_regular(rng, nv, 4, negative_rate)
}

pub fn random_regular(rng: &mut StdRng, nv: usize, degree: usize, negative_rate: f64) -> CombinatorialMap {
    let n = nv * degree;
    let mut darts: Vec<Dart> = (0..n).collect();
    darts.shuffle(rng);
    let edges: Vec<(Dart, Dart, Sign)> = darts
        .chunks(2)
        .map(|c| (c[0], c[1], if rng.gen_bool(negative_rate) { Sign::Negative } else { Sign::Positive }))
        .collect();
    let rotations = (0..nv).map(|v| (degree * v..degree * v + degree).collect()).collect();
    CombinatorialMap::new(rotations, &edges).unwrap()
}

pub fn random_connected_map(rng: &mut StdRng, nv: usize, negative_rate: f64) -> CombinatorialMap {
    loop {
        let m = random_map(rng, nv, negative_rate);
        if oracle_surface(&m).components == 1 {
            return m;
        }
    }
}

/// Random connected diagram with a random over/under choice at each crossing.
pub fn random_diagram(rng: &mut StdRng, nv: usize, negative_rate: f64) -> LinkDiagram {
    let map = random_connected_map(rng, nv, negative_rate);
    let over = (0..nv).map(|v| map.rotation(v)[rng.gen_range(0..4)]).collect();
    LinkDiagram::new(map, over).unwrap()
}

/// Random connected alternating diagram (retries until the map is alternatable).
pub fn random_alternating(rng: &mut StdRng, nv: usize, negative_rate: f64) -> LinkDiagram {
    loop {
        let map = random_connected_map(rng, nv, negative_rate);
        if let Ok(d) = surflink::diagram::alternating_assignment(&map) {
            return d;
        }
    }
}

/// Same diagram with darts renamed, vertices reordered and rotations started
/// at a random position.
pub fn scramble(rng: &mut StdRng, d: &LinkDiagram) -> LinkDiagram {
    let map = d.map();
    let n = map.dart_count();
    let mut perm: Vec<Dart> = (0..n).collect();
    perm.shuffle(rng);
    let mut order: Vec<usize> = (0..map.vertex_count()).collect();
    order.shuffle(rng);
    let rotations: Vec<Vec<Dart>> = order
        .iter()
        .map(|&v| {
            let r = map.rotation(v);
            let k = rng.gen_range(0..r.len());
            (0..r.len()).map(|i| perm[r[(i + k) % r.len()]]).collect()
        })
        .collect();
    let edges: Vec<(Dart, Dart, Sign)> = map.edges().map(|(a, b, s)| (perm[a], perm[b], s)).collect();
    let over = order.iter().map(|&v| perm[d.over_dart(v)]).collect();
    LinkDiagram::new(CombinatorialMap::new(rotations, &edges).unwrap(), over).unwrap()
}

pub fn rng(seed: u64) -> StdRng {
    StdRng::seed_from_u64(seed)
}
