//! Small standard diagrams and quotient maps.

use crate::diagram::{alternating_assignment, LinkDiagram};
use crate::format::parse_diagram;
use crate::map::{CombinatorialMap, Dart, Sign};
use crate::weave::TilingQuotient;

const P: Sign = Sign::Positive;

fn pd(text: &str) -> LinkDiagram {
    parse_diagram(text).expect("catalog PD code").0
}

fn alternate(map: CombinatorialMap) -> LinkDiagram {
    alternating_assignment(&map).expect("catalog map is alternatable")
}

/// Three-crossing trefoil on the sphere.
pub fn trefoil() -> LinkDiagram {
    pd("pd X[1,4,2,5] X[3,6,4,1] X[5,2,6,3]")
}

pub fn figure_eight() -> LinkDiagram {
    pd("pd X[4,2,5,1] X[8,6,1,5] X[6,3,7,4] X[2,7,3,8]")
}

/// Connected sum of two trefoils of the same handedness.
pub fn granny() -> LinkDiagram {
    pd("pd X[1,4,2,5] X[3,6,4,1] X[5,2,12,3] X[7,10,8,11] X[9,12,10,7] X[11,8,6,9]")
}

/// One crossing on the torus where the meridian and longitude meet.
pub fn torus_one_map() -> CombinatorialMap {
    CombinatorialMap::new(vec![vec![0, 1, 2, 3]], &[(0, 2, P), (1, 3, P)]).unwrap()
}

pub fn torus_one() -> LinkDiagram {
    LinkDiagram::new(torus_one_map(), vec![0]).unwrap()
}

/// The one-crossing torus diagram with one edge reversing orientation: a Klein bottle.
pub fn klein_one() -> LinkDiagram {
    let map = CombinatorialMap::new(vec![vec![0, 1, 2, 3]], &[(0, 2, P), (1, 3, Sign::Negative)]).unwrap();
    LinkDiagram::new(map, vec![0]).unwrap()
}

/// Quotient of the square grid by the lattice spanned by (1, 1) and (1, -1):
/// two crossings on the torus. Rotations list the (E, N, W, S) darts.
pub fn torus_weave2_map() -> CombinatorialMap {
    CombinatorialMap::new(vec![vec![0, 1, 2, 3], vec![4, 5, 6, 7]], &[(0, 6, P), (4, 2, P), (1, 7, P), (5, 3, P)])
        .unwrap()
}

pub fn torus_weave2() -> LinkDiagram {
    alternate(torus_weave2_map())
}

/// Square grid modulo a 3-by-1 lattice: the horizontal strand meets three
/// crossings, so no alternating choice exists.
pub fn torus_three_by_one_map() -> CombinatorialMap {
    let rotations = (0..3).map(|i| (4 * i..4 * i + 4).collect()).collect();
    let mut edges = Vec::new();
    for i in 0..3 {
        edges.push((4 * i, 4 * ((i + 1) % 3) + 2, P));
        edges.push((4 * i + 1, 4 * i + 3, P));
    }
    CombinatorialMap::new(rotations, &edges).unwrap()
}

/// Genus-2 quotient of the tiling by regular octagons meeting four at a vertex:
/// four crossings, two octagonal faces.
pub fn genus_two_octagons_map() -> CombinatorialMap {
    CombinatorialMap::new(
        vec![vec![0, 1, 2, 3], vec![4, 5, 6, 7], vec![8, 9, 10, 11], vec![12, 13, 14, 15]],
        &GENUS_TWO_EDGES.map(|(a, b)| (a, b, P)),
    )
    .unwrap()
}

const GENUS_TWO_EDGES: [(Dart, Dart); 8] = [(0, 4), (1, 8), (2, 13), (3, 7), (5, 11), (6, 12), (9, 14), (10, 15)];

pub fn genus_two_octagons() -> LinkDiagram {
    alternate(genus_two_octagons_map())
}

/// Standard closure of the 2-braid with `n` crossings on the sphere.
/// Rotations list the (NE, NW, SW, SE) darts of each crossing.
pub fn two_braid(n: usize) -> LinkDiagram {
    assert!(n >= 2);
    let rotations = (0..n).map(|i| (4 * i..4 * i + 4).collect()).collect();
    let mut edges = Vec::new();
    for i in 0..n {
        let j = (i + 1) % n;
        edges.push((4 * i, 4 * j + 1, P));
        edges.push((4 * i + 3, 4 * j + 2, P));
    }
    alternate(CombinatorialMap::new(rotations, &edges).unwrap())
}

/// Inserts a kink (a crossing with a monogon) into edge `e` of a map.
fn kink_map(map: &CombinatorialMap, e: usize) -> CombinatorialMap {
    let (a, b) = map.edge_darts(e);
    let n = map.dart_count();
    let mut rotations = map.rotations().to_vec();
    rotations.push(vec![n, n + 1, n + 2, n + 3]);
    let mut edges: Vec<(Dart, Dart, Sign)> = map.edges().filter(|&(x, _, _)| x != a).collect();
    edges.push((a, n, map.sign(a)));
    edges.push((n + 1, n + 2, P));
    edges.push((n + 3, b, P));
    CombinatorialMap::new(rotations, &edges).unwrap()
}

/// Trefoil with `k` kinks added on distinct edges; stays alternating.
pub fn kinked_trefoil(k: usize) -> LinkDiagram {
    let mut map = trefoil().map().clone();
    for i in 0..k {
        map = kink_map(&map, i);
    }
    alternate(map)
}

/// Adds `k` kinks to any diagram's map on its first edges and re-alternates.
pub fn with_kinks(diagram: &LinkDiagram, k: usize) -> Option<LinkDiagram> {
    let mut map = diagram.map().clone();
    for i in 0..k {
        map = kink_map(&map, i % map.edge_count());
    }
    alternating_assignment(&map).ok()
}

/// One crossing with two loops on the sphere: a kinked unknot.
pub fn one_crossing_unknot() -> LinkDiagram {
    let map = CombinatorialMap::new(vec![vec![0, 1, 2, 3]], &[(0, 1, P), (2, 3, P)]).unwrap();
    LinkDiagram::new(map, vec![0]).unwrap()
}

/// Theta graph on the torus: two trivalent vertices with a single hexagonal face.
pub fn theta_torus() -> TilingQuotient {
    let map = CombinatorialMap::new(vec![vec![0, 1, 2], vec![3, 4, 5]], &[(0, 3, P), (1, 4, P), (2, 5, P)]).unwrap();
    TilingQuotient::new(map, "theta graph on the torus").unwrap()
}

/// Two hexagons on the torus: the hexagonal tiling modulo an index-two
/// sublattice of its translations. Unlike the theta graph, doubling its least
/// matching yields an alternatable map.
pub fn hexagon_pair_torus() -> TilingQuotient {
    let map = CombinatorialMap::new(
        (0..4).map(|v| (3 * v..3 * v + 3).collect()).collect(),
        &[(0, 10, P), (1, 7, P), (2, 8, P), (3, 6, P), (4, 11, P), (5, 9, P)],
    )
    .unwrap();
    TilingQuotient::new(map, "hexagonal tiling modulo an index-two lattice").unwrap()
}

/// Trivalent claw with a loop at each leaf; it has no perfect matching.
pub fn claw_with_loops() -> TilingQuotient {
    let map = CombinatorialMap::new(
        vec![vec![0, 1, 2], vec![3, 4, 5], vec![6, 7, 8], vec![9, 10, 11]],
        &[(0, 3, P), (1, 6, P), (2, 9, P), (4, 5, P), (7, 8, P), (10, 11, P)],
    )
    .unwrap();
    TilingQuotient::new(map, "claw with loops").unwrap()
}

/// Square weave quotient as a tiling quotient.
pub fn square_weave_quotient() -> TilingQuotient {
    TilingQuotient::new(torus_weave2_map(), "square tiling modulo (1,1), (1,-1)").unwrap()
}

pub fn genus_two_quotient() -> TilingQuotient {
    TilingQuotient::new(genus_two_octagons_map(), "octagons, four per vertex, genus-2 quotient").unwrap()
}

/// Disjoint union of two diagrams; darts of `b` are shifted past those of `a`.
pub fn disjoint_union(a: &LinkDiagram, b: &LinkDiagram) -> LinkDiagram {
    let shift = a.map().dart_count();
    let mut rotations = a.map().rotations().to_vec();
    rotations.extend(b.map().rotations().iter().map(|r| r.iter().map(|d| d + shift).collect::<Vec<_>>()));
    let mut edges: Vec<(Dart, Dart, Sign)> = a.map().edges().collect();
    edges.extend(b.map().edges().map(|(x, y, s)| (x + shift, y + shift, s)));
    let map = CombinatorialMap::new(rotations, &edges).unwrap();
    let mut over = a.over_darts().to_vec();
    over.extend(b.over_darts().iter().map(|d| d + shift));
    LinkDiagram::new(map, over).unwrap()
}
