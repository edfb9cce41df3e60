use super::{reversed_rotation, CombinatorialMap, Dart, Sign};

/// Orientation double cover of a map together with its covering data.
#[derive(Debug, Clone)]
pub struct DoubleCover {
    pub map: CombinatorialMap,
    /// Base dart under each cover dart.
    pub projection: Vec<Dart>,
    /// Sheet-swapping deck involution on cover darts.
    pub deck: Vec<Dart>,
}

impl DoubleCover {
    /// Cover dart lying over `d` on `sheet` (0 or 1).
    pub fn lift(&self, d: Dart, sheet: usize) -> Dart {
        sheet * self.projection.len() / 2 + d
    }
}

/// Sheet 0 keeps every local orientation, sheet 1 reverses it; traversing a
/// negative edge moves to the other sheet. The result has only positive edges.
pub fn orientable_double_cover(map: &CombinatorialMap) -> DoubleCover {
    let n = map.dart_count();
    let lift = |d: Dart, sheet: usize| sheet * n + d;
    let mut rotations = Vec::with_capacity(2 * map.vertex_count());
    for rot in map.rotations() {
        rotations.push(rot.iter().map(|&d| lift(d, 0)).collect::<Vec<_>>());
    }
    for rot in map.rotations() {
        let up: Vec<Dart> = rot.iter().map(|&d| lift(d, 1)).collect();
        rotations.push(reversed_rotation(&up));
    }
    let mut pairing = vec![0; 2 * n];
    for sheet in 0..2 {
        for d in 0..n {
            let other = if map.sign(d).is_negative() { 1 - sheet } else { sheet };
            pairing[lift(d, sheet)] = lift(map.pair(d), other);
        }
    }
    let cover = CombinatorialMap::from_parts(rotations, pairing, vec![Sign::Positive; 2 * n])
        .expect("double cover of a valid map is valid");
    DoubleCover {
        map: cover,
        projection: (0..2 * n).map(|x| x % n).collect(),
        deck: (0..2 * n).map(|x| (x + n) % (2 * n)).collect(),
    }
}
