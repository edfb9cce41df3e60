// Lift a Klein bottle diagram to its orientation double cover.

use std::error::Error;

use surflink::catalog;
use surflink::certify::double_cover_diagram;
use surflink::map::surface_info;

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let base = catalog::klein_one();
    let (cover, lifted) = double_cover_diagram(&base);
    let b = surface_info(base.map());
    let c = surface_info(&cover.map);
    println!("base: {} (chi = {})", b.surface_type(), b.euler_char);
    println!("cover: {} (chi = {}), {} crossings", c.surface_type(), c.euler_char, lifted.crossing_count());
    println!("lift alternates: {}", lifted.is_alternating().alternating);
    for d in 0..cover.map.dart_count() {
        if cover.projection[cover.deck[d]] != cover.projection[d] || cover.deck[cover.deck[d]] != d {
            return Err("deck map is not an involution over the base".into());
        }
    }
    if c.euler_char != 2 * b.euler_char || !c.orientable {
        return Err("cover should be orientable with doubled chi".into());
    }
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().expect("double cover");
}
