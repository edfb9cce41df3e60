// Classify the surface of a few rotation systems and show their face degrees.

use std::error::Error;

use surflink::catalog;
use surflink::map::{surface_info, trace_faces, CombinatorialMap};

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let maps: Vec<(&str, CombinatorialMap)> = vec![
        ("trefoil", catalog::trefoil().map().clone()),
        ("torus, one crossing", catalog::torus_one_map()),
        ("Klein bottle, one crossing", catalog::klein_one().map().clone()),
        ("genus two, two octagons", catalog::genus_two_octagons_map()),
    ];
    for (name, map) in &maps {
        let info = surface_info(map);
        let degrees = trace_faces(map).degrees();
        println!("{name}: {} (chi = {}), face degrees {degrees:?}", info.surface_type(), info.euler_char);
        if (info.vertex_count + info.face_count) as i64 - info.edge_count as i64 != info.euler_char {
            return Err("Euler relation violated".into());
        }
    }
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().expect("surface classification");
}
