// Build weaves from tiling quotients: a 4-valent square tiling directly, and a
// 3-valent hexagonal tiling after augmentation along a perfect matching whose
// bigons leave an alternating assignment.

use std::error::Error;

use surflink::catalog;
use surflink::certify::certify;
use surflink::map::trace_faces;
use surflink::weave::{
    augment_three_regular, density_stats, perfect_matching, weave_from_map, weave_from_three_regular,
};

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let square = catalog::square_weave_quotient();
    let w = weave_from_map(&square)?;
    let s = density_stats(&w);
    println!(
        "{}: {} crossings, {} components on the {}",
        square.description,
        s.crossings_per_fundamental_domain,
        s.component_count,
        s.surface.surface_type()
    );

    let hex = catalog::hexagon_pair_torus();
    let matching = perfect_matching(hex.map()).ok_or("no perfect matching")?;
    println!("{}: matching {matching:?}", hex.description);
    let aug = augment_three_regular(&hex)?;
    println!("least matching augments to face degrees {:?}", trace_faces(aug.map()).degrees());
    let (_, w) = weave_from_three_regular(&hex)?;
    let cert = certify(&w, None, None);
    println!("augmented weave: {} crossings, hyperbolic: {}", w.crossing_count(), cert.is_hyperbolic());

    match weave_from_map(&catalog::theta_torus()) {
        Err(e) => println!("theta quotient is 3-valent: {e}"),
        Ok(_) => return Err("a 3-valent map is not a link diagram".into()),
    }
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().expect("weave tiling");
}
