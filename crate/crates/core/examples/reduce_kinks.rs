// Add nugatory kinks to a trefoil and remove them again.

use std::error::Error;

use surflink::catalog;
use surflink::diagram::{find_nugatory, reduce};
use surflink::map::are_isomorphic;

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let kinked = catalog::kinked_trefoil(3);
    println!("kinked: {} crossings, {} nugatory", kinked.crossing_count(), find_nugatory(&kinked).len());
    let reduced = reduce(&kinked);
    println!("reduced: {} crossings", reduced.crossing_count());
    if !are_isomorphic(reduced.map(), catalog::trefoil().map()) {
        return Err("reduction should recover the trefoil".into());
    }
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().expect("reduce");
}
