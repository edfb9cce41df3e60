// Enumerate two-crossing curves and find a composite witness for the granny knot.

use std::error::Error;

use surflink::catalog;
use surflink::prime::{is_obviously_prime, is_prime_certified};

pub fn run_example() -> Result<(), Box<dyn Error>> {
    for (name, d) in [("figure eight", catalog::figure_eight()), ("granny", catalog::granny())] {
        let check = is_obviously_prime(&d)?;
        println!("{name}: {} candidate curves, obviously prime: {}", check.candidates, check.obviously_prime);
        if let Some(w) = &check.witness {
            println!("  witness crosses edges at occurrences {:?}", w.occurrences);
        }
    }
    let weave = catalog::torus_weave2();
    let cert = is_prime_certified(&weave)?;
    println!("torus weave: prime = {} by {}", cert.prime, cert.basis);
    if !cert.prime {
        return Err("weave should be prime".into());
    }
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().expect("primality");
}
