// Certify diagrams on the torus, the sphere and a genus two surface.

use std::error::Error;

use surflink::catalog;
use surflink::certify::{certify, AmbientAssertion};
use surflink::report::certificate_text;

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let ambient = AmbientAssertion::standard();
    let cases = [
        ("torus weave", catalog::torus_weave2()),
        ("figure eight", catalog::figure_eight()),
        ("granny", catalog::granny()),
        ("genus two", catalog::genus_two_octagons()),
    ];
    for (name, d) in &cases {
        let cert = certify(d, None, Some(&ambient));
        print!("{}", certificate_text(name, &cert));
    }
    if !certify(&catalog::torus_weave2(), None, None).is_hyperbolic() {
        return Err("torus weave should certify".into());
    }
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().expect("certify");
}
