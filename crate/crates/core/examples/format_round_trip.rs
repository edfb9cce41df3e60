// Parse PD notation and the dart form, then serialize and parse back.

use std::error::Error;

use surflink::format::{parse_diagram, serialize_diagram};
use surflink::map::canonical_code;

const PD: &str = "pd X[1,4,2,5] X[3,6,4,1] X[5,2,6,3]";

const TORUS: &str = "\
surface genus=1 orientable=true
crossing 1: 1 2 3 4 over=2
edge 1 3
edge 2 4
";

pub fn run_example() -> Result<(), Box<dyn Error>> {
    for text in [PD, TORUS] {
        let (d, declared) = parse_diagram(text)?;
        let out = serialize_diagram(&d, declared);
        println!("{out}");
        let (back, again) = parse_diagram(&out)?;
        let same =
            canonical_code(d.map(), Some(&d.over_marks())) == canonical_code(back.map(), Some(&back.over_marks()));
        if !same || declared != again {
            return Err("round trip changed the diagram".into());
        }
    }
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().expect("format");
}
