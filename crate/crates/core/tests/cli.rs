use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

fn data(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("data").join(name)
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_surflink")).args(args).output().unwrap()
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).unwrap()
}

fn scratch(name: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("surflink-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    dir.join(name)
}

#[test]
fn torus_weave_is_hyperbolic() {
    let out = run(&["certify", data("torus_weave2.dgm").to_str().unwrap(), "--json"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["verdict"]["kind"], "Hyperbolic");
    assert_eq!(v["verdict"]["citation"], "Theorem 1");
    assert_eq!(v["surface"]["chi"], 0);
    assert_eq!(v["checks"]["obviously_prime"], true);
}

#[test]
fn granny_fails_with_a_witness() {
    let out = run(&["--json", "certify", data("granny.dgm").to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["verdict"]["kind"], "FailsHypothesis");
    assert_eq!(v["verdict"]["witness"]["check"], "obviously_prime");
    assert!(v["verdict"]["witness"]["evidence"].is_object());
}

#[test]
fn ambient_file_adds_a_conclusion() {
    let ambient = scratch("ambient.txt");
    std::fs::write(&ambient, "M is a finite-volume hyperbolic 3-manifold\n").unwrap();
    let out =
        run(&["certify", data("genus_two.dgm").to_str().unwrap(), "--ambient", ambient.to_str().unwrap(), "--json"]);
    let v = json(&out);
    assert_eq!(v["ambient"]["kind"], "ConditionallyHyperbolic");
    assert!(v["citations"].as_array().unwrap().iter().any(|c| c == "Theorem 3"));
}

#[test]
fn errors_use_exit_code_one() {
    let out = run(&["certify", "/nonexistent/diagram.dgm"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(!out.stderr.is_empty());
    let bad = scratch("bad.dgm");
    std::fs::write(&bad, "pd X[1,1,2,2]\n").unwrap();
    assert_eq!(run(&["check", bad.to_str().unwrap()]).status.code(), Some(1));
}

#[test]
fn reduce_writes_the_reduced_diagram() {
    let out_path = scratch("reduced.dgm");
    let out = run(&["reduce", data("kinked_trefoil.dgm").to_str().unwrap(), "-o", out_path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let (d, _) = surflink::format::parse_diagram(&std::fs::read_to_string(&out_path).unwrap()).unwrap();
    assert_eq!(d.crossing_count(), 3);
}

#[test]
fn cover_and_weave_emit_diagrams() {
    let cover = run(&["cover", data("klein_one.dgm").to_str().unwrap()]);
    let (lifted, _) = surflink::format::parse_diagram(std::str::from_utf8(&cover.stdout).unwrap()).unwrap();
    assert_eq!(lifted.crossing_count(), 2);
    let weave = run(&["weave", data("hexagon_pair.map").to_str().unwrap()]);
    assert_eq!(weave.status.code(), Some(0));
    let (w, _) = surflink::format::parse_diagram(std::str::from_utf8(&weave.stdout).unwrap()).unwrap();
    assert_eq!(w.crossing_count(), 4);
    assert!(w.is_alternating().alternating);
}

#[test]
fn batch_keeps_input_order() {
    let list = scratch("batch.txt");
    let names = ["trefoil.dgm", "torus_weave2.dgm", "figure_eight.dgm"];
    let body: String = names.iter().map(|n| format!("{}\n", data(n).display())).collect();
    std::fs::write(&list, body).unwrap();
    let out = run(&["stats", "--batch", list.to_str().unwrap(), "--json"]);
    assert_eq!(out.status.code(), Some(0));
    let lines: Vec<Value> =
        std::str::from_utf8(&out.stdout).unwrap().lines().map(|l| serde_json::from_str(l).unwrap()).collect();
    assert_eq!(lines.len(), 3);
    for (line, name) in lines.iter().zip(names) {
        assert!(line["input"].as_str().unwrap().ends_with(name));
    }
    assert_eq!(run(&["reduce", "--batch", list.to_str().unwrap(), "-o", "x.dgm"]).status.code(), Some(1));
}
