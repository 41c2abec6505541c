use std::path::PathBuf;
use std::process::{Command, Output};

use cab_core::{parse, RingContext};
use serde_json::Value;

fn fixture(name: &str) -> String {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("fixtures").join(name).display().to_string()
}

fn cab(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_cab")).args(args).env_remove("CAB_BUDGET_SECONDS").output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn tmp(name: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("cab-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    dir.join(name)
}

#[test]
fn gb_echoes_coordinate_ideal() {
    let o = cab(&["gb", &fixture("xy.txt")]);
    assert!(o.status.success());
    assert_eq!(stdout(&o), "x\ny\n");
}

#[test]
fn plucker_oracle() {
    let o = cab(&["oracle", "--plucker", "4"]);
    assert_eq!(stdout(&o), "28\n");
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(cab(&["oracle", "--plucker", "1"]).status.code(), Some(1));
}

#[test]
fn twisted_cubic_dual_is_the_discriminant() {
    let o = cab(&["dual", &fixture("twisted_cubic.txt")]);
    assert_eq!(stdout(&o), "Y^2*Z^2-4*X*Z^3-4*Y^3*W+18*X*Y*Z*W-27*X^2*W^2\n");
}

#[test]
fn saturate_and_intersect() {
    let (a, b) = (fixture("lines.txt"), fixture("x.txt"));
    assert_eq!(stdout(&cab(&["saturate", &a, &b])), "y\nz\n");
    assert_eq!(stdout(&cab(&["intersect", &a, &b])), "x*y\nx*z\n");
    assert_eq!(stdout(&cab(&["dim", &fixture("twisted_cubic.txt")])), "1\n");
    assert_eq!(stdout(&cab(&["degree", &fixture("twisted_cubic.txt")])), "3\n");
}

#[test]
fn bad_input_exits_one_with_position() {
    let bad = tmp("bad.txt");
    std::fs::write(&bad, "vars: x y\nx+y\nx+*y\n").unwrap();
    let o = cab(&["gb", bad.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
    let err = String::from_utf8(o.stderr).unwrap();
    assert!(err.contains(":3:3:"), "{err}");
    assert_eq!(cab(&["gb", "/nonexistent/problem.txt"]).status.code(), Some(1));
}

#[test]
fn exhausted_budget_exits_two() {
    let o = cab(&["dual", &fixture("sextic.txt"), "--budget-seconds", "0.05"]);
    assert_eq!(o.status.code(), Some(2));
    let o = Command::new(env!("CARGO_BIN_EXE_cab"))
        .args(["dual", &fixture("sextic.txt")])
        .env("CAB_BUDGET_SECONDS", "0.05")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(2));
}

fn boundary_json(path: &PathBuf) -> (String, Value) {
    let o = cab(&["boundary", &fixture("circle.txt"), "--json", path.to_str().unwrap()]);
    assert!(o.status.success());
    let text = std::fs::read_to_string(path).unwrap();
    let at = |key: &str| text.find(&format!("\"{key}\":")).unwrap();
    let keys = ["variety", "r", "components", "product", "total_degree", "diagnostics"];
    assert!(keys.windows(2).all(|w| at(w[0]) < at(w[1])), "key order in {text}");
    (stdout(&o), serde_json::from_str(&text).unwrap())
}

fn without_timings(mut v: Value) -> Value {
    for d in v["diagnostics"].as_array_mut().unwrap() {
        d.as_object_mut().unwrap().remove("elapsed_ms");
    }
    v
}

#[test]
fn repeated_runs_agree() {
    let (out1, json1) = boundary_json(&tmp("a.json"));
    let (out2, json2) = boundary_json(&tmp("b.json"));
    assert_eq!(out1, out2);
    assert_eq!(without_timings(json1.clone()), without_timings(json2));
    let d1 = stdout(&cab(&["dual", &fixture("twisted_cubic.txt")]));
    assert_eq!(d1, stdout(&cab(&["dual", &fixture("twisted_cubic.txt")])));
}

#[test]
fn json_polynomials_reparse() {
    let (_, json) = boundary_json(&tmp("c.json"));
    let ring = RingContext::new(&["x", "y", "z"]).unwrap();
    let poly = json["components"][0]["poly"].as_str().unwrap();
    let p = parse(poly, &ring).unwrap();
    assert_eq!(p, parse("x^2+y^2-z^2", &ring).unwrap());
    assert_eq!(cab_core::format(&p), poly);
    assert_eq!(json["r"]["bound"], 1);
    assert_eq!(json["variety"]["dim"], 1);

    let path = tmp("d.json");
    let o = cab(&["dual", &fixture("twisted_cubic.txt"), "--json", path.to_str().unwrap()]);
    assert!(o.status.success());
    let v: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    let vars: Vec<&str> = v["vars"].as_array().unwrap().iter().map(|s| s.as_str().unwrap()).collect();
    let dual_ring = RingContext::new(&vars).unwrap();
    for g in v["generators"].as_array().unwrap() {
        let s = g.as_str().unwrap();
        assert_eq!(cab_core::format(&parse(s, &dual_ring).unwrap()), s);
    }
}
