use std::path::PathBuf;

use affine_hecke::checks::random_bern;
use affine_hecke::cli;
use affine_hecke::json::{element_from_json, element_to_json, to_canonical_string, Element};
use affine_hecke::{AffineHecke, RootDatum};
use rand::rngs::StdRng;
use rand::SeedableRng;
use serde_json::{json, Value};

fn run(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let code = cli::run(std::iter::once("hecke").chain(args.iter().copied()), &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

fn write_temp(name: &str, v: &Value) -> PathBuf {
    let p = std::env::temp_dir().join(format!("hecke-cli-{}-{name}.json", std::process::id()));
    std::fs::write(&p, v.to_string()).unwrap();
    p
}

fn json_out(s: &str) -> Value {
    serde_json::from_str(s).unwrap()
}

#[test]
fn describe_and_bad_type() {
    let (code, out, _) = run(&["--type", "A2", "describe"]);
    assert_eq!(code, 0);
    assert!(!out.is_empty());
    let (code, _, err) = run(&["--type", "Z9", "describe"]);
    assert_eq!(code, 2, "{err}");
    let (code, _, _) = run(&["describe", "--bogus"]);
    assert_eq!(code, 2);
}

#[test]
fn im_quadratic_relation() {
    let s = write_temp("s", &json!({"model": "im", "terms": [{"x": [0], "w": [1]}]}));
    let (code, out, err) = run(&["--type", "A1", "mul", s.to_str().unwrap(), s.to_str().unwrap(), "--model", "im"]);
    assert_eq!(code, 0, "{err}");
    let expected = json!({"model": "im", "terms": [
        {"x": [0], "w": [], "c": {"2": 1}},
        {"x": [0], "w": [1], "c": {"0": -1, "2": 1}},
    ]});
    assert_eq!(json_out(&out), expected);
}

#[test]
fn bernstein_thetas_multiply() {
    let a = write_temp("ta", &json!({"model": "bern", "terms": [{"x": [1]}]}));
    let b = write_temp("tb", &json!({"model": "bern", "terms": [{"x": [-1]}]}));
    let (code, out, _) = run(&["--type", "A1", "mul", a.to_str().unwrap(), b.to_str().unwrap(), "--model", "bern"]);
    assert_eq!(code, 0);
    assert_eq!(json_out(&out), json!({"model": "bern", "terms": [{"x": [0], "w": [], "c": {"0": 1}}]}));
    let (code, _, _) = run(&["--type", "A1", "mul", a.to_str().unwrap(), b.to_str().unwrap(), "--model", "im"]);
    assert_eq!(code, 2);
}

#[test]
fn convert_round_trip() {
    let f = write_temp("conv", &json!({"model": "im", "terms": [{"x": [-1], "w": []}, {"x": [2], "w": [1], "c": {"-1": 3}}]}));
    let (code, out, err) = run(&["--type", "A1", "convert", f.to_str().unwrap(), "--to", "bern", "--round-trip"]);
    assert_eq!(code, 0, "{err}");
    assert_eq!(json_out(&out)["model"], "bern");
}

#[test]
fn satake_verdicts() {
    let (code, out, _) = run(&["--type", "A1", "satake", "--center-orbit", "1"]);
    assert_eq!(code, 0);
    let v = json_out(&out);
    assert_eq!(v["matches_orbit_sum"], true);
    assert_eq!(v["w_invariant"], true);
    let one = json!({"num": {"0": 1}, "den": {"0": 1}});
    assert_eq!(v["terms"], json!([{"x": [-1], "c": one}, {"x": [1], "c": one}]));

    let (code, out, _) = run(&["--type", "A1", "satake", "1"]);
    assert_eq!(code, 0);
    assert_eq!(json_out(&out)["w_invariant"], true);

    let (code, _, _) = run(&["--type", "A1", "satake", "-1"]);
    assert_eq!(code, 2);
}

#[test]
fn check_exit_codes() {
    assert_eq!(run(&["--type", "A1", "check", "cross"]).0, 0);
    assert_eq!(run(&["--type", "A1", "check", "all", "--radius", "1", "--samples", "10"]).0, 0);
    let (code, out, _) = run(&["--type", "A1", "check", "im", "--corrupt-quadratic"]);
    assert_eq!(code, 1);
    assert!(!out.is_empty() || code == 1);
    assert_eq!(run(&["--type", "A1", "check", "nonsense"]).0, 2);
    assert_eq!(run(&["--type", "B2", "--budget", "2", "check", "bern"]).0, 3);
}

#[test]
fn specialized_q_prints_rationals() {
    let s = write_temp("sq", &json!({"model": "im", "terms": [{"x": [0], "w": [1]}]}));
    let (code, out, _) = run(&["--type", "A1", "--q", "3", "mul", s.to_str().unwrap(), s.to_str().unwrap(), "--model", "im"]);
    assert_eq!(code, 0);
    let v = json_out(&out);
    let cs: Vec<&Value> = v["terms"].as_array().unwrap().iter().map(|t| &t["c"]).collect();
    assert_eq!(cs, [&json!("3"), &json!("2")]);
}

#[test]
fn canonical_json_is_stable() {
    let mut rng = StdRng::seed_from_u64(11);
    for (ty, lat) in [("A1", "sc"), ("A2", "ad"), ("B2", "sc")] {
        let rd = RootDatum::build(ty.parse().unwrap(), lat.parse().unwrap()).unwrap();
        let h = AffineHecke::new(rd);
        for _ in 0..20 {
            let f = Element::Bern(random_bern(&h, &mut rng, 4, 2));
            let s1 = to_canonical_string(&element_to_json(h.root_datum(), &f));
            let back = element_from_json(h.root_datum(), &serde_json::from_str(&s1).unwrap()).unwrap();
            assert!(back == f);
            assert_eq!(to_canonical_string(&element_to_json(h.root_datum(), &back)), s1);
        }
    }
}
