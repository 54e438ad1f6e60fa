use std::io::Write;
use std::process::{Command, Stdio};

use num_traits::Zero;
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use realstable::rat::ratio;
use realstable::BiPoly;
use realstable_cli::document::InputDocument;
use realstable_cli::{run, Outcome, EXIT_INPUT, EXIT_NOT_STABLE, EXIT_STABLE};
use serde_json::Value;

fn invoke(args: &[&str], stdin: &str) -> Outcome {
    let mut input = stdin.as_bytes();
    run(std::iter::once("realstable").chain(args.iter().copied()), &mut input)
}

fn check_json(p: &str) -> (i32, Value) {
    let o = invoke(&["check", "-", "--json"], p);
    (o.code, serde_json::from_str(&o.stdout).unwrap_or(Value::Null))
}

const XY_PLUS_1: &str = r#"{"kind":"bivariate","terms":[{"i":1,"j":1,"c":"1"},{"i":0,"j":0,"c":"1"}]}"#;
const X_PLUS_Y: &str = r#"{"kind":"bivariate","terms":[{"i":1,"j":0,"c":"1"},{"i":0,"j":1,"c":"1"}]}"#;

#[test]
fn binary_exit_codes() {
    let mut child = Command::new(env!("CARGO_BIN_EXE_realstable"))
        .args(["check", "-"])
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(XY_PLUS_1.as_bytes()).unwrap();
    let out = child.wait_with_output().unwrap();
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8(out.stdout).unwrap().starts_with("not stable"));

    let status = Command::new(env!("CARGO_BIN_EXE_realstable"))
        .args(["gen", "--size", "0"])
        .stderr(Stdio::null())
        .status()
        .unwrap();
    assert_eq!(status.code(), Some(2));
}

#[test]
fn stable_and_not_stable() {
    let (code, v) = check_json(X_PLUS_Y);
    assert_eq!(code, EXIT_STABLE);
    assert_eq!(v["stable"], true);
    assert!(v["witness"].is_null());
    assert_eq!(v["algorithm"], "fast");

    let (code, v) = check_json(XY_PLUS_1);
    assert_eq!(code, EXIT_NOT_STABLE);
    assert_eq!(v["witness"]["condition"], 1);
    assert_eq!(v["witness"]["gamma"], "0");
    assert_eq!(v["witness"]["restriction"], serde_json::json!(["1", "0", "1"]));
}

#[test]
fn edge_witness_in_json() {
    let x_minus_y = r#"{"kind":"bivariate","terms":[{"i":1,"j":0,"c":"1"},{"i":0,"j":1,"c":"-1"}]}"#;
    let (code, v) = check_json(x_minus_y);
    assert_eq!(code, EXIT_NOT_STABLE);
    assert_eq!(v["witness"]["condition"], 2);
    assert_eq!(v["witness"]["t0"], "1/2");
}

#[test]
fn simple_algorithm_and_oracle() {
    let o = invoke(
        &["check", "-", "--algorithm", "simple", "--oracle-samples", "50", "--seed", "3", "--json"],
        X_PLUS_Y,
    );
    assert_eq!(o.code, EXIT_STABLE, "{}", o.stderr);
    let v: Value = serde_json::from_str(&o.stdout).unwrap();
    assert_eq!(v["algorithm"], "simple");
    assert_eq!(v["oracle"]["checked"], 50);
    assert_eq!(v["oracle"]["seed"], 3);
    assert!(v["oracle"]["falsifier"].is_null());
}

#[test]
fn text_report() {
    let o = invoke(&["check", "-"], XY_PLUS_1);
    assert!(o.stdout.contains("witness: at gamma = 0"), "{}", o.stdout);
}

#[test]
fn input_errors_exit_2() {
    let cases = [
        (vec!["check", "-"], "{"),
        (vec!["check", "-"], r#"{"kind":"bivariate","terms":[{"i":0,"j":0,"c":"1/0"}]}"#),
        (vec!["check", "-", "--algorithm", "slow"], X_PLUS_Y),
        (vec!["check", "/nonexistent/file.json"], ""),
        (vec!["check-operator", "-"], X_PLUS_Y),
        (vec!["check", "-"], r#"{"kind":"operator","n":1,"m":1,"matrix":[["1","0"],["0","1"]]}"#),
        (vec!["check-operator", "-"], r#"{"kind":"operator","n":1,"m":1,"matrix":[["1","0"]]}"#),
        (vec!["gen", "--size", "0"], ""),
    ];
    for (args, stdin) in cases {
        let o = invoke(&args, stdin);
        assert_eq!(o.code, EXIT_INPUT, "{args:?}");
        assert!(!o.stderr.is_empty(), "{args:?}");
    }
    let o = invoke(&["check", "-"], r#"{"kind":"bivariate","terms":[{"i":0,"j":0,"c":"1/0"}]}"#);
    assert!(o.stderr.contains("terms[0].c"), "{}", o.stderr);
}

#[test]
fn gen_is_deterministic_and_stable() {
    for size in 1..=3 {
        let a = invoke(&["gen", "--size", &size.to_string(), "--seed", "5"], "");
        let b = invoke(&["gen", "--size", &size.to_string(), "--seed", "5"], "");
        assert_eq!(a, b);
        assert_eq!(a.code, EXIT_STABLE);
        let o = invoke(&["check", "-"], &a.stdout);
        assert_eq!(o.code, EXIT_STABLE, "{}", a.stdout);
    }
    assert_ne!(
        invoke(&["gen", "--size", "3", "--seed", "1"], "").stdout,
        invoke(&["gen", "--size", "3", "--seed", "2"], "").stdout
    );
}

#[test]
fn operator_checks() {
    let derivative = r#"{"kind":"operator","n":2,"m":1,"matrix":[["0","1","0"],["0","0","2"]]}"#;
    let o = invoke(&["check-operator", "-", "--json", "--oracle-samples", "20"], derivative);
    assert_eq!(o.code, EXIT_STABLE, "{}", o.stderr);
    let v: Value = serde_json::from_str(&o.stdout).unwrap();
    assert_eq!(v["preserver"], true);
    assert!(v["spot_check"]["counterexample"].is_null());
    assert!(v["warning"].as_str().unwrap().contains("rank"));

    let at_zero = r#"{"kind":"operator","n":1,"m":2,"matrix":[["1","0"],["0","0"],["1","0"]]}"#;
    let o = invoke(&["check-operator", "-", "--json", "--oracle-samples", "20"], at_zero);
    assert_eq!(o.code, EXIT_NOT_STABLE);
    let v: Value = serde_json::from_str(&o.stdout).unwrap();
    assert_eq!(v["preserver"], false);
    assert!(!v["spot_check"]["counterexample"].is_null());
}

fn random_poly(seed: u64) -> BiPoly {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let terms = (0..rng.gen_range(0..6)).map(|_| {
        (
            (rng.gen_range(0..3), rng.gen_range(0..3)),
            ratio(rng.gen_range(-20..=20), rng.gen_range(1..=9)),
        )
    });
    BiPoly::from_terms(terms)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn documents_round_trip(seed in any::<u64>()) {
        let p = random_poly(seed);
        let d = InputDocument::from_bipoly(&p);
        let back = InputDocument::parse(&d.print()).unwrap();
        prop_assert_eq!(&back, &d);
        if let InputDocument::Bivariate { terms } = back {
            prop_assert!(terms.iter().all(|(_, _, c)| !c.is_zero()));
            let q = BiPoly::from_terms(terms.into_iter().map(|(i, j, c)| ((i, j), c)));
            prop_assert_eq!(q, p);
        }
    }

    #[test]
    fn algorithms_agree_on_small_inputs(seed in any::<u64>()) {
        let d = InputDocument::from_bipoly(&random_poly(seed)).print();
        let fast = invoke(&["check", "-", "--algorithm", "fast"], &d).code;
        let simple = invoke(&["check", "-", "--algorithm", "simple"], &d).code;
        prop_assert_eq!(fast, simple);
    }
}
