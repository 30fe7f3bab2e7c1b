//! End-to-end tests for the `contsum` binary: frozen prose lines, the
//! JSON schema and its round-trip through `verify`, byte determinism,
//! and the exit-code contract (0 success, 1 domain error, 2 parse error).

use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_contsum"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).expect("utf-8 stdout")
}

fn stderr(out: &Output) -> String {
    String::from_utf8(out.stderr.clone()).expect("utf-8 stderr")
}

fn json(args: &[&str]) -> serde_json::Value {
    let out = run(args);
    assert_eq!(out.status.code(), Some(0), "stderr: {}", stderr(&out));
    serde_json::from_str(&stdout(&out)).expect("valid JSON")
}

#[test]
fn foursq_431_prints_the_worked_identity() {
    let out = run(&["foursq", "431"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out), "431 = 17^2 + 9^2 + 6^2 + 5^2\n");
}

#[test]
fn twosq_rejects_7_with_the_mod_4_reason() {
    let out = run(&["twosq", "7"]);
    assert_eq!(out.status.code(), Some(1));
    assert_eq!(stderr(&out), "not representable: 7 == 3 (mod 4)\n");
    assert_eq!(stdout(&out), "");
}

#[test]
fn twosq_13_prints_the_identity() {
    let out = run(&["twosq", "13"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out), "13 = 3^2 + 2^2\n");
}

#[test]
fn polytwosq_prints_the_quartic_with_its_unit() {
    let out = run(&[
        "polytwosq",
        "--field",
        "Q",
        "2*X^4-2*X^3+3*X^2-2*X+1",
        "2*X^3+X",
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(
        stdout(&out),
        "m = 2 * ((X^2-1/2*X+1/2)^2 + (1/2*X-1/2)^2)\n"
    );
}

#[test]
fn polytwosq_without_z_is_a_domain_error() {
    let out = run(&["polytwosq", "--field", "Q", "X^2+1"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stderr(&out).contains("supply z"));
}

#[test]
fn polytwosq_over_f2_is_refused() {
    let out = run(&["polytwosq", "--field", "F:2", "X^2+X+1", "X"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stderr(&out).contains("characteristic 2"));
}

#[test]
fn cyclotomic_3_expands_phi_12() {
    let out = run(&["cyclotomic", "3"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out), "Phi_12 = X^4-X^2+1 = (X^2-1)^2 + (X)^2\n");
}

#[test]
fn continuant_euclid_and_multiplier_lines_are_stable() {
    let out = run(&["continuant", "--ring", "Z", "2", "1", "1", "2"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out), "continuant = 13\n");

    let out = run(&["continuant", "--ring", "Z[i]", "8+i", "-1+i", "i"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out), "continuant = 1-7i\n");

    let out = run(&["euclid", "--ring", "Z", "858", "1079"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out), "gcd = 13; quotients = [0, 1, 3, 1, 7, 2]\n");

    let out = run(&["multiplier", "--ring", "Z", "4", "1"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out), "z = 4; w = 1\n");

    let out = run(&["multiplier", "--ring", "Z[i]", "17-5i", "-6-9i"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out), "z = -54+10i\n");
}

#[test]
fn negative_arguments_parse_without_a_separator() {
    let out = run(&["sqrt3", "-19"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out), "-19 = (10^2 - 3*6^2) + (4^2 - 3*3^2)\n");
}

#[test]
fn json_carries_the_fixed_schema_and_the_chain() {
    let v = json(&["--json", "foursq", "431"]);
    let obj = v.as_object().expect("object");
    let keys: Vec<&str> = obj.keys().map(String::as_str).collect();
    assert_eq!(
        keys,
        ["chain", "components", "form", "input", "quotients", "unit"]
    );
    assert_eq!(v["input"], "431");
    assert_eq!(v["form"], "foursq");
    assert_eq!(v["unit"], "1");
    assert_eq!(
        v["components"],
        serde_json::json!(["17", "9", "6", "5"])
    );
    assert_eq!(v["chain"], serde_json::json!(["431", "7", "2", "1"]));
    assert_eq!(v["quotients"], serde_json::json!(["8+i", "-1+i", "i"]));

    // Non-descent commands omit the chain key entirely.
    let v = json(&["--json", "twosq", "13"]);
    let obj = v.as_object().expect("object");
    assert!(!obj.contains_key("chain"));
    assert_eq!(v["components"], serde_json::json!(["3", "2"]));
    assert_eq!(v["quotients"], serde_json::json!(["2", "1", "1", "2"]));
}

#[test]
fn json_components_round_trip_through_verify() {
    for args in [
        ["foursq", "431"],
        ["foursq", "2000"],
        ["eisenstein", "40"],
        ["x2p3y2", "28"],
        ["sqrt3", "-19"],
        ["sqrt3", "19"],
    ] {
        let v = json(&["--json", args[0], args[1]]);
        let components: Vec<String> = v["components"]
            .as_array()
            .expect("components array")
            .iter()
            .map(|c| c.as_str().expect("string component").to_string())
            .collect();
        let form = v["form"].as_str().expect("form token");
        let input = v["input"].as_str().expect("input string");
        let mut verify_args = vec!["verify", form, input];
        verify_args.extend(components.iter().map(String::as_str));
        let out = run(&verify_args);
        assert_eq!(
            out.status.code(),
            Some(0),
            "verify failed for {args:?}: {}",
            stderr(&out)
        );
        assert!(stdout(&out).starts_with("verified: "));
    }
}

#[test]
fn verify_rejects_a_wrong_quadruple() {
    let out = run(&["verify", "foursq", "431", "17", "9", "6", "4"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stderr(&out).contains("evaluates to 422, not 431"));
}

#[test]
fn output_is_byte_deterministic() {
    for args in [
        vec!["--json", "foursq", "431"],
        vec!["--json", "sqrt3", "-19"],
        vec!["foursq", "431"],
        vec!["euclid", "--ring", "Q[X]", "X^3-1", "X^2-1"],
    ] {
        let first = run(&args);
        let second = run(&args);
        assert_eq!(first.status.code(), second.status.code());
        assert_eq!(first.stdout, second.stdout, "args: {args:?}");
    }
}

#[test]
fn parse_failures_exit_2() {
    let cases: &[&[&str]] = &[
        &["continuant", "--ring", "X", "1", "2"],
        &["foursq", "abc"],
        &["continuant", "--ring", "Z", "1", "two"],
        &["verify", "pythagorean", "25", "3", "4", "0", "0"],
        &["euclid", "--ring", "F:9[X]", "X", "X+1"],
    ];
    for args in cases {
        let out = run(args);
        assert_eq!(out.status.code(), Some(2), "args: {args:?}");
    }
    // clap's own usage errors share the code.
    let out = run(&["twosq", "not-a-number"]);
    assert_eq!(out.status.code(), Some(2));
    let out = run(&["no-such-command"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn domain_failures_exit_1() {
    let cases: &[&[&str]] = &[
        &["twosq", "7"],
        &["polytwosq", "--field", "Q", "X^2+1"],
        &["polytwosq", "--field", "F:2", "X^2+X+1", "X"],
        &["verify", "foursq", "431", "17", "9", "6", "4"],
        &["multiplier", "--ring", "M2", "[[1,0],[0,1]]", "[[2,0],[0,2]]"],
        &["euclid", "--ring", "Z", "0", "0"],
    ];
    for args in cases {
        let out = run(args);
        assert_eq!(out.status.code(), Some(1), "args: {args:?}");
        assert!(!stderr(&out).is_empty(), "args: {args:?}");
    }
}

#[test]
fn help_lists_every_subcommand() {
    let out = run(&["--help"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    for name in [
        "twosq",
        "foursq",
        "eisenstein",
        "x2p3y2",
        "sqrt3",
        "polytwosq",
        "cyclotomic",
        "continuant",
        "euclid",
        "multiplier",
        "verify",
    ] {
        assert!(text.contains(name), "help must mention {name}");
    }
}
