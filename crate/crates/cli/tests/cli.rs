use std::process::{Command, Output};

use serde_json::Value;

fn mdeg(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_mdeg"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json(args: &[&str]) -> (i32, Value) {
    let mut all = vec!["--format", "json"];
    all.extend_from_slice(args);
    let o = mdeg(&all);
    let v = serde_json::from_slice(&o.stdout).unwrap_or_else(|e| panic!("{args:?}: {e}"));
    (o.status.code().unwrap(), v)
}

#[test]
fn classify_exit_codes() {
    assert_eq!(mdeg(&["classify", "3", "4", "5"]).status.code(), Some(1));
    assert_eq!(mdeg(&["classify", "1", "1", "1"]).status.code(), Some(0));
    assert_eq!(mdeg(&["classify", "6", "7", "9"]).status.code(), Some(2));
    assert_eq!(mdeg(&["classify", "0", "1", "2"]).status.code(), Some(3));
    assert_eq!(mdeg(&["classify", "1", "2"]).status.code(), Some(3));
}

#[test]
fn classify_sorts_with_a_note() {
    let o = mdeg(&["classify", "5", "3", "1"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(String::from_utf8_lossy(&o.stderr).contains("sorted to (1,3,5)"));
    assert!(stdout(&o).contains("triple: (1,3,5)"));
}

#[test]
fn classify_json_schema() {
    let (code, v) = json(&["classify", "3", "5", "8"]);
    assert_eq!(code, 0);
    assert_eq!(v["triple"], serde_json::json!([3, 5, 8]));
    assert_eq!(v["status"], "Tame");
    assert_eq!(v["rule_id"], "R8");
    assert_eq!(v["certificate"]["kind"], "semigroup-witness");
    assert_eq!(v["certificate"]["data"]["a"], 1);
    assert_eq!(v["maps"].as_array().unwrap().len(), 3);

    let (code, v) = json(&["classify", "6", "13", "20"]);
    assert_eq!(code, 1);
    assert_eq!(v["rule_id"], "R5");
    assert_eq!(v["reports"].as_array().unwrap().len(), 3);
    assert!(v.get("maps").is_none());
}

#[test]
fn every_verdict_carries_a_rule_id() {
    for t in [
        ["3", "4", "5"],
        ["2", "9", "9"],
        ["4", "9", "14"],
        ["7", "8", "9"],
    ] {
        let (_, v) = json(&["classify", t[0], t[1], t[2]]);
        assert!(v["rule_id"].is_string(), "{t:?}");
    }
}

#[test]
fn json_is_byte_deterministic() {
    for args in [
        &["--format", "json", "classify", "4", "9", "14"][..],
        &[
            "--format",
            "json",
            "wild-enum",
            "5",
            "--count",
            "3",
            "--with-maps",
        ][..],
        &["--format", "json", "verify", "gcds"][..],
    ] {
        assert_eq!(mdeg(args).stdout, mdeg(args).stdout);
    }
}

#[test]
fn construct_maps() {
    let (code, v) = json(&["construct", "nagata", "1", "--verify"]);
    assert_eq!(code, 0);
    assert_eq!(v["multidegree"], serde_json::json!([5, 3, 1]));
    assert_eq!(v["inverse_verified"], true);
    assert_eq!(v["coords"][1], "x*z^2 + y^2*z + y");

    let (_, v) = json(&["construct", "fdk", "6", "1"]);
    assert_eq!(v["multidegree"], serde_json::json!([6, 13, 20]));

    let (_, v) = json(&["construct", "witness", "3", "5", "8", "--verify"]);
    assert_eq!(v["multidegree"], serde_json::json!([3, 5, 8]));
    assert_eq!(v["inverse_verified"], true);

    let (_, v) = json(&["construct", "lemma1", "1", "1"]);
    assert_eq!(v["multidegree"], serde_json::json!([5, 7, 9]));
    let (_, v) = json(&["construct", "lemma2", "3", "1"]);
    assert_eq!(v["multidegree"], serde_json::json!([3, 7, 11]));
}

#[test]
fn construct_names_violated_conditions() {
    let o = mdeg(&["construct", "witness", "3", "5", "7"]);
    assert_eq!(o.status.code(), Some(3));
    assert!(String::from_utf8_lossy(&o.stderr).contains("d3 ∈ d1N + d2N"));
    let o = mdeg(&["construct", "fdk", "0", "1"]);
    assert_eq!(o.status.code(), Some(3));
    assert!(String::from_utf8_lossy(&o.stderr).contains("d >= 1"));
}

#[test]
fn wild_enumeration() {
    let (code, v) = json(&["wild-enum", "4", "--count", "2"]);
    assert_eq!(code, 0);
    let triples: Vec<&Value> = v.as_array().unwrap().iter().map(|e| &e["triple"]).collect();
    assert_eq!(
        triples,
        [
            &serde_json::json!([4, 9, 14]),
            &serde_json::json!([4, 19, 34])
        ]
    );
    assert!(v[0].get("maps").is_none());

    let (_, v) = json(&["wild-enum", "3", "--count", "1", "--with-maps"]);
    assert_eq!(v[0]["triple"], serde_json::json!([3, 7, 11]));
    assert_eq!(v[0]["status"], "NotTame");
    assert_eq!(v[0]["maps"].as_array().unwrap().len(), 3);

    let o = mdeg(&["wild-enum", "2", "--count", "1"]);
    assert_eq!(o.status.code(), Some(3));
    assert!(String::from_utf8_lossy(&o.stderr).contains("d = 2"));
}

#[test]
fn reduction_certificates() {
    let (code, v) = json(&["check-reductions", "6", "1"]);
    assert_eq!(code, 0);
    assert_eq!(v["excludes_tame"], true);
    for r in v["reports"].as_array().unwrap() {
        assert_eq!(r["conclusion"], "reduction_impossible");
    }
    assert_eq!(mdeg(&["check-reductions", "6", "3"]).status.code(), Some(3));
}

#[test]
fn verification_suites() {
    let o = mdeg(&["verify", "exp-vs-closed-form", "--kmax", "5"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("5/5 pass"));

    let (code, v) = json(&["verify", "gcds", "--dmax", "14"]);
    assert_eq!(code, 0);
    assert_eq!(v["passed"], v["total"]);
    assert_eq!(v["total"], 12);

    let (code, v) = json(&["verify", "reductions", "--d", "6", "--k", "1"]);
    assert_eq!(code, 0);
    assert_eq!(v["total"], 1);

    let (code, v) = json(&[
        "verify",
        "identities",
        "--dmax",
        "6",
        "--kmax",
        "2",
        "--lmax",
        "2",
    ]);
    assert_eq!(code, 0);
    assert_eq!(v["passed"], v["total"]);

    assert_eq!(mdeg(&["verify", "nope"]).status.code(), Some(3));
}

#[test]
fn help_exits_cleanly() {
    assert_eq!(mdeg(&["--help"]).status.code(), Some(0));
}
