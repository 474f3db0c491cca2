//! End-to-end tests of the command-line interface: exit codes, file
//! outputs and byte-stable reports.

use std::process::{Command, Output};

fn nsg(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_nsg"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn nsg_env(args: &[&str], key: &str, value: &str) -> Output {
    Command::new(env!("CARGO_BIN_EXE_nsg"))
        .args(args)
        .env(key, value)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).to_string()
}

const GENS: &str = r#"{"type":"generators","gens":[8,17,60,69,78]}"#;
const KW: &str = r#"{"type":"kw","p":8,"q":17,"x":[1,2,3],"y":[4,3,2]}"#;

#[test]
fn info_reports_invariants() {
    let out = nsg(&["info", GENS]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("multiplicity: 8"));
    assert!(text.contains("frobenius: 87"));
    assert!(text.contains("apery: [0, 17, 34, 51, 60, 69, 78, 95]"));
}

#[test]
fn kw_descriptor_accepted_everywhere_a_semigroup_is_expected() {
    let a = stdout(&nsg(&["info", GENS]));
    let b = stdout(&nsg(&["info", KW]));
    assert_eq!(a, b);
}

#[test]
fn betti_oracle_csv() {
    let out = nsg(&[
        "betti",
        r#"{"type":"generators","gens":[17,19,21,23,25]}"#,
        "--method",
        "oracle",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.starts_with("i,degree,multiplicity\n"));
    for row in [
        "0,total,1",
        "1,total,10",
        "2,total,20",
        "3,total,15",
        "4,total,4",
    ] {
        assert!(text.contains(row), "missing {row} in {text}");
    }
}

#[test]
fn betti_formula_and_field_flag() {
    let formula = stdout(&nsg(&["betti", KW, "--method", "formula"]));
    assert!(formula.contains("1,total,10"));
    let mod2 = stdout(&nsg(&["betti", KW, "--field", "2"]));
    let rational = stdout(&nsg(&["betti", KW, "--field", "q"]));
    assert_eq!(mod2, rational);
    let bad = nsg(&["betti", KW, "--field", "6"]);
    assert_eq!(bad.status.code(), Some(2));
}

#[test]
fn ideal_cm_reports_failed_condition_with_exit_zero() {
    let out = nsg(&["ideal", "cm", KW]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("not CM: x1+y1 = 5 < p-1 = 7"));
}

#[test]
fn ideal_tangent_cone_mu() {
    let out = nsg(&["ideal", "tangent-cone", KW]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).starts_with("mu: 11\n"));
}

#[test]
fn ideal_gens_printout() {
    let out = nsg(&[
        "ideal",
        "gens",
        r#"{"type":"kw","p":5,"q":8,"x":[3],"y":[1]}"#,
    ]);
    assert_eq!(stdout(&out), "u1^2 - u^2*v^3\nv^4 - u^3*u1\nv*u1 - u^5\n");
}

#[test]
fn apery_writes_dot_file() {
    let dir = std::env::temp_dir().join("nsg-cli-test-dot");
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("hasse.dot");
    let path_str = path.to_str().unwrap();
    let out = nsg(&["apery", GENS, "--dot", path_str]);
    assert_eq!(out.status.code(), Some(0));
    let dot = std::fs::read_to_string(&path).unwrap();
    assert!(dot.starts_with("digraph hasse {"));
    assert!(dot.contains("n0 -> n1;"));
    std::fs::remove_file(path).ok();
}

#[test]
fn poset_pipeline_round_trip() {
    let decomposed = stdout(&nsg(&[
        "poset",
        "decompose",
        r#"{"type":"generators","gens":[5,13,14,17]}"#,
    ]));
    assert!(decomposed.contains("\"a\":3"));
    let realized = stdout(&nsg(&[
        "poset",
        "realize",
        r#"{"m":5,"covers":[[0,3],[3,1],[0,2],[0,4]]}"#,
    ]));
    assert!(realized.contains("[5,8,19,22]"));
    // strict mode rejects composite moduli; relaxed mode allows them
    let strict = nsg(&["poset", "check", GENS]);
    assert_eq!(strict.status.code(), Some(2));
    let relaxed = nsg(&["poset", "check", GENS, "--relaxed"]);
    assert_eq!(relaxed.status.code(), Some(0));
    assert!(stdout(&relaxed).contains("passed: true"));
}

#[test]
fn kw_subcommands() {
    let checked = stdout(&nsg(&[
        "kw",
        "check",
        r#"{"type":"generators","gens":[5,8,9,12]}"#,
        "5",
        "8",
    ]));
    assert_eq!(checked.trim(), "true");
    let witness = stdout(&nsg(&[
        "kw",
        "witness",
        r#"{"type":"generators","gens":[5,13,14,17]}"#,
    ]));
    assert_eq!(witness.trim(), "none within bound");
    let path = stdout(&nsg(&["kw", "path", KW]));
    assert!(path.contains("[[0,3],[1,2],[2,1]]"));
    let det = stdout(&nsg(&["kw", "determinantal", KW]));
    assert_eq!(det.trim(), "false");
}

#[test]
fn bad_inputs_exit_two() {
    assert_eq!(nsg(&["info"]).status.code(), Some(2));
    assert_eq!(nsg(&["info", "{\"type\":\"nope\"}"]).status.code(), Some(2));
    assert_eq!(nsg(&["info", GENS, "--bogus"]).status.code(), Some(2));
    assert_eq!(nsg(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(
        nsg(&["info", r#"{"type":"generators","gens":[2,4]}"#])
            .status
            .code(),
        Some(2)
    );
}

#[test]
fn verify_kw_betti_exit_codes_and_jsonl() {
    // pq <= 12 stays off the degenerate boundary: exit 0
    let clean = nsg(&["verify", "kw-betti", "--budget", "12"]);
    assert_eq!(clean.status.code(), Some(0));
    assert!(stdout(&clean).contains("0 mismatches"));

    // pq <= 30 includes a boundary complete intersection: exit 1
    let dir = std::env::temp_dir().join("nsg-cli-test-jsonl");
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("records.jsonl");
    let path_str = path.to_str().unwrap();
    let dirty = nsg(&["verify", "kw-betti", "--budget", "30", "--jsonl", path_str]);
    assert_eq!(dirty.status.code(), Some(1));
    let jsonl = std::fs::read_to_string(&path).unwrap();
    let mut any_mismatch = false;
    for line in jsonl.lines() {
        let v: serde_json::Value = serde_json::from_str(line).unwrap();
        assert!(v.get("match").is_some());
        if v["match"] == serde_json::Value::Bool(false) {
            any_mismatch = true;
            assert_eq!(v["betti"], serde_json::json!([1, 2, 1]));
        }
    }
    assert!(any_mismatch);
    std::fs::remove_file(path).ok();
}

#[test]
fn verify_jsonl_is_byte_identical_across_thread_counts() {
    let dir = std::env::temp_dir().join("nsg-cli-test-threads");
    std::fs::create_dir_all(&dir).unwrap();
    let one = dir.join("one.jsonl");
    let four = dir.join("four.jsonl");
    nsg_env(
        &[
            "verify",
            "kw-betti",
            "--budget",
            "40",
            "--jsonl",
            one.to_str().unwrap(),
        ],
        "NSG_THREADS",
        "1",
    );
    nsg_env(
        &[
            "verify",
            "kw-betti",
            "--budget",
            "40",
            "--jsonl",
            four.to_str().unwrap(),
        ],
        "NSG_THREADS",
        "4",
    );
    let a = std::fs::read_to_string(&one).unwrap();
    let b = std::fs::read_to_string(&four).unwrap();
    assert_eq!(a, b);
    std::fs::remove_file(one).ok();
    std::fs::remove_file(four).ok();
}

#[test]
fn verify_morales_seeded_and_deterministic() {
    let dir = std::env::temp_dir().join("nsg-cli-test-morales");
    std::fs::create_dir_all(&dir).unwrap();
    let first = dir.join("a.jsonl");
    let second = dir.join("b.jsonl");
    for path in [&first, &second] {
        let out = nsg(&[
            "verify",
            "morales",
            "--trials",
            "10",
            "--seed",
            "7",
            "--jsonl",
            path.to_str().unwrap(),
        ]);
        assert!(out.status.code().is_some());
    }
    assert_eq!(
        std::fs::read_to_string(&first).unwrap(),
        std::fs::read_to_string(&second).unwrap()
    );
    std::fs::remove_file(first).ok();
    std::fs::remove_file(second).ok();
}

#[test]
fn resource_caps_exit_three() {
    // A huge membership query is fine (O(1)), but the oracle guards its
    // embedding-dimension cap with a resource error.
    let wide = r#"{"type":"generators","gens":[101,102,103,104,105,106,107,108,109,110,111]}"#;
    let out = nsg(&["betti", wide, "--method", "oracle"]);
    assert_eq!(out.status.code(), Some(3));
}
