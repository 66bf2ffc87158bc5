// Licensed under the Apache License, Version 2.0 (the "License"); you may
// not use this file except in compliance with the License. You may obtain
// a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS, WITHOUT
// WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied. See the
// License for the specific language governing permissions and limitations
// under the License.

use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_condchrom"))
        .args(args)
        .env_remove("CONDCHROM_MAX_NODES")
        .output()
        .expect("binary runs")
}

fn code(out: &Output) -> i32 {
    out.status.code().expect("exit code")
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("json stdout")
}

fn header(out: &Output) -> (usize, usize) {
    let text = String::from_utf8(out.stdout.clone()).unwrap();
    let p = text
        .lines()
        .find(|l| l.starts_with("p "))
        .expect("problem line");
    let f: Vec<usize> = p
        .split_whitespace()
        .skip(2)
        .map(|t| t.parse().unwrap())
        .collect();
    (f[0], f[1])
}

#[test]
fn generate_col_and_dot() {
    let out = run(&["generate", "M(cyc:4)"]);
    assert_eq!(code(&out), 0);
    assert_eq!(header(&out), (8, 12));
    let out = run(&["generate", "L(wd:3,2)"]);
    assert_eq!(header(&out).0, 6);
    let out = run(&["generate", "wd:3,2", "--format", "dot"]);
    let text = String::from_utf8(out.stdout).unwrap();
    assert_eq!(text.lines().filter(|l| l.contains("[label=")).count(), 5);
}

#[test]
fn generate_writes_sidecar() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("g.col");
    let out = run(&["generate", "M(fr:2)", "--out", path.to_str().unwrap()]);
    assert_eq!(code(&out), 0);
    assert!(out.stdout.is_empty());
    let sidecar: Value =
        serde_json::from_str(&std::fs::read_to_string(dir.path().join("g.col.prov.json")).unwrap())
            .unwrap();
    assert_eq!(sidecar["family"], "M(fr:2)");
    assert_eq!(sidecar["vertices"], 11);
}

#[test]
fn generate_reports_parse_position() {
    let out = run(&["generate", "M(cyc:4"]);
    assert_eq!(code(&out), 2);
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(err.contains("position"), "{err}");
}

#[test]
fn solve_examples() {
    for (spec, r, expect) in [("M(fr:1)", "4", 6), ("cyc:4", "2", 4), ("M(cyc:4)", "3", 4)] {
        let out = run(&["solve", spec, "-r", r]);
        assert_eq!(code(&out), 0, "{spec}");
        let v = json(&out);
        assert_eq!(v["chi_r"], expect, "{spec}");
        assert_eq!(v["proven"], true);
        assert_eq!(v["witness"]["k"], expect);
    }
}

#[test]
fn solve_budget_exhaustion() {
    let out = run(&["solve", "M(fr:2)", "-r", "5", "--max-nodes", "3"]);
    assert_eq!(code(&out), 3);
    let v = json(&out);
    assert_eq!(v["proven"], false);
    let bracket = v["bracket"].as_array().unwrap();
    assert!(bracket[0].as_u64().unwrap() <= 6 && bracket[1].as_u64().unwrap() >= 6);
}

#[test]
fn solve_budget_from_env() {
    let out = Command::new(env!("CARGO_BIN_EXE_condchrom"))
        .args(["solve", "M(fr:2)", "-r", "5"])
        .env("CONDCHROM_MAX_NODES", "3")
        .output()
        .unwrap();
    assert_eq!(code(&out), 3);
}

#[test]
fn solve_size_cap() {
    let out = run(&["solve", "cyc:30", "-r", "2"]);
    assert_eq!(code(&out), 2);
    let out = run(&["solve", "cyc:30", "-r", "2", "--force"]);
    assert_eq!(code(&out), 0);
    assert_eq!(json(&out)["chi_r"], 3);
}

#[test]
fn solve_seeded_witness_is_reproducible() {
    let a = run(&["solve", "M(cyc:6)", "-r", "2", "--seed", "7"]);
    let b = run(&["solve", "M(cyc:6)", "-r", "2", "--seed", "7"]);
    assert_eq!(code(&a), 0);
    assert_eq!(a.stdout, b.stdout);
    assert_eq!(json(&a)["chi_r"], 3);
}

#[test]
fn construct_examples() {
    let out = run(&["construct", "M(cyc:5)", "-r", "2", "--verify"]);
    assert_eq!(code(&out), 0);
    let v = json(&out);
    assert_eq!(v["k"], 3);
    assert_eq!(
        v["verification"]["c1_violations"].as_array().unwrap().len(),
        0
    );
    assert_eq!(
        v["verification"]["c2_violations"].as_array().unwrap().len(),
        0
    );

    let out = run(&["construct", "M(kpart:1,2)", "-r", "3", "--verify"]);
    assert_eq!(code(&out), 0);
    assert_eq!(json(&out)["claimed_k"], 4);

    let out = run(&["construct", "M(cyc:5)", "-r", "4"]);
    assert_eq!(code(&out), 2);
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(err.contains("proposition 5"), "{err}");
}

#[test]
fn construct_reports_invalid_printed_formula() {
    let out = run(&["construct", "M(fr:1)", "-r", "2", "--verify"]);
    assert_eq!(code(&out), 1);
    assert!(!json(&out)["verification"]["c1_violations"]
        .as_array()
        .unwrap()
        .is_empty());
}

fn write(dir: &Path, name: &str, text: &str) -> String {
    let p = dir.join(name);
    std::fs::write(&p, text).unwrap();
    p.to_str().unwrap().to_string()
}

#[test]
fn verify_exit_codes() {
    let dir = tempfile::tempdir().unwrap();
    let c4 = write(
        dir.path(),
        "c4.col",
        "p edge 4 4\ne 1 2\ne 2 3\ne 3 4\ne 1 4\n",
    );
    let bad = write(dir.path(), "c.json", r#"{"k":2,"colors":[1,2,1,2]}"#);
    let out = run(&["verify", &c4, &bad, "-r", "2"]);
    assert_eq!(code(&out), 1);
    assert_eq!(json(&out)["c2_violations"].as_array().unwrap().len(), 4);

    let good = write(dir.path(), "g.json", r#"{"k":4,"colors":[1,2,3,4]}"#);
    assert_eq!(code(&run(&["verify", &c4, &good, "-r", "2"])), 0);

    let short = write(dir.path(), "s.json", r#"{"k":2,"colors":[1,2]}"#);
    assert_eq!(code(&run(&["verify", &c4, &short, "-r", "2"])), 2);

    let malformed = write(dir.path(), "m.col", "p edge 4 1\ne 1 x\n");
    assert_eq!(code(&run(&["verify", &malformed, &good, "-r", "2"])), 2);
}

#[test]
fn construct_output_verifies() {
    let dir = tempfile::tempdir().unwrap();
    let col = dir.path().join("l.col");
    assert_eq!(
        code(&run(&[
            "generate",
            "L(wd:3,2)",
            "--out",
            col.to_str().unwrap()
        ])),
        0
    );
    let out = run(&["construct", "L(wd:3,2)", "-r", "4"]);
    assert_eq!(code(&out), 0);
    let coloring = write(
        dir.path(),
        "c.json",
        &String::from_utf8(out.stdout).unwrap(),
    );
    assert_eq!(
        code(&run(&[
            "verify",
            col.to_str().unwrap(),
            &coloring,
            "-r",
            "4"
        ])),
        0
    );
}

#[test]
fn bounds_command() {
    let out = run(&["bounds", "M(fr:1)", "-r", "4"]);
    assert_eq!(code(&out), 0);
    let v = json(&out);
    assert_eq!(v["clique"]["value"], 3);
    assert_eq!(v["best"]["value"], 6);
    assert_eq!(v["best"]["kind"], "vset-d2r");
}

#[test]
fn table_examples() {
    let out = run(&["table", "5", "--n", "4..7"]);
    assert_eq!(code(&out), 0);
    let text = String::from_utf8(out.stdout).unwrap();
    let rows: Vec<&str> = text.lines().skip(1).collect();
    assert_eq!(rows.len(), 8);
    assert!(rows.iter().all(|r| r.contains(",yes,")));

    let out = run(&["table", "1", "--k", "3..4", "--n", "1..3"]);
    assert_eq!(code(&out), 0);

    let out = run(&["table", "6", "--n", "1..2"]);
    assert_eq!(code(&out), 0);
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text
        .lines()
        .any(|l| l.starts_with("4,r=Δ,\"M(kpart:1,1,1)\",6,4,6,6,true,yes")));
}

#[test]
fn table_json_and_timing() {
    let out = run(&[
        "table",
        "4",
        "--parts",
        "1,2;1,1,1",
        "--format",
        "json",
        "--timing",
    ]);
    assert_eq!(code(&out), 0);
    let v = json(&out);
    let rows = v.as_array().unwrap();
    assert_eq!(rows.len(), 2);
    assert_eq!(rows[0]["exact"], 4);
    assert!(rows[0]["ms"].is_u64());
}

#[test]
fn table_skips_oversize_rows() {
    let out = run(&["table", "5", "--n", "4..5", "--size-cap", "9"]);
    assert_eq!(code(&out), 0);
    let text = String::from_utf8(out.stdout).unwrap();
    assert_eq!(text.matches(",skipped,").count(), 2);
}

#[test]
fn input_errors() {
    assert_eq!(code(&run(&["table", "9"])), 2);
    assert_eq!(code(&run(&["table", "5", "--bogus"])), 2);
    assert_eq!(code(&run(&["solve", "-r", "2"])), 2);
    assert_eq!(code(&run(&["solve", "zz:3", "-r", "2"])), 2);
}
