//! End-to-end checks of the command-line interface: output contracts and
//! exit codes.

use std::collections::HashMap;
use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_hookschur"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).expect("utf8 output")
}

#[test]
fn schur_product_prints_exact_serialization() {
    let out = run(&["schur", "--product", "1,1", "1", "--rank", "3"]);
    assert!(out.status.success());
    assert_eq!(
        stdout(&out),
        "[{\"partition\":\"1,1,1\",\"mult\":1},{\"partition\":\"2,1\",\"mult\":1}]\n"
    );

    // rank 2 drops the three-row key
    let out = run(&["schur", "--product", "1,1", "1", "--rank", "2"]);
    assert_eq!(stdout(&out), "[{\"partition\":\"2,1\",\"mult\":1}]\n");
}

#[test]
fn schur_other_operations() {
    let out = run(&["schur", "--tensor-power", "2,1", "2", "--rank", "2"]);
    assert!(out.status.success());
    assert_eq!(
        stdout(&out),
        "[{\"partition\":\"3,3\",\"mult\":1},{\"partition\":\"4,2\",\"mult\":1}]\n"
    );

    let out = run(&["schur", "--dim", "2,1", "--rank", "3"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["dimension"], "8");

    let out = run(&["schur", "--branch", "2,1", "2", "1"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v.as_array().unwrap().len(), 4);
}

#[test]
fn vanish_examples() {
    let out = run(&[
        "vanish", "--n", "2", "--e", "2", "--k", "2", "--m", "2", "--alpha", "0", "--p", "2",
        "--q", "2", "--format", "json",
    ]);
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["schema"], "hookschur/vanish-report/v1");
    assert_eq!(v["guaranteed_pq"], true);
    assert_eq!(v["threshold"], 0);

    let out = run(&[
        "vanish", "--n", "1", "--e", "2", "--k", "3", "--m", "1", "--alpha", "0", "--p", "1",
        "--q", "1", "--format", "json",
    ]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["gamma_nonzero"], false);
    assert_eq!(v["theorem"], "none");
    assert_eq!(v["guaranteed_pq"], true);

    let out = run(&[
        "vanish", "--n", "2", "--e", "4", "--k", "2", "--m", "2", "--alpha", "0", "--p", "2",
        "--q", "2", "--format", "json",
    ]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["guaranteed_pq"], false);
    assert_eq!(v["threshold"], 4);
}

#[test]
fn dominance_output() {
    let out = run(&["dominance", "3,2,2", "3,1,1,1,1", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["relation"], "strictly_dominates");

    let out = run(&["dominance", "2,2", "1,1"]);
    assert!(stdout(&out).contains("equivalent"));

    // zero partition is rejected
    let out = run(&["dominance", "", "1"]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn ns_table_output() {
    let out = run(&["ns", "--r", "2", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["r"], 2);
    assert_eq!(v["sigma"], serde_json::json!([0, 2, 3]));
    assert_eq!(v["rows"][2][3], 1);

    let out = run(&["ns", "--r", "25"]);
    assert_eq!(out.status.code(), Some(1), "guard rejects r=25");
}

#[test]
fn audit_passes_and_reports() {
    let out = run(&[
        "audit", "--n", "2", "--e", "3", "--k", "2", "--m", "1", "--alpha0", "0", "--p0", "2",
        "--q0", "2", "--format", "json",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["schema"], "hookschur/audit-report/v1");
    assert_eq!(v["params"]["mode"], "p");
    let checks = v["checks"].as_array().unwrap();
    assert!(checks.iter().all(|c| c["pass"] == true));
    let names: Vec<&str> = checks.iter().map(|c| c["name"].as_str().unwrap()).collect();
    for expected in [
        "morphism_targets_in_b",
        "morphism_l_descent",
        "helper_q_inequalities",
        "cutoff_inequality",
        "kan_equivalence",
        "kan_nonnegativity",
    ] {
        assert!(names.contains(&expected), "missing check {expected}");
    }
}

#[test]
fn audit_q_mode_anchors_r0_at_q0() {
    // p0 = n, q0 = 0: the q-anchored run has r0 = delta(n) = 3, the
    // p-anchored one r0 = delta(0) = 1
    let args = |mode: &'static str| {
        vec![
            "audit", "--n", "3", "--e", "4", "--k", "2", "--m", "1", "--alpha0", "0", "--p0",
            "3", "--q0", "0", "--mode", mode,
        ]
    };
    let out = run(&args("q"));
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("r0=3"), "q-mode r0: {}", stdout(&out));
    let out = run(&args("p"));
    assert!(stdout(&out).contains("r0=1"), "p-mode r0: {}", stdout(&out));

    let out = run(&[
        "audit", "--n", "3", "--e", "4", "--k", "2", "--m", "1", "--alpha0", "0", "--p0", "3",
        "--q0", "0", "--mode", "q", "--format", "json",
    ]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["params"]["mode"], "q");
    assert!(v["checks"].as_array().unwrap().iter().all(|c| c["pass"] == true));
}

#[test]
fn invalid_input_exits_one() {
    // unknown flag
    let out = run(&["vanish", "--bogus", "1"]);
    assert_eq!(out.status.code(), Some(1));
    // alpha out of range
    let out = run(&[
        "vanish", "--n", "2", "--e", "2", "--k", "2", "--m", "1", "--alpha", "2", "--p", "0",
        "--q", "0",
    ]);
    assert_eq!(out.status.code(), Some(1));
    // malformed partition
    let out = run(&["schur", "--product", "2,x", "1", "--rank", "2"]);
    assert_eq!(out.status.code(), Some(1));
    // increasing partition
    let out = run(&["dominance", "1,2", "1"]);
    assert_eq!(out.status.code(), Some(1));
    // bad sweep range
    let out = run(&["sweep", "vanish", "--n", "a..b", "--e", "1", "--k", "1", "--m", "1"]);
    assert_eq!(out.status.code(), Some(1));
    // help exits zero
    let out = run(&["--help"]);
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn sweep_vanish_guarantee_is_monotone_in_q() {
    let out = run(&[
        "sweep", "vanish", "--n", "1..3", "--e", "1..4", "--k", "1..3", "--m", "1..2", "--q",
        "0..n",
    ]);
    assert!(out.status.success());
    let text = stdout(&out);
    let mut lines = text.lines();
    let header: Vec<&str> = lines.next().unwrap().split(',').collect();
    let col = |name: &str| header.iter().position(|h| *h == name).unwrap();
    let (qi, gi) = (col("q"), col("guaranteed_pq"));
    let key_cols: Vec<usize> = ["n", "e", "k", "m", "alpha", "p"]
        .iter()
        .map(|c| col(c))
        .collect();
    let mut last: HashMap<String, (i64, bool)> = HashMap::new();
    for line in lines {
        let cells: Vec<&str> = line.split(',').collect();
        let key: String = key_cols
            .iter()
            .map(|&i| cells[i])
            .collect::<Vec<_>>()
            .join(",");
        let q: i64 = cells[qi].parse().unwrap();
        let g: bool = cells[gi].parse().unwrap();
        if let Some((prev_q, prev_g)) = last.get(&key) {
            assert!(q > *prev_q, "rows out of order");
            assert!(
                !*prev_g || g,
                "guarantee lost as q grew at {key}: q={q}"
            );
        }
        last.insert(key, (q, g));
    }
    assert!(!last.is_empty());
}

#[test]
fn empty_sweep_grid_is_ok() {
    let out = run(&[
        "sweep", "vanish", "--n", "3..2", "--e", "1", "--k", "1", "--m", "1",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    // header only
    assert_eq!(text.lines().count(), 1);
}

#[test]
fn sweep_audit_small_grid_passes() {
    let out = run(&[
        "sweep", "audit", "--n", "1..2", "--e", "1..2", "--k", "1..2", "--m", "1", "--format",
        "json",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["schema"], "hookschur/audit-sweep/v1");
    assert!(!v["reports"].as_array().unwrap().is_empty());
}
