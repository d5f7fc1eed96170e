use std::process::{Command, Output};

use qpart::{Diagram, Partition};
use serde_json::Value;

fn qpart(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_qpart"))
        .args(args)
        .env_remove("QPART_MAX_ORDER")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json(args: &[&str]) -> (Value, i32) {
    let mut full = vec!["--format", "json"];
    full.extend_from_slice(args);
    let o = qpart(&full);
    (
        serde_json::from_str(&stdout(&o)).expect("valid JSON"),
        o.status.code().unwrap(),
    )
}

#[test]
fn verify_passes_and_reports_routes() {
    let o = qpart(&["verify", "--case", "iii", "--order", "60"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("equal"));

    let (v, code) = json(&["verify", "--case", "rank", "--order", "40"]);
    assert_eq!(code, 0);
    assert_eq!(v["equal"], true);
    assert_eq!(v["routes"], serde_json::json!(["rank-sum", "one-repeat"]));
}

#[test]
fn verify_all_lists_every_identity_in_order() {
    let (v, code) = json(&["verify", "--case", "all", "--order", "30"]);
    assert_eq!(code, 0);
    let cases: Vec<&str> = v
        .as_array()
        .unwrap()
        .iter()
        .map(|r| r["case"].as_str().unwrap())
        .collect();
    assert_eq!(cases, ["i", "ii", "iii", "iv", "v", "vi", "mock9", "rank"]);
    assert_eq!(v[3]["g_variant"], "signed-half-exponent");
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(qpart(&["verify", "--case", "ix"]).status.code(), Some(2));
    assert_eq!(
        qpart(&["verify", "--case", "i", "--order", "201"]).status.code(),
        Some(2)
    );
    assert_eq!(
        qpart(&["involution", "--name", "franklin", "--max-n", "61"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(qpart(&["involution", "--name", "bogus"]).status.code(), Some(2));
    assert_eq!(
        qpart(&["diagram", "--parts", "3,0", "--style", "odd"]).status.code(),
        Some(2)
    );
}

#[test]
fn order_guard_follows_environment() {
    let run = |limit: &str| {
        Command::new(env!("CARGO_BIN_EXE_qpart"))
            .args(["verify", "--case", "i", "--order", "12"])
            .env("QPART_MAX_ORDER", limit)
            .output()
            .unwrap()
            .status
            .code()
    };
    assert_eq!(run("11"), Some(2));
    assert_eq!(run("12"), Some(0));
    assert_eq!(run("lots"), Some(2));
}

#[test]
fn involution_sweeps() {
    let (v, code) = json(&["involution", "--name", "franklin", "--max-n", "40"]);
    assert_eq!(code, 0);
    assert_eq!(v["involution"], "franklin");
    assert_eq!(v["maxN"], 40);
    assert_eq!(v["violations"], serde_json::json!([]));

    let o = qpart(&["involution", "--name", "paths", "--max-n", "30"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("paths over"));

    let (v, code) = json(&["involution", "--name", "sigma-even", "--max-n", "0"]);
    assert_eq!(code, 0);
    assert_eq!(v["checked"], 1);
}

#[test]
fn diagram_rendering() {
    let o = qpart(&["diagram", "--parts", "8,7,5,4,4,3,2,2,2,1", "--style", "odd"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    let rows: Vec<&str> = text.lines().skip(1).collect();
    assert_eq!(
        rows,
        ["2 2 2 2", "2 2 2 1", "2 2 1", "2 2", "2 2", "2 1", "2", "2", "2", "1"]
    );

    let o = qpart(&["diagram", "--parts", "3,3", "--style", "odd"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("not in the odd-restricted family"));
}

#[test]
fn diagram_json_round_trips() {
    let (v, code) = json(&["diagram", "--parts", "9,8,5,5,5,4,3,2,1,1", "--style", "even", "--pair"]);
    assert_eq!(code, 0);
    let d: Diagram = serde_json::from_value(v["diagram"].clone()).unwrap();
    assert_eq!(d.to_partition(), "9,8,5,5,5,4,3,2,1,1".parse::<Partition>().unwrap());
    let partner: Partition = serde_json::from_value(v["partner"]["partition"].clone()).unwrap();
    assert_eq!(partner.parts(), &[10, 8, 5, 5, 5, 4, 3, 2, 1]);
}

#[test]
fn catalog_of_eight() {
    let o = qpart(&["catalog", "--n", "8"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.contains("total 13"));
    assert!(text.contains("61², 51³, 4², 42², 421², 41⁴, 3²2, 32²1, 321³, 31⁵, 2⁴, 21⁶, 1⁸"));

    let o = qpart(&["--format", "json", "catalog", "--n", "8"]);
    let lines: Vec<Value> = stdout(&o).lines().map(|l| serde_json::from_str(l).unwrap()).collect();
    assert_eq!(lines.len(), 6 + 13);
    let left: i64 = lines
        .iter()
        .filter(|e| e["side"] == "distinct_with_rank_weight")
        .map(|e| e["multiplicity"].as_i64().unwrap())
        .sum();
    assert_eq!(left, 13);
}

#[test]
fn enumerate_counts() {
    let (v, code) = json(&["enumerate", "--n", "10", "--family", "distinct"]);
    assert_eq!(code, 0);
    assert_eq!(v["count"], 10);
    let o = qpart(&["enumerate", "--n", "6"]);
    assert!(stdout(&o).ends_with("11 partitions of 6 in all\n"));
}

#[test]
fn selftest_is_reproducible() {
    let (a, code) = json(&["selftest", "--seed", "42", "--trials", "50"]);
    assert_eq!(code, 0);
    let (b, _) = json(&["selftest", "--seed", "42", "--trials", "50"]);
    assert_eq!(a, b);
    assert_eq!(a["failures"], serde_json::json!([]));
}
