use qpart_wasm::{diagram_pair_json, explore_case_json, rank_catalog_json};
use serde_json::Value;

fn parse(s: String) -> Value {
    serde_json::from_str(&s).unwrap()
}

#[test]
fn explore_reports_equality_and_coefficients() {
    let v = parse(explore_case_json("iv", 20).unwrap());
    assert_eq!(v["report"]["equal"], true);
    assert_eq!(v["lhs"].as_array().unwrap().len(), 21);
    assert_eq!(v["correction"][1], -2);
    assert_eq!(v["correction"][2], -3);

    let v = parse(explore_case_json("rank", 12).unwrap());
    assert_eq!(v["report"]["equal"], true);
    assert_eq!(v["lhs"][8], 13);

    assert_eq!(parse(explore_case_json("mock9", 15).unwrap())["report"]["equal"], true);
}

#[test]
fn explore_rejects_bad_input() {
    assert!(explore_case_json("ix", 10).is_err());
    assert!(explore_case_json("i", 61).is_err());
}

#[test]
fn diagram_pairs() {
    let v = parse(diagram_pair_json("5", "odd").unwrap());
    assert_eq!(v["input"]["rows"], serde_json::json!([[2, 2, 1]]));
    assert_eq!(v["partner"]["parts"], serde_json::json!([2, 2, 1]));

    let v = parse(diagram_pair_json("9,8,5,5,5,4,3,2,1,1", "even").unwrap());
    assert_eq!(v["partner"]["parts"], serde_json::json!([10, 8, 5, 5, 5, 4, 3, 2, 1]));

    let v = parse(diagram_pair_json("", "even").unwrap());
    assert!(v["partner"].is_null());

    assert!(diagram_pair_json("3,3", "odd").is_err());
    assert!(diagram_pair_json("4", "square").is_err());
}

#[test]
fn catalog_totals() {
    let v = parse(rank_catalog_json(8).unwrap());
    assert_eq!(v["leftTotal"], 13);
    assert_eq!(v["rightTotal"], 13);
    assert_eq!(v["left"][0]["label"], "8");
    assert!(rank_catalog_json(41).is_err());
}
