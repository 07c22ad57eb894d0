use std::process::{Command, Output};

use qmzv_core::{Word, WordSum};
use serde_json::Value;

fn qmzv(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_qmzv")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json_lines(o: &Output) -> Vec<Value> {
    stdout(o).lines().map(|l| serde_json::from_str(l).unwrap()).collect()
}

#[test]
fn zeta_prints_truncated_series() {
    let o = qmzv(&["zeta", "[2]", "--precision", "5"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "q + q^2 - q^3 + 2q^4 + O(q^5)\n");

    let o = qmzv(&["zeta", "[]", "--precision", "3"]);
    assert_eq!(stdout(&o), "1 + O(q^3)\n");
}

#[test]
fn zeta_star_of_depth_one_matches_plain() {
    let plain = qmzv(&["zeta", "[3]", "--precision", "12"]);
    let star = qmzv(&["zeta", "[3]", "--precision", "12", "--star"]);
    assert_eq!(stdout(&plain), stdout(&star));
}

#[test]
fn zeta_json() {
    let o = qmzv(&["zeta", "[2]", "--precision", "4", "--output", "json"]);
    let doc = &json_lines(&o)[0];
    assert_eq!(doc["coefficients"], serde_json::json!(["0", "1", "1", "-1"]));
    assert_eq!(doc["precision"], 4);
}

#[test]
fn input_errors_exit_with_2() {
    let o = qmzv(&["zeta", "[1]"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("non-admissible argument"));

    assert_eq!(qmzv(&["zeta", "[2"]).status.code(), Some(2));
    assert_eq!(qmzv(&["relations", "--precision", "1"]).status.code(), Some(2));
    assert_eq!(qmzv(&["relations", "--max-n", "0"]).status.code(), Some(2));
    assert_eq!(qmzv(&["verify", "duality", "--circledast-variant", "minus"]).status.code(), Some(2));

    let o = qmzv(&["verify", "unknown-suite"]);
    assert_eq!(o.status.code(), Some(2));
    let err = String::from_utf8_lossy(&o.stderr);
    assert!(err.contains("duality") && err.contains("hbar-degeneration"), "{err}");
}

#[test]
fn verify_suites_pass() {
    let o = qmzv(&["verify", "duality", "--max-weight", "4"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).ends_with("duality: 15 of 15 cases passed\n"));

    let o = qmzv(&["verify", "products", "--max-weight", "3", "--max-n", "6"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).lines().all(|l| !l.starts_with("FAIL")));
}

#[test]
fn bar_variant_is_reported_as_failure() {
    let o = qmzv(&["verify", "hbar-degeneration", "--circledast-variant", "bar", "--output", "json"]);
    assert_eq!(o.status.code(), Some(1));
    let failed: Vec<_> = json_lines(&o).into_iter().filter(|c| c["passed"] == false).collect();
    assert!(failed.iter().any(|c| c["case"] == "[1,1] [1,1]"));
}

#[test]
fn smallest_relation() {
    let o = qmzv(&["relations", "--max-weight", "2", "--max-n", "1", "--precision", "30", "--output", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let docs = json_lines(&o);
    assert_eq!(docs.len(), 1);
    assert_eq!(docs[0]["w1"], "[1]");
    assert_eq!(docs[0]["w2"], "[1]");
    assert_eq!(docs[0]["residual_valuation"], "≥30");
}

#[test]
fn weight_three_relations_include_flagship() {
    let o = qmzv(&["relations", "--max-weight", "3", "--max-n", "1", "--output", "json"]);
    let flagship = serde_json::json!([{"word": "[3]", "coeff": "1"}, {"word": "[2,1]", "coeff": "-1"}]);
    assert!(json_lines(&o).iter().any(|d| d["linear_arg"] == flagship));
}

#[test]
fn weight_one_gives_empty_stream() {
    let o = qmzv(&["relations", "--max-weight", "1", "--max-n", "2"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(o.stdout.is_empty());
}

#[test]
fn output_is_independent_of_worker_count() {
    let run = |w: &str| {
        qmzv(&["relations", "--max-weight", "4", "--max-n", "2", "--precision", "20", "--output", "json", "--workers", w])
            .stdout
    };
    let one = run("1");
    assert_eq!(one, run("4"));
    assert_eq!(one, run("0"));
}

#[test]
fn emitted_words_parse_back() {
    let o = qmzv(&["relations", "--max-weight", "4", "--max-n", "2", "--variant", "q-deformed", "--output", "json"]);
    for doc in json_lines(&o) {
        for key in ["w1", "w2"] {
            let text = doc[key].as_str().unwrap();
            assert_eq!(text.parse::<Word>().unwrap().to_string(), text);
        }
        for t in doc["linear_arg"].as_array().unwrap() {
            let text = t["word"].as_str().unwrap();
            assert_eq!(text.parse::<Word>().unwrap().to_string(), text);
        }
    }
    let o = qmzv(&["relations", "--max-weight", "3", "--max-n", "2"]);
    for line in stdout(&o).lines() {
        let linear = line.split("linear ").nth(1).unwrap().split(';').next().unwrap();
        let parsed: WordSum = linear.parse().unwrap();
        assert_eq!(parsed.to_string(), linear);
    }
}

#[test]
fn seeded_suite_is_reproducible() {
    let a = qmzv(&["verify", "series", "--seed", "11", "--precision", "16"]);
    let b = qmzv(&["verify", "series", "--seed", "11", "--precision", "16"]);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
}
