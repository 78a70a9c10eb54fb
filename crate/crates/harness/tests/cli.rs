use std::process::{Command, Output};

use ordgap::export::parse_dot;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_ordgap")).args(args).output().expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = run(args);
    assert!(out.status.success(), "{args:?} failed: {}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).unwrap().trim().to_string()
}

fn code(args: &[&str]) -> i32 {
    run(args).status.code().unwrap()
}

#[test]
fn cmp_linear() {
    assert_eq!(stdout(&["cmp", "--sys", "T", "--n", "2", "[0,1]", "[1]"]), "LT");
    assert_eq!(stdout(&["cmp", "--sys", "T", "--n", "1", "[0]", "[0]"]), "EQ");
    assert_eq!(stdout(&["cmp", "--sys", "T", "--n", "1", "[0,0]", "[0]"]), "GT");
    assert_eq!(stdout(&["cmp", "--sys", "T", "--n", "1", "b0", "[0]"]), "LT");
}

#[test]
fn cmp_gap() {
    assert_eq!(stdout(&["cmp", "--sys", "S", "--n", "2", "[1,0]", "[0]"]), "GT");
    assert_eq!(stdout(&["cmp", "--sys", "S", "--n", "2", "[0,0]", "[1]"]), "INC");
    assert_eq!(stdout(&["cmp", "--sys", "S", "--n", "2", "[1]", "[1]"]), "EQ");
    assert_eq!(stdout(&["cmp", "--sys", "S0", "--n", "1", "b0", "[0]"]), "LT");
}

#[test]
fn cmp_binary_and_bh() {
    assert_eq!(stdout(&["cmp", "--sys", "OT", "--n", "1", "z", "(t 0 z z)"]), "LT");
    assert_eq!(stdout(&["cmp", "--sys", "OT0", "--n", "2", "(t 0 (t 1 z z) z)", "(t 0 z z)"]), "GT");
    let r = stdout(&["cmp", "--sys", "BH", "--n", "0", "b0", "[0]"]);
    assert_eq!(r, "LT");
}

#[test]
fn enum_lists_spec_example() {
    let out = stdout(&["enum", "--sys", "T", "--n", "1", "--height", "2"]);
    let lines: Vec<&str> = out.lines().collect();
    assert_eq!(lines.len(), 3);
    for (line, term) in lines.iter().zip(["b0", "[0]", "[0,0]"]) {
        let v: serde_json::Value = serde_json::from_str(line).unwrap();
        assert_eq!(v["term"], term, "{line}");
    }
}

#[test]
fn enum_ot0_one() {
    let out = stdout(&["enum", "--sys", "OT0", "--n", "1", "--height", "2"]);
    assert_eq!(out.lines().count(), 3);
    assert!(out.contains("(t 0 z (t 0 z z))"));
}

/// Splits one CSV record, honouring double quotes.
fn csv_fields(line: &str) -> Vec<String> {
    let (mut fields, mut cur, mut quoted) = (Vec::new(), String::new(), false);
    let mut chars = line.chars().peekable();
    while let Some(c) = chars.next() {
        match c {
            '"' if quoted && chars.peek() == Some(&'"') => {
                cur.push('"');
                chars.next();
            }
            '"' => quoted = !quoted,
            ',' if !quoted => fields.push(std::mem::take(&mut cur)),
            _ => cur.push(c),
        }
    }
    fields.push(cur);
    fields
}

#[test]
fn enum_dot_is_the_cover_relation() {
    let out = stdout(&["enum", "--sys", "S", "--n", "2", "--height", "2", "--format", "dot"]);
    let (labels, covers) = parse_dot(&out).expect("well-formed DOT");
    let csv = stdout(&["enum", "--sys", "S", "--n", "2", "--height", "2", "--format", "csv"]);
    let rows: Vec<Vec<String>> = csv.lines().map(csv_fields).collect();
    assert_eq!(rows[0][1..], labels[..]);
    let less = |i: usize, j: usize| rows[i + 1][j + 1] == "LT";
    let n = labels.len();
    for i in 0..n {
        for j in 0..n {
            let cover = less(i, j) && !(0..n).any(|k| less(i, k) && less(k, j));
            assert_eq!(covers.get(i, j), cover, "{} -> {}", labels[i], labels[j]);
        }
    }
}

#[test]
fn maps() {
    assert_eq!(stdout(&["map", "--name", "sigma", "--n", "0", "th(0,{[0]})"]), "[1,0]");
    assert_eq!(stdout(&["map", "--name", "kappa", "--n", "0", "b0", "b0"]), "[0]");
    assert_eq!(stdout(&["map", "--name", "plus", "(t 0 z z)"]), "(t 1 z z)");
    assert_eq!(stdout(&["map", "--name", "rank", "--n", "2", "(t 0 (t 1 z z) z)"]), "w");
    assert_eq!(stdout(&["map", "--name", "rank", "--n", "1", "(t 0 z (t 0 z z))"]), "2");
}

#[test]
fn oracle_gap() {
    assert_eq!(stdout(&["oracle-gap", "<0>", "<1,0>"]), "true");
    assert_eq!(stdout(&["oracle-gap", "<0,0>", "<1>"]), "false");
}

#[test]
fn check_prints_report() {
    let out = stdout(&["check", "bh-order", "--seed", "7"]);
    let v: serde_json::Value = serde_json::from_str(out.lines().next().unwrap()).unwrap();
    for key in ["suite", "params", "seed", "pairs", "violations", "millis"] {
        assert!(v.get(key).is_some(), "missing {key}");
    }
    assert_eq!(v["suite"], "bh-order");
    assert_eq!(v["seed"], 7);
    assert!(v["violations"].as_array().unwrap().is_empty());
}

#[test]
fn list_has_every_suite() {
    let out = stdout(&["list"]);
    assert_eq!(out.lines().count(), ordgap::suites::SUITES.len());
    assert!(out.lines().any(|l| l.starts_with("gap-oracle")));
}

#[test]
fn bad_input_exits_two() {
    assert_eq!(code(&["cmp", "--sys", "T", "--n", "1", "[2]", "[0]"]), 2);
    assert_eq!(code(&["cmp", "--sys", "T", "--n", "1", "[0", "[0]"]), 2);
    assert_eq!(code(&["check", "no-such-suite"]), 2);
    assert_eq!(code(&["enum", "--sys", "T", "--n", "1", "--x", "poset:2:0<1,1<0", "--height", "1"]), 2);
    assert_eq!(code(&["frobnicate"]), 2);
}
