use std::process::{Command, Output};

use partav::containment::{apply_deletion, DeletionWitness};
use partav::enumeration::d_count;
use partav::{gf_avoid, parse_partition, RatFunc};
use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_partav")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

fn code(o: &Output) -> i32 {
    o.status.code().expect("exited normally")
}

fn json(args: &[&str]) -> (Value, String) {
    let mut full = args.to_vec();
    full.push("--json");
    let o = run(&full);
    let text = stdout(&o);
    (serde_json::from_str(&text).unwrap_or_else(|e| panic!("{args:?}: {e}\n{text}")), text)
}

#[test]
fn introductory_containment_example() {
    let o = run(&["contains", "6,5,5,5,4,4,2,2", "4,3,3,2,2"]);
    assert_eq!(code(&o), 0);
    assert_eq!(stdout(&o), "true\n");
    let o = run(&["contains", "3,3", "2,1"]);
    assert_eq!(code(&o), 1);
    assert_eq!(stdout(&o), "false\n");
    let o = run(&["contains", "3,3", "2,1", "--oracle"]);
    assert_eq!((code(&o), stdout(&o).as_str()), (1, "false\n"));
}

#[test]
fn witness_json_replays() {
    let alpha = "6,5,5,5,4,4,2,2";
    let (v, _) = json(&["contains", alpha, "4,3,3,2,2", "--witness"]);
    assert_eq!(v["contains"], true);
    let nums = |key: &str| -> Vec<usize> {
        v["witness"][key].as_array().unwrap().iter().map(|s| s.as_str().unwrap().parse().unwrap()).collect()
    };
    let w = DeletionWitness { deleted_rows: nums("rows"), deleted_cols: nums("cols") };
    assert_eq!(apply_deletion(&parse_partition(alpha).unwrap(), &w), parse_partition("4,3,3,2,2").unwrap());
    let (v, _) = json(&["contains", "2", "2,1", "--witness"]);
    assert_eq!(v["witness"], Value::Null);
}

#[test]
fn gf_rejects_non_super_strict() {
    let o = run(&["gf", "3,2"]);
    assert_eq!(code(&o), 1);
    assert!(stderr(&o).contains("super-strict"));
    assert!(stdout(&o).is_empty());
}

#[test]
fn gf_output_parses_back() {
    let o = run(&["gf", "5,2"]);
    assert_eq!(code(&o), 0);
    let f: RatFunc = stdout(&o).trim().parse().unwrap();
    assert_eq!(f, gf_avoid(&parse_partition("5,2").unwrap()).unwrap());
    let o = run(&["gf", "5,2", "--with-empty"]);
    let g: RatFunc = stdout(&o).trim().parse().unwrap();
    assert_eq!(g, &f + &RatFunc::one());
    let (v, _) = json(&["gf", "5,2"]);
    assert_eq!(serde_json::from_value::<RatFunc>(v["gf"].clone()).unwrap(), f);
    assert_eq!(v["word"], "(E,N,E)");
}

#[test]
fn series_matches_brute_force_count() {
    for mu in ["5,2", "3,2", "4,1", "1"] {
        let a = run(&["series", mu, "--n-max", "10"]);
        let b = run(&["count", mu, "--n-max", "10", "--method", "brute"]);
        assert_eq!(code(&a), 0);
        assert_eq!(stdout(&a), stdout(&b), "{mu}");
        assert_eq!(json(&["series", mu, "--n-max", "10"]).1, json(&["count", mu, "--n-max", "10"]).1);
    }
    assert!(stderr(&run(&["series", "3,2", "--n-max", "3"])).contains("enumeration"));
    let jobs = run(&["count", "4,2,1", "--n-max", "18", "--jobs", "4"]);
    assert_eq!(stdout(&jobs), stdout(&run(&["count", "4,2,1", "--n-max", "18"])));
}

#[test]
fn decomp_counts() {
    let o = run(&["count", "4,3,1", "--n-max", "30", "--method", "decomp"]);
    let mu = parse_partition("4,3,1").unwrap();
    let expected: String = (1..=30).map(|n| format!("{n} {}\n", d_count(&mu, n).unwrap())).collect();
    assert_eq!(stdout(&o), expected);
    assert_eq!(code(&run(&["count", "3,3", "--method", "decomp"])), 1);
}

#[test]
fn exit_codes() {
    // usage errors: bad literal, increasing parts, unknown flag, missing argument
    for args in [&["contains", "3,a", "1"][..], &["count", "1,2"], &["gf", "5,2", "--bogus"], &["asymptotics", "4,2"]] {
        assert_eq!(code(&run(args)), 2, "{args:?}");
    }
    // caps
    assert_eq!(code(&run(&["count", "3,2", "--n-max", "61"])), 3);
    assert_eq!(code(&run(&["contains", "9,9", "1", "--oracle"])), 3);
    // domain errors
    assert_eq!(code(&run(&["asymptotics", "1", "--n", "5"])), 1);
    assert_eq!(code(&run(&["gf", "0"])), 1);
}

#[test]
fn equivalence_report() {
    let o = run(&["equiv", "2,2", "3,1"]);
    assert_eq!(stdout(&o), "rook_equivalent: true\nwilf_checked_to_20: true\nstrict_rep_p: 3,1\nstrict_rep_q: 3,1\n");
    let (v, _) = json(&["equiv", "2,1", "3", "--n-max", "10"]);
    assert_eq!(v["rook_equivalent"], false);
    assert_eq!(v["wilf_equal"], false);
    assert_eq!(v["wilf_checked_to"], "10");
}

#[test]
fn asymptotics_rows() {
    let o = run(&["asymptotics", "4,3,1", "--n", "20,40"]);
    let text = stdout(&o);
    assert!(text.starts_with("prediction: 1/2 * n^2 * log n\ntable-variant: "), "{text}");
    let (v, _) = json(&["asymptotics", "4,2", "--n", "2000"]);
    let row = &v["rows"][0];
    assert_eq!(row["source"], "ClosedForm");
    assert_eq!(row["observed"], "1000001");
    let ratio: f64 = row["ratio"].as_str().unwrap().parse().unwrap();
    assert!((ratio - 1.0).abs() < 0.01);
}

#[test]
fn table_passes_at_25() {
    let o = run(&["table", "--n-max", "25"]);
    assert_eq!(code(&o), 0);
    let text = stdout(&o);
    assert!(text.lines().any(|l| l == "4,2 pass pass with-empty A033638"), "{text}");
    assert!(!text.contains("fail"));
}

#[test]
fn json_round_trips_and_is_deterministic() {
    let invocations: &[&[&str]] = &[
        &["contains", "5,3,1", "3,1", "--witness"],
        &["count", "4,1", "--n-max", "12"],
        &["count", "4,3,1", "--n-max", "12", "--method", "decomp"],
        &["series", "6,3,1", "--n-max", "12"],
        &["gf", "4,1"],
        &["equiv", "3,3", "4,1,1"],
        &["asymptotics", "3,2", "--n", "100,1000"],
        &["table", "--n-max", "12"],
    ];
    for args in invocations {
        let (v, text) = json(args);
        assert_eq!(v["schema_version"], "1", "{args:?}");
        assert_eq!(format!("{}\n", serde_json::to_string_pretty(&v).unwrap()), text, "{args:?}");
        assert_eq!(json(args).1, text, "{args:?}");
    }
}
