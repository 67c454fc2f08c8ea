use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;
use tempfile::TempDir;

fn hamwit(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_hamwit")).args(args).env_remove("HAMWIT_ENUM_CAP").output().expect("binary runs")
}

fn run_to(dir: &Path, name: &str, args: &[&str]) -> (Output, Vec<u8>) {
    let path = dir.join(name);
    let mut all = args.to_vec();
    all.extend(["--out", path.to_str().unwrap()]);
    let out = hamwit(&all);
    (out, std::fs::read(&path).unwrap_or_default())
}

fn data_lines(bytes: &[u8]) -> Vec<String> {
    String::from_utf8_lossy(bytes).lines().filter(|l| !l.starts_with('#')).map(str::to_owned).collect()
}

fn csv_rows(bytes: &[u8]) -> Vec<csv::StringRecord> {
    let text = data_lines(bytes).join("\n");
    csv::Reader::from_reader(text.as_bytes()).records().map(Result::unwrap).collect()
}

#[test]
fn same_seed_gives_identical_bytes() {
    let dir = TempDir::new().unwrap();
    for format in ["csv", "json"] {
        let args = ["decider", "--trials", "40", "--seed", "11", "--format", format];
        let (a, first) = run_to(dir.path(), "a", &args);
        let (b, second) = run_to(dir.path(), "b", &args);
        assert!(a.status.success() && b.status.success());
        assert!(!first.is_empty());
        assert_eq!(first, second);
    }
    let (_, one) = run_to(dir.path(), "c", &["approx", "--kind", "halfsplit", "--trials", "80", "--seed", "3"]);
    let (_, two) = run_to(dir.path(), "d", &["approx", "--kind", "halfsplit", "--trials", "80", "--seed", "4"]);
    assert_ne!(one, two);
}

#[test]
fn header_embeds_full_config() {
    let out = hamwit(&["lemma1", "--alpha", "0.1", "--seed", "9"]);
    let text = String::from_utf8(out.stdout).unwrap();
    let first = text.lines().next().unwrap();
    let config: Value = serde_json::from_str(first.strip_prefix("# config ").unwrap()).unwrap();
    assert_eq!(config["command"], "lemma1");
    assert_eq!(config["alpha"], 0.1);
    assert_eq!(config["seed"], 9);
    assert_eq!(config["enum_cap"], 1u64 << 22);
    assert!(config["version"].is_string());
}

#[test]
fn enumeration_cap_comes_from_environment() {
    let out = Command::new(env!("CARGO_BIN_EXE_hamwit"))
        .args(["approx", "--trials", "5", "--n-min", "10", "--n-max", "10"])
        .env("HAMWIT_ENUM_CAP", "512")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("enumeration cap 512"));
}

#[test]
fn lemma1_default_range_has_eight_positive_rows() {
    let out = hamwit(&["lemma1"]);
    assert!(out.status.success());
    let rows = csv_rows(&out.stdout);
    assert_eq!(rows.len(), 8);
    let ns: Vec<&str> = rows.iter().map(|r| &r[0]).collect();
    assert_eq!(ns, ["8", "16", "24", "32", "40", "48", "56", "64"]);
    assert!(rows.iter().all(|r| r[4].parse::<f64>().unwrap() > 0.0));
    assert_eq!(&rows[0][2], "1");
}

#[test]
fn lemma1_smallest_n_is_one_row() {
    let out = hamwit(&["lemma1", "--n-min", "2", "--n-max", "2"]);
    assert!(out.status.success());
    assert_eq!(csv_rows(&out.stdout).len(), 1);
}

#[test]
fn nonpositive_alpha_is_a_usage_error() {
    for alpha in ["0", "-1"] {
        let out = hamwit(&["lemma1", "--alpha", alpha]);
        assert_eq!(out.status.code(), Some(2), "alpha {alpha}");
    }
}

#[test]
fn bad_flags_are_usage_errors() {
    assert_eq!(hamwit(&["lemma1", "--n-min", "9", "--n-max", "3"]).status.code(), Some(2));
    assert_eq!(hamwit(&["approx", "--kind", "tsp"]).status.code(), Some(2));
    assert_eq!(hamwit(&["decider", "--policy", "greedy"]).status.code(), Some(2));
    assert_eq!(hamwit(&["gadgets", "--epsilon", "1"]).status.code(), Some(2));
    assert_eq!(hamwit(&["frobnicate"]).status.code(), Some(2));
}

#[test]
fn empty_corpus_is_an_empty_table() {
    for cmd in ["decider", "approx", "gadgets"] {
        let out = hamwit(&[cmd, "--trials", "0"]);
        assert_eq!(out.status.code(), Some(0), "{cmd}");
        let lines = data_lines(&out.stdout);
        assert!(lines.is_empty(), "{cmd}: {lines:?}");
    }
}

#[test]
fn decider_accepts_planted_and_rejects_empty() {
    let out = hamwit(&["decider", "--trials", "200", "--seed", "5"]);
    assert!(out.status.success());
    let rows = csv_rows(&out.stdout);
    assert_eq!(rows.len(), 200);
    assert!(rows.iter().all(|r| r[2] == r[3]));
    assert!(rows.iter().all(|r| r[1].parse::<usize>().unwrap() <= 14));
}

#[test]
fn approx_kinds_all_pass() {
    for kind in ["nt-vc", "nt-is", "nt-clique", "halfsplit", "nae"] {
        let out = hamwit(&["approx", "--kind", kind, "--trials", "200", "--seed", "8"]);
        assert!(out.status.success(), "{kind}");
        let rows = csv_rows(&out.stdout);
        assert_eq!(rows.len(), 200);
        assert!(rows.iter().all(|r| &r[7] == "true"), "{kind}");
    }
}

#[test]
fn gadget_kinds_all_decode() {
    for (kind, trials) in [("sat", "100"), ("vc", "100"), ("hc", "5")] {
        let out = hamwit(&["gadgets", "--kind", kind, "--trials", trials]);
        assert!(out.status.success(), "{kind}");
        assert!(String::from_utf8_lossy(&out.stdout).contains("# stat success_rate 1\n"), "{kind}");
    }
}

#[test]
fn overshoot_is_reported_not_asserted() {
    let out = hamwit(&["gadgets", "--kind", "sat", "--trials", "100", "--overshoot", "40"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8_lossy(&out.stdout);
    assert!(text.contains("# stat success_rate"));
    assert!(!text.contains("# check"));
}

#[test]
fn baselines_hold() {
    let out = hamwit(&["baselines", "--trials", "20000", "--seed", "2"]);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    let rows = csv_rows(&out.stdout);
    let sections: Vec<&str> = rows.iter().map(|r| &r[0]).collect();
    assert_eq!(sections[0], "random");
    assert!(sections.contains(&"deterministic") && sections.contains(&"adversary"));
    let out = hamwit(&["baselines", "--kind", "deterministic", "--c", "2", "--n-min", "1", "--n-max", "10"]);
    assert!(out.status.success());
    assert_eq!(csv_rows(&out.stdout).len(), 10);
}

#[test]
fn json_rows_mirror_csv_rows() {
    let args = ["approx", "--kind", "halfsplit", "--trials", "30", "--seed", "1"];
    let csv_out = hamwit(&args);
    let mut json_args = args.to_vec();
    json_args.extend(["--format", "json"]);
    let json: Value = serde_json::from_slice(&hamwit(&json_args).stdout).unwrap();
    let text = data_lines(&csv_out.stdout).join("\n");
    let mut reader = csv::Reader::from_reader(text.as_bytes());
    let headers = reader.headers().unwrap().clone();
    let records: Vec<csv::StringRecord> = reader.records().map(Result::unwrap).collect();
    let rows = json["rows"].as_array().unwrap();
    assert_eq!(rows.len(), records.len());
    for (obj, rec) in rows.iter().zip(&records) {
        for (h, field) in headers.iter().zip(rec.iter()) {
            let v = &obj[h];
            let rendered = match v {
                Value::Null => String::new(),
                Value::String(s) => s.clone(),
                other => other.to_string(),
            };
            assert_eq!(rendered, field, "column {h}");
        }
    }
    assert_eq!(json["config"]["format"], "json");
    assert!(json["checks"][0]["passed"].as_bool().unwrap());
}
