use std::fs;
use std::path::PathBuf;
use std::process::{Command, Output};

use kovacic_cli::{read_corpus, StatsReport};
use serde_json::Value;

fn kovacic(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_kovacic")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn corpus(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("corpus").join(name)
}

fn scratch_dir(tag: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("kovacic-cli-{tag}-{}", std::process::id()));
    fs::create_dir_all(&dir).unwrap();
    dir
}

const FIRST: &str = "(2*x+1)*y'' - 2*y' - (2*x+3)*y = 0";
const THIRD_ORDER_POLE: &str = "(1-x)*x^2*y'' + (5*x-4)*x*y' + (6-9*x)*y = 0";

#[test]
fn solve_json_fields_in_order() {
    let out = kovacic(&["solve", "--json", FIRST]);
    assert_eq!(out.status.code(), Some(0));
    let line = stdout(&out);
    let keys = ["case_used", "n", "d", "omega", "p", "y1", "y2", "verified", "status"];
    let positions: Vec<usize> = keys.iter().map(|k| line.find(&format!("\"{k}\"")).unwrap()).collect();
    assert!(positions.windows(2).all(|w| w[0] < w[1]), "{line}");
    let v: Value = serde_json::from_str(&line).unwrap();
    assert_eq!(v["case_used"], 1);
    assert_eq!(v["d"], 1);
    assert_eq!(v["y1"], "x*exp(x)");
    assert_eq!(v["status"], "solved");
}

#[test]
fn exit_codes() {
    assert_eq!(kovacic(&["solve", "y'' = x^(-6)*y"]).status.code(), Some(2));
    assert_eq!(kovacic(&["solve", "y'' + a*y = 0"]).status.code(), Some(1));
    assert_eq!(kovacic(&["solve", "y'' + y' ="]).status.code(), Some(1));
    assert_eq!(kovacic(&["solve", "--n", "5", FIRST]).status.code(), Some(1));
    assert_eq!(kovacic(&["solve", "--case", "3", FIRST]).status.code(), Some(2));
    assert_eq!(kovacic(&["solve", "--case", "2", FIRST]).status.code(), Some(0));
    assert_eq!(kovacic(&["solve", "y'' = (1/(x^2+1))*y"]).status.code(), Some(3));
    assert_eq!(kovacic(&["--help"]).status.code(), Some(0));
}

#[test]
fn text_output() {
    let out = kovacic(&["solve", FIRST]);
    let text = stdout(&out);
    assert!(text.contains("y1:       x*exp(x)"), "{text}");
    assert!(text.contains("verified: true"));
}

#[test]
fn analyze_reports_poles_and_cases() {
    let out = kovacic(&["analyze", "--json", THIRD_ORDER_POLE]);
    assert_eq!(out.status.code(), Some(0));
    let v: Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["poles"], serde_json::json!([[0, 1], [1, 2]]));
    assert_eq!(v["oinf"], 2);
    assert_eq!(v["cases"], serde_json::json!([1, 2, 3]));
    let v: Value = serde_json::from_str(&stdout(&kovacic(&["analyze", "--json", "4*x^2*y'' + (4*x+3)*y = 0"]))).unwrap();
    assert_eq!(v["poles"], serde_json::json!([[0, 2]]));
    let v: Value = serde_json::from_str(&stdout(&kovacic(&["analyze", "--json", "(3*x-1)^2*y'' = y"]))).unwrap();
    assert_eq!(v["poles"], serde_json::json!([["1/3", 2]]));
}

#[test]
fn forced_cases_agree() {
    for (case, n) in [("1", None), ("2", None), ("3", Some("4"))] {
        let mut args = vec!["solve", "--json", "--case", case];
        if let Some(n) = n {
            args.extend(["--n", n]);
        }
        args.push(THIRD_ORDER_POLE);
        let v: Value = serde_json::from_str(&stdout(&kovacic(&args))).unwrap();
        assert_eq!(v["status"], "solved", "case {case}");
        assert_eq!(v["y1"], "x^3", "case {case}");
        assert_eq!(v["case_used"].to_string(), case);
    }
}

#[test]
fn batch_is_deterministic_across_thread_counts() {
    let dir = scratch_dir("jobs");
    let mut runs = Vec::new();
    for jobs in ["1", "4"] {
        let out = dir.join(format!("out-{jobs}.jsonl"));
        let st = dir.join(format!("stats-{jobs}.json"));
        let o = kovacic(&[
            "batch",
            corpus("mini.jsonl").to_str().unwrap(),
            "--no-timing",
            "--jobs",
            jobs,
            "--out",
            out.to_str().unwrap(),
            "--stats",
            st.to_str().unwrap(),
        ]);
        assert_eq!(o.status.code(), Some(0));
        runs.push((fs::read(&out).unwrap(), fs::read(&st).unwrap()));
    }
    assert_eq!(runs[0], runs[1]);
    let _ = fs::remove_dir_all(dir);
}

#[test]
fn batch_stats_are_consistent() {
    let dir = scratch_dir("stats");
    let st = dir.join("stats.json");
    let o = kovacic(&["batch", corpus("worked.jsonl").to_str().unwrap(), "--stats", st.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    let lines: Vec<Value> = stdout(&o).lines().map(|l| serde_json::from_str(l).unwrap()).collect();
    let records = read_corpus(&fs::read_to_string(corpus("worked.jsonl")).unwrap()).unwrap();
    assert_eq!(lines.len(), records.len());
    for (line, rec) in lines.iter().zip(&records) {
        assert_eq!(line["id"], rec.id.as_str());
        assert!(line["ms"].is_u64());
    }
    let s: StatsReport = serde_json::from_str(&fs::read_to_string(&st).unwrap()).unwrap();
    assert_eq!(s.total, records.len());
    assert_eq!(s.solved + s.failed + s.unsupported, s.total);
    assert_eq!(s.per_case.values().sum::<usize>(), s.solved);
    assert_eq!(s.by_status.values().sum::<usize>(), s.total);
    assert_eq!(s.condition_sets.values().sum::<usize>(), s.total);
    assert_eq!(s.by_status["no_liouvillian"], 1);
    let _ = fs::remove_dir_all(dir);
}

#[test]
fn batch_rejects_duplicate_ids() {
    let dir = scratch_dir("dup");
    let path = dir.join("dup.jsonl");
    fs::write(&path, "{\"id\":\"a\",\"ode\":\"y''=0\"}\n{\"id\":\"a\",\"ode\":\"y''=y\"}\n").unwrap();
    assert_eq!(kovacic(&["batch", path.to_str().unwrap()]).status.code(), Some(1));
    let _ = fs::remove_dir_all(dir);
}
