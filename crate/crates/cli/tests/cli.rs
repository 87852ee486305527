use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use serde_json::Value;

fn fixture(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("../core/fixtures").join(name)
}

fn locex(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_locex"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn code(o: &Output) -> i32 {
    o.status.code().expect("exit code")
}

fn json(path: &Path) -> Value {
    serde_json::from_str(&std::fs::read_to_string(path).unwrap()).unwrap()
}

#[test]
fn turan_fixture_reports_equality() {
    let dir = tempfile::tempdir().unwrap();
    let g = fixture("k222.graph");
    let o = locex(&["verify", "turan", "--graph", g.to_str().unwrap(), "--out", dir.path().to_str().unwrap()]);
    assert_eq!(code(&o), 0, "{}", String::from_utf8_lossy(&o.stderr));
    let r = json(&dir.path().join("verify-turan.json"));
    assert_eq!(r["total"], "18/1");
    assert_eq!(r["bound"], "18/1");
    assert_eq!(r["slack"], "0/1");
    assert_eq!(r["equality"], true);
    assert_eq!(r["theorem_id"], "turan");
    assert_eq!(r["per_object"].as_array().unwrap().len(), 12);
    assert_eq!(r["config"]["command"], "verify");
    assert_eq!(r["seed"], 0);
}

#[test]
fn sequence_counterexample_is_a_finding() {
    let dir = tempfile::tempdir().unwrap();
    let g = fixture("kb33plus.graph");
    let o = locex(&[
        "verify", "sequence", "--graph", g.to_str().unwrap(), "--seq", "triangle,bowtie", "--ex", "auto",
        "--out", dir.path().to_str().unwrap(),
    ]);
    assert_eq!(code(&o), 0, "{}", String::from_utf8_lossy(&o.stderr));
    let r = json(&dir.path().join("verify-sequence.json"));
    assert_eq!(r["total"], "31/30");
    assert_eq!(r["slack"], "-1/30");
    assert!(r["config"]["finding"].as_str().unwrap().contains("exceeded"));
    assert_eq!(r["config"]["ex_1"], "9");
    assert_eq!(r["config"]["ex_2"], "10");
}

#[test]
fn ex_cache_file_is_written_and_reused() {
    let dir = tempfile::tempdir().unwrap();
    let cache = dir.path().join("ex.cache");
    let g = fixture("kb33plus.graph");
    let out = dir.path().to_str().unwrap();
    let args = ["verify", "sequence", "--graph", g.to_str().unwrap(), "--seq", "triangle,bowtie"];
    let mut first = args.to_vec();
    first.extend(["--ex", "auto", "--ex-cache", cache.to_str().unwrap(), "--out", out]);
    assert_eq!(code(&locex(&first)), 0);
    let mut second = args.to_vec();
    second.extend(["--ex", cache.to_str().unwrap(), "--out", out]);
    assert_eq!(code(&locex(&second)), 0);
    assert_eq!(json(&dir.path().join("verify-sequence.json"))["total"], "31/30");
    // A cache without the needed entries is a configuration error.
    std::fs::write(&cache, "").unwrap();
    assert_eq!(code(&locex(&second)), 2);
}

#[test]
fn missing_file_is_a_usage_error() {
    let dir = tempfile::tempdir().unwrap();
    let o = locex(&["verify", "turan", "--graph", "missing.graph", "--out", dir.path().to_str().unwrap()]);
    assert_eq!(code(&o), 2);
    assert!(std::fs::read_dir(dir.path()).unwrap().next().is_none());
}

#[test]
fn usage_errors_exit_2() {
    assert_eq!(code(&locex(&["frobnicate"])), 2);
    assert_eq!(code(&locex(&["verify", "katona", "--family", fixture("levels12_n3.family").to_str().unwrap(), "--out", "-"])), 2);
    assert_eq!(code(&locex(&["stress", "nope", "--out", "-"])), 2);
}

#[test]
fn capacity_errors_exit_3() {
    let g = fixture("k222.graph");
    assert_eq!(code(&locex(&["verify", "turan", "--graph", g.to_str().unwrap(), "--cap-n", "5", "--out", "-"])), 3);
    assert_eq!(code(&locex(&["sweep", "graphs", "--n", "9", "--out", "-"])), 3);
}

#[test]
fn precondition_failure_and_report_only() {
    let c5 = fixture("c5.graph");
    let o = locex(&["verify", "perfect", "--graph", c5.to_str().unwrap(), "--out", "-"]);
    assert_eq!(code(&o), 2);
    assert!(String::from_utf8_lossy(&o.stderr).contains("odd hole"));
    let o = locex(&["verify", "perfect", "--graph", c5.to_str().unwrap(), "--report-only", "--out", "-"]);
    assert_eq!(code(&o), 0);
    let r: Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(r["total"], "5/4");
}

#[test]
fn ekr_fixtures_through_the_cli() {
    for (file, total) in [("level2_n5.family", "4/1"), ("ekr_star_n6.family", "5/1"), ("ekr_two_points_n6.family", "5/1")] {
        let f = fixture(file);
        let o = locex(&["verify", "ekr", "--family", f.to_str().unwrap(), "--out", "-"]);
        assert_eq!(code(&o), 0, "{file}");
        let r: Value = serde_json::from_slice(&o.stdout).unwrap();
        assert_eq!(r["total"], total, "{file}");
        assert_eq!(r["equality"], true, "{file}");
    }
}

#[test]
fn generated_instances() {
    let o = locex(&["verify", "turan", "--gen", "balanced-multipartite:6,3", "--out", "-"]);
    assert_eq!(code(&o), 0);
    let r: Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(r["total"], "18/1");
    assert_eq!(r["config"]["input"], "gen:balanced-multipartite:6,3");
    let o = locex(&["verify", "lym", "--gen", "full-levels:4,1,3", "--out", "-"]);
    let r: Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(r["total"], "1/1");
    assert_eq!(code(&locex(&["verify", "turan", "--gen", "nonsense:1", "--out", "-"])), 2);
}

#[test]
fn identical_runs_are_byte_identical() {
    let a = tempfile::tempdir().unwrap();
    let b = tempfile::tempdir().unwrap();
    for dir in [&a, &b] {
        let o = locex(&[
            "stress", "turan", "--trials", "25", "--n", "8", "--seed", "11", "--format", "csv",
            "--out", dir.path().to_str().unwrap(),
        ]);
        assert_eq!(code(&o), 0);
        let o = locex(&["verify", "es", "--gen", "permutation:9", "--seed", "4", "--out", dir.path().to_str().unwrap()]);
        assert_eq!(code(&o), 0);
    }
    for name in ["stress-turan.csv", "verify-es.json"] {
        let x = std::fs::read(a.path().join(name)).unwrap();
        let y = std::fs::read(b.path().join(name)).unwrap();
        assert_eq!(x, y, "{name}");
    }
}

#[test]
fn threads_env_does_not_change_results() {
    let run = |threads: &str| {
        Command::new(env!("CARGO_BIN_EXE_locex"))
            .args(["stress", "lym", "--trials", "40", "--n", "5", "--seed", "2", "--format", "csv", "--out", "-"])
            .env("LOCEX_THREADS", threads)
            .output()
            .unwrap()
    };
    let one = run("1");
    let four = run("4");
    assert_eq!(code(&one), 0);
    assert_eq!(one.stdout, four.stdout);
    assert_eq!(code(&run("zero")), 2);
}

#[test]
fn stress_csv_has_a_row_per_trial() {
    let o = locex(&["stress", "dilworth", "--trials", "12", "--n", "7", "--format", "csv", "--out", "-"]);
    assert_eq!(code(&o), 0);
    let text = String::from_utf8(o.stdout).unwrap();
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines[0], "trial,seed,n,total,slack,equality");
    assert_eq!(lines.len(), 13);
    assert!(lines[1..].iter().all(|l| l.split(',').count() == 6 && !l.contains('.')));
}

#[test]
fn sweep_small_graphs() {
    let o = locex(&["sweep", "graphs", "--n", "4", "--out", "-"]);
    assert_eq!(code(&o), 0);
    let r: Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(r["instances"], 64);
    assert_eq!(r["violations"], 0);
    let o = locex(&["sweep", "families", "--n", "3", "--out", "-"]);
    let r: Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(r["theorems"][0]["equality"], 15);
}

#[test]
fn search_finds_the_counterexample() {
    let o = locex(&[
        "search", "--seq", "triangle,bowtie", "--n-min", "6", "--n-max", "6", "--budget", "100", "--out", "-",
    ]);
    assert_eq!(code(&o), 0);
    let r: Value = serde_json::from_slice(&o.stdout).unwrap();
    assert!(r["violation_count"].as_u64().unwrap() > 0);
    let totals: Vec<&str> = r["violations"].as_array().unwrap().iter().map(|v| v["total"].as_str().unwrap()).collect();
    assert!(totals.contains(&"31/30"));
}

#[test]
fn oracle_subcommand() {
    for stat in ["clique-edge", "path-edge", "matching", "monotone"] {
        let o = locex(&["oracle", stat, "--trials", "20", "--n", "7", "--out", "-"]);
        assert_eq!(code(&o), 0, "{stat}");
        let r: Value = serde_json::from_slice(&o.stdout).unwrap();
        assert_eq!(r["mismatches"].as_array().unwrap().len(), 0);
        assert_eq!(r["method"], "exhaustive");
    }
    let g = fixture("k222.graph");
    let o = locex(&["oracle", "clique-edge", "--graph", g.to_str().unwrap(), "--out", "-"]);
    let r: Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(r["objects"], 12);
}

#[test]
fn report_subcommand_rerenders_and_validates() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().to_str().unwrap();
    let g = fixture("c4.graph");
    assert_eq!(code(&locex(&["verify", "stars", "--graph", g.to_str().unwrap(), "--out", out])), 0);
    let report = dir.path().join("verify-stars.json");
    let o = locex(&["report", report.to_str().unwrap(), "--format", "csv", "--out", "-"]);
    assert_eq!(code(&o), 0);
    let text = String::from_utf8(o.stdout).unwrap();
    assert!(text.lines().nth(1).unwrap().contains(",stars,2/1,2/1,0/1,true,"));
    let bad = dir.path().join("bad.json");
    let tampered = std::fs::read_to_string(&report).unwrap().replace("\"slack\": \"0/1\"", "\"slack\": \"1/1\"");
    std::fs::write(&bad, tampered).unwrap();
    assert_eq!(code(&locex(&["report", bad.to_str().unwrap(), "--out", "-"])), 2);
}

#[test]
fn cyclic_checks_every_order() {
    let f = fixture("level2_n5.family");
    let o = locex(&["verify", "cyclic", "--family", f.to_str().unwrap(), "--out", "-"]);
    assert_eq!(code(&o), 0);
    let r: Value = serde_json::from_slice(&o.stdout).unwrap();
    let reports = r.as_array().unwrap();
    assert_eq!(reports.len(), 24);
    assert!(reports.iter().all(|x| x["total"] == "2/1"));
    let s = fixture("sigma5.sigma");
    let o = locex(&["verify", "cyclic", "--family", f.to_str().unwrap(), "--sigma", s.to_str().unwrap(), "--out", "-"]);
    assert_eq!(code(&o), 0);
}

#[test]
fn order_commands() {
    let p = fixture("boolean2.poset");
    for (target, extra) in [("dilworth", None), ("poset-lym", Some(["--subset", "0,1,2"])), ("superlemma", Some(["--f", "rank-level-count"]))] {
        let mut args = vec!["verify", target, "--poset", p.to_str().unwrap(), "--out", "-"];
        if let Some(e) = extra {
            args.extend(e);
        }
        let o = locex(&args);
        assert_eq!(code(&o), 0, "{target}: {}", String::from_utf8_lossy(&o.stderr));
        let r: Value = serde_json::from_slice(&o.stdout).unwrap();
        assert_eq!(r["total"], "1/1", "{target}");
    }
    let s = fixture("perm5.seq");
    let o = locex(&["verify", "es", "--sequence", s.to_str().unwrap(), "--out", "-"]);
    assert_eq!(code(&o), 0);
}
