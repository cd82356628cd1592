use std::process::{Command, Output};

use serde_json::Value;

fn rt_forge(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_rt-forge"))
        .args(args)
        .env("RT_FORGE_THREADS", "2")
        .output()
        .expect("binary runs")
}

fn json(args: &[&str]) -> Value {
    let mut all = args.to_vec();
    all.extend(["--format", "json"]);
    let out = rt_forge(&all);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).expect("valid json")
}

#[test]
fn construct_k3k3_default_instance() {
    let v = json(&["construct", "k3k3"]);
    assert_eq!(v["n"], 120);
    assert_eq!(v["edges"], 5040);
    assert_eq!(v["ledger_matches"], true);
    assert_eq!(v["free"], true);
    assert_eq!(v["alpha"], 24);
}

#[test]
fn rt_exact_anchor() {
    let v = json(&["rt-exact", "--n", "5", "--spec", "3", "--m", "2"]);
    assert_eq!(v["status"], "exact");
    assert_eq!(v["edges"], 5);
    let v = json(&["rt-exact", "--n", "6", "--spec", "3,3", "--m", "1"]);
    assert_eq!(v["status"], "infeasible");
}

#[test]
fn freeness_then_verify_round_trip() {
    let dir = std::env::temp_dir().join(format!("rt-forge-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let col = dir.join("k5.col");
    let v = json(&["freeness", "complete:5", "--spec", "3,3", "--coloring-out", col.to_str().unwrap()]);
    assert_eq!(v["outcome"], "found");
    let v = json(&["verify", "complete:5", "--coloring", col.to_str().unwrap(), "--spec", "3,3"]);
    assert_eq!(v["free"], true);
    let v = json(&["freeness", "complete:6", "--spec", "3,3"]);
    assert_eq!(v["outcome"], "none");
    std::fs::remove_dir_all(dir).ok();
}

#[test]
fn csv_outputs_have_headers() {
    let out = rt_forge(&["report", "--format", "csv"]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    assert_eq!(text.lines().next().unwrap(), rt_forge::rt::COMPARE_HEADER);
    assert!(text.lines().any(|l| l.starts_with("k3k3,120,5040,1/5,") && l.contains(",0,")));

    let out = rt_forge(&["tfp", "--n", "64", "--seeds", "2", "--format", "csv"]);
    let text = String::from_utf8(out.stdout).unwrap();
    assert_eq!(text.lines().count(), 3);
    assert!(text.starts_with("seed,n,edges,triangle_free,maximal,"));
}

#[test]
fn formulas_are_exact() {
    let v = json(&["formulas", "k3k4:0.01"]);
    assert_eq!(v["exact"], "20309/60000");
    assert_eq!(v["validity"], "unquantified");
}

#[test]
fn bad_input_fails_cleanly() {
    for args in [
        &["formulas", "nosuch:1"][..],
        &["alpha", "not-a-graph!"][..],
        &["rt-exact", "--n", "11", "--spec", "3", "--m", "2"][..],
    ] {
        let out = rt_forge(args);
        assert!(!out.status.success(), "{args:?} should fail");
        assert!(String::from_utf8_lossy(&out.stderr).contains("Error"));
    }
}
