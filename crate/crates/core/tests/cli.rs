use deepnest::cli::{run, EXIT_INPUT, EXIT_OK};
use serde_json::Value;
use std::io::Write;

fn cli(args: &[&str]) -> deepnest::cli::Outcome {
    run(std::iter::once("deepnest").chain(args.iter().copied()))
}

fn json(args: &[&str]) -> Value {
    let mut a = vec!["--json"];
    a.extend_from_slice(args);
    let out = cli(&a);
    assert_eq!(out.code, EXIT_OK, "{}", out.stderr);
    serde_json::from_str(&out.stdout).unwrap()
}

fn temp_file(name: &str, body: &str) -> std::path::PathBuf {
    let dir = std::env::temp_dir().join(format!("deepnest-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let p = dir.join(name);
    std::fs::File::create(&p).unwrap().write_all(body.as_bytes()).unwrap();
    p
}

#[test]
fn parse_echoes_canonical_form() {
    let out = cli(&["parse", "--scheme", "<J>"]);
    assert_eq!((out.code, out.stdout.as_str()), (EXIT_OK, "<J>\n"));
    let v = json(&["parse", "--scheme", "<J + 1_-<4_+ + 0_- + 1_-<11_+ + 11_->>>"]);
    assert_eq!(v["results"]["complex"], true);
    assert_eq!(v["results"]["components"], 29);
}

#[test]
fn malformed_scheme_is_input_error() {
    let out = cli(&["parse", "--scheme", "<J + 1<"]);
    assert_eq!(out.code, EXIT_INPUT);
    assert!(out.stderr.contains("error"));
}

#[test]
fn unknown_flag_is_input_error() {
    assert_eq!(cli(&["theorem1", "--frobnicate"]).code, EXIT_INPUT);
    assert_eq!(cli(&["nonsense"]).code, EXIT_INPUT);
}

#[test]
fn report_envelope() {
    let v = json(&["theorem1"]);
    assert_eq!(v["schema"], "deepnest.run/v1");
    assert_eq!(v["command"], "theorem1");
    assert!(v.get("timingMs").is_none());
    assert_eq!(v["results"]["rows"].as_array().unwrap().len(), 13);
    assert_eq!(v["results"]["new"], 10);
    assert_eq!(v["verdicts"][0], "13 PROHIBITED");
    let timed = json(&["--timing", "parse", "--scheme", "<J>"]);
    assert!(timed["timingMs"].is_number());
}

#[test]
fn json_is_byte_stable() {
    for args in [
        vec!["--json", "theorem2", "--beta", "10", "--gamma", "16"],
        vec!["--json", "lemma3", "--case", "2", "--samples", "3", "--seed", "11"],
    ] {
        let a = cli(&args);
        let b = cli(&args);
        assert_eq!(a.code, EXIT_OK);
        assert_eq!(a.stdout, b.stdout);
    }
}

#[test]
fn check_rm_and_orevkov() {
    let s = "<J + 1_-<4_+ + 0_- + 1_-<11_+ + 11_->>>";
    let v = json(&["check-rm", "--scheme", s]);
    assert_eq!(v["results"]["residual"], 0);
    assert_eq!(v["results"]["rhs"], 8);
    let v = json(&["check-orevkov", "--scheme", s]);
    assert_eq!(v["verdicts"][0], "HOLDS");
    let out = cli(&["check-rm", "--scheme", "<J + 1<2>>"]);
    assert_eq!(out.code, EXIT_INPUT);
}

#[test]
fn solve_scenarios() {
    let v = json(&["solve", "--scenario", "with-o1-jumps", "--mode", "literal"]);
    assert_eq!(v["results"]["solutions"].as_array().unwrap().len(), 4);
    assert_eq!(v["results"]["survivors"].as_array().unwrap().len(), 2);
    let v = json(&["solve", "--scenario", "no-jumps-odd-gamma"]);
    assert!(v["results"]["solutions"].as_array().unwrap().is_empty());
    let v = json(&["solve", "--scenario", "no-jumps-even-gamma", "--n-domain", "0,2,4"]);
    assert_eq!(v["results"]["solutions"].as_array().unwrap().len(), 2);
    let v = json(&["solve", "--scenario", "with-o1-jumps", "--beta", "5", "--gamma", "21"]);
    assert_eq!(v["inputs"]["beta"], 5);
    assert_eq!(cli(&["solve", "--scenario", "with-o1-jumps", "--beta", "5", "--gamma", "3"]).code, EXIT_INPUT);
}

#[test]
fn prohibit_verdicts_are_data() {
    let out = cli(&["prohibit", "--scheme", "<J + 1<5 + 1<21>>>"]);
    assert_eq!(out.code, EXIT_OK);
    assert!(out.stdout.contains("PROHIBITED"));
    let v = json(&["prohibit", "--scheme", "<J + 1<5 + 1<21>>>", "--known", "1,3,5,25"]);
    assert_eq!(v["verdicts"], serde_json::json!(["PROHIBITED", "KNOWN"]));
    let v = json(&["prohibit", "--scheme", "<J + 1<4 + 1<22>>>"]);
    assert_eq!(v["verdicts"][0], "OPEN");
    assert_eq!(cli(&["prohibit", "--scheme", "<J + 3 + 1<1<23>>>"]).code, EXIT_INPUT);
}

#[test]
fn beta_zero_subcommand() {
    let v = json(&["beta-zero"]);
    assert_eq!(v["verdicts"][0], "PROHIBITED");
    assert_eq!(v["results"]["lhs_bound"], 4);
}

#[test]
fn lemma3_samples_match() {
    let out = cli(&["lemma3", "--case", "1", "--samples", "5", "--seed", "7"]);
    assert_eq!(out.code, EXIT_OK, "{}", out.stderr);
    assert!(out.stdout.contains("5/5 sequences match case 1"));
    let v = json(&["lemma3", "--case", "3", "--samples", "2", "--seed", "1"]);
    for s in v["results"]["samples"].as_array().unwrap() {
        assert_eq!(s["case"], 3);
        assert_eq!(s["matchesExpected"], true);
        assert_eq!(s["sequence"].as_array().unwrap().len(), 5);
    }
    assert_eq!(cli(&["lemma3", "--case", "4"]).code, EXIT_INPUT);
    assert_eq!(cli(&["lemma3"]).code, EXIT_INPUT);
}

#[test]
fn lemma3_config_file() {
    // Regular pentagon-like convex position 2, 4, 6, 3, 5 with 1 near the center.
    let body = r#"[
        {"label": 1, "point": [3, 2, 100]},
        {"label": 2, "point": [1000, 0, 1]},
        {"label": 3, "point": [-809, -588, 1]},
        {"label": 4, "point": [309, 951, 1]},
        {"label": 5, "point": [309, -951, 1]},
        {"label": 6, "point": [-809, 588, 1]}
    ]"#;
    let p = temp_file("config.json", body);
    let out = cli(&["--json", "lemma3", "--config", p.to_str().unwrap()]);
    let v: Value = serde_json::from_str(&out.stdout).unwrap_or(Value::Null);
    assert_eq!(out.code, EXIT_OK, "{}", out.stderr);
    assert_eq!(v["results"]["case"], 1);
    assert_eq!(v["results"]["matchesExpected"], true);

    let bad = temp_file("bad.json", "[{\"label\": 1}]");
    assert_eq!(cli(&["lemma3", "--config", bad.to_str().unwrap()]).code, EXIT_INPUT);
}

#[test]
fn audit_trace_files() {
    let cubic = serde_json::to_string(&deepnest::bezout::five_jump_cubic()).unwrap();
    let p = temp_file("cubic.json", &cubic);
    let v = json(&["audit", "--trace", p.to_str().unwrap()]);
    assert_eq!(v["results"]["total"], 27);
    assert_eq!(v["verdicts"][0], "SATURATED");

    let bad = temp_file("parity.json", r#"{"degree":1,"visits":[{"oval":"a","role":"inner"}],"arcs":[{"jCrossings":0}]}"#);
    assert_eq!(cli(&["audit", "--trace", bad.to_str().unwrap()]).code, EXIT_INPUT);
    let garbage = temp_file("garbage.json", "{not json");
    assert_eq!(cli(&["audit", "--trace", garbage.to_str().unwrap()]).code, EXIT_INPUT);
    assert_eq!(cli(&["audit", "--trace", "/nonexistent/trace.json"]).code, EXIT_INPUT);
}
