//! Command-line front end. Every subcommand parses its inputs, calls the
//! library, and wraps the result in a [`RunReport`].

use std::collections::BTreeSet;
use std::path::PathBuf;
use std::time::Instant;

use clap::{Parser, Subcommand};
use serde::Serialize;
use serde_json::{json, Value};

use crate::bezout::{audit_with_threshold, AuxCurveTrace};
use crate::orientation::{check_orevkov, check_rokhlin_mishachev, compute_stats, rm_rhs, PairSignConvention};
use crate::projective::{
    classify_lemma3_case, match_sequence, reducible_cubic_sequence, sample_configuration, Labeled,
    Lemma3Class, LineRP2, ProjectivePoint,
};
use crate::scheme::{parse_complex_scheme, parse_scheme, SchemeError};
use crate::solver::{
    beta_zero_contradiction, enumerate_cases, orevkov_filter, prohibit, render_beta_zero, render_prohibition,
    render_theorem1, render_theorem2, theorem1_report, theorem2_report, Scenario, ScenarioTag,
};

pub const SCHEMA: &str = "deepnest.run/v1";

pub const EXIT_OK: i32 = 0;
pub const EXIT_INPUT: i32 = 2;
pub const EXIT_INCONSISTENT: i32 = 3;

#[derive(Debug, Parser)]
#[command(name = "deepnest", version, about = "Prohibition checks for degree-9 M-curves with a deep nest")]
pub struct Cli {
    /// Emit the run report as JSON.
    #[arg(long, global = true)]
    pub json: bool,
    /// Include wall-clock timing in the report.
    #[arg(long, global = true)]
    pub timing: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Parse a real or complex scheme and print it canonically.
    Parse {
        #[arg(long)]
        scheme: String,
        #[arg(long, default_value_t = 9)]
        degree: u32,
    },
    /// Rokhlin-Mishachev residual of a complex scheme.
    CheckRm {
        #[arg(long)]
        scheme: String,
        #[arg(long, default_value_t = 9)]
        degree: u32,
        #[arg(long, value_enum, default_value_t = PairSignConvention::Uniform)]
        mode: PairSignConvention,
    },
    /// Orevkov residuals of a complex scheme.
    CheckOrevkov {
        #[arg(long)]
        scheme: String,
        #[arg(long, default_value_t = 9)]
        degree: u32,
        #[arg(long, value_enum, default_value_t = PairSignConvention::Uniform)]
        mode: PairSignConvention,
    },
    /// Enumerate and filter the sign cases of one scenario.
    Solve {
        #[arg(long, value_enum)]
        scenario: ScenarioTag,
        #[arg(long, value_enum, default_value_t = PairSignConvention::Literal)]
        mode: PairSignConvention,
        #[arg(long, requires = "gamma")]
        beta: Option<usize>,
        #[arg(long, requires = "beta")]
        gamma: Option<usize>,
        /// Explicit domain for n, overriding the scenario default.
        #[arg(long, value_delimiter = ',', conflicts_with = "beta")]
        n_domain: Option<Vec<u32>>,
    },
    /// Full prohibition run for a real scheme.
    Prohibit {
        #[arg(long)]
        scheme: String,
        #[arg(long, value_delimiter = ',', default_values_t = [1usize, 3, 25])]
        known: Vec<usize>,
        #[arg(long, value_enum, default_value_t = PairSignConvention::Literal)]
        mode: PairSignConvention,
    },
    /// Prohibition table for all nests with odd beta.
    Theorem1 {
        #[arg(long, value_enum, default_value_t = PairSignConvention::Literal)]
        mode: PairSignConvention,
    },
    /// Complex schemes left for a nest with even beta and gamma.
    Theorem2 {
        #[arg(long)]
        beta: usize,
        #[arg(long)]
        gamma: usize,
        #[arg(long, value_enum, default_value_t = PairSignConvention::Literal)]
        mode: PairSignConvention,
    },
    /// Reducible-cubic sequences of sampled or given six-point configurations.
    Lemma3 {
        #[arg(long, value_parser = clap::value_parser!(u8).range(1..=3), required_unless_present = "config")]
        case: Option<u8>,
        #[arg(long, default_value_t = 5)]
        samples: u32,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// JSON array of {"label", "point": [x0, x1, x2]} for labels 1..6.
        #[arg(long, conflicts_with = "case")]
        config: Option<PathBuf>,
    },
    /// Bezout budget of an auxiliary-curve trace.
    Audit {
        #[arg(long)]
        trace: PathBuf,
    },
    /// The argument for beta = 0.
    BetaZero,
}

#[derive(Debug, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct RunReport {
    pub schema: &'static str,
    pub command: String,
    pub inputs: Value,
    pub results: Value,
    pub verdicts: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub timing_ms: Option<f64>,
}

/// Outcome of a run: exit code, stdout and stderr text.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

struct Done {
    inputs: Value,
    results: Value,
    verdicts: Vec<String>,
    text: String,
    consistent: bool,
}

enum Failure {
    Input(String),
    Inconsistent(String),
}

fn input<E: std::fmt::Display>(e: E) -> Failure {
    Failure::Input(e.to_string())
}

fn to_value<T: Serialize>(v: &T) -> Value {
    serde_json::to_value(v).expect("report types serialize")
}

pub fn run<I, T>(argv: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INPUT } else { EXIT_OK };
            let text = e.render().to_string();
            return if code == EXIT_OK {
                Outcome { code, stdout: text, stderr: String::new() }
            } else {
                Outcome { code, stdout: String::new(), stderr: text }
            };
        }
    };
    let start = Instant::now();
    let name = command_name(&cli.command);
    match execute(&cli.command) {
        Ok(done) => {
            let code = if done.consistent { EXIT_OK } else { EXIT_INCONSISTENT };
            let stdout = if cli.json {
                let report = RunReport {
                    schema: SCHEMA,
                    command: name.to_string(),
                    inputs: done.inputs,
                    results: done.results,
                    verdicts: done.verdicts,
                    timing_ms: cli.timing.then(|| start.elapsed().as_secs_f64() * 1000.0),
                };
                serde_json::to_string_pretty(&report).expect("report serializes") + "\n"
            } else {
                let mut t = done.text;
                if cli.timing {
                    t.push_str(&format!("time {:.1} ms\n", start.elapsed().as_secs_f64() * 1000.0));
                }
                t
            };
            let stderr = if done.consistent { String::new() } else { "internal inconsistency\n".into() };
            Outcome { code, stdout, stderr }
        }
        Err(Failure::Input(msg)) => Outcome { code: EXIT_INPUT, stdout: String::new(), stderr: format!("error: {msg}\n") },
        Err(Failure::Inconsistent(msg)) => Outcome {
            code: EXIT_INCONSISTENT,
            stdout: String::new(),
            stderr: format!("internal inconsistency: {msg}\n"),
        },
    }
}

fn command_name(c: &Command) -> &'static str {
    match c {
        Command::Parse { .. } => "parse",
        Command::CheckRm { .. } => "check-rm",
        Command::CheckOrevkov { .. } => "check-orevkov",
        Command::Solve { .. } => "solve",
        Command::Prohibit { .. } => "prohibit",
        Command::Theorem1 { .. } => "theorem1",
        Command::Theorem2 { .. } => "theorem2",
        Command::Lemma3 { .. } => "lemma3",
        Command::Audit { .. } => "audit",
        Command::BetaZero => "beta-zero",
    }
}

fn execute(c: &Command) -> Result<Done, Failure> {
    match c {
        Command::Parse { scheme, degree } => cmd_parse(scheme, *degree),
        Command::CheckRm { scheme, degree, mode } => cmd_check_rm(scheme, *degree, *mode),
        Command::CheckOrevkov { scheme, degree, mode } => cmd_check_orevkov(scheme, *degree, *mode),
        Command::Solve { scenario, mode, beta, gamma, n_domain } => {
            cmd_solve(*scenario, *mode, beta.zip(*gamma), n_domain.as_deref())
        }
        Command::Prohibit { scheme, known, mode } => cmd_prohibit(scheme, known, *mode),
        Command::Theorem1 { mode } => cmd_theorem1(*mode),
        Command::Theorem2 { beta, gamma, mode } => cmd_theorem2(*beta, *gamma, *mode),
        Command::Lemma3 { case, samples, seed, config } => match config {
            Some(path) => cmd_lemma3_config(path),
            None => cmd_lemma3(case.expect("clap requires case"), *samples, *seed),
        },
        Command::Audit { trace } => cmd_audit(trace),
        Command::BetaZero => cmd_beta_zero(),
    }
}

fn cmd_parse(text: &str, degree: u32) -> Result<Done, Failure> {
    let (canonical, complex, components) = match parse_scheme(text, degree) {
        Ok(s) => (s.to_string(), false, s.component_count()),
        Err(SchemeError::UnexpectedSign { .. }) => {
            let s = parse_complex_scheme(text, degree).map_err(input)?;
            (s.to_string(), true, s.component_count())
        }
        Err(e) => return Err(input(e)),
    };
    Ok(Done {
        inputs: json!({ "scheme": text, "degree": degree }),
        results: json!({ "canonical": canonical, "complex": complex, "components": components }),
        verdicts: vec![],
        text: format!("{canonical}\n"),
        consistent: true,
    })
}

fn cmd_check_rm(text: &str, degree: u32, mode: PairSignConvention) -> Result<Done, Failure> {
    let cs = parse_complex_scheme(text, degree).map_err(input)?;
    let st = compute_stats(&cs, mode).map_err(input)?;
    let residual = check_rokhlin_mishachev(&st, degree, st.components).map_err(input)?;
    let rhs = rm_rhs(degree, st.components).map_err(input)?;
    let lhs = rhs + residual;
    let verdict = if residual == 0 { "HOLDS" } else { "FAILS" };
    Ok(Done {
        inputs: json!({ "scheme": text, "degree": degree, "mode": mode }),
        results: json!({ "stats": to_value(&st), "lhs": lhs, "rhs": rhs, "residual": residual }),
        verdicts: vec![verdict.into()],
        text: format!(
            "{cs}\n  2(Pi+ - Pi-) + (Lambda+ - Lambda-) = 2*{} + {} = {lhs}, RHS = {rhs}, residual {residual}: {verdict}\n",
            st.pi_diff(),
            st.lambda_diff()
        ),
        consistent: true,
    })
}

fn cmd_check_orevkov(text: &str, degree: u32, mode: PairSignConvention) -> Result<Done, Failure> {
    let cs = parse_complex_scheme(text, degree).map_err(input)?;
    let st = compute_stats(&cs, mode).map_err(input)?;
    let r = check_orevkov(&st).map_err(input)?;
    let verdict = if r.holds() { "HOLDS" } else { "FAILS" };
    Ok(Done {
        inputs: json!({ "scheme": text, "degree": degree, "mode": mode }),
        results: json!({ "stats": to_value(&st), "residuals": to_value(&r) }),
        verdicts: vec![verdict.into()],
        text: format!("{cs}\n  residuals ({}, {}): {verdict}\n", r.first, r.second),
        consistent: true,
    })
}

fn cmd_solve(
    tag: ScenarioTag,
    mode: PairSignConvention,
    nest: Option<(usize, usize)>,
    n_domain: Option<&[u32]>,
) -> Result<Done, Failure> {
    let scenario = match (nest, n_domain) {
        (Some((b, g)), _) => Scenario::concrete(tag, b, g, mode).map_err(input)?,
        (None, Some(d)) => Scenario::with_domain(tag, d.iter().copied().collect(), mode),
        (None, None) => Scenario::generic(tag, mode),
    };
    let solutions = enumerate_cases(&scenario);
    let survivors = orevkov_filter(&solutions, &scenario);
    let mut text = format!(
        "scenario {tag} ({mode:?}) n in {:?}\n",
        scenario.n_domain.iter().collect::<Vec<_>>()
    );
    for c in &solutions {
        let mark = if survivors.contains(c) { "survives" } else { "filtered" };
        text.push_str(&format!("  {c} {mark}\n"));
    }
    if solutions.is_empty() {
        text.push_str("  no solution\n");
    }
    Ok(Done {
        inputs: json!({ "scenario": tag, "mode": mode, "beta": nest.map(|n| n.0), "gamma": nest.map(|n| n.1) }),
        results: json!({ "scenario": to_value(&scenario), "solutions": to_value(&solutions), "survivors": to_value(&survivors) }),
        verdicts: vec![format!("{} solutions, {} survive", solutions.len(), survivors.len())],
        text,
        consistent: true,
    })
}

fn cmd_prohibit(text: &str, known: &[usize], mode: PairSignConvention) -> Result<Done, Failure> {
    let scheme = parse_scheme(text, 9).map_err(input)?;
    let known: BTreeSet<usize> = known.iter().copied().collect();
    let r = prohibit(&scheme, &known, mode).map_err(input)?;
    let mut verdicts = vec![r.verdict.to_string()];
    verdicts.extend(r.flags.iter().map(ToString::to_string));
    Ok(Done {
        inputs: json!({ "scheme": text, "known": known, "mode": mode }),
        results: to_value(&r),
        text: render_prohibition(&r),
        verdicts,
        consistent: true,
    })
}

fn cmd_theorem1(mode: PairSignConvention) -> Result<Done, Failure> {
    let t = theorem1_report(mode);
    Ok(Done {
        inputs: json!({ "mode": mode }),
        results: to_value(&t),
        verdicts: vec![format!("{} PROHIBITED", t.prohibited), format!("{} NEW", t.new)],
        text: render_theorem1(&t),
        consistent: true,
    })
}

fn cmd_theorem2(beta: usize, gamma: usize, mode: PairSignConvention) -> Result<Done, Failure> {
    let t = theorem2_report(beta, gamma, mode).map_err(input)?;
    let consistent = t
        .entries
        .iter()
        .all(|e| e.rm_residual.map_or(true, |r| r == 0) && e.orevkov.map_or(true, |o| o.holds()));
    Ok(Done {
        inputs: json!({ "beta": beta, "gamma": gamma, "mode": mode }),
        results: to_value(&t),
        verdicts: vec![t.verdict.to_string()],
        text: render_theorem2(&t),
        consistent,
    })
}

fn cmd_lemma3(case: u8, samples: u32, seed: u64) -> Result<Done, Failure> {
    let j = LineRP2::infinity();
    let mut rows = Vec::new();
    let mut text = String::new();
    let mut matched = 0;
    for i in 0..samples {
        let s = seed.wrapping_add(u64::from(i));
        let config = sample_configuration(case, s).map_err(|e| Failure::Inconsistent(e.to_string()))?;
        let class = classify_lemma3_case(&config, &j).map_err(|e| Failure::Inconsistent(e.to_string()))?;
        let seq = reducible_cubic_sequence(&config, &j).map_err(|e| Failure::Inconsistent(e.to_string()))?;
        let m = match_sequence(&seq, case);
        let ok = m.is_some() && class.case_number() == Some(case);
        matched += usize::from(ok);
        text.push_str(&format!(
            "seed {s}: {class}; {} {}\n",
            seq.labels().join(", "),
            if ok { "matches" } else { "MISMATCH" }
        ));
        rows.push(json!({
            "seed": s,
            "config": labeled_json(&config),
            "classification": to_value(&class),
            "case": class.case_number(),
            "sequence": seq.labels(),
            "match": to_value(&m),
            "matchesExpected": ok,
        }));
    }
    text.push_str(&format!("{matched}/{samples} sequences match case {case}\n"));
    Ok(Done {
        inputs: json!({ "case": case, "samples": samples, "seed": seed }),
        results: json!({ "samples": rows }),
        verdicts: vec![format!("{matched}/{samples} MATCH")],
        text,
        consistent: matched == samples as usize,
    })
}

#[derive(serde::Deserialize)]
struct LabeledInput {
    label: u32,
    point: [i64; 3],
}

fn labeled_json(c: &[Labeled]) -> Value {
    Value::Array(c.iter().map(|(l, p)| json!({ "label": l, "point": to_value(p) })).collect())
}

fn cmd_lemma3_config(path: &PathBuf) -> Result<Done, Failure> {
    let raw = std::fs::read_to_string(path).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))?;
    let entries: Vec<LabeledInput> = serde_json::from_str(&raw).map_err(input)?;
    let config: Vec<Labeled> = entries
        .iter()
        .map(|e| {
            ProjectivePoint::from_i64(e.point[0], e.point[1], e.point[2])
                .map(|p| (e.label, p))
                .ok_or_else(|| Failure::Input(format!("point {} is zero", e.label)))
        })
        .collect::<Result<_, _>>()?;
    let j = LineRP2::infinity();
    let class = classify_lemma3_case(&config, &j).map_err(input)?;
    let mut text = format!("{class}\n");
    let mut results = json!({ "classification": to_value(&class), "case": class.case_number() });
    let mut verdicts = vec![match &class {
        Lemma3Class::Contradiction(_) => "CONTRADICTION".to_string(),
        c => format!("CASE{}", c.case_number().expect("not a contradiction")),
    }];
    let mut consistent = true;
    if let Some(case) = class.case_number() {
        let seq = reducible_cubic_sequence(&config, &j).map_err(input)?;
        let m = match_sequence(&seq, case);
        consistent = m.is_some();
        text.push_str(&format!("{}\n", seq.labels().join(", ")));
        results["sequence"] = to_value(&seq.labels());
        results["match"] = to_value(&m);
        results["matchesExpected"] = Value::Bool(consistent);
        verdicts.push(if consistent { "MATCH" } else { "MISMATCH" }.into());
    }
    Ok(Done {
        inputs: json!({ "config": path.display().to_string() }),
        results,
        verdicts,
        text,
        consistent,
    })
}

fn cmd_audit(path: &PathBuf) -> Result<Done, Failure> {
    let raw = std::fs::read_to_string(path).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))?;
    let trace: AuxCurveTrace = serde_json::from_str(&raw).map_err(input)?;
    let b = audit_with_threshold(&trace).map_err(input)?;
    Ok(Done {
        inputs: json!({ "trace": to_value(&trace) }),
        results: to_value(&b),
        verdicts: vec![b.verdict.to_string()],
        text: format!("{b}\n"),
        consistent: true,
    })
}

fn cmd_beta_zero() -> Result<Done, Failure> {
    let t = beta_zero_contradiction();
    Ok(Done {
        inputs: json!({}),
        results: to_value(&t),
        verdicts: vec![if t.contradiction { "PROHIBITED" } else { "OPEN" }.into()],
        text: render_beta_zero(&t),
        consistent: true,
    })
}
