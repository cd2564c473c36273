use std::fmt::Write;

use super::prohibit::{BetaZeroTrace, ProhibitionReport, Theorem1Table, Theorem2Report};

fn join<T: ToString>(items: &[T]) -> String {
    items.iter().map(T::to_string).collect::<Vec<_>>().join(", ")
}

pub fn render_beta_zero(t: &BetaZeroTrace) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "scheme {}", t.scheme);
    let _ = writeln!(s, "  closed jump-free chain of {} inner ovals: lambda+ - lambda- in {{{}}}", t.gamma, join(&t.inner_imbalances));
    let _ = writeln!(s, "  Pi+ - Pi- in {{{}}}, Lambda+ - Lambda- in {{{}}}", join(&t.pi_diffs), join(&t.lambda_diffs));
    let _ = writeln!(s, "  LHS in {{{}}}, |LHS| <= {}, RHS = {}", join(&t.lhs_values), t.lhs_bound, t.rhs);
    let _ = writeln!(
        s,
        "  {}",
        if t.contradiction { "contradiction: scheme prohibited" } else { "no contradiction" }
    );
    s
}

pub fn render_prohibition(r: &ProhibitionReport) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "scheme {} (beta={}, gamma={})", r.scheme, r.beta, r.gamma);
    if let Some(t) = &r.beta_zero {
        s.push_str(&render_beta_zero(t));
    }
    for t in &r.scenario {
        let _ = writeln!(s, "  scenario {} n in {{{}}}", t.scenario.tag, join(&t.scenario.n_domain.iter().collect::<Vec<_>>()));
        if let Some(why) = &t.reason {
            let _ = writeln!(s, "    not applicable: {why}");
            continue;
        }
        if t.solutions.is_empty() {
            let _ = writeln!(s, "    no solution");
        }
        for f in &t.filter {
            let verdict = match (&f.orevkov, f.survives) {
                (_, true) => "survives".to_string(),
                (Some(o), false) => format!("fails Orevkov (residuals {}, {})", o.first, o.second),
                (None, false) => format!("inconsistent: {}", f.inconsistency.as_deref().unwrap_or("")),
            };
            let _ = writeln!(s, "    solution {}: {verdict}", f.case);
        }
        for sv in &t.survivors {
            match (&sv.scheme, &sv.infeasible) {
                (Some(text), _) => {
                    let _ = writeln!(s, "    {} -> {text}", sv.case);
                }
                (None, Some(e)) => {
                    let _ = writeln!(s, "    {} -> {e}", sv.case);
                }
                (None, None) => {}
            }
        }
    }
    let flags = join(&r.flags);
    let _ = writeln!(s, "verdict {}{}", r.verdict, if flags.is_empty() { String::new() } else { format!(" [{flags}]") });
    s
}

pub fn render_theorem1(t: &Theorem1Table) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "{:>4} {:>5}  {:<24} {:<10} flag", "beta", "gamma", "scheme", "verdict");
    for r in &t.rows {
        let flag = r.flag.map(|f| f.to_string()).unwrap_or_default();
        let _ = writeln!(s, "{:>4} {:>5}  {:<24} {:<10} {}", r.beta, r.gamma, r.scheme, r.verdict.to_string(), flag);
    }
    let _ = writeln!(s, "{} rows, {} prohibited, {} new, known beta = {{{}}}", t.rows.len(), t.prohibited, t.new, join(&t.known));
    s
}

pub fn render_theorem2(t: &Theorem2Report) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "beta={} gamma={} verdict {}", t.beta, t.gamma, t.verdict);
    for e in &t.entries {
        let part = match e.part {
            super::Theorem2Part::WithO1Jumps => "with O1-jumps",
            super::Theorem2Part::WithoutO1Jumps => "without O1-jumps",
        };
        match (&e.scheme, &e.infeasible) {
            (Some(text), _) => {
                let o = e.orevkov.expect("checked with the scheme");
                let _ = writeln!(
                    s,
                    "  {part}: {text}  RM residual {}, Orevkov residuals ({}, {})",
                    e.rm_residual.unwrap_or_default(),
                    o.first,
                    o.second
                );
            }
            (None, Some(err)) => {
                let _ = writeln!(s, "  {part}: {} -> {err}", e.case);
            }
            (None, None) => {}
        }
    }
    s
}
