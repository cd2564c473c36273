use std::collections::BTreeSet;
use std::fmt;

use serde::Serialize;

use super::emit::{emit_complex_scheme, Infeasible};
use super::filter::{case_orevkov, FilterOutcome};
use super::scenario::{
    enumerate_cases, inner_stretch_imbalances, Scenario, ScenarioTag, SignCase, NEST_EMPTIES,
};
use super::SolverError;
use crate::orientation::{
    chain_imbalance_set, check_orevkov, check_rokhlin_mishachev, compute_stats, rm_rhs, JumpParity,
    OrevkovResiduals, PairSignConvention,
};
use crate::scheme::{classify_deep_nest, is_m_curve, parse_scheme, RealScheme};


pub const DEFAULT_KNOWN: [usize; 3] = [1, 3, 25];

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Verdict {
    Prohibited,
    Open,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Prohibited => "PROHIBITED",
            Verdict::Open => "OPEN",
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Flag {
    New,
    Known,
}

impl fmt::Display for Flag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Flag::New => "NEW",
            Flag::Known => "KNOWN",
        })
    }
}

/// A surviving case checked against a concrete (beta, gamma).
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SurvivorCheck {
    pub case: SignCase,
    pub scheme: Option<String>,
    pub infeasible: Option<Infeasible>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ScenarioTrace {
    pub scenario: Scenario,
    pub applicable: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub reason: Option<String>,
    pub inner_imbalances: Vec<i64>,
    pub solutions: Vec<SignCase>,
    pub filter: Vec<FilterOutcome>,
    pub survivors: Vec<SurvivorCheck>,
}

/// Argument for beta = 0: the inner ovals form a closed jump-free Fiedler chain.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BetaZeroTrace {
    pub scheme: String,
    pub gamma: usize,
    pub inner_imbalances: Vec<i64>,
    pub pi_diffs: Vec<i64>,
    pub lambda_diffs: Vec<i64>,
    pub lhs_values: Vec<i64>,
    pub lhs_bound: i64,
    pub rhs: i64,
    pub contradiction: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EmittedScheme {
    pub case: SignCase,
    pub scheme: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ProhibitionReport {
    pub scheme: String,
    pub beta: usize,
    pub gamma: usize,
    pub scenario: Vec<ScenarioTrace>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub beta_zero: Option<BetaZeroTrace>,
    pub solutions: Vec<SignCase>,
    pub survivors: Vec<EmittedScheme>,
    pub verdict: Verdict,
    pub flags: Vec<Flag>,
}

/// The nest `<J + 1<beta + 1<gamma>>>` of degree 9.
pub fn nest_scheme(beta: usize, gamma: usize) -> RealScheme {
    let text = if beta == 0 {
        format!("<J + 1<1<{gamma}>>>")
    } else {
        format!("<J + 1<{beta} + 1<{gamma}>>>")
    };
    parse_scheme(&text, 9).expect("nest text is well formed")
}

/// Beta-zero argument for a nest with `components` real components.
pub fn beta_zero_trace(components: i64) -> BetaZeroTrace {
    let gamma = (components - 3).max(0) as usize;
    let inner: BTreeSet<i64> = chain_imbalance_set(gamma, 0, JumpParity::Even, true);
    let mut pis = BTreeSet::new();
    let mut lambdas = BTreeSet::new();
    let mut lhs = BTreeSet::new();
    for e1 in [-1i64, 1] {
        for e2 in [-1i64, 1] {
            for &i in &inner {
                let pi = -e1 * e2 - e1 * i - e2 * i;
                let lambda = e1 + e2 + i;
                pis.insert(pi);
                lambdas.insert(lambda);
                lhs.insert(2 * pi + lambda);
            }
        }
    }
    let lhs_bound = 2 * pis.iter().map(|v| v.abs()).max().unwrap_or(0)
        + lambdas.iter().map(|v| v.abs()).max().unwrap_or(0);
    let rhs = rm_rhs(9, components).expect("degree 9 is odd");
    BetaZeroTrace {
        scheme: format!("<J + 1<1<{gamma}>>>"),
        gamma,
        inner_imbalances: inner.into_iter().collect(),
        pi_diffs: pis.into_iter().collect(),
        lambda_diffs: lambdas.into_iter().collect(),
        contradiction: !lhs.contains(&rhs),
        lhs_values: lhs.into_iter().collect(),
        lhs_bound,
        rhs,
    }
}

/// Beta-zero argument for the degree-9 M-curve.
pub fn beta_zero_contradiction() -> BetaZeroTrace {
    beta_zero_trace(NEST_EMPTIES as i64 + 3)
}

fn applicability(tag: ScenarioTag, beta: usize, gamma: usize) -> Option<String> {
    match tag {
        ScenarioTag::WithO1Jumps if beta < 2 || gamma < 2 => Some(format!(
            "an O1-jump needs two median and two inner ovals (beta={beta}, gamma={gamma})"
        )),
        ScenarioTag::NoJumpsOddGamma | ScenarioTag::NoJumpsEvenGamma if beta == 0 => {
            Some("no median ovals".into())
        }
        _ => None,
    }
}

/// Runs one scenario in its generic form, then checks the survivors at (beta, gamma).
pub fn run_scenario(tag: ScenarioTag, beta: usize, gamma: usize, mode: PairSignConvention) -> ScenarioTrace {
    let scenario = Scenario::generic(tag, mode);
    let inner_imbalances = match tag {
        ScenarioTag::WithO1Jumps => Vec::new(),
        _ => inner_stretch_imbalances(gamma).into_iter().collect(),
    };
    if let Some(reason) = applicability(tag, beta, gamma) {
        return ScenarioTrace {
            scenario,
            applicable: false,
            reason: Some(reason),
            inner_imbalances,
            solutions: Vec::new(),
            filter: Vec::new(),
            survivors: Vec::new(),
        };
    }
    let solutions = enumerate_cases(&scenario);
    let filter: Vec<FilterOutcome> = solutions.iter().map(|c| case_orevkov(c, &scenario)).collect();
    let survivors = filter
        .iter()
        .filter(|f| f.survives)
        .map(|f| match emit_complex_scheme(&f.case, beta, gamma) {
            Ok(cs) => SurvivorCheck {
                case: f.case,
                scheme: Some(cs.to_string()),
                infeasible: None,
            },
            Err(e) => SurvivorCheck {
                case: f.case,
                scheme: None,
                infeasible: Some(e),
            },
        })
        .collect();
    ScenarioTrace {
        scenario,
        applicable: true,
        reason: None,
        inner_imbalances,
        solutions,
        filter,
        survivors,
    }
}

pub fn prohibit(
    scheme: &RealScheme,
    known: &BTreeSet<usize>,
    mode: PairSignConvention,
) -> Result<ProhibitionReport, SolverError> {
    let outside = |why: String| Err(SolverError::OutsideFamily(why));
    if scheme.degree() != 9 {
        return outside(format!("degree {} is not 9", scheme.degree()));
    }
    if !is_m_curve(scheme) {
        return outside(format!("{} components, an M-curve of degree 9 has 29", scheme.component_count()));
    }
    let profile = match classify_deep_nest(scheme) {
        Ok(Some(p)) => p,
        Ok(None) => return outside("no deep nest of the form <J + alpha + 1<beta + 1<gamma>>>".into()),
        Err(e) => return outside(e.to_string()),
    };
    if profile.alpha != 0 {
        return outside(format!("alpha = {} outer empty ovals; only alpha = 0 is handled", profile.alpha));
    }
    let (beta, gamma) = (profile.beta, profile.gamma);

    let mut traces = Vec::new();
    let mut beta_zero = None;
    let verdict = if beta == 0 {
        let t = beta_zero_trace(scheme.component_count() as i64);
        let v = if t.contradiction { Verdict::Prohibited } else { Verdict::Open };
        beta_zero = Some(t);
        v
    } else {
        traces.push(run_scenario(ScenarioTag::WithO1Jumps, beta, gamma, mode));
        traces.push(run_scenario(ScenarioTag::no_jumps_for(gamma), beta, gamma, mode));
        if traces.iter().flat_map(|t| &t.survivors).any(|s| s.scheme.is_some()) {
            Verdict::Open
        } else {
            Verdict::Prohibited
        }
    };
    let solutions = traces.iter().flat_map(|t| t.solutions.iter().copied()).collect();
    let survivors = traces
        .iter()
        .flat_map(|t| &t.survivors)
        .filter_map(|s| {
            s.scheme.as_ref().map(|text| EmittedScheme {
                case: s.case,
                scheme: text.clone(),
            })
        })
        .collect();
    let flags = match verdict {
        Verdict::Prohibited if known.contains(&beta) => vec![Flag::Known],
        Verdict::Prohibited => vec![Flag::New],
        Verdict::Open => Vec::new(),
    };
    Ok(ProhibitionReport {
        scheme: scheme.to_string(),
        beta,
        gamma,
        scenario: traces,
        beta_zero,
        solutions,
        survivors,
        verdict,
        flags,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Theorem1Row {
    pub beta: usize,
    pub gamma: usize,
    pub scheme: String,
    pub verdict: Verdict,
    pub flag: Option<Flag>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Theorem1Table {
    pub rows: Vec<Theorem1Row>,
    pub prohibited: usize,
    pub new: usize,
    pub known: Vec<usize>,
}

/// Prohibition run over every nest with odd beta and gamma.
pub fn theorem1_report(mode: PairSignConvention) -> Theorem1Table {
    let known: BTreeSet<usize> = DEFAULT_KNOWN.into_iter().collect();
    let rows: Vec<Theorem1Row> = (1..NEST_EMPTIES)
        .step_by(2)
        .map(|beta| {
            let gamma = NEST_EMPTIES - beta;
            let r = prohibit(&nest_scheme(beta, gamma), &known, mode).expect("nest is in the family");
            Theorem1Row {
                beta,
                gamma,
                scheme: r.scheme,
                verdict: r.verdict,
                flag: r.flags.first().copied(),
            }
        })
        .collect();
    Theorem1Table {
        prohibited: rows.iter().filter(|r| r.verdict == Verdict::Prohibited).count(),
        new: rows.iter().filter(|r| r.flag == Some(Flag::New)).count(),
        known: rows.iter().filter(|r| r.flag == Some(Flag::Known)).map(|r| r.beta).collect(),
        rows,
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Theorem2Part {
    WithO1Jumps,
    WithoutO1Jumps,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Theorem2Entry {
    pub part: Theorem2Part,
    pub case: SignCase,
    pub scheme: Option<String>,
    pub infeasible: Option<Infeasible>,
    pub rm_residual: Option<i64>,
    pub orevkov: Option<OrevkovResiduals>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Theorem2Report {
    pub beta: usize,
    pub gamma: usize,
    pub verdict: Verdict,
    pub entries: Vec<Theorem2Entry>,
}

/// Complex schemes left for a nest with even beta and gamma, each rechecked.
pub fn theorem2_report(beta: usize, gamma: usize, mode: PairSignConvention) -> Result<Theorem2Report, SolverError> {
    if beta % 2 != 0 || gamma % 2 != 0 || beta + gamma != NEST_EMPTIES || beta == 0 || gamma == 0 {
        return Err(SolverError::ScenarioMismatch(format!(
            "need even positive beta, gamma with sum {NEST_EMPTIES}, got beta={beta}, gamma={gamma}"
        )));
    }
    let known: BTreeSet<usize> = DEFAULT_KNOWN.into_iter().collect();
    let report = prohibit(&nest_scheme(beta, gamma), &known, mode)?;
    let mut entries = Vec::new();
    for t in &report.scenario {
        let part = if t.scenario.tag == ScenarioTag::WithO1Jumps {
            Theorem2Part::WithO1Jumps
        } else {
            Theorem2Part::WithoutO1Jumps
        };
        for s in &t.survivors {
            let checks = emit_complex_scheme(&s.case, beta, gamma).ok().map(|cs| {
                let st = compute_stats(&cs, PairSignConvention::Uniform).expect("uniform stats");
                (
                    check_rokhlin_mishachev(&st, 9, st.components).expect("odd degree"),
                    check_orevkov(&st).expect("even imbalance"),
                )
            });
            entries.push(Theorem2Entry {
                part,
                case: s.case,
                scheme: s.scheme.clone(),
                infeasible: s.infeasible.clone(),
                rm_residual: checks.map(|c| c.0),
                orevkov: checks.map(|c| c.1),
            });
        }
    }
    Ok(Theorem2Report {
        beta,
        gamma,
        verdict: report.verdict,
        entries,
    })
}

