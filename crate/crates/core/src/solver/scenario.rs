use std::collections::BTreeSet;
use std::fmt;

use serde::Serialize;

use super::SolverError;
use crate::orientation::{chain_imbalance_set, JumpParity, PairSignConvention};
use crate::sign::Sign;

/// Total of median and inner ovals, beta + gamma, for the degree-9 family.
pub const NEST_EMPTIES: usize = 26;
/// Right-hand side of the Rokhlin-Mishachev formula for a degree-9 M-curve.
pub const RM_TARGET: i64 = 8;
/// Upper bound on J-jumps of a line pencil over the median ovals.
pub const MAX_MEDIAN_JUMPS: usize = 3;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, clap::ValueEnum)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum ScenarioTag {
    #[value(name = "beta-zero")]
    BetaZero,
    #[value(name = "with-o1-jumps")]
    WithO1Jumps,
    #[value(name = "no-jumps-odd-gamma")]
    NoJumpsOddGamma,
    #[value(name = "no-jumps-even-gamma")]
    NoJumpsEvenGamma,
}

impl ScenarioTag {
    pub fn has_eps4(self) -> bool {
        self == ScenarioTag::NoJumpsOddGamma
    }

    /// Imbalances (medians, inners) induced by e3, e4 and n.
    pub fn group_imbalances(self, eps3: Sign, eps4: Option<Sign>, n: u32) -> (i64, i64) {
        let d = i64::from(n) * eps3.value();
        match self {
            ScenarioTag::BetaZero => (0, 0),
            ScenarioTag::WithO1Jumps => (-d, d),
            ScenarioTag::NoJumpsEvenGamma => (d, 0),
            ScenarioTag::NoJumpsOddGamma => (d, eps4.map_or(0, Sign::value)),
        }
    }

    pub fn no_jumps_for(gamma: usize) -> ScenarioTag {
        if gamma % 2 == 1 {
            ScenarioTag::NoJumpsOddGamma
        } else {
            ScenarioTag::NoJumpsEvenGamma
        }
    }
}

impl fmt::Display for ScenarioTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ScenarioTag::BetaZero => "BETA_ZERO",
            ScenarioTag::WithO1Jumps => "WITH_O1_JUMPS",
            ScenarioTag::NoJumpsOddGamma => "NO_JUMPS_ODD_GAMMA",
            ScenarioTag::NoJumpsEvenGamma => "NO_JUMPS_EVEN_GAMMA",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Scenario {
    pub tag: ScenarioTag,
    pub beta: Option<usize>,
    pub gamma: Option<usize>,
    pub n_domain: BTreeSet<u32>,
    pub mode: PairSignConvention,
}

/// Magnitudes of median imbalances reachable with at most three jumps over
/// an open stretch of `len` medians, whatever the jump parity.
pub fn median_stretch_magnitudes(len: usize) -> BTreeSet<u32> {
    let mut all = chain_imbalance_set(len, MAX_MEDIAN_JUMPS, JumpParity::Odd, false);
    all.extend(chain_imbalance_set(len, MAX_MEDIAN_JUMPS, JumpParity::Even, false));
    all.into_iter().map(|v| v.unsigned_abs() as u32).collect()
}

/// Imbalances of a jump-free open stretch of `len` inner ovals.
pub fn inner_stretch_imbalances(len: usize) -> BTreeSet<i64> {
    chain_imbalance_set(len, 0, JumpParity::Even, false)
}

/// Stretch length long enough for the magnitude set to stop growing.
fn representative_length(odd: bool) -> usize {
    2 * (MAX_MEDIAN_JUMPS + 1) + usize::from(odd)
}

impl Scenario {
    pub fn with_domain(tag: ScenarioTag, n_domain: BTreeSet<u32>, mode: PairSignConvention) -> Self {
        Scenario {
            tag,
            beta: None,
            gamma: None,
            n_domain,
            mode,
        }
    }

    /// Scenario independent of (beta, gamma).
    pub fn generic(tag: ScenarioTag, mode: PairSignConvention) -> Self {
        let n_domain = match tag {
            ScenarioTag::BetaZero => BTreeSet::from([0]),
            ScenarioTag::WithO1Jumps => (0..=NEST_EMPTIES as u32).collect(),
            ScenarioTag::NoJumpsOddGamma => median_stretch_magnitudes(representative_length(true)),
            ScenarioTag::NoJumpsEvenGamma => median_stretch_magnitudes(representative_length(false)),
        };
        Scenario::with_domain(tag, n_domain, mode)
    }

    /// Scenario for a specific nest `<J + 1<beta + 1<gamma>>>` with beta + gamma = 26.
    pub fn concrete(
        tag: ScenarioTag,
        beta: usize,
        gamma: usize,
        mode: PairSignConvention,
    ) -> Result<Self, SolverError> {
        if beta + gamma != NEST_EMPTIES || gamma == 0 {
            return Err(SolverError::ScenarioMismatch(format!(
                "beta + gamma must be {NEST_EMPTIES} with gamma >= 1, got beta={beta}, gamma={gamma}"
            )));
        }
        let n_domain = match tag {
            ScenarioTag::BetaZero if beta == 0 => BTreeSet::from([0]),
            ScenarioTag::BetaZero => {
                return Err(SolverError::ScenarioMismatch(format!(
                    "BETA_ZERO needs beta = 0, got {beta}"
                )))
            }
            _ if beta == 0 => {
                return Err(SolverError::ScenarioMismatch(format!(
                    "{tag} needs beta >= 1"
                )))
            }
            ScenarioTag::WithO1Jumps => (0..=beta.min(gamma) as u32)
                .filter(|n| *n as usize % 2 == beta % 2)
                .collect(),
            ScenarioTag::NoJumpsOddGamma | ScenarioTag::NoJumpsEvenGamma => {
                if ScenarioTag::no_jumps_for(gamma) != tag {
                    return Err(SolverError::ScenarioMismatch(format!(
                        "{tag} does not match gamma = {gamma}"
                    )));
                }
                median_stretch_magnitudes(beta)
            }
        };
        Ok(Scenario {
            tag,
            beta: Some(beta),
            gamma: Some(gamma),
            n_domain,
            mode,
        })
    }
}

/// One assignment of the case-analysis variables.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct SignCase {
    pub scenario: ScenarioTag,
    #[serde(serialize_with = "ser_sign")]
    pub eps1: Sign,
    #[serde(serialize_with = "ser_sign")]
    pub eps2: Sign,
    #[serde(serialize_with = "ser_sign")]
    pub eps3: Sign,
    #[serde(serialize_with = "ser_opt_sign")]
    pub eps4: Option<Sign>,
    pub n: u32,
}

fn ser_sign<S: serde::Serializer>(s: &Sign, ser: S) -> Result<S::Ok, S::Error> {
    ser.serialize_i64(s.value())
}

fn ser_opt_sign<S: serde::Serializer>(s: &Option<Sign>, ser: S) -> Result<S::Ok, S::Error> {
    match s {
        Some(s) => ser.serialize_i64(s.value()),
        None => ser.serialize_none(),
    }
}

impl SignCase {
    pub fn new(scenario: ScenarioTag, e: [i64; 3], eps4: Option<i64>, n: u32) -> Self {
        let s = |v| Sign::from_value(v).expect("sign must be +1 or -1");
        SignCase {
            scenario,
            eps1: s(e[0]),
            eps2: s(e[1]),
            eps3: s(e[2]),
            eps4: eps4.map(s),
            n,
        }
    }

    /// (e1, e2, e3, n) as integers, ignoring e4.
    pub fn tuple(&self) -> (i64, i64, i64, u32) {
        (self.eps1.value(), self.eps2.value(), self.eps3.value(), self.n)
    }

    pub fn group_imbalances(&self) -> (i64, i64) {
        self.scenario.group_imbalances(self.eps3, self.eps4, self.n)
    }
}

impl fmt::Display for SignCase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (a, b, c, n) = self.tuple();
        match self.eps4 {
            Some(e4) => write!(f, "(e1,e2,e3,e4,n)=({a},{b},{c},{},{n})", e4.value()),
            None => write!(f, "(e1,e2,e3,n)=({a},{b},{c},{n})"),
        }
    }
}

/// LHS - 8 of the scenario's Rokhlin-Mishachev equation.
pub fn rm_equation_residual(c: &SignCase, mode: PairSignConvention) -> Result<i64, SolverError> {
    if c.eps4.is_some() != c.scenario.has_eps4() {
        return Err(SolverError::ScenarioMismatch(format!(
            "{} {} e4 but the case {} one",
            c.scenario,
            if c.scenario.has_eps4() { "needs" } else { "has no" },
            if c.eps4.is_some() { "has" } else { "lacks" },
        )));
    }
    if c.scenario == ScenarioTag::BetaZero && c.n != 0 {
        return Err(SolverError::ScenarioMismatch("BETA_ZERO has n = 0".into()));
    }
    let (e1, e2, e3) = (c.eps1.value(), c.eps2.value(), c.eps3.value());
    let e4 = c.eps4.map_or(0, Sign::value);
    let n = i64::from(c.n);
    let lhs = match mode {
        PairSignConvention::Literal => match c.scenario {
            ScenarioTag::BetaZero => 2 * (-e1 * e2) + e1 + e2,
            ScenarioTag::WithO1Jumps => 2 * (-e1 * e2 - n * e1 * e3) + e1 + e2,
            ScenarioTag::NoJumpsOddGamma => {
                2 * (-e1 * e2 - e4 * e2 - e4 * e1 - n * e3 * e2) + e1 + e2 + n * e3 + e4
            }
            ScenarioTag::NoJumpsEvenGamma => 2 * (-e1 * e2 - n * e3 * e2) + e1 + e2 + n * e3,
        },
        PairSignConvention::Uniform => {
            let (m, i) = c.group_imbalances();
            let pi = -e1 * e2 - e1 * (m + i) - e2 * i;
            2 * pi + e1 + e2 + m + i
        }
    };
    Ok(lhs - RM_TARGET)
}

/// All cases of the scenario whose equation holds, in lexicographic order
/// of (e1, e2, e3, e4, n) with -1 before +1.
pub fn enumerate_cases(s: &Scenario) -> Vec<SignCase> {
    let signs = [Sign::Minus, Sign::Plus];
    let e4s: Vec<Option<Sign>> = if s.tag.has_eps4() {
        signs.iter().copied().map(Some).collect()
    } else {
        vec![None]
    };
    let mut out = Vec::new();
    for &eps1 in &signs {
        for &eps2 in &signs {
            for &eps3 in &signs {
                for &eps4 in &e4s {
                    for &n in &s.n_domain {
                        let c = SignCase {
                            scenario: s.tag,
                            eps1,
                            eps2,
                            eps3,
                            eps4,
                            n,
                        };
                        if rm_equation_residual(&c, s.mode) == Ok(0) {
                            out.push(c);
                        }
                    }
                }
            }
        }
    }
    out
}
