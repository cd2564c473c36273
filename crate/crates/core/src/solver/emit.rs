use std::fmt;

use serde::Serialize;

use super::scenario::{ScenarioTag, SignCase};
use crate::scheme::{max_components, ComplexScheme, SignedOval};
use crate::sign::Sign;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Group {
    Medians,
    Inners,
}

impl fmt::Display for Group {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Group::Medians => "medians",
            Group::Inners => "inners",
        })
    }
}

/// Why a surviving case has no complex scheme at the given (beta, gamma).
#[derive(Clone, Debug, PartialEq, Eq, Serialize, thiserror::Error)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Infeasible {
    #[error("scheme family infeasible at these (beta, gamma): {group} would need {count} {} ovals", if *sign == Sign::Plus { "positive" } else { "negative" })]
    NegativeCount { group: Group, sign: Sign, count: i64 },
    #[error("scheme family infeasible at these (beta, gamma): {size} {group} cannot have imbalance {imbalance}")]
    Parity { group: Group, size: usize, imbalance: i64 },
    #[error("{tag} does not apply to gamma = {gamma}")]
    WrongScenario { tag: ScenarioTag, gamma: usize },
}

fn split(group: Group, size: usize, imbalance: i64) -> Result<(usize, usize), Infeasible> {
    let size_i = size as i64;
    if (size_i + imbalance) % 2 != 0 {
        return Err(Infeasible::Parity { group, size, imbalance });
    }
    let plus = (size_i + imbalance) / 2;
    let minus = (size_i - imbalance) / 2;
    for (sign, count) in [(Sign::Plus, plus), (Sign::Minus, minus)] {
        if count < 0 {
            return Err(Infeasible::NegativeCount { group, sign, count });
        }
    }
    Ok((plus as usize, minus as usize))
}

fn empties(plus: usize, minus: usize) -> impl Iterator<Item = SignedOval> {
    (0..plus)
        .map(|_| SignedOval::empty(Sign::Plus))
        .chain((0..minus).map(|_| SignedOval::empty(Sign::Minus)))
}

/// Signed nest with O1, O2 signs e1, e2 and the given group sizes and imbalances.
pub fn nest_with_imbalances(
    eps1: Sign,
    eps2: Sign,
    beta: usize,
    gamma: usize,
    medians: i64,
    inners: i64,
) -> Result<ComplexScheme, Infeasible> {
    let (mp, mm) = split(Group::Medians, beta, medians)?;
    let (ip, im) = split(Group::Inners, gamma, inners)?;
    let o2 = SignedOval::new(eps2, empties(ip, im).collect());
    let mut o1_children: Vec<SignedOval> = empties(mp, mm).collect();
    o1_children.push(o2);
    let o1 = SignedOval::new(eps1, o1_children);
    let ovals = beta + gamma + 2;
    // Degree 9 for the M-curve nest; larger padded nests get the least odd degree that fits.
    let degree = (9..)
        .step_by(2)
        .find(|&d| max_components(d) > ovals as u64)
        .expect("some odd degree fits");
    Ok(ComplexScheme::new(degree, true, vec![o1]).expect("degree chosen to fit"))
}

/// The complex scheme a surviving case forces on `<J + 1<beta + 1<gamma>>>`.
pub fn emit_complex_scheme(c: &SignCase, beta: usize, gamma: usize) -> Result<ComplexScheme, Infeasible> {
    let wrong = |tag| Err(Infeasible::WrongScenario { tag, gamma });
    match c.scenario {
        ScenarioTag::NoJumpsOddGamma if gamma % 2 == 0 => return wrong(c.scenario),
        ScenarioTag::NoJumpsEvenGamma if gamma % 2 == 1 => return wrong(c.scenario),
        ScenarioTag::BetaZero if beta != 0 => return wrong(c.scenario),
        _ => {}
    }
    let (m, i) = c.group_imbalances();
    nest_with_imbalances(c.eps1, c.eps2, beta, gamma, m, i)
}
