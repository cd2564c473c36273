use serde::Serialize;

use super::emit::{emit_complex_scheme, nest_with_imbalances};
use super::scenario::{Scenario, SignCase};
use crate::orientation::{check_orevkov, compute_stats, OrevkovResiduals, PairSignConvention};
use crate::scheme::ComplexScheme;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FilterOutcome {
    pub case: SignCase,
    pub representative: String,
    pub orevkov: Option<OrevkovResiduals>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub inconsistency: Option<String>,
    pub survives: bool,
}

/// Smallest nest realizing the case's group imbalances, padded with one
/// extra oval of each sign per group.
pub fn padded_representative(c: &SignCase, pad: usize) -> ComplexScheme {
    let (m, i) = c.group_imbalances();
    let size = |d: i64| d.unsigned_abs() as usize + 2 * pad.max(1);
    nest_with_imbalances(c.eps1, c.eps2, size(m), size(i), m, i)
        .expect("padded sizes always split")
}

fn representative(c: &SignCase, s: &Scenario) -> ComplexScheme {
    if let (Some(beta), Some(gamma)) = (s.beta, s.gamma) {
        if let Ok(cs) = emit_complex_scheme(c, beta, gamma) {
            return cs;
        }
    }
    padded_representative(c, 1)
}

/// Orevkov residuals of the scheme a case induces. They depend only on the
/// nest signs and the group imbalances.
pub fn case_orevkov(c: &SignCase, s: &Scenario) -> FilterOutcome {
    let cs = representative(c, s);
    let stats = compute_stats(&cs, PairSignConvention::Uniform).expect("uniform stats always exist");
    let (orevkov, inconsistency) = match check_orevkov(&stats) {
        Ok(r) => (Some(r), None),
        Err(e) => (None, Some(e.to_string())),
    };
    FilterOutcome {
        case: *c,
        representative: cs.to_string(),
        orevkov,
        inconsistency,
        survives: orevkov.is_some_and(|r| r.holds()),
    }
}

pub fn orevkov_filter(cases: &[SignCase], s: &Scenario) -> Vec<SignCase> {
    cases
        .iter()
        .filter(|c| case_orevkov(c, s).survives)
        .copied()
        .collect()
}
