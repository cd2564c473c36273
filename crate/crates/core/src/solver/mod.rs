//! Sign-case analysis for the nests `<J + 1<beta + 1<gamma>>>` of degree 9.
//!
//! Each scenario reduces the Rokhlin-Mishachev formula to an equation in the
//! signs e1, e2 of the two nest ovals and the group contributions. Solutions
//! are filtered by the Orevkov formulas and the survivors are turned back
//! into complex schemes when the group counts allow it.

mod emit;
mod filter;
mod prohibit;
mod report;
mod scenario;

use thiserror::Error;

pub use emit::{emit_complex_scheme, nest_with_imbalances, Group, Infeasible};
pub use filter::{case_orevkov, orevkov_filter, padded_representative, FilterOutcome};
pub use prohibit::{
    beta_zero_contradiction, beta_zero_trace, nest_scheme, prohibit, run_scenario, theorem1_report,
    theorem2_report, BetaZeroTrace, EmittedScheme, Flag, ProhibitionReport, ScenarioTrace,
    SurvivorCheck, Theorem1Row, Theorem1Table, Theorem2Entry, Theorem2Part, Theorem2Report, Verdict,
    DEFAULT_KNOWN,
};
pub use report::{render_prohibition, render_theorem1, render_theorem2, render_beta_zero};
pub use scenario::{
    enumerate_cases, inner_stretch_imbalances, median_stretch_magnitudes, rm_equation_residual,
    Scenario, ScenarioTag, SignCase, MAX_MEDIAN_JUMPS, NEST_EMPTIES, RM_TARGET,
};

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum SolverError {
    #[error("scenario mismatch: {0}")]
    ScenarioMismatch(String),
    #[error("scheme outside the family: {0}")]
    OutsideFamily(String),
}
