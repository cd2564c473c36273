use serde::Serialize;

use super::{OrientationError, OrientationStats};
use crate::sign::Sign::{Minus, Plus};

/// Right-hand side L - 1 - k(k+1) for degree 2k+1.
pub fn rm_rhs(degree: u32, components: i64) -> Result<i64, OrientationError> {
    if degree % 2 == 0 {
        return Err(OrientationError::EvenDegree(degree));
    }
    let k = i64::from(degree / 2);
    Ok(components - 1 - k * (k + 1))
}

/// LHS - RHS of 2(Pi+ - Pi-) + (Lambda+ - Lambda-) = L - 1 - k(k+1).
pub fn check_rokhlin_mishachev(
    stats: &OrientationStats,
    degree: u32,
    components: i64,
) -> Result<i64, OrientationError> {
    let rhs = rm_rhs(degree, components)?;
    Ok(2 * stats.pi_diff() + stats.lambda_diff() - rhs)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct OrevkovResiduals {
    pub first: i64,
    pub second: i64,
}

impl OrevkovResiduals {
    pub fn holds(&self) -> bool {
        self.first == 0 && self.second == 0
    }
}

pub fn check_orevkov(stats: &OrientationStats) -> Result<OrevkovResiduals, OrientationError> {
    let lam = stats.empty_diff();
    if lam % 2 != 0 {
        return Err(OrientationError::HalfInteger(lam));
    }
    let first = stats.pi(Plus, Minus) - stats.pi(Plus, Plus) - stats.l_plus * stats.l_plus;
    let second = stats.pi(Minus, Plus) - stats.pi(Minus, Minus) + lam / 2
        - stats.l_minus * stats.l_minus
        - stats.l_minus;
    Ok(OrevkovResiduals { first, second })
}
