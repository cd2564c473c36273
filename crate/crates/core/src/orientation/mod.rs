//! Complex orientations: oval and pair signs, their tallies, and the
//! Rokhlin-Mishachev and Orevkov formulas for odd degree.

mod chain;
mod formulas;

use serde::Serialize;
use thiserror::Error;

use crate::scheme::{match_nest_shape, ComplexScheme, SignedOval};
use crate::sign::Sign;

pub use chain::{chain_imbalance_set, JumpParity};
pub use formulas::{check_orevkov, check_rokhlin_mishachev, rm_rhs, OrevkovResiduals};
pub use crate::scheme::parse_complex_scheme;

/// How the sign of an injective pair is derived from the signs of its ovals.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, clap::ValueEnum)]
#[serde(rename_all = "snake_case")]
pub enum PairSignConvention {
    /// Pair (O, o) has sign `-sign(O) * sign(o)`.
    #[value(name = "uniform")]
    Uniform,
    /// Within `<J + 1<beta + 1<gamma>>>`: the pair (O1, O2) has sign `-e1*e2`,
    /// pairs (O1, o) have sign `-e2*s(o)` and pairs (O2, o) have sign `-e1*s(o)`.
    /// This reproduces the hand-assembled equations of the case analysis.
    #[value(name = "literal")]
    Literal,
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum OrientationError {
    #[error("degree {0} is even; the formula needs odd degree")]
    EvenDegree(u32),
    #[error("the literal pair-sign convention only applies to <J + 1<beta + 1<gamma>>> schemes")]
    OutsideFamily,
    #[error("lambda+ - lambda- = {0} is odd, so its half is not an integer")]
    HalfInteger(i64),
}

/// Tallies of a complex scheme. `pair_table[S][s]` counts pairs (O, o) with
/// O non-empty of sign S and o an empty oval inside O of sign s, indexed
/// by [`sign_index`].
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct OrientationStats {
    pub lambda_plus: i64,
    pub lambda_minus: i64,
    pub pi_plus: i64,
    pub pi_minus: i64,
    pub l_plus: i64,
    pub l_minus: i64,
    pub empty_plus: i64,
    pub empty_minus: i64,
    pub pair_table: [[i64; 2]; 2],
    pub components: i64,
    pub degree: u32,
}

pub fn sign_index(s: Sign) -> usize {
    match s {
        Sign::Plus => 0,
        Sign::Minus => 1,
    }
}

impl OrientationStats {
    /// pi_s^S with S the sign of the surrounding oval.
    pub fn pi(&self, outer: Sign, inner: Sign) -> i64 {
        self.pair_table[sign_index(outer)][sign_index(inner)]
    }

    pub fn lambda_diff(&self) -> i64 {
        self.lambda_plus - self.lambda_minus
    }

    pub fn pi_diff(&self) -> i64 {
        self.pi_plus - self.pi_minus
    }

    pub fn empty_diff(&self) -> i64 {
        self.empty_plus - self.empty_minus
    }
}

pub fn compute_stats(
    cs: &ComplexScheme,
    conv: PairSignConvention,
) -> Result<OrientationStats, OrientationError> {
    let pair_sign: Box<dyn Fn(&SignedOval, &SignedOval) -> Sign> = match conv {
        PairSignConvention::Uniform => Box::new(|o: &SignedOval, i: &SignedOval| -(o.mark * i.mark)),
        PairSignConvention::Literal => {
            let p = match_nest_shape(cs).ok_or(OrientationError::OutsideFamily)?;
            if p.alpha != 0 {
                return Err(OrientationError::OutsideFamily);
            }
            let e1 = p.o1.resolve(cs).expect("profile path").mark;
            let e2 = p.o2.resolve(cs).expect("profile path").mark;
            Box::new(move |o: &SignedOval, i: &SignedOval| {
                if !i.is_empty() {
                    -(e1 * e2)
                } else if std::ptr::eq(o, &cs.ovals()[0]) {
                    -(e2 * i.mark)
                } else {
                    -(e1 * i.mark)
                }
            })
        }
    };

    let mut st = OrientationStats {
        components: cs.component_count() as i64,
        degree: cs.degree(),
        ..Default::default()
    };
    cs.walk(&mut |oval, ancestors| {
        let plus = oval.mark == Sign::Plus;
        *if plus { &mut st.lambda_plus } else { &mut st.lambda_minus } += 1;
        if oval.is_empty() {
            *if plus { &mut st.empty_plus } else { &mut st.empty_minus } += 1;
        } else {
            *if plus { &mut st.l_plus } else { &mut st.l_minus } += 1;
        }
        for outer in ancestors {
            match pair_sign(outer, oval) {
                Sign::Plus => st.pi_plus += 1,
                Sign::Minus => st.pi_minus += 1,
            }
            if oval.is_empty() {
                st.pair_table[sign_index(outer.mark)][sign_index(oval.mark)] += 1;
            }
        }
    });
    Ok(st)
}
