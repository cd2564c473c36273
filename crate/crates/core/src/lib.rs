//! Verification engine for complex-orientation prohibitions of degree-9
//! M-curves with a deep nest.
//!
//! - [`scheme`]: Viro-notation real and complex schemes.
//! - [`orientation`]: orientation tallies and the Rokhlin-Mishachev and Orevkov formulas.
//! - [`solver`]: sign-case enumeration, filtering and prohibition reports.
//! - [`projective`]: exact projective geometry for the auxiliary pencils.
//! - [`bezout`]: intersection budgets of auxiliary curves.
//! - [`cli`]: command-line front end.

pub mod bezout;
pub mod cli;
pub mod orientation;
pub mod projective;
pub mod scheme;
pub mod solver;
pub mod sign;

pub use sign::Sign;
