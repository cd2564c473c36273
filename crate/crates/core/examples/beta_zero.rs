//! The argument for beta = 0: a closed jump-free chain of inner ovals keeps
//! the Rokhlin-Mishachev left-hand side too small.

use deepnest::solver::{beta_zero_contradiction, beta_zero_trace, render_beta_zero};

fn main() {
    print!("{}", render_beta_zero(&beta_zero_contradiction()));
    // With 21 components the right-hand side is 0 and the argument fails.
    print!("{}", render_beta_zero(&beta_zero_trace(21)));
}
