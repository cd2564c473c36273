//! Orientation tallies of a complex scheme and the residuals of the
//! Rokhlin-Mishachev and Orevkov formulas under both pair-sign conventions.

use deepnest::orientation::{check_orevkov, check_rokhlin_mishachev, compute_stats, rm_rhs, PairSignConvention};
use deepnest::scheme::parse_complex_scheme;

fn main() {
    println!("RHS for L=29: {}, for L=21: {}", rm_rhs(9, 29).unwrap(), rm_rhs(9, 21).unwrap());

    let schemes = [
        "<J + 1_-<4_+ + 0_- + 1_-<11_+ + 11_->>>",
        "<J + 1_+<4_+ + 0_- + 1_+<9_+ + 13_->>>",
        "<J + 1_+<3_+ + 2_- + 1_-<10_+ + 11_->>>",
    ];
    for text in schemes {
        let cs = parse_complex_scheme(text, 9).unwrap();
        println!("{cs}");
        for mode in [PairSignConvention::Uniform, PairSignConvention::Literal] {
            let st = compute_stats(&cs, mode).unwrap();
            let rm = check_rokhlin_mishachev(&st, 9, st.components).unwrap();
            let ov = check_orevkov(&st).unwrap();
            println!(
                "  {mode:?}: Pi+ - Pi- = {}, Lambda+ - Lambda- = {}, l+ = {}, l- = {}; RM residual {rm}, Orevkov ({}, {})",
                st.pi_diff(),
                st.lambda_diff(),
                st.l_plus,
                st.l_minus,
                ov.first,
                ov.second
            );
        }
    }
}
