//! Sign-case enumeration for each scenario, the Orevkov filter, and the
//! prohibition verdicts for a few nests.

use std::collections::BTreeSet;

use deepnest::orientation::PairSignConvention;
use deepnest::scheme::parse_scheme;
use deepnest::solver::{
    enumerate_cases, orevkov_filter, prohibit, render_prohibition, render_theorem1, theorem1_report, Scenario,
    ScenarioTag, DEFAULT_KNOWN,
};

fn main() {
    let mode = PairSignConvention::Literal;
    let scenarios = [
        Scenario::generic(ScenarioTag::WithO1Jumps, mode),
        Scenario::generic(ScenarioTag::NoJumpsOddGamma, mode),
        Scenario::with_domain(ScenarioTag::NoJumpsEvenGamma, BTreeSet::from([0, 2, 4]), mode),
    ];
    for s in &scenarios {
        let cases = enumerate_cases(s);
        let kept = orevkov_filter(&cases, s);
        println!("{}: {} solutions", s.tag, cases.len());
        for c in &cases {
            println!("  {c} {}", if kept.contains(c) { "survives" } else { "filtered" });
        }
    }

    let known: BTreeSet<usize> = DEFAULT_KNOWN.into_iter().collect();
    for text in ["<J + 1<7 + 1<19>>>", "<J + 1<10 + 1<16>>>"] {
        let r = prohibit(&parse_scheme(text, 9).unwrap(), &known, mode).unwrap();
        print!("{}", render_prohibition(&r));
    }
    print!("{}", render_theorem1(&theorem1_report(mode)));
}
