//! Sample six-point configurations for each case, classify them, and print
//! the reducible members of the cubic pencil with a node at 1.

use deepnest::projective::{
    classify_lemma3_case, match_sequence, reducible_cubic_sequence, sample_configuration, LineRP2,
};

fn main() {
    let j = LineRP2::infinity();
    for case in 1..=3 {
        let config = sample_configuration(case, 42).unwrap();
        println!("case {case}");
        for (label, p) in &config {
            let (x, y) = p.to_f64_affine().unwrap();
            println!("  {label}: ({x:9.2}, {y:9.2})");
        }
        println!("  {}", classify_lemma3_case(&config, &j).unwrap());
        let seq = reducible_cubic_sequence(&config, &j).unwrap();
        for e in &seq.transformed_events {
            println!("  transformed pencil: {}", e.label);
        }
        println!("  sequence: {}", seq.labels().join(", "));
        println!("  {:?}", match_sequence(&seq, case).unwrap());
    }
}
