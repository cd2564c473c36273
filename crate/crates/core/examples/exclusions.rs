//! Each excluded ordering of the points 2..6 yields a contradiction witness.

use deepnest::projective::{classify_lemma3_case, sample_excluded, LineRP2, EXCLUDED_ORDERINGS};

fn main() {
    let j = LineRP2::infinity();
    for ex in EXCLUDED_ORDERINGS.iter() {
        let config = sample_excluded(ex, 0).unwrap();
        println!("{ex:?}\n  {}", classify_lemma3_case(&config, &j).unwrap());
    }
}
