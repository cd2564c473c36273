//! Parse real and complex schemes, print them canonically, and read off the
//! deep-nest profile.

use deepnest::scheme::{classify_deep_nest, is_m_curve, parse_complex_scheme, parse_scheme, print_scheme};

fn main() {
    for text in ["<J + 1<22 + 1<4>>>", "<J+1<1<26>>>", "<J + 2 + 1<3 + 1<21>>>", "<J + 1<2> + 1<3>>"] {
        let s = match parse_scheme(text, 9) {
            Ok(s) => s,
            Err(e) => {
                println!("{text:28} error: {e}");
                continue;
            }
        };
        let nest = match classify_deep_nest(&s) {
            Ok(Some(p)) => format!("alpha={} beta={} gamma={}", p.alpha, p.beta, p.gamma),
            Ok(None) => "no deep nest".into(),
            Err(e) => format!("inadmissible: {e}"),
        };
        println!("{text:28} -> {:28} L={} M-curve={} {nest}", print_scheme(&s), s.component_count(), is_m_curve(&s));
    }

    let cs = parse_complex_scheme("<J + 1_-<1_-<11_+ + 11_-> + 4_+ + 0_->>", 9).unwrap();
    println!("complex: {cs}");
    println!("forgetting signs: {}", cs.real());

    for bad in ["<J + 1<", "<1<J>>", "<J + 1_+>"] {
        println!("{bad:12} {}", parse_scheme(bad, 9).unwrap_err());
    }
}
