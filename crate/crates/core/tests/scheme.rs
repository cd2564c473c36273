use deepnest::scheme::{
    classify_deep_nest, is_m_curve, parse_complex_scheme, parse_scheme, print_scheme, RealScheme,
    SchemeError,
};
use deepnest::Sign;
use proptest::prelude::*;

fn p9(text: &str) -> RealScheme {
    parse_scheme(text, 9).unwrap()
}

#[test]
fn pseudo_line_only() {
    let s = p9("<J>");
    assert!(s.has_pseudo_line());
    assert_eq!(s.oval_count(), 0);
    assert_eq!(print_scheme(&s), "<J>");
}

#[test]
fn deep_nest_structure() {
    let s = p9("<J + 1<4 + 1<22>>>");
    assert_eq!(s.ovals().len(), 1);
    let o1 = &s.ovals()[0];
    assert_eq!(o1.children().len(), 5);
    assert_eq!(o1.children().iter().filter(|c| c.is_empty()).count(), 4);
    let o2 = o1.children().iter().find(|c| !c.is_empty()).unwrap();
    assert_eq!(o2.children().len(), 22);
    assert!(is_m_curve(&s));
}

#[test]
fn beta_zero_nest() {
    let s = p9("<J + 1<1<26>>>");
    let p = classify_deep_nest(&s).unwrap().unwrap();
    assert_eq!((p.alpha, p.beta, p.gamma), (0, 0, 26));
}

#[test]
fn canonical_print() {
    assert_eq!(print_scheme(&p9("<J+1<4+1<22>>>")), "<J + 1<4 + 1<22>>>");
    assert_eq!(print_scheme(&p9("< 1<1<22> + 4> + J >")), "<J + 1<4 + 1<22>>>");
    assert_eq!(print_scheme(&parse_scheme("<0>", 4).unwrap()), "<0>");
    assert_eq!(print_scheme(&p9("<J + 2<1> + 3>")), "<J + 3 + 1<1> + 1<1>>");
    assert_eq!(p9("<J + 2<1> + 3>"), p9("<J + 1<1> + 3 + 1<1>>"));
}

#[test]
fn parse_errors() {
    assert!(matches!(
        parse_scheme("<J + 1<J>>", 9),
        Err(SchemeError::NestedPseudoLine { pos: 7 })
    ));
    assert!(matches!(
        parse_scheme("<J + J>", 9),
        Err(SchemeError::DuplicatePseudoLine { pos: 5 })
    ));
    assert!(matches!(parse_scheme("<J + 1<>>", 9), Err(SchemeError::Syntax { pos: 7, .. })));
    assert!(matches!(parse_scheme("<J + 0<2>>", 9), Err(SchemeError::Syntax { .. })));
    assert!(matches!(parse_scheme("<J + 0>", 9), Err(SchemeError::Syntax { .. })));
    assert!(matches!(parse_scheme("<J + <2>>", 9), Err(SchemeError::Syntax { .. })));
    assert!(matches!(parse_scheme("<J> x", 9), Err(SchemeError::Syntax { pos: 4, .. })));
    assert!(matches!(parse_scheme("<J + 1_+>", 9), Err(SchemeError::UnexpectedSign { .. })));
    assert!(matches!(
        parse_scheme("<3>", 9),
        Err(SchemeError::PseudoLineParity { .. })
    ));
    assert!(matches!(
        parse_scheme("<J + 29>", 9),
        Err(SchemeError::TooManyComponents { components: 30, max: 29, .. })
    ));
}

#[test]
fn m_curve_counts() {
    assert!(is_m_curve(&p9("<J + 28>")));
    assert!(!is_m_curve(&p9("<J + 27>")));
    assert!(is_m_curve(&parse_scheme("<J + 15>", 7).unwrap()));
    assert!(!is_m_curve(&parse_scheme("<J + 15>", 9).unwrap()));
}

#[test]
fn deep_nest_profiles() {
    let p = classify_deep_nest(&p9("<J + 1<4 + 1<22>>>")).unwrap().unwrap();
    assert_eq!((p.alpha, p.beta, p.gamma, p.nest_depth), (0, 4, 22, 3));
    assert_eq!(classify_deep_nest(&p9("<J + 26>")).unwrap(), None);
    assert_eq!(classify_deep_nest(&p9("<J + 1<3> + 1<2>>")).unwrap(), None);
}

#[test]
fn deep_nest_inadmissible() {
    let err = classify_deep_nest(&p9("<J + 1<2 + 1<1<3>>>>")).unwrap_err();
    // an oval inside an inner oval, paired with a median oval
    assert_eq!(err.forced, 11);
    let s = p9("<J + 1<2 + 1<1<3>>>>");
    let deep = err.first.depth().max(err.second.depth());
    assert_eq!(deep, 4);
    assert!(err.first.resolve(&s).is_some() && err.second.resolve(&s).is_some());
}

#[test]
fn complex_round_trip() {
    let text = "<J + 1_-<4_+ + 0_- + 1_-<11_+ + 11_->>>";
    let cs = parse_complex_scheme(text, 9).unwrap();
    assert_eq!(print_scheme(&cs), text);
    let alt = parse_complex_scheme("<J+1_\u{2212}<1_-<11_+ +11_->+4_+>>", 9).unwrap();
    assert_eq!(alt, cs);
    assert_eq!(cs.ovals()[0].mark, Sign::Minus);
    assert!(matches!(
        parse_complex_scheme("<J + 1<3_+>>", 9),
        Err(SchemeError::MissingSign { .. })
    ));
}

fn arb_forest() -> impl Strategy<Value = String> {
    let leaf = (1usize..4).prop_map(|k| k.to_string());
    let tree = leaf.prop_recursive(4, 24, 4, |inner| {
        prop::collection::vec(inner, 1..4).prop_map(|items| format!("1<{}>", items.join(" + ")))
    });
    (any::<bool>(), prop::collection::vec(tree, 0..4)).prop_map(|(j, items)| {
        let mut all = Vec::new();
        if j {
            all.push("J".to_string());
        }
        all.extend(items);
        if all.is_empty() {
            "<0>".to_string()
        } else {
            format!("<{}>", all.join(" + "))
        }
    })
}

proptest! {
    #[test]
    fn print_parse_idempotent(text in arb_forest()) {
        let degree = if text.contains('J') { 99 } else { 98 };
        let s = parse_scheme(&text, degree).unwrap();
        let printed = print_scheme(&s);
        let again = parse_scheme(&printed, degree).unwrap();
        prop_assert_eq!(&again, &s);
        prop_assert_eq!(print_scheme(&again), printed);
    }

    #[test]
    fn profile_counts_ovals(beta in 0usize..10, gamma in 1usize..10, alpha in 0usize..3) {
        let text = format!("<J + {} + 1<{} + 1<{}>>>", alpha.max(1), beta.max(1), gamma);
        let s = parse_scheme(&text, 99).unwrap();
        if let Ok(Some(p)) = classify_deep_nest(&s) {
            prop_assert_eq!(p.alpha + p.beta + p.gamma + 2, s.oval_count());
        }
    }
}
