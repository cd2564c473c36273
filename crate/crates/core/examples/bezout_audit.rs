//! Intersection budgets of auxiliary curves against the degree-9 curve.

use deepnest::bezout::{audit_with_threshold, five_jump_cubic, tally, visit, AuxCurveTrace, Extra, Role};

fn main() {
    let cubic = five_jump_cubic();
    println!("nodal cubic: {}", tally(&cubic).unwrap());

    let line = AuxCurveTrace::new(1, vec![visit("a", Role::Inner), visit("b", Role::Inner)], &[1, 0]);
    println!("line through two inner ovals: {}", tally(&line).unwrap());

    let roles = [Role::Median, Role::Inner, Role::Median, Role::Inner, Role::Median];
    let visits = ["A", "B", "C", "D", "E"].iter().zip(roles).map(|(o, r)| visit(o, r)).collect();
    let conic = AuxCurveTrace::new(2, visits, &[0; 5]);
    println!("generic conic: {}", tally(&conic).unwrap());

    let inner = ["A", "B", "C", "D", "E"].iter().map(|o| visit(o, Role::Inner)).collect();
    let hyperbola = AuxCurveTrace::new(2, inner, &[1, 0, 0, 1, 0]);
    println!("conic with two exterior branches: {}", tally(&hyperbola).unwrap());

    let mut annotated = conic.clone();
    annotated.extras.push(Extra { count: 6, tag: "crossings forced by the configuration".into() });
    println!("annotated conic: {}", audit_with_threshold(&annotated).unwrap());

    let even_line = AuxCurveTrace::new(1, vec![visit("a", Role::Inner), visit("b", Role::Inner)], &[0, 0]);
    println!("line without J crossing: {}", tally(&even_line).unwrap_err());

    println!("{}", serde_json::to_string(&cubic).unwrap());
}
