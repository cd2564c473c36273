use deepnest::bezout::{
    arc_crossings, audit_with_threshold, five_jump_cubic, nodal_visit, tally, visit, AuditError,
    AuxCurveTrace, BezoutVerdict, Extra, Region, Role,
};
use proptest::prelude::*;
use std::collections::{BTreeMap, BinaryHeap};
use std::cmp::Reverse;

/// Dijkstra over (region, J crossings so far). Moving between adjacent
/// regions crosses O1 or O2; a J crossing keeps the arc in the exterior.
fn oracle_arc(from: Region, to: Region, j: u32) -> (u32, u32) {
    let regions = [Region::Exterior, Region::Median, Region::Inner];
    let mut best: BTreeMap<(Region, u32), (u32, u32, u32)> = BTreeMap::new();
    let mut heap = BinaryHeap::new();
    heap.push(Reverse((0u32, 0u32, 0u32, from, 0u32)));
    while let Some(Reverse((cost, o1, o2, r, k))) = heap.pop() {
        if best.contains_key(&(r, k)) {
            continue;
        }
        best.insert((r, k), (cost, o1, o2));
        for s in regions {
            let d = r.depth().abs_diff(s.depth());
            if d == 1 {
                let crosses_o1 = r.depth().min(s.depth()) == 0;
                let (n1, n2) = if crosses_o1 { (o1 + 1, o2) } else { (o1, o2 + 1) };
                heap.push(Reverse((cost + 1, n1, n2, s, k)));
            }
        }
        if r == Region::Exterior && k < j {
            heap.push(Reverse((cost + 1, o1, o2, r, k + 1)));
        }
    }
    let (_, o1, o2) = best[&(to, j)];
    (o1, o2)
}

fn oracle_total(t: &AuxCurveTrace) -> u32 {
    let n = t.visits.len();
    let mut total = 2 * n as u32;
    for i in 0..n {
        let j = t.arcs[i].j_crossings;
        let (o1, o2) = oracle_arc(t.visits[i].role.region(), t.visits[(i + 1) % n].role.region(), j);
        total += o1 + o2 + j;
    }
    total
}

#[test]
fn five_jump_cubic_saturates() {
    let b = tally(&five_jump_cubic()).unwrap();
    assert_eq!(b.per_oval.values().sum::<u32>(), 14);
    assert_eq!(b.per_oval["1"], 4);
    assert_eq!((b.o1_crossings, b.o2_crossings, b.j_crossings), (6, 4, 3));
    assert_eq!(b.total, 27);
    assert_eq!(b.bound, 27);
    assert_eq!(b.verdict, BezoutVerdict::Saturated);
}

#[test]
fn conic_alternating_median_inner_is_within() {
    let t = AuxCurveTrace::new(
        2,
        vec![
            visit("A", Role::Median),
            visit("B", Role::Inner),
            visit("C", Role::Median),
            visit("D", Role::Inner),
            visit("E", Role::Median),
        ],
        &[0, 0, 0, 0, 0],
    );
    let b = tally(&t).unwrap();
    assert_eq!(b.total, 14);
    assert_eq!(b.o2_crossings, 4);
    assert_eq!(b.verdict, BezoutVerdict::Within);
}

#[test]
fn line_through_two_inner_ovals() {
    let t = AuxCurveTrace::new(1, vec![visit("a", Role::Inner), visit("b", Role::Inner)], &[1, 0]);
    let b = tally(&t).unwrap();
    assert_eq!(b.total, 9);
    assert_eq!(b.verdict, BezoutVerdict::Saturated);

    let even = AuxCurveTrace::new(1, vec![visit("a", Role::Inner), visit("b", Role::Inner)], &[0, 0]);
    assert!(matches!(tally(&even), Err(AuditError::Parity { .. })));
}

fn hyperbola_through_inner_ovals() -> AuxCurveTrace {
    let v = ["A", "B", "C", "D", "E"].iter().map(|o| visit(o, Role::Inner)).collect();
    AuxCurveTrace::new(2, v, &[1, 0, 0, 1, 0])
}

#[test]
fn hyperbola_through_five_inner_ovals_violates() {
    let b = tally(&hyperbola_through_inner_ovals()).unwrap();
    assert_eq!((b.o1_crossings, b.o2_crossings, b.j_crossings), (4, 4, 2));
    assert_eq!(b.total, 20);
    assert_eq!(b.verdict, BezoutVerdict::Violation);
}

#[test]
fn tagged_extras_are_added() {
    let v: Vec<_> = ["A", "B", "C", "D", "E"].iter().map(|o| visit(o, Role::Inner)).collect();
    let mut t = AuxCurveTrace::new(2, v, &[0; 5]);
    assert_eq!(tally(&t).unwrap().total, 10);
    t.extras.push(Extra { count: 10, tag: "two exterior excursions".into() });
    let b = audit_with_threshold(&t).unwrap();
    assert_eq!((b.extras, b.total, b.verdict), (10, 20, BezoutVerdict::Violation));
    // tally ignores extras
    assert_eq!(tally(&t).unwrap().total, 10);

    t.extras.push(Extra { count: 1, tag: "  ".into() });
    assert_eq!(audit_with_threshold(&t), Err(AuditError::UntaggedExtra(1)));
}

#[test]
fn invalid_traces_rejected() {
    let mut t = five_jump_cubic();
    t.degree = 2;
    assert!(matches!(tally(&t), Err(AuditError::Node(_))));

    let mut t = five_jump_cubic();
    t.visits[4] = visit("1", Role::Inner);
    assert!(matches!(tally(&t), Err(AuditError::Node(_))));

    let mut t = five_jump_cubic();
    t.visits[1] = nodal_visit("2", Role::Median);
    assert!(matches!(tally(&t), Err(AuditError::Node(_))));

    let mut t = five_jump_cubic();
    t.arcs.pop();
    assert!(matches!(tally(&t), Err(AuditError::ArcCount { .. })));

    let mut t = five_jump_cubic();
    t.visits[4].role = Role::Median;
    assert!(matches!(tally(&t), Err(AuditError::RoleConflict(_))));

    let t = AuxCurveTrace::new(4, vec![visit("a", Role::Inner)], &[0]);
    assert_eq!(tally(&t), Err(AuditError::Degree(4)));
}

#[test]
fn trace_json_round_trip() {
    let json = r#"{"degree":1,"visits":[{"oval":"a","role":"inner"},{"oval":"b","role":"inner"}],
                   "arcs":[{"jCrossings":1},{"jCrossings":0}]}"#;
    let t: AuxCurveTrace = serde_json::from_str(json).unwrap();
    assert_eq!(tally(&t).unwrap().total, 9);
    let back: AuxCurveTrace = serde_json::from_str(&serde_json::to_string(&five_jump_cubic()).unwrap()).unwrap();
    assert_eq!(back, five_jump_cubic());
}

#[test]
fn arc_crossings_match_oracle_exhaustively() {
    let regions = [Region::Median, Region::Inner];
    for a in regions {
        for b in regions {
            for j in 0..4 {
                let (o1, o2) = arc_crossings(a, b, j);
                assert_eq!((o1, o2), oracle_arc(a, b, j), "{a:?} {b:?} {j}");
            }
        }
    }
}

fn arb_trace() -> impl Strategy<Value = AuxCurveTrace> {
    (1u32..=3, 1usize..=7)
        .prop_flat_map(|(d, n)| {
            (
                Just(d),
                prop::collection::vec(prop::bool::ANY, n),
                prop::collection::vec(0u32..3, n),
            )
        })
        .prop_map(|(d, inner, mut js)| {
            let total: u32 = js.iter().sum();
            if total % 2 != d % 2 {
                js[0] += 1;
            }
            let visits = inner
                .iter()
                .enumerate()
                .map(|(i, &b)| visit(&format!("o{i}"), if b { Role::Inner } else { Role::Median }))
                .collect();
            AuxCurveTrace::new(d, visits, &js)
        })
}

proptest! {
    #[test]
    fn tally_matches_shortest_path_oracle(t in arb_trace()) {
        prop_assert_eq!(tally(&t).unwrap().total, oracle_total(&t));
    }

    #[test]
    fn tally_invariant_under_rotation_and_reversal(t in arb_trace(), k in 0usize..7) {
        let b = tally(&t).unwrap();
        let r = tally(&t.rotated(k % t.visits.len())).unwrap();
        let rev = tally(&t.reversed()).unwrap();
        prop_assert_eq!(&b, &r);
        prop_assert_eq!(&b, &rev);
    }
}

#[test]
fn reversal_of_cubic_keeps_arcs_attached() {
    let t = five_jump_cubic();
    let r = t.reversed();
    let n = t.visits.len();
    for i in 0..n {
        // arc between r.visits[i] and r.visits[i+1] must be one joining those ovals in t
        let (a, b) = (&r.visits[i].oval, &r.visits[(i + 1) % n].oval);
        let k = (0..n)
            .find(|&k| &t.visits[(k + 1) % n].oval == a && &t.visits[k].oval == b && t.arcs[k] == r.arcs[i])
            .is_some();
        assert!(k, "arc {i}");
    }
    assert_eq!(r.reversed(), t);
}
