use std::fmt;

use num_bigint::BigInt;
use num_traits::Zero;
use serde::Serialize;

use super::conic::{conic_pencil_events, conic_through_5, pencil_generators, EventKind, PencilEvent};
use super::cremona::Cremona;
use super::point::{add, cross, det3, sign, LineRP2, ProjectivePoint};
use super::region::{intersect_triangles, principal_triangle_contains};
use super::sweep::{ensure_general_position, hull_order, line_pencil_sweep};
use super::{GeometryError, Label, Labeled};
use crate::Sign;

/// The principal triangles on consecutive targets of the sweep from 1.
pub const FIVE_TRIANGLES: [[Label; 3]; 5] = [[2, 3, 4], [3, 4, 5], [4, 5, 6], [5, 6, 2], [6, 2, 3]];

/// Reducible members `1X ∪ conic` of the cubic pencil for cases 1, 2, 3,
/// in pencil order, with the conic's points in cyclic order.
pub const EXPECTED_SEQUENCES: [[(Label, [Label; 5]); 5]; 3] = [
    [
        (6, [1, 4, 5, 2, 3]),
        (4, [1, 2, 3, 5, 6]),
        (2, [1, 4, 3, 6, 5]),
        (5, [1, 2, 6, 4, 3]),
        (3, [1, 5, 4, 2, 6]),
    ],
    [
        (2, [1, 4, 3, 6, 5]),
        (5, [1, 2, 6, 4, 3]),
        (6, [1, 2, 5, 4, 3]),
        (3, [1, 2, 4, 5, 6]),
        (4, [1, 2, 3, 5, 6]),
    ],
    [
        (6, [1, 5, 2, 3, 4]),
        (4, [1, 5, 3, 2, 6]),
        (5, [1, 3, 2, 6, 4]),
        (3, [1, 4, 2, 6, 5]),
        (2, [1, 4, 3, 6, 5]),
    ],
];

/// Cyclic relabelling of 2..6 fixing 1.
pub(crate) fn relabel(x: Label, shift: u32) -> Label {
    if x == 1 {
        1
    } else {
        (x - 2 + shift) % 5 + 2
    }
}

/// A pair of the five triangles whose intersection is not two-dimensional.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Witness {
    pub first: [Label; 3],
    pub second: [Label; 3],
    /// "empty", a point label such as "6", or a segment such as "[34]".
    pub intersection: String,
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let t = |x: &[Label; 3]| x.iter().map(|l| l.to_string()).collect::<String>();
        write!(f, "{} ∩ {} = {}", t(&self.first), t(&self.second), self.intersection)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Contradiction {
    /// Pairwise degenerate intersections among the five triangles.
    Triangles { witnesses: Vec<Witness> },
    /// All pairs are two-dimensional but the five-fold intersection is not.
    FiveTriangles { intersection: String },
    /// The pencil through 1 visits 2, 6, 5, 4, 3 with five jumps.
    SweepReversed,
}

impl fmt::Display for Contradiction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Contradiction::Triangles { witnesses } => {
                let w: Vec<String> = witnesses.iter().map(ToString::to_string).collect();
                write!(f, "{}", w.join("; "))
            }
            Contradiction::FiveTriangles { intersection } => {
                write!(f, "five-triangle intersection is {intersection}")
            }
            Contradiction::SweepReversed => write!(f, "pencil through 1 sweeps 6, 5, 4, 3, 2"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "case", rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Lemma3Class {
    /// Convex position; `order` is the positive hull order from 2.
    Case1 { order: Vec<Label> },
    /// One point inside the hull of the others. After relabelling by
    /// `shift` it is 2; `ordering` is the hull order from 3 and `region` the
    /// index i with 2 in T_i.
    Case2 { shift: u32, ordering: Vec<Label>, region: Option<u8> },
    /// Two points inside the triangle of the others, relabelled to 4, 5;
    /// `region` is the index i with 5 in T_i.
    Case3 { shift: u32, ordering: Vec<Label>, region: Option<u8> },
    Contradiction(Contradiction),
}

impl Lemma3Class {
    pub fn case_number(&self) -> Option<u8> {
        match self {
            Lemma3Class::Case1 { .. } => Some(1),
            Lemma3Class::Case2 { .. } => Some(2),
            Lemma3Class::Case3 { .. } => Some(3),
            Lemma3Class::Contradiction(_) => None,
        }
    }
}

impl fmt::Display for Lemma3Class {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cat = |v: &[Label]| v.iter().map(|l| l.to_string()).collect::<String>();
        let reg = |p: Label, r: &Option<u8>| match r {
            Some(i) => format!("{p} ∈ T{i}"),
            None => format!("{p} in no region"),
        };
        match self {
            Lemma3Class::Case1 { order } => write!(f, "CASE1 order {}", cat(order)),
            Lemma3Class::Case2 { shift, ordering, region } => {
                write!(f, "CASE2 ordering {}, {} (shift {shift})", cat(ordering), reg(2, region))
            }
            Lemma3Class::Case3 { shift, ordering, region } => {
                write!(f, "CASE3 ordering {}, {} (shift {shift})", cat(ordering), reg(5, region))
            }
            Lemma3Class::Contradiction(c) => write!(f, "CONTRADICTION {c}"),
        }
    }
}

/// Points indexed by label 1..=6.
fn by_label(config: &[Labeled]) -> Result<Vec<Labeled>, GeometryError> {
    let mut v = config.to_vec();
    v.sort_by_key(|p| p.0);
    if v.iter().map(|p| p.0).ne(1..=6) {
        return Err(GeometryError::BadLabels);
    }
    Ok(v)
}

fn relabelled(pts: &[Labeled], shift: u32) -> Vec<Labeled> {
    let mut v: Vec<Labeled> = pts.iter().map(|(l, p)| (relabel(*l, shift), p.clone())).collect();
    v.sort_by_key(|p| p.0);
    v
}

fn tri<'a>(pts: &'a [Labeled], t: [Label; 3]) -> [&'a Labeled; 3] {
    t.map(|l| &pts[(l - 1) as usize])
}

fn inside(pts: &[Labeled], j: &LineRP2, p: Label, t: [Label; 3]) -> bool {
    let [a, b, c] = tri(pts, t);
    principal_triangle_contains(j, [&a.1, &b.1, &c.1], &pts[(p - 1) as usize].1)
}

fn same_side(pts: &[Labeled], j: &LineRP2, line: [Label; 2], p: Label, q: Label) -> bool {
    let g = |l: Label| &pts[(l - 1) as usize].1;
    let s = |x: Label| super::point::orient_j(j, g(line[0]), g(line[1]), g(x));
    s(p) == s(q)
}

fn sweep_from_1(pts: &[Labeled], j: &LineRP2) -> Result<super::Sweep, GeometryError> {
    let s = line_pencil_sweep(&pts[0], &pts[1..], Sign::Plus, j)?;
    Ok(s.starting_at(2).expect("2 is a target"))
}

pub fn classify_lemma3_case(config: &[Labeled], j: &LineRP2) -> Result<Lemma3Class, GeometryError> {
    let pts = by_label(config)?;
    ensure_general_position(&pts, j)?;
    let mut witnesses = Vec::new();
    for (i, a) in FIVE_TRIANGLES.iter().enumerate() {
        for b in &FIVE_TRIANGLES[i + 1..] {
            let x = intersect_triangles(&[tri(&pts, *a), tri(&pts, *b)], j)?;
            if !x.is_two_dimensional() {
                witnesses.push(Witness { first: *a, second: *b, intersection: x.describe(&pts) });
            }
        }
    }
    if !witnesses.is_empty() {
        return Ok(Lemma3Class::Contradiction(Contradiction::Triangles { witnesses }));
    }
    let all: Vec<[&Labeled; 3]> = FIVE_TRIANGLES.iter().map(|t| tri(&pts, *t)).collect();
    let five = intersect_triangles(&all, j)?;
    if !five.is_two_dimensional() {
        return Ok(Lemma3Class::Contradiction(Contradiction::FiveTriangles {
            intersection: five.describe(&pts),
        }));
    }
    let sweep = sweep_from_1(&pts, j)?;
    if sweep.jumps.iter().all(|&b| b) {
        if sweep.order == [2, 6, 5, 4, 3] {
            return Ok(Lemma3Class::Contradiction(Contradiction::SweepReversed));
        }
        if sweep.order != [2, 3, 4, 5, 6] {
            return Err(GeometryError::HypothesisViolation { order: sweep.order, jumps: sweep.jumps });
        }
    } else {
        return Err(GeometryError::HypothesisViolation { order: sweep.order, jumps: sweep.jumps });
    }
    let hull = hull_order(&pts[1..], j)?;
    match hull.len() {
        5 => Ok(Lemma3Class::Case1 { order: hull }),
        4 => {
            let p = (2..=6).find(|l| !hull.contains(l)).expect("one interior point");
            let shift = (7 - p) % 5;
            let q = relabelled(&pts, shift);
            let ordering = hull_order(&q[2..], j)?;
            let regions: [([Label; 3], [Label; 3]); 4] = match ordering.as_slice() {
                [3, 5, 4, 6] => [
                    ([3, 4, 5], [3, 5, 6]),
                    ([3, 5, 6], [3, 4, 6]),
                    ([3, 4, 6], [4, 5, 6]),
                    ([3, 4, 5], [4, 5, 6]),
                ],
                [3, 6, 4, 5] => [
                    ([3, 4, 6], [3, 5, 6]),
                    ([3, 5, 6], [3, 4, 5]),
                    ([3, 4, 5], [4, 5, 6]),
                    ([3, 4, 6], [4, 5, 6]),
                ],
                _ => return Ok(Lemma3Class::Case2 { shift, ordering, region: None }),
            };
            let region = regions
                .iter()
                .position(|(a, b)| inside(&q, j, 2, *a) && inside(&q, j, 2, *b))
                .map(|i| i as u8 + 1);
            Ok(Lemma3Class::Case2 { shift, ordering, region })
        }
        _ => {
            let interior: Vec<Label> = (2..=6).filter(|l| !hull.contains(l)).collect();
            let shift = (0..5)
                .find(|&sh| {
                    let mut r: Vec<Label> = interior.iter().map(|&l| relabel(l, sh)).collect();
                    r.sort();
                    r == [4, 5]
                })
                .ok_or_else(|| {
                    GeometryError::Excluded(format!(
                        "interior points {}, {} are not consecutive",
                        interior[0], interior[1]
                    ))
                })?;
            let q = relabelled(&pts, shift);
            let outer: Vec<Labeled> = [2, 3, 6].iter().map(|&l| q[l as usize - 1].clone()).collect();
            let ordering = hull_order(&outer, j)?;
            let region = case3_region(&q, j);
            Ok(Lemma3Class::Case3 { shift, ordering, region })
        }
    }
}

/// Triangle 632 cut by the lines through 4 and each vertex.
fn case3_region(q: &[Labeled], j: &LineRP2) -> Option<u8> {
    let cands: [([Label; 3], [Label; 2], Label, Label); 3] = [
        ([3, 4, 6], [4, 2], 6, 3),
        ([2, 3, 4], [4, 6], 3, 2),
        ([2, 4, 6], [4, 3], 2, 6),
    ];
    for (k, (t, line, first, second)) in cands.iter().enumerate() {
        if inside(q, j, 5, *t) {
            let base = 2 * k as u8 + 1;
            if same_side(q, j, *line, 5, *first) {
                return Some(base);
            }
            if same_side(q, j, *line, 5, *second) {
                return Some(base + 1);
            }
        }
    }
    None
}

/// A reducible member `1X ∪ C` with C the conic through 1 and the four
/// points other than X.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ReducibleCubic {
    pub line: Label,
    /// Cyclic order along the conic from 1, towards the smaller neighbour.
    pub conic: Vec<Label>,
}

impl fmt::Display for ReducibleCubic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let c: String = self.conic.iter().map(|l| l.to_string()).collect();
        write!(f, "1{} ∪ {}", self.line, c)
    }
}

/// Dihedral normal form: start at the minimum, go towards the smaller neighbour.
pub(crate) fn dihedral_normal(v: &[Label]) -> Vec<Label> {
    let k = v.iter().enumerate().min_by_key(|(_, &l)| l).map(|(k, _)| k).unwrap_or(0);
    let mut r = v.to_vec();
    r.rotate_left(k);
    if r.len() > 2 && r[r.len() - 1] < r[1] {
        r[1..].reverse();
    }
    r
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CubicSequence {
    pub members: Vec<ReducibleCubic>,
    /// Events of the conic pencil after the Cremona map, in parameter order.
    pub transformed_events: Vec<PencilEvent>,
    /// Whether increasing pencil parameter turns the node tangents clockwise,
    /// so that `members` lists the events in decreasing parameter order.
    pub reversed: bool,
}

impl CubicSequence {
    pub fn labels(&self) -> Vec<String> {
        self.members.iter().map(ToString::to_string).collect()
    }
}

fn conic_order(pts: &[Labeled], labels: [Label; 5], j: &LineRP2) -> Result<Vec<Label>, GeometryError> {
    let get = |l: Label| pts[(l - 1) as usize].clone();
    let five: [ProjectivePoint; 5] = labels.map(|l| get(l).1);
    let conic = conic_through_5(&five)?;
    let p1 = five[0].rep_for(j);
    let tangent = conic.polar(&p1);
    let w = add(&p1, &cross(&tangent, j.coords()));
    let w = ProjectivePoint::new(w).expect("off J");
    let mut targets = vec![(1, w)];
    targets.extend(labels[1..].iter().map(|&l| get(l)));
    let s = line_pencil_sweep(&get(1), &targets, Sign::Plus, j)?;
    Ok(dihedral_normal(&s.order))
}

fn binary_w(q1: &[BigInt; 3], q2: &[BigInt; 3], s: i64, t: i64) -> BigInt {
    let (s, t) = (BigInt::from(s), BigInt::from(t));
    let ev = |q: &[BigInt; 3]| &q[0] * &s * &s + &q[1] * &s * &t + &q[2] * &t * &t;
    // Derivative along (-t, s).
    let dv = |q: &[BigInt; 3]| {
        let ds: BigInt = &q[0] * 2 * &s + &q[1] * &t;
        let dt: BigInt = &q[1] * &s + &q[2] * 2 * &t;
        dt * &s - ds * &t
    };
    ev(q1) * dv(q2) - ev(q2) * dv(q1)
}

/// Reducible members of the pencil of cubics through 2..6 with a node at 1,
/// in the order met as the node tangents turn counter-clockwise.
pub fn reducible_cubic_sequence(
    config: &[Labeled],
    j: &LineRP2,
) -> Result<CubicSequence, GeometryError> {
    let pts = by_label(config)?;
    ensure_general_position(&pts, j)?;
    let sweep = sweep_from_1(&pts, j)?;
    if sweep.order != [2, 3, 4, 5, 6] || !sweep.jumps.iter().all(|&b| b) {
        return Err(GeometryError::HypothesisViolation { order: sweep.order, jumps: sweep.jumps });
    }
    let rep = |l: Label| pts[(l - 1) as usize].1.rep_for(j);
    let (r1, r4, r5) = (rep(1), rep(4), rep(5));
    let cr = Cremona::with_reps([r1.clone(), r5.clone(), r4.clone()])?;
    let image = |l: Label| -> Result<Labeled, GeometryError> {
        cr.apply_vec(&rep(l))
            .and_then(ProjectivePoint::new)
            .map(|p| (l, p))
            .ok_or_else(|| GeometryError::OnBaseLine(l.to_string()))
    };
    let base: [Labeled; 4] = [(1, pts[0].1.clone()), image(2)?, image(3)?, image(6)?];
    let extras = [(4, pts[3].1.clone()), (5, pts[4].1.clone())];
    let events = conic_pencil_events(&base, &extras)?;

    // Orientation: the member through s r5 + t r4 on the exceptional line of
    // 1 has a branch at 1 tangent towards t r5 + s r4.
    let (g1, g2) = pencil_generators(&base)?;
    let q1 = g1.restrict(&r5, &r4);
    let q2 = g2.restrict(&r5, &r4);
    let disc = |q: &[BigInt; 3]| &q[1] * &q[1] - &q[0] * &q[2] * 4;
    let da = disc(&q1);
    let db = &q1[1] * &q2[1] * 2 - &q1[0] * &q2[2] * 4 - &q2[0] * &q1[2] * 4;
    let dc = disc(&q2);
    if sign(&da) <= 0 || sign(&(&da * &dc * 4 - &db * &db)) <= 0 {
        return Err(GeometryError::NotCrunodal);
    }
    let w = [(1, 0), (0, 1), (1, 1), (1, -1)]
        .iter()
        .map(|&(s, t)| binary_w(&q1, &q2, s, t))
        .find(|w| !w.is_zero())
        .ok_or(GeometryError::NotCrunodal)?;
    let turn = sign(&det3(&r1, &r4, &r5));
    let reversed = sign(&w) * turn < 0;

    let mut members = Vec::with_capacity(5);
    for e in &events {
        let (line, conic): (Label, [Label; 5]) = match (e.kind, e.pairs, e.point) {
            (EventKind::SingularMember, Some([[1, a], [b, c]]), _) => (a, [1, 4, 5, b, c]),
            (EventKind::PassesThroughPoint, _, Some(4)) => (5, [1, 2, 3, 4, 6]),
            (EventKind::PassesThroughPoint, _, Some(5)) => (4, [1, 2, 3, 5, 6]),
            _ => unreachable!("pencil events over 1, 2, 3, 6 with extras 4, 5"),
        };
        members.push(ReducibleCubic { line, conic: conic_order(&pts, conic, j)? });
    }
    if reversed {
        members.reverse();
    }
    Ok(CubicSequence { members, transformed_events: events, reversed })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Orientation {
    Same,
    Reversed,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct SequenceMatch {
    pub case: u8,
    /// Relabelling 2..6 applied to the computed sequence.
    pub shift: u32,
    /// Direction in which the computed sequence reads the expected one.
    pub orientation: Orientation,
}

/// Compares with the expected sequence of `case` up to rotation, cyclic
/// relabelling of 2..6, and reading direction. Same direction is preferred.
pub fn match_sequence(seq: &CubicSequence, case: u8) -> Option<SequenceMatch> {
    let expected: Vec<(Label, Vec<Label>)> = EXPECTED_SEQUENCES
        .get(usize::from(case).checked_sub(1)?)?
        .iter()
        .map(|(x, c)| (*x, dihedral_normal(c)))
        .collect();
    for orientation in [Orientation::Same, Orientation::Reversed] {
        for shift in 0..5 {
            let mut cand: Vec<(Label, Vec<Label>)> = seq
                .members
                .iter()
                .map(|m| {
                    let c: Vec<Label> = m.conic.iter().map(|&l| relabel(l, shift)).collect();
                    (relabel(m.line, shift), dihedral_normal(&c))
                })
                .collect();
            if orientation == Orientation::Reversed {
                cand.reverse();
            }
            for r in 0..cand.len() {
                let mut rot = cand.clone();
                rot.rotate_left(r);
                if rot == expected {
                    return Some(SequenceMatch { case, shift, orientation });
                }
            }
        }
    }
    None
}
