use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};
use serde::{Serialize, Serializer};

use super::point::{cross, det3, sign, LineRP2, ProjectivePoint, V3};
use super::poly::Poly;
use super::{fmt_labels, GeometryError, Label, Labeled};

/// Monomial exponents in coefficient order: x0^2, x0x1, x1^2, x0x2, x1x2, x2^2.
const MONOMIALS: [[u32; 3]; 6] = [[2, 0, 0], [1, 1, 0], [0, 2, 0], [1, 0, 1], [0, 1, 1], [0, 0, 2]];

fn monomials(p: &V3) -> [BigInt; 6] {
    MONOMIALS.map(|e| p[0].pow(e[0]) * p[1].pow(e[1]) * p[2].pow(e[2]))
}

/// Fraction-free determinant.
pub(crate) fn bareiss(mut m: Vec<Vec<BigInt>>) -> BigInt {
    let n = m.len();
    let mut prev = BigInt::from(1);
    let mut negate = false;
    for k in 0..n {
        if m[k][k].is_zero() {
            match (k + 1..n).find(|&r| !m[r][k].is_zero()) {
                Some(r) => {
                    m.swap(k, r);
                    negate = !negate;
                }
                None => return BigInt::zero(),
            }
        }
        for i in k + 1..n {
            for jx in k + 1..n {
                let v = (&m[i][jx] * &m[k][k] - &m[i][k] * &m[k][jx]) / &prev;
                m[i][jx] = v;
            }
        }
        prev = m[k][k].clone();
    }
    let d = m[n - 1][n - 1].clone();
    if negate {
        -d
    } else {
        d
    }
}

/// A conic a x0^2 + b x0x1 + c x1^2 + d x0x2 + e x1x2 + f x2^2 = 0, with
/// coprime coefficients. Line pairs found from collinear input points are
/// kept as `factors`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConicQ {
    coeffs: [BigInt; 6],
    factors: Option<(LineRP2, LineRP2)>,
}

impl ConicQ {
    pub fn new(coeffs: [BigInt; 6]) -> Option<Self> {
        let g = coeffs.iter().fold(BigInt::zero(), |g, c| g.gcd(c));
        if g.is_zero() {
            return None;
        }
        Some(ConicQ { coeffs: coeffs.map(|c| c / &g), factors: None })
    }

    /// The product of two line equations.
    pub fn line_pair(l: &LineRP2, m: &LineRP2) -> Self {
        let (a, b) = (l.coords(), m.coords());
        let coeffs = [
            &a[0] * &b[0],
            &a[0] * &b[1] + &a[1] * &b[0],
            &a[1] * &b[1],
            &a[0] * &b[2] + &a[2] * &b[0],
            &a[1] * &b[2] + &a[2] * &b[1],
            &a[2] * &b[2],
        ];
        let mut c = ConicQ::new(coeffs).expect("product of nonzero lines");
        c.factors = Some((l.clone(), m.clone()));
        c
    }

    pub fn coeffs(&self) -> &[BigInt; 6] {
        &self.coeffs
    }

    pub fn factors(&self) -> Option<&(LineRP2, LineRP2)> {
        self.factors.as_ref()
    }

    pub fn eval(&self, p: &V3) -> BigInt {
        self.coeffs.iter().zip(monomials(p)).map(|(c, m)| c * m).sum()
    }

    pub fn contains(&self, p: &ProjectivePoint) -> bool {
        self.eval(p.coords()).is_zero()
    }

    /// Twice the symmetric coefficient matrix.
    pub fn matrix(&self) -> [V3; 3] {
        let [a, b, c, d, e, f] = &self.coeffs;
        [
            [a * 2, b.clone(), d.clone()],
            [b.clone(), c * 2, e.clone()],
            [d.clone(), e.clone(), f * 2],
        ]
    }

    pub fn determinant(&self) -> BigInt {
        let m = self.matrix();
        det3(&m[0], &m[1], &m[2])
    }

    pub fn is_degenerate(&self) -> bool {
        self.determinant().is_zero()
    }

    /// The tangent line at a point of the conic (twice the gradient).
    pub fn polar(&self, p: &V3) -> V3 {
        let m = self.matrix();
        [
            super::point::dot(&m[0], p),
            super::point::dot(&m[1], p),
            super::point::dot(&m[2], p),
        ]
    }

    /// Q(s x + t y) as the binary form (Q(x), Q(x+y) - Q(x) - Q(y), Q(y)).
    pub fn restrict(&self, x: &V3, y: &V3) -> [BigInt; 3] {
        let qx = self.eval(x);
        let qy = self.eval(y);
        let qxy = self.eval(&super::point::add(x, y));
        let mid = qxy - &qx - &qy;
        [qx, mid, qy]
    }

    pub fn to_poly(&self) -> Poly {
        let mut p = Poly::zero();
        for (e, c) in MONOMIALS.iter().zip(&self.coeffs) {
            p.add_term(*e, c.clone());
        }
        p
    }

    /// None unless `p` is a nonzero quadratic form.
    pub fn from_poly(p: &Poly) -> Option<Self> {
        if p.terms().any(|(e, _)| e.iter().sum::<u32>() != 2) {
            return None;
        }
        ConicQ::new(MONOMIALS.map(|e| p.coefficient(e)))
    }

    /// Equal up to a nonzero scalar.
    pub fn same_curve(&self, other: &ConicQ) -> bool {
        (0..6).all(|i| {
            (0..6).all(|k| &self.coeffs[i] * &other.coeffs[k] == &self.coeffs[k] * &other.coeffs[i])
        })
    }
}

impl fmt::Display for ConicQ {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_poly())
    }
}

impl Serialize for ConicQ {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_seq(self.coeffs.iter().map(ToString::to_string))
    }
}

/// The conic through five points.
pub fn conic_through_5(points: &[ProjectivePoint; 5]) -> Result<ConicQ, GeometryError> {
    let rows: Vec<[BigInt; 6]> = points.iter().map(|p| monomials(p.coords())).collect();
    let coeffs: [BigInt; 6] = std::array::from_fn(|col| {
        let minor: Vec<Vec<BigInt>> = rows
            .iter()
            .map(|r| (0..6).filter(|&c| c != col).map(|c| r[c].clone()).collect())
            .collect();
        let d = bareiss(minor);
        if col % 2 == 0 {
            d
        } else {
            -d
        }
    });
    let mut conic = ConicQ::new(coeffs).ok_or(GeometryError::ConicNotUnique)?;
    if let Some(c) = conic.coeffs.iter().find(|c| !c.is_zero()) {
        if c.is_negative() {
            conic.coeffs = conic.coeffs.clone().map(|x| -x);
        }
    }
    for a in 0..5 {
        for b in a + 1..5 {
            for c in b + 1..5 {
                let (pa, pb, pc) = (&points[a], &points[b], &points[c]);
                if det3(pa.coords(), pb.coords(), pc.coords()).is_zero() {
                    let rest: Vec<usize> = (0..5).filter(|i| ![a, b, c].contains(i)).collect();
                    let l = LineRP2::through(pa, pb).expect("distinct points");
                    let m = LineRP2::through(&points[rest[0]], &points[rest[1]])
                        .ok_or(GeometryError::ConicNotUnique)?;
                    conic.factors = Some((l, m));
                    return Ok(conic);
                }
            }
        }
    }
    Ok(conic)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum EventKind {
    SingularMember,
    PassesThroughPoint,
}

/// A distinguished member of the pencil `lambda Q1 + mu Q2`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PencilEvent {
    pub kind: EventKind,
    pub label: String,
    /// (lambda, mu), primitive, in the half-turn mu > 0 or (mu = 0, lambda > 0).
    #[serde(serialize_with = "ser_param")]
    pub parameter: [BigInt; 2],
    /// For singular members, the two pairs of base labels.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub pairs: Option<[[Label; 2]; 2]>,
    /// For passages, the extra point's label.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub point: Option<Label>,
}

fn ser_param<S: Serializer>(p: &[BigInt; 2], s: S) -> Result<S::Ok, S::Error> {
    s.collect_seq(p.iter().map(ToString::to_string))
}

fn normalize_param(l: BigInt, m: BigInt) -> [BigInt; 2] {
    let g = l.gcd(&m);
    let (mut l, mut m) = (l / &g, m / &g);
    if m.is_negative() || (m.is_zero() && l.is_negative()) {
        l = -l;
        m = -m;
    }
    [l, m]
}

fn param_cmp(a: &[BigInt; 2], b: &[BigInt; 2]) -> Ordering {
    let c = &a[0] * &b[1] - &a[1] * &b[0];
    0.cmp(&sign(&c))
}

fn pair_label(p: [[Label; 2]; 2]) -> (String, [[Label; 2]; 2]) {
    let mut p = p.map(|mut q| {
        q.sort();
        q
    });
    p.sort();
    (format!("{}{}∪{}{}", p[0][0], p[0][1], p[1][0], p[1][1]), p)
}

/// Generators of the pencil through four base points: Q1 = b0b1 ∪ b2b3 and
/// Q2 = b0b2 ∪ b1b3.
pub fn pencil_generators(base: &[Labeled; 4]) -> Result<(ConicQ, ConicQ), GeometryError> {
    for a in 0..4 {
        for b in a + 1..4 {
            if base[a].1 == base[b].1 {
                return Err(GeometryError::Coincident(fmt_labels(&[base[a].0, base[b].0])));
            }
            for c in b + 1..4 {
                let (pa, pb, pc) = (&base[a].1, &base[b].1, &base[c].1);
                if det3(pa.coords(), pb.coords(), pc.coords()).is_zero() {
                    return Err(GeometryError::Collinear(fmt_labels(&[
                        base[a].0, base[b].0, base[c].0,
                    ])));
                }
            }
        }
    }
    let line = |a: usize, b: usize| LineRP2::through(&base[a].1, &base[b].1).expect("distinct");
    Ok((
        ConicQ::line_pair(&line(0, 1), &line(2, 3)),
        ConicQ::line_pair(&line(0, 2), &line(1, 3)),
    ))
}

/// The member through a non-base point `p`.
fn member_through(q1: &ConicQ, q2: &ConicQ, p: &V3) -> Option<[BigInt; 2]> {
    let (a, b) = (q1.eval(p), q2.eval(p));
    if a.is_zero() && b.is_zero() {
        return None;
    }
    Some(normalize_param(b, -a))
}

/// Singular members and passages through the extra points, in increasing
/// parameter order starting from Q1.
pub fn conic_pencil_events(
    base: &[Labeled; 4],
    extras: &[Labeled],
) -> Result<Vec<PencilEvent>, GeometryError> {
    let (q1, q2) = pencil_generators(base)?;
    let ids: [Label; 4] = std::array::from_fn(|i| base[i].0);
    // A point of line b0b3 off the other base lines locates the third line pair.
    let (b0, b3) = (base[0].1.coords(), base[3].1.coords());
    let l12 = cross(base[1].1.coords(), base[2].1.coords());
    let z = (1..)
        .map(|k: i64| super::point::add(b0, &super::point::scale(b3, &BigInt::from(k))))
        .find(|z| !super::point::dot(z, &l12).is_zero())
        .expect("some point of b0b3 avoids b1b2");
    let third = member_through(&q1, &q2, &z).expect("z is not a base point");
    let mut events = vec![
        singular([[ids[0], ids[1]], [ids[2], ids[3]]], normalize_param(1.into(), 0.into())),
        singular([[ids[0], ids[2]], [ids[1], ids[3]]], normalize_param(0.into(), 1.into())),
        singular([[ids[0], ids[3]], [ids[1], ids[2]]], third),
    ];
    for (label, p) in extras {
        if base.iter().any(|(_, b)| b == p) {
            return Err(GeometryError::Coincident(format!("{label} and a base point")));
        }
        let param = member_through(&q1, &q2, p.coords()).expect("not a base point");
        events.push(PencilEvent {
            kind: EventKind::PassesThroughPoint,
            label: format!("point {label}"),
            parameter: param,
            pairs: None,
            point: Some(*label),
        });
    }
    for (i, a) in events.iter().enumerate() {
        for b in &events[i + 1..] {
            if a.parameter == b.parameter {
                return Err(GeometryError::EventCollision(a.label.clone(), b.label.clone()));
            }
        }
    }
    // Angles in [0, pi) increase along the sort; Q1 sits at angle 0.
    events.sort_by(|a, b| param_cmp(&a.parameter, &b.parameter));
    Ok(events)
}

fn singular(pairs: [[Label; 2]; 2], parameter: [BigInt; 2]) -> PencilEvent {
    let (label, pairs) = pair_label(pairs);
    PencilEvent { kind: EventKind::SingularMember, label, parameter, pairs: Some(pairs), point: None }
}
