use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Serialize, Serializer};

pub type V3 = [BigInt; 3];

pub fn v3(a: i64, b: i64, c: i64) -> V3 {
    [a.into(), b.into(), c.into()]
}

pub fn dot(a: &V3, b: &V3) -> BigInt {
    &a[0] * &b[0] + &a[1] * &b[1] + &a[2] * &b[2]
}

pub fn cross(a: &V3, b: &V3) -> V3 {
    [
        &a[1] * &b[2] - &a[2] * &b[1],
        &a[2] * &b[0] - &a[0] * &b[2],
        &a[0] * &b[1] - &a[1] * &b[0],
    ]
}

pub fn det3(a: &V3, b: &V3, c: &V3) -> BigInt {
    dot(a, &cross(b, c))
}

pub fn scale(a: &V3, k: &BigInt) -> V3 {
    [&a[0] * k, &a[1] * k, &a[2] * k]
}

pub fn add(a: &V3, b: &V3) -> V3 {
    [&a[0] + &b[0], &a[1] + &b[1], &a[2] + &b[2]]
}

pub fn sub(a: &V3, b: &V3) -> V3 {
    [&a[0] - &b[0], &a[1] - &b[1], &a[2] - &b[2]]
}

pub fn neg(a: &V3) -> V3 {
    [-&a[0], -&a[1], -&a[2]]
}

pub fn is_zero(a: &V3) -> bool {
    a.iter().all(Zero::is_zero)
}

/// Divides out the gcd of the entries, keeping the direction.
pub fn primitive(a: &V3) -> V3 {
    let g = a[0].gcd(&a[1]).gcd(&a[2]);
    if g.is_zero() || g.is_one() {
        a.clone()
    } else {
        [&a[0] / &g, &a[1] / &g, &a[2] / &g]
    }
}

/// Primitive representative whose last nonzero entry is positive.
fn canonical(a: &V3) -> V3 {
    let p = primitive(a);
    match p.iter().rev().find(|c| !c.is_zero()) {
        Some(c) if c.is_negative() => neg(&p),
        _ => p,
    }
}

pub fn sign(x: &BigInt) -> i8 {
    if x.is_positive() {
        1
    } else if x.is_negative() {
        -1
    } else {
        0
    }
}

fn fmt_v3(c: &V3, f: &mut fmt::Formatter<'_>) -> fmt::Result {
    write!(f, "({}:{}:{})", c[0], c[1], c[2])
}

fn ser_v3<S: Serializer>(c: &V3, s: S) -> Result<S::Ok, S::Error> {
    let strs: Vec<String> = c.iter().map(ToString::to_string).collect();
    strs.serialize(s)
}

/// A point of the real projective plane with integer homogeneous coordinates.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ProjectivePoint {
    c: V3,
}

impl ProjectivePoint {
    /// None for the zero vector.
    pub fn new(c: V3) -> Option<Self> {
        (!is_zero(&c)).then(|| ProjectivePoint { c: canonical(&c) })
    }

    pub fn from_i64(x0: i64, x1: i64, x2: i64) -> Option<Self> {
        Self::new(v3(x0, x1, x2))
    }

    /// The affine point (x, y) as (x:y:1).
    pub fn affine(x: i64, y: i64) -> Self {
        Self::new(v3(x, y, 1)).expect("nonzero")
    }

    pub fn coords(&self) -> &V3 {
        &self.c
    }

    pub fn on_line(&self, l: &LineRP2) -> bool {
        dot(&self.c, l.coords()).is_zero()
    }

    /// Representative lying on the positive side of `j`.
    pub fn rep_for(&self, j: &LineRP2) -> V3 {
        if dot(&self.c, j.coords()).is_negative() {
            neg(&self.c)
        } else {
            self.c.clone()
        }
    }

    /// Image under the matrix with rows `m`.
    pub fn transform(&self, m: &[V3; 3]) -> Self {
        Self::new([dot(&m[0], &self.c), dot(&m[1], &self.c), dot(&m[2], &self.c)])
            .expect("invertible matrix")
    }

    /// Affine coordinates in the chart x2 = 1, as floats (for cross-checks only).
    pub fn to_f64_affine(&self) -> Option<(f64, f64)> {
        use num_traits::ToPrimitive;
        if self.c[2].is_zero() {
            return None;
        }
        let z = self.c[2].to_f64()?;
        Some((self.c[0].to_f64()? / z, self.c[1].to_f64()? / z))
    }
}

impl fmt::Display for ProjectivePoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_v3(&self.c, f)
    }
}

impl Serialize for ProjectivePoint {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        ser_v3(&self.c, s)
    }
}

/// A line a0 x0 + a1 x1 + a2 x2 = 0. The sign of the coordinates is kept
/// as given, since a line standing for the pseudo-line also fixes a side.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LineRP2 {
    c: V3,
}

impl LineRP2 {
    /// Primitive, with the sign canonicalized as for points.
    pub fn new(c: V3) -> Option<Self> {
        (!is_zero(&c)).then(|| LineRP2 { c: canonical(&c) })
    }

    /// Primitive, keeping the given sign.
    pub fn oriented(c: V3) -> Option<Self> {
        (!is_zero(&c)).then(|| LineRP2 { c: primitive(&c) })
    }

    pub fn from_i64(a0: i64, a1: i64, a2: i64) -> Option<Self> {
        Self::oriented(v3(a0, a1, a2))
    }

    /// The line at infinity x2 = 0, positive on the affine chart.
    pub fn infinity() -> Self {
        LineRP2 { c: v3(0, 0, 1) }
    }

    pub fn through(p: &ProjectivePoint, q: &ProjectivePoint) -> Option<Self> {
        Self::new(cross(p.coords(), q.coords()))
    }

    pub fn coords(&self) -> &V3 {
        &self.c
    }

    /// Image under the matrix with rows `m`, as adj(m)^T l, so that the
    /// sides of the line follow the points when det(m) > 0 and swap otherwise.
    pub fn transform(&self, m: &[V3; 3]) -> Self {
        let cols = [cross(&m[1], &m[2]), cross(&m[2], &m[0]), cross(&m[0], &m[1])];
        Self::oriented([dot(&cols[0], &self.c), dot(&cols[1], &self.c), dot(&cols[2], &self.c)])
            .expect("invertible matrix")
    }

    pub fn meet(&self, other: &LineRP2) -> Option<ProjectivePoint> {
        ProjectivePoint::new(cross(&self.c, &other.c))
    }
}

impl fmt::Display for LineRP2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}:{}:{}]", self.c[0], self.c[1], self.c[2])
    }
}

impl Serialize for LineRP2 {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        ser_v3(&self.c, s)
    }
}

/// Sign of det(p, q, r) on canonical representatives.
pub fn orient(p: &ProjectivePoint, q: &ProjectivePoint, r: &ProjectivePoint) -> i8 {
    sign(&det3(p.coords(), q.coords(), r.coords()))
}

/// Orientation in the affine chart complementary to `j`.
pub fn orient_j(j: &LineRP2, p: &ProjectivePoint, q: &ProjectivePoint, r: &ProjectivePoint) -> i8 {
    sign(&det3(&p.rep_for(j), &q.rep_for(j), &r.rep_for(j)))
}
