use serde::Serialize;

use super::point::{add, cross, det3, dot, primitive, scale, sign, LineRP2, ProjectivePoint, V3};
use super::{GeometryError, Labeled};
use num_traits::{Signed, Zero};

/// The two segments of line XY: `principal` avoids J, `complement` crosses
/// it once, at `crossing`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SegmentDescriptor {
    pub x: ProjectivePoint,
    pub y: ProjectivePoint,
    pub crossing: ProjectivePoint,
    #[serde(skip)]
    xr: V3,
    #[serde(skip)]
    yr: V3,
}

impl SegmentDescriptor {
    fn coefficients(&self, z: &ProjectivePoint, j: &LineRP2) -> Option<(i8, i8)> {
        let w = cross(&self.xr, &self.yr);
        let zr = z.rep_for(j);
        if !dot(&zr, &w).is_zero() {
            return None;
        }
        let d = det3(&self.xr, &self.yr, &w);
        let a = det3(&zr, &self.yr, &w);
        let b = det3(&self.xr, &zr, &w);
        Some((sign(&a) * sign(&d), sign(&b) * sign(&d)))
    }

    /// Whether `z` lies on the closed principal segment.
    pub fn in_principal(&self, z: &ProjectivePoint, j: &LineRP2) -> bool {
        if z.on_line(j) {
            return false;
        }
        matches!(self.coefficients(z, j), Some((a, b)) if a >= 0 && b >= 0)
    }

    /// Whether `z` lies on the closed complementary segment.
    pub fn in_complement(&self, z: &ProjectivePoint, j: &LineRP2) -> bool {
        if z.on_line(j) {
            return self.coefficients(z, j).is_some();
        }
        matches!(self.coefficients(z, j), Some((a, b)) if a * b <= 0)
    }
}

fn rep_checked(p: &Labeled, j: &LineRP2) -> Result<V3, GeometryError> {
    if p.1.on_line(j) {
        return Err(GeometryError::OnJ(p.0.to_string()));
    }
    Ok(p.1.rep_for(j))
}

pub fn principal_segment(
    x: &ProjectivePoint,
    y: &ProjectivePoint,
    j: &LineRP2,
) -> Result<SegmentDescriptor, GeometryError> {
    for p in [x, y] {
        if p.on_line(j) {
            return Err(GeometryError::OnJ(p.to_string()));
        }
    }
    if x == y {
        return Err(GeometryError::Coincident(format!("{x}")));
    }
    let xr = x.rep_for(j);
    let yr = y.rep_for(j);
    let c = add(&scale(&xr, &dot(&yr, j.coords())), &scale(&yr, &-dot(&xr, j.coords())));
    Ok(SegmentDescriptor {
        x: x.clone(),
        y: y.clone(),
        crossing: ProjectivePoint::new(c).expect("distinct points"),
        xr,
        yr,
    })
}

/// Strict interior membership in the principal triangle abc.
pub fn principal_triangle_contains(
    j: &LineRP2,
    tri: [&ProjectivePoint; 3],
    p: &ProjectivePoint,
) -> bool {
    let [a, b, c] = tri.map(|q| q.rep_for(j));
    let pr = p.rep_for(j);
    let d = sign(&det3(&a, &b, &c));
    if d == 0 {
        return false;
    }
    [det3(&pr, &b, &c), det3(&a, &pr, &c), det3(&a, &b, &pr)]
        .iter()
        .all(|x| sign(x) == d)
}

/// Intersection of closed principal regions.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Intersection {
    Empty,
    Point { at: ProjectivePoint },
    Segment { ends: [ProjectivePoint; 2] },
    Polygon { vertices: Vec<ProjectivePoint> },
}

impl Intersection {
    pub fn is_two_dimensional(&self) -> bool {
        matches!(self, Intersection::Polygon { .. })
    }

    /// Vertices as J-positive integer vectors.
    pub fn vertex_reps(&self, j: &LineRP2) -> Vec<V3> {
        let pts: Vec<&ProjectivePoint> = match self {
            Intersection::Empty => vec![],
            Intersection::Point { at } => vec![at],
            Intersection::Segment { ends } => ends.iter().collect(),
            Intersection::Polygon { vertices } => vertices.iter().collect(),
        };
        pts.into_iter().map(|p| p.rep_for(j)).collect()
    }

    /// Short form naming input points by label: "6", "[34]", "empty".
    pub fn describe(&self, points: &[Labeled]) -> String {
        let name = |p: &ProjectivePoint| {
            points
                .iter()
                .find(|(_, q)| q == p)
                .map(|(l, _)| l.to_string())
                .unwrap_or_else(|| p.to_string())
        };
        match self {
            Intersection::Empty => "empty".into(),
            Intersection::Point { at } => name(at),
            Intersection::Segment { ends } => {
                let mut n = [name(&ends[0]), name(&ends[1])];
                n.sort();
                format!("[{}{}]", n[0], n[1])
            }
            Intersection::Polygon { vertices } => format!("polygon with {} vertices", vertices.len()),
        }
    }
}

/// Counter-clockwise J-positive vertices of a principal triangle.
fn ccw_triangle(tri: [&Labeled; 3], j: &LineRP2) -> Result<Vec<V3>, GeometryError> {
    let mut v = vec![rep_checked(tri[0], j)?, rep_checked(tri[1], j)?, rep_checked(tri[2], j)?];
    match sign(&det3(&v[0], &v[1], &v[2])) {
        0 => Err(GeometryError::Collinear(super::fmt_labels(&[tri[0].0, tri[1].0, tri[2].0]))),
        s => {
            if s < 0 {
                v.swap(1, 2);
            }
            Ok(v)
        }
    }
}

/// Keeps the part of `poly` where `h` is nonnegative.
pub(crate) fn clip(poly: &[V3], h: &V3) -> Vec<V3> {
    let mut out: Vec<V3> = Vec::new();
    let n = poly.len();
    for i in 0..n {
        let p = &poly[i];
        let q = &poly[(i + 1) % n];
        let fp = dot(h, p);
        let fq = dot(h, q);
        if !fp.is_negative() {
            out.push(p.clone());
        }
        if (fp.is_positive() && fq.is_negative()) || (fp.is_negative() && fq.is_positive()) {
            out.push(primitive(&add(&scale(q, &fp.abs()), &scale(p, &fq.abs()))));
        }
    }
    let mut dedup: Vec<V3> = Vec::new();
    for p in out {
        let p = primitive(&p);
        if dedup.last() != Some(&p) {
            dedup.push(p);
        }
    }
    if dedup.len() > 1 && dedup.first() == dedup.last() {
        dedup.pop();
    }
    dedup
}

/// Half-planes bounding a counter-clockwise triangle.
pub(crate) fn half_planes(tri: &[V3]) -> [V3; 3] {
    [cross(&tri[0], &tri[1]), cross(&tri[1], &tri[2]), cross(&tri[2], &tri[0])]
}

pub(crate) fn classify_vertices(vs: Vec<V3>) -> Intersection {
    let mut uniq: Vec<V3> = Vec::new();
    for v in vs {
        let v = primitive(&v);
        if !uniq.contains(&v) {
            uniq.push(v);
        }
    }
    let pt = |v: &V3| ProjectivePoint::new(v.clone()).expect("nonzero vertex");
    match uniq.len() {
        0 => return Intersection::Empty,
        1 => return Intersection::Point { at: pt(&uniq[0]) },
        _ => {}
    }
    let flat = uniq[2..].iter().all(|w| det3(&uniq[0], &uniq[1], w).is_zero());
    if !flat {
        return Intersection::Polygon { vertices: uniq.iter().map(pt).collect() };
    }
    // Collinear: the extremes are the pair spanning every other point positively.
    let n = uniq.len();
    for a in 0..n {
        for b in a + 1..n {
            let w = cross(&uniq[a], &uniq[b]);
            let d = det3(&uniq[a], &uniq[b], &w);
            let inside = (0..n).all(|c| {
                let s = sign(&det3(&uniq[c], &uniq[b], &w)) * sign(&d);
                let t = sign(&det3(&uniq[a], &uniq[c], &w)) * sign(&d);
                s >= 0 && t >= 0
            });
            if inside {
                return Intersection::Segment { ends: [pt(&uniq[a]), pt(&uniq[b])] };
            }
        }
    }
    unreachable!("collinear vertex set has extremes")
}

/// Intersection of closed principal triangles, each given by three labelled points.
pub fn intersect_triangles(
    tris: &[[&Labeled; 3]],
    j: &LineRP2,
) -> Result<Intersection, GeometryError> {
    let Some(first) = tris.first() else {
        return Err(GeometryError::TooFew { need: 1, got: 0 });
    };
    let mut poly = ccw_triangle(*first, j)?;
    for t in &tris[1..] {
        let tri = ccw_triangle(*t, j)?;
        for h in half_planes(&tri) {
            poly = clip(&poly, &h);
            if poly.is_empty() {
                return Ok(Intersection::Empty);
            }
        }
    }
    Ok(classify_vertices(poly))
}
