use num_bigint::BigInt;
use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use super::lemma3::{classify_lemma3_case, Lemma3Class, FIVE_TRIANGLES};
use super::point::{add, cross, det3, dot, primitive, scale, sign, LineRP2, ProjectivePoint, V3};
use super::region::{clip, intersect_triangles, Intersection};
use super::sweep::{ensure_general_position, hull_order};
use super::{GeometryError, Label, Labeled};

const RADIUS: f64 = 1000.0;
const MAX_ATTEMPTS: usize = 2000;

fn rng_for(stream: u64, seed: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(stream);
    rng
}

/// Points near a circle, counter-clockwise in the given label order, in
/// convex position.
fn on_circle(rng: &mut ChaCha8Rng, order: &[Label], j: &LineRP2) -> Option<Vec<Labeled>> {
    let mut angles: Vec<f64> = (0..order.len()).map(|_| rng.gen_range(0.0..std::f64::consts::TAU)).collect();
    angles.sort_by(f64::total_cmp);
    let pts = order
        .iter()
        .zip(angles)
        .map(|(&l, a)| {
            let r = RADIUS * rng.gen_range(0.8..1.2);
            (l, ProjectivePoint::affine((r * a.cos()).round() as i64, (r * a.sin()).round() as i64))
        })
        .collect::<Vec<_>>();
    let hull = hull_order(&pts, j).ok()?;
    let k = order.iter().position(|l| Some(l) == hull.first())?;
    let mut expected = order.to_vec();
    expected.rotate_left(k);
    (hull == expected).then_some(pts)
}

/// A random point strictly inside a two-dimensional region.
fn interior(rng: &mut ChaCha8Rng, region: &Intersection, j: &LineRP2) -> Option<ProjectivePoint> {
    if !region.is_two_dimensional() {
        return None;
    }
    let reps = region.vertex_reps(j);
    let p = reps.iter().fold([BigInt::zero(), BigInt::zero(), BigInt::zero()], |acc, v| {
        add(&acc, &scale(v, &BigInt::from(rng.gen_range(1..=100u32))))
    });
    ProjectivePoint::new(primitive(&p))
}

fn get<'a>(pts: &'a [Labeled], l: Label) -> &'a Labeled {
    pts.iter().find(|p| p.0 == l).expect("label present")
}

fn region_of(pts: &[Labeled], tris: &[[Label; 3]], j: &LineRP2) -> Result<Intersection, GeometryError> {
    let t: Vec<[&Labeled; 3]> = tris.iter().map(|t| t.map(|l| get(pts, l))).collect();
    intersect_triangles(&t, j)
}

/// The part of triangle `t` on the side of line `line` containing `side`.
fn clipped_triangle(
    pts: &[Labeled],
    t: [Label; 3],
    line: [Label; 2],
    side: Label,
    j: &LineRP2,
) -> Intersection {
    let r = |l: Label| get(pts, l).1.rep_for(j);
    let mut tri = vec![r(t[0]), r(t[1]), r(t[2])];
    if sign(&det3(&tri[0], &tri[1], &tri[2])) < 0 {
        tri.swap(1, 2);
    }
    let mut h = cross(&r(line[0]), &r(line[1]));
    if sign(&dot(&h, &r(side))) < 0 {
        h = super::point::neg(&h);
    }
    super::region::classify_vertices(clip(&tri, &h))
}

fn place_one(rng: &mut ChaCha8Rng, pts: &mut Vec<Labeled>, j: &LineRP2) -> bool {
    let Ok(five) = region_of(pts, &FIVE_TRIANGLES, j) else {
        return false;
    };
    match interior(rng, &five, j) {
        Some(p) => {
            pts.push((1, p));
            true
        }
        None => false,
    }
}

fn place_anywhere(rng: &mut ChaCha8Rng, pts: &mut Vec<Labeled>, l: Label) {
    let x = rng.gen_range(-1500..=1500);
    let y = rng.gen_range(-1500..=1500);
    pts.push((l, ProjectivePoint::affine(x, y)));
}

fn finish(mut pts: Vec<Labeled>, j: &LineRP2) -> Option<Vec<Labeled>> {
    pts.sort_by_key(|p| p.0);
    ensure_general_position(&pts, j).ok()?;
    Some(pts)
}

fn try_case(rng: &mut ChaCha8Rng, case: u8, j: &LineRP2) -> Option<Vec<Labeled>> {
    let mut pts = match case {
        1 => on_circle(rng, &[2, 4, 6, 3, 5], j)?,
        2 => {
            let mut p = on_circle(rng, &[3, 5, 4, 6], j)?;
            let t4 = region_of(&p, &[[3, 4, 5], [4, 5, 6]], j).ok()?;
            p.push((2, interior(rng, &t4, j)?));
            p
        }
        3 => {
            let mut p = on_circle(rng, &[2, 6, 3], j)?;
            let tri = region_of(&p, &[[2, 3, 6]], j).ok()?;
            p.push((4, interior(rng, &tri, j)?));
            let t3 = clipped_triangle(&p, [2, 3, 4], [4, 6], 3, j);
            p.push((5, interior(rng, &t3, j)?));
            p
        }
        _ => return None,
    };
    if !place_one(rng, &mut pts, j) {
        return None;
    }
    finish(pts, j)
}

/// A configuration of the given case satisfying the five-jump hypothesis,
/// with J the line at infinity.
pub fn sample_configuration(case: u8, seed: u64) -> Result<Vec<Labeled>, GeometryError> {
    let j = LineRP2::infinity();
    let mut rng = rng_for(u64::from(case), seed);
    for _ in 0..MAX_ATTEMPTS {
        let Some(pts) = try_case(&mut rng, case, &j) else { continue };
        let class = classify_lemma3_case(&pts, &j);
        let ok = match (case, &class) {
            (1, Ok(Lemma3Class::Case1 { .. })) => true,
            (2, Ok(Lemma3Class::Case2 { shift: 0, region: Some(4), .. })) => true,
            (3, Ok(Lemma3Class::Case3 { shift: 0, region: Some(3), .. })) => true,
            _ => false,
        };
        if ok {
            return Ok(pts);
        }
    }
    Err(GeometryError::SamplingFailure { what: format!("case {case}"), attempts: MAX_ATTEMPTS })
}

/// Orderings ruled out by the case analysis.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Excluded {
    /// Five points in convex position with this counter-clockwise order.
    ConvexOrder { order: [Label; 5] },
    /// 2 inside the quadrangle with this counter-clockwise order; `region`
    /// uses the triangle split of the ordering (0: anywhere inside).
    Quadrangle { ordering: [Label; 4], region: u8 },
    /// Two points inside the triangle with this counter-clockwise order.
    Triangle { ordering: [Label; 3], interior: [Label; 2], region: u8 },
}

pub const EXCLUDED_ORDERINGS: [Excluded; 22] = [
    Excluded::ConvexOrder { order: [2, 3, 6, 5, 4] },
    Excluded::ConvexOrder { order: [2, 3, 5, 6, 4] },
    Excluded::ConvexOrder { order: [2, 3, 6, 4, 5] },
    Excluded::ConvexOrder { order: [2, 3, 5, 4, 6] },
    Excluded::ConvexOrder { order: [2, 3, 4, 6, 5] },
    Excluded::ConvexOrder { order: [2, 3, 4, 5, 6] },
    Excluded::ConvexOrder { order: [2, 5, 3, 6, 4] },
    Excluded::Quadrangle { ordering: [3, 4, 5, 6], region: 0 },
    Excluded::Quadrangle { ordering: [3, 5, 4, 6], region: 1 },
    Excluded::Quadrangle { ordering: [3, 5, 4, 6], region: 2 },
    Excluded::Quadrangle { ordering: [3, 5, 4, 6], region: 3 },
    Excluded::Quadrangle { ordering: [3, 6, 4, 5], region: 1 },
    Excluded::Quadrangle { ordering: [3, 6, 4, 5], region: 2 },
    Excluded::Quadrangle { ordering: [3, 6, 4, 5], region: 3 },
    Excluded::Quadrangle { ordering: [3, 6, 4, 5], region: 4 },
    Excluded::Triangle { ordering: [2, 3, 5], interior: [4, 6], region: 0 },
    Excluded::Triangle { ordering: [2, 3, 6], interior: [4, 5], region: 3 },
    Excluded::Triangle { ordering: [2, 6, 3], interior: [4, 5], region: 1 },
    Excluded::Triangle { ordering: [2, 6, 3], interior: [4, 5], region: 2 },
    Excluded::Triangle { ordering: [2, 6, 3], interior: [4, 5], region: 4 },
    Excluded::Triangle { ordering: [2, 6, 3], interior: [4, 5], region: 5 },
    Excluded::Triangle { ordering: [2, 6, 3], interior: [4, 5], region: 6 },
];

fn quadrangle_region(ordering: [Label; 4], region: u8) -> Option<[[Label; 3]; 2]> {
    let split = match ordering {
        [3, 5, 4, 6] => [[[3, 4, 5], [3, 5, 6]], [[3, 5, 6], [3, 4, 6]], [[3, 4, 6], [4, 5, 6]], [[3, 4, 5], [4, 5, 6]]],
        [3, 6, 4, 5] => [[[3, 4, 6], [3, 5, 6]], [[3, 5, 6], [3, 4, 5]], [[3, 4, 5], [4, 5, 6]], [[3, 4, 6], [4, 5, 6]]],
        _ => return None,
    };
    split.get(usize::from(region).checked_sub(1)?).copied()
}

fn case3_split(region: u8) -> Option<([Label; 3], [Label; 2], Label)> {
    Some(match region {
        1 => ([3, 4, 6], [4, 2], 6),
        2 => ([3, 4, 6], [4, 2], 3),
        3 => ([2, 3, 4], [4, 6], 3),
        4 => ([2, 3, 4], [4, 6], 2),
        5 => ([2, 4, 6], [4, 3], 2),
        6 => ([2, 4, 6], [4, 3], 6),
        _ => return None,
    })
}

fn try_excluded(rng: &mut ChaCha8Rng, ex: &Excluded, j: &LineRP2) -> Option<Vec<Labeled>> {
    let mut pts = match ex {
        Excluded::ConvexOrder { order } => on_circle(rng, order, j)?,
        Excluded::Quadrangle { ordering, region } => {
            let mut p = on_circle(rng, ordering, j)?;
            let area = match quadrangle_region(*ordering, *region) {
                Some(t) => region_of(&p, &t, j).ok()?,
                None => {
                    let [a, b, c, d] = *ordering;
                    let halves = [[a, b, c], [a, c, d]];
                    region_of(&p, &[halves[rng.gen_range(0..2)]], j).ok()?
                }
            };
            p.push((2, interior(rng, &area, j)?));
            p
        }
        Excluded::Triangle { ordering, interior: inner, region } => {
            let mut p = on_circle(rng, ordering, j)?;
            let tri = region_of(&p, &[*ordering], j).ok()?;
            p.push((inner[0], interior(rng, &tri, j)?));
            let area = match case3_split(*region) {
                Some((t, line, side)) => clipped_triangle(&p, t, line, side, j),
                None => tri,
            };
            p.push((inner[1], interior(rng, &area, j)?));
            p
        }
    };
    if !place_one(rng, &mut pts, j) {
        place_anywhere(rng, &mut pts, 1);
    }
    finish(pts, j)
}

/// A configuration realizing an excluded ordering, in general position,
/// with 1 inside the five principal triangles whenever they overlap.
pub fn sample_excluded(ex: &Excluded, seed: u64) -> Result<Vec<Labeled>, GeometryError> {
    let j = LineRP2::infinity();
    let stream = 100 + EXCLUDED_ORDERINGS.iter().position(|e| e == ex).unwrap_or(0) as u64;
    let mut rng = rng_for(stream, seed);
    for _ in 0..MAX_ATTEMPTS {
        if let Some(p) = try_excluded(&mut rng, ex, &j) {
            return Ok(p);
        }
    }
    Err(GeometryError::SamplingFailure { what: format!("{ex:?}"), attempts: MAX_ATTEMPTS })
}

/// A random integer projectivity with nonzero determinant.
pub fn random_projectivity(seed: u64) -> [V3; 3] {
    let mut rng = rng_for(7, seed);
    loop {
        let m: [V3; 3] = std::array::from_fn(|_| {
            std::array::from_fn(|_| BigInt::from(rng.gen_range(-9i64..=9)))
        });
        if !det3(&m[0], &m[1], &m[2]).is_zero() {
            return m;
        }
    }
}
