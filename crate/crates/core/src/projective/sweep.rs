use std::cmp::Ordering;

use num_traits::Zero;
use serde::Serialize;

use super::point::{det3, dot, neg, scale, sign, sub, LineRP2, V3};
use super::region::principal_triangle_contains;
use super::{fmt_labels, GeometryError, Label, Labeled};
use crate::Sign;

/// A full turn of the pencil of lines through a base point.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Sweep {
    pub order: Vec<Label>,
    /// `jumps[i]` flags the step from `order[i]` to `order[i + 1]` (cyclically).
    pub jumps: Vec<bool>,
}

impl Sweep {
    pub fn jump_count(&self) -> usize {
        self.jumps.iter().filter(|&&b| b).count()
    }

    /// The order rotated to start at `label`.
    pub fn starting_at(&self, label: Label) -> Option<Sweep> {
        let k = self.order.iter().position(|&l| l == label)?;
        let mut order = self.order.clone();
        let mut jumps = self.jumps.clone();
        order.rotate_left(k);
        jumps.rotate_left(k);
        Some(Sweep { order, jumps })
    }
}

fn check_distinct(points: &[&Labeled]) -> Result<(), GeometryError> {
    for (i, a) in points.iter().enumerate() {
        for b in &points[i + 1..] {
            if a.1 == b.1 {
                return Err(GeometryError::Coincident(fmt_labels(&[a.0, b.0])));
            }
        }
    }
    Ok(())
}

/// The rotating line through `base` meets the targets in angular order; a
/// step is a J-jump when the swept double sector contains the segment
/// between the two targets that crosses J.
pub fn line_pencil_sweep(
    base: &Labeled,
    targets: &[Labeled],
    direction: Sign,
    j: &LineRP2,
) -> Result<Sweep, GeometryError> {
    if targets.is_empty() {
        return Err(GeometryError::TooFew { need: 1, got: 0 });
    }
    let mut all: Vec<&Labeled> = vec![base];
    all.extend(targets.iter());
    for p in &all {
        if p.1.on_line(j) {
            return Err(GeometryError::OnJ(p.0.to_string()));
        }
    }
    check_distinct(&all)?;
    let b = base.1.rep_for(j);
    let lb = dot(&b, j.coords());
    // Direction of line (base, y) as a point of J.
    let dirs: Vec<V3> = targets
        .iter()
        .map(|(_, y)| {
            let yr = y.rep_for(j);
            sub(&scale(&yr, &lb), &scale(&b, &dot(&yr, j.coords())))
        })
        .collect();
    for i in 0..targets.len() {
        for k in i + 1..targets.len() {
            if det3(&b, &dirs[i], &dirs[k]).is_zero() {
                return Err(GeometryError::Collinear(fmt_labels(&[
                    base.0,
                    targets[i].0,
                    targets[k].0,
                ])));
            }
        }
    }
    // Fold every direction into the open half-turn after the first one.
    let reference = &dirs[0];
    let folded: Vec<V3> = dirs
        .iter()
        .map(|d| if sign(&det3(&b, reference, d)) < 0 { neg(d) } else { d.clone() })
        .collect();
    let mut idx: Vec<usize> = (0..targets.len()).collect();
    idx.sort_by(|&x, &y| {
        if x == y {
            return Ordering::Equal;
        }
        if x == 0 {
            return Ordering::Less;
        }
        if y == 0 {
            return Ordering::Greater;
        }
        if sign(&det3(&b, &folded[x], &folded[y])) > 0 {
            Ordering::Less
        } else {
            Ordering::Greater
        }
    });
    if direction == Sign::Minus {
        idx[1..].reverse();
    }
    let n = idx.len();
    let jumps = (0..n)
        .map(|k| {
            let y0 = &targets[idx[k]].1;
            let y1 = &targets[idx[(k + 1) % n]].1;
            if n == 1 {
                return true;
            }
            let o = sign(&det3(&b, &y0.rep_for(j), &y1.rep_for(j)));
            match direction {
                Sign::Plus => o < 0,
                Sign::Minus => o > 0,
            }
        })
        .collect();
    Ok(Sweep { order: idx.iter().map(|&i| targets[i].0).collect(), jumps })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "SCREAMING_SNAKE_CASE")]
pub enum ConvexPosition {
    Convex { order: Vec<Label> },
    NotConvex { point: Label, triangle: [Label; 3] },
}

fn check_general(points: &[Labeled], j: &LineRP2) -> Result<Vec<V3>, GeometryError> {
    for p in points {
        if p.1.on_line(j) {
            return Err(GeometryError::OnJ(p.0.to_string()));
        }
    }
    check_distinct(&points.iter().collect::<Vec<_>>())?;
    let reps: Vec<V3> = points.iter().map(|p| p.1.rep_for(j)).collect();
    let n = reps.len();
    for a in 0..n {
        for b in a + 1..n {
            for c in b + 1..n {
                if det3(&reps[a], &reps[b], &reps[c]).is_zero() {
                    return Err(GeometryError::Collinear(fmt_labels(&[
                        points[a].0,
                        points[b].0,
                        points[c].0,
                    ])));
                }
            }
        }
    }
    Ok(reps)
}

/// Counter-clockwise hull vertices in the chart complementary to J,
/// starting from the smallest label.
pub fn hull_order(points: &[Labeled], j: &LineRP2) -> Result<Vec<Label>, GeometryError> {
    if points.len() < 3 {
        return Err(GeometryError::TooFew { need: 3, got: points.len() });
    }
    let reps = check_general(points, j)?;
    let n = reps.len();
    let next = |a: usize| {
        (0..n).find(|&b| {
            b != a && (0..n).all(|c| c == a || c == b || sign(&det3(&reps[a], &reps[b], &reps[c])) > 0)
        })
    };
    let first = (0..n).find(|&a| next(a).is_some()).expect("hull has vertices");
    let mut cycle = vec![first];
    loop {
        let nx = next(*cycle.last().expect("nonempty")).expect("hull successor");
        if nx == first {
            break;
        }
        cycle.push(nx);
    }
    let mut labels: Vec<Label> = cycle.iter().map(|&i| points[i].0).collect();
    let k = labels
        .iter()
        .enumerate()
        .min_by_key(|(_, &l)| l)
        .map(|(k, _)| k)
        .unwrap_or(0);
    labels.rotate_left(k);
    Ok(labels)
}

pub fn convex_position(points: &[Labeled], j: &LineRP2) -> Result<ConvexPosition, GeometryError> {
    let order = hull_order(points, j)?;
    if order.len() == points.len() {
        return Ok(ConvexPosition::Convex { order });
    }
    let n = points.len();
    for p in 0..n {
        for a in 0..n {
            for b in a + 1..n {
                for c in b + 1..n {
                    if [a, b, c].contains(&p) {
                        continue;
                    }
                    let tri = [&points[a].1, &points[b].1, &points[c].1];
                    if principal_triangle_contains(j, tri, &points[p].1) {
                        return Ok(ConvexPosition::NotConvex {
                            point: points[p].0,
                            triangle: [points[a].0, points[b].0, points[c].0],
                        });
                    }
                }
            }
        }
    }
    unreachable!("a non-hull point lies in a triangle of hull vertices")
}

pub(crate) fn ensure_general_position(points: &[Labeled], j: &LineRP2) -> Result<(), GeometryError> {
    check_general(points, j).map(|_| ())
}
