//! Intersection budgets of auxiliary curves against a degree-9 curve with
//! the nest `<J + 1<beta + 1<gamma>>>`.
//!
//! An auxiliary curve of degree d is described by the cyclic list of empty
//! ovals it passes through and, for each arc between consecutive visits,
//! how many times it crosses J. The minimal forced intersections with every
//! component are tallied against the bound 9d.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Regions of the projective plane cut out by the nest ovals O1 and O2.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Region {
    /// Outside O1; J lies here.
    Exterior,
    /// Inside O1 and outside O2.
    Median,
    /// Inside O2.
    Inner,
}

impl Region {
    /// Position along the chain Exterior - Median - Inner.
    pub fn depth(self) -> u32 {
        match self {
            Region::Exterior => 0,
            Region::Median => 1,
            Region::Inner => 2,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Role {
    Median,
    Inner,
}

impl Role {
    pub fn region(self) -> Region {
        match self {
            Role::Median => Region::Median,
            Role::Inner => Region::Inner,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Visit {
    pub oval: String,
    pub role: Role,
    /// Passage through the node of a nodal cubic; the oval then appears twice.
    #[serde(default)]
    pub node: bool,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct Arc {
    pub j_crossings: u32,
}

/// Additional intersections derived from the specific configuration.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Extra {
    pub count: u32,
    pub tag: String,
}

/// An auxiliary curve: `arcs[i]` runs from `visits[i]` to `visits[i + 1]`,
/// cyclically.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AuxCurveTrace {
    pub degree: u32,
    pub visits: Vec<Visit>,
    pub arcs: Vec<Arc>,
    #[serde(default)]
    pub extras: Vec<Extra>,
}

impl AuxCurveTrace {
    pub fn new(degree: u32, visits: Vec<Visit>, j_crossings: &[u32]) -> Self {
        let arcs = j_crossings.iter().map(|&j| Arc { j_crossings: j }).collect();
        AuxCurveTrace { degree, visits, arcs, extras: Vec::new() }
    }

    /// Same curve traversed from visit `k`.
    pub fn rotated(&self, k: usize) -> Self {
        let mut t = self.clone();
        t.visits.rotate_left(k);
        t.arcs.rotate_left(k);
        t
    }

    /// Same curve traversed backwards.
    pub fn reversed(&self) -> Self {
        let mut t = self.clone();
        t.visits.reverse();
        // Arc i joined visits i and i+1; in reverse order it joins n-1-i and n-2-i.
        let n = self.arcs.len();
        t.arcs = (0..n).map(|k| self.arcs[(2 * n - 2 - k) % n].clone()).collect();
        t
    }
}

pub fn visit(oval: &str, role: Role) -> Visit {
    Visit { oval: oval.to_string(), role, node: false }
}

pub fn nodal_visit(oval: &str, role: Role) -> Visit {
    Visit { oval: oval.to_string(), role, node: true }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum BezoutVerdict {
    Within,
    Saturated,
    Violation,
}

impl fmt::Display for BezoutVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            BezoutVerdict::Within => "WITHIN",
            BezoutVerdict::Saturated => "SATURATED",
            BezoutVerdict::Violation => "VIOLATION",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct BezoutBudget {
    pub per_oval: BTreeMap<String, u32>,
    pub o1_crossings: u32,
    pub o2_crossings: u32,
    pub j_crossings: u32,
    pub extras: u32,
    pub total: u32,
    pub bound: u32,
    pub verdict: BezoutVerdict,
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum AuditError {
    #[error("degree {0} is not 1, 2 or 3")]
    Degree(u32),
    #[error("{visits} visits but {arcs} arcs")]
    ArcCount { visits: usize, arcs: usize },
    #[error("a curve needs at least one visit")]
    Empty,
    #[error("J crossings total {total}, but a curve of degree {degree} meets J an {parity} number of times")]
    Parity { degree: u32, total: u32, parity: &'static str },
    #[error("nodal visits: {0}")]
    Node(String),
    #[error("oval {0} is given two roles")]
    RoleConflict(String),
    #[error("extra crossing {0} has no justification tag")]
    UntaggedExtra(usize),
}

/// Minimal crossings of O1, O2 on an arc between two regions with `j` J crossings.
pub fn arc_crossings(from: Region, to: Region, j: u32) -> (u32, u32) {
    if j > 0 {
        // Leave to the exterior and come back.
        let o2 = [from, to].iter().filter(|r| **r == Region::Inner).count() as u32;
        let o1 = [from, to].iter().filter(|r| **r != Region::Exterior).count() as u32;
        (o1, o2)
    } else {
        let (a, b) = (from.depth().min(to.depth()), from.depth().max(to.depth()));
        let o1 = u32::from(a == 0 && b >= 1);
        let o2 = u32::from(a <= 1 && b == 2);
        (o1, o2)
    }
}

fn validate(trace: &AuxCurveTrace) -> Result<(), AuditError> {
    if !(1..=3).contains(&trace.degree) {
        return Err(AuditError::Degree(trace.degree));
    }
    if trace.visits.is_empty() {
        return Err(AuditError::Empty);
    }
    if trace.visits.len() != trace.arcs.len() {
        return Err(AuditError::ArcCount { visits: trace.visits.len(), arcs: trace.arcs.len() });
    }
    let mut roles: BTreeMap<&str, Role> = BTreeMap::new();
    let mut nodal: BTreeMap<&str, usize> = BTreeMap::new();
    for v in &trace.visits {
        if let Some(r) = roles.insert(&v.oval, v.role) {
            if r != v.role {
                return Err(AuditError::RoleConflict(v.oval.clone()));
            }
        }
        if v.node {
            *nodal.entry(&v.oval).or_default() += 1;
        }
    }
    if !nodal.is_empty() {
        if trace.degree != 3 {
            return Err(AuditError::Node("only cubics carry a node".into()));
        }
        if nodal.len() > 1 {
            return Err(AuditError::Node("more than one nodal oval".into()));
        }
        let (oval, k) = nodal.iter().next().expect("nonempty");
        let all = trace.visits.iter().filter(|v| v.oval == *oval).count();
        if *k != 2 || all != 2 {
            return Err(AuditError::Node(format!("oval {oval} must be passed exactly twice through the node")));
        }
    }
    let total: u32 = trace.arcs.iter().map(|a| a.j_crossings).sum();
    if total % 2 != trace.degree % 2 {
        let parity = if trace.degree % 2 == 1 { "odd" } else { "even" };
        return Err(AuditError::Parity { degree: trace.degree, total, parity });
    }
    Ok(())
}

/// Minimal forced intersections with the ovals of the visits, O1, O2 and J.
pub fn tally(trace: &AuxCurveTrace) -> Result<BezoutBudget, AuditError> {
    validate(trace)?;
    let mut per_oval: BTreeMap<String, u32> = BTreeMap::new();
    for v in &trace.visits {
        *per_oval.entry(v.oval.clone()).or_default() += 2;
    }
    let n = trace.visits.len();
    let (mut o1, mut o2, mut j) = (0, 0, 0);
    for (i, arc) in trace.arcs.iter().enumerate() {
        let from = trace.visits[i].role.region();
        let to = trace.visits[(i + 1) % n].role.region();
        let (a, b) = arc_crossings(from, to, arc.j_crossings);
        o1 += a;
        o2 += b;
        j += arc.j_crossings;
    }
    Ok(budget(trace.degree, per_oval, o1, o2, j, 0))
}

fn budget(degree: u32, per_oval: BTreeMap<String, u32>, o1: u32, o2: u32, j: u32, extras: u32) -> BezoutBudget {
    let total = per_oval.values().sum::<u32>() + o1 + o2 + j + extras;
    let bound = 9 * degree;
    let verdict = match total.cmp(&bound) {
        std::cmp::Ordering::Less => BezoutVerdict::Within,
        std::cmp::Ordering::Equal => BezoutVerdict::Saturated,
        std::cmp::Ordering::Greater => BezoutVerdict::Violation,
    };
    BezoutBudget { per_oval, o1_crossings: o1, o2_crossings: o2, j_crossings: j, extras, total, bound, verdict }
}

/// The tally plus the trace's tagged extra crossings.
pub fn audit_with_threshold(trace: &AuxCurveTrace) -> Result<BezoutBudget, AuditError> {
    let base = tally(trace)?;
    let mut extras = 0;
    for (i, e) in trace.extras.iter().enumerate() {
        if e.tag.trim().is_empty() {
            return Err(AuditError::UntaggedExtra(i));
        }
        extras += e.count;
    }
    Ok(budget(trace.degree, base.per_oval, base.o1_crossings, base.o2_crossings, base.j_crossings, extras))
}

/// The nodal cubic of the five-jump configuration: node at the inner oval 1,
/// the median ovals 2..6, and three excursions across J.
pub fn five_jump_cubic() -> AuxCurveTrace {
    AuxCurveTrace::new(
        3,
        vec![
            nodal_visit("1", Role::Inner),
            visit("2", Role::Median),
            visit("3", Role::Median),
            visit("4", Role::Median),
            nodal_visit("1", Role::Inner),
            visit("5", Role::Median),
            visit("6", Role::Median),
        ],
        &[0, 1, 1, 0, 0, 1, 0],
    )
}

impl fmt::Display for BezoutBudget {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let ovals: u32 = self.per_oval.values().sum();
        write!(
            f,
            "ovals {ovals} + O1 {} + O2 {} + J {}",
            self.o1_crossings, self.o2_crossings, self.j_crossings
        )?;
        if self.extras > 0 {
            write!(f, " + extras {}", self.extras)?;
        }
        write!(f, " = {} vs bound {}: {}", self.total, self.bound, self.verdict)
    }
}
