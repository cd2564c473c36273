use std::fmt;

use serde::Serialize;
use thiserror::Error;

use super::{Forest, Mark, Node};

/// Child indices from the top level down, in canonical order.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct OvalPath(pub Vec<usize>);

impl fmt::Display for OvalPath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|i| i.to_string()).collect();
        write!(f, "/{}", parts.join("/"))
    }
}

impl OvalPath {
    pub fn depth(&self) -> usize {
        self.0.len()
    }

    pub fn resolve<'a, M>(&self, s: &'a Forest<M>) -> Option<&'a Node<M>> {
        let (first, rest) = self.0.split_first()?;
        let mut node = s.ovals.get(*first)?;
        for &i in rest {
            node = node.children.get(i)?;
        }
        Some(node)
    }
}

/// Shape `<J? + alpha + 1<beta + 1<gamma>>>` with `gamma >= 1`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DeepNestProfile {
    pub alpha: usize,
    pub beta: usize,
    pub gamma: usize,
    pub o1: OvalPath,
    pub o2: OvalPath,
    pub nest_depth: usize,
}

/// A line through two ovals meets more components than the degree allows.
#[derive(Clone, Debug, PartialEq, Eq, Error, Serialize)]
#[error("structurally inadmissible: a line through ovals {first} and {second} meets the curve at least {forced} times, degree is {degree}")]
pub struct Inadmissible {
    pub first: OvalPath,
    pub second: OvalPath,
    pub forced: u32,
    pub degree: u32,
}

/// Nest depth required of a deep nest: k-1 for degree 2k or 2k+1.
pub fn required_depth(degree: u32) -> usize {
    (degree as usize / 2).saturating_sub(1)
}

pub fn classify_deep_nest<M: Mark>(s: &Forest<M>) -> Result<Option<DeepNestProfile>, Inadmissible> {
    line_check(s)?;
    Ok(match_nest_shape(s).filter(|p| p.nest_depth >= required_depth(s.degree)))
}

fn line_check<M: Mark>(s: &Forest<M>) -> Result<(), Inadmissible> {
    let mut paths = Vec::new();
    collect_paths(&s.ovals, &mut Vec::new(), &mut paths);
    let odd = u32::from(s.pseudo_line);
    let mut worst: Option<Inadmissible> = None;
    for (i, a) in paths.iter().enumerate() {
        for b in &paths[i..] {
            let common = a.iter().zip(b.iter()).take_while(|(x, y)| x == y).count();
            let union = (a.len() + b.len() - common) as u32;
            let forced = 2 * union + odd;
            if forced > s.degree && worst.as_ref().map_or(true, |w| forced > w.forced) {
                worst = Some(Inadmissible {
                    first: OvalPath(a.clone()),
                    second: OvalPath(b.clone()),
                    forced,
                    degree: s.degree,
                });
            }
        }
    }
    worst.map_or(Ok(()), Err)
}

fn collect_paths<M>(nodes: &[Node<M>], prefix: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
    for (i, n) in nodes.iter().enumerate() {
        prefix.push(i);
        out.push(prefix.clone());
        collect_paths(&n.children, prefix, out);
        prefix.pop();
    }
}

/// Index of the single non-empty node, provided all others are empty.
fn single_nonempty<M: Mark>(nodes: &[Node<M>]) -> Option<usize> {
    let mut found = None;
    for (i, n) in nodes.iter().enumerate() {
        if !n.is_empty() {
            if found.is_some() {
                return None;
            }
            found = Some(i);
        }
    }
    found
}

/// Matches the nest shape only, without the line check or the depth requirement.
pub fn match_nest_shape<M: Mark>(s: &Forest<M>) -> Option<DeepNestProfile> {
    let i1 = single_nonempty(&s.ovals)?;
    let o1 = &s.ovals[i1];
    let i2 = single_nonempty(&o1.children)?;
    let o2 = &o1.children[i2];
    if o2.children.iter().any(|c| !c.is_empty()) {
        return None;
    }
    Some(DeepNestProfile {
        alpha: s.ovals.len() - 1,
        beta: o1.children.len() - 1,
        gamma: o2.children.len(),
        o1: OvalPath(vec![i1]),
        o2: OvalPath(vec![i1, i2]),
        nest_depth: 3,
    })
}
