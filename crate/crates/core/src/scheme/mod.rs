//! Real and complex schemes of plane curves in Viro notation.
//!
//! A scheme is a forest of ovals (each oval lists the ovals directly inside it)
//! plus an optional pseudo-line at top level. Ovals carry a mark: `()` for real
//! schemes and [`Sign`] for complex ones. Construction always canonicalizes the
//! child order, so two schemes compare equal iff they have the same isotopy type.

mod nest;
mod parse;
mod print;

use std::fmt;

use serde::{Serialize, Serializer};

use crate::sign::Sign;

pub use nest::{
    classify_deep_nest, match_nest_shape, required_depth, DeepNestProfile, Inadmissible, OvalPath,
};
pub use parse::{parse_complex_scheme, parse_scheme, SchemeError};

/// Per-oval decoration. Real schemes use `()`, complex schemes use [`Sign`].
pub trait Mark: Copy + Ord + Eq + fmt::Debug + 'static {
    /// Marks in canonical printing order.
    fn all() -> &'static [Self];
    /// Text appended to a count, e.g. `"_+"`.
    fn suffix(self) -> &'static str;
}

impl Mark for () {
    fn all() -> &'static [()] {
        &[()]
    }
    fn suffix(self) -> &'static str {
        ""
    }
}

impl Mark for Sign {
    fn all() -> &'static [Sign] {
        &Sign::BOTH
    }
    fn suffix(self) -> &'static str {
        match self {
            Sign::Plus => "_+",
            Sign::Minus => "_-",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Node<M> {
    pub mark: M,
    children: Vec<Node<M>>,
}

impl<M: Mark> Node<M> {
    pub fn new(mark: M, children: Vec<Node<M>>) -> Self {
        Node {
            mark,
            children: canonical_order(children),
        }
    }

    pub fn empty(mark: M) -> Self {
        Node {
            mark,
            children: Vec::new(),
        }
    }

    pub fn children(&self) -> &[Node<M>] {
        &self.children
    }

    pub fn is_empty(&self) -> bool {
        self.children.is_empty()
    }

    /// Number of ovals in this subtree, including this one.
    pub fn size(&self) -> usize {
        1 + self.children.iter().map(Node::size).sum::<usize>()
    }

    /// Length of the longest chain of nested ovals starting here.
    pub fn depth(&self) -> usize {
        1 + self.children.iter().map(Node::depth).max().unwrap_or(0)
    }

    pub fn map_marks<N: Mark>(&self, f: &mut impl FnMut(M) -> N) -> Node<N> {
        Node::new(
            f(self.mark),
            self.children.iter().map(|c| c.map_marks(f)).collect(),
        )
    }
}

fn canonical_order<M: Mark>(mut nodes: Vec<Node<M>>) -> Vec<Node<M>> {
    nodes.sort_by_cached_key(|n| (!n.is_empty(), n.mark, print::node_text(n)));
    nodes
}

/// A nesting forest with degree and pseudo-line flag.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Forest<M> {
    degree: u32,
    pseudo_line: bool,
    ovals: Vec<Node<M>>,
}

pub type Oval = Node<()>;
pub type RealScheme = Forest<()>;
pub type SignedOval = Node<Sign>;
pub type ComplexScheme = Forest<Sign>;

impl<M: Mark> Forest<M> {
    /// Builds a scheme and checks pseudo-line parity and the component bound.
    pub fn new(degree: u32, pseudo_line: bool, ovals: Vec<Node<M>>) -> Result<Self, SchemeError> {
        let s = Forest {
            degree,
            pseudo_line,
            ovals: canonical_order(ovals),
        };
        s.validate()?;
        Ok(s)
    }

    fn validate(&self) -> Result<(), SchemeError> {
        if self.degree == 0 {
            return Err(SchemeError::ZeroDegree);
        }
        let odd = self.degree % 2 == 1;
        if odd != self.pseudo_line {
            return Err(SchemeError::PseudoLineParity {
                degree: self.degree,
                present: self.pseudo_line,
            });
        }
        let max = max_components(self.degree);
        let l = self.component_count() as u64;
        if l > max {
            return Err(SchemeError::TooManyComponents {
                degree: self.degree,
                components: l,
                max,
            });
        }
        Ok(())
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn has_pseudo_line(&self) -> bool {
        self.pseudo_line
    }

    pub fn ovals(&self) -> &[Node<M>] {
        &self.ovals
    }

    pub fn oval_count(&self) -> usize {
        self.ovals.iter().map(Node::size).sum()
    }

    /// L: ovals plus pseudo-line.
    pub fn component_count(&self) -> usize {
        self.oval_count() + usize::from(self.pseudo_line)
    }

    pub fn map_marks<N: Mark>(&self, mut f: impl FnMut(M) -> N) -> Forest<N> {
        Forest {
            degree: self.degree,
            pseudo_line: self.pseudo_line,
            ovals: canonical_order(self.ovals.iter().map(|o| o.map_marks(&mut f)).collect()),
        }
    }

    /// Same scheme with every mark dropped.
    pub fn real(&self) -> RealScheme {
        self.map_marks(|_| ())
    }

    /// Visits every oval with its chain of ancestors (outermost first).
    pub fn walk<'a>(&'a self, f: &mut impl FnMut(&'a Node<M>, &[&'a Node<M>])) {
        fn go<'a, M>(
            n: &'a Node<M>,
            stack: &mut Vec<&'a Node<M>>,
            f: &mut impl FnMut(&'a Node<M>, &[&'a Node<M>]),
        ) {
            f(n, stack);
            stack.push(n);
            for c in &n.children {
                go(c, stack, f);
            }
            stack.pop();
        }
        let mut stack = Vec::new();
        for o in &self.ovals {
            go(o, &mut stack, f);
        }
    }
}

impl ComplexScheme {
    /// Reverses the complex orientation of every oval.
    pub fn negated(&self) -> ComplexScheme {
        self.map_marks(|s: Sign| -s)
    }
}

/// Genus (m-1)(m-2)/2 of a smooth plane curve of degree m.
pub fn genus(degree: u32) -> u64 {
    let m = u64::from(degree);
    if m < 2 {
        0
    } else {
        (m - 1) * (m - 2) / 2
    }
}

/// Harnack bound g+1 on the number of real components.
pub fn max_components(degree: u32) -> u64 {
    genus(degree) + 1
}

pub fn is_m_curve<M: Mark>(s: &Forest<M>) -> bool {
    s.component_count() as u64 == max_components(s.degree)
}

pub fn print_scheme<M: Mark>(s: &Forest<M>) -> String {
    print::forest_text(s)
}

impl<M: Mark> fmt::Display for Forest<M> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&print::forest_text(self))
    }
}

impl<M: Mark> Serialize for Forest<M> {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&print::forest_text(self))
    }
}
