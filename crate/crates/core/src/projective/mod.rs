//! Exact projective plane geometry over the integers.
//!
//! Empty ovals are modelled by labelled points and the pseudo-line by a
//! distinguished line `J` (the line at infinity by default). All predicates
//! are exact.

mod conic;
mod cremona;
mod lemma3;
mod point;
mod poly;
mod region;
mod sample;
mod sweep;

use thiserror::Error;

pub use conic::{conic_pencil_events, conic_through_5, pencil_generators, ConicQ, EventKind, PencilEvent};
pub use cremona::Cremona;
pub use lemma3::{
    classify_lemma3_case, match_sequence, reducible_cubic_sequence, CubicSequence, Lemma3Class,
    Contradiction, Orientation, ReducibleCubic, SequenceMatch, Witness, EXPECTED_SEQUENCES,
    FIVE_TRIANGLES,
};
pub use point::{
    add, cross, det3, dot, neg, orient, orient_j, primitive, scale, sign, sub, v3, LineRP2,
    ProjectivePoint, V3,
};
pub use poly::Poly;
pub use region::{
    intersect_triangles, principal_segment, principal_triangle_contains, Intersection,
    SegmentDescriptor,
};
pub use sample::{
    random_projectivity, sample_configuration, sample_excluded, Excluded, EXCLUDED_ORDERINGS,
};
pub use sweep::{convex_position, hull_order, line_pencil_sweep, ConvexPosition, Sweep};

/// Point labels; configurations use 1..=6.
pub type Label = u32;

/// A labelled point.
pub type Labeled = (Label, ProjectivePoint);

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum GeometryError {
    #[error("point {0} lies on J")]
    OnJ(String),
    #[error("points {0} coincide")]
    Coincident(String),
    #[error("points {0} are collinear")]
    Collinear(String),
    #[error("need at least {need} points, got {got}")]
    TooFew { need: usize, got: usize },
    #[error("the conic through the points is not unique")]
    ConicNotUnique,
    #[error("pencil events collide: {0} and {1}")]
    EventCollision(String, String),
    #[error("point {0} lies on a base line of the Cremona map")]
    OnBaseLine(String),
    #[error("singular base triangle")]
    SingularBase,
    #[error("hypothesis violated: sweep order {order:?} with jumps {jumps:?}")]
    HypothesisViolation { order: Vec<Label>, jumps: Vec<bool> },
    #[error("configuration excluded: {0}")]
    Excluded(String),
    #[error("pencil members are not all crunodal at the node")]
    NotCrunodal,
    #[error("configuration has no labels 1..6")]
    BadLabels,
    #[error("sampling failed for {what} after {attempts} attempts")]
    SamplingFailure { what: String, attempts: usize },
}

pub(crate) fn fmt_labels(labels: &[Label]) -> String {
    labels.iter().map(|l| l.to_string()).collect::<Vec<_>>().join(",")
}
