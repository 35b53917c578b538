use thiserror::Error;

use crate::sets::ElementSet;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("malformed JSON: {0}")]
    Json(#[from] serde_json::Error),

    #[error("duplicate label {0:?} in ground set")]
    DuplicateLabel(String),

    #[error("empty label in ground set")]
    EmptyLabel,

    #[error("label not in ground: {0:?}")]
    UnknownLabel(String),

    #[error("element index {index} out of range for a ground set of size {size}")]
    IndexOutOfRange { index: usize, size: usize },

    #[error("ground set of size {size} exceeds the limit of {limit} for this operation")]
    GroundTooLarge { size: usize, limit: usize },

    #[error("root {root:?} is not a member of its rooted set")]
    RootNotInSet { root: String },

    #[error("word repeats letter {0:?}")]
    NonSimpleWord(String),

    #[error("set {0:?} is not a member of the family")]
    NotInFamily(ElementSet),

    #[error("family is not a convex geometry: {0}")]
    NotAConvexGeometry(String),

    #[error("element {0:?} has no path inside the ground set")]
    PathlessElement(String),

    #[error("no interval [ex(A), A] covers {0:?}")]
    NoCoveringInterval(ElementSet),

    #[error("{set:?} is covered by the intervals of both {first:?} and {second:?}")]
    MultipleCoveringIntervals {
        set: ElementSet,
        first: ElementSet,
        second: ElementSet,
    },

    #[error("function is not constant on closure classes: f({set:?}) != f({closure:?})")]
    NotClosureInvariant { set: ElementSet, closure: ElementSet },

    #[error("removal process has no unique minimal reachable superset: {first:?} and {second:?}")]
    NonUniqueMinimum { first: ElementSet, second: ElementSet },

    #[error("state space exceeds the budget of {0} states")]
    StateSpaceTooLarge(usize),

    #[error("operation would need {needed} evaluations, over the budget of {budget}")]
    BudgetExceeded { needed: u128, budget: u128 },

    #[error("family is not a lattice under inclusion: {0}")]
    NotALattice(String),

    #[error("internal consistency violated: {0}")]
    Inconsistent(String),

    #[error("invalid weight: {0}")]
    InvalidWeight(String),

    #[error("parse error on line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("clause {clause}: {message}")]
    InvalidClause { clause: usize, message: String },

    #[error("unrecognized assignment symbol {0:?}")]
    InvalidSymbol(String),

    #[error("assignment has {got} entries, formula has {expected} variables")]
    AssignmentLength { expected: usize, got: usize },

    #[error("partial assignment is invalid: clause {0} is violated")]
    InvalidAssignment(usize),

    #[error("the geometries of the two assignments do not intersect")]
    EmptyIntersection,

    #[error("the intersection has several maximal assignments")]
    AmbiguousIntersection,
}
