use std::fmt;

use crate::sets::{ElementSet, GroundSet, SimpleWord};

/// The law a [`Violation`] refers to.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Axiom {
    /// `E` is closed.
    N1,
    /// Closed sets are closed under intersection.
    N2,
    /// Every closed set other than `E` extends by one element to a closed set.
    N3,
    /// Prefix closure of a word language.
    L1,
    /// Exchange.
    L2,
    /// Persistence of available letters.
    L3,
    /// A family of feasible sets must equal the supports of its word language.
    Supports,
    /// Removability persists through later stages.
    Pruning,
    /// Every subset lies in exactly one interval `[ex(A), A]`.
    IntervalPartition,
    MeetDistributive,
    Distributive,
    KDistributive(usize),
}

impl fmt::Display for Axiom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Axiom::N1 => write!(f, "N1"),
            Axiom::N2 => write!(f, "N2"),
            Axiom::N3 => write!(f, "N3"),
            Axiom::L1 => write!(f, "L1"),
            Axiom::L2 => write!(f, "L2"),
            Axiom::L3 => write!(f, "L3"),
            Axiom::Supports => write!(f, "supports"),
            Axiom::Pruning => write!(f, "pruning"),
            Axiom::IntervalPartition => write!(f, "interval-partition"),
            Axiom::MeetDistributive => write!(f, "meet-distributive"),
            Axiom::Distributive => write!(f, "distributive"),
            Axiom::KDistributive(k) => write!(f, "{k}-distributive"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Witness {
    Sets(Vec<ElementSet>),
    Words(Vec<SimpleWord>),
    /// `element` was removable in `state` but not in the later reachable state `later`.
    Removal {
        state: ElementSet,
        later: ElementSet,
        element: usize,
    },
    /// `set` lies in `count` intervals instead of exactly one.
    Coverage { set: ElementSet, count: usize },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Violation {
    pub axiom: Axiom,
    pub witness: Witness,
}

impl Violation {
    pub fn describe(&self, ground: &GroundSet) -> String {
        let sets = |v: &[ElementSet]| {
            v.iter()
                .map(|s| ground.format_set(*s))
                .collect::<Vec<_>>()
                .join(" ")
        };
        let body = match &self.witness {
            Witness::Sets(v) => sets(v),
            Witness::Words(w) => w
                .iter()
                .map(|w| format!("[{}]", ground.format_word(w)))
                .collect::<Vec<_>>()
                .join(" "),
            Witness::Removal {
                state,
                later,
                element,
            } => format!(
                "{} removable in {} but not in {}",
                ground.label(*element),
                ground.format_set(*state),
                ground.format_set(*later)
            ),
            Witness::Coverage { set, count } => {
                format!("{} lies in {count} intervals", ground.format_set(*set))
            }
        };
        format!("{} violated: {body}", self.axiom)
    }
}

/// Outcome of an axiom or property check; holds iff there are no violations.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct AxiomReport {
    violations: Vec<Violation>,
}

impl AxiomReport {
    pub fn new(violations: Vec<Violation>) -> Self {
        AxiomReport { violations }
    }

    pub fn holds(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn violations(&self) -> &[Violation] {
        &self.violations
    }

    pub fn violates(&self, axiom: Axiom) -> bool {
        self.violations.iter().any(|v| v.axiom == axiom)
    }

    pub fn witness(&self, axiom: Axiom) -> Option<&Witness> {
        self.violations
            .iter()
            .find(|v| v.axiom == axiom)
            .map(|v| &v.witness)
    }

    pub(crate) fn push(&mut self, axiom: Axiom, witness: Witness) {
        self.violations.push(Violation { axiom, witness });
    }

    pub fn describe(&self, ground: &GroundSet) -> String {
        self.violations
            .iter()
            .map(|v| v.describe(ground))
            .collect::<Vec<_>>()
            .join("\n")
    }
}
