//! Convex geometries and antimatroids, the removal processes that generate
//! them, and the interval partition of the Boolean lattice they induce.
//!
//! Sets are bitmasks over ground sets of at most 30 elements; operations that
//! enumerate `2^E` are capped lower, per operation.

pub mod error;
pub mod fixtures;
pub mod geometry;
pub mod identity;
pub mod lattice;
pub mod pruning;
pub mod random;
pub mod report;
pub mod sat;
pub mod sets;

pub use error::{Error, Result};
pub use geometry::{Antimatroid, ConvexGeometry};
pub use identity::{Distribution, ExactWeights, WeightVector};
pub use lattice::ClosedSetLattice;
pub use pruning::{Graph, Hypergraph, RemovalRule};
pub use report::{Axiom, AxiomReport, Violation, Witness};
pub use sat::{CnfFormula, PartialAssignment, Value};
pub use sets::{ElementSet, GroundSet, RootedSet, SetFamily, SimpleWord};
