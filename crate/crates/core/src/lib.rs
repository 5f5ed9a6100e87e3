//! An exact, finite model of the bi-variant theory of cobordism bicycles.
//!
//! Spaces are finite sets of points with dimensions, every map is proper, and
//! a map is smooth when it lowers dimension by a constant. Line bundles take
//! values in `A = Z²`. In this model a class `[X <- V -> Y; L_1..L_r]` splits
//! into one-point pieces, so elements have a syntactic normal form and all of
//! the structure (products, pushforwards, pullbacks, Chern operators, units)
//! is computed exactly.
//!
//! - [`geometry`]: spaces, maps, bundles, fiber products.
//! - [`group`]: bicycles, canonical forms, group elements.
//! - [`ops`]: the operations, in closed form and on representatives.
//! - [`theory`]: the theory interface, the universal transformation, the
//!   oriented theory of cycles and the forget map.
//! - [`harness`]: randomized axiom checks with shrinking.

pub mod error;
pub mod geometry;
pub mod group;
pub mod harness;
pub mod ops;
pub mod theory;

#[cfg(test)]
mod test_support;

pub use error::{Error, Result};
pub use geometry::{FiniteSpace, Label, Labels, LineBundle, Point, PointMap, VBundle};
pub use group::{canonicalize, CanonicalGenerator, GroupElement, RawBicycle};
pub use theory::{BivariantTheory, CobordismBicycles};
