//! The finite model: spaces of points with dimensions, maps between them,
//! line and vector bundles, fiber products and disjoint unions.

mod bundle;
mod label;
mod map;
mod point;
mod space;

pub use bundle::{LineBundle, VBundle};
pub use label::{Label, Labels};
pub use map::{compose, copair, fiber_product, inl, inr, FiberSquare, PointMap};
pub use point::Point;
pub use space::{disjoint_union, FiniteSpace};

#[cfg(test)]
mod tests;
