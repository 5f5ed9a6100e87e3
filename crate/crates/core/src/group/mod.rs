//! Cobordism bicycles, their canonical forms and the groups they generate.
//!
//! Every point of a source `V` is its own component, so the sum relation
//! splits any bicycle into one-point pieces. A one-point bicycle is determined
//! up to isomorphism by `(p(v), s(v), dim v, {L_i(v)})`, which is the
//! [`CanonicalGenerator`]; group equality is then equality of coefficient maps.

mod element;
mod generator;
mod raw;

pub use element::GroupElement;
pub use generator::CanonicalGenerator;
pub use raw::{
    bicycles_isomorphic, canonicalize, canonicalize_vb, RawBicycle, RawVbBicycle,
    ISO_SEARCH_LIMIT,
};

#[cfg(test)]
mod tests;
