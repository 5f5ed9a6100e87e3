//! The bi-variant operations: product, the two pushforwards, the two
//! pullbacks, Chern class operators and units.
//!
//! [`closed`] works on canonical generators and is what callers use;
//! [`oracle`] builds the same operations on representatives via fiber
//! products and exists to certify the closed forms.

pub mod closed;
pub mod normal_form;
pub mod oracle;
pub mod vector;

pub use closed::{
    chern_class, chern_left, chern_right, product, proper_pullback, proper_pushforward,
    smooth_pullback, smooth_pushforward, unit,
};
pub use normal_form::{decompose_normal_form, representative_source, Expr};
pub use vector::{tensor_product, whitney_product, VbElement, VbProduct};

#[cfg(test)]
mod tests;
