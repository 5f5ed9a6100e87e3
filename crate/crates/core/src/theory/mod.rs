//! Bi-variant theories as an interface, the universal transformation out of
//! bicycles, a quotient target, and the oriented theory of cycles.

mod cobordism;
mod interface;
pub mod oriented;
mod quotient;
mod universal;

pub use cobordism::CobordismBicycles;
pub use interface::BivariantTheory;
pub use oriented::{
    forget_map, forget_pullback_counterexample, forget_pullback_paths, om_orientation,
    om_orientation_class, om_product, om_pullback, om_pushforward, OmElement, OmGenerator,
};
pub use quotient::{make_quotient_theory, LabelMap, QuotientTheory};
pub use universal::{gamma_universal, uniqueness_check};
