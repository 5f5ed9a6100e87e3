use crate::error::Result;
use crate::geometry::{FiniteSpace, LineBundle, PointMap};
use crate::group::GroupElement;
use crate::ops;

/// The theory `Z*(X, Y)` of cobordism bicycles itself.
#[derive(Clone, Copy, Debug, Default)]
pub struct CobordismBicycles;

impl super::BivariantTheory for CobordismBicycles {
    type Element = GroupElement;

    fn name(&self) -> String {
        "Z".into()
    }

    fn zero(&self, src: &FiniteSpace, tgt: &FiniteSpace) -> GroupElement {
        GroupElement::zero(src, tgt)
    }

    fn add(&self, a: &GroupElement, b: &GroupElement) -> Result<GroupElement> {
        a.add(b)
    }

    fn negate(&self, a: &GroupElement) -> GroupElement {
        a.neg()
    }

    fn scale(&self, a: &GroupElement, k: i64) -> Result<GroupElement> {
        Ok(a.scale(k))
    }

    fn product(&self, a: &GroupElement, b: &GroupElement) -> Result<GroupElement> {
        ops::product(a, b)
    }

    fn proper_pushforward(&self, f: &PointMap, a: &GroupElement) -> Result<GroupElement> {
        ops::proper_pushforward(f, a)
    }

    fn smooth_pushforward(&self, a: &GroupElement, g: &PointMap) -> Result<GroupElement> {
        ops::smooth_pushforward(a, g)
    }

    fn smooth_pullback(&self, f: &PointMap, a: &GroupElement) -> Result<GroupElement> {
        ops::smooth_pullback(f, a)
    }

    fn proper_pullback(&self, a: &GroupElement, g: &PointMap) -> Result<GroupElement> {
        ops::proper_pullback(a, g)
    }

    fn chern_left(&self, l: &LineBundle, a: &GroupElement) -> Result<GroupElement> {
        ops::chern_left(l, a)
    }

    fn chern_right(&self, a: &GroupElement, m: &LineBundle) -> Result<GroupElement> {
        ops::chern_right(a, m)
    }

    fn unit(&self, x: &FiniteSpace) -> GroupElement {
        ops::unit(x)
    }
}
