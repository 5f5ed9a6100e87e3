use std::fmt;

use crate::error::Result;
use crate::geometry::{FiniteSpace, Label, LineBundle, PointMap};
use crate::group::{CanonicalGenerator, GroupElement};
use crate::ops;

/// A homomorphism out of the label group `A = Z²`.
///
/// Targets are represented inside `Z²`: a linear map lands in `Z²` itself,
/// a reduction mod `n` lands in `(Z/n)²` with representatives in `0..n`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum LabelMap {
    /// `(a, b) ↦ (m₀₀ a + m₀₁ b, m₁₀ a + m₁₁ b)`.
    Linear([[i64; 2]; 2]),
    /// `A -> A / nA`.
    Reduce(i64),
}

impl LabelMap {
    pub const IDENTITY: LabelMap = LabelMap::Linear([[1, 0], [0, 1]]);
    pub const FIRST_COORDINATE: LabelMap = LabelMap::Linear([[1, 0], [0, 0]]);
    pub const ZERO: LabelMap = LabelMap::Linear([[0, 0], [0, 0]]);

    pub fn apply(&self, l: Label) -> Label {
        match *self {
            LabelMap::Linear(m) => Label(m[0][0] * l.0 + m[0][1] * l.1, m[1][0] * l.0 + m[1][1] * l.1),
            LabelMap::Reduce(n) => Label(l.0.rem_euclid(n), l.1.rem_euclid(n)),
        }
    }
}

impl fmt::Display for LabelMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LabelMap::Linear(m) => write!(f, "[[{}, {}], [{}, {}]]", m[0][0], m[0][1], m[1][0], m[1][1]),
            LabelMap::Reduce(n) => write!(f, "mod {n}"),
        }
    }
}

/// The same finite model with labels pushed through `q`; Chern operators
/// record `q(L(x))` instead of `L(x)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct QuotientTheory {
    pub q: LabelMap,
}

impl QuotientTheory {
    pub fn new(q: LabelMap) -> Self {
        QuotientTheory { q }
    }

    /// The direct relabeling `Z(X, Y) -> B(X, Y)`.
    pub fn relabel(&self, a: &GroupElement) -> GroupElement {
        a.map_terms(a.src(), a.tgt(), |g| {
            Some(CanonicalGenerator {
                labels: g.labels.map(|l| self.q.apply(l)),
                ..g.clone()
            })
        })
    }

    fn push_bundle(&self, l: &LineBundle) -> LineBundle {
        LineBundle::from_parts(
            l.base().clone(),
            l.iter().map(|(p, v)| (p.clone(), self.q.apply(v))).collect(),
        )
    }
}

impl super::BivariantTheory for QuotientTheory {
    type Element = GroupElement;

    fn name(&self) -> String {
        format!("Z/({})", self.q)
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
        ops::chern_left(&self.push_bundle(l), a)
    }

    fn chern_right(&self, a: &GroupElement, m: &LineBundle) -> Result<GroupElement> {
        ops::chern_right(a, &self.push_bundle(m))
    }

    fn unit(&self, x: &FiniteSpace) -> GroupElement {
        ops::unit(x)
    }
}

/// Builds the quotient theory for `q`.
pub fn make_quotient_theory(q: LabelMap) -> QuotientTheory {
    QuotientTheory::new(q)
}
