//! The groups `M_{n,r}(X, Y)⁺` of bicycles carrying one vector bundle, with
//! the Whitney-sum and tensor products.
//!
//! Generators have the same shape as for line-bundle bicycles; the label
//! multiset is the split form of the bundle, so its size is the rank.

use std::fmt;

use super::closed;
use crate::error::Result;
use crate::geometry::{FiniteSpace, Label, Labels, PointMap};
use crate::group::{CanonicalGenerator, GroupElement};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum VbProduct {
    /// `•_⊕`, bigrading `(m + n, r + k)`.
    Whitney,
    /// `•_⊗`, bigrading `(m + n, r k)`.
    Tensor,
}

impl VbProduct {
    pub fn combine(self, a: &Labels, b: &Labels) -> Labels {
        match self {
            VbProduct::Whitney => a.union(b),
            VbProduct::Tensor => a.tensor(b),
        }
    }

    pub fn rank(self, r: usize, k: usize) -> usize {
        match self {
            VbProduct::Whitney => r + k,
            VbProduct::Tensor => r * k,
        }
    }

    pub fn apply(self, a: &VbElement, b: &VbElement) -> Result<VbElement> {
        closed::product_with(&a.0, &b.0, |x, y| self.combine(x, y)).map(VbElement)
    }

    /// `[X <- X -> X; 0]` for `⊕`, `[X <- X -> X; O_X]` for `⊗`.
    pub fn unit(self, x: &FiniteSpace) -> VbElement {
        match self {
            VbProduct::Whitney => VbElement(closed::unit(x)),
            VbProduct::Tensor => VbElement(GroupElement::collect(
                x,
                x,
                x.iter().map(|(p, d)| {
                    (
                        CanonicalGenerator::new(
                            p.clone(),
                            p.clone(),
                            d,
                            Labels::singleton(Label::ZERO),
                        ),
                        1,
                    )
                }),
            )),
        }
    }
}

/// An element of `⊕_{n,r} M_{n,r}(X, Y)⁺`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct VbElement(pub GroupElement);

impl VbElement {
    pub fn zero(src: &FiniteSpace, tgt: &FiniteSpace) -> Self {
        VbElement(GroupElement::zero(src, tgt))
    }

    pub fn inner(&self) -> &GroupElement {
        &self.0
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.0.add(&other.0).map(VbElement)
    }

    /// Bidegree `(dim s, rank E)` of every term, in term order.
    pub fn bidegrees(&self) -> impl Iterator<Item = (i64, usize)> + '_ {
        self.0.terms().map(|(g, _)| g.bidegree(self.0.tgt()))
    }

    pub fn proper_pushforward(&self, f: &PointMap) -> Result<Self> {
        closed::proper_pushforward(f, &self.0).map(VbElement)
    }

    pub fn smooth_pushforward(&self, g: &PointMap) -> Result<Self> {
        closed::smooth_pushforward(&self.0, g).map(VbElement)
    }

    pub fn smooth_pullback(&self, f: &PointMap) -> Result<Self> {
        closed::smooth_pullback(f, &self.0).map(VbElement)
    }

    pub fn proper_pullback(&self, g: &PointMap) -> Result<Self> {
        closed::proper_pullback(&self.0, g).map(VbElement)
    }
}

pub fn whitney_product(a: &VbElement, b: &VbElement) -> Result<VbElement> {
    VbProduct::Whitney.apply(a, b)
}

pub fn tensor_product(a: &VbElement, b: &VbElement) -> Result<VbElement> {
    VbProduct::Tensor.apply(a, b)
}

impl fmt::Display for VbElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}
