//! Deliberately broken variants of the bicycle theory, used to confirm that
//! the harness detects violations.

use crate::error::{Error, Result};
use crate::geometry::{FiniteSpace, Labels, LineBundle, PointMap};
use crate::group::{CanonicalGenerator, GroupElement};
use crate::ops::{self, closed};
use crate::theory::BivariantTheory;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Mutation {
    /// The product keeps only the left factor's labels.
    ProductDropsRightLabels,
    /// The unit sends each point to the next one.
    RotatedUnit,
    /// Proper pullback keeps the source dimension instead of shifting it.
    ProperPullbackKeepsDimension,
    /// Smooth pullback uses only the first point of each fiber.
    SmoothPullbackFirstPreimage,
    /// `c₁(L)` on the left records `-L(x)`.
    NegatedLeftChern,
}

impl Mutation {
    pub const ALL: [Mutation; 5] = [
        Mutation::ProductDropsRightLabels,
        Mutation::RotatedUnit,
        Mutation::ProperPullbackKeepsDimension,
        Mutation::SmoothPullbackFirstPreimage,
        Mutation::NegatedLeftChern,
    ];
}

/// [`CobordismBicycles`](crate::theory::CobordismBicycles) with one operation replaced.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct MutantTheory(pub Mutation);

impl BivariantTheory for MutantTheory {
    type Element = GroupElement;

    fn name(&self) -> String {
        format!("mutant:{:?}", self.0)
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
        match self.0 {
            Mutation::ProductDropsRightLabels => closed::product_with(a, b, |l, _| l.clone()),
            _ => ops::product(a, b),
        }
    }

    fn proper_pushforward(&self, f: &PointMap, a: &GroupElement) -> Result<GroupElement> {
        ops::proper_pushforward(f, a)
    }

    fn smooth_pushforward(&self, a: &GroupElement, g: &PointMap) -> Result<GroupElement> {
        ops::smooth_pushforward(a, g)
    }

    fn smooth_pullback(&self, f: &PointMap, a: &GroupElement) -> Result<GroupElement> {
        let full = ops::smooth_pullback(f, a)?;
        if self.0 != Mutation::SmoothPullbackFirstPreimage {
            return Ok(full);
        }
        Ok(full.map_terms(full.src(), full.tgt(), |t| {
            let first = f.preimage(f.at(&t.x)).next();
            (first == Some(&t.x)).then(|| t.clone())
        }))
    }

    fn proper_pullback(&self, a: &GroupElement, g: &PointMap) -> Result<GroupElement> {
        if self.0 != Mutation::ProperPullbackKeepsDimension {
            return ops::proper_pullback(a, g);
        }
        if g.target() != a.tgt() {
            return Err(Error::SpaceMismatch("proper pullback"));
        }
        Ok(a.map_terms(a.src(), g.source(), |t| {
            g.preimage(&t.y)
                .map(|y2| CanonicalGenerator {
                    y: y2.clone(),
                    ..t.clone()
                })
                .collect::<Vec<_>>()
        }))
    }

    fn chern_left(&self, l: &LineBundle, a: &GroupElement) -> Result<GroupElement> {
        if self.0 != Mutation::NegatedLeftChern {
            return ops::chern_left(l, a);
        }
        let negated = LineBundle::new(l.base().clone(), l.iter().map(|(p, v)| (p.clone(), -v)))?;
        ops::chern_left(&negated, a)
    }

    fn chern_right(&self, a: &GroupElement, m: &LineBundle) -> Result<GroupElement> {
        ops::chern_right(a, m)
    }

    fn unit(&self, x: &FiniteSpace) -> GroupElement {
        if self.0 != Mutation::RotatedUnit {
            return ops::unit(x);
        }
        let points: Vec<(_, i64)> = x.iter().map(|(p, d)| (p.clone(), d)).collect();
        GroupElement::collect(
            x,
            x,
            points.iter().enumerate().map(|(i, (p, d))| {
                let next = &points[(i + 1) % points.len()].0;
                (CanonicalGenerator::new(p.clone(), next.clone(), *d, Labels::new()), 1)
            }),
        )
    }
}
