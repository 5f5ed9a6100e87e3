//! The operations on representatives, built literally from fiber products and
//! bundle pullbacks. Canonicalizing their output must agree with the closed
//! forms in [`super::closed`]; the test suite holds the two together.

use crate::error::{Error, Result};
use crate::geometry::{compose, fiber_product, LineBundle, PointMap, VBundle};
use crate::group::{RawBicycle, RawVbBicycle};

fn pull_all(bundles: &[LineBundle], f: &PointMap) -> Result<Vec<LineBundle>> {
    bundles.iter().map(|l| l.pullback(f)).collect()
}

/// `(X <- V₁ -> Y) ∘ (Y <- V₂ -> Z)` over `V₁ ×_Y V₂`, with the bundles of both
/// factors pulled back to it.
pub fn product(a: &RawBicycle, b: &RawBicycle) -> Result<RawBicycle> {
    let sq = fiber_product(&a.s, &b.p)?;
    let mut bundles = pull_all(&a.bundles, &sq.first)?;
    bundles.extend(pull_all(&b.bundles, &sq.second)?);
    RawBicycle::new(
        compose(&sq.first, &a.p)?,
        compose(&sq.second, &b.s)?,
        bundles,
    )
}

pub fn proper_pushforward(f: &PointMap, a: &RawBicycle) -> Result<RawBicycle> {
    RawBicycle::new(compose(&a.p, f)?, a.s.clone(), a.bundles.clone())
}

pub fn smooth_pushforward(a: &RawBicycle, g: &PointMap) -> Result<RawBicycle> {
    if !g.is_smooth() {
        return Err(Error::NotSmooth);
    }
    RawBicycle::new(a.p.clone(), compose(&a.s, g)?, a.bundles.clone())
}

/// `[X' <- X' ×_X V -> Y; (f')^* L_i]`.
pub fn smooth_pullback(f: &PointMap, a: &RawBicycle) -> Result<RawBicycle> {
    if !f.is_smooth() {
        return Err(Error::NotSmooth);
    }
    let sq = fiber_product(f, &a.p)?;
    RawBicycle::new(
        sq.first.clone(),
        compose(&sq.second, &a.s)?,
        pull_all(&a.bundles, &sq.second)?,
    )
}

/// `[X <- V ×_Y Y' -> Y'; (g')^* L_i]`.
pub fn proper_pullback(a: &RawBicycle, g: &PointMap) -> Result<RawBicycle> {
    let sq = fiber_product(&a.s, g)?;
    RawBicycle::new(
        compose(&sq.first, &a.p)?,
        sq.second.clone(),
        pull_all(&a.bundles, &sq.first)?,
    )
}

pub fn chern_left(l: &LineBundle, a: &RawBicycle) -> Result<RawBicycle> {
    let mut bundles = a.bundles.clone();
    bundles.push(l.pullback(&a.p)?);
    RawBicycle::new(a.p.clone(), a.s.clone(), bundles)
}

pub fn chern_right(a: &RawBicycle, m: &LineBundle) -> Result<RawBicycle> {
    let mut bundles = a.bundles.clone();
    bundles.push(m.pullback(&a.s)?);
    RawBicycle::new(a.p.clone(), a.s.clone(), bundles)
}

fn vb_product(
    a: &RawVbBicycle,
    b: &RawVbBicycle,
    combine: impl Fn(&VBundle, &VBundle) -> Result<VBundle>,
) -> Result<RawVbBicycle> {
    let sq = fiber_product(&a.s, &b.p)?;
    let e = combine(&a.bundle.pullback(&sq.first)?, &b.bundle.pullback(&sq.second)?)?;
    RawVbBicycle::new(compose(&sq.first, &a.p)?, compose(&sq.second, &b.s)?, e)
}

pub fn whitney_product(a: &RawVbBicycle, b: &RawVbBicycle) -> Result<RawVbBicycle> {
    vb_product(a, b, VBundle::whitney_sum)
}

pub fn tensor_product(a: &RawVbBicycle, b: &RawVbBicycle) -> Result<RawVbBicycle> {
    vb_product(a, b, VBundle::tensor)
}
