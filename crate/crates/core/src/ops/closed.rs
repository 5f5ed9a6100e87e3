//! Closed forms of the operations on canonical generators.

use crate::error::{Error, Result};
use crate::geometry::{FiniteSpace, Labels, LineBundle, PointMap};
use crate::group::{CanonicalGenerator, GroupElement};

fn smooth(f: &PointMap) -> Result<i64> {
    f.smooth_rel_dim().ok_or(Error::NotSmooth)
}

/// `α • β` for `α ∈ Z(X, Y)` and `β ∈ Z(Y, Z)`.
///
/// `(x, y, d₁, S₁) • (y, z, d₂, S₂) = (x, z, d₁ + d₂ - dim y, S₁ ⊎ S₂)`, and the
/// product vanishes when the middle points differ.
pub fn product(alpha: &GroupElement, beta: &GroupElement) -> Result<GroupElement> {
    product_with(alpha, beta, Labels::union)
}

pub(crate) fn product_with(
    alpha: &GroupElement,
    beta: &GroupElement,
    combine: impl Fn(&Labels, &Labels) -> Labels,
) -> Result<GroupElement> {
    if alpha.tgt() != beta.src() {
        return Err(Error::SpaceMismatch("product"));
    }
    let middle = alpha.tgt();
    let mut out = GroupElement::zero(alpha.src(), beta.tgt());
    for (a, ca) in alpha.terms() {
        for (b, cb) in beta.terms().filter(|(b, _)| b.x == a.y) {
            let g = CanonicalGenerator {
                x: a.x.clone(),
                y: b.y.clone(),
                d: a.d + b.d - middle.dim_of(&a.y),
                labels: combine(&a.labels, &b.labels),
            };
            out.add_term(g, ca * cb);
        }
    }
    Ok(out)
}

/// `f_* α` for any (proper) `f: X -> X'`.
pub fn proper_pushforward(f: &PointMap, alpha: &GroupElement) -> Result<GroupElement> {
    if f.source() != alpha.src() {
        return Err(Error::SpaceMismatch("proper pushforward"));
    }
    Ok(alpha.map_terms(f.target(), alpha.tgt(), |g| {
        Some(CanonicalGenerator {
            x: f.at(&g.x).clone(),
            ..g.clone()
        })
    }))
}

/// `α ,* g` for smooth `g: Y -> Y'`; `dim s` grows by `dim g`, so the degree
/// drops by `dim g`.
pub fn smooth_pushforward(alpha: &GroupElement, g: &PointMap) -> Result<GroupElement> {
    smooth(g)?;
    if g.source() != alpha.tgt() {
        return Err(Error::SpaceMismatch("smooth pushforward"));
    }
    Ok(alpha.map_terms(alpha.src(), g.target(), |t| {
        Some(CanonicalGenerator {
            y: g.at(&t.y).clone(),
            ..t.clone()
        })
    }))
}

/// `f^* α` for smooth `f: X' -> X`: one term per point of the fiber over `x`,
/// each of source dimension `d + dim f`.
pub fn smooth_pullback(f: &PointMap, alpha: &GroupElement) -> Result<GroupElement> {
    let rel = smooth(f)?;
    if f.target() != alpha.src() {
        return Err(Error::SpaceMismatch("smooth pullback"));
    }
    Ok(alpha.map_terms(f.source(), alpha.tgt(), |t| {
        f.preimage(&t.x)
            .map(|x2| CanonicalGenerator {
                x: x2.clone(),
                d: t.d + rel,
                ..t.clone()
            })
            .collect::<Vec<_>>()
    }))
}

/// `α ,^* g` for any (proper) `g: Y' -> Y`: one term per `y'` over `y`, with
/// source dimension `d + dim y' - dim y`, so the degree is unchanged.
pub fn proper_pullback(alpha: &GroupElement, g: &PointMap) -> Result<GroupElement> {
    if g.target() != alpha.tgt() {
        return Err(Error::SpaceMismatch("proper pullback"));
    }
    let (src_y, tgt_y) = (g.source(), g.target());
    Ok(alpha.map_terms(alpha.src(), src_y, |t| {
        g.preimage(&t.y)
            .map(|y2| CanonicalGenerator {
                y: y2.clone(),
                d: t.d + src_y.dim_of(y2) - tgt_y.dim_of(&t.y),
                ..t.clone()
            })
            .collect::<Vec<_>>()
    }))
}

/// `c₁(L) • α`: appends `p^*L`, i.e. `L(x)`.
pub fn chern_left(l: &LineBundle, alpha: &GroupElement) -> Result<GroupElement> {
    if l.base() != alpha.src() {
        return Err(Error::BaseMismatch);
    }
    Ok(alpha.map_terms(alpha.src(), alpha.tgt(), |t| Some(t.with_label(l.at(&t.x)))))
}

/// `α • c₁(M)`: appends `s^*M`, i.e. `M(y)`.
pub fn chern_right(alpha: &GroupElement, m: &LineBundle) -> Result<GroupElement> {
    if m.base() != alpha.tgt() {
        return Err(Error::BaseMismatch);
    }
    Ok(alpha.map_terms(alpha.src(), alpha.tgt(), |t| Some(t.with_label(m.at(&t.y)))))
}

/// `1_X = [X <- X -> X]`.
pub fn unit(x: &FiniteSpace) -> GroupElement {
    GroupElement::collect(
        x,
        x,
        x.iter()
            .map(|(p, d)| (CanonicalGenerator::new(p.clone(), p.clone(), d, Labels::new()), 1)),
    )
}

/// The class `c₁(L) = [X <- X -> X; L] ∈ Z¹(X, X)`.
pub fn chern_class(l: &LineBundle) -> GroupElement {
    let x = l.base();
    GroupElement::collect(
        x,
        x,
        x.iter().map(|(p, d)| {
            (
                CanonicalGenerator::new(p.clone(), p.clone(), d, Labels::singleton(l.at(p))),
                1,
            )
        }),
    )
}
