use itertools::Itertools;

use super::{CanonicalGenerator, GroupElement};
use crate::error::{Error, Result};
use crate::geometry::{copair, FiniteSpace, Labels, LineBundle, Point, PointMap, VBundle};

/// Largest source for which [`bicycles_isomorphic`] enumerates bijections.
pub const ISO_SEARCH_LIMIT: usize = 8;

/// A representative `(X <-p- V -s-> Y; L_1, ..., L_r)`.
///
/// `s` need not have constant relative dimension; such a bicycle only has a
/// class after splitting `V` into its points, which [`canonicalize`] does.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RawBicycle {
    pub p: PointMap,
    pub s: PointMap,
    pub bundles: Vec<LineBundle>,
}

impl RawBicycle {
    pub fn new(p: PointMap, s: PointMap, bundles: Vec<LineBundle>) -> Result<Self> {
        if p.source() != s.source() {
            return Err(Error::SourceMismatch);
        }
        if bundles.iter().any(|l| l.base() != p.source()) {
            return Err(Error::BaseMismatch);
        }
        Ok(RawBicycle { p, s, bundles })
    }

    pub fn source(&self) -> &FiniteSpace {
        self.p.source()
    }

    pub fn x_space(&self) -> &FiniteSpace {
        self.p.target()
    }

    pub fn y_space(&self) -> &FiniteSpace {
        self.s.target()
    }

    pub fn rank(&self) -> usize {
        self.bundles.len()
    }

    /// `dim s` when `V -> Y` has constant relative dimension.
    pub fn rel_dim(&self) -> Option<i64> {
        self.s.smooth_rel_dim()
    }

    /// The sum relation: `V_1 ⊔ V_2` with the bundles glued.
    pub fn disjoint_union(&self, other: &RawBicycle) -> Result<RawBicycle> {
        if self.rank() != other.rank() {
            return Err(Error::Theory(
                "disjoint union of bicycles with different numbers of line bundles".into(),
            ));
        }
        let bundles = self
            .bundles
            .iter()
            .zip(&other.bundles)
            .map(|(a, b)| a.disjoint_union(b))
            .collect();
        RawBicycle::new(copair(&self.p, &other.p)?, copair(&self.s, &other.s)?, bundles)
    }
}

/// Splits `V` into its points and records each as a canonical generator.
pub fn canonicalize(b: &RawBicycle) -> GroupElement {
    GroupElement::collect(
        b.x_space(),
        b.y_space(),
        b.source().iter().map(|(v, d)| {
            let labels: Labels = b.bundles.iter().map(|l| l.at(v)).collect();
            (
                CanonicalGenerator::new(b.p.at(v).clone(), b.s.at(v).clone(), d, labels),
                1,
            )
        }),
    )
}

/// Brute-force isomorphism of representatives: a bijection `h: V_a -> V_b`
/// commuting with both legs and preserving dimension, together with one
/// permutation `σ` of the bundle indices such that `L_i = h^* L'_σ(i)`.
pub fn bicycles_isomorphic(a: &RawBicycle, b: &RawBicycle) -> Result<bool> {
    let n = a.source().len();
    if n > ISO_SEARCH_LIMIT || b.source().len() > ISO_SEARCH_LIMIT {
        return Err(Error::TooLarge(n.max(b.source().len()), ISO_SEARCH_LIMIT));
    }
    if a.x_space() != b.x_space() || a.y_space() != b.y_space() {
        return Ok(false);
    }
    if n != b.source().len() || a.rank() != b.rank() {
        return Ok(false);
    }
    let va: Vec<&Point> = a.source().points().collect();
    let vb: Vec<&Point> = b.source().points().collect();
    let r = a.rank();
    for perm in (0..n).permutations(n) {
        let leg_ok = va.iter().zip(&perm).all(|(v, &j)| {
            let w = vb[j];
            a.source().dim_of(v) == b.source().dim_of(w)
                && a.p.at(v) == b.p.at(w)
                && a.s.at(v) == b.s.at(w)
        });
        if !leg_ok {
            continue;
        }
        let bundles_match = (0..r).permutations(r).any(|sigma| {
            (0..r).all(|i| {
                va.iter()
                    .zip(&perm)
                    .all(|(v, &j)| a.bundles[i].at(v) == b.bundles[sigma[i]].at(vb[j]))
            })
        });
        if bundles_match {
            return Ok(true);
        }
    }
    Ok(false)
}

/// A representative `(X <-p- V -s-> Y; E)` with one vector bundle.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RawVbBicycle {
    pub p: PointMap,
    pub s: PointMap,
    pub bundle: VBundle,
}

impl RawVbBicycle {
    pub fn new(p: PointMap, s: PointMap, bundle: VBundle) -> Result<Self> {
        if p.source() != s.source() {
            return Err(Error::SourceMismatch);
        }
        if bundle.base() != p.source() {
            return Err(Error::BaseMismatch);
        }
        Ok(RawVbBicycle { p, s, bundle })
    }

    pub fn source(&self) -> &FiniteSpace {
        self.p.source()
    }
}

pub fn canonicalize_vb(b: &RawVbBicycle) -> GroupElement {
    GroupElement::collect(
        b.p.target(),
        b.s.target(),
        b.source().iter().map(|(v, d)| {
            (
                CanonicalGenerator::new(
                    b.p.at(v).clone(),
                    b.s.at(v).clone(),
                    d,
                    b.bundle.at(v).clone(),
                ),
                1,
            )
        }),
    )
}
