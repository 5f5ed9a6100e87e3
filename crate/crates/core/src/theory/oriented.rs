//! The oriented bivariant theory `OM(X -f-> Y)` of cobordism cycles over a
//! fixed structure map, and the forget map into bicycles.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::geometry::{compose, fiber_product, Labels, LineBundle, Point, PointMap};
use crate::group::{CanonicalGenerator, GroupElement};

/// A one-point cycle `[{v} -> X; L_1..L_r]` over `X -f-> Y`, recorded as the
/// image point, `dim v` and the label multiset.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct OmGenerator {
    pub x: Point,
    pub d: i64,
    pub labels: Labels,
}

impl fmt::Display for OmGenerator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {})", self.x, self.d, self.labels)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OmElement {
    structure: PointMap,
    terms: BTreeMap<OmGenerator, i64>,
}

impl OmElement {
    pub fn zero(structure: &PointMap) -> Self {
        OmElement {
            structure: structure.clone(),
            terms: BTreeMap::new(),
        }
    }

    pub fn from_terms<I>(structure: &PointMap, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (OmGenerator, i64)>,
    {
        let mut out = Self::zero(structure);
        for (g, c) in terms {
            if !structure.source().contains(&g.x) {
                return Err(Error::UnknownPoint {
                    point: g.x,
                    role: "source of the structure map",
                });
            }
            out.add_term(g, c);
        }
        Ok(out)
    }

    fn add_term(&mut self, g: OmGenerator, c: i64) {
        if c == 0 {
            return;
        }
        let e = self.terms.entry(g).or_insert(0);
        *e += c;
        if *e == 0 {
            self.terms.retain(|_, c| *c != 0);
        }
    }

    pub fn structure(&self) -> &PointMap {
        &self.structure
    }

    pub fn terms(&self) -> impl Iterator<Item = (&OmGenerator, i64)> + '_ {
        self.terms.iter().map(|(g, c)| (g, *c))
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add(&self, other: &OmElement) -> Result<OmElement> {
        if self.structure != other.structure {
            return Err(Error::SpaceMismatch("cycles over different structure maps"));
        }
        let mut out = self.clone();
        for (g, c) in other.terms() {
            out.add_term(g.clone(), c);
        }
        Ok(out)
    }
}

impl fmt::Display for OmElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (g, c)) in self.terms.iter().enumerate() {
            if i > 0 {
                f.write_str(" + ")?;
            }
            write!(f, "{c} * {g}")?;
        }
        Ok(())
    }
}

/// `θ(f) = [X -id-> X]` over a smooth `f`.
pub fn om_orientation_class(f: &PointMap) -> Result<OmElement> {
    if !f.is_smooth() {
        return Err(Error::NotSmooth);
    }
    OmElement::from_terms(
        f,
        f.source().iter().map(|(x, d)| {
            (
                OmGenerator {
                    x: x.clone(),
                    d,
                    labels: Labels::new(),
                },
                1,
            )
        }),
    )
}

/// Product `OM(X -f-> Y) ⊗ OM(Y -g-> Z) -> OM(X -gf-> Z)` through the double
/// fiber square `V' = V ×_X (X ×_Y W)`.
pub fn om_product(alpha: &OmElement, beta: &OmElement) -> Result<OmElement> {
    let (f, g) = (&alpha.structure, &beta.structure);
    if f.target() != g.source() {
        return Err(Error::Composition);
    }
    let mut out = OmElement::zero(&compose(f, g)?);
    let y_space = f.target();
    for (a, ca) in alpha.terms() {
        let y = f.at(&a.x);
        for (b, cb) in beta.terms().filter(|(b, _)| &b.x == y) {
            out.add_term(
                OmGenerator {
                    x: a.x.clone(),
                    d: a.d + b.d - y_space.dim_of(y),
                    labels: a.labels.union(&b.labels),
                },
                ca * cb,
            );
        }
    }
    Ok(out)
}

/// `f_*: OM(X -gf-> Z) -> OM(Y -g-> Z)`.
pub fn om_pushforward(f: &PointMap, g: &PointMap, alpha: &OmElement) -> Result<OmElement> {
    if compose(f, g)? != alpha.structure {
        return Err(Error::SpaceMismatch("pushforward needs a cycle over g ∘ f"));
    }
    let mut out = OmElement::zero(g);
    for (a, c) in alpha.terms() {
        out.add_term(
            OmGenerator {
                x: f.at(&a.x).clone(),
                ..a.clone()
            },
            c,
        );
    }
    Ok(out)
}

/// `g^*: OM(X -f-> Y) -> OM(X' -f'-> Y')` for `X' = X ×_Y Y'`.
pub fn om_pullback(g: &PointMap, alpha: &OmElement) -> Result<OmElement> {
    let f = &alpha.structure;
    let sq = fiber_product(f, g)?;
    let mut out = OmElement::zero(&sq.second);
    for (a, c) in alpha.terms() {
        let y = f.at(&a.x);
        for y2 in g.preimage(y) {
            out.add_term(
                OmGenerator {
                    x: Point::pair(a.x.clone(), y2.clone()),
                    d: a.d + g.source().dim_of(y2) - f.target().dim_of(y),
                    labels: a.labels.clone(),
                },
                c,
            );
        }
    }
    Ok(out)
}

/// The orientation `Φ(L)`, appending `h^*L`.
pub fn om_orientation(l: &LineBundle, alpha: &OmElement) -> Result<OmElement> {
    if l.base() != alpha.structure.source() {
        return Err(Error::BaseMismatch);
    }
    let mut out = OmElement::zero(&alpha.structure);
    for (a, c) in alpha.terms() {
        out.add_term(
            OmGenerator {
                labels: a.labels.clone().with(l.at(&a.x)),
                ..a.clone()
            },
            c,
        );
    }
    Ok(out)
}

/// `𝔣([V -h-> X; L..]) = [X <-h- V -f∘h-> Y; L..]`.
pub fn forget_map(alpha: &OmElement) -> GroupElement {
    let f = &alpha.structure;
    GroupElement::collect(
        f.source(),
        f.target(),
        alpha.terms().map(|(a, c)| {
            (
                CanonicalGenerator::new(a.x.clone(), f.at(&a.x).clone(), a.d, a.labels.clone()),
                c,
            )
        }),
    )
}

/// Representative-level versions of the cycle operations.
pub mod raw {
    use super::*;

    /// `[V -h-> X; L_1..L_r]` over the structure map `f: X -> Y`.
    #[derive(Clone, Debug, PartialEq, Eq)]
    pub struct RawCycle {
        pub h: PointMap,
        pub structure: PointMap,
        pub bundles: Vec<LineBundle>,
    }

    impl RawCycle {
        pub fn new(h: PointMap, structure: PointMap, bundles: Vec<LineBundle>) -> Result<Self> {
            if h.target() != structure.source() {
                return Err(Error::Composition);
            }
            if bundles.iter().any(|l| l.base() != h.source()) {
                return Err(Error::BaseMismatch);
            }
            Ok(RawCycle {
                h,
                structure,
                bundles,
            })
        }
    }

    pub fn canonicalize(c: &RawCycle) -> OmElement {
        let mut out = OmElement::zero(&c.structure);
        for (v, d) in c.h.source().iter() {
            out.add_term(
                OmGenerator {
                    x: c.h.at(v).clone(),
                    d,
                    labels: c.bundles.iter().map(|l| l.at(v)).collect(),
                },
                1,
            );
        }
        out
    }

    /// Product through `X' = X ×_Y W` and `V' = V ×_X X'`.
    pub fn product(a: &RawCycle, b: &RawCycle) -> Result<RawCycle> {
        let x_prime = fiber_product(&a.structure, &b.h)?;
        let v_prime = fiber_product(&a.h, &x_prime.first)?;
        let mut bundles = a
            .bundles
            .iter()
            .map(|l| l.pullback(&v_prime.first))
            .collect::<Result<Vec<_>>>()?;
        let to_w = compose(&v_prime.second, &x_prime.second)?;
        for m in &b.bundles {
            bundles.push(m.pullback(&to_w)?);
        }
        RawCycle::new(
            compose(&v_prime.first, &a.h)?,
            compose(&a.structure, &b.structure)?,
            bundles,
        )
    }

    /// Pullback through `X' = X ×_Y Y'` and `V' = V ×_X X'`.
    pub fn pullback(g: &PointMap, a: &RawCycle) -> Result<RawCycle> {
        let x_prime = fiber_product(&a.structure, g)?;
        let v_prime = fiber_product(&a.h, &x_prime.first)?;
        let bundles = a
            .bundles
            .iter()
            .map(|l| l.pullback(&v_prime.first))
            .collect::<Result<Vec<_>>>()?;
        RawCycle::new(v_prime.second.clone(), x_prime.second.clone(), bundles)
    }

    pub fn orientation(l: &LineBundle, a: &RawCycle) -> Result<RawCycle> {
        let mut bundles = a.bundles.clone();
        bundles.push(l.pullback(&a.h)?);
        RawCycle::new(a.h.clone(), a.structure.clone(), bundles)
    }
}

/// Both paths around the pullback square for the forget map:
/// `𝔣(g^* α)` and `((g')^* 𝔣(α)) ,^* g`, with `g': X ×_Y Y' -> X`.
/// They need not agree.
pub fn forget_pullback_paths(
    g: &PointMap,
    alpha: &OmElement,
) -> Result<(GroupElement, GroupElement)> {
    use crate::ops::{proper_pullback, smooth_pullback};

    let lhs = forget_map(&om_pullback(g, alpha)?);
    let sq = fiber_product(alpha.structure(), g)?;
    let rhs = proper_pullback(&smooth_pullback(&sq.first, &forget_map(alpha))?, g)?;
    Ok((lhs, rhs))
}

/// The square `X = Y = {y}`, `f = id`, `Y' = {y'₁, y'₂}` collapsing onto `y`,
/// all of dimension 0, with `α = [X -id-> X]`.
pub fn forget_pullback_counterexample() -> Result<(PointMap, OmElement)> {
    use crate::geometry::FiniteSpace;

    let y = FiniteSpace::new([("y", 0)])?;
    let y2 = FiniteSpace::new([("y1'", 0), ("y2'", 0)])?;
    let g = PointMap::constant(&y2, &y, &Point::named("y"))?;
    let f = PointMap::identity(&y);
    let alpha = om_orientation_class(&f)?;
    Ok((g, alpha))
}
