use std::fmt;

use crate::error::{Error, Result};
use crate::geometry::{FiniteSpace, LineBundle, Point, PointMap};
use crate::group::CanonicalGenerator;
use crate::theory::BivariantTheory;

/// An expression built only from units, Chern operators and the two
/// pushforwards; it can be evaluated in any [`BivariantTheory`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Expr {
    Unit(FiniteSpace),
    ChernLeft(LineBundle, Box<Expr>),
    ChernRight(Box<Expr>, LineBundle),
    ProperPush(PointMap, Box<Expr>),
    SmoothPush(Box<Expr>, PointMap),
}

impl Expr {
    pub fn evaluate<T: BivariantTheory>(&self, theory: &T) -> Result<T::Element> {
        self.evaluate_with(theory, &|v| Ok(theory.unit(v)))
    }

    /// Evaluates with every unit `1_V` replaced by `unit(V)`.
    pub fn evaluate_with<T: BivariantTheory>(
        &self,
        theory: &T,
        unit: &dyn Fn(&FiniteSpace) -> Result<T::Element>,
    ) -> Result<T::Element> {
        match self {
            Expr::Unit(v) => unit(v),
            Expr::ChernLeft(l, e) => theory.chern_left(l, &e.evaluate_with(theory, unit)?),
            Expr::ChernRight(e, m) => theory.chern_right(&e.evaluate_with(theory, unit)?, m),
            Expr::ProperPush(f, e) => theory.proper_pushforward(f, &e.evaluate_with(theory, unit)?),
            Expr::SmoothPush(e, g) => theory.smooth_pushforward(&e.evaluate_with(theory, unit)?, g),
        }
    }
}

impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Expr::Unit(v) => write!(f, "unit({v})"),
            Expr::ChernLeft(l, e) => write!(f, "c1({l}) . {e}"),
            Expr::ChernRight(e, m) => write!(f, "{e} . c1({m})"),
            Expr::ProperPush(p, e) => write!(f, "push({p}, {e})"),
            Expr::SmoothPush(e, s) => write!(f, "spush({e}, {s})"),
        }
    }
}

/// Name of the point of the one-point representative `V`.
pub const REPRESENTATIVE_POINT: &str = "v";

/// The source `V = {v}` of the one-point representative of `g`.
pub fn representative_source(g: &CanonicalGenerator) -> FiniteSpace {
    FiniteSpace::point(REPRESENTATIVE_POINT, g.d)
}

/// `p_*(c₁(L₁) • … • c₁(L_j) • 1_V • c₁(L_{j+1}) • … • c₁(L_r)) ,* s` for the
/// one-point representative of `g`, with `L_i` the labels of `g` in order.
pub fn decompose_normal_form(
    x: &FiniteSpace,
    y: &FiniteSpace,
    g: &CanonicalGenerator,
    j: usize,
) -> Result<Expr> {
    let r = g.labels.len();
    if j > r {
        return Err(Error::Theory(format!(
            "insertion index {j} exceeds the number of line bundles {r}"
        )));
    }
    let v = Point::named(REPRESENTATIVE_POINT);
    let space = representative_source(g);
    let p = PointMap::new(space.clone(), x.clone(), [(v.clone(), g.x.clone())])?;
    let s = PointMap::new(space.clone(), y.clone(), [(v.clone(), g.y.clone())])?;
    let bundles: Vec<LineBundle> = g
        .labels
        .iter()
        .map(|l| LineBundle::constant(&space, *l))
        .collect();
    let mut body = Expr::Unit(space);
    for m in &bundles[j..] {
        body = Expr::ChernRight(Box::new(body), m.clone());
    }
    for l in bundles[..j].iter().rev() {
        body = Expr::ChernLeft(l.clone(), Box::new(body));
    }
    Ok(Expr::SmoothPush(Box::new(Expr::ProperPush(p, Box::new(body))), s))
}
