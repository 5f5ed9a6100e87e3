use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use super::{disjoint_union, FiniteSpace, Point};
use crate::error::{Error, Result};

/// A function between finite spaces. Every map is proper in this model;
/// smoothness is decided by [`PointMap::smooth_rel_dim`].
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PointMap {
    source: FiniteSpace,
    target: FiniteSpace,
    graph: Arc<BTreeMap<Point, Point>>,
}

impl PointMap {
    pub fn new<I, P, Q>(source: FiniteSpace, target: FiniteSpace, graph: I) -> Result<Self>
    where
        I: IntoIterator<Item = (P, Q)>,
        P: Into<Point>,
        Q: Into<Point>,
    {
        let mut map = BTreeMap::new();
        for (a, b) in graph {
            let (a, b) = (a.into(), b.into());
            if !source.contains(&a) {
                return Err(Error::UnknownPoint {
                    point: a,
                    role: "source",
                });
            }
            if !target.contains(&b) {
                return Err(Error::UnknownPoint {
                    point: b,
                    role: "target",
                });
            }
            if map.insert(a.clone(), b).is_some() {
                return Err(Error::DuplicatePoint(a));
            }
        }
        if let Some(p) = source.points().find(|p| !map.contains_key(*p)) {
            return Err(Error::NotTotal(p.clone()));
        }
        Ok(Self::from_parts(source, target, map))
    }

    pub(crate) fn from_parts(
        source: FiniteSpace,
        target: FiniteSpace,
        graph: BTreeMap<Point, Point>,
    ) -> Self {
        debug_assert_eq!(graph.len(), source.len());
        PointMap {
            source,
            target,
            graph: Arc::new(graph),
        }
    }

    pub fn identity(space: &FiniteSpace) -> Self {
        let graph = space.points().map(|p| (p.clone(), p.clone())).collect();
        Self::from_parts(space.clone(), space.clone(), graph)
    }

    /// The map sending every point of `source` to the single point `to`.
    pub fn constant(source: &FiniteSpace, target: &FiniteSpace, to: &Point) -> Result<Self> {
        Self::new(
            source.clone(),
            target.clone(),
            source.points().map(|p| (p.clone(), to.clone())),
        )
    }

    pub fn source(&self) -> &FiniteSpace {
        &self.source
    }

    pub fn target(&self) -> &FiniteSpace {
        &self.target
    }

    pub fn apply(&self, p: &Point) -> Option<&Point> {
        self.graph.get(p)
    }

    pub(crate) fn at(&self, p: &Point) -> &Point {
        &self.graph[p]
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Point, &Point)> + '_ {
        self.graph.iter()
    }

    /// Points of the source mapping to `q`.
    pub fn preimage<'a>(&'a self, q: &'a Point) -> impl Iterator<Item = &'a Point> + 'a {
        self.graph.iter().filter(move |(_, b)| *b == q).map(|(a, _)| a)
    }

    /// `dim v - dim f(v)` when it is the same for every source point.
    ///
    /// An empty source is smooth of every relative dimension; `0` is reported.
    pub fn smooth_rel_dim(&self) -> Option<i64> {
        let mut drops = self
            .graph
            .iter()
            .map(|(a, b)| self.source.dim_of(a) - self.target.dim_of(b));
        let first = drops.next().unwrap_or(0);
        drops.all(|d| d == first).then_some(first)
    }

    pub fn is_smooth(&self) -> bool {
        self.smooth_rel_dim().is_some()
    }

    /// Restriction to the part of the source selected by `keep`.
    pub fn restrict(&self, keep: impl Fn(&Point) -> bool) -> PointMap {
        let source = self.source.filter(&keep);
        let graph = self
            .graph
            .iter()
            .filter(|(a, _)| keep(a))
            .map(|(a, b)| (a.clone(), b.clone()))
            .collect();
        Self::from_parts(source, self.target.clone(), graph)
    }
}

/// `g ∘ f`: first `f`, then `g`.
pub fn compose(f: &PointMap, g: &PointMap) -> Result<PointMap> {
    if f.target != g.source {
        return Err(Error::Composition);
    }
    let graph = f
        .graph
        .iter()
        .map(|(a, b)| (a.clone(), g.at(b).clone()))
        .collect();
    Ok(PointMap::from_parts(
        f.source.clone(),
        g.target.clone(),
        graph,
    ))
}

/// The result of [`fiber_product`]: the space `V ×_Y W` with both projections.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiberSquare {
    pub space: FiniteSpace,
    /// Projection onto the source of the first leg.
    pub first: PointMap,
    /// Projection onto the source of the second leg.
    pub second: PointMap,
}

/// Fiber product of `a: V -> Y` and `b: W -> Y`.
///
/// Points are the pairs `(v, w)` with `a(v) = b(w)`, of dimension
/// `dim v + dim w - dim a(v)`. With that rule a smooth leg of relative
/// dimension `d` base-changes to a smooth projection of relative dimension `d`.
pub fn fiber_product(a: &PointMap, b: &PointMap) -> Result<FiberSquare> {
    if a.target != b.target {
        return Err(Error::TargetMismatch);
    }
    let base = &a.target;
    let mut dims = BTreeMap::new();
    let mut first = BTreeMap::new();
    let mut second = BTreeMap::new();
    for (v, y) in a.iter() {
        for w in b.preimage(y) {
            let p = Point::pair(v.clone(), w.clone());
            let d = a.source.dim_of(v) + b.source.dim_of(w) - base.dim_of(y);
            dims.insert(p.clone(), d);
            first.insert(p.clone(), v.clone());
            second.insert(p, w.clone());
        }
    }
    let space = FiniteSpace::from_map(dims);
    Ok(FiberSquare {
        first: PointMap::from_parts(space.clone(), a.source.clone(), first),
        second: PointMap::from_parts(space.clone(), b.source.clone(), second),
        space,
    })
}

/// Inclusion of `a` into `disjoint_union(a, b)`.
pub fn inl(a: &FiniteSpace, b: &FiniteSpace) -> PointMap {
    let graph = a.points().map(|p| (p.clone(), Point::left(p.clone()))).collect();
    PointMap::from_parts(a.clone(), disjoint_union(a, b), graph)
}

/// Inclusion of `b` into `disjoint_union(a, b)`.
pub fn inr(a: &FiniteSpace, b: &FiniteSpace) -> PointMap {
    let graph = b.points().map(|p| (p.clone(), Point::right(p.clone()))).collect();
    PointMap::from_parts(b.clone(), disjoint_union(a, b), graph)
}

/// Copairing `f ⊔ g : A ⊔ B -> T` of two maps into the same target.
pub fn copair(f: &PointMap, g: &PointMap) -> Result<PointMap> {
    if f.target != g.target {
        return Err(Error::TargetMismatch);
    }
    let source = disjoint_union(&f.source, &g.source);
    let graph = f
        .iter()
        .map(|(a, t)| (Point::left(a.clone()), t.clone()))
        .chain(g.iter().map(|(b, t)| (Point::right(b.clone()), t.clone())))
        .collect();
    Ok(PointMap::from_parts(source, f.target.clone(), graph))
}

impl fmt::Display for PointMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{ ")?;
        for (i, (a, b)) in self.graph.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{a} -> {b}")?;
        }
        f.write_str(" }")
    }
}
