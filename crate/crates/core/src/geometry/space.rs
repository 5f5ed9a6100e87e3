use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use super::Point;
use crate::error::{Error, Result};

/// A finite set of points, each its own connected component with an integer
/// dimension. The empty space is allowed.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct FiniteSpace {
    dims: Arc<BTreeMap<Point, i64>>,
}

impl FiniteSpace {
    pub fn empty() -> Self {
        Self::default()
    }

    /// Builds a space from `(point, dim)` pairs, rejecting repeated points.
    pub fn new<I, P>(points: I) -> Result<Self>
    where
        I: IntoIterator<Item = (P, i64)>,
        P: Into<Point>,
    {
        let mut dims = BTreeMap::new();
        for (p, d) in points {
            let p = p.into();
            if dims.insert(p.clone(), d).is_some() {
                return Err(Error::DuplicatePoint(p));
            }
        }
        Ok(Self::from_map(dims))
    }

    pub(crate) fn from_map(dims: BTreeMap<Point, i64>) -> Self {
        FiniteSpace {
            dims: Arc::new(dims),
        }
    }

    /// A one-point space.
    pub fn point(name: impl Into<Point>, dim: i64) -> Self {
        Self::from_map(BTreeMap::from([(name.into(), dim)]))
    }

    pub fn len(&self) -> usize {
        self.dims.len()
    }

    pub fn is_empty(&self) -> bool {
        self.dims.is_empty()
    }

    pub fn contains(&self, p: &Point) -> bool {
        self.dims.contains_key(p)
    }

    pub fn dim(&self, p: &Point) -> Option<i64> {
        self.dims.get(p).copied()
    }

    pub(crate) fn dim_of(&self, p: &Point) -> i64 {
        self.dims[p]
    }

    pub fn points(&self) -> impl Iterator<Item = &Point> + '_ {
        self.dims.keys()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Point, i64)> + '_ {
        self.dims.iter().map(|(p, d)| (p, *d))
    }

    /// The subspace on the points satisfying `keep`.
    pub fn filter(&self, mut keep: impl FnMut(&Point) -> bool) -> FiniteSpace {
        Self::from_map(
            self.dims
                .iter()
                .filter(|(p, _)| keep(p))
                .map(|(p, d)| (p.clone(), *d))
                .collect(),
        )
    }
}

impl fmt::Display for FiniteSpace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{ ")?;
        for (i, (p, d)) in self.dims.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{p}: dim {d}")?;
        }
        f.write_str(" }")
    }
}

/// Tagged union of two spaces; dimensions are preserved.
pub fn disjoint_union(a: &FiniteSpace, b: &FiniteSpace) -> FiniteSpace {
    let mut dims = BTreeMap::new();
    for (p, d) in a.iter() {
        dims.insert(Point::left(p.clone()), d);
    }
    for (p, d) in b.iter() {
        dims.insert(Point::right(p.clone()), d);
    }
    FiniteSpace::from_map(dims)
}
