use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use super::{disjoint_union, FiniteSpace, Label, Labels, Point, PointMap};
use crate::error::{Error, Result};

/// A line bundle, recorded by its class in `A` at each point.
/// Two line bundles are isomorphic exactly when their value maps agree.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LineBundle {
    base: FiniteSpace,
    values: Arc<BTreeMap<Point, Label>>,
}

impl LineBundle {
    pub fn new<I, P>(base: FiniteSpace, values: I) -> Result<Self>
    where
        I: IntoIterator<Item = (P, Label)>,
        P: Into<Point>,
    {
        let mut map = BTreeMap::new();
        for (p, l) in values {
            let p = p.into();
            if !base.contains(&p) {
                return Err(Error::UnknownPoint {
                    point: p,
                    role: "bundle base",
                });
            }
            if map.insert(p.clone(), l).is_some() {
                return Err(Error::DuplicatePoint(p));
            }
        }
        if let Some(p) = base.points().find(|p| !map.contains_key(*p)) {
            return Err(Error::NotTotal(p.clone()));
        }
        Ok(Self::from_parts(base, map))
    }

    pub(crate) fn from_parts(base: FiniteSpace, values: BTreeMap<Point, Label>) -> Self {
        LineBundle {
            base,
            values: Arc::new(values),
        }
    }

    pub fn constant(base: &FiniteSpace, label: Label) -> Self {
        Self::from_parts(base.clone(), base.points().map(|p| (p.clone(), label)).collect())
    }

    pub fn trivial(base: &FiniteSpace) -> Self {
        Self::constant(base, Label::ZERO)
    }

    pub fn base(&self) -> &FiniteSpace {
        &self.base
    }

    pub fn value(&self, p: &Point) -> Option<Label> {
        self.values.get(p).copied()
    }

    pub(crate) fn at(&self, p: &Point) -> Label {
        self.values[p]
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Point, Label)> + '_ {
        self.values.iter().map(|(p, l)| (p, *l))
    }

    /// `f^*L`, whose value at `v` is `L(f(v))`.
    pub fn pullback(&self, f: &PointMap) -> Result<LineBundle> {
        if f.target() != &self.base {
            return Err(Error::BaseMismatch);
        }
        let values = f.iter().map(|(a, b)| (a.clone(), self.at(b))).collect();
        Ok(Self::from_parts(f.source().clone(), values))
    }

    /// Tensor product, i.e. pointwise sum in `A`.
    pub fn tensor(&self, other: &LineBundle) -> Result<LineBundle> {
        if self.base != other.base {
            return Err(Error::BaseMismatch);
        }
        let values = self
            .values
            .iter()
            .map(|(p, l)| (p.clone(), *l + other.at(p)))
            .collect();
        Ok(Self::from_parts(self.base.clone(), values))
    }

    /// The bundle on `disjoint_union(self.base, other.base)` restricting to
    /// `self` and `other` on the two parts.
    pub fn disjoint_union(&self, other: &LineBundle) -> LineBundle {
        let values = self
            .iter()
            .map(|(p, l)| (Point::left(p.clone()), l))
            .chain(other.iter().map(|(p, l)| (Point::right(p.clone()), l)))
            .collect();
        Self::from_parts(disjoint_union(&self.base, &other.base), values)
    }
}

impl fmt::Display for LineBundle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{ ")?;
        for (i, (p, l)) in self.values.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{p}: {l}")?;
        }
        f.write_str(" }")
    }
}

/// A vector bundle of constant rank in the splitting-principle model: each
/// point carries the multiset of its line-bundle summands.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct VBundle {
    base: FiniteSpace,
    rank: usize,
    values: Arc<BTreeMap<Point, Labels>>,
}

impl VBundle {
    pub fn new<I, P>(base: FiniteSpace, rank: usize, values: I) -> Result<Self>
    where
        I: IntoIterator<Item = (P, Labels)>,
        P: Into<Point>,
    {
        let mut map = BTreeMap::new();
        for (p, ls) in values {
            let p = p.into();
            if !base.contains(&p) {
                return Err(Error::UnknownPoint {
                    point: p,
                    role: "bundle base",
                });
            }
            if ls.len() != rank {
                return Err(Error::RankMismatch {
                    point: p,
                    expected: rank,
                    found: ls.len(),
                });
            }
            if map.insert(p.clone(), ls).is_some() {
                return Err(Error::DuplicatePoint(p));
            }
        }
        if let Some(p) = base.points().find(|p| !map.contains_key(*p)) {
            return Err(Error::NotTotal(p.clone()));
        }
        Ok(VBundle {
            base,
            rank,
            values: Arc::new(map),
        })
    }

    /// The direct sum of the given line bundles.
    pub fn split(base: &FiniteSpace, lines: &[LineBundle]) -> Result<Self> {
        if lines.iter().any(|l| l.base() != base) {
            return Err(Error::BaseMismatch);
        }
        let values = base
            .points()
            .map(|p| (p.clone(), lines.iter().map(|l| l.at(p)).collect()))
            .collect();
        Ok(VBundle {
            base: base.clone(),
            rank: lines.len(),
            values: Arc::new(values),
        })
    }

    pub fn base(&self) -> &FiniteSpace {
        &self.base
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn value(&self, p: &Point) -> Option<&Labels> {
        self.values.get(p)
    }

    pub(crate) fn at(&self, p: &Point) -> &Labels {
        &self.values[p]
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Point, &Labels)> + '_ {
        self.values.iter()
    }

    pub fn pullback(&self, f: &PointMap) -> Result<VBundle> {
        if f.target() != &self.base {
            return Err(Error::BaseMismatch);
        }
        let values = f.iter().map(|(a, b)| (a.clone(), self.at(b).clone())).collect();
        Ok(VBundle {
            base: f.source().clone(),
            rank: self.rank,
            values: Arc::new(values),
        })
    }

    pub fn whitney_sum(&self, other: &VBundle) -> Result<VBundle> {
        self.pointwise(other, self.rank + other.rank, Labels::union)
    }

    pub fn tensor(&self, other: &VBundle) -> Result<VBundle> {
        self.pointwise(other, self.rank * other.rank, Labels::tensor)
    }

    fn pointwise(
        &self,
        other: &VBundle,
        rank: usize,
        op: impl Fn(&Labels, &Labels) -> Labels,
    ) -> Result<VBundle> {
        if self.base != other.base {
            return Err(Error::BaseMismatch);
        }
        let values = self
            .values
            .iter()
            .map(|(p, ls)| (p.clone(), op(ls, other.at(p))))
            .collect();
        Ok(VBundle {
            base: self.base.clone(),
            rank,
            values: Arc::new(values),
        })
    }

    /// # Panics
    /// If the ranks differ.
    pub fn disjoint_union(&self, other: &VBundle) -> VBundle {
        assert_eq!(self.rank, other.rank, "disjoint union of bundles of different rank");
        let values = self
            .iter()
            .map(|(p, l)| (Point::left(p.clone()), l.clone()))
            .chain(other.iter().map(|(p, l)| (Point::right(p.clone()), l.clone())))
            .collect();
        VBundle {
            base: disjoint_union(&self.base, &other.base),
            rank: self.rank,
            values: Arc::new(values),
        }
    }
}
