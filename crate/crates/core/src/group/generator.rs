use std::fmt;

use serde::{Deserialize, Serialize};

use crate::geometry::{FiniteSpace, Label, Labels, Point};

/// Normal form of a single-point cobordism bicycle `[X <- {v} -> Y; L_1..L_r]`.
///
/// `d` is the dimension of the source point `v`; `labels` collects the values
/// `L_i(v)`, whose order is forgotten. For the vector-bundle groups the same
/// shape is used with `labels` the split form of the one bundle `E`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct CanonicalGenerator {
    pub x: Point,
    pub y: Point,
    pub d: i64,
    pub labels: Labels,
}

impl CanonicalGenerator {
    pub fn new(x: impl Into<Point>, y: impl Into<Point>, d: i64, labels: Labels) -> Self {
        CanonicalGenerator {
            x: x.into(),
            y: y.into(),
            d,
            labels,
        }
    }

    /// Relative dimension `dim V - dim Y` of the smooth leg.
    pub fn rel_dim(&self, target: &FiniteSpace) -> i64 {
        self.d - target.dim_of(&self.y)
    }

    /// Cohomological degree `i` with `-i + r = dim V - dim Y`.
    pub fn degree(&self, target: &FiniteSpace) -> i64 {
        self.labels.len() as i64 - self.rel_dim(target)
    }

    /// `(n, r)` with `n = dim V - dim Y` and `r` the number of labels.
    pub fn bidegree(&self, target: &FiniteSpace) -> (i64, usize) {
        (self.rel_dim(target), self.labels.len())
    }

    pub(crate) fn with_label(&self, label: Label) -> Self {
        CanonicalGenerator {
            labels: self.labels.clone().with(label),
            ..self.clone()
        }
    }
}

impl fmt::Display for CanonicalGenerator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {}, {})", self.x, self.y, self.d, self.labels)
    }
}
