use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

/// A point identifier.
///
/// Fiber products and disjoint unions build structured identifiers out of the
/// points of their inputs, so identifiers of derived spaces never collide.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Point {
    Named(Arc<str>),
    Pair(Arc<(Point, Point)>),
    Left(Arc<Point>),
    Right(Arc<Point>),
}

impl Point {
    pub fn named(name: &str) -> Point {
        Point::Named(Arc::from(name))
    }

    pub fn pair(a: Point, b: Point) -> Point {
        Point::Pair(Arc::new((a, b)))
    }

    pub fn left(p: Point) -> Point {
        Point::Left(Arc::new(p))
    }

    pub fn right(p: Point) -> Point {
        Point::Right(Arc::new(p))
    }

    pub fn as_pair(&self) -> Option<(&Point, &Point)> {
        match self {
            Point::Pair(p) => Some((&p.0, &p.1)),
            _ => None,
        }
    }
}

impl From<&str> for Point {
    fn from(s: &str) -> Self {
        Point::named(s)
    }
}

impl fmt::Display for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Point::Named(s) => f.write_str(s),
            Point::Pair(p) => write!(f, "<{},{}>", p.0, p.1),
            Point::Left(p) => write!(f, "inl({p})"),
            Point::Right(p) => write!(f, "inr({p})"),
        }
    }
}
