use std::fmt;
use std::ops::{Add, Neg};

use serde::{Deserialize, Serialize};

/// An element of the label group `A = Z^2` that stands in for the Picard group.
///
/// Ordering is lexicographic on the coordinates.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Label(pub i64, pub i64);

impl Label {
    pub const ZERO: Label = Label(0, 0);
}

impl Add for Label {
    type Output = Label;

    fn add(self, rhs: Label) -> Label {
        Label(self.0 + rhs.0, self.1 + rhs.1)
    }
}

impl Neg for Label {
    type Output = Label;

    fn neg(self) -> Label {
        Label(-self.0, -self.1)
    }
}

impl fmt::Display for Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.0, self.1)
    }
}

/// A finite multiset over [`Label`], kept sorted so that equality is syntactic.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Labels(Vec<Label>);

impl Labels {
    pub fn new() -> Self {
        Labels(Vec::new())
    }

    pub fn singleton(label: Label) -> Self {
        Labels(vec![label])
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = &Label> + '_ {
        self.0.iter()
    }

    pub fn as_slice(&self) -> &[Label] {
        &self.0
    }

    pub fn insert(&mut self, label: Label) {
        let at = self.0.partition_point(|l| *l <= label);
        self.0.insert(at, label);
    }

    pub fn with(mut self, label: Label) -> Self {
        self.insert(label);
        self
    }

    /// Removes one occurrence of `label`, returning whether it was present.
    pub fn remove(&mut self, label: &Label) -> bool {
        match self.0.binary_search(label) {
            Ok(i) => {
                self.0.remove(i);
                true
            }
            Err(_) => false,
        }
    }

    /// Multiset union (the Whitney sum of split bundles).
    pub fn union(&self, other: &Labels) -> Labels {
        let mut out = Vec::with_capacity(self.len() + other.len());
        let (mut a, mut b) = (self.0.iter().peekable(), other.0.iter().peekable());
        loop {
            match (a.peek(), b.peek()) {
                (Some(x), Some(y)) => {
                    if x <= y {
                        out.push(*a.next().unwrap());
                    } else {
                        out.push(*b.next().unwrap());
                    }
                }
                (Some(_), None) => out.extend(a.by_ref().copied()),
                (None, Some(_)) => out.extend(b.by_ref().copied()),
                (None, None) => break,
            }
        }
        Labels(out)
    }

    /// All pairwise sums (the tensor product of split bundles).
    pub fn tensor(&self, other: &Labels) -> Labels {
        self.0
            .iter()
            .flat_map(|a| other.0.iter().map(move |b| *a + *b))
            .collect()
    }

    pub fn map(&self, f: impl Fn(Label) -> Label) -> Labels {
        self.0.iter().map(|l| f(*l)).collect()
    }
}

impl FromIterator<Label> for Labels {
    fn from_iter<I: IntoIterator<Item = Label>>(iter: I) -> Self {
        let mut v: Vec<Label> = iter.into_iter().collect();
        v.sort_unstable();
        Labels(v)
    }
}

impl fmt::Display for Labels {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, l) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{l}")?;
        }
        f.write_str("}")
    }
}
