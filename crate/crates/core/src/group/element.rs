use std::collections::BTreeMap;
use std::fmt;

use super::CanonicalGenerator;
use crate::error::{Error, Result};
use crate::geometry::FiniteSpace;

/// An element of the total group `⊕_i Z^i(X, Y)`: a finite integer
/// combination of canonical generators. Zero coefficients are never stored.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GroupElement {
    src: FiniteSpace,
    tgt: FiniteSpace,
    terms: BTreeMap<CanonicalGenerator, i64>,
}

impl GroupElement {
    pub fn zero(src: &FiniteSpace, tgt: &FiniteSpace) -> Self {
        GroupElement {
            src: src.clone(),
            tgt: tgt.clone(),
            terms: BTreeMap::new(),
        }
    }

    /// Builds an element from terms, checking that every generator's points
    /// live in `src` and `tgt`.
    pub fn from_terms<I>(src: &FiniteSpace, tgt: &FiniteSpace, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (CanonicalGenerator, i64)>,
    {
        let mut out = Self::zero(src, tgt);
        for (g, c) in terms {
            if !src.contains(&g.x) {
                return Err(Error::UnknownPoint {
                    point: g.x,
                    role: "source space",
                });
            }
            if !tgt.contains(&g.y) {
                return Err(Error::UnknownPoint {
                    point: g.y,
                    role: "target space",
                });
            }
            out.add_term(g, c);
        }
        Ok(out)
    }

    /// The caller guarantees that `x ∈ src` and `y ∈ tgt`.
    pub(crate) fn collect<I>(src: &FiniteSpace, tgt: &FiniteSpace, terms: I) -> Self
    where
        I: IntoIterator<Item = (CanonicalGenerator, i64)>,
    {
        let mut out = Self::zero(src, tgt);
        for (g, c) in terms {
            debug_assert!(src.contains(&g.x) && tgt.contains(&g.y));
            out.add_term(g, c);
        }
        out
    }

    pub fn generator(src: &FiniteSpace, tgt: &FiniteSpace, g: CanonicalGenerator) -> Result<Self> {
        Self::from_terms(src, tgt, [(g, 1)])
    }

    pub(crate) fn add_term(&mut self, g: CanonicalGenerator, c: i64) {
        if c == 0 {
            return;
        }
        let entry = self.terms.entry(g);
        match entry {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if *o.get() == 0 {
                    o.remove();
                }
            }
        }
    }

    pub fn src(&self) -> &FiniteSpace {
        &self.src
    }

    pub fn tgt(&self) -> &FiniteSpace {
        &self.tgt
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, g: &CanonicalGenerator) -> i64 {
        self.terms.get(g).copied().unwrap_or(0)
    }

    /// Terms in serialization order `(x, y, d, labels)`.
    pub fn terms(&self) -> impl Iterator<Item = (&CanonicalGenerator, i64)> + '_ {
        self.terms.iter().map(|(g, c)| (g, *c))
    }

    fn check_same(&self, other: &Self) -> Result<()> {
        if self.src != other.src || self.tgt != other.tgt {
            return Err(Error::SpaceMismatch("addition"));
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_same(other)?;
        let mut out = self.clone();
        for (g, c) in other.terms() {
            out.add_term(g.clone(), c);
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        self.scale(-1)
    }

    pub fn scale(&self, k: i64) -> Self {
        if k == 0 {
            return Self::zero(&self.src, &self.tgt);
        }
        GroupElement {
            src: self.src.clone(),
            tgt: self.tgt.clone(),
            terms: self.terms.iter().map(|(g, c)| (g.clone(), c * k)).collect(),
        }
    }

    /// Degree of each term, in term order.
    pub fn degrees(&self) -> impl Iterator<Item = i64> + '_ {
        self.terms.keys().map(|g| g.degree(&self.tgt))
    }

    /// The homogeneous slice in `Z^i(X, Y)`.
    pub fn homogeneous(&self, i: i64) -> Self {
        let terms = self
            .terms
            .iter()
            .filter(|(g, _)| g.degree(&self.tgt) == i)
            .map(|(g, c)| (g.clone(), *c))
            .collect();
        GroupElement {
            src: self.src.clone(),
            tgt: self.tgt.clone(),
            terms,
        }
    }

    /// Applies `f` to every generator and re-collects, possibly onto new spaces.
    pub(crate) fn map_terms<I>(
        &self,
        src: &FiniteSpace,
        tgt: &FiniteSpace,
        mut f: impl FnMut(&CanonicalGenerator) -> I,
    ) -> Self
    where
        I: IntoIterator<Item = CanonicalGenerator>,
    {
        let mut out = Self::zero(src, tgt);
        for (g, c) in &self.terms {
            for h in f(g) {
                out.add_term(h, *c);
            }
        }
        out
    }
}

/// `coeff * (x, y, d, {labels})` joined by ` + `, or `0`.
impl fmt::Display for GroupElement {
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
