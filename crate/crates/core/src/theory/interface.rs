use std::fmt;

use crate::error::Result;
use crate::geometry::{FiniteSpace, LineBundle, PointMap};

/// A bi-variant theory: graded abelian groups `B(X, Y)` with a product, proper
/// and smooth pushforwards and pullbacks, Chern class operators and units.
///
/// Elements are opaque; everything the axiom harness and the universal
/// transformation need goes through these methods. Implementations must be
/// pure, so trials can run concurrently.
pub trait BivariantTheory: Sync {
    type Element: Clone + PartialEq + fmt::Display + Send + Sync;

    fn name(&self) -> String;

    fn zero(&self, src: &FiniteSpace, tgt: &FiniteSpace) -> Self::Element;
    fn add(&self, a: &Self::Element, b: &Self::Element) -> Result<Self::Element>;
    fn negate(&self, a: &Self::Element) -> Self::Element;

    fn product(&self, a: &Self::Element, b: &Self::Element) -> Result<Self::Element>;
    /// `f_* α` for proper `f: X -> X'`.
    fn proper_pushforward(&self, f: &PointMap, a: &Self::Element) -> Result<Self::Element>;
    /// `α ,* g` for smooth `g: Y -> Y'`.
    fn smooth_pushforward(&self, a: &Self::Element, g: &PointMap) -> Result<Self::Element>;
    /// `f^* α` for smooth `f: X' -> X`.
    fn smooth_pullback(&self, f: &PointMap, a: &Self::Element) -> Result<Self::Element>;
    /// `α ,^* g` for proper `g: Y' -> Y`.
    fn proper_pullback(&self, a: &Self::Element, g: &PointMap) -> Result<Self::Element>;
    fn chern_left(&self, l: &LineBundle, a: &Self::Element) -> Result<Self::Element>;
    fn chern_right(&self, a: &Self::Element, m: &LineBundle) -> Result<Self::Element>;
    fn unit(&self, x: &FiniteSpace) -> Self::Element;

    /// `k · a` by doubling.
    fn scale(&self, a: &Self::Element, k: i64) -> Result<Self::Element> {
        let mut base = if k < 0 { self.negate(a) } else { a.clone() };
        let mut n = k.unsigned_abs();
        let mut acc: Option<Self::Element> = None;
        while n > 0 {
            if n & 1 == 1 {
                acc = Some(match acc {
                    None => base.clone(),
                    Some(x) => self.add(&x, &base)?,
                });
            }
            n >>= 1;
            if n > 0 {
                base = self.add(&base, &base)?;
            }
        }
        Ok(match acc {
            Some(x) => x,
            None => self.add(a, &self.negate(a))?,
        })
    }
}
