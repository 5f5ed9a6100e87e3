use super::BivariantTheory;
use crate::error::Result;
use crate::geometry::FiniteSpace;
use crate::group::{CanonicalGenerator, GroupElement};
use crate::ops::{decompose_normal_form, representative_source, unit};

/// The universal Grothendieck transformation `γ_T: Z -> T`.
///
/// A generator with one-point representative `[X <-p- V -s-> Y; L_1..L_r]`
/// goes to `p_*(c₁(L₁) • … • c₁(L_r) • 1_V) ,* s` computed in `T`; the map is
/// extended linearly.
pub fn gamma_universal<T: BivariantTheory>(theory: &T, alpha: &GroupElement) -> Result<T::Element> {
    gamma_with_unit(theory, alpha, &|v| Ok(theory.unit(v)))
}

fn gamma_with_unit<T: BivariantTheory>(
    theory: &T,
    alpha: &GroupElement,
    unit: &dyn Fn(&FiniteSpace) -> Result<T::Element>,
) -> Result<T::Element> {
    let mut acc = theory.zero(alpha.src(), alpha.tgt());
    for (g, c) in alpha.terms() {
        let image = generator_image(theory, alpha.src(), alpha.tgt(), g, unit)?;
        acc = theory.add(&acc, &theory.scale(&image, c)?)?;
    }
    Ok(acc)
}

fn generator_image<T: BivariantTheory>(
    theory: &T,
    x: &FiniteSpace,
    y: &FiniteSpace,
    g: &CanonicalGenerator,
    unit: &dyn Fn(&FiniteSpace) -> Result<T::Element>,
) -> Result<T::Element> {
    decompose_normal_form(x, y, g, g.labels.len())?.evaluate_with(theory, unit)
}

/// Checks a candidate transformation against the generator-reconstruction
/// consequence of uniqueness.
///
/// For every generator occurring in `samples`, with one-point source `V`, the
/// candidate must send `1_V` to the unit of `T`, and its value on the
/// generator must equal the normal form evaluated with `candidate(1_V)` in
/// place of `1_V`. This certifies agreement with [`gamma_universal`] on the
/// generators; it does not certify that the candidate preserves the
/// operations.
pub fn uniqueness_check<T, F>(theory: &T, candidate: F, samples: &[GroupElement]) -> Result<bool>
where
    T: BivariantTheory,
    F: Fn(&GroupElement) -> Result<T::Element>,
{
    let unit_image = |v: &FiniteSpace| candidate(&unit(v));
    for alpha in samples {
        for (g, _) in alpha.terms() {
            let single = GroupElement::generator(alpha.src(), alpha.tgt(), g.clone())?;
            let expr = decompose_normal_form(alpha.src(), alpha.tgt(), g, g.labels.len())?;
            let v = representative_source(g);
            if unit_image(&v)? != theory.unit(&v) {
                return Ok(false);
            }
            let rebuilt = expr.evaluate_with(theory, &unit_image)?;
            if candidate(&single)? != rebuilt {
                return Ok(false);
            }
        }
    }
    Ok(true)
}
