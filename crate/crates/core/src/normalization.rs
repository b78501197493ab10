//! Reductions to monic forms and normalized sets.
//!
//! A set `A` with distinct anchors `a0, a1` maps to `A' = (A - a0) / (a1 - a0)`,
//! which contains 0 and 1. The returned [`AffineMap`] sends `A'` back to `A`.

use crate::error::{Result, SidonError};
use crate::form::LinearForm;
use crate::rational::Rational;
use crate::set::RationalSet;

/// `x ↦ scale * x + offset` with `scale ≠ 0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AffineMap {
    scale: Rational,
    offset: Rational,
}

impl AffineMap {
    pub fn new(scale: Rational, offset: Rational) -> Result<Self> {
        if scale.is_zero() {
            return Err(SidonError::ZeroScale);
        }
        Ok(AffineMap { scale, offset })
    }

    pub fn identity() -> Self {
        AffineMap {
            scale: Rational::one(),
            offset: Rational::zero(),
        }
    }

    pub fn scale(&self) -> &Rational {
        &self.scale
    }

    pub fn offset(&self) -> &Rational {
        &self.offset
    }

    pub fn apply(&self, x: &Rational) -> Rational {
        &self.scale * x + &self.offset
    }

    pub fn inverse(&self) -> AffineMap {
        let scale = self.scale.recip().expect("scale is nonzero");
        let offset = -(&self.offset * &scale);
        AffineMap { scale, offset }
    }
}

/// Returns `(ψ, c_1)` with `ψ = φ / c_1` monic, so that `φ(A) = c_1 * ψ(A)`.
pub fn to_monic(form: &LinearForm) -> (LinearForm, Rational) {
    let lead = form.leading().clone();
    let coefficients = form.coefficients().iter().map(|c| c / &lead).collect();
    let monic =
        LinearForm::new(coefficients).expect("quotients of nonzero coefficients are nonzero");
    (monic, lead)
}

/// Normalizes `A` at the anchors `a0 ↦ 0`, `a1 ↦ 1`.
pub fn normalize_set(
    set: &RationalSet,
    a0: &Rational,
    a1: &Rational,
) -> Result<(RationalSet, AffineMap)> {
    if !set.contains(a0) {
        return Err(SidonError::InvalidAnchor(format!("{a0} is not in the set")));
    }
    if !set.contains(a1) {
        return Err(SidonError::InvalidAnchor(format!("{a1} is not in the set")));
    }
    if a0 == a1 {
        return Err(SidonError::InvalidAnchor(
            "anchors must be distinct".to_string(),
        ));
    }
    let map = AffineMap::new(a1 - a0, a0.clone())?;
    let forward = map.inverse();
    let normalized = set.iter().map(|a| forward.apply(a)).collect();
    Ok((normalized, map))
}

/// Normalizes at the two smallest elements.
pub fn normalize_default(set: &RationalSet) -> Result<(RationalSet, AffineMap)> {
    match set.elements() {
        [a0, a1, ..] => normalize_set(set, a0, a1),
        _ => Err(SidonError::TooFewElements {
            required: 2,
            actual: set.len(),
        }),
    }
}

/// `scale * A + offset`.
pub fn apply_affine(map: &AffineMap, set: &RationalSet) -> RationalSet {
    set.iter().map(|a| map.apply(a)).collect()
}

pub fn is_normalized(set: &RationalSet) -> bool {
    set.contains(&Rational::zero()) && set.contains(&Rational::one())
}
