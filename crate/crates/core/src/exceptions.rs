//! Exception sets of monic binary forms.
//!
//! `E(A)` is the set of nonzero `c` for which `x1 + c*x2` is not one-to-one on
//! `A^2`. A collision `a1 + c*a2 = a1' + c*a2'` with distinct pairs forces
//! `a2 ≠ a2'` and `c = (a1 - a1') / (a2' - a2)`, so `E(A)` is computed by
//! running that formula over all quadruples, and is always contained in the
//! difference-quotient set `D*(A)`.

use std::collections::BTreeSet;

use crate::error::{Result, SidonError};
use crate::form::LinearForm;
use crate::image::Enumerator;
use crate::normalization::is_normalized;
use crate::rational::Rational;
use crate::set::RationalSet;

/// The nonzero exception coefficients of a set, plus whether `c = 0` would
/// also collide (it does for every set with two or more elements).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExceptionSet {
    values: RationalSet,
    includes_zero_note: bool,
}

impl ExceptionSet {
    fn new(values: RationalSet, includes_zero_note: bool) -> Self {
        debug_assert!(!values.contains(&Rational::zero()));
        ExceptionSet {
            values,
            includes_zero_note,
        }
    }

    pub fn values(&self) -> &RationalSet {
        &self.values
    }

    pub fn includes_zero_note(&self) -> bool {
        self.includes_zero_note
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn contains(&self, c: &Rational) -> bool {
        self.values.contains(c)
    }

    /// Whether the values are closed under `c ↦ -c` and `c ↦ 1/c`.
    pub fn is_closed(&self) -> bool {
        self.values.iter().all(|c| {
            closure_of(c)
                .map(|e| e.is_subset(&self.values))
                .unwrap_or(false)
        })
    }
}

/// `D(A) = A - A` and `D*(A) = { d'/d : d, d' ∈ D(A), d ≠ 0 }`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DifferenceData {
    pub differences: RationalSet,
    pub quotients: RationalSet,
}

pub fn difference_data(set: &RationalSet) -> Result<DifferenceData> {
    if set.is_empty() {
        return Err(SidonError::EmptySet);
    }
    let differences: RationalSet = set
        .iter()
        .flat_map(|a| set.iter().map(move |b| b - a))
        .collect();
    let quotients: RationalSet = differences
        .iter()
        .filter(|d| !d.is_zero())
        .flat_map(|d| differences.iter().map(move |num| num / d))
        .collect();
    Ok(DifferenceData {
        differences,
        quotients,
    })
}

/// `E(A)` by the collision formula over all quadruples.
pub fn binary_exception_set(set: &RationalSet) -> Result<ExceptionSet> {
    if set.len() < 2 {
        return Err(SidonError::TooFewElements {
            required: 2,
            actual: set.len(),
        });
    }
    let elems = set.elements();
    let mut values = BTreeSet::new();
    for a1 in elems {
        for a1p in elems {
            if a1 == a1p {
                continue;
            }
            let numer = a1 - a1p;
            for a2 in elems {
                for a2p in elems {
                    if a2 == a2p {
                        continue;
                    }
                    values.insert(&numer / (a2p - a2));
                }
            }
        }
    }
    Ok(ExceptionSet::new(values.into_iter().collect(), true))
}

/// `E(A)` by testing each nonzero candidate of `D*(A)` with a full Sidon
/// check. Slower than [`binary_exception_set`]; kept as its cross-check.
pub fn exception_set_by_testing(
    set: &RationalSet,
    enumerator: &Enumerator,
) -> Result<ExceptionSet> {
    if set.len() < 2 {
        return Err(SidonError::TooFewElements {
            required: 2,
            actual: set.len(),
        });
    }
    let data = difference_data(set)?;
    let mut values = Vec::new();
    for c in data.quotients.without_zero() {
        let form = LinearForm::binary(c.clone())?;
        if !enumerator.is_sidon(&form, set)? {
            values.push(c);
        }
    }
    let zero_collides = set.len() >= 2;
    Ok(ExceptionSet::new(
        RationalSet::from_distinct(values)?,
        zero_collides,
    ))
}

/// `E(c) = {±c, ±1/c}`.
pub fn closure_of(c: &Rational) -> Result<RationalSet> {
    let inv = c.recip().ok_or(SidonError::ZeroClosure)?;
    Ok([c.clone(), -c, -&inv, inv].into_iter().collect())
}

fn union_of_closures(generators: &[Rational]) -> Result<RationalSet> {
    let mut out = BTreeSet::new();
    for c in generators {
        out.extend(closure_of(c)?);
    }
    Ok(out.into_iter().collect())
}

/// Generators of the closed form of `E(0,1,a)`: `1, a, a-1, (a-1)/a`.
fn three_point_generators(a: &Rational) -> Vec<Rational> {
    let one = Rational::one();
    let am1 = a - &one;
    vec![one, a.clone(), am1.clone(), am1 / a]
}

/// Generators of the closed form of `E(0,1,a,b)`.
fn four_point_generators(a: &Rational, b: &Rational) -> Vec<Rational> {
    let one = Rational::one();
    let am1 = a - &one;
    let bm1 = b - &one;
    let amb = a - b;
    let mut g = three_point_generators(a);
    g.extend(three_point_generators(b));
    g.extend([
        amb.clone(),
        &amb / a,
        &amb / b,
        &am1 / b,
        &bm1 / a,
        &am1 / &bm1,
        &am1 / &amb,
        &bm1 / &amb,
        a / b,
    ]);
    g
}

/// `E(A)` from the closed forms for normalized sets of size 2, 3 or 4.
pub fn formula_exception_set(set: &RationalSet) -> Result<ExceptionSet> {
    if !is_normalized(set) {
        return Err(SidonError::NotNormalized);
    }
    let free: Vec<&Rational> = set.iter().filter(|x| !x.is_zero() && !x.is_one()).collect();
    let generators = match free.as_slice() {
        [] => vec![Rational::one()],
        [a] => three_point_generators(a),
        [a, b] => four_point_generators(a, b),
        _ => return Err(SidonError::UnsupportedSize(set.len())),
    };
    Ok(ExceptionSet::new(union_of_closures(&generators)?, true))
}
