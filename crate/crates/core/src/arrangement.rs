//! The h-ary exception locus as a hyperplane arrangement.
//!
//! A form `Σ c_i x_i` collides on `A^h` exactly when `Σ c_i d_i = 0` for some
//! nonzero `d ∈ D(A)^h`, where `d_i = a_i - a_i'`. Each such `d` is stored
//! once, as the primitive integer vector on its line whose first nonzero entry
//! is positive.

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Result, SidonError};
use crate::exceptions::difference_data;
use crate::form::LinearForm;
use crate::image::Enumerator;
use crate::rational::Rational;
use crate::set::RationalSet;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HyperplaneArrangement {
    arity: usize,
    vectors: BTreeSet<Vec<BigInt>>,
}

impl HyperplaneArrangement {
    pub fn arity(&self) -> usize {
        self.arity
    }

    /// Normal vectors in lexicographic order.
    pub fn vectors(&self) -> impl Iterator<Item = &Vec<BigInt>> {
        self.vectors.iter()
    }

    pub fn len(&self) -> usize {
        self.vectors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vectors.is_empty()
    }

    pub fn contains(&self, vector: &[BigInt]) -> bool {
        self.vectors.contains(vector)
    }

    /// The first hyperplane containing the coefficient vector of `form`.
    pub fn blocking_vector(&self, form: &LinearForm) -> Result<Option<&Vec<BigInt>>> {
        if form.arity() != self.arity {
            return Err(SidonError::ArityMismatch {
                form: form.arity(),
                arrangement: self.arity,
            });
        }
        Ok(self.vectors.iter().find(|d| {
            form.coefficients()
                .iter()
                .zip(d.iter())
                .map(|(c, di)| c * Rational::from(di.clone()))
                .sum::<Rational>()
                .is_zero()
        }))
    }
}

/// Scales a nonzero rational vector to its canonical primitive integer form.
/// Returns `None` for the zero vector.
pub fn canonical_vector(vector: &[Rational]) -> Option<Vec<BigInt>> {
    let lcm = vector
        .iter()
        .fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
    let mut ints: Vec<BigInt> = vector
        .iter()
        .map(|x| x.numer() * (&lcm / x.denom()))
        .collect();
    let gcd = ints.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
    if gcd.is_zero() {
        return None;
    }
    let negate = ints
        .iter()
        .find(|x| !x.is_zero())
        .map(|x| x.is_negative())
        .unwrap_or(false);
    for x in ints.iter_mut() {
        *x = &*x / &gcd;
        if negate {
            *x = -&*x;
        }
    }
    Some(ints)
}

pub fn exception_arrangement(set: &RationalSet, arity: usize) -> Result<HyperplaneArrangement> {
    exception_arrangement_with(set, arity, &Enumerator::default())
}

/// Like [`exception_arrangement`], with the `|D(A)|^h` enumeration bounded by
/// `enumerator`.
pub fn exception_arrangement_with(
    set: &RationalSet,
    arity: usize,
    enumerator: &Enumerator,
) -> Result<HyperplaneArrangement> {
    if set.len() < 2 {
        return Err(SidonError::TooFewElements {
            required: 2,
            actual: set.len(),
        });
    }
    if arity < 2 {
        return Err(SidonError::ArityTooSmall {
            required: 2,
            actual: arity,
        });
    }
    let diffs = difference_data(set)?.differences;
    enumerator.tuple_count(diffs.len(), arity)?;

    let d = diffs.elements();
    let n = d.len();
    let mut vectors = BTreeSet::new();
    let mut indices = vec![0usize; arity];
    let mut point: Vec<Rational> = vec![d[0].clone(); arity];
    'outer: loop {
        if let Some(v) = canonical_vector(&point) {
            vectors.insert(v);
        }
        let mut pos = arity;
        loop {
            if pos == 0 {
                break 'outer;
            }
            pos -= 1;
            indices[pos] += 1;
            if indices[pos] < n {
                point[pos] = d[indices[pos]].clone();
                break;
            }
            indices[pos] = 0;
            point[pos] = d[0].clone();
        }
    }
    Ok(HyperplaneArrangement { arity, vectors })
}

/// Whether the coefficient vector of `form` avoids every hyperplane.
pub fn is_sidon_via_arrangement(
    form: &LinearForm,
    arrangement: &HyperplaneArrangement,
) -> Result<bool> {
    Ok(arrangement.blocking_vector(form)?.is_none())
}
