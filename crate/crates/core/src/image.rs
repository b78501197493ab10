//! φ-images, Sidon decisions and representation functions.
//!
//! Everything here enumerates the full Cartesian power `A^h`, so each
//! computation is checked against a tuple ceiling first.

use std::collections::{BTreeMap, HashMap, HashSet};

use num_bigint::BigUint;
use num_traits::ToPrimitive;

use crate::error::{Result, SidonError};
use crate::form::LinearForm;
use crate::rational::Rational;
use crate::set::RationalSet;

pub const DEFAULT_MAX_TUPLES: u64 = 10_000_000;

/// Multiplicity of every value of `φ` on `A^h`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RepresentationProfile {
    counts: BTreeMap<Rational, u64>,
    arity: usize,
    set_size: usize,
}

impl RepresentationProfile {
    pub fn counts(&self) -> &BTreeMap<Rational, u64> {
        &self.counts
    }

    /// `r(b)`, zero for values outside the image.
    pub fn count(&self, value: &Rational) -> u64 {
        self.counts.get(value).copied().unwrap_or(0)
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn set_size(&self) -> usize {
        self.set_size
    }

    pub fn total(&self) -> u64 {
        self.counts.values().sum()
    }

    pub fn max_count(&self) -> u64 {
        self.counts.values().copied().max().unwrap_or(0)
    }

    pub fn image(&self) -> RationalSet {
        self.counts.keys().cloned().collect()
    }
}

/// Two distinct tuples with the same value under a form.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Collision {
    pub first: Vec<Rational>,
    pub second: Vec<Rational>,
    pub value: Rational,
}

/// Tuple enumeration over `A^h` with a ceiling on `k^h`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Enumerator {
    max_tuples: u64,
}

impl Default for Enumerator {
    fn default() -> Self {
        Enumerator {
            max_tuples: DEFAULT_MAX_TUPLES,
        }
    }
}

impl Enumerator {
    pub fn new(max_tuples: u64) -> Self {
        Enumerator { max_tuples }
    }

    pub fn max_tuples(&self) -> u64 {
        self.max_tuples
    }

    /// `k^h`, or an error if it exceeds the ceiling.
    pub fn tuple_count(&self, set_size: usize, arity: usize) -> Result<u64> {
        let exact = num_traits::pow(BigUint::from(set_size), arity);
        match exact.to_u64() {
            Some(n) if n <= self.max_tuples => Ok(n),
            _ => Err(SidonError::TupleLimit {
                tuples: exact.to_string(),
                limit: self.max_tuples,
            }),
        }
    }

    /// Calls `visit(indices, value)` for every tuple in lexicographic index
    /// order; stops early when `visit` returns false.
    fn for_each_tuple<F>(&self, form: &LinearForm, set: &RationalSet, mut visit: F) -> Result<()>
    where
        F: FnMut(&[usize], Rational) -> bool,
    {
        let h = form.arity();
        let k = set.len();
        self.tuple_count(k, h)?;
        if k == 0 {
            return Ok(());
        }
        // products[i][j] = c_i * a_j
        let products: Vec<Vec<Rational>> = form
            .coefficients()
            .iter()
            .map(|c| set.iter().map(|a| c * a).collect())
            .collect();
        let mut indices = vec![0usize; h];
        loop {
            let value: Rational = indices
                .iter()
                .enumerate()
                .map(|(i, &j)| &products[i][j])
                .sum();
            if !visit(&indices, value) {
                return Ok(());
            }
            // odometer, last position fastest
            let mut pos = h;
            loop {
                if pos == 0 {
                    return Ok(());
                }
                pos -= 1;
                indices[pos] += 1;
                if indices[pos] < k {
                    break;
                }
                indices[pos] = 0;
            }
        }
    }

    /// `φ(A)`; the image of the empty set is `{0}`.
    pub fn phi_image(&self, form: &LinearForm, set: &RationalSet) -> Result<RationalSet> {
        if set.is_empty() {
            return Ok(RationalSet::from_integers([0]));
        }
        let mut values = HashSet::new();
        self.for_each_tuple(form, set, |_, v| {
            values.insert(v);
            true
        })?;
        Ok(values.into_iter().collect())
    }

    /// First collision in lexicographic tuple order, if any.
    pub fn find_collision(
        &self,
        form: &LinearForm,
        set: &RationalSet,
    ) -> Result<Option<Collision>> {
        if set.is_empty() {
            return Err(SidonError::EmptySet);
        }
        let mut seen: HashMap<Rational, Vec<usize>> = HashMap::new();
        let mut found = None;
        self.for_each_tuple(form, set, |indices, value| {
            if let Some(earlier) = seen.get(&value) {
                let pick = |ix: &[usize]| ix.iter().map(|&j| set.elements()[j].clone()).collect();
                found = Some(Collision {
                    first: pick(earlier),
                    second: pick(indices),
                    value,
                });
                false
            } else {
                seen.insert(value, indices.to_vec());
                true
            }
        })?;
        Ok(found)
    }

    /// Whether `φ` is one-to-one on `A^h`.
    pub fn is_sidon(&self, form: &LinearForm, set: &RationalSet) -> Result<bool> {
        Ok(self.find_collision(form, set)?.is_none())
    }

    pub fn representation_profile(
        &self,
        form: &LinearForm,
        set: &RationalSet,
    ) -> Result<RepresentationProfile> {
        if set.is_empty() {
            return Err(SidonError::EmptySet);
        }
        let mut counts: HashMap<Rational, u64> = HashMap::new();
        self.for_each_tuple(form, set, |_, v| {
            *counts.entry(v).or_insert(0) += 1;
            true
        })?;
        Ok(RepresentationProfile {
            counts: counts.into_iter().collect(),
            arity: form.arity(),
            set_size: set.len(),
        })
    }

    /// Whether every value has at most `order` representations.
    pub fn is_sidon_of_order(
        &self,
        form: &LinearForm,
        set: &RationalSet,
        order: u64,
    ) -> Result<bool> {
        if order < 1 {
            return Err(SidonError::InvalidOrder);
        }
        if set.is_empty() {
            return Err(SidonError::EmptySet);
        }
        if order == 1 {
            return self.is_sidon(form, set);
        }
        Ok(self.representation_profile(form, set)?.max_count() <= order)
    }
}

pub fn dilate(set: &RationalSet, c: &Rational) -> RationalSet {
    set.dilate(c)
}

pub fn translate(set: &RationalSet, t: &Rational) -> RationalSet {
    set.translate(t)
}

pub fn phi_image(form: &LinearForm, set: &RationalSet) -> Result<RationalSet> {
    Enumerator::default().phi_image(form, set)
}

pub fn is_sidon(form: &LinearForm, set: &RationalSet) -> Result<bool> {
    Enumerator::default().is_sidon(form, set)
}

pub fn find_collision(form: &LinearForm, set: &RationalSet) -> Result<Option<Collision>> {
    Enumerator::default().find_collision(form, set)
}

pub fn representation_profile(
    form: &LinearForm,
    set: &RationalSet,
) -> Result<RepresentationProfile> {
    Enumerator::default().representation_profile(form, set)
}

pub fn is_sidon_of_order(form: &LinearForm, set: &RationalSet, order: u64) -> Result<bool> {
    Enumerator::default().is_sidon_of_order(form, set, order)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn set(s: &str) -> RationalSet {
        s.parse().unwrap()
    }

    fn form(s: &str) -> LinearForm {
        s.parse().unwrap()
    }

    /// Independent oracle: evaluate every tuple with `LinearForm::evaluate`
    /// and compare all pairs directly.
    fn brute_force_sidon(form: &LinearForm, set: &RationalSet) -> bool {
        let tuples = cartesian_power(set.elements(), form.arity());
        let values: Vec<Rational> = tuples.iter().map(|t| form.evaluate(t)).collect();
        for i in 0..values.len() {
            for j in (i + 1)..values.len() {
                if values[i] == values[j] {
                    return false;
                }
            }
        }
        true
    }

    fn cartesian_power(elements: &[Rational], h: usize) -> Vec<Vec<Rational>> {
        let mut out = vec![vec![]];
        for _ in 0..h {
            out = out
                .into_iter()
                .flat_map(|prefix| {
                    elements.iter().map(move |a| {
                        let mut t = prefix.clone();
                        t.push(a.clone());
                        t
                    })
                })
                .collect();
        }
        out
    }

    fn profile_map(pairs: &[(i64, u64)]) -> BTreeMap<Rational, u64> {
        pairs.iter().map(|&(b, n)| (Rational::from(b), n)).collect()
    }

    #[test]
    fn phi_image_examples() {
        assert_eq!(
            phi_image(&form("1,2"), &set("0,1")).unwrap(),
            set("0,1,2,3")
        );
        assert_eq!(phi_image(&form("1,1"), &set("0,1")).unwrap(), set("0,1,2"));
        assert_eq!(
            phi_image(&form("1,4"), &set("1,2,3")).unwrap(),
            set("5,6,7,9,10,11,13,14,15")
        );
    }

    #[test]
    fn image_of_empty_set_is_zero() {
        assert_eq!(
            phi_image(&form("3,5,7"), &RationalSet::empty()).unwrap(),
            set("0")
        );
    }

    #[test]
    fn is_sidon_examples() {
        assert!(is_sidon(&form("1,2"), &set("0,1")).unwrap());
        assert!(!is_sidon(&form("1,1"), &set("0,1")).unwrap());
        assert!(is_sidon(&form("1,4"), &set("1,2,3")).unwrap());
    }

    #[test]
    fn empty_set_is_rejected() {
        let empty = RationalSet::empty();
        assert_eq!(is_sidon(&form("1,2"), &empty), Err(SidonError::EmptySet));
        assert_eq!(
            representation_profile(&form("1,2"), &empty),
            Err(SidonError::EmptySet)
        );
        assert_eq!(
            is_sidon_of_order(&form("1,2"), &empty, 2),
            Err(SidonError::EmptySet)
        );
    }

    #[test]
    fn profile_examples() {
        let p = representation_profile(&form("1,1"), &set("0,1")).unwrap();
        assert_eq!(p.counts(), &profile_map(&[(0, 1), (1, 2), (2, 1)]));
        let p = representation_profile(&form("1,2"), &set("0,1")).unwrap();
        assert_eq!(p.counts(), &profile_map(&[(0, 1), (1, 1), (2, 1), (3, 1)]));
        let p = representation_profile(&form("1,1,1"), &set("0,1")).unwrap();
        assert_eq!(p.counts(), &profile_map(&[(0, 1), (1, 3), (2, 3), (3, 1)]));
        assert_eq!(p.count(&Rational::from(7)), 0);
    }

    #[test]
    fn order_examples() {
        assert!(is_sidon_of_order(&form("1,1"), &set("0,1"), 2).unwrap());
        assert!(!is_sidon_of_order(&form("1,1"), &set("0,1"), 1).unwrap());
        assert!(is_sidon_of_order(&form("1,2"), &set("0,1"), 1).unwrap());
        assert_eq!(
            is_sidon_of_order(&form("1,2"), &set("0,1"), 0),
            Err(SidonError::InvalidOrder)
        );
    }

    #[test]
    fn collision_witness_is_first_in_lexicographic_order() {
        let c = find_collision(&form("1,1"), &set("0,1")).unwrap().unwrap();
        assert_eq!(c.first, vec![Rational::from(0), Rational::from(1)]);
        assert_eq!(c.second, vec![Rational::from(1), Rational::from(0)]);
        assert_eq!(c.value, Rational::from(1));
    }

    #[test]
    fn tuple_ceiling() {
        let e = Enumerator::new(8);
        assert!(e.phi_image(&form("1,2,4"), &set("0,1")).is_ok());
        assert!(matches!(
            e.phi_image(&form("1,2,4"), &set("0,1,2")),
            Err(SidonError::TupleLimit { .. })
        ));
        // 12^20 does not fit in a u64 and must still be reported, not wrapped
        let huge = Enumerator::default().tuple_count(12, 20);
        assert!(
            matches!(huge, Err(SidonError::TupleLimit { tuples, .. }) if tuples == "3833759992447475122176")
        );
    }

    #[test]
    fn singleton_is_sidon_for_every_form() {
        assert!(is_sidon(&form("1,1,1"), &set("5")).unwrap());
    }

    fn small_set() -> impl Strategy<Value = RationalSet> {
        prop::collection::btree_set((-6i64..=6, 1i64..=3), 1..=4).prop_map(|pairs| {
            pairs
                .into_iter()
                .map(|(n, d)| Rational::new(n, d))
                .collect()
        })
    }

    fn small_form(max_arity: usize) -> impl Strategy<Value = LinearForm> {
        prop::collection::vec((1i64..=5, 1i64..=3, any::<bool>()), 1..=max_arity).prop_map(|cs| {
            LinearForm::new(
                cs.into_iter()
                    .map(|(n, d, neg)| Rational::new(if neg { -n } else { n }, d))
                    .collect(),
            )
            .unwrap()
        })
    }

    fn nonzero() -> impl Strategy<Value = Rational> {
        (1i64..=7, 1i64..=4, any::<bool>())
            .prop_map(|(n, d, neg)| Rational::new(if neg { -n } else { n }, d))
    }

    proptest! {
        #[test]
        fn agrees_with_brute_force(a in small_set(), f in small_form(3)) {
            prop_assert_eq!(is_sidon(&f, &a).unwrap(), brute_force_sidon(&f, &a));
        }

        #[test]
        fn profile_sums_to_k_pow_h(a in small_set(), f in small_form(3)) {
            let p = representation_profile(&f, &a).unwrap();
            let k = a.len() as u64;
            prop_assert_eq!(p.total(), k.pow(f.arity() as u32));
            prop_assert_eq!(p.image(), phi_image(&f, &a).unwrap());
            let sidon = is_sidon(&f, &a).unwrap();
            prop_assert_eq!(sidon, p.max_count() == 1);
            prop_assert_eq!(sidon, is_sidon_of_order(&f, &a, 1).unwrap());
            prop_assert_eq!(sidon, phi_image(&f, &a).unwrap().len() as u64 == p.total());
        }

        #[test]
        fn image_commutes_with_dilation(a in small_set(), f in small_form(3), c in nonzero()) {
            let lhs = phi_image(&f, &a.dilate(&c)).unwrap();
            prop_assert_eq!(lhs, phi_image(&f, &a).unwrap().dilate(&c));
            prop_assert_eq!(is_sidon(&f, &a.dilate(&c)).unwrap(), is_sidon(&f, &a).unwrap());
        }

        #[test]
        fn image_commutes_with_translation(a in small_set(), f in small_form(3), t in nonzero()) {
            let shift = &t * f.coefficient_sum();
            let lhs = phi_image(&f, &a.translate(&t)).unwrap();
            prop_assert_eq!(lhs, phi_image(&f, &a).unwrap().translate(&shift));
            prop_assert_eq!(is_sidon(&f, &a.translate(&t)).unwrap(), is_sidon(&f, &a).unwrap());
        }
    }
}
