//! Forms that are Sidon on a given set by construction.
//!
//! * The growth form takes `c_1 = 1` and each later `c_j` as the least
//!   positive integer with `c_j > (Δ/δ) Σ_{i<j} c_i`, where `δ` and `Δ` are the
//!   smallest and largest gaps of `A`. At the last index where two tuples
//!   differ, the `c_j` term outweighs everything before it.
//! * The g-adic form `x_1 + g x_2 + ... + g^{h-1} x_h` with `g > max(A)` reads
//!   a tuple of positive integers as base-`g` digits.

use num_bigint::BigInt;
use num_traits::One;

use crate::error::{Result, SidonError};
use crate::form::LinearForm;
use crate::rational::Rational;
use crate::set::RationalSet;

/// Smallest and largest distance between distinct elements.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GapStats {
    pub delta: Rational,
    pub big_delta: Rational,
}

impl GapStats {
    /// `Δ/δ`, at least 1.
    pub fn ratio(&self) -> Rational {
        &self.big_delta / &self.delta
    }
}

pub fn gap_stats(set: &RationalSet) -> Result<GapStats> {
    let elems = set.elements();
    if elems.len() < 2 {
        return Err(SidonError::TooFewElements {
            required: 2,
            actual: elems.len(),
        });
    }
    // sorted, so the closest pair is adjacent and the farthest is the span
    let delta = elems
        .windows(2)
        .map(|w| &w[1] - &w[0])
        .min()
        .expect("at least one gap");
    let big_delta = &elems[elems.len() - 1] - &elems[0];
    Ok(GapStats { delta, big_delta })
}

fn check_arity(arity: usize) -> Result<()> {
    if arity < 2 {
        return Err(SidonError::ArityTooSmall {
            required: 2,
            actual: arity,
        });
    }
    Ok(())
}

/// The first `len` terms of the minimal integer growth sequence for `set`.
pub fn growth_sequence(set: &RationalSet, len: usize) -> Result<Vec<Rational>> {
    let ratio = gap_stats(set)?.ratio();
    let mut coefficients = Vec::with_capacity(len);
    let mut partial_sum = Rational::zero();
    for j in 0..len {
        let c = if j == 0 {
            Rational::one()
        } else {
            Rational::from((&ratio * &partial_sum).floor() + BigInt::one())
        };
        partial_sum = partial_sum + &c;
        coefficients.push(c);
    }
    Ok(coefficients)
}

pub fn growth_form(set: &RationalSet, arity: usize) -> Result<LinearForm> {
    check_arity(arity)?;
    LinearForm::new(growth_sequence(set, arity)?)
}

/// `x_1 + g x_2 + ... + g^{h-1} x_h`; `g` defaults to `max(A) + 1`.
pub fn g_adic_form(set: &RationalSet, arity: usize, base: Option<BigInt>) -> Result<LinearForm> {
    check_arity(arity)?;
    let max = set.max().ok_or(SidonError::EmptySet)?;
    if let Some(bad) = set.iter().find(|a| !a.is_integer() || !a.is_positive()) {
        return Err(SidonError::NotPositiveInteger(bad.clone()));
    }
    let g = match base {
        Some(g) => Rational::from(g),
        None => max + Rational::one(),
    };
    if &g <= max {
        return Err(SidonError::BaseTooSmall {
            g: g.to_string(),
            max: max.to_string(),
        });
    }
    LinearForm::new((0..arity as u32).map(|i| g.pow(i)).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::image::{is_sidon, phi_image};
    use proptest::prelude::*;

    fn q(s: &str) -> Rational {
        s.parse().unwrap()
    }

    fn set(s: &str) -> RationalSet {
        s.parse().unwrap()
    }

    fn form(s: &str) -> LinearForm {
        s.parse().unwrap()
    }

    /// Oracle: all `k^h` values are pairwise distinct, by sorting a vector
    /// of evaluations built with `LinearForm::evaluate`.
    fn distinct_values(f: &LinearForm, a: &RationalSet) -> bool {
        let mut tuples: Vec<Vec<Rational>> = vec![vec![]];
        for _ in 0..f.arity() {
            tuples = tuples
                .into_iter()
                .flat_map(|t| {
                    a.iter().map(move |x| {
                        let mut t = t.clone();
                        t.push(x.clone());
                        t
                    })
                })
                .collect();
        }
        let mut values: Vec<Rational> = tuples.iter().map(|t| f.evaluate(t)).collect();
        values.sort();
        values.windows(2).all(|w| w[0] != w[1])
    }

    #[test]
    fn gap_stats_examples() {
        assert_eq!(
            gap_stats(&set("0,1")).unwrap(),
            GapStats {
                delta: q("1"),
                big_delta: q("1")
            }
        );
        assert_eq!(
            gap_stats(&set("0,1,4")).unwrap(),
            GapStats {
                delta: q("1"),
                big_delta: q("4")
            }
        );
        assert_eq!(
            gap_stats(&set("0,1/2,2")).unwrap(),
            GapStats {
                delta: q("1/2"),
                big_delta: q("2")
            }
        );
        assert_eq!(
            gap_stats(&set("3")),
            Err(SidonError::TooFewElements {
                required: 2,
                actual: 1
            })
        );
    }

    #[test]
    fn growth_examples() {
        for (s, h, expected) in [
            ("0,1", 3, "1,2,4"),
            ("0,1,4", 3, "1,5,25"),
            ("0,1/2,2", 2, "1,5"),
        ] {
            let a = set(s);
            let f = growth_form(&a, h).unwrap();
            assert_eq!(f, form(expected));
            assert!(distinct_values(&f, &a));
            assert!(is_sidon(&f, &a).unwrap());
        }
    }

    #[test]
    fn growth_uses_strict_inequality() {
        // Δ/δ = 1 and Σ = 1, so c_2 must be 2, not 1; x1 + x2 fails on {0,1}
        assert_eq!(growth_form(&set("0,1"), 2).unwrap(), form("1,2"));
        assert!(!is_sidon(&form("1,1"), &set("0,1")).unwrap());
    }

    #[test]
    fn g_adic_examples() {
        let a = set("1,2,3");
        let f = g_adic_form(&a, 2, Some(BigInt::from(4))).unwrap();
        assert_eq!(f, form("1,4"));
        assert_eq!(phi_image(&f, &a).unwrap().len(), 9);

        let f = g_adic_form(&a, 3, Some(BigInt::from(4))).unwrap();
        assert_eq!(f, form("1,4,16"));
        assert!(distinct_values(&f, &a));

        assert_eq!(
            g_adic_form(&set("1"), 2, Some(BigInt::from(2))).unwrap(),
            form("1,2")
        );
        assert_eq!(g_adic_form(&a, 2, None).unwrap(), form("1,4"));
    }

    #[test]
    fn g_adic_errors() {
        assert_eq!(
            g_adic_form(&set("0,1"), 2, None),
            Err(SidonError::NotPositiveInteger(q("0")))
        );
        assert_eq!(
            g_adic_form(&set("1/2,3"), 2, None),
            Err(SidonError::NotPositiveInteger(q("1/2")))
        );
        assert_eq!(
            g_adic_form(&set("1,2,3"), 2, Some(BigInt::from(3))),
            Err(SidonError::BaseTooSmall {
                g: "3".into(),
                max: "3".into()
            })
        );
        assert_eq!(
            g_adic_form(&RationalSet::empty(), 2, None),
            Err(SidonError::EmptySet)
        );
        assert_eq!(
            g_adic_form(&set("1,2"), 1, None),
            Err(SidonError::ArityTooSmall {
                required: 2,
                actual: 1
            })
        );
    }

    fn rational_set() -> impl Strategy<Value = RationalSet> {
        prop::collection::btree_set((-20i64..=20, 1i64..=6), 2..=4)
            .prop_map(|p| {
                p.into_iter()
                    .map(|(n, d)| Rational::new(n, d))
                    .collect::<RationalSet>()
            })
            .prop_filter("need two elements", |s| s.len() >= 2)
    }

    proptest! {
        #[test]
        fn growth_form_is_sidon(a in rational_set(), h in 2usize..=3) {
            prop_assert!(is_sidon(&growth_form(&a, h).unwrap(), &a).unwrap());
        }

        #[test]
        fn growth_prefix_property(a in rational_set(), h in 2usize..=6) {
            let long = growth_form(&a, h).unwrap();
            for j in 2..=h {
                let short = growth_form(&a, j).unwrap();
                prop_assert_eq!(short.coefficients(), &long.coefficients()[..j]);
            }
        }
    }
}
