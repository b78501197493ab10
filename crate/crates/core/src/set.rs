use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use crate::error::{Result, SidonError};
use crate::rational::Rational;

/// A finite set of rationals, kept strictly increasing.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct RationalSet {
    elements: Vec<Rational>,
}

impl RationalSet {
    pub fn empty() -> Self {
        RationalSet::default()
    }

    /// Builds a set from values that must already be pairwise distinct.
    pub fn from_distinct(values: impl IntoIterator<Item = Rational>) -> Result<Self> {
        let mut elements: Vec<Rational> = values.into_iter().collect();
        elements.sort();
        if let Some(w) = elements.windows(2).find(|w| w[0] == w[1]) {
            return Err(SidonError::DuplicateElement(w[0].clone()));
        }
        Ok(RationalSet { elements })
    }

    /// Builds a set from integers, collapsing repeats.
    pub fn from_integers(values: impl IntoIterator<Item = i64>) -> Self {
        values.into_iter().map(Rational::from).collect()
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn elements(&self) -> &[Rational] {
        &self.elements
    }

    pub fn iter(&self) -> std::slice::Iter<'_, Rational> {
        self.elements.iter()
    }

    pub fn contains(&self, value: &Rational) -> bool {
        self.elements.binary_search(value).is_ok()
    }

    pub fn min(&self) -> Option<&Rational> {
        self.elements.first()
    }

    pub fn max(&self) -> Option<&Rational> {
        self.elements.last()
    }

    pub fn is_subset(&self, other: &RationalSet) -> bool {
        self.elements.iter().all(|x| other.contains(x))
    }

    pub fn union(&self, other: &RationalSet) -> RationalSet {
        self.iter().chain(other.iter()).cloned().collect()
    }

    /// Elements of `self` not in `other`.
    pub fn difference(&self, other: &RationalSet) -> RationalSet {
        RationalSet {
            elements: self
                .iter()
                .filter(|x| !other.contains(x))
                .cloned()
                .collect(),
        }
    }

    /// The same set without zero.
    pub fn without_zero(&self) -> RationalSet {
        self.difference(&RationalSet::from_integers([0]))
    }

    /// `c * A`. A zero dilate of a nonempty set collapses to `{0}`.
    pub fn dilate(&self, c: &Rational) -> RationalSet {
        self.iter().map(|a| c * a).collect()
    }

    /// `A + t`.
    pub fn translate(&self, t: &Rational) -> RationalSet {
        // Translation is monotone, so the order is preserved.
        RationalSet {
            elements: self.iter().map(|a| a + t).collect(),
        }
    }

    /// Comma-separated elements, the inverse of [`FromStr`].
    pub fn literal(&self) -> String {
        self.elements
            .iter()
            .map(ToString::to_string)
            .collect::<Vec<_>>()
            .join(",")
    }
}

impl FromIterator<Rational> for RationalSet {
    fn from_iter<I: IntoIterator<Item = Rational>>(iter: I) -> Self {
        let set: BTreeSet<Rational> = iter.into_iter().collect();
        RationalSet {
            elements: set.into_iter().collect(),
        }
    }
}

impl<'a> IntoIterator for &'a RationalSet {
    type Item = &'a Rational;
    type IntoIter = std::slice::Iter<'a, Rational>;

    fn into_iter(self) -> Self::IntoIter {
        self.elements.iter()
    }
}

impl IntoIterator for RationalSet {
    type Item = Rational;
    type IntoIter = std::vec::IntoIter<Rational>;

    fn into_iter(self) -> Self::IntoIter {
        self.elements.into_iter()
    }
}

impl fmt::Display for RationalSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, x) in self.elements.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{x}")?;
        }
        write!(f, "}}")
    }
}

impl fmt::Debug for RationalSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Parses a comma-separated list of rationals, optionally wrapped in braces.
/// The empty string is the empty set; repeated values are rejected.
impl FromStr for RationalSet {
    type Err = SidonError;

    fn from_str(s: &str) -> Result<Self> {
        let body = s.trim();
        let body = body
            .strip_prefix('{')
            .and_then(|b| b.strip_suffix('}'))
            .unwrap_or(body)
            .trim();
        if body.is_empty() {
            return Ok(RationalSet::empty());
        }
        let values = body
            .split(',')
            .map(str::parse::<Rational>)
            .collect::<Result<Vec<_>>>()?;
        RationalSet::from_distinct(values)
    }
}
