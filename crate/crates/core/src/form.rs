use std::fmt;
use std::str::FromStr;

use crate::error::{Result, SidonError};
use crate::rational::Rational;

/// The linear form `c_1 x_1 + ... + c_h x_h` with every `c_i` nonzero.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct LinearForm {
    coefficients: Vec<Rational>,
}

impl LinearForm {
    pub fn new(coefficients: Vec<Rational>) -> Result<Self> {
        if coefficients.is_empty() {
            return Err(SidonError::EmptyForm);
        }
        if let Some(index) = coefficients.iter().position(Rational::is_zero) {
            return Err(SidonError::ZeroCoefficient { index: index + 1 });
        }
        Ok(LinearForm { coefficients })
    }

    pub fn from_integers(coefficients: impl IntoIterator<Item = i64>) -> Result<Self> {
        LinearForm::new(coefficients.into_iter().map(Rational::from).collect())
    }

    /// The monic binary form `x_1 + c x_2`.
    pub fn binary(c: Rational) -> Result<Self> {
        LinearForm::new(vec![Rational::one(), c])
    }

    pub fn arity(&self) -> usize {
        self.coefficients.len()
    }

    pub fn coefficients(&self) -> &[Rational] {
        &self.coefficients
    }

    pub fn leading(&self) -> &Rational {
        &self.coefficients[0]
    }

    pub fn is_monic(&self) -> bool {
        self.leading().is_one()
    }

    pub fn is_binary(&self) -> bool {
        self.arity() == 2
    }

    pub fn coefficient_sum(&self) -> Rational {
        self.coefficients.iter().sum()
    }

    /// Evaluates the form at `point`. Panics if the lengths differ.
    pub fn evaluate(&self, point: &[Rational]) -> Rational {
        assert_eq!(point.len(), self.arity(), "point length must equal arity");
        self.coefficients
            .iter()
            .zip(point)
            .map(|(c, x)| c * x)
            .sum()
    }

    /// Comma-separated coefficients, the inverse of [`FromStr`].
    pub fn literal(&self) -> String {
        self.coefficients
            .iter()
            .map(ToString::to_string)
            .collect::<Vec<_>>()
            .join(",")
    }
}

/// Renders as `x1 + 2*x2 - 1/2*x3`.
impl fmt::Display for LinearForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, c) in self.coefficients.iter().enumerate() {
            let var = i + 1;
            let magnitude = c.abs();
            if i == 0 {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            if magnitude.is_one() {
                write!(f, "x{var}")?;
            } else {
                write!(f, "{magnitude}*x{var}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for LinearForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LinearForm({self})")
    }
}

impl FromStr for LinearForm {
    type Err = SidonError;

    fn from_str(s: &str) -> Result<Self> {
        let body = s.trim();
        if body.is_empty() {
            return Err(SidonError::EmptyForm);
        }
        let coefficients = body
            .split(',')
            .map(str::parse::<Rational>)
            .collect::<Result<Vec<_>>>()?;
        LinearForm::new(coefficients)
    }
}
