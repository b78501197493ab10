use num_bigint::BigInt;
use num_traits::ToPrimitive;
use serde_json::{json, Value};

use sidon_core::{Collision, Rational, RationalSet};

pub fn rational(r: &Rational) -> Value {
    Value::String(r.to_string())
}

pub fn rationals<'a>(values: impl IntoIterator<Item = &'a Rational>) -> Value {
    Value::Array(values.into_iter().map(rational).collect())
}

pub fn set(s: &RationalSet) -> Value {
    rationals(s.iter())
}

/// JSON integer when it fits in an i64, otherwise its decimal string.
pub fn integer(n: &BigInt) -> Value {
    match n.to_i64() {
        Some(v) => json!(v),
        None => Value::String(n.to_string()),
    }
}

pub fn tuple(values: &[Rational]) -> String {
    let parts: Vec<String> = values.iter().map(ToString::to_string).collect();
    format!("({})", parts.join(","))
}

pub fn vector(values: &[BigInt]) -> String {
    let parts: Vec<String> = values.iter().map(ToString::to_string).collect();
    format!("({})", parts.join(", "))
}

pub fn collision(c: &Collision) -> Value {
    json!({
        "first": rationals(&c.first),
        "second": rationals(&c.second),
        "value": rational(&c.value),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn big_integers_fall_back_to_strings() {
        assert_eq!(integer(&BigInt::from(-7)), json!(-7));
        let big: BigInt = "123456789012345678901234567890".parse().unwrap();
        assert_eq!(integer(&big), json!("123456789012345678901234567890"));
    }

    #[test]
    fn tuples_and_vectors() {
        assert_eq!(tuple(&[Rational::from(0), Rational::new(1, 2)]), "(0,1/2)");
        assert_eq!(vector(&[BigInt::from(1), BigInt::from(-1)]), "(1, -1)");
    }
}
