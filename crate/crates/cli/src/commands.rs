//! One function per subcommand. Each returns a [`Report`] carrying both the
//! plain-text and the JSON rendering; `main` picks one.

use anyhow::{anyhow, bail, Context, Result};
use num_bigint::BigInt;
use serde_json::{json, Value};

use sidon_core::{
    binary_exception_set, exception_arrangement_with, formula_exception_set, g_adic_form,
    growth_form, normalize_set, Enumerator, ExceptionSet, LinearForm, Rational, RationalSet,
    SidonError,
};

use crate::render;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Status {
    Ok,
    /// Two computations that must agree did not.
    Mismatch,
}

#[derive(Debug)]
pub struct Report {
    pub text: String,
    pub json: Value,
    pub status: Status,
}

impl Report {
    fn ok(text: String, json: Value) -> Self {
        Report {
            text,
            json,
            status: Status::Ok,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Method {
    Enumerate,
    Formula,
    Both,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Kind {
    Growth,
    Gadic,
}

pub fn parse_set(literal: &str) -> Result<RationalSet> {
    literal
        .parse()
        .with_context(|| format!("invalid set literal {literal:?}"))
}

pub fn parse_form(literal: &str) -> Result<LinearForm> {
    literal
        .parse()
        .with_context(|| format!("invalid form literal {literal:?}"))
}

pub fn parse_rational(literal: &str) -> Result<Rational> {
    literal
        .parse()
        .with_context(|| format!("invalid rational {literal:?}"))
}

fn require_nonempty(set: &RationalSet) -> Result<()> {
    if set.is_empty() {
        bail!("the set is empty; this command needs at least one element");
    }
    Ok(())
}

pub fn image(set: &RationalSet, form: &LinearForm, enumerator: &Enumerator) -> Result<Report> {
    let image = enumerator.phi_image(form, set)?;
    let sidon = if set.is_empty() {
        None
    } else {
        Some(enumerator.is_sidon(form, set)?)
    };
    let sidon_text = match sidon {
        Some(s) => s.to_string(),
        None => "undefined for the empty set".to_string(),
    };
    let text = format!(
        "form: {form}\nimage: {image}\nsize: {}\nsidon: {sidon_text}\n",
        image.len()
    );
    let json = json!({
        "image": render::set(&image),
        "size": image.len(),
        "sidon": sidon,
    });
    Ok(Report::ok(text, json))
}

pub fn check(
    set: &RationalSet,
    form: &LinearForm,
    order: u64,
    enumerator: &Enumerator,
) -> Result<Report> {
    require_nonempty(set)?;
    if order < 1 {
        return Err(SidonError::InvalidOrder.into());
    }
    let profile = enumerator.representation_profile(form, set)?;
    let max_count = profile.max_count();
    let sidon = max_count <= order;
    let verdict = match (sidon, order) {
        (true, 1) => "SIDON".to_string(),
        (false, 1) => "NOT-SIDON".to_string(),
        (true, g) => format!("SIDON(order {g})"),
        (false, g) => format!("NOT-SIDON(order {g})"),
    };
    let witness = if sidon {
        None
    } else {
        enumerator.find_collision(form, set)?
    };

    let mut text = format!("{verdict}\nmax count: {max_count}\n");
    if let Some(c) = &witness {
        text.push_str(&format!(
            "witness: {}≡{} (value {})\n",
            render::tuple(&c.first),
            render::tuple(&c.second),
            c.value
        ));
    }
    let json = json!({
        "verdict": verdict,
        "sidon": sidon,
        "order": order,
        "max_count": max_count,
        "witness": witness.as_ref().map(render::collision),
    });
    Ok(Report::ok(text, json))
}

fn formula(set: &RationalSet) -> Result<ExceptionSet> {
    formula_exception_set(set).map_err(|e| match e {
        SidonError::NotNormalized => anyhow!(
            "{e}; the closed forms apply to normalized sets only, run `sidon normalize --set {:?}` first",
            set.literal()
        ),
        SidonError::UnsupportedSize(_) => {
            anyhow!("{e}; use --method enumerate for larger sets")
        }
        other => other.into(),
    })
}

pub fn exceptions(set: &RationalSet, method: Method) -> Result<Report> {
    let (primary, matched) = match method {
        Method::Enumerate => (binary_exception_set(set)?, None),
        Method::Formula => (formula(set)?, None),
        Method::Both => {
            let enumerated = binary_exception_set(set)?;
            let closed = formula(set)?;
            let matched = enumerated == closed;
            (enumerated, Some(matched))
        }
    };
    let method_name = match method {
        Method::Enumerate => "enumerate",
        Method::Formula => "formula",
        Method::Both => "both",
    };
    let mut text = format!(
        "exceptions: {}\ncount: {}\nzero also collides: {}\n",
        primary.values(),
        primary.len(),
        primary.includes_zero_note()
    );
    if let Some(m) = matched {
        text.push_str(if m { "MATCH\n" } else { "MISMATCH\n" });
    }
    let mut json = json!({
        "method": method_name,
        "values": render::set(primary.values()),
        "count": primary.len(),
        "zero_note": primary.includes_zero_note(),
    });
    if let Some(m) = matched {
        json["match"] = json!(m);
    }
    Ok(Report {
        text,
        json,
        status: if matched == Some(false) {
            Status::Mismatch
        } else {
            Status::Ok
        },
    })
}

pub fn hyperplanes(set: &RationalSet, arity: usize, enumerator: &Enumerator) -> Result<Report> {
    let arr = exception_arrangement_with(set, arity, enumerator)?;
    let mut text = String::new();
    for v in arr.vectors() {
        text.push_str(&render::vector(v));
        text.push('\n');
    }
    let vectors: Vec<Value> = arr
        .vectors()
        .map(|v| Value::Array(v.iter().map(render::integer).collect()))
        .collect();
    let json = json!({
        "arity": arr.arity(),
        "vectors": vectors,
    });
    Ok(Report::ok(text, json))
}

pub fn construct(
    set: &RationalSet,
    kind: Kind,
    arity: usize,
    base: Option<BigInt>,
    enumerator: &Enumerator,
) -> Result<Report> {
    let (form, kind_name) = match kind {
        Kind::Growth => (growth_form(set, arity)?, "growth"),
        Kind::Gadic => {
            let form = g_adic_form(set, arity, base).map_err(|e| match e {
                SidonError::NotPositiveInteger(_) | SidonError::EmptySet => anyhow!(
                    "{e}; the g-adic construction needs a nonempty set of positive integers"
                ),
                other => other.into(),
            })?;
            (form, "gadic")
        }
    };
    let confirmed = enumerator.is_sidon(&form, set)?;
    let mut text = format!("form: {form}\ncoefficients: {}\n", form.literal());
    text.push_str(&if confirmed {
        format!("SIDON confirmed on {set}\n")
    } else {
        format!("NOT-SIDON on {set}: construction check failed\n")
    });
    let json = json!({
        "kind": kind_name,
        "coefficients": render::rationals(form.coefficients()),
        "sidon": confirmed,
    });
    Ok(Report {
        text,
        json,
        status: if confirmed {
            Status::Ok
        } else {
            Status::Mismatch
        },
    })
}

pub fn normalize(set: &RationalSet, a0: Option<Rational>, a1: Option<Rational>) -> Result<Report> {
    if set.len() < 2 {
        bail!("need at least two elements to normalize, got {}", set.len());
    }
    let a0 = a0.unwrap_or_else(|| set.elements()[0].clone());
    let a1 = match a1 {
        Some(a1) => a1,
        None => set
            .iter()
            .find(|x| **x != a0)
            .cloned()
            .expect("two distinct elements"),
    };
    let (normalized, map) = normalize_set(set, &a0, &a1)?;
    let text = format!(
        "normalized: {normalized}\nscale: {}\noffset: {}\n",
        map.scale(),
        map.offset()
    );
    let json = json!({
        "normalized": render::set(&normalized),
        "scale": render::rational(map.scale()),
        "offset": render::rational(map.offset()),
    });
    Ok(Report::ok(text, json))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(s: &str) -> RationalSet {
        parse_set(s).unwrap()
    }

    fn form(s: &str) -> LinearForm {
        parse_form(s).unwrap()
    }

    #[test]
    fn image_json_shape() {
        let r = image(&set("0,1"), &form("1,2"), &Enumerator::default()).unwrap();
        assert_eq!(
            r.json,
            json!({"image": ["0", "1", "2", "3"], "size": 4, "sidon": true})
        );
        let r = image(&set(""), &form("1,1"), &Enumerator::default()).unwrap();
        assert_eq!(r.json, json!({"image": ["0"], "size": 1, "sidon": null}));
    }

    #[test]
    fn check_reports_witness() {
        let r = check(&set("0,1"), &form("1,1"), 1, &Enumerator::default()).unwrap();
        assert!(r
            .text
            .starts_with("NOT-SIDON\nmax count: 2\nwitness: (0,1)≡(1,0)"));
        let r = check(&set("0,1"), &form("1,1"), 2, &Enumerator::default()).unwrap();
        assert!(r.text.starts_with("SIDON(order 2)"));
        assert_eq!(r.json["witness"], Value::Null);
    }

    #[test]
    fn normalize_defaults_and_partial_anchor() {
        let r = normalize(&set("2,5,11"), None, None).unwrap();
        assert_eq!(
            r.json,
            json!({"normalized": ["0", "1", "3"], "scale": "3", "offset": "2"})
        );
        // a1 defaults to the smallest element other than a0
        let r = normalize(&set("2,5,11"), Some(Rational::from(5)), None).unwrap();
        assert_eq!(r.json["normalized"], json!(["-2", "0", "1"]));
    }

    #[test]
    fn formula_error_mentions_normalize() {
        let err = exceptions(&set("2,5,11"), Method::Formula).unwrap_err();
        assert!(err.to_string().contains("sidon normalize"));
    }
}
