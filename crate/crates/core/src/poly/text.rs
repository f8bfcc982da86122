//! JSON text format for polynomials.
//!
//! ```json
//! {"coeffs": ["-1/1", "0/1", "1/1"], "degree": 2}
//! {"roots": ["1/2", 3, "-0.25"]}
//! ```
//!
//! `coeffs` are ascending in power and round-trip exactly. `roots` builds
//! the monic polynomial with those roots. Numbers are read from their
//! decimal text, so `0.1` means one tenth.

use serde_json::{json, Map, Value};

use super::Polynomial;
use crate::error::{Error, Result};
use crate::rational;

pub fn parse(text: &str) -> Result<Polynomial> {
    let value: Value =
        serde_json::from_str(text).map_err(|e| Error::Parse(format!("invalid JSON: {e}")))?;
    from_value(&value)
}

pub fn from_value(value: &Value) -> Result<Polynomial> {
    let obj = value
        .as_object()
        .ok_or_else(|| Error::Parse("expected a JSON object".into()))?;
    let p = match (obj.get("coeffs"), obj.get("roots")) {
        (Some(c), None) => Polynomial::new(number_list(c, "coeffs")?),
        (None, Some(r)) => Polynomial::from_roots(&number_list(r, "roots")?),
        (Some(_), Some(_)) => {
            return Err(Error::Parse(
                "give either \"coeffs\" or \"roots\", not both".into(),
            ))
        }
        (None, None) => return Err(Error::Parse("missing \"coeffs\" or \"roots\"".into())),
    };
    if let Some(d) = obj.get("degree") {
        let d = d
            .as_u64()
            .ok_or_else(|| Error::Parse("\"degree\" must be a non-negative integer".into()))?;
        if p.degree() != Some(d as usize) {
            return Err(Error::degree(format!(
                "declared degree {d}, polynomial has degree {}",
                p.degree().map_or("-inf".to_string(), |k| k.to_string())
            )));
        }
    }
    Ok(p)
}

fn number_list(value: &Value, key: &str) -> Result<Vec<num_rational::BigRational>> {
    let items = value
        .as_array()
        .ok_or_else(|| Error::Parse(format!("\"{key}\" must be an array")))?;
    items
        .iter()
        .map(|v| match v {
            Value::String(s) => rational::parse(s),
            Value::Number(n) => rational::parse(&n.to_string()),
            _ => Err(Error::Parse(format!(
                "\"{key}\" entries must be strings or numbers"
            ))),
        })
        .collect()
}

/// The `coeffs` form, with `degree` included for non-zero polynomials.
pub fn to_value(p: &Polynomial) -> Value {
    let mut obj = Map::new();
    obj.insert(
        "coeffs".into(),
        Value::Array(
            p.coeffs()
                .iter()
                .map(|c| json!(rational::format(c)))
                .collect(),
        ),
    );
    if let Some(d) = p.degree() {
        obj.insert("degree".into(), json!(d));
    }
    Value::Object(obj)
}

pub fn to_string(p: &Polynomial) -> String {
    serde_json::to_string(&to_value(p)).expect("JSON values always serialize")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::ratio;
    use proptest::prelude::*;

    #[test]
    fn coeffs_form() {
        let p = parse(r#"{"coeffs": ["-1/1", "0", "1/1"], "degree": 2}"#).unwrap();
        assert_eq!(p, Polynomial::from_i64s(&[-1, 0, 1]));
        assert_eq!(
            to_string(&p),
            r#"{"coeffs":["-1/1","0/1","1/1"],"degree":2}"#
        );
    }

    #[test]
    fn roots_form() {
        let p = parse(r#"{"roots": ["1/2", 3, 0.1]}"#).unwrap();
        let expected = Polynomial::from_roots(&[ratio(1, 2), ratio(3, 1), ratio(1, 10)]);
        assert_eq!(p, expected);
    }

    #[test]
    fn rejects_bad_input() {
        assert!(matches!(parse("[1,2]"), Err(Error::Parse(_))));
        assert!(matches!(parse("{}"), Err(Error::Parse(_))));
        assert!(matches!(
            parse(r#"{"coeffs": ["a/b"]}"#),
            Err(Error::Parse(_))
        ));
        assert!(matches!(
            parse(r#"{"coeffs": [true]}"#),
            Err(Error::Parse(_))
        ));
        assert!(matches!(
            parse(r#"{"coeffs": ["1", "1"], "degree": 3}"#),
            Err(Error::DegreeMismatch(_))
        ));
        assert!(matches!(parse("{"), Err(Error::Parse(_))));
    }

    #[test]
    fn zero_polynomial_round_trips() {
        let z = Polynomial::zero();
        assert_eq!(parse(&to_string(&z)).unwrap(), z);
    }

    proptest! {
        #[test]
        fn coeffs_round_trip(c in prop::collection::vec((-50i64..50, 1i64..30), 0..8)) {
            let p = Polynomial::new(c.iter().map(|&(n, d)| ratio(n, d)).collect());
            prop_assert_eq!(parse(&to_string(&p)).unwrap(), p);
        }
    }
}
