//! JSON encodings. Rationals are `"num/den"` strings; a number-field
//! element is a nested array whose outer index is the power of the top
//! generator and whose innermost index is the power of the bottom one.

use num_bigint::BigInt;
use num_rational::BigRational;
use serde_json::{json, Value};

use crate::error::{ExactError, Result};
use crate::field::Field;
use crate::numfield::{NfElem, NumberField};
use crate::poly::{Poly, PolyRing};

pub fn rational_to_json(q: &BigRational) -> Value {
    Value::String(format!("{}/{}", q.numer(), q.denom()))
}

pub fn parse_rational(s: &str) -> Result<BigRational> {
    let bad = || ExactError::Parse(format!("not a rational: {s:?}"));
    let s = s.trim();
    match s.split_once('/') {
        Some((n, d)) => {
            let n: BigInt = n.trim().parse().map_err(|_| bad())?;
            let d: BigInt = d.trim().parse().map_err(|_| bad())?;
            if d == BigInt::from(0) {
                return Err(bad());
            }
            Ok(BigRational::new(n, d))
        }
        None => Ok(BigRational::from_integer(s.parse().map_err(|_| bad())?)),
    }
}

pub fn rational_from_json(v: &Value) -> Result<BigRational> {
    match v {
        Value::String(s) => parse_rational(s),
        Value::Number(n) if n.is_i64() => Ok(BigRational::from_integer(n.as_i64().unwrap().into())),
        _ => Err(ExactError::Parse(format!("expected a rational string, got {v}"))),
    }
}

pub fn elem_to_json(field: &NumberField, a: &NfElem) -> Value {
    match field.base() {
        None => rational_to_json(&a.coords()[0]),
        Some(base) => Value::Array(field.coords_over(base, a).iter().map(|c| elem_to_json(base, c)).collect()),
    }
}

pub fn elem_from_json(field: &NumberField, v: &Value) -> Result<NfElem> {
    match field.base() {
        None => Ok(field.from_rational(&rational_from_json(v)?)),
        Some(base) => {
            let arr = v
                .as_array()
                .ok_or_else(|| ExactError::Parse(format!("expected an array for an element of {}", field.label())))?;
            if arr.len() != field.degree() {
                return Err(ExactError::Parse(format!(
                    "element of {} needs {} coefficients, got {}",
                    field.label(),
                    field.degree(),
                    arr.len()
                )));
            }
            let parts = arr.iter().map(|x| elem_from_json(base, x)).collect::<Result<Vec<_>>>()?;
            Ok(field.from_coords_over(base, &parts))
        }
    }
}

/// Ascending list of coefficients.
pub fn poly_to_json(field: &NumberField, p: &Poly<NfElem>) -> Value {
    Value::Array(p.coeffs().iter().map(|c| elem_to_json(field, c)).collect())
}

pub fn poly_from_json(field: &NumberField, v: &Value) -> Result<Poly<NfElem>> {
    let arr = v.as_array().ok_or_else(|| ExactError::Parse("expected a coefficient array".into()))?;
    let coeffs = arr.iter().map(|x| elem_from_json(field, x)).collect::<Result<Vec<_>>>()?;
    Ok(PolyRing::new(field.clone()).from_coeffs(coeffs))
}

/// Description of a tower: label, relative degree and defining polynomial
/// of every level above `Q`, bottom first.
pub fn tower_to_json(field: &NumberField) -> Value {
    let levels: Vec<Value> = field
        .tower()
        .iter()
        .filter(|f| !f.is_rationals())
        .map(|f| {
            let base = f.base().unwrap();
            json!({
                "label": f.label(),
                "degree": f.degree(),
                "defining_polynomial": poly_to_json(base, &f.defining_polynomial()),
                "display": display_poly(base, &f.defining_polynomial(), f.label()),
            })
        })
        .collect();
    Value::Array(levels)
}

/// Human-readable polynomial in the variable `var`.
pub fn display_poly(field: &NumberField, p: &Poly<NfElem>, var: &str) -> String {
    let mut terms: Vec<String> = Vec::new();
    for (i, c) in p.coeffs().iter().enumerate().rev() {
        if field.is_zero(c) {
            continue;
        }
        let s = field.format(c);
        let simple = c.as_rational().is_some();
        let coeff = if simple { s } else { format!("({s})") };
        let mono = match i {
            0 => String::new(),
            1 => var.to_string(),
            _ => format!("{var}^{i}"),
        };
        terms.push(match (i, coeff.as_str()) {
            (0, _) => coeff.clone(),
            (_, "1") => mono,
            (_, "-1") => format!("-{mono}"),
            _ => format!("{coeff}*{mono}"),
        });
    }
    if terms.is_empty() {
        return "0".into();
    }
    let mut out = terms[0].clone();
    for t in &terms[1..] {
        match t.strip_prefix('-') {
            Some(rest) => {
                out.push_str(" - ");
                out.push_str(rest);
            }
            None => {
                out.push_str(" + ");
                out.push_str(t);
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numfield::{cyclotomic_field, rat};

    #[test]
    fn element_round_trip() {
        let k = cyclotomic_field(5).unwrap();
        let a = k.add(&k.scale_rational(&k.gen(), &rat(-3, 7)), &k.from_i64(2));
        let v = elem_to_json(&k, &a);
        assert_eq!(v, json!(["2/1", "-3/7", "0/1", "0/1"]));
        assert_eq!(elem_from_json(&k, &v).unwrap(), a);
        let text = serde_json::to_string(&v).unwrap();
        let back: Value = serde_json::from_str(&text).unwrap();
        assert_eq!(serde_json::to_string(&back).unwrap(), text);
    }

    #[test]
    fn rejects_wrong_shape() {
        let k = cyclotomic_field(3).unwrap();
        assert!(elem_from_json(&k, &json!(["1/2"])).is_err());
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("x").is_err());
        assert_eq!(parse_rational(" -4 ").unwrap(), rat(-4, 1));
    }
}
