//! JSON forms of coefficients and expansions.
//!
//! A Laurent polynomial is an object keyed by `"a,b"` for the monomial
//! `v^a s^b`, with integer values; a rational function is
//! `{"num": .., "den": ..}`; an expansion is
//! `{"basis": "A", "terms": [{"partition": [2,1], "coeff": ..}, ..]}`
//! with terms in descending partition order.

use std::str::FromStr;

use num_bigint::BigInt;
use serde_json::{json, Map, Number, Value};

use skeinkit_core::partitions::Partition;
use skeinkit_core::ring::{LaurentPoly, RatFunc};
use skeinkit_core::symfunc::{Basis, BasisExpansion, Combination};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("malformed JSON: {0}")]
pub struct JsonError(pub String);

fn bad(msg: impl Into<String>) -> JsonError {
    JsonError(msg.into())
}

pub fn poly_to_json(p: &LaurentPoly) -> Value {
    let mut map = Map::new();
    let mut terms: Vec<_> = p.terms().collect();
    terms.reverse();
    for ((a, b), c) in terms {
        let n = Number::from_str(&c.to_string()).expect("integers are JSON numbers");
        map.insert(format!("{a},{b}"), Value::Number(n));
    }
    Value::Object(map)
}

pub fn ratfunc_to_json(c: &RatFunc) -> Value {
    json!({ "num": poly_to_json(c.numerator()), "den": poly_to_json(c.denominator()) })
}

pub fn expansion_to_json(e: &BasisExpansion) -> Value {
    let terms: Vec<Value> = e
        .terms
        .iter_desc()
        .map(|(lambda, c)| json!({ "partition": lambda.parts(), "coeff": ratfunc_to_json(c) }))
        .collect();
    json!({ "basis": e.basis.tag(), "terms": terms })
}

pub fn poly_from_json(v: &Value) -> Result<LaurentPoly, JsonError> {
    let map = v.as_object().ok_or_else(|| bad("polynomial must be an object"))?;
    let mut p = LaurentPoly::zero();
    for (key, c) in map {
        let (a, b) = key.split_once(',').ok_or_else(|| bad(format!("key `{key}` is not `a,b`")))?;
        let a: i32 = a.trim().parse().map_err(|_| bad(format!("bad exponent in `{key}`")))?;
        let b: i32 = b.trim().parse().map_err(|_| bad(format!("bad exponent in `{key}`")))?;
        let c = match c {
            Value::Number(n) => BigInt::from_str(&n.to_string()).map_err(|_| bad(format!("`{n}` is not an integer")))?,
            _ => return Err(bad(format!("coefficient of `{key}` is not a number"))),
        };
        p.add_term((a, b), c);
    }
    Ok(p)
}

pub fn ratfunc_from_json(v: &Value) -> Result<RatFunc, JsonError> {
    let num = poly_from_json(v.get("num").ok_or_else(|| bad("missing `num`"))?)?;
    let den = poly_from_json(v.get("den").ok_or_else(|| bad("missing `den`"))?)?;
    RatFunc::new(num, den).map_err(|e| bad(e.to_string()))
}

pub fn expansion_from_json(v: &Value) -> Result<BasisExpansion, JsonError> {
    let basis: Basis = v
        .get("basis")
        .and_then(Value::as_str)
        .ok_or_else(|| bad("missing `basis`"))?
        .parse()
        .map_err(|e: skeinkit_core::Error| bad(e.to_string()))?;
    let mut terms = Combination::zero();
    for t in v.get("terms").and_then(Value::as_array).ok_or_else(|| bad("missing `terms`"))? {
        let parts = t
            .get("partition")
            .and_then(Value::as_array)
            .ok_or_else(|| bad("missing `partition`"))?
            .iter()
            .map(|x| x.as_u64().map(|n| n as usize).ok_or_else(|| bad("parts must be integers")))
            .collect::<Result<Vec<_>, _>>()?;
        let lambda = Partition::new(parts).map_err(|e| bad(e.to_string()))?;
        terms.add_term(lambda, ratfunc_from_json(t.get("coeff").ok_or_else(|| bad("missing `coeff`"))?)?);
    }
    Ok(BasisExpansion::new(basis, terms))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ratfunc_shape() {
        let c = RatFunc::z().inv().unwrap();
        let v = ratfunc_to_json(&c);
        assert_eq!(v, json!({ "num": { "0,1": 1 }, "den": { "0,2": 1, "0,0": -1 } }));
        assert_eq!(ratfunc_from_json(&v).unwrap(), c);
    }

    #[test]
    fn big_coefficients_survive() {
        let big = BigInt::from(10).pow(40) + 7;
        let p = LaurentPoly::monomial(big, -3, 2);
        assert_eq!(poly_from_json(&poly_to_json(&p)).unwrap(), p);
    }

    #[test]
    fn rejects_malformed() {
        assert!(poly_from_json(&json!({ "1": 2 })).is_err());
        assert!(ratfunc_from_json(&json!({ "num": {} })).is_err());
        assert!(ratfunc_from_json(&json!({ "num": {"0,0": 1}, "den": {} })).is_err());
        assert!(expansion_from_json(&json!({ "basis": "q", "terms": [] })).is_err());
        assert!(expansion_from_json(&json!({ "basis": "p", "terms": [{ "partition": [1, 2], "coeff": {"num": {}, "den": {"0,0": 1}} }] })).is_err());
    }
}
