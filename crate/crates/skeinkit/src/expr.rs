//! Element expressions such as `s*Q[2] - (v - v^-1)*A[2,1] + 3*p[1]^2`.
//!
//! Atoms: `p[..]`, `h[..]`, `e[..]`, `A[..]` (multiplicative, parts in any
//! order), `Q[..]` or `s[..]` (Schur; a partition or a hook `(a|b)`),
//! `Abar[m]`, `X[m]`; the scalars `v`, `s`, `z`, `delta` and integers.
//! Operators are `+`, `-`, `*`, `/` (by a scalar) and `^`.

use std::fmt;

use skeinkit_core::partitions::Partition;
use skeinkit_core::ring::{delta_const, RatFunc};
use skeinkit_core::skein::{abar_elem, evaluate_a, x_elem};
use skeinkit_core::symfunc::{complete, elementary, schur, Combination, SymElement};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("at position {pos}: {msg}")]
pub struct ParseError {
    /// Byte offset into the input.
    pub pos: usize,
    pub msg: String,
}

#[derive(Clone, Debug, PartialEq)]
enum Value {
    Scalar(RatFunc),
    Elem(SymElement),
}

impl Value {
    fn into_elem(self) -> SymElement {
        match self {
            Value::Scalar(c) => SymElement::scalar(c),
            Value::Elem(e) => e,
        }
    }
}

impl fmt::Display for Value {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Value::Scalar(c) => write!(f, "{c}"),
            Value::Elem(_) => f.write_str("element"),
        }
    }
}

struct Parser<'a> {
    src: &'a str,
    pos: usize,
}

/// Parses and evaluates `src` to an element of `C+`.
pub fn parse_element(src: &str) -> Result<SymElement, ParseError> {
    let mut p = Parser { src, pos: 0 };
    let v = p.sum()?;
    p.skip_ws();
    if p.pos < src.len() {
        return Err(p.error("unexpected trailing input"));
    }
    Ok(v.into_elem())
}

impl<'a> Parser<'a> {
    fn error(&self, msg: impl Into<String>) -> ParseError {
        ParseError { pos: self.pos, msg: msg.into() }
    }

    fn rest(&self) -> &'a str {
        &self.src[self.pos..]
    }

    fn skip_ws(&mut self) {
        let trimmed = self.rest().trim_start();
        self.pos = self.src.len() - trimmed.len();
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.rest().chars().next()
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(c) {
            self.pos += c.len_utf8();
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: char) -> Result<(), ParseError> {
        if self.eat(c) {
            Ok(())
        } else {
            Err(self.error(format!("expected `{c}`")))
        }
    }

    fn sum(&mut self) -> Result<Value, ParseError> {
        let mut acc = self.product()?;
        loop {
            if self.eat('+') {
                let rhs = self.product()?;
                acc = add(acc, rhs, false);
            } else if self.eat('-') {
                let rhs = self.product()?;
                acc = add(acc, rhs, true);
            } else {
                return Ok(acc);
            }
        }
    }

    fn product(&mut self) -> Result<Value, ParseError> {
        let mut acc = self.unary()?;
        loop {
            if self.eat('*') {
                let rhs = self.unary()?;
                acc = mul(acc, rhs);
            } else if self.peek() == Some('/') {
                let at = self.pos;
                self.pos += 1;
                let rhs = self.unary()?;
                let Value::Scalar(d) = rhs else {
                    return Err(ParseError { pos: at, msg: "can only divide by a scalar".into() });
                };
                let inv = d.inv().ok_or(ParseError { pos: at, msg: "division by zero".into() })?;
                acc = mul(acc, Value::Scalar(inv));
            } else {
                return Ok(acc);
            }
        }
    }

    fn unary(&mut self) -> Result<Value, ParseError> {
        if self.eat('-') {
            let v = self.unary()?;
            return Ok(match v {
                Value::Scalar(c) => Value::Scalar(-c),
                Value::Elem(e) => Value::Elem(-e),
            });
        }
        self.power()
    }

    fn power(&mut self) -> Result<Value, ParseError> {
        let base = self.atom()?;
        if !self.eat('^') {
            return Ok(base);
        }
        let at = self.pos;
        let negative = self.eat('-');
        let k = self.integer()?;
        let k = i32::try_from(k).map_err(|_| ParseError { pos: at, msg: "exponent too large".into() })?;
        match base {
            Value::Scalar(c) => {
                if c.is_zero() && negative {
                    return Err(ParseError { pos: at, msg: "negative power of zero".into() });
                }
                Ok(Value::Scalar(c.pow(if negative { -k } else { k })))
            }
            Value::Elem(e) => {
                if negative {
                    return Err(ParseError { pos: at, msg: "negative power of an element".into() });
                }
                Ok(Value::Elem((0..k).fold(SymElement::unit(), |acc, _| &acc * &e)))
            }
        }
    }

    fn integer(&mut self) -> Result<u64, ParseError> {
        self.skip_ws();
        let digits: &str = &self.rest()[..self.rest().find(|c: char| !c.is_ascii_digit()).unwrap_or(self.rest().len())];
        if digits.is_empty() {
            return Err(self.error("expected an integer"));
        }
        let n = digits.parse().map_err(|_| self.error("integer too large"))?;
        self.pos += digits.len();
        Ok(n)
    }

    fn ident(&mut self) -> &'a str {
        self.skip_ws();
        let rest = self.rest();
        let end = rest.find(|c: char| !c.is_ascii_alphabetic()).unwrap_or(rest.len());
        self.pos += end;
        &rest[..end]
    }

    fn atom(&mut self) -> Result<Value, ParseError> {
        match self.peek() {
            None => Err(self.error("unexpected end of input")),
            Some('(') => {
                self.pos += 1;
                let v = self.sum()?;
                self.expect(')')?;
                Ok(v)
            }
            Some(c) if c.is_ascii_digit() => {
                self.skip_ws();
                let start = self.pos;
                let rest = self.rest();
                let digits = &rest[..rest.find(|c: char| !c.is_ascii_digit()).unwrap_or(rest.len())];
                let n: num_bigint::BigInt =
                    digits.parse().map_err(|_| ParseError { pos: start, msg: "bad integer".into() })?;
                self.pos += digits.len();
                Ok(Value::Scalar(RatFunc::integer(n)))
            }
            Some(c) if c.is_ascii_alphabetic() => {
                let start = self.pos;
                let name = self.ident();
                if self.peek() == Some('[') {
                    if !INDEXED.contains(&name) {
                        return Err(ParseError { pos: start, msg: format!("unknown atom `{name}`") });
                    }
                    self.pos += 1;
                    let close = self
                        .rest()
                        .find(']')
                        .ok_or_else(|| self.error("unclosed `[`"))?;
                    let inner_at = self.pos;
                    let inner = &self.rest()[..close];
                    self.pos += close + 1;
                    return indexed(name, inner)
                        .map(Value::Elem)
                        .map_err(|msg| ParseError { pos: inner_at, msg });
                }
                match name {
                    "v" => Ok(Value::Scalar(RatFunc::monomial(1, 1, 0))),
                    "s" => Ok(Value::Scalar(RatFunc::monomial(1, 0, 1))),
                    "z" => Ok(Value::Scalar(RatFunc::z())),
                    "delta" => Ok(Value::Scalar(delta_const())),
                    _ => Err(ParseError { pos: start, msg: format!("unknown name `{name}`") }),
                }
            }
            Some(c) => Err(self.error(format!("unexpected `{c}`"))),
        }
    }
}

fn add(a: Value, b: Value, subtract: bool) -> Value {
    match (a, b) {
        (Value::Scalar(x), Value::Scalar(y)) => Value::Scalar(if subtract { x - y } else { x + y }),
        (a, b) => {
            let (x, y) = (a.into_elem(), b.into_elem());
            Value::Elem(if subtract { x - y } else { x + y })
        }
    }
}

fn mul(a: Value, b: Value) -> Value {
    match (a, b) {
        (Value::Scalar(x), Value::Scalar(y)) => Value::Scalar(x * y),
        (Value::Scalar(c), Value::Elem(e)) | (Value::Elem(e), Value::Scalar(c)) => Value::Elem(e.scale(&c)),
        (Value::Elem(x), Value::Elem(y)) => Value::Elem(x * y),
    }
}

fn parts(inner: &str) -> Result<Vec<usize>, String> {
    if inner.trim().is_empty() {
        return Ok(Vec::new());
    }
    inner
        .split(',')
        .map(|t| match t.trim().parse::<usize>() {
            Ok(0) => Err("parts must be positive".to_string()),
            Ok(n) => Ok(n),
            Err(_) => Err(format!("`{}` is not a positive integer", t.trim())),
        })
        .collect()
}

fn single(name: &str, inner: &str) -> Result<usize, String> {
    match parts(inner)?.as_slice() {
        [m] => Ok(*m),
        _ => Err(format!("`{name}` takes a single positive index")),
    }
}

fn product(parts: &[usize], gen: impl Fn(usize) -> SymElement) -> SymElement {
    parts.iter().fold(SymElement::unit(), |acc, &k| &acc * &gen(k))
}

const INDEXED: [&str; 9] = ["p", "P", "h", "e", "A", "Q", "s", "Abar", "X"];

fn indexed(name: &str, inner: &str) -> Result<SymElement, String> {
    match name {
        "p" | "P" => Ok(SymElement::p_monomial(Partition::from_unsorted(parts(inner)?), RatFunc::one())),
        "h" => Ok(product(&parts(inner)?, complete)),
        "e" => Ok(product(&parts(inner)?, elementary)),
        "A" => Ok(evaluate_a(&Combination::monomial(
            Partition::from_unsorted(parts(inner)?),
            RatFunc::one(),
        ))),
        "Q" | "s" => {
            let lambda: Partition = if inner.trim_start().starts_with('(') {
                inner.parse()
            } else {
                format!("[{inner}]").parse()
            }
            .map_err(|e: skeinkit_core::Error| e.to_string())?;
            Ok(schur(&lambda))
        }
        "Abar" => abar_elem(single(name, inner)?).map_err(|e| e.to_string()),
        "X" => x_elem(single(name, inner)?).map_err(|e| e.to_string()),
        _ => Err(format!("unknown atom `{name}`")),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use skeinkit_core::skein::turaev_a;
    use skeinkit_core::symfunc::power_sum;

    #[test]
    fn atoms() {
        assert_eq!(parse_element("p[2,1]").unwrap(), &power_sum(2) * &power_sum(1));
        assert_eq!(parse_element("p[1,2]").unwrap(), parse_element("p[2,1]").unwrap());
        assert_eq!(parse_element("h[2]").unwrap(), complete(2));
        assert_eq!(parse_element("s[2]").unwrap(), parse_element("Q[2]").unwrap());
        assert_eq!(parse_element("Q[(1|1)]").unwrap(), parse_element("Q[2,1]").unwrap());
        assert_eq!(parse_element("A[3]").unwrap(), turaev_a(3).unwrap());
        assert_eq!(parse_element("A[]").unwrap(), SymElement::unit());
    }

    #[test]
    fn arithmetic_and_scalars() {
        let hook = parse_element("s*Q[2] - s^-1*Q[1,1]").unwrap();
        assert_eq!(hook, turaev_a(2).unwrap());
        let x = parse_element("(s + s^-1) * p[2]").unwrap();
        assert_eq!(x, parse_element("X[2]").unwrap());
        assert_eq!(parse_element("p[1]^2").unwrap(), parse_element("p[1,1]").unwrap());
        assert_eq!(parse_element("z / z * p[1]").unwrap(), parse_element("p[1]").unwrap());
        assert_eq!(parse_element("-2*p[1] + 3*p[1]").unwrap(), parse_element("p[1]").unwrap());
        assert_eq!(parse_element("v^2*v^-2").unwrap(), SymElement::unit());
    }

    #[test]
    fn errors_carry_positions() {
        let err = parse_element("p[1] + q[2]").unwrap_err();
        assert_eq!(err.pos, 7);
        let err = parse_element("p[1] +").unwrap_err();
        assert_eq!(err.pos, 6);
        assert_eq!(parse_element("p[1] / p[1]").unwrap_err().pos, 5);
        assert_eq!(parse_element("Q[1,2]").unwrap_err().pos, 2);
        assert_eq!(parse_element("Abar[2,1]").unwrap_err().pos, 5);
        assert!(parse_element("(p[1]").is_err());
        assert!(parse_element("p[1]^-1").is_err());
        assert!(parse_element("p[1] p[2]").is_err());
    }
}
