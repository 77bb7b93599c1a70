//! Canonical JSON encoding of exact values.
//!
//! Exact scalars are strings: integers as `"p"`, rationals as `"p/q"` with
//! `q > 0` and `gcd(p, q) = 1`. Gaussian rationals are `{"re": .., "im": ..}`.
//! Indices, ranks, degrees and multiplicities are plain JSON numbers.

use serde_json::{json, Map, Value};

use crate::error::GkzError;
use crate::lattice::{format_ratio, parse_ratio};
use crate::{GaussRat, Int, IntMatrix, Parameter, Rat};

pub fn int(v: &Int) -> Value {
    Value::String(v.to_string())
}

pub fn ints(v: &[Int]) -> Value {
    Value::Array(v.iter().map(int).collect())
}

pub fn rat(v: &Rat) -> Value {
    Value::String(format_ratio(v))
}

pub fn rats(v: &[Rat]) -> Value {
    Value::Array(v.iter().map(rat).collect())
}

pub fn gauss(v: &GaussRat) -> Value {
    json!({ "re": format_ratio(&v.re), "im": format_ratio(&v.im) })
}

pub fn parameter(v: &[GaussRat]) -> Value {
    Value::Array(v.iter().map(gauss).collect())
}

pub fn matrix(m: &IntMatrix) -> Value {
    Value::Array((0..m.rows()).map(|i| ints(m.row(i))).collect())
}

pub fn object(entries: Vec<(&str, Value)>) -> Value {
    Value::Object(
        entries
            .into_iter()
            .map(|(k, v)| (k.to_string(), v))
            .collect::<Map<_, _>>(),
    )
}

fn invalid(what: &str, v: &Value) -> GkzError {
    GkzError::InvalidInput(format!("expected {what}, found {v}"))
}

/// An integer given as a JSON integer or a decimal string.
pub fn parse_int(v: &Value) -> Result<Int, GkzError> {
    match v {
        Value::Number(n) if n.is_i64() => Ok(Int::from(n.as_i64().expect("checked"))),
        Value::Number(n) if n.is_u64() => Ok(Int::from(n.as_u64().expect("checked"))),
        Value::String(s) => s.trim().parse().map_err(|_| invalid("an integer", v)),
        _ => Err(invalid("an integer", v)),
    }
}

/// A rational given as a JSON integer or a `"p"` / `"p/q"` string.
pub fn parse_rat(v: &Value) -> Result<Rat, GkzError> {
    match v {
        Value::String(s) => parse_ratio(s),
        _ => parse_int(v).map(Rat::from_integer),
    }
}

/// A Gaussian rational: a JSON integer, a string such as `"1/2"` or
/// `"1+i/2"`, or an object `{"re": .., "im": ..}`.
pub fn parse_gauss(v: &Value) -> Result<GaussRat, GkzError> {
    match v {
        Value::String(s) => s.parse(),
        Value::Object(map) => {
            let part = |key: &str| {
                map.get(key)
                    .map_or(Ok(Rat::from_integer(Int::from(0))), parse_rat)
            };
            if map.keys().any(|k| k != "re" && k != "im") {
                return Err(invalid("an object with keys re and im", v));
            }
            Ok(GaussRat::new(part("re")?, part("im")?))
        }
        _ => parse_int(v).map(GaussRat::from_integer),
    }
}

pub fn parse_parameter(v: &Value) -> Result<Parameter, GkzError> {
    match v {
        Value::Array(items) => items
            .iter()
            .map(parse_gauss)
            .collect::<Result<Vec<_>, _>>()
            .map(Parameter::new),
        _ => Err(invalid("a list of parameter entries", v)),
    }
}

/// A rectangular integer matrix given as a list of rows.
pub fn parse_matrix(v: &Value) -> Result<IntMatrix, GkzError> {
    let Value::Array(rows) = v else {
        return Err(invalid("a list of matrix rows", v));
    };
    let rows: Vec<Vec<Int>> = rows
        .iter()
        .map(|r| match r {
            Value::Array(entries) => entries.iter().map(parse_int).collect(),
            _ => Err(invalid("a matrix row", r)),
        })
        .collect::<Result<_, _>>()?;
    let cols = rows.first().map_or(0, Vec::len);
    IntMatrix::from_rows(rows, cols)
}

pub fn parse_indices(v: &Value) -> Result<Vec<usize>, GkzError> {
    let Value::Array(items) = v else {
        return Err(invalid("a list of column indices", v));
    };
    items
        .iter()
        .map(|x| {
            x.as_u64()
                .and_then(|i| usize::try_from(i).ok())
                .ok_or_else(|| invalid("a column index", x))
        })
        .collect()
}
