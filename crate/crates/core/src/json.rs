//! JSON helpers for arbitrary-precision integers.
//!
//! Integers are read from and written to plain JSON numbers of any length;
//! `serde_json` is built with `arbitrary_precision` so digits are preserved.

use std::str::FromStr;

use num_bigint::{BigInt, BigUint};
use serde_json::{Number, Value};

use crate::error::{Error, Result};
use crate::linalg::IntMatrix;

pub fn parse_int(v: &Value) -> Result<BigInt> {
    match v {
        Value::Number(n) => BigInt::from_str(&n.to_string())
            .map_err(|_| Error::Parse(format!("expected an integer, found {n}"))),
        other => Err(Error::Parse(format!("expected an integer, found {other}"))),
    }
}

pub fn parse_vector(v: &Value) -> Result<Vec<BigInt>> {
    match v {
        Value::Array(items) => items.iter().map(parse_int).collect(),
        other => Err(Error::Parse(format!("expected an array of integers, found {other}"))),
    }
}

pub fn parse_vectors(v: &Value) -> Result<Vec<Vec<BigInt>>> {
    match v {
        Value::Array(items) => items.iter().map(parse_vector).collect(),
        other => Err(Error::Parse(format!("expected an array of arrays, found {other}"))),
    }
}

pub fn parse_matrix(v: &Value) -> Result<IntMatrix> {
    IntMatrix::from_rows(parse_vectors(v)?)
}

pub fn int(v: &BigInt) -> Value {
    Value::Number(Number::from_str(&v.to_string()).expect("integer literal"))
}

pub fn uint(v: &BigUint) -> Value {
    Value::Number(Number::from_str(&v.to_string()).expect("integer literal"))
}

pub fn vector(v: &[BigInt]) -> Value {
    Value::Array(v.iter().map(int).collect())
}

pub fn matrix(m: &IntMatrix) -> Value {
    Value::Array(m.rows().map(vector).collect())
}
