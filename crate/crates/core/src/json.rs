//! JSON helpers for big integers and shapes.

use num_bigint::{BigInt, BigUint};
use serde_json::{Number, Value};

use crate::shape::Shape;

/// A JSON number carrying the exact decimal value.
pub fn big(x: &BigInt) -> Value {
    Value::Number(x.to_string().parse::<Number>().expect("integer literal"))
}

pub fn big_u(x: &BigUint) -> Value {
    Value::Number(x.to_string().parse::<Number>().expect("integer literal"))
}

pub fn big_vec(xs: &[BigInt]) -> Value {
    Value::Array(xs.iter().map(big).collect())
}

pub fn cells(s: &Shape) -> Value {
    Value::Array(s.iter().map(|c| serde_json::json!([c.row, c.col])).collect())
}
