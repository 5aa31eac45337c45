//! Constant-coefficient linear recurrences: extraction from characteristic
//! polynomials, detection from data, and verification.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde_json::{json, Value};

use crate::error::RecurrenceError;
use crate::json::{big, big_vec};
use crate::poly::IntPolynomial;

/// `a(n) = c1 a(n-1) + ... + ck a(n-k)` for `n >= valid_from`.
///
/// When `ck` and its predecessors vanish (`trailing_zeros` of them) the
/// shorter recurrence on `c1..c(k-t)` is the same statement.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Recurrence {
    coeffs: Vec<BigInt>,
    trailing_zeros: usize,
    valid_from: i64,
}

impl Recurrence {
    pub fn new(coeffs: Vec<BigInt>, valid_from: i64) -> Self {
        let trailing_zeros = coeffs.iter().rev().take_while(|c| c.is_zero()).count();
        Recurrence { coeffs, trailing_zeros, valid_from }
    }

    pub fn from_i64(coeffs: &[i64], valid_from: i64) -> Self {
        Recurrence::new(coeffs.iter().map(|&c| BigInt::from(c)).collect(), valid_from)
    }

    pub fn order(&self) -> usize {
        self.coeffs.len()
    }

    pub fn coefficients(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn trailing_zeros(&self) -> usize {
        self.trailing_zeros
    }

    pub fn effective_order(&self) -> usize {
        self.coeffs.len() - self.trailing_zeros
    }

    /// `c1..c(k-t)`.
    pub fn effective(&self) -> &[BigInt] {
        &self.coeffs[..self.effective_order()]
    }

    pub fn valid_from(&self) -> i64 {
        self.valid_from
    }

    /// Next term after `window` (oldest first, at least `effective_order` long).
    pub fn step(&self, window: &[BigInt]) -> BigInt {
        let k = self.effective_order();
        let last = &window[window.len() - k..];
        self.effective().iter().zip(last.iter().rev()).map(|(c, a)| c * a).sum()
    }

    pub fn to_json(&self) -> Value {
        json!({
            "order": self.order(),
            "coeffs": big_vec(&self.coeffs),
            "effective_coeffs": big_vec(self.effective()),
            "trailing_zeros": self.trailing_zeros,
            "valid_from": self.valid_from,
        })
    }
}

impl fmt::Display for Recurrence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("a(n) =")?;
        let mut first = true;
        for (i, c) in self.effective().iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let sign = if c.is_negative() { '-' } else { '+' };
            if first {
                f.write_str(if c.is_negative() { " -" } else { " " })?;
            } else {
                write!(f, " {sign} ")?;
            }
            first = false;
            let a = c.abs();
            if !a.is_one() {
                write!(f, "{a}")?;
            }
            write!(f, "a(n-{})", i + 1)?;
        }
        if first {
            f.write_str(" 0")?;
        }
        write!(f, "  (n >= {})", self.valid_from)
    }
}

/// Reads the recurrence off a monic polynomial:
/// `x^k - c1 x^(k-1) - ... - ck` gives `a(n) = c1 a(n-1) + ... + ck a(n-k)`.
pub fn recurrence_from_charpoly(p: &IntPolynomial, valid_from: i64) -> Result<Recurrence, RecurrenceError> {
    if !p.is_monic() {
        return Err(RecurrenceError::NotMonic);
    }
    Ok(Recurrence::new(p.coefficients()[1..].iter().map(|c| -c).collect(), valid_from))
}

/// Shortest recurrence reproducing every term, by Berlekamp-Massey over the
/// rationals. `terms[i]` is `a(start + i)`.
///
/// Returns `None` when the shortest fit has order above `len / 2`, where it
/// is not determined by the data.
pub fn minimal_recurrence(terms: &[BigInt], start: i64) -> Result<Option<Recurrence>, RecurrenceError> {
    if terms.len() < 4 {
        return Err(RecurrenceError::TooFewTerms { needed: 4, got: terms.len() });
    }
    let s: Vec<BigRational> = terms.iter().map(|t| BigRational::from_integer(t.clone())).collect();
    let one = BigRational::one();
    // connection polynomials, constant term first
    let mut c = vec![one.clone()];
    let mut b = vec![one.clone()];
    let mut len = 0usize;
    let mut shift = 1usize;
    let mut last_disc = one;
    for n in 0..s.len() {
        let d: BigRational = (0..=len.min(c.len() - 1)).map(|i| &c[i] * &s[n - i]).sum();
        if d.is_zero() {
            shift += 1;
            continue;
        }
        let coef = &d / &last_disc;
        let prev = c.clone();
        if c.len() < b.len() + shift {
            c.resize(b.len() + shift, BigRational::zero());
        }
        for (i, bi) in b.iter().enumerate() {
            c[i + shift] -= &coef * bi;
        }
        if 2 * len <= n {
            len = n + 1 - len;
            b = prev;
            last_disc = d;
            shift = 1;
        } else {
            shift += 1;
        }
    }
    if 2 * len > terms.len() {
        return Ok(None);
    }
    c.resize(len + 1, BigRational::zero());
    let mut coeffs = Vec::with_capacity(len);
    for ci in &c[1..] {
        let v = -ci;
        if !v.is_integer() {
            return Err(RecurrenceError::NonIntegral);
        }
        coeffs.push(v.to_integer());
    }
    Ok(Some(Recurrence::new(coeffs, start + len as i64)))
}

/// Checks every term `a(n)` with `n >= max(valid_from, start + order)`,
/// where `terms[i]` is `a(start + i)` and `order` is the effective order.
pub fn verify_recurrence(r: &Recurrence, terms: &[BigInt], start: i64) -> bool {
    let k = r.effective_order();
    let from = r.valid_from().max(start + k as i64);
    (from..start + terms.len() as i64).all(|n| {
        let i = (n - start) as usize;
        r.step(&terms[i - k..i]) == terms[i]
    })
}

/// Number of terms `verify_recurrence` actually checks.
pub fn checked_windows(r: &Recurrence, terms: &[BigInt], start: i64) -> usize {
    let from = r.valid_from().max(start + r.effective_order() as i64);
    (start + terms.len() as i64 - from).max(0) as usize
}

/// Smallest `n` from which the recurrence holds on all supplied terms.
pub fn observed_valid_from(r: &Recurrence, terms: &[BigInt], start: i64) -> Option<i64> {
    let k = r.effective_order();
    let end = start + terms.len() as i64;
    let mut from = end;
    for n in (start + k as i64..end).rev() {
        let i = (n - start) as usize;
        if r.step(&terms[i - k..i]) != terms[i] {
            break;
        }
        from = n;
    }
    (from < end).then_some(from)
}

/// Helper for JSON payloads.
pub fn charpoly_json(p: &IntPolynomial) -> Value {
    Value::Array(p.coefficients().iter().map(big).collect())
}
