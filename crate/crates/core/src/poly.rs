//! Integer polynomials and exact characteristic polynomials.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::RecurrenceError;
use crate::matrix::IntMatrix;

/// Coefficients from the highest degree down. The zero polynomial has no
/// coefficients.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct IntPolynomial {
    coeffs: Vec<BigInt>,
}

impl IntPolynomial {
    pub fn new(coeffs: Vec<BigInt>) -> Self {
        let first = coeffs.iter().position(|c| !c.is_zero()).unwrap_or(coeffs.len());
        IntPolynomial { coeffs: coeffs[first..].to_vec() }
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        IntPolynomial::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero() -> Self {
        IntPolynomial { coeffs: Vec::new() }
    }

    pub fn coefficients(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_monic(&self) -> bool {
        self.coeffs.first().is_some_and(One::is_one)
    }

    /// Coefficient of `x^k`.
    pub fn coeff(&self, k: usize) -> BigInt {
        match self.degree() {
            Some(d) if k <= d => self.coeffs[d - k].clone(),
            _ => BigInt::zero(),
        }
    }

    /// Multiplicity of the root 0.
    pub fn trailing_zeros(&self) -> usize {
        self.coeffs.iter().rev().take_while(|c| c.is_zero()).count()
    }

    pub fn mul(&self, other: &IntPolynomial) -> IntPolynomial {
        if self.is_zero() || other.is_zero() {
            return IntPolynomial::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        IntPolynomial::new(out)
    }

    pub fn eval(&self, x: &BigInt) -> BigInt {
        self.coeffs.iter().fold(BigInt::zero(), |acc, c| acc * x + c)
    }

    /// `p(m)` by Horner's rule.
    pub fn eval_matrix(&self, m: &IntMatrix) -> IntMatrix {
        let n = m.rows();
        let mut acc = IntMatrix::zeros(n, n);
        for c in &self.coeffs {
            acc = acc.mul(m);
            acc.add_scaled_identity(c);
        }
        acc
    }
}

impl fmt::Display for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let Some(deg) = self.degree() else {
            return f.write_str("0");
        };
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let k = deg - i;
            let sign = if c.is_negative() { "-" } else { "+" };
            if first {
                if c.is_negative() {
                    f.write_str("-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            first = false;
            let a = c.abs();
            if !a.is_one() || k == 0 {
                write!(f, "{a}")?;
            }
            match k {
                0 => {}
                1 => f.write_str("x")?,
                _ => write!(f, "x^{k}")?,
            }
        }
        Ok(())
    }
}

fn check_square(m: &IntMatrix) -> Result<usize, RecurrenceError> {
    if !m.is_square() {
        return Err(RecurrenceError::NotSquare { rows: m.rows(), cols: m.cols() });
    }
    if m.rows() == 0 {
        return Err(RecurrenceError::EmptyMatrix);
    }
    Ok(m.rows())
}

/// `det(xI - m)` by the Faddeev-LeVerrier trace recursion. Every division is
/// exact over the integers.
pub fn char_poly(m: &IntMatrix) -> Result<IntPolynomial, RecurrenceError> {
    let n = check_square(m)?;
    let mut coeffs = vec![BigInt::zero(); n + 1];
    coeffs[0] = BigInt::one();
    // aux = M_k, with M_1 = I
    let mut aux = IntMatrix::identity(n);
    for (k, slot) in coeffs.iter_mut().enumerate().skip(1) {
        let am = m.mul(&aux);
        let c = -am.trace() / BigInt::from(k);
        *slot = c.clone();
        if k < n {
            aux = am;
            aux.add_scaled_identity(&c);
        }
    }
    Ok(IntPolynomial::new(coeffs))
}

/// `det(xI - m)` by Berkowitz's division-free algorithm.
pub fn char_poly_berkowitz(m: &IntMatrix) -> Result<IntPolynomial, RecurrenceError> {
    let n = check_square(m)?;
    let mut poly = vec![BigInt::one(), -m[(0, 0)].clone()];
    for r in 1..n {
        // leading (r+1)x(r+1) block: [[A, S], [R, a]]
        let a = &m[(r, r)];
        let mut col: Vec<BigInt> = (0..r).map(|i| m[(i, r)].clone()).collect();
        let row: Vec<BigInt> = (0..r).map(|j| m[(r, j)].clone()).collect();
        let mut toeplitz = Vec::with_capacity(r + 2);
        toeplitz.push(BigInt::one());
        toeplitz.push(-a.clone());
        for _ in 0..r {
            let rs: BigInt = row.iter().zip(&col).map(|(x, y)| x * y).sum();
            toeplitz.push(-rs);
            col = (0..r).map(|i| (0..r).map(|j| &m[(i, j)] * &col[j]).sum()).collect();
        }
        let mut next = vec![BigInt::zero(); r + 2];
        for (i, slot) in next.iter_mut().enumerate() {
            for (j, p) in poly.iter().enumerate().take(i + 1) {
                *slot += &toeplitz[i - j] * p;
            }
        }
        poly = next;
    }
    Ok(IntPolynomial::new(poly))
}
