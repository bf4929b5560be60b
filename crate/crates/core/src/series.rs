//! Truncated formal power series over the integers.
//!
//! Only what the generating functions need: polynomial products, powers and
//! division by a series whose constant term is a unit (`±1`), all exact.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

/// Dense univariate polynomial, coefficient `i` multiplies `x^i`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Poly(pub Vec<BigInt>);

impl Poly {
    pub fn from_i64(coeffs: &[i64]) -> Self {
        Poly(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn one() -> Self {
        Poly(vec![BigInt::one()])
    }

    pub fn coeff(&self, i: usize) -> BigInt {
        self.0.get(i).cloned().unwrap_or_default()
    }

    /// Product truncated to `len` coefficients.
    pub fn mul_trunc(&self, other: &Poly, len: usize) -> Poly {
        let mut out = vec![BigInt::zero(); len];
        for (i, a) in self.0.iter().enumerate().take(len) {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.0.iter().enumerate().take(len - i) {
                out[i + j] += a * b;
            }
        }
        Poly(out)
    }

    pub fn pow_trunc(&self, exp: usize, len: usize) -> Poly {
        let mut acc = Poly::one();
        for _ in 0..exp {
            acc = acc.mul_trunc(self, len);
        }
        acc
    }
}

/// First `len` coefficients of `num / den`.
///
/// Panics if the constant term of `den` is not `±1`; every denominator used
/// in this crate is a product of `(1 - x)` factors.
pub fn divide(num: &Poly, den: &Poly, len: usize) -> Vec<BigInt> {
    let lead = den.coeff(0);
    assert!(lead.abs().is_one(), "series division needs a unit constant term");
    let mut out: Vec<BigInt> = Vec::with_capacity(len);
    for k in 0..len {
        let mut acc = num.coeff(k);
        for (j, dj) in den.0.iter().enumerate().skip(1).take(k) {
            if !dj.is_zero() {
                acc -= dj * &out[k - j];
            }
        }
        out.push(acc * &lead);
    }
    out
}

/// Bivariate division `num(x,y) / den(x,y)` on the square `0..len` x `0..len`.
///
/// Coefficients are indexed `[i][j]` for `x^i y^j`; `den[0][0]` must be `±1`.
pub fn divide_bivariate(num: &[Vec<BigInt>], den: &[Vec<BigInt>], len: usize) -> Vec<Vec<BigInt>> {
    let at = |m: &[Vec<BigInt>], i: usize, j: usize| -> BigInt {
        m.get(i).and_then(|row| row.get(j)).cloned().unwrap_or_default()
    };
    let lead = at(den, 0, 0);
    assert!(lead.abs().is_one(), "series division needs a unit constant term");
    let mut out = vec![vec![BigInt::zero(); len]; len];
    for i in 0..len {
        for j in 0..len {
            let mut acc = at(num, i, j);
            for (a, row) in den.iter().enumerate().take(i + 1) {
                for (b, dab) in row.iter().enumerate().take(j + 1) {
                    if (a, b) == (0, 0) || dab.is_zero() {
                        continue;
                    }
                    acc -= dab * &out[i - a][j - b];
                }
            }
            out[i][j] = acc * &lead;
        }
    }
    out
}
