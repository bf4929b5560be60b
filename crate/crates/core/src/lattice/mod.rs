//! Counting and enumerating l1 shells `S_n(d)` and balls `B_n(d)` in `Z^n`.

mod genfunc;
mod tuples;

pub use genfunc::{genfunc_coefficients, GenFuncKind, GenFuncTable};
pub use tuples::{ball_bijection, tuple_decode, tuple_encode, Sign, SignedTuple, TupleSequence};

use num_bigint::BigUint;
use num_traits::{One, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::Count;

/// Default cap on the number of points enumeration routines may materialize.
pub const DEFAULT_ENUMERATION_CAP: u64 = 10_000_000;

/// A point of `Z^n`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct LatticePoint(pub Vec<i64>);

impl LatticePoint {
    pub fn origin(n: usize) -> Self {
        LatticePoint(vec![0; n])
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn l1_norm(&self) -> u64 {
        self.0.iter().map(|c| c.unsigned_abs()).sum()
    }
}

impl From<Vec<i64>> for LatticePoint {
    fn from(v: Vec<i64>) -> Self {
        LatticePoint(v)
    }
}

fn binomial(n: usize, k: usize) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    num_integer::binomial(BigUint::from(n), BigUint::from(k))
}

/// `|S_n(d)|`, the number of points of `Z^n` at l1 distance exactly `d`.
///
/// Sums over the number `i` of zero coordinates: choose them, pick signs for
/// the remaining `n - i`, and split `d` into `n - i` positive parts.
pub fn shell_size(n: usize, d: usize) -> Count {
    if d == 0 {
        return BigUint::one();
    }
    (0..n)
        .map(|i| {
            let nonzero = n - i;
            binomial(n, i) * (BigUint::one() << nonzero) * binomial(d - 1, nonzero - 1)
        })
        .sum()
}

/// `|B_n(d)|`, the number of points of `Z^n` within l1 distance `d`.
pub fn ball_size(n: usize, d: usize) -> Count {
    (0..=d).map(|k| shell_size(n, k)).sum()
}

/// Delannoy number `D(m,k)`: lattice paths from the origin to `(m,k)` using
/// steps `(1,0)`, `(0,1)` and `(1,1)`.
pub fn delannoy(m: usize, k: usize) -> Count {
    let mut row = vec![BigUint::one(); k + 1];
    for _ in 0..m {
        let mut next = Vec::with_capacity(k + 1);
        next.push(BigUint::one());
        for j in 1..=k {
            let v = &row[j] + &next[j - 1] + &row[j - 1];
            next.push(v);
        }
        row = next;
    }
    row.swap_remove(k)
}

/// All points of `Z^n` with l1 norm exactly `d`, sorted lexicographically.
pub fn shell_enumerate(n: usize, d: usize) -> Result<Vec<LatticePoint>> {
    shell_enumerate_capped(n, d, DEFAULT_ENUMERATION_CAP)
}

/// [`shell_enumerate`] with an explicit cap on `|B_n(d)|`.
pub fn shell_enumerate_capped(n: usize, d: usize, cap: u64) -> Result<Vec<LatticePoint>> {
    let size = ball_size(n, d);
    if size > BigUint::from(cap) {
        return Err(Error::EnumerationCap { n, d, size: size.to_string(), cap });
    }
    let expected = shell_size(n, d).to_usize().unwrap_or(0);
    let mut out = Vec::with_capacity(expected);
    let mut buf = vec![0i64; n];
    fill_shell(&mut buf, 0, d as i64, &mut out);
    Ok(out)
}

// Emits in lexicographic order because each coordinate is tried from most
// negative to most positive.
fn fill_shell(buf: &mut [i64], pos: usize, remaining: i64, out: &mut Vec<LatticePoint>) {
    if pos == buf.len() {
        if remaining == 0 {
            out.push(LatticePoint(buf.to_vec()));
        }
        return;
    }
    if pos + 1 == buf.len() {
        if remaining == 0 {
            buf[pos] = 0;
            out.push(LatticePoint(buf.to_vec()));
        } else {
            for v in [-remaining, remaining] {
                buf[pos] = v;
                out.push(LatticePoint(buf.to_vec()));
            }
        }
        return;
    }
    for v in -remaining..=remaining {
        buf[pos] = v;
        fill_shell(buf, pos + 1, remaining - v.abs(), out);
    }
}

/// All points of the ball `B_n(d)` in lexicographic order.
pub fn ball_enumerate(n: usize, d: usize, cap: u64) -> Result<Vec<LatticePoint>> {
    let mut all = Vec::new();
    for k in 0..=d {
        all.extend(shell_enumerate_capped(n, k, cap)?);
    }
    all.sort();
    Ok(all)
}
