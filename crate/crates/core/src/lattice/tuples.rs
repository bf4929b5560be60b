//! Signed tuple-sequence encoding of lattice points and the ball bijection
//! `B_n(d) -> B_d(n)` obtained by swapping the two entries of every tuple.

use std::fmt;

use serde::{Deserialize, Serialize};

use super::LatticePoint;
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Sign {
    #[serde(rename = "+")]
    Plus,
    #[serde(rename = "-")]
    Minus,
}

/// One nonzero coordinate: `gap` positions after the previous nonzero one
/// (or after the start), holding `sign * magnitude`. Both entries are `>= 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SignedTuple {
    pub sign: Sign,
    pub gap: u64,
    pub magnitude: u64,
}

impl SignedTuple {
    pub fn new(sign: Sign, gap: u64, magnitude: u64) -> Option<Self> {
        (gap >= 1 && magnitude >= 1).then_some(SignedTuple { sign, gap, magnitude })
    }

    pub fn swapped(self) -> Self {
        SignedTuple { sign: self.sign, gap: self.magnitude, magnitude: self.gap }
    }
}

impl fmt::Display for SignedTuple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self.sign {
            Sign::Plus => '+',
            Sign::Minus => '-',
        };
        write!(f, "{s}({},{})", self.gap, self.magnitude)
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct TupleSequence {
    pub tuples: Vec<SignedTuple>,
}

impl TupleSequence {
    pub fn dimension_sum(&self) -> u64 {
        self.tuples.iter().map(|t| t.gap).sum()
    }

    pub fn distance_sum(&self) -> u64 {
        self.tuples.iter().map(|t| t.magnitude).sum()
    }

    pub fn swapped(&self) -> Self {
        TupleSequence { tuples: self.tuples.iter().map(|t| t.swapped()).collect() }
    }
}

impl fmt::Display for TupleSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (k, t) in self.tuples.iter().enumerate() {
            if k > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{t}")?;
        }
        f.write_str("]")
    }
}

pub fn tuple_encode(p: &LatticePoint) -> TupleSequence {
    let mut tuples = Vec::new();
    let mut last = 0u64;
    for (idx, &v) in p.0.iter().enumerate() {
        if v == 0 {
            continue;
        }
        let pos = idx as u64 + 1;
        let sign = if v > 0 { Sign::Plus } else { Sign::Minus };
        tuples.push(SignedTuple { sign, gap: pos - last, magnitude: v.unsigned_abs() });
        last = pos;
    }
    TupleSequence { tuples }
}

/// Inverse of [`tuple_encode`], zero-padded to length `n`.
pub fn tuple_decode(s: &TupleSequence, n: usize) -> Result<LatticePoint> {
    let dimension_sum = s.dimension_sum();
    if dimension_sum > n as u64 {
        return Err(Error::DimensionSumExceeded { dimension_sum: dimension_sum as usize, n });
    }
    let mut out = vec![0i64; n];
    let mut pos = 0usize;
    for t in &s.tuples {
        pos += t.gap as usize;
        let mag = i64::try_from(t.magnitude).map_err(|_| Error::Overflow(t.magnitude.to_string()))?;
        out[pos - 1] = match t.sign {
            Sign::Plus => mag,
            Sign::Minus => -mag,
        };
    }
    Ok(LatticePoint(out))
}

/// Maps `p` in `B_n(d)` to a point of `B_d(n)`.
///
/// Applying the map again with `(d, n)` returns `p`.
pub fn ball_bijection(p: &LatticePoint, n: usize, d: usize) -> Result<LatticePoint> {
    if p.dim() != n {
        return Err(Error::DimensionMismatch { len: p.dim(), n });
    }
    let norm = p.l1_norm();
    if norm > d as u64 {
        return Err(Error::NormExceeded { point: p.0.clone(), norm, d });
    }
    tuple_decode(&tuple_encode(p).swapped(), d)
}
