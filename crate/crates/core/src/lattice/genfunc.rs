//! Generating functions for shell and ball sizes, expanded by exact series division.
//!
//! With `x` marking the dimension `n` and `y` the radius `d`:
//!
//! * `B(x,y) = 1 / (1 - x - y - xy)`
//! * `S(x,y) = (1 - y) / (1 - x - y - xy)`
//! * `B_d(x) = (1+x)^d / (1-x)^(d+1)`, and symmetrically for `B_n(y)`
//! * `S_d(x) = 2x (1+x)^(d-1) / (1-x)^(d+1)` for `d >= 1`, `S_0(x) = 1/(1-x)`
//! * `S_n(y) = (1+y)^n / (1-y)^n`

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::series::{divide, divide_bivariate, Poly};
use crate::Count;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum GenFuncKind {
    #[serde(rename = "B_bivariate")]
    BallBivariate,
    #[serde(rename = "S_bivariate")]
    ShellBivariate,
    /// Radius fixed, coefficients indexed by dimension.
    #[serde(rename = "B_fixed_d")]
    BallFixedRadius,
    /// Dimension fixed, coefficients indexed by radius.
    #[serde(rename = "B_fixed_n")]
    BallFixedDim,
    #[serde(rename = "S_fixed_d")]
    ShellFixedRadius,
    #[serde(rename = "S_fixed_n")]
    ShellFixedDim,
}

impl GenFuncKind {
    pub const ALL: [GenFuncKind; 6] = [
        GenFuncKind::BallBivariate,
        GenFuncKind::ShellBivariate,
        GenFuncKind::BallFixedRadius,
        GenFuncKind::BallFixedDim,
        GenFuncKind::ShellFixedRadius,
        GenFuncKind::ShellFixedDim,
    ];

    pub fn name(self) -> &'static str {
        match self {
            GenFuncKind::BallBivariate => "B_bivariate",
            GenFuncKind::ShellBivariate => "S_bivariate",
            GenFuncKind::BallFixedRadius => "B_fixed_d",
            GenFuncKind::BallFixedDim => "B_fixed_n",
            GenFuncKind::ShellFixedRadius => "S_fixed_d",
            GenFuncKind::ShellFixedDim => "S_fixed_n",
        }
    }

    pub fn is_bivariate(self) -> bool {
        matches!(self, GenFuncKind::BallBivariate | GenFuncKind::ShellBivariate)
    }
}

impl fmt::Display for GenFuncKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for GenFuncKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        GenFuncKind::ALL.into_iter().find(|k| k.name().eq_ignore_ascii_case(s)).ok_or(Error::GenFuncArgs {
            kind: "kind",
            detail: "is not one of B_bivariate, S_bivariate, B_fixed_d, B_fixed_n, S_fixed_d, S_fixed_n",
        })
    }
}

/// Coefficient table returned by [`genfunc_coefficients`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(untagged)]
pub enum GenFuncTable {
    /// `coeffs[i]` for `i` in `0..=max_index`.
    Univariate(Vec<Count>),
    /// `coeffs[i][j]` multiplies `x^i y^j` (dimension `i`, radius `j`), both in `0..=max_index`.
    Bivariate(Vec<Vec<Count>>),
}

impl GenFuncTable {
    pub fn univariate(&self) -> Option<&[Count]> {
        match self {
            GenFuncTable::Univariate(c) => Some(c),
            GenFuncTable::Bivariate(_) => None,
        }
    }

    pub fn bivariate(&self) -> Option<&[Vec<Count>]> {
        match self {
            GenFuncTable::Bivariate(c) => Some(c),
            GenFuncTable::Univariate(_) => None,
        }
    }
}

fn to_count(v: BigInt) -> Count {
    v.to_biguint().expect("generating function coefficients are nonnegative")
}

fn bivariate(num: &[Vec<i64>], len: usize) -> Vec<Vec<Count>> {
    let lift = |m: &[Vec<i64>]| -> Vec<Vec<BigInt>> {
        m.iter().map(|row| row.iter().map(|&c| BigInt::from(c)).collect()).collect()
    };
    // 1 - x - y - xy, indexed [x power][y power]
    let den = lift(&[vec![1, -1], vec![-1, -1]]);
    divide_bivariate(&lift(num), &den, len).into_iter().map(|row| row.into_iter().map(to_count).collect()).collect()
}

/// Power-series coefficients through `max_index` for one of the six generating functions.
///
/// `fixed` is required for the univariate kinds (the fixed radius or dimension)
/// and must be absent for the bivariate ones.
pub fn genfunc_coefficients(kind: GenFuncKind, fixed: Option<usize>, max_index: usize) -> Result<GenFuncTable> {
    let len = max_index + 1;
    match (kind.is_bivariate(), fixed) {
        (true, Some(_)) => return Err(Error::GenFuncArgs { kind: kind.name(), detail: "takes no fixed index" }),
        (false, None) => return Err(Error::GenFuncArgs { kind: kind.name(), detail: "requires a fixed index" }),
        _ => {}
    }
    let one_plus = Poly::from_i64(&[1, 1]);
    let one_minus = Poly::from_i64(&[1, -1]);
    let table = match kind {
        GenFuncKind::BallBivariate => GenFuncTable::Bivariate(bivariate(&[vec![1]], len)),
        GenFuncKind::ShellBivariate => GenFuncTable::Bivariate(bivariate(&[vec![1, -1]], len)),
        GenFuncKind::BallFixedRadius | GenFuncKind::BallFixedDim => {
            // Same closed form in either variable since B(x,y) is symmetric.
            let k = fixed.unwrap_or_default();
            let num = one_plus.pow_trunc(k, len);
            let den = one_minus.pow_trunc(k + 1, len);
            GenFuncTable::Univariate(divide(&num, &den, len).into_iter().map(to_count).collect())
        }
        GenFuncKind::ShellFixedRadius => {
            let d = fixed.unwrap_or_default();
            let (num, den) = if d == 0 {
                (Poly::one(), one_minus.clone())
            } else {
                let num = Poly::from_i64(&[0, 2]).mul_trunc(&one_plus.pow_trunc(d - 1, len), len);
                (num, one_minus.pow_trunc(d + 1, len))
            };
            GenFuncTable::Univariate(divide(&num, &den, len).into_iter().map(to_count).collect())
        }
        GenFuncKind::ShellFixedDim => {
            let n = fixed.unwrap_or_default();
            let num = one_plus.pow_trunc(n, len);
            let den = one_minus.pow_trunc(n, len);
            GenFuncTable::Univariate(divide(&num, &den, len).into_iter().map(to_count).collect())
        }
    };
    Ok(table)
}
