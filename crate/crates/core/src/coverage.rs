//! Unwasted coverage of a single broadcast on `Z^n` and the bounds derived from it.

use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::lattice::shell_size;
use crate::Count;

/// Transmission strength `t` and required reception `r`, with `t >= r >= 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "RawParams")]
pub struct Params {
    t: u32,
    r: u32,
}

#[derive(Deserialize)]
struct RawParams {
    t: u32,
    r: u32,
}

impl TryFrom<RawParams> for Params {
    type Error = Error;

    fn try_from(raw: RawParams) -> Result<Self> {
        Params::new(raw.t, raw.r)
    }
}

impl Params {
    pub fn new(t: u32, r: u32) -> Result<Self> {
        if r < 1 || t < r {
            return Err(Error::InvalidParams { t, r });
        }
        Ok(Params { t, r })
    }

    pub fn t(self) -> u32 {
        self.t
    }

    pub fn r(self) -> u32 {
        self.r
    }

    /// Same transmission strength with `r = 1`.
    pub fn with_unit_reception(self) -> Self {
        Params { t: self.t, r: 1 }
    }
}

impl fmt::Display for Params {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.t, self.r)
    }
}

/// Side lengths of a finite grid `P_a x P_b x ...`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GridDims {
    dims: Vec<u64>,
}

impl GridDims {
    pub fn new(dims: Vec<u64>) -> Result<Self> {
        if dims.is_empty() || dims.contains(&0) {
            return Err(Error::InvalidGrid);
        }
        Ok(GridDims { dims })
    }

    pub fn dims(&self) -> &[u64] {
        &self.dims
    }

    pub fn n(&self) -> usize {
        self.dims.len()
    }

    pub fn volume(&self) -> Count {
        self.dims.iter().map(|&s| BigUint::from(s)).product()
    }
}

/// `C_{t,r}(Z^n)`: total unwasted reception one broadcast supplies to `Z^n`.
///
/// Shells within distance `t - r` get the full `r`; shells with `t - r < d < t`
/// get `t - d`, all of it useful.
pub fn coverage(n: usize, p: Params) -> Count {
    let (t, r) = (p.t as usize, p.r as usize);
    let full: Count = (1..=t - r).map(|d| shell_size(n, d)).sum();
    let partial: Count = (t - r + 1..t).map(|d| shell_size(n, d) * BigUint::from(t - d)).sum();
    partial + full * BigUint::from(r) + BigUint::from(r)
}

fn rat(num: i64, den: i64) -> BigRational {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

/// Closed-form polynomial in `t` and `r` for `C_{t,r}(Z^n)`, `n` in `1..=4`.
pub fn coverage_closed_form(n: usize, p: Params) -> Result<Count> {
    let t = BigRational::from_integer(BigInt::from(p.t));
    let r = BigRational::from_integer(BigInt::from(p.r));
    let pw = |x: &BigRational, k: i32| num_traits::pow(x.clone(), k as usize);
    // (coefficient, power of r, power of t)
    let terms: &[(BigRational, i32, i32)] = &match n {
        1 => vec![(rat(2, 1), 1, 1), (rat(-1, 1), 2, 0)],
        2 => vec![(rat(2, 3), 3, 0), (rat(-2, 1), 2, 1), (rat(2, 1), 1, 2), (rat(1, 3), 1, 0)],
        3 => vec![
            (rat(-1, 3), 4, 0),
            (rat(4, 3), 3, 1),
            (rat(-2, 1), 2, 2),
            (rat(-2, 3), 2, 0),
            (rat(4, 3), 1, 3),
            (rat(4, 3), 1, 1),
        ],
        4 => vec![
            (rat(2, 15), 5, 0),
            (rat(-2, 3), 4, 1),
            (rat(4, 3), 3, 2),
            (rat(2, 3), 3, 0),
            (rat(-4, 3), 2, 3),
            (rat(-2, 1), 2, 1),
            (rat(2, 3), 1, 4),
            (rat(2, 1), 1, 2),
            (rat(1, 5), 1, 0),
        ],
        _ => return Err(Error::ClosedFormDimension(n)),
    };
    let value = terms.iter().fold(BigRational::zero(), |acc, (c, rp, tp)| acc + c * pw(&r, *rp) * pw(&t, *tp));
    assert!(value.is_integer(), "coverage polynomial must be integral at integer points");
    Ok(value.to_integer().to_biguint().expect("coverage is positive for valid parameters"))
}

/// `ceil(r |V| / C_{t,r}(Z^n))`, the coverage lower bound on `gamma_{t,r}` of a finite grid.
pub fn domination_lower_bound(g: &GridDims, p: Params) -> Count {
    let c = coverage(g.n(), p);
    let need = BigUint::from(p.r) * g.volume();
    Integer::div_ceil(&need, &c)
}

/// `floor(C_{t,r}(Z^n) / r)`: the most vertices one broadcast can fully serve,
/// and so the largest period `d` worth trying for a density-`1/d` pattern.
pub fn max_potential_d(n: usize, p: Params) -> Count {
    coverage(n, p) / BigUint::from(p.r)
}

/// [`max_potential_d`] as a native integer for the pattern searches.
pub(crate) fn max_potential_d_u64(n: usize, p: Params) -> Result<u64> {
    let v = max_potential_d(n, p);
    u64::try_from(&v).map_err(|_| Error::Overflow(v.to_string()))
}
