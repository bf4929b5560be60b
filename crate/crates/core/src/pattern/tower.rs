use std::fmt;

use serde::{Deserialize, Serialize};

use super::{ReceptionProfile, RowContribution};
use crate::coverage::Params;
use crate::error::{Error, Result};

/// Tower set `T(d,e) = {(m d + k e, k) : m, k in Z}` in `Z^2`, density `1/d`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct TowerPattern {
    pub d: u64,
    pub e: u64,
}

impl TowerPattern {
    pub fn new(d: u64, e: u64) -> Result<Self> {
        if d == 0 || e >= d {
            return Err(Error::InvalidTower { d, e });
        }
        Ok(TowerPattern { d, e })
    }

    /// Whether `(x, y)` holds a broadcast.
    pub fn contains(&self, x: i64, y: i64) -> bool {
        let d = self.d as i64;
        (x - y * self.e as i64).rem_euclid(d) == 0
    }

    /// Smallest nonnegative broadcast column in row `y`.
    fn row_offset(&self, y: i64) -> i64 {
        (y * self.e as i64).rem_euclid(self.d as i64)
    }
}

impl fmt::Display for TowerPattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "T({},{})", self.d, self.e)
    }
}

/// Reception at `(i, 0)` from every broadcast of row `y`.
///
/// All broadcasts of the row within horizontal distance `t - 1 - |y|` count,
/// so short periods where several of them reach `(i, 0)` are summed correctly.
pub(crate) fn row_contribution(t: i64, tp: TowerPattern, y: i64, i: i64) -> u64 {
    let reach = t - 1 - y.abs();
    if reach < 0 {
        return 0;
    }
    let d = tp.d as i64;
    let base = tp.row_offset(y);
    // first broadcast x = base + k d with x >= i - reach
    let k = (i - reach - base).div_euclid(d) + i64::from((i - reach - base).rem_euclid(d) != 0);
    let mut x = base + k * d;
    let mut total = 0u64;
    while x <= i + reach {
        total += (t - y.abs() - (i - x).abs()) as u64;
        x += d;
    }
    total
}

fn check_position(tp: TowerPattern, i: u64) -> Result<()> {
    if i >= tp.d {
        return Err(Error::PositionOutOfRange { i, d: tp.d });
    }
    Ok(())
}

/// Exact reception at `(i, 0)` under broadcasts on `T(d,e)`.
pub fn tower_reception(p: Params, tp: TowerPattern, i: u64) -> Result<u64> {
    check_position(tp, i)?;
    Ok(reception_at(p, tp, i as i64))
}

pub(crate) fn reception_at(p: Params, tp: TowerPattern, i: i64) -> u64 {
    let t = i64::from(p.t());
    (-(t - 1)..t).map(|y| row_contribution(t, tp, y, i)).sum()
}

/// Per-row contributions for rows `t-1` down to `-(t-1)` plus the column sums.
pub fn reception_table(p: Params, tp: TowerPattern) -> ReceptionProfile {
    let t = i64::from(p.t());
    let width = tp.d as i64;
    let rows: Vec<RowContribution> = (-(t - 1)..t)
        .rev()
        .map(|y| RowContribution { y, contributions: (0..width).map(|i| row_contribution(t, tp, y, i)).collect() })
        .collect();
    let receptions = (0..tp.d as usize).map(|i| rows.iter().map(|row| row.contributions[i]).sum()).collect();
    ReceptionProfile { pattern: tp.to_string(), params: p, receptions, rows: Some(rows) }
}

/// Whether broadcasts on `T(d,e)` give every vertex at least `r`.
///
/// Only `0 <= i <= d/2` is examined: the set is invariant under translation by
/// `(d, 0)` and under the point reflection `(x,y) -> (-x,-y)`, so `(i,0)` and
/// `(d-i,0)` receive the same amount. Positions within `t - r` of a row-0
/// broadcast already get `r` from it alone and are skipped.
pub fn is_dominating_tower(p: Params, tp: TowerPattern) -> bool {
    let slack = i64::from(p.t() - p.r());
    let d = tp.d as i64;
    (0..=d / 2).filter(|&i| i.min(d - i) > slack).all(|i| reception_at(p, tp, i) >= u64::from(p.r()))
}

/// Unoptimized check of every fundamental position `0..d`.
pub fn is_dominating_tower_exhaustive(p: Params, tp: TowerPattern) -> bool {
    (0..tp.d as i64).all(|i| reception_at(p, tp, i) >= u64::from(p.r()))
}
