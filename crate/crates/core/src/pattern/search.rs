use rayon::prelude::*;
use serde::Serialize;

use super::sublattice::{is_dominating_lattice_capped, SublatticePattern};
use super::tower::{is_dominating_tower, TowerPattern};
use crate::coverage::{max_potential_d_u64, Params};
use crate::error::Result;

/// Outcome of one period `d` during [`min_density_search_traced`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PeriodTrace {
    pub d: u64,
    /// Shifts examined in sequential order before stopping (all `d` when none dominate).
    pub shifts_tried: u64,
    pub dominating_shift: Option<u64>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SearchTrace {
    pub params: Params,
    pub ceiling: u64,
    pub pattern: TowerPattern,
    pub periods: Vec<PeriodTrace>,
}

// Smallest dominating shift for period d. `find_first` keeps the answer
// identical to the sequential scan whatever the worker schedule.
fn first_dominating_shift(p: Params, d: u64) -> Option<u64> {
    (0..d).into_par_iter().find_first(|&e| is_dominating_tower(p, TowerPattern { d, e }))
}

/// Sparsest dominating tower: the largest `d <= max_potential_d(2, p)` for
/// which some `T(d,e)` dominates, with the smallest such `e`.
pub fn min_density_search(p: Params) -> Result<TowerPattern> {
    Ok(min_density_search_traced(p)?.pattern)
}

pub fn min_density_search_traced(p: Params) -> Result<SearchTrace> {
    let ceiling = max_potential_d_u64(2, p)?;
    let mut periods = Vec::new();
    for d in (1..=ceiling).rev() {
        let found = first_dominating_shift(p, d);
        periods.push(PeriodTrace { d, shifts_tried: found.map_or(d, |e| e + 1), dominating_shift: found });
        if let Some(e) = found {
            return Ok(SearchTrace { params: p, ceiling, pattern: TowerPattern { d, e }, periods });
        }
    }
    unreachable!("T(1,0) dominates whenever t >= r")
}

/// Sparsest dominating 3D tower `{(d,0,0), (e1,1,0), (e2,0,1)}` with
/// `d <= min(index_cap, max_potential_d(3, p))`, ties broken by the
/// lexicographically smallest `(e1, e2)`.
pub fn lattice_search_3d(p: Params, index_cap: u64) -> Result<Option<SublatticePattern>> {
    let ceiling = max_potential_d_u64(3, p)?.min(index_cap);
    for d in (1..=ceiling).rev() {
        let hit = (0..d * d).into_par_iter().find_first(|&k| {
            SublatticePattern::tower3(d, k / d, k % d)
                .and_then(|sp| is_dominating_lattice_capped(p, &sp, index_cap))
                .unwrap_or(false)
        });
        if let Some(k) = hit {
            return SublatticePattern::tower3(d, k / d, k % d).map(Some);
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(t: u32, r: u32) -> Params {
        Params::new(t, r).unwrap()
    }

    #[test]
    fn search_examples() {
        assert_eq!(min_density_search(p(4, 2)).unwrap(), TowerPattern { d: 18, e: 5 });
        assert_eq!(min_density_search(p(9, 9)).unwrap().d, 49);
        assert_eq!(min_density_search(p(2, 1)).unwrap().d, 5);
        assert_eq!(min_density_search(p(1, 1)).unwrap(), TowerPattern { d: 1, e: 0 });
    }

    #[test]
    fn trace_records_rejected_periods() {
        let tr = min_density_search_traced(p(4, 2)).unwrap();
        assert_eq!(tr.ceiling, 19);
        assert_eq!(tr.periods.len(), 2);
        assert_eq!(tr.periods[0], PeriodTrace { d: 19, shifts_tried: 19, dominating_shift: None });
        assert_eq!(tr.periods[1].dominating_shift, Some(5));
    }

    #[test]
    fn search_3d_small() {
        let d_of = |sp: SublatticePattern| sp.basis()[0][0];
        assert_eq!(d_of(lattice_search_3d(p(1, 1), 10).unwrap().unwrap()), 1);
        assert_eq!(d_of(lattice_search_3d(p(2, 1), 10).unwrap().unwrap()), 7);
    }
}
