use serde::Serialize;

use super::{BroadcastSet, FiniteGraph};
use crate::coverage::Params;
use crate::error::{Error, Result};

/// Default number of search nodes [`gamma_exact`] may expand.
pub const DEFAULT_WORK_BUDGET: u64 = 200_000_000;

fn check_set(g: &FiniteGraph, set: &BroadcastSet) -> Result<()> {
    match set.vertices().iter().find(|&&v| v >= g.order()) {
        Some(&vertex) => Err(Error::VertexOutOfRange { vertex, order: g.order() }),
        None => Ok(()),
    }
}

// Reception vertex v gets from a broadcast on u.
fn weight(g: &FiniteGraph, t: u32, u: usize, v: usize) -> u64 {
    match g.distance(u, v) {
        Some(d) if d < t => u64::from(t - d),
        _ => 0,
    }
}

/// Reception at every vertex: the sum of `t - dist(b, v)` over broadcasts `b`
/// with `dist(b, v) < t`.
pub fn reception_map(g: &FiniteGraph, set: &BroadcastSet, t: u32) -> Result<Vec<u64>> {
    check_set(g, set)?;
    Ok((0..g.order()).map(|v| set.vertices().iter().map(|&b| weight(g, t, b, v)).sum()).collect())
}

pub fn is_dominating_set(g: &FiniteGraph, set: &BroadcastSet, p: Params) -> Result<bool> {
    let r = u64::from(p.r());
    Ok(reception_map(g, set, p.t())?.into_iter().all(|x| x >= r))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum CapReason {
    SizeCap,
    WorkBudget,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "status", rename_all = "kebab-case")]
pub enum GammaOutcome {
    /// `gamma` is exact; `witness` is the lexicographically least minimum set.
    Exact { gamma: usize, witness: BroadcastSet },
    /// Search stopped early. `upper_bound` is a greedy dominating set.
    CapExceeded { reason: CapReason, proven_lower_bound: usize, upper_bound: BroadcastSet },
}

impl GammaOutcome {
    pub fn gamma(&self) -> Option<usize> {
        match self {
            GammaOutcome::Exact { gamma, .. } => Some(*gamma),
            GammaOutcome::CapExceeded { .. } => None,
        }
    }

    pub fn witness(&self) -> Option<&BroadcastSet> {
        match self {
            GammaOutcome::Exact { witness, .. } => Some(witness),
            GammaOutcome::CapExceeded { .. } => None,
        }
    }
}

/// Greedy dominating set: repeatedly add the vertex that removes the most deficit.
pub fn greedy_dominating_set(g: &FiniteGraph, p: Params) -> BroadcastSet {
    let n = g.order();
    let r = u64::from(p.r());
    let mut rec = vec![0u64; n];
    let mut chosen = Vec::new();
    while rec.iter().any(|&x| x < r) {
        let gain = |u: usize| -> u64 { (0..n).map(|v| (rec[v] + weight(g, p.t(), u, v)).min(r) - rec[v].min(r)).sum() };
        let best = (0..n)
            .filter(|u| !chosen.contains(u))
            .max_by_key(|&u| (gain(u), std::cmp::Reverse(u)))
            .expect("an undominated vertex can always broadcast to itself");
        for (v, x) in rec.iter_mut().enumerate() {
            *x += weight(g, p.t(), best, v);
        }
        chosen.push(best);
    }
    BroadcastSet::new(chosen)
}

struct Search {
    n: usize,
    r: u64,
    // w[u][v]: reception u delivers to v
    w: Vec<Vec<u64>>,
    // suffix_best[s][v]: max over u >= s of w[u][v]
    suffix_best: Vec<Vec<u64>>,
    rec: Vec<u64>,
    chosen: Vec<usize>,
    nodes: u64,
    budget: u64,
}

enum Step {
    Found,
    Exhausted,
    OutOfBudget,
}

impl Search {
    fn dfs(&mut self, start: usize, remaining: usize) -> Step {
        self.nodes += 1;
        if self.nodes > self.budget {
            return Step::OutOfBudget;
        }
        if self.rec.iter().all(|&x| x >= self.r) {
            return Step::Found;
        }
        if remaining == 0 || start >= self.n {
            return Step::Exhausted;
        }
        // Every vertex must still be able to reach r with the picks left.
        let best = &self.suffix_best[start];
        let hopeless =
            self.rec.iter().zip(best).any(|(&have, &b)| have < self.r && have + remaining as u64 * b < self.r);
        if hopeless {
            return Step::Exhausted;
        }
        for u in start..=self.n - remaining {
            for v in 0..self.n {
                self.rec[v] += self.w[u][v];
            }
            self.chosen.push(u);
            let step = self.dfs(u + 1, remaining - 1);
            if !matches!(step, Step::Exhausted) {
                return step;
            }
            self.chosen.pop();
            for v in 0..self.n {
                self.rec[v] -= self.w[u][v];
            }
        }
        Step::Exhausted
    }
}

/// Exact `gamma_{t,r}(g)` by iterative deepening over set sizes `1..=size_cap`.
pub fn gamma_exact(g: &FiniteGraph, p: Params, size_cap: usize) -> GammaOutcome {
    gamma_exact_with_budget(g, p, size_cap, DEFAULT_WORK_BUDGET)
}

/// [`gamma_exact`] with an explicit bound on expanded search nodes.
///
/// Subsets of each size are visited in lexicographic order, so the first
/// dominating one found is the lexicographically least minimum set. A branch
/// is cut once some vertex cannot reach `r` even if every remaining pick
/// went to its strongest not-yet-passed broadcaster.
pub fn gamma_exact_with_budget(g: &FiniteGraph, p: Params, size_cap: usize, budget: u64) -> GammaOutcome {
    let n = g.order();
    if n == 0 {
        return GammaOutcome::Exact { gamma: 0, witness: BroadcastSet::default() };
    }
    let w: Vec<Vec<u64>> = (0..n).map(|u| (0..n).map(|v| weight(g, p.t(), u, v)).collect()).collect();
    let mut suffix_best = vec![vec![0u64; n]; n + 1];
    for s in (0..n).rev() {
        for v in 0..n {
            suffix_best[s][v] = suffix_best[s + 1][v].max(w[s][v]);
        }
    }
    let mut search =
        Search { n, r: u64::from(p.r()), w, suffix_best, rec: vec![0; n], chosen: Vec::new(), nodes: 0, budget };
    for k in 1..=size_cap.min(n) {
        match search.dfs(0, k) {
            Step::Found => {
                return GammaOutcome::Exact { gamma: k, witness: BroadcastSet::new(search.chosen) };
            }
            Step::Exhausted => {}
            Step::OutOfBudget => {
                return GammaOutcome::CapExceeded {
                    reason: CapReason::WorkBudget,
                    proven_lower_bound: k,
                    upper_bound: greedy_dominating_set(g, p),
                };
            }
        }
    }
    GammaOutcome::CapExceeded {
        reason: CapReason::SizeCap,
        proven_lower_bound: size_cap.min(n) + 1,
        upper_bound: greedy_dominating_set(g, p),
    }
}
