//! The cycle/torus counterexample family for the (t,r) Vizing analog and
//! empirical scans of the two generalized conjectures.
//!
//! With `n = 2(t - r + 1)`, a single broadcast on `C_n` leaves the antipodal
//! vertex at reception `r - 1`, so `gamma(C_n) = 2`. On `C_n x C_n` two
//! antipodal broadcasts give every vertex `2t - n = 2r - 2`, which is enough
//! once `r >= 2`, so `gamma(C_n x C_n) = 2 < 4`.

use serde::Serialize;

use super::expr::GraphExpr;
use super::{gamma_exact, is_dominating_set, reception_map, BroadcastSet, FiniteGraph, GammaOutcome};
use crate::coverage::Params;
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum ReportStatus {
    Pass,
    Fail,
    NotApplicable,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CycleLemmaReport {
    pub params: Params,
    /// Cycle length `2(t - r + 1)`.
    pub n: u64,
    pub status: ReportStatus,
    pub gamma: Option<usize>,
    pub witness: Vec<usize>,
    pub witness_receptions: Vec<u64>,
    pub witness_dominates: bool,
    /// Reception at `n/2` from a lone broadcast at 0; `r - 1` by the construction.
    pub single_broadcast_antipode_reception: Option<u64>,
}

fn cycle_length(p: Params) -> u64 {
    2 * u64::from(p.t() - p.r() + 1)
}

/// Checks that `gamma_{t,r}(C_{2(t-r+1)}) = 2` and that `{0, n/2}` dominates.
pub fn verify_cycle_lemma(p: Params) -> CycleLemmaReport {
    let n = cycle_length(p);
    if n < 3 {
        return CycleLemmaReport {
            params: p,
            n,
            status: ReportStatus::NotApplicable,
            gamma: None,
            witness: vec![],
            witness_receptions: vec![],
            witness_dominates: false,
            single_broadcast_antipode_reception: None,
        };
    }
    let n_us = n as usize;
    let g = FiniteGraph::cycle(n_us);
    let gamma = gamma_exact(&g, p, n_us).gamma();
    let witness = BroadcastSet::new(vec![0, n_us / 2]);
    let receptions = reception_map(&g, &witness, p.t()).expect("witness vertices exist");
    let dominates = receptions.iter().all(|&x| x >= u64::from(p.r()));
    let lone = reception_map(&g, &BroadcastSet::new(vec![0]), p.t()).expect("vertex 0 exists");
    let status = if gamma == Some(2) && dominates { ReportStatus::Pass } else { ReportStatus::Fail };
    CycleLemmaReport {
        params: p,
        n,
        status,
        gamma,
        witness: witness.vertices().to_vec(),
        witness_receptions: receptions,
        witness_dominates: dominates,
        single_broadcast_antipode_reception: Some(lone[n_us / 2]),
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TorusReport {
    pub params: Params,
    pub n: u64,
    pub status: ReportStatus,
    pub gamma_torus: Option<usize>,
    pub gamma_cycle: Option<usize>,
    /// `gamma(C_n)^2`, the bound the naive Vizing analog would demand.
    pub vizing_bound: Option<usize>,
    pub violates_vizing_analog: bool,
    /// Witness as `(i, j)` coordinates on the torus.
    pub witness: Vec<Vec<usize>>,
    pub witness_dominates: bool,
    pub min_reception: u64,
    /// `2r - 2`, the reception the construction predicts on the anti-diagonal.
    pub predicted_min_reception: u64,
}

/// Checks `gamma_{t,r}(C_n x C_n) = 2 < gamma_{t,r}(C_n)^2 = 4` for `n = 2(t-r+1)`.
///
/// Needs `r >= 2` and `n >= 3`.
pub fn verify_torus_counterexample(p: Params) -> Result<TorusReport> {
    let n = cycle_length(p);
    if p.r() < 2 {
        return Err(Error::Precondition(format!("torus counterexample needs r >= 2, got {p}")));
    }
    if n < 3 {
        return Err(Error::Precondition(format!("cycle length 2(t-r+1) = {n} is below 3 for {p}")));
    }
    let n_us = n as usize;
    let cycle = FiniteGraph::cycle(n_us);
    let torus = FiniteGraph::box_product(&cycle, &cycle);
    let gamma_torus = gamma_exact(&torus, p, torus.order()).gamma();
    let gamma_cycle = gamma_exact(&cycle, p, n_us).gamma();
    let labels = vec![vec![0, 0], vec![n_us / 2, n_us / 2]];
    let witness = BroadcastSet::from_labels(&torus, &labels).expect("witness labels exist");
    let receptions = reception_map(&torus, &witness, p.t())?;
    let min_reception = receptions.iter().copied().min().unwrap_or(0);
    let witness_dominates = is_dominating_set(&torus, &witness, p)?;
    let vizing_bound = gamma_cycle.map(|g| g * g);
    let violates = matches!((gamma_torus, vizing_bound), (Some(a), Some(b)) if a < b);
    let ok = gamma_torus == Some(2) && gamma_cycle == Some(2) && witness_dominates && violates;
    Ok(TorusReport {
        params: p,
        n,
        status: if ok { ReportStatus::Pass } else { ReportStatus::Fail },
        gamma_torus,
        gamma_cycle,
        vizing_bound,
        violates_vizing_analog: violates,
        witness: labels,
        witness_dominates,
        min_reception,
        predicted_min_reception: 2 * u64::from(p.r()) - 2,
    })
}

/// Domination numbers gathered for one `(G, H)` pair.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PairGammas {
    pub product_tr: usize,
    pub product_t1: usize,
    pub g_tr: usize,
    pub h_tr: usize,
    pub g_t1: usize,
    pub h_t1: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PairReport {
    pub g: String,
    pub h: String,
    /// `None` when some instance hit a cap or failed to parse; see `error`.
    pub gammas: Option<PairGammas>,
    /// `2 gamma_{t,r}(G x H) >= gamma_{t,r}(G) gamma_{t,1}(H)`.
    pub conjecture1_g_h: Option<bool>,
    /// Same inequality with the roles of `G` and `H` exchanged.
    pub conjecture1_h_g: Option<bool>,
    /// `gamma_{t,1}(G x H) >= gamma_{t,1}(G) gamma_{t,1}(H)`.
    pub conjecture2: Option<bool>,
    pub error: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VizingScanReport {
    pub params: Params,
    pub pairs: Vec<PairReport>,
    /// Counterexamples found among the scanned pairs, if any.
    pub conjecture1_violations: usize,
    pub conjecture2_violations: usize,
}

fn exact(g: &FiniteGraph, p: Params, what: &str) -> std::result::Result<usize, String> {
    match gamma_exact(g, p, g.order()) {
        GammaOutcome::Exact { gamma, .. } => Ok(gamma),
        GammaOutcome::CapExceeded { reason, .. } => Err(format!("{what} {p}: search stopped ({reason:?})")),
    }
}

fn scan_pair(g_src: &str, h_src: &str, p: Params) -> std::result::Result<PairGammas, String> {
    let ge = GraphExpr::parse(g_src).map_err(|e| format!("G: {e}"))?;
    let he = GraphExpr::parse(h_src).map_err(|e| format!("H: {e}"))?;
    let prod = GraphExpr::Product(Box::new(ge.clone()), Box::new(he.clone()));
    GraphExpr::parse(&prod.to_string()).map_err(|e| format!("G x H: {e}"))?;
    let (g, h, gh) = (ge.build(), he.build(), prod.build());
    let p1 = p.with_unit_reception();
    Ok(PairGammas {
        product_tr: exact(&gh, p, "G x H")?,
        product_t1: exact(&gh, p1, "G x H")?,
        g_tr: exact(&g, p, "G")?,
        h_tr: exact(&h, p, "H")?,
        g_t1: exact(&g, p1, "G")?,
        h_t1: exact(&h, p1, "H")?,
    })
}

/// Evaluates both generalized Vizing inequalities on each pair of graph expressions.
///
/// Failures on one pair are recorded in its report and the scan moves on.
pub fn vizing_scan(pairs: &[(String, String)], p: Params) -> VizingScanReport {
    let reports: Vec<PairReport> = pairs
        .iter()
        .map(|(g, h)| match scan_pair(g, h, p) {
            Ok(gm) => PairReport {
                g: g.clone(),
                h: h.clone(),
                conjecture1_g_h: Some(2 * gm.product_tr >= gm.g_tr * gm.h_t1),
                conjecture1_h_g: Some(2 * gm.product_tr >= gm.h_tr * gm.g_t1),
                conjecture2: Some(gm.product_t1 >= gm.g_t1 * gm.h_t1),
                gammas: Some(gm),
                error: None,
            },
            Err(e) => PairReport {
                g: g.clone(),
                h: h.clone(),
                gammas: None,
                conjecture1_g_h: None,
                conjecture1_h_g: None,
                conjecture2: None,
                error: Some(e),
            },
        })
        .collect();
    let count =
        |f: fn(&PairReport) -> [Option<bool>; 2]| reports.iter().filter(|r| f(r).contains(&Some(false))).count();
    VizingScanReport {
        params: p,
        conjecture1_violations: count(|r| [r.conjecture1_g_h, r.conjecture1_h_g]),
        conjecture2_violations: count(|r| [r.conjecture2, None]),
        pairs: reports,
    }
}
