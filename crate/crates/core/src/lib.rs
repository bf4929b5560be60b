//! Exact arithmetic toolkit for (t,r) broadcast domination.
//!
//! A broadcast of strength `t` placed on a vertex delivers `t - d` reception to
//! every vertex at distance `d < t`. A set of broadcasts dominates when every
//! vertex collects at least `r`. The crate covers four areas:
//!
//! * [`lattice`]: sizes of l1 shells and balls in `Z^n`, their generating
//!   functions, Delannoy numbers and the ball bijection `B_n(d) <-> B_d(n)`.
//! * [`coverage`]: unwasted coverage of a single broadcast, the resulting
//!   lower bound for finite grids and the density ceiling used by searches.
//! * [`pattern`]: periodic broadcast patterns on infinite grids (tower sets
//!   `T(d,e)` and general sublattices in Hermite normal form).
//! * [`graph`]: small explicit graphs, exact domination numbers and the
//!   cycle/torus counterexample family for the Vizing analog.

pub mod coverage;
pub mod error;
pub mod graph;
pub mod lattice;
pub mod pattern;
pub mod series;

pub use coverage::{coverage, coverage_closed_form, domination_lower_bound, max_potential_d, GridDims, Params};
pub use error::{Error, Result};
pub use graph::{
    gamma_exact, is_dominating_set, parse_graph_expr, reception_map, verify_cycle_lemma, verify_torus_counterexample,
    vizing_scan, BroadcastSet, FiniteGraph, GammaOutcome,
};
pub use lattice::{
    ball_bijection, ball_size, delannoy, genfunc_coefficients, shell_enumerate, shell_size, tuple_decode, tuple_encode,
    GenFuncKind, GenFuncTable, LatticePoint, Sign, SignedTuple, TupleSequence,
};
pub use pattern::{
    is_dominating_lattice, is_dominating_tower, lattice_search_3d, min_density_search, reception_table,
    tower_reception, ReceptionProfile, SublatticePattern, TowerPattern,
};

/// Exact nonnegative integer of unbounded size.
pub type Count = num_bigint::BigUint;
