//! Criterion benchmarks for `broadcast-core`; see `benches/`.
