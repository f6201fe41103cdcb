//! Criterion benchmarks for `fpp-core`; see `benches/`.
