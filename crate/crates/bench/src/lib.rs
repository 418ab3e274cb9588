//! Criterion benchmarks for `immaculate-core`; see `benches/`.
