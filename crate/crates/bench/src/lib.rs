//! Criterion benchmarks for parslit live in `benches/`.
