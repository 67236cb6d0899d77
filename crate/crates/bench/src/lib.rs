//! Criterion benchmarks for qce-core live in `benches/`.
