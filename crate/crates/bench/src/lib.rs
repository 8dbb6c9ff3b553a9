//! Criterion benchmarks for the `nlie` library; see `benches/`.
