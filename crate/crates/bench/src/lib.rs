//! Criterion benchmarks for `bimean-core`; see `benches/`.
