//! Criterion benchmarks for the symdyn decision procedures; see `benches/`.
