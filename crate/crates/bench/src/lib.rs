//! Criterion benchmarks for `orlicz-core`; see `benches/`.
