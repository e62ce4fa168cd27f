//! Criterion benchmarks for `minortotals`; see `benches/core_bench.rs`.
