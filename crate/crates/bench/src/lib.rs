//! Criterion benchmarks for the verification pipeline; see `benches/`.

/// Parameter range used by the scan and certification benchmarks.
pub const BENCH_RANGE: (f64, f64) = (2.13, 2.34);
