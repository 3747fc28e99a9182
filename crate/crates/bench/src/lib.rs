//! Criterion benchmarks for `tsvf-core` live in `benches/`.
