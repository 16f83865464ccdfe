//! Criterion benchmarks for the nef-threshold engine live in `benches/`.
