//! Criterion benchmarks for `genpos-core`; see `benches/core.rs`.
//!
//! Run with `cargo bench -p genpos-bench`.
