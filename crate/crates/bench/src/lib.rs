//! Benchmark-only crate; see `benches/sweeps.rs`.
