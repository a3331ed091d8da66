//! Benchmark-only crate; see `benches/kernel.rs`. Run with `cargo bench`.
