//! Benchmarks for the `bisyz` pipeline; see `benches/pipeline.rs`.
