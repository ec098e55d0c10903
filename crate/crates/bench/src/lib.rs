//! Benchmarks for the diagram engine; see `benches/`.
