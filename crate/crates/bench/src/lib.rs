//! Benchmarks for the qflag engine live in benches/.
