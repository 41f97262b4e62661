//! IO and orchestration companion to the kernel crate: delimited table
//! files, trace rendering, the identity-check suite behind `verify`, and
//! the benchmark harness.

pub mod bench;
pub mod checks;
pub mod table_io;
pub mod tracefmt;
