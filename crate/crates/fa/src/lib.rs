//! `fa`: batch CLI over presented filtered algebras.  The library surface
//! exists for the binary and the integration tests; the DSL, report
//! rendering, and command implementations live here.

pub mod commands;
pub mod dsl;
pub mod report;
