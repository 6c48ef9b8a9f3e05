//! Integration layer: linear algebra types working together, and the
//! solver against direct-solve oracles.

#[path = "../common/mod.rs"]
mod common;

mod matvec;
