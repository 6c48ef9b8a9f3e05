//! Unit layer: one type or function at a time, no cross-module pipelines.

#[path = "../common/mod.rs"]
mod common;

mod manifest;
mod matrix;
