//! Basic tilting modules and 2-term silting complexes over Dynkin path
//! algebras, their endomorphism algebras, and the tilted / strictly shod
//! classification of those algebras.

#![allow(clippy::needless_range_loop)]

pub mod classify;
pub mod complex;
pub mod endo;
pub mod error;
pub mod fixtures;
pub mod linalg;
pub mod module_cat;
pub mod quiver;
pub mod report;
pub mod silting;
pub mod suite;

pub use error::{Error, Result};
