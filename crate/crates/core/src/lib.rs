//! Dyck paths, cover-inclusive Dyck tilings, chord posets and their linear
//! extensions, and the strip and ribbon growth bijections connecting them.

pub mod bijection;
pub mod dyckpath;
pub mod error;
pub mod matching;
pub mod permstat;
pub mod poly;
pub mod tiling;
pub mod treeposet;

pub use error::{Error, Result};

/// Largest order accepted by the exhaustive enumerators.
pub const MAX_EXHAUSTIVE_ORDER: usize = 10;
