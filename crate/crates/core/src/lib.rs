pub mod arrangement;
pub mod error;
pub mod exact;
pub mod fixtures;
pub mod invariants;
pub mod poly;
pub mod presentations;
pub mod salvetti;

pub use error::{Error, Result};
