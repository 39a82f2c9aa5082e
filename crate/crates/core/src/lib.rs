//! Finite T0 spaces, their sobriety-type properties, power spaces and
//! reflections.
//!
//! Finite spaces are represented by their specialization order: open sets are
//! up-sets and closed sets are down-sets. The countably infinite cofinite space
//! is handled symbolically.

pub mod classify;
pub mod cli;
pub mod config;
pub mod enumerate;
pub mod error;
pub mod generate;
pub mod iso;
pub mod lattice;
pub mod order;
pub mod powerspace;
pub mod reflect;
pub mod rudin;
pub mod space;

pub use config::Caps;
pub use error::{Error, Result};
pub use order::{FinPoset, FinSubset};
pub use space::{Space, SpaceSubset};
