//! Endo-trivial modules for finite groups with Klein-four Sylow 2-subgroups.

pub mod blocks;
pub mod chartab;
pub mod cli;
pub mod error;
pub mod fqlinalg;
pub mod green;
pub mod group;
pub mod modrep;

pub use error::{Error, Result};
