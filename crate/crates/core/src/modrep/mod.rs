//! Modular representations: construction, Hom spaces, decomposition,
//! vertices and Heller translates.

pub mod brauer;
pub mod hom;
pub mod io;
pub mod meataxe;
mod module;
pub mod vertex;

pub use brauer::{brauer_character, brauer_value, lift_character};
pub use hom::{endomorphisms, hom_space};
pub use io::{load_module, save_module};
pub use meataxe::{composition_factors, decompose, distinct_factors, is_irreducible, is_isomorphic, Decomposition};
pub use module::{one_dim_modules, ModuleRep, DEFAULT_DIM_CAP};
pub use vertex::{is_projective, lift_char_value, omega, vertex, Vertex, VertexReport};

#[cfg(test)]
mod tests;
