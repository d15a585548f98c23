//! Exact linear algebra over GF(2^e), auxiliary prime fields and cyclotomic fields.

pub mod cyclotomic;
pub mod field;
pub mod matrix;
pub mod poly;
pub mod prime;

pub use cyclotomic::Cyclotomic;
pub use field::{FieldElem, Gf2e};
pub use matrix::{solve_sylvester, FqMatrix, RowSpace};
pub use poly::Poly;
pub use prime::PrimeField;
