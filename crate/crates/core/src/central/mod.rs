//! Calculus on central functions of `tau` and the quantum radius `r`.

pub mod function;
pub mod line;
pub mod poly;
pub mod psi;

pub use function::CentralFunction;
pub use poly::CentralPoly;
