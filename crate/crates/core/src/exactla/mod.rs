//! Exact rational linear algebra.

mod matrix;
mod rat;
mod solve;
mod tensor;

pub use matrix::{kron, Matrix, Vector};
pub use rat::Rat;
pub use solve::{invert, rank, solve_affine, AffineSolution};
pub use tensor::{matrix_of, unflatten, Leg, Tensor};
