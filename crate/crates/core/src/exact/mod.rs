//! Exact rational linear algebra.

pub mod form;
pub mod matrix;
pub mod poly;
pub mod rational;
pub mod subspace;

pub use form::{signature, Signature, SymmetricForm};
pub use matrix::{solve, Matrix, Rref};
pub use poly::{charpoly, Poly};
pub use rational::{ParseRationalError, Rational};
pub use subspace::{kernel, RowReducer, Subspace};
