//! Exact computations in the representation theory of finite-dimensional
//! algebras: global dimensions of path algebras over bound quiver algebras,
//! triangular matrix rings, endomorphism algebras of generator-cogenerators,
//! and derived-category generation certificates.

pub mod algebra;
pub mod derived;
pub mod endo;
pub mod error;
pub mod exactlin;
pub mod gen;
pub mod quiver;
pub mod repcat;
pub mod repdim;
pub mod trimat;

pub use algebra::{BasicAlgebra, Dim, ModMap, Module, Shape};
pub use error::{Error, Result};
pub use exactlin::{Field, Mat, Rat, Scalar};
pub use quiver::{Path, Quiver};
