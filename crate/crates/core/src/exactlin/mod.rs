//! Exact linear algebra over the rationals and prime fields.

mod mat;
mod rat;
mod scalar;

pub use mat::{Coordinates, Echelon, Mat, Rref, Vector};
pub use rat::{ParseRatError, Rat};
pub use scalar::{Field, Scalar};
