//! Finite-dimensional algebras and their modules.

mod basic;
mod bqa;
mod module;
mod sc;

pub use basic::{AddWitness, BasicAlgebra, Cover, Dim, Projective, Relation};
pub use bqa::{Bqa, Sparse};
pub use module::{sum_injections, ModMap, Module, Shape};
pub use sc::{BasicPresentation, ScAlgebra, ScModule};
