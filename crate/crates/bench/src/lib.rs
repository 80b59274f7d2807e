//! Fixtures shared by the benchmarks.

use quivhom_core::algebra::Bqa;
use quivhom_core::derived::Complex;
use quivhom_core::endo::SummandList;
use quivhom_core::gen;
use quivhom_core::quiver::{standard, Quiver};
use quivhom_core::repcat::RepCategory;
use quivhom_core::{Field, Mat};

pub fn ground() -> Bqa {
    Bqa::path_algebra(standard::point(), Field::Rationals).expect("the point quiver is valid")
}

/// Representations of `q` over the ground field.
pub fn over_ground(q: Quiver) -> RepCategory {
    RepCategory::new(q, ground()).expect("acyclic quiver")
}

/// `{k}`, the only generator-cogenerator of the ground field up to multiplicity.
pub fn ground_summands() -> SummandList {
    SummandList::new(vec![ground().basic().simple(0)], vec!["k".into()]).expect("one summand")
}

/// An `n x n` rational matrix with small random integer entries.
pub fn square(n: usize, seed: u64) -> Mat {
    gen::matrix(Field::Rationals, n, n, &mut gen::rng(seed))
}

/// A bounded complex of length `len` with vertex dimensions at most `max_dim`.
pub fn complex(rc: &RepCategory, len: usize, max_dim: usize, seed: u64) -> Complex {
    let alg = rc.algebra();
    let mut rng = gen::rng(seed);
    gen::complex(alg, 0, len, &mut |r| gen::free_module(alg.field, &alg.shape, max_dim, r), &mut rng)
}
