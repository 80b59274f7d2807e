//! Seeded random instances: matrices, modules, triples and bounded complexes.
//! Entries are drawn from `[-2, 2]`.

use rand::Rng;
use rand_chacha::ChaCha8Rng;

use crate::algebra::{BasicAlgebra, ModMap, Module, Shape};
use crate::derived::Complex;
use crate::exactlin::{Field, Mat, Scalar};

pub use rand::SeedableRng;
pub type GenRng = ChaCha8Rng;

pub fn rng(seed: u64) -> GenRng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn scalar(field: Field, rng: &mut GenRng) -> Scalar {
    field.from_i64(rng.gen_range(-2..=2))
}

pub fn matrix(field: Field, rows: usize, cols: usize, rng: &mut GenRng) -> Mat {
    let data = (0..rows * cols).map(|_| scalar(field, rng)).collect();
    Mat::from_vec(field, rows, cols, data)
}

/// An integer matrix with entries in `[-bound, bound]`.
pub fn int_matrix(rows: usize, cols: usize, bound: i64, rng: &mut GenRng) -> Vec<Vec<i64>> {
    (0..rows).map(|_| (0..cols).map(|_| rng.gen_range(-bound..=bound)).collect()).collect()
}

/// Arbitrary matrices on a quiver without relations, `dims[v] ≤ max_dim`.
pub fn free_module(field: Field, shape: &Shape, max_dim: usize, rng: &mut GenRng) -> Module {
    let dims: Vec<usize> = (0..shape.vertices).map(|_| rng.gen_range(0..=max_dim)).collect();
    let maps = shape.arrows.iter().map(|&(s, t)| matrix(field, dims[t], dims[s], rng)).collect();
    Module { field, dims, maps }
}

/// A random element of `Hom(m, n)` as a combination of a basis.
pub fn hom(alg: &BasicAlgebra, m: &Module, n: &Module, rng: &mut GenRng) -> ModMap {
    alg.hom_basis(m, n).iter().fold(ModMap::zero(alg.field, m, n), |acc, h| acc.add(&h.scale(&scalar(alg.field, rng))))
}

/// The cokernel of a random map between sums of indecomposable projectives,
/// with at most `max_tops` summands on each side.
pub fn quotient_module(alg: &BasicAlgebra, max_tops: usize, rng: &mut GenRng) -> Module {
    let n = alg.vertex_count();
    let pick = |rng: &mut GenRng| -> Module {
        let k = rng.gen_range(1..=max_tops.max(1));
        let parts: Vec<&Module> = (0..k).map(|_| alg.projective(rng.gen_range(0..n))).collect();
        alg.direct_sum(&parts)
    };
    let p0 = pick(rng);
    let p1 = pick(rng);
    let f = hom(alg, &p1, &p0, rng);
    alg.cokernel(&f, &p0).0
}

/// A bounded complex in degrees `lo..lo+len`: each differential is a random
/// map out of the cokernel of the previous one, so `d∘d = 0` by construction.
pub fn complex(
    alg: &BasicAlgebra,
    lo: i64,
    len: usize,
    object: &mut dyn FnMut(&mut GenRng) -> Module,
    rng: &mut GenRng,
) -> Complex {
    if len == 0 {
        return Complex::zero();
    }
    let objects: Vec<Module> = (0..len).map(|_| object(rng)).collect();
    let mut diffs: Vec<ModMap> = Vec::new();
    for k in 0..len - 1 {
        let (src, tgt) = (&objects[k], &objects[k + 1]);
        let d = match diffs.last() {
            None => hom(alg, src, tgt, rng),
            Some(prev) => {
                let (coker, proj) = alg.cokernel(prev, src);
                hom(alg, &coker, tgt, rng).compose(&proj)
            }
        };
        diffs.push(d);
    }
    Complex { lo, objects, diffs }
}
