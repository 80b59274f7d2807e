//! Bounded complexes over a basic algebra, degreewise short exact sequences of
//! complexes standing for triangles, and generation witnesses certifying
//! membership in `⟨G⟩_d`.

mod functor;
mod json;
mod ses;
mod theorems;
mod witness;

pub use functor::{pushforward, pushforward_substituting, Functor};
pub use json::{
    complex_from_json, complex_to_json, mat_from_json, mat_to_json, module_from_json, module_to_json,
    witness_from_json, witness_to_json,
};
pub use ses::{complex_standard_triangle, cone_ses, triple_standard_triangle, ComplexSes};
pub use theorems::{
    semisimple_split, theorem42_semisimple, theorem42_witness, theorem45_semisimple, theorem45_witness, triple_parts,
    GeneratedWitness,
};
pub use witness::{witness_check, Body, Link, Term, Witness, WitnessCheck};

use crate::algebra::{sum_injections, BasicAlgebra, ModMap, Module};
use crate::error::{Error, Result};
use crate::exactlin::{Field, Mat};

/// `X^lo -> X^(lo+1) -> ... -> X^hi`; `diffs[k]` starts at degree `lo + k`.
/// Degrees outside the stored range hold the zero module.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Complex {
    pub lo: i64,
    pub objects: Vec<Module>,
    pub diffs: Vec<ModMap>,
}

/// A chain map stored on `[lo, lo + maps.len())`, zero elsewhere.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChainMap {
    pub lo: i64,
    pub maps: Vec<ModMap>,
}

/// `H^i(X)` with its cycle module and a linear lift of each class.
#[derive(Clone, Debug)]
pub struct CohomologyGroup {
    pub degree: i64,
    pub module: Module,
    /// `Z^i -> X^i`.
    pub inclusion: ModMap,
    pub cycles: Module,
    /// `Z^i -> H^i`.
    pub projection: ModMap,
    /// Per vertex, `H^i -> X^i` sending a class to a representing cycle.
    pub section: Vec<Mat>,
}

fn union(a: Option<(i64, i64)>, b: Option<(i64, i64)>) -> Option<(i64, i64)> {
    match (a, b) {
        (Some((l1, h1)), Some((l2, h2))) => Some((l1.min(l2), h1.max(h2))),
        (x, None) | (None, x) => x,
    }
}

impl Complex {
    pub fn zero() -> Complex {
        Complex { lo: 0, objects: Vec::new(), diffs: Vec::new() }
    }

    pub fn concentrated(m: Module, degree: i64) -> Complex {
        Complex { lo: degree, objects: vec![m], diffs: Vec::new() }
    }

    pub fn new(lo: i64, objects: Vec<Module>, diffs: Vec<ModMap>) -> Result<Complex> {
        if diffs.len() != objects.len().saturating_sub(1) {
            return Err(Error::InvalidComplex(format!(
                "{} objects need {} differentials, got {}",
                objects.len(),
                objects.len().saturating_sub(1),
                diffs.len()
            )));
        }
        Ok(Complex { lo, objects, diffs })
    }

    /// Inclusive degree range of the stored objects.
    pub fn range(&self) -> Option<(i64, i64)> {
        if self.objects.is_empty() {
            None
        } else {
            Some((self.lo, self.lo + self.objects.len() as i64 - 1))
        }
    }

    pub fn get(&self, i: i64) -> Option<&Module> {
        if i < self.lo {
            return None;
        }
        self.objects.get((i - self.lo) as usize)
    }

    pub fn object(&self, i: i64, alg: &BasicAlgebra) -> Module {
        self.get(i).cloned().unwrap_or_else(|| alg.zero_module())
    }

    /// `d^i : X^i -> X^(i+1)`.
    pub fn diff(&self, i: i64, alg: &BasicAlgebra) -> ModMap {
        if i >= self.lo {
            if let Some(d) = self.diffs.get((i - self.lo) as usize) {
                return d.clone();
            }
        }
        ModMap::zero(alg.field, &self.object(i, alg), &self.object(i + 1, alg))
    }

    pub fn total_dim(&self) -> usize {
        self.objects.iter().map(Module::total_dim).sum()
    }

    pub fn validate(&self, alg: &BasicAlgebra) -> Result<()> {
        if self.diffs.len() != self.objects.len().saturating_sub(1) {
            return Err(Error::InvalidComplex("differential count does not match the degree range".into()));
        }
        for (k, m) in self.objects.iter().enumerate() {
            alg.validate_module(m).map_err(|e| Error::InvalidComplex(format!("degree {}: {e}", self.lo + k as i64)))?;
        }
        for (k, d) in self.diffs.iter().enumerate() {
            let i = self.lo + k as i64;
            if !d.is_homomorphism(&alg.shape, &self.objects[k], &self.objects[k + 1]) {
                return Err(Error::InvalidComplex(format!("differential in degree {i} is not a homomorphism")));
            }
            if k + 1 < self.diffs.len() && !self.diffs[k + 1].compose(d).is_zero() {
                return Err(Error::InvalidComplex(format!("d∘d does not vanish in degree {i}")));
            }
        }
        Ok(())
    }

    /// Drops zero objects at both ends.
    pub fn trimmed(&self) -> Complex {
        let n = self.objects.len();
        let first = self.objects.iter().position(|m| !m.is_zero());
        let Some(first) = first else {
            return Complex::zero();
        };
        let last = n - 1 - self.objects.iter().rev().position(|m| !m.is_zero()).expect("nonzero object");
        Complex {
            lo: self.lo + first as i64,
            objects: self.objects[first..=last].to_vec(),
            diffs: self.diffs[first..last].to_vec(),
        }
    }

    /// Equality up to zero objects at the ends.
    pub fn same_as(&self, other: &Complex) -> bool {
        self.trimmed() == other.trimmed()
    }

    /// `X[n]^i = X^(i+n)` with differentials multiplied by `(-1)^n`.
    pub fn shift(&self, n: i64) -> Complex {
        let diffs = if n % 2 == 0 { self.diffs.clone() } else { self.diffs.iter().map(ModMap::neg).collect() };
        Complex { lo: self.lo - n, objects: self.objects.clone(), diffs }
    }

    /// Degreewise direct sum over the union of the ranges.
    pub fn direct_sum(parts: &[&Complex], alg: &BasicAlgebra) -> Complex {
        let Some((lo, hi)) = parts.iter().fold(None, |acc, c| union(acc, c.range())) else {
            return Complex::zero();
        };
        let f = alg.field;
        let nv = alg.shape.vertices;
        let objects: Vec<Module> = (lo..=hi)
            .map(|i| {
                let ms: Vec<Module> = parts.iter().map(|c| c.object(i, alg)).collect();
                alg.direct_sum(&ms.iter().collect::<Vec<_>>())
            })
            .collect();
        let diffs = (lo..hi)
            .map(|i| {
                let ds: Vec<ModMap> = parts.iter().map(|c| c.diff(i, alg)).collect();
                ModMap::direct_sum(&ds.iter().collect::<Vec<_>>(), f, nv)
            })
            .collect();
        Complex { lo, objects, diffs }
    }

    pub fn is_acyclic(&self, alg: &BasicAlgebra) -> bool {
        let Some((lo, hi)) = self.range() else {
            return true;
        };
        (lo..=hi).all(|i| (0..alg.shape.vertices).all(|v| cohomology_dim(self, i, v, alg) == 0))
    }
}

/// Per vertex: a basis of `ker d^i` and of `im d^(i-1)` inside `X^i`.
fn cycles_and_boundaries(x: &Complex, i: i64, v: usize, alg: &BasicAlgebra) -> (Mat, Mat) {
    let d = x.diff(i, alg);
    let prev = x.diff(i - 1, alg);
    let z = d.blocks[v].kernel();
    let b = prev.blocks[v].column_basis();
    (z, b)
}

fn cohomology_dim(x: &Complex, i: i64, v: usize, alg: &BasicAlgebra) -> usize {
    let (z, b) = cycles_and_boundaries(x, i, v, alg);
    z.cols() - b.cols()
}

/// `H^i(X)` for every degree in range, as modules with explicit sections.
pub fn cohomology(x: &Complex, alg: &BasicAlgebra) -> Vec<CohomologyGroup> {
    let Some((lo, hi)) = x.range() else {
        return Vec::new();
    };
    let f = alg.field;
    (lo..=hi)
        .map(|i| {
            let xi = x.object(i, alg);
            let (cycles, inclusion) = alg.kernel(&x.diff(i, alg), &xi);
            let prev = x.diff(i - 1, alg);
            let sub: Vec<Mat> = (0..alg.shape.vertices)
                .map(|v| {
                    let img = prev.blocks[v].column_basis();
                    let inc = &inclusion.blocks[v];
                    inc.solve_mat(&img).ok().flatten().expect("boundaries are cycles")
                })
                .collect();
            let (module, projection) = cycles.quotient(&alg.shape, &sub);
            let section = (0..alg.shape.vertices)
                .map(|v| {
                    let p = &projection.blocks[v];
                    let lift =
                        p.solve_mat(&Mat::identity(f, p.rows())).ok().flatten().expect("quotient map is surjective");
                    inclusion.blocks[v].mul(&lift)
                })
                .collect();
            CohomologyGroup { degree: i, module, inclusion, cycles, projection, section }
        })
        .collect()
}

impl ChainMap {
    pub fn zero() -> ChainMap {
        ChainMap { lo: 0, maps: Vec::new() }
    }

    pub fn identity(x: &Complex) -> ChainMap {
        ChainMap { lo: x.lo, maps: x.objects.iter().map(ModMap::identity).collect() }
    }

    pub fn range(&self) -> Option<(i64, i64)> {
        if self.maps.is_empty() {
            None
        } else {
            Some((self.lo, self.lo + self.maps.len() as i64 - 1))
        }
    }

    pub fn get(&self, i: i64) -> Option<&ModMap> {
        if i < self.lo {
            return None;
        }
        self.maps.get((i - self.lo) as usize)
    }

    pub fn at(&self, i: i64, source: &Complex, target: &Complex, alg: &BasicAlgebra) -> ModMap {
        self.get(i).cloned().unwrap_or_else(|| ModMap::zero(alg.field, &source.object(i, alg), &target.object(i, alg)))
    }

    /// Same map, viewed between `X[n]` and `Y[n]`.
    pub fn shift(&self, n: i64) -> ChainMap {
        ChainMap { lo: self.lo - n, maps: self.maps.clone() }
    }

    fn span(&self, source: &Complex, target: &Complex) -> Option<(i64, i64)> {
        union(union(self.range(), source.range()), target.range())
    }

    /// Rebuilds the map on the union of the ranges of source and target.
    pub fn normalized(&self, source: &Complex, target: &Complex, alg: &BasicAlgebra) -> ChainMap {
        match union(source.range(), target.range()) {
            None => ChainMap::zero(),
            Some((lo, hi)) => ChainMap { lo, maps: (lo..=hi).map(|i| self.at(i, source, target, alg)).collect() },
        }
    }

    /// `self ∘ first`.
    pub fn compose(&self, first: &ChainMap, x: &Complex, y: &Complex, z: &Complex, alg: &BasicAlgebra) -> ChainMap {
        match union(x.range(), z.range()) {
            None => ChainMap::zero(),
            Some((lo, hi)) => ChainMap {
                lo,
                maps: (lo..=hi).map(|i| self.at(i, y, z, alg).compose(&first.at(i, x, y, alg))).collect(),
            },
        }
    }

    pub fn neg(&self) -> ChainMap {
        ChainMap { lo: self.lo, maps: self.maps.iter().map(ModMap::neg).collect() }
    }

    /// Block diagonal map between degreewise direct sums.
    pub fn direct_sum(parts: &[(&ChainMap, &Complex, &Complex)], alg: &BasicAlgebra) -> ChainMap {
        let span = parts.iter().fold(None, |acc, (m, s, t)| union(acc, m.span(s, t)));
        let Some((lo, hi)) = span else {
            return ChainMap::zero();
        };
        let maps = (lo..=hi)
            .map(|i| {
                let ms: Vec<ModMap> = parts.iter().map(|(m, s, t)| m.at(i, s, t, alg)).collect();
                ModMap::direct_sum(&ms.iter().collect::<Vec<_>>(), alg.field, alg.shape.vertices)
            })
            .collect();
        ChainMap { lo, maps }
    }

    /// Homomorphism in every degree and commutation with the differentials.
    pub fn check(&self, source: &Complex, target: &Complex, alg: &BasicAlgebra) -> std::result::Result<(), String> {
        let Some((lo, hi)) = self.span(source, target) else {
            return Ok(());
        };
        for i in lo..=hi {
            let (s, t) = (source.object(i, alg), target.object(i, alg));
            let m = self.at(i, source, target, alg);
            if !m.is_homomorphism(&alg.shape, &s, &t) {
                return Err(format!("component in degree {i} is not a homomorphism"));
            }
        }
        for i in lo - 1..=hi {
            let lhs = target.diff(i, alg).compose(&self.at(i, source, target, alg));
            let rhs = self.at(i + 1, source, target, alg).compose(&source.diff(i, alg));
            if lhs != rhs {
                return Err(format!("does not commute with the differentials in degree {i}"));
            }
        }
        Ok(())
    }

    /// Whether the induced maps on cohomology are isomorphisms, by rank.
    pub fn is_quasi_iso(&self, source: &Complex, target: &Complex, alg: &BasicAlgebra) -> bool {
        let Some((lo, hi)) = self.span(source, target) else {
            return true;
        };
        (lo..=hi).all(|i| {
            (0..alg.shape.vertices).all(|v| {
                let (zx, bx) = cycles_and_boundaries(source, i, v, alg);
                let (zy, by) = cycles_and_boundaries(target, i, v, alg);
                let hx = zx.cols() - bx.cols();
                let hy = zy.cols() - by.cols();
                if hx != hy {
                    return false;
                }
                let image = self.at(i, source, target, alg).blocks[v].mul(&zx);
                image.hstack(&by).rank() - by.cols() == hx
            })
        })
    }

    /// Whether an endomorphism induces the identity on cohomology.
    pub fn induces_identity(&self, x: &Complex, alg: &BasicAlgebra) -> bool {
        let Some((lo, hi)) = x.range() else {
            return true;
        };
        (lo..=hi).all(|i| {
            let m = self.at(i, x, x, alg);
            (0..alg.shape.vertices).all(|v| {
                let (z, b) = cycles_and_boundaries(x, i, v, alg);
                let diff = m.blocks[v].sub(&Mat::identity(alg.field, x.object(i, alg).dims[v])).mul(&z);
                diff.hstack(&b).rank() == b.cols()
            })
        })
    }
}

/// Splits a map into `⊕ parts` by rows into its components.
pub(crate) fn split_rows(m: &ModMap, parts: &[&Module], field: Field) -> Vec<ModMap> {
    if parts.is_empty() {
        return Vec::new();
    }
    let (_, proj) = sum_injections(parts, field);
    proj.iter().map(|p| p.compose(m)).collect()
}

/// Splits a map out of `⊕ parts` by columns into its components.
pub(crate) fn split_cols(m: &ModMap, parts: &[&Module], field: Field) -> Vec<ModMap> {
    if parts.is_empty() {
        return Vec::new();
    }
    let (inj, _) = sum_injections(parts, field);
    inj.iter().map(|i| m.compose(i)).collect()
}

#[cfg(test)]
mod tests;
