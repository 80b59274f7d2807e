//! Finite-dimensional modules presented as representations of a generating
//! quiver: a vector space per vertex and a matrix per generating arrow.

use serde::{Deserialize, Serialize};

use crate::exactlin::{Coordinates, Field, Mat, Vector};

/// Vertex count and generator arrows `(source, target)` of an algebra.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Shape {
    pub vertices: usize,
    pub arrows: Vec<(usize, usize)>,
}

/// A module: `dims[v]` is the dimension of `e_v M`, `maps[g]` is the action of
/// generator `g : s -> t` as a `dims[t] x dims[s]` matrix.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Module {
    pub field: Field,
    pub dims: Vec<usize>,
    pub maps: Vec<Mat>,
}

/// A module homomorphism, one `dims_target[v] x dims_source[v]` block per vertex.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ModMap {
    pub blocks: Vec<Mat>,
}

impl Module {
    pub fn zero(field: Field, shape: &Shape) -> Module {
        Module {
            field,
            dims: vec![0; shape.vertices],
            maps: shape.arrows.iter().map(|_| Mat::zeros(field, 0, 0)).collect(),
        }
    }

    /// One-dimensional at `v`, all arrows acting by zero.
    pub fn simple(field: Field, shape: &Shape, v: usize) -> Module {
        let mut dims = vec![0; shape.vertices];
        dims[v] = 1;
        let maps = shape.arrows.iter().map(|&(s, t)| Mat::zeros(field, dims[t], dims[s])).collect();
        Module { field, dims, maps }
    }

    pub fn total_dim(&self) -> usize {
        self.dims.iter().sum()
    }

    pub fn is_zero(&self) -> bool {
        self.total_dim() == 0
    }

    pub fn vertex_count(&self) -> usize {
        self.dims.len()
    }

    /// Shape check against the generating quiver.
    pub fn fits(&self, shape: &Shape) -> bool {
        self.dims.len() == shape.vertices
            && self.maps.len() == shape.arrows.len()
            && shape.arrows.iter().zip(&self.maps).all(|(&(s, t), m)| m.shape() == (self.dims[t], self.dims[s]))
    }

    /// Applies a word of generators (application order) to a vector at the word's start.
    pub fn apply_word(&self, word: &[usize], v: &[crate::exactlin::Scalar]) -> Vector {
        let mut cur = v.to_vec();
        for &g in word {
            cur = self.maps[g].mul_vec(&cur);
        }
        cur
    }

    pub fn direct_sum(parts: &[&Module], field: Field, shape: &Shape) -> Module {
        if parts.is_empty() {
            return Module::zero(field, shape);
        }
        let n = shape.vertices;
        let dims = (0..n).map(|v| parts.iter().map(|m| m.dims[v]).sum()).collect();
        let maps = (0..shape.arrows.len())
            .map(|g| Mat::block_diag(field, &parts.iter().map(|m| m.maps[g].clone()).collect::<Vec<_>>()))
            .collect();
        Module { field, dims, maps }
    }

    /// `M^k`.
    pub fn power(&self, k: usize, shape: &Shape) -> Module {
        let parts: Vec<&Module> = std::iter::repeat_n(self, k).collect();
        Module::direct_sum(&parts, self.field, shape)
    }

    /// The submodule with the given per-vertex bases (columns), with its inclusion.
    /// The subspaces must be closed under the arrows.
    pub fn submodule(&self, shape: &Shape, bases: &[Mat]) -> (Module, ModMap) {
        let coords: Vec<Coordinates> = bases.iter().map(Coordinates::new).collect();
        let dims: Vec<usize> = bases.iter().map(Mat::cols).collect();
        let maps = shape
            .arrows
            .iter()
            .enumerate()
            .map(|(g, &(s, t))| {
                let img = self.maps[g].mul(&bases[s]);
                coords[t].coords_mat_unchecked(&img)
            })
            .collect();
        let incl = ModMap { blocks: bases.to_vec() };
        (Module { field: self.field, dims, maps }, incl)
    }

    /// Quotient by a submodule (per-vertex bases), with the projection.
    pub fn quotient(&self, shape: &Shape, sub: &[Mat]) -> (Module, ModMap) {
        let f = self.field;
        let mut comps = Vec::new();
        let mut proj = Vec::new();
        for (v, u) in sub.iter().enumerate() {
            let d = self.dims[v];
            let ext = Mat::extend_basis(u, &Mat::identity(f, d));
            let c = Mat::identity(f, d).select_cols(&ext);
            // coordinates in [u | c]; keep the c part
            let full = u.hstack(&c);
            let inv = full.inverse().expect("complement basis");
            proj.push(inv.submatrix(u.cols(), c.cols(), 0, d));
            comps.push(c);
        }
        let dims: Vec<usize> = comps.iter().map(Mat::cols).collect();
        let maps =
            shape.arrows.iter().enumerate().map(|(g, &(s, t))| proj[t].mul(&self.maps[g].mul(&comps[s]))).collect();
        (Module { field: f, dims, maps }, ModMap { blocks: proj })
    }

    /// Transposes every arrow matrix: a module over the opposite algebra.
    pub fn dual(&self) -> Module {
        Module { field: self.field, dims: self.dims.clone(), maps: self.maps.iter().map(Mat::transpose).collect() }
    }
}

impl ModMap {
    pub fn zero(field: Field, source: &Module, target: &Module) -> ModMap {
        ModMap { blocks: (0..source.dims.len()).map(|v| Mat::zeros(field, target.dims[v], source.dims[v])).collect() }
    }

    pub fn identity(m: &Module) -> ModMap {
        ModMap { blocks: m.dims.iter().map(|&d| Mat::identity(m.field, d)).collect() }
    }

    /// `self ∘ first`.
    pub fn compose(&self, first: &ModMap) -> ModMap {
        ModMap { blocks: self.blocks.iter().zip(&first.blocks).map(|(a, b)| a.mul(b)).collect() }
    }

    pub fn add(&self, other: &ModMap) -> ModMap {
        ModMap { blocks: self.blocks.iter().zip(&other.blocks).map(|(a, b)| a.add(b)).collect() }
    }

    pub fn sub(&self, other: &ModMap) -> ModMap {
        ModMap { blocks: self.blocks.iter().zip(&other.blocks).map(|(a, b)| a.sub(b)).collect() }
    }

    pub fn scale(&self, s: &crate::exactlin::Scalar) -> ModMap {
        ModMap { blocks: self.blocks.iter().map(|a| a.scale(s)).collect() }
    }

    pub fn neg(&self) -> ModMap {
        ModMap { blocks: self.blocks.iter().map(Mat::neg).collect() }
    }

    pub fn is_zero(&self) -> bool {
        self.blocks.iter().all(Mat::is_zero)
    }

    pub fn rank(&self) -> usize {
        self.blocks.iter().map(Mat::rank).sum()
    }

    /// Naturality against every arrow, plus block shapes.
    pub fn is_homomorphism(&self, shape: &Shape, source: &Module, target: &Module) -> bool {
        self.blocks.len() == shape.vertices
            && self.blocks.iter().enumerate().all(|(v, b)| b.shape() == (target.dims[v], source.dims[v]))
            && shape
                .arrows
                .iter()
                .enumerate()
                .all(|(g, &(s, t))| target.maps[g].mul(&self.blocks[s]) == self.blocks[t].mul(&source.maps[g]))
    }

    /// Concatenation of the row-major block entries.
    pub fn flatten(&self) -> Vector {
        self.blocks.iter().flat_map(|b| b.entries().iter().cloned()).collect()
    }

    /// Block diagonal map between direct sums.
    pub fn direct_sum(maps: &[&ModMap], field: Field, vertices: usize) -> ModMap {
        ModMap {
            blocks: (0..vertices)
                .map(|v| Mat::block_diag(field, &maps.iter().map(|m| m.blocks[v].clone()).collect::<Vec<_>>()))
                .collect(),
        }
    }

    /// `[f_1 f_2 ...] : ⊕ M_i -> N`.
    pub fn hcat(maps: &[&ModMap], field: Field, target: &Module) -> ModMap {
        ModMap {
            blocks: (0..target.dims.len())
                .map(|v| maps.iter().fold(Mat::zeros(field, target.dims[v], 0), |acc, m| acc.hstack(&m.blocks[v])))
                .collect(),
        }
    }

    /// `[f_1; f_2; ...] : M -> ⊕ N_i`.
    pub fn vcat(maps: &[&ModMap], field: Field, source: &Module) -> ModMap {
        ModMap {
            blocks: (0..source.dims.len())
                .map(|v| maps.iter().fold(Mat::zeros(field, 0, source.dims[v]), |acc, m| acc.vstack(&m.blocks[v])))
                .collect(),
        }
    }
}

/// Canonical injections and projections of a direct sum `⊕ parts`.
pub fn sum_injections(parts: &[&Module], field: Field) -> (Vec<ModMap>, Vec<ModMap>) {
    let n = parts.first().map_or(0, |m| m.dims.len());
    let totals: Vec<usize> = (0..n).map(|v| parts.iter().map(|m| m.dims[v]).sum()).collect();
    let mut offsets = vec![0usize; n];
    let mut inj = Vec::new();
    let mut proj = Vec::new();
    for m in parts {
        let mut ib = Vec::new();
        let mut pb = Vec::new();
        for v in 0..n {
            let mut i = Mat::zeros(field, totals[v], m.dims[v]);
            i.paste(offsets[v], 0, &Mat::identity(field, m.dims[v]));
            pb.push(i.transpose());
            ib.push(i);
            offsets[v] += m.dims[v];
        }
        inj.push(ModMap { blocks: ib });
        proj.push(ModMap { blocks: pb });
    }
    (inj, proj)
}
