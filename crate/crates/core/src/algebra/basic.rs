//! Homological algebra over a split basic algebra given by a generating quiver.
//!
//! The algebra is described by its vertices (primitive idempotents), arrow
//! generators spanning the radical modulo its square, and one indecomposable
//! projective per vertex whose basis vectors are labelled by generator words.
//! Everything else (covers, syzygies, projective and global dimension, Hom
//! spaces, additive-closure tests) is computed from that data.

use std::fmt;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::module::{ModMap, Module, Shape};
use crate::error::{Error, Result};
use crate::exactlin::{Coordinates, Field, Mat, Scalar, Vector};

/// Projective or global dimension, or a lower bound when the cap was hit.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Dim {
    Finite(usize),
    AtLeast(usize),
}

impl Dim {
    pub fn max(self, other: Dim) -> Dim {
        use Dim::*;
        match (self, other) {
            (Finite(a), Finite(b)) => Finite(a.max(b)),
            (AtLeast(a), Finite(b)) | (Finite(b), AtLeast(a)) => {
                if b >= a {
                    Finite(b).max_lower(a)
                } else {
                    AtLeast(a)
                }
            }
            (AtLeast(a), AtLeast(b)) => AtLeast(a.max(b)),
        }
    }

    // Finite(b) with b >= a, combined with an unknown value >= a: still unknown.
    fn max_lower(self, a: usize) -> Dim {
        match self {
            Dim::Finite(b) => Dim::AtLeast(b.max(a)),
            d => d,
        }
    }

    pub fn plus(self, k: usize) -> Dim {
        match self {
            Dim::Finite(a) => Dim::Finite(a + k),
            Dim::AtLeast(a) => Dim::AtLeast(a + k),
        }
    }

    pub fn add(self, other: Dim) -> Dim {
        match (self, other) {
            (Dim::Finite(a), Dim::Finite(b)) => Dim::Finite(a + b),
            (a, b) => Dim::AtLeast(a.value() + b.value()),
        }
    }

    /// The number carried, exact or a lower bound.
    pub fn value(&self) -> usize {
        match *self {
            Dim::Finite(a) | Dim::AtLeast(a) => a,
        }
    }

    pub fn is_finite(&self) -> bool {
        matches!(self, Dim::Finite(_))
    }

    pub fn finite(&self) -> Option<usize> {
        match self {
            Dim::Finite(a) => Some(*a),
            Dim::AtLeast(_) => None,
        }
    }

    /// Decides `self <= bound` where possible.
    pub fn le(&self, bound: usize) -> Option<bool> {
        match *self {
            Dim::Finite(a) => Some(a <= bound),
            Dim::AtLeast(a) if a > bound => Some(false),
            Dim::AtLeast(_) => None,
        }
    }

    /// Decides `self <= other` where possible.
    pub fn le_dim(&self, other: &Dim) -> Option<bool> {
        match (*self, *other) {
            (Dim::Finite(a), Dim::Finite(b)) => Some(a <= b),
            (Dim::Finite(a), Dim::AtLeast(b)) if a <= b => Some(true),
            (Dim::AtLeast(a), Dim::Finite(b)) if a > b => Some(false),
            _ => None,
        }
    }
}

impl fmt::Display for Dim {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Dim::Finite(d) => write!(f, "{d}"),
            Dim::AtLeast(d) => write!(f, ">={d}"),
        }
    }
}

/// A linear combination of parallel generator words (application order).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Relation {
    pub source: usize,
    pub target: usize,
    pub terms: Vec<(Scalar, Vec<usize>)>,
}

/// An indecomposable projective `A e_v` with word labels for its basis.
#[derive(Clone, Debug)]
pub struct Projective {
    pub module: Module,
    /// `words[w][k]`: the generator word carrying `e_v` to basis vector `k` of vertex `w`.
    pub words: Vec<Vec<Vec<usize>>>,
}

#[derive(Clone, Debug)]
pub struct BasicAlgebra {
    pub field: Field,
    pub shape: Shape,
    pub vertex_names: Vec<String>,
    pub arrow_names: Vec<String>,
    pub(crate) projectives: Vec<Projective>,
    pub(crate) injectives: Option<Vec<Module>>,
    pub(crate) relations: Option<Vec<Relation>>,
}

/// A projective cover `π : P -> M`, `P = ⊕ P_{tops[k]}`.
#[derive(Clone, Debug)]
pub struct Cover {
    pub projective: Module,
    pub map: ModMap,
    pub tops: Vec<usize>,
}

/// Witness that `Y` lies in `add(X_1 ⊕ ... ⊕ X_r)`: `retraction ∘ section = id_Y`.
#[derive(Clone, Debug)]
pub struct AddWitness {
    pub multiplicities: Vec<usize>,
    pub sum: Module,
    pub retraction: ModMap,
    pub section: ModMap,
}

impl BasicAlgebra {
    pub fn new(
        field: Field,
        shape: Shape,
        vertex_names: Vec<String>,
        arrow_names: Vec<String>,
        projectives: Vec<Projective>,
        injectives: Option<Vec<Module>>,
        relations: Option<Vec<Relation>>,
    ) -> BasicAlgebra {
        BasicAlgebra { field, shape, vertex_names, arrow_names, projectives, injectives, relations }
    }

    pub fn vertex_count(&self) -> usize {
        self.shape.vertices
    }

    pub fn dim(&self) -> usize {
        self.projectives.iter().map(|p| p.module.total_dim()).sum()
    }

    pub fn projective(&self, v: usize) -> &Module {
        &self.projectives[v].module
    }

    pub fn projective_words(&self, v: usize) -> &Projective {
        &self.projectives[v]
    }

    pub fn injective(&self, v: usize) -> Option<&Module> {
        self.injectives.as_ref().map(|i| &i[v])
    }

    pub fn relations(&self) -> Option<&[Relation]> {
        self.relations.as_deref()
    }

    pub fn simple(&self, v: usize) -> Module {
        Module::simple(self.field, &self.shape, v)
    }

    pub fn zero_module(&self) -> Module {
        Module::zero(self.field, &self.shape)
    }

    pub fn direct_sum(&self, parts: &[&Module]) -> Module {
        Module::direct_sum(parts, self.field, &self.shape)
    }

    /// Evaluates a word on a module: product of arrow matrices.
    pub fn word_matrix(&self, m: &Module, source: usize, word: &[usize]) -> Mat {
        let mut acc = Mat::identity(self.field, m.dims[source]);
        for &g in word {
            acc = m.maps[g].mul(&acc);
        }
        acc
    }

    /// Shape check plus all relations.
    pub fn validate_module(&self, m: &Module) -> Result<()> {
        if m.field != self.field || !m.fits(&self.shape) {
            return Err(Error::InvalidModule("dimensions do not match the arrow matrices".into()));
        }
        if let Some(rels) = &self.relations {
            for (i, r) in rels.iter().enumerate() {
                let mut acc = Mat::zeros(self.field, m.dims[r.target], m.dims[r.source]);
                for (c, w) in &r.terms {
                    acc.axpy(c, &self.word_matrix(m, r.source, w));
                }
                if !acc.is_zero() {
                    return Err(Error::InvalidModule(format!("relation {i} does not vanish")));
                }
            }
        }
        Ok(())
    }

    pub fn validate_map(&self, f: &ModMap, source: &Module, target: &Module) -> Result<()> {
        if f.is_homomorphism(&self.shape, source, target) {
            Ok(())
        } else {
            Err(Error::InvalidMap("not a module homomorphism".into()))
        }
    }

    /// Per-vertex basis of `rad M`: the sum of arrow images.
    pub fn radical(&self, m: &Module) -> Vec<Mat> {
        (0..self.shape.vertices)
            .map(|v| {
                let mut span = Mat::zeros(self.field, m.dims[v], 0);
                for (g, &(_, t)) in self.shape.arrows.iter().enumerate() {
                    if t == v {
                        span = span.hstack(&m.maps[g]);
                    }
                }
                span.column_basis()
            })
            .collect()
    }

    /// Lifts of a basis of `top M = M / rad M`, per vertex.
    pub fn top_lifts(&self, m: &Module) -> Vec<Vec<Vector>> {
        self.radical(m)
            .iter()
            .enumerate()
            .map(|(v, rad)| {
                let id = Mat::identity(self.field, m.dims[v]);
                Mat::extend_basis(rad, &id).into_iter().map(|i| id.col(i)).collect()
            })
            .collect()
    }

    /// The homomorphism `P_v -> M` sending `e_v` to `x ∈ e_v M`.
    pub fn projective_map(&self, v: usize, x: &[Scalar], m: &Module) -> ModMap {
        let p = &self.projectives[v];
        let blocks = (0..self.shape.vertices)
            .map(|w| {
                let cols: Vec<Vector> = p.words[w].iter().map(|word| m.apply_word(word, x)).collect();
                Mat::from_cols(self.field, m.dims[w], &cols)
            })
            .collect();
        ModMap { blocks }
    }

    pub fn projective_cover(&self, m: &Module) -> Cover {
        let lifts = self.top_lifts(m);
        let mut tops = Vec::new();
        let mut parts = Vec::new();
        let mut maps = Vec::new();
        for (v, xs) in lifts.iter().enumerate() {
            for x in xs {
                tops.push(v);
                parts.push(&self.projectives[v].module);
                maps.push(self.projective_map(v, x, m));
            }
        }
        let projective = self.direct_sum(&parts);
        let refs: Vec<&ModMap> = maps.iter().collect();
        let map = ModMap::hcat(&refs, self.field, m);
        Cover { projective, map, tops }
    }

    /// Kernel of a homomorphism as a submodule of its source.
    pub fn kernel(&self, f: &ModMap, source: &Module) -> (Module, ModMap) {
        let bases: Vec<Mat> = f.blocks.iter().map(Mat::kernel).collect();
        source.submodule(&self.shape, &bases)
    }

    /// Image of a homomorphism as a submodule of its target.
    pub fn image(&self, f: &ModMap, target: &Module) -> (Module, ModMap) {
        let bases: Vec<Mat> = f.blocks.iter().map(Mat::column_basis).collect();
        target.submodule(&self.shape, &bases)
    }

    pub fn cokernel(&self, f: &ModMap, target: &Module) -> (Module, ModMap) {
        let bases: Vec<Mat> = f.blocks.iter().map(Mat::column_basis).collect();
        target.quotient(&self.shape, &bases)
    }

    /// First syzygy `Ω M` with its inclusion into the projective cover.
    pub fn syzygy(&self, m: &Module) -> (Cover, Module, ModMap) {
        let cover = self.projective_cover(m);
        let (k, incl) = self.kernel(&cover.map, &cover.projective);
        (cover, k, incl)
    }

    /// `ker π ⊆ rad P`, checked by ranks.
    pub fn cover_is_minimal(&self, cover: &Cover) -> bool {
        let rad = self.radical(&cover.projective);
        cover.map.blocks.iter().zip(&rad).all(|(pi, r)| {
            let k = pi.kernel();
            r.hstack(&k).rank() == r.cols()
        })
    }

    pub fn is_projective(&self, m: &Module) -> bool {
        let cover = self.projective_cover(m);
        cover.projective.total_dim() == m.total_dim()
    }

    /// Projective dimension by iterated minimal syzygies.
    pub fn pd(&self, m: &Module, cap: usize) -> Dim {
        let mut cur = m.clone();
        for d in 0..cap {
            let (cover, k, _) = self.syzygy(&cur);
            debug_assert_eq!(cover.projective.total_dim(), cur.total_dim() + k.total_dim());
            if k.is_zero() {
                return Dim::Finite(d);
            }
            cur = k;
        }
        Dim::AtLeast(cap)
    }

    /// Maximum projective dimension over the simple modules.
    pub fn gldim(&self, cap: usize) -> Dim {
        self.simple_pds(cap).into_iter().fold(Dim::Finite(0), Dim::max)
    }

    pub fn simple_pds(&self, cap: usize) -> Vec<Dim> {
        (0..self.shape.vertices).into_par_iter().map(|v| self.pd(&self.simple(v), cap)).collect()
    }

    /// Basis of `Hom(M, N)` from the stacked naturality system.
    pub fn hom_basis(&self, m: &Module, n: &Module) -> Vec<ModMap> {
        let f = self.field;
        let nv = self.shape.vertices;
        let mut offset = vec![0usize; nv + 1];
        for v in 0..nv {
            offset[v + 1] = offset[v] + n.dims[v] * m.dims[v];
        }
        let unknowns = offset[nv];
        if unknowns == 0 {
            return Vec::new();
        }
        let mut rows: Vec<Vector> = Vec::new();
        for (g, &(s, t)) in self.shape.arrows.iter().enumerate() {
            let (ng, mg) = (&n.maps[g], &m.maps[g]);
            // N_g f_s - f_t M_g = 0, entry (r, c) of a dims_n[t] x dims_m[s] matrix
            for r in 0..n.dims[t] {
                for c in 0..m.dims[s] {
                    let mut row = vec![f.zero(); unknowns];
                    for k in 0..n.dims[s] {
                        let a = ng.get(r, k);
                        if !a.is_zero() {
                            let idx = offset[s] + k * m.dims[s] + c;
                            row[idx] = row[idx].add(a);
                        }
                    }
                    for k in 0..m.dims[t] {
                        let a = mg.get(k, c);
                        if !a.is_zero() {
                            let idx = offset[t] + r * m.dims[t] + k;
                            row[idx] = row[idx].sub(a);
                        }
                    }
                    if row.iter().any(|x| !x.is_zero()) {
                        rows.push(row);
                    }
                }
            }
        }
        let system = Mat::from_rows(f, unknowns, rows);
        system
            .kernel_basis()
            .into_iter()
            .map(|sol| ModMap {
                blocks: (0..nv)
                    .map(|v| Mat::from_vec(f, n.dims[v], m.dims[v], sol[offset[v]..offset[v + 1]].to_vec()))
                    .collect(),
            })
            .collect()
    }

    pub fn hom_dim(&self, m: &Module, n: &Module) -> usize {
        self.hom_basis(m, n).len()
    }

    /// Tests `y ∈ add(⊕ summands)` by solving for a section of the universal map.
    pub fn add_witness(&self, y: &Module, summands: &[&Module]) -> Option<AddWitness> {
        let f = self.field;
        if y.is_zero() {
            let sum = self.zero_module();
            return Some(AddWitness {
                multiplicities: vec![0; summands.len()],
                retraction: ModMap::zero(f, &sum, y),
                section: ModMap::zero(f, y, &sum),
                sum,
            });
        }
        let to_y: Vec<Vec<ModMap>> = summands.iter().map(|x| self.hom_basis(x, y)).collect();
        let from_y: Vec<Vec<ModMap>> = summands.iter().map(|x| self.hom_basis(y, x)).collect();
        let mut cols = Vec::new();
        let mut index = Vec::new();
        for (j, (hs, gs)) in to_y.iter().zip(&from_y).enumerate() {
            for (k, h) in hs.iter().enumerate() {
                for (l, g) in gs.iter().enumerate() {
                    cols.push(h.compose(g).flatten());
                    index.push((j, k, l));
                }
            }
        }
        let target = ModMap::identity(y).flatten();
        let system = Mat::from_cols(f, target.len(), &cols);
        let coeffs = system.solve(&target).ok()??;
        let multiplicities: Vec<usize> = to_y.iter().map(Vec::len).collect();
        let mut parts = Vec::new();
        let mut us = Vec::new();
        let mut ss = Vec::new();
        for (j, hs) in to_y.iter().enumerate() {
            for (k, h) in hs.iter().enumerate() {
                parts.push(summands[j]);
                us.push(h.clone());
                let mut s = ModMap::zero(f, y, summands[j]);
                for (c, &(jj, kk, l)) in coeffs.iter().zip(&index) {
                    if jj == j && kk == k && !c.is_zero() {
                        s = s.add(&from_y[j][l].scale(c));
                    }
                }
                ss.push(s);
            }
        }
        let sum = self.direct_sum(&parts);
        let retraction = ModMap::hcat(&us.iter().collect::<Vec<_>>(), f, y);
        let section = ModMap::vcat(&ss.iter().collect::<Vec<_>>(), f, y);
        debug_assert_eq!(retraction.compose(&section), ModMap::identity(y));
        Some(AddWitness { multiplicities, sum, retraction, section })
    }

    pub fn in_add(&self, y: &Module, summands: &[&Module]) -> bool {
        self.add_witness(y, summands).is_some()
    }

    /// Minimal projective resolution `P_0 <- P_1 <- ...` with differentials
    /// `d_k : P_k -> P_{k-1}` (`k >= 1`), up to `P_len`.
    pub fn resolution(&self, m: &Module, len: usize) -> (Vec<Module>, Vec<ModMap>) {
        let mut terms = Vec::new();
        let mut diffs = Vec::new();
        let (cover, mut k, mut incl) = self.syzygy(m);
        terms.push(cover.projective);
        for _ in 0..len {
            let (c, k2, incl2) = self.syzygy(&k);
            diffs.push(incl.compose(&c.map));
            terms.push(c.projective);
            k = k2;
            incl = incl2;
        }
        (terms, diffs)
    }

    /// `dim Ext^i(M, N)` for `i = 0..=upto`, from the cochain complex `Hom(P_•, N)`.
    pub fn ext_dims(&self, m: &Module, n: &Module, upto: usize) -> Vec<usize> {
        let (terms, diffs) = self.resolution(m, upto + 1);
        let homs: Vec<Vec<ModMap>> = terms.iter().map(|p| self.hom_basis(p, n)).collect();
        // rank of d_k^* : Hom(P_{k-1}, N) -> Hom(P_k, N)
        let rank_of = |k: usize| -> usize {
            let src = &homs[k - 1];
            let dst = &homs[k];
            if src.is_empty() || dst.is_empty() {
                return 0;
            }
            let basis = Mat::from_cols(
                self.field,
                dst[0].flatten().len(),
                &dst.iter().map(ModMap::flatten).collect::<Vec<_>>(),
            );
            let coords = Coordinates::new(&basis);
            let cols: Vec<Vector> =
                src.iter().map(|h| coords.coords_unchecked(&h.compose(&diffs[k - 1]).flatten())).collect();
            Mat::from_cols(self.field, dst.len(), &cols).rank()
        };
        (0..=upto)
            .map(|i| {
                let cocycles = homs[i].len() - rank_of(i + 1);
                let cobounds = if i == 0 { 0 } else { rank_of(i) };
                cocycles - cobounds
            })
            .collect()
    }

    /// Projective dimension read off `Ext^i(M, ⊕ simples)`.
    pub fn pd_by_ext(&self, m: &Module, cap: usize) -> Dim {
        let simples: Vec<Module> = (0..self.shape.vertices).map(|v| self.simple(v)).collect();
        let sum = self.direct_sum(&simples.iter().collect::<Vec<_>>());
        let ext = self.ext_dims(m, &sum, cap);
        if ext[cap] != 0 {
            return Dim::AtLeast(cap);
        }
        Dim::Finite(ext.iter().rposition(|&e| e != 0).unwrap_or(0))
    }
}
