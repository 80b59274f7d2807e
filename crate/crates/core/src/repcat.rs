//! Representations of an acyclic quiver `Q` in `mod Λ`, realized as modules
//! over `ΛQ = Λ ⊗ kQ`.
//!
//! `ΛQ` is presented by the quiver with vertices `(v, i)` (`v ∈ Q_0`, `i` a
//! vertex of `Λ`), a copy of every `Λ`-arrow at each `v`, a copy of every
//! `Q`-arrow at each `i`, the relations of `Λ` at each `v`, and commutativity
//! squares between the two kinds of arrows. Since `Q` is acyclic the radical
//! of `ΛQ` is generated by these arrows, so the simple `ΛQ`-modules are the
//! `S_(v,i)`: the simple `Λ`-module `S_i` placed at `v`. [`RepCategory::new`]
//! checks that every indecomposable projective has such a simple top.

use crate::algebra::{sum_injections, BasicAlgebra, Bqa, Dim, ModMap, Module, Shape};
use crate::error::{Error, Result};
use crate::exactlin::{Field, Mat};
use crate::quiver::{Path, Quiver, RawQuiver};

/// A representation of `Q` over `Λ`, stored as a `ΛQ`-module.
pub type Rep = Module;
/// A morphism of representations, stored as a `ΛQ`-module map.
pub type RepMap = ModMap;

#[derive(Clone, Debug)]
pub struct RepCategory {
    quiver: Quiver,
    base: Bqa,
    tensor: Bqa,
}

/// Dimensions on both sides of the two adjunctions, with the comparison matrices.
#[derive(Clone, Debug)]
pub struct AdjunctionReport {
    pub left_rep: usize,
    pub left_base: usize,
    pub right_rep: usize,
    pub right_base: usize,
    /// Columns: restrictions of a `Hom(e^v_λ M, X)` basis, in `Hom_Λ(M, X_v)` coordinates.
    pub left_matrix: Mat,
    pub right_matrix: Mat,
}

impl AdjunctionReport {
    pub fn holds(&self) -> bool {
        self.left_rep == self.left_base
            && self.right_rep == self.right_base
            && self.left_matrix.rank() == self.left_rep
            && self.right_matrix.rank() == self.right_rep
    }
}

/// `0 -> left --mono--> middle --epi--> X -> 0`, with a vertexwise `Λ`-linear
/// section of `epi` (not a map of representations in general).
#[derive(Clone, Debug)]
pub struct StandardPresentation {
    pub left: Rep,
    pub middle: Rep,
    pub mono: RepMap,
    pub epi: RepMap,
    pub section: RepMap,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GenCogenReport {
    pub missing: Vec<String>,
}

impl GenCogenReport {
    pub fn holds(&self) -> bool {
        self.missing.is_empty()
    }
}

impl RepCategory {
    pub fn new(quiver: Quiver, base: Bqa) -> Result<RepCategory> {
        if !quiver.is_acyclic() {
            return Err(Error::CycleFound("representations need an acyclic quiver".into()));
        }
        let lq = base.quiver();
        let (nl, ml) = (lq.vertex_count(), lq.arrows().len());
        let mut raw = RawQuiver::default();
        for v in quiver.vertices() {
            for i in lq.vertices() {
                raw.vertices.push(format!("{v}:{i}"));
            }
        }
        let vname = |v: usize, i: usize| format!("{}:{}", quiver.vertices()[v], lq.vertices()[i]);
        for v in 0..quiver.vertex_count() {
            for b in lq.arrows() {
                raw.arrows.push((
                    format!("{}:{}", quiver.vertices()[v], b.name),
                    vname(v, b.source),
                    vname(v, b.target),
                ));
            }
        }
        let qbase = quiver.vertex_count() * ml;
        for a in quiver.arrows() {
            for i in 0..nl {
                raw.arrows.push((format!("{}@{}", a.name, lq.vertices()[i]), vname(a.source, i), vname(a.target, i)));
            }
        }
        let tq = Quiver::with_cycles(&raw)?;
        let lam_arrow = |v: usize, b: usize| v * ml + b;
        let q_arrow = |a: usize, i: usize| qbase + a * nl + i;
        let mut rels = Vec::new();
        for v in 0..quiver.vertex_count() {
            for r in base.relations() {
                rels.push(
                    r.terms.iter().map(|(c, w)| (c.clone(), w.iter().map(|&b| lam_arrow(v, b)).collect())).collect(),
                );
            }
        }
        let f = base.field();
        for (ai, a) in quiver.arrows().iter().enumerate() {
            for (bi, b) in lq.arrows().iter().enumerate() {
                rels.push(vec![
                    (f.one(), vec![lam_arrow(a.source, bi), q_arrow(ai, b.target)]),
                    (f.one().neg(), vec![q_arrow(ai, b.source), lam_arrow(a.target, bi)]),
                ]);
            }
        }
        let n = base.nilpotency() + quiver.longest_path();
        let tensor = Bqa::new(tq, f, rels, Some(n))?;
        let cat = RepCategory { quiver, base, tensor };
        cat.check_simple_tops()?;
        Ok(cat)
    }

    fn check_simple_tops(&self) -> Result<()> {
        let t = self.tensor.basic();
        for (v, i) in self.index_pairs() {
            let tops = t.top_lifts(t.projective(self.vertex(v, i)));
            let ok = tops.iter().enumerate().all(|(w, xs)| xs.len() == usize::from(w == self.vertex(v, i)));
            if !ok {
                return Err(Error::Other(format!("projective at ({v}, {i}) does not have a simple top")));
            }
        }
        Ok(())
    }

    pub fn quiver(&self) -> &Quiver {
        &self.quiver
    }

    pub fn base(&self) -> &Bqa {
        &self.base
    }

    pub fn base_algebra(&self) -> &BasicAlgebra {
        self.base.basic()
    }

    /// `ΛQ` as a bound quiver algebra.
    pub fn tensor(&self) -> &Bqa {
        &self.tensor
    }

    pub fn algebra(&self) -> &BasicAlgebra {
        self.tensor.basic()
    }

    pub fn field(&self) -> Field {
        self.base.field()
    }

    fn nl(&self) -> usize {
        self.base.quiver().vertex_count()
    }

    fn ml(&self) -> usize {
        self.base.quiver().arrows().len()
    }

    /// Tensor vertex `(v, i)`.
    pub fn vertex(&self, v: usize, i: usize) -> usize {
        v * self.nl() + i
    }

    fn q_arrow(&self, a: usize, i: usize) -> usize {
        self.quiver.vertex_count() * self.ml() + a * self.nl() + i
    }

    fn index_pairs(&self) -> Vec<(usize, usize)> {
        (0..self.quiver.vertex_count()).flat_map(|v| (0..self.nl()).map(move |i| (v, i))).collect()
    }

    fn check_vertex(&self, v: usize) -> Result<()> {
        if v < self.quiver.vertex_count() {
            Ok(())
        } else {
            Err(Error::UnknownVertex(v.to_string()))
        }
    }

    pub fn zero(&self) -> Rep {
        self.algebra().zero_module()
    }

    /// `X_v` as a `Λ`-module.
    pub fn evaluate(&self, x: &Rep, v: usize) -> Result<Module> {
        self.check_vertex(v)?;
        Ok(self.eval(x, v))
    }

    fn eval(&self, x: &Rep, v: usize) -> Module {
        let (nl, ml) = (self.nl(), self.ml());
        Module {
            field: x.field,
            dims: (0..nl).map(|i| x.dims[v * nl + i]).collect(),
            maps: (0..ml).map(|b| x.maps[v * ml + b].clone()).collect(),
        }
    }

    /// `φ_v` for a morphism of representations.
    pub fn evaluate_map(&self, f: &RepMap, v: usize) -> Result<ModMap> {
        self.check_vertex(v)?;
        Ok(self.eval_map(f, v))
    }

    fn eval_map(&self, f: &RepMap, v: usize) -> ModMap {
        let nl = self.nl();
        ModMap { blocks: (0..nl).map(|i| f.blocks[v * nl + i].clone()).collect() }
    }

    /// `X_a : X_s -> X_t` as a `Λ`-map.
    pub fn arrow_map(&self, x: &Rep, a: usize) -> ModMap {
        ModMap { blocks: (0..self.nl()).map(|i| x.maps[self.q_arrow(a, i)].clone()).collect() }
    }

    /// `X_p` for a path of `Q`.
    pub fn path_map(&self, x: &Rep, p: &Path) -> ModMap {
        let mut acc = ModMap::identity(&self.eval(x, p.source));
        for &a in &p.arrows {
            acc = self.arrow_map(x, a).compose(&acc);
        }
        acc
    }

    /// Assembles a representation from `Λ`-modules and `Λ`-maps, validating both.
    pub fn from_parts(&self, modules: &[Module], arrows: &[ModMap]) -> Result<Rep> {
        let lam = self.base_algebra();
        if modules.len() != self.quiver.vertex_count() || arrows.len() != self.quiver.arrows().len() {
            return Err(Error::InvalidModule("wrong number of vertex modules or arrow maps".into()));
        }
        for m in modules {
            lam.validate_module(m)?;
        }
        for (a, f) in self.quiver.arrows().iter().zip(arrows) {
            lam.validate_map(f, &modules[a.source], &modules[a.target])?;
        }
        Ok(self.assemble(modules, arrows))
    }

    fn assemble(&self, modules: &[Module], arrows: &[ModMap]) -> Rep {
        let f = self.field();
        let mut dims = Vec::new();
        for m in modules {
            dims.extend_from_slice(&m.dims);
        }
        let mut maps = Vec::new();
        for m in modules {
            maps.extend(m.maps.iter().cloned());
        }
        for (a, g) in arrows.iter().enumerate() {
            let arrow = self.quiver.arrow(a);
            for i in 0..self.nl() {
                let blk = g
                    .blocks
                    .get(i)
                    .cloned()
                    .unwrap_or_else(|| Mat::zeros(f, modules[arrow.target].dims[i], modules[arrow.source].dims[i]));
                maps.push(blk);
            }
        }
        Module { field: f, dims, maps }
    }

    /// Assembles a morphism of representations from its vertex components.
    pub fn map_from_parts(&self, parts: &[ModMap]) -> RepMap {
        ModMap { blocks: parts.iter().flat_map(|p| p.blocks.iter().cloned()).collect() }
    }

    fn paths_from(&self, v: usize, w: usize) -> Vec<Path> {
        self.quiver.paths_between(v, w).expect("acyclic quiver")
    }

    /// `e^v_λ(M)`: `⊕_{p : v ⇝ w} M` at `w`; arrows move copy `p` to copy `p` followed by the arrow.
    pub fn left_adjoint(&self, v: usize, m: &Module) -> Result<Rep> {
        self.check_vertex(v)?;
        let lam = self.base_algebra();
        let nq = self.quiver.vertex_count();
        let paths: Vec<Vec<Path>> = (0..nq).map(|w| self.paths_from(v, w)).collect();
        let modules: Vec<Module> = paths.iter().map(|ps| m.power(ps.len(), &lam.shape)).collect();
        let arrows = self
            .quiver
            .arrows()
            .iter()
            .enumerate()
            .map(|(ai, a)| {
                let step = Path { source: a.source, target: a.target, arrows: vec![ai] };
                let entries: Vec<(usize, usize, ModMap)> = paths[a.source]
                    .iter()
                    .enumerate()
                    .map(|(k, p)| {
                        let ext = p.then(&step).expect("composable");
                        let t = paths[a.target].iter().position(|q| *q == ext).expect("path listed");
                        (t, k, ModMap::identity(m))
                    })
                    .collect();
                grid(self.field(), paths[a.target].len(), paths[a.source].len(), m, m, &entries)
            })
            .collect::<Vec<_>>();
        Ok(self.assemble(&modules, &arrows))
    }

    /// `e^v_ρ(M)`: `⊕_{q : w ⇝ v} M` at `w`; the arrow `a` projects onto the copies `a` followed by `q'`.
    pub fn right_adjoint(&self, v: usize, m: &Module) -> Result<Rep> {
        self.check_vertex(v)?;
        let lam = self.base_algebra();
        let nq = self.quiver.vertex_count();
        let paths: Vec<Vec<Path>> = (0..nq).map(|w| self.paths_from(w, v)).collect();
        let modules: Vec<Module> = paths.iter().map(|ps| m.power(ps.len(), &lam.shape)).collect();
        let arrows = self
            .quiver
            .arrows()
            .iter()
            .enumerate()
            .map(|(ai, a)| {
                let step = Path { source: a.source, target: a.target, arrows: vec![ai] };
                let entries: Vec<(usize, usize, ModMap)> = paths[a.target]
                    .iter()
                    .enumerate()
                    .map(|(k, q)| {
                        let ext = step.then(q).expect("composable");
                        let s = paths[a.source].iter().position(|p| *p == ext).expect("path listed");
                        (k, s, ModMap::identity(m))
                    })
                    .collect();
                grid(self.field(), paths[a.target].len(), paths[a.source].len(), m, m, &entries)
            })
            .collect::<Vec<_>>();
        Ok(self.assemble(&modules, &arrows))
    }

    /// `e^v_λ(f)`: `f` on every copy.
    pub fn left_adjoint_map(&self, v: usize, f: &ModMap) -> RepMap {
        let parts: Vec<ModMap> = (0..self.quiver.vertex_count())
            .map(|w| {
                let k = self.paths_from(v, w).len();
                ModMap::direct_sum(&vec![f; k], self.field(), self.nl())
            })
            .collect();
        self.map_from_parts(&parts)
    }

    pub fn right_adjoint_map(&self, v: usize, f: &ModMap) -> RepMap {
        let parts: Vec<ModMap> = (0..self.quiver.vertex_count())
            .map(|w| {
                let k = self.paths_from(w, v).len();
                ModMap::direct_sum(&vec![f; k], self.field(), self.nl())
            })
            .collect();
        self.map_from_parts(&parts)
    }

    /// The morphism `e^v_λ(A) → e^w_λ(B)` adjoint to placing `γ: A → B` in the
    /// copy of `p: w ⇝ v`: at each vertex, copy `q` goes to copy `p` then `q`.
    pub fn left_adjoint_along(&self, p: &Path, gamma: &ModMap, a: &Module, b: &Module) -> Result<RepMap> {
        let (w, v) = (p.source, p.target);
        self.check_vertex(v)?;
        self.check_vertex(w)?;
        let parts: Vec<ModMap> = (0..self.quiver.vertex_count())
            .map(|u| {
                let from = self.paths_from(v, u);
                let to = self.paths_from(w, u);
                let entries: Vec<(usize, usize, ModMap)> = from
                    .iter()
                    .enumerate()
                    .map(|(k, q)| {
                        let ext = p.then(q).expect("composable");
                        let t = to.iter().position(|r| *r == ext).expect("path listed");
                        (t, k, gamma.clone())
                    })
                    .collect();
                grid(self.field(), to.len(), from.len(), a, b, &entries)
            })
            .collect();
        Ok(self.map_from_parts(&parts))
    }

    /// The morphism `e^v_ρ(A) → e^w_ρ(B)` for `p: w ⇝ v`: at each vertex, copy
    /// `s` then `p` goes to copy `s` by `γ`.
    pub fn right_adjoint_along(&self, p: &Path, gamma: &ModMap, a: &Module, b: &Module) -> Result<RepMap> {
        let (w, v) = (p.source, p.target);
        self.check_vertex(v)?;
        self.check_vertex(w)?;
        let parts: Vec<ModMap> = (0..self.quiver.vertex_count())
            .map(|u| {
                let from = self.paths_from(u, v);
                let to = self.paths_from(u, w);
                let entries: Vec<(usize, usize, ModMap)> = to
                    .iter()
                    .enumerate()
                    .map(|(t, r)| {
                        let ext = r.then(p).expect("composable");
                        let k = from.iter().position(|x| *x == ext).expect("path listed");
                        (t, k, gamma.clone())
                    })
                    .collect();
                grid(self.field(), to.len(), from.len(), a, b, &entries)
            })
            .collect();
        Ok(self.map_from_parts(&parts))
    }

    pub fn hom_basis(&self, x: &Rep, y: &Rep) -> Vec<RepMap> {
        self.algebra().hom_basis(x, y)
    }

    /// Both adjunctions at `v`, compared through the trivial-path component.
    pub fn adjunction_check(&self, v: usize, m: &Module, x: &Rep) -> Result<AdjunctionReport> {
        let lam = self.base_algebra();
        let f = self.field();
        let xv = self.evaluate(x, v)?;

        let left = self.left_adjoint(v, m)?;
        let reps = self.hom_basis(&left, x);
        let base = lam.hom_basis(m, &xv);
        // the trivial path is listed first among paths from v to v
        let restrict_left = |phi: &RepMap| -> ModMap {
            let pv = self.eval_map(phi, v);
            ModMap {
                blocks: pv.blocks.iter().enumerate().map(|(i, b)| b.submatrix(0, b.rows(), 0, m.dims[i])).collect(),
            }
        };
        let left_matrix = coordinate_matrix(f, &base, reps.iter().map(restrict_left).collect());

        let right = self.right_adjoint(v, m)?;
        let reps_r = self.hom_basis(x, &right);
        let base_r = lam.hom_basis(&xv, m);
        let restrict_right = |phi: &RepMap| -> ModMap {
            let pv = self.eval_map(phi, v);
            ModMap {
                blocks: pv.blocks.iter().enumerate().map(|(i, b)| b.submatrix(0, m.dims[i], 0, b.cols())).collect(),
            }
        };
        let right_matrix = coordinate_matrix(f, &base_r, reps_r.iter().map(restrict_right).collect());

        Ok(AdjunctionReport {
            left_rep: reps.len(),
            left_base: base.len(),
            right_rep: reps_r.len(),
            right_base: base_r.len(),
            left_matrix,
            right_matrix,
        })
    }

    /// The canonical presentation
    /// `0 -> ⊕_a e^{t(a)}_λ(X_{s(a)}) -> ⊕_v e^v_λ(X_v) -> X -> 0`, checked exact.
    pub fn standard_presentation(&self, x: &Rep) -> Result<StandardPresentation> {
        let f = self.field();
        let nq = self.quiver.vertex_count();
        let xs: Vec<Module> = (0..nq).map(|v| self.eval(x, v)).collect();
        let mids: Vec<Rep> = (0..nq).map(|v| self.left_adjoint(v, &xs[v])).collect::<Result<_>>()?;
        let lefts: Vec<Rep> =
            self.quiver.arrows().iter().map(|a| self.left_adjoint(a.target, &xs[a.source])).collect::<Result<_>>()?;
        let middle = self.algebra().direct_sum(&mids.iter().collect::<Vec<_>>());
        let left = self.algebra().direct_sum(&lefts.iter().collect::<Vec<_>>());

        let mut epi_parts = Vec::new();
        let mut mono_parts = Vec::new();
        let mut sec_parts = Vec::new();
        for w in 0..nq {
            // middle at w: ⊕_v ⊕_{p: v ⇝ w} X_v
            let mut mid_slots: Vec<(usize, Path)> = Vec::new();
            for v in 0..nq {
                for p in self.paths_from(v, w) {
                    mid_slots.push((v, p));
                }
            }
            let mid_mods: Vec<&Module> = mid_slots.iter().map(|(v, _)| &xs[*v]).collect();
            let epi_blocks: Vec<ModMap> = mid_slots.iter().map(|(_, p)| self.path_map(x, p)).collect();
            epi_parts.push(ModMap::hcat(&epi_blocks.iter().collect::<Vec<_>>(), f, &xs[w]));

            let trivial = mid_slots.iter().position(|(v, p)| *v == w && p.is_trivial()).expect("trivial slot");
            let (inj, _) = sum_injections(&mid_mods, f);
            sec_parts.push(inj[trivial].clone());

            // left at w: ⊕_a ⊕_{p: t(a) ⇝ w} X_{s(a)}
            let mut pieces = Vec::new();
            let mut left_mods = Vec::new();
            for (ai, a) in self.quiver.arrows().iter().enumerate() {
                let step = Path { source: a.source, target: a.target, arrows: vec![ai] };
                for p in self.paths_from(a.target, w) {
                    let longer = step.then(&p).expect("composable");
                    let s1 = mid_slots.iter().position(|(v, q)| *v == a.source && *q == longer).expect("slot");
                    let s2 = mid_slots.iter().position(|(v, q)| *v == a.target && *q == p).expect("slot");
                    let xa = self.arrow_map(x, ai);
                    let col = ModMap::vcat(
                        &mid_slots
                            .iter()
                            .enumerate()
                            .map(|(k, (v, _))| {
                                let mut blk = ModMap::zero(f, &xs[a.source], &xs[*v]);
                                if k == s1 {
                                    blk = blk.add(&ModMap::identity(&xs[a.source]));
                                }
                                if k == s2 {
                                    blk = blk.sub(&xa);
                                }
                                blk
                            })
                            .collect::<Vec<_>>()
                            .iter()
                            .collect::<Vec<_>>(),
                        f,
                        &xs[a.source],
                    );
                    pieces.push(col);
                    left_mods.push(&xs[a.source]);
                }
            }
            let mid_w = self.base_algebra().direct_sum(&mid_mods);
            mono_parts.push(ModMap::hcat(&pieces.iter().collect::<Vec<_>>(), f, &mid_w));
        }
        let epi = self.map_from_parts(&epi_parts);
        let mono = self.map_from_parts(&mono_parts);
        let section = self.map_from_parts(&sec_parts);
        let shape = &self.algebra().shape;
        let ok = epi.is_homomorphism(shape, &middle, x)
            && mono.is_homomorphism(shape, &left, &middle)
            && epi.compose(&mono).is_zero()
            && mono.rank() == left.total_dim()
            && epi.rank() == x.total_dim()
            && middle.total_dim() == left.total_dim() + x.total_dim()
            && epi.compose(&section) == ModMap::identity(x);
        if !ok {
            return Err(Error::Other("standard presentation failed its exactness check".into()));
        }
        Ok(StandardPresentation { left, middle, mono, epi, section })
    }

    /// `S_(v,i)`.
    pub fn simple(&self, v: usize, i: usize) -> Rep {
        self.algebra().simple(self.vertex(v, i))
    }

    pub fn rep_pd(&self, x: &Rep, cap: usize) -> Dim {
        self.algebra().pd(x, cap)
    }

    pub fn gldim(&self, cap: usize) -> Dim {
        self.algebra().gldim(cap)
    }

    /// Every `e^v_λ(P_i)` and `e^v_ρ(I_i)` must lie in `add(⊕ summands)`.
    pub fn is_gen_cogen(&self, summands: &[Rep]) -> Result<GenCogenReport> {
        let lam = self.base_algebra();
        let refs: Vec<&Module> = summands.iter().collect();
        let mut missing = Vec::new();
        for v in 0..self.quiver.vertex_count() {
            for i in 0..self.nl() {
                let vn = &self.quiver.vertices()[v];
                let iname = &lam.vertex_names[i];
                let p = self.left_adjoint(v, lam.projective(i))?;
                if !self.algebra().in_add(&p, &refs) {
                    missing.push(format!("e^{vn}_lambda(P_{iname})"));
                }
                let inj = lam.injective(i).ok_or_else(|| Error::Other("base injectives unavailable".into()))?;
                let r = self.right_adjoint(v, inj)?;
                if !self.algebra().in_add(&r, &refs) {
                    missing.push(format!("e^{vn}_rho(I_{iname})"));
                }
            }
        }
        Ok(GenCogenReport { missing })
    }

    /// `Λ` itself and `D(Λ)` as lists of indecomposable summands.
    pub fn base_projectives(&self) -> Vec<Module> {
        (0..self.nl()).map(|i| self.base_algebra().projective(i).clone()).collect()
    }

    pub fn base_injectives(&self) -> Vec<Module> {
        (0..self.nl()).map(|i| self.base_algebra().injective(i).expect("injectives").clone()).collect()
    }

    pub fn shape(&self) -> &Shape {
        &self.algebra().shape
    }
}

/// A `rows x cols` grid of copies of `src -> tgt` maps, summing repeated entries.
fn grid(
    field: Field,
    rows: usize,
    cols: usize,
    src: &Module,
    tgt: &Module,
    entries: &[(usize, usize, ModMap)],
) -> ModMap {
    let n = src.dims.len();
    let blocks = (0..n)
        .map(|i| {
            let (r, c) = (tgt.dims[i], src.dims[i]);
            let mut m = Mat::zeros(field, rows * r, cols * c);
            for (t, s, f) in entries {
                let cur = m.submatrix(t * r, r, s * c, c).add(&f.blocks[i]);
                m.paste(t * r, s * c, &cur);
            }
            m
        })
        .collect();
    ModMap { blocks }
}

/// Columns: coordinates of `maps` in the span of `basis` (zero column if outside).
fn coordinate_matrix(field: Field, basis: &[ModMap], maps: Vec<ModMap>) -> Mat {
    if basis.is_empty() {
        return Mat::zeros(field, 0, maps.len());
    }
    let len = basis[0].flatten().len();
    let b = Mat::from_cols(field, len, &basis.iter().map(ModMap::flatten).collect::<Vec<_>>());
    let cols: Vec<_> = maps
        .iter()
        .map(|m| b.solve(&m.flatten()).ok().flatten().unwrap_or_else(|| vec![field.zero(); basis.len()]))
        .collect();
    Mat::from_cols(field, basis.len(), &cols)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quiver::standard;

    fn k() -> Bqa {
        Bqa::path_algebra(standard::point(), Field::Rationals).unwrap()
    }

    fn dual_numbers() -> Bqa {
        let f = Field::Rationals;
        Bqa::new(standard::loop_quiver(), f, vec![vec![(f.one(), vec![0, 0])]], Some(2)).unwrap()
    }

    fn kmod(c: &RepCategory) -> Module {
        c.base_algebra().simple(0)
    }

    #[test]
    fn evaluation_and_adjoints_on_a2() {
        let c = RepCategory::new(standard::a2(), k()).unwrap();
        let m = kmod(&c);
        let l1 = c.left_adjoint(0, &m).unwrap();
        assert_eq!(l1.dims, vec![1, 1]);
        assert_eq!(l1.maps[0], Mat::identity(Field::Rationals, 1));
        assert_eq!(c.evaluate(&l1, 0).unwrap(), m);
        assert_eq!(c.left_adjoint(1, &m).unwrap().dims, vec![0, 1]);
        assert_eq!(c.right_adjoint(1, &m).unwrap().dims, vec![1, 1]);
        assert_eq!(c.right_adjoint(0, &m).unwrap().dims, vec![1, 0]);
        assert_eq!(c.evaluate(&c.simple(0, 0), 1).unwrap().total_dim(), 0);
        assert!(matches!(c.evaluate(&l1, 5), Err(Error::UnknownVertex(_))));
    }

    #[test]
    fn single_vertex_adjoints_are_identity() {
        let c = RepCategory::new(standard::point(), dual_numbers()).unwrap();
        let p = c.base_algebra().projective(0).clone();
        assert_eq!(c.left_adjoint(0, &p).unwrap(), p);
        assert_eq!(c.right_adjoint(0, &p).unwrap(), p);
    }

    #[test]
    fn outward_d4_evaluation() {
        let q = standard::d4_outward();
        let centre = q.vertex_index("c").unwrap();
        let c = RepCategory::new(q, k()).unwrap();
        let x = c.left_adjoint(centre, &kmod(&c)).unwrap();
        assert_eq!(c.evaluate(&x, 0).unwrap().dims, vec![1]);
    }

    #[test]
    fn adjunction_examples() {
        let c = RepCategory::new(standard::a2(), k()).unwrap();
        let m = kmod(&c);
        let zero = c.base_algebra().zero_module();
        let r = c.adjunction_check(0, &zero, &c.zero()).unwrap();
        assert_eq!((r.left_rep, r.left_base), (0, 0));
        let p1 = c.left_adjoint(0, &m).unwrap();
        let r = c.adjunction_check(0, &m, &p1).unwrap();
        assert_eq!((r.left_rep, r.left_base), (1, 1));
        assert!(r.holds());
        let r = c.adjunction_check(1, &m, &c.simple(0, 0)).unwrap();
        assert_eq!((r.left_rep, r.left_base), (0, 0));
        assert!(r.holds());
    }

    #[test]
    fn standard_presentation_examples() {
        let c = RepCategory::new(standard::a2(), k()).unwrap();
        let sp = c.standard_presentation(&c.simple(0, 0)).unwrap();
        assert_eq!(sp.left.dims, vec![0, 1]);
        assert_eq!(sp.middle.dims, vec![1, 1]);

        let single = RepCategory::new(standard::point(), dual_numbers()).unwrap();
        let m = single.base_algebra().projective(0).clone();
        let sp = single.standard_presentation(&m).unwrap();
        assert!(sp.left.is_zero());
        assert_eq!(sp.middle, m);

        let q = standard::d4_outward();
        let centre = q.vertex_index("c").unwrap();
        let c = RepCategory::new(q, k()).unwrap();
        let pc = c.left_adjoint(centre, &kmod(&c)).unwrap();
        assert_eq!(pc.dims, vec![1, 1, 1, 1]);
        let sp = c.standard_presentation(&pc).unwrap();
        let leaves: Vec<Rep> = (0..3).map(|v| c.left_adjoint(v, &kmod(&c)).unwrap()).collect();
        let expected_left = c.algebra().direct_sum(&leaves.iter().collect::<Vec<_>>());
        assert_eq!(sp.left.dims, expected_left.dims);
        assert_eq!(sp.middle.total_dim(), 4 + 3);
        assert!(c.algebra().is_projective(&sp.middle));
    }

    #[test]
    fn rep_hom_examples() {
        let c = RepCategory::new(standard::a2(), k()).unwrap();
        let p1 = c.left_adjoint(0, &kmod(&c)).unwrap();
        assert_eq!(c.hom_basis(&p1, &c.simple(0, 0)).len(), 1);
        assert_eq!(c.hom_basis(&c.simple(1, 0), &c.simple(0, 0)).len(), 0);
        assert_eq!(c.hom_basis(&c.zero(), &c.zero()).len(), 0);
    }

    #[test]
    fn global_dimensions() {
        let c = RepCategory::new(standard::a2(), k()).unwrap();
        assert_eq!(c.gldim(20), Dim::Finite(1));
        let p = c.left_adjoint(0, &kmod(&c)).unwrap();
        assert_eq!(c.rep_pd(&p, 20), Dim::Finite(0));
        let c = RepCategory::new(standard::d4_outward(), dual_numbers()).unwrap();
        assert_eq!(c.gldim(20), Dim::AtLeast(20));
    }

    #[test]
    fn generator_cogenerator_examples() {
        let c = RepCategory::new(standard::a2(), k()).unwrap();
        let m = kmod(&c);
        let mut all = Vec::new();
        for v in 0..2 {
            all.push(c.left_adjoint(v, &m).unwrap());
            all.push(c.right_adjoint(v, &m).unwrap());
        }
        assert!(c.is_gen_cogen(&all).unwrap().holds());
        let only = vec![c.left_adjoint(0, &m).unwrap()];
        let report = c.is_gen_cogen(&only).unwrap();
        assert!(!report.holds());

        let single = RepCategory::new(standard::point(), dual_numbers()).unwrap();
        let lam = single.base_algebra();
        let a = lam.direct_sum(&[lam.projective(0), lam.injective(0).unwrap()]);
        assert!(single.is_gen_cogen(&[a]).unwrap().holds());
    }
}
