//! Formal triangular matrix rings `Γ = [[R, 0], [M, S]]` and their modules,
//! the triples `(X, Y)_φ` with `φ : M ⊗_R X -> Y`.
//!
//! `Γ` is assembled from structure constants and presented as a basic algebra
//! whose vertices are those of `R` followed by those of `S`, with the arrows of
//! `R`, the arrows of `S`, and one arrow per generator of `M` as a bimodule.

use crate::algebra::{BasicAlgebra, Bqa, Dim, ModMap, Module, ScAlgebra, Shape, Sparse};
use crate::error::{Error, Result};
use crate::exactlin::{Coordinates, Field, Mat, Scalar, Vector};
use crate::quiver::Path;

/// An `S`-`R`-bimodule on a fixed basis: `left[g]` is the action of the `g`-th
/// generator of `S` (vertex idempotents first, then arrows), `right[g]` the
/// matrix of `m ↦ m·r` for the `g`-th generator of `R`.
#[derive(Clone, Debug)]
pub struct BimoduleSpec {
    pub dim: usize,
    pub left: Vec<Mat>,
    pub right: Vec<Mat>,
}

#[derive(Clone, Debug)]
pub struct TriRing {
    r: Bqa,
    s: Bqa,
    m_dim: usize,
    /// Actions in a basis adapted to the decomposition `M = ⊕ e_j M e_i`.
    left: Vec<Mat>,
    right: Vec<Mat>,
    /// `blocks[j][i]`: basis indices spanning `e_j M e_i`.
    blocks: Vec<Vec<Vec<usize>>>,
    block_of: Vec<(usize, usize)>,
    /// Original basis vectors expressed in the adapted basis.
    to_adapted: Mat,
    gamma_sc: ScAlgebra,
    gamma: BasicAlgebra,
    /// `Γ`-elements of the generating arrows.
    gen_elems: Vec<Vector>,
    /// Per basis vector of `M`: coefficients on the projective word basis.
    m_words: Vec<Vec<(Scalar, Vec<usize>)>>,
}

/// `(X, Y)_φ`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Triple {
    pub x: Module,
    pub y: Module,
    pub phi: ModMap,
}

/// `M ⊗_R X` as an `S`-module, with the projection from the free span.
#[derive(Clone, Debug)]
pub struct Tensor {
    pub module: Module,
    /// Per `S`-vertex `j`: `(m, i, k)` for basis `m` of `e_j M e_i` and basis `k` of `e_i X`.
    pub pairs: Vec<Vec<(usize, usize, usize)>>,
    pub proj: Vec<Mat>,
    pub section: Vec<Mat>,
}

impl Tensor {
    pub fn dim(&self) -> usize {
        self.module.total_dim()
    }
}

/// `0 -> (0, M⊗X)_0 --f--> (X, M⊗X)_1 ⊕ (0, Y)_0 --g--> (X, Y)_φ -> 0`.
#[derive(Clone, Debug)]
pub struct TripleSes {
    pub left: Triple,
    pub middle: Triple,
    pub right: Triple,
    pub f: ModMap,
    pub g: ModMap,
    /// Vertexwise section of `g`: identity on `X`, `β ↦ (0, -β)` on `Y`.
    pub section: ModMap,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProjectivityCertificate {
    pub x_projective: bool,
    pub phi_mono: bool,
    pub coker_projective: bool,
    pub lifting: bool,
}

impl ProjectivityCertificate {
    pub fn criterion(&self) -> bool {
        self.x_projective && self.phi_mono && self.coker_projective
    }

    pub fn consistent(&self) -> bool {
        self.criterion() == self.lifting
    }
}

/// The two-sided estimate for `gl.dim Γ`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Sandwich {
    pub gldim_r: Dim,
    pub gldim_s: Dim,
    pub pd_m: Dim,
    pub gldim: Dim,
    pub lower: Dim,
    pub upper: Dim,
    pub lower_holds: Option<bool>,
    pub upper_holds: Option<bool>,
}

impl Sandwich {
    /// Undecidable comparisons (unknown lower bounds on both sides) are skipped.
    pub fn skipped(&self) -> Vec<&'static str> {
        let mut out = Vec::new();
        if self.lower_holds.is_none() {
            out.push("lower");
        }
        if self.upper_holds.is_none() {
            out.push("upper");
        }
        out
    }

    pub fn violated(&self) -> bool {
        self.lower_holds == Some(false) || self.upper_holds == Some(false)
    }
}

fn word_product(mats: &[Mat], word: &[usize], offset: usize, reverse: bool, id: &Mat) -> Mat {
    let mut acc = id.clone();
    for &g in word {
        acc = if reverse { acc.mul(&mats[offset + g]) } else { mats[offset + g].mul(&acc) };
    }
    acc
}

impl TriRing {
    pub fn new(r: Bqa, s: Bqa, m: BimoduleSpec) -> Result<TriRing> {
        let f = r.field();
        if s.field() != f {
            return Err(Error::AlgebraMismatch);
        }
        let (nr, ns) = (r.quiver().vertex_count(), s.quiver().vertex_count());
        let (ar, as_) = (r.quiver().arrows().len(), s.quiver().arrows().len());
        let d = m.dim;
        let bad = |msg: &str| Error::InvalidBimodule(msg.to_string());
        if m.left.len() != ns + as_ || m.right.len() != nr + ar {
            return Err(bad("wrong number of action matrices"));
        }
        if m.left.iter().chain(&m.right).any(|a| a.shape() != (d, d) || a.field() != f) {
            return Err(bad("action matrices must be square of size dim"));
        }
        let id = Mat::identity(f, d);
        let zero = Mat::zeros(f, d, d);
        for (mats, n) in [(&m.left, ns), (&m.right, nr)] {
            let mut sum = zero.clone();
            for a in 0..n {
                for b in 0..n {
                    let expect = if a == b { &mats[a] } else { &zero };
                    if mats[a].mul(&mats[b]) != *expect {
                        return Err(bad("vertex actions are not orthogonal idempotents"));
                    }
                }
                sum = sum.add(&mats[a]);
            }
            if sum != id {
                return Err(bad("vertex actions do not sum to the identity"));
            }
        }
        for (bi, b) in s.quiver().arrows().iter().enumerate() {
            let l = &m.left[ns + bi];
            if m.left[b.target].mul(l).mul(&m.left[b.source]) != *l {
                return Err(bad("left arrow action does not respect its endpoints"));
            }
        }
        for (gi, g) in r.quiver().arrows().iter().enumerate() {
            let rt = &m.right[nr + gi];
            if m.right[g.source].mul(rt).mul(&m.right[g.target]) != *rt {
                return Err(bad("right arrow action does not respect its endpoints"));
            }
        }
        for rel in s.relations() {
            let mut acc = zero.clone();
            for (c, w) in &rel.terms {
                acc.axpy(c, &word_product(&m.left, w, ns, false, &id));
            }
            if !acc.is_zero() {
                return Err(bad("a relation of S does not act by zero"));
            }
        }
        for rel in r.relations() {
            let mut acc = zero.clone();
            for (c, w) in &rel.terms {
                acc.axpy(c, &word_product(&m.right, w, nr, true, &id));
            }
            if !acc.is_zero() {
                return Err(bad("a relation of R does not act by zero"));
            }
        }
        for l in &m.left {
            for rt in &m.right {
                if l.mul(rt) != rt.mul(l) {
                    return Err(bad("left and right actions do not commute"));
                }
            }
        }

        // adapted basis: concatenated bases of e_j M e_i
        let mut cols = Vec::new();
        let mut blocks = vec![vec![Vec::new(); nr]; ns];
        let mut block_of = Vec::new();
        for j in 0..ns {
            for i in 0..nr {
                let proj = m.left[j].mul(&m.right[i]);
                for c in proj.column_basis().columns() {
                    blocks[j][i].push(cols.len());
                    block_of.push((j, i));
                    cols.push(c);
                }
            }
        }
        let p = Mat::from_cols(f, d, &cols);
        let pinv = p.inverse().ok_or_else(|| bad("idempotent decomposition failed"))?;
        let conj = |a: &Mat| pinv.mul(a).mul(&p);
        let left: Vec<Mat> = m.left.iter().map(conj).collect();
        let right: Vec<Mat> = m.right.iter().map(conj).collect();

        let (gamma_sc, shape, elems, names) = build_gamma(&r, &s, d, &left, &right, &blocks)?;
        let (gamma, bases) = gamma_sc.to_basic_with_generators(shape, &elems, names)?;
        let gen_elems = elems;

        // express each basis vector of M in the word basis of the projective at its R-vertex
        let dr = r.dim();
        let mut m_words = Vec::new();
        for (mi, &(j, i)) in block_of.iter().enumerate() {
            let vecs = &bases[i][nr + j];
            let coords = Coordinates::new(&Mat::from_cols(f, gamma_sc.dim(), vecs));
            let target = gamma_sc.basis_vector(dr + mi);
            let c = coords.coords(&target).ok_or_else(|| bad("bimodule element outside its Peirce block"))?;
            let words = &gamma.projective_words(i).words[nr + j];
            m_words.push(c.into_iter().zip(words.iter().cloned()).filter(|(c, _)| !c.is_zero()).collect());
        }
        Ok(TriRing {
            r,
            s,
            m_dim: d,
            left,
            right,
            blocks,
            block_of,
            to_adapted: pinv,
            gamma_sc,
            gamma,
            gen_elems,
            m_words,
        })
    }

    pub fn r(&self) -> &Bqa {
        &self.r
    }

    pub fn s(&self) -> &Bqa {
        &self.s
    }

    pub fn field(&self) -> Field {
        self.r.field()
    }

    pub fn bimodule_dim(&self) -> usize {
        self.m_dim
    }

    /// Coordinates change from the input basis of `M` to the adapted one.
    pub fn adapted_basis_change(&self) -> &Mat {
        &self.to_adapted
    }

    pub fn gamma(&self) -> &BasicAlgebra {
        &self.gamma
    }

    pub fn gamma_structure(&self) -> &ScAlgebra {
        &self.gamma_sc
    }

    fn nr(&self) -> usize {
        self.r.quiver().vertex_count()
    }

    fn ns(&self) -> usize {
        self.s.quiver().vertex_count()
    }

    /// `_S M` as a left `S`-module.
    pub fn bimodule_as_left_module(&self) -> Module {
        let ns = self.ns();
        let idx: Vec<Vec<usize>> = (0..ns).map(|j| self.blocks[j].concat()).collect();
        let maps = self
            .s
            .quiver()
            .arrows()
            .iter()
            .enumerate()
            .map(|(b, a)| self.left[ns + b].select_rows(&idx[a.target]).select_cols(&idx[a.source]))
            .collect();
        Module { field: self.field(), dims: idx.iter().map(Vec::len).collect(), maps }
    }

    /// `M ⊗_R X`, the quotient of `⊕ e_j M e_i ⊗ e_i X` by `m·g ⊗ x - m ⊗ g·x`.
    pub fn tensor_basis(&self, x: &Module) -> Result<Tensor> {
        self.r.basic().validate_module(x)?;
        let f = self.field();
        let (nr, ns) = (self.nr(), self.ns());
        let mut pairs = vec![Vec::new(); ns];
        let mut pos = std::collections::HashMap::new();
        for (j, pj) in pairs.iter_mut().enumerate() {
            for i in 0..nr {
                for &m in &self.blocks[j][i] {
                    for k in 0..x.dims[i] {
                        pos.insert((m, k), pj.len());
                        pj.push((m, i, k));
                    }
                }
            }
        }
        let mut rels: Vec<Vec<Vector>> = vec![Vec::new(); ns];
        for (g, a) in self.r.quiver().arrows().iter().enumerate() {
            let rt = &self.right[nr + g];
            let xg = &x.maps[g];
            for (j, rel) in rels.iter_mut().enumerate() {
                for &m in &self.blocks[j][a.target] {
                    for k in 0..x.dims[a.source] {
                        let mut v = vec![f.zero(); pairs[j].len()];
                        for &m2 in &self.blocks[j][a.source] {
                            let c = rt.get(m2, m);
                            if !c.is_zero() {
                                let p = pos[&(m2, k)];
                                v[p] = v[p].add(c);
                            }
                        }
                        for k2 in 0..x.dims[a.target] {
                            let c = xg.get(k2, k);
                            if !c.is_zero() {
                                let p = pos[&(m, k2)];
                                v[p] = v[p].sub(c);
                            }
                        }
                        rel.push(v);
                    }
                }
            }
        }
        let mut proj = Vec::new();
        let mut section = Vec::new();
        for j in 0..ns {
            let n = pairs[j].len();
            let span = Mat::from_cols(f, n, &rels[j]).column_basis();
            let id = Mat::identity(f, n);
            let comp = id.select_cols(&Mat::extend_basis(&span, &id));
            let full = span.hstack(&comp);
            let inv = full.inverse().expect("complement");
            proj.push(inv.submatrix(span.cols(), comp.cols(), 0, n));
            section.push(comp);
        }
        let dims: Vec<usize> = proj.iter().map(Mat::rows).collect();
        let maps = self
            .s
            .quiver()
            .arrows()
            .iter()
            .enumerate()
            .map(|(b, a)| {
                let l = &self.left[ns + b];
                let (s, t) = (a.source, a.target);
                let mut free = Mat::zeros(f, pairs[t].len(), pairs[s].len());
                for (c, &(m, _, k)) in pairs[s].iter().enumerate() {
                    for (r, &(m2, _, k2)) in pairs[t].iter().enumerate() {
                        if k == k2 && self.block_of[m].1 == self.block_of[m2].1 {
                            free.set(r, c, l.get(m2, m).clone());
                        }
                    }
                }
                proj[t].mul(&free).mul(&section[s])
            })
            .collect();
        Ok(Tensor { module: Module { field: f, dims, maps }, pairs, proj, section })
    }

    /// `M ⊗ f : M ⊗ X -> M ⊗ X'` on the bases of two tensor products.
    pub fn tensor_map(&self, f: &ModMap, source: &Tensor, target: &Tensor) -> ModMap {
        let fld = self.field();
        let blocks = (0..self.ns())
            .map(|j| {
                let (ps, pt) = (&source.pairs[j], &target.pairs[j]);
                let mut free = Mat::zeros(fld, pt.len(), ps.len());
                for (c, &(m, i, k)) in ps.iter().enumerate() {
                    for (r, &(m2, i2, k2)) in pt.iter().enumerate() {
                        if m == m2 && i == i2 {
                            free.set(r, c, f.blocks[i].get(k2, k).clone());
                        }
                    }
                }
                target.proj[j].mul(&free).mul(&source.section[j])
            })
            .collect();
        ModMap { blocks }
    }

    /// `k¹_λ(f) = (f, M ⊗ f)` as a `Γ`-map.
    pub fn column_map(&self, f: &ModMap, x: &Module, x2: &Module) -> Result<ModMap> {
        let (s, t) = (self.tensor_basis(x)?, self.tensor_basis(x2)?);
        Ok(self.map_from_parts(f, &self.tensor_map(f, &s, &t)))
    }

    /// `k²_λ(g) = (0, g)` as a `Γ`-map.
    pub fn row_map(&self, g: &ModMap) -> ModMap {
        let z = self.zero_r();
        self.map_from_parts(&ModMap::zero(self.field(), &z, &z), g)
    }

    /// The image of `m ⊗ x` in `(M ⊗_R X)_j`, for `m` a basis vector of `e_j M e_i` and `x ∈ e_i X`.
    fn pure(&self, t: &Tensor, m: &[Scalar], j: usize, i: usize, x: &[Scalar]) -> Vector {
        let f = self.field();
        let mut free = vec![f.zero(); t.pairs[j].len()];
        for (p, &(mm, ii, k)) in t.pairs[j].iter().enumerate() {
            if ii == i {
                free[p] = m[mm].mul(&x[k]);
            }
        }
        t.proj[j].mul_vec(&free)
    }

    pub fn validate_triple(&self, t: &Triple) -> Result<Tensor> {
        self.s.basic().validate_module(&t.y)?;
        let tensor = self.tensor_basis(&t.x)?;
        self.s.basic().validate_map(&t.phi, &tensor.module, &t.y)?;
        Ok(tensor)
    }

    /// `(X, Y)_φ` as a `Γ`-module.
    pub fn to_module(&self, t: &Triple) -> Result<Module> {
        let tensor = self.validate_triple(t)?;
        let f = self.field();
        let nr = self.nr();
        let mut dims = t.x.dims.clone();
        dims.extend_from_slice(&t.y.dims);
        let mut maps: Vec<Mat> = t.x.maps.iter().chain(&t.y.maps).cloned().collect();
        let shape = &self.gamma.shape;
        let first_m = self.r.quiver().arrows().len() + self.s.quiver().arrows().len();
        for (g, &(i, jj)) in shape.arrows.iter().enumerate().skip(first_m) {
            let j = jj - nr;
            let mu = self.generator_in_m(g);
            let cols: Vec<Vector> = (0..t.x.dims[i])
                .map(|k| {
                    let mut x = vec![f.zero(); t.x.dims[i]];
                    x[k] = f.one();
                    t.phi.blocks[j].mul_vec(&self.pure(&tensor, &mu, j, i, &x))
                })
                .collect();
            maps.push(Mat::from_cols(f, t.y.dims[j], &cols));
        }
        Ok(Module { field: f, dims, maps })
    }

    fn generator_in_m(&self, g: usize) -> Vector {
        let dr = self.r.dim();
        self.gen_elems[g][dr..dr + self.m_dim].to_vec()
    }

    /// Reads a `Γ`-module back as a triple.
    pub fn from_module(&self, n: &Module) -> Result<Triple> {
        let f = self.field();
        let (nr, ns) = (self.nr(), self.ns());
        let (ar, as_) = (self.r.quiver().arrows().len(), self.s.quiver().arrows().len());
        if !n.fits(&self.gamma.shape) {
            return Err(Error::InvalidModule("not a module over the triangular ring".into()));
        }
        let x = Module { field: f, dims: n.dims[..nr].to_vec(), maps: n.maps[..ar].to_vec() };
        let y = Module { field: f, dims: n.dims[nr..].to_vec(), maps: n.maps[ar..ar + as_].to_vec() };
        let tensor = self.tensor_basis(&x)?;
        let mut blocks = Vec::new();
        for j in 0..ns {
            let cols: Vec<Vector> = tensor.pairs[j]
                .iter()
                .map(|&(m, i, k)| {
                    let mut xv = vec![f.zero(); n.dims[i]];
                    xv[k] = f.one();
                    self.act_m(m, n, &xv)
                })
                .collect();
            let values = Mat::from_cols(f, n.dims[nr + j], &cols);
            let phi = values.mul(&tensor.section[j]);
            if phi.mul(&tensor.proj[j]) != values {
                return Err(Error::InvalidModule("bimodule action is not balanced over R".into()));
            }
            blocks.push(phi);
        }
        Ok(Triple { x, y, phi: ModMap { blocks } })
    }

    fn act_m(&self, m: usize, n: &Module, x: &[Scalar]) -> Vector {
        let f = self.field();
        let j = self.block_of[m].0;
        let mut out = vec![f.zero(); n.dims[self.nr() + j]];
        for (c, w) in &self.m_words[m] {
            let y = n.apply_word(w, x);
            for (o, v) in out.iter_mut().zip(&y) {
                *o = o.add(&c.mul(v));
            }
        }
        out
    }

    /// `Γ`-map from its `R`-side and `S`-side components.
    pub fn map_from_parts(&self, on_x: &ModMap, on_y: &ModMap) -> ModMap {
        ModMap { blocks: on_x.blocks.iter().chain(&on_y.blocks).cloned().collect() }
    }

    pub fn zero_r(&self) -> Module {
        self.r.basic().zero_module()
    }

    /// `e^1_λ(X) = (X, M ⊗ X)_1`.
    pub fn column(&self, x: &Module) -> Result<Triple> {
        let t = self.tensor_basis(x)?;
        let phi = ModMap::identity(&t.module);
        Ok(Triple { x: x.clone(), y: t.module, phi })
    }

    /// `e^2_λ(Y) = (0, Y)_0`.
    pub fn row(&self, y: &Module) -> Triple {
        let x = self.zero_r();
        let f = self.field();
        let phi = ModMap { blocks: y.dims.iter().map(|&d| Mat::zeros(f, d, 0)).collect() };
        Triple { x, y: y.clone(), phi }
    }

    pub fn triple_ses(&self, t: &Triple) -> Result<TripleSes> {
        let tensor = self.validate_triple(t)?;
        let f = self.field();
        let sb = self.s.basic();
        let tm = &tensor.module;
        let left = self.row(tm);
        let mid_y = sb.direct_sum(&[tm, &t.y]);
        let id_t = ModMap::identity(tm);
        let id_y = ModMap::identity(&t.y);
        let zero_ty = ModMap::zero(f, tm, &t.y);
        let zero_yt = ModMap::zero(f, &t.y, tm);
        let middle = Triple { x: t.x.clone(), y: mid_y.clone(), phi: ModMap::vcat(&[&id_t, &zero_ty], f, tm) };
        let f_y = ModMap::vcat(&[&id_t, &t.phi], f, tm);
        let g_y = ModMap::hcat(&[&t.phi, &id_y.neg()], f, &t.y);
        let s_y = ModMap::vcat(&[&zero_yt, &id_y.neg()], f, &t.y);
        let fx = ModMap::zero(f, &self.zero_r(), &t.x);
        let idx = ModMap::identity(&t.x);
        let ses = TripleSes {
            f: self.map_from_parts(&fx, &f_y),
            g: self.map_from_parts(&idx, &g_y),
            section: self.map_from_parts(&idx, &s_y),
            left,
            middle,
            right: t.clone(),
        };
        let (l, m, r) = (self.to_module(&ses.left)?, self.to_module(&ses.middle)?, self.to_module(&ses.right)?);
        let shape = &self.gamma.shape;
        let exact = ses.f.is_homomorphism(shape, &l, &m)
            && ses.g.is_homomorphism(shape, &m, &r)
            && ses.g.compose(&ses.f).is_zero()
            && ses.f.rank() == l.total_dim()
            && ses.g.rank() == r.total_dim()
            && m.total_dim() == l.total_dim() + r.total_dim()
            && ses.g.compose(&ses.section) == ModMap::identity(&r);
        if !exact {
            return Err(Error::Other("triple sequence failed its exactness check".into()));
        }
        Ok(ses)
    }

    /// Indecomposable projective `Γ`-modules: `e^1_λ(P_i)` then `e^2_λ(Q_j)`.
    pub fn projective_triples(&self) -> Result<Vec<Triple>> {
        let mut out = Vec::new();
        for i in 0..self.nr() {
            out.push(self.column(self.r.basic().projective(i))?);
        }
        for j in 0..self.ns() {
            out.push(self.row(self.s.basic().projective(j)));
        }
        Ok(out)
    }

    pub fn is_projective_triple(&self, t: &Triple) -> Result<ProjectivityCertificate> {
        self.validate_triple(t)?;
        let sb = self.s.basic();
        let x_projective = self.r.basic().is_projective(&t.x);
        let tdim: usize = t.phi.blocks.iter().map(Mat::cols).sum();
        let phi_mono = t.phi.rank() == tdim;
        let (coker, _) = sb.cokernel(&t.phi, &t.y);
        let coker_projective = sb.is_projective(&coker);
        let pieces: Vec<Module> =
            self.projective_triples()?.iter().map(|p| self.to_module(p)).collect::<Result<_>>()?;
        let n = self.to_module(t)?;
        let lifting = self.gamma.in_add(&n, &pieces.iter().collect::<Vec<_>>());
        Ok(ProjectivityCertificate { x_projective, phi_mono, coker_projective, lifting })
    }

    pub fn triple_pd(&self, t: &Triple, cap: usize) -> Result<Dim> {
        Ok(self.gamma.pd(&self.to_module(t)?, cap))
    }

    pub fn gldim(&self, cap: usize) -> Dim {
        self.gamma.gldim(cap)
    }

    pub fn sandwich(&self, cap: usize) -> Sandwich {
        let gldim_r = self.r.basic().gldim(cap);
        let gldim_s = self.s.basic().gldim(cap);
        let pd_m = self.s.basic().pd(&self.bimodule_as_left_module(), cap);
        let gldim = self.gldim(cap);
        // pd of the zero module counts as -1, so its terms reduce to gl.dim R
        let (lower, upper) = if self.m_dim == 0 {
            (gldim_r.max(gldim_s), gldim_r.max(gldim_s))
        } else {
            (gldim_r.max(gldim_s).max(pd_m.plus(1)), gldim_r.add(pd_m).plus(1).max(gldim_s))
        };
        Sandwich {
            lower_holds: lower.le_dim(&gldim),
            upper_holds: gldim.le_dim(&upper),
            gldim_r,
            gldim_s,
            pd_m,
            gldim,
            lower,
            upper,
        }
    }
}

/// Structure constants, generators and names of `Γ`.
fn build_gamma(
    r: &Bqa,
    s: &Bqa,
    d: usize,
    left: &[Mat],
    right: &[Mat],
    blocks: &[Vec<Vec<usize>>],
) -> Result<(ScAlgebra, Shape, Vec<Vector>, Vec<String>)> {
    let f = r.field();
    let (dr, ds) = (r.dim(), s.dim());
    let (nr, ns) = (r.quiver().vertex_count(), s.quiver().vertex_count());
    let n = dr + d + ds;
    let id = Mat::identity(f, d);
    let right_of: Vec<Mat> = r
        .basis()
        .iter()
        .map(|p| if p.is_trivial() { right[p.source].clone() } else { word_product(right, &p.arrows, nr, true, &id) })
        .collect();
    let left_of: Vec<Mat> = s
        .basis()
        .iter()
        .map(|p| if p.is_trivial() { left[p.source].clone() } else { word_product(left, &p.arrows, ns, false, &id) })
        .collect();
    let shift = |v: &Sparse, off: usize| -> Sparse { v.iter().map(|(k, c)| (k + off, c.clone())).collect() };
    let col_sparse = |m: &Mat, c: usize, off: usize| -> Sparse {
        (0..m.rows()).filter(|&k| !m.get(k, c).is_zero()).map(|k| (k + off, m.get(k, c).clone())).collect()
    };
    let mut table = vec![vec![Vec::new(); n]; n];
    for a in 0..dr {
        for b in 0..dr {
            table[a][b] = r.mul_basis(a, b);
        }
    }
    for a in 0..d {
        for (b, rt) in right_of.iter().enumerate() {
            table[dr + a][b] = col_sparse(rt, a, dr);
        }
    }
    for (a, l) in left_of.iter().enumerate() {
        for b in 0..d {
            table[dr + d + a][dr + b] = col_sparse(l, b, dr);
        }
        for b in 0..ds {
            table[dr + d + a][dr + d + b] = shift(&s.mul_basis(a, b), dr + d);
        }
    }
    let unit_at = |idx: usize| {
        let mut v = vec![f.zero(); n];
        v[idx] = f.one();
        v
    };
    let mut idem = Vec::new();
    for v in 0..nr {
        let k = r.basis_index(&Path::trivial(v)).expect("trivial path");
        idem.push((format!("R:{}", r.quiver().vertices()[v]), unit_at(k)));
    }
    for v in 0..ns {
        let k = s.basis_index(&Path::trivial(v)).expect("trivial path");
        idem.push((format!("S:{}", s.quiver().vertices()[v]), unit_at(dr + d + k)));
    }
    let unit = idem.iter().fold(vec![f.zero(); n], |acc, (_, e)| acc.iter().zip(e).map(|(a, b)| a.add(b)).collect());
    let sc = ScAlgebra::new(f, n, table, unit, Some(idem))?;

    let mut arrows = Vec::new();
    let mut elems = Vec::new();
    let mut names = Vec::new();
    for (alg, off, voff) in [(r, 0usize, 0usize), (s, dr + d, nr)] {
        for (g, a) in alg.quiver().arrows().iter().enumerate() {
            let p = Path { source: a.source, target: a.target, arrows: vec![g] };
            let k = alg
                .basis_index(&p)
                .ok_or_else(|| Error::NotAdmissible(format!("arrow {} vanishes in the algebra", a.name)))?;
            arrows.push((a.source + voff, a.target + voff));
            elems.push(unit_at(off + k));
            names.push(a.name.clone());
        }
    }
    for j in 0..ns {
        for i in 0..nr {
            let block = &blocks[j][i];
            if block.is_empty() {
                continue;
            }
            let mut images = Vec::new();
            for (b, a) in s.quiver().arrows().iter().enumerate() {
                if a.target == j {
                    let l = &left[ns + b];
                    for &m in &blocks[a.source][i] {
                        images.push(l.col(m));
                    }
                }
            }
            for (g, a) in r.quiver().arrows().iter().enumerate() {
                if a.source == i {
                    let rt = &right[nr + g];
                    for &m in &blocks[j][a.target] {
                        images.push(rt.col(m));
                    }
                }
            }
            let sub = Mat::from_cols(f, d, &images).select_rows(block);
            let full = Mat::identity(f, d).select_rows(block);
            for (k, c) in Mat::extend_basis(&sub.column_basis(), &full).into_iter().enumerate() {
                let mut v = vec![f.zero(); n];
                v[dr + block[c]] = f.one();
                arrows.push((i, nr + j));
                elems.push(v);
                names.push(format!("m{j}_{i}_{k}"));
            }
        }
    }
    Ok((sc, Shape { vertices: nr + ns, arrows }, elems, names))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quiver::standard;

    fn q() -> Field {
        Field::Rationals
    }

    fn k() -> Bqa {
        Bqa::path_algebra(standard::point(), q()).unwrap()
    }

    fn dual_numbers() -> Bqa {
        Bqa::new(standard::loop_quiver(), q(), vec![vec![(q().one(), vec![0, 0])]], Some(2)).unwrap()
    }

    fn id(n: usize) -> Mat {
        Mat::identity(q(), n)
    }

    /// `[[k, 0], [k, k]]`.
    fn t2() -> TriRing {
        TriRing::new(k(), k(), BimoduleSpec { dim: 1, left: vec![id(1)], right: vec![id(1)] }).unwrap()
    }

    fn simple_k() -> Module {
        k().basic().simple(0)
    }

    #[test]
    fn tensor_dimensions() {
        let t = t2();
        assert_eq!(t.tensor_basis(&simple_k()).unwrap().dim(), 1);
        let two = TriRing::new(k(), k(), BimoduleSpec { dim: 2, left: vec![id(2)], right: vec![id(2)] }).unwrap();
        assert_eq!(two.tensor_basis(&simple_k()).unwrap().dim(), 2);

        // k[x]/(x^2) as a bimodule over itself, basis (1, x)
        let x = Mat::from_i64(q(), &[&[0, 0], &[1, 0]]);
        let spec = BimoduleSpec { dim: 2, left: vec![id(2), x.clone()], right: vec![id(2), x] };
        let reg = TriRing::new(dual_numbers(), dual_numbers(), spec).unwrap();
        let s = dual_numbers().basic().simple(0);
        assert_eq!(reg.tensor_basis(&s).unwrap().dim(), 1);
        let p = dual_numbers().basic().projective(0).clone();
        assert_eq!(reg.tensor_basis(&p).unwrap().dim(), 2);
    }

    #[test]
    fn bimodule_validation() {
        let bad = BimoduleSpec { dim: 1, left: vec![id(1)], right: vec![Mat::zeros(q(), 1, 1)] };
        assert!(matches!(TriRing::new(k(), k(), bad), Err(Error::InvalidBimodule(_))));
        let x = Mat::from_i64(q(), &[&[0, 0], &[1, 0]]);
        let y = Mat::from_i64(q(), &[&[0, 1], &[0, 0]]);
        let spec = BimoduleSpec { dim: 2, left: vec![id(2), x], right: vec![id(2), y] };
        assert!(matches!(TriRing::new(dual_numbers(), dual_numbers(), spec), Err(Error::InvalidBimodule(_))));
    }

    #[test]
    fn triple_sequences() {
        let t = t2();
        let kk = t.column(&simple_k()).unwrap();
        let ses = t.triple_ses(&kk).unwrap();
        assert_eq!(t.to_module(&ses.left).unwrap().total_dim(), 1);
        assert_eq!(t.to_module(&ses.middle).unwrap().total_dim(), 3);
        assert_eq!(t.to_module(&ses.right).unwrap().total_dim(), 2);

        let row = t.row(&simple_k());
        let ses = t.triple_ses(&row).unwrap();
        assert_eq!(t.to_module(&ses.left).unwrap().total_dim(), 0);
        assert_eq!(ses.middle.y.total_dim(), 1);
        assert_eq!(ses.g.rank(), 1);
    }

    #[test]
    fn projectivity_examples() {
        let t = t2();
        let col = t.column(k().basic().projective(0)).unwrap();
        let c = t.is_projective_triple(&col).unwrap();
        assert!(c.criterion() && c.lifting);
        let row = t.row(k().basic().projective(0));
        let c = t.is_projective_triple(&row).unwrap();
        assert!(c.criterion() && c.lifting);
        let top =
            Triple { x: simple_k(), y: k().basic().zero_module(), phi: ModMap { blocks: vec![Mat::zeros(q(), 0, 1)] } };
        let c = t.is_projective_triple(&top).unwrap();
        assert!(!c.phi_mono && !c.criterion() && !c.lifting);
    }

    #[test]
    fn modules_round_trip() {
        let t = t2();
        for tr in [t.column(&simple_k()).unwrap(), t.row(&simple_k())] {
            let m = t.to_module(&tr).unwrap();
            assert_eq!(t.from_module(&m).unwrap(), tr);
        }
    }

    #[test]
    fn global_dimension_sandwich() {
        let t = t2();
        assert_eq!(t.gldim(20), Dim::Finite(1));
        let s = t.sandwich(20);
        assert_eq!(s.lower, Dim::Finite(1));
        assert_eq!(s.upper, Dim::Finite(1));
        assert_eq!((s.lower_holds, s.upper_holds), (Some(true), Some(true)));
        let col = t.column(k().basic().projective(0)).unwrap();
        assert_eq!(t.triple_pd(&col, 20).unwrap(), Dim::Finite(0));

        // R = k[x]/(x^2), S = k, M = k with x acting by zero
        let spec = BimoduleSpec { dim: 1, left: vec![id(1)], right: vec![id(1), Mat::zeros(q(), 1, 1)] };
        let t = TriRing::new(dual_numbers(), k(), spec).unwrap();
        let s = t.sandwich(8);
        assert_eq!(s.lower, Dim::AtLeast(8));
        assert_eq!(s.gldim, Dim::AtLeast(8));
        assert!(!s.violated());

        let split = TriRing::new(k(), k(), BimoduleSpec { dim: 0, left: vec![id(0)], right: vec![id(0)] }).unwrap();
        let s = split.sandwich(8);
        assert_eq!((s.lower, s.gldim, s.upper), (Dim::Finite(0), Dim::Finite(0), Dim::Finite(0)));
    }
}
