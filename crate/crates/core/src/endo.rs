//! Endomorphism algebras of explicit lists of modules, as structure-constant
//! algebras, and the two lemmas comparing them with path-indexed algebras.

use std::collections::HashMap;

use rayon::prelude::*;

use crate::algebra::{BasicAlgebra, Dim, ModMap, Module, ScAlgebra, ScModule, Sparse};
use crate::error::{Error, Result};
use crate::exactlin::{Coordinates, Field, Mat, Scalar, Vector};
use crate::quiver::Path;
use crate::repcat::RepCategory;

/// Modules the caller declares indecomposable, with display labels.
#[derive(Clone, Debug)]
pub struct SummandList {
    pub summands: Vec<Module>,
    pub labels: Vec<String>,
}

impl SummandList {
    pub fn new(summands: Vec<Module>, labels: Vec<String>) -> Result<SummandList> {
        if summands.len() != labels.len() {
            return Err(Error::DimensionMismatch("one label per summand".into()));
        }
        if let Some(i) = summands.iter().position(Module::is_zero) {
            return Err(Error::InvalidModule(format!("summand `{}` is zero", labels[i])));
        }
        Ok(SummandList { summands, labels })
    }

    /// Labels `X0`, `X1`, ...
    pub fn unlabelled(summands: Vec<Module>) -> Result<SummandList> {
        let labels = (0..summands.len()).map(|i| format!("X{i}")).collect();
        SummandList::new(summands, labels)
    }

    pub fn len(&self) -> usize {
        self.summands.len()
    }

    pub fn is_empty(&self) -> bool {
        self.summands.is_empty()
    }

    pub fn concat(&self, other: &SummandList) -> SummandList {
        let mut out = self.clone();
        out.summands.extend(other.summands.iter().cloned());
        out.labels.extend(other.labels.iter().cloned());
        out
    }
}

/// A Hom space with a fixed basis and exact coordinates.
#[derive(Clone, Debug)]
struct HomSpace {
    basis: Vec<ModMap>,
    coords: Option<Coordinates>,
}

impl HomSpace {
    fn new(field: Field, basis: Vec<ModMap>) -> HomSpace {
        let coords = basis.first().map(|b| {
            let cols: Vec<Vector> = basis.iter().map(ModMap::flatten).collect();
            Coordinates::new(&Mat::from_cols(field, b.flatten().len(), &cols))
        });
        HomSpace { basis, coords }
    }

    fn coords(&self, f: &ModMap) -> Option<Vector> {
        match &self.coords {
            Some(c) => c.coords(&f.flatten()),
            None => f.is_zero().then(Vec::new),
        }
    }

    fn coords_unchecked(&self, f: &ModMap) -> Vector {
        match &self.coords {
            Some(c) => c.coords_unchecked(&f.flatten()),
            None => Vec::new(),
        }
    }
}

/// `End(⊕ X_i)` with product `f · g = f ∘ g`. The basis is the union of
/// bases of `Hom(X_i, X_j)`; the block `Hom(X_i, X_j)` is `e_j Γ e_i`.
#[derive(Clone, Debug)]
pub struct EndAlgebra {
    sc: ScAlgebra,
    list: SummandList,
    homs: Vec<Vec<HomSpace>>,
    offsets: Vec<Vec<usize>>,
    index: Vec<(usize, usize, usize)>,
}

/// Builds `End(⊕ X_i)` over `alg`. Over the rationals each `End(X_i)` is
/// checked to be local and split.
pub fn end_algebra(alg: &BasicAlgebra, list: &SummandList) -> Result<EndAlgebra> {
    let f = alg.field;
    for m in &list.summands {
        alg.validate_module(m)?;
    }
    let n = list.len();
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|i| (0..n).map(move |j| (i, j))).collect();
    let spaces: Vec<HomSpace> =
        pairs.par_iter().map(|&(i, j)| HomSpace::new(f, alg.hom_basis(&list.summands[i], &list.summands[j]))).collect();
    let mut homs: Vec<Vec<HomSpace>> = vec![Vec::with_capacity(n); n];
    for ((i, _), h) in pairs.iter().zip(spaces) {
        homs[*i].push(h);
    }
    let mut offsets = vec![vec![0; n]; n];
    let mut index = Vec::new();
    for i in 0..n {
        for j in 0..n {
            offsets[i][j] = index.len();
            index.extend((0..homs[i][j].basis.len()).map(|k| (i, j, k)));
        }
    }
    let dim = index.len();

    let rows: Vec<Result<Vec<Sparse>>> = (0..dim)
        .into_par_iter()
        .map(|a| {
            let (j, k, ka) = index[a];
            let phi = &homs[j][k].basis[ka];
            let mut row = vec![Vec::new(); dim];
            for i in 0..n {
                for (kb, psi) in homs[i][j].basis.iter().enumerate() {
                    let c = homs[i][k].coords(&phi.compose(psi)).ok_or_else(|| {
                        Error::CompositionInconsistent(format!(
                            "a composite {} -> {} -> {} leaves its Hom space",
                            list.labels[i], list.labels[j], list.labels[k]
                        ))
                    })?;
                    row[offsets[i][j] + kb] = c
                        .into_iter()
                        .enumerate()
                        .filter(|(_, x)| !x.is_zero())
                        .map(|(t, x)| (offsets[i][k] + t, x))
                        .collect();
                }
            }
            Ok(row)
        })
        .collect();
    let table = rows.into_iter().collect::<Result<Vec<_>>>()?;

    let mut idem = Vec::with_capacity(n);
    let mut unit = vec![f.zero(); dim];
    for i in 0..n {
        let id = ModMap::identity(&list.summands[i]);
        let c = homs[i][i]
            .coords(&id)
            .ok_or_else(|| Error::CompositionInconsistent(format!("identity of {} not found", list.labels[i])))?;
        let mut e = vec![f.zero(); dim];
        for (t, x) in c.into_iter().enumerate() {
            e[offsets[i][i] + t] = x.clone();
            unit[offsets[i][i] + t] = x;
        }
        idem.push((list.labels[i].clone(), e));
    }
    let peirce = (0..n)
        .map(|k| (0..n).map(|i| (offsets[i][k]..offsets[i][k] + homs[i][k].basis.len()).collect()).collect())
        .collect();
    let sc = ScAlgebra::new(f, dim, table, unit, Some(idem))?.with_peirce(peirce)?;
    let end = EndAlgebra { sc, list: list.clone(), homs, offsets, index };
    end.check_associative()?;
    if f.is_char_zero() {
        for (i, d) in end.sc.top_dims()?.into_iter().enumerate() {
            if d != 1 {
                return Err(Error::InvalidModule(format!(
                    "End({}) has a top of dimension {d}; summands must be indecomposable with split endomorphisms",
                    list.labels[i]
                )));
            }
        }
    }
    Ok(end)
}

fn normalize(field: Field, terms: Vec<(usize, Scalar)>) -> Sparse {
    let mut acc: HashMap<usize, Scalar> = HashMap::new();
    for (k, c) in terms {
        let e = acc.entry(k).or_insert_with(|| field.zero());
        *e = e.add(&c);
    }
    let mut out: Sparse = acc.into_iter().filter(|(_, c)| !c.is_zero()).collect();
    out.sort_by_key(|(k, _)| *k);
    out
}

impl EndAlgebra {
    pub fn sc(&self) -> &ScAlgebra {
        &self.sc
    }

    pub fn summands(&self) -> &SummandList {
        &self.list
    }

    pub fn labels(&self) -> &[String] {
        &self.list.labels
    }

    pub fn dim(&self) -> usize {
        self.sc.dim()
    }

    pub fn field(&self) -> Field {
        self.sc.field()
    }

    /// The chosen basis of `Hom(X_i, X_j)`.
    pub fn hom_basis(&self, i: usize, j: usize) -> &[ModMap] {
        &self.homs[i][j].basis
    }

    /// `(i, j, k)`: basis element `k` of `Hom(X_i, X_j)`.
    pub fn block_of(&self, idx: usize) -> (usize, usize, usize) {
        self.index[idx]
    }

    pub fn index_of(&self, i: usize, j: usize, k: usize) -> usize {
        self.offsets[i][j] + k
    }

    /// The algebra element of a morphism `X_i → X_j`, if it is one.
    pub fn element(&self, i: usize, j: usize, f: &ModMap) -> Option<Vector> {
        let c = self.homs[i][j].coords(f)?;
        let mut v = vec![self.field().zero(); self.dim()];
        for (t, x) in c.into_iter().enumerate() {
            v[self.offsets[i][j] + t] = x;
        }
        Some(v)
    }

    /// Associativity on composable basis triples; other triples vanish by the block structure.
    fn check_associative(&self) -> Result<()> {
        let n = self.list.len();
        let f = self.field();
        let sc = &self.sc;
        let quads: Vec<(usize, usize, usize, usize)> = (0..n)
            .flat_map(|i| (0..n).flat_map(move |j| (0..n).flat_map(move |k| (0..n).map(move |l| (i, j, k, l)))))
            .collect();
        quads.par_iter().try_for_each(|&(i, j, k, l)| {
            for a in self.range(k, l) {
                for b in self.range(j, k) {
                    for c in self.range(i, j) {
                        let lhs = sc
                            .structure_constants(a, b)
                            .iter()
                            .flat_map(|(m, x)| sc.structure_constants(*m, c).iter().map(move |(t, y)| (*t, x.mul(y))))
                            .collect();
                        let rhs = sc
                            .structure_constants(b, c)
                            .iter()
                            .flat_map(|(m, x)| sc.structure_constants(a, *m).iter().map(move |(t, y)| (*t, x.mul(y))))
                            .collect();
                        if normalize(f, lhs) != normalize(f, rhs) {
                            return Err(Error::CompositionInconsistent(format!("basis triple ({a}, {b}, {c})")));
                        }
                    }
                }
            }
            Ok(())
        })
    }

    fn range(&self, i: usize, j: usize) -> std::ops::Range<usize> {
        self.offsets[i][j]..self.offsets[i][j] + self.homs[i][j].basis.len()
    }
}

/// A left module over an endomorphism algebra, with the morphisms behind its basis.
#[derive(Clone, Debug)]
pub struct EndModule {
    pub module: ScModule,
    /// `(a, b, f)`: basis vector `f: F_a → X_b`, when the module is a Hom space.
    pub basis: Vec<(usize, usize, ModMap)>,
}

/// `Hom(⊕ F_a, ⊕ X_b)` as a left `End(⊕ X_b)`-module by post-composition.
pub fn hom_as_end_module(alg: &BasicAlgebra, from: &SummandList, to: &EndAlgebra) -> Result<EndModule> {
    let f = alg.field;
    let (na, nb) = (from.len(), to.list.len());
    let pairs: Vec<(usize, usize)> = (0..na).flat_map(|a| (0..nb).map(move |b| (a, b))).collect();
    let spaces: Vec<HomSpace> = pairs
        .par_iter()
        .map(|&(a, b)| HomSpace::new(f, alg.hom_basis(&from.summands[a], &to.list.summands[b])))
        .collect();
    let mut offset = HashMap::new();
    let mut basis = Vec::new();
    for (&(a, b), h) in pairs.iter().zip(&spaces) {
        offset.insert((a, b), basis.len());
        basis.extend(h.basis.iter().map(|m| (a, b, m.clone())));
    }
    let dim = basis.len();
    let space_of = |a: usize, b: usize| &spaces[a * nb + b];
    let actions = (0..to.dim())
        .into_par_iter()
        .map(|g| {
            let (b, c, k) = to.index[g];
            let phi = &to.homs[b][c].basis[k];
            let mut m = Mat::zeros(f, dim, dim);
            for a in 0..na {
                let src = offset[&(a, b)];
                let dst = offset[&(a, c)];
                for (s, psi) in space_of(a, b).basis.iter().enumerate() {
                    let col = space_of(a, c).coords_unchecked(&phi.compose(psi));
                    for (t, x) in col.into_iter().enumerate() {
                        m.set(dst + t, src + s, x);
                    }
                }
            }
            m
        })
        .collect();
    let module = ScModule { dim, actions };
    if module.action(to.sc(), to.sc().unit()) != Mat::identity(f, dim) {
        return Err(Error::CompositionInconsistent("the unit does not act as the identity".into()));
    }
    Ok(EndModule { module, basis })
}

/// Global dimension of an endomorphism algebra through its basic presentation.
pub fn sc_gldim(end: &EndAlgebra, cap: usize) -> Result<Dim> {
    Ok(end.sc.present()?.algebra.gldim(cap))
}

pub fn is_projective_endmodule(end: &EndAlgebra, n: &EndModule) -> Result<bool> {
    let pres = end.sc.present()?;
    let m = n.module.to_basic_module(&end.sc, &pres)?;
    Ok(pres.algebra.is_projective(&m))
}

/// Which adjoint of evaluation builds the summands.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, serde::Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Side {
    Lambda,
    Rho,
}

impl Side {
    pub fn tag(self) -> &'static str {
        match self {
            Side::Lambda => "lambda",
            Side::Rho => "rho",
        }
    }
}

/// Both sides of `End(⊕_v e^v(A)) ≅ (End A)Q'` and the basis correspondence.
#[derive(Clone, Debug)]
pub struct Lemma36Report {
    pub side: Side,
    pub vertices: Vec<usize>,
    pub left: EndAlgebra,
    /// Basis `(p, γ)`; `(p', γ')(p, γ) = (p' then p, γ' γ)` when composable.
    pub right: ScAlgebra,
    pub right_basis: Vec<(Path, usize)>,
    /// Column `r`: the left-hand coordinates of the image of right basis element `r`.
    pub correspondence: Mat,
}

impl Lemma36Report {
    pub fn dims(&self) -> (usize, usize) {
        (self.left.dim(), self.right.dim())
    }
}

/// `End(⊕_v e^v_λ(A)) ≅ (End A)Q` over all vertices.
pub fn lemma36_iso(rc: &RepCategory, a: &SummandList) -> Result<Lemma36Report> {
    let all: Vec<usize> = (0..rc.quiver().vertex_count()).collect();
    adjoint_end_iso(rc, a, Side::Lambda, &all)
}

/// Builds `End(⊕_{v ∈ V'} e^v(A_i))` and `(End A)Q'` for the full subquiver `Q'`
/// on `vertices`, and checks that `(p, γ) ↦ φ_{p,γ}` is an algebra
/// isomorphism, where `φ_{p,γ}` places `γ` along `p` through the adjoint.
pub fn adjoint_end_iso(rc: &RepCategory, a: &SummandList, side: Side, vertices: &[usize]) -> Result<Lemma36Report> {
    let lam = rc.base_algebra();
    let f = rc.field();
    let q = rc.quiver();
    let na = a.len();
    let end_a = end_algebra(lam, a)?;
    let da = end_a.dim();
    let mut pos = HashMap::new();
    for (k, &v) in vertices.iter().enumerate() {
        if v >= q.vertex_count() || pos.insert(v, k).is_some() {
            return Err(Error::UnknownVertex(v.to_string()));
        }
    }

    let mut left_mods = Vec::new();
    let mut left_labels = Vec::new();
    for &v in vertices {
        for (m, l) in a.summands.iter().zip(&a.labels) {
            left_mods.push(match side {
                Side::Lambda => rc.left_adjoint(v, m)?,
                Side::Rho => rc.right_adjoint(v, m)?,
            });
            left_labels.push(format!("e{}_{}({l})", q.vertices()[v], side.tag()));
        }
    }
    let left = end_algebra(rc.algebra(), &SummandList::new(left_mods, left_labels)?)?;

    let removed: Vec<usize> = (0..q.vertex_count()).filter(|v| !pos.contains_key(v)).collect();
    let (sub, map) = q.delete_vertices(&removed);
    let mut old_vertex = vec![0; sub.vertex_count()];
    for (old, new) in map.iter().enumerate() {
        if let Some(n) = new {
            old_vertex[*n] = old;
        }
    }
    let old_arrow: Vec<usize> = (0..q.arrows().len())
        .filter(|&k| map[q.arrows()[k].source].is_some() && map[q.arrows()[k].target].is_some())
        .collect();
    let paths: Vec<Path> = sub
        .all_paths()
        .into_iter()
        .map(|p| Path {
            source: old_vertex[p.source],
            target: old_vertex[p.target],
            arrows: p.arrows.iter().map(|&k| old_arrow[k]).collect(),
        })
        .collect();
    let path_index: HashMap<&Path, usize> = paths.iter().enumerate().map(|(i, p)| (p, i)).collect();
    let right_basis: Vec<(Path, usize)> = paths.iter().flat_map(|p| (0..da).map(move |g| (p.clone(), g))).collect();
    let dim = right_basis.len();
    let table: Vec<Vec<Sparse>> = (0..dim)
        .map(|x| {
            let (p1, g1) = &right_basis[x];
            (0..dim)
                .map(|y| {
                    let (p2, g2) = &right_basis[y];
                    match p1.then(p2) {
                        Some(r) => {
                            let ri = path_index[&r];
                            end_a
                                .sc
                                .structure_constants(*g1, *g2)
                                .iter()
                                .map(|(k, c)| (ri * da + k, c.clone()))
                                .collect()
                        }
                        None => Vec::new(),
                    }
                })
                .collect()
        })
        .collect();
    let mut idem = Vec::new();
    let mut unit = vec![f.zero(); dim];
    let end_idem = end_a.sc.idempotents().expect("end algebras carry idempotents");
    for &v in vertices {
        let pv = path_index[&Path::trivial(v)];
        for (label, e) in end_idem {
            let mut x = vec![f.zero(); dim];
            for (g, c) in e.iter().enumerate() {
                x[pv * da + g] = c.clone();
                unit[pv * da + g] = unit[pv * da + g].add(c);
            }
            idem.push((format!("{}:{label}", q.vertices()[v]), x));
        }
    }
    let nv = vertices.len();
    let mut peirce = vec![vec![Vec::new(); nv * na]; nv * na];
    for (r, (p, g)) in right_basis.iter().enumerate() {
        let (i, j, _) = end_a.block_of(*g);
        peirce[pos[&p.source] * na + j][pos[&p.target] * na + i].push(r);
    }
    let right = ScAlgebra::new(f, dim, table, unit, Some(idem))
        .and_then(|s| s.with_peirce(peirce))
        .map_err(|e| Error::IsoCheckFailed(format!("path-indexed algebra: {e}")))?;

    let mut cols = Vec::with_capacity(dim);
    for (p, g) in &right_basis {
        let (i, j, k) = end_a.block_of(*g);
        let gamma = &end_a.hom_basis(i, j)[k];
        let phi = match side {
            Side::Lambda => rc.left_adjoint_along(p, gamma, &a.summands[i], &a.summands[j])?,
            Side::Rho => rc.right_adjoint_along(p, gamma, &a.summands[i], &a.summands[j])?,
        };
        let (s, t) = (pos[&p.target] * na + i, pos[&p.source] * na + j);
        let col = left.element(s, t, &phi).ok_or_else(|| {
            Error::IsoCheckFailed(format!("the image of ({p:?}, {g}) is not a morphism between the expected summands"))
        })?;
        cols.push(col);
    }
    let phi = Mat::from_cols(f, left.dim(), &cols);
    if left.dim() != dim || phi.rank() != dim {
        return Err(Error::IsoCheckFailed(format!(
            "correspondence between dimensions {} and {dim} is not bijective",
            left.dim()
        )));
    }
    if phi.mul_vec(right.unit()) != *left.sc().unit() {
        return Err(Error::IsoCheckFailed("the unit is not preserved".into()));
    }
    let blocks: Vec<(usize, usize)> = right_basis.iter().map(|(p, _)| (p.source, p.target)).collect();
    (0..dim).into_par_iter().try_for_each(|x| {
        for y in 0..dim {
            if blocks[x].1 != blocks[y].0 {
                continue;
            }
            let mut xy = vec![f.zero(); dim];
            for (k, c) in right.structure_constants(x, y) {
                xy[*k] = c.clone();
            }
            if phi.mul_vec(&xy) != left.sc().mul(&cols[x], &cols[y]) {
                return Err(Error::IsoCheckFailed(format!("products of basis elements {x} and {y} disagree")));
            }
        }
        Ok(())
    })?;
    Ok(Lemma36Report { side, vertices: vertices.to_vec(), left, right, right_basis, correspondence: phi })
}

/// `dim Hom(e^v_ρ(A), e^w_λ(A))` for sinks `v` and non-sinks `w`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Lemma37Report {
    pub pairs: Vec<(usize, usize, usize)>,
    /// The quiver is of type A, where the vanishing is not expected.
    pub type_a: bool,
}

impl Lemma37Report {
    pub fn all_zero(&self) -> bool {
        self.pairs.iter().all(|p| p.2 == 0)
    }

    /// Whether every Hom space vanishes; an error when the quiver is of type A.
    pub fn verdict(&self) -> Result<bool> {
        if self.type_a {
            return Err(Error::HypothesisViolated("the quiver is of type A".into()));
        }
        Ok(self.all_zero())
    }
}

pub fn lemma37_check(rc: &RepCategory, a: &Module) -> Result<Lemma37Report> {
    let q = rc.quiver();
    let sinks = q.sinks();
    let others: Vec<usize> = (0..q.vertex_count()).filter(|w| !sinks.contains(w)).collect();
    let mut pairs = Vec::new();
    for &v in &sinks {
        let rho = rc.right_adjoint(v, a)?;
        for &w in &others {
            let lam = rc.left_adjoint(w, a)?;
            pairs.push((v, w, rc.algebra().hom_dim(&rho, &lam)));
        }
    }
    Ok(Lemma37Report { pairs, type_a: q.is_type_an() })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::Bqa;
    use crate::quiver::standard;

    const Q: Field = Field::Rationals;

    fn kan(n: usize) -> BasicAlgebra {
        Bqa::path_algebra(standard::linear_an(n), Q).unwrap().basic().clone()
    }

    fn dual_numbers() -> Bqa {
        Bqa::new(standard::loop_quiver(), Q, vec![vec![(Q.one(), vec![0, 0])]], Some(2)).unwrap()
    }

    fn point() -> Bqa {
        Bqa::path_algebra(standard::point(), Q).unwrap()
    }

    fn list(ms: Vec<Module>) -> SummandList {
        SummandList::unlabelled(ms).unwrap()
    }

    #[test]
    fn end_of_a_point_is_the_field() {
        let k = point();
        let end = end_algebra(k.basic(), &list(vec![k.basic().simple(0)])).unwrap();
        assert_eq!(end.dim(), 1);
        assert_eq!(sc_gldim(&end, 5).unwrap(), Dim::Finite(0));
    }

    #[test]
    fn end_of_projectives_of_a2() {
        let a2 = kan(2);
        let end = end_algebra(&a2, &list(vec![a2.projective(0).clone(), a2.projective(1).clone()])).unwrap();
        assert_eq!(end.dim(), 3);
        end.sc().check_associative().unwrap();
        assert_eq!(sc_gldim(&end, 5).unwrap(), Dim::Finite(1));
    }

    #[test]
    fn end_of_left_adjoints_over_a2() {
        let rc = RepCategory::new(standard::a2(), point()).unwrap();
        let k = rc.base_algebra().simple(0);
        let xs = vec![rc.left_adjoint(0, &k).unwrap(), rc.left_adjoint(1, &k).unwrap()];
        assert_eq!(end_algebra(rc.algebra(), &list(xs)).unwrap().dim(), 3);
    }

    #[test]
    fn zero_and_decomposable_summands_are_rejected() {
        let a2 = kan(2);
        assert!(SummandList::unlabelled(vec![a2.zero_module()]).is_err());
        let sum = a2.direct_sum(&[a2.projective(0), a2.projective(1)]);
        assert!(matches!(end_algebra(&a2, &list(vec![sum])), Err(Error::InvalidModule(_))));
    }

    #[test]
    fn auslander_algebra_of_dual_numbers() {
        let d = dual_numbers();
        let lam = d.basic();
        let s = lam.simple(0);
        let p = lam.projective(0).clone();
        let end = end_algebra(lam, &list(vec![s.clone(), p.clone()])).unwrap();
        assert_eq!(end.dim(), 5);
        assert_eq!(sc_gldim(&end, 10).unwrap(), Dim::Finite(2));
        let dup = end_algebra(lam, &list(vec![s.clone(), p, s])).unwrap();
        assert_eq!(sc_gldim(&dup, 10).unwrap(), Dim::Finite(2));
    }

    #[test]
    fn hom_modules_and_projectivity() {
        let a2 = kan(2);
        let ps = list(vec![a2.projective(0).clone(), a2.projective(1).clone()]);
        let end = end_algebra(&a2, &ps).unwrap();
        let regular = hom_as_end_module(&a2, &ps, &end).unwrap();
        regular.module.validate(end.sc()).unwrap();
        assert_eq!(regular.module.dim, end.dim());
        assert!(is_projective_endmodule(&end, &regular).unwrap());
        for i in 0..2 {
            let from = list(vec![ps.summands[i].clone()]);
            assert!(is_projective_endmodule(&end, &hom_as_end_module(&a2, &from, &end).unwrap()).unwrap());
        }

        let p1 = list(vec![a2.projective(0).clone()]);
        let end1 = end_algebra(&a2, &p1).unwrap();
        let n = hom_as_end_module(&a2, &list(vec![a2.projective(1).clone()]), &end1).unwrap();
        assert_eq!(n.module.dim, 1);

        // the simple top of the two-dimensional indecomposable projective
        let big = (0..2).find(|&i| end.hom_basis(i, 0).len() + end.hom_basis(i, 1).len() == 2).unwrap();
        let id = end.element(big, big, &ModMap::identity(&ps.summands[big])).unwrap();
        let actions = (0..end.dim())
            .map(|g| {
                let (i, j, _) = end.block_of(g);
                let c = if (i, j) == (big, big) { id[g].inv() } else { Q.zero() };
                Mat::from_vec(Q, 1, 1, vec![c])
            })
            .collect();
        let simple = EndModule { module: ScModule { dim: 1, actions }, basis: Vec::new() };
        simple.module.validate(end.sc()).unwrap();
        assert!(!is_projective_endmodule(&end, &simple).unwrap());
    }

    fn lemma36_dims(q: crate::quiver::Quiver, base: Bqa) -> (usize, usize) {
        let a = list(vec![base.basic().projective(0).clone()]);
        let rc = RepCategory::new(q, base).unwrap();
        lemma36_iso(&rc, &a).unwrap().dims()
    }

    #[test]
    fn lemma36_examples() {
        assert_eq!(lemma36_dims(standard::a2(), point()), (3, 3));
        assert_eq!(lemma36_dims(standard::d4_outward(), point()), (7, 7));
        assert_eq!(lemma36_dims(standard::a2(), dual_numbers()), (6, 6));
    }

    #[test]
    fn rho_side_and_vertex_subsets() {
        let k = point();
        let a = list(vec![k.basic().simple(0)]);
        let rc = RepCategory::new(standard::d4_outward(), k).unwrap();
        let all: Vec<usize> = (0..4).collect();
        assert_eq!(adjoint_end_iso(&rc, &a, Side::Rho, &all).unwrap().dims(), (7, 7));
        let sinks = rc.quiver().sinks();
        assert_eq!(adjoint_end_iso(&rc, &a, Side::Lambda, &sinks).unwrap().dims(), (3, 3));
        assert_eq!(adjoint_end_iso(&rc, &a, Side::Rho, &[3, 0]).unwrap().dims(), (3, 3));
    }

    #[test]
    fn lemma36_with_two_summands_and_gldim_agreement() {
        let d = dual_numbers();
        let a = list(vec![d.basic().simple(0), d.basic().projective(0).clone()]);
        let rc = RepCategory::new(standard::a2(), d).unwrap();
        let rep = lemma36_iso(&rc, &a).unwrap();
        assert_eq!(rep.dims(), (15, 15));
        let left = sc_gldim(&rep.left, 10).unwrap();
        assert_eq!(left, rep.right.to_basic().unwrap().gldim(10));
        assert_eq!(left, Dim::Finite(3));
    }

    #[test]
    fn lemma37_vanishing_and_its_type_a_counterexample() {
        let k = point();
        let s = k.basic().simple(0);
        for q in [standard::d4_outward(), standard::kronecker()] {
            let rc = RepCategory::new(q, k.clone()).unwrap();
            let rep = lemma37_check(&rc, &s).unwrap();
            assert!(!rep.pairs.is_empty());
            assert_eq!(rep.verdict(), Ok(true));
        }
        let rc = RepCategory::new(standard::a2(), k).unwrap();
        let rep = lemma37_check(&rc, &s).unwrap();
        assert_eq!(rep.pairs, vec![(1, 0, 1)]);
        assert!(matches!(rep.verdict(), Err(Error::HypothesisViolated(_))));
    }
}
