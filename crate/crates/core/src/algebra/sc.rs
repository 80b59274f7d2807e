//! Algebras given by structure constants, their radicals, and their basic
//! quiver presentations.

use super::basic::{BasicAlgebra, Projective};
use super::bqa::{Bqa, Sparse};
use super::module::{Module, Shape};
use crate::error::{Error, Result};
use crate::exactlin::{Coordinates, Echelon, Field, Mat, Scalar, Vector};

/// `b_i b_j = Σ_k table[i][j][k] b_k`, stored sparsely.
///
/// When the basis is known to be adapted to the idempotents (every basis
/// vector lies in a single `e_t Γ e_s`), `peirce[t][s]` lists those basis
/// indices and most computations work block by block.
#[derive(Clone, Debug)]
pub struct ScAlgebra {
    field: Field,
    dim: usize,
    table: Vec<Vec<Sparse>>,
    unit: Vector,
    idempotents: Option<Vec<(String, Vector)>>,
    peirce: Option<Vec<Vec<Vec<usize>>>>,
}

/// A basic presentation together with the algebra elements it was built from.
#[derive(Clone, Debug)]
pub struct BasicPresentation {
    pub algebra: BasicAlgebra,
    /// Idempotent index behind each vertex.
    pub reps: Vec<usize>,
    /// Algebra element behind each arrow.
    pub generators: Vec<Vector>,
    /// `bases[v][w]`: algebra elements matching the word basis of `P(v)` at `w`.
    pub bases: Vec<Vec<Vec<Vector>>>,
}

/// A finite-dimensional left module, given by the action of every basis element.
#[derive(Clone, Debug, PartialEq)]
pub struct ScModule {
    pub dim: usize,
    pub actions: Vec<Mat>,
}

/// Radical data split along the idempotents.
struct RadBlocks {
    /// `rad[t][s]`: basis of `e_t J e_s`.
    rad: Vec<Vec<Vec<Vector>>>,
    /// `dims[t][s] = dim e_t Γ e_s`.
    dims: Vec<Vec<usize>>,
    /// Coordinates supporting `e_t Γ e_s`, when the basis is adapted.
    coords: Option<Vec<Vec<Vec<usize>>>>,
}

impl RadBlocks {
    fn support(&self, t: usize, s: usize) -> Option<&[usize]> {
        self.coords.as_ref().map(|c| c[t][s].as_slice())
    }
}

fn restrict(v: &[Scalar], support: Option<&[usize]>) -> Vector {
    match support {
        Some(idx) => idx.iter().map(|&i| v[i].clone()).collect(),
        None => v.to_vec(),
    }
}

/// Greedy independent subset of `vecs`, tested on the given support.
fn independent(len: usize, vecs: Vec<Vector>, support: Option<&[usize]>) -> Vec<Vector> {
    let mut ech = Echelon::new(support.map_or(len, <[usize]>::len));
    vecs.into_iter().filter(|v| ech.insert(&restrict(v, support))).collect()
}

impl ScAlgebra {
    pub fn new(
        field: Field,
        dim: usize,
        table: Vec<Vec<Sparse>>,
        unit: Vector,
        idempotents: Option<Vec<(String, Vector)>>,
    ) -> Result<ScAlgebra> {
        if table.len() != dim || table.iter().any(|r| r.len() != dim) || unit.len() != dim {
            return Err(Error::DimensionMismatch("structure constant table".into()));
        }
        if table.iter().flatten().flatten().any(|(k, _)| *k >= dim) {
            return Err(Error::DimensionMismatch("structure constant index out of range".into()));
        }
        let alg = ScAlgebra { field, dim, table, unit, idempotents, peirce: None };
        for i in 0..dim {
            let b = alg.basis_vector(i);
            if alg.mul(&alg.unit, &b) != b || alg.mul(&b, &alg.unit) != b {
                return Err(Error::CompositionInconsistent(format!("unit does not fix basis vector {i}")));
            }
        }
        if let Some(ids) = &alg.idempotents {
            let mut total = vec![field.zero(); dim];
            for (a, (_, e)) in ids.iter().enumerate() {
                if e.len() != dim {
                    return Err(Error::DimensionMismatch("idempotent length".into()));
                }
                for (b, (_, f)) in ids.iter().enumerate() {
                    let expect = if a == b { e.clone() } else { vec![field.zero(); dim] };
                    if alg.mul(e, f) != expect {
                        return Err(Error::CompositionInconsistent("idempotents are not orthogonal".into()));
                    }
                }
                total = add(&total, e);
            }
            if total != alg.unit {
                return Err(Error::CompositionInconsistent("idempotents do not sum to the unit".into()));
            }
        }
        Ok(alg)
    }

    /// Declares the basis adapted to the idempotents: `peirce[t][s]` are the
    /// basis indices spanning `e_t Γ e_s`. Checked on every basis vector.
    pub fn with_peirce(mut self, peirce: Vec<Vec<Vec<usize>>>) -> Result<ScAlgebra> {
        let ids = self.idempotents.as_ref().ok_or_else(|| Error::Other("Peirce blocks need idempotents".into()))?;
        let n = ids.len();
        if peirce.len() != n || peirce.iter().any(|r| r.len() != n) {
            return Err(Error::DimensionMismatch("Peirce block grid".into()));
        }
        let mut seen = vec![false; self.dim];
        for (t, row) in peirce.iter().enumerate() {
            for (s, idx) in row.iter().enumerate() {
                for &k in idx {
                    if k >= self.dim || seen[k] {
                        return Err(Error::DimensionMismatch("Peirce blocks must partition the basis".into()));
                    }
                    seen[k] = true;
                    let b = self.basis_vector(k);
                    if self.mul(&self.mul(&ids[t].1, &b), &ids[s].1) != b {
                        return Err(Error::CompositionInconsistent(format!(
                            "basis vector {k} is not in its Peirce block"
                        )));
                    }
                }
            }
        }
        if seen.iter().any(|x| !x) {
            return Err(Error::DimensionMismatch("Peirce blocks must partition the basis".into()));
        }
        self.peirce = Some(peirce);
        Ok(self)
    }

    /// The structure constants of a bound quiver algebra, vertex idempotents included.
    pub fn from_bqa(a: &Bqa) -> ScAlgebra {
        let n = a.dim();
        let f = a.field();
        let nv = a.quiver().vertex_count();
        let table = (0..n).map(|i| (0..n).map(|j| a.mul_basis(i, j)).collect()).collect();
        let idem: Vec<(String, Vector)> = (0..nv)
            .map(|v| {
                let mut e = vec![f.zero(); n];
                e[a.basis_index(&crate::quiver::Path::trivial(v)).expect("trivial path")] = f.one();
                (a.quiver().vertices()[v].clone(), e)
            })
            .collect();
        let mut peirce = vec![vec![Vec::new(); nv]; nv];
        for (k, p) in a.basis().iter().enumerate() {
            peirce[p.target][p.source].push(k);
        }
        let unit = idem.iter().fold(vec![f.zero(); n], |acc, (_, e)| add(&acc, e));
        ScAlgebra { field: f, dim: n, table, unit, idempotents: Some(idem), peirce: Some(peirce) }
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn unit(&self) -> &Vector {
        &self.unit
    }

    pub fn idempotents(&self) -> Option<&[(String, Vector)]> {
        self.idempotents.as_deref()
    }

    pub fn peirce(&self) -> Option<&[Vec<Vec<usize>>]> {
        self.peirce.as_deref()
    }

    pub fn structure_constants(&self, i: usize, j: usize) -> &Sparse {
        &self.table[i][j]
    }

    pub fn basis_vector(&self, i: usize) -> Vector {
        let mut v = vec![self.field.zero(); self.dim];
        v[i] = self.field.one();
        v
    }

    pub fn mul(&self, x: &[Scalar], y: &[Scalar]) -> Vector {
        let mut out = vec![self.field.zero(); self.dim];
        let ys: Vec<(usize, &Scalar)> = y.iter().enumerate().filter(|(_, s)| !s.is_zero()).collect();
        for (i, xi) in x.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for &(j, yj) in &ys {
                let entry = &self.table[i][j];
                if entry.is_empty() {
                    continue;
                }
                let c = xi.mul(yj);
                for (k, t) in entry {
                    out[*k] = out[*k].add(&c.mul(t));
                }
            }
        }
        out
    }

    /// Checks `(b_i b_j) b_k = b_i (b_j b_k)` on all basis triples.
    pub fn check_associative(&self) -> Result<()> {
        for i in 0..self.dim {
            let bi = self.basis_vector(i);
            for j in 0..self.dim {
                let bij = self.sparse_to_dense(&self.table[i][j]);
                for k in 0..self.dim {
                    let left = self.mul(&bij, &self.basis_vector(k));
                    let right = self.mul(&bi, &self.sparse_to_dense(&self.table[j][k]));
                    if left != right {
                        return Err(Error::CompositionInconsistent(format!("basis triple ({i}, {j}, {k})")));
                    }
                }
            }
        }
        Ok(())
    }

    fn sparse_to_dense(&self, s: &Sparse) -> Vector {
        let mut v = vec![self.field.zero(); self.dim];
        for (k, c) in s {
            v[*k] = v[*k].add(c);
        }
        v
    }

    fn traces(&self) -> Vec<Scalar> {
        let f = self.field;
        (0..self.dim)
            .map(|k| {
                (0..self.dim).fold(f.zero(), |acc, i| match self.table[k][i].iter().find(|(x, _)| *x == i) {
                    Some((_, c)) => acc.add(c),
                    None => acc,
                })
            })
            .collect()
    }

    fn pairing(&self, traces: &[Scalar], i: usize, j: usize) -> Scalar {
        self.table[i][j].iter().fold(self.field.zero(), |acc, (k, c)| acc.add(&c.mul(&traces[*k])))
    }

    /// Trace form `(b_i, b_j) = Tr(L_{b_i b_j})`.
    pub fn trace_form(&self) -> Mat {
        let traces = self.traces();
        let mut g = Mat::zeros(self.field, self.dim, self.dim);
        for i in 0..self.dim {
            for j in 0..self.dim {
                g.set(i, j, self.pairing(&traces, i, j));
            }
        }
        g
    }

    /// Jacobson radical as the kernel of the trace form (characteristic zero),
    /// checked to be nilpotent. Columns of the result span `J`.
    pub fn radical(&self) -> Result<Mat> {
        if self.idempotents.is_some() {
            let blocks = self.radical_blocks()?;
            let cols: Vec<Vector> = blocks.rad.into_iter().flatten().flatten().collect();
            return Ok(Mat::from_cols(self.field, self.dim, &cols));
        }
        if !self.field.is_char_zero() {
            return Err(Error::CharPNotSupported);
        }
        let j = self.trace_form().kernel();
        self.nilpotency_index(&j).ok_or_else(|| Error::Other("trace-form kernel is not nilpotent".into()))?;
        Ok(j)
    }

    /// Smallest `m` with `J^m = 0`, if at most `dim + 1`.
    pub fn nilpotency_index(&self, j: &Mat) -> Option<usize> {
        let gens = j.columns();
        let mut power = gens.clone();
        for m in 1..=self.dim + 1 {
            if power.is_empty() {
                return Some(m);
            }
            let mut cols = Vec::new();
            for x in &power {
                for y in &gens {
                    cols.push(self.mul(x, y));
                }
            }
            power = independent(self.dim, cols, None);
        }
        None
    }

    fn radical_blocks(&self) -> Result<RadBlocks> {
        if !self.field.is_char_zero() {
            return Err(Error::CharPNotSupported);
        }
        let idem = self
            .idempotents
            .as_ref()
            .ok_or_else(|| Error::Other("a complete set of idempotents is required".into()))?;
        let n = idem.len();
        let f = self.field;
        let blocks = match &self.peirce {
            Some(peirce) => {
                // The trace form pairs e_t Γ e_s only with e_s Γ e_t.
                let traces = self.traces();
                let mut rad = vec![vec![Vec::new(); n]; n];
                for t in 0..n {
                    for s in 0..n {
                        let (row, col) = (&peirce[t][s], &peirce[s][t]);
                        let mut g = Mat::zeros(f, col.len(), row.len());
                        for (a, &i) in row.iter().enumerate() {
                            for (b, &j) in col.iter().enumerate() {
                                g.set(b, a, self.pairing(&traces, i, j));
                            }
                        }
                        rad[t][s] = g
                            .kernel_basis()
                            .into_iter()
                            .map(|k| {
                                let mut v = vec![f.zero(); self.dim];
                                for (c, &i) in k.into_iter().zip(row) {
                                    v[i] = c;
                                }
                                v
                            })
                            .collect();
                    }
                }
                let dims = peirce.iter().map(|r| r.iter().map(Vec::len).collect()).collect();
                RadBlocks { rad, dims, coords: Some(peirce.clone()) }
            }
            None => {
                let j = self.trace_form().kernel().columns();
                let all: Vec<Vector> = (0..self.dim).map(|k| self.basis_vector(k)).collect();
                let mut rad = vec![vec![Vec::new(); n]; n];
                let mut dims = vec![vec![0; n]; n];
                for t in 0..n {
                    for s in 0..n {
                        let cut = |x: &Vector| self.mul(&self.mul(&idem[t].1, x), &idem[s].1);
                        rad[t][s] = independent(self.dim, j.iter().map(cut).collect(), None);
                        dims[t][s] = independent(self.dim, all.iter().map(cut).collect(), None).len();
                    }
                }
                RadBlocks { rad, dims, coords: None }
            }
        };
        let mut power = blocks.rad.clone();
        for _ in 0..=self.dim {
            if power.iter().flatten().all(Vec::is_empty) {
                return Ok(blocks);
            }
            power = self.block_product(&blocks, &power, &blocks.rad);
        }
        Err(Error::Other("trace-form kernel is not nilpotent".into()))
    }

    /// `dim e_i Γ e_i - dim e_i J e_i` for every idempotent.
    pub fn top_dims(&self) -> Result<Vec<usize>> {
        let b = self.radical_blocks()?;
        Ok((0..b.dims.len()).map(|i| b.dims[i][i] - b.rad[i][i].len()).collect())
    }

    /// Blockwise span of products `x y` with `x ∈ left[t][k]`, `y ∈ right[k][s]`.
    fn block_product(
        &self,
        blocks: &RadBlocks,
        left: &[Vec<Vec<Vector>>],
        right: &[Vec<Vec<Vector>>],
    ) -> Vec<Vec<Vec<Vector>>> {
        let n = left.len();
        let mut out = vec![vec![Vec::new(); n]; n];
        for t in 0..n {
            for s in 0..n {
                let mut prods = Vec::new();
                for k in 0..n {
                    for x in &left[t][k] {
                        for y in &right[k][s] {
                            prods.push(self.mul(x, y));
                        }
                    }
                }
                out[t][s] = independent(self.dim, prods, blocks.support(t, s));
            }
        }
        out
    }

    /// Presents the algebra as a basic algebra over its idempotents. Isomorphic
    /// idempotents are merged to one representative, which preserves the
    /// module category up to equivalence.
    pub fn to_basic(&self) -> Result<BasicAlgebra> {
        Ok(self.present()?.algebra)
    }

    pub fn present(&self) -> Result<BasicPresentation> {
        let idem = self
            .idempotents
            .as_ref()
            .ok_or_else(|| Error::Other("a complete set of idempotents is required".into()))?;
        let blocks = self.radical_blocks()?;
        let n = idem.len();
        for i in 0..n {
            let d = blocks.dims[i][i] - blocks.rad[i][i].len();
            if d != 1 {
                return Err(Error::NotSplit(format!("idempotent `{}` has a top of dimension {d}", idem[i].0)));
            }
        }
        let mut reps: Vec<usize> = Vec::new();
        for i in 0..n {
            if !reps.iter().any(|&k| blocks.dims[k][i] > blocks.rad[k][i].len()) {
                reps.push(i);
            }
        }
        let sq = self.block_product(&blocks, &blocks.rad, &blocks.rad);

        // Generators: e_t J e_s modulo e_t J^2 e_s.
        let mut arrows = Vec::new();
        let mut generators = Vec::new();
        for (ti, &t) in reps.iter().enumerate() {
            for (si, &s) in reps.iter().enumerate() {
                let support = blocks.support(t, s);
                let mut ech = Echelon::new(support.map_or(self.dim, <[usize]>::len));
                for x in &sq[t][s] {
                    ech.insert(&restrict(x, support));
                }
                for x in &blocks.rad[t][s] {
                    if ech.insert(&restrict(x, support)) {
                        arrows.push((si, ti));
                        generators.push(x.clone());
                    }
                }
            }
        }
        let shape = Shape { vertices: reps.len(), arrows };
        let mut projectives = Vec::new();
        let mut bases = Vec::new();
        for (vi, &v) in reps.iter().enumerate() {
            let expected: Vec<usize> = reps.iter().map(|&w| blocks.dims[w][v]).collect();
            let supports: Vec<Option<&[usize]>> = reps.iter().map(|&w| blocks.support(w, v)).collect();
            let (p, vecs) = self.projective(vi, &idem[v].1, &shape, &generators, &expected, &supports)?;
            projectives.push(p);
            bases.push(vecs);
        }
        let names = reps.iter().map(|&i| idem[i].0.clone()).collect();
        let arrow_names = (0..shape.arrows.len()).map(|g| format!("g{g}")).collect();
        let algebra = BasicAlgebra::new(self.field, shape, names, arrow_names, projectives, None, None);
        Ok(BasicPresentation { algebra, reps, generators, bases })
    }

    /// Basic presentation over all idempotents with prescribed radical
    /// generators `elems[g] ∈ e_t J e_s` for `shape.arrows[g] = (s, t)`. Also
    /// returns, per vertex `v` and target `w`, the algebra elements forming the
    /// word basis of `e_w Γ e_v`.
    pub fn to_basic_with_generators(
        &self,
        shape: Shape,
        elems: &[Vector],
        arrow_names: Vec<String>,
    ) -> Result<(BasicAlgebra, Vec<Vec<Vec<Vector>>>)> {
        let idem = self
            .idempotents
            .as_ref()
            .ok_or_else(|| Error::Other("a complete set of idempotents is required".into()))?;
        let n = idem.len();
        if shape.vertices != n || elems.len() != shape.arrows.len() {
            return Err(Error::DimensionMismatch("generators do not match the idempotents".into()));
        }
        let all: Vec<Vector> = (0..self.dim).map(|k| self.basis_vector(k)).collect();
        let mut projectives = Vec::new();
        let mut bases = Vec::new();
        for (v, (_, e)) in idem.iter().enumerate() {
            let (dims, supports): (Vec<usize>, Vec<Option<&[usize]>>) = match &self.peirce {
                Some(p) => (0..n).map(|w| (p[w][v].len(), Some(p[w][v].as_slice()))).unzip(),
                None => (0..n)
                    .map(|w| {
                        let cut = all.iter().map(|x| self.mul(&self.mul(&idem[w].1, x), e)).collect();
                        (independent(self.dim, cut, None).len(), None)
                    })
                    .unzip(),
            };
            let (p, vecs) = self.projective(v, e, &shape, elems, &dims, &supports)?;
            projectives.push(p);
            bases.push(vecs);
        }
        let names = idem.iter().map(|(n, _)| n.clone()).collect();
        Ok((BasicAlgebra::new(self.field, shape, names, arrow_names, projectives, None, None), bases))
    }

    /// `Γ e_v` restricted to the chosen vertices, spanned by generator words.
    fn projective(
        &self,
        vi: usize,
        e: &[Scalar],
        shape: &Shape,
        gens: &[Vector],
        expected: &[usize],
        supports: &[Option<&[usize]>],
    ) -> Result<(Projective, Vec<Vec<Vector>>)> {
        let f = self.field;
        let r = shape.vertices;
        let mut ech: Vec<Echelon> =
            (0..r).map(|w| Echelon::new(supports[w].map_or(self.dim, <[usize]>::len))).collect();
        let mut vecs: Vec<Vec<Vector>> = vec![Vec::new(); r];
        let mut words: Vec<Vec<Vec<usize>>> = vec![Vec::new(); r];
        ech[vi].insert(&restrict(e, supports[vi]));
        vecs[vi].push(e.to_vec());
        words[vi].push(Vec::new());
        let mut queue = std::collections::VecDeque::from([(vi, 0usize)]);
        while let Some((w, k)) = queue.pop_front() {
            for (g, &(s, t)) in shape.arrows.iter().enumerate() {
                if s != w || vecs[t].len() >= expected[t] {
                    continue;
                }
                let y = self.mul(&gens[g], &vecs[w][k]);
                if ech[t].insert(&restrict(&y, supports[t])) {
                    let mut word = words[w][k].clone();
                    word.push(g);
                    vecs[t].push(y);
                    words[t].push(word);
                    queue.push_back((t, vecs[t].len() - 1));
                }
            }
        }
        for (w, vs) in vecs.iter().enumerate() {
            if vs.len() != expected[w] {
                return Err(Error::Other(format!(
                    "radical generators span {} of {} dimensions in a Peirce block",
                    vs.len(),
                    expected[w]
                )));
            }
        }
        let coords: Vec<Coordinates> = vecs
            .iter()
            .enumerate()
            .map(|(w, vs)| {
                let rs: Vec<Vector> = vs.iter().map(|x| restrict(x, supports[w])).collect();
                Coordinates::new(&Mat::from_cols(f, supports[w].map_or(self.dim, <[usize]>::len), &rs))
            })
            .collect();
        let dims: Vec<usize> = vecs.iter().map(Vec::len).collect();
        let maps = shape
            .arrows
            .iter()
            .enumerate()
            .map(|(g, &(s, t))| {
                let cols: Vec<Vector> = vecs[s]
                    .iter()
                    .map(|x| coords[t].coords_unchecked(&restrict(&self.mul(&gens[g], x), supports[t])))
                    .collect();
                Mat::from_cols(f, dims[t], &cols)
            })
            .collect();
        Ok((Projective { module: Module { field: f, dims, maps }, words }, vecs))
    }
}

impl ScModule {
    /// The action of an arbitrary algebra element.
    pub fn action(&self, alg: &ScAlgebra, x: &[Scalar]) -> Mat {
        let mut m = Mat::zeros(alg.field(), self.dim, self.dim);
        for (k, c) in x.iter().enumerate() {
            if !c.is_zero() {
                m.axpy(c, &self.actions[k]);
            }
        }
        m
    }

    /// Checks that the unit acts as the identity and the action is multiplicative.
    pub fn validate(&self, alg: &ScAlgebra) -> Result<()> {
        let f = alg.field();
        if self.actions.len() != alg.dim() || self.actions.iter().any(|a| a.shape() != (self.dim, self.dim)) {
            return Err(Error::InvalidModule("action matrices do not match the algebra".into()));
        }
        if self.action(alg, alg.unit()) != Mat::identity(f, self.dim) {
            return Err(Error::InvalidModule("the unit does not act as the identity".into()));
        }
        for i in 0..alg.dim() {
            for j in 0..alg.dim() {
                let lhs = self.actions[i].mul(&self.actions[j]);
                let rhs = self.action(alg, &alg.sparse_to_dense(&alg.table[i][j]));
                if lhs != rhs {
                    return Err(Error::InvalidModule(format!("action fails on basis pair ({i}, {j})")));
                }
            }
        }
        Ok(())
    }

    /// The corresponding representation of the basic presentation: the space
    /// at a vertex is `e V` for its idempotent, and arrows act by their elements.
    pub fn to_basic_module(&self, alg: &ScAlgebra, pres: &BasicPresentation) -> Result<Module> {
        let idem = alg.idempotents().ok_or_else(|| Error::Other("a complete set of idempotents is required".into()))?;
        let f = alg.field();
        let spaces: Vec<Mat> = pres.reps.iter().map(|&i| self.action(alg, &idem[i].1).column_basis()).collect();
        let coords: Vec<Coordinates> = spaces.iter().map(Coordinates::new).collect();
        let dims = spaces.iter().map(Mat::cols).collect();
        let maps = pres
            .algebra
            .shape
            .arrows
            .iter()
            .zip(&pres.generators)
            .map(|(&(s, t), g)| coords[t].coords_mat_unchecked(&self.action(alg, g).mul(&spaces[s])))
            .collect();
        let module = Module { field: f, dims, maps };
        pres.algebra.validate_module(&module)?;
        Ok(module)
    }
}

fn add(x: &[Scalar], y: &[Scalar]) -> Vector {
    x.iter().zip(y).map(|(a, b)| a.add(b)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::Dim;
    use crate::quiver::standard;

    fn q() -> Field {
        Field::Rationals
    }

    #[test]
    fn radical_of_the_field_is_zero() {
        let one = q().one();
        let k = ScAlgebra::new(q(), 1, vec![vec![vec![(0, one.clone())]]], vec![one], None).unwrap();
        assert_eq!(k.radical().unwrap().cols(), 0);
    }

    #[test]
    fn radical_of_dual_numbers() {
        let one = q().one();
        // basis 1, x with x^2 = 0
        let table = vec![vec![vec![(0, one.clone())], vec![(1, one.clone())]], vec![vec![(1, one.clone())], vec![]]];
        let alg = ScAlgebra::new(q(), 2, table, vec![one, q().zero()], None).unwrap();
        alg.check_associative().unwrap();
        let j = alg.radical().unwrap();
        assert_eq!(j.cols(), 1);
        assert!(j.get(0, 0).is_zero());
        assert_eq!(alg.nilpotency_index(&j), Some(2));
    }

    #[test]
    fn radical_of_path_algebra_a2() {
        let a2 = Bqa::path_algebra(standard::a2(), q()).unwrap();
        let sc = ScAlgebra::from_bqa(&a2);
        sc.check_associative().unwrap();
        let j = sc.radical().unwrap();
        assert_eq!(j.cols(), 1);
        let arrow = a2.radical_basis()[0];
        assert_eq!(j.col(0), sc.basis_vector(arrow).iter().map(|x| x.mul(j.get(arrow, 0))).collect::<Vec<_>>());
    }

    #[test]
    fn prime_field_radical_is_refused() {
        let f = Field::prime(3).unwrap();
        let a2 = Bqa::path_algebra(standard::a2(), f).unwrap();
        assert_eq!(ScAlgebra::from_bqa(&a2).radical(), Err(Error::CharPNotSupported));
    }

    #[test]
    fn basic_presentation_recovers_homological_data() {
        let one = q().one();
        let rel = vec![(one, vec![0, 1])];
        let a3 = Bqa::new(standard::linear_an(3), q(), vec![rel], None).unwrap();
        let basic = ScAlgebra::from_bqa(&a3).to_basic().unwrap();
        assert_eq!(basic.dim(), a3.dim());
        assert_eq!(basic.shape.arrows.len(), 2);
        assert_eq!(basic.gldim(20), Dim::Finite(2));
        for inward in [0u8, 5, 7] {
            let d4 = Bqa::path_algebra(standard::d4(inward), q()).unwrap();
            let b = ScAlgebra::from_bqa(&d4).to_basic().unwrap();
            assert_eq!(b.gldim(20), Dim::Finite(1));
            assert_eq!(b.dim(), d4.dim());
        }
        let kron = Bqa::path_algebra(standard::kronecker(), q()).unwrap();
        let b = ScAlgebra::from_bqa(&kron).to_basic().unwrap();
        assert_eq!(b.shape.arrows.len(), 2);
    }

    #[test]
    fn matrix_ring_is_not_basic_but_is_reduced() {
        // M_2(Q) with matrix units E_ij, idempotents E_11 and E_22
        let one = q().one();
        let idx = |i: usize, j: usize| 2 * i + j;
        let mut table = vec![vec![Vec::new(); 4]; 4];
        for i in 0..2 {
            for j in 0..2 {
                for k in 0..2 {
                    table[idx(i, j)][idx(j, k)] = vec![(idx(i, k), one.clone())];
                }
            }
        }
        let e = |i: usize| {
            let mut v = vec![q().zero(); 4];
            v[idx(i, i)] = one.clone();
            v
        };
        let unit = add(&e(0), &e(1));
        let alg = ScAlgebra::new(q(), 4, table, unit, Some(vec![("1".into(), e(0)), ("2".into(), e(1))])).unwrap();
        alg.check_associative().unwrap();
        assert_eq!(alg.radical().unwrap().cols(), 0);
        let b = alg.to_basic().unwrap();
        assert_eq!(b.vertex_count(), 1);
        assert_eq!(b.gldim(5), Dim::Finite(0));
    }

    #[test]
    fn regular_module_becomes_the_sum_of_projectives() {
        let one = q().one();
        let a3 = Bqa::new(standard::linear_an(3), q(), vec![vec![(one, vec![0, 1])]], None).unwrap();
        let sc = ScAlgebra::from_bqa(&a3);
        let n = sc.dim();
        let actions = (0..n)
            .map(|i| {
                let cols: Vec<Vector> = (0..n).map(|j| sc.mul(&sc.basis_vector(i), &sc.basis_vector(j))).collect();
                Mat::from_cols(q(), n, &cols)
            })
            .collect();
        let regular = ScModule { dim: n, actions };
        regular.validate(&sc).unwrap();
        let pres = sc.present().unwrap();
        let m = regular.to_basic_module(&sc, &pres).unwrap();
        assert_eq!(m.dims.iter().sum::<usize>(), n);
        assert!(pres.algebra.is_projective(&m));
    }

    #[test]
    fn peirce_metadata_is_validated() {
        let a2 = Bqa::path_algebra(standard::a2(), q()).unwrap();
        let sc = ScAlgebra::from_bqa(&a2);
        let good = sc.peirce().unwrap().to_vec();
        let mut bad = good.clone();
        let moved = std::mem::take(&mut bad[1][1]);
        bad[0][0].extend(moved);
        assert!(sc.clone().with_peirce(bad).is_err());
        assert!(sc.with_peirce(good).is_ok());
    }

    #[test]
    fn non_split_endomorphisms_are_rejected() {
        // Q(i) as a two-dimensional algebra with a single idempotent
        let one = q().one();
        let m1 = one.neg();
        let table =
            vec![vec![vec![(0, one.clone())], vec![(1, one.clone())]], vec![vec![(1, one.clone())], vec![(0, m1)]]];
        let unit = vec![one, q().zero()];
        let alg = ScAlgebra::new(q(), 2, table, unit.clone(), Some(vec![("1".into(), unit)])).unwrap();
        assert!(matches!(alg.to_basic(), Err(Error::NotSplit(_))));
    }
}
