//! Turns a [`Document`] into validated algebraic objects, resolving every
//! reference by name.

use std::collections::BTreeMap;

use quivhom_core::algebra::Bqa;
use quivhom_core::derived::Complex;
use quivhom_core::quiver::RawQuiver;
use quivhom_core::repcat::{Rep, RepCategory};
use quivhom_core::trimat::{BimoduleSpec, TriRing, Triple};
use quivhom_core::{BasicAlgebra, Field, Mat, ModMap, Module, Quiver};

use super::syntax::*;
use super::FormatError;

/// What the objects of a complex are.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Over {
    Modules { algebra: String },
    Representations { quiver: String, algebra: String },
    Triples { trimat: String },
}

#[derive(Clone, Debug)]
pub struct RepEntry {
    pub quiver: String,
    pub algebra: String,
    pub rep: Rep,
}

#[derive(Clone, Debug)]
pub struct ComplexEntry {
    pub over: Over,
    pub complex: Complex,
}

/// Every named object of a document, built and validated.
#[derive(Debug)]
pub struct Symbols {
    pub field: Field,
    pub quivers: BTreeMap<String, Quiver>,
    pub algebras: BTreeMap<String, Bqa>,
    /// Module name to `(algebra name, module)`.
    pub modules: BTreeMap<String, (String, Module)>,
    pub categories: BTreeMap<(String, String), RepCategory>,
    pub representations: BTreeMap<String, RepEntry>,
    pub trimats: BTreeMap<String, TriRing>,
    /// Triple name to `(trimat name, triple)`.
    pub triples: BTreeMap<String, (String, Triple)>,
    pub complexes: BTreeMap<String, ComplexEntry>,
}

/// The key used for a section header without a name.
pub fn key(name: &Option<String>) -> String {
    name.clone().unwrap_or_default()
}

pub fn ground_algebra(field: Field) -> Bqa {
    let raw = RawQuiver { vertices: vec![GROUND.to_string()], arrows: Vec::new() };
    let q = Quiver::validate(&raw).expect("one vertex");
    Bqa::path_algebra(q, field).expect("the ground field is an algebra")
}

fn unresolved(line: usize, name: &str, what: &str) -> FormatError {
    FormatError::UnresolvedReference { line, name: name.to_string(), what: what.to_string() }
}

fn invalid(line: usize, e: quivhom_core::Error) -> FormatError {
    FormatError::Invalid { line, source: e }
}

/// Resolves an optional reference: explicit names must exist; an omitted one
/// is accepted when the table holds exactly one entry.
fn pick<'m, T>(
    table: &'m BTreeMap<String, T>,
    name: &Option<String>,
    what: &str,
    line: usize,
) -> Result<(String, &'m T), FormatError> {
    match name {
        Some(n) => table.get(n).map(|t| (n.clone(), t)).ok_or_else(|| unresolved(line, n, what)),
        None if table.len() == 1 => {
            let (n, t) = table.iter().next().expect("one entry");
            Ok((n.clone(), t))
        }
        None => {
            Err(FormatError::Parse { line, column: 1, msg: format!("no unique {what} to use; name one explicitly") })
        }
    }
}

fn scalar_matrix(field: Field, raw: &RawMatrix, rows: usize, cols: usize, line: usize) -> Result<Mat, FormatError> {
    let shape_err = || FormatError::Parse { line, column: 1, msg: format!("expected a {rows}x{cols} matrix") };
    if raw.is_empty() && rows * cols == 0 {
        return Ok(Mat::zeros(field, rows, cols));
    }
    if raw.len() != rows || raw.iter().any(|r| r.len() != cols) {
        return Err(shape_err());
    }
    let mut data = Vec::with_capacity(rows * cols);
    for x in raw.iter().flatten() {
        data.push(field.from_rat(x).map_err(|e| invalid(line, e))?);
    }
    Ok(Mat::from_vec(field, rows, cols, data))
}

fn block_map(field: Field, raw: &Blocks, src: &Module, tgt: &Module, line: usize) -> Result<ModMap, FormatError> {
    let n = src.dims.len();
    if raw.len() != n {
        return Err(FormatError::Parse { line, column: 1, msg: format!("expected {n} blocks separated by `|`") });
    }
    let blocks =
        (0..n).map(|v| scalar_matrix(field, &raw[v], tgt.dims[v], src.dims[v], line)).collect::<Result<Vec<_>, _>>()?;
    Ok(ModMap { blocks })
}

fn vertex(q: &Quiver, name: &str, line: usize) -> Result<usize, FormatError> {
    q.vertex_index(name).map_err(|_| unresolved(line, name, "vertex"))
}

fn arrow(q: &Quiver, name: &str, line: usize) -> Result<usize, FormatError> {
    q.arrow_index(name).map_err(|_| unresolved(line, name, "arrow"))
}

fn build_quiver(raw: &RawQuiver, cycles: bool, line: usize) -> Result<Quiver, FormatError> {
    for (_, s, t) in &raw.arrows {
        for v in [s, t] {
            if !raw.vertices.contains(v) {
                return Err(unresolved(line, v, "vertex"));
            }
        }
    }
    let q = if cycles { Quiver::with_cycles(raw) } else { Quiver::validate(raw) };
    q.map_err(|e| invalid(line, e))
}

fn module_from_dims(alg: &Bqa, sec: &ModuleSection, line: usize) -> Result<Module, FormatError> {
    let f = alg.field();
    let q = alg.quiver();
    let mut dims = vec![0; q.vertex_count()];
    for (v, d) in &sec.dims {
        dims[vertex(q, v, line)?] = *d;
    }
    let mut maps: Vec<Mat> = q.arrows().iter().map(|a| Mat::zeros(f, dims[a.target], dims[a.source])).collect();
    for (a, raw) in &sec.maps {
        let i = arrow(q, a, line)?;
        let ar = q.arrow(i);
        maps[i] = scalar_matrix(f, raw, dims[ar.target], dims[ar.source], line)?;
    }
    alg.module_from_matrices(dims, maps).map_err(|e| invalid(line, e))
}

/// Action matrices of an algebra's generators: vertex idempotents, then arrows.
/// A one-vertex algebra acts by the identity unless told otherwise.
fn generator_actions(
    alg: &Bqa,
    given: &[(String, RawMatrix)],
    dim: usize,
    line: usize,
) -> Result<Vec<Mat>, FormatError> {
    let f = alg.field();
    let q = alg.quiver();
    let nv = q.vertex_count();
    let mut out: Vec<Mat> = (0..nv + q.arrows().len()).map(|_| Mat::zeros(f, dim, dim)).collect();
    if nv == 1 {
        out[0] = Mat::identity(f, dim);
    }
    for (g, raw) in given {
        let idx = match (q.vertex_index(g), q.arrow_index(g)) {
            (Ok(_), Ok(_)) => {
                return Err(FormatError::Parse {
                    line,
                    column: 1,
                    msg: format!("`{g}` names both a vertex and an arrow"),
                })
            }
            (Ok(v), Err(_)) => v,
            (Err(_), Ok(a)) => nv + a,
            (Err(_), Err(_)) => return Err(unresolved(line, g, "vertex or arrow")),
        };
        out[idx] = scalar_matrix(f, raw, dim, dim, line)?;
    }
    Ok(out)
}

impl Symbols {
    pub fn build(doc: &Document, field: Field) -> Result<Symbols, FormatError> {
        let mut sym = Symbols {
            field,
            quivers: BTreeMap::new(),
            algebras: BTreeMap::new(),
            modules: BTreeMap::new(),
            categories: BTreeMap::new(),
            representations: BTreeMap::new(),
            trimats: BTreeMap::new(),
            triples: BTreeMap::new(),
            complexes: BTreeMap::new(),
        };
        for sec in &doc.sections {
            if let SectionBody::Quiver(raw) = &sec.body {
                sym.quivers.insert(key(&sec.name), build_quiver(raw, false, sec.line)?);
            }
        }
        for sec in &doc.sections {
            if let SectionBody::Algebra(a) = &sec.body {
                let alg = sym.algebra_section(a, sec.line)?;
                sym.algebras.insert(key(&sec.name), alg);
            }
        }
        for sec in &doc.sections {
            if let SectionBody::Module(m) = &sec.body {
                let (an, alg) = sym.algebra_ref(&m.algebra, sec.line)?;
                let module = module_from_dims(&alg, m, sec.line)?;
                sym.modules.insert(key(&sec.name), (an, module));
            }
        }
        for sec in &doc.sections {
            if let SectionBody::Representation(r) = &sec.body {
                let entry = sym.representation_section(r, sec.line)?;
                sym.representations.insert(key(&sec.name), entry);
            }
        }
        for sec in &doc.sections {
            if let SectionBody::Trimat(t) = &sec.body {
                let (_, r) = sym.algebra_ref(&t.r, sec.line)?;
                let (_, s) = sym.algebra_ref(&t.s, sec.line)?;
                let left = generator_actions(&s, &t.left, t.dim, sec.line)?;
                let right = generator_actions(&r, &t.right, t.dim, sec.line)?;
                let tri =
                    TriRing::new(r, s, BimoduleSpec { dim: t.dim, left, right }).map_err(|e| invalid(sec.line, e))?;
                sym.trimats.insert(key(&sec.name), tri);
            }
        }
        for sec in &doc.sections {
            if let SectionBody::Triple(t) = &sec.body {
                let entry = sym.triple_section(t, sec.line)?;
                sym.triples.insert(key(&sec.name), entry);
            }
        }
        for sec in &doc.sections {
            if let SectionBody::Complex(c) = &sec.body {
                let entry = sym.complex_section(c, sec.line)?;
                sym.complexes.insert(key(&sec.name), entry);
            }
        }
        Ok(sym)
    }

    /// An algebra by name; `k` is the ground field. An omitted name picks the
    /// only algebra of the document, or the ground field when there is none.
    pub fn algebra_ref(&self, name: &Option<String>, line: usize) -> Result<(String, Bqa), FormatError> {
        match name.as_deref() {
            Some(GROUND) => Ok((GROUND.to_string(), ground_algebra(self.field))),
            None if self.algebras.is_empty() => Ok((GROUND.to_string(), ground_algebra(self.field))),
            _ => pick(&self.algebras, name, "algebra", line).map(|(n, a)| (n, a.clone())),
        }
    }

    fn algebra_section(&self, a: &AlgebraSection, line: usize) -> Result<Bqa, FormatError> {
        let q = match (&a.quiver, &a.inline) {
            (Some(_), Some(_)) => {
                return Err(FormatError::Parse {
                    line,
                    column: 1,
                    msg: "give either `quiver` or inline vertices, not both".into(),
                })
            }
            (_, Some(raw)) => build_quiver(raw, true, line)?,
            (name, None) => pick(&self.quivers, name, "quiver", line)?.1.clone(),
        };
        let mut rels = Vec::new();
        for r in &a.relations {
            let mut terms = Vec::new();
            for (c, word) in r {
                let c = self.field.from_rat(c).map_err(|e| invalid(line, e))?;
                let w = word.iter().map(|x| arrow(&q, x, line)).collect::<Result<Vec<_>, _>>()?;
                terms.push((c, w));
            }
            rels.push(terms);
        }
        Bqa::new(q, self.field, rels, a.nilpotency).map_err(|e| invalid(line, e))
    }

    /// The category of representations of `quiver` over `algebra`, created on first use.
    pub fn category(&mut self, quiver: &str, algebra: &str, line: usize) -> Result<&RepCategory, FormatError> {
        let k = (quiver.to_string(), algebra.to_string());
        if !self.categories.contains_key(&k) {
            let q = self.quivers.get(quiver).ok_or_else(|| unresolved(line, quiver, "quiver"))?.clone();
            let (_, base) = self.algebra_ref(&Some(algebra.to_string()), line)?;
            let rc = RepCategory::new(q, base).map_err(|e| invalid(line, e))?;
            self.categories.insert(k.clone(), rc);
        }
        Ok(&self.categories[&k])
    }

    fn representation_section(&mut self, r: &RepresentationSection, line: usize) -> Result<RepEntry, FormatError> {
        let (qn, q) = pick(&self.quivers, &r.quiver, "quiver", line)?;
        let q = q.clone();
        let an = match &r.algebra {
            Some(a) => a.clone(),
            None => GROUND.to_string(),
        };
        let (_, lam) = self.algebra_ref(&Some(an.clone()), line)?;
        let f = self.field;
        let lb = lam.basic();
        let mut modules: Vec<Module> = vec![lb.zero_module(); q.vertex_count()];
        let mut seen = vec![false; q.vertex_count()];
        for (v, m) in &r.at {
            let i = vertex(&q, v, line)?;
            let (man, module) = self.modules.get(m).ok_or_else(|| unresolved(line, m, "module"))?;
            if *man != an {
                return Err(invalid(line, quivhom_core::Error::AlgebraMismatch));
            }
            modules[i] = module.clone();
            seen[i] = true;
        }
        for (v, d) in &r.dims {
            let i = vertex(&q, v, line)?;
            if lam.quiver().vertex_count() != 1 || !lam.quiver().arrows().is_empty() {
                return Err(FormatError::Parse {
                    line,
                    column: 1,
                    msg: "`dim` needs the ground field as base; use `at`".into(),
                });
            }
            modules[i] = Module { field: f, dims: vec![*d], maps: Vec::new() };
            seen[i] = true;
        }
        if seen.iter().filter(|&&s| s).count() != r.at.len() + r.dims.len() {
            return Err(FormatError::Parse { line, column: 1, msg: "a vertex is given twice".into() });
        }
        let mut arrows: Vec<ModMap> =
            q.arrows().iter().map(|a| ModMap::zero(f, &modules[a.source], &modules[a.target])).collect();
        for (a, raw) in &r.maps {
            let i = arrow(&q, a, line)?;
            let ar = q.arrow(i);
            arrows[i] = block_map(f, raw, &modules[ar.source], &modules[ar.target], line)?;
        }
        let rc = self.category(&qn, &an, line)?;
        let rep = rc.from_parts(&modules, &arrows).map_err(|e| invalid(line, e))?;
        Ok(RepEntry { quiver: qn, algebra: an, rep })
    }

    fn triple_section(&self, t: &TripleSection, line: usize) -> Result<(String, Triple), FormatError> {
        let (tn, tri) = pick(&self.trimats, &t.trimat, "trimat", line)?;
        let side = |name: &Option<String>, alg: &Bqa| -> Result<Module, FormatError> {
            match name {
                None => Ok(alg.basic().zero_module()),
                Some(n) => {
                    let (_, m) = self.modules.get(n).ok_or_else(|| unresolved(line, n, "module"))?;
                    alg.basic().validate_module(m).map_err(|e| invalid(line, e))?;
                    Ok(m.clone())
                }
            }
        };
        let x = side(&t.x, tri.r())?;
        let y = side(&t.y, tri.s())?;
        let tensor = tri.tensor_basis(&x).map_err(|e| invalid(line, e))?;
        let phi = match &t.phi {
            Some(raw) => block_map(self.field, raw, &tensor.module, &y, line)?,
            None => ModMap::zero(self.field, &tensor.module, &y),
        };
        let triple = Triple { x, y, phi };
        tri.validate_triple(&triple).map_err(|e| invalid(line, e))?;
        Ok((tn, triple))
    }

    fn object_over(&self, name: &str, line: usize) -> Result<(Over, Module), FormatError> {
        if let Some((an, m)) = self.modules.get(name) {
            return Ok((Over::Modules { algebra: an.clone() }, m.clone()));
        }
        if let Some(r) = self.representations.get(name) {
            let over = Over::Representations { quiver: r.quiver.clone(), algebra: r.algebra.clone() };
            return Ok((over, r.rep.clone()));
        }
        if let Some((tn, t)) = self.triples.get(name) {
            let m = self.trimats[tn].to_module(t).map_err(|e| invalid(line, e))?;
            return Ok((Over::Triples { trimat: tn.clone() }, m));
        }
        Err(unresolved(line, name, "module, representation or triple"))
    }

    /// The basic algebra whose modules make up complexes over `over`.
    pub fn underlying(&self, over: &Over) -> BasicAlgebra {
        match over {
            Over::Modules { algebra } => {
                self.algebra_ref(&Some(algebra.clone()), 0).expect("resolved").1.basic().clone()
            }
            Over::Representations { quiver, algebra } => {
                self.categories[&(quiver.clone(), algebra.clone())].algebra().clone()
            }
            Over::Triples { trimat } => self.trimats[trimat].gamma().clone(),
        }
    }

    fn complex_section(&mut self, c: &ComplexSection, line: usize) -> Result<ComplexEntry, FormatError> {
        let declared = if let Some(t) = &c.trimat {
            pick(&self.trimats, &Some(t.clone()), "trimat", line)?;
            Some(Over::Triples { trimat: t.clone() })
        } else if c.quiver.is_some() {
            let (qn, _) = pick(&self.quivers, &c.quiver, "quiver", line)?;
            let an = c.algebra.clone().unwrap_or_else(|| GROUND.to_string());
            self.category(&qn, &an, line)?;
            Some(Over::Representations { quiver: qn, algebra: an })
        } else if let Some(a) = &c.algebra {
            let (an, _) = self.algebra_ref(&Some(a.clone()), line)?;
            Some(Over::Modules { algebra: an })
        } else {
            None
        };
        let mut objects = BTreeMap::new();
        let mut over = declared;
        for (i, name) in &c.objects {
            let (o, m) = self.object_over(name, line)?;
            match &over {
                Some(prev) if *prev != o => {
                    return Err(FormatError::Parse {
                        line,
                        column: 1,
                        msg: format!("object `{name}` lives over a different algebra"),
                    })
                }
                _ => over = Some(o),
            }
            objects.insert(*i, m);
        }
        let over = over.ok_or_else(|| FormatError::Parse {
            line,
            column: 1,
            msg: "an empty complex needs `algebra`, `quiver` or `trimat`".into(),
        })?;
        let alg = self.underlying(&over);
        let degrees: Vec<i64> = objects.keys().copied().chain(c.diffs.iter().flat_map(|(i, _)| [*i, *i + 1])).collect();
        let complex = match (degrees.iter().min(), degrees.iter().max()) {
            (Some(&lo), Some(&hi)) => {
                let objs: Vec<Module> =
                    (lo..=hi).map(|i| objects.get(&i).cloned().unwrap_or_else(|| alg.zero_module())).collect();
                let mut diffs: Vec<ModMap> = (lo..hi)
                    .map(|i| ModMap::zero(self.field, &objs[(i - lo) as usize], &objs[(i + 1 - lo) as usize]))
                    .collect();
                for (i, raw) in &c.diffs {
                    let k = (i - lo) as usize;
                    diffs[k] = block_map(self.field, raw, &objs[k], &objs[k + 1], line)?;
                }
                Complex::new(lo, objs, diffs).map_err(|e| invalid(line, e))?
            }
            _ => Complex::zero(),
        };
        complex.validate(&alg).map_err(|e| invalid(line, e))?;
        Ok(ComplexEntry { over, complex })
    }
}
