use super::witness::{expand, leaf_object};
use super::{split_cols, split_rows, witness_check, Body, ChainMap, Complex, ComplexSes, Link, Witness};
use crate::algebra::{BasicAlgebra, ModMap, Module};
use crate::error::{Error, Result};
use crate::repcat::RepCategory;
use crate::trimat::TriRing;

/// Additive functors along which witnesses are transported.
#[derive(Clone, Copy, Debug)]
pub enum Functor<'a> {
    /// `k^v_λ : mod Λ -> rep(Q, Λ)`.
    LeftAdjoint { cat: &'a RepCategory, vertex: usize },
    /// `k^v : rep(Q, Λ) -> mod Λ`.
    Evaluate { cat: &'a RepCategory, vertex: usize },
    /// `k¹_λ : mod R -> mod Γ`, `X ↦ (X, M ⊗ X)_1`.
    Column(&'a TriRing),
    /// `k²_λ : mod S -> mod Γ`, `Y ↦ (0, Y)_0`.
    Row(&'a TriRing),
    /// `M ⊗_R - : mod R -> mod S`, exact only when the data allow it.
    Tensor(&'a TriRing),
}

impl<'a> Functor<'a> {
    pub fn source(&self) -> &'a BasicAlgebra {
        match self {
            Functor::LeftAdjoint { cat, .. } => cat.base_algebra(),
            Functor::Evaluate { cat, .. } => cat.algebra(),
            Functor::Column(t) | Functor::Tensor(t) => t.r().basic(),
            Functor::Row(t) => t.s().basic(),
        }
    }

    pub fn target(&self) -> &'a BasicAlgebra {
        match self {
            Functor::LeftAdjoint { cat, .. } => cat.algebra(),
            Functor::Evaluate { cat, .. } => cat.base_algebra(),
            Functor::Column(t) | Functor::Row(t) => t.gamma(),
            Functor::Tensor(t) => t.s().basic(),
        }
    }

    pub fn obj(&self, m: &Module) -> Result<Module> {
        match self {
            Functor::LeftAdjoint { cat, vertex } => cat.left_adjoint(*vertex, m),
            Functor::Evaluate { cat, vertex } => cat.evaluate(m, *vertex),
            Functor::Column(t) => t.to_module(&t.column(m)?),
            Functor::Row(t) => t.to_module(&t.row(m)),
            Functor::Tensor(t) => Ok(t.tensor_basis(m)?.module),
        }
    }

    pub fn map(&self, f: &ModMap, source: &Module, target: &Module) -> Result<ModMap> {
        match self {
            Functor::LeftAdjoint { cat, vertex } => Ok(cat.left_adjoint_map(*vertex, f)),
            Functor::Evaluate { cat, vertex } => cat.evaluate_map(f, *vertex),
            Functor::Column(t) => t.column_map(f, source, target),
            Functor::Row(t) => Ok(t.row_map(f)),
            Functor::Tensor(t) => Ok(t.tensor_map(f, &t.tensor_basis(source)?, &t.tensor_basis(target)?)),
        }
    }

    pub fn name(&self) -> String {
        match self {
            Functor::LeftAdjoint { vertex, .. } => format!("k^{vertex}_lambda"),
            Functor::Evaluate { vertex, .. } => format!("k^{vertex}"),
            Functor::Column(_) => "k1_lambda".into(),
            Functor::Row(_) => "k2_lambda".into(),
            Functor::Tensor(_) => "M⊗_R".into(),
        }
    }

    fn broken(&self, msg: String) -> Error {
        match self {
            Functor::Tensor(_) => Error::TensorNotExactOnCertificates(msg),
            _ => Error::CertificateBrokenByFunctor(format!("{}: {msg}", self.name())),
        }
    }

    pub fn complex(&self, x: &Complex) -> Result<Complex> {
        let alg = self.source();
        let Some((lo, hi)) = x.range() else {
            return Ok(Complex::zero());
        };
        let objects = x.objects.iter().map(|m| self.obj(m)).collect::<Result<Vec<_>>>()?;
        let diffs = (lo..hi)
            .map(|i| self.map(&x.diff(i, alg), &x.object(i, alg), &x.object(i + 1, alg)))
            .collect::<Result<Vec<_>>>()?;
        Complex::new(lo, objects, diffs)
    }

    /// `F(m) : F(X) -> F(Y)` on the union of the ranges.
    pub fn chain_map(&self, m: &ChainMap, x: &Complex, y: &Complex) -> Result<ChainMap> {
        let alg = self.source();
        let n = m.normalized(x, y, alg);
        let maps = n
            .maps
            .iter()
            .enumerate()
            .map(|(k, f)| {
                let i = n.lo + k as i64;
                self.map(f, &x.object(i, alg), &y.object(i, alg))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(ChainMap { lo: n.lo, maps })
    }
}

#[derive(Clone, Copy)]
enum Leaves<'b> {
    Relabel { new_gens: &'b [Module], index: &'b (dyn Fn(usize) -> usize + Sync) },
    Substitute(&'b [Witness]),
}

struct Push<'a, 'b> {
    functor: Functor<'a>,
    gens: &'b [Module],
    leaves: Leaves<'b>,
    new_gens: &'b [Module],
    images: Vec<Module>,
}

impl Push<'_, '_> {
    fn link(&self, link: &Link, t: &Complex, b: &Complex) -> Result<Link> {
        Ok(match link {
            Link::Equal => Link::Equal,
            Link::Qiso { from } => Link::Qiso { from: self.functor.chain_map(from, b, t)? },
            Link::Retract { to, from } => {
                Link::Retract { to: self.functor.chain_map(to, t, b)?, from: self.functor.chain_map(from, b, t)? }
            }
        })
    }

    /// Transports a leaf link `T ~ ⊕ G_s` to `F(T) ~ ⊕ F(G_s)` summand by summand.
    fn leaf_link(&self, link: &Link, t: &Complex, copies: &[(i64, usize)]) -> Result<Link> {
        let src = self.functor.source();
        let fld = self.functor.target().field;
        let e = leaf_object(
            &copies.iter().map(|&(d, s)| super::Term { degree: d, summand: s, multiplicity: 1 }).collect::<Vec<_>>(),
            self.gens,
            src,
        )?;
        let ft = self.functor.complex(t)?;
        let span = [t.range(), e.range()]
            .into_iter()
            .flatten()
            .fold(None::<(i64, i64)>, |acc, (l, h)| Some(acc.map_or((l, h), |(a, b)| (a.min(l), b.max(h)))));
        let Some((lo, hi)) = span else {
            return Ok(Link::Equal);
        };
        let tgt = self.functor.target();
        let parts_at =
            |i: i64| -> Vec<&Module> { copies.iter().filter(|c| c.0 == i).map(|c| &self.gens[c.1]).collect() };
        let push_to = |m: &ChainMap| -> Result<ChainMap> {
            let maps = (lo..=hi)
                .map(|i| {
                    let parts = parts_at(i);
                    let ti = t.object(i, src);
                    let fti = ft.object(i, tgt);
                    let comps = split_rows(&m.at(i, t, &e, src), &parts, src.field);
                    let fc = comps
                        .iter()
                        .zip(&parts)
                        .map(|(c, p)| self.functor.map(c, &ti, p))
                        .collect::<Result<Vec<_>>>()?;
                    if fc.is_empty() {
                        return Ok(ModMap::zero(fld, &fti, &tgt.zero_module()));
                    }
                    Ok(ModMap::vcat(&fc.iter().collect::<Vec<_>>(), fld, &fti))
                })
                .collect::<Result<Vec<_>>>()?;
            Ok(ChainMap { lo, maps })
        };
        let push_from = |m: &ChainMap| -> Result<ChainMap> {
            let maps = (lo..=hi)
                .map(|i| {
                    let parts = parts_at(i);
                    let ti = t.object(i, src);
                    let fti = ft.object(i, tgt);
                    let comps = split_cols(&m.at(i, &e, t, src), &parts, src.field);
                    let fc = comps
                        .iter()
                        .zip(&parts)
                        .map(|(c, p)| self.functor.map(c, p, &ti))
                        .collect::<Result<Vec<_>>>()?;
                    if fc.is_empty() {
                        return Ok(ModMap::zero(fld, &tgt.zero_module(), &fti));
                    }
                    Ok(ModMap::hcat(&fc.iter().collect::<Vec<_>>(), fld, &fti))
                })
                .collect::<Result<Vec<_>>>()?;
            Ok(ChainMap { lo, maps })
        };
        Ok(match link {
            Link::Equal => Link::Qiso { from: push_from(&ChainMap::identity(&e))? },
            Link::Qiso { from } => Link::Qiso { from: push_from(from)? },
            Link::Retract { to, from } => Link::Retract { to: push_to(to)?, from: push_from(from)? },
        })
    }

    fn push(&self, w: &Witness) -> Result<Witness> {
        let tgt = self.functor.target();
        let target = self.functor.complex(&w.target)?;
        match &w.body {
            Body::Leaf(terms) => {
                let copies = expand(terms);
                let link = self.leaf_link(&w.link, &w.target, &copies)?;
                match self.leaves {
                    Leaves::Relabel { new_gens, index } => {
                        let mut out = Vec::new();
                        for t in terms {
                            let j = index(t.summand);
                            if new_gens.get(j) != Some(&self.images[t.summand]) {
                                return Err(self
                                    .functor
                                    .broken(format!("image of generator {} is not generator {j}", t.summand)));
                            }
                            out.push(super::Term { degree: t.degree, summand: j, multiplicity: t.multiplicity });
                        }
                        Ok(Witness { target, body: Body::Leaf(out), link })
                    }
                    Leaves::Substitute(subs) => {
                        if copies.is_empty() {
                            return Ok(Witness { target, body: Body::Leaf(Vec::new()), link });
                        }
                        let mut parts = Vec::new();
                        for &(d, s) in &copies {
                            let sub = subs.get(s).ok_or_else(|| {
                                Error::InvalidComplex(format!("no substitute witness for generator {s}"))
                            })?;
                            if !sub.target.same_as(&Complex::concentrated(self.images[s].clone(), 0)) {
                                return Err(self.functor.broken(format!(
                                    "substitute witness {s} does not target the image of its generator"
                                )));
                            }
                            parts.push(sub.shift(-d));
                        }
                        let inner = Witness::sum(&parts.iter().collect::<Vec<_>>(), self.new_gens, tgt)?;
                        Ok(Witness { target, body: Body::Wrap(Box::new(inner)), link })
                    }
                }
            }
            Body::Node { ses, left, right } => {
                let a = self.functor.complex(&ses.a)?;
                let b = self.functor.complex(&ses.b)?;
                let c = self.functor.complex(&ses.c)?;
                let f = self.functor.chain_map(&ses.f, &ses.a, &ses.b)?;
                let g = self.functor.chain_map(&ses.g, &ses.b, &ses.c)?;
                let new_ses = ComplexSes::new(a, b, c, f, g, tgt).map_err(|e| self.functor.broken(e.to_string()))?;
                let (l, r) = rayon::join(|| self.push(left), || self.push(right));
                let link = self.link(&w.link, &w.target, &ses.b)?;
                Ok(Witness::node(target, new_ses, l?, r?, link))
            }
            Body::Wrap(inner) => {
                let link = self.link(&w.link, &w.target, &inner.target)?;
                Ok(Witness { target, body: Body::Wrap(Box::new(self.push(inner)?)), link })
            }
        }
    }
}

fn run(
    w: &Witness,
    functor: Functor<'_>,
    gens: &[Module],
    leaves: Leaves<'_>,
    check_gens: &[Module],
) -> Result<Witness> {
    let images = gens.iter().map(|g| functor.obj(g)).collect::<Result<Vec<_>>>()?;
    let push = Push { functor, gens, leaves, new_gens: check_gens, images };
    let out = push.push(w)?;
    let report = witness_check(&out, check_gens, functor.target(), out.depth());
    if !report.ok {
        return Err(functor.broken(format!(
            "{} at {}",
            report.reason.unwrap_or_default(),
            report.locus.unwrap_or_default()
        )));
    }
    Ok(out)
}

/// Transports a witness over `gens` along an exact functor. Leaf summand `s`
/// becomes summand `index(s)` of `new_gens`, which must equal `F(gens[s])`.
/// Every certificate is re-verified afterwards.
pub fn pushforward(
    w: &Witness,
    functor: Functor<'_>,
    gens: &[Module],
    new_gens: &[Module],
    index: &(dyn Fn(usize) -> usize + Sync),
) -> Result<Witness> {
    run(w, functor, gens, Leaves::Relabel { new_gens, index }, new_gens)
}

/// Transports a witness and replaces each leaf copy of `F(gens[s])` by the
/// witness `subs[s]` (a witness over `new_gens` for `F(gens[s])` in degree 0).
pub fn pushforward_substituting(
    w: &Witness,
    functor: Functor<'_>,
    gens: &[Module],
    subs: &[Witness],
    new_gens: &[Module],
) -> Result<Witness> {
    run(w, functor, gens, Leaves::Substitute(subs), new_gens)
}
