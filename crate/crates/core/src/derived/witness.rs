use super::{ChainMap, Complex, ComplexSes};
use crate::algebra::{BasicAlgebra, Module};
use crate::error::{Error, Result};

/// `multiplicity` copies of generator summand `summand`, sitting in degree `degree`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Term {
    pub degree: i64,
    pub summand: usize,
    pub multiplicity: usize,
}

/// How the target `T` of a witness relates to the object `B` its body builds.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Link {
    /// `T = B` up to zero objects at the ends.
    Equal,
    /// A quasi-isomorphism `B -> T`.
    Qiso { from: ChainMap },
    /// `to : T -> B`, `from : B -> T` with `from ∘ to` a quasi-isomorphism,
    /// so `T` is a direct factor of `B` in the derived category.
    Retract { to: ChainMap, from: ChainMap },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Body {
    /// `B = ⊕ G_s[-degree]` over the terms, with zero differential.
    Leaf(Vec<Term>),
    /// `B` is the middle of a sequence whose outer terms carry their own witnesses.
    Node { ses: Box<ComplexSes>, left: Box<Witness>, right: Box<Witness> },
    /// `B` is the target of another witness.
    Wrap(Box<Witness>),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Witness {
    pub target: Complex,
    pub body: Body,
    pub link: Link,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WitnessCheck {
    pub ok: bool,
    pub depth: usize,
    pub locus: Option<String>,
    pub reason: Option<String>,
}

/// The leaf object for a list of terms.
pub(crate) fn leaf_object(terms: &[Term], gens: &[Module], alg: &BasicAlgebra) -> Result<Complex> {
    for t in terms {
        if t.summand >= gens.len() {
            return Err(Error::InvalidComplex(format!("generator summand {} does not exist", t.summand)));
        }
    }
    let live: Vec<&Term> = terms.iter().filter(|t| t.multiplicity > 0).collect();
    let Some(lo) = live.iter().map(|t| t.degree).min() else {
        return Ok(Complex::zero());
    };
    let hi = live.iter().map(|t| t.degree).max().expect("nonempty");
    let objects: Vec<Module> = (lo..=hi)
        .map(|i| {
            let parts: Vec<&Module> = live
                .iter()
                .filter(|t| t.degree == i)
                .flat_map(|t| std::iter::repeat_n(&gens[t.summand], t.multiplicity))
                .collect();
            alg.direct_sum(&parts)
        })
        .collect();
    let diffs = (lo..hi)
        .map(|i| {
            let k = (i - lo) as usize;
            crate::algebra::ModMap::zero(alg.field, &objects[k], &objects[k + 1])
        })
        .collect();
    Complex::new(lo, objects, diffs)
}

/// Expands terms into one entry per copy, in order.
pub(crate) fn expand(terms: &[Term]) -> Vec<(i64, usize)> {
    terms.iter().flat_map(|t| std::iter::repeat_n((t.degree, t.summand), t.multiplicity)).collect()
}

impl Witness {
    /// The witness of `⟨G⟩_0 = 0` for an acyclic complex.
    pub fn zero(target: Complex) -> Witness {
        let link =
            if target.trimmed() == Complex::zero() { Link::Equal } else { Link::Qiso { from: ChainMap::zero() } };
        Witness { target, body: Body::Leaf(Vec::new()), link }
    }

    pub fn leaf(target: Complex, terms: Vec<Term>, link: Link) -> Witness {
        Witness { target, body: Body::Leaf(terms), link }
    }

    pub fn node(target: Complex, ses: ComplexSes, left: Witness, right: Witness, link: Link) -> Witness {
        Witness { target, body: Body::Node { ses: Box::new(ses), left: Box::new(left), right: Box::new(right) }, link }
    }

    pub fn depth(&self) -> usize {
        match &self.body {
            Body::Leaf(terms) => usize::from(terms.iter().any(|t| t.multiplicity > 0)),
            Body::Node { left, right, .. } => left.depth() + right.depth(),
            Body::Wrap(inner) => inner.depth(),
        }
    }

    pub fn is_zero_leaf(&self) -> bool {
        matches!(&self.body, Body::Leaf(_)) && self.depth() == 0
    }

    /// The object `B` built by the body.
    pub fn body_object(&self, gens: &[Module], alg: &BasicAlgebra) -> Result<Complex> {
        match &self.body {
            Body::Leaf(terms) => leaf_object(terms, gens, alg),
            Body::Node { ses, .. } => Ok(ses.b.clone()),
            Body::Wrap(inner) => Ok(inner.target.clone()),
        }
    }

    pub fn shift(&self, n: i64) -> Witness {
        let body = match &self.body {
            Body::Leaf(terms) => Body::Leaf(
                terms
                    .iter()
                    .map(|t| Term { degree: t.degree - n, summand: t.summand, multiplicity: t.multiplicity })
                    .collect(),
            ),
            Body::Node { ses, left, right } => Body::Node {
                ses: Box::new(ses.shift(n)),
                left: Box::new(left.shift(n)),
                right: Box::new(right.shift(n)),
            },
            Body::Wrap(inner) => Body::Wrap(Box::new(inner.shift(n))),
        };
        let link = match &self.link {
            Link::Equal => Link::Equal,
            Link::Qiso { from } => Link::Qiso { from: from.shift(n) },
            Link::Retract { to, from } => Link::Retract { to: to.shift(n), from: from.shift(n) },
        };
        Witness { target: self.target.shift(n), body, link }
    }

    /// Node count, for reports.
    pub fn size(&self) -> usize {
        match &self.body {
            Body::Leaf(_) => 1,
            Body::Node { left, right, .. } => 1 + left.size() + right.size(),
            Body::Wrap(inner) => 1 + inner.size(),
        }
    }

    /// The witness for a degreewise direct sum of targets.
    pub fn sum(parts: &[&Witness], gens: &[Module], alg: &BasicAlgebra) -> Result<Witness> {
        if parts.is_empty() {
            return Ok(Witness::zero(Complex::zero()));
        }
        if parts.len() == 1 {
            return Ok(parts[0].clone());
        }
        let target = Complex::direct_sum(&parts.iter().map(|w| &w.target).collect::<Vec<_>>(), alg);
        if parts.iter().any(|w| matches!(w.body, Body::Wrap(_))) {
            let inner: Vec<Witness> = parts
                .iter()
                .map(|w| match &w.body {
                    Body::Wrap(i) => (**i).clone(),
                    _ => Witness { target: w.target.clone(), body: w.body.clone(), link: w.link.clone() },
                })
                .collect();
            let links: Vec<(Link, Complex, Complex, bool)> = parts
                .iter()
                .map(|w| match &w.body {
                    Body::Wrap(i) => (w.link.clone(), w.target.clone(), i.target.clone(), w.is_zero_leaf()),
                    _ => (Link::Equal, w.target.clone(), w.target.clone(), false),
                })
                .collect();
            let inner = Witness::sum(&inner.iter().collect::<Vec<_>>(), gens, alg)?;
            let link = combine_links(&links, alg)?;
            return Ok(Witness { target, body: Body::Wrap(Box::new(inner)), link });
        }
        if parts.iter().all(|w| matches!(w.body, Body::Leaf(_))) {
            let mut links = Vec::new();
            for w in parts {
                links.push((w.link.clone(), w.target.clone(), w.body_object(gens, alg)?, w.is_zero_leaf()));
            }
            let link = combine_links(&links, alg)?;
            let terms = parts
                .iter()
                .flat_map(|w| match &w.body {
                    Body::Leaf(t) => t.clone(),
                    _ => unreachable!(),
                })
                .collect();
            return Ok(Witness { target, body: Body::Leaf(terms), link });
        }
        // Non-node summands become `0 -> T -> T -> 0 -> 0` with themselves as the left child.
        let mut links = Vec::new();
        let mut promoted: Vec<(ComplexSes, Witness, Witness)> = Vec::new();
        for w in parts {
            match &w.body {
                Body::Node { ses, left, right } => {
                    links.push((w.link.clone(), w.target.clone(), ses.b.clone(), false));
                    promoted.push(((**ses).clone(), (**left).clone(), (**right).clone()));
                }
                _ => {
                    let t = &w.target;
                    links.push((Link::Equal, t.clone(), t.clone(), false));
                    let ses = ComplexSes::new(
                        t.clone(),
                        t.clone(),
                        Complex::zero(),
                        ChainMap::identity(t),
                        ChainMap::zero(),
                        alg,
                    )?;
                    promoted.push((ses, (*w).clone(), Witness::zero(Complex::zero())));
                }
            }
        }
        let link = combine_links(&links, alg)?;
        let ses = ComplexSes::direct_sum(&promoted.iter().map(|p| &p.0).collect::<Vec<_>>(), alg);
        let left = Witness::sum(&promoted.iter().map(|p| &p.1).collect::<Vec<_>>(), gens, alg)?;
        let right = Witness::sum(&promoted.iter().map(|p| &p.2).collect::<Vec<_>>(), gens, alg)?;
        Ok(Witness::node(target, ses, left, right, link))
    }
}

/// Combines per-summand links `(link, T_k, B_k, zero_leaf)` into a link
/// `⊕ T_k ~ ⊕ B_k`.
fn combine_links(parts: &[(Link, Complex, Complex, bool)], alg: &BasicAlgebra) -> Result<Link> {
    if parts.iter().all(|p| p.0 == Link::Equal) {
        return Ok(Link::Equal);
    }
    let retract = parts.iter().any(|p| matches!(p.0, Link::Retract { .. }));
    if !retract {
        let froms: Vec<ChainMap> = parts
            .iter()
            .map(|(l, t, _, _)| match l {
                Link::Equal => ChainMap::identity(t),
                Link::Qiso { from } => from.clone(),
                Link::Retract { .. } => unreachable!(),
            })
            .collect();
        let from =
            ChainMap::direct_sum(&froms.iter().zip(parts).map(|(m, (_, t, b, _))| (m, b, t)).collect::<Vec<_>>(), alg);
        return Ok(Link::Qiso { from });
    }
    let mut tos = Vec::new();
    let mut froms = Vec::new();
    for (l, t, b, zero) in parts {
        match l {
            Link::Equal => {
                tos.push(ChainMap::identity(t));
                froms.push(ChainMap::identity(t));
            }
            Link::Retract { to, from } => {
                tos.push(to.clone());
                froms.push(from.clone());
            }
            Link::Qiso { .. } if *zero => {
                tos.push(ChainMap::zero());
                froms.push(ChainMap::zero());
            }
            Link::Qiso { from } => {
                if !from.is_quasi_iso(b, t, alg) {
                    return Err(Error::InvalidComplex("summand link is not a quasi-isomorphism".into()));
                }
                let inverse = degreewise_inverse(from, b, t, alg).ok_or_else(|| {
                    Error::InvalidComplex("cannot combine a quasi-isomorphism link with a retract link".into())
                })?;
                tos.push(inverse);
                froms.push(from.clone());
            }
        }
    }
    let to = ChainMap::direct_sum(&tos.iter().zip(parts).map(|(m, (_, t, b, _))| (m, t, b)).collect::<Vec<_>>(), alg);
    let from =
        ChainMap::direct_sum(&froms.iter().zip(parts).map(|(m, (_, t, b, _))| (m, b, t)).collect::<Vec<_>>(), alg);
    Ok(Link::Retract { to, from })
}

/// The inverse of a chain map that is an isomorphism in every degree.
fn degreewise_inverse(m: &ChainMap, source: &Complex, target: &Complex, alg: &BasicAlgebra) -> Option<ChainMap> {
    let n = m.normalized(source, target, alg);
    let maps = n
        .maps
        .iter()
        .map(|f| Some(crate::algebra::ModMap { blocks: f.blocks.iter().map(|b| b.inverse()).collect::<Option<_>>()? }))
        .collect::<Option<_>>()?;
    Some(ChainMap { lo: n.lo, maps })
}

fn check_link(w: &Witness, body: &Complex, alg: &BasicAlgebra) -> std::result::Result<(), String> {
    let t = &w.target;
    match &w.link {
        Link::Equal => {
            if t.same_as(body) {
                Ok(())
            } else {
                Err("target differs from the body object".into())
            }
        }
        Link::Qiso { from } => {
            from.check(body, t, alg).map_err(|e| format!("link B -> T: {e}"))?;
            if from.is_quasi_iso(body, t, alg) {
                Ok(())
            } else {
                Err("link B -> T is not a quasi-isomorphism".into())
            }
        }
        Link::Retract { to, from } => {
            to.check(t, body, alg).map_err(|e| format!("link T -> B: {e}"))?;
            from.check(body, t, alg).map_err(|e| format!("link B -> T: {e}"))?;
            let comp = from.compose(to, t, body, t, alg);
            if comp.is_quasi_iso(t, t, alg) {
                Ok(())
            } else {
                Err("retraction composite is not a quasi-isomorphism".into())
            }
        }
    }
}

fn verify(w: &Witness, gens: &[Module], alg: &BasicAlgebra, locus: &str) -> std::result::Result<(), (String, String)> {
    let fail = |e: String| (locus.to_string(), e);
    w.target.validate(alg).map_err(|e| fail(e.to_string()))?;
    let body = w.body_object(gens, alg).map_err(|e| fail(e.to_string()))?;
    match &w.body {
        Body::Leaf(_) => {}
        Body::Node { ses, left, right } => {
            ses.check(alg).map_err(fail)?;
            if !left.target.same_as(&ses.a) {
                return Err(fail("left child does not witness the first term".into()));
            }
            if !right.target.same_as(&ses.c) {
                return Err(fail("right child does not witness the last term".into()));
            }
            let (l, r) = rayon::join(
                || verify(left, gens, alg, &format!("{locus}.left")),
                || verify(right, gens, alg, &format!("{locus}.right")),
            );
            l?;
            r?;
        }
        Body::Wrap(inner) => verify(inner, gens, alg, &format!("{locus}.inner"))?,
    }
    check_link(w, &body, alg).map_err(fail)
}

/// Verifies every certificate in the tree and that the depth is at most `d`.
pub fn witness_check(w: &Witness, gens: &[Module], alg: &BasicAlgebra, d: usize) -> WitnessCheck {
    let depth = w.depth();
    if depth > d {
        return WitnessCheck {
            ok: false,
            depth,
            locus: Some("root".into()),
            reason: Some(format!("depth {depth} exceeds {d}")),
        };
    }
    match verify(w, gens, alg, "root") {
        Ok(()) => WitnessCheck { ok: true, depth, locus: None, reason: None },
        Err((locus, reason)) => WitnessCheck { ok: false, depth, locus: Some(locus), reason: Some(reason) },
    }
}
