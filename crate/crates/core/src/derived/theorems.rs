use super::{
    complex_standard_triangle, cone_ses, pushforward, pushforward_substituting, triple_standard_triangle,
    witness_check, ChainMap, Complex, ComplexSes, Functor, Link, Term, Witness, WitnessCheck,
};
use crate::algebra::{BasicAlgebra, ModMap, Module};
use crate::error::{Error, Result};
use crate::exactlin::Mat;
use crate::repcat::RepCategory;
use crate::trimat::TriRing;

/// A verified witness together with the generator summands it refers to.
#[derive(Clone, Debug)]
pub struct GeneratedWitness {
    pub witness: Witness,
    pub generators: Vec<Module>,
    pub check: WitnessCheck,
}

/// Over a semisimple basic algebra, `X ≃ ⊕_i H^i(X)[-i]` as a leaf over the
/// simples `S_0, ..., S_{n-1}`, with quasi-isomorphisms in both directions.
pub fn semisimple_split(alg: &BasicAlgebra, x: &Complex) -> Result<Witness> {
    if !alg.shape.arrows.is_empty() {
        return Err(Error::NotSemisimple);
    }
    x.validate(alg)?;
    let Some((lo, hi)) = x.range() else {
        return Ok(Witness::zero(Complex::zero()));
    };
    let f = alg.field;
    let nv = alg.shape.vertices;
    let mut terms = Vec::new();
    let mut to_maps = Vec::new();
    let mut from_maps = Vec::new();
    for i in lo..=hi {
        let d = x.diff(i, alg);
        let prev = x.diff(i - 1, alg);
        let mut to_blocks = Vec::new();
        let mut from_blocks = Vec::new();
        for v in 0..nv {
            let n = x.object(i, alg).dims[v];
            let b = prev.blocks[v].column_basis();
            let z = d.blocks[v].kernel();
            let reps = z.select_cols(&Mat::extend_basis(&b, &z));
            let part = b.hstack(&reps);
            let rest = Mat::identity(f, n).select_cols(&Mat::extend_basis(&part, &Mat::identity(f, n)));
            let inv = part.hstack(&rest).inverse().expect("basis of the degree");
            to_blocks.push(inv.submatrix(b.cols(), reps.cols(), 0, n));
            if reps.cols() > 0 {
                terms.push(Term { degree: i, summand: v, multiplicity: reps.cols() });
            }
            from_blocks.push(reps);
        }
        to_maps.push(ModMap { blocks: to_blocks });
        from_maps.push(ModMap { blocks: from_blocks });
    }
    let link = Link::Retract { to: ChainMap { lo, maps: to_maps }, from: ChainMap { lo, maps: from_maps } };
    Ok(Witness { target: x.clone(), body: super::Body::Leaf(terms), link })
}

/// A leaf for a complex concentrated in one degree whose object lies in `add G`.
fn leaf_shortcut(x: &Complex, gens: &[Module], alg: &BasicAlgebra) -> Option<Witness> {
    let t = x.trimmed();
    if t.objects.len() != 1 {
        return None;
    }
    let i = t.lo;
    let aw = alg.add_witness(&t.objects[0], &gens.iter().collect::<Vec<_>>())?;
    let terms = aw
        .multiplicities
        .iter()
        .enumerate()
        .filter(|(_, &m)| m > 0)
        .map(|(s, &m)| Term { degree: i, summand: s, multiplicity: m })
        .collect();
    let link = Link::Retract {
        to: ChainMap { lo: i, maps: vec![aw.section] },
        from: ChainMap { lo: i, maps: vec![aw.retraction] },
    };
    Some(Witness { target: x.clone(), body: super::Body::Leaf(terms), link })
}

fn finish(witness: Witness, generators: Vec<Module>, alg: &BasicAlgebra) -> Result<GeneratedWitness> {
    let check = witness_check(&witness, &generators, alg, witness.depth());
    if !check.ok {
        return Err(Error::Other(format!(
            "assembled witness failed verification at {}: {}",
            check.locus.clone().unwrap_or_default(),
            check.reason.clone().unwrap_or_default()
        )));
    }
    Ok(GeneratedWitness { witness, generators, check })
}

/// Roots the witness for `C` at the cone sequence `0 -> B -> Cone(f) -> A[1] -> 0`
/// of a degreewise sequence `0 -> A -> B -> C -> 0`, linked to `C` through `g`.
fn cone_root(ses: &ComplexSes, w_b: Witness, w_a: Witness, alg: &BasicAlgebra) -> Result<Witness> {
    let cone = cone_ses(&ses.f, &ses.a, &ses.b, alg)?;
    let fld = alg.field;
    let a1 = ses.a.shift(1);
    let from = match cone.b.range() {
        None => ChainMap::zero(),
        Some((lo, hi)) => ChainMap {
            lo,
            maps: (lo..=hi)
                .map(|i| {
                    let ci = ses.c.object(i, alg);
                    let zero = ModMap::zero(fld, &a1.object(i, alg), &ci);
                    ModMap::hcat(&[&zero, &ses.g.at(i, &ses.b, &ses.c, alg)], fld, &ci)
                })
                .collect(),
        },
    };
    Ok(Witness::node(ses.c.clone(), cone, w_b, w_a.shift(1), Link::Qiso { from }))
}

/// A witness for `X` over `G = ⊕_v k^v_λ(G_0)` (summand `v·|G_0| + j` is
/// `k^v_λ` of `G_0[j]`), built from per-vertex witnesses `base[v]` for the
/// evaluations `X_v` over `G_0`. Depth is at most the sum of the two largest
/// base depths.
pub fn theorem42_witness(rc: &RepCategory, x: &Complex, base: &[Witness], g0: &[Module]) -> Result<GeneratedWitness> {
    let alg = rc.algebra();
    x.validate(alg)?;
    let nq = rc.quiver().vertex_count();
    let n0 = g0.len();
    let mut gens = Vec::new();
    for v in 0..nq {
        for g in g0 {
            gens.push(rc.left_adjoint(v, g)?);
        }
    }
    if x.trimmed() == Complex::zero() {
        return finish(Witness::zero(x.clone()), gens, alg);
    }
    if let Some(w) = leaf_shortcut(x, &gens, alg) {
        return finish(w, gens, alg);
    }
    if base.len() != nq {
        return Err(Error::InvalidComplex(format!("expected {nq} base witnesses, got {}", base.len())));
    }
    for (v, w) in base.iter().enumerate() {
        let xv = Functor::Evaluate { cat: rc, vertex: v }.complex(x)?;
        if !w.target.same_as(&xv) {
            return Err(Error::InvalidComplex(format!("base witness {v} does not target the evaluation at {v}")));
        }
    }
    let ses = complex_standard_triangle(rc, x)?;
    let push = |v: usize, w: &Witness| {
        pushforward(w, Functor::LeftAdjoint { cat: rc, vertex: v }, g0, &gens, &move |j| v * n0 + j)
    };
    let on_mid = (0..nq).map(|v| push(v, &base[v])).collect::<Result<Vec<_>>>()?;
    let on_left = rc.quiver().arrows().iter().map(|a| push(a.target, &base[a.source])).collect::<Result<Vec<_>>>()?;
    let w_m = Witness::sum(&on_mid.iter().collect::<Vec<_>>(), &gens, alg)?;
    let w_l = Witness::sum(&on_left.iter().collect::<Vec<_>>(), &gens, alg)?;
    if !w_m.target.same_as(&ses.b) || !w_l.target.same_as(&ses.a) {
        return Err(Error::Other("pushed witnesses do not match the standard triangle".into()));
    }
    let root = cone_root(&ses, w_m, w_l, alg)?;
    finish(root, gens, alg)
}

/// `(X_•, Y_•)` of a complex of triples.
pub fn triple_parts(tri: &TriRing, x: &Complex) -> Result<(Complex, Complex)> {
    let alg = tri.gamma();
    let nr = tri.r().quiver().vertex_count();
    let ns = tri.s().quiver().vertex_count();
    let Some((lo, hi)) = x.range() else {
        return Ok((Complex::zero(), Complex::zero()));
    };
    let triples = x.objects.iter().map(|m| tri.from_module(m)).collect::<Result<Vec<_>>>()?;
    let dx = (lo..hi).map(|i| ModMap { blocks: x.diff(i, alg).blocks[..nr].to_vec() }).collect();
    let dy = (lo..hi).map(|i| ModMap { blocks: x.diff(i, alg).blocks[nr..nr + ns].to_vec() }).collect();
    Ok((
        Complex::new(lo, triples.iter().map(|t| t.x.clone()).collect(), dx)?,
        Complex::new(lo, triples.iter().map(|t| t.y.clone()).collect(), dy)?,
    ))
}

/// A witness for a complex of triples over `G = k¹_λ(G_R) ⊕ k²_λ(G_S)`
/// (the `R` summands first). `w_r` and `w_y` witness the two components of
/// `X` over `G_R` and `G_S`; `tensor_subs[j]` witnesses `M ⊗ G_R[j]` over `G_S`.
pub fn theorem45_witness(
    tri: &TriRing,
    x: &Complex,
    w_r: &Witness,
    w_y: &Witness,
    gens_r: &[Module],
    gens_s: &[Module],
    tensor_subs: &[Witness],
) -> Result<GeneratedWitness> {
    let alg = tri.gamma();
    x.validate(alg)?;
    let nr = gens_r.len();
    let mut gens = Vec::new();
    for g in gens_r {
        gens.push(Functor::Column(tri).obj(g)?);
    }
    for g in gens_s {
        gens.push(Functor::Row(tri).obj(g)?);
    }
    if x.trimmed() == Complex::zero() {
        return finish(Witness::zero(x.clone()), gens, alg);
    }
    if let Some(w) = leaf_shortcut(x, &gens, alg) {
        return finish(w, gens, alg);
    }
    let (xr, y) = triple_parts(tri, x)?;
    if !w_r.target.same_as(&xr) || !w_y.target.same_as(&y) {
        return Err(Error::InvalidComplex("component witnesses do not target the parts of the complex".into()));
    }
    let ses = triple_standard_triangle(tri, x)?;
    let on_x = pushforward(w_r, Functor::Column(tri), gens_r, &gens, &|j| j)?;
    let on_y = pushforward(w_y, Functor::Row(tri), gens_s, &gens, &|j| nr + j)?;
    let w_b = Witness::sum(&[&on_x, &on_y], &gens, alg)?;
    let tensored = pushforward_substituting(w_r, Functor::Tensor(tri), gens_r, tensor_subs, gens_s)?;
    let w_a = pushforward(&tensored, Functor::Row(tri), gens_s, &gens, &|j| nr + j)?;
    if !w_b.target.same_as(&ses.b) || !w_a.target.same_as(&ses.a) {
        return Err(Error::Other("pushed witnesses do not match the triple triangle".into()));
    }
    let root = cone_root(&ses, w_b, w_a, alg)?;
    finish(root, gens, alg)
}

fn simples(alg: &BasicAlgebra) -> Vec<Module> {
    (0..alg.vertex_count()).map(|v| alg.simple(v)).collect()
}

/// [`theorem42_witness`] with a semisimple base: the base witnesses are the
/// cohomology splittings of the evaluations, over the simples.
pub fn theorem42_semisimple(rc: &RepCategory, x: &Complex) -> Result<GeneratedWitness> {
    let base_alg = rc.base_algebra();
    let base = (0..rc.quiver().vertex_count())
        .map(|v| semisimple_split(base_alg, &Functor::Evaluate { cat: rc, vertex: v }.complex(x)?))
        .collect::<Result<Vec<_>>>()?;
    theorem42_witness(rc, x, &base, &simples(base_alg))
}

/// [`theorem45_witness`] with `R` and `S` semisimple, all component witnesses
/// obtained by splitting cohomology.
pub fn theorem45_semisimple(tri: &TriRing, x: &Complex) -> Result<GeneratedWitness> {
    let (ra, sa) = (tri.r().basic(), tri.s().basic());
    let (gens_r, gens_s) = (simples(ra), simples(sa));
    let (xr, y) = triple_parts(tri, x)?;
    let w_r = semisimple_split(ra, &xr)?;
    let w_y = semisimple_split(sa, &y)?;
    let subs = gens_r
        .iter()
        .map(|g| semisimple_split(sa, &Complex::concentrated(Functor::Tensor(tri).obj(g)?, 0)))
        .collect::<Result<Vec<_>>>()?;
    theorem45_witness(tri, x, &w_r, &w_y, &gens_r, &gens_s, &subs)
}
