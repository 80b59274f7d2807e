//! Acceptance suite: one line per criterion, non-zero exit if any fails.
//!
//! Runtimes are printed next to the expected budget; exceeding a budget is
//! reported but does not fail the criterion.

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::time::{Duration, Instant};

use quivhom_core::algebra::Bqa;
use quivhom_core::derived::{
    module_from_json, module_to_json, theorem42_semisimple, theorem45_semisimple, witness_check, witness_from_json,
    witness_to_json, Complex,
};
use quivhom_core::endo::{end_algebra, lemma36_iso, lemma37_check, sc_gldim, SummandList};
use quivhom_core::exactlin::Scalar;
use quivhom_core::gen::{self, GenRng};
use quivhom_core::quiver::{standard, Quiver};
use quivhom_core::repcat::RepCategory;
use quivhom_core::repdim::{build_xbar, remark39_check, repdim_bound_report, Status, Verdict};
use quivhom_core::trimat::{BimoduleSpec, TriRing, Triple};
use quivhom_core::{BasicAlgebra, Dim, Field, Mat, ModMap, Module};
use rand::Rng;

const CAP: usize = 12;
const Q: Field = Field::Rationals;

type Outcome = Result<String, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn ok<T, E: std::fmt::Display>(r: Result<T, E>) -> Result<T, String> {
    r.map_err(|e| e.to_string())
}

fn k_over(field: Field) -> Bqa {
    Bqa::path_algebra(standard::point(), field).unwrap()
}

fn dual_numbers(field: Field) -> Bqa {
    Bqa::new(standard::loop_quiver(), field, vec![vec![(field.one(), vec![0, 0])]], Some(2)).unwrap()
}

fn path(q: Quiver) -> Bqa {
    Bqa::path_algebra(q, Q).unwrap()
}

fn ground_list(field: Field) -> SummandList {
    SummandList::new(vec![k_over(field).basic().simple(0)], vec!["k".into()]).unwrap()
}

fn named_quivers() -> Vec<(String, Quiver)> {
    let mut out = vec![
        ("A2".to_string(), standard::a2()),
        ("A3".to_string(), standard::linear_an(3)),
        ("Kronecker".to_string(), standard::kronecker()),
    ];
    out.extend((0u8..8).map(|i| (format!("D4[{i}]"), standard::d4(i))));
    out
}

fn criterion_1() -> Outcome {
    for (name, q) in named_quivers() {
        let rc = ok(RepCategory::new(q.clone(), k_over(Q)))?;
        let g = rc.gldim(CAP);
        ensure(g == Dim::Finite(1), || format!("{name}: gl.dim {g}"))?;
        let direct = path(q).basic().gldim(CAP);
        ensure(direct == g, || format!("{name}: path algebra gives {direct}"))?;
    }
    let base = path(standard::a2());
    let base_g = base.basic().gldim(CAP);
    ensure(base_g == Dim::Finite(1), || format!("gl.dim kA2 = {base_g}"))?;
    let rc = ok(RepCategory::new(standard::a2(), base))?;
    let g = rc.gldim(CAP);
    ensure(matches!(g, Dim::Finite(1 | 2)), || format!("A2 over kA2: {g}"))?;
    Ok(format!("11 quivers over k have gl.dim 1; A2 over kA2 has {g} <= 2"))
}

/// A representation built vertexwise from random base modules and random maps.
fn random_rep(rc: &RepCategory, rng: &mut GenRng) -> Module {
    let lam = rc.base_algebra();
    if rng.gen_bool(0.5) {
        return gen::quotient_module(rc.algebra(), 2, rng);
    }
    let mods: Vec<Module> = (0..rc.quiver().vertex_count()).map(|_| gen::quotient_module(lam, 1, rng)).collect();
    let arrows: Vec<ModMap> =
        rc.quiver().arrows().iter().map(|a| gen::hom(lam, &mods[a.source], &mods[a.target], rng)).collect();
    rc.from_parts(&mods, &arrows).unwrap()
}

fn criterion_2() -> Outcome {
    let rc = ok(RepCategory::new(standard::d4_outward(), path(standard::linear_an(3))))?;
    let lam = rc.base_algebra();
    let mut rng = gen::rng(2);
    let mut sharp = 0;
    for i in 0..200 {
        let x = random_rep(&rc, &mut rng);
        let mut n = Dim::Finite(0);
        for v in 0..rc.quiver().vertex_count() {
            n = n.max(lam.pd(&ok(rc.evaluate(&x, v))?, CAP));
        }
        let pd = rc.rep_pd(&x, CAP);
        let (Some(n), Some(pd)) = (n.finite(), pd.finite()) else {
            return Err(format!("sample {i}: undecided ({n}, {pd})"));
        };
        ensure(pd <= n + 1, || format!("sample {i}: pd {pd} > {n} + 1"))?;
        sharp += usize::from(pd == n + 1);
    }
    Ok(format!("200 representations over (kA3, D4); {sharp} attain n + 1"))
}

fn criterion_3() -> Outcome {
    let cases = [
        ("k, A2", RepCategory::new(standard::a2(), k_over(Q)), ground_list(Q), 3),
        ("k, D4", RepCategory::new(standard::d4_outward(), k_over(Q)), ground_list(Q), 7),
        (
            "k[x]/(x^2), A2",
            RepCategory::new(standard::a2(), dual_numbers(Q)),
            SummandList::new(vec![dual_numbers(Q).basic().projective(0).clone()], vec!["L".into()]).unwrap(),
            6,
        ),
    ];
    let mut dims = Vec::new();
    for (name, rc, a, expected) in cases {
        let rep = ok(lemma36_iso(&ok(rc)?, &a))?;
        let (l, r) = rep.dims();
        ensure(l == expected && r == expected, || format!("{name}: dims {l}, {r}"))?;
        dims.push(l.to_string());
    }
    Ok(format!("isomorphisms verified, dims {}", dims.join(", ")))
}

fn criterion_4() -> Outcome {
    let regular = |rc: &RepCategory| {
        let lam = rc.base_algebra();
        let parts: Vec<&Module> = (0..lam.vertex_count()).map(|v| lam.projective(v)).collect();
        lam.direct_sum(&parts)
    };
    let mut pairs = 0;
    let mut quivers: Vec<(String, Quiver)> = (0u8..8).map(|i| (format!("D4[{i}]"), standard::d4(i))).collect();
    quivers.push(("Kronecker".into(), standard::kronecker()));
    for (name, q) in quivers {
        ensure(q.sinks().len() < q.vertex_count(), || format!("{name} has no non-sink"))?;
        let rc = ok(RepCategory::new(q, k_over(Q)))?;
        let rep = ok(lemma37_check(&rc, &regular(&rc)))?;
        ensure(!rep.type_a && rep.all_zero() && !rep.pairs.is_empty(), || format!("{name}: {:?}", rep))?;
        pairs += rep.pairs.len();
    }
    let rc = ok(RepCategory::new(standard::a2(), k_over(Q)))?;
    let rep = ok(lemma37_check(&rc, &regular(&rc)))?;
    ensure(rep.type_a && rep.pairs == vec![(1, 0, 1)], || format!("A2: {:?}", rep))?;
    Ok(format!("{pairs} Hom spaces vanish on D4 and Kronecker; A2 gives dimension 1"))
}

fn id(field: Field, n: usize) -> Mat {
    Mat::identity(field, n)
}

fn t2(field: Field) -> TriRing {
    TriRing::new(
        k_over(field),
        k_over(field),
        BimoduleSpec { dim: 1, left: vec![id(field, 1)], right: vec![id(field, 1)] },
    )
    .unwrap()
}

fn vector_space(field: Field, d: usize) -> Module {
    Module { field, dims: vec![d], maps: Vec::new() }
}

/// Every `d1 x d0` matrix over a finite field.
fn all_matrices(field: Field, rows: usize, cols: usize) -> Vec<Mat> {
    let elems = field.elements();
    let mut out = vec![Vec::new()];
    for _ in 0..rows * cols {
        out = out
            .into_iter()
            .flat_map(|v: Vec<Scalar>| elems.iter().map(move |e| [v.clone(), vec![e.clone()]].concat()))
            .collect();
    }
    out.into_iter().map(|data| Mat::from_vec(field, rows, cols, data)).collect()
}

fn check_projectivity(tri: &TriRing, t: &Triple, label: &str) -> Result<bool, String> {
    let c = ok(tri.is_projective_triple(t))?;
    ensure(c.consistent(), || format!("{label}: criterion {} but lifting {}", c.criterion(), c.lifting))?;
    Ok(c.lifting)
}

/// `R = k[x]/(x^2)`, `S = k`, `M = k` with `x` acting by zero.
fn dual_over_k(field: Field) -> TriRing {
    let spec = BimoduleSpec { dim: 1, left: vec![id(field, 1)], right: vec![id(field, 1), Mat::zeros(field, 1, 1)] };
    TriRing::new(dual_numbers(field), k_over(field), spec).unwrap()
}

/// `R = S = k[x]/(x^2)` with `M` the regular bimodule.
fn dual_regular(field: Field) -> TriRing {
    let x = Mat::from_i64(field, &[&[0, 0], &[1, 0]]);
    let spec = BimoduleSpec { dim: 2, left: vec![id(field, 2), x.clone()], right: vec![id(field, 2), x] };
    TriRing::new(dual_numbers(field), dual_numbers(field), spec).unwrap()
}

fn random_triple(tri: &TriRing, rng: &mut GenRng) -> Triple {
    if rng.gen_bool(0.3) {
        return tri.from_module(&gen::quotient_module(tri.gamma(), 2, rng)).unwrap();
    }
    let x = gen::quotient_module(tri.r().basic(), 2, rng);
    let y = gen::quotient_module(tri.s().basic(), 2, rng);
    let tensor = tri.tensor_basis(&x).unwrap();
    let phi = gen::hom(tri.s().basic(), &tensor.module, &y, rng);
    Triple { x, y, phi }
}

fn criterion_5() -> Outcome {
    let f2 = Field::prime(2).unwrap();
    let tri = t2(f2);
    let (mut total, mut projective) = (0, 0);
    for dx in 0..=4 {
        for dy in 0..=4 - dx {
            for phi in all_matrices(f2, dy, dx) {
                let t = Triple { x: vector_space(f2, dx), y: vector_space(f2, dy), phi: ModMap { blocks: vec![phi] } };
                projective += usize::from(check_projectivity(&tri, &t, &format!("F2 triple {dx},{dy}"))?);
                total += 1;
            }
        }
    }
    let rings = [t2(Q), dual_over_k(Q), dual_regular(Q)];
    let mut rng = gen::rng(5);
    let mut rational_projective = 0;
    for i in 0..100 {
        let tri = &rings[i % rings.len()];
        let t = random_triple(tri, &mut rng);
        rational_projective += usize::from(check_projectivity(tri, &t, &format!("rational triple {i}"))?);
    }
    Ok(format!(
        "{total} triples over T2(F2) ({projective} projective) and 100 rational triples ({rational_projective} projective) agree"
    ))
}

/// `M = k`, with `S` acting through vertex `j` and `R` through vertex `i`.
fn simple_bimodule(r: &Bqa, s: &Bqa, i: usize, j: usize) -> BimoduleSpec {
    let acts = |alg: &Bqa, at: usize| -> Vec<Mat> {
        let n = alg.quiver().vertex_count();
        let mut out: Vec<Mat> = (0..n).map(|v| Mat::from_i64(Q, &[&[i64::from(v == at)]])).collect();
        out.extend(alg.quiver().arrows().iter().map(|_| Mat::zeros(Q, 1, 1)));
        out
    };
    BimoduleSpec { dim: 1, left: acts(s, j), right: acts(r, i) }
}

fn criterion_6() -> Outcome {
    let mut battery: Vec<(String, TriRing)> = vec![
        ("T2(k)".into(), t2(Q)),
        (
            "k, k, k^2".into(),
            TriRing::new(k_over(Q), k_over(Q), BimoduleSpec { dim: 2, left: vec![id(Q, 2)], right: vec![id(Q, 2)] })
                .unwrap(),
        ),
        (
            "k, k, 0".into(),
            TriRing::new(k_over(Q), k_over(Q), BimoduleSpec { dim: 0, left: vec![id(Q, 0)], right: vec![id(Q, 0)] })
                .unwrap(),
        ),
        ("k[x]/(x^2), k, k".into(), dual_over_k(Q)),
        ("k[x]/(x^2) regular".into(), dual_regular(Q)),
    ];
    let algebras = [
        ("kA2", path(standard::a2())),
        ("kA3", path(standard::linear_an(3))),
        ("Kronecker", path(standard::kronecker())),
        ("k", k_over(Q)),
    ];
    for (rn, r) in &algebras {
        for (sn, s) in &algebras {
            let (i, j) = (r.quiver().vertex_count() - 1, 0);
            battery.push((
                format!("{rn}, {sn}, S{j} x S{i}"),
                TriRing::new(r.clone(), s.clone(), simple_bimodule(r, s, i, j)).unwrap(),
            ));
        }
    }
    let mut infinite = 0;
    for (name, tri) in &battery {
        let s = tri.sandwich(CAP);
        ensure(!s.violated(), || format!("{name}: {s:?}"))?;
        if !s.gldim.is_finite() {
            infinite += 1;
            ensure(!s.lower.is_finite(), || format!("{name}: lower bound {} for infinite gl.dim", s.lower))?;
        } else {
            ensure(s.skipped().is_empty(), || format!("{name}: skipped {:?}", s.skipped()))?;
        }
    }
    let s = t2(Q).sandwich(CAP);
    ensure((s.lower, s.upper, s.gldim) == (Dim::Finite(1), Dim::Finite(1), Dim::Finite(1)), || {
        format!("T2(k): {s:?}")
    })?;
    ensure(infinite >= 1, || "no infinite instance".into())?;
    Ok(format!("{} rings, {infinite} of infinite gl.dim; T2(k) gives 1 <= 1 <= 1", battery.len()))
}

fn criterion_7() -> Outcome {
    let required = ["gl.dim End(X2) <= n+2", "pd Hom(X1,X2) <= 2", "gl.dim Sigma <= n+3"];
    let mut values = Vec::new();
    for (name, q) in [("D4", standard::d4_outward()), ("Kronecker", standard::kronecker())] {
        let rc = ok(RepCategory::new(q, k_over(Q)))?;
        let a = ground_list(Q);
        let p = ok(repdim_bound_report(&rc, &a, None, CAP))?;
        for s in &p.steps {
            ensure(s.status == Status::Pass, || format!("{name}: step {} is {} ({})", s.name, s.status, s.value))?;
        }
        for r in required {
            ensure(p.steps.iter().any(|s| s.name == r), || format!("{name}: step {r} missing"))?;
        }
        ensure(p.verdict == Verdict::Pass, || format!("{name}: pipeline {}", p.verdict))?;
        let g = p.gldim_dim.finite().ok_or_else(|| format!("{name}: gl.dim End(Xbar) {}", p.gldim_dim))?;
        ensure(g <= 5, || format!("{name}: gl.dim End(Xbar) = {g}"))?;

        let xbar = ok(build_xbar(&rc, &a))?;
        let all = xbar.all();
        let mut summands: Vec<Module> = all.summands.iter().rev().cloned().collect();
        summands.push(summands[0].clone());
        let rerun = ok(sc_gldim(&ok(end_algebra(rc.algebra(), &ok(SummandList::unlabelled(summands))?))?, CAP))?;
        ensure(rerun == p.gldim_dim, || format!("{name}: rerun gives {rerun}, pipeline {}", p.gldim_dim))?;
        values.push(format!("{name} {g}"));
    }
    Ok(format!("all steps pass; gl.dim End(Xbar): {} (stable under reordering and duplication)", values.join(", ")))
}

fn criterion_8() -> Outcome {
    let r = ok(remark39_check())?;
    ensure(r.orientations.len() == 8, || "not all orientations ran".into())?;
    ensure(r.holds(), || "every orientation gives a projective Hom".into())?;
    let bad: Vec<String> = r.orientations.iter().filter(|o| !o.projective).map(|o| o.inward.to_string()).collect();
    Ok(format!("non-projective for orientation(s) {}", bad.join(", ")))
}

fn random_complex(alg: &BasicAlgebra, rng: &mut GenRng, max_dim: usize, bounded_dims: bool) -> Complex {
    let lo = rng.gen_range(-2..=2);
    let len = rng.gen_range(1..=5);
    let mut object = |r: &mut GenRng| {
        if bounded_dims {
            gen::free_module(alg.field, &alg.shape, max_dim, r)
        } else {
            gen::quotient_module(alg, 2, r)
        }
    };
    gen::complex(alg, lo, len, &mut object, rng)
}

/// Writes the witness and its generators to disk, reads them back and re-checks.
fn reverify_from_file(
    dir: &std::path::Path,
    i: usize,
    x: &Complex,
    w: &quivhom_core::derived::Witness,
    gens: &[Module],
    alg: &BasicAlgebra,
) -> Result<(), String> {
    let file = dir.join(format!("w{i}.json"));
    let v = serde_json::json!({
        "generators": gens.iter().map(module_to_json).collect::<Vec<_>>(),
        "witness": witness_to_json(w),
    });
    ok(std::fs::write(&file, v.to_string()))?;
    let back: serde_json::Value = ok(serde_json::from_str(&ok(std::fs::read_to_string(&file))?))?;
    let gens: Vec<Module> =
        ok(back["generators"].as_array().unwrap().iter().map(|g| module_from_json(g, alg.field)).collect())?;
    let w = ok(witness_from_json(&back["witness"], alg.field))?;
    ensure(w.target.same_as(x), || format!("complex {i}: reloaded target differs"))?;
    let c = witness_check(&w, &gens, alg, 2);
    ensure(c.ok, || format!("complex {i}: reloaded witness fails at {:?}: {:?}", c.locus, c.reason))
}

fn criterion_9() -> Outcome {
    let dir = ok(tempfile::tempdir())?;
    let mut rng = gen::rng(9);
    let mut deepest = 0;
    let mut index = 0;
    for (name, q) in [("Kronecker", standard::kronecker()), ("D4", standard::d4_outward())] {
        let rc = ok(RepCategory::new(q, k_over(Q)))?;
        let alg = rc.algebra();
        for _ in 0..100 {
            let x = random_complex(alg, &mut rng, 3, true);
            ok(x.validate(alg))?;
            let g = ok(theorem42_semisimple(&rc, &x))?;
            let c = witness_check(&g.witness, &g.generators, alg, 2);
            ensure(c.ok && g.witness.depth() <= 2, || {
                format!("{name} complex {index}: depth {}, {:?}: {:?}", g.witness.depth(), c.locus, c.reason)
            })?;
            deepest = deepest.max(g.witness.depth());
            reverify_from_file(dir.path(), index, &x, &g.witness, &g.generators, alg)?;
            index += 1;
        }
    }
    Ok(format!("200 complexes over Kronecker and D4, witnesses of depth <= {deepest}, all re-verified from file"))
}

fn criterion_10() -> Outcome {
    let tri = t2(Q);
    let alg = tri.gamma();
    let mut rng = gen::rng(10);
    let mut deepest = 0;
    for i in 0..100 {
        let x = random_complex(alg, &mut rng, 3, false);
        let g = ok(theorem45_semisimple(&tri, &x))?;
        let c = witness_check(&g.witness, &g.generators, alg, 2);
        ensure(c.ok && g.witness.depth() <= 2, || {
            format!("complex {i}: depth {}, {:?}: {:?}", g.witness.depth(), c.locus, c.reason)
        })?;
        deepest = deepest.max(g.witness.depth());
    }
    Ok(format!("100 complexes over T2(k), witnesses of depth <= {deepest}"))
}

/// The interval module supported on `lo..=hi` of the linear quiver `1 -> ... -> n`.
fn interval(n: usize, lo: usize, hi: usize) -> Module {
    let inside = |v: usize| (lo..=hi).contains(&v);
    let dims: Vec<usize> = (0..n).map(|v| usize::from(inside(v))).collect();
    let maps = (0..n - 1)
        .map(|v| if inside(v) && inside(v + 1) { Mat::identity(Q, 1) } else { Mat::zeros(Q, dims[v + 1], dims[v]) })
        .collect();
    Module { field: Q, dims, maps }
}

/// Every multiset of `indecomposables` with total dimension at most `max_dim`.
fn sums_up_to(indecomposables: &[Module], max_dim: usize) -> Vec<Vec<usize>> {
    fn go(ind: &[Module], start: usize, room: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        out.push(cur.clone());
        for i in start..ind.len() {
            let d = ind[i].total_dim();
            if d <= room {
                cur.push(i);
                go(ind, i, room - d, cur, out);
                cur.pop();
            }
        }
    }
    let mut out = Vec::new();
    go(indecomposables, 0, max_dim, &mut Vec::new(), &mut out);
    out
}

fn criterion_11() -> Outcome {
    let a3 = path(standard::linear_an(3));
    let a3_ind: Vec<Module> = (0..3).flat_map(|lo| (lo..3).map(move |hi| interval(3, lo, hi))).collect();
    let dual = dual_numbers(Q);
    let dual_ind = vec![dual.basic().simple(0), dual.basic().projective(0).clone()];
    let mut counts = Vec::new();
    for (name, alg, ind) in [("kA3", a3.basic(), a3_ind), ("k[x]/(x^2)", dual.basic(), dual_ind)] {
        for m in &ind {
            ok(alg.validate_module(m))?;
        }
        let sums = sums_up_to(&ind, 6);
        for choice in &sums {
            let parts: Vec<&Module> = choice.iter().map(|&i| &ind[i]).collect();
            let m = alg.direct_sum(&parts);
            let (a, b) = (alg.pd(&m, 6), alg.pd_by_ext(&m, 6));
            ensure(a == b, || format!("{name}, summands {choice:?}: resolution {a}, Ext {b}"))?;
        }
        counts.push(format!("{} over {name}", sums.len()));
    }
    Ok(format!("isoclasses of dim <= 6 agree: {}", counts.join(", ")))
}

/// Larger than any minor of a 6 x 6 matrix with entries in [-5, 5].
const BIG_PRIME: u32 = 1_000_000_007;

fn criterion_12() -> Outcome {
    let mut rng = gen::rng(12);
    let big = Field::prime(BIG_PRIME).unwrap();
    let small = Field::prime(3).unwrap();
    for i in 0..500 {
        let (rows, cols) = (rng.gen_range(1..=6), rng.gen_range(1..=6));
        let ints = gen::int_matrix(rows, cols, 5, &mut rng);
        let refs: Vec<&[i64]> = ints.iter().map(|r| r.as_slice()).collect();
        let a = Mat::from_i64(Q, &refs);
        let r = a.rref();
        ensure(r.mat.rref().mat == r.mat, || format!("matrix {i}: rref is not idempotent"))?;
        let kernel = a.kernel_basis();
        ensure(r.rank + kernel.len() == cols, || {
            format!("matrix {i}: rank {} + nullity {} != {cols}", r.rank, kernel.len())
        })?;
        ensure(kernel.iter().all(|v| a.mul_vec(v).iter().all(Scalar::is_zero)), || {
            format!("matrix {i}: kernel vector not killed")
        })?;

        let ap = Mat::from_i64(big, &refs);
        let rp = ap.rref();
        ensure(rp.rank == r.rank && rp.pivots == r.pivots, || {
            format!("matrix {i}: ranks {} over Q, {} mod p", r.rank, rp.rank)
        })?;
        let reduced: Vec<Scalar> = r
            .mat
            .entries()
            .iter()
            .map(|s| match s {
                Scalar::Q(q) => big.from_rat(q).unwrap(),
                Scalar::Fp(..) => unreachable!(),
            })
            .collect();
        ensure(Mat::from_vec(big, rows, cols, reduced) == rp.mat, || format!("matrix {i}: rref mod p differs"))?;
        ensure(Mat::from_i64(small, &refs).rank() <= r.rank, || format!("matrix {i}: rank mod 3 exceeds rank over Q"))?;
    }
    Ok("500 integer matrices: rref idempotent, rank-nullity, Q and F_p agree".into())
}

fn main() {
    let criteria: [(fn() -> Outcome, u64); 12] = [
        (criterion_1, 5),
        (criterion_2, 30),
        (criterion_3, 5),
        (criterion_4, 5),
        (criterion_5, 60),
        (criterion_6, 30),
        (criterion_7, 120),
        (criterion_8, 30),
        (criterion_9, 120),
        (criterion_10, 60),
        (criterion_11, 60),
        (criterion_12, 10),
    ];
    let mut failed = 0;
    for (i, (run, budget)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = catch_unwind(AssertUnwindSafe(run)).unwrap_or_else(|p| {
            let msg = p.downcast_ref::<String>().cloned().or_else(|| p.downcast_ref::<&str>().map(|s| s.to_string()));
            Err(format!("panicked: {}", msg.unwrap_or_default()))
        });
        let elapsed = start.elapsed();
        let timing = if elapsed > Duration::from_secs(*budget) {
            format!("{:.1}s, over the {budget}s budget", elapsed.as_secs_f64())
        } else {
            format!("{:.1}s", elapsed.as_secs_f64())
        };
        match outcome {
            Ok(msg) => println!("criterion {}: PASS {msg} [{timing}]", i + 1),
            Err(msg) => {
                failed += 1;
                println!("criterion {}: FAIL {msg} [{timing}]", i + 1);
            }
        }
    }
    println!("acceptance: {} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed > 0 {
        std::process::exit(1);
    }
}
