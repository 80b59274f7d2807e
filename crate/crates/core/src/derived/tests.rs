use super::*;
use crate::algebra::Bqa;
use crate::gen;
use crate::quiver::{standard, Quiver};
use crate::repcat::RepCategory;
use crate::trimat::{BimoduleSpec, TriRing};

fn q() -> Field {
    Field::Rationals
}

fn k() -> Bqa {
    Bqa::path_algebra(standard::point(), q()).unwrap()
}

fn k_alg() -> BasicAlgebra {
    k().basic().clone()
}

fn scalar_map(c: i64) -> ModMap {
    ModMap { blocks: vec![Mat::from_i64(q(), &[&[c]])] }
}

fn two_term(c: i64) -> Complex {
    let s = k_alg().simple(0);
    Complex::new(0, vec![s.clone(), s], vec![scalar_map(c)]).unwrap()
}

fn reps(quiver: Quiver) -> RepCategory {
    RepCategory::new(quiver, k()).unwrap()
}

fn t2(m: usize) -> TriRing {
    let id = Mat::identity(q(), m);
    TriRing::new(k(), k(), BimoduleSpec { dim: m, left: vec![id.clone()], right: vec![id] }).unwrap()
}

#[test]
fn cohomology_of_small_complexes() {
    let alg = k_alg();
    assert!(cohomology(&two_term(1), &alg).iter().all(|h| h.module.total_dim() == 0));
    let single = Complex::concentrated(alg.simple(0), 0);
    let h = cohomology(&single, &alg);
    assert_eq!(h.len(), 1);
    assert_eq!(h[0].module, alg.simple(0));
    let dims: Vec<usize> = cohomology(&two_term(0), &alg).iter().map(|h| h.module.total_dim()).collect();
    assert_eq!(dims, vec![1, 1]);
}

#[test]
fn cohomology_sections_pick_cycles() {
    let rc = reps(standard::a2());
    let alg = rc.algebra();
    let mut r = gen::rng(3);
    let x = gen::complex(alg, -1, 3, &mut |r| gen::free_module(q(), &alg.shape, 2, r), &mut r);
    x.validate(alg).unwrap();
    for h in cohomology(&x, alg) {
        let d = x.diff(h.degree, alg);
        for (v, s) in h.section.iter().enumerate() {
            assert!(d.blocks[v].mul(s).is_zero());
        }
    }
}

#[test]
fn shift_and_direct_sum() {
    let alg = k_alg();
    let x = two_term(2);
    let s = x.shift(1);
    assert_eq!(s.lo, -1);
    assert_eq!(s.diffs[0], scalar_map(-2));
    assert_eq!(x.shift(2).diffs[0], scalar_map(2));
    let sum = Complex::direct_sum(&[&x, &Complex::concentrated(alg.simple(0), 3)], &alg);
    assert_eq!(sum.range(), Some((0, 3)));
    sum.validate(&alg).unwrap();
}

#[test]
fn invalid_complexes_are_rejected() {
    let rc = reps(standard::linear_an(3));
    let alg = rc.algebra();
    let p0 = alg.projective(0).clone();
    let f = alg.hom_basis(&p0, &p0)[0].clone();
    let bad = Complex::new(0, vec![p0.clone(), p0.clone(), p0.clone()], vec![f.clone(), f]).unwrap();
    assert!(matches!(bad.validate(alg), Err(Error::InvalidComplex(_))));
    assert!(Complex::new(0, vec![p0], vec![ModMap { blocks: vec![] }]).is_err());
}

#[test]
fn semisimple_split_examples() {
    let alg = k_alg();
    let gens = vec![alg.simple(0)];
    let zero = semisimple_split(&alg, &two_term(1)).unwrap();
    assert_eq!(zero.depth(), 0);
    assert!(witness_check(&zero, &gens, &alg, 0).ok);

    let shifted = semisimple_split(&alg, &Complex::concentrated(alg.simple(0), 5)).unwrap();
    assert_eq!(shifted.body, Body::Leaf(vec![Term { degree: 5, summand: 0, multiplicity: 1 }]));

    let split = semisimple_split(&alg, &two_term(0)).unwrap();
    assert_eq!(
        split.body,
        Body::Leaf(vec![
            Term { degree: 0, summand: 0, multiplicity: 1 },
            Term { degree: 1, summand: 0, multiplicity: 1 }
        ])
    );
    assert!(witness_check(&split, &gens, &alg, 1).ok);
    if let Link::Retract { to, from } = &split.link {
        let body = split.body_object(&gens, &alg).unwrap();
        assert!(from.compose(to, &split.target, &body, &split.target, &alg).induces_identity(&split.target, &alg));
        assert!(to.compose(from, &body, &split.target, &body, &alg).induces_identity(&body, &alg));
    } else {
        panic!("expected a retract link");
    }
}

#[test]
fn semisimple_split_rejects_arrows() {
    let rc = reps(standard::a2());
    let x = Complex::concentrated(rc.algebra().projective(0).clone(), 0);
    assert_eq!(semisimple_split(rc.algebra(), &x).unwrap_err(), Error::NotSemisimple);
}

#[test]
fn standard_triangle_of_a_simple() {
    let rc = reps(standard::a2());
    let alg = rc.algebra();
    let s1 = alg.simple(0);
    let ses = complex_standard_triangle(&rc, &Complex::concentrated(s1.clone(), 0)).unwrap();
    assert_eq!(ses.a.objects[0], *alg.projective(1));
    assert_eq!(ses.b.objects[0].dims, alg.projective(0).dims);
    assert_eq!(ses.c.objects[0], s1);
}

#[test]
fn standard_triangle_single_vertex() {
    let rc = reps(standard::point());
    let m = rc.left_adjoint(0, &k_alg().simple(0)).unwrap();
    let ses = complex_standard_triangle(&rc, &Complex::concentrated(m.clone(), 0)).unwrap();
    assert_eq!(ses.a.total_dim(), 0);
    assert_eq!(ses.b.objects[0], m);
}

#[test]
fn standard_triangle_two_term_d4() {
    let rc = reps(standard::d4_outward());
    let alg = rc.algebra();
    let mut r = gen::rng(11);
    for _ in 0..5 {
        let x = gen::complex(alg, 0, 2, &mut |r| gen::free_module(q(), &alg.shape, 2, r), &mut r);
        let ses = complex_standard_triangle(&rc, &x).unwrap();
        ses.check(alg).unwrap();
    }
}

#[test]
fn triple_triangle_on_t2() {
    let tri = t2(1);
    let alg = tri.gamma();
    let kk = tri.to_module(&tri.column(&k_alg().simple(0)).unwrap()).unwrap();
    let ses = triple_standard_triangle(&tri, &Complex::concentrated(kk, 0)).unwrap();
    assert_eq!((ses.a.total_dim(), ses.b.total_dim(), ses.c.total_dim()), (1, 3, 2));
    let f0 = ses.f.at(0, &ses.a, &ses.b, alg);
    let g0 = ses.g.at(0, &ses.b, &ses.c, alg);
    assert_eq!((f0.rank(), g0.rank()), (1, 2));

    let mut r = gen::rng(5);
    let x = gen::complex(alg, 0, 2, &mut |r| gen::free_module(q(), &alg.shape, 2, r), &mut r);
    triple_standard_triangle(&tri, &x).unwrap().check(alg).unwrap();
}

#[test]
fn resolution_witness_for_a_simple() {
    let rc = reps(standard::a2());
    let alg = rc.algebra();
    let x = Complex::concentrated(alg.simple(0), 0);
    let out = theorem42_semisimple(&rc, &x).unwrap();
    assert_eq!(out.generators, vec![alg.projective(0).clone(), alg.projective(1).clone()]);
    assert_eq!(out.witness.depth(), 2);
    assert!(witness_check(&out.witness, &out.generators, alg, 2).ok);
    let short = witness_check(&out.witness, &out.generators, alg, 1);
    assert!(!short.ok);
    assert_eq!(short.locus.as_deref(), Some("root"));
}

#[test]
fn generator_leaf_has_depth_one() {
    let rc = reps(standard::kronecker());
    let alg = rc.algebra();
    for v in 0..2 {
        let out = theorem42_semisimple(&rc, &Complex::concentrated(alg.projective(v).clone(), 3)).unwrap();
        assert_eq!(out.witness.depth(), 1);
        assert!(witness_check(&out.witness, &out.generators, alg, 1).ok);
    }
}

#[test]
fn kronecker_random_two_term_complexes() {
    let rc = reps(standard::kronecker());
    let alg = rc.algebra();
    let mut r = gen::rng(17);
    for _ in 0..10 {
        let x = gen::complex(alg, -1, 2, &mut |r| gen::free_module(q(), &alg.shape, 2, r), &mut r);
        let out = theorem42_semisimple(&rc, &x).unwrap();
        assert!(out.witness.depth() <= 2);
        assert!(witness_check(&out.witness, &out.generators, alg, 2).ok);
    }
}

#[test]
fn d4_injective_witness() {
    let rc = reps(standard::d4_outward());
    let alg = rc.algebra();
    let inj = alg.injective(0).expect("injectives").clone();
    let out = theorem42_semisimple(&rc, &Complex::concentrated(inj, 0)).unwrap();
    assert!(out.witness.depth() <= 2);
    assert!(witness_check(&out.witness, &out.generators, alg, 2).ok);
}

#[test]
fn pushforward_of_a_leaf() {
    let rc = reps(standard::a2());
    let alg = k_alg();
    let w = semisimple_split(&alg, &Complex::concentrated(alg.simple(0), 0)).unwrap();
    let g0 = vec![alg.simple(0)];
    let gens = vec![rc.algebra().projective(0).clone()];
    let pushed = pushforward(&w, Functor::LeftAdjoint { cat: &rc, vertex: 0 }, &g0, &gens, &|j| j).unwrap();
    assert_eq!(pushed.target, Complex::concentrated(rc.algebra().projective(0).clone(), 0));
    assert_eq!(pushed.body, Body::Leaf(vec![Term { degree: 0, summand: 0, multiplicity: 1 }]));
}

#[test]
fn pushforward_preserves_depth_and_zero() {
    let rc = reps(standard::kronecker());
    let alg = rc.algebra();
    let out = theorem42_semisimple(&rc, &Complex::concentrated(alg.simple(0), 0)).unwrap();
    assert_eq!(out.witness.depth(), 2);
    for v in 0..2 {
        let ev = Functor::Evaluate { cat: &rc, vertex: v };
        let new_gens: Vec<Module> = out.generators.iter().map(|g| ev.obj(g).unwrap()).collect();
        let pushed = pushforward(&out.witness, ev, &out.generators, &new_gens, &|j| j).unwrap();
        assert_eq!(pushed.depth(), 2);
        assert!(witness_check(&pushed, &new_gens, rc.base_algebra(), 2).ok);
    }
    let zero = Witness::zero(Complex::zero());
    let pushed = pushforward(&zero, Functor::LeftAdjoint { cat: &rc, vertex: 0 }, &[], &[], &|j| j).unwrap();
    assert_eq!(pushed.depth(), 0);
    assert_eq!(pushed.target, Complex::zero());
}

#[test]
fn pushforward_rejects_wrong_generators() {
    let rc = reps(standard::a2());
    let alg = k_alg();
    let w = semisimple_split(&alg, &Complex::concentrated(alg.simple(0), 0)).unwrap();
    let wrong = vec![rc.algebra().projective(1).clone()];
    let err = pushforward(&w, Functor::LeftAdjoint { cat: &rc, vertex: 0 }, &[alg.simple(0)], &wrong, &|j| j);
    assert!(matches!(err, Err(Error::CertificateBrokenByFunctor(_))));
}

#[test]
fn witness_sums_add_depth_per_side() {
    let rc = reps(standard::a2());
    let alg = rc.algebra();
    let a = theorem42_semisimple(&rc, &Complex::concentrated(alg.simple(0), 0)).unwrap();
    let b = theorem42_semisimple(&rc, &Complex::concentrated(alg.projective(1).clone(), 1)).unwrap();
    let sum = Witness::sum(&[&a.witness, &b.witness], &a.generators, alg).unwrap();
    assert_eq!(sum.depth(), 2);
    assert!(witness_check(&sum, &a.generators, alg, 2).ok);
    let zero = Witness::zero(Complex::zero());
    let with_zero = Witness::sum(&[&a.witness, &zero], &a.generators, alg).unwrap();
    assert!(witness_check(&with_zero, &a.generators, alg, 2).ok);
}

#[test]
fn tampered_witness_reports_locus() {
    let rc = reps(standard::a2());
    let alg = rc.algebra();
    let mut w = theorem42_semisimple(&rc, &Complex::concentrated(alg.simple(0), 0)).unwrap();
    if let Body::Node { ses, .. } = &mut w.witness.body {
        ses.section = ChainMap::zero();
    }
    let report = witness_check(&w.witness, &w.generators, alg, 2);
    assert!(!report.ok);
    assert_eq!(report.locus.as_deref(), Some("root"));
}

#[test]
fn t2_witnesses() {
    let tri = t2(1);
    let alg = tri.gamma();
    let kk = tri.to_module(&tri.column(&k_alg().simple(0)).unwrap()).unwrap();
    let proj = theorem45_semisimple(&tri, &Complex::concentrated(kk, 0)).unwrap();
    assert_eq!(proj.witness.depth(), 1);
    let s = tri.to_module(&tri.row(&k_alg().simple(0))).unwrap();
    let simple_top = alg.simple(0);
    for x in [Complex::concentrated(s, 2), Complex::concentrated(simple_top, 0)] {
        let out = theorem45_semisimple(&tri, &x).unwrap();
        assert!(out.witness.depth() <= 2);
        assert!(witness_check(&out.witness, &out.generators, alg, 2).ok);
    }
}

#[test]
fn random_triple_complexes_with_wide_bimodule() {
    let tri = t2(2);
    let alg = tri.gamma();
    let mut r = gen::rng(23);
    for _ in 0..5 {
        let x = gen::complex(alg, 0, 2, &mut |r| gen::free_module(q(), &alg.shape, 2, r), &mut r);
        let out = theorem45_semisimple(&tri, &x).unwrap();
        assert!(out.witness.depth() <= 2);
        assert!(witness_check(&out.witness, &out.generators, alg, 2).ok);
    }
}

#[test]
fn json_round_trip_reverifies() {
    let rc = reps(standard::kronecker());
    let alg = rc.algebra();
    let mut r = gen::rng(2);
    let x = gen::complex(alg, 0, 3, &mut |r| gen::free_module(q(), &alg.shape, 2, r), &mut r);
    let out = theorem42_semisimple(&rc, &x).unwrap();
    let text = serde_json::to_string(&witness_to_json(&out.witness)).unwrap();
    let back = witness_from_json(&serde_json::from_str(&text).unwrap(), q()).unwrap();
    assert_eq!(back, out.witness);
    assert!(witness_check(&back, &out.generators, alg, 2).ok);
    assert_eq!(complex_from_json(&complex_to_json(&x), q()).unwrap(), x);
}
