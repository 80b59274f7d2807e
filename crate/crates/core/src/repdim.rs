//! The representation-dimension pipeline over `ΛQ`: the generator-cogenerator
//! `X̄ = X1 ⊕ X2 ⊕ X3` built from one of `Λ`, the global dimension of its
//! endomorphism algebra, and every intermediate bound of the argument.

use std::fmt;

use rayon::prelude::*;
use serde::Serialize;

use crate::algebra::{BasicAlgebra, Bqa, Dim, Module};
use crate::endo::{
    adjoint_end_iso, end_algebra, hom_as_end_module, is_projective_endmodule, sc_gldim, EndAlgebra, Side, SummandList,
};
use crate::error::{Error, Result};
use crate::quiver::{standard, Quiver};
use crate::repcat::RepCategory;

/// Where a summand of `X̄` comes from: `e^v_λ(A_i)` or `e^v_ρ(A_i)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Provenance {
    pub vertex: usize,
    pub summand: usize,
    pub side: Side,
}

/// The three blocks of `X̄`.
#[derive(Clone, Debug)]
pub struct XBar {
    pub x1: SummandList,
    pub x2: SummandList,
    pub x3: SummandList,
    /// Per summand of `x1`, then `x2`, then `x3`.
    pub provenance: Vec<Provenance>,
    pub sinks: Vec<usize>,
    /// The quiver is of type A; the vanishing lemma does not apply.
    pub type_a: bool,
    /// Every vertex is a sink, so `X3` is empty.
    pub degenerate: bool,
    /// Number of summands of `X2` coming from non-sinks (they come first).
    pub x2_lambda: usize,
}

impl XBar {
    pub fn all(&self) -> SummandList {
        self.x1.concat(&self.x2).concat(&self.x3)
    }

    pub fn len(&self) -> usize {
        self.provenance.len()
    }

    pub fn is_empty(&self) -> bool {
        self.provenance.is_empty()
    }

    /// `X2` split into its `λ` part (non-sinks) and `ρ` part (sinks).
    pub fn x2_parts(&self) -> (SummandList, SummandList) {
        let k = self.x2_lambda;
        let part = |r: std::ops::Range<usize>| SummandList {
            summands: self.x2.summands[r.clone()].to_vec(),
            labels: self.x2.labels[r].to_vec(),
        };
        (part(0..k), part(k..self.x2.len()))
    }
}

/// Checks that `A` is a generator-cogenerator of `Λ`.
pub fn check_gen_cogen(lam: &BasicAlgebra, a: &SummandList) -> Result<()> {
    let refs: Vec<&Module> = a.summands.iter().collect();
    for v in 0..lam.vertex_count() {
        if !lam.in_add(lam.projective(v), &refs) {
            return Err(Error::NotGenCogen(format!("projective at vertex {v} is not in add A")));
        }
        let inj = lam.injective(v).ok_or_else(|| Error::Other("injectives are unavailable".into()))?;
        if !lam.in_add(inj, &refs) {
            return Err(Error::NotGenCogen(format!("injective at vertex {v} is not in add A")));
        }
    }
    Ok(())
}

pub fn build_xbar(rc: &RepCategory, a: &SummandList) -> Result<XBar> {
    check_gen_cogen(rc.base_algebra(), a)?;
    let q = rc.quiver();
    let sinks = q.sinks();
    let others: Vec<usize> = (0..q.vertex_count()).filter(|v| !sinks.contains(v)).collect();
    let mut provenance = Vec::new();
    let mut block = |vs: &[usize], side: Side| -> Result<SummandList> {
        let mut mods = Vec::new();
        let mut labels = Vec::new();
        for &v in vs {
            for (i, (m, l)) in a.summands.iter().zip(&a.labels).enumerate() {
                mods.push(match side {
                    Side::Lambda => rc.left_adjoint(v, m)?,
                    Side::Rho => rc.right_adjoint(v, m)?,
                });
                labels.push(format!("e{}_{}({l})", q.vertices()[v], side.tag()));
                provenance.push(Provenance { vertex: v, summand: i, side });
            }
        }
        SummandList::new(mods, labels)
    };
    let x1 = block(&sinks, Side::Lambda)?;
    let x2l = block(&others, Side::Lambda)?;
    let x2r = block(&sinks, Side::Rho)?;
    let x3 = block(&others, Side::Rho)?;
    let x2_lambda = x2l.len();
    let x2 = x2l.concat(&x2r);
    let xbar = XBar { x1, x2, x3, provenance, sinks, type_a: q.is_type_an(), degenerate: others.is_empty(), x2_lambda };
    let report = rc.is_gen_cogen(&xbar.all().summands)?;
    if !report.holds() {
        return Err(Error::NotGenCogen(format!("X̄ misses {:?}", report.missing)));
    }
    Ok(xbar)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Status {
    Pass,
    Fail,
    Inconclusive,
}

impl Status {
    fn of(b: Option<bool>) -> Status {
        match b {
            Some(true) => Status::Pass,
            Some(false) => Status::Fail,
            None => Status::Inconclusive,
        }
    }
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
            Status::Inconclusive => "INCONCLUSIVE",
        })
    }
}

/// One checked claim with the numbers behind it.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Step {
    pub name: String,
    pub value: String,
    pub status: Status,
}

impl Step {
    fn new(name: &str, value: String, status: Status) -> Step {
        Step { name: name.to_string(), value, status }
    }

    fn bound(name: &str, d: Dim, bound: Dim) -> Step {
        let status = match bound {
            Dim::Finite(b) => Status::of(d.le(b)),
            Dim::AtLeast(_) => Status::Inconclusive,
        };
        Step::new(name, format!("{d} <= {bound}"), status)
    }
}

fn pd_over(end: &EndAlgebra, alg: &BasicAlgebra, from: &SummandList, cap: usize) -> Result<Dim> {
    let pres = end.sc().present()?;
    let n = hom_as_end_module(alg, from, end)?;
    let m = n.module.to_basic_module(end.sc(), &pres)?;
    Ok(pres.algebra.pd(&m, cap))
}

fn hom_total(end: &EndAlgebra, from: std::ops::Range<usize>, to: std::ops::Range<usize>) -> usize {
    from.flat_map(|i| to.clone().map(move |j| (i, j))).map(|(i, j)| end.hom_basis(i, j).len()).sum()
}

/// Intermediate results shared by the proof steps and the final report.
#[derive(Clone, Debug)]
pub struct ProofData {
    pub steps: Vec<Step>,
    pub n: Dim,
    pub end_xbar: EndAlgebra,
}

/// Runs every check of the argument, in order.
pub fn verify_proof_steps(rc: &RepCategory, a: &SummandList, xbar: &XBar, cap: usize) -> Result<ProofData> {
    let alg = rc.algebra();
    let n = sc_gldim(&end_algebra(rc.base_algebra(), a)?, cap)?;
    let plus = |k: usize| match n {
        Dim::Finite(d) => Dim::Finite(d + k),
        Dim::AtLeast(d) => Dim::AtLeast(d + k),
    };
    let all = xbar.all();
    let end_xbar = end_algebra(alg, &all)?;
    let (l1, l2) = (xbar.x1.len(), xbar.x2.len());
    let r1 = 0..l1;
    let r2 = l1..l1 + l2;
    let r3 = l1 + l2..all.len();
    let mut steps = Vec::new();
    for (name, from, to) in [
        ("Hom(X1,X3) = 0", &r1, &r3),
        ("Hom(X2,X1) = 0", &r2, &r1),
        ("Hom(X3,X1) = 0", &r3, &r1),
        ("Hom(X3,X2) = 0", &r3, &r2),
    ] {
        let d = hom_total(&end_xbar, from.clone(), to.clone());
        steps.push(Step::new(name, format!("dim {d}"), Status::of(Some(d == 0))));
    }
    let split = l1 + xbar.x2_lambda;
    let d = hom_total(&end_xbar, split..l1 + l2, l1..split);
    steps.push(Step::new("Hom(X2 rho part, X2 lambda part) = 0", format!("dim {d}"), Status::of(Some(d == 0))));
    let sigma_triangular = hom_total(&end_xbar, r2.clone(), r1.clone()) == 0;
    let xbar_triangular = hom_total(&end_xbar, r3.clone(), 0..l1 + l2) == 0;

    let iso = |side: Side, vs: &[usize], name: &str| -> Step {
        match adjoint_end_iso(rc, a, side, vs) {
            Ok(r) => Step::new(name, format!("dim {} = {}", r.dims().0, r.dims().1), Status::Pass),
            Err(e) => Step::new(name, e.to_string(), Status::Fail),
        }
    };
    let sinks = &xbar.sinks;
    let others: Vec<usize> = (0..rc.quiver().vertex_count()).filter(|v| !sinks.contains(v)).collect();
    steps.push(iso(Side::Lambda, sinks, "End(X1) = prod Gamma"));
    steps.push(iso(Side::Rho, &others, "End(X3) = Gamma Q'"));
    steps.push(iso(Side::Lambda, &others, "End(X2 lambda part) = Gamma Q'"));
    steps.push(iso(Side::Rho, sinks, "End(X2 rho part) = prod Gamma"));

    let (x2l, x2r) = xbar.x2_parts();
    let m_projective = if x2l.is_empty() || x2r.is_empty() {
        Step::new("M projective over prod Gamma", "M = 0".into(), Status::Pass)
    } else {
        let end_r = end_algebra(alg, &x2r)?;
        let m = hom_as_end_module(alg, &x2l, &end_r)?;
        let p = is_projective_endmodule(&end_r, &m)?;
        Step::new("M projective over prod Gamma", format!("dim {}", m.module.dim), Status::of(Some(p)))
    };
    steps.push(m_projective);

    let end1 = (!xbar.x1.is_empty()).then(|| end_algebra(alg, &xbar.x1)).transpose()?;
    let end2 = (!xbar.x2.is_empty()).then(|| end_algebra(alg, &xbar.x2)).transpose()?;
    let end3 = (!xbar.x3.is_empty()).then(|| end_algebra(alg, &xbar.x3)).transpose()?;
    let gl = |e: &Option<EndAlgebra>| -> Result<Dim> {
        match e {
            Some(e) => sc_gldim(e, cap),
            None => Ok(Dim::Finite(0)),
        }
    };
    let (g1, g2, g3) = (gl(&end1)?, gl(&end2)?, gl(&end3)?);
    steps.push(Step::new("gl.dim End(X1) = n", format!("{g1} = {n}"), Status::of(eq_dim(g1, n))));
    steps.push(Step::bound("gl.dim End(X2) <= n+2", g2, plus(2)));
    steps.push(Step::bound("gl.dim End(X3) <= n+1", g3, plus(1)));

    let pd12 = match &end2 {
        Some(e) if !xbar.x1.is_empty() => pd_over(e, alg, &xbar.x1, cap)?,
        _ => Dim::Finite(0),
    };
    steps.push(Step::bound("pd Hom(X1,X2) <= 2", pd12, Dim::Finite(2)));
    let sigma_list = xbar.x1.concat(&xbar.x2);
    let g_sigma = if sigma_list.is_empty() { Dim::Finite(0) } else { sc_gldim(&end_algebra(alg, &sigma_list)?, cap)? };
    steps.push(Step::bound("gl.dim Sigma <= n+3", g_sigma, plus(3)));
    let m12 = hom_total(&end_xbar, r1.clone(), r2.clone()) > 0;
    steps.push(sandwich("Sigma sandwich", [g1, g2, pd12, g_sigma], m12, sigma_triangular));

    let pd_into3 = |from: &SummandList| -> Result<Dim> {
        match &end3 {
            Some(e) if !from.is_empty() => pd_over(e, alg, from, cap),
            _ => Ok(Dim::Finite(0)),
        }
    };
    steps.push(Step::bound("pd Hom(X2,X3) <= 1", pd_into3(&xbar.x2)?, Dim::Finite(1)));
    let pd_sigma3 = pd_into3(&sigma_list)?;
    let g_all = sc_gldim(&end_xbar, cap)?;
    let m3 = hom_total(&end_xbar, 0..l1 + l2, r3.clone()) > 0;
    steps.push(sandwich("End(X) sandwich", [g_sigma, g3, pd_sigma3, g_all], m3, xbar_triangular));
    Ok(ProofData { steps, n, end_xbar })
}

fn eq_dim(a: Dim, b: Dim) -> Option<bool> {
    match (a, b) {
        (Dim::Finite(x), Dim::Finite(y)) => Some(x == y),
        _ => None,
    }
}

/// `max{gl R, gl S, pd M + 1} <= gl Γ <= max{gl R + pd M + 1, gl S}` for
/// `Γ = [[R, 0], [M, S]]`, given as `[gl R, gl S, pd M, gl Γ]`. The middle
/// term of the lower bound needs `M ≠ 0`; the check needs the triangular shape.
fn sandwich(name: &str, [gr, gs, pd, g]: [Dim; 4], m_nonzero: bool, triangular: bool) -> Step {
    if !triangular {
        return Step::new(name, "not triangular".into(), Status::Inconclusive);
    }
    let lower = if m_nonzero { gr.max(gs).max(pd.plus(1)) } else { gr.max(gs) };
    let upper = if m_nonzero { gr.add(pd).plus(1).max(gs) } else { gr.max(gs) };
    let value = format!("{lower} <= {g} <= {upper}");
    let (Some(l), Some(u), Some(x)) = (lower.finite(), upper.finite(), g.finite()) else {
        return Step::new(name, value, Status::Inconclusive);
    };
    Step::new(name, value, Status::of(Some(l <= x && x <= u)))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Verdict {
    #[serde(rename = "PASS")]
    Pass,
    #[serde(rename = "FAIL")]
    Fail,
    #[serde(rename = "INCONCLUSIVE")]
    Inconclusive,
    #[serde(rename = "OUT-OF-HYPOTHESIS")]
    OutOfHypothesis,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Pass => "PASS",
            Verdict::Fail => "FAIL",
            Verdict::Inconclusive => "INCONCLUSIVE",
            Verdict::OutOfHypothesis => "OUT-OF-HYPOTHESIS",
        })
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct PipelineReport {
    pub n: String,
    pub n_supplied: Option<usize>,
    pub gldim_end_xbar: String,
    pub bound: Option<usize>,
    pub verdict: Verdict,
    pub steps: Vec<Step>,
    pub summands: Vec<String>,
    pub type_a: bool,
    pub degenerate: bool,
    #[serde(skip)]
    pub n_dim: Dim,
    #[serde(skip)]
    pub gldim_dim: Dim,
}

fn verdict(type_a: bool, n: Dim, g: Dim) -> Verdict {
    if type_a {
        return Verdict::OutOfHypothesis;
    }
    let Dim::Finite(n) = n else { return Verdict::Inconclusive };
    match g {
        Dim::Finite(d) if d <= n + 5 => Verdict::Pass,
        Dim::Finite(_) => Verdict::Fail,
        Dim::AtLeast(c) if c > n + 5 => Verdict::Fail,
        Dim::AtLeast(_) => Verdict::Inconclusive,
    }
}

/// The whole pipeline. `n` is always computed; a supplied value is recorded next to it.
pub fn repdim_bound_report(
    rc: &RepCategory,
    a: &SummandList,
    n_supplied: Option<usize>,
    cap: usize,
) -> Result<PipelineReport> {
    let xbar = build_xbar(rc, a)?;
    let data = verify_proof_steps(rc, a, &xbar, cap)?;
    let g = sc_gldim(&data.end_xbar, cap)?;
    let mut steps = data.steps;
    if let Some(s) = n_supplied {
        steps.push(Step::new(
            "supplied n matches",
            format!("{s} vs {}", data.n),
            Status::of(eq_dim(Dim::Finite(s), data.n)),
        ));
    }
    Ok(PipelineReport {
        n: data.n.to_string(),
        n_supplied,
        gldim_end_xbar: g.to_string(),
        bound: data.n.finite().map(|n| n + 5),
        verdict: verdict(xbar.type_a, data.n, g),
        steps,
        summands: xbar.all().labels,
        type_a: xbar.type_a,
        degenerate: xbar.degenerate,
        n_dim: data.n,
        gldim_dim: g,
    })
}

/// Projectivity of `Hom(X1, X2)` over `End(X2)` for one `D4` orientation.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct OrientationResult {
    /// Bit `i` set: arm `i` points towards the centre.
    pub inward: u8,
    pub sinks: Vec<String>,
    pub hom_dim: usize,
    pub projective: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Remark39Report {
    pub orientations: Vec<OrientationResult>,
}

impl Remark39Report {
    /// Some orientation gives a non-projective `Hom(X1, X2)`.
    pub fn holds(&self) -> bool {
        self.orientations.iter().any(|o| !o.projective)
    }
}

/// Runs over all eight orientations of `D4` with `Λ = A = k`.
pub fn remark39_check() -> Result<Remark39Report> {
    let orientations = (0u8..8)
        .into_par_iter()
        .map(|inward| -> Result<OrientationResult> {
            let q: Quiver = standard::d4(inward);
            let k = Bqa::path_algebra(standard::point(), crate::exactlin::Field::Rationals)?;
            let a = SummandList::new(vec![k.basic().simple(0)], vec!["k".into()])?;
            let rc = RepCategory::new(q, k)?;
            let xbar = build_xbar(&rc, &a)?;
            let end2 = end_algebra(rc.algebra(), &xbar.x2)?;
            let m = hom_as_end_module(rc.algebra(), &xbar.x1, &end2)?;
            Ok(OrientationResult {
                inward,
                sinks: xbar.sinks.iter().map(|&v| rc.quiver().vertices()[v].clone()).collect(),
                hom_dim: m.module.dim,
                projective: is_projective_endmodule(&end2, &m)?,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(Remark39Report { orientations })
}
