use super::{ChainMap, Complex};
use crate::algebra::{BasicAlgebra, ModMap, Module};
use crate::error::{Error, Result};
use crate::exactlin::Mat;
use crate::repcat::RepCategory;
use crate::trimat::TriRing;

/// `0 -> A --f--> B --g--> C -> 0`, exact in every degree. `section` is a
/// degreewise linear right inverse of `g`; it need not commute with the
/// differentials or the algebra action.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ComplexSes {
    pub a: Complex,
    pub b: Complex,
    pub c: Complex,
    pub f: ChainMap,
    pub g: ChainMap,
    pub section: ChainMap,
}

fn blocks_fit(m: &ModMap, source: &Module, target: &Module) -> bool {
    m.blocks.len() == source.dims.len()
        && m.blocks.iter().enumerate().all(|(v, b)| b.shape() == (target.dims[v], source.dims[v]))
}

/// A degreewise linear right inverse of a surjective chain map.
pub(crate) fn linear_section(g: &ChainMap, b: &Complex, c: &Complex, alg: &BasicAlgebra) -> Option<ChainMap> {
    let Some((lo, hi)) = c.range() else {
        return Some(ChainMap::zero());
    };
    let mut maps = Vec::new();
    for i in lo..=hi {
        let gi = g.at(i, b, c, alg);
        let mut blocks = Vec::new();
        for blk in &gi.blocks {
            blocks.push(blk.solve_mat(&Mat::identity(alg.field, blk.rows())).ok().flatten()?);
        }
        maps.push(ModMap { blocks });
    }
    Some(ChainMap { lo, maps })
}

impl ComplexSes {
    /// Assembles the sequence with a computed linear section and verifies it.
    pub fn new(a: Complex, b: Complex, c: Complex, f: ChainMap, g: ChainMap, alg: &BasicAlgebra) -> Result<ComplexSes> {
        let section = linear_section(&g, &b, &c, alg)
            .ok_or_else(|| Error::InvalidComplex("second map is not degreewise surjective".into()))?;
        let ses = ComplexSes { a, b, c, f, g, section };
        ses.check(alg).map_err(Error::InvalidComplex)?;
        Ok(ses)
    }

    /// Degreewise exactness by ranks, chain-map conditions and the section identity.
    pub fn check(&self, alg: &BasicAlgebra) -> std::result::Result<(), String> {
        for (name, x) in [("A", &self.a), ("B", &self.b), ("C", &self.c)] {
            x.validate(alg).map_err(|e| format!("{name}: {e}"))?;
        }
        self.f.check(&self.a, &self.b, alg).map_err(|e| format!("A -> B: {e}"))?;
        self.g.check(&self.b, &self.c, alg).map_err(|e| format!("B -> C: {e}"))?;
        let span = [self.a.range(), self.b.range(), self.c.range()]
            .into_iter()
            .flatten()
            .fold(None::<(i64, i64)>, |acc, (l, h)| Some(acc.map_or((l, h), |(l0, h0)| (l0.min(l), h0.max(h)))));
        let Some((lo, hi)) = span else {
            return Ok(());
        };
        for i in lo..=hi {
            let (ai, bi, ci) = (self.a.object(i, alg), self.b.object(i, alg), self.c.object(i, alg));
            let fi = self.f.at(i, &self.a, &self.b, alg);
            let gi = self.g.at(i, &self.b, &self.c, alg);
            let si = self.section.at(i, &self.c, &self.b, alg);
            if !blocks_fit(&si, &ci, &bi) {
                return Err(format!("section has the wrong shape in degree {i}"));
            }
            if !gi.compose(&fi).is_zero() {
                return Err(format!("g∘f does not vanish in degree {i}"));
            }
            if fi.rank() != ai.total_dim() {
                return Err(format!("f is not injective in degree {i}"));
            }
            if gi.rank() != ci.total_dim() || bi.total_dim() != ai.total_dim() + ci.total_dim() {
                return Err(format!("sequence is not exact in degree {i}"));
            }
            if gi.compose(&si) != ModMap::identity(&ci) {
                return Err(format!("section is not a right inverse in degree {i}"));
            }
        }
        Ok(())
    }

    pub fn shift(&self, n: i64) -> ComplexSes {
        ComplexSes {
            a: self.a.shift(n),
            b: self.b.shift(n),
            c: self.c.shift(n),
            f: self.f.shift(n),
            g: self.g.shift(n),
            section: self.section.shift(n),
        }
    }

    pub fn direct_sum(parts: &[&ComplexSes], alg: &BasicAlgebra) -> ComplexSes {
        let sum = |sel: fn(&ComplexSes) -> &Complex| {
            Complex::direct_sum(&parts.iter().map(|s| sel(s)).collect::<Vec<_>>(), alg)
        };
        let maps = |m: fn(&ComplexSes) -> (&ChainMap, &Complex, &Complex)| {
            ChainMap::direct_sum(&parts.iter().map(|s| m(s)).collect::<Vec<_>>(), alg)
        };
        ComplexSes {
            a: sum(|s| &s.a),
            b: sum(|s| &s.b),
            c: sum(|s| &s.c),
            f: maps(|s| (&s.f, &s.a, &s.b)),
            g: maps(|s| (&s.g, &s.b, &s.c)),
            section: maps(|s| (&s.section, &s.c, &s.b)),
        }
    }
}

/// For `f : L -> M`, the sequence `0 -> M -> Cone(f) -> L[1] -> 0` with
/// `Cone(f)^i = L^(i+1) ⊕ M^i` and `d(l, m) = (-d l, f l + d m)`.
pub fn cone_ses(f: &ChainMap, l: &Complex, m: &Complex, alg: &BasicAlgebra) -> Result<ComplexSes> {
    let fld = alg.field;
    let l1 = l.shift(1);
    let Some((lo, hi)) = [l1.range(), m.range()]
        .into_iter()
        .flatten()
        .fold(None::<(i64, i64)>, |acc, (a, b)| Some(acc.map_or((a, b), |(x, y)| (x.min(a), y.max(b)))))
    else {
        return ComplexSes::new(
            Complex::zero(),
            Complex::zero(),
            Complex::zero(),
            ChainMap::zero(),
            ChainMap::zero(),
            alg,
        );
    };
    let objects: Vec<Module> = (lo..=hi).map(|i| alg.direct_sum(&[&l1.object(i, alg), &m.object(i, alg)])).collect();
    let diffs = (lo..hi)
        .map(|i| {
            let (li, mi) = (l1.object(i, alg), m.object(i, alg));
            let target = &objects[(i + 1 - lo) as usize];
            let from_l = ModMap::vcat(&[&l1.diff(i, alg), &f.at(i + 1, l, m, alg)], fld, &li);
            let from_m = ModMap::vcat(&[&ModMap::zero(fld, &mi, &l1.object(i + 1, alg)), &m.diff(i, alg)], fld, &mi);
            ModMap::hcat(&[&from_l, &from_m], fld, target)
        })
        .collect();
    let cone = Complex::new(lo, objects, diffs)?;
    let incl = ChainMap {
        lo,
        maps: (lo..=hi)
            .map(|i| {
                let mi = m.object(i, alg);
                ModMap::vcat(&[&ModMap::zero(fld, &mi, &l1.object(i, alg)), &ModMap::identity(&mi)], fld, &mi)
            })
            .collect(),
    };
    let proj = ChainMap {
        lo,
        maps: (lo..=hi)
            .map(|i| {
                let li = l1.object(i, alg);
                let mi = m.object(i, alg);
                ModMap::hcat(&[&ModMap::identity(&li), &ModMap::zero(fld, &mi, &li)], fld, &li)
            })
            .collect(),
    };
    ComplexSes::new(m.clone(), cone, l1, incl, proj, alg)
}

/// Degreewise standard presentations `0 -> ⊕_a k^{t(a)}_λ(X_{s(a)}) -> ⊕_v k^v_λ(X_v) -> X -> 0`.
pub fn complex_standard_triangle(rc: &RepCategory, x: &Complex) -> Result<ComplexSes> {
    let alg = rc.algebra();
    x.validate(alg)?;
    let Some((lo, hi)) = x.range() else {
        return ComplexSes::new(
            Complex::zero(),
            Complex::zero(),
            Complex::zero(),
            ChainMap::zero(),
            ChainMap::zero(),
            alg,
        );
    };
    let fld = alg.field;
    let nv = alg.shape.vertices;
    let nq = rc.quiver().vertex_count();
    let pres = (lo..=hi).map(|i| rc.standard_presentation(&x.object(i, alg))).collect::<Result<Vec<_>>>()?;
    let mut l_diffs = Vec::new();
    let mut m_diffs = Vec::new();
    for i in lo..hi {
        let d = x.diff(i, alg);
        let on_left: Vec<ModMap> = rc
            .quiver()
            .arrows()
            .iter()
            .map(|a| Ok(rc.left_adjoint_map(a.target, &rc.evaluate_map(&d, a.source)?)))
            .collect::<Result<_>>()?;
        let on_mid: Vec<ModMap> =
            (0..nq).map(|v| Ok(rc.left_adjoint_map(v, &rc.evaluate_map(&d, v)?))).collect::<Result<_>>()?;
        l_diffs.push(ModMap::direct_sum(&on_left.iter().collect::<Vec<_>>(), fld, nv));
        m_diffs.push(ModMap::direct_sum(&on_mid.iter().collect::<Vec<_>>(), fld, nv));
    }
    let l = Complex::new(lo, pres.iter().map(|p| p.left.clone()).collect(), l_diffs)?;
    let m = Complex::new(lo, pres.iter().map(|p| p.middle.clone()).collect(), m_diffs)?;
    let f = ChainMap { lo, maps: pres.iter().map(|p| p.mono.clone()).collect() };
    let g = ChainMap { lo, maps: pres.iter().map(|p| p.epi.clone()).collect() };
    let section = ChainMap { lo, maps: pres.iter().map(|p| p.section.clone()).collect() };
    let ses = ComplexSes { a: l, b: m, c: x.clone(), f, g, section };
    ses.check(alg).map_err(Error::InvalidComplex)?;
    Ok(ses)
}

/// Degreewise triple sequences `0 -> k²_λ(M ⊗ X) -> k¹_λ(X) ⊕ k²_λ(Y) -> (X, Y)_φ -> 0`.
pub fn triple_standard_triangle(tri: &TriRing, x: &Complex) -> Result<ComplexSes> {
    let alg = tri.gamma();
    x.validate(alg)?;
    let Some((lo, hi)) = x.range() else {
        return ComplexSes::new(
            Complex::zero(),
            Complex::zero(),
            Complex::zero(),
            ChainMap::zero(),
            ChainMap::zero(),
            alg,
        );
    };
    let fld = alg.field;
    let nr = tri.r().quiver().vertex_count();
    let ns = tri.s().quiver().vertex_count();
    let mut triples = Vec::new();
    let mut tensors = Vec::new();
    let mut seqs = Vec::new();
    for i in lo..=hi {
        let xi = x.object(i, alg);
        let t = tri.from_module(&xi)?;
        if tri.to_module(&t)? != xi {
            return Err(Error::InvalidComplex(format!("degree {i} does not round-trip through its triple")));
        }
        tensors.push(tri.validate_triple(&t)?);
        seqs.push(tri.triple_ses(&t)?);
        triples.push(t);
    }
    let mut a_obj = Vec::new();
    let mut b_obj = Vec::new();
    for s in &seqs {
        a_obj.push(tri.to_module(&s.left)?);
        b_obj.push(tri.to_module(&s.middle)?);
    }
    let mut a_d = Vec::new();
    let mut b_d = Vec::new();
    for i in lo..hi {
        let k = (i - lo) as usize;
        let d = x.diff(i, alg);
        let dx = ModMap { blocks: d.blocks[..nr].to_vec() };
        let dy = ModMap { blocks: d.blocks[nr..nr + ns].to_vec() };
        let td = tri.tensor_map(&dx, &tensors[k], &tensors[k + 1]);
        a_d.push(tri.row_map(&td));
        b_d.push(tri.map_from_parts(&dx, &ModMap::direct_sum(&[&td, &dy], fld, ns)));
    }
    let a = Complex::new(lo, a_obj, a_d)?;
    let b = Complex::new(lo, b_obj, b_d)?;
    let f = ChainMap { lo, maps: seqs.iter().map(|s| s.f.clone()).collect() };
    let g = ChainMap { lo, maps: seqs.iter().map(|s| s.g.clone()).collect() };
    let section = ChainMap { lo, maps: seqs.iter().map(|s| s.section.clone()).collect() };
    let ses = ComplexSes { a, b, c: x.clone(), f, g, section };
    ses.check(alg).map_err(Error::InvalidComplex)?;
    Ok(ses)
}
