//! Finite quivers and their paths.
//!
//! Paths are stored source-to-target: `arrows[0]` leaves the source and the
//! last arrow enters the target. In algebra multiplication the product `p * q`
//! means "first `q`, then `p`" (composition of maps), so `p * q` is nonzero
//! only when `q` ends where `p` starts.

use std::collections::{BTreeSet, HashMap};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Arrow {
    pub name: String,
    pub source: usize,
    pub target: usize,
}

/// Unvalidated quiver data, as read from a file.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct RawQuiver {
    pub vertices: Vec<String>,
    /// `(name, source, target)` by vertex id.
    pub arrows: Vec<(String, String, String)>,
}

/// A finite quiver. Unless built with [`Quiver::with_cycles`] it is acyclic,
/// and a topological order of its vertices is cached.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Quiver {
    vertices: Vec<String>,
    arrows: Vec<Arrow>,
    topo: Option<Vec<usize>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Path {
    pub source: usize,
    pub target: usize,
    pub arrows: Vec<usize>,
}

impl Path {
    pub fn trivial(v: usize) -> Path {
        Path { source: v, target: v, arrows: Vec::new() }
    }

    pub fn len(&self) -> usize {
        self.arrows.len()
    }

    pub fn is_trivial(&self) -> bool {
        self.arrows.is_empty()
    }

    /// `self` followed by `next`.
    pub fn then(&self, next: &Path) -> Option<Path> {
        if self.target != next.source {
            return None;
        }
        let mut arrows = self.arrows.clone();
        arrows.extend_from_slice(&next.arrows);
        Some(Path { source: self.source, target: next.target, arrows })
    }
}

impl Quiver {
    /// Checks vertex/arrow ids and acyclicity.
    pub fn validate(raw: &RawQuiver) -> Result<Quiver> {
        let q = Self::build(raw)?;
        q.into_acyclic()
    }

    /// Builds a quiver that may contain oriented cycles (bound quiver algebras).
    pub fn with_cycles(raw: &RawQuiver) -> Result<Quiver> {
        let mut q = Self::build(raw)?;
        q.topo = q.topological_order().ok();
        Ok(q)
    }

    fn build(raw: &RawQuiver) -> Result<Quiver> {
        let mut index = HashMap::new();
        for (i, v) in raw.vertices.iter().enumerate() {
            if index.insert(v.clone(), i).is_some() {
                return Err(Error::DuplicateVertexId(v.clone()));
            }
        }
        let mut names = BTreeSet::new();
        let mut arrows = Vec::with_capacity(raw.arrows.len());
        for (name, s, t) in &raw.arrows {
            if !names.insert(name.clone()) {
                return Err(Error::DuplicateArrowId(name.clone()));
            }
            let source = *index.get(s).ok_or_else(|| Error::UnknownVertex(s.clone()))?;
            let target = *index.get(t).ok_or_else(|| Error::UnknownVertex(t.clone()))?;
            arrows.push(Arrow { name: name.clone(), source, target });
        }
        Ok(Quiver { vertices: raw.vertices.clone(), arrows, topo: None })
    }

    fn into_acyclic(mut self) -> Result<Quiver> {
        self.topo = Some(self.topological_order()?);
        Ok(self)
    }

    /// Kahn's algorithm; reports one cycle when stuck.
    fn topological_order(&self) -> Result<Vec<usize>> {
        let n = self.vertices.len();
        let mut indeg = vec![0usize; n];
        for a in &self.arrows {
            indeg[a.target] += 1;
        }
        let mut ready: BTreeSet<usize> = (0..n).filter(|&v| indeg[v] == 0).collect();
        let mut order = Vec::with_capacity(n);
        while let Some(v) = ready.pop_first() {
            order.push(v);
            for a in self.arrows.iter().filter(|a| a.source == v) {
                indeg[a.target] -= 1;
                if indeg[a.target] == 0 {
                    ready.insert(a.target);
                }
            }
        }
        if order.len() == n {
            return Ok(order);
        }
        Err(Error::CycleFound(self.describe_cycle(&indeg)))
    }

    fn describe_cycle(&self, indeg: &[usize]) -> String {
        // Every remaining vertex has a remaining predecessor; walk backwards until a repeat.
        let start = (0..self.vertices.len()).find(|&v| indeg[v] > 0).unwrap_or(0);
        let mut seen = vec![usize::MAX; self.vertices.len()];
        let mut trail = Vec::new();
        let mut v = start;
        while seen[v] == usize::MAX {
            seen[v] = trail.len();
            trail.push(v);
            let a = self.arrows.iter().find(|a| a.target == v && indeg[a.source] > 0).unwrap();
            v = a.source;
        }
        let mut cyc: Vec<&str> = trail[seen[v]..].iter().rev().map(|&u| self.vertices[u].as_str()).collect();
        cyc.push(&self.vertices[v]);
        cyc.join(" -> ")
    }

    pub fn is_acyclic(&self) -> bool {
        self.topo.is_some()
    }

    pub fn topo_order(&self) -> Option<&[usize]> {
        self.topo.as_deref()
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn vertices(&self) -> &[String] {
        &self.vertices
    }

    pub fn arrows(&self) -> &[Arrow] {
        &self.arrows
    }

    pub fn arrow(&self, i: usize) -> &Arrow {
        &self.arrows[i]
    }

    pub fn vertex_index(&self, id: &str) -> Result<usize> {
        self.vertices.iter().position(|v| v == id).ok_or_else(|| Error::UnknownVertex(id.to_string()))
    }

    pub fn arrow_index(&self, name: &str) -> Result<usize> {
        self.arrows.iter().position(|a| a.name == name).ok_or_else(|| Error::UnknownArrow(name.to_string()))
    }

    pub fn to_raw(&self) -> RawQuiver {
        RawQuiver {
            vertices: self.vertices.clone(),
            arrows: self
                .arrows
                .iter()
                .map(|a| (a.name.clone(), self.vertices[a.source].clone(), self.vertices[a.target].clone()))
                .collect(),
        }
    }

    /// All paths from `v` to `w` (trivial path included when `v == w`), sorted
    /// lexicographically by arrow indices. Requires an acyclic quiver.
    pub fn paths_between(&self, v: usize, w: usize) -> Result<Vec<Path>> {
        let n = self.vertices.len();
        if v >= n {
            return Err(Error::UnknownVertex(v.to_string()));
        }
        if w >= n {
            return Err(Error::UnknownVertex(w.to_string()));
        }
        if !self.is_acyclic() {
            return Err(Error::CycleFound("path enumeration needs an acyclic quiver".into()));
        }
        let mut out = Vec::new();
        let mut stack = vec![Path::trivial(v)];
        while let Some(p) = stack.pop() {
            if p.target == w {
                out.push(p.clone());
            }
            for (i, a) in self.arrows.iter().enumerate() {
                if a.source == p.target {
                    let mut q = p.clone();
                    q.arrows.push(i);
                    q.target = a.target;
                    stack.push(q);
                }
            }
        }
        out.sort_by(|a, b| a.arrows.cmp(&b.arrows));
        Ok(out)
    }

    /// Every path of the (acyclic) quiver, grouped by source then target.
    pub fn all_paths(&self) -> Vec<Path> {
        let n = self.vertices.len();
        let mut out = Vec::new();
        for v in 0..n {
            for w in 0..n {
                out.extend(self.paths_between(v, w).expect("acyclic quiver"));
            }
        }
        out
    }

    /// Paths of length `< bound`, allowed even with cycles; deterministic order.
    pub fn paths_shorter_than(&self, bound: usize) -> Vec<Path> {
        let mut out: Vec<Path> = (0..self.vertices.len()).map(Path::trivial).collect();
        let mut frontier = out.clone();
        for _ in 1..bound {
            let mut next = Vec::new();
            for p in &frontier {
                for (i, a) in self.arrows.iter().enumerate() {
                    if a.source == p.target {
                        let mut q = p.clone();
                        q.arrows.push(i);
                        q.target = a.target;
                        next.push(q);
                    }
                }
            }
            out.extend(next.iter().cloned());
            frontier = next;
        }
        out
    }

    /// Length of the longest path (acyclic quivers only).
    pub fn longest_path(&self) -> usize {
        let order = self.topo.as_ref().expect("acyclic quiver");
        let mut best = vec![0usize; self.vertices.len()];
        for &v in order {
            for a in self.arrows.iter().filter(|a| a.source == v) {
                best[a.target] = best[a.target].max(best[v] + 1);
            }
        }
        best.into_iter().max().unwrap_or(0)
    }

    pub fn sinks(&self) -> Vec<usize> {
        (0..self.vertices.len()).filter(|&v| self.arrows.iter().all(|a| a.source != v)).collect()
    }

    pub fn sources(&self) -> Vec<usize> {
        (0..self.vertices.len()).filter(|&v| self.arrows.iter().all(|a| a.target != v)).collect()
    }

    /// True iff the underlying graph is a simple chain `v1 - v2 - ... - vn`.
    pub fn is_type_an(&self) -> bool {
        let n = self.vertices.len();
        if n == 0 || self.arrows.len() != n - 1 {
            return false;
        }
        let mut edges = BTreeSet::new();
        let mut degree = vec![0usize; n];
        for a in &self.arrows {
            if a.source == a.target {
                return false;
            }
            let e = (a.source.min(a.target), a.source.max(a.target));
            if !edges.insert(e) {
                return false;
            }
            degree[a.source] += 1;
            degree[a.target] += 1;
        }
        if degree.iter().any(|&d| d > 2) {
            return false;
        }
        // n-1 edges, max degree 2: a chain iff connected.
        let mut seen = vec![false; n];
        let mut stack = vec![0];
        seen[0] = true;
        while let Some(v) = stack.pop() {
            for &(x, y) in &edges {
                let other = if x == v {
                    y
                } else if y == v {
                    x
                } else {
                    continue;
                };
                if !seen[other] {
                    seen[other] = true;
                    stack.push(other);
                }
            }
        }
        seen.into_iter().all(|s| s)
    }

    /// Full subquiver on the complement of `removed`, with the old-to-new vertex map.
    pub fn delete_vertices(&self, removed: &[usize]) -> (Quiver, Vec<Option<usize>>) {
        let mut map = vec![None; self.vertices.len()];
        let mut raw = RawQuiver::default();
        for (i, v) in self.vertices.iter().enumerate() {
            if !removed.contains(&i) {
                map[i] = Some(raw.vertices.len());
                raw.vertices.push(v.clone());
            }
        }
        for a in &self.arrows {
            if map[a.source].is_some() && map[a.target].is_some() {
                raw.arrows.push((a.name.clone(), self.vertices[a.source].clone(), self.vertices[a.target].clone()));
            }
        }
        let q = if self.is_acyclic() { Quiver::validate(&raw) } else { Quiver::with_cycles(&raw) };
        (q.expect("subquiver of a valid quiver"), map)
    }

    /// Same vertices, every arrow reversed.
    pub fn opposite(&self) -> Quiver {
        let mut raw = self.to_raw();
        for a in &mut raw.arrows {
            std::mem::swap(&mut a.1, &mut a.2);
        }
        let q = if self.is_acyclic() { Quiver::validate(&raw) } else { Quiver::with_cycles(&raw) };
        q.expect("opposite of a valid quiver")
    }
}

/// Small named quivers used across tests, examples and the CLI.
pub mod standard {
    use super::*;

    fn raw(vertices: &[&str], arrows: &[(&str, &str, &str)]) -> RawQuiver {
        RawQuiver {
            vertices: vertices.iter().map(|s| s.to_string()).collect(),
            arrows: arrows.iter().map(|(a, s, t)| (a.to_string(), s.to_string(), t.to_string())).collect(),
        }
    }

    pub fn point() -> Quiver {
        Quiver::validate(&raw(&["1"], &[])).unwrap()
    }

    /// Linearly oriented `1 -> 2 -> ... -> n`.
    pub fn linear_an(n: usize) -> Quiver {
        let names: Vec<String> = (1..=n).map(|i| i.to_string()).collect();
        let arrows: Vec<(String, String, String)> =
            (1..n).map(|i| (format!("a{i}"), i.to_string(), (i + 1).to_string())).collect();
        Quiver::validate(&RawQuiver { vertices: names, arrows }).unwrap()
    }

    pub fn a2() -> Quiver {
        Quiver::validate(&raw(&["1", "2"], &[("a", "1", "2")])).unwrap()
    }

    pub fn kronecker() -> Quiver {
        Quiver::validate(&raw(&["1", "2"], &[("a", "1", "2"), ("b", "1", "2")])).unwrap()
    }

    /// `D_4` with center `c` and arms `1,2,3`. Bit `i` of `inward` points arm `i+1` at the center.
    pub fn d4(inward: u8) -> Quiver {
        let mut arrows = Vec::new();
        for (i, arm) in ["1", "2", "3"].iter().enumerate() {
            let name = ["a", "b", "d"][i];
            if inward >> i & 1 == 1 {
                arrows.push((name, *arm, "c"));
            } else {
                arrows.push((name, "c", *arm));
            }
        }
        Quiver::validate(&raw(&["1", "2", "3", "c"], &arrows)).unwrap()
    }

    pub fn d4_outward() -> Quiver {
        d4(0)
    }

    /// One vertex with one loop (cycles allowed).
    pub fn loop_quiver() -> Quiver {
        Quiver::with_cycles(&raw(&["1"], &[("x", "1", "1")])).unwrap()
    }
}

#[cfg(test)]
mod tests {
    use super::standard::*;
    use super::*;

    #[test]
    fn validate_examples() {
        let q = a2();
        assert_eq!(q.topo_order().unwrap(), &[0, 1]);
        let lp = RawQuiver { vertices: vec!["v".into()], arrows: vec![("l".into(), "v".into(), "v".into())] };
        assert!(matches!(Quiver::validate(&lp), Err(Error::CycleFound(_))));
        assert!(kronecker().is_acyclic());
        let dup = RawQuiver { vertices: vec!["1".into(), "1".into()], arrows: vec![] };
        assert_eq!(Quiver::validate(&dup), Err(Error::DuplicateVertexId("1".into())));
    }

    #[test]
    fn cycle_is_named() {
        let raw = RawQuiver {
            vertices: vec!["x".into(), "y".into(), "z".into()],
            arrows: vec![
                ("p".into(), "x".into(), "y".into()),
                ("q".into(), "y".into(), "z".into()),
                ("r".into(), "z".into(), "y".into()),
            ],
        };
        let Err(Error::CycleFound(msg)) = Quiver::validate(&raw) else { panic!() };
        assert!(msg.contains('y') && msg.contains('z') && !msg.contains('x'), "{msg}");
    }

    #[test]
    fn path_enumeration() {
        let q = a2();
        assert_eq!(q.paths_between(0, 0).unwrap(), vec![Path::trivial(0)]);
        assert_eq!(q.paths_between(0, 1).unwrap(), vec![Path { source: 0, target: 1, arrows: vec![0] }]);
        assert!(q.paths_between(1, 0).unwrap().is_empty());
        assert_eq!(kronecker().paths_between(0, 1).unwrap().len(), 2);
        assert!(matches!(q.paths_between(0, 7), Err(Error::UnknownVertex(_))));
    }

    #[test]
    fn sinks_and_sources() {
        let q = a2();
        assert_eq!((q.sinks(), q.sources()), (vec![1], vec![0]));
        let d = d4_outward();
        assert_eq!(d.sinks(), vec![0, 1, 2]);
        assert_eq!(d.sources(), vec![3]);
        let p = point();
        assert_eq!((p.sinks(), p.sources()), (vec![0], vec![0]));
    }

    #[test]
    fn type_a_detection() {
        assert!(a2().is_type_an());
        assert!(linear_an(5).is_type_an());
        assert!(point().is_type_an());
        assert!(!d4_outward().is_type_an());
        assert!(!kronecker().is_type_an());
        let zigzag = Quiver::validate(&RawQuiver {
            vertices: vec!["1".into(), "2".into(), "3".into()],
            arrows: vec![("a".into(), "1".into(), "2".into()), ("b".into(), "3".into(), "2".into())],
        })
        .unwrap();
        assert!(zigzag.is_type_an());
    }

    #[test]
    fn paths_precede_in_topological_order() {
        for inward in 0..8 {
            let q = d4(inward);
            let order = q.topo_order().unwrap();
            let pos = |v: usize| order.iter().position(|&u| u == v).unwrap();
            for p in q.all_paths() {
                if !p.is_trivial() {
                    assert!(pos(p.source) < pos(p.target));
                }
                // maximal paths end in sinks
                if q.arrows().iter().all(|a| a.source != p.target) {
                    assert!(q.sinks().contains(&p.target));
                }
            }
            let ins = (inward as u32).count_ones() as usize;
            // trivial paths, arrows, and one length-two path per (in-arm, out-arm) pair
            assert_eq!(q.all_paths().len(), 7 + ins * (3 - ins));
        }
    }
}
