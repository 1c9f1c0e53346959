use std::collections::HashMap;
use std::sync::Arc;

use super::{m_compatible, Face};
use crate::error::{Error, Result};
use crate::group::CoxeterGroup;
use crate::roots::{ColoredRoot, RootSystem};
use crate::triangles::IntPoly;

/// Face counts of `Δ^m(Φ)` split by the number `k` of colored positive
/// roots and `l` of negative simple roots.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ComplexSummary {
    pub n: usize,
    pub m: u32,
    /// `f[k][l]`, sized `(n+1) × (n+1)`.
    pub f: Vec<Vec<u64>>,
    /// Maximal faces, in enumeration order.
    pub facets: Vec<Face>,
}

impl ComplexSummary {
    pub fn f(&self, k: usize, l: usize) -> u64 {
        self.f.get(k).and_then(|row| row.get(l)).copied().unwrap_or(0)
    }

    /// `f_i`: faces with `i` vertices.
    pub fn by_size(&self) -> Vec<u64> {
        let mut out = vec![0; self.n + 1];
        for (k, row) in self.f.iter().enumerate() {
            for (l, &c) in row.iter().enumerate() {
                if k + l <= self.n {
                    out[k + l] += c;
                }
            }
        }
        out
    }

    pub fn facet_count(&self) -> usize {
        self.facets.len()
    }

    pub fn positive_facet_count(&self) -> usize {
        self.facets.iter().filter(|f| f.negative_count() == 0).count()
    }

    /// Whether every maximal face has `n` vertices.
    pub fn is_pure(&self) -> bool {
        self.facets.iter().all(|f| f.len() == self.n)
    }
}

/// The generalized cluster complex `Δ^m(Φ)` as a clique complex on the
/// colored almost positive roots.
pub struct ClusterComplex {
    group: Arc<CoxeterGroup>,
    m: u32,
    vertices: Vec<ColoredRoot>,
    index: HashMap<ColoredRoot, usize>,
    adjacent: Vec<bool>,
}

impl ClusterComplex {
    pub fn build(group: Arc<CoxeterGroup>, m: u32) -> Result<Self> {
        if m == 0 {
            return Err(Error::InvalidM(m));
        }
        let vertices = group.root_system().colored_vertices(m);
        let index = vertices.iter().enumerate().map(|(i, &v)| (v, i)).collect();
        let size = vertices.len();
        let mut adjacent = vec![false; size * size];
        for i in 0..size {
            for j in i + 1..size {
                let c = m_compatible(&group, vertices[i], vertices[j], m)?;
                adjacent[i * size + j] = c;
                adjacent[j * size + i] = c;
            }
        }
        Ok(ClusterComplex {
            group,
            m,
            vertices,
            index,
            adjacent,
        })
    }

    pub fn group(&self) -> &Arc<CoxeterGroup> {
        &self.group
    }

    pub fn root_system(&self) -> &Arc<RootSystem> {
        self.group.root_system()
    }

    pub fn m(&self) -> u32 {
        self.m
    }

    pub fn rank(&self) -> usize {
        self.root_system().rank()
    }

    /// Vertices in `≺` order, colors ascending within a root.
    pub fn vertices(&self) -> &[ColoredRoot] {
        &self.vertices
    }

    pub fn vertex_index(&self, v: &ColoredRoot) -> Option<usize> {
        self.index.get(v).copied()
    }

    pub fn adjacent(&self, i: usize, j: usize) -> bool {
        self.adjacent[i * self.vertices.len() + j]
    }

    fn indices(&self, face: &Face) -> Result<Vec<usize>> {
        face.validate(self.root_system(), self.m)?;
        let mut ids: Vec<usize> = face.members().iter().map(|v| self.index[v]).collect();
        ids.sort_unstable();
        Ok(ids)
    }

    pub fn is_face(&self, face: &Face) -> Result<bool> {
        let ids = self.indices(face)?;
        Ok(ids
            .iter()
            .enumerate()
            .all(|(k, &i)| ids[k + 1..].iter().all(|&j| self.adjacent(i, j))))
    }

    /// Calls `visit` on every face with at most `max_size` vertices drawn
    /// from vertices accepted by `allowed`, in lexicographic order of vertex
    /// indices. The flag passed along says whether the face is maximal among
    /// faces on the allowed vertices.
    pub fn for_each_face(&self, max_size: usize, allowed: impl Fn(usize) -> bool, mut visit: impl FnMut(&[usize], bool)) {
        let pool: Vec<usize> = (0..self.vertices.len()).filter(|&i| allowed(i)).collect();
        let mut clique = Vec::new();
        self.extend(&pool, 0, max_size, &mut clique, &mut visit);
    }

    fn extend(
        &self,
        pool: &[usize],
        start: usize,
        max_size: usize,
        clique: &mut Vec<usize>,
        visit: &mut impl FnMut(&[usize], bool),
    ) {
        let maximal = !pool
            .iter()
            .any(|&v| !clique.contains(&v) && clique.iter().all(|&u| self.adjacent(u, v)));
        visit(clique, maximal);
        if clique.len() == max_size {
            return;
        }
        for (k, &v) in pool.iter().enumerate().skip(start) {
            if clique.iter().all(|&u| self.adjacent(u, v)) {
                clique.push(v);
                self.extend(pool, k + 1, max_size, clique, visit);
                clique.pop();
            }
        }
    }

    fn face_of(&self, ids: &[usize]) -> Face {
        ids.iter().map(|&i| self.vertices[i]).collect()
    }

    /// Face counts up to `up_to_size` vertices (default `n`) and the maximal
    /// faces found within that bound.
    pub fn summary(&self, up_to_size: Option<usize>) -> ComplexSummary {
        let n = self.rank();
        let bound = up_to_size.unwrap_or(n);
        let mut f = vec![vec![0u64; n + 1]; n + 1];
        let mut facets = Vec::new();
        self.for_each_face(bound, |_| true, |ids, maximal| {
            let pos = ids.iter().filter(|&&i| self.vertices[i].is_positive()).count();
            let neg = ids.len() - pos;
            if pos <= n && neg <= n {
                f[pos][neg] += 1;
            }
            if maximal {
                facets.push(self.face_of(ids));
            }
        });
        ComplexSummary {
            n,
            m: self.m,
            f,
            facets,
        }
    }

    pub fn faces(&self, max_size: usize) -> Vec<Face> {
        let mut out = Vec::new();
        self.for_each_face(max_size, |_| true, |ids, _| out.push(self.face_of(ids)));
        out
    }

    /// Faces of `Δ^m_+`.
    pub fn positive_faces(&self) -> Vec<Face> {
        let mut out = Vec::new();
        self.for_each_face(self.rank(), |i| self.vertices[i].is_positive(), |ids, _| {
            out.push(self.face_of(ids))
        });
        out
    }

    /// `lk(σ) = {τ ∖ σ : σ ⊆ τ ∈ Δ}`.
    pub fn link(&self, face: &Face) -> Result<Vec<Face>> {
        if !self.is_face(face)? {
            return Err(Error::NotAFace);
        }
        let ids = self.indices(face)?;
        let mut out = Vec::new();
        self.for_each_face(
            self.rank() - ids.len(),
            |v| !ids.contains(&v) && ids.iter().all(|&u| self.adjacent(u, v)),
            |rest, _| out.push(self.face_of(rest)),
        );
        Ok(out)
    }

    /// `h(lk σ, y) = Σ f_i y^i (1-y)^{n'-i}` with `n' = n - |σ|`.
    pub fn link_h_polynomial(&self, face: &Face) -> Result<IntPoly> {
        let link = self.link(face)?;
        let dim = self.rank() - face.len();
        let mut counts = vec![0u64; dim + 1];
        for f in &link {
            counts[f.len()] += 1;
        }
        Ok(crate::triangles::h_from_counts(&counts))
    }
}
