//! The reflection group `W`: composition, absolute length and order, minimal
//! factorizations and absolute-order intervals `[1, w]`.

mod element;

pub use element::GroupElement;

use std::collections::{HashMap, HashSet};
use std::sync::{Arc, RwLock};

use crate::error::{Error, Result};
use crate::exact::Matrix;
use crate::roots::{RootId, RootSystem};
use crate::QVector;

/// A root system's reflection group with memoized lengths and intervals.
pub struct CoxeterGroup {
    rs: Arc<RootSystem>,
    reflections: Vec<GroupElement>,
    root_of: HashMap<GroupElement, RootId>,
    lengths: RwLock<HashMap<GroupElement, usize>>,
    intervals: RwLock<HashMap<GroupElement, Arc<[GroupElement]>>>,
}

impl CoxeterGroup {
    pub fn new(rs: Arc<RootSystem>) -> Self {
        let reflections: Vec<GroupElement> = rs.positive_roots().map(|r| rs.reflection(r)).collect();
        let root_of = reflections
            .iter()
            .enumerate()
            .map(|(i, t)| (t.clone(), RootId(i)))
            .collect();
        CoxeterGroup {
            rs,
            reflections,
            root_of,
            lengths: RwLock::new(HashMap::new()),
            intervals: RwLock::new(HashMap::new()),
        }
    }

    pub fn root_system(&self) -> &Arc<RootSystem> {
        &self.rs
    }

    pub fn identity(&self) -> GroupElement {
        self.rs.identity()
    }

    pub fn coxeter_element(&self) -> GroupElement {
        self.rs.bipartite_coxeter()
    }

    /// `R(α)` for a root id; `α` and `-α` give the same reflection.
    pub fn reflection(&self, root: RootId) -> Result<GroupElement> {
        if root.0 >= self.rs.num_roots() {
            return Err(Error::NotARoot);
        }
        Ok(self.reflections[self.rs.positive_part(root).0].clone())
    }

    /// `R(α)` for a coordinate vector, which must be a root.
    pub fn reflection_of(&self, v: &QVector) -> Result<GroupElement> {
        let root = self.rs.find(v).ok_or(Error::NotARoot)?;
        self.reflection(root)
    }

    /// All reflections, indexed like the positive roots.
    pub fn reflections(&self) -> &[GroupElement] {
        &self.reflections
    }

    /// The positive root of a reflection.
    pub fn reflection_root(&self, t: &GroupElement) -> Option<RootId> {
        self.root_of.get(t).copied()
    }

    pub fn compose(&self, a: &GroupElement, b: &GroupElement) -> Result<GroupElement> {
        self.check(a)?;
        a.try_compose(b)
    }

    pub fn inverse(&self, a: &GroupElement) -> Result<GroupElement> {
        self.check(a)?;
        Ok(a.inverse())
    }

    fn check(&self, a: &GroupElement) -> Result<()> {
        if a.system_id() == self.rs.id {
            Ok(())
        } else {
            Err(Error::MixedRootSystems)
        }
    }

    /// Absolute (reflection) length `l_T(w)`, computed as the codimension of
    /// the fixed space: `rank(w - I)`.
    pub fn absolute_length(&self, w: &GroupElement) -> usize {
        if let Some(&l) = self.lengths.read().unwrap().get(w) {
            return l;
        }
        let cols = self.rs.element_int_columns(w);
        let n = cols.len();
        let m = Matrix::<i128>::from_fn(n, n, |i, j| cols[j][i] as i128 - i128::from(i == j));
        let l = m.rank();
        self.lengths.write().unwrap().insert(w.clone(), l);
        l
    }

    /// `u ≤ v` iff `l_T(u) + l_T(u⁻¹v) = l_T(v)`.
    pub fn absolute_leq(&self, u: &GroupElement, v: &GroupElement) -> bool {
        let rest = &u.inverse() * v;
        self.absolute_length(u) + self.absolute_length(&rest) == self.absolute_length(v)
    }

    /// Whether `factors` multiply to `w` with additive absolute lengths.
    pub fn is_minimal_factorization(&self, factors: &[GroupElement], w: &GroupElement) -> bool {
        let product = factors.iter().fold(self.identity(), |acc, f| &acc * f);
        product == *w && factors.iter().map(|f| self.absolute_length(f)).sum::<usize>() == self.absolute_length(w)
    }

    /// All `u ≤ w` in absolute order, sorted by length and then permutation.
    pub fn below_interval(&self, w: &GroupElement) -> Arc<[GroupElement]> {
        if let Some(found) = self.intervals.read().unwrap().get(w) {
            return found.clone();
        }
        let top = self.absolute_length(w);
        let mut all = vec![self.identity()];
        let mut layer = vec![self.identity()];
        for k in 0..top {
            let mut next = HashSet::new();
            for u in &layer {
                for t in &self.reflections {
                    let v = u * t;
                    if !next.contains(&v) && self.absolute_length(&v) == k + 1 && self.absolute_leq(&v, w) {
                        next.insert(v);
                    }
                }
            }
            let mut next: Vec<GroupElement> = next.into_iter().collect();
            next.sort();
            all.extend(next.iter().cloned());
            layer = next;
        }
        let all: Arc<[GroupElement]> = all.into();
        self.intervals.write().unwrap().insert(w.clone(), all.clone());
        all
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn group(s: &str) -> CoxeterGroup {
        CoxeterGroup::new(Arc::new(s.parse().unwrap()))
    }

    #[test]
    fn reflections_and_coxeter_element() {
        let g = group("A1");
        let rs = g.root_system().clone();
        let s = g.reflection(RootId(0)).unwrap();
        assert_eq!(s.apply(RootId(0)), RootId(1));
        assert_eq!(s.apply(RootId(1)), RootId(0));
        assert_eq!(g.reflection(rs.negate(RootId(0))).unwrap(), s);
        assert_eq!(g.coxeter_element(), s);
        assert_eq!(g.coxeter_element().order(), 2);

        let g = group("A2");
        let rs = g.root_system().clone();
        let r1 = g.reflection(rs.simple_root(0)).unwrap();
        let r2 = g.reflection(rs.simple_root(1)).unwrap();
        let gamma = &r1 * &r2;
        assert_eq!(gamma, g.coxeter_element());
        assert_eq!(gamma.order(), 3);
        assert!(g.compose(&gamma, &gamma.inverse()).unwrap().is_identity());
        assert!(g.identity().is_identity());
        assert!(rs.roots().all(|r| g.identity().apply(r) == r));
    }

    #[test]
    fn mixing_systems_is_an_error() {
        let a = group("A2");
        let b = group("A2");
        let x = a.coxeter_element();
        let y = b.coxeter_element();
        assert_eq!(x.try_compose(&y), Err(Error::MixedRootSystems));
        assert_eq!(a.compose(&y, &y), Err(Error::MixedRootSystems));
        assert_eq!(a.reflection(RootId(99)), Err(Error::NotARoot));
    }

    #[test]
    fn lengths_and_order_in_a2() {
        let g = group("A2");
        let rs = g.root_system().clone();
        let gamma = g.coxeter_element();
        let r1 = g.reflection(rs.simple_root(0)).unwrap();
        assert_eq!(g.absolute_length(&g.identity()), 0);
        assert!(g.reflections().iter().all(|t| g.absolute_length(t) == 1));
        assert_eq!(g.absolute_length(&gamma), 2);
        assert!(g.absolute_leq(&gamma, &gamma));
        assert!(g.absolute_leq(&r1, &gamma));
        assert!(!g.absolute_leq(&gamma, &r1));
    }

    #[test]
    fn minimal_factorizations_in_a2() {
        let g = group("A2");
        let gamma = g.coxeter_element();
        let r1 = g.reflections()[0].clone();
        assert!(g.is_minimal_factorization(&[g.identity(), gamma.clone()], &gamma));
        assert!(!g.is_minimal_factorization(&[r1.clone(), r1.clone()], &g.identity()));
        let mut count = 0;
        for a in g.reflections() {
            for b in g.reflections() {
                if g.is_minimal_factorization(&[a.clone(), b.clone()], &gamma) {
                    count += 1;
                }
            }
        }
        assert_eq!(count, 3);
    }

    #[test]
    fn interval_sizes() {
        let g = group("A2");
        assert_eq!(g.below_interval(&g.identity()).len(), 1);
        assert_eq!(g.below_interval(&g.coxeter_element()).len(), 5);
        let g = group("B2");
        assert_eq!(g.below_interval(&g.coxeter_element()).len(), 6);
        let g = group("A3");
        assert_eq!(g.below_interval(&g.coxeter_element()).len(), 14);
    }
}
