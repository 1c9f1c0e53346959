use std::collections::HashMap;
use std::sync::Arc;

use crate::group::{CoxeterGroup, GroupElement};
use crate::roots::RootId;

/// A cover `lower → upper` with `upper = lower · R(label)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Cover<L> {
    pub lower: usize,
    pub upper: usize,
    pub label: L,
}

/// The absolute-order interval `[1, top]`. With `top = γ` this is the
/// noncrossing partition lattice `NC(γ)`.
pub struct NcLattice {
    group: Arc<CoxeterGroup>,
    top: GroupElement,
    elements: Vec<GroupElement>,
    index: HashMap<GroupElement, usize>,
    ranks: Vec<usize>,
    covers: Vec<Cover<RootId>>,
    up: Vec<Vec<(usize, RootId)>>,
    leq: Vec<bool>,
}

impl NcLattice {
    /// Builds `[1, top]`. Covers are labeled by the positive root of the
    /// reflection `u⁻¹v`.
    pub fn build(group: Arc<CoxeterGroup>, top: GroupElement) -> Self {
        let elements: Vec<GroupElement> = group.below_interval(&top).to_vec();
        let index: HashMap<GroupElement, usize> =
            elements.iter().enumerate().map(|(i, g)| (g.clone(), i)).collect();
        let ranks: Vec<usize> = elements.iter().map(|g| group.absolute_length(g)).collect();
        let mut covers = Vec::new();
        let mut up = vec![Vec::new(); elements.len()];
        for (i, u) in elements.iter().enumerate() {
            for (k, t) in group.reflections().iter().enumerate() {
                let v = u * t;
                if let Some(&j) = index.get(&v) {
                    if ranks[j] == ranks[i] + 1 {
                        covers.push(Cover {
                            lower: i,
                            upper: j,
                            label: RootId(k),
                        });
                        up[i].push((j, RootId(k)));
                    }
                }
            }
        }
        let size = elements.len();
        let mut leq = vec![false; size * size];
        for i in 0..size {
            for j in 0..size {
                leq[i * size + j] = ranks[i] <= ranks[j] && group.absolute_leq(&elements[i], &elements[j]);
            }
        }
        NcLattice {
            group,
            top,
            elements,
            index,
            ranks,
            covers,
            up,
            leq,
        }
    }

    /// `NC(γ)` for the bipartite Coxeter element.
    pub fn noncrossing(group: Arc<CoxeterGroup>) -> Self {
        let gamma = group.coxeter_element();
        Self::build(group, gamma)
    }

    pub fn group(&self) -> &Arc<CoxeterGroup> {
        &self.group
    }

    pub fn top(&self) -> &GroupElement {
        &self.top
    }

    pub fn top_index(&self) -> usize {
        self.index[&self.top]
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn elements(&self) -> &[GroupElement] {
        &self.elements
    }

    pub fn element(&self, i: usize) -> &GroupElement {
        &self.elements[i]
    }

    pub fn index_of(&self, g: &GroupElement) -> Option<usize> {
        self.index.get(g).copied()
    }

    pub fn rank(&self, i: usize) -> usize {
        self.ranks[i]
    }

    /// Rank of the top element (`n` for a Coxeter element).
    pub fn height(&self) -> usize {
        self.group.absolute_length(&self.top)
    }

    pub fn covers(&self) -> &[Cover<RootId>] {
        &self.covers
    }

    pub fn up_covers(&self, i: usize) -> &[(usize, RootId)] {
        &self.up[i]
    }

    pub fn leq(&self, i: usize, j: usize) -> bool {
        self.leq[i * self.elements.len() + j]
    }

    /// A reflection word for every element: the labels along the first
    /// maximal chain from the bottom reached through the cover list.
    pub fn words(&self) -> Vec<Vec<RootId>> {
        let mut words: Vec<Option<Vec<RootId>>> = vec![None; self.len()];
        words[0] = Some(Vec::new());
        for c in &self.covers {
            if words[c.upper].is_none() {
                if let Some(w) = words[c.lower].clone() {
                    let mut w = w;
                    w.push(c.label);
                    words[c.upper] = Some(w);
                }
            }
        }
        words.into_iter().map(|w| w.expect("every element lies above the bottom")).collect()
    }

    /// Number of elements of each rank.
    pub fn rank_profile(&self) -> Vec<usize> {
        let mut profile = vec![0; self.height() + 1];
        for &r in &self.ranks {
            profile[r] += 1;
        }
        profile
    }
}
