use std::collections::HashMap;
use std::sync::Arc;

use serde::Serialize;

use super::lattice::{Cover, NcLattice};
use super::EdgeLabel;
use crate::error::{Error, Result};
use crate::group::{CoxeterGroup, GroupElement};

/// The m-divisible noncrossing partitions `NC_(m)(g)`: m-tuples of elements
/// of `[1, g]` whose product lies below `g` with additive lengths, ordered
/// componentwise.
///
/// Elements are sorted by rank and then by tuple, so index 0 is the bottom.
pub struct NcmPoset {
    nc: Arc<NcLattice>,
    m: u32,
    elements: Vec<Vec<usize>>,
    ranks: Vec<usize>,
    index: HashMap<Vec<usize>, usize>,
    covers: Vec<Cover<EdgeLabel>>,
    up: Vec<Vec<(usize, EdgeLabel)>>,
    leq: Vec<bool>,
    mobius: Vec<i64>,
}

impl NcmPoset {
    pub fn build(nc: Arc<NcLattice>, m: u32) -> Result<Self> {
        if m == 0 {
            return Err(Error::InvalidM(m));
        }
        let mut elements = Vec::new();
        let mut prefix = Vec::with_capacity(m as usize);
        for w in 0..nc.len() {
            factorizations(&nc, w, m, &mut prefix, &mut elements);
        }
        let rank_of = |t: &Vec<usize>| t.iter().map(|&i| nc.rank(i)).sum::<usize>();
        elements.sort_by(|a, b| rank_of(a).cmp(&rank_of(b)).then_with(|| a.cmp(b)));
        let ranks: Vec<usize> = elements.iter().map(rank_of).collect();
        let index: HashMap<Vec<usize>, usize> =
            elements.iter().enumerate().map(|(i, t)| (t.clone(), i)).collect();

        let mut covers = Vec::new();
        let mut up = vec![Vec::new(); elements.len()];
        for (a, tuple) in elements.iter().enumerate() {
            for slot in 0..m as usize {
                for &(next, root) in nc.up_covers(tuple[slot]) {
                    let mut t = tuple.clone();
                    t[slot] = next;
                    if let Some(&b) = index.get(&t) {
                        let label = EdgeLabel {
                            slot: slot as u32 + 1,
                            root,
                        };
                        covers.push(Cover {
                            lower: a,
                            upper: b,
                            label,
                        });
                        up[a].push((b, label));
                    }
                }
            }
        }

        let size = elements.len();
        let mut leq = vec![false; size * size];
        for a in 0..size {
            for b in a..size {
                leq[a * size + b] = elements[a].iter().zip(&elements[b]).all(|(&x, &y)| nc.leq(x, y));
            }
        }

        let mut mobius = vec![0i64; size * size];
        for a in 0..size {
            let above: Vec<usize> = (a..size).filter(|&b| leq[a * size + b]).collect();
            mobius[a * size + a] = 1;
            for (k, &b) in above.iter().enumerate().skip(1) {
                let s: i64 = above[..k]
                    .iter()
                    .filter(|&&z| leq[z * size + b])
                    .map(|&z| mobius[a * size + z])
                    .sum();
                mobius[a * size + b] = -s;
            }
        }

        Ok(NcmPoset {
            nc,
            m,
            elements,
            ranks,
            index,
            covers,
            up,
            leq,
            mobius,
        })
    }

    /// `NC_(m)(γ)` for the bipartite Coxeter element.
    pub fn noncrossing(group: Arc<CoxeterGroup>, m: u32) -> Result<Self> {
        if m == 0 {
            return Err(Error::InvalidM(m));
        }
        Self::build(Arc::new(NcLattice::noncrossing(group)), m)
    }

    pub fn lattice(&self) -> &Arc<NcLattice> {
        &self.nc
    }

    pub fn group(&self) -> &Arc<CoxeterGroup> {
        self.nc.group()
    }

    pub fn m(&self) -> u32 {
        self.m
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn bottom(&self) -> usize {
        0
    }

    /// The tuple of lattice indices of element `i`.
    pub fn tuple(&self, i: usize) -> &[usize] {
        &self.elements[i]
    }

    /// The tuple of group elements of element `i`.
    pub fn group_elements(&self, i: usize) -> Vec<GroupElement> {
        self.elements[i].iter().map(|&x| self.nc.element(x).clone()).collect()
    }

    /// The product `w_1 ⋯ w_m`.
    pub fn product(&self, i: usize) -> GroupElement {
        self.elements[i]
            .iter()
            .fold(self.group().identity(), |acc, &x| &acc * self.nc.element(x))
    }

    pub fn find(&self, tuple: &[GroupElement]) -> Option<usize> {
        let ids: Option<Vec<usize>> = tuple.iter().map(|g| self.nc.index_of(g)).collect();
        self.index.get(&ids?).copied()
    }

    pub fn find_indices(&self, tuple: &[usize]) -> Option<usize> {
        self.index.get(tuple).copied()
    }

    /// Membership tested from the definition: every entry and the product lie
    /// below the top element, and absolute lengths add up.
    pub fn contains_tuple(&self, tuple: &[GroupElement]) -> bool {
        let g = self.group();
        let top = self.nc.top();
        if tuple.len() != self.m as usize {
            return false;
        }
        let product = tuple.iter().fold(g.identity(), |acc, w| &acc * w);
        tuple.iter().all(|w| g.absolute_leq(w, top))
            && g.is_minimal_factorization(tuple, &product)
            && g.absolute_leq(&product, top)
    }

    pub fn rank(&self, i: usize) -> usize {
        self.ranks[i]
    }

    pub fn height(&self) -> usize {
        self.nc.height()
    }

    pub fn rank_profile(&self) -> Vec<usize> {
        let mut profile = vec![0; self.height() + 1];
        for &r in &self.ranks {
            profile[r] += 1;
        }
        profile
    }

    /// Elements of full rank: the minimal factorizations of the top element.
    pub fn maximal_elements(&self) -> Vec<usize> {
        let h = self.height();
        (0..self.len()).filter(|&i| self.ranks[i] == h).collect()
    }

    pub fn covers(&self) -> &[Cover<EdgeLabel>] {
        &self.covers
    }

    pub fn up_covers(&self, i: usize) -> &[(usize, EdgeLabel)] {
        &self.up[i]
    }

    /// Componentwise absolute order.
    pub fn leq(&self, a: usize, b: usize) -> bool {
        self.leq[a * self.len() + b]
    }

    /// Elements of `[a, b]` in index order.
    pub fn interval(&self, a: usize, b: usize) -> Result<Vec<usize>> {
        if !self.leq(a, b) {
            return Err(Error::NotComparable);
        }
        Ok((a..=b).filter(|&z| self.leq(a, z) && self.leq(z, b)).collect())
    }

    pub fn mobius(&self, a: usize, b: usize) -> Result<i64> {
        if !self.leq(a, b) {
            return Err(Error::NotComparable);
        }
        Ok(self.mobius[a * self.len() + b])
    }

    /// All comparable pairs `(a, b, μ(a, b))`.
    pub fn mobius_pairs(&self) -> impl Iterator<Item = (usize, usize, i64)> + '_ {
        let n = self.len();
        (0..n).flat_map(move |a| {
            (a..n)
                .filter(move |&b| self.leq(a, b))
                .map(move |b| (a, b, self.mobius[a * n + b]))
        })
    }

    /// `(-1)^{rk w} μ(0̂, w)`.
    pub fn positive_facet_count_via_mobius(&self, w: usize) -> Result<u64> {
        let mu = self.mobius(self.bottom(), w)?;
        let signed = if self.ranks[w] % 2 == 0 { mu } else { -mu };
        u64::try_from(signed).map_err(|_| Error::Invariant(format!("negative signed Möbius value {signed}")))
    }

    /// A serializable snapshot of the poset.
    pub fn export(&self) -> PosetExport {
        let rs = self.group().root_system();
        PosetExport {
            system: rs.spec().to_string(),
            m: self.m,
            nc_elements: self.nc.elements().iter().map(|g| g.perm().to_vec()).collect(),
            elements: self.elements.clone(),
            ranks: self.ranks.clone(),
            covers: self
                .covers
                .iter()
                .map(|c| CoverExport {
                    lower: c.lower,
                    upper: c.upper,
                    label: LabelExport {
                        slot: c.label.slot,
                        root_index: c.label.root.0 + 1,
                    },
                })
                .collect(),
        }
    }
}

fn factorizations(nc: &NcLattice, w: usize, slots: u32, prefix: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
    if slots == 1 {
        prefix.push(w);
        out.push(prefix.clone());
        prefix.pop();
        return;
    }
    let target = nc.element(w);
    for first in 0..nc.len() {
        if !nc.leq(first, w) {
            continue;
        }
        let rest = &nc.element(first).inverse() * target;
        let rest = nc.index_of(&rest).expect("u⁻¹w lies below w");
        prefix.push(first);
        factorizations(nc, rest, slots - 1, prefix, out);
        prefix.pop();
    }
}

/// JSON shape of an exported poset. `ncElements` are root permutations,
/// `elements` index into them.
#[derive(Clone, Debug, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct PosetExport {
    pub system: String,
    pub m: u32,
    pub nc_elements: Vec<Vec<u16>>,
    pub elements: Vec<Vec<usize>>,
    pub ranks: Vec<usize>,
    pub covers: Vec<CoverExport>,
}

#[derive(Clone, Debug, Serialize)]
pub struct CoverExport {
    pub lower: usize,
    pub upper: usize,
    pub label: LabelExport,
}

#[derive(Clone, Debug, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct LabelExport {
    pub slot: u32,
    pub root_index: usize,
}
