use std::cmp::Ordering;

use super::NcmPoset;
use crate::cluster::Face;
use crate::error::{Error, Result};
use crate::roots::{ColoredRoot, RootId};

/// Label of a cover of `NC_(m)`: the slot (1-based) that moved and the
/// positive root of the reflection it moved by.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct EdgeLabel {
    pub slot: u32,
    pub root: RootId,
}

/// A saturated chain with the labels of its covers.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Chain {
    pub elements: Vec<usize>,
    pub labels: Vec<EdgeLabel>,
}

impl NcmPoset {
    /// Label order: a higher slot is smaller; within a slot, roots compare
    /// by `≺`.
    pub fn compare_labels(&self, a: &EdgeLabel, b: &EdgeLabel) -> Ordering {
        let rs = self.group().root_system();
        b.slot.cmp(&a.slot).then_with(|| {
            let pa = rs.position(a.root).expect("labels are positive roots");
            let pb = rs.position(b.root).expect("labels are positive roots");
            pa.cmp(&pb)
        })
    }

    /// All maximal chains of `[a, b]`.
    pub fn maximal_chains(&self, a: usize, b: usize) -> Result<Vec<Chain>> {
        self.chains_where(a, b, |_, _| true)
    }

    /// Maximal chains of `[a, b]` with weakly decreasing labels.
    pub fn falling_chains(&self, a: usize, b: usize) -> Result<Vec<Chain>> {
        self.chains_where(a, b, |prev, next| self.compare_labels(next, prev) != Ordering::Greater)
    }

    /// Falling chains from the bottom to every element of full rank.
    pub fn maximal_falling_chains(&self) -> Vec<Chain> {
        self.maximal_elements()
            .into_iter()
            .flat_map(|w| self.falling_chains(self.bottom(), w).expect("bottom is below everything"))
            .collect()
    }

    fn chains_where(
        &self,
        a: usize,
        b: usize,
        step_ok: impl Fn(&EdgeLabel, &EdgeLabel) -> bool,
    ) -> Result<Vec<Chain>> {
        if !self.leq(a, b) {
            return Err(Error::NotComparable);
        }
        let mut out = Vec::new();
        let mut chain = Chain {
            elements: vec![a],
            labels: Vec::new(),
        };
        self.extend_chains(b, &step_ok, &mut chain, &mut out);
        Ok(out)
    }

    fn extend_chains(
        &self,
        b: usize,
        step_ok: &impl Fn(&EdgeLabel, &EdgeLabel) -> bool,
        chain: &mut Chain,
        out: &mut Vec<Chain>,
    ) {
        let cur = *chain.elements.last().unwrap();
        if cur == b {
            out.push(chain.clone());
            return;
        }
        for &(next, label) in self.up_covers(cur) {
            if !self.leq(next, b) || chain.labels.last().is_some_and(|prev| !step_ok(prev, &label)) {
                continue;
            }
            chain.elements.push(next);
            chain.labels.push(label);
            self.extend_chains(b, step_ok, chain, out);
            chain.elements.pop();
            chain.labels.pop();
        }
    }

    /// Checks every interval for a unique strictly rising maximal chain that
    /// is also lexicographically first.
    pub fn is_el_labeling(&self) -> bool {
        self.is_el_labeling_by(|a, b| self.compare_labels(a, b))
    }

    /// [`NcmPoset::is_el_labeling`] for an arbitrary label order.
    pub fn is_el_labeling_by(&self, cmp: impl Fn(&EdgeLabel, &EdgeLabel) -> Ordering) -> bool {
        let lex = |x: &[EdgeLabel], y: &[EdgeLabel]| {
            x.iter()
                .zip(y)
                .map(|(p, q)| cmp(p, q))
                .find(|o| *o != Ordering::Equal)
                .unwrap_or(Ordering::Equal)
        };
        for a in 0..self.len() {
            for b in a + 1..self.len() {
                if !self.leq(a, b) {
                    continue;
                }
                let chains = self.maximal_chains(a, b).unwrap();
                let rising: Vec<&Chain> = chains
                    .iter()
                    .filter(|c| c.labels.windows(2).all(|w| cmp(&w[0], &w[1]) == Ordering::Less))
                    .collect();
                if rising.len() != 1 {
                    return false;
                }
                let first = &rising[0].labels;
                if chains
                    .iter()
                    .any(|c| c.elements != rising[0].elements && lex(&c.labels, first) != Ordering::Greater)
                {
                    return false;
                }
            }
        }
        true
    }

    /// Sends a maximal falling chain from the bottom to the face whose
    /// color-`c` part collects the roots labeled in slot `m - c + 1`.
    pub fn chain_to_facet(&self, chain: &Chain) -> Result<Face> {
        if chain.elements.is_empty() && chain.labels.is_empty() {
            return Ok(Face::empty());
        }
        if chain.elements.first() != Some(&self.bottom()) || chain.elements.len() != chain.labels.len() + 1 {
            return Err(Error::NotFalling);
        }
        for (k, label) in chain.labels.iter().enumerate() {
            let (lo, hi) = (chain.elements[k], chain.elements[k + 1]);
            if !self.up_covers(lo).contains(&(hi, *label)) {
                return Err(Error::NotFalling);
            }
            if k > 0 && self.compare_labels(label, &chain.labels[k - 1]) == Ordering::Greater {
                return Err(Error::NotFalling);
            }
        }
        Ok(chain
            .labels
            .iter()
            .map(|l| ColoredRoot::positive(l.root, self.m() - l.slot + 1))
            .collect())
    }
}
