use std::fmt;
use std::ops::Mul;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::roots::RootId;

/// An element of the reflection group, stored as the permutation it induces
/// on the indexed root set of its root system.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GroupElement {
    system: u32,
    perm: Arc<[u16]>,
}

impl GroupElement {
    pub(crate) fn from_perm(system: u32, perm: Vec<u16>) -> Self {
        GroupElement {
            system,
            perm: perm.into(),
        }
    }

    pub(crate) fn identity_on(system: u32, roots: usize) -> Self {
        Self::from_perm(system, (0..roots as u16).collect())
    }

    pub(crate) fn system_id(&self) -> u32 {
        self.system
    }

    /// The image of every root index.
    pub fn perm(&self) -> &[u16] {
        &self.perm
    }

    pub fn apply(&self, root: RootId) -> RootId {
        RootId(self.perm[root.0] as usize)
    }

    pub fn is_identity(&self) -> bool {
        self.perm.iter().enumerate().all(|(i, &p)| i == p as usize)
    }

    /// `self ∘ other`: apply `other` first.
    pub fn try_compose(&self, other: &GroupElement) -> Result<GroupElement> {
        if self.system != other.system || self.perm.len() != other.perm.len() {
            return Err(Error::MixedRootSystems);
        }
        Ok(GroupElement::from_perm(
            self.system,
            other.perm.iter().map(|&i| self.perm[i as usize]).collect(),
        ))
    }

    pub fn inverse(&self) -> GroupElement {
        let mut inv = vec![0u16; self.perm.len()];
        for (i, &p) in self.perm.iter().enumerate() {
            inv[p as usize] = i as u16;
        }
        GroupElement::from_perm(self.system, inv)
    }

    /// Smallest `k ≥ 1` with `self^k = 1`.
    pub fn order(&self) -> usize {
        let mut k = 1;
        let mut power = self.clone();
        while !power.is_identity() {
            power = &power * self;
            k += 1;
        }
        k
    }

    /// `g self g⁻¹`.
    pub fn conjugate_by(&self, g: &GroupElement) -> GroupElement {
        &(g * self) * &g.inverse()
    }
}

impl Mul for &GroupElement {
    type Output = GroupElement;

    /// Composition `self ∘ rhs`. Panics if the operands come from different
    /// root systems; use [`GroupElement::try_compose`] to get an error instead.
    fn mul(self, rhs: &GroupElement) -> GroupElement {
        self.try_compose(rhs).expect("group elements from different root systems")
    }
}

impl fmt::Debug for GroupElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        // cycle notation on root indices
        let n = self.perm.len();
        let mut seen = vec![false; n];
        let mut out = String::new();
        for start in 0..n {
            if seen[start] || self.perm[start] as usize == start {
                continue;
            }
            out.push('(');
            let mut i = start;
            let mut first = true;
            while !seen[i] {
                seen[i] = true;
                if !first {
                    out.push(' ');
                }
                first = false;
                out.push_str(&i.to_string());
                i = self.perm[i] as usize;
            }
            out.push(')');
        }
        if out.is_empty() {
            out.push('1');
        }
        write!(f, "GroupElement{out}")
    }
}
