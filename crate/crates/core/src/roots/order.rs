use super::{RootId, RootSystem};
use crate::error::{Error, Result};
use crate::{QMatrix, QVector, Rational};

/// A vertex of the generalized cluster complex: a positive root carrying a
/// color in `1..=m`, or a negative simple root (implicitly colored 1).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ColoredRoot {
    Positive { root: RootId, color: u32 },
    NegativeSimple { simple: usize },
}

impl ColoredRoot {
    pub fn positive(root: RootId, color: u32) -> Self {
        ColoredRoot::Positive { root, color }
    }

    pub fn negative(simple: usize) -> Self {
        ColoredRoot::NegativeSimple { simple }
    }

    /// The underlying almost positive root.
    pub fn root(&self, rs: &RootSystem) -> RootId {
        match *self {
            ColoredRoot::Positive { root, .. } => root,
            ColoredRoot::NegativeSimple { simple } => rs.negate(rs.simple_root(simple)),
        }
    }

    pub fn color(&self) -> u32 {
        match *self {
            ColoredRoot::Positive { color, .. } => color,
            ColoredRoot::NegativeSimple { .. } => 1,
        }
    }

    pub fn is_positive(&self) -> bool {
        matches!(self, ColoredRoot::Positive { .. })
    }

    /// Colors an almost positive root; negative simples ignore `color`.
    pub fn from_root(rs: &RootSystem, root: RootId, color: u32) -> Result<Self> {
        if rs.is_positive(root) {
            Ok(ColoredRoot::positive(root, color))
        } else {
            rs.negative_simple_index(root)
                .map(ColoredRoot::negative)
                .ok_or(Error::NotAlmostPositive(root.0))
        }
    }

    pub fn validate(&self, rs: &RootSystem, m: u32) -> Result<()> {
        match *self {
            ColoredRoot::Positive { root, color } => {
                if !rs.is_positive(root) {
                    return Err(Error::NotAlmostPositive(root.0));
                }
                if color == 0 || color > m {
                    return Err(Error::ColorOutOfRange { color, m });
                }
            }
            ColoredRoot::NegativeSimple { simple } => {
                if simple >= rs.rank() {
                    return Err(Error::NotAlmostPositive(simple));
                }
            }
        }
        Ok(())
    }
}

impl RootSystem {
    /// Almost positive roots `Φ_{≥-1}` in the total order `≺`: per
    /// component, `-Π₋`, then `Φ⁺` in `ρ`-order, then `-Π₊`.
    pub fn almost_positive(&self) -> &[RootId] {
        &self.order
    }

    pub fn is_almost_positive(&self, root: RootId) -> bool {
        self.position.get(root.0).is_some_and(Option::is_some)
    }

    /// Position of an almost positive root in `≺`.
    pub fn position(&self, root: RootId) -> Result<usize> {
        self.position
            .get(root.0)
            .copied()
            .flatten()
            .ok_or(Error::NotAlmostPositive(root.0))
    }

    /// `a ≺ b`.
    pub fn precedes(&self, a: RootId, b: RootId) -> Result<bool> {
        Ok(self.position(a)? < self.position(b)?)
    }

    /// The global `ρ`-index (1-based) of a positive root.
    pub fn rho_index(&self, root: RootId) -> Option<usize> {
        self.is_positive(root).then_some(root.0 + 1)
    }

    /// Rotation `R`: `-α` on `Π₊ ∪ (-Π₋)`, `γ⁻¹(α)` elsewhere.
    pub fn rotation(&self, root: RootId) -> Result<RootId> {
        self.position(root)?;
        let flips = match self.simple_index(root) {
            Some(j) => self.is_in_plus(j),
            None => self.negative_simple_index(root).is_some_and(|j| !self.is_in_plus(j)),
        };
        Ok(if flips {
            self.negate(root)
        } else {
            self.gamma_inverse().apply(root)
        })
    }

    /// Number of rotations needed to reach a negative simple root.
    pub fn degree(&self, root: RootId) -> Result<usize> {
        let mut cur = root;
        let mut d = 0;
        while self.negative_simple_index(cur).is_none() {
            cur = self.rotation(cur)?;
            d += 1;
            if d > 2 * self.num_roots() + 2 {
                return Err(Error::Invariant("rotation orbit misses -Π".into()));
            }
        }
        Ok(d)
    }

    /// Colored rotation `R_m`: bump the color of a positive root below `m`,
    /// otherwise rotate and reset the color to 1.
    pub fn rotation_m(&self, cr: ColoredRoot, m: u32) -> Result<ColoredRoot> {
        cr.validate(self, m)?;
        match cr {
            ColoredRoot::Positive { root, color } if color < m => Ok(ColoredRoot::positive(root, color + 1)),
            _ => {
                let next = self.rotation(cr.root(self))?;
                ColoredRoot::from_root(self, next, 1)
            }
        }
    }

    /// `Φ^m_{≥-1}` sorted by `≺`, colors ascending within a root.
    pub fn colored_vertices(&self, m: u32) -> Vec<ColoredRoot> {
        let mut out = Vec::new();
        for &r in &self.order {
            if self.is_positive(r) {
                out.extend((1..=m).map(|c| ColoredRoot::positive(r, c)));
            } else {
                out.push(ColoredRoot::negative(self.negative_simple_index(r).unwrap()));
            }
        }
        out
    }

    pub fn gamma_matrix(&self) -> QMatrix {
        self.element_matrix(&self.gamma)
    }

    /// `μ = 2(I - γ)⁻¹`.
    pub fn mu_map(&self) -> Result<&QMatrix> {
        if let Some(mu) = self.mu.get() {
            return Ok(mu);
        }
        let n = self.rank();
        let diff = &QMatrix::identity(n) - &self.gamma_matrix();
        let mu = diff.inverse()?.scale(&Rational::from_integer(2.into()));
        Ok(self.mu.get_or_init(|| mu))
    }

    /// `μ(a)·b`.
    pub fn mu_dot(&self, a: RootId, b: RootId) -> Result<Rational> {
        let mu_a: QVector = self.mu_map()?.apply(self.root(a));
        Ok(self.gram.bilinear(&mu_a, self.root(b)))
    }
}
