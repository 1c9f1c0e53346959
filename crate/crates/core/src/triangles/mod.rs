//! Bivariate integer polynomials, the F- and M-triangles, h-polynomials,
//! generalized Catalan numbers and the F = M identity.

mod poly;
#[cfg(test)]
mod tests;

pub use poly::BiPoly;

use std::sync::Arc;

use num_integer::Integer as _;
use num_traits::{One, Zero};

use crate::cluster::{ClusterComplex, ComplexSummary};
use crate::error::{Error, Result};
use crate::exact::Scalar;
use crate::group::CoxeterGroup;
use crate::noncrossing::NcmPoset;
use crate::roots::RootSystem;
use crate::Integer;

/// Polynomial with arbitrary-precision integer coefficients.
pub type IntPoly = BiPoly<Integer>;

/// `F(x, y) = Σ f_{k,l} x^k y^l`.
pub fn f_triangle(summary: &ComplexSummary) -> IntPoly {
    let mut p = IntPoly::zero();
    for (k, row) in summary.f.iter().enumerate() {
        for (l, &c) in row.iter().enumerate() {
            p.add_term(k as u32, l as u32, Integer::from(c));
        }
    }
    p
}

/// `M(x, y) = Σ_{a ≤ b} μ(a, b) x^{rk b} y^{rk a}`.
pub fn m_triangle(poset: &NcmPoset) -> IntPoly {
    let mut p = IntPoly::zero();
    for (a, b, mu) in poset.mobius_pairs() {
        p.add_term(poset.rank(b) as u32, poset.rank(a) as u32, Integer::from(mu));
    }
    p
}

/// `Σ_{a ≤ b} μ(a, b) x^{rk b - rk a} y^{rk a}`.
pub fn m_triangle_shifted(poset: &NcmPoset) -> IntPoly {
    let mut p = IntPoly::zero();
    for (a, b, mu) in poset.mobius_pairs() {
        let (ra, rb) = (poset.rank(a) as u32, poset.rank(b) as u32);
        p.add_term(rb - ra, ra, Integer::from(mu));
    }
    p
}

/// `M(-x, -y/x)` for `M` in the form of [`m_triangle`]; fails if some term
/// has a higher power of `y` than of `x`.
pub fn substitute_m<T: Scalar>(m: &BiPoly<T>) -> Result<BiPoly<T>> {
    let mut out = BiPoly::zero();
    for (dx, dy, c) in m.terms() {
        if dy > dx {
            return Err(Error::Invariant(format!("term x^{dx} y^{dy} has negative x-degree after substitution")));
        }
        let c = if (dx + dy) % 2 == 0 { c.clone() } else { -c.clone() };
        out.add_term(dx - dy, dy, c);
    }
    Ok(out)
}

/// `(1-y)^n F((x+y)/(1-y), y/(1-y)) = Σ f_{k,l} (x+y)^k y^l (1-y)^{n-k-l}`.
pub fn lhs_transform<T: Scalar>(f: &BiPoly<T>, n: u32) -> Result<BiPoly<T>> {
    let x_plus_y = &BiPoly::x() + &BiPoly::y();
    let one_minus_y = &BiPoly::one() - &BiPoly::y();
    let mut out = BiPoly::zero();
    for (k, l, c) in f.terms() {
        if k + l > n {
            return Err(Error::DegreeOverflow { k, l, n });
        }
        let term = &(&x_plus_y.pow(k) * &BiPoly::monomial(0, l, c.clone())) * &one_minus_y.pow(n - k - l);
        out = &out + &term;
    }
    Ok(out)
}

/// `Σ_{a ≤ b} μ(a, b) (-x)^{rk b - rk a} y^{rk a}`.
pub fn rhs_transform(poset: &NcmPoset) -> IntPoly {
    let mut p = IntPoly::zero();
    for (a, b, mu) in poset.mobius_pairs() {
        let (ra, rb) = (poset.rank(a) as u32, poset.rank(b) as u32);
        let d = rb - ra;
        let c = if d % 2 == 0 { mu } else { -mu };
        p.add_term(d, ra, Integer::from(c));
    }
    p
}

/// `Σ_i f_i y^i (1-y)^{n-i}` with `n = counts.len() - 1`.
pub fn h_from_counts(counts: &[u64]) -> IntPoly {
    let n = counts.len().saturating_sub(1) as u32;
    let one_minus_y = &IntPoly::one() - &IntPoly::y();
    let mut out = IntPoly::zero();
    for (i, &c) in counts.iter().enumerate() {
        let i = i as u32;
        let term = &IntPoly::monomial(0, i, Integer::from(c)) * &one_minus_y.pow(n - i);
        out = &out + &term;
    }
    out
}

/// h-polynomial of a complex of dimension `n - 1` from its face counts.
pub fn h_polynomial(summary: &ComplexSummary, n: usize) -> IntPoly {
    let mut counts = summary.by_size();
    counts.resize(n + 1, 0);
    h_from_counts(&counts)
}

/// `Σ_w y^{rk w}`.
pub fn rank_generating_function(poset: &NcmPoset) -> IntPoly {
    IntPoly::from_terms(
        poset
            .rank_profile()
            .into_iter()
            .enumerate()
            .map(|(r, c)| (0, r as u32, Integer::from(c))),
    )
}

/// `N_m(Φ) = Π (e_i + mh + 1)/(e_i + 1)`, multiplied over components.
pub fn catalan_number(rs: &RootSystem, m: u32) -> Result<Integer> {
    if m == 0 {
        return Err(Error::InvalidM(m));
    }
    let mut num = Integer::one();
    let mut den = Integer::one();
    for comp in rs.components() {
        let h = comp.coxeter_number();
        for e in comp.exponents() {
            num *= Integer::from(e + m as usize * h + 1);
            den *= Integer::from(e + 1);
        }
    }
    let (q, r) = num.div_rem(&den);
    if !r.is_zero() {
        return Err(Error::NonIntegral(format!("{num}/{den}")));
    }
    Ok(q)
}

/// Both sides of the F = M identity for one `(Φ, m)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FmReport {
    pub holds: bool,
    pub lhs: IntPoly,
    pub rhs: IntPoly,
}

/// Builds `Δ^m(Φ)` and `NC_(m)(γ)` and compares
/// `(1-y)^n F((x+y)/(1-y), y/(1-y))` with `M(-x, -y/x)`.
pub fn verify_fm(group: Arc<CoxeterGroup>, m: u32) -> Result<FmReport> {
    let n = group.root_system().rank() as u32;
    let complex = ClusterComplex::build(group.clone(), m)?;
    let poset = NcmPoset::noncrossing(group, m)?;
    let lhs = lhs_transform(&f_triangle(&complex.summary(None)), n)?;
    let rhs = rhs_transform(&poset);
    Ok(FmReport {
        holds: lhs == rhs,
        lhs,
        rhs,
    })
}

/// `[deg_x, deg_y, "coefficient"]` triples.
pub fn poly_json<T: Scalar + std::fmt::Display>(p: &BiPoly<T>) -> Vec<(u32, u32, String)> {
    p.terms().map(|(dx, dy, c)| (dx, dy, c.to_string())).collect()
}
