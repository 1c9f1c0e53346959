use crate::error::{Error, Result};
use crate::group::CoxeterGroup;
use crate::roots::{ColoredRoot, RootId, RootSystem};
use num_traits::Zero;

fn ordered(rs: &RootSystem, a: RootId, b: RootId) -> Result<(RootId, RootId)> {
    if a == b {
        return Err(Error::EqualRoots);
    }
    Ok(if rs.precedes(a, b)? { (a, b) } else { (b, a) })
}

/// Noncolored compatibility of two distinct almost positive roots: for
/// `a ≺ b`, whether `R(b)R(a)` is a reflection-length-2 element below `γ`.
pub fn compatible(group: &CoxeterGroup, a: RootId, b: RootId) -> Result<bool> {
    let rs = group.root_system();
    let (early, late) = ordered(rs, a, b)?;
    let w = &group.reflection(late)? * &group.reflection(early)?;
    let gamma = group.coxeter_element();
    Ok(group.absolute_length(&w) == 2 && group.absolute_leq(&w, &gamma))
}

/// Compatibility through the μ-map: for `a ≺ b` not parallel,
/// `μ(b)·a = 0`.
pub fn compatible_by_mu(rs: &RootSystem, a: RootId, b: RootId) -> Result<bool> {
    let (early, late) = ordered(rs, a, b)?;
    if rs.positive_part(early) == rs.positive_part(late) {
        return Ok(false);
    }
    Ok(rs.mu_dot(late, early)?.is_zero())
}

/// Compatibility by rotating both roots until one is a negative simple
/// `-σ_i`, then asking whether the other avoids `σ_i`.
pub fn compatible_by_rotation(rs: &RootSystem, a: RootId, b: RootId) -> Result<bool> {
    ordered(rs, a, b)?;
    if rs.component_of(a) != rs.component_of(b) {
        return Ok(true);
    }
    let (mut a, mut b) = (a, b);
    for _ in 0..=2 * rs.num_roots() {
        if let Some(i) = rs.negative_simple_index(a) {
            return Ok(avoids(rs, b, i));
        }
        if let Some(i) = rs.negative_simple_index(b) {
            return Ok(avoids(rs, a, i));
        }
        a = rs.rotation(a)?;
        b = rs.rotation(b)?;
    }
    Err(Error::Invariant("rotation never reached a negative simple root".into()))
}

fn avoids(rs: &RootSystem, root: RootId, simple: usize) -> bool {
    match rs.negative_simple_index(root) {
        Some(j) => j != simple,
        None => rs.coords(root)[simple] == 0,
    }
}

/// m-compatibility of two distinct colored roots, case by case on colors
/// and degrees.
pub fn m_compatible(group: &CoxeterGroup, a: ColoredRoot, b: ColoredRoot, m: u32) -> Result<bool> {
    let rs = group.root_system();
    a.validate(rs, m)?;
    b.validate(rs, m)?;
    if a == b {
        return Err(Error::EqualRoots);
    }
    let (ra, rb) = (a.root(rs), b.root(rs));
    if rs.component_of(ra) != rs.component_of(rb) {
        return Ok(true);
    }
    let (k, l) = (a.color(), b.color());
    let (da, db) = (rs.degree(ra)?, rs.degree(rb)?);
    if k == l {
        return compatible(group, ra, rb);
    }
    match (k > l, da.cmp(&db)) {
        (true, std::cmp::Ordering::Greater) | (false, std::cmp::Ordering::Less) => compatible(group, ra, rb),
        (true, _) => compatible(group, rs.rotation(ra)?, rb),
        (false, _) => compatible(group, ra, rs.rotation(rb)?),
    }
}

/// m-compatibility by rotating both arguments with `R_m` until one is a
/// negative simple root.
pub fn m_compatible_by_rotation(rs: &RootSystem, a: ColoredRoot, b: ColoredRoot, m: u32) -> Result<bool> {
    a.validate(rs, m)?;
    b.validate(rs, m)?;
    if a == b {
        return Err(Error::EqualRoots);
    }
    if rs.component_of(a.root(rs)) != rs.component_of(b.root(rs)) {
        return Ok(true);
    }
    let (mut a, mut b) = (a, b);
    for _ in 0..=2 * (m as usize + 1) * rs.num_roots() {
        if let ColoredRoot::NegativeSimple { simple } = a {
            return Ok(avoids(rs, b.root(rs), simple));
        }
        if let ColoredRoot::NegativeSimple { simple } = b {
            return Ok(avoids(rs, a.root(rs), simple));
        }
        a = rs.rotation_m(a, m)?;
        b = rs.rotation_m(b, m)?;
    }
    Err(Error::Invariant("colored rotation never reached a negative simple root".into()))
}
