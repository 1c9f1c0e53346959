use super::Face;
use crate::error::{Error, Result};
use crate::group::{CoxeterGroup, GroupElement};
use crate::noncrossing::NcmPoset;
use crate::roots::{ColoredRoot, RootId};

/// `w_S`: the product of `R(α)` over a part, factors in decreasing `≺`
/// order. The part must consist of negative simple roots only, or of
/// positive roots of a single color.
pub fn w_of_part(group: &CoxeterGroup, part: &[ColoredRoot]) -> Result<GroupElement> {
    part_factors(group, part)?
        .iter()
        .try_fold(group.identity(), |acc, &r| Ok(&acc * &group.reflection(r)?))
}

fn part_factors(group: &CoxeterGroup, part: &[ColoredRoot]) -> Result<Vec<RootId>> {
    let rs = group.root_system();
    if let Some(first) = part.first() {
        let uniform = part
            .iter()
            .all(|v| v.is_positive() == first.is_positive() && v.color() == first.color());
        if !uniform {
            return Err(Error::MixedPart);
        }
    }
    let mut roots = Vec::with_capacity(part.len());
    for v in part {
        roots.push((rs.position(v.root(rs))?, v.root(rs)));
    }
    roots.sort_unstable_by(|a, b| b.cmp(a));
    Ok(roots.into_iter().map(|(_, r)| r).collect())
}

/// The roots multiplied in each slot of [`face_tuple`], left to right.
/// Negative simple roots appear as themselves.
pub fn face_tuple_factors(group: &CoxeterGroup, face: &Face, m: u32) -> Result<Vec<Vec<RootId>>> {
    let rs = group.root_system();
    face.validate(rs, m)?;
    let (mut plus, mut minus) = (Vec::new(), Vec::new());
    let mut colors = vec![Vec::new(); m as usize];
    for &v in face.members() {
        match v {
            ColoredRoot::NegativeSimple { simple } if rs.is_in_plus(simple) => plus.push(v),
            ColoredRoot::NegativeSimple { .. } => minus.push(v),
            ColoredRoot::Positive { color, .. } => colors[color as usize - 1].push(v),
        }
    }
    let mut slots: Vec<Vec<RootId>> = (0..m as usize)
        .map(|slot| part_factors(group, &colors[m as usize - 1 - slot]))
        .collect::<Result<_>>()?;
    let mut first = part_factors(group, &plus)?;
    first.append(&mut slots[0]);
    slots[0] = first;
    let last = m as usize - 1;
    slots[last].extend(part_factors(group, &minus)?);
    Ok(slots)
}

/// The m-tuple `(w_{σ₊} w_{σ^m}, w_{σ^{m-1}}, …, w_{σ^2}, w_{σ^1} w_{σ₋})`,
/// where `σ₊`, `σ₋` are the members in `-Π₊`, `-Π₋` and `σ^i` the positive
/// members of color `i`.
pub fn face_tuple(group: &CoxeterGroup, face: &Face, m: u32) -> Result<Vec<GroupElement>> {
    face_tuple_factors(group, face, m)?
        .iter()
        .map(|roots| roots.iter().try_fold(group.identity(), |acc, &r| Ok(&acc * &group.reflection(r)?)))
        .collect()
}

/// `w_σ`, the product of [`face_tuple`].
pub fn face_element(group: &CoxeterGroup, face: &Face, m: u32) -> Result<GroupElement> {
    Ok(face_tuple(group, face, m)?
        .iter()
        .fold(group.identity(), |acc, w| &acc * w))
}

/// Whether [`face_tuple`] is an element of `NC_(m)(γ)` of rank `|σ|`.
pub fn face_by_ncm_criterion(ncm: &NcmPoset, face: &Face) -> Result<bool> {
    let group = ncm.group();
    let tuple = face_tuple(group, face, ncm.m())?;
    let rank: usize = tuple.iter().map(|w| group.absolute_length(w)).sum();
    Ok(rank == face.len() && ncm.contains_tuple(&tuple))
}

/// Facets of `Δ^m_+(w)`: the faces of `Δ^m_+` on the colored roots `α^c`
/// with `R(α) ≤ w_{m-c+1}`, with faces recognized through
/// [`face_by_ncm_criterion`].
pub fn positive_subcomplex_facets(ncm: &NcmPoset, w: usize) -> Result<Vec<Face>> {
    let group = ncm.group();
    let rs = group.root_system();
    let m = ncm.m();
    let ws = ncm.group_elements(w);
    let mut pool = Vec::new();
    for r in rs.positive_roots() {
        let t = group.reflection(r)?;
        for c in 1..=m {
            if group.absolute_leq(&t, &ws[(m - c) as usize]) {
                pool.push(ColoredRoot::positive(r, c));
            }
        }
    }
    let mut facets = Vec::new();
    let mut chosen = Vec::new();
    grow(ncm, &pool, 0, &mut chosen, &mut facets)?;
    Ok(facets)
}

fn grow(
    ncm: &NcmPoset,
    pool: &[ColoredRoot],
    start: usize,
    chosen: &mut Vec<ColoredRoot>,
    facets: &mut Vec<Face>,
) -> Result<()> {
    let mut extendable = false;
    for (k, &v) in pool.iter().enumerate() {
        if chosen.contains(&v) {
            continue;
        }
        chosen.push(v);
        let ok = face_by_ncm_criterion(ncm, &Face::new(chosen.iter().copied()))?;
        if ok {
            extendable = true;
            if k >= start {
                grow(ncm, pool, k + 1, chosen, facets)?;
            }
        }
        chosen.pop();
    }
    if !extendable {
        facets.push(Face::new(chosen.iter().copied()));
    }
    Ok(())
}
