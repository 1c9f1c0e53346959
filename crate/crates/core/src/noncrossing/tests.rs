use std::cmp::Ordering;
use std::sync::Arc;

use super::*;
use crate::group::CoxeterGroup;
use crate::roots::{ColoredRoot, RootId};

fn group(s: &str) -> Arc<CoxeterGroup> {
    Arc::new(CoxeterGroup::new(Arc::new(s.parse().unwrap())))
}

fn poset(s: &str, m: u32) -> NcmPoset {
    NcmPoset::noncrossing(group(s), m).unwrap()
}

/// Renders a label as an m-tuple such as `(1,R3)`.
fn render(p: &NcmPoset, l: &EdgeLabel) -> String {
    let slots: Vec<String> = (1..=p.m())
        .map(|s| if s == l.slot { format!("R{}", l.root.0 + 1) } else { "1".into() })
        .collect();
    format!("({})", slots.join(","))
}

#[test]
fn sizes_and_profiles() {
    assert_eq!(poset("A2", 2).rank_profile(), vec![1, 6, 5]);
    assert_eq!(poset("A2", 1).len(), 5);
    for m in 1..=4 {
        assert_eq!(poset("A1", m).len(), m as usize + 1);
    }
    assert_eq!(poset("A3", 2).len(), 55);
    assert_eq!(poset("B2", 2).len(), 15);
    assert_eq!(poset("G2", 3).len(), 40);
    assert!(matches!(NcmPoset::noncrossing(group("A2"), 0), Err(crate::Error::InvalidM(0))));
}

#[test]
fn m_one_matches_the_lattice() {
    let p = poset("B3", 1);
    let nc = p.lattice();
    assert_eq!(p.len(), nc.len());
    assert_eq!(p.covers().len(), nc.covers().len());
    for a in 0..p.len() {
        for b in 0..p.len() {
            assert_eq!(p.leq(a, b), nc.leq(p.tuple(a)[0], p.tuple(b)[0]));
        }
    }
}

#[test]
fn mobius_small_values() {
    let p = poset("A2", 1);
    let top = p.maximal_elements()[0];
    assert_eq!(p.mobius(0, top), Ok(2));
    assert_eq!(p.mobius(3, 3), Ok(1));
    for a in 1..top {
        assert_eq!(p.mobius(0, a), Ok(-1));
    }
    assert_eq!(p.mobius(top, 0), Err(crate::Error::NotComparable));
    assert_eq!(p.positive_facet_count_via_mobius(top), Ok(2));
    assert_eq!(p.positive_facet_count_via_mobius(0), Ok(1));
}

#[test]
fn mobius_matches_the_defining_sum_from_above() {
    let p = poset("B2", 2);
    for a in 0..p.len() {
        for b in a + 1..p.len() {
            if p.leq(a, b) {
                let s: i64 = p.interval(a, b).unwrap().iter().map(|&z| p.mobius(z, b).unwrap()).sum();
                assert_eq!(s, 0);
            }
        }
    }
}

#[test]
fn leq_agrees_with_componentwise_group_order() {
    let p = poset("A2", 2);
    let g = p.group().clone();
    for a in 0..p.len() {
        for b in 0..p.len() {
            let direct = p
                .group_elements(a)
                .iter()
                .zip(p.group_elements(b).iter())
                .all(|(x, y)| g.absolute_leq(x, y));
            assert_eq!(p.leq(a, b), direct);
        }
    }
}

#[test]
fn label_order() {
    let p = poset("A2", 2);
    let l = |slot, r| EdgeLabel { slot, root: RootId(r) };
    assert_eq!(p.compare_labels(&l(2, 1), &l(1, 2)), Ordering::Less);
    assert_eq!(p.compare_labels(&l(1, 0), &l(1, 1)), Ordering::Less);
    assert_eq!(p.compare_labels(&l(1, 1), &l(1, 2)), Ordering::Less);
    assert_eq!(p.compare_labels(&l(2, 2), &l(2, 2)), Ordering::Equal);
}

#[test]
fn a2_falling_chain_table() {
    let p = poset("A2", 2);
    let rs = p.group().root_system().clone();
    let mut rows: Vec<String> = p
        .maximal_falling_chains()
        .iter()
        .map(|c| {
            let labels: Vec<String> = c.labels.iter().map(|l| render(&p, l)).collect();
            format!("{} | {}", labels.join("->"), p.chain_to_facet(c).unwrap().format(&rs))
        })
        .collect();
    rows.sort();
    let mut expected = vec![
        "(1,R3)->(1,R2) | +2@1,+3@1",
        "(1,R2)->(1,R1) | +1@1,+2@1",
        "(R3,1)->(1,R2) | +2@1,+3@2",
        "(R3,1)->(R2,1) | +2@2,+3@2",
        "(R1,1)->(1,R3) | +1@2,+3@1",
        "(R2,1)->(R1,1) | +1@2,+2@2",
        "(R2,1)->(1,R1) | +1@1,+2@2",
    ];
    expected.sort();
    assert_eq!(rows, expected);
}

#[test]
fn chain_to_facet_rejects_rising_chains() {
    let p = poset("A2", 2);
    let top = p.maximal_elements()[0];
    let chains = p.maximal_chains(0, top).unwrap();
    let falling = p.falling_chains(0, top).unwrap();
    for c in &chains {
        let r = p.chain_to_facet(c);
        assert_eq!(r.is_ok(), falling.contains(c));
    }
    let empty = Chain {
        elements: vec![],
        labels: vec![],
    };
    assert!(p.chain_to_facet(&empty).unwrap().is_empty());
    let bottom = Chain {
        elements: vec![0],
        labels: vec![],
    };
    assert!(p.chain_to_facet(&bottom).unwrap().is_empty());
    let f = p.chain_to_facet(&falling[0]).unwrap();
    assert!(f.members().iter().all(ColoredRoot::is_positive));
}

#[test]
fn a2_m1_has_two_falling_chains() {
    let p = poset("A2", 1);
    assert_eq!(p.maximal_falling_chains().len(), 2);
}

#[test]
fn el_labelings() {
    for (s, m) in [("A1", 3), ("A2", 1), ("A2", 2), ("B2", 2)] {
        assert!(poset(s, m).is_el_labeling(), "{s} m={m}");
    }
}

#[test]
fn scrambled_label_order_is_not_el() {
    let p = poset("A2", 2);
    assert!(!p.is_el_labeling_by(|a, b| p.compare_labels(b, a)));
    assert!(!p.is_el_labeling_by(|a, b| a.slot.cmp(&b.slot).then(a.root.0.cmp(&b.root.0).reverse())));
}

#[test]
fn order_ideal_and_maximal_elements() {
    for (s, m) in [("A2", 3), ("B2", 2)] {
        let p = poset(s, m);
        let nc = p.lattice().clone();
        let g = p.group().clone();
        let gamma = g.coxeter_element();
        for b in 0..p.len() {
            let tb = p.tuple(b).to_vec();
            let mut cand = vec![vec![]];
            for &x in &tb {
                cand = cand
                    .into_iter()
                    .flat_map(|pre: Vec<usize>| {
                        (0..nc.len()).filter(|&y| nc.leq(y, x)).map(move |y| {
                            let mut t = pre.clone();
                            t.push(y);
                            t
                        })
                    })
                    .collect();
            }
            for t in cand {
                assert!(p.find_indices(&t).is_some());
            }
        }
        for w in p.maximal_elements() {
            assert_eq!(p.product(w), gamma);
        }
    }
}

#[test]
fn meets_exist() {
    let p = poset("A2", 2);
    for a in 0..p.len() {
        for b in 0..p.len() {
            let lower: Vec<usize> = (0..p.len()).filter(|&z| p.leq(z, a) && p.leq(z, b)).collect();
            let greatest: Vec<&usize> = lower.iter().filter(|&&z| lower.iter().all(|&y| p.leq(y, z))).collect();
            assert_eq!(greatest.len(), 1);
        }
    }
}

#[test]
fn interval_transport() {
    let p = poset("B2", 2);
    for a in 0..p.len() {
        for b in 0..p.len() {
            if !p.leq(a, b) {
                continue;
            }
            let ga = p.group_elements(a);
            let gb = p.group_elements(b);
            let diff: Vec<_> = ga.iter().zip(&gb).map(|(x, y)| &x.inverse() * y).collect();
            let d = p.find(&diff).expect("transported tuple is in the poset");
            let i1 = p.interval(a, b).unwrap();
            let i2 = p.interval(0, d).unwrap();
            assert_eq!(i1.len(), i2.len());
            let covers = |iv: &[usize]| {
                p.covers()
                    .iter()
                    .filter(|c| iv.contains(&c.lower) && iv.contains(&c.upper))
                    .count()
            };
            assert_eq!(covers(&i1), covers(&i2));
            assert_eq!(p.mobius(a, b), p.mobius(0, d));
        }
    }
}

#[test]
fn conjugation_bijection() {
    for (s, m) in [("A2", 2), ("B2", 2)] {
        let p = poset(s, m);
        let g = p.group().clone();
        let gamma = g.coxeter_element();
        for w in 0..p.len() {
            let ws = p.group_elements(w);
            let rest = &gamma * &p.product(w).inverse();
            let q = NcmPoset::build(Arc::new(NcLattice::build(g.clone(), rest)), m).unwrap();
            let mut image = Vec::new();
            for a in 0..p.len() {
                let ga = p.group_elements(a);
                let aw: Vec<_> = ga.iter().zip(&ws).map(|(x, y)| x * y).collect();
                let Some(top) = p.find(&aw) else { continue };
                if !p.leq(a, top) {
                    continue;
                }
                let mut prefix = g.identity();
                let mut mapped = Vec::new();
                for (ai, wi) in ga.iter().zip(&ws) {
                    mapped.push(ai.conjugate_by(&prefix));
                    prefix = &prefix * wi;
                }
                let target = q.find(&mapped).expect("image lies in the smaller poset");
                assert_eq!(q.rank(target), p.rank(a));
                image.push(target);
            }
            let domain = image.len();
            image.sort();
            image.dedup();
            assert_eq!(image.len(), domain);
            assert_eq!(image.len(), q.len(), "{s} w={w}");
        }
    }
}

#[test]
fn export_shape() {
    let p = poset("A2", 2);
    let e = p.export();
    assert_eq!(e.elements.len(), 12);
    assert_eq!(e.nc_elements.len(), 5);
    let json = serde_json::to_value(&e).unwrap();
    assert!(json["covers"][0]["label"]["rootIndex"].is_u64());
}
