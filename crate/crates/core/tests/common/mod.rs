#![allow(dead_code)]

use std::collections::{HashMap, VecDeque};
use std::sync::Arc;

use cluster_nc::group::{CoxeterGroup, GroupElement};

pub fn group(s: &str) -> Arc<CoxeterGroup> {
    Arc::new(CoxeterGroup::new(Arc::new(s.parse().expect("valid system"))))
}

/// Word length in the Cayley graph of `W` generated by all reflections,
/// for every group element, found by breadth-first search from 1.
pub fn cayley_lengths(g: &CoxeterGroup) -> HashMap<GroupElement, usize> {
    let mut dist = HashMap::new();
    let mut queue = VecDeque::new();
    dist.insert(g.identity(), 0);
    queue.push_back(g.identity());
    while let Some(u) = queue.pop_front() {
        let d = dist[&u];
        for t in g.reflections() {
            let v = &u * t;
            if !dist.contains_key(&v) {
                dist.insert(v.clone(), d + 1);
                queue.push_back(v);
            }
        }
    }
    dist
}

/// The systems and values of `m` used by the acceptance checks.
pub const MATRIX: &[(&str, u32)] = &[
    ("A1", 1),
    ("A1", 2),
    ("A1", 3),
    ("A2", 1),
    ("A2", 2),
    ("A2", 3),
    ("A3", 1),
    ("A3", 2),
    ("A3", 3),
    ("B2", 1),
    ("B2", 2),
    ("B2", 3),
    ("B3", 1),
    ("B3", 2),
    ("B3", 3),
    ("G2", 1),
    ("G2", 2),
    ("G2", 3),
    ("D4", 1),
    ("D4", 2),
];

/// `k`-subsets of `0..n` for every `k ≤ max`.
pub fn subsets_up_to(n: usize, max: usize) -> Vec<Vec<usize>> {
    let mut out = vec![vec![]];
    let mut frontier: Vec<Vec<usize>> = vec![vec![]];
    for _ in 0..max {
        let mut next = Vec::new();
        for s in &frontier {
            let start = s.last().map_or(0, |&x| x + 1);
            for v in start..n {
                let mut t = s.clone();
                t.push(v);
                next.push(t);
            }
        }
        out.extend(next.iter().cloned());
        frontier = next;
    }
    out
}
