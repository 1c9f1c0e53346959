use std::collections::{HashMap, HashSet, VecDeque};
use std::fmt;
use std::ops::Range;
use std::str::FromStr;
use std::sync::atomic::{AtomicU32, Ordering};
use std::sync::{Arc, OnceLock};

use num_traits::ToPrimitive;

use super::cartan::{is_zero_entry, CartanType, RootSystemSpec};
use crate::error::{Error, Result};
use crate::group::GroupElement;
use crate::{QMatrix, QVector, Rational};

static NEXT_SYSTEM_ID: AtomicU32 = AtomicU32::new(1);

/// Index of a root. Positive roots occupy `0..N` in the global `ρ`-order
/// (so a positive root's id is its `ρ`-index minus one); the negative of
/// positive root `k` has id `N + k`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RootId(pub usize);

/// One irreducible component together with its `ρ`-sequence.
#[derive(Clone, Debug)]
pub struct Component {
    pub(crate) cartan: CartanType,
    pub(crate) simples: Range<usize>,
    pub(crate) plus: usize,
    pub(crate) positive: Range<usize>,
    pub(crate) rho: Vec<RootId>,
    pub(crate) order: Vec<RootId>,
}

impl Component {
    pub fn cartan(&self) -> CartanType {
        self.cartan
    }

    pub fn rank(&self) -> usize {
        self.simples.len()
    }

    /// Global indices `σ_j` of this component's simple roots, `Π₊` first.
    pub fn simples(&self) -> Range<usize> {
        self.simples.clone()
    }

    /// Size `r` of `Π₊`.
    pub fn plus_count(&self) -> usize {
        self.plus
    }

    /// Ids of this component's positive roots.
    pub fn positive(&self) -> Range<usize> {
        self.positive.clone()
    }

    pub fn positive_count(&self) -> usize {
        self.positive.len()
    }

    pub fn coxeter_number(&self) -> usize {
        self.cartan.coxeter_number()
    }

    pub fn exponents(&self) -> Vec<usize> {
        self.cartan.exponents()
    }

    /// `ρ_i` for any integer `i`, read cyclically modulo `2N`
    /// (so `ρ_{-i} = ρ_{2N-i}`).
    pub fn rho(&self, i: isize) -> RootId {
        let len = self.rho.len() as isize;
        self.rho[((i - 1).rem_euclid(len)) as usize]
    }

    /// `ρ_1, …, ρ_{2N}`.
    pub fn rho_sequence(&self) -> &[RootId] {
        &self.rho
    }

    /// The almost positive roots of this component in the total order `≺`.
    pub fn order(&self) -> &[RootId] {
        &self.order
    }
}

/// Seed data for one connected component before closure.
#[derive(Clone)]
pub(crate) struct Seed {
    pub gram: QMatrix,
    pub plus: Vec<bool>,
    pub labels: Vec<usize>,
    pub cartan: Option<CartanType>,
}

/// A finite crystallographic root system in simple-root coordinates.
///
/// Simple roots are numbered `σ_1, …, σ_n` component by component, and inside
/// each component the class `Π₊` comes first. The inner product is the
/// (rational) Gram matrix of the simple roots.
pub struct RootSystem {
    pub(crate) id: u32,
    pub(crate) spec: RootSystemSpec,
    pub(crate) gram: QMatrix,
    pub(crate) cartan_int: Vec<Vec<i64>>,
    pub(crate) roots: Vec<QVector>,
    pub(crate) coords: Vec<Vec<i64>>,
    pub(crate) lookup: HashMap<Vec<i64>, RootId>,
    pub(crate) npos: usize,
    pub(crate) simple: Vec<RootId>,
    pub(crate) labels: Vec<usize>,
    pub(crate) components: Vec<Component>,
    pub(crate) component_of_simple: Vec<usize>,
    pub(crate) reflections: Vec<GroupElement>,
    pub(crate) gamma: GroupElement,
    pub(crate) gamma_inv: GroupElement,
    pub(crate) order: Vec<RootId>,
    pub(crate) position: Vec<Option<usize>>,
    pub(crate) mu: OnceLock<QMatrix>,
}

impl RootSystem {
    /// Builds the root system for `spec`, 2-colouring each Coxeter diagram by
    /// breadth-first search from its lowest-numbered node, which goes to `Π₊`.
    pub fn build(spec: &RootSystemSpec) -> Result<Self> {
        let mut seeds = Vec::new();
        for &cartan in spec.components() {
            let gram = cartan.gram();
            let pieces = connected_pieces(&gram);
            let single = pieces.len() == 1;
            for piece in pieces {
                let sub = submatrix(&gram, &piece);
                let plus = bipartition(&sub);
                seeds.push(Seed {
                    gram: sub,
                    plus,
                    labels: piece.iter().map(|i| i + 1).collect(),
                    cartan: single.then_some(cartan),
                });
            }
        }
        Self::from_seeds(seeds)
    }

    pub(crate) fn from_seeds(seeds: Vec<Seed>) -> Result<Self> {
        let n: usize = seeds.iter().map(|s| s.gram.rows()).sum();
        let mut gram = QMatrix::zeros(n, n);
        let mut labels = Vec::with_capacity(n);
        let mut ranges = Vec::new();
        let mut plus_counts = Vec::new();
        let mut offset = 0;
        for seed in &seeds {
            let k = seed.gram.rows();
            // Π₊ first, each class in its original order
            let mut perm: Vec<usize> = (0..k).filter(|&i| seed.plus[i]).collect();
            plus_counts.push(perm.len());
            perm.extend((0..k).filter(|&i| !seed.plus[i]));
            for (a, &pa) in perm.iter().enumerate() {
                labels.push(seed.labels[pa]);
                for (b, &pb) in perm.iter().enumerate() {
                    gram.set(offset + a, offset + b, seed.gram.get(pa, pb).clone());
                }
            }
            ranges.push(offset..offset + k);
            offset += k;
        }

        let cartan_int: Vec<Vec<i64>> = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| {
                        let c = Rational::from_integer(2.into()) * gram.get(i, j) / gram.get(j, j);
                        if !c.is_integer() {
                            return Err(Error::Invariant("non-crystallographic Gram matrix".into()));
                        }
                        c.to_integer().to_i64().ok_or_else(|| Error::Invariant("Cartan entry overflow".into()))
                    })
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<_>>()?;

        let reflect_simple = |beta: &[i64], j: usize| -> Vec<i64> {
            // ⟨β, σ_j^∨⟩ = ∑_i β_i a_ij
            let c: i64 = (0..n).map(|i| beta[i] * cartan_int[i][j]).sum();
            let mut out = beta.to_vec();
            out[j] -= c;
            out
        };

        // closure of the simple roots under simple reflections
        let mut all: HashSet<Vec<i64>> = HashSet::new();
        let mut queue = VecDeque::new();
        for j in 0..n {
            let mut e = vec![0; n];
            e[j] = 1;
            if all.insert(e.clone()) {
                queue.push_back(e);
            }
        }
        while let Some(beta) = queue.pop_front() {
            for j in 0..n {
                let image = reflect_simple(&beta, j);
                if !all.contains(&image) {
                    all.insert(image.clone());
                    queue.push_back(image);
                }
            }
        }
        if all.iter().any(|v| !(v.iter().all(|&x| x >= 0) || v.iter().all(|&x| x <= 0))) {
            return Err(Error::Invariant("root with mixed-sign coordinates".into()));
        }
        let npos = all.len() / 2;

        // ρ-sequences per component, computed on coordinates
        let mut components = Vec::new();
        let mut positive_order: Vec<Vec<i64>> = Vec::with_capacity(npos);
        let mut rho_coords = Vec::new();
        for (ci, range) in ranges.iter().enumerate() {
            let in_component = |v: &Vec<i64>| {
                v.iter().enumerate().all(|(i, &x)| x == 0 || range.contains(&i))
            };
            let comp_pos: HashSet<Vec<i64>> = all
                .iter()
                .filter(|v| in_component(v) && v.iter().all(|&x| x >= 0))
                .cloned()
                .collect();
            let big_n = comp_pos.len();
            let k = range.len();
            let mut rho = Vec::with_capacity(2 * big_n);
            for i in 0..2 * big_n {
                let mut v = vec![0; n];
                v[range.start + i % k] = 1;
                for p in (0..i).rev() {
                    v = reflect_simple(&v, range.start + p % k);
                }
                rho.push(v);
            }
            let first: HashSet<Vec<i64>> = rho[..big_n].iter().cloned().collect();
            if first != comp_pos || first.len() != big_n {
                return Err(Error::Invariant("ρ_1..ρ_N is not the positive system".into()));
            }
            let seed = &seeds[ci];
            let cartan = match seed.cartan {
                Some(c) => c,
                None => {
                    let lengths: Vec<Rational> = range.clone().map(|i| gram.get(i, i).clone()).collect();
                    CartanType::classify(k, big_n, &lengths)?
                }
            };
            if 2 * big_n != k * cartan.coxeter_number() {
                return Err(Error::Invariant(format!("{cartan}: N = {big_n} but nh/2 = {}", k * cartan.coxeter_number() / 2)));
            }
            let start = positive_order.len();
            positive_order.extend(rho[..big_n].iter().cloned());
            components.push(Component {
                cartan,
                simples: range.clone(),
                plus: plus_counts[ci],
                positive: start..start + big_n,
                rho: Vec::new(),
                order: Vec::new(),
            });
            rho_coords.push(rho);
        }

        // final numbering
        let mut coords = positive_order.clone();
        coords.extend(positive_order.iter().map(|v| v.iter().map(|x| -x).collect::<Vec<_>>()));
        let lookup: HashMap<Vec<i64>, RootId> =
            coords.iter().enumerate().map(|(i, v)| (v.clone(), RootId(i))).collect();
        let roots: Vec<QVector> = coords
            .iter()
            .map(|v| QVector::new(v.iter().map(|&x| Rational::from_integer(x.into())).collect()))
            .collect();
        let simple: Vec<RootId> = (0..n)
            .map(|j| {
                let mut e = vec![0; n];
                e[j] = 1;
                lookup[&e]
            })
            .collect();
        let mut component_of_simple = vec![0; n];
        for (ci, r) in ranges.iter().enumerate() {
            for j in r.clone() {
                component_of_simple[j] = ci;
            }
        }

        let id = NEXT_SYSTEM_ID.fetch_add(1, Ordering::Relaxed);
        let total = coords.len();
        let mut reflections = Vec::with_capacity(total);
        for a in 0..total {
            let alpha = &roots[a];
            let norm = gram.bilinear(alpha, alpha);
            let perm = (0..total)
                .map(|b| {
                    let c = Rational::from_integer(2.into()) * gram.bilinear(&roots[b], alpha) / norm.clone();
                    let c = c.to_integer().to_i64().expect("Cartan integer");
                    let image: Vec<i64> = coords[b].iter().zip(&coords[a]).map(|(x, y)| x - c * y).collect();
                    lookup[&image].0 as u16
                })
                .collect();
            reflections.push(GroupElement::from_perm(id, perm));
        }

        let mut gamma = GroupElement::identity_on(id, total);
        for &s in &simple {
            gamma = &gamma * &reflections[s.0];
        }
        let gamma_inv = gamma.inverse();

        let mut order = Vec::with_capacity(npos + n);
        for (ci, comp) in components.iter_mut().enumerate() {
            comp.rho = rho_coords[ci].iter().map(|v| lookup[v]).collect();
            let big_n = comp.positive.len();
            let k = comp.simples.len();
            let r = comp.plus;
            let mut o: Vec<RootId> = Vec::with_capacity(big_n + k);
            o.extend((-((k - r) as isize) + 1..=0).map(|i| comp.rho(i)));
            o.extend((1..=big_n as isize).map(|i| comp.rho(i)));
            o.extend((big_n as isize + 1..=(big_n + r) as isize).map(|i| comp.rho(i)));
            let neg = |j: usize| RootId(simple[j].0 + npos);
            let minus_pm: HashSet<RootId> = comp.simples.clone().skip(r).map(neg).collect();
            let minus_pp: HashSet<RootId> = comp.simples.clone().take(r).map(neg).collect();
            let head: HashSet<RootId> = o[..k - r].iter().copied().collect();
            let tail: HashSet<RootId> = o[k - r + big_n..].iter().copied().collect();
            if head != minus_pm || tail != minus_pp {
                return Err(Error::Invariant("total order does not bracket Φ⁺ by -Π₋ and -Π₊".into()));
            }
            comp.order = o.clone();
            order.extend(o);
        }
        let mut position = vec![None; total];
        for (p, r) in order.iter().enumerate() {
            position[r.0] = Some(p);
        }

        let spec = RootSystemSpec::new(components.iter().map(|c| c.cartan).collect());
        Ok(RootSystem {
            id,
            spec,
            gram,
            cartan_int,
            roots,
            coords,
            lookup,
            npos,
            simple,
            labels,
            components,
            component_of_simple,
            reflections,
            gamma,
            gamma_inv,
            order,
            position,
            mu: OnceLock::new(),
        })
    }

    /// Components of the system (after splitting disconnected diagrams).
    pub fn spec(&self) -> &RootSystemSpec {
        &self.spec
    }

    pub fn rank(&self) -> usize {
        self.simple.len()
    }

    pub fn is_irreducible(&self) -> bool {
        self.components.len() == 1
    }

    pub fn gram(&self) -> &QMatrix {
        &self.gram
    }

    /// Cartan integers `a_ij = 2(σ_i, σ_j)/(σ_j, σ_j)` in `σ`-numbering.
    pub fn cartan_integers(&self) -> &[Vec<i64>] {
        &self.cartan_int
    }

    pub fn num_roots(&self) -> usize {
        self.roots.len()
    }

    /// Number `N` of positive roots.
    pub fn num_positive(&self) -> usize {
        self.npos
    }

    pub fn root(&self, id: RootId) -> &QVector {
        &self.roots[id.0]
    }

    /// Integer simple-root coordinates of a root.
    pub fn coords(&self, id: RootId) -> &[i64] {
        &self.coords[id.0]
    }

    pub fn find(&self, v: &QVector) -> Option<RootId> {
        let ints: Option<Vec<i64>> = v
            .entries()
            .iter()
            .map(|x| if x.is_integer() { x.to_integer().to_i64() } else { None })
            .collect();
        ints.and_then(|c| self.lookup.get(&c).copied())
    }

    pub fn find_coords(&self, c: &[i64]) -> Option<RootId> {
        self.lookup.get(c).copied()
    }

    pub fn roots(&self) -> impl Iterator<Item = RootId> {
        (0..self.roots.len()).map(RootId)
    }

    /// Positive roots in global `ρ`-order.
    pub fn positive_roots(&self) -> impl Iterator<Item = RootId> {
        (0..self.npos).map(RootId)
    }

    pub fn is_positive(&self, id: RootId) -> bool {
        id.0 < self.npos
    }

    pub fn negate(&self, id: RootId) -> RootId {
        if id.0 < self.npos {
            RootId(id.0 + self.npos)
        } else {
            RootId(id.0 - self.npos)
        }
    }

    /// Positive root with the same reflection.
    pub fn positive_part(&self, id: RootId) -> RootId {
        if self.is_positive(id) {
            id
        } else {
            self.negate(id)
        }
    }

    /// `σ_j` (0-based `j`).
    pub fn simple_root(&self, j: usize) -> RootId {
        self.simple[j]
    }

    pub fn simple_roots(&self) -> &[RootId] {
        &self.simple
    }

    /// Index `j` with `root = σ_j`, if simple.
    pub fn simple_index(&self, root: RootId) -> Option<usize> {
        self.simple.iter().position(|&s| s == root)
    }

    /// Index `j` with `root = -σ_j`, if negative simple.
    pub fn negative_simple_index(&self, root: RootId) -> Option<usize> {
        if self.is_positive(root) {
            None
        } else {
            self.simple_index(self.negate(root))
        }
    }

    pub fn is_in_plus(&self, j: usize) -> bool {
        let c = &self.components[self.component_of_simple[j]];
        j < c.simples.start + c.plus
    }

    /// Bourbaki number of `σ_j` inside its Cartan type.
    pub fn bourbaki_label(&self, j: usize) -> usize {
        self.labels[j]
    }

    pub fn components(&self) -> &[Component] {
        &self.components
    }

    pub fn component_of_simple(&self, j: usize) -> usize {
        self.component_of_simple[j]
    }

    pub fn component_of(&self, root: RootId) -> usize {
        let c = &self.coords[root.0];
        let j = c.iter().position(|&x| x != 0).expect("roots are nonzero");
        self.component_of_simple[j]
    }

    /// All exponents, component by component.
    pub fn exponents(&self) -> Vec<usize> {
        self.components.iter().flat_map(|c| c.exponents()).collect()
    }

    /// Coxeter number, defined when the system is irreducible.
    pub fn coxeter_number(&self) -> Option<usize> {
        self.is_irreducible().then(|| self.components[0].coxeter_number())
    }

    /// Inner product of two roots.
    pub fn inner(&self, a: RootId, b: RootId) -> Rational {
        self.gram.bilinear(&self.roots[a.0], &self.roots[b.0])
    }

    /// Reflection `R(α)` as a group element.
    pub fn reflection(&self, root: RootId) -> GroupElement {
        self.reflections[root.0].clone()
    }

    pub fn identity(&self) -> GroupElement {
        GroupElement::identity_on(self.id, self.roots.len())
    }

    /// `γ = γ₊γ₋ = R(σ_1)⋯R(σ_n)`.
    pub fn bipartite_coxeter(&self) -> GroupElement {
        self.gamma.clone()
    }

    pub(crate) fn gamma_inverse(&self) -> &GroupElement {
        &self.gamma_inv
    }

    /// Matrix of a group element acting on simple-root coordinates.
    pub fn element_matrix(&self, w: &GroupElement) -> QMatrix {
        let cols: Vec<QVector> = self.simple.iter().map(|&s| self.roots[w.apply(s).0].clone()).collect();
        QMatrix::from_columns(&cols)
    }

    /// Integer matrix of a group element acting on simple-root coordinates.
    pub(crate) fn element_int_columns(&self, w: &GroupElement) -> Vec<&[i64]> {
        self.simple.iter().map(|&s| self.coords[w.apply(s).0].as_slice()).collect()
    }

    /// The standard parabolic subsystem spanned by `Π ∖ {σ_j}`, keeping the
    /// inherited bipartition.
    pub fn parabolic_subsystem(&self, j: usize) -> Result<Parabolic> {
        let n = self.rank();
        if j >= n {
            return Err(Error::Parse {
                what: "simple root index",
                input: j.to_string(),
            });
        }
        let kept: Vec<usize> = (0..n).filter(|&i| i != j).collect();
        let sub = submatrix(&self.gram, &kept);
        let mut seeds = Vec::new();
        let mut parent_of = Vec::new();
        for piece in connected_pieces(&sub) {
            seeds.push(Seed {
                gram: submatrix(&sub, &piece),
                plus: piece.iter().map(|&p| self.is_in_plus(kept[p])).collect(),
                labels: piece.iter().map(|&p| self.labels[kept[p]]).collect(),
                cartan: None,
            });
            // order inside the child after it puts Π₊ first
            let (plus, minus): (Vec<usize>, Vec<usize>) =
                piece.iter().map(|&p| kept[p]).partition(|&i| self.is_in_plus(i));
            parent_of.extend(plus);
            parent_of.extend(minus);
        }
        let system = Arc::new(RootSystem::from_seeds(seeds)?);
        Ok(Parabolic {
            system,
            removed: j,
            parent_of,
        })
    }
}

impl fmt::Debug for RootSystem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("RootSystem")
            .field("spec", &self.spec.to_string())
            .field("rank", &self.rank())
            .field("roots", &self.roots.len())
            .finish()
    }
}

impl FromStr for RootSystem {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        RootSystem::build(&s.parse()?)
    }
}

/// A standard parabolic subsystem `Φ_α` with its embedding in the parent.
#[derive(Debug)]
pub struct Parabolic {
    pub system: Arc<RootSystem>,
    removed: usize,
    /// `parent_of[i]` is the parent index of the child's `σ_i`.
    parent_of: Vec<usize>,
}

impl Parabolic {
    pub fn removed_simple(&self) -> usize {
        self.removed
    }

    pub fn parent_simple(&self, child_simple: usize) -> usize {
        self.parent_of[child_simple]
    }

    pub fn child_simple(&self, parent_simple: usize) -> Option<usize> {
        self.parent_of.iter().position(|&p| p == parent_simple)
    }

    /// The child root corresponding to a parent root lying in the span of
    /// the remaining simple roots.
    pub fn restrict(&self, parent: &RootSystem, root: RootId) -> Option<RootId> {
        let c = parent.coords(root);
        if c[self.removed] != 0 {
            return None;
        }
        let child: Vec<i64> = self.parent_of.iter().map(|&p| c[p]).collect();
        self.system.find_coords(&child)
    }

    pub fn lift(&self, parent: &RootSystem, root: RootId) -> RootId {
        let c = self.system.coords(root);
        let mut v = vec![0; parent.rank()];
        for (i, &p) in self.parent_of.iter().enumerate() {
            v[p] = c[i];
        }
        parent.find_coords(&v).expect("parabolic roots are parent roots")
    }
}

pub(crate) fn submatrix(g: &QMatrix, idx: &[usize]) -> QMatrix {
    QMatrix::from_fn(idx.len(), idx.len(), |a, b| g.get(idx[a], idx[b]).clone())
}

/// Connected components of the Coxeter diagram, each sorted ascending.
fn connected_pieces(g: &QMatrix) -> Vec<Vec<usize>> {
    let n = g.rows();
    let mut seen = vec![false; n];
    let mut pieces = Vec::new();
    for s in 0..n {
        if seen[s] {
            continue;
        }
        let mut piece = vec![s];
        seen[s] = true;
        let mut k = 0;
        while k < piece.len() {
            let i = piece[k];
            for j in 0..n {
                if !seen[j] && !is_zero_entry(g, i, j) {
                    seen[j] = true;
                    piece.push(j);
                }
            }
            k += 1;
        }
        piece.sort_unstable();
        pieces.push(piece);
    }
    pieces
}

/// 2-colouring of a connected tree diagram by BFS from node 0 (`true` = `Π₊`).
fn bipartition(g: &QMatrix) -> Vec<bool> {
    let n = g.rows();
    let mut color: Vec<Option<bool>> = vec![None; n];
    let mut queue = VecDeque::new();
    for s in 0..n {
        if color[s].is_some() {
            continue;
        }
        color[s] = Some(true);
        queue.push_back(s);
        while let Some(i) = queue.pop_front() {
            let c = color[i].unwrap();
            for j in 0..n {
                if i != j && !is_zero_entry(g, i, j) && color[j].is_none() {
                    color[j] = Some(!c);
                    queue.push_back(j);
                }
            }
        }
    }
    color.into_iter().map(|c| c.unwrap()).collect()
}

#[cfg(test)]
fn _assert_send_sync() {
    fn check<T: Send + Sync>() {}
    check::<RootSystem>();
}
