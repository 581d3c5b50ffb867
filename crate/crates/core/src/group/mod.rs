//! Finite groups given by permutation generators.

pub mod catalog;

use std::collections::{BTreeSet, HashMap, VecDeque};
use std::sync::OnceLock;

use crate::error::{Error, Result};

/// Default bound on group order for subgroup enumeration.
pub const DEFAULT_SUBGROUP_BOUND: usize = 48;
/// Hard limit imposed by the bitmask representation of subgroups.
pub const MAX_SUBGROUP_BOUND: usize = 128;
/// Largest group `enumerate` will build.
pub const MAX_GROUP_ORDER: usize = 4096;

pub type Permutation = Vec<usize>;

/// Composition `(a ∘ b)(x) = a(b(x))`.
pub fn compose(a: &[usize], b: &[usize]) -> Permutation {
    b.iter().map(|&x| a[x]).collect()
}

pub fn is_bijection(p: &[usize], degree: usize) -> bool {
    if p.len() != degree {
        return false;
    }
    let mut seen = vec![false; degree];
    for &x in p {
        if x >= degree || seen[x] {
            return false;
        }
        seen[x] = true;
    }
    true
}

#[derive(Debug)]
pub struct FiniteGroup {
    degree: usize,
    generators: Vec<Permutation>,
    elements: Vec<Permutation>,
    table: Vec<usize>,
    inverse: Vec<usize>,
    /// BFS tree: element `i > 0` equals `parent[i] * generators[via[i]]`.
    parent: Vec<usize>,
    via: Vec<usize>,
    generator_elements: Vec<usize>,
    subgroups: OnceLock<Vec<Subgroup>>,
}

impl PartialEq for FiniteGroup {
    fn eq(&self, other: &Self) -> bool {
        self.degree == other.degree && self.generators == other.generators
    }
}

impl Eq for FiniteGroup {}

impl FiniteGroup {
    /// Enumerates the group generated by `generators`, acting on
    /// `{0..degree-1}`. Elements are ordered breadth-first over generator
    /// words, each layer sorted by permutation image; the identity is 0.
    pub fn enumerate(generators: Vec<Permutation>, degree: usize) -> Result<Self> {
        if degree == 0 {
            return Err(Error::input("degree must be positive"));
        }
        for (i, g) in generators.iter().enumerate() {
            if !is_bijection(g, degree) {
                return Err(Error::input(format!("generator {i} is not a permutation of 0..{degree}")));
            }
        }
        let identity: Permutation = (0..degree).collect();
        let mut index: HashMap<Permutation, usize> = HashMap::new();
        let mut elements = vec![identity.clone()];
        let mut parent = vec![0];
        let mut via = vec![usize::MAX];
        index.insert(identity, 0);
        let mut frontier = vec![0usize];
        while !frontier.is_empty() {
            let mut layer: Vec<(Permutation, usize, usize)> = Vec::new();
            let mut fresh: BTreeSet<Permutation> = BTreeSet::new();
            for &e in &frontier {
                for (gi, g) in generators.iter().enumerate() {
                    let p = compose(&elements[e], g);
                    if !index.contains_key(&p) && fresh.insert(p.clone()) {
                        layer.push((p, e, gi));
                    }
                }
            }
            layer.sort();
            frontier.clear();
            for (p, e, gi) in layer {
                let i = elements.len();
                if i >= MAX_GROUP_ORDER {
                    return Err(Error::capacity(format!("group order exceeds {MAX_GROUP_ORDER}")));
                }
                index.insert(p.clone(), i);
                elements.push(p);
                parent.push(e);
                via.push(gi);
                frontier.push(i);
            }
        }
        let n = elements.len();
        let mut table = vec![0; n * n];
        for a in 0..n {
            for b in 0..n {
                table[a * n + b] = index[&compose(&elements[a], &elements[b])];
            }
        }
        let inverse = (0..n).map(|a| (0..n).find(|&b| table[a * n + b] == 0).expect("inverse")).collect();
        let generator_elements = generators.iter().map(|g| index[g]).collect();
        Ok(FiniteGroup {
            degree,
            generators,
            elements,
            table,
            inverse,
            parent,
            via,
            generator_elements,
            subgroups: OnceLock::new(),
        })
    }

    pub fn trivial() -> Self {
        Self::enumerate(Vec::new(), 1).expect("trivial group")
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn generators(&self) -> &[Permutation] {
        &self.generators
    }

    /// Element indices of the generators.
    pub fn generator_elements(&self) -> &[usize] {
        &self.generator_elements
    }

    pub fn elements(&self) -> &[Permutation] {
        &self.elements
    }

    pub fn element(&self, i: usize) -> &[usize] {
        &self.elements[i]
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a * self.order() + b]
    }

    #[inline]
    pub fn inv(&self, a: usize) -> usize {
        self.inverse[a]
    }

    /// `(parent, generator)` with `element = parent * generator`, for
    /// non-identity elements.
    pub fn bfs_edge(&self, element: usize) -> Option<(usize, usize)> {
        (element != 0).then(|| (self.parent[element], self.via[element]))
    }

    pub fn element_order(&self, a: usize) -> usize {
        let mut x = a;
        let mut k = 1;
        while x != 0 {
            x = self.mul(x, a);
            k += 1;
        }
        k
    }

    pub fn conjugate(&self, g: usize, h: usize) -> usize {
        self.mul(self.mul(g, h), self.inv(g))
    }

    pub fn is_abelian(&self) -> bool {
        let n = self.order();
        (0..n).all(|a| (a..n).all(|b| self.mul(a, b) == self.mul(b, a)))
    }

    pub fn center_order(&self) -> usize {
        let n = self.order();
        (0..n).filter(|&a| (0..n).all(|b| self.mul(a, b) == self.mul(b, a))).count()
    }

    /// Closure of a set of elements under multiplication, sorted.
    pub fn closure(&self, gens: &[usize]) -> Vec<usize> {
        let n = self.order();
        let mut seen = vec![false; n];
        seen[0] = true;
        let mut queue = VecDeque::from([0usize]);
        let mut out = vec![0usize];
        while let Some(x) = queue.pop_front() {
            for &g in gens {
                let y = self.mul(x, g);
                if !seen[y] {
                    seen[y] = true;
                    out.push(y);
                    queue.push_back(y);
                }
            }
        }
        out.sort_unstable();
        out
    }

    /// True iff every Sylow subgroup is cyclic, i.e. for each prime `p`
    /// dividing the order some element has order equal to the `p`-part.
    pub fn is_sylow_cyclic(&self) -> bool {
        let n = self.order();
        let orders: Vec<usize> = (0..n).map(|a| self.element_order(a)).collect();
        prime_factors(n).into_iter().all(|(p, e)| {
            let pe = p.pow(e as u32);
            orders.iter().any(|&o| o == pe)
        })
    }

    /// All subgroups at the default bound, cached.
    pub fn subgroups(&self) -> Result<&[Subgroup]> {
        self.subgroups_bounded(DEFAULT_SUBGROUP_BOUND)
    }

    pub fn subgroups_bounded(&self, bound: usize) -> Result<&[Subgroup]> {
        if self.order() > bound.min(MAX_SUBGROUP_BOUND) {
            return Err(Error::capacity(format!(
                "group of order {} exceeds the subgroup-enumeration bound {}",
                self.order(),
                bound.min(MAX_SUBGROUP_BOUND)
            )));
        }
        Ok(self.subgroups.get_or_init(|| enumerate_subgroups(self)))
    }

    pub fn subgroup(&self, id: usize) -> Result<&Subgroup> {
        self.subgroups()?.get(id).ok_or_else(|| Error::input(format!("no subgroup with id {id}")))
    }

    /// The subgroup containing every element.
    pub fn whole(&self) -> Result<&Subgroup> {
        Ok(self.subgroups()?.last().expect("at least the whole group"))
    }

    /// Looks up the subgroup with exactly these elements.
    pub fn find_subgroup(&self, elements: &[usize]) -> Result<Option<&Subgroup>> {
        let mut e = elements.to_vec();
        e.sort_unstable();
        e.dedup();
        Ok(self.subgroups()?.iter().find(|s| s.elements == e))
    }

    /// Representatives of the conjugacy classes of subgroups, in id order.
    pub fn subgroup_class_representatives(&self) -> Result<Vec<&Subgroup>> {
        Ok(self.subgroups()?.iter().filter(|s| s.is_class_representative).collect())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Subgroup {
    pub id: usize,
    /// Sorted element indices of the parent group.
    pub elements: Vec<usize>,
    /// Greedy generating set (element indices).
    pub generators: Vec<usize>,
    /// Id of the canonical representative of the conjugacy class.
    pub class_representative: usize,
    pub is_class_representative: bool,
}

impl Subgroup {
    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn contains(&self, g: usize) -> bool {
        self.elements.binary_search(&g).is_ok()
    }

    pub fn is_trivial(&self) -> bool {
        self.elements.len() == 1
    }
}

fn mask_of(elements: &[usize]) -> u128 {
    elements.iter().fold(0u128, |m, &e| m | (1u128 << e))
}

fn elements_of(mask: u128) -> Vec<usize> {
    (0..128).filter(|&i| mask & (1u128 << i) != 0).collect()
}

fn greedy_generators(group: &FiniteGroup, elements: &[usize]) -> Vec<usize> {
    let mut gens = Vec::new();
    let mut current = mask_of(&[0]);
    for &x in elements {
        if current & (1u128 << x) == 0 {
            gens.push(x);
            current = mask_of(&group.closure(&gens));
        }
    }
    gens
}

fn enumerate_subgroups(group: &FiniteGroup) -> Vec<Subgroup> {
    let n = group.order();
    debug_assert!(n <= MAX_SUBGROUP_BOUND);
    let mut cyclic: Vec<u128> = (0..n).map(|g| mask_of(&group.closure(&[g]))).collect();
    cyclic.sort_unstable();
    cyclic.dedup();
    let mut found: BTreeSet<u128> = cyclic.iter().copied().collect();
    let mut queue: VecDeque<u128> = cyclic.iter().copied().collect();
    while let Some(s) = queue.pop_front() {
        for &c in &cyclic {
            if s & c == c {
                continue;
            }
            let mut gens = elements_of(s);
            gens.extend(elements_of(c));
            let joined = mask_of(&group.closure(&gens));
            if found.insert(joined) {
                queue.push_back(joined);
            }
        }
    }
    let mut lists: Vec<Vec<usize>> = found.into_iter().map(elements_of).collect();
    lists.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
    let position: HashMap<u128, usize> = lists.iter().enumerate().map(|(i, l)| (mask_of(l), i)).collect();
    lists
        .iter()
        .enumerate()
        .map(|(id, elements)| {
            let class_representative = (0..n)
                .map(|g| {
                    let conj: Vec<usize> = elements.iter().map(|&h| group.conjugate(g, h)).collect();
                    position[&mask_of(&conj)]
                })
                .min()
                .expect("nonempty group");
            Subgroup {
                id,
                elements: elements.clone(),
                generators: greedy_generators(group, elements),
                class_representative,
                is_class_representative: class_representative == id,
            }
        })
        .collect()
}

/// Prime factorization of `n` as `(p, e)` pairs in increasing `p`.
pub fn prime_factors(mut n: usize) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            let mut e = 0;
            while n % p == 0 {
                n /= p;
                e += 1;
            }
            out.push((p, e));
        }
        p += 1;
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}
