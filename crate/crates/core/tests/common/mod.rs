//! Lattice corpus shared by the integration and acceptance tests: catalog
//! lattices plus seeded random sums of small pieces in a random basis.

#![allow(dead_code)]

use std::sync::Arc;

use galois_tori::group::catalog::{self, NamedGroup};
use galois_tori::{FiniteGroup, GLattice, IntMatrix};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub const RANDOM_PER_GROUP: usize = 20;
pub const MAX_RANDOM_RANK: usize = 12;

#[derive(Clone)]
pub struct Entry {
    pub group: String,
    pub label: String,
    pub lattice: GLattice,
}

pub struct GroupCorpus {
    pub name: String,
    pub group: Arc<FiniteGroup>,
    pub entries: Vec<Entry>,
}

pub fn rng_for(label: &str, salt: u64) -> ChaCha8Rng {
    let seed = label.bytes().fold(0xcbf29ce484222325u64, |h, b| (h ^ b as u64).wrapping_mul(0x100000001b3));
    ChaCha8Rng::seed_from_u64(seed ^ salt)
}

/// Trivial, regular, norm-one and its dual, every permutation lattice
/// `Z[G/H]` over class representatives and every sign lattice.
pub fn catalog_lattices(g: &Arc<FiniteGroup>) -> Vec<(String, GLattice)> {
    let mut out = vec![
        ("trivial".to_string(), GLattice::trivial(g.clone(), 1)),
        ("regular".to_string(), GLattice::regular(g.clone())),
        ("norm_one".to_string(), GLattice::norm_one(g.clone())),
        ("norm_one_dual".to_string(), GLattice::norm_one(g.clone()).dual().unwrap()),
    ];
    for h in g.subgroup_class_representatives().unwrap() {
        if h.order() != 1 && h.order() != g.order() {
            out.push((format!("perm_{}", h.id), GLattice::permutation(g.clone(), h)));
        }
        if 2 * h.order() == g.order() {
            out.push((format!("sign_{}", h.id), GLattice::sign(g.clone(), h).unwrap()));
        }
    }
    out
}

fn pieces(g: &Arc<FiniteGroup>) -> Vec<GLattice> {
    let mut out = vec![GLattice::trivial(g.clone(), 1)];
    for h in g.subgroup_class_representatives().unwrap() {
        let index = g.order() / h.order();
        if 2 * h.order() == g.order() {
            out.push(GLattice::sign(g.clone(), h).unwrap());
        }
        if index > 1 && index <= 8 {
            out.push(GLattice::permutation(g.clone(), h));
            let aug = GLattice::augmentation_ideal(g.clone(), h);
            out.push(aug.dual().unwrap());
            out.push(aug);
        }
    }
    out
}

pub fn random_unimodular(n: usize, rng: &mut impl Rng) -> IntMatrix {
    let mut m = IntMatrix::identity(n);
    if n < 2 {
        return m;
    }
    for _ in 0..2 * n {
        let i = rng.gen_range(0..n);
        let mut j = rng.gen_range(0..n - 1);
        if j >= i {
            j += 1;
        }
        let c = if rng.gen_bool(0.5) { 1 } else { -1 };
        m.row_sub_mul(i, &c, j).unwrap();
    }
    m
}

/// A direct sum of random pieces of total rank at most `MAX_RANDOM_RANK`,
/// written in a random basis.
pub fn random_lattice(g: &Arc<FiniteGroup>, rng: &mut impl Rng) -> GLattice {
    let pieces = pieces(g);
    let target = rng.gen_range(1..=MAX_RANDOM_RANK);
    let mut l = GLattice::trivial(g.clone(), 0);
    loop {
        let fitting: Vec<&GLattice> =
            pieces.iter().filter(|p| p.rank() > 0 && l.rank() + p.rank() <= target).collect();
        let Some(p) = fitting.choose(rng) else { break };
        l = l.direct_sum(p).unwrap();
        if l.rank() == target || rng.gen_bool(0.3) {
            break;
        }
    }
    if l.rank() == 0 {
        l = GLattice::trivial(g.clone(), 1);
    }
    let p = random_unimodular(l.rank(), rng);
    l.change_basis(&p).unwrap()
}

pub fn corpus_for(name: &str, g: Arc<FiniteGroup>) -> GroupCorpus {
    let mut entries: Vec<Entry> = catalog_lattices(&g)
        .into_iter()
        .map(|(label, lattice)| Entry { group: name.to_string(), label, lattice })
        .collect();
    let mut rng = rng_for(name, 0x5eed);
    for i in 0..RANDOM_PER_GROUP {
        entries.push(Entry { group: name.to_string(), label: format!("random_{i}"), lattice: random_lattice(&g, &mut rng) });
    }
    GroupCorpus { name: name.to_string(), group: g, entries }
}

pub fn corpus(max_order: usize) -> Vec<GroupCorpus> {
    catalog::small_groups(max_order).into_iter().map(|NamedGroup { name, group }| corpus_for(&name, Arc::new(group))).collect()
}

pub fn group(name: &str) -> Arc<FiniteGroup> {
    Arc::new(catalog::small_groups(16).into_iter().find(|g| g.name == name).expect("catalog group").group)
}
