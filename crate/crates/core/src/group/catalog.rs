//! Named small groups.
//!
//! Abstract constructions (metacyclic and semidirect products) are realized
//! through their left-regular permutation representation.

use std::collections::HashMap;
use std::hash::Hash;

use super::{FiniteGroup, Permutation};

pub fn trivial() -> FiniteGroup {
    FiniteGroup::trivial()
}

/// Cyclic group of order `n` acting on `n` points.
pub fn cyclic(n: usize) -> FiniteGroup {
    if n == 1 {
        return trivial();
    }
    let gen: Permutation = (0..n).map(|i| (i + 1) % n).collect();
    FiniteGroup::enumerate(vec![gen], n).expect("cyclic group")
}

/// Dihedral group of order `2n` acting on the vertices of an `n`-gon.
pub fn dihedral(n: usize) -> FiniteGroup {
    match n {
        1 => cyclic(2),
        2 => direct_product(&cyclic(2), &cyclic(2)),
        _ => {
            let rot: Permutation = (0..n).map(|i| (i + 1) % n).collect();
            let refl: Permutation = (0..n).map(|i| (n - i) % n).collect();
            FiniteGroup::enumerate(vec![rot, refl], n).expect("dihedral group")
        }
    }
}

pub fn symmetric(n: usize) -> FiniteGroup {
    if n == 1 {
        return trivial();
    }
    let cycle: Permutation = (0..n).map(|i| (i + 1) % n).collect();
    let mut swap: Permutation = (0..n).collect();
    swap.swap(0, 1);
    FiniteGroup::enumerate(vec![cycle, swap], n).expect("symmetric group")
}

pub fn alternating4() -> FiniteGroup {
    FiniteGroup::enumerate(vec![vec![1, 2, 0, 3], vec![1, 0, 3, 2]], 4).expect("A4")
}

/// Quaternion group of order 8.
pub fn quaternion() -> FiniteGroup {
    metacyclic(4, 2, 3, 2)
}

/// Product acting on the disjoint union of the two point sets.
pub fn direct_product(a: &FiniteGroup, b: &FiniteGroup) -> FiniteGroup {
    let (da, db) = (a.degree(), b.degree());
    let mut gens = Vec::new();
    for g in a.generators() {
        let mut p: Permutation = g.clone();
        p.extend(da..da + db);
        gens.push(p);
    }
    for g in b.generators() {
        let mut p: Permutation = (0..da).collect();
        p.extend(g.iter().map(|x| x + da));
        gens.push(p);
    }
    FiniteGroup::enumerate(gens, da + db).expect("direct product")
}

pub fn elementary_abelian(p: usize, rank: usize) -> FiniteGroup {
    (0..rank).fold(trivial(), |acc, _| if acc.order() == 1 { cyclic(p) } else { direct_product(&acc, &cyclic(p)) })
}

/// Regular permutation representation of the abstract group generated by
/// `gens` under `mul`.
pub fn regular<E: Clone + Eq + Hash + Ord>(identity: E, gens: &[E], mul: impl Fn(&E, &E) -> E) -> FiniteGroup {
    let mut elems = vec![identity.clone()];
    let mut index: HashMap<E, usize> = HashMap::from([(identity, 0)]);
    let mut i = 0;
    while i < elems.len() {
        for g in gens {
            let y = mul(&elems[i], g);
            if !index.contains_key(&y) {
                index.insert(y.clone(), elems.len());
                elems.push(y);
            }
        }
        i += 1;
    }
    let n = elems.len();
    let perms = gens.iter().map(|g| elems.iter().map(|x| index[&mul(g, x)]).collect::<Permutation>()).collect();
    FiniteGroup::enumerate(perms, n).expect("regular representation")
}

/// `<a, b | a^m = 1, b^n = a^t, b a b^-1 = a^k>`, order `m n`.
///
/// Requires `k^n ≡ 1` and `k t ≡ t (mod m)`.
pub fn metacyclic(m: u64, n: u64, k: u64, t: u64) -> FiniteGroup {
    assert!(m >= 1 && n >= 1);
    let kpow = |e: u64| (0..e).fold(1 % m, |acc, _| acc * k % m);
    assert_eq!(kpow(n), 1 % m, "k^n must be 1 mod m");
    assert_eq!(k * t % m, t % m, "k t must equal t mod m");
    let mul = |x: &(u64, u64), y: &(u64, u64)| {
        let i = (x.0 + kpow(x.1) * y.0) % m;
        let j = x.1 + y.1;
        if j >= n {
            ((i + t) % m, j - n)
        } else {
            (i, j)
        }
    };
    regular((0, 0), &[(1 % m, 0), (0, 1 % n)], mul)
}

/// `A ⋊ C_n` where `A = ⊕ Z/orders[i]` and the generator of `C_n` acts by
/// the integer matrix `action` (column `j` is the image of the `j`-th basis
/// element).
pub fn semidirect(orders: &[u64], action: &[Vec<u64>], n: u64) -> FiniteGroup {
    let d = orders.len();
    let apply = |v: &[u64]| -> Vec<u64> {
        (0..d).map(|i| (0..d).map(|j| action[i][j] * v[j]).sum::<u64>() % orders[i]).collect()
    };
    let apply_pow = |v: &[u64], e: u64| (0..e).fold(v.to_vec(), |acc, _| apply(&acc));
    let mul = |x: &(Vec<u64>, u64), y: &(Vec<u64>, u64)| {
        let moved = apply_pow(&y.0, x.1);
        let a = (0..d).map(|i| (x.0[i] + moved[i]) % orders[i]).collect();
        (a, (x.1 + y.1) % n)
    };
    let mut gens: Vec<(Vec<u64>, u64)> = (0..d)
        .map(|i| ((0..d).map(|j| u64::from(i == j) % orders[j]).collect(), 0))
        .collect();
    gens.push((vec![0; d], 1 % n));
    regular((vec![0; d], 0), &gens, mul)
}

#[derive(Debug)]
pub struct NamedGroup {
    pub name: String,
    pub group: FiniteGroup,
}

fn named(name: &str, group: FiniteGroup) -> NamedGroup {
    NamedGroup { name: name.to_string(), group }
}

fn product(a: FiniteGroup, b: FiniteGroup) -> FiniteGroup {
    direct_product(&a, &b)
}

/// One representative of every isomorphism class of groups of order at most
/// `max_order` (supported up to 16).
pub fn small_groups(max_order: usize) -> Vec<NamedGroup> {
    assert!(max_order <= 16, "catalog covers orders up to 16");
    let c = cyclic;
    let mut out = Vec::new();
    let mut push = |order: usize, name: &str, make: &dyn Fn() -> FiniteGroup| {
        if order <= max_order {
            let g = make();
            assert_eq!(g.order(), order, "{name}");
            out.push(named(name, g));
        }
    };
    push(1, "C1", &trivial);
    push(2, "C2", &|| c(2));
    push(3, "C3", &|| c(3));
    push(4, "C4", &|| c(4));
    push(4, "C2xC2", &|| elementary_abelian(2, 2));
    push(5, "C5", &|| c(5));
    push(6, "C6", &|| c(6));
    push(6, "S3", &|| symmetric(3));
    push(7, "C7", &|| c(7));
    push(8, "C8", &|| c(8));
    push(8, "C4xC2", &|| product(c(4), c(2)));
    push(8, "C2^3", &|| elementary_abelian(2, 3));
    push(8, "D8", &|| dihedral(4));
    push(8, "Q8", &quaternion);
    push(9, "C9", &|| c(9));
    push(9, "C3xC3", &|| elementary_abelian(3, 2));
    push(10, "C10", &|| c(10));
    push(10, "D10", &|| dihedral(5));
    push(11, "C11", &|| c(11));
    push(12, "C12", &|| c(12));
    push(12, "C6xC2", &|| product(c(6), c(2)));
    push(12, "A4", &alternating4);
    push(12, "D12", &|| dihedral(6));
    push(12, "Dic3", &|| metacyclic(3, 4, 2, 0));
    push(13, "C13", &|| c(13));
    push(14, "C14", &|| c(14));
    push(14, "D14", &|| dihedral(7));
    push(15, "C15", &|| c(15));
    push(16, "C16", &|| c(16));
    push(16, "C4xC4", &|| product(c(4), c(4)));
    push(16, "C8xC2", &|| product(c(8), c(2)));
    push(16, "M16", &|| metacyclic(8, 2, 5, 0));
    push(16, "C4:C4", &|| metacyclic(4, 4, 3, 0));
    push(16, "C2^2:C4", &|| semidirect(&[4, 2], &[vec![1, 0], vec![1, 1]], 2));
    push(16, "C4xC2xC2", &|| product(c(4), elementary_abelian(2, 2)));
    push(16, "C2xD8", &|| product(c(2), dihedral(4)));
    push(16, "C2xQ8", &|| product(c(2), quaternion()));
    push(16, "C4oD8", &|| semidirect(&[4, 2], &[vec![1, 2], vec![0, 1]], 2));
    push(16, "D16", &|| dihedral(8));
    push(16, "SD16", &|| metacyclic(8, 2, 3, 0));
    push(16, "Q16", &|| metacyclic(8, 2, 7, 4));
    push(16, "C2^4", &|| elementary_abelian(2, 4));
    out
}

/// Groups of order at most `max_order` all of whose Sylow subgroups are
/// cyclic, one per isomorphism-invariant profile. Every such group is a
/// split metacyclic `C_m ⋊ C_n` with `gcd(m, n) = 1`.
pub fn sylow_cyclic_groups(max_order: usize) -> Vec<NamedGroup> {
    let mut out: Vec<NamedGroup> = Vec::new();
    let mut seen: Vec<GroupProfile> = Vec::new();
    for order in 1..=max_order as u64 {
        for m in 1..=order {
            if order % m != 0 {
                continue;
            }
            let n = order / m;
            if num_integer::gcd(m, n) != 1 {
                continue;
            }
            for k in 1..m.max(2) {
                let kk = k % m.max(1);
                let kpow = (0..n).fold(1 % m, |acc, _| acc * kk % m);
                if kpow != 1 % m || (m > 1 && num_integer::gcd(kk, m) != 1) {
                    continue;
                }
                let g = metacyclic(m, n, kk, 0);
                if !g.is_sylow_cyclic() {
                    continue;
                }
                let profile = GroupProfile::of(&g);
                if seen.contains(&profile) {
                    continue;
                }
                seen.push(profile);
                out.push(named(&format!("C{m}:C{n}[{kk}]"), g));
            }
        }
    }
    out
}

/// Isomorphism invariants used to tell catalog groups apart.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroupProfile {
    pub order: usize,
    pub element_orders: Vec<usize>,
    pub center: usize,
    pub center_exponent: usize,
    pub subgroups: Option<usize>,
    pub abelian: bool,
}

impl GroupProfile {
    pub fn of(g: &FiniteGroup) -> Self {
        let mut element_orders: Vec<usize> = (0..g.order()).map(|a| g.element_order(a)).collect();
        element_orders.sort_unstable();
        GroupProfile {
            order: g.order(),
            element_orders,
            center: g.center_order(),
            center_exponent: (0..g.order())
                .filter(|&a| (0..g.order()).all(|b| g.mul(a, b) == g.mul(b, a)))
                .map(|a| g.element_order(a))
                .max()
                .unwrap_or(1),
            subgroups: g.subgroups().ok().map(|s| s.len()),
            abelian: g.is_abelian(),
        }
    }
}
