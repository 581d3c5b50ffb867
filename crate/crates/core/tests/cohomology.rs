mod common;

use std::sync::Arc;

use galois_tori::cohomology::{cohomology_table, ext1, is_coflasque, is_flasque, tate_cohomology, whole_of};
use galois_tori::group::catalog;
use galois_tori::{oracle, AbelianGroupInvariants, GLattice};

#[test]
fn cyclic_groups_on_trivial_and_sign_lattices() {
    for n in 2..=9 {
        let g = Arc::new(catalog::cyclic(n));
        let z = GLattice::trivial(g.clone(), 1);
        let whole = whole_of(&g);
        assert_eq!(tate_cohomology(&z, &whole, 0).unwrap(), AbelianGroupInvariants::cyclic(n as u64));
        assert_eq!(tate_cohomology(&z, &whole, 2).unwrap(), AbelianGroupInvariants::cyclic(n as u64));
        assert!(tate_cohomology(&z, &whole, -1).unwrap().is_trivial());
        assert!(tate_cohomology(&z, &whole, 1).unwrap().is_trivial());
    }
    let c2 = Arc::new(catalog::cyclic(2));
    let sign = GLattice::sign(c2.clone(), &c2.subgroups().unwrap()[0]).unwrap();
    assert_eq!(tate_cohomology(&sign, &whole_of(&c2), -1).unwrap(), AbelianGroupInvariants::cyclic(2));
    assert_eq!(tate_cohomology(&sign, &whole_of(&c2), 1).unwrap(), AbelianGroupInvariants::cyclic(2));
    assert!(tate_cohomology(&sign, &whole_of(&c2), 0).unwrap().is_trivial());
}

#[test]
fn main_path_matches_oracles_on_small_groups() {
    for gc in common::corpus(8) {
        for e in &gc.entries {
            for h in gc.group.subgroups().unwrap() {
                for degree in -1..=2 {
                    let main = tate_cohomology(&e.lattice, h, degree).unwrap();
                    let other = oracle::tate_cohomology(&e.lattice, h, degree).unwrap();
                    assert_eq!(main, other, "{}/{} H{} degree {degree}", gc.name, e.label, h.id);
                }
                if e.lattice.rank() <= 8 {
                    let literal = oracle::norm_kernel_quotient(&e.lattice, h).unwrap();
                    assert_eq!(literal, tate_cohomology(&e.lattice, h, -1).unwrap(), "{}/{}", gc.name, e.label);
                }
            }
        }
    }
}

#[test]
fn direct_sums_add() {
    let g = common::group("D8");
    let a = GLattice::norm_one(g.clone());
    let b = GLattice::norm_one(g.clone()).dual().unwrap();
    let sum = a.direct_sum(&b).unwrap();
    for degree in -1..=2 {
        let ta = cohomology_table(&a, degree).unwrap();
        let tb = cohomology_table(&b, degree).unwrap();
        let ts = cohomology_table(&sum, degree).unwrap();
        for ((id, s), ((_, x), (_, y))) in ts.iter().zip(ta.iter().zip(&tb)) {
            assert_eq!(*s, x.direct_sum(y), "degree {degree}, subgroup {id}");
        }
    }
}

#[test]
fn norm_one_of_klein_four_is_neither() {
    let g = common::group("C2xC2");
    let l = GLattice::norm_one(g.clone());
    assert!(!is_flasque(&l).unwrap());
    assert!(!is_coflasque(&l.dual().unwrap()).unwrap());
    let abelianization = AbelianGroupInvariants::cyclic(2).direct_sum(&AbelianGroupInvariants::cyclic(2));
    assert_eq!(tate_cohomology(&l, &whole_of(&g), -1).unwrap(), abelianization);
}

#[test]
fn ext_from_permutation_into_coflasque_vanishes() {
    let g = common::group("S3");
    let z = GLattice::trivial(g.clone(), 1);
    let res = galois_tori::resolve::coflasque_cover(&GLattice::norm_one(g.clone())).unwrap();
    assert!(ext1(&z, &res.kernel).unwrap().is_trivial());
    assert!(ext1(&GLattice::regular(g), &res.kernel).unwrap().is_trivial());
}

#[test]
fn invalid_degree_is_an_input_error() {
    let g = Arc::new(catalog::cyclic(3));
    let err = tate_cohomology(&GLattice::trivial(g.clone(), 1), &whole_of(&g), 3).unwrap_err();
    assert!(matches!(err, galois_tori::Error::Input(_)));
}
