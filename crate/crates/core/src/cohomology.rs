//! Tate cohomology of subgroups acting on lattices, and `Ext^1` between
//! lattices.
//!
//! Every group is computed as the torsion of an explicit cokernel:
//!
//! * `Ĥ^-1(H, L) = ker N_H / I_H L`, the torsion of `L / I_H L`, where
//!   `I_H L` is spanned by the columns of `A(s) - 1` for generators `s` of `H`;
//! * `Ĥ^0(H, L) = L^H / N_H L`, the cokernel of the norm written in a basis
//!   of `L^H`;
//! * `H^1(H, L)`, the torsion of `L^t / δL` where `δx = (A(s) x - x)_s`
//!   records a coboundary on the `t` generators. Cocycles form a saturated
//!   sublattice of `L^t` of the same rank as the coboundaries;
//! * `Ĥ^2(H, L) = H^1(H, J ⊗ L)` with `J = Z[H] / Z·N_H`, from the exact
//!   sequence `0 -> L -> Z[H] ⊗ L -> J ⊗ L -> 0` with induced middle term.

use std::sync::Arc;

use crate::abelian::AbelianGroupInvariants;
use crate::error::{Error, Result};
use crate::group::{FiniteGroup, Subgroup};
use crate::lattice::{EchelonBasis, GLattice};
use crate::IntMatrix;

pub const SUPPORTED_DEGREES: [i32; 4] = [-1, 0, 1, 2];

/// Checks that `h` is a subgroup of `group`: sorted in-range elements,
/// containing the identity and closed under multiplication.
pub fn check_subgroup(group: &FiniteGroup, h: &Subgroup) -> Result<()> {
    let n = group.order();
    let sorted = h.elements.windows(2).all(|w| w[0] < w[1]);
    if !sorted || h.elements.first() != Some(&0) || h.elements.iter().any(|&e| e >= n) {
        return Err(Error::input("not a subgroup: elements must be sorted, in range and contain the identity"));
    }
    for &a in &h.elements {
        for &b in &h.elements {
            if !h.contains(group.mul(a, b)) {
                return Err(Error::input("not a subgroup: not closed under multiplication"));
            }
        }
    }
    if h.generators.iter().any(|&s| !h.contains(s)) || group.closure(&h.generators) != h.elements {
        return Err(Error::input("subgroup generators do not generate its element set"));
    }
    Ok(())
}

pub fn tate_cohomology(l: &GLattice, h: &Subgroup, degree: i32) -> Result<AbelianGroupInvariants> {
    check_subgroup(l.group(), h)?;
    if !SUPPORTED_DEGREES.contains(&degree) {
        return Err(Error::input(format!("unsupported cohomological degree {degree}")));
    }
    if h.is_trivial() || l.rank() == 0 {
        return Ok(AbelianGroupInvariants::trivial());
    }
    let out = match degree {
        -1 => h_minus_one(l, h)?,
        0 => h_zero(l, h)?,
        1 => h_one(l, h)?,
        _ => h_two(l, h)?,
    };
    debug_assert!(out.is_finite() && out.is_normalized());
    Ok(out)
}

/// `[A(s_1) - 1 | A(s_2) - 1 | …]`, whose column span is `I_H L`.
pub fn augmentation_matrix(l: &GLattice, h: &Subgroup) -> Result<IntMatrix> {
    let r = l.rank();
    let parts = l
        .subgroup_generator_matrices(h)?
        .iter()
        .map(|a| a.try_sub(&IntMatrix::identity(r)).map(|m| m.transpose()))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(IntMatrix::vstack(&parts, r).transpose())
}

/// `[A(s_1) - 1; A(s_2) - 1; …]`, the coboundary map `L -> L^t`.
pub fn coboundary_matrix(l: &GLattice, h: &Subgroup) -> Result<IntMatrix> {
    let r = l.rank();
    let parts = l
        .subgroup_generator_matrices(h)?
        .iter()
        .map(|a| a.try_sub(&IntMatrix::identity(r)))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(IntMatrix::vstack(&parts, r))
}

/// `N_H = Σ_{h ∈ H} A(h)`.
pub fn norm_matrix(l: &GLattice, h: &Subgroup) -> Result<IntMatrix> {
    let mut n = IntMatrix::zeros(l.rank(), l.rank());
    for &e in &h.elements {
        n = n.try_add(&l.matrix_of(e)?)?;
    }
    Ok(n)
}

/// Rows of `A(s) - 1` for each generator `s` of `h`, indexed by
/// `(generator, row)` and then column.
fn difference_entries(l: &GLattice, h: &Subgroup) -> Result<Vec<Vec<Vec<(usize, i64)>>>> {
    let r = l.rank();
    h.generators
        .iter()
        .map(|&s| {
            let mut rows: Vec<Vec<(usize, i64)>> = vec![Vec::new(); r];
            for (j, col) in l.sparse_matrix_of(s)?.into_iter().enumerate() {
                let mut diagonal = false;
                for (i, a) in col {
                    let v = if i == j {
                        diagonal = true;
                        a - 1
                    } else {
                        a
                    };
                    if v != 0 {
                        rows[i].push((j, v));
                    }
                }
                if !diagonal {
                    rows[j].push((j, -1));
                }
            }
            Ok(rows)
        })
        .collect()
}

fn h_minus_one(l: &GLattice, h: &Subgroup) -> Result<AbelianGroupInvariants> {
    let r = l.rank();
    let parts = difference_entries(l, h)?;
    let mut rows: Vec<Vec<(usize, i64)>> = vec![Vec::new(); r];
    for (t, part) in parts.into_iter().enumerate() {
        for (i, row) in part.into_iter().enumerate() {
            rows[i].extend(row.into_iter().map(|(j, v)| (t * r + j, v)));
        }
    }
    let cols = r * h.generators.len();
    Ok(AbelianGroupInvariants::sparse_cokernel_torsion(&rows, cols, h.order()))
}

fn h_zero(l: &GLattice, h: &Subgroup) -> Result<AbelianGroupInvariants> {
    let fixed = l.fixed_sublattice(h)?;
    if fixed.cols() == 0 {
        return Ok(AbelianGroupInvariants::trivial());
    }
    let norm = norm_matrix(l, h)?;
    let coords = EchelonBasis::new(&fixed)?
        .coordinates_of_columns(&norm)
        .expect("norms are fixed vectors");
    Ok(AbelianGroupInvariants::cokernel(&coords))
}

fn h_one(l: &GLattice, h: &Subgroup) -> Result<AbelianGroupInvariants> {
    let rows: Vec<_> = difference_entries(l, h)?.into_iter().flatten().collect();
    Ok(AbelianGroupInvariants::sparse_cokernel_torsion(&rows, l.rank(), h.order()))
}

fn h_two(l: &GLattice, h: &Subgroup) -> Result<AbelianGroupInvariants> {
    let (restricted, sub) = l.restrict(h)?;
    let j = GLattice::norm_one(sub.clone()).dual()?;
    let shifted = j.tensor(&restricted)?;
    h_one(&shifted, &whole_of(&sub))
}

/// The whole group as a subgroup of itself, without the subgroup inventory.
pub fn whole_of(group: &Arc<FiniteGroup>) -> Subgroup {
    Subgroup {
        id: usize::MAX,
        elements: (0..group.order()).collect(),
        generators: group.generator_elements().to_vec(),
        class_representative: usize::MAX,
        is_class_representative: true,
    }
}

/// `Ĥ^i` for every subgroup, in id order.
pub fn cohomology_table(l: &GLattice, degree: i32) -> Result<Vec<(usize, AbelianGroupInvariants)>> {
    l.group().subgroups()?.iter().map(|h| Ok((h.id, tate_cohomology(l, h, degree)?))).collect()
}

/// `Ext^1_G(a, b) = H^1(G, Hom(a, b))`.
pub fn ext1(a: &GLattice, b: &GLattice) -> Result<AbelianGroupInvariants> {
    let hom = a.hom_lattice(b)?;
    if hom.rank() == 0 {
        return Ok(AbelianGroupInvariants::trivial());
    }
    h_one(&hom, &whole_of(a.group()))
}

/// Basis of `Hom_G(a, b)` as `b.rank() × a.rank()` matrices.
pub fn equivariant_homs(a: &GLattice, b: &GLattice) -> Result<Vec<IntMatrix>> {
    let hom = a.hom_lattice(b)?;
    let fixed = hom.fixed_sublattice(&whole_of(a.group()))?;
    Ok((0..fixed.cols()).map(|k| hom_vector_to_matrix(&fixed.column(k), a.rank(), b.rank())).collect())
}

/// Inverse of the identification `Hom(a, b) = a* ⊗ b`: entry `φ[j][i]` sits at
/// index `i * b_rank + j`.
pub fn hom_vector_to_matrix(v: &[i64], a_rank: usize, b_rank: usize) -> IntMatrix {
    IntMatrix::from_fn(b_rank, a_rank, |j, i| v[i * b_rank + j])
}

pub fn hom_matrix_to_vector(m: &IntMatrix) -> Vec<i64> {
    let (b_rank, a_rank) = m.shape();
    let mut v = vec![0; a_rank * b_rank];
    for i in 0..a_rank {
        for j in 0..b_rank {
            v[i * b_rank + j] = m[(j, i)];
        }
    }
    v
}

/// Whether `Ĥ^-1(H, l) = 0` for every subgroup `H`.
pub fn is_flasque(l: &GLattice) -> Result<bool> {
    for h in l.group().subgroups()? {
        if !tate_cohomology(l, h, -1)?.is_trivial() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Whether `H^1(H, l) = 0` for every subgroup `H`.
pub fn is_coflasque(l: &GLattice) -> Result<bool> {
    for h in l.group().subgroups()? {
        if !tate_cohomology(l, h, 1)?.is_trivial() {
            return Ok(false);
        }
    }
    Ok(true)
}
