//! Second, independent linear-algebra path used to cross-check the main
//! kernel.
//!
//! * Invariant factors by repeated row Hermite reduction of the matrix and
//!   its transpose until diagonal, followed by gcd/lcm normalization.
//! * Saturated kernels by rational row reduction, clearing denominators and
//!   then p-saturating at every prime dividing the index.
//! * Finite cokernels with a known annihilator by elimination over the local
//!   rings `Z/p^N`.
//! * Tate cohomology from the defining quotients, built on the above.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::abelian::AbelianGroupInvariants;
use crate::error::{Error, Result};
use crate::group::{prime_factors, Subgroup};
use crate::lattice::GLattice;
use crate::{BigMatrix, IntMatrix, Rational};

/// Row Hermite form: upper echelon, positive pivots, entries above a pivot
/// reduced into `[0, pivot)`.
pub fn row_hermite(m: &BigMatrix) -> BigMatrix {
    let mut a = m.clone();
    let (rows, cols) = a.shape();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        for i in r + 1..rows {
            if a[(i, c)].is_zero() {
                continue;
            }
            let (x, y) = (a[(r, c)].clone(), a[(i, c)].clone());
            let e = x.extended_gcd(&y);
            let (gx, gy) = (&x / &e.gcd, &y / &e.gcd);
            // [e.x e.y; -gy gx] has determinant 1
            for j in 0..cols {
                let (p, q) = (a[(r, j)].clone(), a[(i, j)].clone());
                a[(r, j)] = &e.x * &p + &e.y * &q;
                a[(i, j)] = &gx * &q - &gy * &p;
            }
        }
        if a[(r, c)].is_zero() {
            continue;
        }
        if a[(r, c)].is_negative() {
            for j in 0..cols {
                a[(r, j)] = -a[(r, j)].clone();
            }
        }
        let p = a[(r, c)].clone();
        for i in 0..r {
            let q = a[(i, c)].div_floor(&p);
            if !q.is_zero() {
                for j in 0..cols {
                    let v = &q * &a[(r, j)];
                    a[(i, j)] -= v;
                }
            }
        }
        r += 1;
    }
    a
}

fn is_diagonal(a: &BigMatrix) -> bool {
    (0..a.rows()).all(|i| (0..a.cols()).all(|j| i == j || a[(i, j)].is_zero()))
}

/// Nonzero invariant factors, ascending with the divisibility chain.
pub fn invariant_factors(m: &BigMatrix) -> Vec<BigInt> {
    let mut a = row_hermite(m);
    while !is_diagonal(&a) {
        a = row_hermite(&a.transpose());
    }
    let mut d: Vec<BigInt> =
        (0..a.rows().min(a.cols())).map(|i| a[(i, i)].abs()).filter(|x| !x.is_zero()).collect();
    for i in 0..d.len() {
        for j in i + 1..d.len() {
            let g = d[i].gcd(&d[j]);
            let l = d[i].lcm(&d[j]);
            d[i] = g;
            d[j] = l;
        }
    }
    d
}

pub fn invariant_factors_int(m: &IntMatrix) -> Vec<BigInt> {
    invariant_factors(&m.to_big())
}

/// Reduced row echelon form over `Q`; returns the matrix and its pivot
/// columns.
pub fn rational_rref(m: &IntMatrix) -> (Vec<Vec<Rational>>, Vec<usize>) {
    let mut a: Vec<Vec<Rational>> =
        (0..m.rows()).map(|i| m.row(i).iter().map(|&x| Rational::from_integer(BigInt::from(x))).collect()).collect();
    let cols = m.cols();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..a.len()).find(|&i| !a[i][c].is_zero()) else { continue };
        a.swap(r, p);
        let inv = a[r][c].recip();
        for x in a[r].iter_mut() {
            *x = &*x * &inv;
        }
        for i in 0..a.len() {
            if i != r && !a[i][c].is_zero() {
                let f = a[i][c].clone();
                for j in 0..cols {
                    let v = &f * &a[r][j];
                    a[i][j] -= v;
                }
            }
        }
        pivots.push(c);
        r += 1;
        if r == a.len() {
            break;
        }
    }
    a.truncate(r);
    (a, pivots)
}

pub fn rational_rank(m: &IntMatrix) -> usize {
    rational_rref(m).1.len()
}

/// Integer basis (columns) of `{x : m x = 0} ⊗ Q`, denominators cleared, not
/// necessarily saturated.
pub fn rational_kernel(m: &IntMatrix) -> BigMatrix {
    let n = m.cols();
    let (rref, pivots) = rational_rref(m);
    let free: Vec<usize> = (0..n).filter(|c| !pivots.contains(c)).collect();
    let mut out = BigMatrix::zeros(n, free.len());
    for (k, &f) in free.iter().enumerate() {
        let mut v = vec![Rational::zero(); n];
        v[f] = Rational::one();
        for (row, &p) in pivots.iter().enumerate() {
            v[p] = -rref[row][f].clone();
        }
        let den = v.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
        for i in 0..n {
            out[(i, k)] = (&v[i] * Rational::from_integer(den.clone())).to_integer();
        }
    }
    out
}

/// Kernel of `m` modulo a prime, as vectors with entries in `[0, p)`.
fn kernel_mod_p(m: &BigMatrix, p: &BigInt) -> Vec<Vec<BigInt>> {
    let (rows, cols) = m.shape();
    let mut a: Vec<Vec<BigInt>> = (0..rows).map(|i| m.row(i).iter().map(|x| x.mod_floor(p)).collect()).collect();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        let Some(q) = (r..rows).find(|&i| !a[i][c].is_zero()) else { continue };
        a.swap(r, q);
        let inv = mod_inverse(&a[r][c], p);
        for x in a[r].iter_mut() {
            *x = (&*x * &inv).mod_floor(p);
        }
        for i in 0..rows {
            if i != r && !a[i][c].is_zero() {
                let f = a[i][c].clone();
                for j in 0..cols {
                    a[i][j] = (&a[i][j] - &f * &a[r][j]).mod_floor(p);
                }
            }
        }
        pivots.push(c);
        r += 1;
        if r == rows {
            break;
        }
    }
    (0..cols)
        .filter(|c| !pivots.contains(c))
        .map(|f| {
            let mut v = vec![BigInt::zero(); cols];
            v[f] = BigInt::one();
            for (row, &pc) in pivots.iter().enumerate() {
                v[pc] = (-&a[row][f]).mod_floor(p);
            }
            v
        })
        .collect()
}

fn mod_inverse(a: &BigInt, m: &BigInt) -> BigInt {
    let e = a.extended_gcd(m);
    assert!(e.gcd.is_one(), "not invertible");
    e.x.mod_floor(m)
}

fn big_prime_factors(n: &BigInt) -> Vec<BigInt> {
    let mut n = n.abs();
    let mut out = Vec::new();
    let mut p = BigInt::from(2);
    while &p * &p <= n {
        if (&n % &p).is_zero() {
            out.push(p.clone());
            while (&n % &p).is_zero() {
                n /= &p;
            }
        }
        p += 1;
    }
    if n > BigInt::one() {
        out.push(n);
    }
    out
}

/// Saturation `(span_Q B) ∩ Z^n` of a full-column-rank basis `b`.
pub fn saturate(b: &BigMatrix) -> BigMatrix {
    let mut b = b.clone();
    loop {
        let index: BigInt = invariant_factors(&b).iter().product();
        if index.is_one() || b.cols() == 0 {
            return b;
        }
        let p = big_prime_factors(&index).remove(0);
        // some combination B x with x ≢ 0 (mod p) is divisible by p
        let x = kernel_mod_p(&b, &p).remove(0);
        let k = x.iter().position(|v| !v.is_zero()).expect("nonzero kernel vector");
        let mut y = vec![BigInt::zero(); b.rows()];
        for (j, xj) in x.iter().enumerate() {
            for i in 0..b.rows() {
                y[i] += xj * &b[(i, j)];
            }
        }
        // x_k is a unit mod p, so replacing column k keeps full rank and
        // enlarges the lattice by index p.
        for i in 0..b.rows() {
            debug_assert!((&y[i] % &p).is_zero());
            b[(i, k)] = &y[i] / &p;
        }
    }
}

/// Saturated kernel basis of `m`.
pub fn saturated_kernel(m: &IntMatrix) -> BigMatrix {
    saturate(&rational_kernel(m))
}

/// Whether two full-column-rank bases span the same lattice.
pub fn same_lattice(a: &BigMatrix, b: &BigMatrix) -> bool {
    if a.rows() != b.rows() || a.cols() != b.cols() {
        return false;
    }
    let join = BigMatrix::hstack(&[a.clone(), b.clone()], a.rows());
    let da: BigInt = invariant_factors(a).iter().product();
    let db: BigInt = invariant_factors(b).iter().product();
    let dj: BigInt = invariant_factors(&join).iter().product();
    let rank = invariant_factors(&join).len();
    rank == a.cols() && da == dj && db == dj
}

/// Invariants of a finite abelian group `coker(m)` known to be annihilated by
/// `exponent`, by Smith reduction over each `Z/p^N` with `p | exponent` and
/// `p^N` exceeding the `p`-part of `exponent`. Free summands of the cokernel
/// are discarded.
pub fn cokernel_torsion_local(m: &IntMatrix, exponent: u64) -> AbelianGroupInvariants {
    let mut orders = Vec::new();
    for (p, e) in prime_factors(exponent as usize) {
        let p = p as u128;
        let modulus = p.pow(e as u32 + 1);
        for a in local_valuations(m, p, modulus, e as u32 + 1) {
            if a >= 1 && a <= e as u32 {
                orders.push(BigInt::from(p.pow(a)));
            }
        }
    }
    AbelianGroupInvariants::from_cyclic_orders(orders)
}

/// `p`-adic valuations of the invariant factors of `m` modulo `p^cap`; zero
/// and highly divisible factors both show up as `cap`.
fn local_valuations(m: &IntMatrix, p: u128, modulus: u128, cap: u32) -> Vec<u32> {
    let (rows, cols) = m.shape();
    let reduce = |x: i64| -> u128 { (x as i128).rem_euclid(modulus as i128) as u128 };
    let mut a: Vec<Vec<u128>> = (0..rows).map(|i| m.row(i).iter().map(|&x| reduce(x)).collect()).collect();
    let valuation = |x: u128| -> u32 {
        if x == 0 {
            return cap;
        }
        let mut v = 0;
        let mut y = x;
        while y % p == 0 {
            y /= p;
            v += 1;
        }
        v
    };
    let mut live_rows: Vec<usize> = (0..rows).collect();
    let mut live_cols: Vec<usize> = (0..cols).collect();
    let mut out = Vec::new();
    while !live_rows.is_empty() && !live_cols.is_empty() {
        let mut best: Option<(usize, usize, u32)> = None;
        'search: for (ri, &i) in live_rows.iter().enumerate() {
            for (ci, &j) in live_cols.iter().enumerate() {
                let v = valuation(a[i][j]);
                if best.map_or(true, |(_, _, b)| v < b) {
                    best = Some((ri, ci, v));
                    if v == 0 {
                        break 'search;
                    }
                }
            }
        }
        let (ri, ci, v) = best.expect("nonempty");
        if v >= cap {
            break;
        }
        let (pi, pj) = (live_rows[ri], live_cols[ci]);
        let pp = p.pow(v);
        let unit = a[pi][pj] / pp;
        let inv = mod_inverse_u128(unit % modulus, modulus);
        // clear column pj using row pi
        for &i in &live_rows {
            if i == pi || a[i][pj] == 0 {
                continue;
            }
            let f = mul_mod(a[i][pj] / pp, inv, modulus);
            for &j in &live_cols {
                if a[pi][j] != 0 {
                    a[i][j] = (a[i][j] + modulus - mul_mod(f, a[pi][j], modulus)) % modulus;
                }
            }
        }
        // the pivot row now only matters through its pivot entry
        out.push(v);
        live_rows.swap_remove(ri);
        live_cols.swap_remove(ci);
    }
    let remaining = live_rows.len().min(live_cols.len());
    out.extend(std::iter::repeat(cap).take(remaining));
    out
}

fn mul_mod(a: u128, b: u128, m: u128) -> u128 {
    (a % m) * (b % m) % m
}

fn mod_inverse_u128(a: u128, m: u128) -> u128 {
    let inv = mod_inverse(&BigInt::from(a), &BigInt::from(m));
    inv.to_u128().expect("small modulus")
}

/// Tate cohomology along the second path. Uses every element of `h`, the
/// norm-kernel presentation for degree −1 and the fixed-point presentation
/// for degree 0, each reduced locally at the primes dividing `|H|`.
pub fn tate_cohomology(l: &GLattice, h: &Subgroup, degree: i32) -> Result<AbelianGroupInvariants> {
    crate::cohomology::check_subgroup(l.group(), h)?;
    let r = l.rank();
    if h.is_trivial() || r == 0 {
        return Ok(AbelianGroupInvariants::trivial());
    }
    let order = h.order() as u64;
    let mats: Vec<IntMatrix> = h.elements.iter().map(|&e| l.matrix_of(e)).collect::<Result<_>>()?;
    let minus_one: Vec<IntMatrix> =
        mats.iter().map(|a| a.try_sub(&IntMatrix::identity(r))).collect::<Result<_, _>>()?;
    match degree {
        -1 => {
            // columns (A(h) - 1) e_j span I_H L
            let span = IntMatrix::hstack(&minus_one, r);
            Ok(cokernel_torsion_local(&span, order))
        }
        0 => {
            let mut norm = IntMatrix::zeros(r, r);
            for a in &mats {
                norm = norm.try_add(a)?;
            }
            Ok(cokernel_torsion_local(&norm, order))
        }
        1 => {
            let delta = IntMatrix::vstack(&minus_one, r);
            Ok(cokernel_torsion_local(&delta, order))
        }
        2 => {
            let (restricted, sub) = l.restrict(h)?;
            let j = GLattice::norm_one(sub.clone()).dual()?;
            let shifted = j.tensor(&restricted)?;
            tate_cohomology(&shifted, &crate::cohomology::whole_of(&sub), 1)
        }
        _ => Err(Error::input(format!("unsupported cohomological degree {degree}"))),
    }
}

/// `Ĥ^-1(H, L) = ker N_H / I_H L` computed literally: a saturated basis of
/// `ker N_H` from the rational kernel, coordinates of the generators of
/// `I_H L` in it, and invariant factors of that coordinate matrix. Intended
/// for small ranks.
pub fn norm_kernel_quotient(l: &GLattice, h: &Subgroup) -> Result<AbelianGroupInvariants> {
    crate::cohomology::check_subgroup(l.group(), h)?;
    let r = l.rank();
    if h.is_trivial() || r == 0 {
        return Ok(AbelianGroupInvariants::trivial());
    }
    let mut norm = IntMatrix::zeros(r, r);
    let mut gens = Vec::new();
    for &e in &h.elements {
        let a = l.matrix_of(e)?;
        norm = norm.try_add(&a)?;
        gens.push(a.try_sub(&IntMatrix::identity(r))?);
    }
    let kernel = saturated_kernel(&norm);
    if kernel.cols() == 0 {
        return Ok(AbelianGroupInvariants::trivial());
    }
    let span = IntMatrix::hstack(&gens, r).to_big();
    let coords = coordinates(&kernel, &span).ok_or_else(|| Error::input("I_H L not inside ker N"))?;
    let d = invariant_factors(&coords);
    let free_rank = kernel.cols() - d.len();
    debug_assert_eq!(free_rank, 0);
    Ok(AbelianGroupInvariants::from_cyclic_orders(d.into_iter().chain(std::iter::repeat(BigInt::zero()).take(free_rank))))
}

/// Integer coordinates of the columns of `y` in a full-column-rank basis
/// `b`, via rational elimination.
fn coordinates(b: &BigMatrix, y: &BigMatrix) -> Option<BigMatrix> {
    let k = b.cols();
    let n = b.rows();
    let aug: Vec<Vec<Rational>> = (0..n)
        .map(|i| (0..k + y.cols()).map(|j| {
            let v = if j < k { b[(i, j)].clone() } else { y[(i, j - k)].clone() };
            Rational::from_integer(v)
        }).collect())
        .collect();
    let mut a = aug;
    let mut r = 0;
    let mut pivots = Vec::new();
    for c in 0..k {
        let p = (r..n).find(|&i| !a[i][c].is_zero())?;
        a.swap(r, p);
        let inv = a[r][c].recip();
        for x in a[r].iter_mut() {
            *x = &*x * &inv;
        }
        for i in 0..n {
            if i != r && !a[i][c].is_zero() {
                let f = a[i][c].clone();
                for j in 0..a[i].len() {
                    let v = &f * &a[r][j];
                    a[i][j] -= v;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    // rows below k must vanish for y to lie in the span
    for row in a.iter().skip(k) {
        if row[k..].iter().any(|x| !x.is_zero()) {
            return None;
        }
    }
    let mut out = BigMatrix::zeros(k, y.cols());
    for i in 0..k {
        for j in 0..y.cols() {
            let v = &a[i][k + j];
            if !v.is_integer() {
                return None;
            }
            out[(i, j)] = v.to_integer();
        }
    }
    Some(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::catalog;
    use crate::linalg;
    use std::sync::Arc;

    fn mat(rows: Vec<Vec<i64>>) -> IntMatrix {
        let c = rows.first().map_or(0, |r| r.len());
        IntMatrix::from_rows(rows, c)
    }

    #[test]
    fn hermite_diagonalization() {
        let m = mat(vec![vec![2, 4, 4], vec![-6, 6, 12], vec![10, -4, -16]]);
        assert_eq!(invariant_factors_int(&m), [2, 6, 12].map(BigInt::from).to_vec());
        assert_eq!(invariant_factors_int(&mat(vec![vec![2, 0], vec![0, 3]])), [1, 6].map(BigInt::from).to_vec());
        assert!(invariant_factors_int(&mat(vec![vec![0]])).is_empty());
    }

    #[test]
    fn saturation_and_kernel() {
        let b = BigMatrix::from_rows(vec![vec![BigInt::from(2)], vec![BigInt::from(4)]], 1);
        let s = saturate(&b);
        assert!(same_lattice(&s, &BigMatrix::from_rows(vec![vec![BigInt::from(1)], vec![BigInt::from(2)]], 1)));
        let m = mat(vec![vec![2, 4, 6], vec![1, 1, 1]]);
        let k = saturated_kernel(&m);
        assert!(same_lattice(&k, &linalg::integer_kernel_int(&m).unwrap().to_big()));
    }

    #[test]
    fn local_elimination() {
        let m = mat(vec![vec![2, 0, 0], vec![0, 4, 0], vec![0, 0, 0]]);
        let g = cokernel_torsion_local(&m, 8);
        assert_eq!(g.torsion, vec![BigInt::from(2), BigInt::from(4)]);
        let m = mat(vec![vec![6, 0], vec![0, 10]]);
        assert_eq!(cokernel_torsion_local(&m, 60).torsion, vec![BigInt::from(2), BigInt::from(30)]);
    }

    #[test]
    fn agrees_with_main_path_on_small_groups() {
        for named in catalog::small_groups(8) {
            let g = Arc::new(named.group);
            let lattices = [GLattice::norm_one(g.clone()), GLattice::norm_one(g.clone()).dual().unwrap(), GLattice::regular(g.clone())];
            for l in &lattices {
                for h in g.subgroups().unwrap() {
                    for i in [-1, 0, 1, 2] {
                        assert_eq!(
                            tate_cohomology(l, h, i).unwrap(),
                            crate::cohomology::tate_cohomology(l, h, i).unwrap(),
                            "{} H{} deg {i}",
                            named.name,
                            h.id
                        );
                    }
                    assert_eq!(
                        norm_kernel_quotient(l, h).unwrap(),
                        crate::cohomology::tate_cohomology(l, h, -1).unwrap()
                    );
                }
            }
        }
    }
}
