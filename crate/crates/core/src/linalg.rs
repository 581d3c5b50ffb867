//! Exact integer linear algebra: Smith and Hermite normal forms, saturated
//! integer kernels, and integral linear solving.
//!
//! Routines are generic over [`ExactInt`] and report [`Overflow`] for machine
//! integers; the `*_int` wrappers at the bottom run on `i64` first and redo
//! the computation over `BigInt` when needed.

use std::collections::BTreeSet;

use num_bigint::BigInt;

use crate::matrix::Matrix;
use crate::num::{exact_or_big, Exact, ExactInt, Overflow};

/// `u * m * v == s` with `s` diagonal, `s[i][i] | s[i+1][i+1]`, entries >= 0.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SmithForm<T> {
    pub s: Matrix<T>,
    pub u: Matrix<T>,
    pub v: Matrix<T>,
}

impl<T: ExactInt> SmithForm<T> {
    /// Nonzero diagonal entries, in order.
    pub fn invariant_factors(&self) -> Vec<T> {
        let n = self.s.rows().min(self.s.cols());
        (0..n).map(|i| self.s[(i, i)].clone()).take_while(|d| !d.is_zero()).collect()
    }

    pub fn rank(&self) -> usize {
        self.invariant_factors().len()
    }
}

/// Position of the nonzero entry of least absolute value in rows `r0..` and
/// columns `c0..`.
fn min_pivot<T: ExactInt>(a: &Matrix<T>, r0: usize, c0: usize) -> Option<(usize, usize)> {
    let mut best: Option<(usize, usize, T)> = None;
    for i in r0..a.rows() {
        for j in c0..a.cols() {
            let v = &a[(i, j)];
            if v.is_zero() {
                continue;
            }
            let av = v.abs();
            if best.as_ref().map_or(true, |(_, _, b)| av < *b) {
                let unit = av.is_one();
                best = Some((i, j, av));
                if unit {
                    return best.map(|(i, j, _)| (i, j));
                }
            }
        }
    }
    best.map(|(i, j, _)| (i, j))
}

/// Smallest nonzero entry of row `t` / column `t` in the trailing block.
fn min_in_cross<T: ExactInt>(a: &Matrix<T>, t: usize) -> Option<(usize, usize)> {
    let mut best: Option<(usize, usize, T)> = None;
    let consider = |i: usize, j: usize, best: &mut Option<(usize, usize, T)>| {
        let v = &a[(i, j)];
        if !v.is_zero() {
            let av = v.abs();
            if best.as_ref().map_or(true, |(_, _, b)| av < *b) {
                *best = Some((i, j, av));
            }
        }
    };
    consider(t, t, &mut best);
    for i in t + 1..a.rows() {
        consider(i, t, &mut best);
    }
    for j in t + 1..a.cols() {
        consider(t, j, &mut best);
    }
    best.map(|(i, j, _)| (i, j))
}

/// Core Smith elimination. Row operations are mirrored into `u`, column
/// operations into `v`, when present.
fn smith_in_place<T: ExactInt>(
    a: &mut Matrix<T>,
    mut u: Option<&mut Matrix<T>>,
    mut v: Option<&mut Matrix<T>>,
) -> Exact<()> {
    let (m, n) = a.shape();
    for t in 0..m.min(n) {
        let Some((pi, pj)) = min_pivot(a, t, t) else {
            break;
        };
        a.swap_rows(t, pi);
        if let Some(u) = u.as_deref_mut() {
            u.swap_rows(t, pi);
        }
        a.swap_cols(t, pj);
        if let Some(v) = v.as_deref_mut() {
            v.swap_cols(t, pj);
        }
        loop {
            let (pi, pj) = min_in_cross(a, t).expect("pivot vanished");
            if pi != t {
                a.swap_rows(t, pi);
                if let Some(u) = u.as_deref_mut() {
                    u.swap_rows(t, pi);
                }
            }
            if pj != t {
                a.swap_cols(t, pj);
                if let Some(v) = v.as_deref_mut() {
                    v.swap_cols(t, pj);
                }
            }
            let p = a[(t, t)].clone();
            let mut clean = true;
            for i in t + 1..m {
                if a[(i, t)].is_zero() {
                    continue;
                }
                let q = a[(i, t)].clone() / p.clone();
                a.row_sub_mul(i, &q, t)?;
                if let Some(u) = u.as_deref_mut() {
                    u.row_sub_mul(i, &q, t)?;
                }
                clean &= a[(i, t)].is_zero();
            }
            for j in t + 1..n {
                if a[(t, j)].is_zero() {
                    continue;
                }
                let q = a[(t, j)].clone() / p.clone();
                a.col_sub_mul(j, &q, t)?;
                if let Some(v) = v.as_deref_mut() {
                    v.col_sub_mul(j, &q, t)?;
                }
                clean &= a[(t, j)].is_zero();
            }
            if !clean {
                continue;
            }
            // Row and column are clear; enforce divisibility of the rest.
            let offender = if p.is_unit() {
                None
            } else {
                (t + 1..m).find(|&i| (t + 1..n).any(|j| !(a[(i, j)].clone() % p.clone()).is_zero()))
            };
            match offender {
                Some(i) => {
                    a.row_sub_mul(t, &-T::one(), i)?;
                    if let Some(u) = u.as_deref_mut() {
                        u.row_sub_mul(t, &-T::one(), i)?;
                    }
                }
                None => break,
            }
        }
        if a[(t, t)].is_negative() {
            a.negate_row(t);
            if let Some(u) = u.as_deref_mut() {
                u.negate_row(t);
            }
        }
    }
    Ok(())
}

pub fn smith_normal_form<T: ExactInt>(m: &Matrix<T>) -> Exact<SmithForm<T>> {
    let mut s = m.clone();
    let mut u = Matrix::identity(m.rows());
    let mut v = Matrix::identity(m.cols());
    smith_in_place(&mut s, Some(&mut u), Some(&mut v))?;
    Ok(SmithForm { s, u, v })
}

/// Nonzero invariant factors of `m` (ascending, each dividing the next).
///
/// Unit pivots are eliminated on a sparse representation first; only the
/// residual block without unit entries goes through dense elimination.
pub fn invariant_factors<T: ExactInt>(m: &Matrix<T>) -> Exact<Vec<T>> {
    let rows = (0..m.rows())
        .map(|i| m.row(i).iter().enumerate().filter(|(_, v)| !v.is_zero()).map(|(j, v)| (j, v.clone())).collect())
        .collect();
    sparse_invariant_factors(rows, m.cols())
}

/// Invariant factors of a matrix given by rows of `(column, value)` pairs
/// sorted by column.
pub fn sparse_invariant_factors<T: ExactInt>(rows: Vec<Vec<(usize, T)>>, cols: usize) -> Exact<Vec<T>> {
    eliminate_sparse(rows, cols, (cols / 8).max(32))
}

fn eliminate_sparse<T: ExactInt>(mut rows: Vec<Vec<(usize, T)>>, cols: usize, heavy_len: usize) -> Exact<Vec<T>> {
    // rows past the fill threshold, kept dense and never used as pivots
    let mut heavy: Vec<Vec<T>> = Vec::new();
    let densify = |r: Vec<(usize, T)>| {
        let mut d = vec![T::zero(); cols];
        for (j, v) in r {
            d[j] = v;
        }
        d
    };
    for r in rows.iter_mut() {
        if r.len() > heavy_len {
            heavy.push(densify(std::mem::take(r)));
        }
    }
    let mut col_count = vec![0usize; cols];
    // rows that contained each column at some point
    let mut col_rows: Vec<Vec<usize>> = vec![Vec::new(); cols];
    let mut by_len: BTreeSet<(usize, usize)> = BTreeSet::new();
    for (i, r) in rows.iter().enumerate() {
        for (j, _) in r {
            col_count[*j] += 1;
            col_rows[*j].push(i);
        }
        if r.iter().any(|(_, v)| v.is_unit()) {
            by_len.insert((r.len(), i));
        }
    }
    let mut units = 0usize;
    loop {
        // Markowitz-style choice among unit entries of the shortest rows.
        let mut best: Option<(usize, usize, usize)> = None;
        for (examined, &(len, ri)) in by_len.iter().enumerate() {
            if let Some((_, _, c)) = best {
                if c == 0 || examined >= 32 || (len - 1) > c {
                    break;
                }
            }
            for (j, v) in &rows[ri] {
                if v.is_unit() {
                    let cost = (len - 1) * (col_count[*j] - 1);
                    if best.map_or(true, |(_, _, c)| cost < c) {
                        best = Some((ri, *j, cost));
                    }
                }
            }
        }
        let Some((pr, pc, _)) = best else { break };
        let pivot_row = std::mem::take(&mut rows[pr]);
        by_len.remove(&(pivot_row.len(), pr));
        for (j, _) in &pivot_row {
            col_count[*j] -= 1;
        }
        let p = pivot_row.iter().find(|(j, _)| *j == pc).map(|(_, v)| v.clone()).expect("pivot entry");
        let mut targets = std::mem::take(&mut col_rows[pc]);
        targets.sort_unstable();
        targets.dedup();
        for ri in targets {
            let r = &rows[ri];
            let Ok(pos) = r.binary_search_by_key(&pc, |(j, _)| *j) else { continue };
            // p is a unit, so p^{-1} = p.
            let q = r[pos].1.mul_exact(&p)?;
            by_len.remove(&(r.len(), ri));
            for (j, _) in r.iter() {
                col_count[*j] -= 1;
            }
            let updated = sparse_axpy(r, &q, &pivot_row)?;
            if updated.len() > heavy_len {
                heavy.push(densify(updated));
                rows[ri] = Vec::new();
                continue;
            }
            for (j, _) in &updated {
                col_count[*j] += 1;
                if r.binary_search_by_key(j, |(c, _)| *c).is_err() {
                    col_rows[*j].push(ri);
                }
            }
            if updated.iter().any(|(_, v)| v.is_unit()) {
                by_len.insert((updated.len(), ri));
            }
            rows[ri] = updated;
        }
        for h in heavy.iter_mut() {
            if h[pc].is_zero() {
                continue;
            }
            let q = h[pc].mul_exact(&p)?;
            for (j, v) in &pivot_row {
                h[*j] = h[*j].sub_mul_exact(&q, v)?;
            }
        }
        units += 1;
    }
    rows.retain(|r| !r.is_empty());
    rows.extend(
        heavy.into_iter().map(|h| h.into_iter().enumerate().filter(|(_, v)| !v.is_zero()).collect::<Vec<_>>()),
    );
    rows.retain(|r| !r.is_empty());
    let mut out = vec![T::one(); units];
    if !rows.is_empty() {
        let mut used: Vec<usize> = rows.iter().flat_map(|r| r.iter().map(|(j, _)| *j)).collect();
        used.sort_unstable();
        used.dedup();
        let mut dense = Matrix::zeros(rows.len(), used.len());
        for (i, r) in rows.iter().enumerate() {
            for (j, v) in r {
                let jj = used.binary_search(j).expect("column index");
                dense[(i, jj)] = v.clone();
            }
        }
        smith_in_place(&mut dense, None, None)?;
        for t in 0..dense.rows().min(dense.cols()) {
            if dense[(t, t)].is_zero() {
                break;
            }
            out.push(dense[(t, t)].abs());
        }
    }
    Ok(out)
}

/// Exponents `k` with `0 < k < e` of the elementary divisors `p^k` of a
/// sparse integer matrix over `Z/p^e`, i.e. the `p`-primary torsion of its
/// cokernel whenever that torsion is killed by `p^(e-1)`.
///
/// Rows that fill in beyond a threshold are kept dense and are only used as
/// pivots once the sparse rows are exhausted.
pub fn sparse_local_torsion(rows: &[Vec<(usize, i64)>], cols: usize, p: u64, e: u32) -> Vec<u32> {
    local_torsion(rows, cols, p, e, (cols / 8).max(32))
}

fn local_torsion(rows: &[Vec<(usize, i64)>], cols: usize, p: u64, e: u32, heavy_len: usize) -> Vec<u32> {
    let m = p.checked_pow(e).filter(|&m| m < 1 << 31).expect("modulus fits in 31 bits");
    let mut light: Vec<Vec<(usize, u64)>> = rows
        .iter()
        .map(|r| r.iter().map(|&(j, v)| (j, v.rem_euclid(m as i64) as u64)).filter(|&(_, v)| v != 0).collect())
        .collect();
    let mut heavy: Vec<Vec<u64>> = Vec::new();
    let densify = |r: Vec<(usize, u64)>| {
        let mut d = vec![0; cols];
        for (j, v) in r {
            d[j] = v;
        }
        d
    };
    for r in light.iter_mut() {
        if r.len() > heavy_len {
            heavy.push(densify(std::mem::take(r)));
        }
    }
    let mut col_count = vec![0usize; cols];
    // light rows that contained each column at some point
    let mut col_rows: Vec<Vec<usize>> = vec![Vec::new(); cols];
    for (i, r) in light.iter().enumerate() {
        for &(j, _) in r {
            col_count[j] += 1;
            col_rows[j].push(i);
        }
    }
    let mut out = Vec::new();
    let mut pk = 1u64;
    for k in 0..e {
        // every remaining entry is divisible by p^k
        let exact = |v: u64| (v / pk) % p != 0;
        let mut by_len: BTreeSet<(usize, usize)> = light
            .iter()
            .enumerate()
            .filter(|(_, r)| r.iter().any(|&(_, v)| exact(v)))
            .map(|(i, r)| (r.len(), i))
            .collect();
        loop {
            // Markowitz-style choice among the shortest light rows.
            let mut best: Option<(usize, usize, usize)> = None;
            for (examined, &(len, ri)) in by_len.iter().enumerate() {
                if let Some((_, _, c)) = best {
                    if c == 0 || examined >= 32 || (len - 1) > c {
                        break;
                    }
                }
                for &(j, v) in &light[ri] {
                    if exact(v) {
                        let cost = (len - 1) * (col_count[j] - 1);
                        if best.map_or(true, |(_, _, c)| cost < c) {
                            best = Some((ri, j, cost));
                        }
                    }
                }
            }
            let (pivot_row, pc) = if let Some((pr, pc, _)) = best {
                let row = std::mem::take(&mut light[pr]);
                by_len.remove(&(row.len(), pr));
                for &(j, _) in &row {
                    col_count[j] -= 1;
                }
                (row, pc)
            } else if let Some((hi, pc)) =
                heavy.iter().enumerate().find_map(|(i, h)| h.iter().position(|&v| v != 0 && exact(v)).map(|j| (i, j)))
            {
                let dense = heavy.swap_remove(hi);
                (dense.into_iter().enumerate().filter(|&(_, v)| v != 0).collect(), pc)
            } else {
                break;
            };
            let x = pivot_row.iter().find(|&&(j, _)| j == pc).map(|&(_, v)| v).expect("pivot entry");
            let u_inv = mod_inverse(x / pk, m);
            let mut targets = std::mem::take(&mut col_rows[pc]);
            targets.sort_unstable();
            targets.dedup();
            for ri in targets {
                let r = &light[ri];
                let Ok(pos) = r.binary_search_by_key(&pc, |&(j, _)| j) else { continue };
                let q = (r[pos].1 / pk) * u_inv % m;
                by_len.remove(&(r.len(), ri));
                for &(j, _) in r.iter() {
                    col_count[j] -= 1;
                }
                let updated = modular_axpy(r, q, &pivot_row, m);
                if updated.len() > heavy_len {
                    heavy.push(densify(updated));
                    light[ri] = Vec::new();
                    continue;
                }
                for &(j, _) in &updated {
                    col_count[j] += 1;
                    if r.binary_search_by_key(&j, |&(c, _)| c).is_err() {
                        col_rows[j].push(ri);
                    }
                }
                if updated.iter().any(|&(_, v)| exact(v)) {
                    by_len.insert((updated.len(), ri));
                }
                light[ri] = updated;
            }
            for h in heavy.iter_mut() {
                if h[pc] == 0 {
                    continue;
                }
                let q = (h[pc] / pk) * u_inv % m;
                for &(j, v) in &pivot_row {
                    h[j] = (h[j] + m - q * v % m) % m;
                }
            }
            if k > 0 {
                out.push(k);
            }
        }
        pk *= p;
    }
    out
}

/// `r - q * p` modulo `m` for sorted sparse rows.
fn modular_axpy(r: &[(usize, u64)], q: u64, p: &[(usize, u64)], m: u64) -> Vec<(usize, u64)> {
    let mut out = Vec::with_capacity(r.len() + p.len());
    let (mut a, mut b) = (0, 0);
    while a < r.len() || b < p.len() {
        let ja = r.get(a).map_or(usize::MAX, |x| x.0);
        let jb = p.get(b).map_or(usize::MAX, |x| x.0);
        let (j, v) = if ja < jb {
            a += 1;
            (ja, r[a - 1].1)
        } else if jb < ja {
            b += 1;
            (jb, (m - q * p[b - 1].1 % m) % m)
        } else {
            a += 1;
            b += 1;
            (ja, (r[a - 1].1 + m - q * p[b - 1].1 % m) % m)
        };
        if v != 0 {
            out.push((j, v));
        }
    }
    out
}

pub(crate) fn mod_inverse(a: u64, m: u64) -> u64 {
    let (mut r0, mut r1) = (m as i64, (a % m) as i64);
    let (mut t0, mut t1) = (0i64, 1i64);
    while r1 != 0 {
        let q = r0 / r1;
        (r0, r1) = (r1, r0 - q * r1);
        (t0, t1) = (t1, t0 - q * t1);
    }
    debug_assert_eq!(r0, 1, "not a unit");
    t0.rem_euclid(m as i64) as u64
}

/// `r - q * p` for sorted sparse rows.
fn sparse_axpy<T: ExactInt>(r: &[(usize, T)], q: &T, p: &[(usize, T)]) -> Exact<Vec<(usize, T)>> {
    let mut out = Vec::with_capacity(r.len() + p.len());
    let (mut a, mut b) = (0, 0);
    while a < r.len() || b < p.len() {
        let ja = r.get(a).map(|x| x.0).unwrap_or(usize::MAX);
        let jb = p.get(b).map(|x| x.0).unwrap_or(usize::MAX);
        if ja < jb {
            out.push(r[a].clone());
            a += 1;
        } else if jb < ja {
            let v = q.mul_exact(&p[b].1)?.neg_exact()?;
            out.push((jb, v));
            b += 1;
        } else {
            let v = r[a].1.sub_mul_exact(q, &p[b].1)?;
            if !v.is_zero() {
                out.push((ja, v));
            }
            a += 1;
            b += 1;
        }
    }
    Ok(out)
}

/// Column echelon form on the first `active_rows` rows of `a`, applying the
/// same column operations to the remaining rows. Returns the number of
/// pivot columns; pivot columns come first.
fn column_echelon<T: ExactInt>(a: &mut Matrix<T>, active_rows: usize, reduce: bool) -> Exact<Vec<usize>> {
    let n = a.cols();
    let mut k = 0;
    let mut pivot_rows = Vec::new();
    for i in 0..active_rows {
        if k == n {
            break;
        }
        loop {
            // smallest nonzero entry among columns k.. in row i
            let mut best: Option<(usize, T)> = None;
            for j in k..n {
                let v = &a[(i, j)];
                if !v.is_zero() {
                    let av = v.abs();
                    if best.as_ref().map_or(true, |(_, b)| av < *b) {
                        best = Some((j, av));
                    }
                }
            }
            let Some((j, _)) = best else { break };
            a.swap_cols(k, j);
            let p = a[(i, k)].clone();
            let mut done = true;
            for j in k + 1..n {
                if a[(i, j)].is_zero() {
                    continue;
                }
                let q = a[(i, j)].clone() / p.clone();
                a.col_sub_mul(j, &q, k)?;
                done &= a[(i, j)].is_zero();
            }
            if done {
                break;
            }
        }
        if a[(i, k)].is_zero() {
            continue;
        }
        if a[(i, k)].is_negative() {
            a.negate_col(k);
        }
        if reduce {
            let p = a[(i, k)].clone();
            for l in 0..k {
                let q = a[(i, l)].div_floor(&p);
                a.col_sub_mul(l, &q, k)?;
            }
        }
        pivot_rows.push(i);
        k += 1;
    }
    Ok(pivot_rows)
}

/// Canonical basis (column Hermite normal form) of the lattice spanned by
/// the columns of `m`: lower echelon, positive pivots, entries left of each
/// pivot reduced into `[0, pivot)`.
pub fn hermite_basis<T: ExactInt>(m: &Matrix<T>) -> Exact<Matrix<T>> {
    let mut a = m.clone();
    let rows = a.rows();
    let pivots = column_echelon(&mut a, rows, true)?;
    Ok(a.submatrix(0..rows, 0..pivots.len()))
}

/// Saturated basis of `{x : m x = 0}`, in Hermite normal form.
pub fn integer_kernel<T: ExactInt>(m: &Matrix<T>) -> Exact<Matrix<T>> {
    let (r, n) = m.shape();
    let mut stacked = Matrix::vstack(&[m.clone(), Matrix::identity(n)], n);
    let rank = column_echelon(&mut stacked, r, false)?.len();
    let basis = stacked.submatrix(r..r + n, rank..n);
    hermite_basis(&basis)
}

/// Rank of an integer matrix.
pub fn rank<T: ExactInt>(m: &Matrix<T>) -> Exact<usize> {
    Ok(invariant_factors(m)?.len())
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntegerSolution<T> {
    /// Some `x` with `a x = b`, when one exists.
    pub particular: Option<Vec<T>>,
    /// Saturated basis of the homogeneous solutions, as columns.
    pub homogeneous: Matrix<T>,
}

/// Solves `a x = b` over the integers.
pub fn solve_integer<T: ExactInt>(a: &Matrix<T>, b: &[T]) -> Exact<IntegerSolution<T>> {
    assert_eq!(a.rows(), b.len(), "right-hand side has wrong length");
    let smith = smith_normal_form(a)?;
    let d = smith.invariant_factors();
    let ub = smith.u.try_mul_vec(b)?;
    let mut y = vec![T::zero(); a.cols()];
    let mut ok = true;
    for (i, ubi) in ub.iter().enumerate() {
        if i < d.len() {
            if !(ubi.clone() % d[i].clone()).is_zero() {
                ok = false;
                break;
            }
            y[i] = ubi.clone() / d[i].clone();
        } else if !ubi.is_zero() {
            ok = false;
            break;
        }
    }
    let particular = if ok { Some(smith.v.try_mul_vec(&y)?) } else { None };
    let homogeneous = integer_kernel(a)?;
    Ok(IntegerSolution { particular, homogeneous })
}

/// `w` with `w * k == I` for a saturated basis `k` (columns); `None` if the
/// columns of `k` do not span a saturated sublattice.
pub fn left_inverse<T: ExactInt>(k: &Matrix<T>) -> Exact<Option<Matrix<T>>> {
    let smith = smith_normal_form(k)?;
    let d = smith.invariant_factors();
    if d.len() != k.cols() || !d.iter().all(|x| x.is_one()) {
        return Ok(None);
    }
    let top = smith.u.submatrix(0..k.cols(), 0..k.rows());
    Ok(Some(smith.v.try_mul(&top)?))
}

/// Smith form that never fails: `i64` first, `BigInt` on overflow.
pub fn smith_normal_form_exact(m: &Matrix<i64>) -> SmithForm<BigInt> {
    exact_or_big(
        || {
            let s = smith_normal_form(m)?;
            Ok(SmithForm { s: s.s.to_big(), u: s.u.to_big(), v: s.v.to_big() })
        },
        || smith_normal_form(&m.to_big()).expect("bigint arithmetic cannot overflow"),
    )
}

pub fn invariant_factors_exact(m: &Matrix<i64>) -> Vec<BigInt> {
    exact_or_big(
        || Ok(invariant_factors(m)?.into_iter().map(BigInt::from).collect()),
        || invariant_factors(&m.to_big()).expect("bigint arithmetic cannot overflow"),
    )
}

fn narrow(m: Matrix<BigInt>) -> Exact<Matrix<i64>> {
    m.convert::<i64>()
}

/// Saturated HNF kernel basis with `i64` entries; `Err(Overflow)` only if the
/// canonical basis itself has entries beyond 63 bits.
pub fn integer_kernel_int(m: &Matrix<i64>) -> Exact<Matrix<i64>> {
    integer_kernel(m).or_else(|Overflow| narrow(integer_kernel(&m.to_big())?))
}

pub fn hermite_basis_int(m: &Matrix<i64>) -> Exact<Matrix<i64>> {
    hermite_basis(m).or_else(|Overflow| narrow(hermite_basis(&m.to_big())?))
}

pub fn left_inverse_int(k: &Matrix<i64>) -> Exact<Option<Matrix<i64>>> {
    match left_inverse(k) {
        Ok(w) => Ok(w),
        Err(Overflow) => left_inverse(&k.to_big())?.map(narrow).transpose(),
    }
}

pub fn solve_integer_int(a: &Matrix<i64>, b: &[i64]) -> Exact<IntegerSolution<i64>> {
    match solve_integer(a, b) {
        Ok(s) => Ok(s),
        Err(Overflow) => {
            let bb: Vec<BigInt> = b.iter().map(|x| BigInt::from(*x)).collect();
            let s = solve_integer(&a.to_big(), &bb)?;
            let particular = s
                .particular
                .map(|x| x.iter().map(|v| i64::from_bigint(v).ok_or(Overflow)).collect::<Exact<Vec<_>>>())
                .transpose()?;
            Ok(IntegerSolution { particular, homogeneous: narrow(s.homogeneous)? })
        }
    }
}

pub fn rank_int(m: &Matrix<i64>) -> usize {
    invariant_factors_exact(m).len()
}
