//! Classification of lattices, canonical coflasque and flasque covers,
//! iterated resolutions, splitting of surjections and lifting of morphisms.
//!
//! The canonical cover of `L` is
//! `P = ⊕_H Z[G/H] ⊗ Z^{rank L^H}` over conjugacy-class representatives `H`,
//! with the basis vector `(gH, j)` sent to `A(g) v_j` for the Hermite basis
//! `v_j` of `L^H`. The kernel is coflasque.
//!
//! `L` is invertible exactly when this cover splits.

use serde::Serialize;

use crate::abelian::AbelianGroupInvariants;
use crate::cohomology::{self, tate_cohomology};
use crate::error::{Error, Result};
use crate::group::{FiniteGroup, Subgroup};
use crate::lattice::{left_cosets, EchelonBasis, GLattice, LatticeMap};
use crate::linalg;
use crate::num::Overflow;
use crate::group::prime_factors;
use crate::{Int, IntMatrix};
use std::sync::Arc;

/// Bounds on the sizes of constructed objects.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    /// Largest admissible cover rank.
    pub max_rank: usize,
    /// Largest admissible resolution depth.
    pub max_depth: usize,
    /// Kernels up to this rank are fully classified inside complexes.
    pub classify_rank: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits { max_rank: 4096, max_depth: 4, classify_rank: 48 }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SubgroupCertificate {
    pub subgroup: usize,
    pub order: usize,
    pub h_minus_one: AbelianGroupInvariants,
    pub h_one: AbelianGroupInvariants,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Classification {
    pub is_permutation_witnessed: bool,
    pub flasque: bool,
    pub coflasque: bool,
    pub invertible: bool,
    pub certificates: Vec<SubgroupCertificate>,
}

/// Flasque, coflasque and invertible status of `l`, with `Ĥ^-1` and `H^1`
/// for every subgroup.
pub fn classify(l: &GLattice) -> Result<Classification> {
    classify_with(l, &Limits::default())
}

pub fn classify_with(l: &GLattice, limits: &Limits) -> Result<Classification> {
    let certificates = l
        .group()
        .subgroups()?
        .iter()
        .map(|h| {
            Ok(SubgroupCertificate {
                subgroup: h.id,
                order: h.order(),
                h_minus_one: tate_cohomology(l, h, -1)?,
                h_one: tate_cohomology(l, h, 1)?,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    let flasque = certificates.iter().all(|c| c.h_minus_one.is_trivial());
    let coflasque = certificates.iter().all(|c| c.h_one.is_trivial());
    let is_permutation_witnessed = l.is_permutation_action();
    let invertible = if is_permutation_witnessed {
        true
    } else if !(flasque && coflasque) {
        false
    } else {
        coflasque_cover_with(l, limits)?.split()?.is_some()
    };
    Ok(Classification { is_permutation_witnessed, flasque, coflasque, invertible, certificates })
}

/// One block `Z[G/H] ⊗ Z^k` of a permutation cover, occupying indices
/// `offset + c * k + j` for coset `c` and copy `j`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PermutationSummand {
    pub subgroup: Subgroup,
    pub copies: usize,
    pub offset: usize,
    /// Minimal element of each left coset, increasing.
    pub coset_reps: Vec<usize>,
    /// Coset index of each group element.
    pub coset_of: Vec<usize>,
    /// Hermite basis of `L^H` whose vectors the copies map to.
    pub fixed_basis: IntMatrix,
}

impl PermutationSummand {
    pub fn rank(&self) -> usize {
        self.coset_reps.len() * self.copies
    }

    pub fn index(&self, coset: usize, copy: usize) -> usize {
        self.offset + coset * self.copies + copy
    }
}

/// `0 -> Q -> P -> L -> 0` with `P` a permutation lattice.
#[derive(Debug, Clone)]
pub struct Resolution {
    pub base: GLattice,
    pub cover: GLattice,
    pub kernel: GLattice,
    pub surjection: LatticeMap,
    pub inclusion: LatticeMap,
    pub summands: Vec<PermutationSummand>,
}

pub(crate) fn permutation_action(group: &FiniteGroup, summands: &[PermutationSummand], rank: usize) -> Vec<IntMatrix> {
    group
        .generator_elements()
        .iter()
        .map(|&s| {
            let mut m = IntMatrix::zeros(rank, rank);
            for sm in summands {
                for (c, &rep) in sm.coset_reps.iter().enumerate() {
                    let image = sm.coset_of[group.mul(s, rep)];
                    for j in 0..sm.copies {
                        m[(sm.index(image, j), sm.index(c, j))] = 1;
                    }
                }
            }
            m
        })
        .collect()
}

/// Rank of the canonical cover, without building it.
pub fn cover_rank(l: &GLattice, order: &[&Subgroup]) -> Result<usize> {
    let g = l.group();
    let mut total = 0usize;
    for h in order {
        total += (g.order() / h.order()) * l.fixed_sublattice(h)?.cols();
    }
    Ok(total)
}

pub fn coflasque_cover(l: &GLattice) -> Result<Resolution> {
    coflasque_cover_with(l, &Limits::default())
}

pub fn coflasque_cover_with(l: &GLattice, limits: &Limits) -> Result<Resolution> {
    let reps: Vec<Subgroup> = l.group().subgroup_class_representatives()?.into_iter().cloned().collect();
    coflasque_cover_ordered(l, &reps, limits)
}

/// Canonical cover with the class representatives taken in the given order.
pub fn coflasque_cover_ordered(l: &GLattice, order: &[Subgroup], limits: &Limits) -> Result<Resolution> {
    let res = build_cover(l, order, limits)?;
    let failures: Vec<usize> =
        fixed_point_surjectivity(&res)?.into_iter().filter(|(_, ok)| !ok).map(|(id, _)| id).collect();
    if !failures.is_empty() {
        return Err(Error::input(format!("cover is not surjective on fixed points of subgroups {failures:?}")));
    }
    Ok(res)
}

fn build_cover(l: &GLattice, order: &[Subgroup], limits: &Limits) -> Result<Resolution> {
    let g = l.group().clone();
    let r = l.rank();
    let mut seen_classes: Vec<usize> = order.iter().map(|h| h.class_representative).collect();
    seen_classes.sort_unstable();
    seen_classes.dedup();
    let all_classes = g.subgroup_class_representatives()?.len();
    if seen_classes.len() != all_classes || order.len() != all_classes {
        return Err(Error::input("cover order must list one subgroup from every conjugacy class"));
    }
    if !order.iter().any(|h| h.is_trivial()) {
        return Err(Error::input("cover order must contain the trivial subgroup"));
    }
    let mut summands = Vec::with_capacity(order.len());
    let mut offset = 0usize;
    for h in order {
        let fixed = l.fixed_sublattice(h)?;
        let cosets = left_cosets(&g, h);
        let sm = PermutationSummand {
            subgroup: h.clone(),
            copies: fixed.cols(),
            offset,
            coset_reps: cosets.reps,
            coset_of: cosets.of_element,
            fixed_basis: fixed,
        };
        offset += sm.rank();
        if offset > limits.max_rank {
            return Err(Error::capacity(format!(
                "cover rank exceeds the limit of {} (lattice rank {r})",
                limits.max_rank
            )));
        }
        summands.push(sm);
    }
    let p_rank = offset;
    let mut surj = IntMatrix::zeros(r, p_rank);
    for sm in &summands {
        if sm.copies == 0 {
            continue;
        }
        for (c, &rep) in sm.coset_reps.iter().enumerate() {
            let image = l.apply_matrix(rep, &sm.fixed_basis)?;
            surj.set_block(0, sm.index(c, 0), &image);
        }
    }
    let p_gens = permutation_action(&g, &summands, p_rank);
    let cover = GLattice::from_generators(g.clone(), p_rank, p_gens);
    let (kernel, inclusion) = split_kernel(&cover, &surj, &summands, r)?;
    let surjection = LatticeMap::new_unchecked(cover.clone(), l.clone(), surj);
    let inclusion = LatticeMap::new_unchecked(kernel.clone(), cover.clone(), inclusion);
    Ok(Resolution { base: l.clone(), cover, kernel, surjection, inclusion, summands })
}

/// Kernel of a surjection that is the identity on the block of the trivial
/// subgroup's identity coset. Basis: `e_b - ι(π e_b)` for `b` outside the
/// block, where `ι` places a vector of `L` in the block.
fn split_kernel(
    cover: &GLattice,
    surj: &IntMatrix,
    summands: &[PermutationSummand],
    r: usize,
) -> Result<(GLattice, IntMatrix)> {
    let block = summands.iter().find(|s| s.subgroup.is_trivial()).expect("trivial summand").offset;
    let n = cover.rank();
    debug_assert_eq!(surj.submatrix(0..r, block..block + r), IntMatrix::identity(r));
    let rest: Vec<usize> = (0..n).filter(|&b| b < block || b >= block + r).collect();
    let q = rest.len();
    let mut slot = vec![usize::MAX; n];
    for (k, &b) in rest.iter().enumerate() {
        slot[b] = k;
    }
    let mut incl = IntMatrix::zeros(n, q);
    for (k, &b) in rest.iter().enumerate() {
        incl[(b, k)] = 1;
        for i in 0..r {
            incl[(block + i, k)] = -surj[(i, b)];
        }
    }
    // A_Q(s) = R A_P(s) K, where R keeps the coordinates outside the block.
    let gens = cover
        .generator_matrices()
        .iter()
        .map(|ap| {
            let perm: Vec<usize> = (0..n).map(|b| (0..n).find(|&i| ap[(i, b)] == 1).expect("permutation")).collect();
            let mut m = IntMatrix::zeros(q, q);
            for k in 0..q {
                // A_P(s) K e_k = e_{σ(b)} - Σ_i π_ib e_{σ(block+i)}
                let b = rest[k];
                let t = slot[perm[b]];
                if t != usize::MAX {
                    m[(t, k)] += 1;
                }
                for i in 0..r {
                    let x = surj[(i, b)];
                    if x == 0 {
                        continue;
                    }
                    let t = slot[perm[block + i]];
                    if t != usize::MAX {
                        m[(t, k)] -= x;
                    }
                }
            }
            Ok(m)
        })
        .collect::<Result<Vec<_>>>()?;
    Ok((GLattice::from_generators(cover.group().clone(), q, gens), incl))
}

/// For every subgroup `H`, whether `P^H -> L^H` is onto. `P^H` is spanned by
/// orbit sums of the permuted basis; `L^H = A(g) L^K` for the class
/// representative `K = g^-1 H g`.
pub fn fixed_point_surjectivity(res: &Resolution) -> Result<Vec<(usize, bool)>> {
    let g = res.base.group().clone();
    let l = &res.base;
    let surj = res.surjection.matrix();
    let mut out = Vec::new();
    for h in g.subgroups()? {
        let rep = res
            .summands
            .iter()
            .find(|s| s.subgroup.class_representative == h.class_representative)
            .expect("every class is represented");
        let conj = conjugator(&g, &rep.subgroup, h).expect("conjugate subgroups");
        let target = linalg::hermite_basis_int(&l.apply_matrix(conj, &rep.fixed_basis)?)?;
        if target.cols() == 0 {
            out.push((h.id, true));
            continue;
        }
        let mut images: Vec<Vec<Int>> = Vec::new();
        for sm in &res.summands {
            for orbit in coset_orbits(&g, sm, h) {
                for j in 0..sm.copies {
                    let mut v = vec![0 as Int; l.rank()];
                    for &c in &orbit {
                        let col = sm.index(c, j);
                        for (i, x) in v.iter_mut().enumerate() {
                            *x = x.checked_add(surj[(i, col)]).ok_or(crate::Overflow)?;
                        }
                    }
                    images.push(v);
                }
            }
        }
        let image = IntMatrix::from_columns(&images, l.rank());
        let coords = EchelonBasis::new(&target)?
            .coordinates_of_columns(&image)
            .ok_or_else(|| Error::input("orbit sums do not map into fixed points"))?;
        let d = linalg::invariant_factors_exact(&coords);
        let ok = d.len() == target.cols() && d.iter().all(|x| *x == 1.into());
        out.push((h.id, ok));
    }
    Ok(out)
}

/// Some `g` with `g k g^-1 = h`.
pub fn conjugator(group: &FiniteGroup, k: &Subgroup, h: &Subgroup) -> Option<usize> {
    (0..group.order()).find(|&g| {
        let mut conj: Vec<usize> = k.elements.iter().map(|&x| group.conjugate(g, x)).collect();
        conj.sort_unstable();
        conj == h.elements
    })
}

fn coset_orbits(g: &FiniteGroup, sm: &PermutationSummand, h: &Subgroup) -> Vec<Vec<usize>> {
    let n = sm.coset_reps.len();
    let mut seen = vec![false; n];
    let mut out = Vec::new();
    for c in 0..n {
        if seen[c] {
            continue;
        }
        let mut orbit: Vec<usize> = h.elements.iter().map(|&x| sm.coset_of[g.mul(x, sm.coset_reps[c])]).collect();
        orbit.sort_unstable();
        orbit.dedup();
        for &o in &orbit {
            seen[o] = true;
        }
        out.push(orbit);
    }
    out
}

impl Resolution {
    /// Basis of `Hom_G(L, P)` by Frobenius reciprocity: for `ψ` in a basis
    /// of `Hom_H(L, Z)` and a copy `j` of the `H`-summand, coset `c` receives
    /// `ψ(A(c)^-1 x)` in slot `(c, j)`.
    fn homs_into_cover(&self) -> Result<Vec<IntMatrix>> {
        let l = &self.base;
        let g = l.group();
        let r = l.rank();
        let mut out = Vec::new();
        for sm in &self.summands {
            if sm.copies == 0 {
                continue;
            }
            let psis = invariant_functionals(l, &sm.subgroup)?;
            if psis.cols() == 0 {
                continue;
            }
            let inv_mats: Vec<IntMatrix> =
                sm.coset_reps.iter().map(|&rep| l.matrix_of(g.inv(rep))).collect::<Result<_>>()?;
            for k in 0..psis.cols() {
                let psi = psis.column(k);
                let rows: Vec<Vec<Int>> = inv_mats
                    .iter()
                    .map(|a| a.transpose().try_mul_vec(&psi))
                    .collect::<Result<_, _>>()?;
                for j in 0..sm.copies {
                    let mut phi = IntMatrix::zeros(self.cover.rank(), r);
                    for (c, row) in rows.iter().enumerate() {
                        phi.row_mut(sm.index(c, j)).copy_from_slice(row);
                    }
                    out.push(phi);
                }
            }
        }
        Ok(out)
    }

    /// An equivariant section of the surjection, if one exists.
    ///
    /// The composites `π ∘ φ` span a two-sided ideal `I` of `E = End_G(L)`
    /// containing `|G| E`, so `1 ∈ I` iff `1 ∈ I + pE` for every prime `p`
    /// dividing `|G|`. These are decided over `F_p`. A solution gives
    /// `x ∈ I` with `x ≡ 1` modulo the radical `m` of `|G|`; with
    /// `z = 1 - x` and `m^k ≡ 0 mod |G|`, the section is
    /// `φ_x ∘ (1 + z + … + z^{k-1}) + φ_f` where `|G| f = z^k = π ∘ φ_f`.
    pub fn split(&self) -> Result<Option<LatticeMap>> {
        let section = match self.split_modular() {
            Ok(s) => s,
            Err(Error::Capacity(_)) => {
                let homs = self.homs_into_cover()?;
                solve_section(self.surjection.matrix(), &homs, self.base.rank())?
            }
            Err(e) => return Err(e),
        };
        Ok(section.map(|s| LatticeMap::new_unchecked(self.base.clone(), self.cover.clone(), s)))
    }

    fn hom_terms(&self) -> Result<Vec<HomTerm>> {
        let l = &self.base;
        let g = l.group();
        let mut out = Vec::new();
        for (index, sm) in self.summands.iter().enumerate() {
            if sm.copies == 0 {
                continue;
            }
            let psis = invariant_functionals(l, &sm.subgroup)?;
            let inv_mats: Vec<IntMatrix> =
                sm.coset_reps.iter().map(|&rep| l.matrix_of(g.inv(rep))).collect::<Result<_>>()?;
            for k in 0..psis.cols() {
                let psi = psis.column(k);
                let rows: Arc<Vec<Vec<Int>>> = Arc::new(
                    inv_mats.iter().map(|a| a.transpose().try_mul_vec(&psi)).collect::<Result<_, _>>()?,
                );
                for copy in 0..sm.copies {
                    out.push(HomTerm { summand: index, copy, psi: psi.clone(), rows: rows.clone() });
                }
            }
        }
        Ok(out)
    }

    fn term_matrix(&self, t: &HomTerm) -> IntMatrix {
        let sm = &self.summands[t.summand];
        let mut phi = IntMatrix::zeros(self.cover.rank(), self.base.rank());
        for (c, row) in t.rows.iter().enumerate() {
            phi.row_mut(sm.index(c, t.copy)).copy_from_slice(row);
        }
        phi
    }

    fn term_composite(&self, t: &HomTerm) -> Result<IntMatrix> {
        let sm = &self.summands[t.summand];
        let surj = self.surjection.matrix();
        let r = self.base.rank();
        let mut m = IntMatrix::zeros(r, r);
        for (c, row) in t.rows.iter().enumerate() {
            let col = sm.index(c, t.copy);
            for i in 0..r {
                let u = surj[(i, col)];
                if u == 0 {
                    continue;
                }
                for (j, &v) in row.iter().enumerate() {
                    if v != 0 {
                        m[(i, j)] = m[(i, j)].checked_add(u.checked_mul(v).ok_or(Overflow)?).ok_or(Overflow)?;
                    }
                }
            }
        }
        Ok(m)
    }

    fn split_modular(&self) -> Result<Option<IntMatrix>> {
        let r = self.base.rank();
        let n = self.cover.rank();
        if r == 0 {
            return Ok(Some(IntMatrix::zeros(n, 0)));
        }
        let order = self.base.group().order();
        let primes: Vec<usize> = prime_factors(order).into_iter().map(|(p, _)| p).collect();
        let terms = self.hom_terms()?;
        let composites = terms.iter().map(|t| self.term_composite(t)).collect::<Result<Vec<_>>>()?;
        let radical: usize = primes.iter().product();
        let identity: Vec<Int> = IntMatrix::identity(r).entries().to_vec();
        // coefficients over the terms, reduced modulo the radical
        let mut coeffs = vec![0 as Int; terms.len()];
        for &p in &primes {
            let mut span = ModSpan::new(p as u64, r * r);
            let mut found = None;
            let mut checked = 0;
            for (k, comp) in composites.iter().enumerate() {
                span.insert(k, comp.entries());
                if span.dim() >= checked + 16 || k + 1 == composites.len() {
                    checked = span.dim();
                    if let Some(c) = span.express(&identity) {
                        found = Some(c);
                        break;
                    }
                }
            }
            let Some(c) = found else { return Ok(None) };
            // idempotent for p modulo the radical
            let rest = (radical / p) as Int;
            let e = rest * linalg::mod_inverse(rest.rem_euclid(p as Int) as u64, p as u64) as Int;
            for (t, v) in c {
                coeffs[t] = (coeffs[t] + e * v as Int).rem_euclid(radical as Int);
            }
        }
        let mut x = IntMatrix::zeros(r, r);
        for (t, &c) in coeffs.iter().enumerate() {
            if c != 0 {
                x = x.try_add(&composites[t].try_scale(&c)?)?;
            }
        }
        let z = IntMatrix::identity(r).try_sub(&x)?;
        let mut k = 0u32;
        while (radical as u128).pow(k) % order as u128 != 0 {
            k += 1;
        }
        let mut w = IntMatrix::zeros(r, r);
        let mut power = IntMatrix::identity(r);
        for _ in 0..k {
            w = w.try_add(&power)?;
            power = power.try_mul(&z)?;
        }
        let ord = order as Int;
        if power.entries().iter().any(|v| v % ord != 0) {
            return Err(Error::input("cover is missing the free summand"));
        }
        let free = self.summands.iter().position(|s| s.subgroup.is_trivial()).expect("trivial summand");
        let mut section = IntMatrix::zeros(n, r);
        for (t, &c) in coeffs.iter().enumerate() {
            if c != 0 {
                let phi = self.term_matrix(&terms[t]).try_mul(&w)?;
                section = section.try_add(&phi.try_scale(&c)?)?;
            }
        }
        // φ_f: the free summand's term with ψ = e_i and copy j carries f[j][i]
        let free_terms: Vec<usize> = (0..terms.len()).filter(|&t| terms[t].summand == free).collect();
        for &t in &free_terms {
            let term = &terms[t];
            let i = term.psi.iter().position(|&v| v == 1).expect("unit functional");
            let c = power[(term.copy, i)] / ord;
            if c != 0 {
                section = section.try_add(&self.term_matrix(term).try_scale(&c)?)?;
            }
        }
        if !self.surjection.matrix().try_mul(&section)?.is_identity() {
            return Err(Error::input("modular section construction failed"));
        }
        Ok(Some(section))
    }

    /// Verifies exactness: surjectivity, `π ∘ ι = 0`, saturation of `ι` and
    /// rank additivity.
    pub fn check_exact(&self) -> Result<bool> {
        let composite = self.surjection.matrix().try_mul(self.inclusion.matrix())?;
        let incl = linalg::invariant_factors_exact(self.inclusion.matrix());
        Ok(composite.is_zero()
            && self.surjection.is_surjective()
            && incl.len() == self.kernel.rank()
            && incl.iter().all(|d| *d == 1.into())
            && self.kernel.rank() + self.base.rank() == self.cover.rank())
    }
}

/// `x ↦ Σ_c e_{(c, copy)} ψ(A(c)^-1 x)` into one summand of a cover, with
/// `rows[c] = ψ A(c)^-1`.
struct HomTerm {
    summand: usize,
    copy: usize,
    psi: Vec<Int>,
    rows: Arc<Vec<Vec<Int>>>,
}

/// Incremental row echelon span over `F_p`, remembering each basis vector
/// as a combination of the inserted source vectors.
struct ModSpan {
    p: u64,
    len: usize,
    rows: Vec<SpanRow>,
}

struct SpanRow {
    pivot: usize,
    vector: Vec<u64>,
    /// coefficients over `rows` sources, by insertion position
    combination: Vec<u64>,
    source: usize,
}

impl ModSpan {
    fn new(p: u64, len: usize) -> Self {
        ModSpan { p, len, rows: Vec::new() }
    }

    fn dim(&self) -> usize {
        self.rows.len()
    }

    fn lift(&self, v: &[Int]) -> Vec<u64> {
        v.iter().map(|x| x.rem_euclid(self.p as Int) as u64).collect()
    }

    /// Reduces `v` in place; returns the multiples of each row subtracted.
    fn reduce(&self, v: &mut [u64]) -> Vec<u64> {
        let p = self.p;
        let mut used = vec![0u64; self.rows.len()];
        for (k, row) in self.rows.iter().enumerate() {
            let a = v[row.pivot];
            if a == 0 {
                continue;
            }
            used[k] = a;
            for (x, &y) in v.iter_mut().zip(&row.vector) {
                if y != 0 {
                    *x = (*x + (p - y) * a) % p;
                }
            }
        }
        used
    }

    fn insert(&mut self, source: usize, v: &[Int]) {
        debug_assert_eq!(v.len(), self.len);
        let mut v = self.lift(v);
        let used = self.reduce(&mut v);
        let Some(pivot) = v.iter().position(|&x| x != 0) else { return };
        let p = self.p;
        let k = self.rows.len();
        let mut combination = vec![0u64; k + 1];
        combination[k] = 1;
        for (l, &a) in used.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (c, &y) in combination.iter_mut().zip(&self.rows[l].combination) {
                *c = (*c + (p - y) * a) % p;
            }
        }
        let inv = linalg::mod_inverse(v[pivot], p);
        for x in v.iter_mut().chain(combination.iter_mut()) {
            *x = *x * inv % p;
        }
        self.rows.push(SpanRow { pivot, vector: v, combination, source });
    }

    /// Coefficients over the sources expressing `v`, if it lies in the span.
    fn express(&self, v: &[Int]) -> Option<Vec<(usize, u64)>> {
        let mut v = self.lift(v);
        let used = self.reduce(&mut v);
        if v.iter().any(|&x| x != 0) {
            return None;
        }
        let p = self.p;
        let mut total = vec![0u64; self.rows.len()];
        for (k, &a) in used.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (c, &y) in total.iter_mut().zip(&self.rows[k].combination) {
                *c = (*c + y * a) % p;
            }
        }
        Some(total.into_iter().enumerate().filter(|(_, c)| *c != 0).map(|(k, c)| (self.rows[k].source, c)).collect())
    }
}

/// Basis (columns) of `{ψ : ψ A(h) = ψ for h in H}`.
fn invariant_functionals(l: &GLattice, h: &Subgroup) -> Result<IntMatrix> {
    let r = l.rank();
    let mats = l.subgroup_generator_matrices(h)?;
    if mats.is_empty() {
        return Ok(IntMatrix::identity(r));
    }
    let parts = mats.iter().map(|a| a.transpose().try_sub(&IntMatrix::identity(r))).collect::<Result<Vec<_>, _>>()?;
    Ok(linalg::integer_kernel_int(&IntMatrix::vstack(&parts, r))?)
}

/// Finds integers `c` with `f Σ c_i φ_i = 1`, returning `Σ c_i φ_i`.
fn solve_section(f: &IntMatrix, homs: &[IntMatrix], r: usize) -> Result<Option<IntMatrix>> {
    if r == 0 {
        return Ok(Some(IntMatrix::zeros(f.cols(), 0)));
    }
    if homs.is_empty() {
        return Ok(None);
    }
    let composites = homs.iter().map(|phi| f.try_mul(phi)).collect::<Result<Vec<_>, _>>()?;
    let mut system = IntMatrix::zeros(r * r, homs.len());
    for (k, m) in composites.iter().enumerate() {
        for i in 0..r {
            for j in 0..r {
                system[(i * r + j, k)] = m[(i, j)];
            }
        }
    }
    let target: Vec<Int> = (0..r * r).map(|x| if x / r == x % r { 1 } else { 0 }).collect();
    let sol = linalg::solve_integer_int(&system, &target)?;
    let Some(c) = sol.particular else { return Ok(None) };
    let mut s = IntMatrix::zeros(f.cols(), r);
    for (ck, phi) in c.iter().zip(homs) {
        if *ck != 0 {
            s = s.try_add(&phi.try_scale(ck)?)?;
        }
    }
    debug_assert!(f.try_mul(&s).map(|x| x.is_identity()).unwrap_or(false));
    Ok(Some(s))
}

/// An equivariant section `s` with `f ∘ s = 1`, if one exists.
pub fn attempt_split(f: &LatticeMap) -> Result<Option<LatticeMap>> {
    if !f.is_surjective() {
        return Err(Error::input("map is not surjective over the integers"));
    }
    let homs = cohomology::equivariant_homs(f.target(), f.source())?;
    let s = solve_section(f.matrix(), &homs, f.target().rank())?;
    Ok(s.map(|s| LatticeMap::new_unchecked(f.target().clone(), f.source().clone(), s)))
}

/// A section found after adding permutation summands to the source.
#[derive(Debug, Clone)]
pub struct StabilizedSplit {
    /// Subgroup ids whose canonical summands `Z[G/H] ⊗ Z^{rank L^H}` were
    /// added.
    pub added: Vec<usize>,
    /// The enlarged surjection `M ⊕ P' -> L`.
    pub surjection: LatticeMap,
    pub section: LatticeMap,
}

/// Tries to split `f: M -> L`, then `M ⊕ P_1 ⊕ … ⊕ P_k -> L` for growing
/// prefixes of the candidate list, where `P_i = Z[G/H_i] ⊗ Z^{rank L^{H_i}}`
/// maps canonically onto the `H_i`-fixed points. Failure after the last
/// candidate is reported as undecided.
pub fn stabilized_split(f: &LatticeMap, candidates: &[usize]) -> Result<StabilizedSplit> {
    let l = f.target();
    let g = l.group().clone();
    if !f.is_surjective() {
        return Err(Error::input("map is not surjective over the integers"));
    }
    let base_homs = cohomology::equivariant_homs(l, f.source())?;
    for k in 0..=candidates.len() {
        let chosen: Vec<Subgroup> =
            candidates[..k].iter().map(|&id| g.subgroup(id).cloned()).collect::<Result<_>>()?;
        let mut summands = Vec::new();
        let mut offset = f.source().rank();
        for h in &chosen {
            let fixed = l.fixed_sublattice(h)?;
            let cosets = left_cosets(&g, h);
            let sm = PermutationSummand {
                subgroup: h.clone(),
                copies: fixed.cols(),
                offset,
                coset_reps: cosets.reps,
                coset_of: cosets.of_element,
                fixed_basis: fixed,
            };
            offset += sm.rank();
            summands.push(sm);
        }
        let total = offset;
        let m_rank = f.source().rank();
        let mut surj = IntMatrix::zeros(l.rank(), total);
        surj.set_block(0, 0, f.matrix());
        for sm in &summands {
            for (c, &rep) in sm.coset_reps.iter().enumerate() {
                if sm.copies > 0 {
                    surj.set_block(0, sm.index(c, 0), &l.apply_matrix(rep, &sm.fixed_basis)?);
                }
            }
        }
        let extra_gens = permutation_action(&g, &shifted(&summands, m_rank), total - m_rank);
        let extra = GLattice::from_generators(g.clone(), total - m_rank, extra_gens);
        let source = f.source().direct_sum(&extra)?;
        let mut homs: Vec<IntMatrix> = base_homs
            .iter()
            .map(|phi| {
                let mut big = IntMatrix::zeros(total, l.rank());
                big.set_block(0, 0, phi);
                big
            })
            .collect();
        let tmp = Resolution {
            base: l.clone(),
            cover: source.clone(),
            kernel: GLattice::trivial(g.clone(), 0),
            surjection: LatticeMap::new_unchecked(source.clone(), l.clone(), surj.clone()),
            inclusion: LatticeMap::zero(&GLattice::trivial(g.clone(), 0), &source),
            summands,
        };
        homs.extend(tmp.homs_into_cover()?);
        if let Some(s) = solve_section(&surj, &homs, l.rank())? {
            return Ok(StabilizedSplit {
                added: candidates[..k].to_vec(),
                surjection: LatticeMap::new_unchecked(source.clone(), l.clone(), surj),
                section: LatticeMap::new_unchecked(l.clone(), source, s),
            });
        }
    }
    Err(Error::Undecided(format!(
        "no equivariant section after adding {} candidate permutation summands",
        candidates.len()
    )))
}

fn shifted(summands: &[PermutationSummand], by: usize) -> Vec<PermutationSummand> {
    summands.iter().map(|s| PermutationSummand { offset: s.offset - by, ..s.clone() }).collect()
}

/// Outcome of [`lift_morphism`].
#[derive(Debug, Clone)]
pub enum Lift {
    Found(LatticeMap),
    /// No lift; carries `Ext^1(P_A, Q_B)`, where the obstruction lives.
    Obstructed(AbelianGroupInvariants),
}

/// Lifts `f: A -> B` to `f̃: P_A -> P_B` with `π_B f̃ = f π_A`.
///
/// Each copy `j` of a summand `Z[G/H]` of `P_A` is determined by the image
/// `y ∈ P_B^H` of its identity coset, which must satisfy
/// `π_B y = f(v_j)`; that is a linear system on the orbit sums of `P_B^H`.
pub fn lift_morphism(f: &LatticeMap, target: &Resolution, source: &Resolution) -> Result<Lift> {
    if source.base != *f.source() || target.base != *f.target() {
        return Err(Error::input("resolutions do not match the map"));
    }
    let g = f.source().group().clone();
    let pa = &source.cover;
    let pb = &target.cover;
    let same_shape = source.summands.len() == target.summands.len()
        && source.summands.iter().zip(&target.summands).all(|(a, b)| a.subgroup == b.subgroup && a.offset == b.offset);
    let mut lift = IntMatrix::zeros(pb.rank(), pa.rank());
    for sm in &source.summands {
        let orbit_basis = fixed_orbit_sums(&g, &target.summands, &sm.subgroup, pb.rank());
        let projected = target.surjection.matrix().try_mul(&orbit_basis)?;
        for j in 0..sm.copies {
            let t = f.matrix().try_mul_vec(&sm.fixed_basis.column(j))?;
            let y = if t.iter().all(|&x| x == 0) {
                vec![0; pb.rank()]
            } else if let Some(y) = same_position(sm, j, same_shape, target, &t) {
                y
            } else {
                match linalg::solve_integer_int(&projected, &t)?.particular {
                    Some(c) => orbit_basis.try_mul_vec(&c)?,
                    None => return Ok(Lift::Obstructed(cohomology::ext1(pa, &target.kernel)?)),
                }
            };
            let y = IntMatrix::column_vector(&y);
            for (c, &rep) in sm.coset_reps.iter().enumerate() {
                let image = pb.apply_matrix(rep, &y)?;
                lift.set_block(0, sm.index(c, j), &image);
            }
        }
    }
    let lifted = LatticeMap::new(pa.clone(), pb.clone(), lift)?;
    let lhs = target.surjection.matrix().try_mul(lifted.matrix())?;
    let rhs = f.matrix().try_mul(source.surjection.matrix())?;
    if lhs != rhs {
        return Err(Error::input("lift does not commute with the surjections"));
    }
    Ok(Lift::Found(lifted))
}

fn same_position(sm: &PermutationSummand, j: usize, same_shape: bool, target: &Resolution, t: &[Int]) -> Option<Vec<Int>> {
    if !same_shape {
        return None;
    }
    let b = sm.index(0, j);
    let col = target.surjection.matrix().column(b);
    (col == t).then(|| {
        let mut y = vec![0; target.cover.rank()];
        y[b] = 1;
        y
    })
}

/// Orbit sums of `h` on the permuted basis of a permutation lattice, as
/// columns.
fn fixed_orbit_sums(g: &FiniteGroup, summands: &[PermutationSummand], h: &Subgroup, rank: usize) -> IntMatrix {
    let mut cols = Vec::new();
    for sm in summands {
        for orbit in coset_orbits(g, sm, h) {
            for j in 0..sm.copies {
                let mut v = vec![0 as Int; rank];
                for &c in &orbit {
                    v[sm.index(c, j)] = 1;
                }
                cols.push(v);
            }
        }
    }
    IntMatrix::from_columns(&cols, rank)
}

/// `0 -> P -> F -> L -> 0` with `P` permutation and `F` flasque.
#[derive(Debug, Clone)]
pub struct FlasqueCover {
    pub base: GLattice,
    pub flasque: GLattice,
    pub permutation: GLattice,
    pub inclusion: LatticeMap,
    pub surjection: LatticeMap,
}

pub fn flasque_cover(l: &GLattice) -> Result<FlasqueCover> {
    flasque_cover_with(l, &Limits::default())
}

/// Pushout of the coflasque cover `0 -> Q -> P_0 -> L -> 0` along the
/// embedding `0 -> Q -> P_1 -> F_1 -> 0` obtained by dualizing the coflasque
/// cover of `Q*`. Then `0 -> P_1 -> F -> L -> 0`, and `F` is an extension of
/// the flasque `F_1` by `P_0`, hence flasque.
///
/// Using the block of `P_0` on which `π` is the identity, `F` has the basis
/// `L ⊕ P_1` with action `[[A_L, 0], [ι R A_{P_0} E, A_{P_1}]]`, where `E`
/// places `L` in that block and `R` keeps the kernel coordinates.
pub fn flasque_cover_with(l: &GLattice, limits: &Limits) -> Result<FlasqueCover> {
    let g = l.group().clone();
    let r = l.rank();
    let res0 = coflasque_cover_with(l, limits)?;
    let q = &res0.kernel;
    let dual_cover = coflasque_cover_with(&q.dual()?, limits)?;
    // permutation matrices are orthogonal, so P_1* = P_1
    let p1 = dual_cover.cover.clone();
    // ι: Q -> P_1* = P_1 is the transpose of P_1 -> Q*.
    let iota = dual_cover.surjection.matrix().transpose();
    let n1 = p1.rank();
    let block = res0.summands.iter().find(|s| s.subgroup.is_trivial()).expect("trivial summand").offset;
    let n0 = res0.cover.rank();
    let rest: Vec<usize> = (0..n0).filter(|&b| b < block || b >= block + r).collect();
    let gens = g
        .generator_elements()
        .iter()
        .enumerate()
        .map(|(si, _)| {
            let a_l = &l.generator_matrices()[si];
            let a_p0 = &res0.cover.generator_matrices()[si];
            let a_p1 = &p1.generator_matrices()[si];
            // R A_{P_0} E: rows outside the block, columns of the block
            let lower_q = IntMatrix::from_fn(rest.len(), r, |k, i| a_p0[(rest[k], block + i)]);
            let lower = iota.try_mul(&lower_q)?;
            let mut m = IntMatrix::zeros(r + n1, r + n1);
            m.set_block(0, 0, a_l);
            m.set_block(r, 0, &lower);
            m.set_block(r, r, a_p1);
            Ok(m)
        })
        .collect::<Result<Vec<_>>>()?;
    let flasque = GLattice::from_generators(g.clone(), r + n1, gens);
    let mut incl = IntMatrix::zeros(r + n1, n1);
    incl.set_block(r, 0, &IntMatrix::identity(n1));
    let mut surj = IntMatrix::zeros(r, r + n1);
    surj.set_block(0, 0, &IntMatrix::identity(r));
    let inclusion = LatticeMap::new(p1.clone(), flasque.clone(), incl)?;
    let surjection = LatticeMap::new(flasque.clone(), l.clone(), surj)?;
    flasque.verify_action()?;
    Ok(FlasqueCover { base: l.clone(), flasque, permutation: p1, inclusion, surjection })
}

/// A kernel `Q_i` of the iterated resolution with its certificates.
#[derive(Debug, Clone)]
pub struct KernelLevel {
    /// `i >= 1`.
    pub index: usize,
    pub lattice: GLattice,
    /// `(subgroup id, P^H -> Q_{i-1}^H onto)`; all true means `Q_i` is
    /// coflasque.
    pub fixed_point_surjectivity: Vec<(usize, bool)>,
    /// Present when the rank is within `Limits::classify_rank`.
    pub classification: Option<Classification>,
}

impl KernelLevel {
    pub fn is_coflasque(&self) -> bool {
        self.fixed_point_surjectivity.iter().all(|(_, ok)| *ok)
    }
}

/// `L_n -> … -> L_0 -> L` with `L_i` the canonical cover of `Q_i`
/// (`Q_0 = L`) and `Q_{i+1} = ker(L_i -> Q_i)`.
#[derive(Debug, Clone)]
pub struct ToricComplex {
    pub base: GLattice,
    pub depth: usize,
    /// `levels[i]` resolves `Q_i` by `L_i` with kernel `Q_{i+1}`.
    pub levels: Vec<Resolution>,
    /// `kernels[i]` is `Q_{i+1}`.
    pub kernels: Vec<KernelLevel>,
}

impl ToricComplex {
    /// `L_i`.
    pub fn term(&self, i: usize) -> &GLattice {
        &self.levels[i].cover
    }

    /// `Q_i` for `1 <= i <= depth + 1`; `Q_0 = L`.
    pub fn kernel(&self, i: usize) -> &GLattice {
        if i == 0 {
            &self.base
        } else {
            &self.kernels[i - 1].lattice
        }
    }

    /// `d_0: L_0 -> L` and `d_i = ι_{i-1} π_i: L_i -> L_{i-1}`.
    pub fn differential(&self, i: usize) -> Result<LatticeMap> {
        if i == 0 {
            return Ok(self.levels[0].surjection.clone());
        }
        self.levels[i - 1].inclusion.compose(&self.levels[i].surjection)
    }

    pub fn ranks(&self) -> Vec<usize> {
        self.levels.iter().map(|r| r.cover.rank()).collect()
    }

    /// Checks `d_i d_{i+1} = 0` and exactness at `L_0, …, L_{depth-1}`
    /// (image of `d_{i+1}` saturated with rank `rank L_i - rank d_i`), and
    /// surjectivity of `d_0`.
    pub fn check_exact(&self) -> Result<bool> {
        let ds = (0..=self.depth).map(|i| self.differential(i)).collect::<Result<Vec<_>>>()?;
        if !ds[0].is_surjective() {
            return Ok(false);
        }
        for i in 0..self.depth {
            let (d, next) = (&ds[i], &ds[i + 1]);
            if !d.matrix().try_mul(next.matrix())?.is_zero() {
                return Ok(false);
            }
            let rank_d = linalg::rank_int(d.matrix());
            let image = linalg::invariant_factors_exact(next.matrix());
            if image.len() != self.term(i).rank() - rank_d || !image.iter().all(|x| *x == 1.into()) {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

pub fn iterate_resolution(l: &GLattice, depth: usize) -> Result<ToricComplex> {
    iterate_resolution_with(l, depth, &Limits::default(), None)
}

/// Builds the complex; `order` optionally fixes the sequence of class
/// representatives used at every level.
pub fn iterate_resolution_with(
    l: &GLattice,
    depth: usize,
    limits: &Limits,
    order: Option<&[Subgroup]>,
) -> Result<ToricComplex> {
    if depth > limits.max_depth {
        return Err(Error::capacity(format!("depth {depth} exceeds the limit of {}", limits.max_depth)));
    }
    let reps: Vec<Subgroup> = match order {
        Some(o) => o.to_vec(),
        None => l.group().subgroup_class_representatives()?.into_iter().cloned().collect(),
    };
    let mut levels = Vec::with_capacity(depth + 1);
    let mut kernels = Vec::with_capacity(depth + 1);
    let mut current = l.clone();
    for i in 0..=depth {
        let res = build_cover(&current, &reps, limits)?;
        let surjectivity = fixed_point_surjectivity(&res)?;
        let q = res.kernel.clone();
        let classification =
            if q.rank() <= limits.classify_rank { Some(classify_with(&q, limits)?) } else { None };
        kernels.push(KernelLevel { index: i + 1, lattice: q.clone(), fixed_point_surjectivity: surjectivity, classification });
        levels.push(res);
        current = q;
    }
    Ok(ToricComplex { base: l.clone(), depth, levels, kernels })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::catalog;

    fn c2() -> Arc<FiniteGroup> {
        Arc::new(catalog::cyclic(2))
    }

    fn sign(g: &Arc<FiniteGroup>) -> GLattice {
        GLattice::new(g.clone(), 1, vec![IntMatrix::from_rows(vec![vec![-1]], 1)]).unwrap()
    }

    #[test]
    fn classify_examples() {
        let g = c2();
        let reg = classify(&GLattice::regular(g.clone())).unwrap();
        assert!(reg.flasque && reg.coflasque && reg.invertible && reg.is_permutation_witnessed);
        let zm = classify(&sign(&g)).unwrap();
        assert!(!zm.flasque && !zm.invertible && !zm.is_permutation_witnessed);
        // H^1(C2, Z-) = Z/2: the sign lattice is not coflasque either.
        assert!(!zm.coflasque);
        let v4 = Arc::new(catalog::elementary_abelian(2, 2));
        let n1 = classify(&GLattice::norm_one(v4)).unwrap();
        assert!(!n1.invertible);
    }

    #[test]
    fn cover_of_trivial_lattice() {
        let g = c2();
        let res = coflasque_cover(&GLattice::trivial(g.clone(), 1)).unwrap();
        assert_eq!(res.cover.rank(), 3);
        assert_eq!(res.kernel.rank(), 2);
        assert!(res.check_exact().unwrap());
        assert!(cohomology::is_coflasque(&res.kernel).unwrap());
        let zero = coflasque_cover(&GLattice::trivial(g, 0)).unwrap();
        assert_eq!((zero.cover.rank(), zero.kernel.rank()), (0, 0));
    }

    #[test]
    fn cover_of_regular_contains_identity_block() {
        let g = Arc::new(catalog::symmetric(3));
        let reg = GLattice::regular(g.clone());
        let res = coflasque_cover(&reg).unwrap();
        assert!(res.check_exact().unwrap());
        assert!(cohomology::is_coflasque(&res.kernel).unwrap());
        assert!(fixed_point_surjectivity(&res).unwrap().iter().all(|(_, ok)| *ok));
        assert!(res.split().unwrap().is_some());
    }

    #[test]
    fn split_examples() {
        let g = c2();
        let reg = GLattice::regular(g.clone());
        let triv = GLattice::trivial(g.clone(), 1);
        let aug = LatticeMap::new(reg.clone(), triv.clone(), IntMatrix::from_rows(vec![vec![1, 1]], 2)).unwrap();
        assert!(attempt_split(&aug).unwrap().is_none());
        let zm = sign(&g);
        let sum = triv.direct_sum(&zm).unwrap();
        let proj = LatticeMap::new(sum.clone(), triv.clone(), IntMatrix::from_rows(vec![vec![1, 0]], 2)).unwrap();
        let s = attempt_split(&proj).unwrap().unwrap();
        assert_eq!(s.matrix(), &IntMatrix::from_rows(vec![vec![1], vec![0]], 1));
        assert!(coflasque_cover(&zm).unwrap().split().unwrap().is_none());
        let not_onto = LatticeMap::new(triv.clone(), triv.clone(), IntMatrix::from_rows(vec![vec![2]], 1)).unwrap();
        assert!(attempt_split(&not_onto).is_err());
    }

    #[test]
    fn modular_split_agrees_with_integer_solve() {
        for named in catalog::small_groups(8) {
            let g = Arc::new(named.group);
            let mut lattices = vec![GLattice::norm_one(g.clone()), GLattice::regular(g.clone())];
            lattices.push(lattices[0].dual().unwrap());
            for h in g.subgroups().unwrap() {
                lattices.push(GLattice::augmentation_ideal(g.clone(), h));
                if let Ok(s) = GLattice::sign(g.clone(), h) {
                    lattices.push(s);
                }
            }
            for l in lattices {
                let res = coflasque_cover(&l).unwrap();
                let fast = res.split_modular().unwrap();
                let slow = solve_section(res.surjection.matrix(), &res.homs_into_cover().unwrap(), l.rank()).unwrap();
                assert_eq!(fast.is_some(), slow.is_some(), "{} rank {}", named.name, l.rank());
                if let Some(s) = fast {
                    let map = LatticeMap::new(l.clone(), res.cover.clone(), s).unwrap();
                    assert!(res.surjection.compose(&map).unwrap().matrix().is_identity());
                }
            }
        }
    }

    #[test]
    fn stabilization_splits_augmentation() {
        let g = c2();
        let reg = GLattice::regular(g.clone());
        let triv = GLattice::trivial(g.clone(), 1);
        let aug = LatticeMap::new(reg, triv, IntMatrix::from_rows(vec![vec![1, 1]], 2)).unwrap();
        let whole = g.whole().unwrap().id;
        let found = stabilized_split(&aug, &[0, whole]).unwrap();
        assert_eq!(found.added, vec![0, whole]);
        assert!(found.surjection.matrix().try_mul(found.section.matrix()).unwrap().is_identity());
        assert!(matches!(stabilized_split(&aug, &[0]), Err(Error::Undecided(_))));
    }

    #[test]
    fn flasque_cover_examples() {
        let g = c2();
        let fc = flasque_cover(&GLattice::trivial(g.clone(), 1)).unwrap();
        assert!(cohomology::is_flasque(&fc.flasque).unwrap());
        assert!(fc.permutation.is_permutation_action());
        assert!(fc.surjection.is_surjective());
        assert!(fc.surjection.compose(&fc.inclusion).unwrap().matrix().is_zero());
        assert_eq!(fc.flasque.rank(), fc.permutation.rank() + 1);
        assert_eq!(fc.flasque.rank(), 6);
        let zero = flasque_cover(&GLattice::trivial(g, 0)).unwrap();
        assert_eq!((zero.flasque.rank(), zero.permutation.rank()), (0, 0));
    }

    #[test]
    fn iterated_resolution_of_trivial() {
        let g = c2();
        let cx = iterate_resolution(&GLattice::trivial(g, 1), 2).unwrap();
        assert_eq!(cx.ranks()[0], 3);
        assert_eq!(cx.ranks().len(), 3);
        assert!(cx.check_exact().unwrap());
        assert!(cx.kernels.iter().all(|k| k.is_coflasque()));
        for k in &cx.kernels {
            if let Some(c) = &k.classification {
                assert!(c.coflasque);
            }
        }
    }

    #[test]
    fn lifts() {
        let g = Arc::new(catalog::elementary_abelian(2, 2));
        let reg = GLattice::regular(g.clone());
        let res = coflasque_cover(&reg).unwrap();
        let id = LatticeMap::identity(&reg);
        let Lift::Found(l) = lift_morphism(&id, &res, &res).unwrap() else { panic!("no lift") };
        assert!(l.matrix().is_identity());
        let zero = LatticeMap::zero(&reg, &reg);
        let Lift::Found(l) = lift_morphism(&zero, &res, &res).unwrap() else { panic!("no lift") };
        assert!(l.matrix().is_zero());
        let triv = GLattice::trivial(g.clone(), 1);
        let aug = LatticeMap::new(reg.clone(), triv.clone(), IntMatrix::from_rows(vec![vec![1; 4]], 4)).unwrap();
        let target = coflasque_cover(&triv).unwrap();
        assert!(matches!(lift_morphism(&aug, &target, &res).unwrap(), Lift::Found(_)));
    }
}
