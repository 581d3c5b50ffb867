//! G-lattices: free finite-rank `Z`-modules with a group action by unimodular
//! matrices acting on column vectors.
//!
//! A lattice stores one matrix per group generator. Matrices for arbitrary
//! elements are derived along the breadth-first generator words of the group
//! and cached on first use.

use std::fmt;
use std::sync::{Arc, OnceLock};

use crate::error::{Error, Result};
use crate::group::{FiniteGroup, Subgroup};
use crate::linalg;
use crate::num::ExactInt;
use crate::{Int, IntMatrix};

struct Inner {
    group: Arc<FiniteGroup>,
    rank: usize,
    generators: Vec<IntMatrix>,
    elements: OnceLock<Vec<IntMatrix>>,
    sparse: OnceLock<Vec<SparseColumns>>,
}

/// Nonzero entries of each column.
type SparseColumns = Vec<Vec<(usize, Int)>>;

#[derive(Clone)]
pub struct GLattice(Arc<Inner>);

impl PartialEq for GLattice {
    fn eq(&self, other: &Self) -> bool {
        same_group(self.group(), other.group()) && self.rank() == other.rank() && self.0.generators == other.0.generators
    }
}

impl Eq for GLattice {}

impl fmt::Debug for GLattice {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("GLattice")
            .field("group_order", &self.group().order())
            .field("rank", &self.rank())
            .field("generators", &self.0.generators)
            .finish()
    }
}

pub fn same_group(a: &Arc<FiniteGroup>, b: &Arc<FiniteGroup>) -> bool {
    Arc::ptr_eq(a, b) || **a == **b
}

fn check_same_group(a: &GLattice, b: &GLattice) -> Result<()> {
    if same_group(a.group(), b.group()) {
        Ok(())
    } else {
        Err(Error::input("lattices are defined over different groups"))
    }
}

fn is_unimodular(m: &IntMatrix) -> bool {
    let det = crate::num::exact_or_big(|| Ok(m.determinant()?.to_bigint()), || m.to_big().determinant().expect("bigint"));
    det.is_unit()
}

impl GLattice {
    /// Builds a lattice from one matrix per group generator, checking that
    /// each is unimodular and that the extension to all elements is a
    /// homomorphism (`A(g) A(s) = A(g s)` along every Cayley-graph edge).
    pub fn new(group: Arc<FiniteGroup>, rank: usize, generator_matrices: Vec<IntMatrix>) -> Result<Self> {
        if generator_matrices.len() != group.generators().len() {
            return Err(Error::input(format!(
                "expected {} generator matrices, found {}",
                group.generators().len(),
                generator_matrices.len()
            )));
        }
        for (i, m) in generator_matrices.iter().enumerate() {
            if m.shape() != (rank, rank) {
                return Err(Error::input(format!("generator matrix {i} is not {rank}x{rank}")));
            }
            if !is_unimodular(m) {
                return Err(Error::input(format!("generator matrix {i} is not unimodular")));
            }
        }
        let lattice = Self::from_generators(group, rank, generator_matrices);
        lattice.verify_action()?;
        Ok(lattice)
    }

    /// Constructor for actions that are homomorphisms by construction.
    pub(crate) fn from_generators(group: Arc<FiniteGroup>, rank: usize, generators: Vec<IntMatrix>) -> Self {
        debug_assert_eq!(generators.len(), group.generators().len());
        GLattice(Arc::new(Inner { group, rank, generators, elements: OnceLock::new(), sparse: OnceLock::new() }))
    }

    /// Checks the homomorphism property on every Cayley-graph edge, which
    /// implies it for all pairs of elements.
    pub fn verify_action(&self) -> Result<()> {
        let g = self.group();
        let table = self.try_element_matrices()?;
        for a in 0..g.order() {
            for (si, &s) in g.generator_elements().iter().enumerate() {
                let lhs = table[a].try_mul(&self.0.generators[si])?;
                if lhs != table[g.mul(a, s)] {
                    return Err(Error::input(format!(
                        "generator matrices violate a group relation (element {a}, generator {si})"
                    )));
                }
            }
        }
        Ok(())
    }

    pub fn group(&self) -> &Arc<FiniteGroup> {
        &self.0.group
    }

    pub fn rank(&self) -> usize {
        self.0.rank
    }

    pub fn generator_matrices(&self) -> &[IntMatrix] {
        &self.0.generators
    }

    fn try_element_matrices(&self) -> Result<&[IntMatrix]> {
        if let Some(t) = self.0.elements.get() {
            return Ok(t);
        }
        let g = self.group();
        let mut table: Vec<IntMatrix> = Vec::with_capacity(g.order());
        table.push(IntMatrix::identity(self.rank()));
        for e in 1..g.order() {
            let (p, s) = g.bfs_edge(e).expect("non-identity element");
            table.push(table[p].try_mul(&self.0.generators[s])?);
        }
        Ok(self.0.elements.get_or_init(|| table))
    }

    /// Matrix of element `g`.
    pub fn action(&self, g: usize) -> &IntMatrix {
        &self.element_matrices()[g]
    }

    pub fn element_matrices(&self) -> &[IntMatrix] {
        self.try_element_matrices().expect("element matrices overflow 63 bits")
    }

    fn sparse_generators(&self) -> &[SparseColumns] {
        self.0.sparse.get_or_init(|| {
            self.0
                .generators
                .iter()
                .map(|m| {
                    (0..m.cols())
                        .map(|j| (0..m.rows()).filter_map(|i| (m[(i, j)] != 0).then(|| (i, m[(i, j)]))).collect())
                        .collect()
                })
                .collect()
        })
    }

    fn word(&self, g: usize) -> Vec<usize> {
        let group = self.group();
        let mut word = Vec::new();
        let mut e = g;
        while let Some((p, s)) = group.bfs_edge(e) {
            word.push(s);
            e = p;
        }
        word
    }

    /// `A(g) v` for a sparse `v`, along the word of `g`.
    fn apply_word(&self, word: &[usize], v: Vec<(usize, Int)>, scratch: &mut [Int]) -> Result<Vec<(usize, Int)>> {
        let sparse = self.sparse_generators();
        let mut cur = v;
        // g = s_{w_last} ... s_{w_0}; apply the rightmost generator first.
        for &s in word {
            let mut touched = Vec::new();
            for &(c, x) in &cur {
                for &(i, a) in &sparse[s][c] {
                    if scratch[i] == 0 {
                        touched.push(i);
                    }
                    scratch[i] = scratch[i].add_exact(&a.mul_exact(&x)?)?;
                }
            }
            touched.sort_unstable();
            touched.dedup();
            cur = touched
                .into_iter()
                .filter_map(|i| {
                    let x = std::mem::take(&mut scratch[i]);
                    (x != 0).then_some((i, x))
                })
                .collect();
        }
        Ok(cur)
    }

    /// Columns of `A(g)` as sorted `(row, value)` lists.
    pub fn sparse_matrix_of(&self, g: usize) -> Result<Vec<Vec<(usize, Int)>>> {
        let word = self.word(g);
        let mut scratch = vec![0; self.rank()];
        (0..self.rank()).map(|j| self.apply_word(&word, vec![(j, 1)], &mut scratch)).collect()
    }

    /// `A(g) v`, computed along the generator word of `g`.
    pub fn apply(&self, g: usize, v: &[Int]) -> Result<Vec<Int>> {
        if let Some(t) = self.0.elements.get() {
            return Ok(t[g].try_mul_vec(v)?);
        }
        let sparse = v.iter().enumerate().filter(|(_, x)| **x != 0).map(|(i, &x)| (i, x)).collect();
        let mut out = vec![0; v.len()];
        for (i, x) in self.apply_word(&self.word(g), sparse, &mut vec![0; v.len()])? {
            out[i] = x;
        }
        Ok(out)
    }

    /// Generator matrices of the subgroup `h`, i.e. `A(s)` for its
    /// generating set.
    pub fn subgroup_generator_matrices(&self, h: &Subgroup) -> Result<Vec<IntMatrix>> {
        h.generators.iter().map(|&s| self.matrix_of(s)).collect()
    }

    /// Matrix of `g`, without materializing the full element table.
    pub fn matrix_of(&self, g: usize) -> Result<IntMatrix> {
        if let Some(t) = self.0.elements.get() {
            return Ok(t[g].clone());
        }
        if let Some(i) = self.group().generator_elements().iter().position(|&s| s == g) {
            return Ok(self.0.generators[i].clone());
        }
        let r = self.rank();
        let mut out = IntMatrix::zeros(r, r);
        for (j, col) in self.sparse_matrix_of(g)?.into_iter().enumerate() {
            for (i, x) in col {
                out[(i, j)] = x;
            }
        }
        Ok(out)
    }

    /// `A(g) m`, multiplying generator matrices along the word of `g`.
    pub fn apply_matrix(&self, g: usize, m: &IntMatrix) -> Result<IntMatrix> {
        if let Some(t) = self.0.elements.get() {
            return Ok(t[g].try_mul(m)?);
        }
        let group = self.group();
        let mut e = g;
        let mut out = m.clone();
        while let Some((p, s)) = group.bfs_edge(e) {
            out = self.0.generators[s].try_mul(&out)?;
            e = p;
        }
        Ok(out)
    }

    /// Whether every generator permutes the basis, which makes the lattice a
    /// direct sum of `Z[G/H]` over the orbit stabilizers.
    pub fn is_permutation_action(&self) -> bool {
        self.0.generators.iter().all(is_permutation_matrix)
    }

    pub fn trivial(group: Arc<FiniteGroup>, rank: usize) -> Self {
        let gens = vec![IntMatrix::identity(rank); group.generators().len()];
        Self::from_generators(group, rank, gens)
    }

    /// `Z[G/H]` on the coset basis. Cosets are ordered by their minimal
    /// element index, which is also the representative.
    pub fn permutation(group: Arc<FiniteGroup>, h: &Subgroup) -> Self {
        let cosets = left_cosets(&group, h);
        let n = cosets.reps.len();
        let gens = group
            .generator_elements()
            .iter()
            .map(|&s| {
                let mut m = IntMatrix::zeros(n, n);
                for (i, &rep) in cosets.reps.iter().enumerate() {
                    m[(cosets.of_element[group.mul(s, rep)], i)] = 1;
                }
                m
            })
            .collect();
        Self::from_generators(group, n, gens)
    }

    pub fn regular(group: Arc<FiniteGroup>) -> Self {
        let trivial = trivial_subgroup(&group);
        Self::permutation(group, &trivial)
    }

    /// Augmentation ideal `I_{G/H} = ker(Z[G/H] -> Z)` on the basis
    /// `c - c_0` for cosets `c != c_0 = H`.
    pub fn augmentation_ideal(group: Arc<FiniteGroup>, h: &Subgroup) -> Self {
        let cosets = left_cosets(&group, h);
        let n = cosets.reps.len();
        let gens = group
            .generator_elements()
            .iter()
            .map(|&s| {
                // s(c_i - c_0) = s c_i - s c_0 = (s c_i - c_0) - (s c_0 - c_0)
                let mut m = IntMatrix::zeros(n - 1, n - 1);
                let image0 = cosets.of_element[group.mul(s, cosets.reps[0])];
                for i in 1..n {
                    let image = cosets.of_element[group.mul(s, cosets.reps[i])];
                    if image != 0 {
                        m[(image - 1, i - 1)] += 1;
                    }
                    if image0 != 0 {
                        m[(image0 - 1, i - 1)] -= 1;
                    }
                }
                m
            })
            .collect();
        Self::from_generators(group, n - 1, gens)
    }

    /// Cocharacter lattice of the norm-one torus: the augmentation ideal of
    /// `Z[G]`, rank `|G| - 1`.
    pub fn norm_one(group: Arc<FiniteGroup>) -> Self {
        let trivial = trivial_subgroup(&group);
        Self::augmentation_ideal(group, &trivial)
    }

    /// Rank-one lattice on which `g` acts by `+1` if `g ∈ h` and `-1`
    /// otherwise; `h` must have index at most 2.
    pub fn sign(group: Arc<FiniteGroup>, h: &Subgroup) -> Result<Self> {
        if group.order() > 2 * h.order() {
            return Err(Error::input("sign lattice needs a subgroup of index at most 2"));
        }
        let gens = group
            .generator_elements()
            .iter()
            .map(|&s| IntMatrix::from_rows(vec![vec![if h.contains(s) { 1 } else { -1 }]], 1))
            .collect();
        Ok(Self::from_generators(group, 1, gens))
    }

    /// `A*(g) = A(g^-1)^T`.
    pub fn dual(&self) -> Result<Self> {
        let gens = self
            .0
            .generators
            .iter()
            .map(|m| Ok(unimodular_inverse(m)?.transpose()))
            .collect::<Result<_>>()?;
        Ok(Self::from_generators(self.group().clone(), self.rank(), gens))
    }

    pub fn direct_sum(&self, other: &Self) -> Result<Self> {
        check_same_group(self, other)?;
        let gens = self.0.generators.iter().zip(&other.0.generators).map(|(a, b)| a.block_diag(b)).collect();
        Ok(Self::from_generators(self.group().clone(), self.rank() + other.rank(), gens))
    }

    /// Tensor product with basis `e_i ⊗ f_j` at index `i * other.rank() + j`.
    pub fn tensor(&self, other: &Self) -> Result<Self> {
        check_same_group(self, other)?;
        let gens = self
            .0
            .generators
            .iter()
            .zip(&other.0.generators)
            .map(|(a, b)| a.try_kron(b))
            .collect::<Result<_, _>>()?;
        Ok(Self::from_generators(self.group().clone(), self.rank() * other.rank(), gens))
    }

    /// `Hom(self, target) = dual(self) ⊗ target`. The map `φ` corresponds to
    /// the vector with `φ[j][i]` at index `i * target.rank() + j`.
    pub fn hom_lattice(&self, target: &Self) -> Result<Self> {
        self.dual()?.tensor(target)
    }

    /// Basis (columns, column Hermite normal form) of the fixed sublattice
    /// `{x : A(h) x = x for all h in H}`; saturated by construction.
    pub fn fixed_sublattice(&self, h: &Subgroup) -> Result<IntMatrix> {
        let mats = self.subgroup_generator_matrices(h)?;
        let r = self.rank();
        if mats.is_empty() {
            return Ok(IntMatrix::identity(r));
        }
        let parts = mats.iter().map(|m| m.try_sub(&IntMatrix::identity(r))).collect::<Result<Vec<_>, _>>()?;
        Ok(linalg::integer_kernel_int(&IntMatrix::vstack(&parts, r))?)
    }

    /// Restriction of the action to an invariant saturated sublattice with
    /// the given basis (columns in lower echelon form, e.g. a kernel basis).
    pub fn sublattice(&self, basis: &IntMatrix) -> Result<Self> {
        if basis.rows() != self.rank() {
            return Err(Error::input("sublattice basis has wrong ambient rank"));
        }
        let coords = EchelonBasis::new(basis)?;
        let gens = self
            .0
            .generators
            .iter()
            .map(|m| {
                let image = m.try_mul(basis)?;
                coords.coordinates_of_columns(&image).ok_or_else(|| Error::input("sublattice is not invariant"))
            })
            .collect::<Result<_>>()?;
        Ok(Self::from_generators(self.group().clone(), basis.cols(), gens))
    }

    /// Quotient by an invariant saturated sublattice. Returns the quotient
    /// lattice and the projection matrix (quotient rank × rank).
    pub fn quotient(&self, basis: &IntMatrix) -> Result<(Self, IntMatrix)> {
        let n = self.rank();
        let q = basis.cols();
        let smith = linalg::smith_normal_form(basis)?;
        if smith.invariant_factors().len() != q || !smith.invariant_factors().iter().all(|d| *d == 1) {
            return Err(Error::input("sublattice is not saturated"));
        }
        // In the basis given by the columns of u^-1 the sublattice is the span
        // of the first q vectors.
        let u_inv = unimodular_inverse(&smith.u)?;
        let projection = smith.u.submatrix(q..n, 0..n);
        let section = u_inv.submatrix(0..n, q..n);
        let gens = self
            .0
            .generators
            .iter()
            .map(|m| Ok(projection.try_mul(&m.try_mul(&section)?)?))
            .collect::<Result<_>>()?;
        Ok((Self::from_generators(self.group().clone(), n - q, gens), projection))
    }

    /// The same module viewed over the subgroup `h`, as a group in its own
    /// right.
    pub fn restrict(&self, h: &Subgroup) -> Result<(Self, Arc<FiniteGroup>)> {
        let sub = Arc::new(subgroup_as_group(self.group(), h)?);
        let gens = sub
            .generator_elements()
            .iter()
            .map(|&s| self.matrix_of(parent_index(self.group(), &sub, s)))
            .collect::<Result<_>>()?;
        Ok((Self::from_generators(sub.clone(), self.rank(), gens), sub))
    }

    /// Conjugates the action by a unimodular change of basis `p`:
    /// `A'(g) = p A(g) p^-1`.
    pub fn change_basis(&self, p: &IntMatrix) -> Result<Self> {
        let p_inv = unimodular_inverse(p)?;
        let gens =
            self.0.generators.iter().map(|m| Ok(p.try_mul(m)?.try_mul(&p_inv)?)).collect::<Result<_>>()?;
        Ok(Self::from_generators(self.group().clone(), self.rank(), gens))
    }
}

pub fn is_permutation_matrix(m: &IntMatrix) -> bool {
    m.is_square()
        && (0..m.rows()).all(|i| {
            let row = m.row(i);
            row.iter().all(|&x| x == 0 || x == 1) && row.iter().filter(|&&x| x == 1).count() == 1
        })
        && (0..m.cols()).all(|j| m.column(j).iter().filter(|&&x| x == 1).count() == 1)
}

/// The trivial subgroup as a `Subgroup` value, without consulting the cached
/// inventory (so it works for groups of any order).
pub fn trivial_subgroup(group: &FiniteGroup) -> Subgroup {
    let _ = group;
    Subgroup { id: 0, elements: vec![0], generators: vec![], class_representative: 0, is_class_representative: true }
}

/// The subgroup `h` re-enumerated as a permutation group on the parent's
/// points, generated by its greedy generating set.
pub fn subgroup_as_group(group: &FiniteGroup, h: &Subgroup) -> Result<FiniteGroup> {
    let gens = h.generators.iter().map(|&s| group.element(s).to_vec()).collect();
    FiniteGroup::enumerate(gens, group.degree())
}

/// Index in the parent group of element `i` of a subgroup-as-group.
pub fn parent_index(parent: &FiniteGroup, sub: &FiniteGroup, i: usize) -> usize {
    let perm = sub.element(i);
    parent.elements().iter().position(|p| p.as_slice() == perm).expect("subgroup element in parent")
}

pub struct Cosets {
    /// Minimal element index of each coset, increasing.
    pub reps: Vec<usize>,
    /// Coset number of every element.
    pub of_element: Vec<usize>,
}

/// Left cosets `gH`.
pub fn left_cosets(group: &FiniteGroup, h: &Subgroup) -> Cosets {
    let mut of_element = vec![usize::MAX; group.order()];
    let mut reps = Vec::new();
    for g in 0..group.order() {
        if of_element[g] != usize::MAX {
            continue;
        }
        let c = reps.len();
        reps.push(g);
        for &x in &h.elements {
            of_element[group.mul(g, x)] = c;
        }
    }
    Cosets { reps, of_element }
}

/// Inverse of a unimodular matrix.
pub fn unimodular_inverse(m: &IntMatrix) -> Result<IntMatrix> {
    let w = linalg::left_inverse_int(m)?;
    match w {
        Some(w) if m.is_square() => Ok(w),
        _ => Err(Error::input("matrix is not unimodular")),
    }
}

/// Coordinates with respect to a basis in lower echelon form: each column
/// has a pivot row above which it vanishes, pivots strictly increasing.
pub struct EchelonBasis<'a> {
    basis: &'a IntMatrix,
    pivots: Vec<usize>,
}

impl<'a> EchelonBasis<'a> {
    pub fn new(basis: &'a IntMatrix) -> Result<Self> {
        let mut pivots = Vec::with_capacity(basis.cols());
        for j in 0..basis.cols() {
            let p = (0..basis.rows())
                .find(|&i| basis[(i, j)] != 0)
                .ok_or_else(|| Error::input("zero column in basis"))?;
            if pivots.last().is_some_and(|&last| p <= last) {
                return Err(Error::input("basis is not in echelon form"));
            }
            pivots.push(p);
        }
        Ok(EchelonBasis { basis, pivots })
    }

    /// Integer coordinates of `y` in the basis, if `y` lies in its span.
    pub fn coordinates(&self, y: &[Int]) -> Option<Vec<Int>> {
        let k = self.basis.cols();
        let mut x = vec![0 as Int; k];
        for j in 0..k {
            let p = self.pivots[j];
            let mut acc = y[p] as i128;
            for (l, xl) in x.iter().enumerate().take(j) {
                acc -= self.basis[(p, l)] as i128 * *xl as i128;
            }
            let d = self.basis[(p, j)] as i128;
            if acc % d != 0 {
                return None;
            }
            x[j] = Int::try_from(acc / d).ok()?;
        }
        // verify every row, not just pivot rows
        let back = self.basis.try_mul_vec(&x).ok()?;
        (back == y).then_some(x)
    }

    pub fn coordinates_of_columns(&self, m: &IntMatrix) -> Option<IntMatrix> {
        let cols: Option<Vec<Vec<Int>>> = (0..m.cols()).map(|j| self.coordinates(&m.column(j))).collect();
        Some(IntMatrix::from_columns(&cols?, self.basis.cols()))
    }
}

/// Equivariant homomorphism `source -> target` given by a
/// `target.rank() × source.rank()` matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LatticeMap {
    source: GLattice,
    target: GLattice,
    matrix: IntMatrix,
}

impl LatticeMap {
    pub fn new(source: GLattice, target: GLattice, matrix: IntMatrix) -> Result<Self> {
        check_same_group(&source, &target)?;
        if matrix.shape() != (target.rank(), source.rank()) {
            return Err(Error::input(format!(
                "map matrix is {}x{}, expected {}x{}",
                matrix.rows(),
                matrix.cols(),
                target.rank(),
                source.rank()
            )));
        }
        for (a, b) in source.generator_matrices().iter().zip(target.generator_matrices()) {
            if matrix.try_mul(a)? != b.try_mul(&matrix)? {
                return Err(Error::input("map is not equivariant"));
            }
        }
        Ok(LatticeMap { source, target, matrix })
    }

    /// For maps that are equivariant by construction.
    pub fn new_unchecked(source: GLattice, target: GLattice, matrix: IntMatrix) -> Self {
        debug_assert_eq!(matrix.shape(), (target.rank(), source.rank()));
        LatticeMap { source, target, matrix }
    }

    pub fn identity(l: &GLattice) -> Self {
        LatticeMap { source: l.clone(), target: l.clone(), matrix: IntMatrix::identity(l.rank()) }
    }

    pub fn zero(source: &GLattice, target: &GLattice) -> Self {
        LatticeMap { source: source.clone(), target: target.clone(), matrix: IntMatrix::zeros(target.rank(), source.rank()) }
    }

    pub fn source(&self) -> &GLattice {
        &self.source
    }

    pub fn target(&self) -> &GLattice {
        &self.target
    }

    pub fn matrix(&self) -> &IntMatrix {
        &self.matrix
    }

    /// `self ∘ first`.
    pub fn compose(&self, first: &LatticeMap) -> Result<LatticeMap> {
        if first.target != self.source {
            return Err(Error::input("maps do not compose"));
        }
        Ok(LatticeMap {
            source: first.source.clone(),
            target: self.target.clone(),
            matrix: self.matrix.try_mul(&first.matrix)?,
        })
    }

    /// Surjective over the integers: every invariant factor is 1 and the rank
    /// equals the target rank.
    pub fn is_surjective(&self) -> bool {
        let d = linalg::invariant_factors_exact(&self.matrix);
        d.len() == self.target.rank() && d.iter().all(|x| x.is_unit())
    }

    /// Saturated kernel basis (HNF columns).
    pub fn kernel_basis(&self) -> Result<IntMatrix> {
        Ok(linalg::integer_kernel_int(&self.matrix)?)
    }
}
