use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::group::prime_factors;
use crate::linalg::{invariant_factors_exact, sparse_local_torsion};
use crate::matrix::Matrix;

/// A finitely generated abelian group `Z^free_rank ⊕ Z/d1 ⊕ … ⊕ Z/dk` with
/// `d1 | d2 | … | dk` and every `di >= 2`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
pub struct AbelianGroupInvariants {
    pub free_rank: usize,
    #[serde(with = "crate::doc::bigint_vec")]
    pub torsion: Vec<BigInt>,
}

impl AbelianGroupInvariants {
    pub fn trivial() -> Self {
        Self::default()
    }

    pub fn cyclic(n: u64) -> Self {
        match n {
            0 => Self::free(1),
            1 => Self::trivial(),
            _ => AbelianGroupInvariants { free_rank: 0, torsion: vec![BigInt::from(n)] },
        }
    }

    pub fn free(rank: usize) -> Self {
        AbelianGroupInvariants { free_rank: rank, torsion: Vec::new() }
    }

    /// Normalizes an arbitrary list of cyclic orders (0 meaning `Z`) into
    /// invariant-factor form.
    pub fn from_cyclic_orders(orders: impl IntoIterator<Item = BigInt>) -> Self {
        let mut free_rank = 0;
        let mut finite: Vec<BigInt> = Vec::new();
        for d in orders {
            let d = d.abs();
            if d.is_zero() {
                free_rank += 1;
            } else if !d.is_one() {
                finite.push(d);
            }
        }
        // Smith form of diag(finite) gives the invariant factors.
        let n = finite.len();
        let mut diag = Matrix::<BigInt>::zeros(n, n);
        for (i, d) in finite.into_iter().enumerate() {
            diag[(i, i)] = d;
        }
        let torsion = crate::linalg::invariant_factors(&diag)
            .expect("bigint arithmetic cannot overflow")
            .into_iter()
            .filter(|d| !d.is_one())
            .collect();
        AbelianGroupInvariants { free_rank, torsion }
    }

    /// Cokernel of `m` viewed as a map `Z^cols -> Z^rows`.
    pub fn cokernel(m: &Matrix<i64>) -> Self {
        let d = invariant_factors_exact(m);
        let free_rank = m.rows() - d.len();
        AbelianGroupInvariants { free_rank, torsion: d.into_iter().filter(|x| !x.is_one()).collect() }
    }

    /// Torsion of the cokernel of a sparse matrix, given an `exponent`
    /// known to kill that torsion.
    pub fn sparse_cokernel_torsion(rows: &[Vec<(usize, i64)>], cols: usize, exponent: usize) -> Self {
        let mut orders = Vec::new();
        for (p, e) in prime_factors(exponent) {
            for k in sparse_local_torsion(rows, cols, p as u64, e as u32 + 1) {
                orders.push(BigInt::from(p).pow(k));
            }
        }
        Self::from_cyclic_orders(orders)
    }

    /// Torsion subgroup of the cokernel of `m`.
    pub fn cokernel_torsion(m: &Matrix<i64>) -> Self {
        AbelianGroupInvariants { free_rank: 0, ..Self::cokernel(m) }
    }

    pub fn is_trivial(&self) -> bool {
        self.free_rank == 0 && self.torsion.is_empty()
    }

    pub fn is_finite(&self) -> bool {
        self.free_rank == 0
    }

    /// Order of a finite group; `None` when the free rank is positive.
    pub fn order(&self) -> Option<BigInt> {
        self.is_finite().then(|| self.torsion.iter().product())
    }

    pub fn direct_sum(&self, other: &Self) -> Self {
        let orders = self
            .torsion
            .iter()
            .chain(&other.torsion)
            .cloned()
            .chain(std::iter::repeat(BigInt::zero()).take(self.free_rank + other.free_rank));
        Self::from_cyclic_orders(orders)
    }

    /// Whether the divisibility chain and `di >= 2` hold.
    pub fn is_normalized(&self) -> bool {
        self.torsion.iter().all(|d| *d >= BigInt::from(2))
            && self.torsion.windows(2).all(|w| (&w[1] % &w[0]).is_zero())
    }
}

impl fmt::Display for AbelianGroupInvariants {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_trivial() {
            return write!(f, "0");
        }
        let mut parts = Vec::new();
        if self.free_rank == 1 {
            parts.push("Z".to_string());
        } else if self.free_rank > 1 {
            parts.push(format!("Z^{}", self.free_rank));
        }
        parts.extend(self.torsion.iter().map(|d| format!("Z/{d}")));
        write!(f, "{}", parts.join(" + "))
    }
}
