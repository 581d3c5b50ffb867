//! JSON document formats for groups, lattices, matrices and resolutions.
//!
//! Integers are written as JSON numbers when they fit in 53 bits and as
//! decimal strings otherwise; both forms are accepted on input. Objects are
//! emitted with keys in sorted order.

use std::sync::Arc;

use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::group::{FiniteGroup, Subgroup};
use crate::lattice::{left_cosets, GLattice, LatticeMap};
use crate::resolve::{PermutationSummand, Resolution};
use crate::{Int, IntMatrix};

const SAFE: i64 = 1 << 53;

pub mod bigint_vec {
    use num_bigint::BigInt;
    use num_traits::ToPrimitive;
    use serde::de::Error as _;
    use serde::{Deserialize, Deserializer, Serialize, Serializer};

    use super::SAFE;

    pub fn to_value(x: &BigInt) -> serde_json::Value {
        match x.to_i64() {
            Some(v) if v.abs() < SAFE => serde_json::Value::from(v),
            _ => serde_json::Value::String(x.to_string()),
        }
    }

    pub fn from_value(v: &serde_json::Value) -> Result<BigInt, String> {
        match v {
            serde_json::Value::Number(n) => n.as_i64().map(BigInt::from).ok_or_else(|| format!("not an integer: {n}")),
            serde_json::Value::String(s) => s.parse::<BigInt>().map_err(|e| format!("bad integer {s:?}: {e}")),
            other => Err(format!("expected an integer, found {other}")),
        }
    }

    pub fn serialize<S: Serializer>(xs: &[BigInt], s: S) -> Result<S::Ok, S::Error> {
        xs.iter().map(to_value).collect::<Vec<_>>().serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Vec<BigInt>, D::Error> {
        let raw = Vec::<serde_json::Value>::deserialize(d)?;
        raw.iter().map(|v| from_value(v).map_err(D::Error::custom)).collect()
    }
}

/// A machine integer with the wide-integer JSON encoding.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Wide(pub Int);

impl Serialize for Wide {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        if self.0.abs() < SAFE {
            s.serialize_i64(self.0)
        } else {
            s.serialize_str(&self.0.to_string())
        }
    }
}

impl<'de> Deserialize<'de> for Wide {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        match serde_json::Value::deserialize(d)? {
            serde_json::Value::Number(n) => {
                n.as_i64().map(Wide).ok_or_else(|| D::Error::custom(format!("not a 64-bit integer: {n}")))
            }
            serde_json::Value::String(s) => {
                s.parse::<Int>().map(Wide).map_err(|e| D::Error::custom(format!("bad integer {s:?}: {e}")))
            }
            other => Err(D::Error::custom(format!("expected an integer, found {other}"))),
        }
    }
}

fn rows_of(m: &IntMatrix) -> Vec<Vec<Wide>> {
    (0..m.rows()).map(|i| m.row(i).iter().map(|&x| Wide(x)).collect()).collect()
}

fn matrix_from_rows(rows: &[Vec<Wide>], cols: usize) -> Result<IntMatrix> {
    if let Some(bad) = rows.iter().position(|r| r.len() != cols) {
        return Err(Error::input(format!("row {bad} has {} entries, expected {cols}", rows[bad].len())));
    }
    Ok(IntMatrix::from_rows(rows.iter().map(|r| r.iter().map(|w| w.0).collect()).collect(), cols))
}

/// `{"degree": n, "generators": [[...], ...]}` with 0-based images.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GroupDoc {
    pub degree: usize,
    pub generators: Vec<Vec<usize>>,
}

impl GroupDoc {
    pub fn of(group: &FiniteGroup) -> Self {
        GroupDoc { degree: group.degree(), generators: group.generators().to_vec() }
    }

    pub fn build(&self) -> Result<FiniteGroup> {
        FiniteGroup::enumerate(self.generators.clone(), self.degree)
    }
}

/// `{"rank": r, "generator_matrices": [[[...]]]}`, one matrix per group
/// generator, acting on column vectors.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct LatticeDoc {
    pub rank: usize,
    pub generator_matrices: Vec<Vec<Vec<Wide>>>,
}

impl LatticeDoc {
    pub fn of(l: &GLattice) -> Self {
        LatticeDoc { rank: l.rank(), generator_matrices: l.generator_matrices().iter().map(rows_of).collect() }
    }

    pub fn build(&self, group: Arc<FiniteGroup>) -> Result<GLattice> {
        let mats = self
            .generator_matrices
            .iter()
            .map(|m| {
                if m.len() != self.rank {
                    return Err(Error::input(format!("generator matrix has {} rows, expected {}", m.len(), self.rank)));
                }
                matrix_from_rows(m, self.rank)
            })
            .collect::<Result<Vec<_>>>()?;
        GLattice::new(group, self.rank, mats)
    }
}

/// `{"rows": m, "cols": n, "entries": [[...]]}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MatrixDoc {
    pub rows: usize,
    pub cols: usize,
    pub entries: Vec<Vec<Wide>>,
}

impl MatrixDoc {
    pub fn of(m: &IntMatrix) -> Self {
        MatrixDoc { rows: m.rows(), cols: m.cols(), entries: rows_of(m) }
    }

    pub fn build(&self) -> Result<IntMatrix> {
        if self.entries.len() != self.rows {
            return Err(Error::input(format!("matrix has {} rows, expected {}", self.entries.len(), self.rows)));
        }
        matrix_from_rows(&self.entries, self.cols)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SummandDoc {
    pub subgroup: usize,
    pub subgroup_order: usize,
    pub copies: usize,
    pub offset: usize,
}

/// A short exact sequence `0 -> kernel -> cover -> base -> 0` with the
/// permutation structure of the cover.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ResolutionDoc {
    pub base: LatticeDoc,
    pub cover: LatticeDoc,
    pub kernel: LatticeDoc,
    pub surjection: MatrixDoc,
    pub inclusion: MatrixDoc,
    pub summands: Vec<SummandDoc>,
}

impl ResolutionDoc {
    pub fn of(res: &Resolution) -> Self {
        ResolutionDoc {
            base: LatticeDoc::of(&res.base),
            cover: LatticeDoc::of(&res.cover),
            kernel: LatticeDoc::of(&res.kernel),
            surjection: MatrixDoc::of(res.surjection.matrix()),
            inclusion: MatrixDoc::of(res.inclusion.matrix()),
            summands: res
                .summands
                .iter()
                .map(|s| SummandDoc {
                    subgroup: s.subgroup.id,
                    subgroup_order: s.subgroup.order(),
                    copies: s.copies,
                    offset: s.offset,
                })
                .collect(),
        }
    }

    /// Rebuilds and validates the resolution: equivariant maps, exactness
    /// and the declared permutation structure.
    pub fn build(&self, group: Arc<FiniteGroup>) -> Result<Resolution> {
        let base = self.base.build(group.clone())?;
        let cover = self.cover.build(group.clone())?;
        let kernel = self.kernel.build(group.clone())?;
        let surjection = LatticeMap::new(cover.clone(), base.clone(), self.surjection.build()?)?;
        let inclusion = LatticeMap::new(kernel.clone(), cover.clone(), self.inclusion.build()?)?;
        let mut summands = Vec::with_capacity(self.summands.len());
        for s in &self.summands {
            let h: Subgroup = group.subgroup(s.subgroup)?.clone();
            let fixed = base.fixed_sublattice(&h)?;
            if fixed.cols() != s.copies || h.order() != s.subgroup_order {
                return Err(Error::input(format!("summand for subgroup {} does not match the base", s.subgroup)));
            }
            let cosets = left_cosets(&group, &h);
            summands.push(PermutationSummand {
                subgroup: h,
                copies: s.copies,
                offset: s.offset,
                coset_reps: cosets.reps,
                coset_of: cosets.of_element,
                fixed_basis: fixed,
            });
        }
        let declared = crate::resolve::permutation_action(&group, &summands, cover.rank());
        if declared.as_slice() != cover.generator_matrices() {
            return Err(Error::input("cover action differs from its declared permutation summands"));
        }
        let res = Resolution { base, cover, kernel, surjection, inclusion, summands };
        if !res.check_exact()? {
            return Err(Error::input("resolution document is not exact"));
        }
        Ok(res)
    }
}
