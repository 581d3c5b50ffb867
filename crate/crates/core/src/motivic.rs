//! Lattice model of the birational motivic complex of a torus and its
//! homology over field models.
//!
//! The complex `L_n -> … -> L_0 -> L` comes from [`iterate_resolution`]. Its
//! homology in degree `n` is `S_n(K)/R` for the torus `S_n` with cocharacter
//! lattice `Q_n` (`S_0 = T`), and vanishes for `n < 0`.
//!
//! Over a nonarchimedean local field with splitting group `G`, `T(K)/R` is
//! the cokernel of `T_0(K) -> T(K)`, i.e. `H^1(K, S_1)` since `T_0` is
//! quasi-trivial, and local duality evaluates it as `Ĥ^-1(G, Q_1)`. The same
//! rule gives `H_n = Ĥ^-1(G, Q_{n+1})`. This evaluation rule lives in
//! [`local_homology`] only.

use std::fmt;
use std::sync::Arc;

use serde::Serialize;

use crate::abelian::AbelianGroupInvariants;
use crate::cohomology::{tate_cohomology, whole_of};
use crate::error::{Error, Result};
use crate::group::FiniteGroup;
use crate::lattice::GLattice;
use crate::resolve::{classify_with, iterate_resolution_with, Classification, Limits, ToricComplex};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum FieldKind {
    QuasiFinite,
    SylowCyclicSplit,
    LocalNonarchimedean,
    Abstract,
}

impl fmt::Display for FieldKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            FieldKind::QuasiFinite => "quasi_finite",
            FieldKind::SylowCyclicSplit => "sylow_cyclic",
            FieldKind::LocalNonarchimedean => "local",
            FieldKind::Abstract => "abstract",
        })
    }
}

#[derive(Debug, Clone)]
pub struct FieldModel {
    kind: FieldKind,
    splitting_group: Option<Arc<FiniteGroup>>,
}

impl FieldModel {
    pub fn quasi_finite() -> Self {
        FieldModel { kind: FieldKind::QuasiFinite, splitting_group: None }
    }

    pub fn sylow_cyclic_split() -> Self {
        FieldModel { kind: FieldKind::SylowCyclicSplit, splitting_group: None }
    }

    pub fn local(splitting_group: Arc<FiniteGroup>) -> Self {
        FieldModel { kind: FieldKind::LocalNonarchimedean, splitting_group: Some(splitting_group) }
    }

    pub fn abstract_field() -> Self {
        FieldModel { kind: FieldKind::Abstract, splitting_group: None }
    }

    pub fn kind(&self) -> FieldKind {
        self.kind
    }

    pub fn splitting_group(&self) -> Option<&Arc<FiniteGroup>> {
        self.splitting_group.as_ref()
    }
}

/// The complex of `l` to the given depth, with exactness and coflasque
/// kernels verified.
pub fn build_complex(l: &GLattice, depth: usize) -> Result<ToricComplex> {
    build_complex_with(l, depth, &Limits::default())
}

pub fn build_complex_with(l: &GLattice, depth: usize, limits: &Limits) -> Result<ToricComplex> {
    let cx = iterate_resolution_with(l, depth, limits, None)?;
    verify_complex(&cx)?;
    Ok(cx)
}

pub fn verify_complex(cx: &ToricComplex) -> Result<()> {
    if !cx.check_exact()? {
        return Err(Error::input("complex fails an exactness check"));
    }
    if let Some(k) = cx.kernels.iter().find(|k| !k.is_coflasque()) {
        return Err(Error::input(format!("kernel Q_{} is not coflasque", k.index)));
    }
    Ok(())
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(untagged)]
pub enum HomologyValue {
    Group(AbelianGroupInvariants),
    /// `S_n(K)/R` for the torus with cocharacter lattice `Q_n`, unevaluated.
    Symbolic { n: i64, description: String, kernel_rank: usize, classification: Option<Classification> },
}

impl HomologyValue {
    pub fn group(&self) -> Option<&AbelianGroupInvariants> {
        match self {
            HomologyValue::Group(g) => Some(g),
            HomologyValue::Symbolic { .. } => None,
        }
    }
}

/// `H_n` of the complex evaluated in a field model.
pub fn homology(cx: &ToricComplex, model: &FieldModel, n: i64) -> Result<HomologyValue> {
    if n < 0 {
        return Ok(HomologyValue::Group(AbelianGroupInvariants::trivial()));
    }
    let n = n as usize;
    if n > cx.depth {
        return Err(Error::input(format!("degree {n} exceeds the computed depth {}", cx.depth)));
    }
    match model.kind {
        FieldKind::QuasiFinite => Ok(HomologyValue::Group(AbelianGroupInvariants::trivial())),
        FieldKind::SylowCyclicSplit => {
            if !cx.base.group().is_sylow_cyclic() {
                return Err(Error::input("splitting group has a non-cyclic Sylow subgroup"));
            }
            Ok(HomologyValue::Group(AbelianGroupInvariants::trivial()))
        }
        FieldKind::LocalNonarchimedean => {
            let g = model.splitting_group.as_ref().ok_or_else(|| Error::input("local model needs a splitting group"))?;
            if **g != **cx.base.group() {
                return Err(Error::input("local model splitting group differs from the lattice's group"));
            }
            Ok(HomologyValue::Group(local_homology(cx, n)?))
        }
        FieldKind::Abstract => {
            let q = cx.kernel(n);
            let classification = if n == 0 {
                None
            } else {
                cx.kernels[n - 1].classification.clone()
            };
            let description = if n == 0 {
                "T(K)/R with T the torus of L".to_string()
            } else {
                format!("S_{n}(K)/R with S_{n} the torus of Q_{n}")
            };
            Ok(HomologyValue::Symbolic { n: n as i64, description, kernel_rank: q.rank(), classification })
        }
    }
}

/// `Ĥ^-1(G, Q_{n+1})`.
pub fn local_homology(cx: &ToricComplex, n: usize) -> Result<AbelianGroupInvariants> {
    let q = cx.kernel(n + 1);
    let h = tate_cohomology(q, &whole_of(q.group()), -1)?;
    debug_assert!(h.is_finite());
    Ok(h)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum VanishingCertificate {
    SylowCyclic,
    InvertibleBase,
    None,
}

impl fmt::Display for VanishingCertificate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            VanishingCertificate::SylowCyclic => "SylowCyclic",
            VanishingCertificate::InvertibleBase => "InvertibleBase",
            VanishingCertificate::None => "None",
        })
    }
}

/// A reason for the homology to vanish in every field model, if one is
/// known.
pub fn vanishing_certificate(l: &GLattice) -> Result<VanishingCertificate> {
    vanishing_certificate_with(l, &Limits::default())
}

pub fn vanishing_certificate_with(l: &GLattice, limits: &Limits) -> Result<VanishingCertificate> {
    if l.group().is_sylow_cyclic() {
        return Ok(VanishingCertificate::SylowCyclic);
    }
    if classify_with(l, limits)?.invertible {
        return Ok(VanishingCertificate::InvertibleBase);
    }
    Ok(VanishingCertificate::None)
}
