//! The `tori` command line: job specifications, command execution and the
//! result cache.
//!
//! Every invocation is turned into a [`JobSpec`] that embeds the input
//! documents, so a job is determined by its serialized form. Outputs are
//! JSON with sorted keys.

pub mod cache;

use std::fs;
use std::path::{Path, PathBuf};
use std::sync::Arc;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::cohomology::{self, tate_cohomology, SUPPORTED_DEGREES};
use crate::doc::{GroupDoc, LatticeDoc, MatrixDoc, ResolutionDoc};
use crate::error::{Error, Result};
use crate::group::{catalog, FiniteGroup};
use crate::lattice::{GLattice, LatticeMap};
use crate::motivic::{self, FieldModel, HomologyValue};
use crate::resolve::{self, KernelLevel, Lift};
use cache::Cache;

pub const CACHE_ENV: &str = "TORI_CACHE_DIR";

#[derive(Debug, Parser)]
#[command(name = "tori", version, about = "Galois lattices of algebraic tori")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    /// Directory for cached results.
    #[arg(long, global = true, env = CACHE_ENV)]
    pub cache_dir: Option<PathBuf>,
    /// Ignore the cache even when a directory is configured.
    #[arg(long, global = true)]
    pub no_cache: bool,
}

#[derive(Debug, Args)]
pub struct Input {
    /// Group document path, or `catalog:<name>`.
    #[arg(long)]
    pub group: String,
    /// `norm1`, `regular`, `trivial` or `file:<path>`.
    #[arg(long, default_value = "norm1")]
    pub lattice: String,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Flasque, coflasque and invertible status with cohomology certificates.
    Classify(Input),
    /// Tate cohomology of the lattice over one or all subgroups.
    Cohomology {
        #[command(flatten)]
        input: Input,
        #[arg(long, allow_hyphen_values = true)]
        degree: i32,
        /// Subgroup id or `all`.
        #[arg(long, default_value = "all")]
        subgroup: String,
    },
    /// Iterated canonical coflasque resolutions.
    Resolve {
        #[command(flatten)]
        input: Input,
        #[arg(long, default_value_t = 0)]
        depth: usize,
    },
    /// The lattice complex with differentials and exactness checks.
    Complex {
        #[command(flatten)]
        input: Input,
        #[arg(long, default_value_t = 1)]
        depth: usize,
    },
    /// Homology of the complex in a field model.
    Homology {
        #[command(flatten)]
        input: Input,
        #[arg(long, value_enum)]
        field: FieldArg,
        #[arg(long, default_value_t = 1)]
        depth: usize,
    },
    /// Equivariant homomorphisms and `Ext^1` from the lattice to a target.
    Hom {
        #[command(flatten)]
        input: Input,
        /// Codomain lattice, in the same forms as `--lattice`.
        #[arg(long)]
        target: String,
    },
    /// Lifts a map to the canonical covers.
    Lift {
        #[command(flatten)]
        input: Input,
        /// Codomain lattice, in the same forms as `--lattice`.
        #[arg(long)]
        target: String,
        /// Matrix document of the map, target rows by source columns.
        #[arg(long)]
        map: PathBuf,
    },
    /// Looks for an equivariant section of a surjection.
    Split {
        #[command(flatten)]
        input: Input,
        /// Codomain lattice, in the same forms as `--lattice`.
        #[arg(long)]
        target: String,
        /// Matrix document of the surjection, target rows by source columns.
        #[arg(long)]
        map: PathBuf,
        /// Subgroup ids of permutation summands to add, in order.
        #[arg(long, value_delimiter = ',')]
        stabilize: Option<Vec<usize>>,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize, ValueEnum)]
#[serde(rename_all = "snake_case")]
#[value(rename_all = "snake_case")]
pub enum FieldArg {
    QuasiFinite,
    SylowCyclic,
    Local,
    Abstract,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CommandKind {
    Classify,
    Cohomology,
    Resolve,
    Complex,
    Homology,
    Hom,
    Lift,
    Split,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum SubgroupSelection {
    Id(usize),
    All(AllMarker),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum AllMarker {
    All,
}

/// A fully self-contained job.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct JobSpec {
    pub command: CommandKind,
    pub group: GroupDoc,
    pub lattice: LatticeDoc,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub target: Option<LatticeDoc>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub map: Option<MatrixDoc>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub degree: Option<i32>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub depth: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub subgroup: Option<SubgroupSelection>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub field: Option<FieldArg>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub candidates: Option<Vec<usize>>,
}

impl JobSpec {
    fn new(command: CommandKind, group: GroupDoc, lattice: LatticeDoc) -> Self {
        JobSpec {
            command,
            group,
            lattice,
            target: None,
            map: None,
            degree: None,
            depth: None,
            subgroup: None,
            field: None,
            candidates: None,
        }
    }

    /// Reads every referenced document and fixes all parameters.
    pub fn from_command(command: &Command) -> Result<Self> {
        let input = match command {
            Command::Classify(i) => i,
            Command::Cohomology { input, .. }
            | Command::Resolve { input, .. }
            | Command::Complex { input, .. }
            | Command::Homology { input, .. }
            | Command::Hom { input, .. }
            | Command::Lift { input, .. }
            | Command::Split { input, .. } => input,
        };
        let group = load_group(&input.group)?;
        let g = Arc::new(group.build()?);
        let lattice = load_lattice(&input.lattice, &g)?;
        let target = |spec: &str| load_lattice(spec, &g).map(Some);
        Ok(match command {
            Command::Classify(_) => JobSpec::new(CommandKind::Classify, group, lattice),
            Command::Cohomology { degree, subgroup, .. } => {
                let subgroup = match subgroup.as_str() {
                    "all" => SubgroupSelection::All(AllMarker::All),
                    s => SubgroupSelection::Id(
                        s.parse().map_err(|_| Error::input(format!("subgroup must be an id or `all`, got {s:?}")))?,
                    ),
                };
                JobSpec {
                    degree: Some(*degree),
                    subgroup: Some(subgroup),
                    ..JobSpec::new(CommandKind::Cohomology, group, lattice)
                }
            }
            Command::Resolve { depth, .. } => {
                JobSpec { depth: Some(*depth), ..JobSpec::new(CommandKind::Resolve, group, lattice) }
            }
            Command::Complex { depth, .. } => {
                JobSpec { depth: Some(*depth), ..JobSpec::new(CommandKind::Complex, group, lattice) }
            }
            Command::Homology { field, depth, .. } => JobSpec {
                depth: Some(*depth),
                field: Some(*field),
                ..JobSpec::new(CommandKind::Homology, group, lattice)
            },
            Command::Hom { target: t, .. } => {
                JobSpec { target: target(t)?, ..JobSpec::new(CommandKind::Hom, group, lattice) }
            }
            Command::Lift { target: t, map, .. } => JobSpec {
                target: target(t)?,
                map: Some(read_json(map)?),
                ..JobSpec::new(CommandKind::Lift, group, lattice)
            },
            Command::Split { target: t, map, stabilize, .. } => JobSpec {
                target: target(t)?,
                map: Some(read_json(map)?),
                candidates: stabilize.clone(),
                ..JobSpec::new(CommandKind::Split, group, lattice)
            },
        })
    }
}

fn read_json<T: serde::de::DeserializeOwned>(path: &Path) -> Result<T> {
    let text = fs::read_to_string(path).map_err(|e| Error::input(format!("cannot read {}: {e}", path.display())))?;
    serde_json::from_str(&text).map_err(|e| Error::input(format!("{}: {e}", path.display())))
}

fn load_group(spec: &str) -> Result<GroupDoc> {
    if let Some(name) = spec.strip_prefix("catalog:") {
        return catalog::small_groups(16)
            .into_iter()
            .find(|g| g.name == name)
            .map(|g| GroupDoc::of(&g.group))
            .ok_or_else(|| Error::input(format!("no catalog group named {name:?}")));
    }
    read_json(Path::new(spec))
}

fn load_lattice(spec: &str, g: &Arc<FiniteGroup>) -> Result<LatticeDoc> {
    let l = match spec {
        "norm1" => GLattice::norm_one(g.clone()),
        "regular" => GLattice::regular(g.clone()),
        "trivial" => GLattice::trivial(g.clone(), 1),
        other => match other.strip_prefix("file:") {
            Some(path) => return read_json(Path::new(path)),
            None => return Err(Error::input(format!("unknown lattice {other:?}"))),
        },
    };
    Ok(LatticeDoc::of(&l))
}

/// Executes a job and returns its output document.
pub fn run(job: &JobSpec) -> Result<Value> {
    let g = Arc::new(job.group.build()?);
    let l = job.lattice.build(g.clone())?;
    let target = || -> Result<GLattice> {
        job.target.as_ref().ok_or_else(|| Error::input("a target lattice is required"))?.build(g.clone())
    };
    let map = |source: &GLattice, target: &GLattice| -> Result<LatticeMap> {
        let m = job.map.as_ref().ok_or_else(|| Error::input("a map is required"))?.build()?;
        if m.rows() != target.rank() || m.cols() != source.rank() {
            return Err(Error::input(format!(
                "map is {}x{}, expected {}x{}",
                m.rows(),
                m.cols(),
                target.rank(),
                source.rank()
            )));
        }
        LatticeMap::new(source.clone(), target.clone(), m)
    };
    let depth = job.depth.unwrap_or(0);
    let value = match job.command {
        CommandKind::Classify => {
            let c = resolve::classify(&l)?;
            json!({ "rank": l.rank(), "group_order": g.order(), "classification": c })
        }
        CommandKind::Cohomology => {
            let degree = job.degree.ok_or_else(|| Error::input("a degree is required"))?;
            if !SUPPORTED_DEGREES.contains(&degree) {
                return Err(Error::input(format!("degree {degree} is outside {SUPPORTED_DEGREES:?}")));
            }
            let subgroups: Vec<_> = match job.subgroup.unwrap_or(SubgroupSelection::All(AllMarker::All)) {
                SubgroupSelection::All(_) => g.subgroups()?.iter().collect(),
                SubgroupSelection::Id(id) => vec![g.subgroup(id)?],
            };
            let rows = subgroups
                .into_iter()
                .map(|h| {
                    Ok(json!({
                        "degree": degree,
                        "subgroup": h.id,
                        "subgroup_order": h.order(),
                        "group_invariants": tate_cohomology(&l, h, degree)?,
                    }))
                })
                .collect::<Result<Vec<_>>>()?;
            json!({ "cohomology": rows })
        }
        CommandKind::Resolve => {
            let cx = resolve::iterate_resolution(&l, depth)?;
            let levels: Vec<Value> = cx
                .levels
                .iter()
                .zip(&cx.kernels)
                .map(|(res, k)| json!({ "resolution": ResolutionDoc::of(res), "kernel": kernel_summary(k) }))
                .collect();
            json!({ "depth": depth, "levels": levels })
        }
        CommandKind::Complex => {
            let cx = resolve::iterate_resolution(&l, depth)?;
            let differentials = (0..=depth)
                .map(|i| cx.differential(i).map(|d| MatrixDoc::of(d.matrix())))
                .collect::<Result<Vec<_>>>()?;
            json!({
                "depth": depth,
                "ranks": cx.ranks(),
                "kernel_ranks": cx.kernels.iter().map(|k| k.lattice.rank()).collect::<Vec<_>>(),
                "differentials": differentials,
                "exact": cx.check_exact()?,
                "kernels": cx.kernels.iter().map(kernel_summary).collect::<Vec<_>>(),
            })
        }
        CommandKind::Homology => {
            let field = job.field.ok_or_else(|| Error::input("a field model is required"))?;
            let model = match field {
                FieldArg::QuasiFinite => FieldModel::quasi_finite(),
                FieldArg::SylowCyclic => FieldModel::sylow_cyclic_split(),
                FieldArg::Local => FieldModel::local(g.clone()),
                FieldArg::Abstract => FieldModel::abstract_field(),
            };
            let cx = motivic::build_complex(&l, depth)?;
            let groups = (0..=depth as i64)
                .map(|n| {
                    Ok(match motivic::homology(&cx, &model, n)? {
                        HomologyValue::Group(a) => {
                            json!({ "n": n, "free_rank": a.free_rank, "torsion": serde_json::to_value(&a)?["torsion"] })
                        }
                        HomologyValue::Symbolic { description, kernel_rank, classification, .. } => json!({
                            "n": n,
                            "symbolic": description,
                            "kernel_rank": kernel_rank,
                            "classification": classification,
                        }),
                    })
                })
                .collect::<Result<Vec<_>>>()?;
            json!({
                "field": field,
                "depth": depth,
                "H": groups,
                "certificate": motivic::vanishing_certificate(&l)?.to_string(),
            })
        }
        CommandKind::Hom => {
            let b = target()?;
            let basis = cohomology::equivariant_homs(&l, &b)?;
            json!({
                "hom_rank": basis.len(),
                "basis": basis.iter().map(MatrixDoc::of).collect::<Vec<_>>(),
                "ext1": cohomology::ext1(&l, &b)?,
            })
        }
        CommandKind::Lift => {
            let b = target()?;
            let f = map(&l, &b)?;
            let target_res = resolve::coflasque_cover(&b)?;
            let source_res = resolve::coflasque_cover(&l)?;
            match resolve::lift_morphism(&f, &target_res, &source_res)? {
                Lift::Found(m) => json!({ "status": "found", "lift": MatrixDoc::of(m.matrix()) }),
                Lift::Obstructed(e) => json!({ "status": "obstructed", "obstruction": e }),
            }
        }
        CommandKind::Split => {
            let b = target()?;
            let f = map(&l, &b)?;
            match &job.candidates {
                None => {
                    let s = resolve::attempt_split(&f)?;
                    json!({ "section": s.map(|s| MatrixDoc::of(s.matrix())) })
                }
                Some(c) => {
                    let s = resolve::stabilized_split(&f, c)?;
                    json!({
                        "added": s.added,
                        "surjection": MatrixDoc::of(s.surjection.matrix()),
                        "section": MatrixDoc::of(s.section.matrix()),
                    })
                }
            }
        }
    };
    Ok(value)
}

fn kernel_summary(k: &KernelLevel) -> Value {
    json!({
        "index": k.index,
        "rank": k.lattice.rank(),
        "coflasque": k.is_coflasque(),
        "fixed_point_surjectivity": k
            .fixed_point_surjectivity
            .iter()
            .map(|(id, ok)| json!({ "subgroup": id, "surjective": ok }))
            .collect::<Vec<_>>(),
        "classification": k.classification,
    })
}

pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::Input(_) => 2,
        Error::Capacity(_) => 3,
        Error::Undecided(_) => 4,
    }
}

/// Runs a job through the cache, if one is given.
pub fn run_cached(job: &JobSpec, cache: Option<&Cache>) -> Result<Value> {
    if let Some(c) = cache {
        if let Some(v) = c.get(job) {
            return Ok(v);
        }
    }
    let v = run(job)?;
    if let Some(c) = cache {
        if let Err(e) = c.put(job, &v) {
            eprintln!("warning: cache write failed: {e}");
        }
    }
    Ok(v)
}

/// Canonical text of an output document.
pub fn render(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("JSON values serialize");
    s.push('\n');
    s
}

/// Parses arguments, runs the job, prints the result and returns the exit
/// code.
pub fn main_with(cli: Cli) -> i32 {
    let job = match JobSpec::from_command(&cli.command) {
        Ok(j) => j,
        Err(e) => {
            eprintln!("error: {e}");
            return exit_code(&e);
        }
    };
    let cache = match (&cli.cache_dir, cli.no_cache) {
        (Some(dir), false) => match Cache::open(dir) {
            Ok(c) => Some(c),
            Err(e) => {
                eprintln!("warning: cache disabled: {e}");
                None
            }
        },
        _ => None,
    };
    match run_cached(&job, cache.as_ref()) {
        Ok(v) => {
            print!("{}", render(&v));
            0
        }
        Err(e) => {
            eprintln!("error: {e}");
            exit_code(&e)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn job(command: CommandKind, group: &str, lattice: &str) -> JobSpec {
        let group = load_group(group).unwrap();
        let g = Arc::new(group.build().unwrap());
        let lattice = load_lattice(lattice, &g).unwrap();
        JobSpec::new(command, group, lattice)
    }

    #[test]
    fn classify_regular_c2() {
        let v = run(&job(CommandKind::Classify, "catalog:C2", "regular")).unwrap();
        assert_eq!(v["classification"]["invertible"], json!(true));
        assert_eq!(v["classification"]["is_permutation_witnessed"], json!(true));
    }

    #[test]
    fn cohomology_of_sign_lattice() {
        let mut j = job(CommandKind::Cohomology, "catalog:C2", "trivial");
        j.lattice = serde_json::from_str(r#"{"rank": 1, "generator_matrices": [[[-1]]]}"#).unwrap();
        j.degree = Some(-1);
        j.subgroup = Some(SubgroupSelection::All(AllMarker::All));
        let v = run(&j).unwrap();
        let rows = v["cohomology"].as_array().unwrap();
        let whole = rows.iter().find(|r| r["subgroup_order"] == json!(2)).unwrap();
        assert_eq!(whole["group_invariants"]["torsion"], json!([2]));
    }

    #[test]
    fn job_spec_round_trip() {
        let mut j = job(CommandKind::Cohomology, "catalog:S3", "norm1");
        j.degree = Some(2);
        j.subgroup = Some(SubgroupSelection::Id(3));
        let text = serde_json::to_string(&j).unwrap();
        assert_eq!(serde_json::from_str::<JobSpec>(&text).unwrap(), j);
        j.subgroup = Some(SubgroupSelection::All(AllMarker::All));
        let text = serde_json::to_string(&j).unwrap();
        assert!(text.contains("\"subgroup\":\"all\""));
        assert_eq!(serde_json::from_str::<JobSpec>(&text).unwrap(), j);
    }

    #[test]
    fn error_codes() {
        assert_eq!(exit_code(&Error::input("x")), 2);
        assert_eq!(exit_code(&Error::capacity("x")), 3);
        assert_eq!(exit_code(&Error::Undecided("x".into())), 4);
        let mut j = job(CommandKind::Cohomology, "catalog:C2", "trivial");
        j.degree = Some(5);
        assert_eq!(run(&j).map_err(|e| exit_code(&e)), Err(2));
        let mut j = job(CommandKind::Resolve, "catalog:C2", "trivial");
        j.depth = Some(9);
        assert_eq!(run(&j).map_err(|e| exit_code(&e)), Err(3));
    }
}
