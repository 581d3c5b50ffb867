//! Content-addressed store of job outputs.
//!
//! An entry lives at `<dir>/<sha256 of the job>.json` and holds the job,
//! the output and a digest of the output. Entries are written to a temporary
//! file and renamed into place. On read, entries that fail to parse, belong
//! to another job, have a wrong digest or violate cheap output invariants
//! are treated as missing.

use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};
use std::sync::atomic::{AtomicU64, Ordering};

use serde_json::{json, Value};
use sha2::{Digest, Sha256};

use super::{CommandKind, JobSpec};

const FORMAT: &str = "galois-tori-cache/1";

static COUNTER: AtomicU64 = AtomicU64::new(0);

#[derive(Debug, Clone)]
pub struct Cache {
    dir: PathBuf,
}

fn sha256_hex(text: &str) -> String {
    hex::encode(Sha256::digest(text.as_bytes()))
}

fn canonical(v: &Value) -> String {
    serde_json::to_string(v).expect("JSON values serialize")
}

impl Cache {
    pub fn open(dir: &Path) -> io::Result<Self> {
        fs::create_dir_all(dir)?;
        Ok(Cache { dir: dir.to_path_buf() })
    }

    pub fn dir(&self) -> &Path {
        &self.dir
    }

    pub fn key(job: &JobSpec) -> String {
        let v = serde_json::to_value(job).expect("job specs serialize");
        sha256_hex(&format!("{FORMAT}\n{}", canonical(&v)))
    }

    pub fn path(&self, job: &JobSpec) -> PathBuf {
        self.dir.join(format!("{}.json", Self::key(job)))
    }

    pub fn get(&self, job: &JobSpec) -> Option<Value> {
        let text = fs::read_to_string(self.path(job)).ok()?;
        let entry: Value = serde_json::from_str(&text).ok()?;
        let job_value = serde_json::to_value(job).ok()?;
        if entry["format"] != json!(FORMAT) || entry["key"] != json!(Self::key(job)) || entry["job"] != job_value {
            return None;
        }
        let output = entry.get("output")?;
        if entry["digest"] != json!(sha256_hex(&canonical(output))) || !plausible(job.command, output) {
            return None;
        }
        Some(output.clone())
    }

    pub fn put(&self, job: &JobSpec, output: &Value) -> io::Result<()> {
        let entry = json!({
            "format": FORMAT,
            "key": Self::key(job),
            "job": serde_json::to_value(job)?,
            "digest": sha256_hex(&canonical(output)),
            "output": output,
        });
        let tmp = self.dir.join(format!(
            ".{}.{}.{}.tmp",
            Self::key(job),
            std::process::id(),
            COUNTER.fetch_add(1, Ordering::Relaxed)
        ));
        let mut file = fs::File::create(&tmp)?;
        file.write_all(canonical(&entry).as_bytes())?;
        file.sync_all()?;
        drop(file);
        fs::rename(&tmp, self.path(job)).inspect_err(|_| {
            let _ = fs::remove_file(&tmp);
        })
    }
}

/// Rank bookkeeping and exactness flags of an output.
fn plausible(command: CommandKind, output: &Value) -> bool {
    match command {
        CommandKind::Resolve => output["levels"].as_array().is_some_and(|levels| {
            levels.iter().all(|level| {
                let r = &level["resolution"];
                let rank = |k: &str| r[k]["rank"].as_u64();
                match (rank("base"), rank("cover"), rank("kernel")) {
                    (Some(b), Some(c), Some(k)) => {
                        b + k == c && r["surjection"]["cols"].as_u64() == Some(c) && level["kernel"]["rank"].as_u64() == Some(k)
                    }
                    _ => false,
                }
            })
        }),
        CommandKind::Complex => {
            output["exact"] == json!(true)
                && match (output["ranks"].as_array(), output["differentials"].as_array()) {
                    (Some(r), Some(d)) => r.len() == d.len(),
                    _ => false,
                }
        }
        CommandKind::Classify => {
            let c = &output["classification"];
            c["invertible"] != json!(true) || (c["flasque"] == json!(true) && c["coflasque"] == json!(true))
        }
        _ => output.is_object(),
    }
}
