//! On-disk result cache: one JSON report per request, keyed by the SHA-256
//! of the canonical request, plus a job record with timestamps.

use crate::error::CliError;
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};
use std::fs;
use std::path::{Path, PathBuf};
use std::time::{SystemTime, UNIX_EPOCH};

pub const ENV_VAR: &str = "BRAIDSLICE_CACHE";
pub const DEFAULT_DIR: &str = ".braidslice-cache";

pub fn content_hash(canonical: &str) -> String {
    hex::encode(Sha256::digest(canonical.as_bytes()))
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct JobRecord {
    pub command: String,
    pub input: String,
    pub parameters: serde_json::Value,
    pub content_hash: String,
    pub result_file: String,
    pub created_unix: u64,
    pub last_used_unix: u64,
    pub hits: u64,
}

pub struct Cache {
    dir: Option<PathBuf>,
}

fn now() -> u64 {
    SystemTime::now()
        .duration_since(UNIX_EPOCH)
        .map_or(0, |d| d.as_secs())
}

/// Writes through a temporary file in the same directory and renames it.
fn atomic_write(path: &Path, bytes: &[u8]) -> Result<(), CliError> {
    let dir = path.parent().unwrap_or(Path::new("."));
    let name = path.file_name().and_then(|n| n.to_str()).unwrap_or("entry");
    let tmp = dir.join(format!(".{name}.{}.tmp", std::process::id()));
    fs::write(&tmp, bytes)?;
    fs::rename(&tmp, path)?;
    Ok(())
}

impl Cache {
    pub fn disabled() -> Self {
        Cache { dir: None }
    }

    /// `dir` if given, else `$BRAIDSLICE_CACHE`, else the default directory.
    pub fn open(dir: Option<PathBuf>) -> Self {
        let dir = dir
            .or_else(|| {
                std::env::var_os(ENV_VAR)
                    .filter(|v| !v.is_empty())
                    .map(PathBuf::from)
            })
            .unwrap_or_else(|| PathBuf::from(DEFAULT_DIR));
        Cache { dir: Some(dir) }
    }

    fn paths(&self, key: &str) -> Option<(PathBuf, PathBuf)> {
        self.dir.as_ref().map(|d| {
            (
                d.join(format!("{key}.json")),
                d.join(format!("{key}.job.json")),
            )
        })
    }

    pub fn get(&self, key: &str) -> Option<String> {
        let (result, job) = self.paths(key)?;
        let text = fs::read_to_string(result).ok()?;
        if let Some(mut rec) = fs::read(&job)
            .ok()
            .and_then(|b| serde_json::from_slice::<JobRecord>(&b).ok())
        {
            rec.last_used_unix = now();
            rec.hits += 1;
            if let Ok(bytes) = serde_json::to_vec_pretty(&rec) {
                let _ = atomic_write(&job, &bytes);
            }
        }
        Some(text)
    }

    pub fn put(
        &self,
        key: &str,
        command: &str,
        input: &str,
        parameters: serde_json::Value,
        report: &str,
    ) -> Result<(), CliError> {
        let Some((result, job)) = self.paths(key) else {
            return Ok(());
        };
        fs::create_dir_all(result.parent().expect("cache files live in a directory"))?;
        atomic_write(&result, report.as_bytes())?;
        let t = now();
        let rec = JobRecord {
            command: command.into(),
            input: input.into(),
            parameters,
            content_hash: key.into(),
            result_file: format!("{key}.json"),
            created_unix: t,
            last_used_unix: t,
            hits: 0,
        };
        atomic_write(&job, &serde_json::to_vec_pretty(&rec)?)
    }
}
