//! Report emission: atomic file writes, run manifests, and output formats.

use std::collections::BTreeMap;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::time::{SystemTime, UNIX_EPOCH};

use serde::{Deserialize, Serialize};

use crate::CliError;

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Json,
    Csv,
}

/// Record of one command invocation; replaying it with the stored seed
/// reproduces the numeric outputs exactly.
#[derive(Debug, Serialize, Deserialize)]
pub struct RunManifest {
    pub command: String,
    pub parameters: BTreeMap<String, serde_json::Value>,
    pub seed: u64,
    pub outputs: Vec<PathBuf>,
    pub timestamp: u64,
}

impl RunManifest {
    pub fn new(command: &str, seed: u64) -> Self {
        let timestamp =
            SystemTime::now().duration_since(UNIX_EPOCH).map(|d| d.as_secs()).unwrap_or(0);
        RunManifest {
            command: command.to_string(),
            parameters: BTreeMap::new(),
            seed,
            outputs: Vec::new(),
            timestamp,
        }
    }

    pub fn param(mut self, key: &str, value: impl Into<serde_json::Value>) -> Self {
        self.parameters.insert(key.to_string(), value.into());
        self
    }

    pub fn param_u64(&self, key: &str) -> Result<u64, CliError> {
        self.parameters
            .get(key)
            .and_then(|v| v.as_u64())
            .ok_or_else(|| CliError::usage(format!("manifest lacks integer parameter `{key}`")))
    }

    pub fn param_str(&self, key: &str) -> Result<&str, CliError> {
        self.parameters
            .get(key)
            .and_then(|v| v.as_str())
            .ok_or_else(|| CliError::usage(format!("manifest lacks string parameter `{key}`")))
    }
}

/// Write via a temporary file and rename, so readers never see a torn file.
pub fn atomic_write(path: &Path, contents: &str) -> Result<(), CliError> {
    let tmp = path.with_extension("tmp");
    let mut file = fs::File::create(&tmp)
        .map_err(|e| CliError::usage(format!("cannot create {}: {e}", tmp.display())))?;
    file.write_all(contents.as_bytes())
        .and_then(|()| file.sync_all())
        .map_err(|e| CliError::usage(format!("cannot write {}: {e}", tmp.display())))?;
    fs::rename(&tmp, path)
        .map_err(|e| CliError::usage(format!("cannot move report into {}: {e}", path.display())))
}

/// Emit the report to the file (atomically) or to stdout, and drop a
/// manifest next to the file so the run can be replayed.
pub fn emit(
    out: Option<&Path>,
    contents: &str,
    mut manifest: RunManifest,
) -> Result<(), CliError> {
    match out {
        Some(path) => {
            atomic_write(path, contents)?;
            manifest.outputs.push(path.to_path_buf());
            let manifest_path = manifest_path_for(path);
            let body = serde_json::to_string_pretty(&manifest)
                .map_err(|e| CliError::usage(format!("cannot encode manifest: {e}")))?;
            atomic_write(&manifest_path, &body)?;
        }
        None => {
            print!("{contents}");
            if !contents.ends_with('\n') {
                println!();
            }
        }
    }
    Ok(())
}

pub fn manifest_path_for(out: &Path) -> PathBuf {
    out.with_extension("manifest.json")
}
