//! Reproducibility manifests. Every file a command writes gets a sidecar
//! `<name>.manifest.json` recording the exact invocation, the tool version,
//! the resolved configuration, and a digest of every input file, so a
//! result can be traced back to what produced it.

use std::path::{Path, PathBuf};
use std::time::{SystemTime, UNIX_EPOCH};

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::error::Result;

/// One input file and its content digest.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct InputDigest {
    pub path: String,
    pub sha256: String,
}

/// Everything needed to rerun or audit one command invocation.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RunManifest {
    pub command_line: Vec<String>,
    pub version: String,
    pub config: serde_json::Value,
    pub inputs: Vec<InputDigest>,
    pub timestamp_epoch_s: u64,
}

/// Hex SHA-256 of a file's contents.
pub fn sha256_hex(path: &Path) -> Result<String> {
    let bytes = std::fs::read(path)?;
    let mut hasher = Sha256::new();
    hasher.update(&bytes);
    Ok(format!("{:x}", hasher.finalize()))
}

impl RunManifest {
    /// Capture the current process invocation with the given resolved
    /// configuration and input files (each must exist; each is digested).
    pub fn capture(config: serde_json::Value, inputs: &[&Path]) -> Result<RunManifest> {
        let mut digests = Vec::with_capacity(inputs.len());
        for path in inputs {
            digests.push(InputDigest {
                path: path.display().to_string(),
                sha256: sha256_hex(path)?,
            });
        }
        let timestamp_epoch_s = SystemTime::now()
            .duration_since(UNIX_EPOCH)
            .map(|d| d.as_secs())
            .unwrap_or(0);
        Ok(RunManifest {
            command_line: std::env::args().collect(),
            version: env!("CARGO_PKG_VERSION").to_string(),
            config,
            inputs: digests,
            timestamp_epoch_s,
        })
    }

    /// The sidecar path for an output file: `report.csv` gets
    /// `report.csv.manifest.json` next to it.
    pub fn sidecar_path(out: &Path) -> PathBuf {
        let mut name = out.file_name().map(|s| s.to_os_string()).unwrap_or_default();
        name.push(".manifest.json");
        out.with_file_name(name)
    }

    /// Write the manifest next to `out` and return the sidecar path.
    pub fn write_sidecar(&self, out: &Path) -> Result<PathBuf> {
        let path = Self::sidecar_path(out);
        let mut text = serde_json::to_string_pretty(self)?;
        text.push('\n');
        std::fs::write(&path, text)?;
        Ok(path)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn digest_matches_a_known_vector() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("abc.txt");
        std::fs::write(&path, "abc").unwrap();
        assert_eq!(
            sha256_hex(&path).unwrap(),
            "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad"
        );
    }

    #[test]
    fn sidecar_sits_next_to_the_output() {
        assert_eq!(
            RunManifest::sidecar_path(Path::new("out/report.csv")),
            Path::new("out/report.csv.manifest.json")
        );
        assert_eq!(
            RunManifest::sidecar_path(Path::new("db.jsonl")),
            Path::new("db.jsonl.manifest.json")
        );
    }

    #[test]
    fn capture_and_write_round_trip() {
        let dir = tempfile::tempdir().unwrap();
        let input = dir.path().join("in.g6");
        std::fs::write(&input, "DQc\n").unwrap();
        let out = dir.path().join("result.json");

        let manifest =
            RunManifest::capture(serde_json::json!({"n": 5}), &[input.as_path()]).unwrap();
        let sidecar = manifest.write_sidecar(&out).unwrap();
        assert_eq!(sidecar, dir.path().join("result.json.manifest.json"));

        let read: RunManifest =
            serde_json::from_str(&std::fs::read_to_string(&sidecar).unwrap()).unwrap();
        assert_eq!(read, manifest);
        assert_eq!(read.version, env!("CARGO_PKG_VERSION"));
        assert_eq!(read.inputs.len(), 1);
        assert_eq!(read.inputs[0].sha256.len(), 64);
        assert!(read.timestamp_epoch_s > 1_700_000_000);
    }
}
