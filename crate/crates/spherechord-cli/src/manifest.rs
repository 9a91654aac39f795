//! Every invocation emits exactly one run manifest alongside its outputs:
//! as `<out>.manifest.json` when writing to a file, as a single JSON line on
//! stderr when writing to stdout (so stdout stays pure report data).

use std::collections::BTreeMap;
use std::path::{Path, PathBuf};

use serde::Serialize;
use sha2::{Digest, Sha256};

use spherechord::{Result, Tolerances};

#[derive(Debug, Serialize)]
pub struct RunManifest {
    pub command: String,
    pub params: BTreeMap<String, serde_json::Value>,
    pub tolerances: Tolerances,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub input_digest: Option<String>,
    pub outputs: Vec<String>,
}

impl RunManifest {
    pub fn new(command: &str, tolerances: Tolerances) -> Self {
        RunManifest {
            command: command.to_string(),
            params: BTreeMap::new(),
            tolerances,
            input_digest: None,
            outputs: Vec::new(),
        }
    }

    pub fn param(mut self, key: &str, value: impl Serialize) -> Self {
        self.params.insert(
            key.to_string(),
            serde_json::to_value(value).expect("manifest param serializes"),
        );
        self
    }

    pub fn with_input(mut self, path: &Path, bytes: &[u8]) -> Self {
        self.input_digest = Some(hex::encode(Sha256::digest(bytes)));
        self.params.insert(
            "input".to_string(),
            serde_json::Value::String(path.display().to_string()),
        );
        self
    }
}

/// Write `content` to `out` (or stdout) and emit the manifest next to it.
pub fn emit(mut manifest: RunManifest, content: &str, out: Option<&PathBuf>) -> Result<()> {
    match out {
        Some(path) => {
            std::fs::write(path, content)?;
            manifest.outputs.push(path.display().to_string());
            let manifest_path = manifest_path_for(path);
            let text = serde_json::to_string_pretty(&manifest).expect("manifest serializes");
            std::fs::write(&manifest_path, text + "\n")?;
        }
        None => {
            print!("{content}");
            let line = serde_json::to_string(&manifest).expect("manifest serializes");
            eprintln!("{line}");
        }
    }
    Ok(())
}

pub fn manifest_path_for(out: &Path) -> PathBuf {
    let mut name = out.as_os_str().to_os_string();
    name.push(".manifest.json");
    PathBuf::from(name)
}
