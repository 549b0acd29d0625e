//! Persistent cache of formal-group-law truncations.
//!
//! The cache is a versioned JSON file holding the `a_ij`, projective-space
//! class, and `eta'` tables in canonical polynomial text, guarded by a
//! SHA-256 checksum over the payload. Loads succeed only when both the
//! version and the checksum match; anything else reports a recomputable
//! condition, never a partial read. Stores write to a temporary file in the
//! same directory and rename over the target.

use std::collections::BTreeMap;
use std::path::{Path, PathBuf};
use std::sync::Arc;

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::error::{Error, Result};
use crate::fgl::Fgl;
use crate::text;

pub const CACHE_VERSION: u32 = 1;

#[derive(Debug, Serialize, Deserialize)]
struct CacheFile {
    version: u32,
    degree: u32,
    /// `(i, j, canonical polynomial)` for the stored nonzero entries.
    a: Vec<(u32, u32, String)>,
    /// `cp[n]` in canonical form, for `n < degree`.
    cp: Vec<String>,
    /// `eta'[n]` in canonical form, for `n < degree`.
    eta_prime: Vec<String>,
    checksum: String,
}

fn payload_digest(degree: u32, a: &[(u32, u32, String)], cp: &[String], eta: &[String]) -> String {
    let mut hasher = Sha256::new();
    hasher.update(format!("v{CACHE_VERSION}|D{degree}"));
    for (i, j, p) in a {
        hasher.update(format!("|a{i},{j}:{p}"));
    }
    for p in cp {
        hasher.update(format!("|cp:{p}"));
    }
    for p in eta {
        hasher.update(format!("|eta:{p}"));
    }
    format!("{:x}", hasher.finalize())
}

/// Serialize a universal truncation (with its derived tables forced) and
/// write it atomically.
pub fn store(fgl: &Arc<Fgl>, path: &Path) -> Result<()> {
    let degree = fgl.degree();
    let a: Vec<(u32, u32, String)> = fgl
        .entries(degree)
        .into_iter()
        .map(|(i, j, p)| (i, j, text::to_canonical(&p)))
        .collect();
    let mut cp = Vec::new();
    let mut eta_prime = Vec::new();
    for n in 0..degree {
        cp.push(text::to_canonical(&fgl.cp_class(n)?));
        eta_prime.push(text::to_canonical(&fgl.eta_prime(n)));
    }
    let checksum = payload_digest(degree, &a, &cp, &eta_prime);
    let file = CacheFile { version: CACHE_VERSION, degree, a, cp, eta_prime, checksum };
    let body = serde_json::to_string(&file).map_err(|e| Error::Cache(e.to_string()))?;

    if let Some(dir) = path.parent() {
        if !dir.as_os_str().is_empty() {
            std::fs::create_dir_all(dir).map_err(|e| Error::Cache(e.to_string()))?;
        }
    }
    let tmp = path.with_extension(format!("tmp.{}", std::process::id()));
    std::fs::write(&tmp, body).map_err(|e| Error::Cache(e.to_string()))?;
    std::fs::rename(&tmp, path).map_err(|e| Error::Cache(e.to_string()))?;
    Ok(())
}

/// Outcome of a load attempt. `Stale` means a valid file with a lower degree
/// than requested: the caller recomputes (extends) and re-stores.
pub enum LoadOutcome {
    Hit(Arc<Fgl>),
    Stale { cached_degree: u32 },
    Missing,
    Corrupt(String),
}

pub fn load(path: &Path, want_degree: u32) -> LoadOutcome {
    let body = match std::fs::read_to_string(path) {
        Err(e) if e.kind() == std::io::ErrorKind::NotFound => return LoadOutcome::Missing,
        Err(e) => return LoadOutcome::Corrupt(e.to_string()),
        Ok(b) => b,
    };
    let file: CacheFile = match serde_json::from_str(&body) {
        Err(e) => return LoadOutcome::Corrupt(format!("malformed JSON: {e}")),
        Ok(f) => f,
    };
    if file.version != CACHE_VERSION {
        return LoadOutcome::Corrupt(format!(
            "version {} does not match {CACHE_VERSION}",
            file.version
        ));
    }
    let digest = payload_digest(file.degree, &file.a, &file.cp, &file.eta_prime);
    if digest != file.checksum {
        return LoadOutcome::Corrupt("checksum mismatch".to_string());
    }
    if file.degree < want_degree {
        return LoadOutcome::Stale { cached_degree: file.degree };
    }
    // Rebuild. The b-generator table is determined by the degree; the polys
    // must parse on it, otherwise the file is corrupt.
    match rebuild(&file) {
        Ok(fgl) => LoadOutcome::Hit(fgl),
        Err(e) => LoadOutcome::Corrupt(e.to_string()),
    }
}

fn rebuild(file: &CacheFile) -> Result<Arc<Fgl>> {
    let table = Fgl::universal_coeff_table(file.degree);
    let mut a = BTreeMap::new();
    for (i, j, s) in &file.a {
        a.insert((*i, *j), text::parse(s, &table)?);
    }
    let mut cp = Vec::new();
    for s in &file.cp {
        cp.push(text::parse(s, &table)?);
    }
    let mut eta = Vec::new();
    for s in &file.eta_prime {
        eta.push(text::parse(s, &table)?);
    }
    Fgl::from_parts(file.degree, table, a, cp, eta)
}

/// Resolve the cache file path for a degree: explicit directory flag, then
/// the `LAZARD_CACHE_DIR` environment variable, then a per-user data
/// directory.
pub fn cache_path(dir: Option<&Path>, degree: u32) -> PathBuf {
    let dir = dir
        .map(Path::to_path_buf)
        .or_else(|| std::env::var_os("LAZARD_CACHE_DIR").map(PathBuf::from))
        .unwrap_or_else(default_cache_dir);
    dir.join(format!("fgl-d{degree}.json"))
}

fn default_cache_dir() -> PathBuf {
    if let Some(xdg) = std::env::var_os("XDG_DATA_HOME") {
        return PathBuf::from(xdg).join("lazard");
    }
    if let Some(home) = std::env::var_os("HOME") {
        return PathBuf::from(home).join(".local/share/lazard");
    }
    PathBuf::from(".lazard-cache")
}

/// Load the universal law from cache when possible, otherwise compute and
/// (best effort) store it. Warnings go to the provided sink.
pub fn load_or_build(
    dir: Option<&Path>,
    degree: u32,
    warn: &mut dyn FnMut(String),
) -> Arc<Fgl> {
    let path = cache_path(dir, degree);
    match load(&path, degree) {
        LoadOutcome::Hit(fgl) => return fgl,
        LoadOutcome::Missing => {}
        LoadOutcome::Stale { cached_degree } => {
            warn(format!(
                "cache at {} holds degree {cached_degree}; extending to {degree}",
                path.display()
            ));
        }
        LoadOutcome::Corrupt(reason) => {
            warn(format!(
                "ignoring cache at {} ({reason}); recomputing",
                path.display()
            ));
        }
    }
    let fgl = Fgl::universal(degree);
    if let Err(e) = store(&fgl, &path) {
        warn(format!("could not store cache at {}: {e}", path.display()));
    }
    fgl
}
