//! On-disk cache of verified fusion tables, keyed by `(type, rank, r)`.
//!
//! Each entry is `<dir>/<type>_r<r>/fusion.json` with its SHA-256 digest in
//! `fusion.sha256`. A hit is accepted only if the digest matches and the
//! table passes the fusion axioms again on load.

use anyhow::{Context, Result};
use integral_tqft::fusion::FusionTable;
use integral_tqft::lie::LieType;
use sha2::{Digest, Sha256};
use std::fs;
use std::path::{Path, PathBuf};
use std::sync::Arc;

pub fn digest(bytes: &[u8]) -> String {
    hex::encode(Sha256::digest(bytes))
}

fn entry_dir(dir: &Path, t: LieType, r: u64) -> PathBuf {
    dir.join(format!("{t}_r{r}"))
}

fn read_entry(path: &Path) -> Option<FusionTable> {
    let body = fs::read(path.join("fusion.json")).ok()?;
    let stored = fs::read_to_string(path.join("fusion.sha256")).ok()?;
    if stored.trim() != digest(&body) {
        eprintln!("warning: cache entry {} failed its integrity check; recomputing", path.display());
        return None;
    }
    match serde_json::from_slice(&body) {
        Ok(table) => Some(table),
        Err(e) => {
            eprintln!("warning: cache entry {} rejected ({e}); recomputing", path.display());
            None
        }
    }
}

fn write_atomic(path: &Path, bytes: &[u8]) -> Result<()> {
    let tmp = path.with_extension("tmp");
    fs::write(&tmp, bytes).with_context(|| format!("writing {}", tmp.display()))?;
    fs::rename(&tmp, path).with_context(|| format!("renaming {}", tmp.display()))
}

/// The fusion table for `(t, r)`, from the cache when possible.
pub fn fusion_table(dir: Option<&Path>, t: LieType, r: u64) -> Result<Arc<FusionTable>> {
    let Some(dir) = dir else {
        return Ok(Arc::new(FusionTable::new(t, r)?));
    };
    let path = entry_dir(dir, t, r);
    if let Some(table) = read_entry(&path) {
        if table.lie_type() == t && table.r() == r {
            return Ok(Arc::new(table));
        }
    }
    let table = FusionTable::new(t, r)?;
    let body = serde_json::to_vec(&table)?;
    fs::create_dir_all(&path).with_context(|| format!("creating {}", path.display()))?;
    write_atomic(&path.join("fusion.json"), &body)?;
    write_atomic(&path.join("fusion.sha256"), digest(&body).as_bytes())?;
    Ok(Arc::new(table))
}
