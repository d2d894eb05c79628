//! File formats, the evaluation harness and the `vbs` command line for
//! viewpoint-based summarization.
//!
//! The algorithms live in [`vbs_core`]; this crate adds everything that
//! touches the filesystem.

pub mod cli;
pub mod config;
pub mod dataset;
mod error;
pub mod formats;
pub mod render;
pub mod report;
pub mod synth;

pub use error::{Error, Result};
pub use vbs_core;

use std::io::Write;
use std::path::Path;

/// Writes `bytes` to `path` through a temporary file in the same directory,
/// so a failed run never leaves a partial file behind.
pub fn write_atomic(path: &Path, bytes: &[u8]) -> Result<()> {
    let dir = match path.parent() {
        Some(p) if !p.as_os_str().is_empty() => p,
        _ => Path::new("."),
    };
    let mut tmp = tempfile::NamedTempFile::new_in(dir).map_err(|e| Error::io(dir, e))?;
    tmp.write_all(bytes).map_err(|e| Error::io(path, e))?;
    tmp.persist(path).map_err(|e| Error::io(path, e.error))?;
    Ok(())
}
