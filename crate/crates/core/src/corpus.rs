//! Locating the bundled corpus directory.

use std::path::PathBuf;

/// Environment variable overriding the corpus location.
pub const CORPUS_ENV: &str = "ISSFORGE_CORPUS";

/// The corpus shipped with the repository, resolved relative to this crate.
pub fn bundled_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("../../data/uarm")
        .canonicalize()
        .unwrap_or_else(|_| PathBuf::from("data/uarm"))
}

/// Resolution order: explicit argument, `ISSFORGE_CORPUS`, bundled corpus.
pub fn resolve(arg: Option<&std::path::Path>) -> PathBuf {
    if let Some(p) = arg {
        return p.to_path_buf();
    }
    if let Ok(p) = std::env::var(CORPUS_ENV) {
        return PathBuf::from(p);
    }
    bundled_dir()
}
