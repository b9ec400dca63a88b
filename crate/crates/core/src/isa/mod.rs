//! Ingest: parse the description files into a validated [`IsaDescription`].
//!
//! A corpus directory holds four required files and up to three optional
//! ones, found by extension:
//!
//! | extension    | content                         | required |
//! |--------------|---------------------------------|----------|
//! | `.pc`        | pseudo-code                     | yes      |
//! | `.enc`       | encoding tables                 | yes      |
//! | `.syn`       | assembly syntax                 | yes      |
//! | `.vc`        | validity constraints            | yes      |
//! | `.patch.pc`  | mode-variant patches            | no       |
//! | `.tc`        | transform configuration         | no       |
//! | `overrides.mb` | may-branch overrides          | no       |
//!
//! The formats are documented in `docs/format.md`.

pub mod config;
pub mod constraints;
pub mod encodings;
pub mod lex;
pub mod link;
pub mod pseudocode;
pub mod syntax;

use std::path::{Path, PathBuf};

pub use config::{parse_config, parse_overrides, parse_patches, BranchOverride, ConfigFile};
pub use constraints::parse_constraints;
pub use encodings::parse_encodings;
pub use link::{link, LinkError, Linked};
pub use pseudocode::{parse_pseudocode, ParseError};
pub use syntax::parse_syntax;

use crate::ir::IsaDescription;

/// The four description documents plus the optional auxiliary files.
#[derive(Debug, Clone, Default)]
pub struct SourceSet {
    pub pseudocode: String,
    pub encodings: String,
    pub syntax: String,
    pub constraints: String,
    pub patches: Option<String>,
    pub config: Option<String>,
    pub overrides: Option<String>,
    /// Directory the set was loaded from, for error messages.
    pub origin: Option<PathBuf>,
}

#[derive(Debug, thiserror::Error)]
pub enum IngestError {
    #[error("{path}: {err}")]
    Io { path: PathBuf, err: std::io::Error },
    #[error("corpus directory {0} is missing a required `{1}` file")]
    MissingFile(PathBuf, &'static str),
    #[error("{file}: {err}")]
    Parse { file: String, err: ParseError },
    #[error(transparent)]
    Link(#[from] LinkError),
}

fn read(path: &Path) -> Result<String, IngestError> {
    std::fs::read_to_string(path).map_err(|err| IngestError::Io {
        path: path.to_path_buf(),
        err,
    })
}

fn find_by_ext(dir: &Path, ext: &str) -> Result<Option<PathBuf>, IngestError> {
    let mut found = Vec::new();
    let entries = std::fs::read_dir(dir).map_err(|err| IngestError::Io {
        path: dir.to_path_buf(),
        err,
    })?;
    for entry in entries {
        let entry = entry.map_err(|err| IngestError::Io {
            path: dir.to_path_buf(),
            err,
        })?;
        let path = entry.path();
        let name = entry.file_name().to_string_lossy().into_owned();
        if name.ends_with(ext) {
            // `.patch.pc` must not be picked up as the `.pc` file.
            if ext == ".pc" && name.ends_with(".patch.pc") {
                continue;
            }
            found.push(path);
        }
    }
    found.sort();
    Ok(found.into_iter().next())
}

impl SourceSet {
    /// Load a corpus directory, locating files by extension.
    pub fn load_dir(dir: impl AsRef<Path>) -> Result<SourceSet, IngestError> {
        let dir = dir.as_ref();
        let required = |ext: &'static str| -> Result<String, IngestError> {
            match find_by_ext(dir, ext)? {
                Some(p) => read(&p),
                None => Err(IngestError::MissingFile(dir.to_path_buf(), ext)),
            }
        };
        let pseudocode = required(".pc")?;
        let encodings = required(".enc")?;
        let syntax = required(".syn")?;
        let constraints = required(".vc")?;
        let optional = |ext: &'static str| -> Result<Option<String>, IngestError> {
            match find_by_ext(dir, ext)? {
                Some(p) => read(&p).map(Some),
                None => Ok(None),
            }
        };
        Ok(SourceSet {
            pseudocode,
            encodings,
            syntax,
            constraints,
            patches: optional(".patch.pc")?,
            config: optional(".tc")?,
            overrides: optional(".mb")?,
            origin: Some(dir.to_path_buf()),
        })
    }

    pub fn config_file(&self) -> Result<ConfigFile, IngestError> {
        match &self.config {
            Some(text) => parse_config(text).map_err(|err| IngestError::Parse {
                file: "transform config".into(),
                err,
            }),
            None => Ok(ConfigFile::default()),
        }
    }

    pub fn override_table(&self) -> Result<Vec<(String, BranchOverride)>, IngestError> {
        match &self.overrides {
            Some(text) => parse_overrides(text).map_err(|err| IngestError::Parse {
                file: "overrides.mb".into(),
                err,
            }),
            None => Ok(Vec::new()),
        }
    }
}

/// Parse all files of a source set and link them.
pub fn parse_and_link(src: &SourceSet) -> Result<Linked, IngestError> {
    let wrap = |file: &'static str| move |err: ParseError| IngestError::Parse {
        file: file.into(),
        err,
    };
    let pc = parse_pseudocode(&src.pseudocode).map_err(wrap("pseudo-code"))?;
    let enc = parse_encodings(&src.encodings).map_err(wrap("encodings"))?;
    let syn = parse_syntax(&src.syntax).map_err(wrap("syntax"))?;
    let vc = parse_constraints(&src.constraints).map_err(wrap("constraints"))?;
    let patches = match &src.patches {
        Some(text) => parse_patches(text).map_err(wrap("patches"))?,
        None => Vec::new(),
    };
    let cfg = src.config_file()?;
    Ok(link::link(pc, enc, syn, vc, patches, &cfg)?)
}

/// Parse and link a corpus directory.
pub fn load_corpus(dir: impl AsRef<Path>) -> Result<(SourceSet, IsaDescription, Vec<String>), IngestError> {
    let src = SourceSet::load_dir(dir)?;
    let linked = parse_and_link(&src)?;
    Ok((src, linked.desc, linked.warnings))
}
