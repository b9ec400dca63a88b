//! One-call wiring of the whole pipeline: corpus directory in, decoder and
//! oracle engine out. The CLI, the language bindings, and the integration
//! tests all go through here.

use std::path::Path;

use crate::ir::IsaDescription;
use crate::isa::{self, BranchOverride, IngestError, SourceSet};
use crate::sim::{build_decoder, DecoderError, DecoderSpec, OracleEngine};
use crate::transforms::{self, pipeline::Pipeline, TransformConfig, TransformError};

#[derive(Debug, thiserror::Error)]
pub enum ToolchainError {
    #[error(transparent)]
    Ingest(#[from] IngestError),
    #[error(transparent)]
    Transform(#[from] TransformError),
    #[error(transparent)]
    Decoder(#[from] DecoderError),
}

/// Pipeline switches, mirroring the CLI flags.
#[derive(Debug, Clone, Default)]
pub struct Options {
    pub no_specialize: bool,
    pub profile: Option<std::path::PathBuf>,
    pub weight_threshold: Option<u64>,
    pub keep_dumps: bool,
}

pub struct Toolchain {
    pub sources: SourceSet,
    pub desc: IsaDescription,
    pub config: TransformConfig,
    pub overrides: Vec<(String, BranchOverride)>,
    pub pipeline: Pipeline,
    /// Decoder over the full candidate set (specialized variants included).
    pub spec: DecoderSpec,
    pub warnings: Vec<String>,
}

impl Toolchain {
    /// Load a corpus directory and run the pipeline with the given options.
    pub fn load(dir: impl AsRef<Path>, options: &Options) -> Result<Toolchain, ToolchainError> {
        let (sources, desc, mut warnings) = isa::load_corpus(dir)?;
        let mut config = TransformConfig::from_file(&sources.config_file()?);
        config.specialize = !options.no_specialize;
        if let Some(t) = options.weight_threshold {
            config.weight_threshold = t;
        }
        if let Some(path) = &options.profile {
            let text = std::fs::read_to_string(path).map_err(|err| {
                IngestError::Io {
                    path: path.clone(),
                    err,
                }
            })?;
            config.profile = Some(transforms::parse_profile(&text)?);
        }
        let overrides = sources.override_table()?;
        let pipeline =
            transforms::run_pipeline(&desc, &config, &overrides, options.keep_dumps)?;
        warnings.extend(pipeline.warnings.iter().cloned());
        let spec = build_decoder(&pipeline.decoder)?;
        Ok(Toolchain {
            sources,
            desc,
            config,
            overrides,
            pipeline,
            spec,
            warnings,
        })
    }

    /// Load the bundled corpus with default options.
    pub fn bundled() -> Result<Toolchain, ToolchainError> {
        Toolchain::load(crate::corpus::bundled_dir(), &Options::default())
    }

    pub fn oracle(&self) -> OracleEngine {
        OracleEngine::new(self.spec.clone())
    }

    /// Decoder restricted to the unspecialized flat instructions.
    pub fn base_spec(&self) -> Result<DecoderSpec, DecoderError> {
        build_decoder(&self.pipeline.base)
    }
}
