//! The transformation pipeline, in its fixed order:
//!
//! 1. symbolic-call rewrite (correctness)
//! 2. mode patches (correctness)
//! 3. flattening
//! 4. write-back relocation (correctness under data aborts)
//! 5. pre-computation of static sub-expressions (speed)
//! 6. specialization (speed)
//!
//! Write-back motion needs the flattened tree, and specializing last
//! maximizes dead-code removal.

pub mod flatten;
pub mod patch;
pub mod pipeline;
pub mod precompute;
pub mod specialize;
pub mod symbolic;
pub mod writeback;

pub use flatten::{flatten, merge_encodings, merge_syntax};
pub use patch::apply_mode_patch;
pub use pipeline::{
    ingest_profile, parse_profile, run_pipeline, Pipeline, StageDump, TransformConfig,
};
pub use precompute::precompute;
pub use specialize::specialize;
pub use symbolic::rewrite_symbolic_calls;
pub use writeback::move_writeback;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum TransformError {
    #[error("`{unit}`: symbolic call `{call}` does not match a 2- or 3-operand +/- shape")]
    SymbolicShape { unit: String, call: String },
    #[error("`{unit}`: stale patch step `{step}` replaced nothing")]
    StalePatch { unit: String, step: String },
    #[error("`{unit}`: patch `{patch}` is not registered")]
    UnknownPatch { unit: String, patch: String },
    #[error("encoding merge conflict between `{a}` and `{b}` at bit {bit}")]
    MergeConflict { a: String, b: String, bit: u8 },
    #[error("merging `{a}` and `{b}` would tear parameter field `{field}`")]
    ParamSplit { a: String, b: String, field: String },
    #[error("merged table of `{a}` and `{b}` is invalid: {err}")]
    MergedTableInvalid { a: String, b: String, err: String },
    #[error("`{unit}`: mode declares a write-back but none was found after flattening")]
    WritebackMissing { unit: String },
    #[error("`{unit}`: unsupported write-back statement shape")]
    WritebackShape { unit: String },
    #[error("`{unit}`: pre-compute pattern `{pattern}` is not static: {why}")]
    PrecomputeNotStatic {
        unit: String,
        pattern: String,
        why: String,
    },
    #[error("`{unit}`: {err}")]
    Unbound { unit: String, err: String },
    #[error("profile: {0}")]
    Profile(String),
}
