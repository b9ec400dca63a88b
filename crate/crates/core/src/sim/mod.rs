//! Simulator generation and runtime: the decoded-instruction model, the
//! two-phase decoder, executable semantics (the direct tree interpreter that
//! serves as the differential oracle), the assembly printer, and the
//! dynamic-translation run loop with basic-block caching.

pub mod cache;
pub mod decoder;
pub mod interp;
pub mod oracle;
pub mod printer;
pub mod render;
pub mod run;
pub mod state;

pub use cache::{Block, BlockCache, BLOCK_PAGE, MAX_BLOCK_INSNS};
pub use decoder::{build_decoder, Candidate, Decoded, DecodeResult, DecoderError, DecoderSpec, Extract};
pub use interp::{execute, interpret, Outcome};
pub use oracle::OracleEngine;
pub use printer::print_asm;
pub use run::{Engine, RunConfig, RunOutcome, Simulator, StopReason};
pub use state::{mode_from_value, AbortRecord, CpuState, Fault, MemEvent, Mode, DATA_ABORT_VECTOR};
