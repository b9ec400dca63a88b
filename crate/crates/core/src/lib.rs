//! issforge: compile manual-style instruction-set descriptions into a fast
//! instruction-set simulator, an assembly printer, and an exhaustive decoder
//! test corpus.
//!
//! The pipeline, front to back:
//!
//! 1. [`isa`] parses the four description files (pseudo-code, encoding
//!    tables, assembly syntax, validity constraints) and links them into an
//!    [`ir::IsaDescription`].
//! 2. [`transforms`] rewrites the code trees: symbolic calls become
//!    per-operator calls, mode patches are applied, instructions are
//!    flattened against their addressing modes, base-register write-backs
//!    move behind the memory accesses, static sub-expressions become
//!    decode-time parameters, and hot instructions get specialized variants.
//! 3. [`analysis`] computes each flat instruction's decode-time may-branch
//!    condition, which identifies basic-block terminators.
//! 4. [`sim`] builds the two-phase decoder and runs programs, either through
//!    the direct tree interpreter (the differential-testing oracle) or a
//!    generated source back-end emitted by [`emit`].
//! 5. [`testgen`] enumerates every valid instruction word and drives the
//!    decode/print round-trip against the expected assembly listing.

pub mod analysis;
pub mod bench;
pub mod corpus;
pub mod emit;
pub mod ir;
pub mod isa;
pub mod sim;
pub mod testgen;
pub mod toolchain;
pub mod transforms;
