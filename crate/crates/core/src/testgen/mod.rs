//! Automatic decoder test generation: enumerate every instruction word that
//! is neither undefined nor unpredictable, pair the binary with its expected
//! assembly, and drive the decode/print round-trip diff.

pub mod corpus;
pub mod enumerate;
pub mod image;

pub use corpus::{generate, load_corpus_files, render_expected, roundtrip, Mismatch, TestCorpus, DEFAULT_BUDGET};
pub use enumerate::{encode_word, enumerate_valid, Instance, TestgenError};
pub use image::{Image, ImageError};
