//! Decoder test corpus: the paired (binary image, expected assembly) files,
//! and the round-trip driver that decodes every word, prints it, and diffs
//! the result against the expected listing.

use std::path::Path;

use super::enumerate::{enumerate_valid, Instance, TestgenError};
use super::image::Image;
use crate::ir::types::FlatInstruction;
use crate::sim::{print_asm, DecodeResult, DecoderSpec};

pub const DEFAULT_BUDGET: usize = 4096;

/// The generated corpus, before or after writing to disk.
#[derive(Debug, Clone)]
pub struct TestCorpus {
    pub words: Vec<u32>,
    pub expected: Vec<String>,
    /// Flat-instruction name that generated each word.
    pub origins: Vec<String>,
}

/// Enumerate every flat instruction and render the expected assembly with
/// the shared conventions. Line i corresponds to word i.
pub fn generate(flats: &[FlatInstruction], budget: usize) -> Result<TestCorpus, TestgenError> {
    let mut corpus = TestCorpus {
        words: Vec::new(),
        expected: Vec::new(),
        origins: Vec::new(),
    };
    for flat in flats {
        for inst in enumerate_valid(flat, budget)? {
            corpus.words.push(inst.word);
            corpus.expected.push(render_expected(flat, &inst));
            corpus.origins.push(flat.name.clone());
        }
    }
    Ok(corpus)
}

/// Expected-assembly rendering: the same template renderer the simulator
/// uses, fed with the enumerated parameters plus decode-time values.
pub fn render_expected(flat: &FlatInstruction, inst: &Instance) -> String {
    let rec = super::enumerate::full_record(flat, inst);
    print_asm(flat, &|name| rec.get(name).copied())
}

impl TestCorpus {
    pub fn image(&self) -> Image {
        Image {
            entry: 0,
            words: self.words.clone(),
        }
    }

    pub fn expected_text(&self) -> String {
        let mut s = self.expected.join("\n");
        s.push('\n');
        s
    }

    /// Write `corpus.uisa` and `corpus.expected.asm` into a directory.
    pub fn write_to(&self, dir: &Path) -> std::io::Result<()> {
        std::fs::create_dir_all(dir)?;
        std::fs::write(dir.join("corpus.uisa"), self.image().to_bytes())?;
        std::fs::write(dir.join("corpus.expected.asm"), self.expected_text())?;
        Ok(())
    }
}

/// One round-trip failure.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Mismatch {
    pub index: usize,
    pub word: u32,
    pub got: String,
    pub want: String,
}

/// Decode and print every word, diffing against the expected lines.
pub fn roundtrip(spec: &DecoderSpec, words: &[u32], expected: &[String]) -> Vec<Mismatch> {
    let mut out = Vec::new();
    for (i, word) in words.iter().enumerate() {
        let want = expected.get(i).map(|s| s.as_str()).unwrap_or("<missing line>");
        let got = match spec.decode(*word) {
            DecodeResult::Instr(d) => {
                let flat = spec.flat_of(&d);
                print_asm(flat, &|name| spec.value_of(&d, name))
            }
            DecodeResult::Undefined => "<undefined>".to_string(),
            DecodeResult::Unpredictable => "<unpredictable>".to_string(),
        };
        if got != want {
            out.push(Mismatch {
                index: i,
                word: *word,
                got,
                want: want.to_string(),
            });
        }
    }
    if expected.len() > words.len() {
        for (i, want) in expected.iter().enumerate().skip(words.len()) {
            out.push(Mismatch {
                index: i,
                word: 0,
                got: "<missing word>".to_string(),
                want: want.clone(),
            });
        }
    }
    out
}

/// Load the two corpus files back for the `roundtrip` command.
pub fn load_corpus_files(dir: &Path) -> std::io::Result<(Vec<u32>, Vec<String>)> {
    let image = std::fs::read(dir.join("corpus.uisa"))?;
    let image = Image::from_bytes(&image)
        .map_err(|e| std::io::Error::new(std::io::ErrorKind::InvalidData, e.to_string()))?;
    let text = std::fs::read_to_string(dir.join("corpus.expected.asm"))?;
    let expected = text.lines().map(|l| l.to_string()).collect();
    Ok((image.words, expected))
}
