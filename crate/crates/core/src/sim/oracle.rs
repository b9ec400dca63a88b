//! The oracle back-end: decode through the compiled candidate table,
//! execute by walking the instruction trees directly. Slow and transparent;
//! every other back-end is differentially tested against it.

use super::decoder::{Decoded, DecodeResult, DecoderSpec};
use super::interp::{self, Outcome};
use super::printer;
use super::run::Engine;
use super::state::{CpuState, Fault};

pub struct OracleEngine {
    pub spec: DecoderSpec,
    /// Distinct base names in corpus order; profile slots.
    base_names: Vec<String>,
    /// Candidate index -> profile slot.
    base_of_candidate: Vec<usize>,
}

impl OracleEngine {
    pub fn new(spec: DecoderSpec) -> OracleEngine {
        let mut base_names: Vec<String> = Vec::new();
        for f in &spec.flats {
            if !base_names.contains(&f.base) {
                base_names.push(f.base.clone());
            }
        }
        let base_of_candidate = spec
            .candidates
            .iter()
            .map(|c| base_names.iter().position(|n| *n == c.base).unwrap())
            .collect();
        OracleEngine {
            spec,
            base_names,
            base_of_candidate,
        }
    }

    pub fn lookup<'a>(&'a self, d: &'a Decoded) -> impl Fn(&str) -> Option<u32> + 'a {
        move |name: &str| self.spec.value_of(d, name)
    }
}

impl Engine for OracleEngine {
    type Instr = Decoded;

    fn decode(&self, word: u32) -> DecodeResult<Decoded> {
        self.spec.decode(word)
    }

    fn execute(&self, instr: &Decoded, cpu: &mut CpuState) -> Result<Outcome, Fault> {
        let flat = &self.spec.flats[instr.flat];
        let lookup = self.lookup(instr);
        interp::execute(&flat.ast, &lookup, cpu)
    }

    fn is_terminator(&self, instr: &Decoded) -> bool {
        instr.is_terminator
    }

    fn profile_id(&self, instr: &Decoded) -> usize {
        self.base_of_candidate[instr.candidate]
    }

    fn profile_names(&self) -> Vec<String> {
        self.base_names.clone()
    }

    fn disasm(&self, instr: &Decoded) -> String {
        let flat = &self.spec.flats[instr.flat];
        printer::print_asm(flat, &self.lookup(instr))
    }
}
