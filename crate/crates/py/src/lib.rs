//! Python bindings: load a corpus, inspect the pipeline, decode and
//! disassemble words, and run programs on either back-end.

use std::collections::BTreeMap;
use std::path::PathBuf;

use pyo3::exceptions::{PyRuntimeError, PyValueError};
use pyo3::prelude::*;

use issforge_core::bench;
use issforge_core::corpus;
use issforge_core::sim::{DecodeResult, RunConfig, Simulator, StopReason};
use issforge_core::testgen;
use issforge_core::toolchain::{Options, Toolchain as CoreToolchain};
use uarm_iss::UarmIss;

fn runtime_err(e: impl std::fmt::Display) -> PyErr {
    PyRuntimeError::new_err(e.to_string())
}

/// A loaded corpus with its transform pipeline and decoder.
#[pyclass]
struct Toolchain {
    inner: CoreToolchain,
    bundled: bool,
}

#[pymethods]
impl Toolchain {
    /// Load a corpus directory (the bundled one when omitted).
    #[new]
    #[pyo3(signature = (corpus_dir=None, specialize=true))]
    fn new(corpus_dir: Option<PathBuf>, specialize: bool) -> PyResult<Self> {
        let dir = corpus::resolve(corpus_dir.as_deref());
        let bundled = match (dir.canonicalize(), corpus::bundled_dir().canonicalize()) {
            (Ok(a), Ok(b)) => a == b,
            _ => false,
        };
        let options = Options {
            no_specialize: !specialize,
            ..Options::default()
        };
        let inner = CoreToolchain::load(&dir, &options).map_err(runtime_err)?;
        Ok(Toolchain { inner, bundled })
    }

    /// Instruction names as described in the corpus.
    fn instruction_names(&self) -> Vec<String> {
        self.inner
            .desc
            .instructions
            .iter()
            .map(|i| i.name.clone())
            .collect()
    }

    /// Flattened instruction names (instruction x addressing mode).
    fn flat_names(&self) -> Vec<String> {
        self.inner.pipeline.base.iter().map(|f| f.name.clone()).collect()
    }

    /// Decoder candidates, specialized variants included.
    fn candidate_count(&self) -> usize {
        self.inner.pipeline.decoder.len()
    }

    /// Decode one word: a dict with kind/name/params/asm/is_terminator.
    fn decode(&self, py: Python<'_>, word: u32) -> PyResult<Py<pyo3::types::PyDict>> {
        let dict = pyo3::types::PyDict::new(py);
        match self.inner.spec.decode(word) {
            DecodeResult::Instr(d) => {
                let cand = &self.inner.spec.candidates[d.candidate];
                dict.set_item("kind", "instr")?;
                dict.set_item("name", &cand.name)?;
                dict.set_item("base", &cand.base)?;
                let params: BTreeMap<String, u32> = cand
                    .extracts
                    .iter()
                    .zip(d.values.iter())
                    .map(|((n, _), v)| (n.clone(), *v))
                    .collect();
                dict.set_item("params", params)?;
                dict.set_item("is_terminator", d.is_terminator)?;
                let flat = self.inner.spec.flat_of(&d);
                dict.set_item(
                    "asm",
                    issforge_core::sim::print_asm(flat, &|n| self.inner.spec.value_of(&d, n)),
                )?;
            }
            DecodeResult::Undefined => dict.set_item("kind", "undefined")?,
            DecodeResult::Unpredictable => dict.set_item("kind", "unpredictable")?,
        }
        Ok(dict.unbind())
    }

    /// Disassemble one word.
    fn disasm(&self, word: u32) -> String {
        match self.inner.spec.decode(word) {
            DecodeResult::Instr(d) => {
                let flat = self.inner.spec.flat_of(&d);
                issforge_core::sim::print_asm(flat, &|n| self.inner.spec.value_of(&d, n))
            }
            DecodeResult::Undefined => "<undefined>".into(),
            DecodeResult::Unpredictable => "<unpredictable>".into(),
        }
    }

    /// The decode-time may-branch condition of a flat instruction.
    fn may_branch(&self, flat: &str) -> PyResult<String> {
        let f = self
            .inner
            .pipeline
            .base
            .iter()
            .find(|f| f.name == flat)
            .ok_or_else(|| PyValueError::new_err(format!("no flat instruction `{flat}`")))?;
        Ok(issforge_core::ir::printer::print_expr(
            f.may_branch.as_ref().expect("analysis ran"),
        ))
    }

    /// Generate the decoder test corpus and run the round-trip diff;
    /// returns (word count, mismatch count).
    #[pyo3(signature = (budget=256))]
    fn roundtrip(&self, budget: usize) -> PyResult<(usize, usize)> {
        let corpus = testgen::generate(&self.inner.pipeline.base, budget).map_err(runtime_err)?;
        let mismatches =
            testgen::roundtrip(&self.inner.spec, &corpus.words, &corpus.expected);
        Ok((corpus.words.len(), mismatches.len()))
    }

    /// Words of a bundled benchmark program ("loop", "sorting", "crypto").
    fn benchmark(&self, name: &str) -> PyResult<(u32, Vec<u32>)> {
        let p = bench::benchmark(&self.inner.pipeline.base, name)
            .ok_or_else(|| PyValueError::new_err(format!("unknown benchmark `{name}`")))?;
        Ok((p.entry, p.words))
    }

    /// Run a program: words are loaded at `entry`, execution starts there.
    /// Returns a dict with stop/executed/decodes/regs/profile.
    #[pyo3(signature = (words, entry=0x1000, max_insns=10_000_000, engine="fast", use_cache=true))]
    fn run(
        &self,
        py: Python<'_>,
        words: Vec<u32>,
        entry: u32,
        max_insns: u64,
        engine: &str,
        use_cache: bool,
    ) -> PyResult<Py<pyo3::types::PyDict>> {
        let program = bench::Program {
            name: "py".into(),
            entry,
            words,
        };
        let cfg = RunConfig {
            max_insns,
            trace: false,
            use_cache,
        };
        let (out, cpu) = match engine {
            "fast" => {
                if !self.bundled {
                    return Err(PyValueError::new_err(
                        "the fast engine is generated for the bundled corpus; use engine='interp'",
                    ));
                }
                let mut sim = Simulator::new(&UarmIss, program.boot(), cfg);
                (sim.run(), sim.cpu)
            }
            "interp" => {
                let oracle = self.inner.oracle();
                let mut sim = Simulator::new(&oracle, program.boot(), cfg);
                (sim.run(), sim.cpu)
            }
            other => {
                return Err(PyValueError::new_err(format!(
                    "unknown engine `{other}` (use 'fast' or 'interp')"
                )))
            }
        };
        let dict = pyo3::types::PyDict::new(py);
        dict.set_item(
            "stop",
            match out.stop {
                StopReason::Halted => "halted".to_string(),
                StopReason::InsnLimit => "limit".to_string(),
                other => other.to_string(),
            },
        )?;
        dict.set_item("executed", out.executed)?;
        dict.set_item("decodes", out.decodes)?;
        let regs: Vec<u32> = (0..15)
            .map(|i| cpu.read_reg(i).expect("register indexes are in range"))
            .collect();
        dict.set_item("regs", regs)?;
        dict.set_item("pc", cpu.pc)?;
        dict.set_item("flags", (cpu.n, cpu.z, cpu.c, cpu.v))?;
        dict.set_item("profile", out.profile)?;
        Ok(dict.unbind())
    }
}

/// Version of the underlying toolchain crate.
#[pyfunction]
fn version() -> &'static str {
    env!("CARGO_PKG_VERSION")
}

#[pymodule]
fn issforge(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<Toolchain>()?;
    m.add_function(wrap_pyfunction!(version, m)?)?;
    Ok(())
}
