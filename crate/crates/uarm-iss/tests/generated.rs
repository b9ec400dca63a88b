//! The committed sources match the generator's output, and the generated
//! back-end agrees with the tree interpreter.

use issforge_core::sim::{
    DecodeResult, Engine, OracleEngine, RunConfig, Simulator, StopReason,
};
use issforge_core::toolchain::Toolchain;
use uarm_iss::UarmIss;

fn toolchain() -> Toolchain {
    Toolchain::bundled().unwrap()
}

#[test]
fn committed_sources_are_fresh() {
    let tc = toolchain();
    let tree =
        issforge_core::emit::emit_iss(&tc.pipeline.decoder, "uarm", "uarm-iss", "../core").unwrap();
    let root = std::path::Path::new(env!("CARGO_MANIFEST_DIR"));
    for (rel, want) in &tree.files {
        let on_disk = std::fs::read_to_string(root.join(rel))
            .unwrap_or_else(|e| panic!("{rel}: {e}"));
        assert_eq!(
            &on_disk, want,
            "{rel} is stale; rerun `issforge gen-iss --out crates/uarm-iss`"
        );
    }
}

#[test]
fn routine_count_matches_the_flat_count() {
    let tc = toolchain();
    let src = include_str!("../src/exec.rs");
    let fns = src.matches("pub fn ").count();
    assert_eq!(fns, tc.pipeline.decoder.len());
}

#[test]
fn parameter_record_types_match_the_distinct_lists() {
    let tc = toolchain();
    let want = issforge_core::emit::distinct_layout_count(&tc.pipeline.decoder).unwrap();
    let src = include_str!("../src/params.rs");
    let structs = src.matches("pub struct ").count();
    assert_eq!(structs, want);
    assert!(want >= 5, "suspiciously few layouts: {want}");
}

#[test]
fn s0_routines_never_touch_the_flags() {
    let src = include_str!("../src/exec.rs");
    for block in src.split("pub fn ").skip(1) {
        let name = block.split('(').next().unwrap();
        if name.contains("_s0") {
            assert!(
                !block.contains("set_flag"),
                "{name} still updates a flag"
            );
        }
    }
}

#[test]
fn decoder_agrees_with_the_oracle_on_the_test_corpus() {
    let tc = toolchain();
    let corpus = issforge_core::testgen::generate(&tc.pipeline.base, 512).unwrap();
    let fast = UarmIss;
    for word in &corpus.words {
        let a = tc.spec.decode(*word);
        let b = fast.decode(*word);
        match (&a, &b) {
            (DecodeResult::Instr(d), DecodeResult::Instr(op)) => {
                let name = tc.spec.candidates[d.candidate].name.as_str();
                // Same flat instruction, same record, same terminator bit.
                assert_eq!(
                    format!("{op:?}").split('(').next().unwrap().to_lowercase(),
                    name.replace('_', "").to_lowercase(),
                    "word {word:#010x}"
                );
                assert_eq!(
                    fast.is_terminator(op),
                    d.is_terminator,
                    "word {word:#010x}"
                );
                assert_eq!(fast.disasm(op), {
                    let flat = tc.spec.flat_of(d);
                    issforge_core::sim::print_asm(flat, &|n| tc.spec.value_of(d, n))
                });
            }
            (a, b) => panic!("word {word:#010x}: oracle {a:?} vs generated {b:?}"),
        }
    }
}

#[test]
fn decoder_classifies_non_instructions_identically() {
    let tc = toolchain();
    let fast = UarmIss;
    // Tiny deterministic generator; this crate carries no test-only deps.
    let mut x: u32 = 0x2545_F491;
    let mut next = move || {
        x ^= x << 13;
        x ^= x >> 17;
        x ^= x << 5;
        x
    };
    for _ in 0..200_000 {
        let word: u32 = next();
        let a = tc.spec.decode(word);
        let b = fast.decode(word);
        let same = matches!(
            (&a, &b),
            (DecodeResult::Instr(_), DecodeResult::Instr(_))
                | (DecodeResult::Undefined, DecodeResult::Undefined)
                | (DecodeResult::Unpredictable, DecodeResult::Unpredictable)
        );
        assert!(same, "word {word:#010x}: oracle {a:?} vs generated {b:?}");
    }
}

#[test]
fn benchmarks_agree_with_the_interpreter() {
    let tc = toolchain();
    let oracle = tc.oracle();
    let fast = UarmIss;
    for name in issforge_core::bench::BENCHMARKS {
        let program = issforge_core::bench::benchmark(&tc.pipeline.base, name).unwrap();
        let mut a = Simulator::new(&oracle, program.boot(), RunConfig::default());
        let ra = a.run();
        let mut b = Simulator::new(&fast, program.boot(), RunConfig::default());
        let rb = b.run();
        assert_eq!(ra.stop, StopReason::Halted, "{name}");
        assert_eq!(rb.stop, StopReason::Halted, "{name}");
        assert_eq!(ra.executed, rb.executed, "{name}");
        assert_eq!(ra.profile, rb.profile, "{name}");
        assert!(a.cpu.arch_eq(&b.cpu), "{name}: final states differ");
    }
}
