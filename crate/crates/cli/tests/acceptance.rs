//! Acceptance suite: one test per release criterion, each printing a
//! PASS/FAIL line (visible with `--nocapture`). Run with
//! `cargo test -p issforge-cli --test acceptance`.

use std::time::Instant;

use issforge_core::analysis::eval_condition;
use issforge_core::bench;
use issforge_core::corpus;
use issforge_core::ir::printer::print_expr;
use issforge_core::sim::{
    interpret, CpuState, Engine, Mode, RunConfig, Simulator, StopReason,
};
use issforge_core::testgen::{self, encode_word, enumerate_valid};
use issforge_core::toolchain::{Options, Toolchain};
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;
use uarm_iss::UarmIss;

fn pass(criterion: u32, what: &str) {
    println!("criterion {criterion}: PASS - {what}");
}

fn toolchain() -> Toolchain {
    Toolchain::bundled().expect("bundled corpus builds")
}

fn no_spec_toolchain() -> Toolchain {
    Toolchain::load(
        corpus::bundled_dir(),
        &Options {
            no_specialize: true,
            ..Options::default()
        },
    )
    .unwrap()
}

// -- 1. round-trip decoder validation ---------------------------------------

#[test]
fn criterion_1_roundtrip_zero_mismatches() {
    let start = Instant::now();
    let tc = toolchain();
    let corpus = testgen::generate(&tc.pipeline.base, testgen::DEFAULT_BUDGET).unwrap();
    assert!(
        corpus.words.len() >= 10_000,
        "only {} generated words",
        corpus.words.len()
    );
    let mismatches = testgen::roundtrip(&tc.spec, &corpus.words, &corpus.expected);
    assert_eq!(
        mismatches.len(),
        0,
        "first mismatch: {:?}",
        mismatches.first()
    );
    let elapsed = start.elapsed().as_secs_f64();
    assert!(elapsed < 30.0, "round-trip took {elapsed:.1}s");
    pass(
        1,
        &format!(
            "{} words decode+print to the expected assembly in {elapsed:.1}s",
            corpus.words.len()
        ),
    );
}

// -- 2. write-back/data-abort regression -----------------------------------------

fn abort_check<E: Engine>(engine: &E, tc: &Toolchain, label: &str) -> usize {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let mut covered = 0;
    for flat in &tc.pipeline.base {
        let touches_memory = flat
            .ast
            .any_expr(&|e| matches!(e, issforge_core::ir::Expr::Memory { .. }))
            || flat.ast.any_stmt(&|s| {
                matches!(s, issforge_core::ir::Stmt::Call { proc, .. }
                    if proc == "LoadMultiple" || proc == "StoreMultiple")
            });
        if !touches_memory {
            continue;
        }
        covered += 1;
        let pool = enumerate_valid(flat, 64).unwrap();
        for _ in 0..8 {
            let mut inst = pool[rng.random_range(0..pool.len())].clone();
            for (n, v) in inst.params.iter_mut() {
                if n == "cond" {
                    *v = 14; // make sure the access executes
                }
            }
            let word = encode_word(flat, &inst.params);
            let decoded = match engine.decode(word) {
                issforge_core::sim::DecodeResult::Instr(d) => d,
                _ => panic!("{label}: {} word failed to decode", flat.name),
            };
            // No memory mapped at all: the first access faults.
            let mut cpu = CpuState::new();
            cpu.mode = Mode::Svc;
            cpu.pc = 0x1000;
            for i in 0..15 {
                cpu.write_reg_mode(i, Mode::Svc, rng.random()).unwrap();
            }
            for m in Mode::ALL {
                cpu.set_spsr_of(m, (rng.random::<u32>() & 0xF000_0000) | 1);
            }
            let before = cpu.clone();
            engine
                .execute(&decoded, &mut cpu)
                .unwrap_or_else(|e| panic!("{label}: {}: {e}", flat.name));
            assert_eq!(cpu.mode, Mode::Abt, "{label}: {} did not abort", flat.name);
            for i in 0..15 {
                assert_eq!(
                    cpu.read_reg_mode(i, Mode::Svc).unwrap(),
                    before.read_reg_mode(i, Mode::Svc).unwrap(),
                    "{label}: {}: R{i} changed across an aborted access",
                    flat.name
                );
            }
        }
    }
    covered
}

#[test]
fn criterion_2_aborts_cancel_writeback() {
    let tc = toolchain();
    let oracle = tc.oracle();
    let a = abort_check(&oracle, &tc, "interpreter");
    let b = abort_check(&UarmIss, &tc, "generated");
    assert_eq!(a, b);
    assert!(a >= 20, "only {a} memory instructions covered");
    pass(
        2,
        &format!("{a} load/store flat instructions leave the base register untouched on abort (both back-ends)"),
    );
}

// -- 3. flattening count ------------------------------------------------------------

#[test]
fn criterion_3_flatten_count() {
    let tc = toolchain();
    let expected: usize = tc
        .desc
        .instructions
        .iter()
        .map(|i| i.modes.len().max(1))
        .sum();
    assert_eq!(tc.pipeline.base.len(), expected);
    pass(
        3,
        &format!(
            "{} flattened = sum over instructions of max(1, modes)",
            expected
        ),
    );
}

// -- 4. merged-encoding golden reproduction ----------------------------------------

#[test]
fn criterion_4_adc_lsl_imm_golden_table() {
    let tc = toolchain();
    let adc = tc
        .pipeline
        .base
        .iter()
        .find(|f| f.name == "ADC_lsl_imm")
        .unwrap();
    let golden_path = corpus::bundled_dir()
        .parent()
        .unwrap()
        .join("golden/adc_lsl_imm_flat.enc");
    let golden = std::fs::read_to_string(golden_path).unwrap();
    assert_eq!(adc.encoding.render(), golden.trim_end());
    pass(4, "flattened ADC x LSL-immediate table matches the golden file exactly");
}

// -- 5. may-branch precision and soundness ----------------------------------------

#[test]
fn criterion_5_may_branch_precision_and_soundness() {
    let tc = toolchain();
    // Precision: structural equality after simplification.
    let ldr = tc
        .pipeline
        .base
        .iter()
        .find(|f| f.name == "LDR_pre_reg")
        .unwrap();
    assert_eq!(print_expr(ldr.may_branch.as_ref().unwrap()), "d == 15");

    // Soundness: no false negatives over 10^5 random interpretations.
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let pools: Vec<(usize, Vec<issforge_core::testgen::Instance>)> = tc
        .pipeline
        .base
        .iter()
        .enumerate()
        .map(|(i, f)| (i, enumerate_valid(f, 128).unwrap()))
        .collect();
    let mut checked: u64 = 0;
    while checked < 100_000 {
        let (fi, pool) = &pools[rng.random_range(0..pools.len())];
        let flat = &tc.pipeline.base[*fi];
        let inst = &pool[rng.random_range(0..pool.len())];
        let rec = issforge_core::testgen::enumerate::full_record(flat, inst);
        let lookup = |n: &str| rec.get(n).copied();
        if eval_condition(flat.may_branch.as_ref().unwrap(), &lookup) {
            continue;
        }
        let mut cpu = CpuState::new();
        cpu.map_region(0, 0x40000);
        for i in 0..13 {
            cpu.write_reg_mode(i, Mode::Usr, rng.random_range(0..0x1F000)).unwrap();
        }
        for m in Mode::ALL {
            cpu.write_reg_mode(13, m, rng.random_range(0..0x1F000)).unwrap();
            cpu.write_reg_mode(14, m, rng.random_range(0..0x1F000)).unwrap();
            cpu.set_spsr_of(m, (rng.random::<u32>() & 0xF000_0000) | 2);
        }
        cpu.pc = 0x1000;
        cpu.mode = Mode::ALL[rng.random_range(0..6)];
        cpu.n = rng.random_bool(0.5);
        cpu.z = rng.random_bool(0.5);
        cpu.c = rng.random_bool(0.5);
        cpu.v = rng.random_bool(0.5);
        let pc_before = cpu.pc;
        match interpret(flat, &lookup, &mut cpu) {
            Ok(issforge_core::sim::Outcome::Completed) => {
                assert!(
                    !cpu.pc_written && cpu.pc == pc_before,
                    "{}: PC changed although may-branch was false ({rec:?})",
                    flat.name
                );
            }
            Ok(issforge_core::sim::Outcome::Aborted { .. }) => {}
            Err(e) => panic!("{}: {e}", flat.name),
        }
        checked += 1;
    }
    pass(
        5,
        "LDR pre-indexed condition is exactly `d == 15`; no false negatives in 100000 interpretations",
    );
}

// -- 6. oracle vs generated back-end ----------------------------------------------

fn compare_engines(
    tc: &Toolchain,
    program: &bench::Program,
    limit: u64,
    label: &str,
) -> (StopReason, u64, CpuState) {
    let oracle = tc.oracle();
    let fast = UarmIss;
    let cfg = |use_cache| RunConfig {
        max_insns: limit,
        trace: false,
        use_cache,
    };
    // Pure stepping, cached interpretation, and the generated back-end.
    let mut a = Simulator::new(&oracle, program.boot(), cfg(false));
    let ra = a.run();
    let mut b = Simulator::new(&oracle, program.boot(), cfg(true));
    let rb = b.run();
    let mut c = Simulator::new(&fast, program.boot(), cfg(true));
    let rc = c.run();
    assert_eq!(ra.stop, rb.stop, "{label}: stepping vs cached");
    assert_eq!(ra.stop, rc.stop, "{label}: oracle vs generated");
    assert_eq!(ra.executed, rb.executed, "{label}");
    assert_eq!(ra.executed, rc.executed, "{label}");
    assert!(a.cpu.arch_eq(&b.cpu), "{label}: cached interp diverged");
    assert!(a.cpu.arch_eq(&c.cpu), "{label}: generated back-end diverged");
    (ra.stop, ra.executed, a.cpu)
}

fn random_program(tc: &Toolchain, rng: &mut ChaCha8Rng, pool: &[u32]) -> bench::Program {
    let len = rng.random_range(16..64);
    let words: Vec<u32> = (0..len).map(|_| pool[rng.random_range(0..pool.len())]).collect();
    let _ = tc;
    bench::Program {
        name: "random".into(),
        entry: 0x1000,
        words,
    }
}

#[test]
fn criterion_6_backends_agree_on_benchmarks_and_random_programs() {
    let tc = toolchain();
    for name in bench::BENCHMARKS {
        let program = bench::benchmark(&tc.pipeline.base, name).unwrap();
        let (stop, _, _) = compare_engines(&tc, &program, 10_000_000, name);
        assert_eq!(stop, StopReason::Halted, "{name}");
    }
    // 100 random programs over valid words; the abort vector holds HALT so
    // faulting memory accesses terminate cleanly.
    let corpus = testgen::generate(&tc.pipeline.base, 128).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(1234);
    for i in 0..100 {
        let mut program = random_program(&tc, &mut rng, &corpus.words);
        program.name = format!("random-{i}");
        // Place a HALT at the data-abort vector.
        let halt = 0xE600_0000u32;
        let mut boot = program.boot();
        boot.write_mem(issforge_core::sim::DATA_ABORT_VECTOR, 4, halt).unwrap();
        let oracle = tc.oracle();
        let fast = UarmIss;
        let cfg = RunConfig {
            max_insns: 5_000,
            trace: false,
            use_cache: true,
        };
        let mut a = Simulator::new(&oracle, boot.clone(), cfg);
        let ra = a.run();
        let mut b = Simulator::new(&fast, boot, cfg);
        let rb = b.run();
        assert_eq!(ra.stop, rb.stop, "{}", program.name);
        assert_eq!(ra.executed, rb.executed, "{}", program.name);
        assert!(a.cpu.arch_eq(&b.cpu), "{}: states diverged", program.name);
    }
    pass(
        6,
        "interpreter and generated back-end agree on loop/sorting/crypto and 100 random programs",
    );
}

// -- 7. performance ratios ------------------------------------------------------------

#[test]
fn criterion_7_speedup_ratios() {
    let start = Instant::now();
    let exe = env!("CARGO_BIN_EXE_issforge");
    let out = std::process::Command::new(exe)
        .args(["bench", "--benchmark", "loop", "--runs", "3", "--json"])
        .output()
        .expect("bench runs");
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    let report: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    let fast_ratio = report["speedup_fast_vs_interp"].as_f64().unwrap();
    let spec_ratio = report["speedup_specialization"].as_f64().unwrap();
    assert!(
        fast_ratio >= 3.0,
        "generated back-end only {fast_ratio:.2}x over the interpreter"
    );
    assert!(
        spec_ratio >= 1.0,
        "specialization regressed: {spec_ratio:.2}x"
    );
    let elapsed = start.elapsed().as_secs_f64();
    assert!(elapsed < 60.0, "bench took {elapsed:.1}s");
    pass(
        7,
        &format!("fast/interp = {fast_ratio:.2}x (>= 3), specialization = {spec_ratio:.2}x (>= 1), in {elapsed:.1}s"),
    );
}

// -- 8. specialization transparency -----------------------------------------------

#[test]
fn criterion_8_no_specialize_is_architecturally_invisible() {
    let tc = toolchain();
    let tc_nospec = no_spec_toolchain();

    // Criterion 1 flow: identical corpus, zero mismatches either way.
    let corpus_spec = testgen::generate(&tc.pipeline.base, 512).unwrap();
    let corpus_nospec = testgen::generate(&tc_nospec.pipeline.base, 512).unwrap();
    assert_eq!(corpus_spec.words, corpus_nospec.words);
    assert_eq!(corpus_spec.expected, corpus_nospec.expected);
    assert!(testgen::roundtrip(&tc_nospec.spec, &corpus_nospec.words, &corpus_nospec.expected)
        .is_empty());

    // Criterion 2 flow.
    let covered = abort_check(&tc_nospec.oracle(), &tc_nospec, "no-specialize");
    assert!(covered >= 20);

    // Criterion 6 flow: final states equal across the two pipelines.
    for name in bench::BENCHMARKS {
        let program = bench::benchmark(&tc.pipeline.base, name).unwrap();
        let oracle_spec = tc.oracle();
        let oracle_nospec = tc_nospec.oracle();
        let cfg = RunConfig {
            max_insns: 10_000_000,
            trace: false,
            use_cache: true,
        };
        let mut a = Simulator::new(&oracle_spec, program.boot(), cfg);
        let ra = a.run();
        let mut b = Simulator::new(&oracle_nospec, program.boot(), cfg);
        let rb = b.run();
        assert_eq!(ra.stop, rb.stop, "{name}");
        assert_eq!(ra.executed, rb.executed, "{name}");
        assert!(a.cpu.arch_eq(&b.cpu), "{name}: --no-specialize changed the result");
    }
    pass(
        8,
        "--no-specialize changes no architectural result on the round-trip, abort, and benchmark flows",
    );
}

// -- 9. pre-computation soundness ----------------------------------------------------

#[test]
fn criterion_9_transfer_size_exhaustive() {
    let start = Instant::now();
    let tc = toolchain();
    let ldm = tc
        .pipeline
        .base
        .iter()
        .find(|f| f.name == "LDM_ia")
        .unwrap();
    let (_, rule) = ldm
        .precompute
        .iter()
        .find(|(n, _)| n == "nb_reg_x4")
        .expect("transfer-size rule present");
    for reglist in 0..=0xFFFFu32 {
        let env = |n: &str| (n == "reglist").then_some(reglist);
        assert_eq!(
            issforge_core::ir::eval::eval_pure(rule, &env),
            Some(4 * reglist.count_ones()),
            "reglist {reglist:#06x}"
        );
    }
    let elapsed = start.elapsed().as_secs_f64();
    assert!(elapsed < 1.0, "exhaustive check took {elapsed:.2}s");
    pass(
        9,
        &format!("nb_reg_x4 equals 4 x popcount for all 65536 register lists in {elapsed:.2}s"),
    );
}
