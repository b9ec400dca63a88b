//! Differential properties of the transform pipeline, checked against the
//! tree interpreter with randomized states and constraint-valid parameters.

use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

use issforge_core::analysis::{eval_condition, may_branch};
use issforge_core::corpus;
use issforge_core::ir::types::FlatInstruction;
use issforge_core::isa;
use issforge_core::sim::{interpret, CpuState, Mode};
use issforge_core::testgen::enumerate_valid;
use issforge_core::toolchain::Toolchain;
use issforge_core::transforms::{self, pipeline};

const MEM_LIMIT: u32 = 0x0004_0000;

/// Random state whose register values keep every address computation inside
/// the mapped window, so differential runs never abort by accident.
fn random_state(rng: &mut ChaCha8Rng) -> CpuState {
    let mut cpu = CpuState::new();
    cpu.map_region(0, MEM_LIMIT);
    for i in 0..13 {
        cpu.write_reg_mode(i, Mode::Usr, rng.random_range(0..0x1F000)).unwrap();
    }
    for m in Mode::ALL {
        cpu.write_reg_mode(13, m, rng.random_range(0..0x1F000)).unwrap();
        cpu.write_reg_mode(14, m, rng.random_range(0..0x1F000)).unwrap();
        // SPSRs hold valid CPSR values (random flags, valid mode).
        let flags = (rng.random::<u32>() & 0xF) << 28;
        let mode = rng.random_range(0..6);
        cpu.set_spsr_of(m, flags | mode);
    }
    cpu.pc = 0x1000 + 4 * rng.random_range(0..64);
    cpu.n = rng.random_bool(0.5);
    cpu.z = rng.random_bool(0.5);
    cpu.c = rng.random_bool(0.5);
    cpu.v = rng.random_bool(0.5);
    cpu.mode = Mode::ALL[rng.random_range(0..6)];
    // Scatter some data for loads to find.
    for _ in 0..64 {
        let addr = rng.random_range(0..(MEM_LIMIT - 4)) & !3;
        cpu.write_mem(addr, 4, rng.random::<u32>() & 0x1_FFFF).unwrap();
    }
    cpu.mem_trace = Some(Vec::new());
    cpu
}

fn record_of(flat: &FlatInstruction, inst: &issforge_core::testgen::Instance) -> Vec<(String, u32)> {
    issforge_core::testgen::enumerate::full_record(flat, inst)
        .into_iter()
        .collect()
}

fn exec(
    flat: &FlatInstruction,
    record: &[(String, u32)],
    cpu: &mut CpuState,
) -> Result<issforge_core::sim::Outcome, issforge_core::sim::Fault> {
    let lookup = |name: &str| record.iter().find(|(n, _)| n == name).map(|(_, v)| *v);
    interpret(flat, &lookup, cpu)
}

fn assert_equivalent(
    label: &str,
    a_flat: &FlatInstruction,
    a_rec: &[(String, u32)],
    b_flat: &FlatInstruction,
    b_rec: &[(String, u32)],
    states: usize,
    seed: u64,
) {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for round in 0..states {
        let start = random_state(&mut rng);
        let mut a = start.clone();
        let mut b = start;
        let ra = exec(a_flat, a_rec, &mut a);
        let rb = exec(b_flat, b_rec, &mut b);
        match (ra, rb) {
            (Ok(_), Ok(_)) => {
                assert!(
                    a.arch_eq(&b),
                    "{label}: state divergence on round {round} ({} vs {})",
                    a_flat.name,
                    b_flat.name
                );
                assert_eq!(
                    a.mem_trace, b.mem_trace,
                    "{label}: memory trace divergence on round {round}"
                );
            }
            // A faulting execution (bad CPSR image loaded by an
            // exception-return) must fault the same way on both sides; the
            // equivalence claim itself only covers completed executions.
            (Err(ea), Err(eb)) => {
                assert_eq!(ea, eb, "{label}: fault divergence on round {round}")
            }
            (ra, rb) => panic!(
                "{label}: fault asymmetry on round {round}: {ra:?} vs {rb:?} ({} vs {})",
                a_flat.name, b_flat.name
            ),
        }
    }
}

/// Write-back motion: the relocated assignment behaves exactly like the
/// original for every execution that does not abort, excluding the
/// load/store-multiple assignments whose base is also a transfer register
/// (the relocation defines those; the pre-move tree is an intermediate).
#[test]
fn move_writeback_preserves_semantics() {
    let (_, desc, _) = isa::load_corpus(corpus::bundled_dir()).unwrap();
    let desc = pipeline::rewrite_all(&desc).unwrap();
    let flats = transforms::flatten(&desc).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for flat in &flats {
        let moved = transforms::move_writeback(flat).unwrap();
        if moved.ast == flat.ast {
            continue;
        }
        let writes_base_aliased = |rec: &[(String, u32)]| {
            let n = rec.iter().find(|(k, _)| k == "n").map(|(_, v)| *v);
            let w = rec.iter().find(|(k, _)| k == "W").map(|(_, v)| *v);
            let reglist = rec.iter().find(|(k, _)| k == "reglist").map(|(_, v)| *v);
            match (n, w, reglist) {
                (Some(n), w, Some(rl)) => w.unwrap_or(1) == 1 && (rl >> n) & 1 == 1,
                _ => false,
            }
        };
        let pool = enumerate_valid(flat, 64).unwrap();
        let mut tested = 0;
        let mut guard = 0;
        while tested < 20 {
            let inst = &pool[rng.random_range(0..pool.len())];
            let rec = record_of(flat, inst);
            guard += 1;
            if guard > 10_000 {
                panic!("{}: no alias-free assignment found", flat.name);
            }
            if writes_base_aliased(&rec) {
                continue;
            }
            assert_equivalent("move_writeback", flat, &rec, &moved, &rec, 50, 17 + tested);
            tested += 1;
        }
    }
}

/// Pre-computation: decode-time values substitute exactly for the hoisted
/// expressions.
#[test]
fn precompute_preserves_semantics() {
    let tc = Toolchain::bundled().unwrap();
    let (_, desc, _) = isa::load_corpus(corpus::bundled_dir()).unwrap();
    let desc = pipeline::rewrite_all(&desc).unwrap();
    let before: Vec<FlatInstruction> = transforms::flatten(&desc)
        .unwrap()
        .iter()
        .map(|f| transforms::move_writeback(f).unwrap())
        .collect();
    let mut rng = ChaCha8Rng::seed_from_u64(23);
    for flat in &tc.pipeline.base {
        if flat.precompute.is_empty() {
            continue;
        }
        let pre = before.iter().find(|f| f.name == flat.name).unwrap();
        let pool = enumerate_valid(flat, 64).unwrap();
        for round in 0..20 {
            let inst = &pool[rng.random_range(0..pool.len())];
            let rec = record_of(flat, inst);
            assert_equivalent("precompute", pre, &rec, flat, &rec, 50, 100 + round);
        }
    }
}

/// Specialization: each variant equals the generic version whenever the
/// variant's selection predicate holds.
#[test]
fn specialized_variants_match_the_generic() {
    let tc = Toolchain::bundled().unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(37);
    for variant in &tc.pipeline.decoder {
        if variant.specialization.is_empty() {
            continue;
        }
        let generic = tc
            .pipeline
            .base
            .iter()
            .find(|f| f.name == variant.base)
            .unwrap();
        let pool = enumerate_valid(generic, 64).unwrap();
        for round in 0..10 {
            let inst = &pool[rng.random_range(0..pool.len())];
            // Force the parameters onto the variant's predicate.
            let mut forced = inst.clone();
            for (name, value) in &variant.specialization {
                if let Some(slot) = forced.params.iter_mut().find(|(n, _)| n == name) {
                    slot.1 = *value;
                }
            }
            let rec = record_of(generic, &forced);
            assert_equivalent(
                "specialize",
                generic,
                &rec,
                variant,
                &rec,
                30,
                200 + round,
            );
        }
    }
}

/// Flattening itself is a syntactic splice: mode statements, then the
/// instruction statements.
#[test]
fn flattening_is_prefix_plus_body() {
    let (_, desc, _) = isa::load_corpus(corpus::bundled_dir()).unwrap();
    let desc = pipeline::rewrite_all(&desc).unwrap();
    for flat in transforms::flatten(&desc).unwrap() {
        let instr = desc.instruction(&flat.instr).unwrap();
        let body = &flat.ast.stmts[flat.mode_prefix_len..];
        assert_eq!(body, instr.ast.stmts.as_slice(), "{}", flat.name);
        if let Some(mode_name) = &flat.mode {
            let mode = desc.mode(mode_name).unwrap();
            if instr.patch.is_none() {
                assert_eq!(
                    &flat.ast.stmts[..flat.mode_prefix_len],
                    mode.ast.stmts.as_slice(),
                    "{}",
                    flat.name
                );
            }
        }
    }
}

/// Data-abort regression: for every flat instruction that touches memory, a
/// faulting access leaves every general register of the pre-instruction
/// mode bit-exact unchanged (the base register in particular).
#[test]
fn aborted_accesses_cancel_the_writeback() {
    let tc = Toolchain::bundled().unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(41);
    let mut covered = 0;
    for flat in &tc.pipeline.base {
        let touches_memory = flat.ast.any_expr(&|e| matches!(e, issforge_core::ir::Expr::Memory { .. }))
            || flat.ast.any_stmt(&|s| {
                matches!(s, issforge_core::ir::Stmt::Call { proc, .. }
                    if proc == "LoadMultiple" || proc == "StoreMultiple")
            });
        if !touches_memory {
            continue;
        }
        covered += 1;
        let pool = enumerate_valid(flat, 64).unwrap();
        for _ in 0..10 {
            let inst = &pool[rng.random_range(0..pool.len())];
            let mut rec = record_of(flat, inst);
            // Make the condition pass so the access actually happens.
            if let Some(c) = rec.iter_mut().find(|(n, _)| n == "cond") {
                c.1 = 14;
            }
            // No mapped memory at all: the first access aborts.
            let mut cpu = CpuState::new();
            let before_mode = Mode::Svc;
            cpu.mode = before_mode;
            for i in 0..15 {
                cpu.write_reg_mode(i, before_mode, rng.random::<u32>()).unwrap();
            }
            for m in Mode::ALL {
                cpu.set_spsr_of(m, (rng.random::<u32>() & 0xF000_0000) | 3);
            }
            let snapshot = cpu.clone();
            let lookup = |name: &str| rec.iter().find(|(n, _)| n == name).map(|(_, v)| *v);
            let outcome = interpret(flat, &lookup, &mut cpu).unwrap();
            assert!(
                matches!(outcome, issforge_core::sim::Outcome::Aborted { .. }),
                "{}: expected an abort with no memory mapped",
                flat.name
            );
            for i in 0..15 {
                assert_eq!(
                    cpu.read_reg_mode(i, before_mode).unwrap(),
                    snapshot.read_reg_mode(i, before_mode).unwrap(),
                    "{}: R{i} changed across an aborted access",
                    flat.name
                );
            }
            assert_eq!(cpu.mode, Mode::Abt);
        }
    }
    assert!(covered >= 20, "only {covered} memory instructions covered");
}

/// May-branch soundness: no false negatives. When the decode-time condition
/// is false, execution never moves the PC.
#[test]
fn may_branch_has_no_false_negatives() {
    let tc = Toolchain::bundled().unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(53);
    let mut checked: u64 = 0;
    let per_flat_pool: Vec<(usize, Vec<issforge_core::testgen::Instance>)> = tc
        .pipeline
        .base
        .iter()
        .enumerate()
        .map(|(i, f)| (i, enumerate_valid(f, 128).unwrap()))
        .collect();
    while checked < 100_000 {
        let (fi, pool) = &per_flat_pool[rng.random_range(0..per_flat_pool.len())];
        let flat = &tc.pipeline.base[*fi];
        let inst = &pool[rng.random_range(0..pool.len())];
        let rec = record_of(flat, inst);
        let lookup = |name: &str| rec.iter().find(|(n, _)| n == name).map(|(_, v)| *v);
        let condition = flat.may_branch.as_ref().unwrap();
        if eval_condition(condition, &lookup) {
            continue; // only the may-branch = false side is a soundness claim
        }
        let mut cpu = random_state(&mut rng);
        cpu.mem_trace = None;
        let pc_before = cpu.pc;
        match interpret(flat, &lookup, &mut cpu) {
            Ok(issforge_core::sim::Outcome::Completed) => {
                assert!(
                    !cpu.pc_written && cpu.pc == pc_before,
                    "{}: PC moved although may-branch was false (params {:?})",
                    flat.name,
                    rec
                );
            }
            // Aborts vector by definition; they are exceptions, not branches,
            // and the run loop handles them through pc_written regardless.
            Ok(issforge_core::sim::Outcome::Aborted { .. }) => {}
            Err(e) => panic!("{}: {e}", flat.name),
        }
        checked += 1;
    }
}

/// The simplifier used on may-branch conditions is sound: the simplified
/// condition equals the raw disjunction for every constraint-valid
/// parameter assignment.
#[test]
fn simplified_conditions_agree_with_raw_contributions() {
    let tc = Toolchain::bundled().unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(61);
    for flat in &tc.pipeline.base {
        let report = may_branch(flat, &[]);
        let raw = report
            .contributions
            .iter()
            .map(|c| c.condition.clone())
            .fold(issforge_core::ir::Expr::Num(0), |acc, e| {
                issforge_core::ir::Expr::bin(issforge_core::ir::BinOp::Or, acc, e)
            });
        let pool = enumerate_valid(flat, 256).unwrap();
        for _ in 0..200.min(pool.len() * 4) {
            let inst = &pool[rng.random_range(0..pool.len())];
            let rec = record_of(flat, inst);
            let lookup = |name: &str| rec.iter().find(|(n, _)| n == name).map(|(_, v)| *v);
            assert_eq!(
                eval_condition(&raw, &lookup),
                eval_condition(&report.auto_condition, &lookup),
                "{}: simplify changed satisfiability for {:?}",
                flat.name,
                rec
            );
        }
    }
}

/// Decode-time register-count parameter: exhaustive over all 2^16 register
/// lists.
#[test]
fn nb_reg_x4_matches_popcount_exhaustively() {
    let tc = Toolchain::bundled().unwrap();
    let ldm = tc.pipeline.base.iter().find(|f| f.name == "LDM_ia").unwrap();
    let (name, rule) = ldm
        .precompute
        .iter()
        .find(|(n, _)| n == "nb_reg_x4")
        .expect("LDM_ia carries the transfer-size rule");
    assert_eq!(name, "nb_reg_x4");
    let start = std::time::Instant::now();
    for reglist in 0..=0xFFFFu32 {
        let env = |n: &str| (n == "reglist").then_some(reglist);
        assert_eq!(
            issforge_core::ir::eval::eval_pure(rule, &env),
            Some(4 * reglist.count_ones())
        );
    }
    assert!(
        start.elapsed().as_secs_f64() < 1.0,
        "exhaustive check exceeded one second"
    );
}
