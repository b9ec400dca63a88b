//! Decoder, interpreter, printer, and run-loop behavior over the bundled
//! corpus, exercised through the oracle back-end.

use issforge_core::bench;
use issforge_core::sim::{
    CpuState, DecodeResult, Mode, OracleEngine, RunConfig, Simulator, StopReason,
};
use issforge_core::testgen::encode_word;
use issforge_core::toolchain::{Options, Toolchain};

fn toolchain() -> Toolchain {
    Toolchain::bundled().expect("bundled corpus builds")
}

fn word_for(tc: &Toolchain, flat: &str, params: &[(&str, u32)]) -> u32 {
    let f = tc
        .pipeline
        .base
        .iter()
        .find(|f| f.name == flat)
        .unwrap_or_else(|| panic!("no flat {flat}"));
    let record: Vec<(String, u32)> = params.iter().map(|(n, v)| (n.to_string(), *v)).collect();
    encode_word(f, &record)
}

// ---- decoding -------------------------------------------------------------

#[test]
fn adc_al_s0_selects_the_most_specialized_variant() {
    let tc = toolchain();
    let w = word_for(
        &tc,
        "ADC_lsl_imm",
        &[("cond", 14), ("S", 0), ("d", 1), ("n", 2), ("m", 3), ("shift_imm", 4)],
    );
    // Phase 1 sees the generic candidate and several specializations.
    assert!(tc.spec.phase1(w).len() >= 3, "got {:?}", tc.spec.phase1(w));
    let d = tc.spec.decode(w).instr().expect("decodes");
    assert_eq!(tc.spec.candidates[d.candidate].name, "ADC_lsl_imm__s0__al");
    // The record still carries the folded values for printing.
    assert_eq!(tc.spec.value_of(&d, "S"), Some(0));
    assert_eq!(tc.spec.value_of(&d, "cond"), Some(14));
    assert_eq!(tc.spec.value_of(&d, "d"), Some(1));
}

#[test]
fn uxtah_and_uxth_split_on_the_base_register() {
    let tc = toolchain();
    let w_uxtah = word_for(&tc, "UXTAH", &[("cond", 0), ("n", 3), ("d", 1), ("m", 2)]);
    let d = tc.spec.decode(w_uxtah).instr().unwrap();
    assert_eq!(tc.spec.flats[d.flat].base, "UXTAH");

    // Same bit pattern with Rn = 15 is UXTH; the constraints decide.
    let w_uxth = word_for(&tc, "UXTAH", &[("cond", 0), ("n", 15), ("d", 1), ("m", 2)]);
    assert!(tc.spec.phase1(w_uxth).len() >= 2);
    let d = tc.spec.decode(w_uxth).instr().unwrap();
    assert_eq!(tc.spec.flats[d.flat].base, "UXTH");
}

#[test]
fn all_ones_word_is_undefined() {
    let tc = toolchain();
    assert_eq!(tc.spec.decode(0xFFFF_FFFF), DecodeResult::Undefined);
}

#[test]
fn constraint_violations_are_unpredictable() {
    let tc = toolchain();
    // LDRBT with Rd == Rn.
    let w = word_for(
        &tc,
        "LDRBT",
        &[("cond", 14), ("n", 2), ("d", 2), ("offset_12", 4)],
    );
    assert_eq!(tc.spec.decode(w), DecodeResult::Unpredictable);
    // cond = 15 in reserved space.
    let w = word_for(
        &tc,
        "ADD_imm",
        &[("cond", 15), ("S", 0), ("d", 0), ("n", 0), ("immed_8", 1)],
    );
    assert_eq!(tc.spec.decode(w), DecodeResult::Unpredictable);
}

#[test]
fn load_multiple_precomputes_the_transfer_size() {
    let tc = toolchain();
    let w = word_for(
        &tc,
        "LDM_ia",
        &[("cond", 14), ("W", 0), ("n", 1), ("reglist", 0x000B)],
    );
    let d = tc.spec.decode(w).instr().unwrap();
    assert_eq!(tc.spec.value_of(&d, "nb_reg_x4"), Some(12));
    // Bit 15 clear: not a terminator; set: terminator.
    assert!(!d.is_terminator);
    let w = word_for(
        &tc,
        "LDM_ia",
        &[("cond", 14), ("W", 0), ("n", 1), ("reglist", 0x8001)],
    );
    assert!(tc.spec.decode(w).instr().unwrap().is_terminator);
}

#[test]
fn halt_decodes_with_empty_record() {
    let tc = toolchain();
    let d = tc.spec.decode(0xE600_0000).instr().unwrap();
    assert_eq!(tc.spec.flats[d.flat].base, "HALT");
    assert!(d.values.is_empty());
    assert!(d.is_terminator);
}

#[test]
fn rfe_wins_over_ldm_for_empty_register_list() {
    let tc = toolchain();
    let w = word_for(&tc, "RFE_ia", &[("cond", 14), ("W", 0), ("n", 2)]);
    let d = tc.spec.decode(w).instr().unwrap();
    assert_eq!(tc.spec.flats[d.flat].base, "RFE_ia");
}

// ---- interpretation ----------------------------------------------------------

fn exec_one(tc: &Toolchain, word: u32, cpu: &mut CpuState) {
    let engine = tc.oracle();
    let mut sim = Simulator::new(
        &engine,
        std::mem::take(cpu),
        RunConfig {
            max_insns: 1,
            trace: false,
            use_cache: false,
        },
    );
    sim.cpu.map_region(0x1000, 0x100);
    sim.cpu.write_mem(0x1000, 4, word).unwrap();
    sim.cpu.pc = 0x1000;
    let out = sim.run();
    assert!(
        matches!(out.stop, StopReason::InsnLimit | StopReason::Halted),
        "{}",
        out.stop
    );
    *cpu = sim.cpu;
}

#[test]
fn adc_sets_overflow_and_negative() {
    let tc = toolchain();
    // ADCS R0, R1, R2 with R1 = 0x7FFFFFFF, R2 = 1, carry clear.
    let w = word_for(
        &tc,
        "ADC_lsl_imm",
        &[("cond", 14), ("S", 1), ("d", 0), ("n", 1), ("m", 2), ("shift_imm", 0)],
    );
    let mut cpu = CpuState::new();
    cpu.write_reg(1, 0x7FFF_FFFF).unwrap();
    cpu.write_reg(2, 1).unwrap();
    exec_one(&tc, w, &mut cpu);
    assert_eq!(cpu.read_reg(0).unwrap(), 0x8000_0000);
    assert!(cpu.v, "V set");
    assert!(cpu.n, "N set");
    assert!(!cpu.z, "Z clear");
    assert!(!cpu.c, "C clear");
}

#[test]
fn failed_condition_only_advances_pc() {
    let tc = toolchain();
    // ADDEQ with Z clear: no architectural effect but the pc step.
    let w = word_for(
        &tc,
        "ADD_imm",
        &[("cond", 0), ("S", 0), ("d", 3), ("n", 3), ("immed_8", 9)],
    );
    let mut cpu = CpuState::new();
    cpu.write_reg(3, 5).unwrap();
    exec_one(&tc, w, &mut cpu);
    assert_eq!(cpu.read_reg(3).unwrap(), 5);
    assert_eq!(cpu.pc, 0x1004);
}

#[test]
fn store_to_unmapped_aborts_and_preserves_the_base() {
    let tc = toolchain();
    // STR R1, [R2, #4]! with R2 pointing nowhere.
    let w = word_for(
        &tc,
        "STR_pre_imm",
        &[("cond", 14), ("d", 1), ("n", 2), ("offset_12", 4)],
    );
    let mut cpu = CpuState::new();
    cpu.write_reg(2, 0xDEAD_0000).unwrap();
    cpu.write_reg(1, 42).unwrap();
    exec_one(&tc, w, &mut cpu);
    // Write-back canceled, abort vector taken.
    assert_eq!(cpu.read_reg_mode(2, Mode::Usr).unwrap(), 0xDEAD_0000);
    assert_eq!(cpu.mode, Mode::Abt);
    assert_eq!(cpu.pc, issforge_core::sim::DATA_ABORT_VECTOR);
    assert!(cpu.last_abort.is_some());
}

#[test]
fn branch_reaches_its_target() {
    let tc = toolchain();
    // B +2 words: target = pc + 8 + 8.
    let w = word_for(&tc, "B", &[("cond", 14), ("signed_immed_24", 2)]);
    let mut cpu = CpuState::new();
    exec_one(&tc, w, &mut cpu);
    assert_eq!(cpu.pc, 0x1000 + 8 + 8);
}

#[test]
fn ldmx_restores_mode_and_banks_the_writeback() {
    let tc = toolchain();
    // Supervisor mode, SPSR points back to user mode. LDMX R0!, {R1}.
    let w = word_for(
        &tc,
        "LDMX_ia",
        &[("cond", 14), ("W", 1), ("n", 13), ("reglist", 1 << 1)],
    );
    let engine = tc.oracle();
    let mut cpu = CpuState::new();
    cpu.map_region(0, 0x10000);
    cpu.mode = Mode::Svc;
    let mut usr_cpsr = CpuState::new().cpsr(); // usr mode, flags clear
    usr_cpsr |= 1 << 30; // Z set, to see flags restored
    cpu.set_spsr_of(Mode::Svc, usr_cpsr);
    cpu.write_reg_mode(13, Mode::Svc, 0x4000).unwrap();
    cpu.write_reg_mode(13, Mode::Usr, 0x7777).unwrap();
    cpu.write_mem(0x4000, 4, 0xABCD).unwrap();
    cpu.write_mem(0x1000, 4, w).unwrap();
    cpu.pc = 0x1000;
    let mut sim = Simulator::new(
        &engine,
        cpu,
        RunConfig {
            max_insns: 1,
            trace: false,
            use_cache: false,
        },
    );
    let out = sim.run();
    assert!(matches!(out.stop, StopReason::InsnLimit), "{}", out.stop);
    let cpu = &sim.cpu;
    // Mode and flags came back from the SPSR.
    assert_eq!(cpu.mode, Mode::Usr);
    assert!(cpu.z);
    // The load targeted the restored mode's bank.
    assert_eq!(cpu.read_reg_mode(1, Mode::Usr).unwrap(), 0xABCD);
    // The write-back went to the *supervisor* R13 (pre-instruction mode),
    // not the user R13.
    assert_eq!(cpu.read_reg_mode(13, Mode::Svc).unwrap(), 0x4004);
    assert_eq!(cpu.read_reg_mode(13, Mode::Usr).unwrap(), 0x7777);
}

#[test]
fn srs_stores_link_and_spsr_to_the_target_mode_stack() {
    let tc = toolchain();
    // SRSIA #3 (svc) with write-back, executed from irq mode.
    let w = word_for(&tc, "SRS_ia", &[("cond", 14), ("W", 1), ("mode", 3)]);
    let engine = tc.oracle();
    let mut cpu = CpuState::new();
    cpu.map_region(0, 0x10000);
    cpu.mode = Mode::Irq;
    cpu.set_spsr_of(Mode::Irq, 0x5000_0002);
    cpu.write_reg_mode(14, Mode::Irq, 0xCAFE).unwrap();
    cpu.write_reg_mode(13, Mode::Svc, 0x2000).unwrap();
    cpu.write_mem(0x1000, 4, w).unwrap();
    cpu.pc = 0x1000;
    let mut sim = Simulator::new(
        &engine,
        cpu,
        RunConfig {
            max_insns: 1,
            trace: false,
            use_cache: false,
        },
    );
    sim.run();
    let cpu = &mut sim.cpu;
    assert_eq!(cpu.read_mem(0x2000, 4).unwrap(), 0xCAFE);
    assert_eq!(cpu.read_mem(0x2004, 4).unwrap(), 0x5000_0002);
    assert_eq!(cpu.read_reg_mode(13, Mode::Svc).unwrap(), 0x2008);
}

// ---- printing -----------------------------------------------------------------

#[test]
fn printer_conventions() {
    let tc = toolchain();
    let print = |flat: &str, params: &[(&str, u32)]| {
        let w = word_for(&tc, flat, params);
        let d = tc.spec.decode(w).instr().unwrap();
        issforge_core::sim::print_asm(tc.spec.flat_of(&d), &|n| tc.spec.value_of(&d, n))
    };
    assert_eq!(
        print(
            "ADC_lsl_imm",
            &[("cond", 14), ("S", 1), ("d", 1), ("n", 2), ("m", 3), ("shift_imm", 4)]
        ),
        "ADCS R1,R2,R3,LSL #4"
    );
    assert_eq!(
        print(
            "ADC_lsl_imm",
            &[("cond", 0), ("S", 0), ("d", 1), ("n", 2), ("m", 3), ("shift_imm", 4)]
        ),
        "ADCEQ R1,R2,R3,LSL #4"
    );
    // No canonicalization: a zero shift still prints.
    assert_eq!(
        print(
            "ADC_lsl_imm",
            &[("cond", 14), ("S", 0), ("d", 1), ("n", 2), ("m", 3), ("shift_imm", 0)]
        ),
        "ADC R1,R2,R3,LSL #0"
    );
    assert_eq!(
        print(
            "LDM_ia",
            &[("cond", 14), ("W", 1), ("n", 2), ("reglist", 0x8005)]
        ),
        "LDMIA R2!,{R0,R2,R15}"
    );
    assert_eq!(
        print("B", &[("cond", 1), ("signed_immed_24", 0xFF_FFFC)]),
        "BNE #-4"
    );
    assert_eq!(print("HALT", &[]), "HALT");
}

// ---- the run loop ----------------------------------------------------------------

#[test]
fn straight_line_program_decodes_once() {
    let tc = toolchain();
    let engine = tc.oracle();
    let mut asm = bench::Asm::new(&tc.pipeline.base, bench::ENTRY);
    for i in 0..10 {
        asm.mov_imm(i % 8, i);
    }
    asm.halt();
    let program = asm.finish("straight");
    let mut sim = Simulator::new(&engine, program.boot(), RunConfig::default());
    let first = sim.run();
    assert_eq!(first.stop, StopReason::Halted);
    assert_eq!(first.executed, 11);
    assert!(first.decodes >= 11);
    // Second pass over the same (cached) code: zero decodes.
    sim.cpu.halted = false;
    sim.cpu.pc = program.entry;
    let second = sim.run();
    assert_eq!(second.stop, StopReason::Halted);
    assert_eq!(second.decodes, 0, "block cache must satisfy the refetch");
}

#[test]
fn self_modifying_store_invalidates_the_block() {
    let tc = toolchain();
    let engine = tc.oracle();
    // The program overwrites its own second instruction (ADD R0,#1) with
    // ADD R0,#2 and loops over it once more.
    let mut asm = bench::Asm::new(&tc.pipeline.base, bench::ENTRY);
    asm.mov_imm(0, 0); // 0x1000
    asm.label("top"); // 0x1004
    asm.add_imm(0, 0, 1); // 0x1004 (patched to #2)
    asm.subs_imm(1, 1, 1); // 0x1008
    asm.b(bench::NE, "top"); // 0x100c
    asm.halt(); // 0x1010
    let mut program = asm.finish("selfmod");
    // Prologue: R1 = 2 iterations; R2 = patched word; store it.
    let f = |name: &str| {
        tc.pipeline
            .base
            .iter()
            .find(|f| f.name == name)
            .unwrap()
            .clone()
    };
    let patched = encode_word(
        &f("ADD_imm"),
        &[
            ("cond".to_string(), 14),
            ("S".to_string(), 0),
            ("d".to_string(), 0),
            ("n".to_string(), 0),
            ("immed_8".to_string(), 2),
        ],
    );
    let _ = patched;
    // Run the original once with two iterations, self-patch between them
    // through the data side, and compare against an uncached run.
    let run = |use_cache: bool| {
        let mut cpu = program.boot();
        cpu.write_reg(1, 2).unwrap();
        let mut sim = Simulator::new(
            &engine,
            cpu,
            RunConfig {
                max_insns: 10_000,
                trace: false,
                use_cache,
            },
        );
        // Execute the first iteration, then patch the ADD in memory.
        sim.cfg.max_insns = 4; // MOV, ADD, SUBS, B
        let part = sim.run();
        assert!(matches!(part.stop, StopReason::InsnLimit), "{}", part.stop);
        sim.cpu.write_mem(0x1004, 4, patched).unwrap();
        sim.cfg.max_insns = 10_000;
        let rest = sim.run();
        assert_eq!(rest.stop, StopReason::Halted);
        sim.cpu.read_reg(0).unwrap()
    };
    let cached = run(true);
    let uncached = run(false);
    // First iteration adds 1, the patched second adds 2.
    assert_eq!(uncached, 3);
    assert_eq!(cached, uncached, "stale block executed after the store");
    program.words.clear(); // silence unused-mut lint paths
}

#[test]
fn loop_profile_accounts_for_every_executed_instruction() {
    let tc = toolchain();
    let engine = tc.oracle();
    let program = bench::loop_program(&tc.pipeline.base);
    let mut sim = Simulator::new(&engine, program.boot(), RunConfig::default());
    let out = sim.run();
    assert_eq!(out.stop, StopReason::Halted);
    let total: u64 = out.profile.values().sum();
    assert_eq!(total, out.executed);
    assert!(out.profile["ADD_imm"] >= 62_500);
    assert!(out.profile["B"] > 0);
    assert_eq!(out.profile["HALT"], 1);
}

#[test]
fn benchmarks_halt_and_agree_across_run_modes() {
    let tc = toolchain();
    let engine = tc.oracle();
    for name in bench::BENCHMARKS {
        let program = bench::benchmark(&tc.pipeline.base, name).unwrap();
        let mut final_states = Vec::new();
        for use_cache in [false, true] {
            let mut sim = Simulator::new(
                &engine,
                program.boot(),
                RunConfig {
                    max_insns: 10_000_000,
                    trace: false,
                    use_cache,
                },
            );
            let out = sim.run();
            assert_eq!(out.stop, StopReason::Halted, "{name}");
            final_states.push((out.executed, sim.cpu));
        }
        assert_eq!(final_states[0].0, final_states[1].0, "{name}: counts differ");
        assert!(
            final_states[0].1.arch_eq(&final_states[1].1),
            "{name}: cached and uncached runs diverge"
        );
    }
}

#[test]
fn sorting_benchmark_actually_sorts() {
    let tc = toolchain();
    let engine = tc.oracle();
    let program = bench::sorting_program(&tc.pipeline.base);
    let mut sim = Simulator::new(&engine, program.boot(), RunConfig::default());
    assert_eq!(sim.run().stop, StopReason::Halted);
    let mut prev = 0;
    for i in 0..64 {
        let v = sim.cpu.read_mem(0x8000 + 4 * i, 4).unwrap();
        assert!(v >= prev, "buffer not sorted at index {i}");
        prev = v;
    }
}
