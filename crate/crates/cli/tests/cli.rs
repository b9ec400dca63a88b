//! Command surface: every subcommand runs, exit codes follow the
//! no-errors/no-mismatches rule, and outputs are deterministic.

use std::path::PathBuf;
use std::process::Command;

fn issforge() -> Command {
    Command::new(env!("CARGO_BIN_EXE_issforge"))
}

fn temp_dir(tag: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("issforge-cli-{tag}-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    dir
}

#[test]
fn parse_dumps_the_corpus() {
    let out = issforge().arg("parse").output().unwrap();
    assert!(out.status.success());
    let text = String::from_utf8_lossy(&out.stdout);
    assert!(text.contains("Instruction ADC:"), "{text}");
    assert!(text.contains("parsed 23 instructions"), "{text}");
}

#[test]
fn unknown_subcommand_fails_with_usage() {
    let out = issforge().arg("frobnicate").output().unwrap();
    assert!(!out.status.success());
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(err.contains("Usage") || err.contains("usage"), "{err}");
}

#[test]
fn gen_tests_then_roundtrip_exits_zero() {
    let dir = temp_dir("roundtrip");
    let out = issforge()
        .args(["gen-tests", "--budget", "64"])
        .arg("--out-dir")
        .arg(&dir)
        .output()
        .unwrap();
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    assert!(dir.join("corpus.uisa").exists());
    assert!(dir.join("corpus.expected.asm").exists());

    let out = issforge()
        .arg("roundtrip")
        .arg("--dir")
        .arg(&dir)
        .arg("--json")
        .output()
        .unwrap();
    assert!(out.status.success());
    let report: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(report["mismatches"], 0);

    // Corrupt one expected line: nonzero exit and an exact report.
    let asm = dir.join("corpus.expected.asm");
    let mut lines: Vec<String> = std::fs::read_to_string(&asm)
        .unwrap()
        .lines()
        .map(String::from)
        .collect();
    lines[5] = "BOGUS".into();
    std::fs::write(&asm, lines.join("\n") + "\n").unwrap();
    let out = issforge()
        .arg("roundtrip")
        .arg("--dir")
        .arg(&dir)
        .arg("--json")
        .output()
        .unwrap();
    assert!(!out.status.success());
    let report: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(report["mismatches"], 1);
    assert_eq!(report["first_mismatches"][0]["index"], 5);

    std::fs::remove_dir_all(&dir).ok();
}

#[test]
fn sim_runs_an_image_and_emits_a_profile() {
    // Assemble the loop benchmark to a file through the library, then run
    // it through the CLI on both engines.
    let tc = issforge_core::toolchain::Toolchain::bundled().unwrap();
    let program = issforge_core::bench::loop_program(&tc.pipeline.base);
    let dir = temp_dir("sim");
    let image = dir.join("loop.uisa");
    std::fs::write(&image, program.image().to_bytes()).unwrap();
    let profile = dir.join("loop.profile");

    for engine in ["fast", "interp"] {
        let out = issforge()
            .arg("sim")
            .arg("--image")
            .arg(&image)
            .args(["--engine", engine])
            .arg("--emit-profile")
            .arg(&profile)
            .output()
            .unwrap();
        assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
        let text = String::from_utf8_lossy(&out.stdout);
        assert!(text.contains("halted"), "{text}");
        let profile_text = std::fs::read_to_string(&profile).unwrap();
        assert!(profile_text.contains("ADD_imm\t"), "{profile_text}");
    }
    std::fs::remove_dir_all(&dir).ok();
}

#[test]
fn sim_trace_prints_pc_and_assembly() {
    let tc = issforge_core::toolchain::Toolchain::bundled().unwrap();
    let mut asm = issforge_core::bench::Asm::new(&tc.pipeline.base, 0x1000);
    asm.mov_imm(1, 7);
    asm.halt();
    let program = asm.finish("tiny");
    let dir = temp_dir("trace");
    let image = dir.join("tiny.uisa");
    std::fs::write(&image, program.image().to_bytes()).unwrap();
    let out = issforge()
        .arg("sim")
        .arg("--image")
        .arg(&image)
        .arg("--trace")
        .output()
        .unwrap();
    assert!(out.status.success());
    let text = String::from_utf8_lossy(&out.stdout);
    assert!(text.contains("00001000: MOV R1,#7"), "{text}");
    assert!(text.contains("00001004: HALT"), "{text}");
    std::fs::remove_dir_all(&dir).ok();
}

#[test]
fn disasm_lists_the_image() {
    let tc = issforge_core::toolchain::Toolchain::bundled().unwrap();
    let mut asm = issforge_core::bench::Asm::new(&tc.pipeline.base, 0x1000);
    asm.add_imm(2, 3, 9);
    asm.halt();
    let program = asm.finish("tiny");
    let dir = temp_dir("disasm");
    let image = dir.join("tiny.uisa");
    std::fs::write(&image, program.image().to_bytes()).unwrap();
    let out = issforge()
        .arg("disasm")
        .arg("--image")
        .arg(&image)
        .output()
        .unwrap();
    assert!(out.status.success());
    let text = String::from_utf8_lossy(&out.stdout);
    assert!(text.contains("ADD R2,R3,#9"), "{text}");
    assert!(text.contains("HALT"), "{text}");
    std::fs::remove_dir_all(&dir).ok();
}

#[test]
fn gen_iss_reproduces_the_committed_crate() {
    let dir = temp_dir("geniss");
    let out = issforge()
        .arg("gen-iss")
        .arg("--out")
        .arg(&dir)
        .output()
        .unwrap();
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    let committed = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../uarm-iss");
    for rel in ["Cargo.toml", "src/lib.rs", "src/decoder.rs", "src/exec.rs", "src/params.rs", "src/printer.rs"] {
        let a = std::fs::read_to_string(dir.join(rel)).unwrap();
        let b = std::fs::read_to_string(committed.join(rel)).unwrap();
        assert_eq!(a, b, "{rel} differs from the committed crate");
    }
    std::fs::remove_dir_all(&dir).ok();
}

#[test]
fn pipeline_dump_maybranch_lists_conditions() {
    let out = issforge()
        .args(["pipeline", "--dump-maybranch"])
        .output()
        .unwrap();
    assert!(out.status.success());
    let text = String::from_utf8_lossy(&out.stdout);
    assert!(text.contains("LDR_pre_reg"), "{text}");
    assert!(text.lines().any(|l| l.starts_with("LDR_pre_reg") && l.contains("d == 15")), "{text}");
}

#[test]
fn profile_feeds_back_into_specialization() {
    // Produce a profile from the loop benchmark, then rerun the pipeline
    // with a threshold: only the hot instructions specialize.
    let tc = issforge_core::toolchain::Toolchain::bundled().unwrap();
    let program = issforge_core::bench::loop_program(&tc.pipeline.base);
    let dir = temp_dir("profile");
    let image = dir.join("loop.uisa");
    std::fs::write(&image, program.image().to_bytes()).unwrap();
    let profile = dir.join("loop.profile");
    let out = issforge()
        .arg("sim")
        .arg("--image")
        .arg(&image)
        .arg("--emit-profile")
        .arg(&profile)
        .output()
        .unwrap();
    assert!(out.status.success());

    let opts = issforge_core::toolchain::Options {
        profile: Some(profile),
        weight_threshold: Some(1000),
        ..Default::default()
    };
    let tc2 = issforge_core::toolchain::Toolchain::load(
        issforge_core::corpus::bundled_dir(),
        &opts,
    )
    .unwrap();
    // ADD_imm ran ~62500 times: specialized. LDR never ran: generic only.
    assert!(tc2.pipeline.decoder.iter().any(|f| f.name == "ADD_imm__s0__al"));
    assert!(!tc2
        .pipeline
        .decoder
        .iter()
        .any(|f| f.base == "LDR_off_imm" && f.name != "LDR_off_imm"));
    std::fs::remove_dir_all(&dir).ok();
}

#[test]
fn corpus_env_var_overrides_the_default() {
    // Point at a corpus copy with ADC's pseudo-code removed: the link error
    // must name the missing piece.
    let dir = temp_dir("envvar");
    for f in std::fs::read_dir(issforge_core::corpus::bundled_dir()).unwrap() {
        let f = f.unwrap();
        std::fs::copy(f.path(), dir.join(f.file_name())).unwrap();
    }
    let pc = dir.join("uarm.pc");
    let text = std::fs::read_to_string(&pc).unwrap();
    std::fs::write(&pc, text.replace("Instruction ADC:", "Instruction ADCX:")).unwrap();
    let out = issforge()
        .env("ISSFORGE_CORPUS", &dir)
        .arg("parse")
        .output()
        .unwrap();
    assert!(!out.status.success());
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(err.contains("ADC"), "{err}");
    std::fs::remove_dir_all(&dir).ok();
}
