//! May-branch analysis over the bundled corpus.

use issforge_core::analysis::{eval_condition, may_branch};
use issforge_core::corpus;
use issforge_core::ir::printer::print_expr;
use issforge_core::ir::types::FlatInstruction;
use issforge_core::ir::Expr;
use issforge_core::isa;
use issforge_core::transforms::{self, pipeline};

fn prepared() -> (Vec<FlatInstruction>, Vec<(String, isa::BranchOverride)>) {
    let (src, desc, _) = isa::load_corpus(corpus::bundled_dir()).unwrap();
    let desc = pipeline::rewrite_all(&desc).unwrap();
    let flats: Vec<FlatInstruction> = transforms::flatten(&desc)
        .unwrap()
        .iter()
        .map(|f| transforms::move_writeback(f).unwrap())
        .collect();
    (flats, src.override_table().unwrap())
}

fn condition(name: &str) -> String {
    let (flats, overrides) = prepared();
    let flat = flats.iter().find(|f| f.name == name).unwrap();
    print_expr(&may_branch(flat, &overrides).condition)
}

#[test]
fn ldr_pre_indexed_simplifies_to_d_equals_15() {
    // Contributions: n==15 from the base write-back, d==15 from the PC
    // branch of the load, false from the else side; the mode's n != 15
    // constraint removes the first.
    assert_eq!(condition("LDR_pre_reg"), "d == 15");
}

#[test]
fn contributions_match_the_analysis_walkthrough() {
    let (flats, _) = prepared();
    let flat = flats.iter().find(|f| f.name == "LDR_pre_reg").unwrap();
    let report = may_branch(flat, &[]);
    let conds: Vec<String> = report
        .contributions
        .iter()
        .map(|c| format!("{}: {}", c.lvalue, print_expr(&c.condition)))
        .collect();
    assert_eq!(conds.len(), 3, "{conds:?}");
    assert!(conds[0].starts_with("PC:"), "{conds:?}");
    assert!(conds[0].contains("d == 15"), "{conds:?}");
    assert!(conds[1].starts_with("Rd:"), "{conds:?}");
    assert!(conds[2].starts_with("Rn:"), "{conds:?}");
    assert!(conds[2].contains("n == 15"), "{conds:?}");
}

#[test]
fn branches_are_always_terminators() {
    assert_eq!(condition("B"), "1");
    assert_eq!(condition("BL"), "1");
    // And the analyser reaches the same verdict without the override.
    let (flats, _) = prepared();
    let b = flats.iter().find(|f| f.name == "B").unwrap();
    let auto = may_branch(b, &[]);
    assert!(!auto.overridden);
    assert_eq!(print_expr(&auto.condition), "1");
}

#[test]
fn halt_needs_its_override() {
    let (flats, overrides) = prepared();
    let halt = flats.iter().find(|f| f.name == "HALT").unwrap();
    let auto = may_branch(halt, &[]);
    assert_eq!(auto.auto_condition, Expr::Num(0));
    let with = may_branch(halt, &overrides);
    assert!(with.overridden);
    assert_eq!(with.condition, Expr::Num(1));
}

#[test]
fn load_multiple_terminates_on_pc_in_list() {
    assert_eq!(condition("LDM_ia"), "reglist[15] == 1");
    assert_eq!(condition("LDM_db"), "reglist[15] == 1");
    assert_eq!(condition("LDMX_ia"), "reglist[15] == 1");
}

#[test]
fn stores_and_compares_never_branch() {
    assert_eq!(condition("STM_ia"), "0");
    assert_eq!(condition("SRS_ia"), "0");
    assert_eq!(condition("CMP_imm"), "0");
    assert_eq!(condition("STR_off_imm"), "0");
    // MUL writes Rd, but Rd != 15 is a validity constraint.
    assert_eq!(condition("MUL"), "0");
    assert_eq!(condition("LDRB_off_imm"), "0");
}

#[test]
fn data_processing_branches_when_rd_is_pc() {
    assert_eq!(condition("AND_lsl_imm"), "d == 15");
    assert_eq!(condition("ADC_imm"), "d == 15");
    assert_eq!(condition("MOV_lsr_imm"), "d == 15");
    assert_eq!(condition("UXTAH"), "d == 15");
    assert_eq!(condition("LDRBT"), "d == 15");
}

#[test]
fn exception_return_always_branches() {
    assert_eq!(condition("RFE_ia"), "1");
    assert_eq!(condition("RFE_db"), "1");
}

#[test]
fn conditions_are_decode_time_evaluable() {
    let (flats, overrides) = prepared();
    for flat in &flats {
        let report = may_branch(flat, &overrides);
        assert!(report.warnings.is_empty(), "{}: {:?}", flat.name, report.warnings);
        // Probe evaluation with every parameter set to an arbitrary value:
        // evaluable means eval_pure never needs processor state.
        let env = |name: &str| {
            flat.decode_values()
                .iter()
                .any(|p| p == name)
                .then_some(7u32)
        };
        let v = issforge_core::ir::eval::eval_pure(&report.condition, &env);
        assert!(v.is_some(), "{}: {}", flat.name, print_expr(&report.condition));
        let _ = eval_condition(&report.condition, &env);
    }
}

#[test]
fn uxth_condition_uses_the_decoded_rd() {
    let (flats, overrides) = prepared();
    let uxth = flats.iter().find(|f| f.name == "UXTH").unwrap();
    let report = may_branch(uxth, &overrides);
    let term = |d: u32| eval_condition(&report.condition, &|n| (n == "d").then_some(d));
    assert!(term(15));
    assert!(!term(3));
}
