//! Transform pipeline over the bundled corpus: flattening structure, merge
//! rules, parameter inference, and pipeline plumbing.

use issforge_core::corpus;
use issforge_core::ir::types::{FieldContent, FlatInstruction};
use issforge_core::isa;
use issforge_core::transforms::{self, pipeline, TransformConfig};

fn flats() -> Vec<FlatInstruction> {
    let (_, desc, _) = isa::load_corpus(corpus::bundled_dir()).unwrap();
    let desc = pipeline::rewrite_all(&desc).unwrap();
    transforms::flatten(&desc).unwrap()
}

fn find<'a>(flats: &'a [FlatInstruction], name: &str) -> &'a FlatInstruction {
    flats
        .iter()
        .find(|f| f.name == name)
        .unwrap_or_else(|| panic!("no flat named {name}"))
}

#[test]
fn flatten_count_is_the_mode_product() {
    let (_, desc, _) = isa::load_corpus(corpus::bundled_dir()).unwrap();
    let flats = flats();
    let expected: usize = desc
        .instructions
        .iter()
        .map(|i| i.modes.len().max(1))
        .sum();
    assert_eq!(flats.len(), expected);
    // With any multi-mode instruction present, flattening grows the corpus.
    assert!(flats.len() > desc.instructions.len());
}

#[test]
fn adc_lsl_imm_matches_the_golden_table() {
    let flats = flats();
    let adc = find(&flats, "ADC_lsl_imm");
    let golden = std::fs::read_to_string(
        std::path::Path::new(env!("CARGO_MANIFEST_DIR")).join("../../data/golden/adc_lsl_imm_flat.enc"),
    )
    .unwrap();
    assert_eq!(adc.encoding.render(), golden.trim_end());
}

#[test]
fn adc_lsl_imm_bit_structure() {
    let flats = flats();
    let t = &find(&flats, "ADC_lsl_imm").encoding;
    // Bit 25 became constant 0, the opcode stayed 0101, and the wide
    // shifter_operand field split into shift_imm / 000 / Rm.
    assert!(t
        .fields
        .iter()
        .any(|f| f.hi == 25 && f.lo == 25 && f.content == FieldContent::Const(0)));
    assert!(t
        .fields
        .iter()
        .any(|f| f.hi == 24 && f.lo == 21 && f.content == FieldContent::Const(0b0101)));
    let shift = t.param_field("shift_imm").unwrap();
    assert_eq!((shift.hi, shift.lo), (11, 7));
    let rm = t.param_field("Rm").unwrap();
    assert_eq!((rm.hi, rm.lo), (3, 0));
    assert!(t.param_field("shifter_operand").is_none());
}

#[test]
fn flattened_syntax_inlines_the_mode() {
    use issforge_core::ir::dump::render_syntax;
    let flats = flats();
    assert_eq!(
        render_syntax(&find(&flats, "ADC_lsl_imm").syntax),
        "ADC{<cond>}{S} <Rd>,<Rn>,<Rm>,LSL #<shift_imm>"
    );
    assert_eq!(
        render_syntax(&find(&flats, "LDM_ia").syntax),
        "LDM{<cond>}IA <Rn>{!:W},<reglist>"
    );
}

#[test]
fn merged_words_match_both_parents() {
    let (_, desc, _) = isa::load_corpus(corpus::bundled_dir()).unwrap();
    let flats = flats();
    // Any word matching the merged table matches both parent tables.
    for flat in &flats {
        let Some(mode_name) = &flat.mode else { continue };
        let instr = desc.instruction(&flat.instr).unwrap();
        let mode = desc.mode(mode_name).unwrap();
        let probe = flat.encoding.value(); // all-params-zero member
        assert!(flat.encoding.matches(probe));
        assert!(instr.encoding.matches(probe), "{}", flat.name);
        assert!(mode.encoding.matches(probe), "{}", flat.name);
        let probe2 = probe | !flat.encoding.mask(); // all-params-ones member
        assert!(instr.encoding.matches(probe2), "{}", flat.name);
        assert!(mode.encoding.matches(probe2), "{}", flat.name);
    }
}

#[test]
fn constraints_concatenate_across_the_pair() {
    let flats = flats();
    let ldr = find(&flats, "LDR_pre_reg");
    let texts: Vec<String> = ldr.constraints.iter().map(|c| c.to_string()).collect();
    assert!(texts.iter().any(|t| t.contains("cond != 15")), "{texts:?}");
    assert!(texts.iter().any(|t| t.contains("n != 15")), "{texts:?}");
    assert!(texts.iter().any(|t| t.contains("d != n")), "{texts:?}");
}

#[test]
fn srs_merge_exercises_both_merge_rules() {
    let flats = flats();
    let srs = find(&flats, "SRS_ia");
    let t = &srs.encoding;
    // Constant beats parameter: the base-register slot is 1101.
    assert!(t
        .fields
        .iter()
        .any(|f| f.hi == 19 && f.lo == 16 && f.content == FieldContent::Const(0b1101)));
    // Shorter parameter replaces longer: reglist gave way to 0s + mode.
    let mode_field = t.param_field("mode").unwrap();
    assert_eq!((mode_field.hi, mode_field.lo), (3, 0));
    assert!(t.param_field("reglist").is_none());
    // And the patched code no longer uses reglist either.
    assert!(!srs.params.iter().any(|p| p.name == "reglist"));
}

#[test]
fn rfe_patch_leaves_constant_transfer_size() {
    let flats = flats();
    let rfe = find(&flats, "RFE_ia");
    assert!(!rfe
        .ast
        .any_expr(&|e| matches!(e, issforge_core::ir::Expr::Fun { name, .. } if name == "NbOfSetBitsIn")));
}

#[test]
fn param_inference_ldm_ia() {
    let flats = flats();
    let ldm = find(&flats, "LDM_ia");
    let names: Vec<&str> = ldm.params.iter().map(|p| p.name.as_str()).collect();
    assert_eq!(names, vec!["cond", "W", "n", "reglist"]);
    assert!(ldm.locals.contains(&"start_address".to_string()));
    assert!(ldm.locals.contains(&"end_address".to_string()));
    assert!(ldm.locals.contains(&"new_base".to_string()));
}

#[test]
fn full_pipeline_runs_clean_and_specializes_everything() {
    let (src, desc, _) = isa::load_corpus(corpus::bundled_dir()).unwrap();
    let cfg = TransformConfig::from_file(&src.config_file().unwrap());
    let overrides = src.override_table().unwrap();
    let p = pipeline::run_pipeline(&desc, &cfg, &overrides, false).unwrap();
    assert!(p.warnings.is_empty(), "{:?}", p.warnings);
    assert!(p.decoder.len() > p.base.len());
    // Every base instruction survives in the decoder set.
    for b in &p.base {
        assert!(p.decoder.iter().any(|d| d.name == b.name));
    }
    // Specialized variants always name their base.
    for d in &p.decoder {
        assert!(p.base.iter().any(|b| b.name == d.base), "{}", d.name);
    }
    // May-branch conditions are filled in everywhere.
    assert!(p.base.iter().chain(p.decoder.iter()).all(|f| f.may_branch.is_some()));
}

#[test]
fn no_specialize_keeps_the_decoder_set_equal_to_base() {
    let (src, desc, _) = isa::load_corpus(corpus::bundled_dir()).unwrap();
    let mut cfg = TransformConfig::from_file(&src.config_file().unwrap());
    cfg.specialize = false;
    let p = pipeline::run_pipeline(&desc, &cfg, &[], false).unwrap();
    assert_eq!(p.decoder.len(), p.base.len());
}

#[test]
fn profile_gates_specialization() {
    let (src, desc, _) = isa::load_corpus(corpus::bundled_dir()).unwrap();
    let mut cfg = TransformConfig::from_file(&src.config_file().unwrap());
    let profile = pipeline::parse_profile("ADC_lsl_imm\t1000000\n").unwrap();
    cfg.profile = Some(profile);
    cfg.weight_threshold = 1000;
    let p = pipeline::run_pipeline(&desc, &cfg, &[], false).unwrap();
    // Only the hot instruction grew variants.
    assert!(p.decoder.iter().any(|f| f.name == "ADC_lsl_imm__s0__al"));
    assert!(!p.decoder.iter().any(|f| f.base == "ADD_lsl_imm" && f.name != "ADD_lsl_imm"));
}

#[test]
fn profile_with_unknown_name_warns_but_succeeds() {
    let (src, desc, _) = isa::load_corpus(corpus::bundled_dir()).unwrap();
    let mut cfg = TransformConfig::from_file(&src.config_file().unwrap());
    cfg.profile = Some(pipeline::parse_profile("NO_SUCH_INSTR\t5\n").unwrap());
    let p = pipeline::run_pipeline(&desc, &cfg, &[], false).unwrap();
    assert!(p.warnings.iter().any(|w| w.contains("NO_SUCH_INSTR")));
}

#[test]
fn empty_profile_means_zero_weights() {
    let profile = pipeline::parse_profile("").unwrap();
    assert!(profile.is_empty());
    let mut fs = flats();
    pipeline::ingest_profile(&mut fs, &profile);
    assert!(fs.iter().all(|f| f.weight == 0));
}
