//! Corpus ingest: the bundled description files parse, link, and round-trip.

use issforge_core::corpus;
use issforge_core::ir::printer;
use issforge_core::isa::{self, parse_and_link, SourceSet};

fn bundled() -> SourceSet {
    SourceSet::load_dir(corpus::bundled_dir()).expect("bundled corpus should load")
}

#[test]
fn bundled_corpus_links_clean() {
    let linked = parse_and_link(&bundled()).expect("bundled corpus should link");
    assert!(
        linked.desc.instructions.len() >= 12,
        "corpus has {} instructions",
        linked.desc.instructions.len()
    );
    assert!(
        linked.desc.modes.len() >= 4,
        "corpus has {} mode cases",
        linked.desc.modes.len()
    );
    assert!(linked.warnings.is_empty(), "warnings: {:?}", linked.warnings);
}

#[test]
fn adc_lists_all_shifter_cases() {
    let linked = parse_and_link(&bundled()).unwrap();
    let adc = linked.desc.instruction("ADC").expect("ADC exists");
    assert_eq!(adc.family.as_deref(), Some("shifter_operand"));
    assert_eq!(adc.modes, vec!["imm", "lsl_imm", "lsr_imm"]);
}

#[test]
fn missing_syntax_line_names_the_unit() {
    let mut src = bundled();
    src.syntax = src
        .syntax
        .lines()
        .filter(|l| !l.starts_with("Instruction ADC:"))
        .collect::<Vec<_>>()
        .join("\n");
    let err = parse_and_link(&src).unwrap_err();
    assert!(err.to_string().contains("ADC"), "{err}");
}

#[test]
fn parsing_is_deterministic() {
    let src = bundled();
    let a = parse_and_link(&src).unwrap().desc;
    let b = parse_and_link(&src).unwrap().desc;
    assert_eq!(a, b);
}

#[test]
fn pretty_print_reparse_is_identity() {
    let src = bundled();
    let units = isa::parse_pseudocode(&src.pseudocode).unwrap();
    for u in &units {
        let kind = match u.kind {
            isa::pseudocode::UnitKind::Instruction => "Instruction",
            isa::pseudocode::UnitKind::Mode => "Mode",
        };
        let printed = printer::print_unit(kind, &u.name, u.family.as_deref(), &u.ast);
        let reparsed = isa::parse_pseudocode(&printed)
            .unwrap_or_else(|e| panic!("unit {} failed reparse: {e}\n{printed}", u.name));
        assert_eq!(&reparsed[0], u, "round-trip mismatch for {}", u.name);
    }
}

#[test]
fn patches_bind_to_instructions() {
    let linked = parse_and_link(&bundled()).unwrap();
    assert_eq!(
        linked.desc.instruction("SRS").unwrap().patch.as_deref(),
        Some("SRS")
    );
    assert_eq!(
        linked.desc.instruction("RFE").unwrap().patch.as_deref(),
        Some("RFE")
    );
    assert_eq!(linked.desc.instruction("LDM").unwrap().patch, None);
}

#[test]
fn encoding_tables_cover_the_word() {
    let linked = parse_and_link(&bundled()).unwrap();
    for i in &linked.desc.instructions {
        i.encoding.check().unwrap_or_else(|e| panic!("{}: {e}", i.name));
    }
    for m in &linked.desc.modes {
        m.encoding.check().unwrap_or_else(|e| panic!("{}: {e}", m.name));
    }
}

#[test]
fn halt_is_fully_determined() {
    let linked = parse_and_link(&bundled()).unwrap();
    let halt = linked.desc.instruction("HALT").unwrap();
    assert_eq!(halt.encoding.mask(), 0xFFFF_FFFF);
    assert_eq!(halt.encoding.value(), 0xE600_0000);
}
