//! Generated decoder corpus: enumeration respects constraints, every word
//! decodes back to its origin, and the decode/print round-trip diffs clean.

use issforge_core::ir::types::ConstraintKind;
use issforge_core::testgen::{self, enumerate_valid};
use issforge_core::toolchain::Toolchain;

fn toolchain() -> Toolchain {
    Toolchain::bundled().unwrap()
}

#[test]
fn enumeration_respects_not_equal() {
    let tc = toolchain();
    let ldrbt = tc.pipeline.base.iter().find(|f| f.name == "LDRBT").unwrap();
    let instances = enumerate_valid(ldrbt, 512).unwrap();
    assert!(!instances.is_empty());
    for inst in &instances {
        let get = |n: &str| inst.params.iter().find(|(p, _)| p == n).unwrap().1;
        assert!(get("n") <= 14, "Rn must stay below 15");
        assert_ne!(get("d"), get("n"), "Rd and Rn must differ");
        assert_ne!(get("cond"), 15);
    }
}

#[test]
fn tiny_spaces_enumerate_exhaustively() {
    let tc = toolchain();
    // HALT is fully constant: exactly one word.
    let halt = tc.pipeline.base.iter().find(|f| f.name == "HALT").unwrap();
    let instances = enumerate_valid(halt, 4096).unwrap();
    assert_eq!(instances.len(), 1);
    assert_eq!(instances[0].word, 0xE600_0000);

    // SRS_ia: cond(15) x W(2) x mode(6) = 180 words, all enumerated.
    let srs = tc.pipeline.base.iter().find(|f| f.name == "SRS_ia").unwrap();
    let instances = enumerate_valid(srs, 4096).unwrap();
    assert_eq!(instances.len(), 15 * 2 * 6);
}

#[test]
fn sampled_spaces_cover_boundaries() {
    let tc = toolchain();
    let ldm = tc.pipeline.base.iter().find(|f| f.name == "LDM_ia").unwrap();
    let instances = enumerate_valid(ldm, 500).unwrap();
    assert_eq!(instances.len(), 500);
    // reglist = 1 (domain minimum after the != 0 constraint) and 0xFFFF
    // (maximum) both appear.
    let reglists: Vec<u32> = instances
        .iter()
        .map(|i| i.params.iter().find(|(n, _)| n == "reglist").unwrap().1)
        .collect();
    assert!(reglists.contains(&1));
    assert!(reglists.contains(&0xFFFF));
    assert!(!reglists.contains(&0));
}

#[test]
fn unsatisfiable_constraints_are_reported() {
    let tc = toolchain();
    let mut flat = tc.pipeline.base.iter().find(|f| f.name == "UXTH").unwrap().clone();
    // UXTH already forces n = 15; also excluding 15 leaves nothing.
    flat.constraints.push(issforge_core::ir::ValidityConstraint {
        subject: "UXTH".into(),
        kind: ConstraintKind::NotEqualValue {
            param: "n".into(),
            value: 15,
        },
    });
    assert!(matches!(
        enumerate_valid(&flat, 64),
        Err(testgen::TestgenError::Unsatisfiable { .. })
    ));
}

#[test]
fn corpus_words_decode_to_their_origin_with_identical_params() {
    let tc = toolchain();
    let corpus = testgen::generate(&tc.pipeline.base, 256).unwrap();
    assert_eq!(corpus.words.len(), corpus.expected.len());
    for ((word, origin), _) in corpus
        .words
        .iter()
        .zip(corpus.origins.iter())
        .zip(corpus.expected.iter())
    {
        let d = tc
            .spec
            .decode(*word)
            .instr()
            .unwrap_or_else(|| panic!("word {word:#010x} from {origin} failed to decode"));
        let decoded_flat = &tc.spec.flats[d.flat];
        assert_eq!(
            &decoded_flat.base, origin,
            "word {word:#010x} decoded to {} (base {})",
            decoded_flat.name, decoded_flat.base
        );
        // Identical extracted parameters, specialization constants included.
        let origin_flat = tc.pipeline.base.iter().find(|f| &f.name == origin).unwrap();
        for (field, f) in origin_flat.encoding.param_fields() {
            let pname = issforge_core::ir::field_param_name(field);
            let expected = (*word & f.bit_mask()) >> f.lo;
            assert_eq!(
                tc.spec.value_of(&d, pname),
                Some(expected),
                "{origin}: param {pname}"
            );
        }
    }
}

#[test]
fn full_roundtrip_has_zero_mismatches() {
    let tc = toolchain();
    let corpus = testgen::generate(&tc.pipeline.base, testgen::DEFAULT_BUDGET).unwrap();
    assert!(
        corpus.words.len() >= 10_000,
        "corpus too small: {}",
        corpus.words.len()
    );
    let mismatches = testgen::roundtrip(&tc.spec, &corpus.words, &corpus.expected);
    assert!(
        mismatches.is_empty(),
        "{} mismatches, first: {:?}",
        mismatches.len(),
        mismatches.first()
    );
}

#[test]
fn corrupted_expected_lines_are_reported_exactly() {
    let tc = toolchain();
    let corpus = testgen::generate(&tc.pipeline.base, 64).unwrap();
    let mut expected = corpus.expected.clone();
    expected[3] = "BOGUS".to_string();
    expected[17] = "ALSO BOGUS".to_string();
    let mismatches = testgen::roundtrip(&tc.spec, &corpus.words, &expected);
    let indexes: Vec<usize> = mismatches.iter().map(|m| m.index).collect();
    assert_eq!(indexes, vec![3, 17]);
}

#[test]
fn no_generated_word_is_undefined_or_unpredictable() {
    let tc = toolchain();
    let corpus = testgen::generate(&tc.pipeline.base, 128).unwrap();
    for word in &corpus.words {
        assert!(
            tc.spec.decode(*word).instr().is_some(),
            "word {word:#010x}"
        );
    }
}

#[test]
fn corpus_files_write_and_reload() {
    let tc = toolchain();
    let corpus = testgen::generate(&tc.pipeline.base, 64).unwrap();
    let dir = std::env::temp_dir().join(format!("issforge-testgen-{}", std::process::id()));
    corpus.write_to(&dir).unwrap();
    let (words, expected) = testgen::load_corpus_files(&dir).unwrap();
    assert_eq!(words, corpus.words);
    assert_eq!(expected, corpus.expected);
    std::fs::remove_dir_all(&dir).ok();
}
