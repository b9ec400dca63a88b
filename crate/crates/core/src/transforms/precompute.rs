//! Pre-computation of static sub-expressions.
//!
//! With dynamic translation an instruction is decoded once and executed many
//! times, so any sub-expression that depends only on instruction parameters
//! moves from the execute path to the decoder. Each configured pattern that
//! matches is replaced by a fresh parameter, and the decoder evaluates the
//! expression once at decode time.

use std::collections::BTreeSet;

use super::TransformError;
use crate::ir::ast::{replace_exp, Expr};
use crate::ir::printer::print_expr;
use crate::ir::types::{field_param_name, FlatInstruction};

/// Why a matched pattern cannot be hoisted to decode time.
fn staticness(flat: &FlatInstruction, pattern: &Expr) -> Result<(), String> {
    if pattern.reads_state() {
        return Err("it reads processor state".into());
    }
    let enc_params: BTreeSet<&str> = flat
        .encoding
        .param_fields()
        .map(|(f, _)| field_param_name(f))
        .collect();
    let mut bad = None;
    pattern.visit(&mut |e| {
        if let Expr::Var(v) = e {
            if !enc_params.contains(v.as_str()) && bad.is_none() {
                bad = Some(v.clone());
            }
        }
    });
    match bad {
        Some(v) => Err(format!("`{v}` is not a decode-time parameter")),
        None => Ok(()),
    }
}

/// Apply the configured pre-compute rules to one flat instruction. Rules
/// whose pattern does not occur pass through; a rule that matches but is not
/// static is refused.
pub fn precompute(
    flat: &FlatInstruction,
    rules: &[(String, Expr)],
) -> Result<FlatInstruction, TransformError> {
    let mut out = flat.clone();
    for (name, pattern) in rules {
        let (replaced, count) = replace_exp(&out.ast, pattern, &Expr::var(name));
        if count == 0 {
            continue;
        }
        staticness(&out, pattern).map_err(|why| TransformError::PrecomputeNotStatic {
            unit: flat.name.clone(),
            pattern: print_expr(pattern),
            why,
        })?;
        out.ast = replaced;
        out.precompute.push((name.clone(), pattern.clone()));
    }
    if !out.precompute.is_empty() {
        super::flatten::infer_params(&mut out)?;
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ir::eval;
    use crate::isa::pseudocode::parse_expr_str;

    fn ldm_ia() -> FlatInstruction {
        let (_, desc, _) = crate::isa::load_corpus(crate::corpus::bundled_dir()).unwrap();
        let flats = crate::transforms::flatten(&desc).unwrap();
        flats.into_iter().find(|f| f.name == "LDM_ia").unwrap()
    }

    fn popcount_rule() -> (String, Expr) {
        (
            "nb_reg_x4".to_string(),
            parse_expr_str("NbOfSetBitsIn(reglist) * 4").unwrap(),
        )
    }

    #[test]
    fn register_count_becomes_a_parameter() {
        let flat = ldm_ia();
        let out = precompute(&flat, &[popcount_rule()]).unwrap();
        assert_eq!(out.precompute.len(), 1);
        assert!(out.params.iter().any(|p| p.name == "nb_reg_x4"));
        // The hoisted expression is gone from the execute path.
        assert!(!out
            .ast
            .any_expr(&|e| matches!(e, Expr::Fun { name, .. } if name == "NbOfSetBitsIn")));
        assert!(out.ast.any_expr(&|e| e == &Expr::var("nb_reg_x4")));
    }

    #[test]
    fn decode_rule_matches_popcount_oracle() {
        let flat = precompute(&ldm_ia(), &[popcount_rule()]).unwrap();
        let (_, rule) = &flat.precompute[0];
        let env = |name: &str| (name == "reglist").then_some(0b0000_0000_0000_1011u32);
        // Three set bits, scaled by four.
        assert_eq!(eval::eval_pure(rule, &env), Some(12));
    }

    #[test]
    fn state_reading_pattern_refused() {
        let flat = ldm_ia();
        let rule = (
            "bad".to_string(),
            parse_expr_str("NbOfSetBitsIn(reglist) * 4 + C Flag").unwrap(),
        );
        // Force a match by rewriting the tree first.
        let mut forced = flat.clone();
        let (ast, _) = replace_exp(
            &forced.ast,
            &parse_expr_str("NbOfSetBitsIn(reglist) * 4").unwrap(),
            &rule.1,
        );
        forced.ast = ast;
        match precompute(&forced, &[rule]) {
            Err(TransformError::PrecomputeNotStatic { why, .. }) => {
                assert!(why.contains("state"), "{why}")
            }
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn unmatched_rule_is_identity() {
        let flat = ldm_ia();
        let rule = ("x".to_string(), parse_expr_str("offset_12 + 1").unwrap());
        let out = precompute(&flat, &[rule]).unwrap();
        assert_eq!(out.ast, flat.ast);
        assert!(out.precompute.is_empty());
    }
}
