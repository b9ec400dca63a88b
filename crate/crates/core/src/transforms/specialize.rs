//! Specialization: clone hot instructions with their option flags folded to
//! constants, plus an unconditional variant with the condition check removed.
//!
//! Checking options costs a little on every execution, and most of the time
//! they are absent (condition Always, S clear). Each variant's encoding
//! folds the specialized fields to constants, so the decoder's
//! most-constant-bits-first ordering selects the most specialized applicable
//! variant; the generic version is always retained as the fallback.

use super::TransformError;
use crate::ir::ast::{replace_exp, Ast, Expr, Stmt};
use crate::ir::simplify::simplify;
use crate::ir::types::{field_param_name, EncodingTable, FieldContent, FlatInstruction};

/// Condition value meaning "Always".
pub const COND_ALWAYS: u32 = 14;

/// Fold constant if-conditions and drop branches that became empty.
pub fn eliminate_dead_code(ast: &Ast) -> Ast {
    fn go(stmts: &[Stmt]) -> Vec<Stmt> {
        let mut out = Vec::new();
        for s in stmts {
            match s {
                Stmt::If {
                    cond,
                    then_block,
                    else_block,
                } => {
                    let cond = simplify(cond, &[]);
                    let then_block = go(then_block);
                    let else_block = go(else_block);
                    match cond {
                        Expr::Num(0) => out.extend(else_block),
                        Expr::Num(_) => out.extend(then_block),
                        c if then_block.is_empty() && else_block.is_empty() => {
                            let _ = c; // condition had no effect at all
                        }
                        c => out.push(Stmt::If {
                            cond: c,
                            then_block,
                            else_block,
                        }),
                    }
                }
                Stmt::Block(b) => out.push(Stmt::Block(go(b))),
                other => out.push(other.clone()),
            }
        }
        out
    }
    Ast::new(go(&ast.stmts))
}

/// Replace one parameter field by a constant in the encoding.
fn fold_field(table: &EncodingTable, param: &str, value: u32) -> EncodingTable {
    let fields = table
        .fields
        .iter()
        .map(|f| match &f.content {
            FieldContent::Param(name) if field_param_name(name) == param => {
                crate::ir::types::EncField {
                    hi: f.hi,
                    lo: f.lo,
                    content: FieldContent::Const(value),
                }
            }
            _ => f.clone(),
        })
        .collect();
    EncodingTable { fields }
}

fn has_condition_check(ast: &Ast) -> bool {
    ast.any_expr(&|e| matches!(e, Expr::Fun { name, .. } if name == "ConditionPassed"))
}

fn variant_suffix(subst: &[(String, u32)]) -> String {
    subst
        .iter()
        .map(|(name, value)| {
            if name == "cond" && *value == COND_ALWAYS {
                "__al".to_string()
            } else {
                format!("__{}{}", name.to_lowercase(), value)
            }
        })
        .collect()
}

fn build_variant(flat: &FlatInstruction, subst: &[(String, u32)]) -> Result<FlatInstruction, TransformError> {
    let mut out = flat.clone();
    out.name = format!("{}{}", flat.name, variant_suffix(subst));
    out.base = flat.name.clone();
    out.specialization = subst.to_vec();
    for (param, value) in subst {
        if param == "cond" {
            // Unconditional variant: the condition check itself goes away.
            let (ast, _) = replace_exp(
                &out.ast,
                &Expr::fun("ConditionPassed", vec![Expr::var("cond")]),
                &Expr::Num(1),
            );
            out.ast = ast;
        } else {
            let (ast, _) = replace_exp(&out.ast, &Expr::var(param), &Expr::Num(*value));
            out.ast = ast;
        }
        out.encoding = fold_field(&out.encoding, param, *value);
    }
    out.ast = eliminate_dead_code(&out.ast);
    debug_assert!(
        !subst.iter().any(|(p, _)| p == "cond") || !has_condition_check(&out.ast),
        "unconditional variant still checks its condition"
    );
    super::flatten::infer_params(&mut out)?;
    Ok(out)
}

/// Specialize one flat instruction. Returns the variants followed by the
/// untouched generic version; an instruction with nothing to specialize
/// returns just itself.
pub fn specialize(
    flat: &FlatInstruction,
    flags: &[(String, Vec<u32>)],
) -> Result<Vec<FlatInstruction>, TransformError> {
    let applicable: Vec<(&str, &[u32])> = flags
        .iter()
        .filter(|(name, _)| flat.encoding.field_for_param(name).is_some())
        .map(|(name, values)| (name.as_str(), values.as_slice()))
        .collect();
    let conditional =
        has_condition_check(&flat.ast) && flat.encoding.field_for_param("cond").is_some();

    // Cross product of flag assignments; the empty assignment stands for
    // "flags left generic" and only combines with the unconditional clone.
    let mut flag_combos: Vec<Vec<(String, u32)>> = vec![Vec::new()];
    for (name, values) in &applicable {
        let mut next = Vec::new();
        for combo in &flag_combos {
            for v in *values {
                let mut c = combo.clone();
                c.push((name.to_string(), *v));
                next.push(c);
            }
        }
        flag_combos = next;
    }
    if applicable.is_empty() {
        flag_combos = vec![Vec::new()];
    }

    let mut out = Vec::new();
    for combo in &flag_combos {
        for uncond in [true, false] {
            let mut subst = combo.clone();
            if uncond {
                if !conditional {
                    continue;
                }
                subst.push(("cond".to_string(), COND_ALWAYS));
            }
            if subst.is_empty() {
                continue; // that's the generic version
            }
            out.push(build_variant(flat, &subst)?);
        }
    }
    out.push(flat.clone());
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ir::Flag;

    fn adc_lsl_imm() -> FlatInstruction {
        let (src, desc, _) = crate::isa::load_corpus(crate::corpus::bundled_dir()).unwrap();
        let _ = src;
        let desc = crate::transforms::pipeline::rewrite_all(&desc).unwrap();
        let flats = crate::transforms::flatten(&desc).unwrap();
        flats.into_iter().find(|f| f.name == "ADC_lsl_imm").unwrap()
    }

    #[test]
    fn adc_gets_four_variants_plus_generic() {
        let flat = adc_lsl_imm();
        let all = specialize(&flat, &[("S".into(), vec![0, 1])]).unwrap();
        assert_eq!(all.len(), 5);
        let names: Vec<&str> = all.iter().map(|f| f.name.as_str()).collect();
        assert!(names.contains(&"ADC_lsl_imm__s0__al"));
        assert!(names.contains(&"ADC_lsl_imm__s0"));
        assert!(names.contains(&"ADC_lsl_imm__s1__al"));
        assert!(names.contains(&"ADC_lsl_imm__s1"));
        assert_eq!(*names.last().unwrap(), "ADC_lsl_imm");
    }

    #[test]
    fn s0_variant_has_no_flag_updates() {
        let flat = adc_lsl_imm();
        let all = specialize(&flat, &[("S".into(), vec![0, 1])]).unwrap();
        let s0 = all.iter().find(|f| f.name.ends_with("__s0__al")).unwrap();
        // The S == 1 block folded away entirely; note the shifter code still
        // reads the C flag, which is input, not update.
        let writes_flag = s0.ast.any_stmt(&|s| {
            matches!(
                s,
                Stmt::Assign {
                    lhs: Expr::Flag(Flag::N | Flag::Z | Flag::C | Flag::V),
                    ..
                }
            )
        });
        assert!(!writes_flag);
    }

    #[test]
    fn unconditional_variant_has_no_condition_call() {
        let flat = adc_lsl_imm();
        let all = specialize(&flat, &[("S".into(), vec![0, 1])]).unwrap();
        for v in all.iter().filter(|f| f.name.contains("__al")) {
            assert!(!has_condition_check(&v.ast), "{}", v.name);
        }
    }

    #[test]
    fn specialized_encodings_fold_fields() {
        let flat = adc_lsl_imm();
        let all = specialize(&flat, &[("S".into(), vec![0, 1])]).unwrap();
        let v = all.iter().find(|f| f.name.ends_with("__s1__al")).unwrap();
        // S bit (20) and cond (31..28) became constants.
        assert_eq!(v.encoding.mask() & (1 << 20), 1 << 20);
        assert_eq!(v.encoding.value() & (1 << 20), 1 << 20);
        assert_eq!(v.encoding.mask() >> 28, 0xF);
        assert_eq!(v.encoding.value() >> 28, COND_ALWAYS);
        // Selection predicate recorded alongside.
        assert_eq!(
            v.specialization,
            vec![("S".to_string(), 1), ("cond".to_string(), COND_ALWAYS)]
        );
    }

    #[test]
    fn generic_retained_unchanged() {
        let flat = adc_lsl_imm();
        let all = specialize(&flat, &[("S".into(), vec![0, 1])]).unwrap();
        assert_eq!(all.last().unwrap(), &flat);
    }
}
