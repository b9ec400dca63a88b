//! Rewrite symbolic-expression calls into per-operator variants.
//!
//! `OverflowFrom(Rn + shift_op + C Flag)` is not a call on an integer: the
//! carry/overflow/saturation helpers need the operator and each operand.
//! This pass replaces every such call by the operator-specific variant
//! taking the operands separately (`OverflowFromAdd3(Rn, shift_op, C Flag)`),
//! so no symbolic-argument call survives into code generation.

use super::TransformError;
use crate::ir::ast::{Ast, BinOp, Expr, Stmt};

const SYMBOLIC: &[&str] = &["CarryFrom", "BorrowFrom", "OverflowFrom", "SignedSat"];

/// Split `a + b` / `a + b + c` / `a - b` into (suffix, operands).
fn sum_shape(e: &Expr) -> Option<(&'static str, Vec<Expr>)> {
    match e {
        Expr::Bin {
            op: BinOp::Add,
            lhs,
            rhs,
        } => match lhs.as_ref() {
            Expr::Bin {
                op: BinOp::Add,
                lhs: a,
                rhs: b,
            } => Some(("Add3", vec![(**a).clone(), (**b).clone(), (**rhs).clone()])),
            _ => Some(("Add2", vec![(**lhs).clone(), (**rhs).clone()])),
        },
        Expr::Bin {
            op: BinOp::Sub,
            lhs,
            rhs,
        } => Some(("Sub2", vec![(**lhs).clone(), (**rhs).clone()])),
        _ => None,
    }
}

fn variant_name(base: &str, suffix: &str) -> Option<&'static str> {
    match (base, suffix) {
        ("CarryFrom", "Add2") => Some("CarryFromAdd2"),
        ("CarryFrom", "Add3") => Some("CarryFromAdd3"),
        ("BorrowFrom", "Sub2") => Some("BorrowFromSub2"),
        ("OverflowFrom", "Add2") => Some("OverflowFromAdd2"),
        ("OverflowFrom", "Add3") => Some("OverflowFromAdd3"),
        ("OverflowFrom", "Sub2") => Some("OverflowFromSub2"),
        ("SignedSat", "Add2") => Some("SignedSatAdd2"),
        ("SignedSat", "Sub2") => Some("SignedSatSub2"),
        _ => None,
    }
}

fn rewrite_expr(e: &Expr, unit: &str) -> Result<Expr, TransformError> {
    let rebuilt = match e {
        Expr::Num(_) | Expr::Var(_) | Expr::Flag(_) => e.clone(),
        Expr::Reg { index, mode } => Expr::Reg {
            index: Box::new(rewrite_expr(index, unit)?),
            mode: match mode {
                Some(m) => Some(Box::new(rewrite_expr(m, unit)?)),
                None => None,
            },
        },
        Expr::Memory { addr, size } => Expr::Memory {
            addr: Box::new(rewrite_expr(addr, unit)?),
            size: *size,
        },
        Expr::Bin { op, lhs, rhs } => Expr::Bin {
            op: *op,
            lhs: Box::new(rewrite_expr(lhs, unit)?),
            rhs: Box::new(rewrite_expr(rhs, unit)?),
        },
        Expr::Not(inner) => Expr::Not(Box::new(rewrite_expr(inner, unit)?)),
        Expr::BitRange { value, hi, lo } => Expr::BitRange {
            value: Box::new(rewrite_expr(value, unit)?),
            hi: Box::new(rewrite_expr(hi, unit)?),
            lo: Box::new(rewrite_expr(lo, unit)?),
        },
        Expr::Fun { name, args } => {
            let args: Result<Vec<Expr>, _> =
                args.iter().map(|a| rewrite_expr(a, unit)).collect();
            let args = args?;
            if SYMBOLIC.contains(&name.as_str()) {
                let (sum, extra) = match name.as_str() {
                    // SignedSat carries the saturation width as a second
                    // argument; the others take just the expression.
                    "SignedSat" => (&args[0], args.get(1).cloned()),
                    _ => (&args[0], None),
                };
                let (suffix, mut operands) =
                    sum_shape(sum).ok_or_else(|| TransformError::SymbolicShape {
                        unit: unit.to_string(),
                        call: format!("{name}({})", crate::ir::printer::print_expr(sum)),
                    })?;
                let variant =
                    variant_name(name, suffix).ok_or_else(|| TransformError::SymbolicShape {
                        unit: unit.to_string(),
                        call: format!("{name}(... {suffix} shape)"),
                    })?;
                operands.extend(extra);
                Expr::Fun {
                    name: variant.to_string(),
                    args: operands,
                }
            } else {
                Expr::Fun {
                    name: name.clone(),
                    args,
                }
            }
        }
    };
    Ok(rebuilt)
}

fn rewrite_stmts(stmts: &[Stmt], unit: &str) -> Result<Vec<Stmt>, TransformError> {
    stmts
        .iter()
        .map(|s| {
            Ok(match s {
                Stmt::Assign { lhs, rhs } => Stmt::Assign {
                    lhs: rewrite_expr(lhs, unit)?,
                    rhs: rewrite_expr(rhs, unit)?,
                },
                Stmt::If {
                    cond,
                    then_block,
                    else_block,
                } => Stmt::If {
                    cond: rewrite_expr(cond, unit)?,
                    then_block: rewrite_stmts(then_block, unit)?,
                    else_block: rewrite_stmts(else_block, unit)?,
                },
                Stmt::Call { proc, args } => Stmt::Call {
                    proc: proc.clone(),
                    args: args
                        .iter()
                        .map(|a| rewrite_expr(a, unit))
                        .collect::<Result<_, _>>()?,
                },
                Stmt::Block(b) => Stmt::Block(rewrite_stmts(b, unit)?),
                Stmt::Unpredictable => Stmt::Unpredictable,
                Stmt::Nop => Stmt::Nop,
            })
        })
        .collect()
}

/// Rewrite all symbolic calls in one tree. `unit` names the owner for error
/// reporting.
pub fn rewrite_symbolic_calls(ast: &Ast, unit: &str) -> Result<Ast, TransformError> {
    Ok(Ast::new(rewrite_stmts(&ast.stmts, unit)?))
}

/// True if any symbolic-form call remains (the pass postcondition).
pub fn has_symbolic_calls(ast: &Ast) -> bool {
    ast.any_expr(&|e| matches!(e, Expr::Fun { name, .. } if SYMBOLIC.contains(&name.as_str())))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::isa::pseudocode::parse_expr_str;

    fn rewrite_one(src: &str) -> Expr {
        let e = parse_expr_str(src).unwrap();
        rewrite_expr(&e, "TEST").unwrap()
    }

    #[test]
    fn overflow_three_operands() {
        assert_eq!(
            rewrite_one("OverflowFrom(Rn + shift_op + C Flag)"),
            parse_expr_str("OverflowFromAdd3(Rn, shift_op, C Flag)").unwrap()
        );
    }

    #[test]
    fn carry_two_operands() {
        assert_eq!(
            rewrite_one("CarryFrom(a + b)"),
            parse_expr_str("CarryFromAdd2(a, b)").unwrap()
        );
    }

    #[test]
    fn borrow_and_saturation() {
        assert_eq!(
            rewrite_one("BorrowFrom(Rn - shifter_operand)"),
            parse_expr_str("BorrowFromSub2(Rn, shifter_operand)").unwrap()
        );
        assert_eq!(
            rewrite_one("SignedSat(Rn + Rm, 32)"),
            parse_expr_str("SignedSatAdd2(Rn, Rm, 32)").unwrap()
        );
    }

    #[test]
    fn bad_shape_names_the_unit() {
        let e = parse_expr_str("CarryFrom(x)").unwrap();
        match rewrite_expr(&e, "ADC") {
            Err(TransformError::SymbolicShape { unit, .. }) => assert_eq!(unit, "ADC"),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn untouched_without_symbolic_calls() {
        let e = parse_expr_str("NbOfSetBitsIn(reglist) * 4").unwrap();
        assert_eq!(rewrite_expr(&e, "T").unwrap(), e);
    }
}
