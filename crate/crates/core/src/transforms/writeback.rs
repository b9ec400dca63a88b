//! Write-back relocation.
//!
//! The extracted addressing-mode code updates the base register before the
//! memory access it computes the address for. If the access raises a data
//! abort, the instruction unwinds, so the base register must still hold its
//! original value: the write-back has to execute after every memory access.
//!
//! The pass finds the register-assigning statement in the mode-derived
//! prefix, hoists its guard into a local evaluated in place (entry-time
//! flags decide the write-back even if the instruction later changes them),
//! and re-emits the assignment at the end of the statement list. When the
//! instruction can change processor mode before that point, the relocated
//! assignment addresses the banked register of the pre-instruction mode.

use super::TransformError;
use crate::ir::ast::{Ast, Expr, Stmt};
use crate::ir::builtins;
use crate::ir::types::FlatInstruction;

/// Name of the hoisted guard local. Reserved; the corpus formats reject it
/// as an ordinary identifier by convention.
pub const WB_COND: &str = "wb_cond";

fn assigns_register(s: &Stmt) -> bool {
    match s {
        Stmt::Assign {
            lhs: Expr::Reg { .. },
            ..
        } => true,
        Stmt::If {
            then_block,
            else_block,
            ..
        } => {
            then_block.iter().any(assigns_register) || else_block.iter().any(assigns_register)
        }
        Stmt::Block(b) => b.iter().any(assigns_register),
        _ => false,
    }
}

/// Retarget a write-back assignment at the pre-instruction register bank.
fn bank_assign(s: Stmt) -> Stmt {
    match s {
        Stmt::Assign {
            lhs: Expr::Reg { index, mode: None },
            rhs,
        } => Stmt::Assign {
            lhs: Expr::Reg {
                index,
                mode: Some(Box::new(Expr::var("old_mode"))),
            },
            rhs,
        },
        other => other,
    }
}

/// True if executing the tree may change the processor mode.
fn changes_mode(ast: &Ast) -> bool {
    ast.any_stmt(&|s| matches!(s, Stmt::Call { proc, .. } if builtins::changes_mode(proc)))
}

/// Relocate the write-back of one flat instruction. Instructions without an
/// addressing-mode prefix (or whose mode has no write-back) pass through
/// unchanged.
pub fn move_writeback(flat: &FlatInstruction) -> Result<FlatInstruction, TransformError> {
    let prefix_len = flat.mode_prefix_len.min(flat.ast.stmts.len());
    let declared = flat.ast.stmts[..prefix_len].iter().any(assigns_register);
    if !declared {
        return Ok(flat.clone());
    }
    let needs_bank = changes_mode(&flat.ast);

    let mut stmts: Vec<Stmt> = Vec::with_capacity(flat.ast.stmts.len() + 1);
    let mut moved: Vec<Stmt> = Vec::new();
    let mut new_prefix_len = prefix_len;
    for (i, s) in flat.ast.stmts.iter().enumerate() {
        if i >= prefix_len || !assigns_register(s) {
            stmts.push(s.clone());
            continue;
        }
        match s {
            // Bare write-back: move the assignment itself.
            Stmt::Assign { .. } => {
                let mut assign = s.clone();
                if needs_bank {
                    assign = bank_assign(assign);
                }
                moved.push(assign);
                new_prefix_len -= 1;
            }
            // Guarded write-back: evaluate the guard where it stood, move
            // the body behind the memory accesses.
            Stmt::If {
                cond,
                then_block,
                else_block,
            } if else_block.is_empty()
                && then_block.len() == 1
                && matches!(
                    then_block[0],
                    Stmt::Assign {
                        lhs: Expr::Reg { .. },
                        ..
                    }
                ) =>
            {
                stmts.push(Stmt::Assign {
                    lhs: Expr::var(WB_COND),
                    rhs: cond.clone(),
                });
                let mut assign = then_block[0].clone();
                if needs_bank {
                    assign = bank_assign(assign);
                }
                moved.push(Stmt::If {
                    cond: Expr::var(WB_COND),
                    then_block: vec![assign],
                    else_block: Vec::new(),
                });
            }
            _ => {
                return Err(TransformError::WritebackShape {
                    unit: flat.name.clone(),
                })
            }
        }
    }
    if moved.is_empty() {
        return Err(TransformError::WritebackMissing {
            unit: flat.name.clone(),
        });
    }
    stmts.extend(moved);
    let mut out = flat.clone();
    out.ast = Ast::new(stmts);
    out.mode_prefix_len = new_prefix_len;
    super::flatten::infer_params(&mut out)?;
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ir::printer::print_ast;

    fn corpus_flat(name: &str) -> FlatInstruction {
        let (_, desc, _) = crate::isa::load_corpus(crate::corpus::bundled_dir()).unwrap();
        let flats = crate::transforms::flatten(&desc).unwrap();
        flats.into_iter().find(|f| f.name == name).unwrap()
    }

    #[test]
    fn ldm_ia_writeback_moves_to_end() {
        let flat = corpus_flat("LDM_ia");
        let moved = move_writeback(&flat).unwrap();
        let text = print_ast(&moved.ast);
        // The guard is evaluated in place...
        assert!(text.contains("wb_cond = ConditionPassed(cond) and W == 1"), "{text}");
        // ...and the assignment is the final statement, after the transfer.
        let last = moved.ast.stmts.last().unwrap();
        match last {
            Stmt::If { cond, then_block, .. } => {
                assert_eq!(cond, &Expr::var(WB_COND));
                assert!(matches!(
                    &then_block[0],
                    Stmt::Assign { lhs: Expr::Reg { mode: None, .. }, .. }
                ));
            }
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn mode_changing_transfer_banks_the_writeback() {
        let moved = move_writeback(&corpus_flat("LDMX_ia")).unwrap();
        let last = moved.ast.stmts.last().unwrap();
        match last {
            Stmt::If { then_block, .. } => match &then_block[0] {
                Stmt::Assign {
                    lhs: Expr::Reg { mode: Some(m), .. },
                    ..
                } => assert_eq!(**m, Expr::var("old_mode")),
                other => panic!("expected banked assign, got {other:?}"),
            },
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn no_writeback_means_identity() {
        let flat = corpus_flat("LDR_off_imm");
        let moved = move_writeback(&flat).unwrap();
        assert_eq!(flat.ast, moved.ast);
    }

    #[test]
    fn modeless_instruction_untouched() {
        let flat = corpus_flat("LDRBT");
        let moved = move_writeback(&flat).unwrap();
        assert_eq!(flat.ast, moved.ast);
    }

    #[test]
    fn srs_keeps_its_banked_target() {
        let moved = move_writeback(&corpus_flat("SRS_ia")).unwrap();
        let last = moved.ast.stmts.last().unwrap();
        // SRS does not change mode; its write-back was already banked by the
        // patch (Reg(13, mode)) and must stay that way.
        match last {
            Stmt::If { then_block, .. } => match &then_block[0] {
                Stmt::Assign {
                    lhs: Expr::Reg { index, mode: Some(m) },
                    ..
                } => {
                    assert_eq!(**index, Expr::Num(13));
                    assert_eq!(**m, Expr::var("mode"));
                }
                other => panic!("{other:?}"),
            },
            other => panic!("{other:?}"),
        }
    }
}
