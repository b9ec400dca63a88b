//! May-branch analysis.
//!
//! Dynamic translation needs basic-block terminators: an instruction ends a
//! block if it may modify the program counter for some processor state. The
//! analyser walks the code searching for assignments to R15 — direct, or
//! through a parameter-indexed register — and conjoins each with its if-path
//! condition. Path conjuncts that depend on processor state rather than
//! decode-time parameters are dropped (the instruction *may* branch), the
//! contributions are disjoined, and the result is simplified against the
//! instruction's validity constraints. A few instructions are managed
//! manually through the override table.

use std::collections::BTreeSet;

use crate::ir::ast::{BinOp, Expr, Stmt};
use crate::ir::simplify::simplify;
use crate::ir::types::FlatInstruction;
use crate::isa::BranchOverride;

/// One register assignment and the decode-time condition under which it
/// writes the PC.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Contribution {
    pub lvalue: String,
    pub condition: Expr,
}

#[derive(Debug, Clone)]
pub struct BranchReport {
    pub contributions: Vec<Contribution>,
    /// The analyser's own verdict, before any override.
    pub auto_condition: Expr,
    /// Final decode-time condition.
    pub condition: Expr,
    pub overridden: bool,
    pub warnings: Vec<String>,
}

/// Expressions allowed in a decode-time condition: parameters, constants,
/// comparison/boolean structure, and constant-indexed bit fields of
/// parameters. Anything else gets dropped from path conditions.
fn decode_time(e: &Expr, params: &BTreeSet<String>) -> bool {
    match e {
        Expr::Num(_) => true,
        Expr::Var(v) => params.contains(v),
        Expr::Not(inner) => decode_time(inner, params),
        Expr::Bin { lhs, rhs, .. } => decode_time(lhs, params) && decode_time(rhs, params),
        Expr::BitRange { value, hi, lo } => {
            decode_time(value, params) && decode_time(hi, params) && decode_time(lo, params)
        }
        Expr::Reg { .. } | Expr::Flag(_) | Expr::Memory { .. } | Expr::Fun { .. } => false,
    }
}

/// Split a condition into `and`-conjuncts and keep the decode-time ones.
fn keep_decode_atoms(cond: &Expr, params: &BTreeSet<String>, out: &mut Vec<Expr>) {
    match cond {
        Expr::Bin {
            op: BinOp::And,
            lhs,
            rhs,
        } => {
            keep_decode_atoms(lhs, params, out);
            keep_decode_atoms(rhs, params, out);
        }
        e if decode_time(e, params) => out.push(e.clone()),
        _ => {}
    }
}

fn conjoin(atoms: &[Expr]) -> Expr {
    match atoms.len() {
        0 => Expr::Num(1),
        1 => atoms[0].clone(),
        _ => {
            let mut it = atoms.iter().cloned();
            let first = it.next().unwrap();
            it.fold(first, |acc, e| Expr::bin(BinOp::And, acc, e))
        }
    }
}

struct Analyzer<'a> {
    params: BTreeSet<String>,
    contributions: Vec<Contribution>,
    warnings: Vec<String>,
    conservative: bool,
    flat: &'a FlatInstruction,
}

impl Analyzer<'_> {
    fn assignment(&mut self, lhs: &Expr, path: &[Expr]) {
        // Writing through a bit range hits the same storage.
        let target = match lhs {
            Expr::BitRange { value, .. } => value,
            other => other,
        };
        let Expr::Reg { index, .. } = target else {
            return; // locals, flags, and memory never hold the PC
        };
        let lvalue = crate::ir::printer::print_expr(lhs);
        match index.as_ref() {
            Expr::Num(15) => self.contributions.push(Contribution {
                lvalue,
                condition: conjoin(path),
            }),
            Expr::Num(_) => {}
            Expr::Var(p) if self.params.contains(p) => {
                let mut atoms = path.to_vec();
                atoms.push(Expr::eq_num(p, 15));
                self.contributions.push(Contribution {
                    lvalue,
                    condition: conjoin(&atoms),
                });
            }
            other => {
                self.conservative = true;
                self.warnings.push(format!(
                    "cannot classify register index `{}` in `{}`; assuming may-branch",
                    crate::ir::printer::print_expr(other),
                    self.flat.name,
                ));
            }
        }
    }

    fn call(&mut self, proc: &str, args: &[Expr], path: &[Expr]) {
        // Load-multiple targets the PC when bit 15 of its register list is
        // set; the list length is symbolic, so this one rule stands in for
        // the per-register walk.
        if proc != "LoadMultiple" {
            return;
        }
        match args.get(1) {
            Some(Expr::Var(p)) if self.params.contains(p) => {
                let mut atoms = path.to_vec();
                atoms.push(Expr::bin(
                    BinOp::Eq,
                    Expr::bit(Expr::var(p), Expr::Num(15)),
                    Expr::Num(1),
                ));
                self.contributions.push(Contribution {
                    lvalue: format!("LoadMultiple(.., {p})"),
                    condition: conjoin(&atoms),
                });
            }
            other => {
                self.conservative = true;
                self.warnings.push(format!(
                    "register list of LoadMultiple in `{}` is not a plain parameter ({:?}); assuming may-branch",
                    self.flat.name, other
                ));
            }
        }
    }

    fn walk(&mut self, stmts: &[Stmt], path: &mut Vec<Expr>) {
        for s in stmts {
            match s {
                Stmt::Assign { lhs, .. } => self.assignment(lhs, path),
                Stmt::Call { proc, args } => self.call(proc, args, path),
                Stmt::If {
                    cond,
                    then_block,
                    else_block,
                } => {
                    let mut then_atoms = Vec::new();
                    keep_decode_atoms(cond, &self.params, &mut then_atoms);
                    let depth = path.len();
                    path.extend(then_atoms);
                    self.walk(then_block, path);
                    path.truncate(depth);
                    // The else side holds the negated condition; keep it only
                    // when the whole condition is decode-time evaluable.
                    if decode_time(cond, &self.params) {
                        path.push(Expr::Not(Box::new(cond.clone())));
                    }
                    self.walk(else_block, path);
                    path.truncate(depth);
                }
                Stmt::Block(b) => self.walk(b, path),
                Stmt::Unpredictable | Stmt::Nop => {}
            }
        }
    }
}

/// Compute the may-branch condition of one flat instruction.
pub fn may_branch(
    flat: &FlatInstruction,
    overrides: &[(String, BranchOverride)],
) -> BranchReport {
    let params: BTreeSet<String> = flat.decode_values().into_iter().collect();
    let mut az = Analyzer {
        params,
        contributions: Vec::new(),
        warnings: Vec::new(),
        conservative: false,
        flat,
    };
    let mut path = Vec::new();
    az.walk(&flat.ast.stmts, &mut path);

    let auto = if az.conservative {
        Expr::Num(1)
    } else {
        let disjunction = az
            .contributions
            .iter()
            .map(|c| c.condition.clone())
            .fold(Expr::Num(0), |acc, e| Expr::bin(BinOp::Or, acc, e));
        simplify(&disjunction, &flat.constraints)
    };

    // Manual override: exact flat name first, then its base, then the
    // source instruction.
    let ov = overrides
        .iter()
        .find(|(n, _)| *n == flat.name)
        .or_else(|| overrides.iter().find(|(n, _)| *n == flat.base))
        .or_else(|| overrides.iter().find(|(n, _)| *n == flat.instr));
    let (condition, overridden) = match ov {
        Some((_, BranchOverride::Always)) => (Expr::Num(1), true),
        Some((_, BranchOverride::Never)) => (Expr::Num(0), true),
        Some((_, BranchOverride::Expr(e))) => (e.clone(), true),
        None => (auto.clone(), false),
    };

    BranchReport {
        contributions: az.contributions,
        auto_condition: auto,
        condition,
        overridden,
        warnings: az.warnings,
    }
}

/// Evaluate a may-branch condition against a decoded parameter record.
pub fn eval_condition(cond: &Expr, lookup: &impl Fn(&str) -> Option<u32>) -> bool {
    crate::ir::eval::eval_pure(cond, lookup).map(|v| v != 0).unwrap_or(true)
}
