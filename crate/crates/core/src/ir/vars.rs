//! Identifier classification: every name in a pseudo-code tree is an
//! encoding parameter, a local variable (first occurrence is an assignment
//! target), or a builtin constant. Anything else is an unbound identifier.

use std::collections::BTreeSet;

use super::ast::{Ast, Expr, Stmt};
use super::builtins;

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct VarClasses {
    pub params: BTreeSet<String>,
    pub locals: BTreeSet<String>,
    pub builtins: BTreeSet<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("unbound identifier `{name}`")]
pub struct UnboundError {
    pub name: String,
}

struct Walker<'a> {
    encoding_params: &'a BTreeSet<String>,
    classes: VarClasses,
}

impl Walker<'_> {
    fn read(&mut self, e: &Expr) -> Result<(), UnboundError> {
        match e {
            Expr::Var(name) => self.use_name(name, false),
            Expr::Num(_) | Expr::Flag(_) => Ok(()),
            Expr::Reg { index, mode } => {
                self.read(index)?;
                if let Some(m) = mode {
                    self.read(m)?;
                }
                Ok(())
            }
            Expr::Memory { addr, .. } => self.read(addr),
            Expr::Bin { lhs, rhs, .. } => {
                self.read(lhs)?;
                self.read(rhs)
            }
            Expr::Not(inner) => self.read(inner),
            Expr::Fun { args, .. } => args.iter().try_for_each(|a| self.read(a)),
            Expr::BitRange { value, hi, lo } => {
                self.read(value)?;
                self.read(hi)?;
                self.read(lo)
            }
        }
    }

    fn use_name(&mut self, name: &str, is_assign_target: bool) -> Result<(), UnboundError> {
        if self.encoding_params.contains(name) {
            self.classes.params.insert(name.to_string());
        } else if builtins::is_builtin_constant(name) {
            self.classes.builtins.insert(name.to_string());
        } else if self.classes.locals.contains(name) {
            // already declared
        } else if is_assign_target {
            self.classes.locals.insert(name.to_string());
        } else {
            return Err(UnboundError {
                name: name.to_string(),
            });
        }
        Ok(())
    }

    fn lvalue(&mut self, e: &Expr) -> Result<(), UnboundError> {
        match e {
            // A plain name on the left declares a local on first sight.
            Expr::Var(name) => self.use_name(name, true),
            // Writing a bit field requires the target to exist already.
            Expr::BitRange { value, hi, lo } => {
                self.read(hi)?;
                self.read(lo)?;
                self.lvalue(value)
            }
            other => self.read(other),
        }
    }

    fn stmts(&mut self, stmts: &[Stmt]) -> Result<(), UnboundError> {
        for s in stmts {
            match s {
                Stmt::Assign { lhs, rhs } => {
                    // Right side first: `x = x + 1` with undeclared x is an
                    // unbound read, not a declaration.
                    self.read(rhs)?;
                    self.lvalue(lhs)?;
                }
                Stmt::If {
                    cond,
                    then_block,
                    else_block,
                } => {
                    self.read(cond)?;
                    self.stmts(then_block)?;
                    self.stmts(else_block)?;
                }
                Stmt::Call { args, .. } => {
                    for a in args {
                        self.read(a)?;
                    }
                }
                Stmt::Block(b) => self.stmts(b)?,
                Stmt::Unpredictable | Stmt::Nop => {}
            }
        }
        Ok(())
    }
}

/// Classify every identifier in `ast`. `encoding_params` are the parameter
/// names of the unit's encoding table; `predeclared` are locals provided by
/// another unit (the mode family's outputs, when checking an instruction
/// body on its own).
pub fn free_vars(
    ast: &Ast,
    encoding_params: &BTreeSet<String>,
    predeclared: &BTreeSet<String>,
) -> Result<VarClasses, UnboundError> {
    let mut w = Walker {
        encoding_params,
        classes: VarClasses {
            locals: predeclared.clone(),
            ..VarClasses::default()
        },
    };
    w.stmts(&ast.stmts)?;
    Ok(w.classes)
}

/// Locals a unit assigns (what a mode case provides to instruction bodies).
pub fn assigned_locals(ast: &Ast, encoding_params: &BTreeSet<String>) -> BTreeSet<String> {
    let mut out = BTreeSet::new();
    ast.visit_stmts(&mut |s| {
        if let Stmt::Assign {
            lhs: Expr::Var(name),
            ..
        } = s
        {
            if !encoding_params.contains(name) && !builtins::is_builtin_constant(name) {
                out.insert(name.clone());
            }
        }
    });
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::isa::pseudocode::parse_pseudocode;

    fn params(names: &[&str]) -> BTreeSet<String> {
        names.iter().map(|s| s.to_string()).collect()
    }

    #[test]
    fn ia_mode_classification() {
        let text = "Mode ia for lsm_mode:\n    start_address = Rn\n    end_address = Rn + (NbOfSetBitsIn(reglist) * 4) - 4\n    if ConditionPassed(cond) and W == 1 then\n        Rn = Rn + (NbOfSetBitsIn(reglist) * 4)\n";
        let unit = &parse_pseudocode(text).unwrap()[0];
        let enc = params(&["n", "reglist", "cond", "W"]);
        let classes = free_vars(&unit.ast, &enc, &BTreeSet::new()).unwrap();
        assert_eq!(classes.locals, params(&["start_address", "end_address"]));
        assert_eq!(classes.params, params(&["n", "reglist", "cond", "W"]));
    }

    #[test]
    fn tiny_assignment() {
        let text = "Instruction T:\n    Rd = 0\n";
        let unit = &parse_pseudocode(text).unwrap()[0];
        let classes = free_vars(&unit.ast, &params(&["d"]), &BTreeSet::new()).unwrap();
        assert_eq!(classes.params, params(&["d"]));
        assert!(classes.locals.is_empty());
    }

    #[test]
    fn unbound_read_is_an_error() {
        let text = "Instruction T:\n    Rd = foo\n";
        let unit = &parse_pseudocode(text).unwrap()[0];
        let err = free_vars(&unit.ast, &params(&["d"]), &BTreeSet::new()).unwrap_err();
        assert_eq!(err.name, "foo");
    }

    #[test]
    fn self_reference_before_declaration_is_unbound() {
        let text = "Instruction T:\n    x = x + 1\n";
        let unit = &parse_pseudocode(text).unwrap()[0];
        assert!(free_vars(&unit.ast, &BTreeSet::new(), &BTreeSet::new()).is_err());
    }
}
