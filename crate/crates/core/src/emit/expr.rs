//! Pseudo-code to Rust expression translation. The produced code calls the
//! same runtime (`CpuState`, `ir::eval`) the tree interpreter uses, so the
//! two back-ends share one definition of every primitive.

use std::collections::BTreeMap;

use crate::ir::ast::{BinOp, Expr};
use super::EmitError;

/// What a name resolves to in the generated function.
#[derive(Debug, Clone)]
pub enum Binding {
    /// Decoded parameter: access text (`p.cond`, or a decoder local).
    Param(String),
    /// Function-level local: the (possibly underscore-prefixed) identifier.
    Local(String),
}

#[derive(Debug, Default)]
pub struct Uses {
    pub eval: bool,
    pub flag: bool,
    pub old_mode: bool,
    pub mode_from_value: bool,
}

pub struct ExprCx<'a> {
    pub bindings: &'a BTreeMap<String, Binding>,
    pub uses: Uses,
}

/// A translated fragment and whether it can be embedded without parentheses.
struct Frag {
    text: String,
    atomic: bool,
}

impl Frag {
    fn atom(text: String) -> Frag {
        Frag { text, atomic: true }
    }

    fn open(text: String) -> Frag {
        Frag {
            text,
            atomic: false,
        }
    }

    /// Text suitable as an operand of another operator.
    fn operand(&self) -> String {
        if self.atomic {
            self.text.clone()
        } else {
            format!("({})", self.text)
        }
    }
}

impl ExprCx<'_> {
    fn name(&mut self, name: &str) -> Result<Frag, EmitError> {
        if let Some(b) = self.bindings.get(name) {
            return Ok(Frag::atom(match b {
                Binding::Param(access) => access.clone(),
                Binding::Local(ident) => ident.clone(),
            }));
        }
        if name == "old_mode" {
            self.uses.old_mode = true;
            return Ok(Frag::open("old_mode as u32".to_string()));
        }
        Err(EmitError::Unbound(name.to_string()))
    }

    fn value(&mut self, e: &Expr) -> Result<Frag, EmitError> {
        Ok(match e {
            Expr::Num(n) => Frag::atom(format!("{n}u32")),
            Expr::Var(v) => self.name(v)?,
            Expr::Flag(f) => {
                self.uses.flag = true;
                Frag::open(format!("cpu.flag(Flag::{}) as u32", f.name()))
            }
            Expr::Reg { index, mode } => {
                let idx = self.value(index)?.text;
                match mode.as_deref() {
                    None => Frag::atom(format!("cpu.read_reg({idx})?")),
                    Some(Expr::Var(v)) if v == "old_mode" => {
                        self.uses.old_mode = true;
                        Frag::atom(format!("cpu.read_reg_mode({idx}, old_mode)?"))
                    }
                    Some(m) => {
                        self.uses.mode_from_value = true;
                        let mv = self.value(m)?.text;
                        Frag::atom(format!(
                            "cpu.read_reg_mode({idx}, mode_from_value({mv})?)?"
                        ))
                    }
                }
            }
            Expr::Memory { addr, size } => {
                let a = self.value(addr)?.text;
                Frag::atom(format!("cpu.read_mem({a}, {size})?"))
            }
            Expr::Bin { op, lhs, rhs } => self.binop(*op, lhs, rhs)?,
            Expr::Not(inner) => {
                let x = self.value(inner)?.operand();
                Frag::open(format!("({x} == 0) as u32"))
            }
            Expr::Fun { name, args } => self.call(name, args)?,
            Expr::BitRange { value, hi, lo } => {
                self.uses.eval = true;
                let v = self.value(value)?.text;
                let h = self.value(hi)?.text;
                let l = self.value(lo)?.text;
                Frag::atom(format!("eval::extract_bits({v}, {h}, {l})"))
            }
        })
    }

    fn binop(&mut self, op: BinOp, lhs: &Expr, rhs: &Expr) -> Result<Frag, EmitError> {
        let l = self.value(lhs)?;
        let r = self.value(rhs)?;
        Ok(match op {
            BinOp::Add => Frag::atom(format!("{}.wrapping_add({})", l.operand(), r.text)),
            BinOp::Sub => Frag::atom(format!("{}.wrapping_sub({})", l.operand(), r.text)),
            BinOp::Mul => Frag::atom(format!("{}.wrapping_mul({})", l.operand(), r.text)),
            BinOp::BitAnd => Frag::open(format!("{} & {}", l.operand(), r.operand())),
            BinOp::BitOr => Frag::open(format!("{} | {}", l.operand(), r.operand())),
            BinOp::BitXor => Frag::open(format!("{} ^ {}", l.operand(), r.operand())),
            BinOp::Lsl | BinOp::Lsr | BinOp::Asr | BinOp::Ror => {
                self.uses.eval = true;
                let f = match op {
                    BinOp::Lsl => "lsl",
                    BinOp::Lsr => "lsr",
                    BinOp::Asr => "asr",
                    _ => "ror",
                };
                Frag::atom(format!("eval::{f}({}, {})", l.text, r.text))
            }
            BinOp::Eq | BinOp::Ne | BinOp::Lt | BinOp::Gt | BinOp::Le | BinOp::Ge
            | BinOp::And | BinOp::Or => {
                let b = self.bool_from_frags(op, l, r);
                Frag::open(format!("({b}) as u32"))
            }
        })
    }

    fn bool_from_frags(&mut self, op: BinOp, l: Frag, r: Frag) -> String {
        match op {
            BinOp::Eq | BinOp::Ne | BinOp::Lt | BinOp::Gt | BinOp::Le | BinOp::Ge => {
                format!("{} {} {}", l.operand(), op.token(), r.operand())
            }
            // Plain `&`/`|` on bool: both sides evaluate, like the
            // interpreter.
            BinOp::And => format!("({} != 0) & ({} != 0)", l.operand(), r.operand()),
            BinOp::Or => format!("({} != 0) | ({} != 0)", l.operand(), r.operand()),
            _ => unreachable!(),
        }
    }

    fn call(&mut self, name: &str, args: &[Expr]) -> Result<Frag, EmitError> {
        let vals: Result<Vec<String>, EmitError> =
            args.iter().map(|a| Ok(self.value(a)?.text)).collect();
        let vals = vals?;
        Ok(match name {
            "ConditionPassed" => {
                Frag::open(format!("cpu.condition_passed({}) as u32", vals[0]))
            }
            "GetSPSR" => Frag::atom("cpu.spsr()".to_string()),
            _ => {
                let f = match name {
                    "CarryFromAdd2" => "carry_from_add2",
                    "CarryFromAdd3" => "carry_from_add3",
                    "BorrowFromSub2" => "borrow_from_sub2",
                    "OverflowFromAdd2" => "overflow_from_add2",
                    "OverflowFromAdd3" => "overflow_from_add3",
                    "OverflowFromSub2" => "overflow_from_sub2",
                    "SignedSatAdd2" => "signed_sat_add2",
                    "SignedSatSub2" => "signed_sat_sub2",
                    "NbOfSetBitsIn" => "nb_of_set_bits",
                    "SignExtend" => "sign_extend",
                    other => return Err(EmitError::NoTranslation(other.to_string())),
                };
                self.uses.eval = true;
                Frag::atom(format!("eval::{f}({})", vals.join(", ")))
            }
        })
    }

    /// Translate into a word-valued Rust expression (statement position, no
    /// redundant outer parentheses).
    pub fn word(&mut self, e: &Expr) -> Result<String, EmitError> {
        Ok(self.value(e)?.text)
    }

    /// Translate a condition into a native `bool` expression.
    pub fn boolean(&mut self, e: &Expr) -> Result<String, EmitError> {
        Ok(match e {
            Expr::Num(0) => "false".to_string(),
            Expr::Num(_) => "true".to_string(),
            Expr::Bin {
                op: BinOp::And,
                lhs,
                rhs,
            } => format!("({}) & ({})", self.boolean(lhs)?, self.boolean(rhs)?),
            Expr::Bin {
                op: BinOp::Or,
                lhs,
                rhs,
            } => format!("({}) | ({})", self.boolean(lhs)?, self.boolean(rhs)?),
            Expr::Bin { op, lhs, rhs } if op.is_comparison() => {
                let l = self.value(lhs)?;
                let r = self.value(rhs)?;
                format!("{} {} {}", l.operand(), op.token(), r.operand())
            }
            Expr::Not(inner) => format!("!({})", self.boolean(inner)?),
            Expr::Fun { name, args } if name == "ConditionPassed" => {
                let c = self.value(&args[0])?.text;
                format!("cpu.condition_passed({c})")
            }
            Expr::Flag(f) => {
                self.uses.flag = true;
                format!("cpu.flag(Flag::{})", f.name())
            }
            other => {
                let v = self.value(other)?;
                format!("{} != 0", v.operand())
            }
        })
    }
}
