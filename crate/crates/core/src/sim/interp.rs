//! Direct tree interpreter: the reference semantics every other back-end is
//! tested against. It executes a flat instruction's code against a
//! `CpuState`, with the decoded parameter record as the environment.
//!
//! Evaluation rules shared with the generated code: statements execute in
//! order; an assignment evaluates its right side before resolving the
//! target; `and`/`or` do not short-circuit; a data abort unwinds the
//! instruction immediately.

use super::state::{CpuState, Fault, Mode};
use crate::ir::ast::{Ast, Expr, Stmt};
use crate::ir::eval;
use crate::ir::types::FlatInstruction;

/// How one instruction finished.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Outcome {
    Completed,
    /// The instruction unwound on a data abort and the state has vectored.
    Aborted { addr: u32 },
}

struct Ctx<'a> {
    lookup: &'a dyn Fn(&str) -> Option<u32>,
    locals: Vec<(String, u32)>,
    /// Processor mode sampled at instruction entry.
    old_mode: Mode,
}

impl Ctx<'_> {
    fn local(&self, name: &str) -> Option<u32> {
        self.locals
            .iter()
            .rev()
            .find(|(n, _)| n == name)
            .map(|(_, v)| *v)
    }

    fn set_local(&mut self, name: &str, value: u32) {
        match self.locals.iter_mut().find(|(n, _)| n == name) {
            Some((_, v)) => *v = value,
            None => self.locals.push((name.to_string(), value)),
        }
    }
}

fn eval_expr(e: &Expr, ctx: &mut Ctx, cpu: &mut CpuState) -> Result<u32, Fault> {
    match e {
        Expr::Num(n) => Ok(*n),
        Expr::Var(name) => {
            if let Some(v) = (ctx.lookup)(name) {
                return Ok(v);
            }
            if let Some(v) = ctx.local(name) {
                return Ok(v);
            }
            if name == "old_mode" {
                return Ok(ctx.old_mode.bits());
            }
            Err(Fault::Internal(format!("read of unbound `{name}`")))
        }
        Expr::Reg { index, mode } => {
            let idx = eval_expr(index, ctx, cpu)?;
            match mode {
                None => cpu.read_reg(idx),
                Some(m) => {
                    let mv = eval_expr(m, ctx, cpu)?;
                    cpu.read_reg_mode(idx, super::state::mode_from_value(mv)?)
                }
            }
        }
        Expr::Flag(f) => Ok(cpu.flag(*f) as u32),
        Expr::Memory { addr, size } => {
            let a = eval_expr(addr, ctx, cpu)?;
            cpu.read_mem(a, *size)
        }
        Expr::Bin { op, lhs, rhs } => {
            // No short-circuiting: both sides evaluate.
            let l = eval_expr(lhs, ctx, cpu)?;
            let r = eval_expr(rhs, ctx, cpu)?;
            Ok(eval::apply_binop(*op, l, r))
        }
        Expr::Not(inner) => Ok((eval_expr(inner, ctx, cpu)? == 0) as u32),
        Expr::Fun { name, args } => {
            let mut vals = Vec::with_capacity(args.len());
            for a in args {
                vals.push(eval_expr(a, ctx, cpu)?);
            }
            match name.as_str() {
                "ConditionPassed" => Ok(cpu.condition_passed(vals[0]) as u32),
                "GetSPSR" => Ok(cpu.spsr()),
                _ => eval::apply_pure_builtin(name, &vals)
                    .ok_or_else(|| Fault::Internal(format!("no semantics for `{name}`"))),
            }
        }
        Expr::BitRange { value, hi, lo } => {
            let v = eval_expr(value, ctx, cpu)?;
            let h = eval_expr(hi, ctx, cpu)?;
            let l = eval_expr(lo, ctx, cpu)?;
            Ok(eval::extract_bits(v, h, l))
        }
    }
}

fn assign(lhs: &Expr, value: u32, ctx: &mut Ctx, cpu: &mut CpuState) -> Result<(), Fault> {
    match lhs {
        Expr::Var(name) => {
            if (ctx.lookup)(name).is_some() {
                return Err(Fault::Internal(format!("assignment to parameter `{name}`")));
            }
            ctx.set_local(name, value);
            Ok(())
        }
        Expr::Reg { index, mode } => {
            let idx = eval_expr(index, ctx, cpu)?;
            match mode {
                None => cpu.write_reg(idx, value),
                Some(m) => {
                    let mv = eval_expr(m, ctx, cpu)?;
                    cpu.write_reg_mode(idx, super::state::mode_from_value(mv)?, value)
                }
            }
        }
        Expr::Flag(f) => {
            cpu.set_flag(*f, value != 0);
            Ok(())
        }
        Expr::Memory { addr, size } => {
            let a = eval_expr(addr, ctx, cpu)?;
            cpu.write_mem(a, *size, value)
        }
        Expr::BitRange { value: target, hi, lo } => {
            let h = eval_expr(hi, ctx, cpu)?;
            let l = eval_expr(lo, ctx, cpu)?;
            if h < l || h > 31 {
                return Err(Fault::Internal(format!("bad bit-range target [{h}:{l}]")));
            }
            let width = h - l + 1;
            let mask = if width >= 32 { u32::MAX } else { ((1u32 << width) - 1) << l };
            let cur = eval_expr(target, ctx, cpu)?;
            let merged = (cur & !mask) | ((value << l) & mask);
            assign(target, merged, ctx, cpu)
        }
        other => Err(Fault::Internal(format!(
            "assignment target is not an lvalue: {other:?}"
        ))),
    }
}

/// Transfer registers from memory, lowest register at the lowest address;
/// loading R15 branches through the word-aligned value. Shared with the
/// generated back-end.
pub fn load_multiple(cpu: &mut CpuState, start: u32, reglist: u32) -> Result<(), Fault> {
    let mut addr = start;
    for i in 0..16u32 {
        if reglist & (1 << i) == 0 {
            continue;
        }
        let word = cpu.read_mem(addr, 4)?;
        if i == 15 {
            cpu.write_reg(15, word & 0xFFFF_FFFC)?;
        } else {
            cpu.write_reg(i, word)?;
        }
        addr = addr.wrapping_add(4);
    }
    Ok(())
}

/// Transfer registers to memory; R15 stores as pc + 8 like any other read.
pub fn store_multiple(cpu: &mut CpuState, start: u32, reglist: u32) -> Result<(), Fault> {
    let mut addr = start;
    for i in 0..16u32 {
        if reglist & (1 << i) == 0 {
            continue;
        }
        let v = cpu.read_reg(i)?;
        cpu.write_mem(addr, 4, v)?;
        addr = addr.wrapping_add(4);
    }
    Ok(())
}

/// Restore CPSR from the current mode's SPSR.
pub fn restore_cpsr(cpu: &mut CpuState) -> Result<(), Fault> {
    let spsr = cpu.spsr();
    cpu.set_cpsr(spsr)
}

fn exec_call(proc: &str, vals: &[u32], cpu: &mut CpuState) -> Result<(), Fault> {
    match proc {
        "LoadMultiple" => load_multiple(cpu, vals[0], vals[1]),
        "StoreMultiple" => store_multiple(cpu, vals[0], vals[1]),
        "RestoreCPSR" => restore_cpsr(cpu),
        "WriteCPSR" => cpu.set_cpsr(vals[0]),
        "Halt" => {
            cpu.halted = true;
            Ok(())
        }
        other => Err(Fault::Internal(format!("no semantics for procedure `{other}`"))),
    }
}

fn exec_stmts(stmts: &[Stmt], ctx: &mut Ctx, cpu: &mut CpuState) -> Result<(), Fault> {
    for s in stmts {
        match s {
            Stmt::Assign { lhs, rhs } => {
                let v = eval_expr(rhs, ctx, cpu)?;
                assign(lhs, v, ctx, cpu)?;
            }
            Stmt::If {
                cond,
                then_block,
                else_block,
            } => {
                if eval_expr(cond, ctx, cpu)? != 0 {
                    exec_stmts(then_block, ctx, cpu)?;
                } else {
                    exec_stmts(else_block, ctx, cpu)?;
                }
            }
            Stmt::Call { proc, args } => {
                let mut vals = Vec::with_capacity(args.len());
                for a in args {
                    vals.push(eval_expr(a, ctx, cpu)?);
                }
                exec_call(proc, &vals, cpu)?;
            }
            Stmt::Block(b) => exec_stmts(b, ctx, cpu)?,
            Stmt::Unpredictable => return Err(Fault::UnpredictableExecuted),
            Stmt::Nop => {}
        }
    }
    Ok(())
}

/// Execute one tree against the state. A data abort unwinds the instruction
/// and takes the exception entry; other faults propagate to the caller.
pub fn execute(
    ast: &Ast,
    lookup: &dyn Fn(&str) -> Option<u32>,
    cpu: &mut CpuState,
) -> Result<Outcome, Fault> {
    let mut ctx = Ctx {
        lookup,
        locals: Vec::new(),
        old_mode: cpu.mode,
    };
    match exec_stmts(&ast.stmts, &mut ctx, cpu) {
        Ok(()) => Ok(Outcome::Completed),
        Err(Fault::DataAbort { addr }) => {
            cpu.enter_data_abort(addr);
            Ok(Outcome::Aborted { addr })
        }
        Err(other) => Err(other),
    }
}

/// Execute one flat instruction with a decoded parameter record.
pub fn interpret(
    flat: &FlatInstruction,
    lookup: &dyn Fn(&str) -> Option<u32>,
    cpu: &mut CpuState,
) -> Result<Outcome, Fault> {
    execute(&flat.ast, lookup, cpu)
}
