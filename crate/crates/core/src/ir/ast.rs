//! Statement/expression trees for instruction pseudo-code.
//!
//! Every transformation in the pipeline operates on these trees. Nodes carry
//! no source locations: two trees are equal iff they are structurally equal,
//! which is what makes programmatic rewrite patterns practical.

use std::fmt;

/// The four condition flags of the status register.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Flag {
    N,
    Z,
    C,
    V,
}

impl Flag {
    pub const ALL: [Flag; 4] = [Flag::N, Flag::Z, Flag::C, Flag::V];

    pub fn name(self) -> &'static str {
        match self {
            Flag::N => "N",
            Flag::Z => "Z",
            Flag::C => "C",
            Flag::V => "V",
        }
    }

    pub fn from_name(s: &str) -> Option<Flag> {
        match s {
            "N" => Some(Flag::N),
            "Z" => Some(Flag::Z),
            "C" => Some(Flag::C),
            "V" => Some(Flag::V),
            _ => None,
        }
    }
}

/// Binary operators. Logical `and`/`or` treat any nonzero word as true and
/// produce 0 or 1; everything else is plain wrapping u32 arithmetic.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum BinOp {
    Add,
    Sub,
    Mul,
    Eq,
    Ne,
    Lt,
    Gt,
    Le,
    Ge,
    And,
    Or,
    BitAnd,
    BitOr,
    BitXor,
    Lsl,
    Lsr,
    Asr,
    Ror,
}

impl BinOp {
    pub fn token(self) -> &'static str {
        match self {
            BinOp::Add => "+",
            BinOp::Sub => "-",
            BinOp::Mul => "*",
            BinOp::Eq => "==",
            BinOp::Ne => "!=",
            BinOp::Lt => "<",
            BinOp::Gt => ">",
            BinOp::Le => "<=",
            BinOp::Ge => ">=",
            BinOp::And => "and",
            BinOp::Or => "or",
            BinOp::BitAnd => "AND",
            BinOp::BitOr => "OR",
            BinOp::BitXor => "EOR",
            BinOp::Lsl => "LSL",
            BinOp::Lsr => "LSR",
            BinOp::Asr => "ASR",
            BinOp::Ror => "ROR",
        }
    }

    /// True for the comparison operators, whose result is always 0 or 1.
    pub fn is_comparison(self) -> bool {
        matches!(
            self,
            BinOp::Eq | BinOp::Ne | BinOp::Lt | BinOp::Gt | BinOp::Le | BinOp::Ge
        )
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Expr {
    /// Unsigned 32-bit literal.
    Num(u32),
    /// Encoding parameter, local variable, or builtin constant.
    Var(String),
    /// General register access. `mode` selects a banked copy; `None` means
    /// the register as seen from the current processor mode.
    Reg {
        index: Box<Expr>,
        mode: Option<Box<Expr>>,
    },
    /// One of the N/Z/C/V flags, read as 0 or 1.
    Flag(Flag),
    /// Little-endian memory access of 1, 2, or 4 bytes.
    Memory { addr: Box<Expr>, size: u8 },
    Bin {
        op: BinOp,
        lhs: Box<Expr>,
        rhs: Box<Expr>,
    },
    /// Logical negation: 1 if the operand is zero, else 0.
    Not(Box<Expr>),
    /// Builtin function call (`ConditionPassed`, `NbOfSetBitsIn`, ...).
    Fun { name: String, args: Vec<Expr> },
    /// Bit field `value[hi:lo]` (or `value[i]` when hi == lo).
    BitRange {
        value: Box<Expr>,
        hi: Box<Expr>,
        lo: Box<Expr>,
    },
}

impl Expr {
    pub fn var(name: &str) -> Expr {
        Expr::Var(name.to_string())
    }

    pub fn num(n: u32) -> Expr {
        Expr::Num(n)
    }

    pub fn reg(index: Expr) -> Expr {
        Expr::Reg {
            index: Box::new(index),
            mode: None,
        }
    }

    pub fn reg_banked(index: Expr, mode: Expr) -> Expr {
        Expr::Reg {
            index: Box::new(index),
            mode: Some(Box::new(mode)),
        }
    }

    pub fn bin(op: BinOp, lhs: Expr, rhs: Expr) -> Expr {
        Expr::Bin {
            op,
            lhs: Box::new(lhs),
            rhs: Box::new(rhs),
        }
    }

    pub fn fun(name: &str, args: Vec<Expr>) -> Expr {
        Expr::Fun {
            name: name.to_string(),
            args,
        }
    }

    pub fn bit(value: Expr, index: Expr) -> Expr {
        Expr::BitRange {
            value: Box::new(value),
            hi: Box::new(index.clone()),
            lo: Box::new(index),
        }
    }

    pub fn eq_num(name: &str, n: u32) -> Expr {
        Expr::bin(BinOp::Eq, Expr::var(name), Expr::num(n))
    }

    /// Walk the expression tree, visiting this node first.
    pub fn visit<'a>(&'a self, f: &mut impl FnMut(&'a Expr)) {
        f(self);
        match self {
            Expr::Num(_) | Expr::Var(_) | Expr::Flag(_) => {}
            Expr::Reg { index, mode } => {
                index.visit(f);
                if let Some(m) = mode {
                    m.visit(f);
                }
            }
            Expr::Memory { addr, .. } => addr.visit(f),
            Expr::Bin { lhs, rhs, .. } => {
                lhs.visit(f);
                rhs.visit(f);
            }
            Expr::Not(e) => e.visit(f),
            Expr::Fun { args, .. } => {
                for a in args {
                    a.visit(f);
                }
            }
            Expr::BitRange { value, hi, lo } => {
                value.visit(f);
                hi.visit(f);
                lo.visit(f);
            }
        }
    }

    /// True if any sub-expression satisfies the predicate.
    pub fn any(&self, pred: &impl Fn(&Expr) -> bool) -> bool {
        let mut found = false;
        self.visit(&mut |e| {
            if pred(e) {
                found = true;
            }
        });
        found
    }

    /// True if the expression reads processor state (registers, flags,
    /// memory, or a state-reading builtin). Expressions free of state reads
    /// can be evaluated at decode time from the parameters alone.
    pub fn reads_state(&self) -> bool {
        self.any(&|e| match e {
            Expr::Reg { .. } | Expr::Flag(_) | Expr::Memory { .. } => true,
            Expr::Fun { name, .. } => !crate::ir::builtins::is_pure(name),
            _ => false,
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Stmt {
    Assign { lhs: Expr, rhs: Expr },
    If { cond: Expr, then_block: Vec<Stmt>, else_block: Vec<Stmt> },
    /// Builtin procedure call (`LoadMultiple`, `Halt`, ...).
    Call { proc: String, args: Vec<Expr> },
    /// Grouped statements; semantically transparent.
    Block(Vec<Stmt>),
    /// Executing this is a simulator-level fault.
    Unpredictable,
    Nop,
}

/// A parsed pseudo-code body: the statement list of one instruction or one
/// addressing-mode case.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Ast {
    pub stmts: Vec<Stmt>,
}

impl Ast {
    pub fn new(stmts: Vec<Stmt>) -> Ast {
        Ast { stmts }
    }

    /// Visit every statement, outer statements before their blocks.
    pub fn visit_stmts<'a>(&'a self, f: &mut impl FnMut(&'a Stmt)) {
        fn go<'a>(stmts: &'a [Stmt], f: &mut impl FnMut(&'a Stmt)) {
            for s in stmts {
                f(s);
                match s {
                    Stmt::If {
                        then_block,
                        else_block,
                        ..
                    } => {
                        go(then_block, f);
                        go(else_block, f);
                    }
                    Stmt::Block(b) => go(b, f),
                    _ => {}
                }
            }
        }
        go(&self.stmts, f);
    }

    /// Visit every expression in evaluation-relevant positions.
    pub fn visit_exprs<'a>(&'a self, f: &mut impl FnMut(&'a Expr)) {
        self.visit_stmts(&mut |s| match s {
            Stmt::Assign { lhs, rhs } => {
                lhs.visit(f);
                rhs.visit(f);
            }
            Stmt::If { cond, .. } => cond.visit(f),
            Stmt::Call { args, .. } => {
                for a in args {
                    a.visit(f);
                }
            }
            Stmt::Block(_) | Stmt::Unpredictable | Stmt::Nop => {}
        });
    }

    pub fn any_expr(&self, pred: &impl Fn(&Expr) -> bool) -> bool {
        let mut found = false;
        self.visit_exprs(&mut |e| {
            if pred(e) {
                found = true;
            }
        });
        found
    }

    pub fn any_stmt(&self, pred: &impl Fn(&Stmt) -> bool) -> bool {
        let mut found = false;
        self.visit_stmts(&mut |s| {
            if pred(s) {
                found = true;
            }
        });
        found
    }
}

/// Errors reported by [`validate`].
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum AstError {
    #[error("assignment target is not an lvalue: {0}")]
    BadLvalue(String),
    #[error("unknown builtin function `{0}`")]
    UnknownBuiltin(String),
    #[error("builtin `{name}` called with {got} arguments, expected {want}")]
    BadArity { name: String, want: usize, got: usize },
    #[error("memory access size {0} is not 1, 2, or 4")]
    BadMemSize(u8),
}

/// True if an expression may appear on the left of an assignment.
pub fn is_lvalue(e: &Expr) -> bool {
    match e {
        Expr::Var(_) | Expr::Reg { .. } | Expr::Flag(_) | Expr::Memory { .. } => true,
        Expr::BitRange { value, .. } => is_lvalue(value),
        _ => false,
    }
}

/// Check tree well-formedness: lvalue shapes, builtin names and arities,
/// memory access sizes. Identifier binding is checked separately once the
/// unit is linked to its encoding table.
pub fn validate(ast: &Ast) -> Result<(), AstError> {
    let mut err = None;
    ast.visit_stmts(&mut |s| {
        if err.is_some() {
            return;
        }
        match s {
            Stmt::Assign { lhs, .. } if !is_lvalue(lhs) => {
                err = Some(AstError::BadLvalue(crate::ir::printer::print_expr(lhs)));
            }
            Stmt::Call { proc, args } => {
                err = check_call(proc, args.len(), true).err();
            }
            _ => {}
        }
    });
    if let Some(e) = err {
        return Err(e);
    }
    ast.visit_exprs(&mut |e| {
        if err.is_some() {
            return;
        }
        match e {
            Expr::Fun { name, args } => {
                err = check_call(name, args.len(), false).err();
            }
            Expr::Memory { size, .. } if !matches!(size, 1 | 2 | 4) => {
                err = Some(AstError::BadMemSize(*size));
            }
            _ => {}
        }
    });
    match err {
        Some(e) => Err(e),
        None => Ok(()),
    }
}

fn check_call(name: &str, got: usize, is_proc: bool) -> Result<(), AstError> {
    match crate::ir::builtins::lookup(name) {
        Some(b) if b.is_proc == is_proc => {
            if b.arity != got {
                Err(AstError::BadArity {
                    name: name.to_string(),
                    want: b.arity,
                    got,
                })
            } else {
                Ok(())
            }
        }
        _ => Err(AstError::UnknownBuiltin(name.to_string())),
    }
}

/// Replace every occurrence of `pattern` in the expression by `replacement`,
/// returning the rewritten expression and the number of replacements.
pub fn replace_in_expr(e: &Expr, pattern: &Expr, replacement: &Expr) -> (Expr, usize) {
    if e == pattern {
        return (replacement.clone(), 1);
    }
    let mut n = 0;
    let mut sub = |e: &Expr| {
        let (r, k) = replace_in_expr(e, pattern, replacement);
        n += k;
        r
    };
    let out = match e {
        Expr::Num(_) | Expr::Var(_) | Expr::Flag(_) => e.clone(),
        Expr::Reg { index, mode } => Expr::Reg {
            index: Box::new(sub(index)),
            mode: mode.as_ref().map(|m| Box::new(sub(m))),
        },
        Expr::Memory { addr, size } => Expr::Memory {
            addr: Box::new(sub(addr)),
            size: *size,
        },
        Expr::Bin { op, lhs, rhs } => Expr::Bin {
            op: *op,
            lhs: Box::new(sub(lhs)),
            rhs: Box::new(sub(rhs)),
        },
        Expr::Not(inner) => Expr::Not(Box::new(sub(inner))),
        Expr::Fun { name, args } => Expr::Fun {
            name: name.clone(),
            args: args.iter().map(&mut sub).collect(),
        },
        Expr::BitRange { value, hi, lo } => Expr::BitRange {
            value: Box::new(sub(value)),
            hi: Box::new(sub(hi)),
            lo: Box::new(sub(lo)),
        },
    };
    (out, n)
}

fn replace_in_stmts(stmts: &[Stmt], pattern: &Expr, replacement: &Expr) -> (Vec<Stmt>, usize) {
    let mut n = 0;
    let out = stmts
        .iter()
        .map(|s| {
            let (r, k) = replace_in_stmt(s, pattern, replacement);
            n += k;
            r
        })
        .collect();
    (out, n)
}

fn replace_in_stmt(s: &Stmt, pattern: &Expr, replacement: &Expr) -> (Stmt, usize) {
    let mut n = 0;
    let mut sub = |e: &Expr| {
        let (r, k) = replace_in_expr(e, pattern, replacement);
        n += k;
        r
    };
    let out = match s {
        Stmt::Assign { lhs, rhs } => Stmt::Assign {
            lhs: sub(lhs),
            rhs: sub(rhs),
        },
        Stmt::Call { proc, args } => Stmt::Call {
            proc: proc.clone(),
            args: args.iter().map(&mut sub).collect(),
        },
        Stmt::If {
            cond,
            then_block,
            else_block,
        } => {
            let cond = sub(cond);
            let (t, k1) = replace_in_stmts(then_block, pattern, replacement);
            let (e, k2) = replace_in_stmts(else_block, pattern, replacement);
            n += k1 + k2;
            Stmt::If {
                cond,
                then_block: t,
                else_block: e,
            }
        }
        Stmt::Block(b) => {
            let (b, k) = replace_in_stmts(b, pattern, replacement);
            n += k;
            Stmt::Block(b)
        }
        Stmt::Unpredictable => Stmt::Unpredictable,
        Stmt::Nop => Stmt::Nop,
    };
    (out, n)
}

/// Structural search-and-replace over a whole tree. Every sub-expression
/// equal to `pattern` is replaced. Zero replacements is a valid outcome;
/// callers that require progress assert on the returned count.
pub fn replace_exp(ast: &Ast, pattern: &Expr, replacement: &Expr) -> (Ast, usize) {
    let (stmts, n) = replace_in_stmts(&ast.stmts, pattern, replacement);
    (Ast::new(stmts), n)
}

impl fmt::Display for Ast {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&crate::ir::printer::print_ast(self))
    }
}

impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&crate::ir::printer::print_expr(self))
    }
}
