//! Canonical pretty-printer for pseudo-code trees.
//!
//! The output re-parses to a structurally identical tree (the ingest
//! round-trip property), and is what `--dump-ir` and the debug dump emit.
//! Parentheses are inserted from operator precedence, so the printed form is
//! canonical even when the source text had redundant grouping.

use super::ast::{Ast, BinOp, Expr, Stmt};

/// Binding strength; higher binds tighter. Mirrors the grammar in
/// `docs/format.md`.
fn precedence(op: BinOp) -> u8 {
    match op {
        BinOp::Or => 1,
        BinOp::And => 2,
        // `not` sits at 3
        BinOp::Eq | BinOp::Ne | BinOp::Lt | BinOp::Gt | BinOp::Le | BinOp::Ge => 4,
        BinOp::BitOr | BinOp::BitXor => 5,
        BinOp::BitAnd => 6,
        BinOp::Lsl | BinOp::Lsr | BinOp::Asr | BinOp::Ror => 7,
        BinOp::Add | BinOp::Sub => 8,
        BinOp::Mul => 9,
    }
}

const NOT_PREC: u8 = 3;

fn print_prec(e: &Expr, min: u8, out: &mut String) {
    match e {
        Expr::Num(n) => out.push_str(&n.to_string()),
        Expr::Var(v) => out.push_str(v),
        Expr::Flag(f) => {
            out.push_str(f.name());
            out.push_str(" Flag");
        }
        Expr::Reg { index, mode } => match (index.as_ref(), mode) {
            (Expr::Num(15), None) => out.push_str("PC"),
            (Expr::Num(n), None) => out.push_str(&format!("R{n}")),
            (Expr::Var(v), None) if v.len() == 1 => out.push_str(&format!("R{v}")),
            _ => {
                out.push_str("Reg(");
                print_prec(index, 0, out);
                if let Some(m) = mode {
                    out.push_str(", ");
                    print_prec(m, 0, out);
                }
                out.push(')');
            }
        },
        Expr::Memory { addr, size } => {
            out.push_str("Memory[");
            print_prec(addr, 0, out);
            out.push_str(&format!(", {size}]"));
        }
        Expr::Bin { op, lhs, rhs } => {
            let p = precedence(*op);
            let paren = p < min;
            if paren {
                out.push('(');
            }
            // Left-associative: the right operand needs one level more.
            print_prec(lhs, p, out);
            out.push(' ');
            out.push_str(op.token());
            out.push(' ');
            print_prec(rhs, p + 1, out);
            if paren {
                out.push(')');
            }
        }
        Expr::Not(inner) => {
            let paren = NOT_PREC < min;
            if paren {
                out.push('(');
            }
            out.push_str("not ");
            print_prec(inner, NOT_PREC, out);
            if paren {
                out.push(')');
            }
        }
        Expr::Fun { name, args } => {
            out.push_str(name);
            out.push('(');
            for (i, a) in args.iter().enumerate() {
                if i > 0 {
                    out.push_str(", ");
                }
                print_prec(a, 0, out);
            }
            out.push(')');
        }
        Expr::BitRange { value, hi, lo } => {
            // Postfix suffix binds tightest; atoms never need parens.
            let atom = matches!(
                value.as_ref(),
                Expr::Num(_) | Expr::Var(_) | Expr::Reg { .. } | Expr::Fun { .. } | Expr::BitRange { .. }
            );
            if atom {
                print_prec(value, 0, out);
            } else {
                out.push('(');
                print_prec(value, 0, out);
                out.push(')');
            }
            out.push('[');
            print_prec(hi, 0, out);
            if hi != lo {
                out.push(':');
                print_prec(lo, 0, out);
            }
            out.push(']');
        }
    }
}

pub fn print_expr(e: &Expr) -> String {
    let mut s = String::new();
    print_prec(e, 0, &mut s);
    s
}

fn print_stmt(s: &Stmt, indent: usize, out: &mut String) {
    let pad = "    ".repeat(indent);
    match s {
        Stmt::Assign { lhs, rhs } => {
            out.push_str(&pad);
            print_prec(lhs, 0, out);
            out.push_str(" = ");
            print_prec(rhs, 0, out);
            out.push('\n');
        }
        Stmt::Call { proc, args } => {
            out.push_str(&pad);
            out.push_str(proc);
            out.push('(');
            for (i, a) in args.iter().enumerate() {
                if i > 0 {
                    out.push_str(", ");
                }
                print_prec(a, 0, out);
            }
            out.push_str(")\n");
        }
        Stmt::If {
            cond,
            then_block,
            else_block,
        } => {
            out.push_str(&pad);
            out.push_str("if ");
            print_prec(cond, 0, out);
            out.push_str(" then\n");
            print_block(then_block, indent + 1, out);
            if !else_block.is_empty() {
                out.push_str(&pad);
                out.push_str("else\n");
                print_block(else_block, indent + 1, out);
            }
        }
        Stmt::Block(b) => print_block(b, indent, out),
        Stmt::Unpredictable => {
            out.push_str(&pad);
            out.push_str("unpredictable\n");
        }
        Stmt::Nop => {
            out.push_str(&pad);
            out.push_str("nop\n");
        }
    }
}

fn print_block(stmts: &[Stmt], indent: usize, out: &mut String) {
    if stmts.is_empty() {
        out.push_str(&"    ".repeat(indent));
        out.push_str("nop\n");
        return;
    }
    for s in stmts {
        print_stmt(s, indent, out);
    }
}

/// Print a body at indent level 1, the way it appears under a unit header.
pub fn print_ast(ast: &Ast) -> String {
    let mut out = String::new();
    print_block(&ast.stmts, 1, &mut out);
    out
}

/// Print a whole unit, header included; `parse_pseudocode` accepts the result.
pub fn print_unit(kind: &str, name: &str, family: Option<&str>, ast: &Ast) -> String {
    let mut out = match family {
        Some(f) => format!("{kind} {name} for {f}:\n"),
        None => format!("{kind} {name}:\n"),
    };
    out.push_str(&print_ast(ast));
    out
}
