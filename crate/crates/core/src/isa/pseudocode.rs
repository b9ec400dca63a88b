//! Parser for the `.pc` pseudo-code format.
//!
//! One `Instruction NAME:` or `Mode NAME for FAMILY:` header per unit, then
//! an indentation-delimited statement block. The grammar is documented in
//! `docs/format.md`; operator precedence follows the Python convention with
//! comparisons binding tighter than `and`/`or`.

use super::lex::{lex, Lexeme, Tok};
use crate::ir::ast::{self, Ast, BinOp, Expr, Flag, Stmt};

/// Parse error with source position and, where known, the unit being parsed.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub struct ParseError {
    pub line: u32,
    pub col: u32,
    pub unit: Option<String>,
    pub msg: String,
}

impl std::fmt::Display for ParseError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match &self.unit {
            Some(u) => write!(f, "{}:{}: in unit {}: {}", self.line, self.col, u, self.msg),
            None => write!(f, "{}:{}: {}", self.line, self.col, self.msg),
        }
    }
}

/// Header kind of a parsed unit.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum UnitKind {
    Instruction,
    Mode,
}

/// One parsed pseudo-code unit.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PcUnit {
    pub kind: UnitKind,
    pub name: String,
    /// Mode family, for `Mode x for family:` headers.
    pub family: Option<String>,
    pub ast: Ast,
}

pub struct Parser<'a> {
    toks: &'a [Lexeme],
    pos: usize,
    unit: Option<String>,
}

type PResult<T> = Result<T, ParseError>;

impl<'a> Parser<'a> {
    pub fn new(toks: &'a [Lexeme]) -> Self {
        Parser {
            toks,
            pos: 0,
            unit: None,
        }
    }

    pub(crate) fn peek(&self) -> &Tok {
        &self.toks[self.pos].tok
    }

    pub(crate) fn here(&self) -> (u32, u32) {
        let l = &self.toks[self.pos.min(self.toks.len() - 1)];
        (l.line, l.col)
    }

    pub(crate) fn fail<T>(&self, msg: impl Into<String>) -> PResult<T> {
        let (line, col) = self.here();
        Err(ParseError {
            line,
            col,
            unit: self.unit.clone(),
            msg: msg.into(),
        })
    }

    pub(crate) fn bump(&mut self) -> Tok {
        let t = self.toks[self.pos].tok.clone();
        if self.pos < self.toks.len() - 1 {
            self.pos += 1;
        }
        t
    }

    pub(crate) fn eat(&mut self, want: &Tok) -> PResult<()> {
        if self.peek() == want {
            self.bump();
            Ok(())
        } else {
            self.fail(format!("expected {want}, found {}", self.peek()))
        }
    }

    pub(crate) fn eat_keyword(&mut self, kw: &str) -> PResult<()> {
        match self.peek() {
            Tok::Ident(s) if s == kw => {
                self.bump();
                Ok(())
            }
            other => self.fail(format!("expected `{kw}`, found {other}")),
        }
    }

    pub(crate) fn ident(&mut self) -> PResult<String> {
        match self.peek().clone() {
            Tok::Ident(s) => {
                self.bump();
                Ok(s)
            }
            other => self.fail(format!("expected identifier, found {other}")),
        }
    }

    pub(crate) fn at_keyword(&self, kw: &str) -> bool {
        matches!(self.peek(), Tok::Ident(s) if s == kw)
    }

    // ---- units ---------------------------------------------------------

    /// Parse a whole `.pc` document.
    pub fn parse_units(&mut self) -> PResult<Vec<PcUnit>> {
        let mut units = Vec::new();
        while self.peek() != &Tok::Eof {
            units.push(self.parse_unit()?);
        }
        Ok(units)
    }

    fn parse_unit(&mut self) -> PResult<PcUnit> {
        let kind = if self.at_keyword("Instruction") {
            self.bump();
            UnitKind::Instruction
        } else if self.at_keyword("Mode") {
            self.bump();
            UnitKind::Mode
        } else {
            return self.fail(format!(
                "expected `Instruction` or `Mode` header, found {}",
                self.peek()
            ));
        };
        let name = self.ident()?;
        self.unit = Some(name.clone());
        let family = if self.at_keyword("for") {
            self.bump();
            Some(self.ident()?)
        } else {
            None
        };
        if kind == UnitKind::Mode && family.is_none() {
            return self.fail("mode header needs a family: `Mode NAME for FAMILY:`");
        }
        if kind == UnitKind::Instruction && family.is_some() {
            return self.fail("`for FAMILY` is only valid on mode headers");
        }
        self.eat(&Tok::Colon)?;
        self.eat(&Tok::Newline)?;
        if self.peek() != &Tok::Indent {
            return self.fail(format!("empty unit `{name}`: header has no body"));
        }
        let stmts = self.parse_block()?;
        let ast = Ast::new(stmts);
        if let Err(e) = ast::validate(&ast) {
            return self.fail(e.to_string());
        }
        self.unit = None;
        Ok(PcUnit {
            kind,
            name,
            family,
            ast,
        })
    }

    // ---- statements ----------------------------------------------------

    fn parse_block(&mut self) -> PResult<Vec<Stmt>> {
        self.eat(&Tok::Indent)?;
        let mut stmts = Vec::new();
        while self.peek() != &Tok::Dedent {
            stmts.push(self.parse_stmt()?);
        }
        self.eat(&Tok::Dedent)?;
        if stmts.is_empty() {
            return self.fail("empty block");
        }
        Ok(stmts)
    }

    fn parse_stmt(&mut self) -> PResult<Stmt> {
        if self.at_keyword("if") {
            return self.parse_if();
        }
        if self.at_keyword("unpredictable") {
            self.bump();
            self.eat(&Tok::Newline)?;
            return Ok(Stmt::Unpredictable);
        }
        if self.at_keyword("nop") {
            self.bump();
            self.eat(&Tok::Newline)?;
            return Ok(Stmt::Nop);
        }
        let e = self.parse_expr()?;
        if self.peek() == &Tok::Assign {
            self.bump();
            let rhs = self.parse_expr()?;
            self.eat(&Tok::Newline)?;
            if !ast::is_lvalue(&e) {
                return self.fail(format!(
                    "assignment target is not an lvalue: {}",
                    crate::ir::printer::print_expr(&e)
                ));
            }
            return Ok(Stmt::Assign { lhs: e, rhs });
        }
        // Bare call in statement position must be a builtin procedure.
        if let Expr::Fun { name, args } = e {
            match crate::ir::builtins::lookup(&name) {
                Some(b) if b.is_proc => {
                    self.eat(&Tok::Newline)?;
                    return Ok(Stmt::Call { proc: name, args });
                }
                Some(_) => {
                    return self.fail(format!(
                        "`{name}` is a value function, not a procedure"
                    ))
                }
                None => return self.fail(format!("unknown builtin function `{name}`")),
            }
        }
        self.fail("expected `=` or a procedure call")
    }

    fn parse_if(&mut self) -> PResult<Stmt> {
        self.eat_keyword("if")?;
        let cond = self.parse_expr()?;
        // The manuals write `then`; it is accepted and discarded.
        if self.at_keyword("then") {
            self.bump();
        }
        self.eat(&Tok::Newline)?;
        let then_block = self.parse_block()?;
        let mut else_block = Vec::new();
        if self.at_keyword("else") {
            self.bump();
            if self.at_keyword("if") {
                // `else if ...` chains without extra indentation.
                else_block.push(self.parse_if()?);
            } else {
                self.eat(&Tok::Newline)?;
                else_block = self.parse_block()?;
            }
        }
        Ok(Stmt::If {
            cond,
            then_block,
            else_block,
        })
    }

    // ---- expressions -----------------------------------------------------
    //
    // Precedence, loosest first:
    //   or > and > not > comparisons/is > OR/EOR > AND > shifts > +- > *

    pub fn parse_expr(&mut self) -> PResult<Expr> {
        self.parse_or()
    }

    fn parse_or(&mut self) -> PResult<Expr> {
        let mut lhs = self.parse_and()?;
        while self.at_keyword("or") {
            self.bump();
            let rhs = self.parse_and()?;
            lhs = Expr::bin(BinOp::Or, lhs, rhs);
        }
        Ok(lhs)
    }

    fn parse_and(&mut self) -> PResult<Expr> {
        let mut lhs = self.parse_not()?;
        while self.at_keyword("and") {
            self.bump();
            let rhs = self.parse_not()?;
            lhs = Expr::bin(BinOp::And, lhs, rhs);
        }
        Ok(lhs)
    }

    fn parse_not(&mut self) -> PResult<Expr> {
        if self.at_keyword("not") {
            self.bump();
            let inner = self.parse_not()?;
            return Ok(Expr::Not(Box::new(inner)));
        }
        self.parse_cmp()
    }

    fn parse_cmp(&mut self) -> PResult<Expr> {
        let lhs = self.parse_bitor()?;
        let op = match self.peek() {
            Tok::EqEq => Some(BinOp::Eq),
            Tok::Ne => Some(BinOp::Ne),
            Tok::Lt => Some(BinOp::Lt),
            Tok::Gt => Some(BinOp::Gt),
            Tok::Le => Some(BinOp::Le),
            Tok::Ge => Some(BinOp::Ge),
            Tok::Ident(s) if s == "is" => {
                // `Rd is R15` compares register *indices*.
                self.bump();
                let rhs = self.parse_bitor()?;
                return match (lhs, rhs) {
                    (
                        Expr::Reg { index: li, mode: None },
                        Expr::Reg { index: ri, mode: None },
                    ) => Ok(Expr::bin(BinOp::Eq, *li, *ri)),
                    _ => self.fail("`is` compares two plain registers, e.g. `Rd is R15`"),
                };
            }
            _ => None,
        };
        match op {
            Some(op) => {
                self.bump();
                let rhs = self.parse_bitor()?;
                Ok(Expr::bin(op, lhs, rhs))
            }
            None => Ok(lhs),
        }
    }

    fn parse_bitor(&mut self) -> PResult<Expr> {
        let mut lhs = self.parse_bitand()?;
        loop {
            let op = match self.peek() {
                Tok::Ident(s) if s == "OR" => BinOp::BitOr,
                Tok::Ident(s) if s == "EOR" => BinOp::BitXor,
                _ => break,
            };
            self.bump();
            let rhs = self.parse_bitand()?;
            lhs = Expr::bin(op, lhs, rhs);
        }
        Ok(lhs)
    }

    fn parse_bitand(&mut self) -> PResult<Expr> {
        let mut lhs = self.parse_shift()?;
        while matches!(self.peek(), Tok::Ident(s) if s == "AND") {
            self.bump();
            let rhs = self.parse_shift()?;
            lhs = Expr::bin(BinOp::BitAnd, lhs, rhs);
        }
        Ok(lhs)
    }

    fn parse_shift(&mut self) -> PResult<Expr> {
        let mut lhs = self.parse_add()?;
        loop {
            let op = match self.peek() {
                Tok::Ident(s) if s == "LSL" => BinOp::Lsl,
                Tok::Ident(s) if s == "LSR" => BinOp::Lsr,
                Tok::Ident(s) if s == "ASR" => BinOp::Asr,
                Tok::Ident(s) if s == "ROR" => BinOp::Ror,
                _ => break,
            };
            self.bump();
            let rhs = self.parse_add()?;
            lhs = Expr::bin(op, lhs, rhs);
        }
        Ok(lhs)
    }

    fn parse_add(&mut self) -> PResult<Expr> {
        let mut lhs = self.parse_mul()?;
        loop {
            let op = match self.peek() {
                Tok::Plus => BinOp::Add,
                Tok::Minus => BinOp::Sub,
                _ => break,
            };
            self.bump();
            let rhs = self.parse_mul()?;
            lhs = Expr::bin(op, lhs, rhs);
        }
        Ok(lhs)
    }

    fn parse_mul(&mut self) -> PResult<Expr> {
        let mut lhs = self.parse_postfix()?;
        while self.peek() == &Tok::Star {
            self.bump();
            let rhs = self.parse_postfix()?;
            lhs = Expr::bin(BinOp::Mul, lhs, rhs);
        }
        Ok(lhs)
    }

    fn parse_postfix(&mut self) -> PResult<Expr> {
        let mut e = self.parse_primary()?;
        while self.peek() == &Tok::LBracket {
            self.bump();
            let hi = self.parse_expr()?;
            let lo = if self.peek() == &Tok::Colon {
                self.bump();
                self.parse_expr()?
            } else {
                hi.clone()
            };
            self.eat(&Tok::RBracket)?;
            e = Expr::BitRange {
                value: Box::new(e),
                hi: Box::new(hi),
                lo: Box::new(lo),
            };
        }
        Ok(e)
    }

    fn parse_primary(&mut self) -> PResult<Expr> {
        match self.peek().clone() {
            Tok::Num(n) => {
                self.bump();
                Ok(Expr::Num(n))
            }
            Tok::LParen => {
                self.bump();
                let e = self.parse_expr()?;
                self.eat(&Tok::RParen)?;
                Ok(e)
            }
            Tok::Ident(name) => {
                self.bump();
                self.primary_ident(name)
            }
            other => self.fail(format!("expected expression, found {other}")),
        }
    }

    fn primary_ident(&mut self, name: String) -> PResult<Expr> {
        // `N Flag` / `Z Flag` / `C Flag` / `V Flag`
        if let Some(flag) = Flag::from_name(&name) {
            if self.at_keyword("Flag") {
                self.bump();
                return Ok(Expr::Flag(flag));
            }
        }
        if name == "Memory" {
            self.eat(&Tok::LBracket)?;
            let addr = self.parse_expr()?;
            self.eat(&Tok::Comma)?;
            let size = match self.peek().clone() {
                Tok::Num(n @ (1 | 2 | 4)) => {
                    self.bump();
                    n as u8
                }
                other => {
                    return self.fail(format!(
                        "memory access size must be 1, 2, or 4, found {other}"
                    ))
                }
            };
            self.eat(&Tok::RBracket)?;
            return Ok(Expr::Memory {
                addr: Box::new(addr),
                size,
            });
        }
        // Explicit register node: `Reg(idx)` or banked `Reg(idx, mode)`.
        if name == "Reg" && self.peek() == &Tok::LParen {
            self.bump();
            let index = self.parse_expr()?;
            let mode = if self.peek() == &Tok::Comma {
                self.bump();
                Some(Box::new(self.parse_expr()?))
            } else {
                None
            };
            self.eat(&Tok::RParen)?;
            return Ok(Expr::Reg {
                index: Box::new(index),
                mode,
            });
        }
        if let Some(r) = register_shorthand(&name) {
            return Ok(r);
        }
        if self.peek() == &Tok::LParen {
            self.bump();
            let mut args = Vec::new();
            if self.peek() != &Tok::RParen {
                loop {
                    args.push(self.parse_expr()?);
                    if self.peek() == &Tok::Comma {
                        self.bump();
                    } else {
                        break;
                    }
                }
            }
            self.eat(&Tok::RParen)?;
            return Ok(Expr::Fun { name, args });
        }
        Ok(Expr::Var(name))
    }
}

/// Register shorthands: `PC`, `R0`..`R15`, and `Rx` for a single lowercase
/// letter `x` naming the 4-bit index parameter `x`.
fn register_shorthand(name: &str) -> Option<Expr> {
    if name == "PC" {
        return Some(Expr::reg(Expr::Num(15)));
    }
    let rest = name.strip_prefix('R')?;
    if rest.len() == 1 && rest.chars().next().unwrap().is_ascii_lowercase() {
        return Some(Expr::reg(Expr::var(rest)));
    }
    if let Ok(n) = rest.parse::<u32>() {
        if n <= 15 && !rest.starts_with('+') {
            return Some(Expr::reg(Expr::Num(n)));
        }
    }
    None
}

/// Parse a `.pc` document into its units, in file order.
pub fn parse_pseudocode(text: &str) -> Result<Vec<PcUnit>, ParseError> {
    let toks = lex(text).map_err(|e| ParseError {
        line: e.line,
        col: e.col,
        unit: None,
        msg: e.msg,
    })?;
    let mut p = Parser::new(&toks);
    p.parse_units()
}

/// Parse a single expression (used by the patch, config, and override files).
pub fn parse_expr_str(text: &str) -> Result<Expr, ParseError> {
    let toks = lex(text).map_err(|e| ParseError {
        line: e.line,
        col: e.col,
        unit: None,
        msg: e.msg,
    })?;
    let mut p = Parser::new(&toks);
    let e = p.parse_expr()?;
    match p.peek() {
        Tok::Newline | Tok::Eof => Ok(e),
        other => p.fail(format!("trailing input after expression: {other}")),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ir::printer;

    fn parse_one(text: &str) -> PcUnit {
        let units = parse_pseudocode(text).expect("parse failed");
        assert_eq!(units.len(), 1);
        units.into_iter().next().unwrap()
    }

    #[test]
    fn ia_mode_snippet() {
        // The canonical load-multiple "increment after" shape.
        let text = "Mode ia for lsm_mode:\n    start_address = Rn\n    end_address = Rn+(NbOfSetBitsIn(reglist)*4)-4\n    if ConditionPassed(cond) and W==1 then\n        Rn = Rn+(NbOfSetBitsIn(reglist)*4)\n";
        let u = parse_one(text);
        assert_eq!(u.kind, UnitKind::Mode);
        assert_eq!(u.family.as_deref(), Some("lsm_mode"));
        assert_eq!(u.ast.stmts.len(), 3);
        match &u.ast.stmts[2] {
            Stmt::If {
                then_block,
                else_block,
                ..
            } => {
                assert_eq!(then_block.len(), 1);
                assert!(else_block.is_empty());
            }
            other => panic!("expected if, got {other:?}"),
        }
    }

    #[test]
    fn empty_unit_rejected() {
        let err = parse_pseudocode("Instruction ADC:\nInstruction SUB:\n    nop\n").unwrap_err();
        assert!(err.msg.contains("empty unit"), "{err}");
    }

    #[test]
    fn is_sugar_desugars_to_index_equality() {
        let u = parse_one("Instruction T:\n    if Rd is R15 then\n        nop\n");
        match &u.ast.stmts[0] {
            Stmt::If { cond, .. } => {
                assert_eq!(cond, &Expr::eq_num("d", 15));
            }
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn precedence_comparison_binds_tighter_than_and() {
        let e = parse_expr_str("ConditionPassed(cond) and W==1").unwrap();
        match e {
            Expr::Bin { op: BinOp::And, rhs, .. } => {
                assert_eq!(*rhs, Expr::eq_num("W", 1));
            }
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn unknown_builtin_reported_with_unit() {
        let err = parse_pseudocode("Instruction T:\n    Frobnicate(x)\n").unwrap_err();
        assert!(err.msg.contains("Frobnicate"), "{err}");
        assert_eq!(err.unit.as_deref(), Some("T"));
    }

    #[test]
    fn nested_if_roundtrip_fixed_point() {
        // Two nesting levels with different (consistent) indent widths.
        let text = "Instruction T:\n  if a == 1 then\n       if b == 2 then\n        x = 1\n       else\n        x = 2\n  else\n       x = 3\n";
        let first = parse_pseudocode(text).unwrap();
        let printed = printer::print_unit("Instruction", "T", None, &first[0].ast);
        let second = parse_pseudocode(&printed).unwrap();
        assert_eq!(first, second);
    }

    #[test]
    fn banked_register_node() {
        let e = parse_expr_str("Reg(13, mode)").unwrap();
        assert_eq!(e, Expr::reg_banked(Expr::Num(13), Expr::var("mode")));
        // Canonical printing round-trips.
        let p = printer::print_expr(&e);
        assert_eq!(p, "Reg(13, mode)");
        assert_eq!(parse_expr_str(&p).unwrap(), e);
    }

    #[test]
    fn flag_tokens() {
        let e = parse_expr_str("CarryFrom(Rn + shift_op + C Flag)").unwrap();
        match e {
            Expr::Fun { name, args } => {
                assert_eq!(name, "CarryFrom");
                assert_eq!(args.len(), 1);
                assert!(args[0].any(&|x| matches!(x, Expr::Flag(Flag::C))));
            }
            other => panic!("{other:?}"),
        }
    }
}
