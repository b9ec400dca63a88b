//! Parsers for the auxiliary corpus files: mode-variant patches
//! (`*.patch.pc`), the transform configuration (`*.tc`), and the may-branch
//! override table (`overrides.mb`).

use super::lex::lex;
use super::pseudocode::{ParseError, Parser};
use crate::ir::ast::Expr;
use crate::ir::types::ModePatch;
use crate::isa::lex::Tok;

/// Parse a `.patch.pc` document:
///
/// ```text
/// Patch for SRS:
///     replace Rn -> Reg(13, mode)
///     replace NbOfSetBitsIn(reglist) -> 2
/// ```
///
/// Each `replace` step is a `replace_exp` application to the instruction's
/// mode code; a step that matches nothing is a stale patch and fails the
/// pipeline.
pub fn parse_patches(text: &str) -> Result<Vec<ModePatch>, ParseError> {
    let toks = lex(text).map_err(|e| ParseError {
        line: e.line,
        col: e.col,
        unit: None,
        msg: e.msg,
    })?;
    let mut p = Parser::new(&toks);
    let mut out: Vec<ModePatch> = Vec::new();
    while p.peek() != &Tok::Eof {
        p.eat_keyword("Patch")?;
        p.eat_keyword("for")?;
        let subject = p.ident()?;
        if out.iter().any(|x| x.subject == subject) {
            return p.fail(format!("duplicate patch for `{subject}`"));
        }
        p.eat(&Tok::Colon)?;
        p.eat(&Tok::Newline)?;
        p.eat(&Tok::Indent)?;
        let mut steps = Vec::new();
        while p.peek() != &Tok::Dedent {
            p.eat_keyword("replace")?;
            let pattern = p.parse_expr()?;
            p.eat(&Tok::Arrow)?;
            let replacement = p.parse_expr()?;
            p.eat(&Tok::Newline)?;
            steps.push((pattern, replacement));
        }
        p.eat(&Tok::Dedent)?;
        if steps.is_empty() {
            return p.fail(format!("patch for `{subject}` has no steps"));
        }
        out.push(ModePatch { subject, steps });
    }
    Ok(out)
}

/// Raw transform configuration from a `.tc` file.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct ConfigFile {
    /// `precompute NAME := EXPR` — sub-expressions hoisted to decode time.
    pub precompute: Vec<(String, Expr)>,
    /// `specialize FIELD in {v, ...}` — flags cloned to constants.
    pub specialize_flags: Vec<(String, Vec<u32>)>,
}

pub fn parse_config(text: &str) -> Result<ConfigFile, ParseError> {
    let toks = lex(text).map_err(|e| ParseError {
        line: e.line,
        col: e.col,
        unit: None,
        msg: e.msg,
    })?;
    let mut p = Parser::new(&toks);
    let mut cfg = ConfigFile::default();
    while p.peek() != &Tok::Eof {
        if p.at_keyword("precompute") {
            p.bump();
            let name = p.ident()?;
            p.eat(&Tok::ColonEq)?;
            let expr = p.parse_expr()?;
            p.eat(&Tok::Newline)?;
            if cfg.precompute.iter().any(|(n, _)| *n == name) {
                return p.fail(format!("duplicate precompute rule `{name}`"));
            }
            cfg.precompute.push((name, expr));
        } else if p.at_keyword("specialize") {
            p.bump();
            let field = p.ident()?;
            p.eat_keyword("in")?;
            p.eat(&Tok::LBrace)?;
            let mut values = Vec::new();
            loop {
                match p.bump() {
                    Tok::Num(v) => values.push(v),
                    other => return p.fail(format!("expected value, found {other}")),
                }
                match p.bump() {
                    Tok::Comma => continue,
                    Tok::RBrace => break,
                    other => return p.fail(format!("expected `,` or `}}`, found {other}")),
                }
            }
            p.eat(&Tok::Newline)?;
            cfg.specialize_flags
                .push((crate::ir::types::field_param_name(&field).to_string(), values));
        } else {
            return p.fail(format!(
                "expected `precompute` or `specialize`, found {}",
                p.peek()
            ));
        }
    }
    Ok(cfg)
}

/// Manual may-branch override for one unit.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum BranchOverride {
    Always,
    Never,
    Expr(Expr),
}

/// Parse an `overrides.mb` document: `NAME always|never|<expr>` per line.
pub fn parse_overrides(text: &str) -> Result<Vec<(String, BranchOverride)>, ParseError> {
    let mut out = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let lineno = i as u32 + 1;
        let line = match raw.find("//") {
            Some(pos) => &raw[..pos],
            None => raw,
        };
        let line = line.trim();
        if line.is_empty() {
            continue;
        }
        let (name, rest) = line.split_once(char::is_whitespace).ok_or(ParseError {
            line: lineno,
            col: 1,
            unit: None,
            msg: "expected `NAME always|never|EXPR`".into(),
        })?;
        let rest = rest.trim();
        let ov = match rest {
            "always" => BranchOverride::Always,
            "never" => BranchOverride::Never,
            _ => BranchOverride::Expr(
                super::pseudocode::parse_expr_str(rest).map_err(|e| ParseError {
                    line: lineno,
                    col: e.col,
                    unit: Some(name.to_string()),
                    msg: e.msg,
                })?,
            ),
        };
        out.push((name.to_string(), ov));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ir::ast::Expr;

    #[test]
    fn patch_with_two_steps() {
        let text = "Patch for SRS:\n    replace Rn -> Reg(13, mode)\n    replace NbOfSetBitsIn(reglist) -> 2\n";
        let ps = parse_patches(text).unwrap();
        assert_eq!(ps.len(), 1);
        assert_eq!(ps[0].subject, "SRS");
        assert_eq!(
            ps[0].steps[0],
            (
                Expr::reg(Expr::var("n")),
                Expr::reg_banked(Expr::Num(13), Expr::var("mode"))
            )
        );
        assert_eq!(
            ps[0].steps[1],
            (
                Expr::fun("NbOfSetBitsIn", vec![Expr::var("reglist")]),
                Expr::Num(2)
            )
        );
    }

    #[test]
    fn config_directives() {
        let text = "precompute nb_reg_x4 := NbOfSetBitsIn(reglist) * 4\nspecialize S in {0, 1}\n";
        let cfg = parse_config(text).unwrap();
        assert_eq!(cfg.precompute.len(), 1);
        assert_eq!(cfg.precompute[0].0, "nb_reg_x4");
        assert_eq!(cfg.specialize_flags, vec![("S".to_string(), vec![0, 1])]);
    }

    #[test]
    fn overrides() {
        let text = "B always\nSTM never\nLDM reglist[15] == 1\n";
        let ovs = parse_overrides(text).unwrap();
        assert_eq!(ovs.len(), 3);
        assert_eq!(ovs[0], ("B".into(), BranchOverride::Always));
        assert_eq!(ovs[1], ("STM".into(), BranchOverride::Never));
        assert!(matches!(ovs[2].1, BranchOverride::Expr(_)));
    }
}
