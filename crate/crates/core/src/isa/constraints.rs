//! Parser for the `.vc` validity-constraint format: one constraint per line,
//! attached to an instruction or mode-case name.
//!
//! ```text
//! UXTAH: Rn != 15          // NotEqualValue
//! LDRBT: Rd != Rn          // ParamsDiffer
//! UXTH:  Rn !in {0..14}    // NotIn (ranges and commas mix freely)
//! ```

use std::collections::BTreeSet;

use super::lex::{lex, Lexeme, Tok};
use super::pseudocode::ParseError;
use crate::ir::types::{field_param_name, ConstraintKind, ValidityConstraint};

fn err(line: u32, msg: impl Into<String>) -> ParseError {
    ParseError {
        line,
        col: 1,
        unit: None,
        msg: msg.into(),
    }
}

/// Field reference on either side of a constraint: a parameter name or a
/// number.
enum Side {
    Param(String),
    Value(u32),
}

struct LineParser<'a> {
    toks: &'a [Lexeme],
    pos: usize,
    line: u32,
}

impl<'a> LineParser<'a> {
    fn peek(&self) -> &Tok {
        self.toks.get(self.pos).map(|l| &l.tok).unwrap_or(&Tok::Eof)
    }

    fn bump(&mut self) -> Tok {
        let t = self.peek().clone();
        self.pos += 1;
        t
    }

    fn side(&mut self) -> Result<Side, ParseError> {
        match self.bump() {
            Tok::Ident(name) => Ok(Side::Param(field_param_name(&name).to_string())),
            Tok::Num(n) => Ok(Side::Value(n)),
            other => Err(err(self.line, format!("expected field or number, found {other}"))),
        }
    }

    fn value_set(&mut self) -> Result<BTreeSet<u32>, ParseError> {
        if self.bump() != Tok::LBrace {
            return Err(err(self.line, "expected `{` after `!in`"));
        }
        let mut values = BTreeSet::new();
        loop {
            match self.bump() {
                Tok::Num(lo) => {
                    if self.peek() == &Tok::DotDot {
                        self.bump();
                        match self.bump() {
                            Tok::Num(hi) if hi >= lo => {
                                values.extend(lo..=hi);
                            }
                            other => {
                                return Err(err(
                                    self.line,
                                    format!("bad range end after `{lo}..`: {other}"),
                                ))
                            }
                        }
                    } else {
                        values.insert(lo);
                    }
                }
                other => return Err(err(self.line, format!("expected number, found {other}"))),
            }
            match self.bump() {
                Tok::Comma => continue,
                Tok::RBrace => break,
                other => return Err(err(self.line, format!("expected `,` or `}}`, found {other}"))),
            }
        }
        if values.is_empty() {
            return Err(err(self.line, "empty value set"));
        }
        Ok(values)
    }
}

/// Parse a whole `.vc` document. An empty document is an empty list.
pub fn parse_constraints(text: &str) -> Result<Vec<ValidityConstraint>, ParseError> {
    let mut out = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let lineno = i as u32 + 1;
        let line = match raw.find("//") {
            Some(p) => &raw[..p],
            None => raw,
        };
        if line.trim().is_empty() {
            continue;
        }
        let (subject, body) = line
            .split_once(':')
            .ok_or_else(|| err(lineno, "expected `UNIT: CONSTRAINT`"))?;
        let subject = subject.trim();
        if subject.is_empty() || subject.contains(char::is_whitespace) {
            return Err(err(lineno, format!("bad unit name `{subject}`")));
        }
        let toks = lex(body.trim()).map_err(|e| err(lineno, e.msg))?;
        let mut p = LineParser {
            toks: &toks,
            pos: 0,
            line: lineno,
        };
        let lhs = p.side()?;
        let lhs = match lhs {
            Side::Param(name) => name,
            Side::Value(_) => return Err(err(lineno, "constraint must start with a field name")),
        };
        let kind = match p.bump() {
            Tok::Ne => match p.side()? {
                Side::Value(value) => ConstraintKind::NotEqualValue { param: lhs, value },
                Side::Param(b) => ConstraintKind::ParamsDiffer { a: lhs, b },
            },
            Tok::Bang => match p.bump() {
                Tok::Ident(kw) if kw == "in" => ConstraintKind::NotIn {
                    param: lhs,
                    values: p.value_set()?,
                },
                other => return Err(err(lineno, format!("expected `in` after `!`, found {other}"))),
            },
            other => {
                return Err(err(
                    lineno,
                    format!("expected `!=` or `!in`, found {other}"),
                ))
            }
        };
        match p.peek() {
            Tok::Newline | Tok::Eof => {}
            other => return Err(err(lineno, format!("trailing input: {other}"))),
        }
        out.push(ValidityConstraint {
            subject: subject.to_string(),
            kind,
        });
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn not_equal_value() {
        let cs = parse_constraints("UXTAH: Rn != 15\n").unwrap();
        assert_eq!(cs.len(), 1);
        assert_eq!(cs[0].subject, "UXTAH");
        assert_eq!(
            cs[0].kind,
            ConstraintKind::NotEqualValue {
                param: "n".into(),
                value: 15
            }
        );
    }

    #[test]
    fn params_differ() {
        let cs = parse_constraints("LDRBT: Rd != Rn\n").unwrap();
        assert_eq!(
            cs[0].kind,
            ConstraintKind::ParamsDiffer {
                a: "d".into(),
                b: "n".into()
            }
        );
    }

    #[test]
    fn not_in_with_range() {
        let cs = parse_constraints("UXTH: Rn !in {0..14}\n").unwrap();
        match &cs[0].kind {
            ConstraintKind::NotIn { param, values } => {
                assert_eq!(param, "n");
                assert_eq!(values.len(), 15);
                assert!(values.contains(&0) && values.contains(&14) && !values.contains(&15));
            }
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn empty_file() {
        assert!(parse_constraints("").unwrap().is_empty());
        assert!(parse_constraints("// only comments\n\n").unwrap().is_empty());
    }

    #[test]
    fn malformed_line() {
        assert!(parse_constraints("UXTAH Rn != 15\n").is_err());
        assert!(parse_constraints("UXTAH: Rn == 15\n").is_err());
    }
}
