//! Indentation-aware lexer for the pseudo-code-family text formats.
//!
//! Indentation defines blocks: the lexer emits `Indent`/`Dedent` pairs from a
//! stack of indent widths, so any per-block width is accepted as long as it
//! is consistent. Line continuations (trailing `\`) are resolved before
//! tokenizing, and `//` comments run to end of line.

use std::fmt;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Tok {
    Ident(String),
    Num(u32),
    Newline,
    Indent,
    Dedent,
    Assign,   // =
    EqEq,     // ==
    Ne,       // !=
    Le,       // <=
    Ge,       // >=
    Lt,       // <
    Gt,       // >
    Plus,
    Minus,
    Star,
    LParen,
    RParen,
    LBracket,
    RBracket,
    LBrace,
    RBrace,
    Comma,
    Colon,
    ColonEq,  // :=
    Arrow,    // ->
    Bang,     // !
    DotDot,   // ..
    Eof,
}

impl fmt::Display for Tok {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Tok::Ident(s) => write!(f, "`{s}`"),
            Tok::Num(n) => write!(f, "number {n}"),
            Tok::Newline => write!(f, "end of line"),
            Tok::Indent => write!(f, "indent"),
            Tok::Dedent => write!(f, "dedent"),
            Tok::Assign => write!(f, "`=`"),
            Tok::EqEq => write!(f, "`==`"),
            Tok::Ne => write!(f, "`!=`"),
            Tok::Le => write!(f, "`<=`"),
            Tok::Ge => write!(f, "`>=`"),
            Tok::Lt => write!(f, "`<`"),
            Tok::Gt => write!(f, "`>`"),
            Tok::Plus => write!(f, "`+`"),
            Tok::Minus => write!(f, "`-`"),
            Tok::Star => write!(f, "`*`"),
            Tok::LParen => write!(f, "`(`"),
            Tok::RParen => write!(f, "`)`"),
            Tok::LBracket => write!(f, "`[`"),
            Tok::RBracket => write!(f, "`]`"),
            Tok::LBrace => write!(f, "`{{`"),
            Tok::RBrace => write!(f, "`}}`"),
            Tok::Comma => write!(f, "`,`"),
            Tok::Colon => write!(f, "`:`"),
            Tok::ColonEq => write!(f, "`:=`"),
            Tok::Arrow => write!(f, "`->`"),
            Tok::Bang => write!(f, "`!`"),
            Tok::DotDot => write!(f, "`..`"),
            Tok::Eof => write!(f, "end of file"),
        }
    }
}

/// A token with its 1-based source position.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Lexeme {
    pub tok: Tok,
    pub line: u32,
    pub col: u32,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("{line}:{col}: {msg}")]
pub struct LexError {
    pub line: u32,
    pub col: u32,
    pub msg: String,
}

fn err(line: u32, col: u32, msg: impl Into<String>) -> LexError {
    LexError {
        line,
        col,
        msg: msg.into(),
    }
}

/// Join continuation lines. Returns (text, original line number) per logical
/// line so token positions still point into the source file.
fn logical_lines(text: &str) -> Vec<(String, u32)> {
    let mut out: Vec<(String, u32)> = Vec::new();
    let mut pending: Option<(String, u32)> = None;
    for (i, raw) in text.lines().enumerate() {
        let lineno = i as u32 + 1;
        let continued = raw.trim_end().ends_with('\\');
        let body = if continued {
            let t = raw.trim_end();
            &t[..t.len() - 1]
        } else {
            raw
        };
        match pending.take() {
            Some((mut acc, start)) => {
                acc.push_str(body.trim_start());
                if continued {
                    pending = Some((acc, start));
                } else {
                    out.push((acc, start));
                }
            }
            None => {
                if continued {
                    pending = Some((body.to_string(), lineno));
                } else {
                    out.push((body.to_string(), lineno));
                }
            }
        }
    }
    if let Some(p) = pending {
        out.push(p);
    }
    out
}

fn strip_comment(line: &str) -> &str {
    match line.find("//") {
        Some(i) => &line[..i],
        None => line,
    }
}

fn is_ident_start(c: char) -> bool {
    c.is_ascii_alphabetic() || c == '_'
}

fn is_ident_char(c: char) -> bool {
    c.is_ascii_alphanumeric() || c == '_'
}

/// Tokenize one logical line (no indentation handling).
fn lex_line(body: &str, lineno: u32, out: &mut Vec<Lexeme>) -> Result<(), LexError> {
    let chars: Vec<char> = body.chars().collect();
    let mut i = 0usize;
    while i < chars.len() {
        let c = chars[i];
        let col = i as u32 + 1;
        let push = |out: &mut Vec<Lexeme>, tok: Tok| {
            out.push(Lexeme {
                tok,
                line: lineno,
                col,
            })
        };
        match c {
            ' ' | '\t' => {
                i += 1;
            }
            '(' => {
                push(out, Tok::LParen);
                i += 1;
            }
            ')' => {
                push(out, Tok::RParen);
                i += 1;
            }
            '[' => {
                push(out, Tok::LBracket);
                i += 1;
            }
            ']' => {
                push(out, Tok::RBracket);
                i += 1;
            }
            '{' => {
                push(out, Tok::LBrace);
                i += 1;
            }
            '}' => {
                push(out, Tok::RBrace);
                i += 1;
            }
            ',' => {
                push(out, Tok::Comma);
                i += 1;
            }
            '+' => {
                push(out, Tok::Plus);
                i += 1;
            }
            '*' => {
                push(out, Tok::Star);
                i += 1;
            }
            '-' => {
                if chars.get(i + 1) == Some(&'>') {
                    push(out, Tok::Arrow);
                    i += 2;
                } else {
                    push(out, Tok::Minus);
                    i += 1;
                }
            }
            ':' => {
                if chars.get(i + 1) == Some(&'=') {
                    push(out, Tok::ColonEq);
                    i += 2;
                } else {
                    push(out, Tok::Colon);
                    i += 1;
                }
            }
            '=' => {
                if chars.get(i + 1) == Some(&'=') {
                    push(out, Tok::EqEq);
                    i += 2;
                } else {
                    push(out, Tok::Assign);
                    i += 1;
                }
            }
            '!' => {
                if chars.get(i + 1) == Some(&'=') {
                    push(out, Tok::Ne);
                    i += 2;
                } else {
                    push(out, Tok::Bang);
                    i += 1;
                }
            }
            '<' => {
                if chars.get(i + 1) == Some(&'=') {
                    push(out, Tok::Le);
                    i += 2;
                } else {
                    push(out, Tok::Lt);
                    i += 1;
                }
            }
            '>' => {
                if chars.get(i + 1) == Some(&'=') {
                    push(out, Tok::Ge);
                    i += 2;
                } else {
                    push(out, Tok::Gt);
                    i += 1;
                }
            }
            '.' => {
                if chars.get(i + 1) == Some(&'.') {
                    push(out, Tok::DotDot);
                    i += 2;
                } else {
                    return Err(err(lineno, col, "stray `.`"));
                }
            }
            '0'..='9' => {
                let start = i;
                while i < chars.len() && is_ident_char(chars[i]) {
                    i += 1;
                }
                let text: String = chars[start..i].iter().collect();
                let value = parse_number(&text)
                    .ok_or_else(|| err(lineno, col, format!("bad number literal `{text}`")))?;
                out.push(Lexeme {
                    tok: Tok::Num(value),
                    line: lineno,
                    col,
                });
            }
            c if is_ident_start(c) => {
                let start = i;
                while i < chars.len() && is_ident_char(chars[i]) {
                    i += 1;
                }
                let text: String = chars[start..i].iter().collect();
                out.push(Lexeme {
                    tok: Tok::Ident(text),
                    line: lineno,
                    col,
                });
            }
            other => return Err(err(lineno, col, format!("unexpected character `{other}`"))),
        }
    }
    Ok(())
}

fn parse_number(text: &str) -> Option<u32> {
    if let Some(hex) = text.strip_prefix("0x").or_else(|| text.strip_prefix("0X")) {
        u32::from_str_radix(hex, 16).ok()
    } else if let Some(bin) = text.strip_prefix("0b").or_else(|| text.strip_prefix("0B")) {
        u32::from_str_radix(bin, 2).ok()
    } else {
        text.parse().ok()
    }
}

/// Tokenize a whole document with indentation tracking.
pub fn lex(text: &str) -> Result<Vec<Lexeme>, LexError> {
    let mut out = Vec::new();
    let mut stack: Vec<u32> = vec![0];
    for (body, lineno) in logical_lines(text) {
        let stripped = strip_comment(&body);
        if stripped.trim().is_empty() {
            continue;
        }
        let mut width = 0u32;
        for c in stripped.chars() {
            match c {
                ' ' => width += 1,
                '\t' => {
                    return Err(err(
                        lineno,
                        width + 1,
                        "tab in indentation; indent with spaces",
                    ))
                }
                _ => break,
            }
        }
        let top = *stack.last().unwrap();
        if width > top {
            stack.push(width);
            out.push(Lexeme {
                tok: Tok::Indent,
                line: lineno,
                col: 1,
            });
        } else if width < top {
            while *stack.last().unwrap() > width {
                stack.pop();
                out.push(Lexeme {
                    tok: Tok::Dedent,
                    line: lineno,
                    col: 1,
                });
            }
            if *stack.last().unwrap() != width {
                return Err(err(
                    lineno,
                    1,
                    format!(
                        "inconsistent indentation: {width} spaces does not match any open block"
                    ),
                ));
            }
        }
        lex_line(stripped, lineno, &mut out)?;
        out.push(Lexeme {
            tok: Tok::Newline,
            line: lineno,
            col: stripped.len() as u32 + 1,
        });
    }
    let last = out.last().map(|l| l.line).unwrap_or(1);
    while stack.len() > 1 {
        stack.pop();
        out.push(Lexeme {
            tok: Tok::Dedent,
            line: last,
            col: 1,
        });
    }
    out.push(Lexeme {
        tok: Tok::Eof,
        line: last,
        col: 1,
    });
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn indents_and_dedents_balance() {
        let toks = lex("a = 1\nif x then\n    b = 2\n    if y then\n        c = 3\nd = 4\n").unwrap();
        let indents = toks.iter().filter(|l| l.tok == Tok::Indent).count();
        let dedents = toks.iter().filter(|l| l.tok == Tok::Dedent).count();
        assert_eq!(indents, 2);
        assert_eq!(dedents, 2);
    }

    #[test]
    fn mixed_widths_ok_when_consistent() {
        assert!(lex("if x then\n  a = 1\nif y then\n        b = 2\n").is_ok());
    }

    #[test]
    fn inconsistent_dedent_rejected() {
        let e = lex("if x then\n        a = 1\n   b = 2\n").unwrap_err();
        assert!(e.msg.contains("inconsistent indentation"), "{e}");
    }

    #[test]
    fn continuation_joins_lines() {
        let toks = lex("a = 1 + \\\n    2\n").unwrap();
        let nums: Vec<_> = toks
            .iter()
            .filter_map(|l| match l.tok {
                Tok::Num(n) => Some(n),
                _ => None,
            })
            .collect();
        assert_eq!(nums, vec![1, 2]);
        // One logical line -> exactly one newline token.
        assert_eq!(toks.iter().filter(|l| l.tok == Tok::Newline).count(), 1);
    }

    #[test]
    fn number_bases() {
        let toks = lex("x = 0xFFFFFFFC + 0b1011 + 12\n").unwrap();
        let nums: Vec<_> = toks
            .iter()
            .filter_map(|l| match l.tok {
                Tok::Num(n) => Some(n),
                _ => None,
            })
            .collect();
        assert_eq!(nums, vec![0xFFFF_FFFC, 0b1011, 12]);
    }

    #[test]
    fn range_in_braces() {
        let toks = lex("x !in {0..14}\n").unwrap();
        assert!(toks.iter().any(|l| l.tok == Tok::DotDot));
        assert!(toks.iter().any(|l| l.tok == Tok::Bang));
    }
}
