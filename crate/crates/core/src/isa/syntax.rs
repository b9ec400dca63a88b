//! Parser for the `.syn` assembly-syntax format: one template per unit.
//!
//! ```text
//! Instruction ADC: ADC{<cond>}{S} <Rd>,<Rn>,<shifter_operand>
//! Mode lsl_imm for shifter_operand: <Rm>,LSL #<shift_imm>
//! ```
//!
//! `<name>` is a placeholder for an encoding field (or a mode-family hole,
//! resolved at link time). `{...}` is an optional group; its controlling
//! parameter is the single placeholder inside, the literal text when that
//! names a field (`{S}`), or an explicit `{text:FIELD}` annotation (`{!:W}`).

use super::pseudocode::ParseError;
use crate::ir::types::{field_param_name, SynElem, SyntaxTemplate};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SynUnit {
    pub name: String,
    pub family: Option<String>,
    pub template: SyntaxTemplate,
}

fn err(line: u32, unit: Option<&str>, msg: impl Into<String>) -> ParseError {
    ParseError {
        line,
        col: 1,
        unit: unit.map(|s| s.to_string()),
        msg: msg.into(),
    }
}

fn is_ident(s: &str) -> bool {
    !s.is_empty()
        && s.chars().next().unwrap().is_ascii_alphabetic()
        && s.chars().all(|c| c.is_ascii_alphanumeric() || c == '_')
}

/// Parse the element stream of a template body (after the mnemonic).
fn parse_elements(text: &str, lineno: u32, unit: &str) -> Result<Vec<SynElem>, ParseError> {
    let mut out = Vec::new();
    let mut lit = String::new();
    let chars: Vec<char> = text.chars().collect();
    let mut i = 0;
    while i < chars.len() {
        match chars[i] {
            '<' => {
                if !lit.is_empty() {
                    out.push(SynElem::Literal(std::mem::take(&mut lit)));
                }
                let end = chars[i..]
                    .iter()
                    .position(|&c| c == '>')
                    .map(|p| i + p)
                    .ok_or_else(|| err(lineno, Some(unit), "unbalanced `<`"))?;
                let name: String = chars[i + 1..end].iter().collect();
                if !is_ident(&name) {
                    return Err(err(
                        lineno,
                        Some(unit),
                        format!("bad placeholder name `<{name}>`"),
                    ));
                }
                out.push(SynElem::Placeholder { field: name });
                i = end + 1;
            }
            '>' => return Err(err(lineno, Some(unit), "unbalanced `>`")),
            '{' => {
                if !lit.is_empty() {
                    out.push(SynElem::Literal(std::mem::take(&mut lit)));
                }
                let end = chars[i..]
                    .iter()
                    .position(|&c| c == '}')
                    .map(|p| i + p)
                    .ok_or_else(|| err(lineno, Some(unit), "unbalanced `{`"))?;
                let inner: String = chars[i + 1..end].iter().collect();
                if inner.contains('{') {
                    return Err(err(lineno, Some(unit), "nested optional groups"));
                }
                out.push(parse_optional(&inner, lineno, unit)?);
                i = end + 1;
            }
            '}' => return Err(err(lineno, Some(unit), "unbalanced `}`")),
            c => {
                lit.push(c);
                i += 1;
            }
        }
    }
    if !lit.is_empty() {
        out.push(SynElem::Literal(lit));
    }
    Ok(out)
}

fn parse_optional(inner: &str, lineno: u32, unit: &str) -> Result<SynElem, ParseError> {
    // Explicit `{content:FIELD}` annotation: the colon must sit outside any
    // placeholder brackets.
    let mut content = inner;
    let mut explicit = None;
    if let Some(pos) = inner.rfind(':') {
        let tail = &inner[pos + 1..];
        let before = &inner[..pos];
        let open = before.matches('<').count();
        let close = before.matches('>').count();
        if is_ident(tail) && open == close {
            content = before;
            explicit = Some(tail.to_string());
        }
    }
    let elements = parse_elements(content, lineno, unit)?;
    let placeholders: Vec<&str> = elements
        .iter()
        .filter_map(|e| match e {
            SynElem::Placeholder { field } => Some(field.as_str()),
            _ => None,
        })
        .collect();
    let control = if let Some(c) = explicit {
        field_param_name(&c).to_string()
    } else if placeholders.len() == 1 {
        field_param_name(placeholders[0]).to_string()
    } else if placeholders.is_empty()
        && elements.len() == 1
    {
        match &elements[0] {
            SynElem::Literal(l) if is_ident(l) => l.clone(),
            _ => {
                return Err(err(
                    lineno,
                    Some(unit),
                    format!("optional group `{{{inner}}}` needs a `:FIELD` control annotation"),
                ))
            }
        }
    } else {
        return Err(err(
            lineno,
            Some(unit),
            format!("optional group `{{{inner}}}` needs a `:FIELD` control annotation"),
        ));
    };
    Ok(SynElem::Optional { elements, control })
}

fn parse_template(body: &str, lineno: u32, unit: &str, is_mode: bool) -> Result<SyntaxTemplate, ParseError> {
    let body = body.trim();
    if is_mode {
        return Ok(SyntaxTemplate {
            mnemonic: String::new(),
            elements: parse_elements(body, lineno, unit)?,
        });
    }
    let split = body
        .find(|c| c == '{' || c == '<' || c == ' ')
        .unwrap_or(body.len());
    let mnemonic = &body[..split];
    if mnemonic.is_empty() {
        return Err(err(lineno, Some(unit), "instruction template has no mnemonic"));
    }
    Ok(SyntaxTemplate {
        mnemonic: mnemonic.to_string(),
        elements: parse_elements(&body[split..], lineno, unit)?,
    })
}

/// Parse a whole `.syn` document, in file order.
pub fn parse_syntax(text: &str) -> Result<Vec<SynUnit>, ParseError> {
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
        let (head, body) = line
            .split_once(':')
            .ok_or_else(|| err(lineno, None, "expected `HEADER: TEMPLATE`"))?;
        let words: Vec<&str> = head.split_whitespace().collect();
        let (name, family) = match words.as_slice() {
            ["Instruction", name] => (name.to_string(), None),
            ["Mode", name, "for", family] => (name.to_string(), Some(family.to_string())),
            _ => {
                return Err(err(
                    lineno,
                    None,
                    "bad header; expected `Instruction NAME:` or `Mode NAME for FAMILY:`",
                ))
            }
        };
        let template = parse_template(body, lineno, &name, family.is_some())?;
        out.push(SynUnit {
            name,
            family,
            template,
        });
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn adc_template() {
        let units = parse_syntax("Instruction ADC: ADC{<cond>}{S} <Rd>,<Rn>,<shifter_operand>\n").unwrap();
        let t = &units[0].template;
        assert_eq!(t.mnemonic, "ADC");
        assert_eq!(
            t.elements,
            vec![
                SynElem::Optional {
                    elements: vec![SynElem::Placeholder { field: "cond".into() }],
                    control: "cond".into()
                },
                SynElem::Optional {
                    elements: vec![SynElem::Literal("S".into())],
                    control: "S".into()
                },
                SynElem::Literal(" ".into()),
                SynElem::Placeholder { field: "Rd".into() },
                SynElem::Literal(",".into()),
                SynElem::Placeholder { field: "Rn".into() },
                SynElem::Literal(",".into()),
                SynElem::Placeholder { field: "shifter_operand".into() },
            ]
        );
    }

    #[test]
    fn mode_template() {
        let units = parse_syntax("Mode lsl_imm for shifter_operand: <Rm>,LSL #<shift_imm>\n").unwrap();
        let t = &units[0].template;
        assert_eq!(t.mnemonic, "");
        assert_eq!(
            t.elements,
            vec![
                SynElem::Placeholder { field: "Rm".into() },
                SynElem::Literal(",LSL #".into()),
                SynElem::Placeholder { field: "shift_imm".into() },
            ]
        );
    }

    #[test]
    fn single_placeholder_no_groups() {
        let units = parse_syntax("Instruction B: B <target>\n").unwrap();
        let t = &units[0].template;
        assert_eq!(t.mnemonic, "B");
        assert_eq!(
            t.elements,
            vec![
                SynElem::Literal(" ".into()),
                SynElem::Placeholder { field: "target".into() },
            ]
        );
    }

    #[test]
    fn annotated_control() {
        let units = parse_syntax("Instruction LDM: LDM{<cond>}<lsm_mode> <Rn>{!:W},<reglist>\n").unwrap();
        let t = &units[0].template;
        let controls = t.control_fields();
        assert_eq!(controls, vec!["cond", "W"]);
    }

    #[test]
    fn unbalanced_brackets_rejected() {
        assert!(parse_syntax("Instruction T: T <Rd\n").is_err());
        assert!(parse_syntax("Instruction T: T {S\n").is_err());
    }
}
