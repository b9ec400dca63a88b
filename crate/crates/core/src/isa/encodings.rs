//! Parser for the `.enc` encoding-table format.
//!
//! Each unit header is followed by one table row listing fields left-to-right
//! from bit 31 to bit 0, `|`-separated:
//!
//! ```text
//! Instruction ADC:
//!     31..28 cond | 27..26 00 | 25 I | 24..21 0101 | 20 S | 19..16 Rn | 15..12 Rd | 11..0 shifter_operand
//! ```
//!
//! A content token of only `0`/`1` characters is a constant (its length must
//! equal the field width); anything else names a parameter.

use std::collections::HashMap;

use super::pseudocode::ParseError;
use crate::ir::types::{EncField, EncodingTable, FieldContent};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EncUnit {
    pub name: String,
    /// `Some(family)` for mode-case tables.
    pub family: Option<String>,
    pub table: EncodingTable,
}

fn err(line: u32, unit: Option<&str>, msg: impl Into<String>) -> ParseError {
    ParseError {
        line,
        col: 1,
        unit: unit.map(|s| s.to_string()),
        msg: msg.into(),
    }
}

/// `Instruction NAME:` or `Mode NAME for FAMILY:`; returns (name, family).
fn parse_header(line: &str, lineno: u32) -> Result<Option<(String, Option<String>)>, ParseError> {
    let words: Vec<&str> = line.trim_end_matches(':').split_whitespace().collect();
    match words.as_slice() {
        ["Instruction", name] => Ok(Some((name.to_string(), None))),
        ["Mode", name, "for", family] => {
            Ok(Some((name.to_string(), Some(family.to_string()))))
        }
        ["Instruction", ..] | ["Mode", ..] => Err(err(
            lineno,
            None,
            "bad header; expected `Instruction NAME:` or `Mode NAME for FAMILY:`",
        )),
        _ => Ok(None),
    }
}

fn parse_row(line: &str, lineno: u32, unit: &str) -> Result<EncodingTable, ParseError> {
    let mut fields = Vec::new();
    for part in line.split('|') {
        let toks: Vec<&str> = part.split_whitespace().collect();
        let (range, content) = match toks.as_slice() {
            [r, c] => (*r, *c),
            _ => {
                return Err(err(
                    lineno,
                    Some(unit),
                    format!("bad field `{}`; expected `HI..LO CONTENT`", part.trim()),
                ))
            }
        };
        let (hi, lo) = match range.split_once("..") {
            Some((h, l)) => {
                let hi: u8 = h
                    .parse()
                    .map_err(|_| err(lineno, Some(unit), format!("bad bit index `{h}`")))?;
                let lo: u8 = l
                    .parse()
                    .map_err(|_| err(lineno, Some(unit), format!("bad bit index `{l}`")))?;
                (hi, lo)
            }
            None => {
                let b: u8 = range
                    .parse()
                    .map_err(|_| err(lineno, Some(unit), format!("bad bit index `{range}`")))?;
                (b, b)
            }
        };
        if hi > 31 || lo > hi {
            return Err(err(
                lineno,
                Some(unit),
                format!("bit range {hi}..{lo} out of order or out of word"),
            ));
        }
        let width = hi - lo + 1;
        let content = if content.chars().all(|c| c == '0' || c == '1') {
            if content.len() != width as usize {
                return Err(err(
                    lineno,
                    Some(unit),
                    format!(
                        "constant `{content}` has {} bits but the field {hi}..{lo} is {width} wide",
                        content.len()
                    ),
                ));
            }
            FieldContent::Const(u32::from_str_radix(content, 2).unwrap())
        } else {
            FieldContent::Param(content.to_string())
        };
        fields.push(EncField { hi, lo, content });
    }
    EncodingTable::new(fields).map_err(|e| err(lineno, Some(unit), e.to_string()))
}

/// Parse a whole `.enc` document into tables, in file order.
pub fn parse_encodings(text: &str) -> Result<Vec<EncUnit>, ParseError> {
    let mut units: Vec<EncUnit> = Vec::new();
    let mut names: HashMap<String, u32> = HashMap::new();
    let mut open: Option<(String, Option<String>, u32)> = None;
    let mut pending = String::new();

    let mut rows: Vec<(String, u32)> = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let lineno = i as u32 + 1;
        let line = match raw.find("//") {
            Some(p) => &raw[..p],
            None => raw,
        };
        if line.trim().is_empty() {
            continue;
        }
        let trimmed = line.trim_end();
        if trimmed.ends_with('\\') {
            pending.push_str(trimmed.trim_end_matches('\\'));
            continue;
        }
        if pending.is_empty() {
            rows.push((trimmed.to_string(), lineno));
        } else {
            pending.push_str(trimmed);
            rows.push((std::mem::take(&mut pending), lineno));
        }
    }

    for (line, lineno) in rows {
        if let Some((name, family)) = parse_header(&line, lineno)? {
            if let Some((prev, _, at)) = &open {
                return Err(err(
                    *at,
                    Some(prev),
                    format!("`{prev}` has a header but no table row"),
                ));
            }
            if let Some(first) = names.insert(name.clone(), lineno) {
                return Err(err(
                    lineno,
                    Some(&name),
                    format!("duplicate encoding for `{name}` (first at line {first})"),
                ));
            }
            open = Some((name, family, lineno));
        } else {
            let (name, family, _) = open.take().ok_or_else(|| {
                err(lineno, None, "table row without a preceding unit header")
            })?;
            let table = parse_row(&line, lineno, &name)?;
            units.push(EncUnit {
                name,
                family,
                table,
            });
        }
    }
    if let Some((prev, _, at)) = open {
        return Err(err(at, Some(&prev), format!("`{prev}` has a header but no table row")));
    }
    Ok(units)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ir::types::field_param_name;

    const ADC: &str = "Instruction ADC:\n    31..28 cond | 27..26 00 | 25 I | 24..21 0101 | 20 S | 19..16 Rn | 15..12 Rd | 11..0 shifter_operand\n";

    #[test]
    fn adc_row() {
        let units = parse_encodings(ADC).unwrap();
        assert_eq!(units.len(), 1);
        let t = &units[0].table;
        assert_eq!(t.mask(), 0b0000_11_0_1111_0_0000_0000_000000000000u32 << 0);
        // Constant fields: 27..26 = 00 and 24..21 = 0101.
        assert_eq!(t.value(), 0b0101 << 21);
        let params: Vec<&str> = t.param_fields().map(|(n, _)| n).collect();
        assert_eq!(params, vec!["cond", "I", "S", "Rn", "Rd", "shifter_operand"]);
        assert_eq!(field_param_name("Rn"), "n");
        assert_eq!(field_param_name("shifter_operand"), "shifter_operand");
    }

    #[test]
    fn uncovered_bit_rejected() {
        let text = "Instruction T:\n    31..1 x\n";
        let e = parse_encodings(text).unwrap_err();
        assert!(e.msg.contains("bit 0 uncovered"), "{e}");
    }

    #[test]
    fn all_constant_table() {
        let text = "Instruction T:\n    31..28 1110 | 27..24 0110 | 23..0 000000000000000000000000\n";
        let t = &parse_encodings(text).unwrap()[0].table;
        assert_eq!(t.mask(), 0xFFFF_FFFF);
        assert_eq!(t.value(), 0xE600_0000);
        assert!(t.matches(0xE600_0000));
        assert!(!t.matches(0xE600_0001));
    }

    #[test]
    fn overlap_rejected() {
        let text = "Instruction T:\n    31..16 a | 20..0 b\n";
        assert!(parse_encodings(text).is_err());
    }

    #[test]
    fn duplicate_param_rejected() {
        let text = "Instruction T:\n    31..16 a | 15..0 a\n";
        let e = parse_encodings(text).unwrap_err();
        assert!(e.msg.contains("duplicate parameter"), "{e}");
    }

    #[test]
    fn constant_width_mismatch_rejected() {
        let text = "Instruction T:\n    31..28 011 | 27..0 x\n";
        let e = parse_encodings(text).unwrap_err();
        assert!(e.msg.contains("3 bits"), "{e}");
    }
}
