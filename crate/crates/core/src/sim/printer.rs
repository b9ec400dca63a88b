//! Assembly printer: renders a flat instruction's syntax template against a
//! decoded parameter record. Used for debug traces, the disassembler, and
//! one side of the round-trip diff.

use super::render;
use crate::ir::types::{field_param_name, FlatInstruction, SynElem};

/// Width of a field parameter, for signed rendering.
fn field_width(flat: &FlatInstruction, field: &str) -> u8 {
    flat.encoding
        .param_field(field)
        .map(|f| f.width())
        .unwrap_or(32)
}

fn render_elems(
    flat: &FlatInstruction,
    elems: &[SynElem],
    lookup: &impl Fn(&str) -> Option<u32>,
    out: &mut String,
) {
    for e in elems {
        match e {
            SynElem::Literal(l) => out.push_str(l),
            SynElem::Placeholder { field } => {
                let pname = field_param_name(field);
                let value = lookup(pname).unwrap_or(0);
                out.push_str(&render::field_value(field, value, field_width(flat, field)));
            }
            SynElem::Hole { family } => {
                // Only reachable on unflattened templates (debug printing).
                out.push('<');
                out.push_str(family);
                out.push('>');
            }
            SynElem::Optional { elements, control } => {
                let value = lookup(control).unwrap_or(0);
                let print = if control == "cond" {
                    value != COND_ALWAYS_VALUE
                } else {
                    value != 0
                };
                if print {
                    render_elems(flat, elements, lookup, out);
                }
            }
        }
    }
}

/// Condition value that suppresses the optional condition group.
pub const COND_ALWAYS_VALUE: u32 = 14;

/// Render the assembly text of one decoded instruction.
pub fn print_asm(flat: &FlatInstruction, lookup: &impl Fn(&str) -> Option<u32>) -> String {
    let mut out = flat.syntax.mnemonic.clone();
    render_elems(flat, &flat.syntax.elements, lookup, &mut out);
    out
}
