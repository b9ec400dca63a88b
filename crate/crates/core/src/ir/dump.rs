//! Human-readable dump of a linked description, one text document for the
//! whole corpus. Golden tests and `parse --dump` use it; the format is
//! stable but not machine-parsed.

use std::fmt::Write;

use super::printer;
use super::types::{IsaDescription, SynElem, SyntaxTemplate};

pub fn render_syntax(t: &SyntaxTemplate) -> String {
    let mut s = t.mnemonic.clone();
    fn elems(list: &[SynElem], out: &mut String) {
        for e in list {
            match e {
                SynElem::Literal(l) => out.push_str(l),
                SynElem::Placeholder { field } => {
                    out.push('<');
                    out.push_str(field);
                    out.push('>');
                }
                SynElem::Hole { family } => {
                    out.push('<');
                    out.push_str(family);
                    out.push('>');
                }
                SynElem::Optional { elements, control } => {
                    out.push('{');
                    let mut inner = String::new();
                    elems(elements, &mut inner);
                    out.push_str(&inner);
                    // Re-annotate controls that are not implied by content.
                    let implied = elements.iter().any(|e| matches!(
                        e,
                        SynElem::Placeholder { field } if crate::ir::types::field_param_name(field) == control
                    )) || (elements.len() == 1
                        && matches!(&elements[0], SynElem::Literal(l) if crate::ir::types::field_param_name(l) == control));
                    if !implied {
                        out.push(':');
                        out.push_str(control);
                    }
                    out.push('}');
                }
            }
        }
    }
    elems(&t.elements, &mut s);
    s
}

pub fn dump(desc: &IsaDescription) -> String {
    let mut out = String::new();
    writeln!(
        out,
        "corpus: {} instructions, {} mode cases, {} patches",
        desc.instructions.len(),
        desc.modes.len(),
        desc.patches.len()
    )
    .unwrap();
    for m in &desc.modes {
        writeln!(out, "\nMode {} for {}:", m.name, m.family).unwrap();
        writeln!(out, "  encoding: {}", m.encoding.render()).unwrap();
        writeln!(out, "  syntax:   {}", render_syntax(&m.syntax)).unwrap();
        for c in &m.constraints {
            writeln!(out, "  constraint: {c}").unwrap();
        }
        out.push_str(&indent(&printer::print_ast(&m.ast), 1));
    }
    for i in &desc.instructions {
        writeln!(out, "\nInstruction {}:", i.name).unwrap();
        writeln!(out, "  encoding: {}", i.encoding.render()).unwrap();
        writeln!(out, "  syntax:   {}", render_syntax(&i.syntax)).unwrap();
        if let Some(f) = &i.family {
            writeln!(out, "  modes:    {} ({})", i.modes.join(", "), f).unwrap();
        }
        if let Some(p) = &i.patch {
            writeln!(out, "  patch:    {p}").unwrap();
        }
        for c in &i.constraints {
            writeln!(out, "  constraint: {c}").unwrap();
        }
        out.push_str(&indent(&printer::print_ast(&i.ast), 1));
    }
    out
}

fn indent(text: &str, levels: usize) -> String {
    let pad = "  ".repeat(levels);
    text.lines()
        .map(|l| format!("{pad}{l}\n"))
        .collect()
}
