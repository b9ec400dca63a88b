//! Cross-link the four parsed files into a validated `IsaDescription`.
//!
//! Linking checks the whole-corpus invariants: every unit has all its pieces,
//! placeholders resolve, identifiers bind, constraints reference real
//! parameters, and patches target real instructions. Mode-family holes are
//! resolved here: a syntax placeholder naming a family becomes a `Hole` and
//! the instruction lists the family's cases in corpus order.

use std::collections::{BTreeMap, BTreeSet};

use super::config::ConfigFile;
use super::encodings::EncUnit;
use super::pseudocode::{PcUnit, UnitKind};
use super::syntax::SynUnit;
use crate::ir::ast::Ast;
use crate::ir::types::{
    field_param_name, EncodingTable, InstrUnit, IsaDescription, ModeCase, ModePatch, SynElem,
    SyntaxTemplate, ValidityConstraint,
};
use crate::ir::vars;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum LinkError {
    #[error("`{name}` has pseudo-code but no {missing}")]
    MissingPiece { name: String, missing: &'static str },
    #[error("`{name}` appears in {file} but has no pseudo-code")]
    Orphan { name: String, file: &'static str },
    #[error("duplicate unit name `{0}`")]
    DuplicateName(String),
    #[error("`{name}`: family mismatch: `{a}` in one file, `{b}` in another")]
    FamilyMismatch { name: String, a: String, b: String },
    #[error("`{unit}`: dangling placeholder `<{placeholder}>`")]
    DanglingPlaceholder { unit: String, placeholder: String },
    #[error("`{unit}`: syntax must contain exactly one mode hole, found {found}")]
    HoleCount { unit: String, found: usize },
    #[error("`{unit}`: mode family `{family}` has no cases")]
    EmptyFamily { unit: String, family: String },
    #[error("`{unit}`: {err}")]
    Unbound { unit: String, err: String },
    #[error("constraint on unknown unit `{0}`")]
    ConstraintSubject(String),
    #[error("`{unit}`: constraint references unknown parameter `{param}`")]
    ConstraintParam { unit: String, param: String },
    #[error("patch for unknown instruction `{0}`")]
    PatchSubject(String),
    #[error("patch for `{0}`, but it has no addressing modes to patch")]
    PatchWithoutModes(String),
}

#[derive(Debug)]
pub struct Linked {
    pub desc: IsaDescription,
    pub warnings: Vec<String>,
}

fn encoding_param_names(table: &EncodingTable) -> BTreeSet<String> {
    table
        .param_fields()
        .map(|(f, _)| field_param_name(f).to_string())
        .collect()
}

/// Resolve placeholders that name a mode family into holes.
fn resolve_holes(t: &SyntaxTemplate, families: &BTreeSet<String>) -> SyntaxTemplate {
    fn go(elems: &[SynElem], families: &BTreeSet<String>) -> Vec<SynElem> {
        elems
            .iter()
            .map(|e| match e {
                SynElem::Placeholder { field } if families.contains(field) => SynElem::Hole {
                    family: field.clone(),
                },
                SynElem::Optional { elements, control } => SynElem::Optional {
                    elements: go(elements, families),
                    control: control.clone(),
                },
                other => other.clone(),
            })
            .collect()
    }
    SyntaxTemplate {
        mnemonic: t.mnemonic.clone(),
        elements: go(&t.elements, families),
    }
}

/// Check that every placeholder in `t` names an encoding field of `table`
/// (or, for instructions, one of the allowed extra names).
fn check_placeholders(
    unit: &str,
    t: &SyntaxTemplate,
    table: &EncodingTable,
) -> Result<(), LinkError> {
    for field in t.placeholder_fields() {
        if table.param_field(field).is_none() {
            return Err(LinkError::DanglingPlaceholder {
                unit: unit.to_string(),
                placeholder: field.to_string(),
            });
        }
    }
    for control in t.control_fields() {
        if table.field_for_param(control).is_none() {
            return Err(LinkError::DanglingPlaceholder {
                unit: unit.to_string(),
                placeholder: control.to_string(),
            });
        }
    }
    Ok(())
}

pub fn link(
    pc: Vec<PcUnit>,
    enc: Vec<EncUnit>,
    syn: Vec<SynUnit>,
    constraints: Vec<ValidityConstraint>,
    patches: Vec<ModePatch>,
    _config: &ConfigFile,
) -> Result<Linked, LinkError> {
    let mut warnings = Vec::new();

    // Name uniqueness across instructions and modes.
    let mut seen = BTreeSet::new();
    for u in &pc {
        if !seen.insert(u.name.clone()) {
            return Err(LinkError::DuplicateName(u.name.clone()));
        }
    }

    let mut enc_by_name: BTreeMap<&str, &EncUnit> = BTreeMap::new();
    for e in &enc {
        if enc_by_name.insert(&e.name, e).is_some() {
            return Err(LinkError::DuplicateName(e.name.clone()));
        }
    }
    let mut syn_by_name: BTreeMap<&str, &SynUnit> = BTreeMap::new();
    for s in &syn {
        if syn_by_name.insert(&s.name, s).is_some() {
            return Err(LinkError::DuplicateName(s.name.clone()));
        }
    }

    // Every name in .enc / .syn must have pseudo-code.
    for e in &enc {
        if !seen.contains(&e.name) {
            return Err(LinkError::Orphan {
                name: e.name.clone(),
                file: "the encoding file",
            });
        }
    }
    for s in &syn {
        if !seen.contains(&s.name) {
            return Err(LinkError::Orphan {
                name: s.name.clone(),
                file: "the syntax file",
            });
        }
    }

    let families: BTreeSet<String> = pc
        .iter()
        .filter_map(|u| u.family.clone())
        .collect();

    // Constraints grouped by subject.
    let mut constraints_by_subject: BTreeMap<String, Vec<ValidityConstraint>> = BTreeMap::new();
    for c in constraints {
        constraints_by_subject
            .entry(c.subject.clone())
            .or_default()
            .push(c);
    }
    for name in constraints_by_subject.keys() {
        if !seen.contains(name) {
            return Err(LinkError::ConstraintSubject(name.clone()));
        }
    }

    let mut modes: Vec<ModeCase> = Vec::new();
    let mut instrs_pc: Vec<&PcUnit> = Vec::new();

    for u in &pc {
        let encu = enc_by_name
            .get(u.name.as_str())
            .ok_or_else(|| LinkError::MissingPiece {
                name: u.name.clone(),
                missing: "encoding table",
            })?;
        let synu = syn_by_name
            .get(u.name.as_str())
            .ok_or_else(|| LinkError::MissingPiece {
                name: u.name.clone(),
                missing: "assembly syntax",
            })?;
        match u.kind {
            UnitKind::Mode => {
                for (label, fam) in [("encoding", &encu.family), ("syntax", &synu.family)] {
                    match fam {
                        Some(f) if Some(f) == u.family.as_ref() => {}
                        Some(f) => {
                            return Err(LinkError::FamilyMismatch {
                                name: u.name.clone(),
                                a: u.family.clone().unwrap_or_default(),
                                b: f.clone(),
                            })
                        }
                        None => {
                            return Err(LinkError::MissingPiece {
                                name: u.name.clone(),
                                missing: match label {
                                    "encoding" => "family on its encoding header",
                                    _ => "family on its syntax header",
                                },
                            })
                        }
                    }
                }
                let enc_params = encoding_param_names(&encu.table);
                let cs = constraints_by_subject
                    .remove(&u.name)
                    .unwrap_or_default();
                check_constraint_params(&u.name, &cs, &enc_params)?;
                vars::free_vars(&u.ast, &enc_params, &BTreeSet::new()).map_err(|e| {
                    LinkError::Unbound {
                        unit: u.name.clone(),
                        err: e.to_string(),
                    }
                })?;
                check_placeholders(&u.name, &synu.template, &encu.table)?;
                modes.push(ModeCase {
                    name: u.name.clone(),
                    family: u.family.clone().unwrap(),
                    ast: u.ast.clone(),
                    encoding: encu.table.clone(),
                    syntax: synu.template.clone(),
                    constraints: cs,
                });
            }
            UnitKind::Instruction => instrs_pc.push(u),
        }
    }

    // What each family's cases assign: those locals are available,
    // pre-declared, to instruction bodies using the family.
    let mut family_locals: BTreeMap<String, BTreeSet<String>> = BTreeMap::new();
    let mut family_cases: BTreeMap<String, Vec<String>> = BTreeMap::new();
    for m in &modes {
        let enc_params = encoding_param_names(&m.encoding);
        family_locals
            .entry(m.family.clone())
            .or_default()
            .extend(vars::assigned_locals(&m.ast, &enc_params));
        family_cases
            .entry(m.family.clone())
            .or_default()
            .push(m.name.clone());
    }

    let mut instructions: Vec<InstrUnit> = Vec::new();
    for u in instrs_pc {
        let encu = enc_by_name[u.name.as_str()];
        let synu = syn_by_name[u.name.as_str()];
        let template = resolve_holes(&synu.template, &families);
        let holes = template.holes();
        let family = match holes.len() {
            0 => None,
            1 => Some(holes[0].to_string()),
            n => {
                return Err(LinkError::HoleCount {
                    unit: u.name.clone(),
                    found: n,
                })
            }
        };
        let mode_names = match &family {
            Some(f) => {
                let cases = family_cases.get(f).cloned().unwrap_or_default();
                if cases.is_empty() {
                    return Err(LinkError::EmptyFamily {
                        unit: u.name.clone(),
                        family: f.clone(),
                    });
                }
                cases
            }
            None => Vec::new(),
        };
        let enc_params = encoding_param_names(&encu.table);
        let predeclared = family
            .as_ref()
            .and_then(|f| family_locals.get(f))
            .cloned()
            .unwrap_or_default();
        vars::free_vars(&u.ast, &enc_params, &predeclared).map_err(|e| LinkError::Unbound {
            unit: u.name.clone(),
            err: e.to_string(),
        })?;
        let cs = constraints_by_subject.remove(&u.name).unwrap_or_default();
        check_constraint_params(&u.name, &cs, &enc_params)?;
        // Placeholders must resolve against the instruction's own encoding;
        // the hole and the mode-provided outputs are checked per mode case.
        for field in template.placeholder_fields() {
            if encu.table.param_field(field).is_none() {
                return Err(LinkError::DanglingPlaceholder {
                    unit: u.name.clone(),
                    placeholder: field.to_string(),
                });
            }
        }
        instructions.push(InstrUnit {
            name: u.name.clone(),
            ast: u.ast.clone(),
            encoding: encu.table.clone(),
            syntax: template,
            constraints: cs,
            family,
            modes: mode_names,
            patch: None,
        });
    }

    // Patches bind by instruction name.
    for p in &patches {
        let instr = instructions
            .iter_mut()
            .find(|i| i.name == p.subject)
            .ok_or_else(|| LinkError::PatchSubject(p.subject.clone()))?;
        if instr.modes.is_empty() {
            return Err(LinkError::PatchWithoutModes(p.subject.clone()));
        }
        instr.patch = Some(p.subject.clone());
    }

    // Mode cases no instruction combines with are suspicious but legal.
    let used: BTreeSet<&str> = instructions
        .iter()
        .flat_map(|i| i.modes.iter().map(|m| m.as_str()))
        .collect();
    for m in &modes {
        if !used.contains(m.name.as_str()) {
            warnings.push(format!(
                "mode case `{}` is referenced by zero instructions",
                m.name
            ));
        }
    }

    Ok(Linked {
        desc: IsaDescription {
            instructions,
            modes,
            patches,
        },
        warnings,
    })
}

fn check_constraint_params(
    unit: &str,
    cs: &[ValidityConstraint],
    enc_params: &BTreeSet<String>,
) -> Result<(), LinkError> {
    for c in cs {
        for p in c.params() {
            if !enc_params.contains(p) {
                return Err(LinkError::ConstraintParam {
                    unit: unit.to_string(),
                    param: p.to_string(),
                });
            }
        }
    }
    Ok(())
}

/// Convenience used everywhere: an `Ast` plus its unit name.
pub fn ast_of<'a>(desc: &'a IsaDescription, name: &str) -> Option<&'a Ast> {
    desc.instruction(name)
        .map(|i| &i.ast)
        .or_else(|| desc.mode(name).map(|m| &m.ast))
}
