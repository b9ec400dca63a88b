//! Instruction flattening: instantiate each instruction with each of its
//! addressing-mode cases, producing standalone instructions with merged
//! code, constraints, syntax, and encodings.

use std::collections::BTreeSet;

use super::patch::apply_mode_patch;
use super::TransformError;
use crate::ir::ast::Ast;
use crate::ir::types::{
    field_param_name, EncField, EncodingTable, FieldContent, FlatInstruction, InstrUnit,
    IsaDescription, ModeCase, ParamSpec, SynElem, SyntaxTemplate,
};
use crate::ir::vars;

/// Merge two whole-word encoding rows, keeping the most specific content for
/// each bit: a constant beats a parameter, a shorter parameter beats a longer
/// one, and the mode side wins parameter ties (mode tables refine the
/// instruction table). Output field boundaries follow the winning source
/// fields, so a wide parameter split by the mode row splits in the result.
pub fn merge_encodings(
    instr_name: &str,
    instr: &EncodingTable,
    mode_name: &str,
    mode: &EncodingTable,
) -> Result<EncodingTable, TransformError> {
    // Which source field covers each bit.
    let field_at = |t: &EncodingTable, bit: u8| -> usize {
        t.fields
            .iter()
            .position(|f| bit >= f.lo && bit <= f.hi)
            .expect("checked tables cover every bit")
    };
    #[derive(Clone, Copy, PartialEq)]
    enum Side {
        Instr,
        Mode,
    }
    let mut winner: Vec<(Side, usize)> = Vec::with_capacity(32);
    for bit in 0..32u8 {
        let fi = field_at(instr, bit);
        let fm = field_at(mode, bit);
        let a = &instr.fields[fi];
        let b = &mode.fields[fm];
        let side = match (&a.content, &b.content) {
            (FieldContent::Const(va), FieldContent::Const(vb)) => {
                let bit_a = (va >> (bit - a.lo)) & 1;
                let bit_b = (vb >> (bit - b.lo)) & 1;
                if bit_a != bit_b {
                    return Err(TransformError::MergeConflict {
                        a: instr_name.to_string(),
                        b: mode_name.to_string(),
                        bit,
                    });
                }
                Side::Instr
            }
            (FieldContent::Const(_), FieldContent::Param(_)) => Side::Instr,
            (FieldContent::Param(_), FieldContent::Const(_)) => Side::Mode,
            (FieldContent::Param(_), FieldContent::Param(_)) => {
                if a.width() < b.width() {
                    Side::Instr
                } else {
                    Side::Mode
                }
            }
        };
        winner.push((side, if side == Side::Instr { fi } else { fm }));
    }

    // A parameter field must win all of its bits or none: a partial overlay
    // would tear one field into disconnected pieces.
    for (t, name_of) in [(instr, instr_name), (mode, mode_name)] {
        let side = if std::ptr::eq(t, instr) { Side::Instr } else { Side::Mode };
        for (idx, f) in t.fields.iter().enumerate() {
            if let FieldContent::Param(p) = &f.content {
                let won: Vec<bool> = (f.lo..=f.hi)
                    .map(|bit| winner[bit as usize] == (side, idx))
                    .collect();
                if won.iter().any(|w| *w) && !won.iter().all(|w| *w) {
                    return Err(TransformError::ParamSplit {
                        a: name_of.to_string(),
                        b: if side == Side::Instr {
                            mode_name.to_string()
                        } else {
                            instr_name.to_string()
                        },
                        field: p.clone(),
                    });
                }
            }
        }
    }

    // Assemble output fields from winner runs, walking high to low.
    let mut fields: Vec<EncField> = Vec::new();
    let mut bit = 31i16;
    while bit >= 0 {
        let key = winner[bit as usize];
        let mut lo = bit;
        while lo > 0 && winner[(lo - 1) as usize] == key {
            lo -= 1;
        }
        let (side, idx) = key;
        let src = match side {
            Side::Instr => &instr.fields[idx],
            Side::Mode => &mode.fields[idx],
        };
        let (hi, lo_u) = (bit as u8, lo as u8);
        let content = match &src.content {
            FieldContent::Param(p) => FieldContent::Param(p.clone()),
            FieldContent::Const(v) => {
                // Slice the winning constant down to this run.
                let shifted = v >> (lo_u - src.lo);
                let width = hi - lo_u + 1;
                let mask = if width >= 32 { u32::MAX } else { (1 << width) - 1 };
                FieldContent::Const(shifted & mask)
            }
        };
        fields.push(EncField {
            hi,
            lo: lo_u,
            content,
        });
        bit = lo - 1;
    }
    EncodingTable::new(fields).map_err(|e| TransformError::MergedTableInvalid {
        a: instr_name.to_string(),
        b: mode_name.to_string(),
        err: e.to_string(),
    })
}

/// Substitute the mode-case syntax into the instruction template's hole.
pub fn merge_syntax(instr: &SyntaxTemplate, mode: &SyntaxTemplate) -> SyntaxTemplate {
    fn go(elems: &[SynElem], mode: &SyntaxTemplate) -> Vec<SynElem> {
        let mut out = Vec::new();
        for e in elems {
            match e {
                SynElem::Hole { .. } => out.extend(mode.elements.iter().cloned()),
                SynElem::Optional { elements, control } => out.push(SynElem::Optional {
                    elements: go(elements, mode),
                    control: control.clone(),
                }),
                other => out.push(other.clone()),
            }
        }
        out
    }
    SyntaxTemplate {
        mnemonic: instr.mnemonic.clone(),
        elements: go(&instr.elements, mode),
    }
}

/// Infer the runtime parameter list and locals of a flat instruction from
/// its merged encoding and code.
pub fn infer_params(flat: &mut FlatInstruction) -> Result<(), TransformError> {
    let enc_params: BTreeSet<String> = flat
        .encoding
        .param_fields()
        .map(|(f, _)| field_param_name(f).to_string())
        .collect();
    // Precomputed names are parameters too once introduced.
    let mut all_params = enc_params.clone();
    for (name, _) in &flat.precompute {
        all_params.insert(name.clone());
    }
    let classes = vars::free_vars(&flat.ast, &all_params, &BTreeSet::new()).map_err(|e| {
        TransformError::Unbound {
            unit: flat.name.clone(),
            err: e.to_string(),
        }
    })?;
    let mut params: Vec<ParamSpec> = Vec::new();
    for (field, f) in flat.encoding.param_fields() {
        let pname = field_param_name(field);
        if classes.params.contains(pname) {
            params.push(ParamSpec {
                name: pname.to_string(),
                width: f.width(),
                signed: field.starts_with("signed_"),
            });
        }
    }
    for (name, _) in &flat.precompute {
        if classes.params.contains(name) {
            params.push(ParamSpec {
                name: name.clone(),
                width: 32,
                signed: false,
            });
        }
    }
    flat.params = params;
    flat.locals = classes.locals.into_iter().collect();
    Ok(())
}

fn make_flat(
    instr: &InstrUnit,
    mode: Option<&ModeCase>,
    patched_mode_ast: Option<Ast>,
) -> Result<FlatInstruction, TransformError> {
    let (name, ast, encoding, syntax, constraints, prefix_len) = match mode {
        Some(m) => {
            let mode_ast = patched_mode_ast.unwrap_or_else(|| m.ast.clone());
            let mut stmts = mode_ast.stmts.clone();
            let prefix = stmts.len();
            stmts.extend(instr.ast.stmts.iter().cloned());
            let mut constraints = instr.constraints.clone();
            constraints.extend(m.constraints.iter().cloned());
            (
                format!("{}_{}", instr.name, m.name),
                Ast::new(stmts),
                merge_encodings(&instr.name, &instr.encoding, &m.name, &m.encoding)?,
                merge_syntax(&instr.syntax, &m.syntax),
                constraints,
                prefix,
            )
        }
        None => (
            instr.name.clone(),
            instr.ast.clone(),
            instr.encoding.clone(),
            instr.syntax.clone(),
            instr.constraints.clone(),
            0,
        ),
    };
    let mut flat = FlatInstruction {
        base: name.clone(),
        name,
        instr: instr.name.clone(),
        mode: mode.map(|m| m.name.clone()),
        ast,
        mode_prefix_len: prefix_len,
        encoding,
        syntax,
        constraints,
        params: Vec::new(),
        locals: Vec::new(),
        precompute: Vec::new(),
        specialization: Vec::new(),
        may_branch: None,
        weight: 0,
    };
    infer_params(&mut flat)?;
    Ok(flat)
}

/// Flatten the whole description: one flat instruction per
/// (instruction, mode-case) pair plus one per mode-less instruction, in
/// corpus order. Mode patches are applied to the mode code first.
pub fn flatten(desc: &IsaDescription) -> Result<Vec<FlatInstruction>, TransformError> {
    let mut out = Vec::new();
    for instr in &desc.instructions {
        if instr.modes.is_empty() {
            out.push(make_flat(instr, None, None)?);
            continue;
        }
        for mode_name in &instr.modes {
            let mode = desc
                .mode(mode_name)
                .expect("linked description lists only real modes");
            let patched = match &instr.patch {
                Some(patch_name) => {
                    let patch = desc.patch(patch_name).ok_or_else(|| {
                        TransformError::UnknownPatch {
                            unit: instr.name.clone(),
                            patch: patch_name.clone(),
                        }
                    })?;
                    Some(apply_mode_patch(&instr.name, patch, &mode.ast)?)
                }
                None => None,
            };
            out.push(make_flat(instr, Some(mode), patched)?);
        }
    }
    Ok(out)
}
