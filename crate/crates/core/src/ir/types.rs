//! The linked intermediate representation: encoding tables, assembly syntax
//! templates, validity constraints, and the per-unit containers every later
//! stage consumes.

use std::collections::BTreeSet;
use std::fmt;

use super::ast::{Ast, Expr};

pub const WORD_BITS: u8 = 32;

/// Map an encoding field name to the parameter it introduces. Register
/// fields `R<x>` bind the 4-bit index parameter `<x>` (so `Rn` introduces
/// `n`); every other field binds a parameter of its own name.
pub fn field_param_name(field: &str) -> &str {
    match field.strip_prefix('R') {
        Some(rest) if rest.len() == 1 && rest.chars().all(|c| c.is_ascii_lowercase()) => rest,
        _ => field,
    }
}

/// Register-style fields render as `R<n>` in assembly.
pub fn field_is_register(field: &str) -> bool {
    field_param_name(field) != field
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FieldContent {
    /// Fixed bits, value right-aligned in the field.
    Const(u32),
    /// Named parameter field (stores the field name, e.g. `Rn`).
    Param(String),
}

/// One field of an encoding row, covering bits `hi..=lo`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EncField {
    pub hi: u8,
    pub lo: u8,
    pub content: FieldContent,
}

impl EncField {
    pub fn width(&self) -> u8 {
        self.hi - self.lo + 1
    }

    pub fn bit_mask(&self) -> u32 {
        let w = self.width();
        let ones = if w >= 32 { u32::MAX } else { (1u32 << w) - 1 };
        ones << self.lo
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum EncodingError {
    #[error("fields out of order or overlapping near bit {0}")]
    Overlap(u8),
    #[error("bit {0} uncovered")]
    Gap(u8),
    #[error("duplicate parameter name `{0}`")]
    DuplicateParam(String),
    #[error("constant `{text}` does not fit field of width {width}")]
    ConstWidth { text: String, width: u8 },
}

/// A 32-bit encoding row: ordered fields from bit 31 down to bit 0,
/// contiguous and non-overlapping.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EncodingTable {
    pub fields: Vec<EncField>,
}

impl EncodingTable {
    pub fn new(fields: Vec<EncField>) -> Result<EncodingTable, EncodingError> {
        let t = EncodingTable { fields };
        t.check()?;
        Ok(t)
    }

    /// Coverage, ordering, and name-uniqueness invariants.
    pub fn check(&self) -> Result<(), EncodingError> {
        let mut expect_hi = WORD_BITS as i16 - 1;
        for f in &self.fields {
            if f.hi as i16 > expect_hi {
                return Err(EncodingError::Overlap(f.hi));
            }
            if (f.hi as i16) < expect_hi {
                return Err(EncodingError::Gap(expect_hi as u8));
            }
            if f.lo > f.hi {
                return Err(EncodingError::Overlap(f.lo));
            }
            expect_hi = f.lo as i16 - 1;
        }
        if expect_hi >= 0 {
            return Err(EncodingError::Gap(expect_hi as u8));
        }
        let mut seen = BTreeSet::new();
        for f in &self.fields {
            if let FieldContent::Param(name) = &f.content {
                if !seen.insert(name.clone()) {
                    return Err(EncodingError::DuplicateParam(name.clone()));
                }
            }
        }
        Ok(())
    }

    /// Decode mask: 1 for every constant bit.
    pub fn mask(&self) -> u32 {
        self.fields
            .iter()
            .filter(|f| matches!(f.content, FieldContent::Const(_)))
            .fold(0, |m, f| m | f.bit_mask())
    }

    /// Constant bits, positioned; `word & mask() == value()` iff all constant
    /// fields match.
    pub fn value(&self) -> u32 {
        self.fields
            .iter()
            .filter_map(|f| match f.content {
                FieldContent::Const(v) => Some(v << f.lo),
                FieldContent::Param(_) => None,
            })
            .fold(0, |acc, v| acc | v)
    }

    pub fn matches(&self, word: u32) -> bool {
        word & self.mask() == self.value()
    }

    /// Parameter fields in bit order (highest first).
    pub fn param_fields(&self) -> impl Iterator<Item = (&str, &EncField)> {
        self.fields.iter().filter_map(|f| match &f.content {
            FieldContent::Param(name) => Some((name.as_str(), f)),
            FieldContent::Const(_) => None,
        })
    }

    pub fn param_field(&self, field_name: &str) -> Option<&EncField> {
        self.param_fields()
            .find(|(n, _)| *n == field_name)
            .map(|(_, f)| f)
    }

    /// Find a parameter field by its *parameter* name (`n` finds `Rn`).
    pub fn field_for_param(&self, param: &str) -> Option<(&str, &EncField)> {
        self.param_fields()
            .find(|(name, _)| field_param_name(name) == param)
    }

    pub fn extract(&self, word: u32, field: &EncField) -> u32 {
        (word & field.bit_mask()) >> field.lo
    }

    /// Insert a parameter value into its field position.
    pub fn insert(&self, word: u32, field: &EncField, value: u32) -> u32 {
        (word & !field.bit_mask()) | ((value << field.lo) & field.bit_mask())
    }

    /// Canonical one-line rendering, the same shape the `.enc` format uses.
    pub fn render(&self) -> String {
        let parts: Vec<String> = self
            .fields
            .iter()
            .map(|f| {
                let range = if f.hi == f.lo {
                    format!("{}", f.hi)
                } else {
                    format!("{}..{}", f.hi, f.lo)
                };
                match &f.content {
                    FieldContent::Const(v) => {
                        format!("{range} {:0width$b}", v, width = f.width() as usize)
                    }
                    FieldContent::Param(p) => format!("{range} {p}"),
                }
            })
            .collect();
        parts.join(" | ")
    }
}

impl fmt::Display for EncodingTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

// ---------------------------------------------------------------------------

/// One element of an assembly syntax template.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SynElem {
    Literal(String),
    /// `<field>`: renders the decoded field value.
    Placeholder { field: String },
    /// `<family>` where the family names a mode-case group; replaced by the
    /// mode-case template during flattening.
    Hole { family: String },
    /// `{...}` group printed only for some values of the controlling field:
    /// condition fields print their mnemonic suffix unless the condition is
    /// Always; any other control prints the group iff its value is nonzero.
    Optional { elements: Vec<SynElem>, control: String },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SyntaxTemplate {
    /// Leading mnemonic; empty for mode-case templates.
    pub mnemonic: String,
    pub elements: Vec<SynElem>,
}

impl SyntaxTemplate {
    /// All placeholder field names, optional groups included.
    pub fn placeholder_fields(&self) -> Vec<&str> {
        fn go<'a>(elems: &'a [SynElem], out: &mut Vec<&'a str>) {
            for e in elems {
                match e {
                    SynElem::Placeholder { field } => out.push(field),
                    SynElem::Optional { elements, .. } => go(elements, out),
                    _ => {}
                }
            }
        }
        let mut out = Vec::new();
        go(&self.elements, &mut out);
        out
    }

    /// Control fields of optional groups.
    pub fn control_fields(&self) -> Vec<&str> {
        fn go<'a>(elems: &'a [SynElem], out: &mut Vec<&'a str>) {
            for e in elems {
                if let SynElem::Optional { elements, control } = e {
                    out.push(control);
                    go(elements, out);
                }
            }
        }
        let mut out = Vec::new();
        go(&self.elements, &mut out);
        out
    }

    pub fn holes(&self) -> Vec<&str> {
        self.elements
            .iter()
            .filter_map(|e| match e {
                SynElem::Hole { family } => Some(family.as_str()),
                _ => None,
            })
            .collect()
    }
}

// ---------------------------------------------------------------------------

/// Decode-time predicate distinguishing defined from unpredictable words.
/// Parameters are referenced by parameter name (`n`, not `Rn`).
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ConstraintKind {
    NotEqualValue { param: String, value: u32 },
    ParamsDiffer { a: String, b: String },
    NotIn { param: String, values: BTreeSet<u32> },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ValidityConstraint {
    /// Instruction or mode-case name the constraint came from.
    pub subject: String,
    pub kind: ConstraintKind,
}

impl ValidityConstraint {
    pub fn params(&self) -> Vec<&str> {
        match &self.kind {
            ConstraintKind::NotEqualValue { param, .. } => vec![param],
            ConstraintKind::ParamsDiffer { a, b } => vec![a, b],
            ConstraintKind::NotIn { param, .. } => vec![param],
        }
    }

    /// Evaluate against a decoded parameter record.
    pub fn check(&self, lookup: &impl Fn(&str) -> Option<u32>) -> bool {
        match &self.kind {
            ConstraintKind::NotEqualValue { param, value } => {
                lookup(param).map(|v| v != *value).unwrap_or(true)
            }
            ConstraintKind::ParamsDiffer { a, b } => match (lookup(a), lookup(b)) {
                (Some(va), Some(vb)) => va != vb,
                _ => true,
            },
            ConstraintKind::NotIn { param, values } => {
                lookup(param).map(|v| !values.contains(&v)).unwrap_or(true)
            }
        }
    }

    /// Values of `param` this constraint rules out.
    pub fn excluded_values(&self, param: &str) -> BTreeSet<u32> {
        match &self.kind {
            ConstraintKind::NotEqualValue { param: p, value } if p == param => {
                BTreeSet::from([*value])
            }
            ConstraintKind::NotIn { param: p, values } if p == param => values.clone(),
            _ => BTreeSet::new(),
        }
    }
}

impl fmt::Display for ValidityConstraint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.kind {
            ConstraintKind::NotEqualValue { param, value } => {
                write!(f, "{}: {} != {}", self.subject, param, value)
            }
            ConstraintKind::ParamsDiffer { a, b } => {
                write!(f, "{}: {} != {}", self.subject, a, b)
            }
            ConstraintKind::NotIn { param, values } => {
                let vs: Vec<String> = values.iter().map(|v| v.to_string()).collect();
                write!(f, "{}: {} !in {{{}}}", self.subject, param, vs.join(","))
            }
        }
    }
}

// ---------------------------------------------------------------------------

/// An instruction as described by the manual-style corpus.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InstrUnit {
    pub name: String,
    pub ast: Ast,
    pub encoding: EncodingTable,
    pub syntax: SyntaxTemplate,
    pub constraints: Vec<ValidityConstraint>,
    /// Mode family the syntax hole references, if any.
    pub family: Option<String>,
    /// Names of the mode cases this instruction combines with.
    pub modes: Vec<String>,
    /// Registered patch applied to the mode code before flattening.
    pub patch: Option<String>,
}

/// An addressing-mode case: described exactly like an instruction, plus the
/// family it belongs to.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ModeCase {
    pub name: String,
    pub family: String,
    pub ast: Ast,
    pub encoding: EncodingTable,
    pub syntax: SyntaxTemplate,
    pub constraints: Vec<ValidityConstraint>,
}

/// A rewrite patch: ordered `replace_exp` steps applied to the mode code of
/// one instruction. Every step must replace at least one occurrence.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ModePatch {
    pub subject: String,
    pub steps: Vec<(Expr, Expr)>,
}

/// The fully linked corpus.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IsaDescription {
    pub instructions: Vec<InstrUnit>,
    pub modes: Vec<ModeCase>,
    pub patches: Vec<ModePatch>,
}

impl IsaDescription {
    pub fn instruction(&self, name: &str) -> Option<&InstrUnit> {
        self.instructions.iter().find(|i| i.name == name)
    }

    pub fn mode(&self, name: &str) -> Option<&ModeCase> {
        self.modes.iter().find(|m| m.name == name)
    }

    pub fn patch(&self, subject: &str) -> Option<&ModePatch> {
        self.patches.iter().find(|p| p.subject == subject)
    }
}

// ---------------------------------------------------------------------------

/// Runtime parameter of a flattened instruction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParamSpec {
    pub name: String,
    pub width: u8,
    pub signed: bool,
}

/// An instruction × addressing-mode product after flattening, the unit the
/// decoder and code generators work from.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FlatInstruction {
    /// Compound name, e.g. `ADC_lsl_imm`; specialized variants append a
    /// suffix, e.g. `ADC_lsl_imm__s0__al`.
    pub name: String,
    /// Name of the unspecialized flat instruction this one derives from.
    pub base: String,
    pub instr: String,
    pub mode: Option<String>,
    pub ast: Ast,
    /// Number of leading statements inlined from the mode case; the
    /// write-back relocation pass searches this prefix.
    pub mode_prefix_len: usize,
    pub encoding: EncodingTable,
    pub syntax: SyntaxTemplate,
    pub constraints: Vec<ValidityConstraint>,
    /// Run-time parameters: encoding parameters surviving in the code plus
    /// parameters introduced by pre-computation.
    pub params: Vec<ParamSpec>,
    pub locals: Vec<String>,
    /// Decode-time computations: `name := expr(raw params)`.
    pub precompute: Vec<(String, Expr)>,
    /// Constant substitutions a specialized variant was built from, also
    /// used as its decoder selection predicate.
    pub specialization: Vec<(String, u32)>,
    /// Decode-time may-branch condition over parameters; `None` until the
    /// analysis pass has run.
    pub may_branch: Option<Expr>,
    /// Execution count from an ingested profile (0 without one).
    pub weight: u64,
}

impl FlatInstruction {
    pub fn param(&self, name: &str) -> Option<&ParamSpec> {
        self.params.iter().find(|p| p.name == name)
    }

    /// Names of every value the decoder must produce for this instruction:
    /// field parameters, specialization constants, then precomputed values.
    pub fn decode_values(&self) -> Vec<String> {
        let mut out: Vec<String> = self
            .encoding
            .param_fields()
            .map(|(f, _)| field_param_name(f).to_string())
            .collect();
        for (name, value) in &self.specialization {
            let _ = value;
            if !out.iter().any(|n| n == name) {
                out.push(name.clone());
            }
        }
        for (name, _) in &self.precompute {
            out.push(name.clone());
        }
        out
    }
}
