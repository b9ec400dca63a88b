//! Two-phase decoder built from the flattened encoding tables.
//!
//! Phase one selects candidates by mask/value; looking at the encoding
//! tables alone is not enough, because one word can match several tables.
//! Phase two extracts the parameter fields, evaluates the validity
//! constraints, and settles between the survivors. Candidates are ordered
//! most-constant-bits-first (ties broken by corpus declaration order), so a
//! specialized variant is always tried before its generic fallback.

use crate::analysis;
use crate::ir::ast::Expr;
use crate::ir::eval;
use crate::ir::types::{field_param_name, FlatInstruction, ValidityConstraint};

/// How one decoded value is produced.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Extract {
    /// Bits `hi..=lo` of the instruction word.
    Field { hi: u8, lo: u8 },
    /// Constant folded in by specialization.
    Const(u32),
    /// Decode-time pre-computation over earlier values.
    Computed(Expr),
}

#[derive(Debug, Clone)]
pub struct Candidate {
    pub name: String,
    pub base: String,
    pub mask: u32,
    pub value: u32,
    /// Index into the decoder's flat-instruction list.
    pub flat: usize,
    /// Decoded values in order: field params, specialization constants,
    /// pre-computed parameters.
    pub extracts: Vec<(String, Extract)>,
    pub constraints: Vec<ValidityConstraint>,
    pub specialization: Vec<(String, u32)>,
    pub may_branch: Expr,
}

#[derive(Debug, Clone)]
pub struct DecoderSpec {
    pub flats: Vec<FlatInstruction>,
    /// Candidates in decode order.
    pub candidates: Vec<Candidate>,
}

/// A decoded instruction: a reference to its semantics plus the parameter
/// record and the evaluated may-branch bit.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Decoded {
    pub flat: usize,
    pub candidate: usize,
    /// Parallel to the candidate's extract list.
    pub values: Vec<u32>,
    pub is_terminator: bool,
}

/// Outcome of decoding one word.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum DecodeResult<T> {
    Instr(T),
    /// No encoding matched.
    Undefined,
    /// An encoding matched but every match violates a validity constraint.
    Unpredictable,
}

impl<T> DecodeResult<T> {
    pub fn instr(self) -> Option<T> {
        match self {
            DecodeResult::Instr(t) => Some(t),
            _ => None,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum DecoderError {
    #[error("ambiguous encoding: `{a}` and `{b}` accept a common word and their constraints cannot tell them apart")]
    Ambiguous { a: String, b: String },
    #[error("`{unit}`: the may-branch condition is missing; run the analysis pass first")]
    MissingMayBranch { unit: String },
}

fn build_candidate(idx: usize, flat: &FlatInstruction) -> Result<Candidate, DecoderError> {
    let mut extracts = Vec::new();
    for (field, f) in flat.encoding.param_fields() {
        extracts.push((
            field_param_name(field).to_string(),
            Extract::Field { hi: f.hi, lo: f.lo },
        ));
    }
    for (name, value) in &flat.specialization {
        extracts.push((name.clone(), Extract::Const(*value)));
    }
    for (name, expr) in &flat.precompute {
        extracts.push((name.clone(), Extract::Computed(expr.clone())));
    }
    Ok(Candidate {
        name: flat.name.clone(),
        base: flat.base.clone(),
        mask: flat.encoding.mask(),
        value: flat.encoding.value(),
        flat: idx,
        extracts,
        constraints: flat.constraints.clone(),
        specialization: flat.specialization.clone(),
        may_branch: flat
            .may_branch
            .clone()
            .ok_or_else(|| DecoderError::MissingMayBranch {
                unit: flat.name.clone(),
            })?,
    })
}

/// Values a parameter may still take under a candidate's single-parameter
/// constraints.
fn param_domain(c: &Candidate, param: &str, width: u8) -> Vec<u32> {
    let top = if width >= 32 { u32::MAX } else { (1 << width) - 1 };
    (0..=top)
        .filter(|v| {
            c.constraints
                .iter()
                .all(|k| !k.excluded_values(param).contains(v))
        })
        .collect()
}

/// Try to prove two phase-one-compatible candidates never both survive
/// phase two.
fn provably_disjoint(a: &Candidate, b: &Candidate, flats: &[FlatInstruction]) -> bool {
    // Forced values: a parameter field of one side fully covered by the
    // other side's constant bits.
    for (x, y) in [(a, b), (b, a)] {
        let fx = &flats[x.flat];
        for (field, f) in fx.encoding.param_fields() {
            let bits = f.bit_mask();
            if y.mask & bits == bits {
                let forced = (y.value & bits) >> f.lo;
                let pname = field_param_name(field);
                let violated = x.constraints.iter().any(|c| {
                    !c.check(&|p: &str| (p == pname).then_some(forced))
                });
                if violated {
                    return true;
                }
            }
        }
    }
    // Same-position parameter whose constraint domains cannot intersect.
    let fa = &flats[a.flat];
    let fb = &flats[b.flat];
    for (field_a, f_a) in fa.encoding.param_fields() {
        for (field_b, f_b) in fb.encoding.param_fields() {
            if (f_a.hi, f_a.lo) != (f_b.hi, f_b.lo) || f_a.width() > 8 {
                continue;
            }
            let da = param_domain(a, field_param_name(field_a), f_a.width());
            let db = param_domain(b, field_param_name(field_b), f_b.width());
            if da.iter().all(|v| !db.contains(v)) {
                return true;
            }
        }
    }
    false
}

/// Compile the decoder table. Fails when two candidates with different
/// semantics accept a common word and the constraints cannot separate them.
pub fn build_decoder(flats: &[FlatInstruction]) -> Result<DecoderSpec, DecoderError> {
    let mut candidates: Vec<Candidate> = flats
        .iter()
        .enumerate()
        .map(|(i, f)| build_candidate(i, f))
        .collect::<Result<_, _>>()?;

    // Most constant bits first; corpus order breaks ties (stable sort).
    candidates.sort_by_key(|c| std::cmp::Reverse(c.mask.count_ones()));

    // Ambiguity check over distinct bases; specialized variants of one base
    // deliberately overlap their generic fallback.
    for i in 0..candidates.len() {
        for j in i + 1..candidates.len() {
            let (a, b) = (&candidates[i], &candidates[j]);
            if a.base == b.base {
                continue;
            }
            let common = a.mask & b.mask;
            if (a.value ^ b.value) & common != 0 {
                continue; // phase one already separates them
            }
            if !provably_disjoint(a, b, flats) {
                return Err(DecoderError::Ambiguous {
                    a: a.name.clone(),
                    b: b.name.clone(),
                });
            }
        }
    }

    Ok(DecoderSpec {
        flats: flats.to_vec(),
        candidates,
    })
}

impl DecoderSpec {
    /// Phase-one candidate indexes for a word (diagnostics and tests).
    pub fn phase1(&self, word: u32) -> Vec<usize> {
        self.candidates
            .iter()
            .enumerate()
            .filter(|(_, c)| word & c.mask == c.value)
            .map(|(i, _)| i)
            .collect()
    }

    /// Extract the full value record for one candidate.
    fn extract(&self, cand: &Candidate, word: u32) -> Vec<u32> {
        let mut values: Vec<u32> = Vec::with_capacity(cand.extracts.len());
        for (_, ex) in &cand.extracts {
            let v = match ex {
                Extract::Field { hi, lo } => eval::extract_bits(word, *hi as u32, *lo as u32),
                Extract::Const(c) => *c,
                Extract::Computed(expr) => {
                    let env = |name: &str| {
                        cand.extracts
                            .iter()
                            .zip(values.iter())
                            .find(|((n, _), _)| n == name)
                            .map(|(_, v)| *v)
                    };
                    eval::eval_pure(expr, &env)
                        .expect("pre-compute rules are decode-time evaluable by construction")
                }
            };
            values.push(v);
        }
        values
    }

    /// Decode one word: first candidate passing mask/value, extraction, and
    /// constraints wins.
    pub fn decode(&self, word: u32) -> DecodeResult<Decoded> {
        let mut matched = false;
        for (ci, cand) in self.candidates.iter().enumerate() {
            if word & cand.mask != cand.value {
                continue;
            }
            matched = true;
            let values = self.extract(cand, word);
            let lookup = |name: &str| {
                cand.extracts
                    .iter()
                    .zip(values.iter())
                    .find(|((n, _), _)| n == name)
                    .map(|(_, v)| *v)
            };
            if !cand.constraints.iter().all(|c| c.check(&lookup)) {
                continue;
            }
            let is_terminator = analysis::eval_condition(&cand.may_branch, &lookup);
            return DecodeResult::Instr(Decoded {
                flat: cand.flat,
                candidate: ci,
                values,
                is_terminator,
            });
        }
        if matched {
            DecodeResult::Unpredictable
        } else {
            DecodeResult::Undefined
        }
    }

    /// Name lookup for a decoded value.
    pub fn value_of(&self, d: &Decoded, name: &str) -> Option<u32> {
        self.candidates[d.candidate]
            .extracts
            .iter()
            .zip(d.values.iter())
            .find(|((n, _), _)| n == name)
            .map(|(_, v)| *v)
    }

    /// Re-encode a decoded instruction's field parameters into a word
    /// (diagnostics; the test generator has its own encoder).
    pub fn flat_of(&self, d: &Decoded) -> &FlatInstruction {
        &self.flats[d.flat]
    }
}
