//! Valid-word enumeration: produce, per flat instruction, parameter
//! assignments that satisfy every validity constraint, and the instruction
//! words they encode to. Small parameter spaces are enumerated exhaustively;
//! larger ones are sampled with every parameter's boundary values covered.

use std::collections::BTreeMap;

use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::ir::types::{field_param_name, ConstraintKind, FlatInstruction};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum TestgenError {
    #[error("`{unit}`: constraints leave no valid value for `{param}`")]
    Unsatisfiable { unit: String, param: String },
    #[error("`{unit}`: constraints reject every sampled assignment")]
    NoAssignment { unit: String },
}

/// One generated instance: the parameter record (field parameters only, in
/// encoding order) and its encoded word.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Instance {
    pub params: Vec<(String, u32)>,
    pub word: u32,
}

/// Encode a parameter record into an instruction word.
pub fn encode_word(flat: &FlatInstruction, params: &[(String, u32)]) -> u32 {
    let mut word = flat.encoding.value();
    for (name, value) in params {
        let (_, field) = flat
            .encoding
            .field_for_param(name)
            .unwrap_or_else(|| panic!("{}: no field for parameter {name}", flat.name));
        word = flat.encoding.insert(word, field, *value);
    }
    word
}

struct ParamInfo {
    name: String,
    domain: Domain,
}

enum Domain {
    /// Explicit value list (small fields).
    List(Vec<u32>),
    /// Full range minus exclusions (wide fields).
    Range { max: u32, excluded: Vec<u32> },
}

impl Domain {
    fn size(&self) -> u64 {
        match self {
            Domain::List(v) => v.len() as u64,
            Domain::Range { max, excluded } => (*max as u64 + 1) - excluded.len() as u64,
        }
    }

    fn contains(&self, v: u32) -> bool {
        match self {
            Domain::List(list) => list.contains(&v),
            Domain::Range { max, excluded } => v <= *max && !excluded.contains(&v),
        }
    }

    fn min(&self) -> u32 {
        match self {
            Domain::List(list) => *list.first().unwrap(),
            Domain::Range { max, excluded } => {
                (0..=*max).find(|v| !excluded.contains(v)).unwrap()
            }
        }
    }

    fn max(&self) -> u32 {
        match self {
            Domain::List(list) => *list.last().unwrap(),
            Domain::Range { max, excluded } => {
                (0..=*max).rev().find(|v| !excluded.contains(v)).unwrap()
            }
        }
    }

    fn sample(&self, rng: &mut ChaCha8Rng) -> u32 {
        match self {
            Domain::List(list) => list[rng.random_range(0..list.len())],
            Domain::Range { max, excluded } => loop {
                let v = rng.random_range(0..=*max);
                if !excluded.contains(&v) {
                    break v;
                }
            },
        }
    }
}

fn param_infos(flat: &FlatInstruction) -> Result<Vec<ParamInfo>, TestgenError> {
    let mut out = Vec::new();
    for (field, f) in flat.encoding.param_fields() {
        let name = field_param_name(field).to_string();
        let mut excluded: Vec<u32> = Vec::new();
        for c in &flat.constraints {
            excluded.extend(c.excluded_values(&name));
        }
        excluded.sort_unstable();
        excluded.dedup();
        let max = if f.width() >= 32 {
            u32::MAX
        } else {
            (1u32 << f.width()) - 1
        };
        let domain = if f.width() <= 8 {
            let list: Vec<u32> = (0..=max).filter(|v| !excluded.contains(v)).collect();
            if list.is_empty() {
                return Err(TestgenError::Unsatisfiable {
                    unit: flat.name.clone(),
                    param: name,
                });
            }
            Domain::List(list)
        } else {
            if excluded.len() as u64 > max as u64 {
                return Err(TestgenError::Unsatisfiable {
                    unit: flat.name.clone(),
                    param: name,
                });
            }
            Domain::Range { max, excluded }
        };
        out.push(ParamInfo { name, domain });
    }
    Ok(out)
}

/// Pairwise-difference constraints, by parameter name.
fn differ_pairs(flat: &FlatInstruction) -> Vec<(String, String)> {
    flat.constraints
        .iter()
        .filter_map(|c| match &c.kind {
            ConstraintKind::ParamsDiffer { a, b } => Some((a.clone(), b.clone())),
            _ => None,
        })
        .collect()
}

fn satisfies_differs(assign: &[(String, u32)], differs: &[(String, String)]) -> bool {
    differs.iter().all(|(a, b)| {
        let va = assign.iter().find(|(n, _)| n == a).map(|(_, v)| *v);
        let vb = assign.iter().find(|(n, _)| n == b).map(|(_, v)| *v);
        match (va, vb) {
            (Some(x), Some(y)) => x != y,
            _ => true,
        }
    })
}

/// Boundary values of one parameter: domain min and max, plus the immediate
/// neighbors of every constrained-out value that are still in the domain.
fn boundary_values(info: &ParamInfo, flat: &FlatInstruction) -> Vec<u32> {
    let mut out = vec![info.domain.min(), info.domain.max()];
    for c in &flat.constraints {
        for v in c.excluded_values(&info.name) {
            for cand in [v.wrapping_sub(1), v.wrapping_add(1)] {
                if info.domain.contains(cand) {
                    out.push(cand);
                }
            }
        }
    }
    out.sort_unstable();
    out.dedup();
    out
}

fn stable_seed(name: &str) -> u64 {
    // FNV-1a; the point is determinism across runs, not quality.
    let mut h: u64 = 0xcbf2_9ce4_8422_2325;
    for b in name.bytes() {
        h ^= b as u64;
        h = h.wrapping_mul(0x0000_0100_0000_01b3);
    }
    h
}

/// Enumerate valid instances of one flat instruction, at most `budget`.
pub fn enumerate_valid(
    flat: &FlatInstruction,
    budget: usize,
) -> Result<Vec<Instance>, TestgenError> {
    let infos = param_infos(flat)?;
    let differs = differ_pairs(flat);
    let space: u64 = infos.iter().map(|i| i.domain.size()).fold(1, |a, b| {
        a.saturating_mul(b)
    });

    let mut out: Vec<Instance> = Vec::new();
    if space as usize <= budget {
        // Exhaustive cartesian product.
        let mut assign: Vec<(String, u32)> = Vec::new();
        exhaustive(&infos, &differs, 0, &mut assign, &mut out, flat);
        if out.is_empty() {
            return Err(TestgenError::NoAssignment {
                unit: flat.name.clone(),
            });
        }
        return Ok(out);
    }

    // Stratified sampling: cover every parameter's boundary values, then
    // fill with random valid assignments.
    let mut rng = ChaCha8Rng::seed_from_u64(stable_seed(&flat.name));
    let mut seen = std::collections::BTreeSet::new();
    let mut push = |assign: Vec<(String, u32)>, out: &mut Vec<Instance>| {
        let word = encode_word(flat, &assign);
        if seen.insert(word) {
            out.push(Instance {
                params: assign,
                word,
            });
        }
    };
    let random_assign = |rng: &mut ChaCha8Rng, differs: &[(String, String)]| loop {
        let cand: Vec<(String, u32)> = infos
            .iter()
            .map(|i| (i.name.clone(), i.domain.sample(rng)))
            .collect();
        if satisfies_differs(&cand, differs) {
            break cand;
        }
    };
    for info in &infos {
        for b in boundary_values(info, flat) {
            if out.len() >= budget {
                break;
            }
            // Fix this parameter at its boundary, draw the rest.
            let mut tries = 0;
            loop {
                let mut cand = random_assign(&mut rng, &differs);
                if let Some(slot) = cand.iter_mut().find(|(n, _)| *n == info.name) {
                    slot.1 = b;
                }
                if satisfies_differs(&cand, &differs) {
                    push(cand, &mut out);
                    break;
                }
                tries += 1;
                if tries > 100 {
                    return Err(TestgenError::NoAssignment {
                        unit: flat.name.clone(),
                    });
                }
            }
        }
    }
    while out.len() < budget {
        push(random_assign(&mut rng, &differs), &mut out);
    }
    Ok(out)
}

fn exhaustive(
    infos: &[ParamInfo],
    differs: &[(String, String)],
    depth: usize,
    assign: &mut Vec<(String, u32)>,
    out: &mut Vec<Instance>,
    flat: &FlatInstruction,
) {
    if depth == infos.len() {
        if satisfies_differs(assign, differs) {
            out.push(Instance {
                params: assign.clone(),
                word: encode_word(flat, assign),
            });
        }
        return;
    }
    let info = &infos[depth];
    let values: Vec<u32> = match &info.domain {
        Domain::List(list) => list.clone(),
        Domain::Range { max, excluded } => {
            (0..=*max).filter(|v| !excluded.contains(v)).collect()
        }
    };
    for v in values {
        assign.push((info.name.clone(), v));
        exhaustive(infos, differs, depth + 1, assign, out, flat);
        assign.pop();
    }
}

/// Width of a field parameter, for rendering.
pub fn param_width(flat: &FlatInstruction, name: &str) -> u8 {
    flat.encoding
        .field_for_param(name)
        .map(|(_, f)| f.width())
        .unwrap_or(32)
}

/// Map from parameter name to value for one instance, extended with the
/// flat's decode-time pre-computations.
pub fn full_record(flat: &FlatInstruction, inst: &Instance) -> BTreeMap<String, u32> {
    let mut rec: BTreeMap<String, u32> = inst.params.iter().cloned().collect();
    for (name, expr) in &flat.precompute {
        let env = |n: &str| rec.get(n).copied();
        let v = crate::ir::eval::eval_pure(expr, &env)
            .expect("pre-compute rules are decode-time evaluable");
        rec.insert(name.clone(), v);
    }
    rec
}
