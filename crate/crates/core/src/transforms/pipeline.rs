//! Pipeline driver: runs the six passes in their fixed order and hands the
//! analysis pass the finished flat instructions.

use std::collections::BTreeMap;

use super::{flatten, precompute, specialize, symbolic, writeback, TransformError};
use crate::analysis;
use crate::ir::ast::Expr;
use crate::ir::types::{FlatInstruction, IsaDescription};
use crate::isa::{BranchOverride, ConfigFile};

/// Everything the performance passes need to know.
#[derive(Debug, Clone, Default)]
pub struct TransformConfig {
    /// `name := pattern` rules for decode-time pre-computation.
    pub precompute_patterns: Vec<(String, Expr)>,
    /// Flags cloned to each listed constant by the specializer.
    pub specialize_flags: Vec<(String, Vec<u32>)>,
    /// Execution counts from a previous simulation run.
    pub profile: Option<BTreeMap<String, u64>>,
    /// Minimum weight to specialize when a profile is present.
    pub weight_threshold: u64,
    /// Master switch (`--no-specialize` clears it).
    pub specialize: bool,
}

/// Below this corpus size everything is specialized even without a profile;
/// the code-size concern the threshold protects against only bites at full
/// architecture scale.
pub const SMALL_CORPUS: usize = 64;

pub const DEFAULT_WEIGHT_THRESHOLD: u64 = 1000;

impl TransformConfig {
    pub fn from_file(cf: &ConfigFile) -> TransformConfig {
        TransformConfig {
            precompute_patterns: cf.precompute.clone(),
            specialize_flags: cf.specialize_flags.clone(),
            profile: None,
            weight_threshold: DEFAULT_WEIGHT_THRESHOLD,
            specialize: true,
        }
    }
}

/// A per-pass snapshot of the instruction code, for `--dump-ir`.
#[derive(Debug, Clone)]
pub struct StageDump {
    pub stage: String,
    /// (flat name, pretty-printed code).
    pub units: Vec<(String, String)>,
}

/// Pipeline products. `base` drives the test generator and the printer;
/// `decoder` additionally carries the specialized variants and is what the
/// decoder generator consumes.
#[derive(Debug, Clone)]
pub struct Pipeline {
    pub base: Vec<FlatInstruction>,
    pub decoder: Vec<FlatInstruction>,
    pub warnings: Vec<String>,
    pub dumps: Vec<StageDump>,
}

/// Apply the symbolic-call rewrite to every unit of a description.
pub fn rewrite_all(desc: &IsaDescription) -> Result<IsaDescription, TransformError> {
    let mut out = desc.clone();
    for i in &mut out.instructions {
        i.ast = symbolic::rewrite_symbolic_calls(&i.ast, &i.name)?;
    }
    for m in &mut out.modes {
        m.ast = symbolic::rewrite_symbolic_calls(&m.ast, &m.name)?;
    }
    Ok(out)
}

fn snapshot(stage: &str, flats: &[FlatInstruction], dumps: &mut Vec<StageDump>, keep: bool) {
    if !keep {
        return;
    }
    dumps.push(StageDump {
        stage: stage.to_string(),
        units: flats
            .iter()
            .map(|f| (f.name.clone(), crate::ir::printer::print_ast(&f.ast)))
            .collect(),
    });
}

/// Run the whole pipeline over a linked description.
pub fn run_pipeline(
    desc: &IsaDescription,
    cfg: &TransformConfig,
    overrides: &[(String, BranchOverride)],
    keep_dumps: bool,
) -> Result<Pipeline, TransformError> {
    let mut warnings = Vec::new();
    let mut dumps = Vec::new();

    // Passes 1-2 operate on the unflattened units (patches are applied by
    // the flattening pass itself, which owns the instruction × mode pairing).
    let desc = rewrite_all(desc)?;

    // Pass 3: flatten.
    let flats = flatten::flatten(&desc)?;
    snapshot("flatten", &flats, &mut dumps, keep_dumps);

    // Pass 4: write-back relocation.
    let flats: Vec<FlatInstruction> = flats
        .iter()
        .map(writeback::move_writeback)
        .collect::<Result<_, _>>()?;
    snapshot("writeback", &flats, &mut dumps, keep_dumps);

    // Pass 5: pre-computation.
    let mut base: Vec<FlatInstruction> = flats
        .iter()
        .map(|f| precompute::precompute(f, &cfg.precompute_patterns))
        .collect::<Result<_, _>>()?;
    snapshot("precompute", &base, &mut dumps, keep_dumps);

    // Weights from the profile, if any.
    if let Some(profile) = &cfg.profile {
        let unknown = ingest_profile(&mut base, profile);
        for name in unknown {
            warnings.push(format!("profile names unknown instruction `{name}`"));
        }
    }

    // Pass 6: specialization.
    let small = base.len() < SMALL_CORPUS;
    let mut decoder = Vec::new();
    for flat in &base {
        let eligible = cfg.specialize
            && match &cfg.profile {
                None => small,
                Some(_) => flat.weight >= cfg.weight_threshold,
            };
        if eligible {
            decoder.extend(specialize::specialize(flat, &cfg.specialize_flags)?);
        } else {
            decoder.push(flat.clone());
        }
    }
    snapshot("specialize", &decoder, &mut dumps, keep_dumps);

    // May-branch analysis over everything the decoder will see.
    for flat in base.iter_mut().chain(decoder.iter_mut()) {
        let report = analysis::may_branch(flat, overrides);
        for w in report.warnings {
            warnings.push(format!("{}: {w}", flat.name));
        }
        flat.may_branch = Some(report.condition);
    }
    snapshot("maybranch", &decoder, &mut dumps, keep_dumps);

    Ok(Pipeline {
        base,
        decoder,
        warnings,
        dumps,
    })
}

/// Parse a profile file: `name<TAB>count` per line (any whitespace accepted).
pub fn parse_profile(text: &str) -> Result<BTreeMap<String, u64>, TransformError> {
    let mut out = BTreeMap::new();
    for (i, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with("//") {
            continue;
        }
        let mut parts = line.split_whitespace();
        let (name, count) = match (parts.next(), parts.next(), parts.next()) {
            (Some(n), Some(c), None) => (n, c),
            _ => {
                return Err(TransformError::Profile(format!(
                    "line {}: expected `name count`",
                    i + 1
                )))
            }
        };
        let count: u64 = count.parse().map_err(|_| {
            TransformError::Profile(format!("line {}: bad count `{count}`", i + 1))
        })?;
        *out.entry(name.to_string()).or_default() += count;
    }
    Ok(out)
}

/// Attach profile weights by flat-instruction name. Returns the profile
/// names that matched nothing (reported as warnings, not errors).
pub fn ingest_profile(
    flats: &mut [FlatInstruction],
    profile: &BTreeMap<String, u64>,
) -> Vec<String> {
    let mut unknown = Vec::new();
    for (name, count) in profile {
        match flats.iter_mut().find(|f| &f.name == name) {
            Some(f) => f.weight = *count,
            None => unknown.push(name.clone()),
        }
    }
    unknown
}

/// Render a profile map in the on-disk format.
pub fn render_profile(profile: &BTreeMap<String, u64>) -> String {
    let mut out = String::new();
    for (name, count) in profile {
        out.push_str(name);
        out.push('\t');
        out.push_str(&count.to_string());
        out.push('\n');
    }
    out
}
