//! Source-tree generation: turn the transformed flat instructions into a
//! standalone Rust crate implementing the fast back-end — the parameter
//! record types (one per distinct inferred parameter list), the two-phase
//! decoder, one semantics routine per flat instruction, the may-branch
//! evaluator, and the assembly printer. The emitted crate links against
//! this crate's runtime, so both back-ends share the processor state and
//! the builtin arithmetic.

pub mod expr;

use std::collections::{BTreeMap, BTreeSet};
use std::fmt::Write as _;

use crate::ir::ast::{Expr, Stmt};
use crate::ir::types::{field_param_name, FlatInstruction};
use expr::{Binding, ExprCx};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum EmitError {
    #[error("no translation rule for `{0}`")]
    NoTranslation(String),
    #[error("unbound name `{0}` reached the generator")]
    Unbound(String),
    #[error("parameter names `{0}` and `{1}` collide after Rust renaming")]
    FieldCollision(String, String),
    #[error("`{unit}`: {err}")]
    InUnit { unit: String, err: String },
}

/// The generated crate as (relative path, contents) pairs.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SourceTree {
    pub files: Vec<(String, String)>,
}

impl SourceTree {
    pub fn write_to(&self, dir: &std::path::Path) -> std::io::Result<()> {
        for (rel, text) in &self.files {
            let path = dir.join(rel);
            if let Some(parent) = path.parent() {
                std::fs::create_dir_all(parent)?;
            }
            std::fs::write(path, text)?;
        }
        Ok(())
    }
}

const HEADER: &str = "// Generated by `issforge gen-iss`. Do not edit; regenerate instead.\n";

/// Rust identifier for a parameter name. Names carrying uppercase (the
/// one-letter option flags) map to `<lower>_flag`.
fn rust_field(param: &str) -> String {
    if param.chars().any(|c| c.is_ascii_uppercase()) {
        format!("{}_flag", param.to_lowercase())
    } else {
        param.to_lowercase()
    }
}

fn snake(name: &str) -> String {
    let mut out = String::new();
    for c in name.to_lowercase().chars() {
        if c == '_' && out.ends_with('_') {
            continue;
        }
        out.push(c);
    }
    out
}

fn camel(name: &str) -> String {
    name.split('_')
        .filter(|p| !p.is_empty())
        .map(|p| {
            let mut cs = p.chars();
            match cs.next() {
                Some(f) => f.to_ascii_uppercase().to_string() + &cs.as_str().to_lowercase(),
                None => String::new(),
            }
        })
        .collect()
}

// ---- parameter record layouts ----------------------------------------------

#[derive(Debug, Clone, PartialEq, Eq)]
struct LayoutField {
    param: String,
    rust: String,
    width: u8,
}

#[derive(Debug, Clone)]
struct Layout {
    name: String, // P0, P1, ...
    fields: Vec<LayoutField>,
}

struct Layouts {
    layouts: Vec<Layout>,
    /// flat index -> layout index.
    of_flat: Vec<usize>,
}

/// The decode record of a flat instruction, in its base's canonical order
/// (a variant's record equals its base's record, so they share one type).
fn record_fields(base: &FlatInstruction) -> Result<Vec<LayoutField>, EmitError> {
    let mut out = Vec::new();
    for name in base.decode_values() {
        let width = base
            .encoding
            .field_for_param(&name)
            .map(|(_, f)| f.width())
            .unwrap_or(32);
        out.push(LayoutField {
            rust: rust_field(&name),
            param: name,
            width,
        });
    }
    for i in 0..out.len() {
        for j in i + 1..out.len() {
            if out[i].rust == out[j].rust {
                return Err(EmitError::FieldCollision(
                    out[i].param.clone(),
                    out[j].param.clone(),
                ));
            }
        }
    }
    Ok(out)
}

fn compute_layouts(flats: &[FlatInstruction]) -> Result<Layouts, EmitError> {
    let mut layouts: Vec<Layout> = Vec::new();
    let mut of_flat = Vec::with_capacity(flats.len());
    let mut by_key: BTreeMap<Vec<(String, u8)>, usize> = BTreeMap::new();
    for flat in flats {
        let base = flats
            .iter()
            .find(|f| f.name == flat.base)
            .expect("base flat present in the decoder set");
        let fields = record_fields(base).map_err(|e| EmitError::InUnit {
            unit: flat.name.clone(),
            err: e.to_string(),
        })?;
        let key: Vec<(String, u8)> = fields.iter().map(|f| (f.rust.clone(), f.width)).collect();
        let idx = match by_key.get(&key) {
            Some(i) => *i,
            None => {
                let i = layouts.len();
                layouts.push(Layout {
                    name: format!("P{i}"),
                    fields,
                });
                by_key.insert(key, i);
                i
            }
        };
        of_flat.push(idx);
    }
    Ok(Layouts { layouts, of_flat })
}

fn emit_params(layouts: &Layouts) -> String {
    let mut out = String::from(HEADER);
    out.push_str("//! Parameter record types: one per distinct inferred parameter list.\n\n");
    for l in &layouts.layouts {
        out.push_str("#[derive(Debug, Clone, Copy, PartialEq, Eq)]\n");
        if l.fields.is_empty() {
            let _ = writeln!(out, "pub struct {};\n", l.name);
            continue;
        }
        let _ = writeln!(out, "pub struct {} {{", l.name);
        for f in &l.fields {
            let _ = writeln!(out, "    pub {}: u32,", f.rust);
        }
        out.push_str("}\n\n");
    }
    out
}

// ---- local-variable analysis ---------------------------------------------------

struct LocalPlan {
    /// local name -> emitted identifier.
    idents: BTreeMap<String, String>,
    /// locals that need `mut` (reassigned outside disjoint if/else arms).
    mutables: BTreeSet<String>,
}

fn count_reads<'a>(e: &'a Expr, reads: &mut BTreeMap<&'a str, usize>) {
    e.visit(&mut |x| {
        if let Expr::Var(v) = x {
            if let Some(c) = reads.get_mut(v.as_str()) {
                *c += 1;
            }
        }
    });
}

fn collect_writes<'a>(stmts: &'a [Stmt], out: &mut BTreeMap<&'a str, usize>) {
    for s in stmts {
        match s {
            Stmt::Assign {
                lhs: Expr::Var(v), ..
            } => *out.entry(v.as_str()).or_default() += 1,
            Stmt::If {
                then_block,
                else_block,
                ..
            } => {
                collect_writes(then_block, out);
                collect_writes(else_block, out);
            }
            Stmt::Block(b) => collect_writes(b, out),
            _ => {}
        }
    }
}

fn plan_locals(flat: &FlatInstruction) -> LocalPlan {
    let mut reads: BTreeMap<&str, usize> = BTreeMap::new();
    let mut writes: BTreeMap<&str, usize> = BTreeMap::new();
    let mut paired: BTreeMap<&str, usize> = BTreeMap::new();
    for name in &flat.locals {
        reads.insert(name, 0);
        writes.insert(name, 0);
        paired.insert(name, 0);
    }
    fn walk<'a>(
        stmts: &'a [Stmt],
        reads: &mut BTreeMap<&'a str, usize>,
        writes: &mut BTreeMap<&'a str, usize>,
        paired: &mut BTreeMap<&'a str, usize>,
    ) {
        for s in stmts {
            match s {
                Stmt::Assign { lhs, rhs } => {
                    count_reads(rhs, reads);
                    match lhs {
                        Expr::Var(v) => {
                            if let Some(c) = writes.get_mut(v.as_str()) {
                                *c += 1;
                            }
                        }
                        other => count_reads(other, reads),
                    }
                }
                Stmt::If {
                    cond,
                    then_block,
                    else_block,
                } => {
                    count_reads(cond, reads);
                    // Writes placed once in each arm of one if/else assign on
                    // disjoint paths and count as a single initialization.
                    let mut then_w: BTreeMap<&str, usize> = BTreeMap::new();
                    let mut else_w: BTreeMap<&str, usize> = BTreeMap::new();
                    collect_writes(then_block, &mut then_w);
                    collect_writes(else_block, &mut else_w);
                    for (name, tw) in &then_w {
                        if *tw == 1 && else_w.get(name).copied() == Some(1) {
                            if let Some(c) = paired.get_mut(name) {
                                *c += 1;
                            }
                        }
                    }
                    walk(then_block, reads, writes, paired);
                    walk(else_block, reads, writes, paired);
                }
                Stmt::Call { args, .. } => {
                    for a in args {
                        count_reads(a, reads);
                    }
                }
                Stmt::Block(b) => walk(b, reads, writes, paired),
                Stmt::Unpredictable | Stmt::Nop => {}
            }
        }
    }
    walk(&flat.ast.stmts, &mut reads, &mut writes, &mut paired);

    let mut idents = BTreeMap::new();
    let mut mutables = BTreeSet::new();
    for name in &flat.locals {
        let read = reads.get(name.as_str()).copied().unwrap_or(0) > 0;
        let ident = if read {
            snake(name)
        } else {
            format!("_{}", snake(name))
        };
        idents.insert(name.clone(), ident);
        let w = writes.get(name.as_str()).copied().unwrap_or(0);
        let p = paired.get(name.as_str()).copied().unwrap_or(0);
        if w.saturating_sub(p) > 1 {
            mutables.insert(name.clone());
        }
    }
    LocalPlan { idents, mutables }
}

// ---- exec emission ---------------------------------------------------------------

struct FnEmit<'a> {
    cx: ExprCx<'a>,
    out: String,
    indent: usize,
}

impl FnEmit<'_> {
    fn line(&mut self, text: &str) {
        for _ in 0..self.indent {
            self.out.push_str("    ");
        }
        self.out.push_str(text);
        self.out.push('\n');
    }

    fn stmts(&mut self, stmts: &[Stmt]) -> Result<(), EmitError> {
        for s in stmts {
            self.stmt(s)?;
        }
        Ok(())
    }

    fn stmt(&mut self, s: &Stmt) -> Result<(), EmitError> {
        match s {
            Stmt::Assign { lhs, rhs } => self.assign(lhs, rhs),
            Stmt::If {
                cond,
                then_block,
                else_block,
            } => {
                let c = self.cx.boolean(cond)?;
                self.line(&format!("if {c} {{"));
                self.indent += 1;
                self.stmts(then_block)?;
                self.indent -= 1;
                if else_block.is_empty() {
                    self.line("}");
                } else {
                    self.line("} else {");
                    self.indent += 1;
                    self.stmts(else_block)?;
                    self.indent -= 1;
                    self.line("}");
                }
                Ok(())
            }
            Stmt::Call { proc, args } => {
                // Arguments evaluate before the call, like the interpreter;
                // temporaries also keep borrows of the cpu disjoint.
                let mut vals = Vec::with_capacity(args.len());
                for (i, a) in args.iter().enumerate() {
                    let v = self.cx.word(a)?;
                    let tmp = format!("__a{i}");
                    self.line(&format!("let {tmp} = {v};"));
                    vals.push(tmp);
                }
                let text = match proc.as_str() {
                    "LoadMultiple" => {
                        format!("load_multiple(cpu, {}, {})?;", vals[0], vals[1])
                    }
                    "StoreMultiple" => {
                        format!("store_multiple(cpu, {}, {})?;", vals[0], vals[1])
                    }
                    "RestoreCPSR" => "restore_cpsr(cpu)?;".to_string(),
                    "WriteCPSR" => format!("cpu.set_cpsr({})?;", vals[0]),
                    "Halt" => "cpu.halted = true;".to_string(),
                    other => return Err(EmitError::NoTranslation(other.to_string())),
                };
                self.line(&text);
                Ok(())
            }
            Stmt::Block(b) => self.stmts(b),
            Stmt::Unpredictable => {
                self.line("return Err(Fault::UnpredictableExecuted);");
                Ok(())
            }
            Stmt::Nop => Ok(()),
        }
    }

    fn assign(&mut self, lhs: &Expr, rhs: &Expr) -> Result<(), EmitError> {
        // Right side first, matching the interpreter's evaluation order.
        let value = self.cx.word(rhs)?;
        match lhs {
            Expr::Var(name) => {
                let ident = match self.cx.bindings.get(name) {
                    Some(Binding::Local(i)) => i.clone(),
                    _ => return Err(EmitError::Unbound(name.clone())),
                };
                self.line(&format!("{ident} = {value};"));
            }
            Expr::Flag(f) => {
                self.cx.uses.flag = true;
                // Booleans stay booleans in the generated code.
                let b = self.cx.boolean(rhs)?;
                self.line(&format!("cpu.set_flag(Flag::{}, {b});", f.name()));
            }
            Expr::Reg { index, mode } => {
                self.line(&format!("let __wval = {value};"));
                let idx = self.cx.word(index)?;
                match mode.as_deref() {
                    None => self.line(&format!("cpu.write_reg({idx}, __wval)?;")),
                    Some(Expr::Var(v)) if v == "old_mode" => {
                        self.cx.uses.old_mode = true;
                        self.line(&format!("cpu.write_reg_mode({idx}, old_mode, __wval)?;"));
                    }
                    Some(m) => {
                        self.cx.uses.mode_from_value = true;
                        let mv = self.cx.word(m)?;
                        self.line(&format!(
                            "cpu.write_reg_mode({idx}, mode_from_value({mv})?, __wval)?;"
                        ));
                    }
                }
            }
            Expr::Memory { addr, size } => {
                let a = self.cx.word(addr)?;
                self.line(&format!("let __wval = {value};"));
                self.line(&format!("cpu.write_mem({a}, {size}, __wval)?;"));
            }
            other => return Err(EmitError::NoTranslation(format!("lvalue {other:?}"))),
        }
        Ok(())
    }
}

/// Emit one semantics routine.
fn emit_exec_fn(
    flat: &FlatInstruction,
    layout: &Layout,
    out: &mut String,
    uses: &mut expr::Uses,
) -> Result<(), EmitError> {
    let plan = plan_locals(flat);
    let mut bindings: BTreeMap<String, Binding> = BTreeMap::new();
    for f in &layout.fields {
        bindings.insert(f.param.clone(), Binding::Param(format!("p.{}", f.rust)));
    }
    for (name, ident) in &plan.idents {
        bindings.insert(name.clone(), Binding::Local(ident.clone()));
    }

    let mut body = FnEmit {
        cx: ExprCx {
            bindings: &bindings,
            uses: expr::Uses::default(),
        },
        out: String::new(),
        indent: 2,
    };
    body.stmts(&flat.ast.stmts).map_err(|e| EmitError::InUnit {
        unit: flat.name.clone(),
        err: e.to_string(),
    })?;

    let param_used = flat
        .ast
        .any_expr(&|e| matches!(e, Expr::Var(v) if layout.fields.iter().any(|f| &f.param == v)));
    let p_ident = if layout.fields.is_empty() || !param_used {
        "_p"
    } else {
        "p"
    };
    let _ = writeln!(
        out,
        "pub fn {}({p_ident}: &{}, cpu: &mut CpuState) -> Result<Outcome, Fault> {{",
        snake(&flat.name),
        layout.name
    );
    if body.cx.uses.old_mode {
        out.push_str("    let old_mode = cpu.mode;\n");
    }
    out.push_str("    let r = (|| -> Result<(), Fault> {\n");
    for name in &flat.locals {
        let ident = &plan.idents[name];
        let m = if plan.mutables.contains(name) { "mut " } else { "" };
        let _ = writeln!(out, "        let {m}{ident}: u32;");
    }
    out.push_str(&body.out);
    out.push_str("        Ok(())\n    })();\n");
    out.push_str("    match r {\n");
    out.push_str("        Ok(()) => Ok(Outcome::Completed),\n");
    out.push_str("        Err(Fault::DataAbort { addr }) => {\n");
    out.push_str("            cpu.enter_data_abort(addr);\n");
    out.push_str("            Ok(Outcome::Aborted { addr })\n        }\n");
    out.push_str("        Err(e) => Err(e),\n    }\n}\n\n");

    uses.eval |= body.cx.uses.eval;
    uses.flag |= body.cx.uses.flag;
    uses.mode_from_value |= body.cx.uses.mode_from_value;
    Ok(())
}

fn emit_exec(flats: &[FlatInstruction], layouts: &Layouts) -> Result<String, EmitError> {
    let mut fns = String::new();
    let mut uses = expr::Uses::default();
    let mut called: BTreeSet<String> = BTreeSet::new();
    for (i, flat) in flats.iter().enumerate() {
        flat.ast.visit_stmts(&mut |s| {
            if let Stmt::Call { proc, .. } = s {
                called.insert(proc.clone());
            }
        });
        emit_exec_fn(flat, &layouts.layouts[layouts.of_flat[i]], &mut fns, &mut uses)?;
    }
    let mut out = String::from(HEADER);
    out.push_str("//! One semantics routine per flat instruction: a straight-line\n");
    out.push_str("//! translation of the transformed pseudo-code against the shared\n");
    out.push_str("//! runtime. A data abort unwinds the routine and takes the vector.\n\n");
    if uses.eval {
        out.push_str("use issforge_core::ir::eval;\n");
    }
    if uses.flag {
        out.push_str("use issforge_core::ir::Flag;\n");
    }
    let mut helper_names: Vec<&str> = Vec::new();
    if called.contains("LoadMultiple") {
        helper_names.push("load_multiple");
    }
    if called.contains("RestoreCPSR") {
        helper_names.push("restore_cpsr");
    }
    if called.contains("StoreMultiple") {
        helper_names.push("store_multiple");
    }
    if !helper_names.is_empty() {
        let _ = writeln!(
            out,
            "use issforge_core::sim::interp::{{{}}};",
            helper_names.join(", ")
        );
    }
    if uses.mode_from_value {
        out.push_str("use issforge_core::sim::mode_from_value;\n");
    }
    out.push_str("use issforge_core::sim::{CpuState, Fault, Outcome};\n\n");
    out.push_str("use crate::params::*;\n\n");
    out.push_str(&fns);
    Ok(out)
}

// ---- decoder emission ----------------------------------------------------------

fn emit_candidate(
    spec: &crate::sim::DecoderSpec,
    layouts: &Layouts,
    cand: &crate::sim::Candidate,
    body: &mut String,
    indent: usize,
) -> Result<(), EmitError> {
    let flat = &spec.flats[cand.flat];
    let layout = &layouts.layouts[layouts.of_flat[cand.flat]];
    let pad = "    ".repeat(indent);
    let _ = writeln!(body, "{pad}// {}", flat.name);
    let _ = writeln!(
        body,
        "{pad}if word & {:#010X} == {:#010X} {{",
        cand.mask, cand.value
    );
    if !cand.constraints.is_empty() {
        let _ = writeln!(body, "{pad}    matched = true;");
    }
    let mut bindings: BTreeMap<String, Binding> = BTreeMap::new();
    for (name, ex) in &cand.extracts {
        let ident = rust_field(name);
        let text = match ex {
            crate::sim::Extract::Field { hi, lo } => {
                let width = hi - lo + 1;
                let mask = if width >= 32 { u32::MAX } else { (1u32 << width) - 1 };
                if *lo == 0 {
                    format!("let {ident} = word & {mask:#X};")
                } else {
                    format!("let {ident} = (word >> {lo}) & {mask:#X};")
                }
            }
            crate::sim::Extract::Const(v) => format!("let {ident} = {v};"),
            crate::sim::Extract::Computed(e) => {
                let mut cx = ExprCx {
                    bindings: &bindings,
                    uses: expr::Uses::default(),
                };
                let translated = cx.word(e).map_err(|err| EmitError::InUnit {
                    unit: flat.name.clone(),
                    err: err.to_string(),
                })?;
                format!("let {ident} = {translated};")
            }
        };
        let _ = writeln!(body, "{pad}    {text}");
        bindings.insert(name.clone(), Binding::Param(ident));
    }
    let mut checks: Vec<String> = Vec::new();
    for c in &cand.constraints {
        let check = match &c.kind {
            crate::ir::ConstraintKind::NotEqualValue { param, value } => {
                format!("{} != {}", rust_field(param), value)
            }
            crate::ir::ConstraintKind::ParamsDiffer { a, b } => {
                format!("{} != {}", rust_field(a), rust_field(b))
            }
            crate::ir::ConstraintKind::NotIn { param, values } => {
                let list: Vec<String> = values.iter().map(|v| v.to_string()).collect();
                format!("!matches!({}, {})", rust_field(param), list.join(" | "))
            }
        };
        checks.push(check);
    }
    let variant = camel(&flat.name);
    let construct = if layout.fields.is_empty() {
        format!("Op::{variant}({})", layout.name)
    } else {
        let fields: Vec<String> = layout.fields.iter().map(|f| f.rust.clone()).collect();
        format!("Op::{variant}({} {{ {} }})", layout.name, fields.join(", "))
    };
    if checks.is_empty() {
        let _ = writeln!(body, "{pad}    return DecodeResult::Instr({construct});");
    } else {
        let _ = writeln!(body, "{pad}    if {} {{", checks.join(" && "));
        let _ = writeln!(body, "{pad}        return DecodeResult::Instr({construct});");
        let _ = writeln!(body, "{pad}    }}");
    }
    let _ = writeln!(body, "{pad}}}");
    Ok(())
}

fn emit_decoder(flats: &[FlatInstruction], layouts: &Layouts) -> Result<String, EmitError> {
    // Reuse the oracle's candidate construction, ordering, and ambiguity
    // check so both decoders are the same table in two forms.
    let spec = crate::sim::build_decoder(flats).map_err(|e| EmitError::InUnit {
        unit: "decoder".to_string(),
        err: e.to_string(),
    })?;

    let mut out = String::from(HEADER);
    out.push_str("//! Two-phase decoder: phase one selects candidates by mask/value,\n");
    out.push_str("//! phase two extracts the fields, runs the decode-time computations,\n");
    out.push_str("//! and evaluates the validity constraints. Candidates run most\n");
    out.push_str("//! constant bits first, so a specialized variant wins over its\n");
    out.push_str("//! generic fallback.\n\n");
    let uses_eval = spec
        .candidates
        .iter()
        .any(|c| c.extracts.iter().any(|(_, e)| matches!(e, crate::sim::Extract::Computed(_))));
    if uses_eval {
        out.push_str("use issforge_core::ir::eval;\n");
    }
    out.push_str("use issforge_core::sim::DecodeResult;\n\n");
    out.push_str("use crate::params::*;\n");
    out.push_str("use crate::Op;\n\n");

    let bucketed = spec
        .candidates
        .iter()
        .all(|c| c.mask & (0b111 << 25) == 0b111 << 25);

    let mut body = String::new();
    if bucketed {
        body.push_str("    match (word >> 25) & 0b111 {\n");
        for bucket in 0..8u32 {
            let in_bucket: Vec<&crate::sim::Candidate> = spec
                .candidates
                .iter()
                .filter(|c| (c.value >> 25) & 0b111 == bucket)
                .collect();
            if in_bucket.is_empty() {
                continue;
            }
            let _ = writeln!(body, "        {bucket:#05b} => {{");
            for cand in in_bucket {
                emit_candidate(&spec, layouts, cand, &mut body, 3)?;
            }
            body.push_str("        }\n");
        }
        body.push_str("        _ => {}\n    }\n");
    } else {
        for cand in &spec.candidates {
            emit_candidate(&spec, layouts, cand, &mut body, 1)?;
        }
    }

    out.push_str("pub fn decode(word: u32) -> DecodeResult<Op> {\n");
    out.push_str("    let mut matched = false;\n");
    out.push_str(&body);
    out.push_str("    if matched {\n");
    out.push_str("        DecodeResult::Unpredictable\n");
    out.push_str("    } else {\n");
    out.push_str("        DecodeResult::Undefined\n    }\n}\n");
    Ok(out)
}

// ---- printer emission -------------------------------------------------------------

fn emit_printer_elems(
    list: &[crate::ir::types::SynElem],
    flat: &FlatInstruction,
    body: &mut String,
    indent: usize,
) {
    use crate::ir::types::SynElem;
    let pad = "    ".repeat(indent);
    for e in list {
        match e {
            SynElem::Literal(l) => {
                let _ = writeln!(body, "{pad}out.push_str({l:?});");
            }
            SynElem::Placeholder { field } => {
                let a = format!("p.{}", rust_field(field_param_name(field)));
                let width = flat
                    .encoding
                    .param_field(field)
                    .map(|f| f.width())
                    .unwrap_or(32);
                let call = if crate::ir::types::field_is_register(field) {
                    format!("out.push_str(&render::register({a}));")
                } else if field == "cond" {
                    format!("out.push_str(render::condition({a}));")
                } else if field == "reglist" {
                    format!("out.push_str(&render::register_list({a}));")
                } else if field.starts_with("signed_") {
                    format!("out.push_str(&render::signed_immediate({a}, {width}));")
                } else {
                    format!("out.push_str(&render::unsigned_immediate({a}));")
                };
                let _ = writeln!(body, "{pad}{call}");
            }
            SynElem::Hole { family } => {
                let _ = writeln!(body, "{pad}out.push_str(\"<{family}>\");");
            }
            SynElem::Optional { elements, control } => {
                let a = format!("p.{}", rust_field(control));
                let test = if control == "cond" {
                    format!("{a} != 14")
                } else {
                    format!("{a} != 0")
                };
                let _ = writeln!(body, "{pad}if {test} {{");
                emit_printer_elems(elements, flat, body, indent + 1);
                let _ = writeln!(body, "{pad}}}");
            }
        }
    }
}

fn emit_printer(flats: &[FlatInstruction], layouts: &Layouts) -> Result<String, EmitError> {
    let mut out = String::from(HEADER);
    out.push_str("//! Assembly printers, one per base flat instruction, following the\n");
    out.push_str("//! shared rendering conventions.\n\n");
    out.push_str("use issforge_core::sim::render;\n\n");
    out.push_str("use crate::params::*;\n\n");

    for (i, flat) in flats.iter().enumerate() {
        if flat.name != flat.base {
            continue; // variants print through their base
        }
        let layout = &layouts.layouts[layouts.of_flat[i]];
        let mut body = String::new();
        emit_printer_elems(&flat.syntax.elements, flat, &mut body, 1);
        let p_ident = if layout.fields.is_empty() { "_p" } else { "p" };
        let _ = writeln!(
            out,
            "pub fn {}({p_ident}: &{}) -> String {{",
            snake(&flat.name),
            layout.name
        );
        if body.is_empty() {
            let _ = writeln!(out, "    String::from({:?})", flat.syntax.mnemonic);
            out.push_str("}\n\n");
        } else {
            let _ = writeln!(out, "    let mut out = String::from({:?});", flat.syntax.mnemonic);
            out.push_str(&body);
            out.push_str("    out\n}\n\n");
        }
    }
    Ok(out)
}

// ---- lib emission -----------------------------------------------------------------

fn emit_lib(
    flats: &[FlatInstruction],
    layouts: &Layouts,
    corpus: &str,
) -> Result<String, EmitError> {
    let mut out = String::from(HEADER);
    let _ = writeln!(
        out,
        "//! Fast back-end for the `{corpus}` corpus: decoded-instruction"
    );
    out.push_str("//! model, two-phase decoder, compiled semantics, may-branch\n");
    out.push_str("//! evaluator, and assembly printers, all generated from the\n");
    out.push_str("//! transformed instruction descriptions.\n\n");
    out.push_str("pub mod decoder;\npub mod exec;\npub mod params;\npub mod printer;\n\n");
    out.push_str("use issforge_core::ir::eval;\n");
    out.push_str("use issforge_core::sim::{CpuState, DecodeResult, Engine, Fault, Outcome};\n\n");
    out.push_str("pub use decoder::decode;\n\n");

    let mut base_names: Vec<&str> = Vec::new();
    for f in flats {
        if !base_names.contains(&f.base.as_str()) {
            base_names.push(&f.base);
        }
    }
    out.push_str("/// Base flat-instruction names (profile slots).\n");
    out.push_str("pub const BASE_NAMES: &[&str] = &[\n");
    for n in &base_names {
        let _ = writeln!(out, "    {n:?},");
    }
    out.push_str("];\n\n");

    out.push_str("/// A decoded instruction: the variant identifies the semantics\n");
    out.push_str("/// routine, the payload carries the decoded parameter record.\n");
    out.push_str("#[derive(Debug, Clone, Copy, PartialEq, Eq)]\n");
    out.push_str("pub enum Op {\n");
    for (i, f) in flats.iter().enumerate() {
        let _ = writeln!(
            out,
            "    {}(params::{}),",
            camel(&f.name),
            layouts.layouts[layouts.of_flat[i]].name
        );
    }
    out.push_str("}\n\n");

    out.push_str("impl Op {\n");
    out.push_str("    pub fn execute(&self, cpu: &mut CpuState) -> Result<Outcome, Fault> {\n");
    out.push_str("        match self {\n");
    for f in flats {
        let _ = writeln!(
            out,
            "            Op::{}(p) => exec::{}(p, cpu),",
            camel(&f.name),
            snake(&f.name)
        );
    }
    out.push_str("        }\n    }\n\n");

    out.push_str("    /// Evaluated may-branch condition over the decoded parameters.\n");
    out.push_str("    pub fn is_terminator(&self) -> bool {\n");
    out.push_str("        match self {\n");
    for (i, f) in flats.iter().enumerate() {
        let cond = f.may_branch.as_ref().ok_or_else(|| EmitError::InUnit {
            unit: f.name.clone(),
            err: "may-branch condition missing".to_string(),
        })?;
        let layout = &layouts.layouts[layouts.of_flat[i]];
        let mut bindings: BTreeMap<String, Binding> = BTreeMap::new();
        for lf in &layout.fields {
            bindings.insert(lf.param.clone(), Binding::Param(format!("p.{}", lf.rust)));
        }
        let mut cx = ExprCx {
            bindings: &bindings,
            uses: expr::Uses::default(),
        };
        let b = cx.boolean(cond).map_err(|e| EmitError::InUnit {
            unit: f.name.clone(),
            err: e.to_string(),
        })?;
        if cond.any(&|e| matches!(e, Expr::Var(_))) {
            let _ = writeln!(out, "            Op::{}(p) => {b},", camel(&f.name));
        } else {
            let _ = writeln!(out, "            Op::{}(..) => {b},", camel(&f.name));
        }
    }
    out.push_str("        }\n    }\n\n");

    out.push_str("    pub fn base_id(&self) -> usize {\n");
    out.push_str("        match self {\n");
    for f in flats {
        let id = base_names.iter().position(|b| *b == f.base).unwrap();
        let _ = writeln!(out, "            Op::{}(..) => {id},", camel(&f.name));
    }
    out.push_str("        }\n    }\n\n");

    out.push_str("    pub fn name(&self) -> &'static str {\n");
    out.push_str("        BASE_NAMES[self.base_id()]\n    }\n\n");

    out.push_str("    pub fn disasm(&self) -> String {\n");
    out.push_str("        match self {\n");
    for f in flats {
        let _ = writeln!(
            out,
            "            Op::{}(p) => printer::{}(p),",
            camel(&f.name),
            snake(&f.base)
        );
    }
    out.push_str("        }\n    }\n}\n\n");

    out.push_str("/// The engine the shared run loop drives.\n");
    out.push_str("#[derive(Debug, Default, Clone, Copy)]\n");
    out.push_str("pub struct UarmIss;\n\n");
    out.push_str("impl Engine for UarmIss {\n");
    out.push_str("    type Instr = Op;\n\n");
    out.push_str("    fn decode(&self, word: u32) -> DecodeResult<Op> {\n");
    out.push_str("        decoder::decode(word)\n    }\n\n");
    out.push_str(
        "    fn execute(&self, instr: &Op, cpu: &mut CpuState) -> Result<Outcome, Fault> {\n",
    );
    out.push_str("        instr.execute(cpu)\n    }\n\n");
    out.push_str("    fn is_terminator(&self, instr: &Op) -> bool {\n");
    out.push_str("        instr.is_terminator()\n    }\n\n");
    out.push_str("    fn profile_id(&self, instr: &Op) -> usize {\n");
    out.push_str("        instr.base_id()\n    }\n\n");
    out.push_str("    fn profile_names(&self) -> Vec<String> {\n");
    out.push_str("        BASE_NAMES.iter().map(|n| n.to_string()).collect()\n    }\n\n");
    out.push_str("    fn disasm(&self, instr: &Op) -> String {\n");
    out.push_str("        instr.disasm()\n    }\n}\n");
    Ok(out)
}

fn emit_cargo_toml(crate_name: &str, core_dep: &str) -> String {
    format!(
        "# Generated by `issforge gen-iss`. Do not edit; regenerate instead.\n\
         [package]\n\
         name = \"{crate_name}\"\n\
         version = \"0.1.0\"\n\
         edition = \"2021\"\n\
         description = \"Generated fast instruction-set back-end\"\n\
         license = \"Apache-2.0\"\n\n\
         [dependencies]\n\
         issforge-core = {{ path = \"{core_dep}\" }}\n"
    )
}

/// Generate the fast back-end crate for a transformed instruction set.
/// `flats` is the decoder set: specialized variants included, may-branch
/// analysis already run.
pub fn emit_iss(
    flats: &[FlatInstruction],
    corpus_name: &str,
    crate_name: &str,
    core_dep_path: &str,
) -> Result<SourceTree, EmitError> {
    let layouts = compute_layouts(flats)?;
    let files = vec![
        (
            "Cargo.toml".to_string(),
            emit_cargo_toml(crate_name, core_dep_path),
        ),
        ("src/lib.rs".to_string(), emit_lib(flats, &layouts, corpus_name)?),
        ("src/params.rs".to_string(), emit_params(&layouts)),
        ("src/decoder.rs".to_string(), emit_decoder(flats, &layouts)?),
        ("src/exec.rs".to_string(), emit_exec(flats, &layouts)?),
        ("src/printer.rs".to_string(), emit_printer(flats, &layouts)?),
    ];
    Ok(SourceTree { files })
}

/// Number of distinct parameter record types (diagnostics and tests).
pub fn distinct_layout_count(flats: &[FlatInstruction]) -> Result<usize, EmitError> {
    Ok(compute_layouts(flats)?.layouts.len())
}
