//! issforge: parse manual-style instruction-set descriptions, transform
//! them, and run the generated simulator.

use std::path::PathBuf;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand};

use issforge_core::bench;
use issforge_core::corpus;
use issforge_core::sim::{OracleEngine, RunConfig, Simulator, StopReason};
use issforge_core::testgen;
use issforge_core::toolchain::{Options, Toolchain};
use issforge_core::transforms;
use uarm_iss::UarmIss;

#[derive(Parser)]
#[command(
    name = "issforge",
    about = "Instruction-set toolchain: description files in, fast simulator out",
    version
)]
struct Cli {
    /// Corpus directory (falls back to $ISSFORGE_CORPUS, then the bundled
    /// corpus).
    #[arg(long, global = true)]
    corpus: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone, Default)]
struct PipelineFlags {
    /// Disable the specialization pass.
    #[arg(long)]
    no_specialize: bool,
    /// Minimum profile weight to specialize an instruction.
    #[arg(long)]
    weight_threshold: Option<u64>,
    /// Execution-count profile from a previous `sim --emit-profile` run.
    #[arg(long)]
    profile: Option<PathBuf>,
}

impl PipelineFlags {
    fn options(&self) -> Options {
        Options {
            no_specialize: self.no_specialize,
            profile: self.profile.clone(),
            weight_threshold: self.weight_threshold,
            keep_dumps: false,
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Validate the description files and dump the linked representation.
    Parse {
        /// Corpus directory (same as --corpus).
        directory: Option<PathBuf>,
        /// Write the dump here instead of stdout.
        #[arg(long)]
        dump: Option<PathBuf>,
    },
    /// Run the transform pipeline and report what it produced.
    Pipeline {
        #[command(flatten)]
        flags: PipelineFlags,
        /// Write per-pass pretty-printed code into this directory.
        #[arg(long)]
        dump_ir: Option<PathBuf>,
        /// Print every may-branch condition.
        #[arg(long)]
        dump_maybranch: bool,
    },
    /// Emit the fast back-end crate.
    GenIss {
        #[arg(long)]
        out: PathBuf,
        #[arg(long, default_value = "uarm-iss")]
        crate_name: String,
        /// Path dependency to the runtime crate, written into Cargo.toml.
        #[arg(long, default_value = "../core")]
        core_dep: String,
        #[command(flatten)]
        flags: PipelineFlags,
    },
    /// Generate the decoder test corpus (binary image + expected assembly).
    GenTests {
        #[arg(long)]
        out_dir: PathBuf,
        /// Maximum generated words per flat instruction.
        #[arg(long, default_value_t = testgen::DEFAULT_BUDGET)]
        budget: usize,
    },
    /// Decode and print every corpus word, diffing against the expected
    /// assembly. Nonzero exit on any mismatch.
    Roundtrip {
        /// Directory with corpus.uisa and corpus.expected.asm; generated
        /// in-memory when omitted.
        #[arg(long)]
        dir: Option<PathBuf>,
        #[arg(long, default_value_t = testgen::DEFAULT_BUDGET)]
        budget: usize,
        #[arg(long)]
        json: bool,
        #[command(flatten)]
        flags: PipelineFlags,
    },
    /// Run a program image.
    Sim {
        #[arg(long)]
        image: PathBuf,
        #[arg(long, default_value_t = u64::MAX)]
        max_insns: u64,
        /// Write the execution-count profile here.
        #[arg(long)]
        emit_profile: Option<PathBuf>,
        /// Print `pc: <asm>` for every executed instruction.
        #[arg(long)]
        trace: bool,
        /// Execution back-end (`fast` or `interp`).
        #[arg(long, default_value = "fast")]
        engine: String,
        /// Disable the basic-block cache.
        #[arg(long)]
        no_cache: bool,
        #[command(flatten)]
        flags: PipelineFlags,
    },
    /// Time the bundled benchmarks on every back-end and report the ratios.
    Bench {
        #[arg(long, default_value = "loop")]
        benchmark: String,
        #[arg(long, default_value_t = 3)]
        runs: usize,
        #[arg(long)]
        json: bool,
    },
    /// Disassemble a program image.
    Disasm {
        #[arg(long)]
        image: PathBuf,
    },
}

fn main() {
    let cli = Cli::parse();
    let code = match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            1
        }
    };
    std::process::exit(code);
}

fn load(corpus_arg: &Option<PathBuf>, options: &Options) -> Result<Toolchain> {
    let dir = corpus::resolve(corpus_arg.as_deref());
    let tc = Toolchain::load(&dir, options)
        .with_context(|| format!("loading corpus from {}", dir.display()))?;
    for w in &tc.warnings {
        eprintln!("warning: {w}");
    }
    Ok(tc)
}

fn is_bundled(corpus_arg: &Option<PathBuf>) -> bool {
    let dir = corpus::resolve(corpus_arg.as_deref());
    match (dir.canonicalize(), corpus::bundled_dir().canonicalize()) {
        (Ok(a), Ok(b)) => a == b,
        _ => false,
    }
}

fn run(cli: Cli) -> Result<i32> {
    match cli.command {
        Command::Parse { directory, dump } => {
            let dir = directory.unwrap_or_else(|| corpus::resolve(cli.corpus.as_deref()));
            let (_, desc, warnings) = issforge_core::isa::load_corpus(&dir)
                .with_context(|| format!("loading corpus from {}", dir.display()))?;
            for w in &warnings {
                eprintln!("warning: {w}");
            }
            let text = issforge_core::ir::dump::dump(&desc);
            match dump {
                Some(path) => std::fs::write(&path, text)
                    .with_context(|| format!("writing {}", path.display()))?,
                None => print!("{text}"),
            }
            println!(
                "parsed {} instructions, {} mode cases, {} patches",
                desc.instructions.len(),
                desc.modes.len(),
                desc.patches.len()
            );
            Ok(0)
        }
        Command::Pipeline {
            flags,
            dump_ir,
            dump_maybranch,
        } => {
            let mut options = flags.options();
            options.keep_dumps = dump_ir.is_some();
            let tc = load(&cli.corpus, &options)?;
            if let Some(dir) = dump_ir {
                for stage in &tc.pipeline.dumps {
                    let stage_dir = dir.join(&stage.stage);
                    std::fs::create_dir_all(&stage_dir)?;
                    for (name, text) in &stage.units {
                        std::fs::write(stage_dir.join(format!("{name}.pc")), text)?;
                    }
                }
                println!("IR dumps written to {}", dir.display());
            }
            if dump_maybranch {
                for f in &tc.pipeline.decoder {
                    let cond = f.may_branch.as_ref().expect("analysis ran");
                    println!(
                        "{:32} {}",
                        f.name,
                        issforge_core::ir::printer::print_expr(cond)
                    );
                }
            }
            println!(
                "pipeline: {} flat instructions, {} decoder candidates",
                tc.pipeline.base.len(),
                tc.pipeline.decoder.len()
            );
            Ok(0)
        }
        Command::GenIss {
            out,
            crate_name,
            core_dep,
            flags,
        } => {
            let tc = load(&cli.corpus, &flags.options())?;
            let tree = issforge_core::emit::emit_iss(
                &tc.pipeline.decoder,
                "uarm",
                &crate_name,
                &core_dep,
            )?;
            tree.write_to(&out)
                .with_context(|| format!("writing {}", out.display()))?;
            println!(
                "generated {} files ({} routines) in {}",
                tree.files.len(),
                tc.pipeline.decoder.len(),
                out.display()
            );
            Ok(0)
        }
        Command::GenTests { out_dir, budget } => {
            let tc = load(&cli.corpus, &Options::default())?;
            let corpus = testgen::generate(&tc.pipeline.base, budget)?;
            corpus.write_to(&out_dir)?;
            println!(
                "wrote {} words to {}",
                corpus.words.len(),
                out_dir.display()
            );
            Ok(0)
        }
        Command::Roundtrip {
            dir,
            budget,
            json,
            flags,
        } => {
            let tc = load(&cli.corpus, &flags.options())?;
            let (words, expected) = match dir {
                Some(d) => testgen::load_corpus_files(&d)?,
                None => {
                    let c = testgen::generate(&tc.pipeline.base, budget)?;
                    (c.words, c.expected)
                }
            };
            let mismatches = testgen::roundtrip(&tc.spec, &words, &expected);
            if json {
                let report = serde_json::json!({
                    "words": words.len(),
                    "mismatches": mismatches.len(),
                    "first_mismatches": mismatches.iter().take(10).map(|m| {
                        serde_json::json!({
                            "index": m.index,
                            "word": format!("{:#010x}", m.word),
                            "got": m.got,
                            "want": m.want,
                        })
                    }).collect::<Vec<_>>(),
                });
                println!("{}", serde_json::to_string_pretty(&report)?);
            } else {
                println!("{} words, {} mismatches", words.len(), mismatches.len());
                for m in mismatches.iter().take(10) {
                    println!(
                        "  [{}] {:#010x}: got `{}`, want `{}`",
                        m.index, m.word, m.got, m.want
                    );
                }
            }
            Ok(if mismatches.is_empty() { 0 } else { 1 })
        }
        Command::Sim {
            image,
            max_insns,
            emit_profile,
            trace,
            engine,
            no_cache,
            flags,
        } => {
            let bytes =
                std::fs::read(&image).with_context(|| format!("reading {}", image.display()))?;
            let img = testgen::Image::from_bytes(&bytes)?;
            let mut cpu = issforge_core::sim::CpuState::new();
            cpu.map_region(bench::MEM_BASE, bench::MEM_SIZE);
            img.load(&mut cpu);
            let cfg = RunConfig {
                max_insns,
                trace,
                use_cache: !no_cache,
            };
            let out = match engine.as_str() {
                "fast" => {
                    if !is_bundled(&cli.corpus) {
                        bail!("the fast engine is generated for the bundled corpus; use --engine interp");
                    }
                    Simulator::new(&UarmIss, cpu, cfg).run()
                }
                "interp" => {
                    let tc = load(&cli.corpus, &flags.options())?;
                    let oracle = tc.oracle();
                    Simulator::new(&oracle, cpu, cfg).run()
                }
                other => bail!("unknown engine `{other}` (use `fast` or `interp`)"),
            };
            println!(
                "stopped: {} after {} instructions ({} decodes)",
                out.stop, out.executed, out.decodes
            );
            if let Some(path) = emit_profile {
                std::fs::write(&path, transforms::pipeline::render_profile(&out.profile))
                    .with_context(|| format!("writing {}", path.display()))?;
                println!("profile written to {}", path.display());
            }
            Ok(match out.stop {
                StopReason::Halted | StopReason::InsnLimit => 0,
                _ => 1,
            })
        }
        Command::Bench {
            benchmark,
            runs,
            json,
        } => {
            if !is_bundled(&cli.corpus) {
                bail!("bench runs on the bundled corpus");
            }
            let report = run_bench(&benchmark, runs)?;
            if json {
                println!("{}", serde_json::to_string_pretty(&report)?);
            } else {
                println!("benchmark: {benchmark}");
                for e in report["engines"].as_array().unwrap() {
                    println!(
                        "  {:24} {:>12.0} insns/s  ({} insns in {:.3}s)",
                        e["engine"].as_str().unwrap(),
                        e["ips"].as_f64().unwrap(),
                        e["instructions"].as_u64().unwrap(),
                        e["seconds"].as_f64().unwrap(),
                    );
                }
                println!(
                    "  speedup fast vs interpreter: {:.2}x",
                    report["speedup_fast_vs_interp"].as_f64().unwrap()
                );
                println!(
                    "  speedup from specialization: {:.2}x",
                    report["speedup_specialization"].as_f64().unwrap()
                );
            }
            Ok(0)
        }
        Command::Disasm { image } => {
            let tc = load(&cli.corpus, &Options::default())?;
            let bytes =
                std::fs::read(&image).with_context(|| format!("reading {}", image.display()))?;
            let img = testgen::Image::from_bytes(&bytes)?;
            for (i, word) in img.words.iter().enumerate() {
                let addr = img.entry + 4 * i as u32;
                let text = match tc.spec.decode(*word) {
                    issforge_core::sim::DecodeResult::Instr(d) => {
                        let flat = tc.spec.flat_of(&d);
                        issforge_core::sim::print_asm(flat, &|n| tc.spec.value_of(&d, n))
                    }
                    issforge_core::sim::DecodeResult::Undefined => "<undefined>".into(),
                    issforge_core::sim::DecodeResult::Unpredictable => "<unpredictable>".into(),
                };
                println!("{addr:08x}: {word:08x}  {text}");
            }
            Ok(0)
        }
    }
}

/// Measure one benchmark on every back-end; the JSON shape is stable for CI
/// assertions.
fn run_bench(benchmark: &str, runs: usize) -> Result<serde_json::Value> {
    let tc = Toolchain::bundled()?;
    let tc_nospec = Toolchain::load(
        corpus::bundled_dir(),
        &Options {
            no_specialize: true,
            ..Options::default()
        },
    )?;
    let Some(program) = bench::benchmark(&tc.pipeline.base, benchmark) else {
        bail!(
            "unknown benchmark `{benchmark}` (available: {})",
            bench::BENCHMARKS.join(", ")
        );
    };

    let oracle = OracleEngine::new(tc.spec.clone());
    let oracle_nospec = OracleEngine::new(tc_nospec.spec.clone());
    let fast = UarmIss;

    let interp = bench::measure("interp", &oracle, &program, false, runs);
    let interp_cached_nospec =
        bench::measure("interp-cached-nospec", &oracle_nospec, &program, true, runs);
    let interp_cached = bench::measure("interp-cached", &oracle, &program, true, runs);
    let fast_cached = bench::measure("fast", &fast, &program, true, runs);

    let engines = [&interp, &interp_cached_nospec, &interp_cached, &fast_cached];
    Ok(serde_json::json!({
        "benchmark": benchmark,
        "engines": engines.iter().map(|m| serde_json::json!({
            "engine": m.engine,
            "instructions": m.instructions,
            "seconds": m.seconds,
            "ips": m.ips,
        })).collect::<Vec<_>>(),
        "speedup_fast_vs_interp": fast_cached.ips / interp.ips,
        "speedup_specialization": interp_cached.ips / interp_cached_nospec.ips,
    }))
}
