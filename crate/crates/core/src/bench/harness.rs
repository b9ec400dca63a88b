//! Timing harness for the benchmark suite: run a program to completion on a
//! back-end several times and report the median instructions-per-second.

use std::time::Instant;

use super::programs::Program;
use crate::sim::{Engine, RunConfig, Simulator, StopReason};

#[derive(Debug, Clone)]
pub struct Measurement {
    pub engine: String,
    pub instructions: u64,
    pub seconds: f64,
    pub ips: f64,
}

/// Execute once; the program must halt cleanly within the limit.
pub fn run_once<E: Engine>(
    engine: &E,
    program: &Program,
    use_cache: bool,
    max_insns: u64,
) -> (u64, f64) {
    let cpu = program.boot();
    let mut sim = Simulator::new(
        engine,
        cpu,
        RunConfig {
            max_insns,
            trace: false,
            use_cache,
        },
    );
    let start = Instant::now();
    let out = sim.run();
    let secs = start.elapsed().as_secs_f64();
    assert_eq!(
        out.stop,
        StopReason::Halted,
        "benchmark `{}` did not halt: {}",
        program.name,
        out.stop
    );
    (out.executed, secs)
}

/// Median-of-N timing.
pub fn measure<E: Engine>(
    label: &str,
    engine: &E,
    program: &Program,
    use_cache: bool,
    runs: usize,
) -> Measurement {
    let mut times = Vec::with_capacity(runs);
    let mut instructions = 0;
    for _ in 0..runs.max(1) {
        let (n, secs) = run_once(engine, program, use_cache, u64::MAX);
        instructions = n;
        times.push(secs);
    }
    times.sort_by(|a, b| a.partial_cmp(b).unwrap());
    let seconds = times[times.len() / 2];
    Measurement {
        engine: label.to_string(),
        instructions,
        seconds,
        ips: instructions as f64 / seconds.max(1e-9),
    }
}
