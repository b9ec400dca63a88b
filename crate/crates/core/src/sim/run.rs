//! The fetch-decode-execute loop, shared by every back-end through the
//! [`Engine`] trait. With the block cache enabled, a miss decodes forward
//! from the current pc until the first terminator and stores the block; a
//! hit executes the stored decoded instructions without touching the
//! decoder.

use std::collections::BTreeMap;
use std::rc::Rc;

use super::cache::{Block, BlockCache, BLOCK_PAGE, MAX_BLOCK_INSNS};
use super::decoder::DecodeResult;
use super::interp::Outcome;
use super::state::{CpuState, Fault};

/// One instruction-set execution back-end: a decoder plus semantics.
pub trait Engine {
    type Instr: Clone;

    fn decode(&self, word: u32) -> DecodeResult<Self::Instr>;
    fn execute(&self, instr: &Self::Instr, cpu: &mut CpuState) -> Result<Outcome, Fault>;
    /// Evaluated may-branch condition: does this instruction end a block?
    fn is_terminator(&self, instr: &Self::Instr) -> bool;
    /// Profile slot (indexed by base flat instruction).
    fn profile_id(&self, instr: &Self::Instr) -> usize;
    /// Profile slot names, parallel to `profile_id`.
    fn profile_names(&self) -> Vec<String>;
    fn disasm(&self, instr: &Self::Instr) -> String;
}

#[derive(Debug, Clone, Copy)]
pub struct RunConfig {
    pub max_insns: u64,
    pub trace: bool,
    pub use_cache: bool,
}

impl Default for RunConfig {
    fn default() -> Self {
        RunConfig {
            max_insns: u64::MAX,
            trace: false,
            use_cache: true,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum StopReason {
    Halted,
    InsnLimit,
    UndefinedWord { pc: u32, word: u32 },
    UnpredictableWord { pc: u32, word: u32 },
    UnmappedFetch { pc: u32 },
    UnalignedPc { pc: u32 },
    ExecFault { pc: u32, fault: Fault },
}

impl std::fmt::Display for StopReason {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            StopReason::Halted => write!(f, "halted"),
            StopReason::InsnLimit => write!(f, "instruction limit reached"),
            StopReason::UndefinedWord { pc, word } => {
                write!(f, "undefined word {word:#010x} at {pc:#010x}")
            }
            StopReason::UnpredictableWord { pc, word } => {
                write!(f, "unpredictable word {word:#010x} at {pc:#010x}")
            }
            StopReason::UnmappedFetch { pc } => write!(f, "fetch from unmapped {pc:#010x}"),
            StopReason::UnalignedPc { pc } => write!(f, "unaligned pc {pc:#010x}"),
            StopReason::ExecFault { pc, fault } => write!(f, "fault at {pc:#010x}: {fault}"),
        }
    }
}

#[derive(Debug, Clone)]
pub struct RunOutcome {
    pub stop: StopReason,
    pub executed: u64,
    /// Words decoded during this run (block rebuilds included).
    pub decodes: u64,
    /// Execution counts by base flat-instruction name.
    pub profile: BTreeMap<String, u64>,
}

pub struct Simulator<'e, E: Engine> {
    pub engine: &'e E,
    pub cpu: CpuState,
    pub cfg: RunConfig,
    cache: BlockCache<E::Instr>,
    counts: Vec<u64>,
    decodes: u64,
}

enum Step {
    Continue,
    Branched,
    Stop(StopReason),
}

impl<'e, E: Engine> Simulator<'e, E> {
    pub fn new(engine: &'e E, cpu: CpuState, cfg: RunConfig) -> Self {
        let slots = engine.profile_names().len();
        Simulator {
            engine,
            cpu,
            cfg,
            cache: BlockCache::new(),
            counts: vec![0; slots],
            decodes: 0,
        }
    }

    pub fn cache_stats(&self) -> (u64, u64, u64) {
        (self.cache.hits, self.cache.misses, self.cache.invalidations)
    }

    fn step_one(&mut self, instr: &E::Instr, executed: &mut u64) -> Step {
        if self.cfg.trace {
            println!("{:08x}: {}", self.cpu.pc, self.engine.disasm(instr));
        }
        let slot = self.engine.profile_id(instr);
        if let Some(c) = self.counts.get_mut(slot) {
            *c += 1;
        }
        self.cpu.pc_written = false;
        let at_pc = self.cpu.pc;
        match self.engine.execute(instr, &mut self.cpu) {
            Ok(_) => {}
            Err(fault) => {
                return Step::Stop(StopReason::ExecFault { pc: at_pc, fault });
            }
        }
        *executed += 1;
        if self.cpu.pc_written {
            Step::Branched
        } else {
            self.cpu.pc = self.cpu.pc.wrapping_add(4);
            Step::Continue
        }
    }

    /// Decode forward from `pc` to build one block.
    fn build_block(&mut self, pc: u32) -> Result<Block<E::Instr>, StopReason> {
        let mut instrs = Vec::new();
        let mut at = pc;
        loop {
            if instrs.len() >= MAX_BLOCK_INSNS {
                break;
            }
            let Some(word) = self.cpu.fetch_word(at) else {
                break;
            };
            match self.engine.decode(word) {
                DecodeResult::Instr(i) => {
                    self.decodes += 1;
                    let term = self.engine.is_terminator(&i);
                    instrs.push(i);
                    at = at.wrapping_add(4);
                    if term || at % BLOCK_PAGE == 0 {
                        break;
                    }
                }
                // Leave the bad word for the direct fetch path, which
                // reports it precisely if execution actually reaches it.
                DecodeResult::Undefined | DecodeResult::Unpredictable => break,
            }
        }
        if instrs.is_empty() {
            return Err(self.fetch_failure(pc));
        }
        Ok(Block {
            start: pc,
            end: at,
            instrs: Rc::new(instrs),
            epoch: self.cpu.write_epoch(),
        })
    }

    fn fetch_failure(&mut self, pc: u32) -> StopReason {
        match self.cpu.fetch_word(pc) {
            None => StopReason::UnmappedFetch { pc },
            Some(word) => match self.engine.decode(word) {
                DecodeResult::Undefined => StopReason::UndefinedWord { pc, word },
                DecodeResult::Unpredictable => StopReason::UnpredictableWord { pc, word },
                DecodeResult::Instr(_) => unreachable!("fetch_failure on a decodable word"),
            },
        }
    }

    pub fn run(&mut self) -> RunOutcome {
        let decodes_before = self.decodes;
        let mut executed: u64 = 0;
        let stop = 'outer: loop {
            if self.cpu.halted {
                break StopReason::Halted;
            }
            if executed >= self.cfg.max_insns {
                break StopReason::InsnLimit;
            }
            let pc = self.cpu.pc;
            if pc % 4 != 0 {
                break StopReason::UnalignedPc { pc };
            }
            if !self.cfg.use_cache {
                let Some(word) = self.cpu.fetch_word(pc) else {
                    break StopReason::UnmappedFetch { pc };
                };
                match self.engine.decode(word) {
                    DecodeResult::Instr(i) => {
                        self.decodes += 1;
                        match self.step_one(&i, &mut executed) {
                            Step::Continue | Step::Branched => continue,
                            Step::Stop(r) => break r,
                        }
                    }
                    DecodeResult::Undefined => break StopReason::UndefinedWord { pc, word },
                    DecodeResult::Unpredictable => {
                        break StopReason::UnpredictableWord { pc, word }
                    }
                }
            }
            // Cached path. The cache and the cpu are separate fields, so
            // the staleness probe can read memory epochs while the cache is
            // borrowed.
            let (cache, cpu) = (&mut self.cache, &self.cpu);
            let cached = cache
                .lookup(pc, |s, e| cpu.range_write_epoch(s, e))
                .map(|b| Rc::clone(&b.instrs));
            let instrs = match cached {
                Some(i) => i,
                None => {
                    let block = match self.build_block(pc) {
                        Ok(b) => b,
                        Err(stop) => break stop,
                    };
                    Rc::clone(&self.cache.insert(block).instrs)
                }
            };
            for instr in instrs.iter() {
                if self.cpu.halted {
                    break 'outer StopReason::Halted;
                }
                if executed >= self.cfg.max_insns {
                    break 'outer StopReason::InsnLimit;
                }
                match self.step_one(instr, &mut executed) {
                    Step::Continue => {}
                    Step::Branched => continue 'outer,
                    Step::Stop(r) => break 'outer r,
                }
            }
        };
        let names = self.engine.profile_names();
        let profile = names
            .into_iter()
            .zip(self.counts.iter())
            .filter(|(_, c)| **c > 0)
            .map(|(n, c)| (n, *c))
            .collect();
        RunOutcome {
            stop,
            executed,
            decodes: self.decodes - decodes_before,
            profile,
        }
    }
}
