//! Processor and memory state shared by every execution back-end.
//!
//! μARM state: 16 general registers with R13/R14 banked per processor mode,
//! R15 as the program counter, N/Z/C/V flags, one SPSR per mode, and a
//! sparse byte-addressable memory restricted to explicitly mapped ranges.
//! Reading R15 as an operand yields pc + 8 (the pipeline offset convention);
//! an access outside the mapped ranges raises a data abort that unwinds the
//! current instruction.

use std::collections::BTreeMap;

pub const PAGE_SIZE: u32 = 4096;

/// Exception vector the data-abort entry jumps to.
pub const DATA_ABORT_VECTOR: u32 = 0x10;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Mode {
    Usr = 0,
    Fiq = 1,
    Irq = 2,
    Svc = 3,
    Abt = 4,
    Und = 5,
}

impl Mode {
    pub const ALL: [Mode; 6] = [Mode::Usr, Mode::Fiq, Mode::Irq, Mode::Svc, Mode::Abt, Mode::Und];

    pub fn from_bits(v: u32) -> Option<Mode> {
        Mode::ALL.get(v as usize).copied()
    }

    pub fn bits(self) -> u32 {
        self as u32
    }
}

/// Fault raised while executing one instruction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Fault {
    /// Memory access outside the mapped ranges; unwinds the instruction and
    /// enters the data-abort vector.
    DataAbort { addr: u32 },
    /// An `unpredictable` statement was executed.
    UnpredictableExecuted,
    /// A CPSR write carried mode bits that name no mode.
    InvalidCpsrMode { value: u32 },
    /// Internal contract violation (unbound name, bad register index);
    /// indicates a toolchain bug, never an architectural condition.
    Internal(String),
}

impl std::fmt::Display for Fault {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Fault::DataAbort { addr } => write!(f, "data abort at {addr:#010x}"),
            Fault::UnpredictableExecuted => write!(f, "unpredictable executed"),
            Fault::InvalidCpsrMode { value } => {
                write!(f, "CPSR write with invalid mode bits: {value:#010x}")
            }
            Fault::Internal(msg) => write!(f, "internal: {msg}"),
        }
    }
}

/// Resolve a runtime value to a register bank; invalid banks are an
/// internal fault, never an architectural condition.
pub fn mode_from_value(v: u32) -> Result<Mode, Fault> {
    Mode::from_bits(v).ok_or_else(|| Fault::Internal(format!("bad register bank {v}")))
}

/// Record of the last taken exception (the pending-exception flag).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct AbortRecord {
    pub addr: u32,
    pub at_pc: u32,
}

/// One memory access, for differential trace comparison.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct MemEvent {
    pub write: bool,
    pub addr: u32,
    pub size: u8,
    pub value: u32,
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
struct Memory {
    pages: BTreeMap<u32, Box<[u8; PAGE_SIZE as usize]>>,
    /// Mapped half-open ranges, kept sorted and non-overlapping.
    ranges: Vec<(u32, u32)>,
}

impl Memory {
    fn mapped(&self, addr: u32, size: u32) -> bool {
        let end = match addr.checked_add(size) {
            Some(e) => e,
            None => return false,
        };
        // Every byte must fall in some range; ranges never overlap, so a
        // single range has to cover the whole access unless two abut.
        let mut at = addr;
        while at < end {
            match self.ranges.iter().find(|(s, e)| *s <= at && at < *e) {
                Some((_, e)) => at = *e,
                None => return false,
            }
            if at >= end {
                return true;
            }
        }
        at >= end
    }

    fn page_mut(&mut self, addr: u32) -> &mut [u8; PAGE_SIZE as usize] {
        self.pages
            .entry(addr / PAGE_SIZE)
            .or_insert_with(|| Box::new([0u8; PAGE_SIZE as usize]))
    }

    fn byte(&self, addr: u32) -> u8 {
        match self.pages.get(&(addr / PAGE_SIZE)) {
            Some(p) => p[(addr % PAGE_SIZE) as usize],
            None => 0,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CpuState {
    /// R0..R12 (shared across all modes).
    regs: [u32; 13],
    /// R13 and R14, banked per mode.
    r13: [u32; 6],
    r14: [u32; 6],
    pub pc: u32,
    pub n: bool,
    pub z: bool,
    pub c: bool,
    pub v: bool,
    pub mode: Mode,
    spsr: [u32; 6],
    mem: Memory,
    pub halted: bool,
    /// Set by any write to R15 during the current instruction; the run loop
    /// clears it before each execute and skips the sequential pc increment
    /// when it is set afterwards.
    pub pc_written: bool,
    pub last_abort: Option<AbortRecord>,
    /// Global write counter and per-page last-write marks, used by the
    /// translation cache to invalidate stale blocks.
    write_epoch: u64,
    page_epochs: BTreeMap<u32, u64>,
    /// When present, every data access is logged (tests only).
    pub mem_trace: Option<Vec<MemEvent>>,
}

impl Default for CpuState {
    fn default() -> Self {
        CpuState::new()
    }
}

impl CpuState {
    pub fn new() -> CpuState {
        CpuState {
            regs: [0; 13],
            r13: [0; 6],
            r14: [0; 6],
            pc: 0,
            n: false,
            z: false,
            c: false,
            v: false,
            mode: Mode::Usr,
            spsr: [0; 6],
            mem: Memory::default(),
            halted: false,
            pc_written: false,
            last_abort: None,
            write_epoch: 0,
            page_epochs: BTreeMap::new(),
            mem_trace: None,
        }
    }

    // ---- registers -------------------------------------------------------

    /// Operand read: R15 yields pc + 8.
    pub fn read_reg(&self, index: u32) -> Result<u32, Fault> {
        self.read_reg_mode(index, self.mode)
    }

    pub fn read_reg_mode(&self, index: u32, mode: Mode) -> Result<u32, Fault> {
        match index {
            0..=12 => Ok(self.regs[index as usize]),
            13 => Ok(self.r13[mode as usize]),
            14 => Ok(self.r14[mode as usize]),
            15 => Ok(self.pc.wrapping_add(8)),
            _ => Err(Fault::Internal(format!("register index {index} out of range"))),
        }
    }

    pub fn write_reg(&mut self, index: u32, value: u32) -> Result<(), Fault> {
        self.write_reg_mode(index, self.mode, value)
    }

    pub fn write_reg_mode(&mut self, index: u32, mode: Mode, value: u32) -> Result<(), Fault> {
        match index {
            0..=12 => self.regs[index as usize] = value,
            13 => self.r13[mode as usize] = value,
            14 => self.r14[mode as usize] = value,
            15 => {
                // The PC is not banked.
                self.pc = value;
                self.pc_written = true;
            }
            _ => {
                return Err(Fault::Internal(format!(
                    "register index {index} out of range"
                )))
            }
        }
        Ok(())
    }

    // ---- status register ---------------------------------------------------

    pub fn flag(&self, f: crate::ir::Flag) -> bool {
        match f {
            crate::ir::Flag::N => self.n,
            crate::ir::Flag::Z => self.z,
            crate::ir::Flag::C => self.c,
            crate::ir::Flag::V => self.v,
        }
    }

    pub fn set_flag(&mut self, f: crate::ir::Flag, value: bool) {
        match f {
            crate::ir::Flag::N => self.n = value,
            crate::ir::Flag::Z => self.z = value,
            crate::ir::Flag::C => self.c = value,
            crate::ir::Flag::V => self.v = value,
        }
    }

    /// CPSR layout: N/Z/C/V in bits 31..28, mode in bits 3..0.
    pub fn cpsr(&self) -> u32 {
        ((self.n as u32) << 31)
            | ((self.z as u32) << 30)
            | ((self.c as u32) << 29)
            | ((self.v as u32) << 28)
            | self.mode.bits()
    }

    pub fn set_cpsr(&mut self, value: u32) -> Result<(), Fault> {
        let mode =
            Mode::from_bits(value & 0xF).ok_or(Fault::InvalidCpsrMode { value })?;
        self.n = value & (1 << 31) != 0;
        self.z = value & (1 << 30) != 0;
        self.c = value & (1 << 29) != 0;
        self.v = value & (1 << 28) != 0;
        self.mode = mode;
        Ok(())
    }

    pub fn spsr(&self) -> u32 {
        self.spsr[self.mode as usize]
    }

    pub fn spsr_of(&self, mode: Mode) -> u32 {
        self.spsr[mode as usize]
    }

    pub fn set_spsr_of(&mut self, mode: Mode, value: u32) {
        self.spsr[mode as usize] = value;
    }

    /// Condition-code check over the current flags.
    pub fn condition_passed(&self, cond: u32) -> bool {
        match cond & 0xF {
            0 => self.z,
            1 => !self.z,
            2 => self.c,
            3 => !self.c,
            4 => self.n,
            5 => !self.n,
            6 => self.v,
            7 => !self.v,
            8 => self.c && !self.z,
            9 => !self.c || self.z,
            10 => self.n == self.v,
            11 => self.n != self.v,
            12 => !self.z && self.n == self.v,
            13 => self.z || self.n != self.v,
            _ => true, // 14 = Always; 15 is constrained away at decode
        }
    }

    // ---- memory -------------------------------------------------------------

    /// Open a zero-filled range for access. Ranges may be added in any order
    /// and may abut.
    pub fn map_region(&mut self, start: u32, len: u32) {
        if len == 0 {
            return;
        }
        let end = start.saturating_add(len);
        self.mem.ranges.push((start, end));
        self.mem.ranges.sort_unstable();
        // Coalesce overlaps so the per-byte check stays simple.
        let mut merged: Vec<(u32, u32)> = Vec::with_capacity(self.mem.ranges.len());
        for (s, e) in self.mem.ranges.drain(..) {
            match merged.last_mut() {
                Some((_, pe)) if s <= *pe => *pe = (*pe).max(e),
                _ => merged.push((s, e)),
            }
        }
        self.mem.ranges = merged;
    }

    pub fn mapped_ranges(&self) -> &[(u32, u32)] {
        &self.mem.ranges
    }

    pub fn read_mem(&mut self, addr: u32, size: u8) -> Result<u32, Fault> {
        if !self.mem.mapped(addr, size as u32) {
            return Err(Fault::DataAbort { addr });
        }
        let mut v: u32 = 0;
        for i in 0..size {
            v |= (self.mem.byte(addr.wrapping_add(i as u32)) as u32) << (8 * i);
        }
        if let Some(trace) = &mut self.mem_trace {
            trace.push(MemEvent {
                write: false,
                addr,
                size,
                value: v,
            });
        }
        Ok(v)
    }

    pub fn write_mem(&mut self, addr: u32, size: u8, value: u32) -> Result<(), Fault> {
        if !self.mem.mapped(addr, size as u32) {
            return Err(Fault::DataAbort { addr });
        }
        for i in 0..size {
            let a = addr.wrapping_add(i as u32);
            self.mem.page_mut(a)[(a % PAGE_SIZE) as usize] = (value >> (8 * i)) as u8;
        }
        self.write_epoch += 1;
        let first = addr / PAGE_SIZE;
        let last = addr.wrapping_add(size as u32 - 1) / PAGE_SIZE;
        for p in first..=last {
            self.page_epochs.insert(p, self.write_epoch);
        }
        if let Some(trace) = &mut self.mem_trace {
            trace.push(MemEvent {
                write: true,
                addr,
                size,
                value,
            });
        }
        Ok(())
    }

    /// Instruction fetch: like a data read but never traced and never a
    /// data abort (the run loop reports unmapped fetches itself).
    pub fn fetch_word(&self, addr: u32) -> Option<u32> {
        if !self.mem.mapped(addr, 4) {
            return None;
        }
        let mut v: u32 = 0;
        for i in 0..4 {
            v |= (self.mem.byte(addr.wrapping_add(i)) as u32) << (8 * i);
        }
        Some(v)
    }

    pub fn write_epoch(&self) -> u64 {
        self.write_epoch
    }

    /// Latest write epoch touching any page overlapping `[start, end)`.
    pub fn range_write_epoch(&self, start: u32, end: u32) -> u64 {
        if end <= start {
            return 0;
        }
        let first = start / PAGE_SIZE;
        let last = (end - 1) / PAGE_SIZE;
        self.page_epochs
            .range(first..=last)
            .map(|(_, e)| *e)
            .max()
            .unwrap_or(0)
    }

    // ---- exceptions ------------------------------------------------------------

    /// Data-abort entry: save CPSR to the abort-mode SPSR, the return
    /// address to the abort-mode R14, switch mode, and vector.
    pub fn enter_data_abort(&mut self, addr: u32) {
        let record = AbortRecord {
            addr,
            at_pc: self.pc,
        };
        self.spsr[Mode::Abt as usize] = self.cpsr();
        self.r14[Mode::Abt as usize] = self.pc.wrapping_add(8);
        self.mode = Mode::Abt;
        self.pc = DATA_ABORT_VECTOR;
        self.pc_written = true;
        self.last_abort = Some(record);
    }

    /// Full architectural snapshot for differential comparison: registers
    /// (all banks), flags, mode, SPSRs, pc, halt flag, and memory bytes.
    pub fn arch_eq(&self, other: &CpuState) -> bool {
        self.regs == other.regs
            && self.r13 == other.r13
            && self.r14 == other.r14
            && self.pc == other.pc
            && self.n == other.n
            && self.z == other.z
            && self.c == other.c
            && self.v == other.v
            && self.mode == other.mode
            && self.spsr == other.spsr
            && self.halted == other.halted
            && self.mem_bytes_eq(other)
    }

    fn mem_bytes_eq(&self, other: &CpuState) -> bool {
        if self.mem.ranges != other.mem.ranges {
            return false;
        }
        // Compare allocated pages against the other side (missing page means
        // all zero).
        let zero = [0u8; PAGE_SIZE as usize];
        let pages: std::collections::BTreeSet<u32> = self
            .mem
            .pages
            .keys()
            .chain(other.mem.pages.keys())
            .copied()
            .collect();
        for p in pages {
            let a = self.mem.pages.get(&p).map(|b| &**b).unwrap_or(&zero);
            let b = other.mem.pages.get(&p).map(|b| &**b).unwrap_or(&zero);
            if a != b {
                return false;
            }
        }
        true
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn r15_reads_pc_plus_8() {
        let mut cpu = CpuState::new();
        cpu.pc = 0x1000;
        assert_eq!(cpu.read_reg(15).unwrap(), 0x1008);
    }

    #[test]
    fn r13_is_banked_per_mode() {
        let mut cpu = CpuState::new();
        cpu.write_reg_mode(13, Mode::Svc, 0x5c).unwrap();
        cpu.write_reg_mode(13, Mode::Usr, 0x11).unwrap();
        cpu.mode = Mode::Svc;
        assert_eq!(cpu.read_reg(13).unwrap(), 0x5c);
        cpu.mode = Mode::Usr;
        assert_eq!(cpu.read_reg(13).unwrap(), 0x11);
        // R0..R12 are shared.
        cpu.write_reg_mode(5, Mode::Svc, 7).unwrap();
        assert_eq!(cpu.read_reg_mode(5, Mode::Fiq).unwrap(), 7);
    }

    #[test]
    fn unmapped_access_aborts() {
        let mut cpu = CpuState::new();
        cpu.map_region(0x1000, 0x100);
        assert!(cpu.read_mem(0x1000, 4).is_ok());
        assert_eq!(
            cpu.read_mem(0x2000, 4),
            Err(Fault::DataAbort { addr: 0x2000 })
        );
        // An access straddling the end of the range aborts too.
        assert!(cpu.read_mem(0x10FE, 4).is_err());
    }

    #[test]
    fn little_endian_word_access() {
        let mut cpu = CpuState::new();
        cpu.map_region(0, 0x100);
        cpu.write_mem(0x10, 4, 0xAABBCCDD).unwrap();
        assert_eq!(cpu.read_mem(0x10, 1).unwrap(), 0xDD);
        assert_eq!(cpu.read_mem(0x11, 1).unwrap(), 0xCC);
        assert_eq!(cpu.read_mem(0x10, 4).unwrap(), 0xAABBCCDD);
        // Unaligned reads are byte-assembled.
        assert_eq!(cpu.read_mem(0x11, 2).unwrap(), 0xBBCC);
    }

    #[test]
    fn abort_entry_saves_state_and_vectors() {
        let mut cpu = CpuState::new();
        cpu.mode = Mode::Svc;
        cpu.n = true;
        cpu.pc = 0x2000;
        cpu.enter_data_abort(0xDEAD_0000);
        assert_eq!(cpu.mode, Mode::Abt);
        assert_eq!(cpu.pc, DATA_ABORT_VECTOR);
        assert!(cpu.pc_written);
        let spsr = cpu.spsr_of(Mode::Abt);
        assert_eq!(spsr & 0xF, Mode::Svc.bits());
        assert_ne!(spsr & (1 << 31), 0);
        assert_eq!(cpu.read_reg_mode(14, Mode::Abt).unwrap(), 0x2008);
        assert_eq!(
            cpu.last_abort,
            Some(AbortRecord {
                addr: 0xDEAD_0000,
                at_pc: 0x2000
            })
        );
    }

    #[test]
    fn write_epochs_track_pages() {
        let mut cpu = CpuState::new();
        cpu.map_region(0, 0x3000);
        let before = cpu.write_epoch();
        cpu.write_mem(0x1004, 4, 1).unwrap();
        assert!(cpu.range_write_epoch(0x1000, 0x1100) > before);
        assert_eq!(cpu.range_write_epoch(0x2000, 0x2100), 0);
    }

    #[test]
    fn cpsr_roundtrip_and_invalid_mode() {
        let mut cpu = CpuState::new();
        cpu.n = true;
        cpu.c = true;
        cpu.mode = Mode::Irq;
        let v = cpu.cpsr();
        let mut other = CpuState::new();
        other.set_cpsr(v).unwrap();
        assert_eq!(other.mode, Mode::Irq);
        assert!(other.n && other.c && !other.z && !other.v);
        assert!(matches!(
            other.set_cpsr(0xF),
            Err(Fault::InvalidCpsrMode { .. })
        ));
    }
}
