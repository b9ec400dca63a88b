//! The bundled benchmark programs ("loop", "sorting", "crypto"), assembled
//! against the corpus encodings by a tiny label-resolving builder. The
//! builder encodes through the flattened tables, so a drift between the
//! programs and the corpus shows up as a decode failure, not silent skew.

use std::collections::BTreeMap;

use crate::ir::types::FlatInstruction;
use crate::testgen::encode_word;
use crate::testgen::Image;

/// Memory map used by the CLI and the benchmarks: one flat region from 0.
pub const MEM_BASE: u32 = 0;
pub const MEM_SIZE: u32 = 0x0004_0000;

pub const ENTRY: u32 = 0x1000;

/// Data-processing condition codes used by the programs.
pub const AL: u32 = 14;
pub const NE: u32 = 1;
pub const LE: u32 = 13;

#[derive(Debug, Clone)]
pub struct Program {
    pub name: String,
    pub entry: u32,
    pub words: Vec<u32>,
}

impl Program {
    pub fn image(&self) -> Image {
        Image {
            entry: self.entry,
            words: self.words.clone(),
        }
    }

    /// Fresh CPU with the standard memory map and this program loaded.
    pub fn boot(&self) -> crate::sim::CpuState {
        let mut cpu = crate::sim::CpuState::new();
        cpu.map_region(MEM_BASE, MEM_SIZE);
        self.image().load(&mut cpu);
        cpu
    }
}

pub struct Asm<'a> {
    flats: &'a [FlatInstruction],
    entry: u32,
    words: Vec<u32>,
    labels: BTreeMap<String, u32>,
    /// (word index, flat name, cond, label)
    branch_fixups: Vec<(usize, String, u32, String)>,
}

impl<'a> Asm<'a> {
    pub fn new(flats: &'a [FlatInstruction], entry: u32) -> Asm<'a> {
        Asm {
            flats,
            entry,
            words: Vec::new(),
            labels: BTreeMap::new(),
            branch_fixups: Vec::new(),
        }
    }

    fn flat(&self, name: &str) -> &FlatInstruction {
        self.flats
            .iter()
            .find(|f| f.name == name)
            .unwrap_or_else(|| panic!("no flat instruction `{name}` in the corpus"))
    }

    pub fn here(&self) -> u32 {
        self.entry + 4 * self.words.len() as u32
    }

    pub fn label(&mut self, name: &str) {
        self.labels.insert(name.to_string(), self.here());
    }

    pub fn inst(&mut self, flat: &str, params: &[(&str, u32)]) {
        let f = self.flat(flat);
        let record: Vec<(String, u32)> = params
            .iter()
            .map(|(n, v)| (n.to_string(), *v))
            .collect();
        self.words.push(encode_word(f, &record));
    }

    // -- data processing ----------------------------------------------------

    pub fn mov_imm(&mut self, d: u32, imm: u32) {
        self.inst("MOV_imm", &[("cond", AL), ("S", 0), ("d", d), ("immed_8", imm)]);
    }

    pub fn mov_lsl(&mut self, d: u32, m: u32, shift: u32) {
        self.inst(
            "MOV_lsl_imm",
            &[("cond", AL), ("S", 0), ("d", d), ("m", m), ("shift_imm", shift)],
        );
    }

    pub fn add_imm(&mut self, d: u32, n: u32, imm: u32) {
        self.inst(
            "ADD_imm",
            &[("cond", AL), ("S", 0), ("d", d), ("n", n), ("immed_8", imm)],
        );
    }

    pub fn subs_imm(&mut self, d: u32, n: u32, imm: u32) {
        self.inst(
            "SUB_imm",
            &[("cond", AL), ("S", 1), ("d", d), ("n", n), ("immed_8", imm)],
        );
    }

    pub fn and_imm(&mut self, d: u32, n: u32, imm: u32) {
        self.inst(
            "AND_imm",
            &[("cond", AL), ("S", 0), ("d", d), ("n", n), ("immed_8", imm)],
        );
    }

    pub fn eor_lsl(&mut self, d: u32, n: u32, m: u32, shift: u32) {
        self.inst(
            "EOR_lsl_imm",
            &[("cond", AL), ("S", 0), ("d", d), ("n", n), ("m", m), ("shift_imm", shift)],
        );
    }

    pub fn eor_lsr(&mut self, d: u32, n: u32, m: u32, shift: u32) {
        self.inst(
            "EOR_lsr_imm",
            &[("cond", AL), ("S", 0), ("d", d), ("n", n), ("m", m), ("shift_imm", shift)],
        );
    }

    /// Plain register operand: LSL-immediate with shift 0.
    pub fn adc_reg(&mut self, d: u32, n: u32, m: u32) {
        self.inst(
            "ADC_lsl_imm",
            &[("cond", AL), ("S", 0), ("d", d), ("n", n), ("m", m), ("shift_imm", 0)],
        );
    }

    pub fn qadd(&mut self, d: u32, n: u32, m: u32) {
        self.inst("QADD", &[("cond", AL), ("d", d), ("n", n), ("m", m)]);
    }

    pub fn mul(&mut self, d: u32, m: u32, s: u32) {
        self.inst(
            "MUL",
            &[("cond", AL), ("S", 0), ("d", d), ("m", m), ("s", s)],
        );
    }

    pub fn cmp_reg(&mut self, n: u32, m: u32) {
        self.inst(
            "CMP_lsl_imm",
            &[("cond", AL), ("n", n), ("m", m), ("shift_imm", 0)],
        );
    }

    // -- loads and stores ------------------------------------------------------

    pub fn ldr_off(&mut self, d: u32, n: u32, offset: u32) {
        self.inst(
            "LDR_off_imm",
            &[("cond", AL), ("d", d), ("n", n), ("offset_12", offset)],
        );
    }

    pub fn str_off(&mut self, d: u32, n: u32, offset: u32) {
        self.inst(
            "STR_off_imm",
            &[("cond", AL), ("d", d), ("n", n), ("offset_12", offset)],
        );
    }

    /// Store then advance the base (post-indexed write-back).
    pub fn str_post(&mut self, d: u32, n: u32, offset: u32) {
        self.inst(
            "STR_post_imm",
            &[("cond", AL), ("d", d), ("n", n), ("offset_12", offset)],
        );
    }

    pub fn ldm_ia(&mut self, n: u32, reglist: u32, writeback: bool) {
        self.inst(
            "LDM_ia",
            &[("cond", AL), ("W", writeback as u32), ("n", n), ("reglist", reglist)],
        );
    }

    pub fn stm_ia(&mut self, n: u32, reglist: u32, writeback: bool) {
        self.inst(
            "STM_ia",
            &[("cond", AL), ("W", writeback as u32), ("n", n), ("reglist", reglist)],
        );
    }

    // -- control ------------------------------------------------------------------

    pub fn b(&mut self, cond: u32, label: &str) {
        self.branch_fixups
            .push((self.words.len(), "B".to_string(), cond, label.to_string()));
        self.words.push(0);
    }

    pub fn halt(&mut self) {
        self.inst("HALT", &[]);
    }

    pub fn finish(mut self, name: &str) -> Program {
        for (index, flat, cond, label) in std::mem::take(&mut self.branch_fixups) {
            let target = *self
                .labels
                .get(&label)
                .unwrap_or_else(|| panic!("undefined label `{label}`"));
            let at = self.entry + 4 * index as u32;
            // Branch target = pc + 8 + (sign-extended immediate << 2).
            let diff = target.wrapping_sub(at.wrapping_add(8)) as i32;
            assert_eq!(diff % 4, 0, "misaligned branch target");
            let imm = ((diff >> 2) as u32) & 0x00FF_FFFF;
            let f = self.flat(&flat);
            let record = vec![
                ("cond".to_string(), cond),
                ("signed_immed_24".to_string(), imm),
            ];
            self.words[index] = encode_word(f, &record);
        }
        Program {
            name: name.to_string(),
            entry: self.entry,
            words: self.words,
        }
    }
}

/// Arithmetic-and-branch loop: two nested counters, ~190k instructions.
pub fn loop_program(flats: &[FlatInstruction]) -> Program {
    let mut a = Asm::new(flats, ENTRY);
    a.mov_imm(0, 0); // accumulator
    a.mov_imm(2, 250); // outer counter
    a.label("outer");
    a.mov_imm(1, 250); // inner counter
    a.label("inner");
    a.add_imm(0, 0, 1);
    a.subs_imm(1, 1, 1);
    a.b(NE, "inner");
    a.subs_imm(2, 2, 1);
    a.b(NE, "outer");
    a.halt();
    a.finish("loop")
}

/// Bubble sort over 64 words seeded by a multiplicative generator.
pub fn sorting_program(flats: &[FlatInstruction]) -> Program {
    let mut a = Asm::new(flats, ENTRY);
    // R0 = &buf, R1 = count, R2 = x, R4 = multiplier
    a.mov_imm(0, 128);
    a.mov_lsl(0, 0, 8); // 0x8000
    a.mov_imm(1, 64);
    a.mov_imm(2, 199);
    a.mov_imm(4, 13);
    a.label("seed");
    a.mul(3, 2, 4); // R3 = x * 13
    a.add_imm(2, 3, 7); // x = x*13 + 7
    a.and_imm(5, 2, 255);
    a.str_post(5, 0, 4); // buf[i++] = x & 255
    a.subs_imm(1, 1, 1);
    a.b(NE, "seed");
    a.mov_imm(6, 63); // passes
    a.label("pass");
    a.mov_imm(0, 128);
    a.mov_lsl(0, 0, 8);
    a.mov_imm(1, 63); // comparisons per pass
    a.label("step");
    a.ldr_off(2, 0, 0);
    a.ldr_off(3, 0, 4);
    a.cmp_reg(2, 3);
    a.b(LE, "noswap");
    a.str_off(3, 0, 0);
    a.str_off(2, 0, 4);
    a.label("noswap");
    a.add_imm(0, 0, 4);
    a.subs_imm(1, 1, 1);
    a.b(NE, "step");
    a.subs_imm(6, 6, 1);
    a.b(NE, "pass");
    a.halt();
    a.finish("sorting")
}

/// Xorshift fill plus block mixing rounds through LDM/STM.
pub fn crypto_program(flats: &[FlatInstruction]) -> Program {
    let mut a = Asm::new(flats, ENTRY);
    a.mov_imm(0, 128);
    a.mov_lsl(0, 0, 8); // buffer at 0x8000
    a.mov_imm(1, 248); // words to fill
    a.mov_imm(2, 1);
    a.mov_lsl(2, 2, 7);
    a.add_imm(2, 2, 77); // x = 205
    a.label("fill");
    a.eor_lsl(2, 2, 2, 13); // x ^= x << 13
    a.eor_lsr(2, 2, 2, 17); // x ^= x >> 17
    a.eor_lsl(2, 2, 2, 5); // x ^= x << 5
    a.str_post(2, 0, 4);
    a.subs_imm(1, 1, 1);
    a.b(NE, "fill");
    a.mov_imm(6, 100); // rounds
    a.label("round");
    a.mov_imm(0, 128);
    a.mov_lsl(0, 0, 8);
    a.mov_imm(1, 62); // blocks of 4 words
    a.label("blk");
    a.ldm_ia(0, 0b0011_1100, false); // R2..R5 = buf[j..j+4]
    a.eor_lsl(2, 2, 3, 13);
    a.eor_lsr(3, 3, 4, 7);
    a.adc_reg(4, 4, 5);
    a.qadd(5, 5, 2);
    a.stm_ia(0, 0b0011_1100, true); // store back, advance base
    a.subs_imm(1, 1, 1);
    a.b(NE, "blk");
    a.subs_imm(6, 6, 1);
    a.b(NE, "round");
    a.halt();
    a.finish("crypto")
}

/// The shipped benchmark suite, by name.
pub fn benchmark(flats: &[FlatInstruction], name: &str) -> Option<Program> {
    match name {
        "loop" => Some(loop_program(flats)),
        "sorting" => Some(sorting_program(flats)),
        "crypto" => Some(crypto_program(flats)),
        _ => None,
    }
}

pub const BENCHMARKS: [&str; 3] = ["loop", "sorting", "crypto"];
