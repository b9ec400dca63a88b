// Generated by `issforge gen-iss`. Do not edit; regenerate instead.
//! Two-phase decoder: phase one selects candidates by mask/value,
//! phase two extracts the fields, runs the decode-time computations,
//! and evaluates the validity constraints. Candidates run most
//! constant bits first, so a specialized variant wins over its
//! generic fallback.

use issforge_core::ir::eval;
use issforge_core::sim::DecodeResult;

use crate::params::*;
use crate::Op;

pub fn decode(word: u32) -> DecodeResult<Op> {
    let mut matched = false;
    match (word >> 25) & 0b111 {
        0b000 => {
            // MUL__s0__al
            if word & 0xFFF0F0F0 == 0xE0000090 {
                matched = true;
                let d = (word >> 16) & 0xF;
                let s = (word >> 8) & 0xF;
                let m = word & 0xF;
                let s_flag = 0;
                let cond = 14;
                if cond != 15 && d != 15 && d != m {
                    return DecodeResult::Instr(Op::MulS0Al(P6 { cond, s_flag, d, s, m }));
                }
            }
            // MUL__s1__al
            if word & 0xFFF0F0F0 == 0xE0100090 {
                matched = true;
                let d = (word >> 16) & 0xF;
                let s = (word >> 8) & 0xF;
                let m = word & 0xF;
                let s_flag = 1;
                let cond = 14;
                if cond != 15 && d != 15 && d != m {
                    return DecodeResult::Instr(Op::MulS1Al(P6 { cond, s_flag, d, s, m }));
                }
            }
            // QADD__al
            if word & 0xFFF00FF0 == 0xE1000050 {
                matched = true;
                let n = (word >> 16) & 0xF;
                let d = (word >> 12) & 0xF;
                let m = word & 0xF;
                let cond = 14;
                if cond != 15 {
                    return DecodeResult::Instr(Op::QaddAl(P7 { cond, n, d, m }));
                }
            }
            // CMP_lsl_imm__al
            if word & 0xFFF0F070 == 0xE1500000 {
                matched = true;
                let n = (word >> 16) & 0xF;
                let shift_imm = (word >> 7) & 0x1F;
                let m = word & 0xF;
                let cond = 14;
                if cond != 15 {
                    return DecodeResult::Instr(Op::CmpLslImmAl(P3 { cond, n, shift_imm, m }));
                }
            }
            // CMP_lsr_imm__al
            if word & 0xFFF0F070 == 0xE1500020 {
                matched = true;
                let n = (word >> 16) & 0xF;
                let shift_imm = (word >> 7) & 0x1F;
                let m = word & 0xF;
                let cond = 14;
                if cond != 15 {
                    return DecodeResult::Instr(Op::CmpLsrImmAl(P3 { cond, n, shift_imm, m }));
                }
            }
            // MOV_lsl_imm__s0__al
            if word & 0xFFFF0070 == 0xE1A00000 {
                matched = true;
                let d = (word >> 12) & 0xF;
                let shift_imm = (word >> 7) & 0x1F;
                let m = word & 0xF;
                let s_flag = 0;
                let cond = 14;
                if cond != 15 {
                    return DecodeResult::Instr(Op::MovLslImmS0Al(P5 { cond, s_flag, d, shift_imm, m }));
                }
            }
            // MOV_lsl_imm__s1__al
            if word & 0xFFFF0070 == 0xE1B00000 {
                matched = true;
                let d = (word >> 12) & 0xF;
                let shift_imm = (word >> 7) & 0x1F;
                let m = word & 0xF;
                let s_flag = 1;
                let cond = 14;
                if cond != 15 {
                    return DecodeResult::Instr(Op::MovLslImmS1Al(P5 { cond, s_flag, d, shift_imm, m }));
                }
            }
            // MOV_lsr_imm__s0__al
            if word & 0xFFFF0070 == 0xE1A00020 {
                matched = true;
                let d = (word >> 12) & 0xF;
                let shift_imm = (word >> 7) & 0x1F;
                let m = word & 0xF;
                let s_flag = 0;
                let cond = 14;
                if cond != 15 {
                    return DecodeResult::Instr(Op::MovLsrImmS0Al(P5 { cond, s_flag, d, shift_imm, m }));
                }
            }
            // MOV_lsr_imm__s1__al
            if word & 0xFFFF0070 == 0xE1B00020 {
                matched = true;
                let d = (word >> 12) & 0xF;
                let shift_imm = (word >> 7) & 0x1F;
                let m = word & 0xF;
                let s_flag = 1;
                let cond = 14;
                if cond != 15 {
                    return DecodeResult::Instr(Op::MovLsrImmS1Al(P5 { cond, s_flag, d, shift_imm, m }));
                }
            }
            // MUL__s0
            if word & 0x0FF0F0F0 == 0x00000090 {
                matched = true;
                let cond = (word >> 28) & 0xF;
                let d = (word >> 16) & 0xF;
                let s = (word >> 8) & 0xF;
                let m = word & 0xF;
                let s_flag = 0;
                if cond != 15 && d != 15 && d != m {
                    return DecodeResult::Instr(Op::MulS0(P6 { cond, s_flag, d, s, m }));
                }
            }
            // MUL__s1
            if word & 0x0FF0F0F0 == 0x00100090 {
                matched = true;
                let cond = (word >> 28) & 0xF;
                let d = (word >> 16) & 0xF;
                let s = (word >> 8) & 0xF;
                let m = word & 0xF;
                let s_flag = 1;
                if cond != 15 && d != 15 && d != m {
                    return DecodeResult::Instr(Op::MulS1(P6 { cond, s_flag, d, s, m }));
                }
            }
            // QADD
            if word & 0x0FF00FF0 == 0x01000050 {
                matched = true;
                let cond = (word >> 28) & 0xF;
                let n = (word >> 16) & 0xF;
                let d = (word >> 12) & 0xF;
                let m = word & 0xF;
                if cond != 15 {
                    return DecodeResult::Instr(Op::Qadd(P7 { cond, n, d, m }));
                }
            }
            // AND_lsl_imm__s0__al
            if word & 0xFFF00070 == 0xE0000000 {
                matched = true;
                let n = (word >> 16) & 0xF;
                let d = (word >> 12) & 0xF;
                let shift_imm = (word >> 7) & 0x1F;
                let m = word & 0xF;
                let s_flag = 0;
                let cond = 14;
                if cond != 15 {
                    return DecodeResult::Instr(Op::AndLslImmS0Al(P1 { cond, s_flag, n, d, shift_imm, m }));
                }
            }
            // AND_lsl_imm__s1__al
            if word & 0xFFF00070 == 0xE0100000 {
                matched = true;
                let n = (word >> 16) & 0xF;
                let d = (word >> 12) & 0xF;
                let shift_imm = (word >> 7) & 0x1F;
                let m = word & 0xF;
                let s_flag = 1;
                let cond = 14;
                if cond != 15 {
                    return DecodeResult::Instr(Op::AndLslImmS1Al(P1 { cond, s_flag, n, d, shift_imm, m }));
                }
            }
            // AND_lsr_imm__s0__al
            if word & 0xFFF00070 == 0xE0000020 {
                matched = true;
                let n = (word >> 16) & 0xF;
                let d = (word >> 12) & 0xF;
                let shift_imm = (word >> 7) & 0x1F;
                let m = word & 0xF;
                let s_flag = 0;
                let cond = 14;
                if cond != 15 {
                    return DecodeResult::Instr(Op::AndLsrImmS0Al(P1 { cond, s_flag, n, d, shift_imm, m }));
                }
            }
            // AND_lsr_imm__s1__al
            if word & 0xFFF00070 == 0xE0100020 {
                matched = true;
                let n = (word >> 16) & 0xF;
                let d = (word >> 12) & 0xF;
                let shift_imm = (word >> 7) & 0x1F;
                let m = word & 0xF;
                let s_flag = 1;
                let cond = 14;
                if cond != 15 {
                    return DecodeResult::Instr(Op::AndLsrImmS1Al(P1 { cond, s_flag, n, d, shift_imm, m }));
                }
            }
            // EOR_lsl_imm__s0__al
            if word & 0xFFF00070 == 0xE0200000 {
                matched = true;
                let n = (word >> 16) & 0xF;
                let d = (word >> 12) & 0xF;
                let shift_imm = (word >> 7) & 0x1F;
                let m = word & 0xF;
                let s_flag = 0;
                let cond = 14;
                if cond != 15 {
                    return DecodeResult::Instr(Op::EorLslImmS0Al(P1 { cond, s_flag, n, d, shift_imm, m }));
                }
            }
            // EOR_lsl_imm__s1__al
            if word & 0xFFF00070 == 0xE0300000 {
                matched = true;
                let n = (word >> 16) & 0xF;
                let d = (word >> 12) & 0xF;
                let shift_imm = (word >> 7) & 0x1F;
                let m = word & 0xF;
                let s_flag = 1;
                let cond = 14;
                if cond != 15 {
                    return DecodeResult::Instr(Op::EorLslImmS1Al(P1 { cond, s_flag, n, d, shift_imm, m }));
                }
            }
            // EOR_lsr_imm__s0__al
            if word & 0xFFF00070 == 0xE0200020 {
                matched = true;
                let n = (word >> 16) & 0xF;
                let d = (word >> 12) & 0xF;
                let shift_imm = (word >> 7) & 0x1F;
                let m = word & 0xF;
                let s_flag = 0;
                let cond = 14;
                if cond != 15 {
                    return DecodeResult::Instr(Op::EorLsrImmS0Al(P1 { cond, s_flag, n, d, shift_imm, m }));
                }
            }
            // EOR_lsr_imm__s1__al
            if word & 0xFFF00070 == 0xE0300020 {
                matched = true;
                let n = (word >> 16) & 0xF;
                let d = (word >> 12) & 0xF;
                let shift_imm = (word >> 7) & 0x1F;
                let m = word & 0xF;
                let s_flag = 1;
                let cond = 14;
                if cond != 15 {
                    return DecodeResult::Instr(Op::EorLsrImmS1Al(P1 { cond, s_flag, n, d, shift_imm, m }));
                }
            }
            // SUB_lsl_imm__s0__al
            if word & 0xFFF00070 == 0xE0400000 {
                matched = true;
                let n = (word >> 16) & 0xF;
                let d = (word >> 12) & 0xF;
                let shift_imm = (word >> 7) & 0x1F;
                let m = word & 0xF;
                let s_flag = 0;
                let cond = 14;
                if cond != 15 {
                    return DecodeResult::Instr(Op::SubLslImmS0Al(P1 { cond, s_flag, n, d, shift_imm, m }));
                }
            }
            // SUB_lsl_imm__s1__al
            if word & 0xFFF00070 == 0xE0500000 {
                matched = true;
                let n = (word >> 16) & 0xF;
                let d = (word >> 12) & 0xF;
                let shift_imm = (word >> 7) & 0x1F;
                let m = word & 0xF;
                let s_flag = 1;
                let cond = 14;
                if cond != 15 {
                    return DecodeResult::Instr(Op::SubLslImmS1Al(P1 { cond, s_flag, n, d, shift_imm, m }));
                }
            }
            // SUB_lsr_imm__s0__al
            if word & 0xFFF00070 == 0xE0400020 {
                matched = true;
                let n = (word >> 16) & 0xF;
                let d = (word >> 12) & 0xF;
                let shift_imm = (word >> 7) & 0x1F;
                let m = word & 0xF;
                let s_flag = 0;
                let cond = 14;
                if cond != 15 {
                    return DecodeResult::Instr(Op::SubLsrImmS0Al(P1 { cond, s_flag, n, d, shift_imm, m }));
                }
            }
            // SUB_lsr_imm__s1__al
            if word & 0xFFF00070 == 0xE0500020 {
                matched = true;
                let n = (word >> 16) & 0xF;
                let d = (word >> 12) & 0xF;
                let shift_imm = (word >> 7) & 0x1F;
                let m = word & 0xF;
                let s_flag = 1;
                let cond = 14;
                if cond != 15 {
                    return DecodeResult::Instr(Op::SubLsrImmS1Al(P1 { cond, s_flag, n, d, shift_imm, m }));
                }
            }
            // ADD_lsl_imm__s0__al
            if word & 0xFFF00070 == 0xE0800000 {
                matched = true;
                let n = (word >> 16) & 0xF;
                let d = (word >> 12) & 0xF;
                let shift_imm = (word >> 7) & 0x1F;
                let m = word & 0xF;
                let s_flag = 0;
                let cond = 14;
                if cond != 15 {
                    return DecodeResult::Instr(Op::AddLslImmS0Al(P1 { cond, s_flag, n, d, shift_imm, m }));
                }
            }
            // ADD_lsl_imm__s1__al
            if word & 0xFFF00070 == 0xE0900000 {
                matched = true;
                let n = (word >> 16) & 0xF;
                let d = (word >> 12) & 0xF;
                let shift_imm = (word >> 7) & 0x1F;
                let m = word & 0xF;
                let s_flag = 1;
                let cond = 14;
                if cond != 15 {
                    return DecodeResult::Instr(Op::AddLslImmS1Al(P1 { cond, s_flag, n, d, shift_imm, m }));
                }
            }
            // ADD_lsr_imm__s0__al
            if word & 0xFFF00070 == 0xE0800020 {
                matched = true;
                let n = (word >> 16) & 0xF;
                let d = (word >> 12) & 0xF;
                let shift_imm = (word >> 7) & 0x1F;
                let m = word & 0xF;
                let s_flag = 0;
                let cond = 14;
                if cond != 15 {
                    return DecodeResult::Instr(Op::AddLsrImmS0Al(P1 { cond, s_flag, n, d, shift_imm, m }));
                }
            }
            // ADD_lsr_imm__s1__al
            if word & 0xFFF00070 == 0xE0900020 {
                matched = true;
                let n = (word >> 16) & 0xF;
                let d = (word >> 12) & 0xF;
                let shift_imm = (word >> 7) & 0x1F;
                let m = word & 0xF;
                let s_flag = 1;
                let cond = 14;
                if cond != 15 {
                    return DecodeResult::Instr(Op::AddLsrImmS1Al(P1 { cond, s_flag, n, d, shift_imm, m }));
                }
            }
            // ADC_lsl_imm__s0__al
            if word & 0xFFF00070 == 0xE0A00000 {
                matched = true;
                let n = (word >> 16) & 0xF;
                let d = (word >> 12) & 0xF;
                let shift_imm = (word >> 7) & 0x1F;
                let m = word & 0xF;
                let s_flag = 0;
                let cond = 14;
                if cond != 15 {
                    return DecodeResult::Instr(Op::AdcLslImmS0Al(P1 { cond, s_flag, n, d, shift_imm, m }));
                }
            }
            // ADC_lsl_imm__s1__al
            if word & 0xFFF00070 == 0xE0B00000 {
                matched = true;
                let n = (word >> 16) & 0xF;
                let d = (word >> 12) & 0xF;
                let shift_imm = (word >> 7) & 0x1F;
                let m = word & 0xF;
                let s_flag = 1;
                let cond = 14;
                if cond != 15 {
                    return DecodeResult::Instr(Op::AdcLslImmS1Al(P1 { cond, s_flag, n, d, shift_imm, m }));
                }
            }
            // ADC_lsr_imm__s0__al
            if word & 0xFFF00070 == 0xE0A00020 {
                matched = true;
                let n = (word >> 16) & 0xF;
                let d = (word >> 12) & 0xF;
                let shift_imm = (word >> 7) & 0x1F;
                let m = word & 0xF;
                let s_flag = 0;
                let cond = 14;
                if cond != 15 {
                    return DecodeResult::Instr(Op::AdcLsrImmS0Al(P1 { cond, s_flag, n, d, shift_imm, m }));
                }
            }
            // ADC_lsr_imm__s1__al
            if word & 0xFFF00070 == 0xE0B00020 {
                matched = true;
                let n = (word >> 16) & 0xF;
                let d = (word >> 12) & 0xF;
                let shift_imm = (word >> 7) & 0x1F;
                let m = word & 0xF;
                let s_flag = 1;
                let cond = 14;
                if cond != 15 {
                    return DecodeResult::Instr(Op::AdcLsrImmS1Al(P1 { cond, s_flag, n, d, shift_imm, m }));
                }
            }
            // CMP_lsl_imm
            if word & 0x0FF0F070 == 0x01500000 {
                matched = true;
                let cond = (word >> 28) & 0xF;
                let n = (word >> 16) & 0xF;
                let shift_imm = (word >> 7) & 0x1F;
                let m = word & 0xF;
                if cond != 15 {
                    return DecodeResult::Instr(Op::CmpLslImm(P3 { cond, n, shift_imm, m }));
                }
            }
            // CMP_lsr_imm
            if word & 0x0FF0F070 == 0x01500020 {
                matched = true;
                let cond = (word >> 28) & 0xF;
                let n = (word >> 16) & 0xF;
                let shift_imm = (word >> 7) & 0x1F;
                let m = word & 0xF;
                if cond != 15 {
                    return DecodeResult::Instr(Op::CmpLsrImm(P3 { cond, n, shift_imm, m }));
                }
            }
            // MOV_lsl_imm__s0
            if word & 0x0FFF0070 == 0x01A00000 {
                matched = true;
                let cond = (word >> 28) & 0xF;
                let d = (word >> 12) & 0xF;
                let shift_imm = (word >> 7) & 0x1F;
                let m = word & 0xF;
                let s_flag = 0;
                if cond != 15 {
                    return DecodeResult::Instr(Op::MovLslImmS0(P5 { cond, s_flag, d, shift_imm, m }));
                }
            }
            // MOV_lsl_imm__s1
            if word & 0x0FFF0070 == 0x01B00000 {
                matched = true;
                let cond = (word >> 28) & 0xF;
                let d = (word >> 12) & 0xF;
                let shift_imm = (word >> 7) & 0x1F;
                let m = word & 0xF;
                let s_flag = 1;
                if cond != 15 {
                    return DecodeResult::Instr(Op::MovLslImmS1(P5 { cond, s_flag, d, shift_imm, m }));
                }
            }
            // MOV_lsr_imm__s0
            if word & 0x0FFF0070 == 0x01A00020 {
                matched = true;
                let cond = (word >> 28) & 0xF;
                let d = (word >> 12) & 0xF;
                let shift_imm = (word >> 7) & 0x1F;
                let m = word & 0xF;
                let s_flag = 0;
                if cond != 15 {
                    return DecodeResult::Instr(Op::MovLsrImmS0(P5 { cond, s_flag, d, shift_imm, m }));
                }
            }
            // MOV_lsr_imm__s1
            if word & 0x0FFF0070 == 0x01B00020 {
                matched = true;
                let cond = (word >> 28) & 0xF;
                let d = (word >> 12) & 0xF;
                let shift_imm = (word >> 7) & 0x1F;
                let m = word & 0xF;
                let s_flag = 1;
                if cond != 15 {
                    return DecodeResult::Instr(Op::MovLsrImmS1(P5 { cond, s_flag, d, shift_imm, m }));
                }
            }
            // MUL
            if word & 0x0FE0F0F0 == 0x00000090 {
                matched = true;
                let cond = (word >> 28) & 0xF;
                let s_flag = (word >> 20) & 0x1;
                let d = (word >> 16) & 0xF;
                let s = (word >> 8) & 0xF;
                let m = word & 0xF;
                if cond != 15 && d != 15 && d != m {
                    return DecodeResult::Instr(Op::Mul(P6 { cond, s_flag, d, s, m }));
                }
            }
            // MOV_lsl_imm
            if word & 0x0FEF0070 == 0x01A00000 {
                matched = true;
                let cond = (word >> 28) & 0xF;
                let s_flag = (word >> 20) & 0x1;
                let d = (word >> 12) & 0xF;
                let shift_imm = (word >> 7) & 0x1F;
                let m = word & 0xF;
                if cond != 15 {
                    return DecodeResult::Instr(Op::MovLslImm(P5 { cond, s_flag, d, shift_imm, m }));
                }
            }
            // MOV_lsr_imm
            if word & 0x0FEF0070 == 0x01A00020 {
                matched = true;
                let cond = (word >> 28) & 0xF;
                let s_flag = (word >> 20) & 0x1;
                let d = (word >> 12) & 0xF;
                let shift_imm = (word >> 7) & 0x1F;
                let m = word & 0xF;
                if cond != 15 {
                    return DecodeResult::Instr(Op::MovLsrImm(P5 { cond, s_flag, d, shift_imm, m }));
                }
            }
            // AND_lsl_imm__s0
            if word & 0x0FF00070 == 0x00000000 {
                matched = true;
                let cond = (word >> 28) & 0xF;
                let n = (word >> 16) & 0xF;
                let d = (word >> 12) & 0xF;
                let shift_imm = (word >> 7) & 0x1F;
                let m = word & 0xF;
                let s_flag = 0;
                if cond != 15 {
                    return DecodeResult::Instr(Op::AndLslImmS0(P1 { cond, s_flag, n, d, shift_imm, m }));
                }
            }
            // AND_lsl_imm__s1
            if word & 0x0FF00070 == 0x00100000 {
                matched = true;
                let cond = (word >> 28) & 0xF;
                let n = (word >> 16) & 0xF;
                let d = (word >> 12) & 0xF;
                let shift_imm = (word >> 7) & 0x1F;
                let m = word & 0xF;
                let s_flag = 1;
                if cond != 15 {
                    return DecodeResult::Instr(Op::AndLslImmS1(P1 { cond, s_flag, n, d, shift_imm, m }));
                }
            }
            // AND_lsr_imm__s0
            if word & 0x0FF00070 == 0x00000020 {
                matched = true;
                let cond = (word >> 28) & 0xF;
                let n = (word >> 16) & 0xF;
                let d = (word >> 12) & 0xF;
                let shift_imm = (word >> 7) & 0x1F;
                let m = word & 0xF;
                let s_flag = 0;
                if cond != 15 {
                    return DecodeResult::Instr(Op::AndLsrImmS0(P1 { cond, s_flag, n, d, shift_imm, m }));
                }
            }
            // AND_lsr_imm__s1
            if word & 0x0FF00070 == 0x00100020 {
                matched = true;
                let cond = (word >> 28) & 0xF;
                let n = (word >> 16) & 0xF;
                let d = (word >> 12) & 0xF;
                let shift_imm = (word >> 7) & 0x1F;
                let m = word & 0xF;
                let s_flag = 1;
                if cond != 15 {
                    return DecodeResult::Instr(Op::AndLsrImmS1(P1 { cond, s_flag, n, d, shift_imm, m }));
                }
            }
            // EOR_lsl_imm__s0
            if word & 0x0FF00070 == 0x00200000 {
                matched = true;
                let cond = (word >> 28) & 0xF;
                let n = (word >> 16) & 0xF;
                let d = (word >> 12) & 0xF;
                let shift_imm = (word >> 7) & 0x1F;
                let m = word & 0xF;
                let s_flag = 0;
                if cond != 15 {
                    return DecodeResult::Instr(Op::EorLslImmS0(P1 { cond, s_flag, n, d, shift_imm, m }));
                }
            }
            // EOR_lsl_imm__s1
            if word & 0x0FF00070 == 0x00300000 {
                matched = true;
                let cond = (word >> 28) & 0xF;
                let n = (word >> 16) & 0xF;
                let d = (word >> 12) & 0xF;
                let shift_imm = (word >> 7) & 0x1F;
                let m = word & 0xF;
                let s_flag = 1;
                if cond != 15 {
                    return DecodeResult::Instr(Op::EorLslImmS1(P1 { cond, s_flag, n, d, shift_imm, m }));
                }
            }
            // EOR_lsr_imm__s0
            if word & 0x0FF00070 == 0x00200020 {
                matched = true;
                let cond = (word >> 28) & 0xF;
                let n = (word >> 16) & 0xF;
                let d = (word >> 12) & 0xF;
                let shift_imm = (word >> 7) & 0x1F;
                let m = word & 0xF;
                let s_flag = 0;
                if cond != 15 {
                    return DecodeResult::Instr(Op::EorLsrImmS0(P1 { cond, s_flag, n, d, shift_imm, m }));
                }
            }
            // EOR_lsr_imm__s1
            if word & 0x0FF00070 == 0x00300020 {
                matched = true;
                let cond = (word >> 28) & 0xF;
                let n = (word >> 16) & 0xF;
                let d = (word >> 12) & 0xF;
                let shift_imm = (word >> 7) & 0x1F;
                let m = word & 0xF;
                let s_flag = 1;
                if cond != 15 {
                    return DecodeResult::Instr(Op::EorLsrImmS1(P1 { cond, s_flag, n, d, shift_imm, m }));
                }
            }
            // SUB_lsl_imm__s0
            if word & 0x0FF00070 == 0x00400000 {
                matched = true;
                let cond = (word >> 28) & 0xF;
                let n = (word >> 16) & 0xF;
                let d = (word >> 12) & 0xF;
                let shift_imm = (word >> 7) & 0x1F;
                let m = word & 0xF;
                let s_flag = 0;
                if cond != 15 {
                    return DecodeResult::Instr(Op::SubLslImmS0(P1 { cond, s_flag, n, d, shift_imm, m }));
                }
            }
            // SUB_lsl_imm__s1
            if word & 0x0FF00070 == 0x00500000 {
                matched = true;
                let cond = (word >> 28) & 0xF;
                let n = (word >> 16) & 0xF;
                let d = (word >> 12) & 0xF;
                let shift_imm = (word >> 7) & 0x1F;
                let m = word & 0xF;
                let s_flag = 1;
                if cond != 15 {
                    return DecodeResult::Instr(Op::SubLslImmS1(P1 { cond, s_flag, n, d, shift_imm, m }));
                }
            }
            // SUB_lsr_imm__s0
            if word & 0x0FF00070 == 0x00400020 {
                matched = true;
                let cond = (word >> 28) & 0xF;
                let n = (word >> 16) & 0xF;
                let d = (word >> 12) & 0xF;
                let shift_imm = (word >> 7) & 0x1F;
                let m = word & 0xF;
                let s_flag = 0;
                if cond != 15 {
                    return DecodeResult::Instr(Op::SubLsrImmS0(P1 { cond, s_flag, n, d, shift_imm, m }));
                }
            }
            // SUB_lsr_imm__s1
            if word & 0x0FF00070 == 0x00500020 {
                matched = true;
                let cond = (word >> 28) & 0xF;
                let n = (word >> 16) & 0xF;
                let d = (word >> 12) & 0xF;
                let shift_imm = (word >> 7) & 0x1F;
                let m = word & 0xF;
                let s_flag = 1;
                if cond != 15 {
                    return DecodeResult::Instr(Op::SubLsrImmS1(P1 { cond, s_flag, n, d, shift_imm, m }));
                }
            }
            // ADD_lsl_imm__s0
            if word & 0x0FF00070 == 0x00800000 {
                matched = true;
                let cond = (word >> 28) & 0xF;
                let n = (word >> 16) & 0xF;
                let d = (word >> 12) & 0xF;
                let shift_imm = (word >> 7) & 0x1F;
                let m = word & 0xF;
                let s_flag = 0;
                if cond != 15 {
                    return DecodeResult::Instr(Op::AddLslImmS0(P1 { cond, s_flag, n, d, shift_imm, m }));
                }
            }
            // ADD_lsl_imm__s1
            if word & 0x0FF00070 == 0x00900000 {
                matched = true;
                let cond = (word >> 28) & 0xF;
                let n = (word >> 16) & 0xF;
                let d = (word >> 12) & 0xF;
                let shift_imm = (word >> 7) & 0x1F;
                let m = word & 0xF;
                let s_flag = 1;
                if cond != 15 {
                    return DecodeResult::Instr(Op::AddLslImmS1(P1 { cond, s_flag, n, d, shift_imm, m }));
                }
            }
            // ADD_lsr_imm__s0
            if word & 0x0FF00070 == 0x00800020 {
                matched = true;
                let cond = (word >> 28) & 0xF;
                let n = (word >> 16) & 0xF;
                let d = (word >> 12) & 0xF;
                let shift_imm = (word >> 7) & 0x1F;
                let m = word & 0xF;
                let s_flag = 0;
                if cond != 15 {
                    return DecodeResult::Instr(Op::AddLsrImmS0(P1 { cond, s_flag, n, d, shift_imm, m }));
                }
            }
            // ADD_lsr_imm__s1
            if word & 0x0FF00070 == 0x00900020 {
                matched = true;
                let cond = (word >> 28) & 0xF;
                let n = (word >> 16) & 0xF;
                let d = (word >> 12) & 0xF;
                let shift_imm = (word >> 7) & 0x1F;
                let m = word & 0xF;
                let s_flag = 1;
                if cond != 15 {
                    return DecodeResult::Instr(Op::AddLsrImmS1(P1 { cond, s_flag, n, d, shift_imm, m }));
                }
            }
            // ADC_lsl_imm__s0
            if word & 0x0FF00070 == 0x00A00000 {
                matched = true;
                let cond = (word >> 28) & 0xF;
                let n = (word >> 16) & 0xF;
                let d = (word >> 12) & 0xF;
                let shift_imm = (word >> 7) & 0x1F;
                let m = word & 0xF;
                let s_flag = 0;
                if cond != 15 {
                    return DecodeResult::Instr(Op::AdcLslImmS0(P1 { cond, s_flag, n, d, shift_imm, m }));
                }
            }
            // ADC_lsl_imm__s1
            if word & 0x0FF00070 == 0x00B00000 {
                matched = true;
                let cond = (word >> 28) & 0xF;
                let n = (word >> 16) & 0xF;
                let d = (word >> 12) & 0xF;
                let shift_imm = (word >> 7) & 0x1F;
                let m = word & 0xF;
                let s_flag = 1;
                if cond != 15 {
                    return DecodeResult::Instr(Op::AdcLslImmS1(P1 { cond, s_flag, n, d, shift_imm, m }));
                }
            }
            // ADC_lsr_imm__s0
            if word & 0x0FF00070 == 0x00A00020 {
                matched = true;
                let cond = (word >> 28) & 0xF;
                let n = (word >> 16) & 0xF;
                let d = (word >> 12) & 0xF;
                let shift_imm = (word >> 7) & 0x1F;
                let m = word & 0xF;
                let s_flag = 0;
                if cond != 15 {
                    return DecodeResult::Instr(Op::AdcLsrImmS0(P1 { cond, s_flag, n, d, shift_imm, m }));
                }
            }
            // ADC_lsr_imm__s1
            if word & 0x0FF00070 == 0x00B00020 {
                matched = true;
                let cond = (word >> 28) & 0xF;
                let n = (word >> 16) & 0xF;
                let d = (word >> 12) & 0xF;
                let shift_imm = (word >> 7) & 0x1F;
                let m = word & 0xF;
                let s_flag = 1;
                if cond != 15 {
                    return DecodeResult::Instr(Op::AdcLsrImmS1(P1 { cond, s_flag, n, d, shift_imm, m }));
                }
            }
            // AND_lsl_imm
            if word & 0x0FE00070 == 0x00000000 {
                matched = true;
                let cond = (word >> 28) & 0xF;
                let s_flag = (word >> 20) & 0x1;
                let n = (word >> 16) & 0xF;
                let d = (word >> 12) & 0xF;
                let shift_imm = (word >> 7) & 0x1F;
                let m = word & 0xF;
                if cond != 15 {
                    return DecodeResult::Instr(Op::AndLslImm(P1 { cond, s_flag, n, d, shift_imm, m }));
                }
            }
            // AND_lsr_imm
            if word & 0x0FE00070 == 0x00000020 {
                matched = true;
                let cond = (word >> 28) & 0xF;
                let s_flag = (word >> 20) & 0x1;
                let n = (word >> 16) & 0xF;
                let d = (word >> 12) & 0xF;
                let shift_imm = (word >> 7) & 0x1F;
                let m = word & 0xF;
                if cond != 15 {
                    return DecodeResult::Instr(Op::AndLsrImm(P1 { cond, s_flag, n, d, shift_imm, m }));
                }
            }
            // EOR_lsl_imm
            if word & 0x0FE00070 == 0x00200000 {
                matched = true;
                let cond = (word >> 28) & 0xF;
                let s_flag = (word >> 20) & 0x1;
                let n = (word >> 16) & 0xF;
                let d = (word >> 12) & 0xF;
                let shift_imm = (word >> 7) & 0x1F;
                let m = word & 0xF;
                if cond != 15 {
                    return DecodeResult::Instr(Op::EorLslImm(P1 { cond, s_flag, n, d, shift_imm, m }));
                }
            }
            // EOR_lsr_imm
            if word & 0x0FE00070 == 0x00200020 {
                matched = true;
                let cond = (word >> 28) & 0xF;
                let s_flag = (word >> 20) & 0x1;
                let n = (word >> 16) & 0xF;
                let d = (word >> 12) & 0xF;
                let shift_imm = (word >> 7) & 0x1F;
                let m = word & 0xF;
                if cond != 15 {
                    return DecodeResult::Instr(Op::EorLsrImm(P1 { cond, s_flag, n, d, shift_imm, m }));
                }
            }
            // SUB_lsl_imm
            if word & 0x0FE00070 == 0x00400000 {
                matched = true;
                let cond = (word >> 28) & 0xF;
                let s_flag = (word >> 20) & 0x1;
                let n = (word >> 16) & 0xF;
                let d = (word >> 12) & 0xF;
                let shift_imm = (word >> 7) & 0x1F;
                let m = word & 0xF;
                if cond != 15 {
                    return DecodeResult::Instr(Op::SubLslImm(P1 { cond, s_flag, n, d, shift_imm, m }));
                }
            }
            // SUB_lsr_imm
            if word & 0x0FE00070 == 0x00400020 {
                matched = true;
                let cond = (word >> 28) & 0xF;
                let s_flag = (word >> 20) & 0x1;
                let n = (word >> 16) & 0xF;
                let d = (word >> 12) & 0xF;
                let shift_imm = (word >> 7) & 0x1F;
                let m = word & 0xF;
                if cond != 15 {
                    return DecodeResult::Instr(Op::SubLsrImm(P1 { cond, s_flag, n, d, shift_imm, m }));
                }
            }
            // ADD_lsl_imm
            if word & 0x0FE00070 == 0x00800000 {
                matched = true;
                let cond = (word >> 28) & 0xF;
                let s_flag = (word >> 20) & 0x1;
                let n = (word >> 16) & 0xF;
                let d = (word >> 12) & 0xF;
                let shift_imm = (word >> 7) & 0x1F;
                let m = word & 0xF;
                if cond != 15 {
                    return DecodeResult::Instr(Op::AddLslImm(P1 { cond, s_flag, n, d, shift_imm, m }));
                }
            }
            // ADD_lsr_imm
            if word & 0x0FE00070 == 0x00800020 {
                matched = true;
                let cond = (word >> 28) & 0xF;
                let s_flag = (word >> 20) & 0x1;
                let n = (word >> 16) & 0xF;
                let d = (word >> 12) & 0xF;
                let shift_imm = (word >> 7) & 0x1F;
                let m = word & 0xF;
                if cond != 15 {
                    return DecodeResult::Instr(Op::AddLsrImm(P1 { cond, s_flag, n, d, shift_imm, m }));
                }
            }
            // ADC_lsl_imm
            if word & 0x0FE00070 == 0x00A00000 {
                matched = true;
                let cond = (word >> 28) & 0xF;
                let s_flag = (word >> 20) & 0x1;
                let n = (word >> 16) & 0xF;
                let d = (word >> 12) & 0xF;
                let shift_imm = (word >> 7) & 0x1F;
                let m = word & 0xF;
                if cond != 15 {
                    return DecodeResult::Instr(Op::AdcLslImm(P1 { cond, s_flag, n, d, shift_imm, m }));
                }
            }
            // ADC_lsr_imm
            if word & 0x0FE00070 == 0x00A00020 {
                matched = true;
                let cond = (word >> 28) & 0xF;
                let s_flag = (word >> 20) & 0x1;
                let n = (word >> 16) & 0xF;
                let d = (word >> 12) & 0xF;
                let shift_imm = (word >> 7) & 0x1F;
                let m = word & 0xF;
                if cond != 15 {
                    return DecodeResult::Instr(Op::AdcLsrImm(P1 { cond, s_flag, n, d, shift_imm, m }));
                }
            }
        }
        0b001 => {
            // CMP_imm__al
            if word & 0xFFF0FF00 == 0xE3500000 {
                matched = true;
                let n = (word >> 16) & 0xF;
                let immed_8 = word & 0xFF;
                let cond = 14;
                if cond != 15 {
                    return DecodeResult::Instr(Op::CmpImmAl(P2 { cond, n, immed_8 }));
                }
            }
            // MOV_imm__s0__al
            if word & 0xFFFF0F00 == 0xE3A00000 {
                matched = true;
                let d = (word >> 12) & 0xF;
                let immed_8 = word & 0xFF;
                let s_flag = 0;
                let cond = 14;
                if cond != 15 {
                    return DecodeResult::Instr(Op::MovImmS0Al(P4 { cond, s_flag, d, immed_8 }));
                }
            }
            // MOV_imm__s1__al
            if word & 0xFFFF0F00 == 0xE3B00000 {
                matched = true;
                let d = (word >> 12) & 0xF;
                let immed_8 = word & 0xFF;
                let s_flag = 1;
                let cond = 14;
                if cond != 15 {
                    return DecodeResult::Instr(Op::MovImmS1Al(P4 { cond, s_flag, d, immed_8 }));
                }
            }
            // AND_imm__s0__al
            if word & 0xFFF00F00 == 0xE2000000 {
                matched = true;
                let n = (word >> 16) & 0xF;
                let d = (word >> 12) & 0xF;
                let immed_8 = word & 0xFF;
                let s_flag = 0;
                let cond = 14;
                if cond != 15 {
                    return DecodeResult::Instr(Op::AndImmS0Al(P0 { cond, s_flag, n, d, immed_8 }));
                }
            }
            // AND_imm__s1__al
            if word & 0xFFF00F00 == 0xE2100000 {
                matched = true;
                let n = (word >> 16) & 0xF;
                let d = (word >> 12) & 0xF;
                let immed_8 = word & 0xFF;
                let s_flag = 1;
                let cond = 14;
                if cond != 15 {
                    return DecodeResult::Instr(Op::AndImmS1Al(P0 { cond, s_flag, n, d, immed_8 }));
                }
            }
            // EOR_imm__s0__al
            if word & 0xFFF00F00 == 0xE2200000 {
                matched = true;
                let n = (word >> 16) & 0xF;
                let d = (word >> 12) & 0xF;
                let immed_8 = word & 0xFF;
                let s_flag = 0;
                let cond = 14;
                if cond != 15 {
                    return DecodeResult::Instr(Op::EorImmS0Al(P0 { cond, s_flag, n, d, immed_8 }));
                }
            }
            // EOR_imm__s1__al
            if word & 0xFFF00F00 == 0xE2300000 {
                matched = true;
                let n = (word >> 16) & 0xF;
                let d = (word >> 12) & 0xF;
                let immed_8 = word & 0xFF;
                let s_flag = 1;
                let cond = 14;
                if cond != 15 {
                    return DecodeResult::Instr(Op::EorImmS1Al(P0 { cond, s_flag, n, d, immed_8 }));
                }
            }
            // SUB_imm__s0__al
            if word & 0xFFF00F00 == 0xE2400000 {
                matched = true;
                let n = (word >> 16) & 0xF;
                let d = (word >> 12) & 0xF;
                let immed_8 = word & 0xFF;
                let s_flag = 0;
                let cond = 14;
                if cond != 15 {
                    return DecodeResult::Instr(Op::SubImmS0Al(P0 { cond, s_flag, n, d, immed_8 }));
                }
            }
            // SUB_imm__s1__al
            if word & 0xFFF00F00 == 0xE2500000 {
                matched = true;
                let n = (word >> 16) & 0xF;
                let d = (word >> 12) & 0xF;
                let immed_8 = word & 0xFF;
                let s_flag = 1;
                let cond = 14;
                if cond != 15 {
                    return DecodeResult::Instr(Op::SubImmS1Al(P0 { cond, s_flag, n, d, immed_8 }));
                }
            }
            // ADD_imm__s0__al
            if word & 0xFFF00F00 == 0xE2800000 {
                matched = true;
                let n = (word >> 16) & 0xF;
                let d = (word >> 12) & 0xF;
                let immed_8 = word & 0xFF;
                let s_flag = 0;
                let cond = 14;
                if cond != 15 {
                    return DecodeResult::Instr(Op::AddImmS0Al(P0 { cond, s_flag, n, d, immed_8 }));
                }
            }
            // ADD_imm__s1__al
            if word & 0xFFF00F00 == 0xE2900000 {
                matched = true;
                let n = (word >> 16) & 0xF;
                let d = (word >> 12) & 0xF;
                let immed_8 = word & 0xFF;
                let s_flag = 1;
                let cond = 14;
                if cond != 15 {
                    return DecodeResult::Instr(Op::AddImmS1Al(P0 { cond, s_flag, n, d, immed_8 }));
                }
            }
            // ADC_imm__s0__al
            if word & 0xFFF00F00 == 0xE2A00000 {
                matched = true;
                let n = (word >> 16) & 0xF;
                let d = (word >> 12) & 0xF;
                let immed_8 = word & 0xFF;
                let s_flag = 0;
                let cond = 14;
                if cond != 15 {
                    return DecodeResult::Instr(Op::AdcImmS0Al(P0 { cond, s_flag, n, d, immed_8 }));
                }
            }
            // ADC_imm__s1__al
            if word & 0xFFF00F00 == 0xE2B00000 {
                matched = true;
                let n = (word >> 16) & 0xF;
                let d = (word >> 12) & 0xF;
                let immed_8 = word & 0xFF;
                let s_flag = 1;
                let cond = 14;
                if cond != 15 {
                    return DecodeResult::Instr(Op::AdcImmS1Al(P0 { cond, s_flag, n, d, immed_8 }));
                }
            }
            // CMP_imm
            if word & 0x0FF0FF00 == 0x03500000 {
                matched = true;
                let cond = (word >> 28) & 0xF;
                let n = (word >> 16) & 0xF;
                let immed_8 = word & 0xFF;
                if cond != 15 {
                    return DecodeResult::Instr(Op::CmpImm(P2 { cond, n, immed_8 }));
                }
            }
            // MOV_imm__s0
            if word & 0x0FFF0F00 == 0x03A00000 {
                matched = true;
                let cond = (word >> 28) & 0xF;
                let d = (word >> 12) & 0xF;
                let immed_8 = word & 0xFF;
                let s_flag = 0;
                if cond != 15 {
                    return DecodeResult::Instr(Op::MovImmS0(P4 { cond, s_flag, d, immed_8 }));
                }
            }
            // MOV_imm__s1
            if word & 0x0FFF0F00 == 0x03B00000 {
                matched = true;
                let cond = (word >> 28) & 0xF;
                let d = (word >> 12) & 0xF;
                let immed_8 = word & 0xFF;
                let s_flag = 1;
                if cond != 15 {
                    return DecodeResult::Instr(Op::MovImmS1(P4 { cond, s_flag, d, immed_8 }));
                }
            }
            // MOV_imm
            if word & 0x0FEF0F00 == 0x03A00000 {
                matched = true;
                let cond = (word >> 28) & 0xF;
                let s_flag = (word >> 20) & 0x1;
                let d = (word >> 12) & 0xF;
                let immed_8 = word & 0xFF;
                if cond != 15 {
                    return DecodeResult::Instr(Op::MovImm(P4 { cond, s_flag, d, immed_8 }));
                }
            }
            // AND_imm__s0
            if word & 0x0FF00F00 == 0x02000000 {
                matched = true;
                let cond = (word >> 28) & 0xF;
                let n = (word >> 16) & 0xF;
                let d = (word >> 12) & 0xF;
                let immed_8 = word & 0xFF;
                let s_flag = 0;
                if cond != 15 {
                    return DecodeResult::Instr(Op::AndImmS0(P0 { cond, s_flag, n, d, immed_8 }));
                }
            }
            // AND_imm__s1
            if word & 0x0FF00F00 == 0x02100000 {
                matched = true;
                let cond = (word >> 28) & 0xF;
                let n = (word >> 16) & 0xF;
                let d = (word >> 12) & 0xF;
                let immed_8 = word & 0xFF;
                let s_flag = 1;
                if cond != 15 {
                    return DecodeResult::Instr(Op::AndImmS1(P0 { cond, s_flag, n, d, immed_8 }));
                }
            }
            // EOR_imm__s0
            if word & 0x0FF00F00 == 0x02200000 {
                matched = true;
                let cond = (word >> 28) & 0xF;
                let n = (word >> 16) & 0xF;
                let d = (word >> 12) & 0xF;
                let immed_8 = word & 0xFF;
                let s_flag = 0;
                if cond != 15 {
                    return DecodeResult::Instr(Op::EorImmS0(P0 { cond, s_flag, n, d, immed_8 }));
                }
            }
            // EOR_imm__s1
            if word & 0x0FF00F00 == 0x02300000 {
                matched = true;
                let cond = (word >> 28) & 0xF;
                let n = (word >> 16) & 0xF;
                let d = (word >> 12) & 0xF;
                let immed_8 = word & 0xFF;
                let s_flag = 1;
                if cond != 15 {
                    return DecodeResult::Instr(Op::EorImmS1(P0 { cond, s_flag, n, d, immed_8 }));
                }
            }
            // SUB_imm__s0
            if word & 0x0FF00F00 == 0x02400000 {
                matched = true;
                let cond = (word >> 28) & 0xF;
                let n = (word >> 16) & 0xF;
                let d = (word >> 12) & 0xF;
                let immed_8 = word & 0xFF;
                let s_flag = 0;
                if cond != 15 {
                    return DecodeResult::Instr(Op::SubImmS0(P0 { cond, s_flag, n, d, immed_8 }));
                }
            }
            // SUB_imm__s1
            if word & 0x0FF00F00 == 0x02500000 {
                matched = true;
                let cond = (word >> 28) & 0xF;
                let n = (word >> 16) & 0xF;
                let d = (word >> 12) & 0xF;
                let immed_8 = word & 0xFF;
                let s_flag = 1;
                if cond != 15 {
                    return DecodeResult::Instr(Op::SubImmS1(P0 { cond, s_flag, n, d, immed_8 }));
                }
            }
            // ADD_imm__s0
            if word & 0x0FF00F00 == 0x02800000 {
                matched = true;
                let cond = (word >> 28) & 0xF;
                let n = (word >> 16) & 0xF;
                let d = (word >> 12) & 0xF;
                let immed_8 = word & 0xFF;
                let s_flag = 0;
                if cond != 15 {
                    return DecodeResult::Instr(Op::AddImmS0(P0 { cond, s_flag, n, d, immed_8 }));
                }
            }
            // ADD_imm__s1
            if word & 0x0FF00F00 == 0x02900000 {
                matched = true;
                let cond = (word >> 28) & 0xF;
                let n = (word >> 16) & 0xF;
                let d = (word >> 12) & 0xF;
                let immed_8 = word & 0xFF;
                let s_flag = 1;
                if cond != 15 {
                    return DecodeResult::Instr(Op::AddImmS1(P0 { cond, s_flag, n, d, immed_8 }));
                }
            }
            // ADC_imm__s0
            if word & 0x0FF00F00 == 0x02A00000 {
                matched = true;
                let cond = (word >> 28) & 0xF;
                let n = (word >> 16) & 0xF;
                let d = (word >> 12) & 0xF;
                let immed_8 = word & 0xFF;
                let s_flag = 0;
                if cond != 15 {
                    return DecodeResult::Instr(Op::AdcImmS0(P0 { cond, s_flag, n, d, immed_8 }));
                }
            }
            // ADC_imm__s1
            if word & 0x0FF00F00 == 0x02B00000 {
                matched = true;
                let cond = (word >> 28) & 0xF;
                let n = (word >> 16) & 0xF;
                let d = (word >> 12) & 0xF;
                let immed_8 = word & 0xFF;
                let s_flag = 1;
                if cond != 15 {
                    return DecodeResult::Instr(Op::AdcImmS1(P0 { cond, s_flag, n, d, immed_8 }));
                }
            }
            // AND_imm
            if word & 0x0FE00F00 == 0x02000000 {
                matched = true;
                let cond = (word >> 28) & 0xF;
                let s_flag = (word >> 20) & 0x1;
                let n = (word >> 16) & 0xF;
                let d = (word >> 12) & 0xF;
                let immed_8 = word & 0xFF;
                if cond != 15 {
                    return DecodeResult::Instr(Op::AndImm(P0 { cond, s_flag, n, d, immed_8 }));
                }
            }
            // EOR_imm
            if word & 0x0FE00F00 == 0x02200000 {
                matched = true;
                let cond = (word >> 28) & 0xF;
                let s_flag = (word >> 20) & 0x1;
                let n = (word >> 16) & 0xF;
                let d = (word >> 12) & 0xF;
                let immed_8 = word & 0xFF;
                if cond != 15 {
                    return DecodeResult::Instr(Op::EorImm(P0 { cond, s_flag, n, d, immed_8 }));
                }
            }
            // SUB_imm
            if word & 0x0FE00F00 == 0x02400000 {
                matched = true;
                let cond = (word >> 28) & 0xF;
                let s_flag = (word >> 20) & 0x1;
                let n = (word >> 16) & 0xF;
                let d = (word >> 12) & 0xF;
                let immed_8 = word & 0xFF;
                if cond != 15 {
                    return DecodeResult::Instr(Op::SubImm(P0 { cond, s_flag, n, d, immed_8 }));
                }
            }
            // ADD_imm
            if word & 0x0FE00F00 == 0x02800000 {
                matched = true;
                let cond = (word >> 28) & 0xF;
                let s_flag = (word >> 20) & 0x1;
                let n = (word >> 16) & 0xF;
                let d = (word >> 12) & 0xF;
                let immed_8 = word & 0xFF;
                if cond != 15 {
                    return DecodeResult::Instr(Op::AddImm(P0 { cond, s_flag, n, d, immed_8 }));
                }
            }
            // ADC_imm
            if word & 0x0FE00F00 == 0x02A00000 {
                matched = true;
                let cond = (word >> 28) & 0xF;
                let s_flag = (word >> 20) & 0x1;
                let n = (word >> 16) & 0xF;
                let d = (word >> 12) & 0xF;
                let immed_8 = word & 0xFF;
                if cond != 15 {
                    return DecodeResult::Instr(Op::AdcImm(P0 { cond, s_flag, n, d, immed_8 }));
                }
            }
        }
        0b010 => {
            // LDR_off_imm__al
            if word & 0xFFF00000 == 0xE5900000 {
                matched = true;
                let n = (word >> 16) & 0xF;
                let d = (word >> 12) & 0xF;
                let offset_12 = word & 0xFFF;
                let cond = 14;
                if cond != 15 {
                    return DecodeResult::Instr(Op::LdrOffImmAl(P8 { cond, n, d, offset_12 }));
                }
            }
            // LDR_pre_imm__al
            if word & 0xFFF00000 == 0xE5B00000 {
                matched = true;
                let n = (word >> 16) & 0xF;
                let d = (word >> 12) & 0xF;
                let offset_12 = word & 0xFFF;
                let cond = 14;
                if cond != 15 && n != 15 && d != n {
                    return DecodeResult::Instr(Op::LdrPreImmAl(P8 { cond, n, d, offset_12 }));
                }
            }
            // LDR_post_imm__al
            if word & 0xFFF00000 == 0xE4900000 {
                matched = true;
                let n = (word >> 16) & 0xF;
                let d = (word >> 12) & 0xF;
                let offset_12 = word & 0xFFF;
                let cond = 14;
                if cond != 15 && n != 15 && d != n {
                    return DecodeResult::Instr(Op::LdrPostImmAl(P8 { cond, n, d, offset_12 }));
                }
            }
            // LDRB_off_imm__al
            if word & 0xFFF00000 == 0xE5D00000 {
                matched = true;
                let n = (word >> 16) & 0xF;
                let d = (word >> 12) & 0xF;
                let offset_12 = word & 0xFFF;
                let cond = 14;
                if cond != 15 && d != 15 {
                    return DecodeResult::Instr(Op::LdrbOffImmAl(P8 { cond, n, d, offset_12 }));
                }
            }
            // LDRB_pre_imm__al
            if word & 0xFFF00000 == 0xE5F00000 {
                matched = true;
                let n = (word >> 16) & 0xF;
                let d = (word >> 12) & 0xF;
                let offset_12 = word & 0xFFF;
                let cond = 14;
                if cond != 15 && d != 15 && n != 15 && d != n {
                    return DecodeResult::Instr(Op::LdrbPreImmAl(P8 { cond, n, d, offset_12 }));
                }
            }
            // LDRB_post_imm__al
            if word & 0xFFF00000 == 0xE4D00000 {
                matched = true;
                let n = (word >> 16) & 0xF;
                let d = (word >> 12) & 0xF;
                let offset_12 = word & 0xFFF;
                let cond = 14;
                if cond != 15 && d != 15 && n != 15 && d != n {
                    return DecodeResult::Instr(Op::LdrbPostImmAl(P8 { cond, n, d, offset_12 }));
                }
            }
            // STR_off_imm__al
            if word & 0xFFF00000 == 0xE5800000 {
                matched = true;
                let n = (word >> 16) & 0xF;
                let d = (word >> 12) & 0xF;
                let offset_12 = word & 0xFFF;
                let cond = 14;
                if cond != 15 {
                    return DecodeResult::Instr(Op::StrOffImmAl(P8 { cond, n, d, offset_12 }));
                }
            }
            // STR_pre_imm__al
            if word & 0xFFF00000 == 0xE5A00000 {
                matched = true;
                let n = (word >> 16) & 0xF;
                let d = (word >> 12) & 0xF;
                let offset_12 = word & 0xFFF;
                let cond = 14;
                if cond != 15 && n != 15 && d != n {
                    return DecodeResult::Instr(Op::StrPreImmAl(P8 { cond, n, d, offset_12 }));
                }
            }
            // STR_post_imm__al
            if word & 0xFFF00000 == 0xE4800000 {
                matched = true;
                let n = (word >> 16) & 0xF;
                let d = (word >> 12) & 0xF;
                let offset_12 = word & 0xFFF;
                let cond = 14;
                if cond != 15 && n != 15 && d != n {
                    return DecodeResult::Instr(Op::StrPostImmAl(P8 { cond, n, d, offset_12 }));
                }
            }
            // LDRBT__al
            if word & 0xFFF00000 == 0xE4F00000 {
                matched = true;
                let n = (word >> 16) & 0xF;
                let d = (word >> 12) & 0xF;
                let offset_12 = word & 0xFFF;
                let cond = 14;
                if cond != 15 && n != 15 && d != n {
                    return DecodeResult::Instr(Op::LdrbtAl(P8 { cond, n, d, offset_12 }));
                }
            }
            // LDR_off_imm
            if word & 0x0FF00000 == 0x05900000 {
                matched = true;
                let cond = (word >> 28) & 0xF;
                let n = (word >> 16) & 0xF;
                let d = (word >> 12) & 0xF;
                let offset_12 = word & 0xFFF;
                if cond != 15 {
                    return DecodeResult::Instr(Op::LdrOffImm(P8 { cond, n, d, offset_12 }));
                }
            }
            // LDR_pre_imm
            if word & 0x0FF00000 == 0x05B00000 {
                matched = true;
                let cond = (word >> 28) & 0xF;
                let n = (word >> 16) & 0xF;
                let d = (word >> 12) & 0xF;
                let offset_12 = word & 0xFFF;
                if cond != 15 && n != 15 && d != n {
                    return DecodeResult::Instr(Op::LdrPreImm(P8 { cond, n, d, offset_12 }));
                }
            }
            // LDR_post_imm
            if word & 0x0FF00000 == 0x04900000 {
                matched = true;
                let cond = (word >> 28) & 0xF;
                let n = (word >> 16) & 0xF;
                let d = (word >> 12) & 0xF;
                let offset_12 = word & 0xFFF;
                if cond != 15 && n != 15 && d != n {
                    return DecodeResult::Instr(Op::LdrPostImm(P8 { cond, n, d, offset_12 }));
                }
            }
            // LDRB_off_imm
            if word & 0x0FF00000 == 0x05D00000 {
                matched = true;
                let cond = (word >> 28) & 0xF;
                let n = (word >> 16) & 0xF;
                let d = (word >> 12) & 0xF;
                let offset_12 = word & 0xFFF;
                if cond != 15 && d != 15 {
                    return DecodeResult::Instr(Op::LdrbOffImm(P8 { cond, n, d, offset_12 }));
                }
            }
            // LDRB_pre_imm
            if word & 0x0FF00000 == 0x05F00000 {
                matched = true;
                let cond = (word >> 28) & 0xF;
                let n = (word >> 16) & 0xF;
                let d = (word >> 12) & 0xF;
                let offset_12 = word & 0xFFF;
                if cond != 15 && d != 15 && n != 15 && d != n {
                    return DecodeResult::Instr(Op::LdrbPreImm(P8 { cond, n, d, offset_12 }));
                }
            }
            // LDRB_post_imm
            if word & 0x0FF00000 == 0x04D00000 {
                matched = true;
                let cond = (word >> 28) & 0xF;
                let n = (word >> 16) & 0xF;
                let d = (word >> 12) & 0xF;
                let offset_12 = word & 0xFFF;
                if cond != 15 && d != 15 && n != 15 && d != n {
                    return DecodeResult::Instr(Op::LdrbPostImm(P8 { cond, n, d, offset_12 }));
                }
            }
            // STR_off_imm
            if word & 0x0FF00000 == 0x05800000 {
                matched = true;
                let cond = (word >> 28) & 0xF;
                let n = (word >> 16) & 0xF;
                let d = (word >> 12) & 0xF;
                let offset_12 = word & 0xFFF;
                if cond != 15 {
                    return DecodeResult::Instr(Op::StrOffImm(P8 { cond, n, d, offset_12 }));
                }
            }
            // STR_pre_imm
            if word & 0x0FF00000 == 0x05A00000 {
                matched = true;
                let cond = (word >> 28) & 0xF;
                let n = (word >> 16) & 0xF;
                let d = (word >> 12) & 0xF;
                let offset_12 = word & 0xFFF;
                if cond != 15 && n != 15 && d != n {
                    return DecodeResult::Instr(Op::StrPreImm(P8 { cond, n, d, offset_12 }));
                }
            }
            // STR_post_imm
            if word & 0x0FF00000 == 0x04800000 {
                matched = true;
                let cond = (word >> 28) & 0xF;
                let n = (word >> 16) & 0xF;
                let d = (word >> 12) & 0xF;
                let offset_12 = word & 0xFFF;
                if cond != 15 && n != 15 && d != n {
                    return DecodeResult::Instr(Op::StrPostImm(P8 { cond, n, d, offset_12 }));
                }
            }
            // LDRBT
            if word & 0x0FF00000 == 0x04F00000 {
                matched = true;
                let cond = (word >> 28) & 0xF;
                let n = (word >> 16) & 0xF;
                let d = (word >> 12) & 0xF;
                let offset_12 = word & 0xFFF;
                if cond != 15 && n != 15 && d != n {
                    return DecodeResult::Instr(Op::Ldrbt(P8 { cond, n, d, offset_12 }));
                }
            }
        }
        0b011 => {
            // HALT
            if word & 0xFFFFFFFF == 0xE6000000 {
                return DecodeResult::Instr(Op::Halt(P13));
            }
            // LDR_pre_reg__al
            if word & 0xFFF00FF0 == 0xE7B00000 {
                matched = true;
                let n = (word >> 16) & 0xF;
                let d = (word >> 12) & 0xF;
                let m = word & 0xF;
                let cond = 14;
                if cond != 15 && n != 15 && d != n {
                    return DecodeResult::Instr(Op::LdrPreRegAl(P7 { cond, n, d, m }));
                }
            }
            // LDRB_pre_reg__al
            if word & 0xFFF00FF0 == 0xE7F00000 {
                matched = true;
                let n = (word >> 16) & 0xF;
                let d = (word >> 12) & 0xF;
                let m = word & 0xF;
                let cond = 14;
                if cond != 15 && d != 15 && n != 15 && d != n {
                    return DecodeResult::Instr(Op::LdrbPreRegAl(P7 { cond, n, d, m }));
                }
            }
            // STR_pre_reg__al
            if word & 0xFFF00FF0 == 0xE7A00000 {
                matched = true;
                let n = (word >> 16) & 0xF;
                let d = (word >> 12) & 0xF;
                let m = word & 0xF;
                let cond = 14;
                if cond != 15 && n != 15 && d != n {
                    return DecodeResult::Instr(Op::StrPreRegAl(P7 { cond, n, d, m }));
                }
            }
            // UXTAH__al
            if word & 0xFFF00FF0 == 0xE6F00070 {
                matched = true;
                let n = (word >> 16) & 0xF;
                let d = (word >> 12) & 0xF;
                let m = word & 0xF;
                let cond = 14;
                if cond != 15 && n != 15 {
                    return DecodeResult::Instr(Op::UxtahAl(P7 { cond, n, d, m }));
                }
            }
            // UXTH__al
            if word & 0xFFF00FF0 == 0xE6F00070 {
                matched = true;
                let n = (word >> 16) & 0xF;
                let d = (word >> 12) & 0xF;
                let m = word & 0xF;
                let cond = 14;
                if cond != 15 && !matches!(n, 0 | 1 | 2 | 3 | 4 | 5 | 6 | 7 | 8 | 9 | 10 | 11 | 12 | 13 | 14) {
                    return DecodeResult::Instr(Op::UxthAl(P7 { cond, n, d, m }));
                }
            }
            // LDR_pre_reg
            if word & 0x0FF00FF0 == 0x07B00000 {
                matched = true;
                let cond = (word >> 28) & 0xF;
                let n = (word >> 16) & 0xF;
                let d = (word >> 12) & 0xF;
                let m = word & 0xF;
                if cond != 15 && n != 15 && d != n {
                    return DecodeResult::Instr(Op::LdrPreReg(P7 { cond, n, d, m }));
                }
            }
            // LDRB_pre_reg
            if word & 0x0FF00FF0 == 0x07F00000 {
                matched = true;
                let cond = (word >> 28) & 0xF;
                let n = (word >> 16) & 0xF;
                let d = (word >> 12) & 0xF;
                let m = word & 0xF;
                if cond != 15 && d != 15 && n != 15 && d != n {
                    return DecodeResult::Instr(Op::LdrbPreReg(P7 { cond, n, d, m }));
                }
            }
            // STR_pre_reg
            if word & 0x0FF00FF0 == 0x07A00000 {
                matched = true;
                let cond = (word >> 28) & 0xF;
                let n = (word >> 16) & 0xF;
                let d = (word >> 12) & 0xF;
                let m = word & 0xF;
                if cond != 15 && n != 15 && d != n {
                    return DecodeResult::Instr(Op::StrPreReg(P7 { cond, n, d, m }));
                }
            }
            // UXTAH
            if word & 0x0FF00FF0 == 0x06F00070 {
                matched = true;
                let cond = (word >> 28) & 0xF;
                let n = (word >> 16) & 0xF;
                let d = (word >> 12) & 0xF;
                let m = word & 0xF;
                if cond != 15 && n != 15 {
                    return DecodeResult::Instr(Op::Uxtah(P7 { cond, n, d, m }));
                }
            }
            // UXTH
            if word & 0x0FF00FF0 == 0x06F00070 {
                matched = true;
                let cond = (word >> 28) & 0xF;
                let n = (word >> 16) & 0xF;
                let d = (word >> 12) & 0xF;
                let m = word & 0xF;
                if cond != 15 && !matches!(n, 0 | 1 | 2 | 3 | 4 | 5 | 6 | 7 | 8 | 9 | 10 | 11 | 12 | 13 | 14) {
                    return DecodeResult::Instr(Op::Uxth(P7 { cond, n, d, m }));
                }
            }
        }
        0b100 => {
            // SRS_ia__al
            if word & 0xFFDFFFF0 == 0xE8CD0000 {
                matched = true;
                let w_flag = (word >> 21) & 0x1;
                let mode = word & 0xF;
                let cond = 14;
                if cond != 15 && !matches!(mode, 6 | 7 | 8 | 9 | 10 | 11 | 12 | 13 | 14 | 15) {
                    return DecodeResult::Instr(Op::SrsIaAl(P10 { cond, w_flag, mode }));
                }
            }
            // SRS_db__al
            if word & 0xFFDFFFF0 == 0xE94D0000 {
                matched = true;
                let w_flag = (word >> 21) & 0x1;
                let mode = word & 0xF;
                let cond = 14;
                if cond != 15 && !matches!(mode, 6 | 7 | 8 | 9 | 10 | 11 | 12 | 13 | 14 | 15) {
                    return DecodeResult::Instr(Op::SrsDbAl(P10 { cond, w_flag, mode }));
                }
            }
            // RFE_ia__al
            if word & 0xFFD0FFFF == 0xE8900000 {
                matched = true;
                let w_flag = (word >> 21) & 0x1;
                let n = (word >> 16) & 0xF;
                let cond = 14;
                if cond != 15 && n != 15 {
                    return DecodeResult::Instr(Op::RfeIaAl(P11 { cond, w_flag, n }));
                }
            }
            // RFE_db__al
            if word & 0xFFD0FFFF == 0xE9100000 {
                matched = true;
                let w_flag = (word >> 21) & 0x1;
                let n = (word >> 16) & 0xF;
                let cond = 14;
                if cond != 15 && n != 15 {
                    return DecodeResult::Instr(Op::RfeDbAl(P11 { cond, w_flag, n }));
                }
            }
            // SRS_ia
            if word & 0x0FDFFFF0 == 0x08CD0000 {
                matched = true;
                let cond = (word >> 28) & 0xF;
                let w_flag = (word >> 21) & 0x1;
                let mode = word & 0xF;
                if cond != 15 && !matches!(mode, 6 | 7 | 8 | 9 | 10 | 11 | 12 | 13 | 14 | 15) {
                    return DecodeResult::Instr(Op::SrsIa(P10 { cond, w_flag, mode }));
                }
            }
            // SRS_db
            if word & 0x0FDFFFF0 == 0x094D0000 {
                matched = true;
                let cond = (word >> 28) & 0xF;
                let w_flag = (word >> 21) & 0x1;
                let mode = word & 0xF;
                if cond != 15 && !matches!(mode, 6 | 7 | 8 | 9 | 10 | 11 | 12 | 13 | 14 | 15) {
                    return DecodeResult::Instr(Op::SrsDb(P10 { cond, w_flag, mode }));
                }
            }
            // RFE_ia
            if word & 0x0FD0FFFF == 0x08900000 {
                matched = true;
                let cond = (word >> 28) & 0xF;
                let w_flag = (word >> 21) & 0x1;
                let n = (word >> 16) & 0xF;
                if cond != 15 && n != 15 {
                    return DecodeResult::Instr(Op::RfeIa(P11 { cond, w_flag, n }));
                }
            }
            // RFE_db
            if word & 0x0FD0FFFF == 0x09100000 {
                matched = true;
                let cond = (word >> 28) & 0xF;
                let w_flag = (word >> 21) & 0x1;
                let n = (word >> 16) & 0xF;
                if cond != 15 && n != 15 {
                    return DecodeResult::Instr(Op::RfeDb(P11 { cond, w_flag, n }));
                }
            }
            // LDM_ia__al
            if word & 0xFFD00000 == 0xE8900000 {
                matched = true;
                let w_flag = (word >> 21) & 0x1;
                let n = (word >> 16) & 0xF;
                let reglist = word & 0xFFFF;
                let cond = 14;
                let nb_reg_x4 = eval::nb_of_set_bits(reglist).wrapping_mul(4u32);
                if cond != 15 && reglist != 0 && n != 15 {
                    return DecodeResult::Instr(Op::LdmIaAl(P9 { cond, w_flag, n, reglist, nb_reg_x4 }));
                }
            }
            // LDM_db__al
            if word & 0xFFD00000 == 0xE9100000 {
                matched = true;
                let w_flag = (word >> 21) & 0x1;
                let n = (word >> 16) & 0xF;
                let reglist = word & 0xFFFF;
                let cond = 14;
                let nb_reg_x4 = eval::nb_of_set_bits(reglist).wrapping_mul(4u32);
                if cond != 15 && reglist != 0 && n != 15 {
                    return DecodeResult::Instr(Op::LdmDbAl(P9 { cond, w_flag, n, reglist, nb_reg_x4 }));
                }
            }
            // STM_ia__al
            if word & 0xFFD00000 == 0xE8800000 {
                matched = true;
                let w_flag = (word >> 21) & 0x1;
                let n = (word >> 16) & 0xF;
                let reglist = word & 0xFFFF;
                let cond = 14;
                let nb_reg_x4 = eval::nb_of_set_bits(reglist).wrapping_mul(4u32);
                if cond != 15 && reglist != 0 && n != 15 {
                    return DecodeResult::Instr(Op::StmIaAl(P9 { cond, w_flag, n, reglist, nb_reg_x4 }));
                }
            }
            // STM_db__al
            if word & 0xFFD00000 == 0xE9000000 {
                matched = true;
                let w_flag = (word >> 21) & 0x1;
                let n = (word >> 16) & 0xF;
                let reglist = word & 0xFFFF;
                let cond = 14;
                let nb_reg_x4 = eval::nb_of_set_bits(reglist).wrapping_mul(4u32);
                if cond != 15 && reglist != 0 && n != 15 {
                    return DecodeResult::Instr(Op::StmDbAl(P9 { cond, w_flag, n, reglist, nb_reg_x4 }));
                }
            }
            // LDMX_ia__al
            if word & 0xFFD00000 == 0xE8D00000 {
                matched = true;
                let w_flag = (word >> 21) & 0x1;
                let n = (word >> 16) & 0xF;
                let reglist = word & 0xFFFF;
                let cond = 14;
                let nb_reg_x4 = eval::nb_of_set_bits(reglist).wrapping_mul(4u32);
                if cond != 15 && reglist != 0 && n != 15 {
                    return DecodeResult::Instr(Op::LdmxIaAl(P9 { cond, w_flag, n, reglist, nb_reg_x4 }));
                }
            }
            // LDMX_db__al
            if word & 0xFFD00000 == 0xE9500000 {
                matched = true;
                let w_flag = (word >> 21) & 0x1;
                let n = (word >> 16) & 0xF;
                let reglist = word & 0xFFFF;
                let cond = 14;
                let nb_reg_x4 = eval::nb_of_set_bits(reglist).wrapping_mul(4u32);
                if cond != 15 && reglist != 0 && n != 15 {
                    return DecodeResult::Instr(Op::LdmxDbAl(P9 { cond, w_flag, n, reglist, nb_reg_x4 }));
                }
            }
            // LDM_ia
            if word & 0x0FD00000 == 0x08900000 {
                matched = true;
                let cond = (word >> 28) & 0xF;
                let w_flag = (word >> 21) & 0x1;
                let n = (word >> 16) & 0xF;
                let reglist = word & 0xFFFF;
                let nb_reg_x4 = eval::nb_of_set_bits(reglist).wrapping_mul(4u32);
                if cond != 15 && reglist != 0 && n != 15 {
                    return DecodeResult::Instr(Op::LdmIa(P9 { cond, w_flag, n, reglist, nb_reg_x4 }));
                }
            }
            // LDM_db
            if word & 0x0FD00000 == 0x09100000 {
                matched = true;
                let cond = (word >> 28) & 0xF;
                let w_flag = (word >> 21) & 0x1;
                let n = (word >> 16) & 0xF;
                let reglist = word & 0xFFFF;
                let nb_reg_x4 = eval::nb_of_set_bits(reglist).wrapping_mul(4u32);
                if cond != 15 && reglist != 0 && n != 15 {
                    return DecodeResult::Instr(Op::LdmDb(P9 { cond, w_flag, n, reglist, nb_reg_x4 }));
                }
            }
            // STM_ia
            if word & 0x0FD00000 == 0x08800000 {
                matched = true;
                let cond = (word >> 28) & 0xF;
                let w_flag = (word >> 21) & 0x1;
                let n = (word >> 16) & 0xF;
                let reglist = word & 0xFFFF;
                let nb_reg_x4 = eval::nb_of_set_bits(reglist).wrapping_mul(4u32);
                if cond != 15 && reglist != 0 && n != 15 {
                    return DecodeResult::Instr(Op::StmIa(P9 { cond, w_flag, n, reglist, nb_reg_x4 }));
                }
            }
            // STM_db
            if word & 0x0FD00000 == 0x09000000 {
                matched = true;
                let cond = (word >> 28) & 0xF;
                let w_flag = (word >> 21) & 0x1;
                let n = (word >> 16) & 0xF;
                let reglist = word & 0xFFFF;
                let nb_reg_x4 = eval::nb_of_set_bits(reglist).wrapping_mul(4u32);
                if cond != 15 && reglist != 0 && n != 15 {
                    return DecodeResult::Instr(Op::StmDb(P9 { cond, w_flag, n, reglist, nb_reg_x4 }));
                }
            }
            // LDMX_ia
            if word & 0x0FD00000 == 0x08D00000 {
                matched = true;
                let cond = (word >> 28) & 0xF;
                let w_flag = (word >> 21) & 0x1;
                let n = (word >> 16) & 0xF;
                let reglist = word & 0xFFFF;
                let nb_reg_x4 = eval::nb_of_set_bits(reglist).wrapping_mul(4u32);
                if cond != 15 && reglist != 0 && n != 15 {
                    return DecodeResult::Instr(Op::LdmxIa(P9 { cond, w_flag, n, reglist, nb_reg_x4 }));
                }
            }
            // LDMX_db
            if word & 0x0FD00000 == 0x09500000 {
                matched = true;
                let cond = (word >> 28) & 0xF;
                let w_flag = (word >> 21) & 0x1;
                let n = (word >> 16) & 0xF;
                let reglist = word & 0xFFFF;
                let nb_reg_x4 = eval::nb_of_set_bits(reglist).wrapping_mul(4u32);
                if cond != 15 && reglist != 0 && n != 15 {
                    return DecodeResult::Instr(Op::LdmxDb(P9 { cond, w_flag, n, reglist, nb_reg_x4 }));
                }
            }
        }
        0b101 => {
            // B__al
            if word & 0xFF000000 == 0xEA000000 {
                matched = true;
                let signed_immed_24 = word & 0xFFFFFF;
                let cond = 14;
                if cond != 15 {
                    return DecodeResult::Instr(Op::BAl(P12 { cond, signed_immed_24 }));
                }
            }
            // BL__al
            if word & 0xFF000000 == 0xEB000000 {
                matched = true;
                let signed_immed_24 = word & 0xFFFFFF;
                let cond = 14;
                if cond != 15 {
                    return DecodeResult::Instr(Op::BlAl(P12 { cond, signed_immed_24 }));
                }
            }
            // B
            if word & 0x0F000000 == 0x0A000000 {
                matched = true;
                let cond = (word >> 28) & 0xF;
                let signed_immed_24 = word & 0xFFFFFF;
                if cond != 15 {
                    return DecodeResult::Instr(Op::B(P12 { cond, signed_immed_24 }));
                }
            }
            // BL
            if word & 0x0F000000 == 0x0B000000 {
                matched = true;
                let cond = (word >> 28) & 0xF;
                let signed_immed_24 = word & 0xFFFFFF;
                if cond != 15 {
                    return DecodeResult::Instr(Op::Bl(P12 { cond, signed_immed_24 }));
                }
            }
        }
        _ => {}
    }
    if matched {
        DecodeResult::Unpredictable
    } else {
        DecodeResult::Undefined
    }
}
