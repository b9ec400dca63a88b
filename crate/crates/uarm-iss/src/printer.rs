// Generated by `issforge gen-iss`. Do not edit; regenerate instead.
//! Assembly printers, one per base flat instruction, following the
//! shared rendering conventions.

use issforge_core::sim::render;

use crate::params::*;

pub fn and_imm(p: &P0) -> String {
    let mut out = String::from("AND");
    if p.cond != 14 {
        out.push_str(render::condition(p.cond));
    }
    if p.s_flag != 0 {
        out.push_str("S");
    }
    out.push_str(" ");
    out.push_str(&render::register(p.d));
    out.push_str(",");
    out.push_str(&render::register(p.n));
    out.push_str(",");
    out.push_str("#");
    out.push_str(&render::unsigned_immediate(p.immed_8));
    out
}

pub fn and_lsl_imm(p: &P1) -> String {
    let mut out = String::from("AND");
    if p.cond != 14 {
        out.push_str(render::condition(p.cond));
    }
    if p.s_flag != 0 {
        out.push_str("S");
    }
    out.push_str(" ");
    out.push_str(&render::register(p.d));
    out.push_str(",");
    out.push_str(&render::register(p.n));
    out.push_str(",");
    out.push_str(&render::register(p.m));
    out.push_str(",LSL #");
    out.push_str(&render::unsigned_immediate(p.shift_imm));
    out
}

pub fn and_lsr_imm(p: &P1) -> String {
    let mut out = String::from("AND");
    if p.cond != 14 {
        out.push_str(render::condition(p.cond));
    }
    if p.s_flag != 0 {
        out.push_str("S");
    }
    out.push_str(" ");
    out.push_str(&render::register(p.d));
    out.push_str(",");
    out.push_str(&render::register(p.n));
    out.push_str(",");
    out.push_str(&render::register(p.m));
    out.push_str(",LSR #");
    out.push_str(&render::unsigned_immediate(p.shift_imm));
    out
}

pub fn eor_imm(p: &P0) -> String {
    let mut out = String::from("EOR");
    if p.cond != 14 {
        out.push_str(render::condition(p.cond));
    }
    if p.s_flag != 0 {
        out.push_str("S");
    }
    out.push_str(" ");
    out.push_str(&render::register(p.d));
    out.push_str(",");
    out.push_str(&render::register(p.n));
    out.push_str(",");
    out.push_str("#");
    out.push_str(&render::unsigned_immediate(p.immed_8));
    out
}

pub fn eor_lsl_imm(p: &P1) -> String {
    let mut out = String::from("EOR");
    if p.cond != 14 {
        out.push_str(render::condition(p.cond));
    }
    if p.s_flag != 0 {
        out.push_str("S");
    }
    out.push_str(" ");
    out.push_str(&render::register(p.d));
    out.push_str(",");
    out.push_str(&render::register(p.n));
    out.push_str(",");
    out.push_str(&render::register(p.m));
    out.push_str(",LSL #");
    out.push_str(&render::unsigned_immediate(p.shift_imm));
    out
}

pub fn eor_lsr_imm(p: &P1) -> String {
    let mut out = String::from("EOR");
    if p.cond != 14 {
        out.push_str(render::condition(p.cond));
    }
    if p.s_flag != 0 {
        out.push_str("S");
    }
    out.push_str(" ");
    out.push_str(&render::register(p.d));
    out.push_str(",");
    out.push_str(&render::register(p.n));
    out.push_str(",");
    out.push_str(&render::register(p.m));
    out.push_str(",LSR #");
    out.push_str(&render::unsigned_immediate(p.shift_imm));
    out
}

pub fn sub_imm(p: &P0) -> String {
    let mut out = String::from("SUB");
    if p.cond != 14 {
        out.push_str(render::condition(p.cond));
    }
    if p.s_flag != 0 {
        out.push_str("S");
    }
    out.push_str(" ");
    out.push_str(&render::register(p.d));
    out.push_str(",");
    out.push_str(&render::register(p.n));
    out.push_str(",");
    out.push_str("#");
    out.push_str(&render::unsigned_immediate(p.immed_8));
    out
}

pub fn sub_lsl_imm(p: &P1) -> String {
    let mut out = String::from("SUB");
    if p.cond != 14 {
        out.push_str(render::condition(p.cond));
    }
    if p.s_flag != 0 {
        out.push_str("S");
    }
    out.push_str(" ");
    out.push_str(&render::register(p.d));
    out.push_str(",");
    out.push_str(&render::register(p.n));
    out.push_str(",");
    out.push_str(&render::register(p.m));
    out.push_str(",LSL #");
    out.push_str(&render::unsigned_immediate(p.shift_imm));
    out
}

pub fn sub_lsr_imm(p: &P1) -> String {
    let mut out = String::from("SUB");
    if p.cond != 14 {
        out.push_str(render::condition(p.cond));
    }
    if p.s_flag != 0 {
        out.push_str("S");
    }
    out.push_str(" ");
    out.push_str(&render::register(p.d));
    out.push_str(",");
    out.push_str(&render::register(p.n));
    out.push_str(",");
    out.push_str(&render::register(p.m));
    out.push_str(",LSR #");
    out.push_str(&render::unsigned_immediate(p.shift_imm));
    out
}

pub fn add_imm(p: &P0) -> String {
    let mut out = String::from("ADD");
    if p.cond != 14 {
        out.push_str(render::condition(p.cond));
    }
    if p.s_flag != 0 {
        out.push_str("S");
    }
    out.push_str(" ");
    out.push_str(&render::register(p.d));
    out.push_str(",");
    out.push_str(&render::register(p.n));
    out.push_str(",");
    out.push_str("#");
    out.push_str(&render::unsigned_immediate(p.immed_8));
    out
}

pub fn add_lsl_imm(p: &P1) -> String {
    let mut out = String::from("ADD");
    if p.cond != 14 {
        out.push_str(render::condition(p.cond));
    }
    if p.s_flag != 0 {
        out.push_str("S");
    }
    out.push_str(" ");
    out.push_str(&render::register(p.d));
    out.push_str(",");
    out.push_str(&render::register(p.n));
    out.push_str(",");
    out.push_str(&render::register(p.m));
    out.push_str(",LSL #");
    out.push_str(&render::unsigned_immediate(p.shift_imm));
    out
}

pub fn add_lsr_imm(p: &P1) -> String {
    let mut out = String::from("ADD");
    if p.cond != 14 {
        out.push_str(render::condition(p.cond));
    }
    if p.s_flag != 0 {
        out.push_str("S");
    }
    out.push_str(" ");
    out.push_str(&render::register(p.d));
    out.push_str(",");
    out.push_str(&render::register(p.n));
    out.push_str(",");
    out.push_str(&render::register(p.m));
    out.push_str(",LSR #");
    out.push_str(&render::unsigned_immediate(p.shift_imm));
    out
}

pub fn adc_imm(p: &P0) -> String {
    let mut out = String::from("ADC");
    if p.cond != 14 {
        out.push_str(render::condition(p.cond));
    }
    if p.s_flag != 0 {
        out.push_str("S");
    }
    out.push_str(" ");
    out.push_str(&render::register(p.d));
    out.push_str(",");
    out.push_str(&render::register(p.n));
    out.push_str(",");
    out.push_str("#");
    out.push_str(&render::unsigned_immediate(p.immed_8));
    out
}

pub fn adc_lsl_imm(p: &P1) -> String {
    let mut out = String::from("ADC");
    if p.cond != 14 {
        out.push_str(render::condition(p.cond));
    }
    if p.s_flag != 0 {
        out.push_str("S");
    }
    out.push_str(" ");
    out.push_str(&render::register(p.d));
    out.push_str(",");
    out.push_str(&render::register(p.n));
    out.push_str(",");
    out.push_str(&render::register(p.m));
    out.push_str(",LSL #");
    out.push_str(&render::unsigned_immediate(p.shift_imm));
    out
}

pub fn adc_lsr_imm(p: &P1) -> String {
    let mut out = String::from("ADC");
    if p.cond != 14 {
        out.push_str(render::condition(p.cond));
    }
    if p.s_flag != 0 {
        out.push_str("S");
    }
    out.push_str(" ");
    out.push_str(&render::register(p.d));
    out.push_str(",");
    out.push_str(&render::register(p.n));
    out.push_str(",");
    out.push_str(&render::register(p.m));
    out.push_str(",LSR #");
    out.push_str(&render::unsigned_immediate(p.shift_imm));
    out
}

pub fn cmp_imm(p: &P2) -> String {
    let mut out = String::from("CMP");
    if p.cond != 14 {
        out.push_str(render::condition(p.cond));
    }
    out.push_str(" ");
    out.push_str(&render::register(p.n));
    out.push_str(",");
    out.push_str("#");
    out.push_str(&render::unsigned_immediate(p.immed_8));
    out
}

pub fn cmp_lsl_imm(p: &P3) -> String {
    let mut out = String::from("CMP");
    if p.cond != 14 {
        out.push_str(render::condition(p.cond));
    }
    out.push_str(" ");
    out.push_str(&render::register(p.n));
    out.push_str(",");
    out.push_str(&render::register(p.m));
    out.push_str(",LSL #");
    out.push_str(&render::unsigned_immediate(p.shift_imm));
    out
}

pub fn cmp_lsr_imm(p: &P3) -> String {
    let mut out = String::from("CMP");
    if p.cond != 14 {
        out.push_str(render::condition(p.cond));
    }
    out.push_str(" ");
    out.push_str(&render::register(p.n));
    out.push_str(",");
    out.push_str(&render::register(p.m));
    out.push_str(",LSR #");
    out.push_str(&render::unsigned_immediate(p.shift_imm));
    out
}

pub fn mov_imm(p: &P4) -> String {
    let mut out = String::from("MOV");
    if p.cond != 14 {
        out.push_str(render::condition(p.cond));
    }
    if p.s_flag != 0 {
        out.push_str("S");
    }
    out.push_str(" ");
    out.push_str(&render::register(p.d));
    out.push_str(",");
    out.push_str("#");
    out.push_str(&render::unsigned_immediate(p.immed_8));
    out
}

pub fn mov_lsl_imm(p: &P5) -> String {
    let mut out = String::from("MOV");
    if p.cond != 14 {
        out.push_str(render::condition(p.cond));
    }
    if p.s_flag != 0 {
        out.push_str("S");
    }
    out.push_str(" ");
    out.push_str(&render::register(p.d));
    out.push_str(",");
    out.push_str(&render::register(p.m));
    out.push_str(",LSL #");
    out.push_str(&render::unsigned_immediate(p.shift_imm));
    out
}

pub fn mov_lsr_imm(p: &P5) -> String {
    let mut out = String::from("MOV");
    if p.cond != 14 {
        out.push_str(render::condition(p.cond));
    }
    if p.s_flag != 0 {
        out.push_str("S");
    }
    out.push_str(" ");
    out.push_str(&render::register(p.d));
    out.push_str(",");
    out.push_str(&render::register(p.m));
    out.push_str(",LSR #");
    out.push_str(&render::unsigned_immediate(p.shift_imm));
    out
}

pub fn mul(p: &P6) -> String {
    let mut out = String::from("MUL");
    if p.cond != 14 {
        out.push_str(render::condition(p.cond));
    }
    if p.s_flag != 0 {
        out.push_str("S");
    }
    out.push_str(" ");
    out.push_str(&render::register(p.d));
    out.push_str(",");
    out.push_str(&render::register(p.m));
    out.push_str(",");
    out.push_str(&render::register(p.s));
    out
}

pub fn qadd(p: &P7) -> String {
    let mut out = String::from("QADD");
    if p.cond != 14 {
        out.push_str(render::condition(p.cond));
    }
    out.push_str(" ");
    out.push_str(&render::register(p.d));
    out.push_str(",");
    out.push_str(&render::register(p.n));
    out.push_str(",");
    out.push_str(&render::register(p.m));
    out
}

pub fn ldr_off_imm(p: &P8) -> String {
    let mut out = String::from("LDR");
    if p.cond != 14 {
        out.push_str(render::condition(p.cond));
    }
    out.push_str(" ");
    out.push_str(&render::register(p.d));
    out.push_str(",");
    out.push_str("[");
    out.push_str(&render::register(p.n));
    out.push_str(",#");
    out.push_str(&render::unsigned_immediate(p.offset_12));
    out.push_str("]");
    out
}

pub fn ldr_pre_imm(p: &P8) -> String {
    let mut out = String::from("LDR");
    if p.cond != 14 {
        out.push_str(render::condition(p.cond));
    }
    out.push_str(" ");
    out.push_str(&render::register(p.d));
    out.push_str(",");
    out.push_str("[");
    out.push_str(&render::register(p.n));
    out.push_str(",#");
    out.push_str(&render::unsigned_immediate(p.offset_12));
    out.push_str("]!");
    out
}

pub fn ldr_pre_reg(p: &P7) -> String {
    let mut out = String::from("LDR");
    if p.cond != 14 {
        out.push_str(render::condition(p.cond));
    }
    out.push_str(" ");
    out.push_str(&render::register(p.d));
    out.push_str(",");
    out.push_str("[");
    out.push_str(&render::register(p.n));
    out.push_str(",");
    out.push_str(&render::register(p.m));
    out.push_str("]!");
    out
}

pub fn ldr_post_imm(p: &P8) -> String {
    let mut out = String::from("LDR");
    if p.cond != 14 {
        out.push_str(render::condition(p.cond));
    }
    out.push_str(" ");
    out.push_str(&render::register(p.d));
    out.push_str(",");
    out.push_str("[");
    out.push_str(&render::register(p.n));
    out.push_str("],#");
    out.push_str(&render::unsigned_immediate(p.offset_12));
    out
}

pub fn ldrb_off_imm(p: &P8) -> String {
    let mut out = String::from("LDRB");
    if p.cond != 14 {
        out.push_str(render::condition(p.cond));
    }
    out.push_str(" ");
    out.push_str(&render::register(p.d));
    out.push_str(",");
    out.push_str("[");
    out.push_str(&render::register(p.n));
    out.push_str(",#");
    out.push_str(&render::unsigned_immediate(p.offset_12));
    out.push_str("]");
    out
}

pub fn ldrb_pre_imm(p: &P8) -> String {
    let mut out = String::from("LDRB");
    if p.cond != 14 {
        out.push_str(render::condition(p.cond));
    }
    out.push_str(" ");
    out.push_str(&render::register(p.d));
    out.push_str(",");
    out.push_str("[");
    out.push_str(&render::register(p.n));
    out.push_str(",#");
    out.push_str(&render::unsigned_immediate(p.offset_12));
    out.push_str("]!");
    out
}

pub fn ldrb_pre_reg(p: &P7) -> String {
    let mut out = String::from("LDRB");
    if p.cond != 14 {
        out.push_str(render::condition(p.cond));
    }
    out.push_str(" ");
    out.push_str(&render::register(p.d));
    out.push_str(",");
    out.push_str("[");
    out.push_str(&render::register(p.n));
    out.push_str(",");
    out.push_str(&render::register(p.m));
    out.push_str("]!");
    out
}

pub fn ldrb_post_imm(p: &P8) -> String {
    let mut out = String::from("LDRB");
    if p.cond != 14 {
        out.push_str(render::condition(p.cond));
    }
    out.push_str(" ");
    out.push_str(&render::register(p.d));
    out.push_str(",");
    out.push_str("[");
    out.push_str(&render::register(p.n));
    out.push_str("],#");
    out.push_str(&render::unsigned_immediate(p.offset_12));
    out
}

pub fn str_off_imm(p: &P8) -> String {
    let mut out = String::from("STR");
    if p.cond != 14 {
        out.push_str(render::condition(p.cond));
    }
    out.push_str(" ");
    out.push_str(&render::register(p.d));
    out.push_str(",");
    out.push_str("[");
    out.push_str(&render::register(p.n));
    out.push_str(",#");
    out.push_str(&render::unsigned_immediate(p.offset_12));
    out.push_str("]");
    out
}

pub fn str_pre_imm(p: &P8) -> String {
    let mut out = String::from("STR");
    if p.cond != 14 {
        out.push_str(render::condition(p.cond));
    }
    out.push_str(" ");
    out.push_str(&render::register(p.d));
    out.push_str(",");
    out.push_str("[");
    out.push_str(&render::register(p.n));
    out.push_str(",#");
    out.push_str(&render::unsigned_immediate(p.offset_12));
    out.push_str("]!");
    out
}

pub fn str_pre_reg(p: &P7) -> String {
    let mut out = String::from("STR");
    if p.cond != 14 {
        out.push_str(render::condition(p.cond));
    }
    out.push_str(" ");
    out.push_str(&render::register(p.d));
    out.push_str(",");
    out.push_str("[");
    out.push_str(&render::register(p.n));
    out.push_str(",");
    out.push_str(&render::register(p.m));
    out.push_str("]!");
    out
}

pub fn str_post_imm(p: &P8) -> String {
    let mut out = String::from("STR");
    if p.cond != 14 {
        out.push_str(render::condition(p.cond));
    }
    out.push_str(" ");
    out.push_str(&render::register(p.d));
    out.push_str(",");
    out.push_str("[");
    out.push_str(&render::register(p.n));
    out.push_str("],#");
    out.push_str(&render::unsigned_immediate(p.offset_12));
    out
}

pub fn ldrbt(p: &P8) -> String {
    let mut out = String::from("LDRBT");
    if p.cond != 14 {
        out.push_str(render::condition(p.cond));
    }
    out.push_str(" ");
    out.push_str(&render::register(p.d));
    out.push_str(",[");
    out.push_str(&render::register(p.n));
    out.push_str("],#");
    out.push_str(&render::unsigned_immediate(p.offset_12));
    out
}

pub fn uxtah(p: &P7) -> String {
    let mut out = String::from("UXTAH");
    if p.cond != 14 {
        out.push_str(render::condition(p.cond));
    }
    out.push_str(" ");
    out.push_str(&render::register(p.d));
    out.push_str(",");
    out.push_str(&render::register(p.n));
    out.push_str(",");
    out.push_str(&render::register(p.m));
    out
}

pub fn uxth(p: &P7) -> String {
    let mut out = String::from("UXTH");
    if p.cond != 14 {
        out.push_str(render::condition(p.cond));
    }
    out.push_str(" ");
    out.push_str(&render::register(p.d));
    out.push_str(",");
    out.push_str(&render::register(p.m));
    out
}

pub fn ldm_ia(p: &P9) -> String {
    let mut out = String::from("LDM");
    if p.cond != 14 {
        out.push_str(render::condition(p.cond));
    }
    out.push_str("IA");
    out.push_str(" ");
    out.push_str(&render::register(p.n));
    if p.w_flag != 0 {
        out.push_str("!");
    }
    out.push_str(",");
    out.push_str(&render::register_list(p.reglist));
    out
}

pub fn ldm_db(p: &P9) -> String {
    let mut out = String::from("LDM");
    if p.cond != 14 {
        out.push_str(render::condition(p.cond));
    }
    out.push_str("DB");
    out.push_str(" ");
    out.push_str(&render::register(p.n));
    if p.w_flag != 0 {
        out.push_str("!");
    }
    out.push_str(",");
    out.push_str(&render::register_list(p.reglist));
    out
}

pub fn stm_ia(p: &P9) -> String {
    let mut out = String::from("STM");
    if p.cond != 14 {
        out.push_str(render::condition(p.cond));
    }
    out.push_str("IA");
    out.push_str(" ");
    out.push_str(&render::register(p.n));
    if p.w_flag != 0 {
        out.push_str("!");
    }
    out.push_str(",");
    out.push_str(&render::register_list(p.reglist));
    out
}

pub fn stm_db(p: &P9) -> String {
    let mut out = String::from("STM");
    if p.cond != 14 {
        out.push_str(render::condition(p.cond));
    }
    out.push_str("DB");
    out.push_str(" ");
    out.push_str(&render::register(p.n));
    if p.w_flag != 0 {
        out.push_str("!");
    }
    out.push_str(",");
    out.push_str(&render::register_list(p.reglist));
    out
}

pub fn ldmx_ia(p: &P9) -> String {
    let mut out = String::from("LDMX");
    if p.cond != 14 {
        out.push_str(render::condition(p.cond));
    }
    out.push_str("IA");
    out.push_str(" ");
    out.push_str(&render::register(p.n));
    if p.w_flag != 0 {
        out.push_str("!");
    }
    out.push_str(",");
    out.push_str(&render::register_list(p.reglist));
    out
}

pub fn ldmx_db(p: &P9) -> String {
    let mut out = String::from("LDMX");
    if p.cond != 14 {
        out.push_str(render::condition(p.cond));
    }
    out.push_str("DB");
    out.push_str(" ");
    out.push_str(&render::register(p.n));
    if p.w_flag != 0 {
        out.push_str("!");
    }
    out.push_str(",");
    out.push_str(&render::register_list(p.reglist));
    out
}

pub fn srs_ia(p: &P10) -> String {
    let mut out = String::from("SRS");
    if p.cond != 14 {
        out.push_str(render::condition(p.cond));
    }
    out.push_str("IA");
    out.push_str(" #");
    out.push_str(&render::unsigned_immediate(p.mode));
    if p.w_flag != 0 {
        out.push_str("!");
    }
    out
}

pub fn srs_db(p: &P10) -> String {
    let mut out = String::from("SRS");
    if p.cond != 14 {
        out.push_str(render::condition(p.cond));
    }
    out.push_str("DB");
    out.push_str(" #");
    out.push_str(&render::unsigned_immediate(p.mode));
    if p.w_flag != 0 {
        out.push_str("!");
    }
    out
}

pub fn rfe_ia(p: &P11) -> String {
    let mut out = String::from("RFE");
    if p.cond != 14 {
        out.push_str(render::condition(p.cond));
    }
    out.push_str("IA");
    out.push_str(" ");
    out.push_str(&render::register(p.n));
    if p.w_flag != 0 {
        out.push_str("!");
    }
    out
}

pub fn rfe_db(p: &P11) -> String {
    let mut out = String::from("RFE");
    if p.cond != 14 {
        out.push_str(render::condition(p.cond));
    }
    out.push_str("DB");
    out.push_str(" ");
    out.push_str(&render::register(p.n));
    if p.w_flag != 0 {
        out.push_str("!");
    }
    out
}

pub fn b(p: &P12) -> String {
    let mut out = String::from("B");
    if p.cond != 14 {
        out.push_str(render::condition(p.cond));
    }
    out.push_str(" #");
    out.push_str(&render::signed_immediate(p.signed_immed_24, 24));
    out
}

pub fn bl(p: &P12) -> String {
    let mut out = String::from("BL");
    if p.cond != 14 {
        out.push_str(render::condition(p.cond));
    }
    out.push_str(" #");
    out.push_str(&render::signed_immediate(p.signed_immed_24, 24));
    out
}

pub fn halt(_p: &P13) -> String {
    String::from("HALT")
}

