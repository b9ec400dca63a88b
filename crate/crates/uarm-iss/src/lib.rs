// Generated by `issforge gen-iss`. Do not edit; regenerate instead.
//! Fast back-end for the `uarm` corpus: decoded-instruction
//! model, two-phase decoder, compiled semantics, may-branch
//! evaluator, and assembly printers, all generated from the
//! transformed instruction descriptions.

pub mod decoder;
pub mod exec;
pub mod params;
pub mod printer;

use issforge_core::ir::eval;
use issforge_core::sim::{CpuState, DecodeResult, Engine, Fault, Outcome};

pub use decoder::decode;

/// Base flat-instruction names (profile slots).
pub const BASE_NAMES: &[&str] = &[
    "AND_imm",
    "AND_lsl_imm",
    "AND_lsr_imm",
    "EOR_imm",
    "EOR_lsl_imm",
    "EOR_lsr_imm",
    "SUB_imm",
    "SUB_lsl_imm",
    "SUB_lsr_imm",
    "ADD_imm",
    "ADD_lsl_imm",
    "ADD_lsr_imm",
    "ADC_imm",
    "ADC_lsl_imm",
    "ADC_lsr_imm",
    "CMP_imm",
    "CMP_lsl_imm",
    "CMP_lsr_imm",
    "MOV_imm",
    "MOV_lsl_imm",
    "MOV_lsr_imm",
    "MUL",
    "QADD",
    "LDR_off_imm",
    "LDR_pre_imm",
    "LDR_pre_reg",
    "LDR_post_imm",
    "LDRB_off_imm",
    "LDRB_pre_imm",
    "LDRB_pre_reg",
    "LDRB_post_imm",
    "STR_off_imm",
    "STR_pre_imm",
    "STR_pre_reg",
    "STR_post_imm",
    "LDRBT",
    "UXTAH",
    "UXTH",
    "LDM_ia",
    "LDM_db",
    "STM_ia",
    "STM_db",
    "LDMX_ia",
    "LDMX_db",
    "SRS_ia",
    "SRS_db",
    "RFE_ia",
    "RFE_db",
    "B",
    "BL",
    "HALT",
];

/// A decoded instruction: the variant identifies the semantics
/// routine, the payload carries the decoded parameter record.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Op {
    AndImmS0Al(params::P0),
    AndImmS0(params::P0),
    AndImmS1Al(params::P0),
    AndImmS1(params::P0),
    AndImm(params::P0),
    AndLslImmS0Al(params::P1),
    AndLslImmS0(params::P1),
    AndLslImmS1Al(params::P1),
    AndLslImmS1(params::P1),
    AndLslImm(params::P1),
    AndLsrImmS0Al(params::P1),
    AndLsrImmS0(params::P1),
    AndLsrImmS1Al(params::P1),
    AndLsrImmS1(params::P1),
    AndLsrImm(params::P1),
    EorImmS0Al(params::P0),
    EorImmS0(params::P0),
    EorImmS1Al(params::P0),
    EorImmS1(params::P0),
    EorImm(params::P0),
    EorLslImmS0Al(params::P1),
    EorLslImmS0(params::P1),
    EorLslImmS1Al(params::P1),
    EorLslImmS1(params::P1),
    EorLslImm(params::P1),
    EorLsrImmS0Al(params::P1),
    EorLsrImmS0(params::P1),
    EorLsrImmS1Al(params::P1),
    EorLsrImmS1(params::P1),
    EorLsrImm(params::P1),
    SubImmS0Al(params::P0),
    SubImmS0(params::P0),
    SubImmS1Al(params::P0),
    SubImmS1(params::P0),
    SubImm(params::P0),
    SubLslImmS0Al(params::P1),
    SubLslImmS0(params::P1),
    SubLslImmS1Al(params::P1),
    SubLslImmS1(params::P1),
    SubLslImm(params::P1),
    SubLsrImmS0Al(params::P1),
    SubLsrImmS0(params::P1),
    SubLsrImmS1Al(params::P1),
    SubLsrImmS1(params::P1),
    SubLsrImm(params::P1),
    AddImmS0Al(params::P0),
    AddImmS0(params::P0),
    AddImmS1Al(params::P0),
    AddImmS1(params::P0),
    AddImm(params::P0),
    AddLslImmS0Al(params::P1),
    AddLslImmS0(params::P1),
    AddLslImmS1Al(params::P1),
    AddLslImmS1(params::P1),
    AddLslImm(params::P1),
    AddLsrImmS0Al(params::P1),
    AddLsrImmS0(params::P1),
    AddLsrImmS1Al(params::P1),
    AddLsrImmS1(params::P1),
    AddLsrImm(params::P1),
    AdcImmS0Al(params::P0),
    AdcImmS0(params::P0),
    AdcImmS1Al(params::P0),
    AdcImmS1(params::P0),
    AdcImm(params::P0),
    AdcLslImmS0Al(params::P1),
    AdcLslImmS0(params::P1),
    AdcLslImmS1Al(params::P1),
    AdcLslImmS1(params::P1),
    AdcLslImm(params::P1),
    AdcLsrImmS0Al(params::P1),
    AdcLsrImmS0(params::P1),
    AdcLsrImmS1Al(params::P1),
    AdcLsrImmS1(params::P1),
    AdcLsrImm(params::P1),
    CmpImmAl(params::P2),
    CmpImm(params::P2),
    CmpLslImmAl(params::P3),
    CmpLslImm(params::P3),
    CmpLsrImmAl(params::P3),
    CmpLsrImm(params::P3),
    MovImmS0Al(params::P4),
    MovImmS0(params::P4),
    MovImmS1Al(params::P4),
    MovImmS1(params::P4),
    MovImm(params::P4),
    MovLslImmS0Al(params::P5),
    MovLslImmS0(params::P5),
    MovLslImmS1Al(params::P5),
    MovLslImmS1(params::P5),
    MovLslImm(params::P5),
    MovLsrImmS0Al(params::P5),
    MovLsrImmS0(params::P5),
    MovLsrImmS1Al(params::P5),
    MovLsrImmS1(params::P5),
    MovLsrImm(params::P5),
    MulS0Al(params::P6),
    MulS0(params::P6),
    MulS1Al(params::P6),
    MulS1(params::P6),
    Mul(params::P6),
    QaddAl(params::P7),
    Qadd(params::P7),
    LdrOffImmAl(params::P8),
    LdrOffImm(params::P8),
    LdrPreImmAl(params::P8),
    LdrPreImm(params::P8),
    LdrPreRegAl(params::P7),
    LdrPreReg(params::P7),
    LdrPostImmAl(params::P8),
    LdrPostImm(params::P8),
    LdrbOffImmAl(params::P8),
    LdrbOffImm(params::P8),
    LdrbPreImmAl(params::P8),
    LdrbPreImm(params::P8),
    LdrbPreRegAl(params::P7),
    LdrbPreReg(params::P7),
    LdrbPostImmAl(params::P8),
    LdrbPostImm(params::P8),
    StrOffImmAl(params::P8),
    StrOffImm(params::P8),
    StrPreImmAl(params::P8),
    StrPreImm(params::P8),
    StrPreRegAl(params::P7),
    StrPreReg(params::P7),
    StrPostImmAl(params::P8),
    StrPostImm(params::P8),
    LdrbtAl(params::P8),
    Ldrbt(params::P8),
    UxtahAl(params::P7),
    Uxtah(params::P7),
    UxthAl(params::P7),
    Uxth(params::P7),
    LdmIaAl(params::P9),
    LdmIa(params::P9),
    LdmDbAl(params::P9),
    LdmDb(params::P9),
    StmIaAl(params::P9),
    StmIa(params::P9),
    StmDbAl(params::P9),
    StmDb(params::P9),
    LdmxIaAl(params::P9),
    LdmxIa(params::P9),
    LdmxDbAl(params::P9),
    LdmxDb(params::P9),
    SrsIaAl(params::P10),
    SrsIa(params::P10),
    SrsDbAl(params::P10),
    SrsDb(params::P10),
    RfeIaAl(params::P11),
    RfeIa(params::P11),
    RfeDbAl(params::P11),
    RfeDb(params::P11),
    BAl(params::P12),
    B(params::P12),
    BlAl(params::P12),
    Bl(params::P12),
    Halt(params::P13),
}

impl Op {
    pub fn execute(&self, cpu: &mut CpuState) -> Result<Outcome, Fault> {
        match self {
            Op::AndImmS0Al(p) => exec::and_imm_s0_al(p, cpu),
            Op::AndImmS0(p) => exec::and_imm_s0(p, cpu),
            Op::AndImmS1Al(p) => exec::and_imm_s1_al(p, cpu),
            Op::AndImmS1(p) => exec::and_imm_s1(p, cpu),
            Op::AndImm(p) => exec::and_imm(p, cpu),
            Op::AndLslImmS0Al(p) => exec::and_lsl_imm_s0_al(p, cpu),
            Op::AndLslImmS0(p) => exec::and_lsl_imm_s0(p, cpu),
            Op::AndLslImmS1Al(p) => exec::and_lsl_imm_s1_al(p, cpu),
            Op::AndLslImmS1(p) => exec::and_lsl_imm_s1(p, cpu),
            Op::AndLslImm(p) => exec::and_lsl_imm(p, cpu),
            Op::AndLsrImmS0Al(p) => exec::and_lsr_imm_s0_al(p, cpu),
            Op::AndLsrImmS0(p) => exec::and_lsr_imm_s0(p, cpu),
            Op::AndLsrImmS1Al(p) => exec::and_lsr_imm_s1_al(p, cpu),
            Op::AndLsrImmS1(p) => exec::and_lsr_imm_s1(p, cpu),
            Op::AndLsrImm(p) => exec::and_lsr_imm(p, cpu),
            Op::EorImmS0Al(p) => exec::eor_imm_s0_al(p, cpu),
            Op::EorImmS0(p) => exec::eor_imm_s0(p, cpu),
            Op::EorImmS1Al(p) => exec::eor_imm_s1_al(p, cpu),
            Op::EorImmS1(p) => exec::eor_imm_s1(p, cpu),
            Op::EorImm(p) => exec::eor_imm(p, cpu),
            Op::EorLslImmS0Al(p) => exec::eor_lsl_imm_s0_al(p, cpu),
            Op::EorLslImmS0(p) => exec::eor_lsl_imm_s0(p, cpu),
            Op::EorLslImmS1Al(p) => exec::eor_lsl_imm_s1_al(p, cpu),
            Op::EorLslImmS1(p) => exec::eor_lsl_imm_s1(p, cpu),
            Op::EorLslImm(p) => exec::eor_lsl_imm(p, cpu),
            Op::EorLsrImmS0Al(p) => exec::eor_lsr_imm_s0_al(p, cpu),
            Op::EorLsrImmS0(p) => exec::eor_lsr_imm_s0(p, cpu),
            Op::EorLsrImmS1Al(p) => exec::eor_lsr_imm_s1_al(p, cpu),
            Op::EorLsrImmS1(p) => exec::eor_lsr_imm_s1(p, cpu),
            Op::EorLsrImm(p) => exec::eor_lsr_imm(p, cpu),
            Op::SubImmS0Al(p) => exec::sub_imm_s0_al(p, cpu),
            Op::SubImmS0(p) => exec::sub_imm_s0(p, cpu),
            Op::SubImmS1Al(p) => exec::sub_imm_s1_al(p, cpu),
            Op::SubImmS1(p) => exec::sub_imm_s1(p, cpu),
            Op::SubImm(p) => exec::sub_imm(p, cpu),
            Op::SubLslImmS0Al(p) => exec::sub_lsl_imm_s0_al(p, cpu),
            Op::SubLslImmS0(p) => exec::sub_lsl_imm_s0(p, cpu),
            Op::SubLslImmS1Al(p) => exec::sub_lsl_imm_s1_al(p, cpu),
            Op::SubLslImmS1(p) => exec::sub_lsl_imm_s1(p, cpu),
            Op::SubLslImm(p) => exec::sub_lsl_imm(p, cpu),
            Op::SubLsrImmS0Al(p) => exec::sub_lsr_imm_s0_al(p, cpu),
            Op::SubLsrImmS0(p) => exec::sub_lsr_imm_s0(p, cpu),
            Op::SubLsrImmS1Al(p) => exec::sub_lsr_imm_s1_al(p, cpu),
            Op::SubLsrImmS1(p) => exec::sub_lsr_imm_s1(p, cpu),
            Op::SubLsrImm(p) => exec::sub_lsr_imm(p, cpu),
            Op::AddImmS0Al(p) => exec::add_imm_s0_al(p, cpu),
            Op::AddImmS0(p) => exec::add_imm_s0(p, cpu),
            Op::AddImmS1Al(p) => exec::add_imm_s1_al(p, cpu),
            Op::AddImmS1(p) => exec::add_imm_s1(p, cpu),
            Op::AddImm(p) => exec::add_imm(p, cpu),
            Op::AddLslImmS0Al(p) => exec::add_lsl_imm_s0_al(p, cpu),
            Op::AddLslImmS0(p) => exec::add_lsl_imm_s0(p, cpu),
            Op::AddLslImmS1Al(p) => exec::add_lsl_imm_s1_al(p, cpu),
            Op::AddLslImmS1(p) => exec::add_lsl_imm_s1(p, cpu),
            Op::AddLslImm(p) => exec::add_lsl_imm(p, cpu),
            Op::AddLsrImmS0Al(p) => exec::add_lsr_imm_s0_al(p, cpu),
            Op::AddLsrImmS0(p) => exec::add_lsr_imm_s0(p, cpu),
            Op::AddLsrImmS1Al(p) => exec::add_lsr_imm_s1_al(p, cpu),
            Op::AddLsrImmS1(p) => exec::add_lsr_imm_s1(p, cpu),
            Op::AddLsrImm(p) => exec::add_lsr_imm(p, cpu),
            Op::AdcImmS0Al(p) => exec::adc_imm_s0_al(p, cpu),
            Op::AdcImmS0(p) => exec::adc_imm_s0(p, cpu),
            Op::AdcImmS1Al(p) => exec::adc_imm_s1_al(p, cpu),
            Op::AdcImmS1(p) => exec::adc_imm_s1(p, cpu),
            Op::AdcImm(p) => exec::adc_imm(p, cpu),
            Op::AdcLslImmS0Al(p) => exec::adc_lsl_imm_s0_al(p, cpu),
            Op::AdcLslImmS0(p) => exec::adc_lsl_imm_s0(p, cpu),
            Op::AdcLslImmS1Al(p) => exec::adc_lsl_imm_s1_al(p, cpu),
            Op::AdcLslImmS1(p) => exec::adc_lsl_imm_s1(p, cpu),
            Op::AdcLslImm(p) => exec::adc_lsl_imm(p, cpu),
            Op::AdcLsrImmS0Al(p) => exec::adc_lsr_imm_s0_al(p, cpu),
            Op::AdcLsrImmS0(p) => exec::adc_lsr_imm_s0(p, cpu),
            Op::AdcLsrImmS1Al(p) => exec::adc_lsr_imm_s1_al(p, cpu),
            Op::AdcLsrImmS1(p) => exec::adc_lsr_imm_s1(p, cpu),
            Op::AdcLsrImm(p) => exec::adc_lsr_imm(p, cpu),
            Op::CmpImmAl(p) => exec::cmp_imm_al(p, cpu),
            Op::CmpImm(p) => exec::cmp_imm(p, cpu),
            Op::CmpLslImmAl(p) => exec::cmp_lsl_imm_al(p, cpu),
            Op::CmpLslImm(p) => exec::cmp_lsl_imm(p, cpu),
            Op::CmpLsrImmAl(p) => exec::cmp_lsr_imm_al(p, cpu),
            Op::CmpLsrImm(p) => exec::cmp_lsr_imm(p, cpu),
            Op::MovImmS0Al(p) => exec::mov_imm_s0_al(p, cpu),
            Op::MovImmS0(p) => exec::mov_imm_s0(p, cpu),
            Op::MovImmS1Al(p) => exec::mov_imm_s1_al(p, cpu),
            Op::MovImmS1(p) => exec::mov_imm_s1(p, cpu),
            Op::MovImm(p) => exec::mov_imm(p, cpu),
            Op::MovLslImmS0Al(p) => exec::mov_lsl_imm_s0_al(p, cpu),
            Op::MovLslImmS0(p) => exec::mov_lsl_imm_s0(p, cpu),
            Op::MovLslImmS1Al(p) => exec::mov_lsl_imm_s1_al(p, cpu),
            Op::MovLslImmS1(p) => exec::mov_lsl_imm_s1(p, cpu),
            Op::MovLslImm(p) => exec::mov_lsl_imm(p, cpu),
            Op::MovLsrImmS0Al(p) => exec::mov_lsr_imm_s0_al(p, cpu),
            Op::MovLsrImmS0(p) => exec::mov_lsr_imm_s0(p, cpu),
            Op::MovLsrImmS1Al(p) => exec::mov_lsr_imm_s1_al(p, cpu),
            Op::MovLsrImmS1(p) => exec::mov_lsr_imm_s1(p, cpu),
            Op::MovLsrImm(p) => exec::mov_lsr_imm(p, cpu),
            Op::MulS0Al(p) => exec::mul_s0_al(p, cpu),
            Op::MulS0(p) => exec::mul_s0(p, cpu),
            Op::MulS1Al(p) => exec::mul_s1_al(p, cpu),
            Op::MulS1(p) => exec::mul_s1(p, cpu),
            Op::Mul(p) => exec::mul(p, cpu),
            Op::QaddAl(p) => exec::qadd_al(p, cpu),
            Op::Qadd(p) => exec::qadd(p, cpu),
            Op::LdrOffImmAl(p) => exec::ldr_off_imm_al(p, cpu),
            Op::LdrOffImm(p) => exec::ldr_off_imm(p, cpu),
            Op::LdrPreImmAl(p) => exec::ldr_pre_imm_al(p, cpu),
            Op::LdrPreImm(p) => exec::ldr_pre_imm(p, cpu),
            Op::LdrPreRegAl(p) => exec::ldr_pre_reg_al(p, cpu),
            Op::LdrPreReg(p) => exec::ldr_pre_reg(p, cpu),
            Op::LdrPostImmAl(p) => exec::ldr_post_imm_al(p, cpu),
            Op::LdrPostImm(p) => exec::ldr_post_imm(p, cpu),
            Op::LdrbOffImmAl(p) => exec::ldrb_off_imm_al(p, cpu),
            Op::LdrbOffImm(p) => exec::ldrb_off_imm(p, cpu),
            Op::LdrbPreImmAl(p) => exec::ldrb_pre_imm_al(p, cpu),
            Op::LdrbPreImm(p) => exec::ldrb_pre_imm(p, cpu),
            Op::LdrbPreRegAl(p) => exec::ldrb_pre_reg_al(p, cpu),
            Op::LdrbPreReg(p) => exec::ldrb_pre_reg(p, cpu),
            Op::LdrbPostImmAl(p) => exec::ldrb_post_imm_al(p, cpu),
            Op::LdrbPostImm(p) => exec::ldrb_post_imm(p, cpu),
            Op::StrOffImmAl(p) => exec::str_off_imm_al(p, cpu),
            Op::StrOffImm(p) => exec::str_off_imm(p, cpu),
            Op::StrPreImmAl(p) => exec::str_pre_imm_al(p, cpu),
            Op::StrPreImm(p) => exec::str_pre_imm(p, cpu),
            Op::StrPreRegAl(p) => exec::str_pre_reg_al(p, cpu),
            Op::StrPreReg(p) => exec::str_pre_reg(p, cpu),
            Op::StrPostImmAl(p) => exec::str_post_imm_al(p, cpu),
            Op::StrPostImm(p) => exec::str_post_imm(p, cpu),
            Op::LdrbtAl(p) => exec::ldrbt_al(p, cpu),
            Op::Ldrbt(p) => exec::ldrbt(p, cpu),
            Op::UxtahAl(p) => exec::uxtah_al(p, cpu),
            Op::Uxtah(p) => exec::uxtah(p, cpu),
            Op::UxthAl(p) => exec::uxth_al(p, cpu),
            Op::Uxth(p) => exec::uxth(p, cpu),
            Op::LdmIaAl(p) => exec::ldm_ia_al(p, cpu),
            Op::LdmIa(p) => exec::ldm_ia(p, cpu),
            Op::LdmDbAl(p) => exec::ldm_db_al(p, cpu),
            Op::LdmDb(p) => exec::ldm_db(p, cpu),
            Op::StmIaAl(p) => exec::stm_ia_al(p, cpu),
            Op::StmIa(p) => exec::stm_ia(p, cpu),
            Op::StmDbAl(p) => exec::stm_db_al(p, cpu),
            Op::StmDb(p) => exec::stm_db(p, cpu),
            Op::LdmxIaAl(p) => exec::ldmx_ia_al(p, cpu),
            Op::LdmxIa(p) => exec::ldmx_ia(p, cpu),
            Op::LdmxDbAl(p) => exec::ldmx_db_al(p, cpu),
            Op::LdmxDb(p) => exec::ldmx_db(p, cpu),
            Op::SrsIaAl(p) => exec::srs_ia_al(p, cpu),
            Op::SrsIa(p) => exec::srs_ia(p, cpu),
            Op::SrsDbAl(p) => exec::srs_db_al(p, cpu),
            Op::SrsDb(p) => exec::srs_db(p, cpu),
            Op::RfeIaAl(p) => exec::rfe_ia_al(p, cpu),
            Op::RfeIa(p) => exec::rfe_ia(p, cpu),
            Op::RfeDbAl(p) => exec::rfe_db_al(p, cpu),
            Op::RfeDb(p) => exec::rfe_db(p, cpu),
            Op::BAl(p) => exec::b_al(p, cpu),
            Op::B(p) => exec::b(p, cpu),
            Op::BlAl(p) => exec::bl_al(p, cpu),
            Op::Bl(p) => exec::bl(p, cpu),
            Op::Halt(p) => exec::halt(p, cpu),
        }
    }

    /// Evaluated may-branch condition over the decoded parameters.
    pub fn is_terminator(&self) -> bool {
        match self {
            Op::AndImmS0Al(p) => p.d == 15u32,
            Op::AndImmS0(p) => p.d == 15u32,
            Op::AndImmS1Al(p) => p.d == 15u32,
            Op::AndImmS1(p) => p.d == 15u32,
            Op::AndImm(p) => p.d == 15u32,
            Op::AndLslImmS0Al(p) => p.d == 15u32,
            Op::AndLslImmS0(p) => p.d == 15u32,
            Op::AndLslImmS1Al(p) => p.d == 15u32,
            Op::AndLslImmS1(p) => p.d == 15u32,
            Op::AndLslImm(p) => p.d == 15u32,
            Op::AndLsrImmS0Al(p) => p.d == 15u32,
            Op::AndLsrImmS0(p) => p.d == 15u32,
            Op::AndLsrImmS1Al(p) => p.d == 15u32,
            Op::AndLsrImmS1(p) => p.d == 15u32,
            Op::AndLsrImm(p) => p.d == 15u32,
            Op::EorImmS0Al(p) => p.d == 15u32,
            Op::EorImmS0(p) => p.d == 15u32,
            Op::EorImmS1Al(p) => p.d == 15u32,
            Op::EorImmS1(p) => p.d == 15u32,
            Op::EorImm(p) => p.d == 15u32,
            Op::EorLslImmS0Al(p) => p.d == 15u32,
            Op::EorLslImmS0(p) => p.d == 15u32,
            Op::EorLslImmS1Al(p) => p.d == 15u32,
            Op::EorLslImmS1(p) => p.d == 15u32,
            Op::EorLslImm(p) => p.d == 15u32,
            Op::EorLsrImmS0Al(p) => p.d == 15u32,
            Op::EorLsrImmS0(p) => p.d == 15u32,
            Op::EorLsrImmS1Al(p) => p.d == 15u32,
            Op::EorLsrImmS1(p) => p.d == 15u32,
            Op::EorLsrImm(p) => p.d == 15u32,
            Op::SubImmS0Al(p) => p.d == 15u32,
            Op::SubImmS0(p) => p.d == 15u32,
            Op::SubImmS1Al(p) => p.d == 15u32,
            Op::SubImmS1(p) => p.d == 15u32,
            Op::SubImm(p) => p.d == 15u32,
            Op::SubLslImmS0Al(p) => p.d == 15u32,
            Op::SubLslImmS0(p) => p.d == 15u32,
            Op::SubLslImmS1Al(p) => p.d == 15u32,
            Op::SubLslImmS1(p) => p.d == 15u32,
            Op::SubLslImm(p) => p.d == 15u32,
            Op::SubLsrImmS0Al(p) => p.d == 15u32,
            Op::SubLsrImmS0(p) => p.d == 15u32,
            Op::SubLsrImmS1Al(p) => p.d == 15u32,
            Op::SubLsrImmS1(p) => p.d == 15u32,
            Op::SubLsrImm(p) => p.d == 15u32,
            Op::AddImmS0Al(p) => p.d == 15u32,
            Op::AddImmS0(p) => p.d == 15u32,
            Op::AddImmS1Al(p) => p.d == 15u32,
            Op::AddImmS1(p) => p.d == 15u32,
            Op::AddImm(p) => p.d == 15u32,
            Op::AddLslImmS0Al(p) => p.d == 15u32,
            Op::AddLslImmS0(p) => p.d == 15u32,
            Op::AddLslImmS1Al(p) => p.d == 15u32,
            Op::AddLslImmS1(p) => p.d == 15u32,
            Op::AddLslImm(p) => p.d == 15u32,
            Op::AddLsrImmS0Al(p) => p.d == 15u32,
            Op::AddLsrImmS0(p) => p.d == 15u32,
            Op::AddLsrImmS1Al(p) => p.d == 15u32,
            Op::AddLsrImmS1(p) => p.d == 15u32,
            Op::AddLsrImm(p) => p.d == 15u32,
            Op::AdcImmS0Al(p) => p.d == 15u32,
            Op::AdcImmS0(p) => p.d == 15u32,
            Op::AdcImmS1Al(p) => p.d == 15u32,
            Op::AdcImmS1(p) => p.d == 15u32,
            Op::AdcImm(p) => p.d == 15u32,
            Op::AdcLslImmS0Al(p) => p.d == 15u32,
            Op::AdcLslImmS0(p) => p.d == 15u32,
            Op::AdcLslImmS1Al(p) => p.d == 15u32,
            Op::AdcLslImmS1(p) => p.d == 15u32,
            Op::AdcLslImm(p) => p.d == 15u32,
            Op::AdcLsrImmS0Al(p) => p.d == 15u32,
            Op::AdcLsrImmS0(p) => p.d == 15u32,
            Op::AdcLsrImmS1Al(p) => p.d == 15u32,
            Op::AdcLsrImmS1(p) => p.d == 15u32,
            Op::AdcLsrImm(p) => p.d == 15u32,
            Op::CmpImmAl(..) => false,
            Op::CmpImm(..) => false,
            Op::CmpLslImmAl(..) => false,
            Op::CmpLslImm(..) => false,
            Op::CmpLsrImmAl(..) => false,
            Op::CmpLsrImm(..) => false,
            Op::MovImmS0Al(p) => p.d == 15u32,
            Op::MovImmS0(p) => p.d == 15u32,
            Op::MovImmS1Al(p) => p.d == 15u32,
            Op::MovImmS1(p) => p.d == 15u32,
            Op::MovImm(p) => p.d == 15u32,
            Op::MovLslImmS0Al(p) => p.d == 15u32,
            Op::MovLslImmS0(p) => p.d == 15u32,
            Op::MovLslImmS1Al(p) => p.d == 15u32,
            Op::MovLslImmS1(p) => p.d == 15u32,
            Op::MovLslImm(p) => p.d == 15u32,
            Op::MovLsrImmS0Al(p) => p.d == 15u32,
            Op::MovLsrImmS0(p) => p.d == 15u32,
            Op::MovLsrImmS1Al(p) => p.d == 15u32,
            Op::MovLsrImmS1(p) => p.d == 15u32,
            Op::MovLsrImm(p) => p.d == 15u32,
            Op::MulS0Al(..) => false,
            Op::MulS0(..) => false,
            Op::MulS1Al(..) => false,
            Op::MulS1(..) => false,
            Op::Mul(..) => false,
            Op::QaddAl(p) => p.d == 15u32,
            Op::Qadd(p) => p.d == 15u32,
            Op::LdrOffImmAl(p) => p.d == 15u32,
            Op::LdrOffImm(p) => p.d == 15u32,
            Op::LdrPreImmAl(p) => p.d == 15u32,
            Op::LdrPreImm(p) => p.d == 15u32,
            Op::LdrPreRegAl(p) => p.d == 15u32,
            Op::LdrPreReg(p) => p.d == 15u32,
            Op::LdrPostImmAl(p) => p.d == 15u32,
            Op::LdrPostImm(p) => p.d == 15u32,
            Op::LdrbOffImmAl(..) => false,
            Op::LdrbOffImm(..) => false,
            Op::LdrbPreImmAl(..) => false,
            Op::LdrbPreImm(..) => false,
            Op::LdrbPreRegAl(..) => false,
            Op::LdrbPreReg(..) => false,
            Op::LdrbPostImmAl(..) => false,
            Op::LdrbPostImm(..) => false,
            Op::StrOffImmAl(..) => false,
            Op::StrOffImm(..) => false,
            Op::StrPreImmAl(..) => false,
            Op::StrPreImm(..) => false,
            Op::StrPreRegAl(..) => false,
            Op::StrPreReg(..) => false,
            Op::StrPostImmAl(..) => false,
            Op::StrPostImm(..) => false,
            Op::LdrbtAl(p) => p.d == 15u32,
            Op::Ldrbt(p) => p.d == 15u32,
            Op::UxtahAl(p) => p.d == 15u32,
            Op::Uxtah(p) => p.d == 15u32,
            Op::UxthAl(p) => p.d == 15u32,
            Op::Uxth(p) => p.d == 15u32,
            Op::LdmIaAl(p) => eval::extract_bits(p.reglist, 15u32, 15u32) == 1u32,
            Op::LdmIa(p) => eval::extract_bits(p.reglist, 15u32, 15u32) == 1u32,
            Op::LdmDbAl(p) => eval::extract_bits(p.reglist, 15u32, 15u32) == 1u32,
            Op::LdmDb(p) => eval::extract_bits(p.reglist, 15u32, 15u32) == 1u32,
            Op::StmIaAl(..) => false,
            Op::StmIa(..) => false,
            Op::StmDbAl(..) => false,
            Op::StmDb(..) => false,
            Op::LdmxIaAl(p) => eval::extract_bits(p.reglist, 15u32, 15u32) == 1u32,
            Op::LdmxIa(p) => eval::extract_bits(p.reglist, 15u32, 15u32) == 1u32,
            Op::LdmxDbAl(p) => eval::extract_bits(p.reglist, 15u32, 15u32) == 1u32,
            Op::LdmxDb(p) => eval::extract_bits(p.reglist, 15u32, 15u32) == 1u32,
            Op::SrsIaAl(..) => false,
            Op::SrsIa(..) => false,
            Op::SrsDbAl(..) => false,
            Op::SrsDb(..) => false,
            Op::RfeIaAl(..) => true,
            Op::RfeIa(..) => true,
            Op::RfeDbAl(..) => true,
            Op::RfeDb(..) => true,
            Op::BAl(..) => true,
            Op::B(..) => true,
            Op::BlAl(..) => true,
            Op::Bl(..) => true,
            Op::Halt(..) => true,
        }
    }

    pub fn base_id(&self) -> usize {
        match self {
            Op::AndImmS0Al(..) => 0,
            Op::AndImmS0(..) => 0,
            Op::AndImmS1Al(..) => 0,
            Op::AndImmS1(..) => 0,
            Op::AndImm(..) => 0,
            Op::AndLslImmS0Al(..) => 1,
            Op::AndLslImmS0(..) => 1,
            Op::AndLslImmS1Al(..) => 1,
            Op::AndLslImmS1(..) => 1,
            Op::AndLslImm(..) => 1,
            Op::AndLsrImmS0Al(..) => 2,
            Op::AndLsrImmS0(..) => 2,
            Op::AndLsrImmS1Al(..) => 2,
            Op::AndLsrImmS1(..) => 2,
            Op::AndLsrImm(..) => 2,
            Op::EorImmS0Al(..) => 3,
            Op::EorImmS0(..) => 3,
            Op::EorImmS1Al(..) => 3,
            Op::EorImmS1(..) => 3,
            Op::EorImm(..) => 3,
            Op::EorLslImmS0Al(..) => 4,
            Op::EorLslImmS0(..) => 4,
            Op::EorLslImmS1Al(..) => 4,
            Op::EorLslImmS1(..) => 4,
            Op::EorLslImm(..) => 4,
            Op::EorLsrImmS0Al(..) => 5,
            Op::EorLsrImmS0(..) => 5,
            Op::EorLsrImmS1Al(..) => 5,
            Op::EorLsrImmS1(..) => 5,
            Op::EorLsrImm(..) => 5,
            Op::SubImmS0Al(..) => 6,
            Op::SubImmS0(..) => 6,
            Op::SubImmS1Al(..) => 6,
            Op::SubImmS1(..) => 6,
            Op::SubImm(..) => 6,
            Op::SubLslImmS0Al(..) => 7,
            Op::SubLslImmS0(..) => 7,
            Op::SubLslImmS1Al(..) => 7,
            Op::SubLslImmS1(..) => 7,
            Op::SubLslImm(..) => 7,
            Op::SubLsrImmS0Al(..) => 8,
            Op::SubLsrImmS0(..) => 8,
            Op::SubLsrImmS1Al(..) => 8,
            Op::SubLsrImmS1(..) => 8,
            Op::SubLsrImm(..) => 8,
            Op::AddImmS0Al(..) => 9,
            Op::AddImmS0(..) => 9,
            Op::AddImmS1Al(..) => 9,
            Op::AddImmS1(..) => 9,
            Op::AddImm(..) => 9,
            Op::AddLslImmS0Al(..) => 10,
            Op::AddLslImmS0(..) => 10,
            Op::AddLslImmS1Al(..) => 10,
            Op::AddLslImmS1(..) => 10,
            Op::AddLslImm(..) => 10,
            Op::AddLsrImmS0Al(..) => 11,
            Op::AddLsrImmS0(..) => 11,
            Op::AddLsrImmS1Al(..) => 11,
            Op::AddLsrImmS1(..) => 11,
            Op::AddLsrImm(..) => 11,
            Op::AdcImmS0Al(..) => 12,
            Op::AdcImmS0(..) => 12,
            Op::AdcImmS1Al(..) => 12,
            Op::AdcImmS1(..) => 12,
            Op::AdcImm(..) => 12,
            Op::AdcLslImmS0Al(..) => 13,
            Op::AdcLslImmS0(..) => 13,
            Op::AdcLslImmS1Al(..) => 13,
            Op::AdcLslImmS1(..) => 13,
            Op::AdcLslImm(..) => 13,
            Op::AdcLsrImmS0Al(..) => 14,
            Op::AdcLsrImmS0(..) => 14,
            Op::AdcLsrImmS1Al(..) => 14,
            Op::AdcLsrImmS1(..) => 14,
            Op::AdcLsrImm(..) => 14,
            Op::CmpImmAl(..) => 15,
            Op::CmpImm(..) => 15,
            Op::CmpLslImmAl(..) => 16,
            Op::CmpLslImm(..) => 16,
            Op::CmpLsrImmAl(..) => 17,
            Op::CmpLsrImm(..) => 17,
            Op::MovImmS0Al(..) => 18,
            Op::MovImmS0(..) => 18,
            Op::MovImmS1Al(..) => 18,
            Op::MovImmS1(..) => 18,
            Op::MovImm(..) => 18,
            Op::MovLslImmS0Al(..) => 19,
            Op::MovLslImmS0(..) => 19,
            Op::MovLslImmS1Al(..) => 19,
            Op::MovLslImmS1(..) => 19,
            Op::MovLslImm(..) => 19,
            Op::MovLsrImmS0Al(..) => 20,
            Op::MovLsrImmS0(..) => 20,
            Op::MovLsrImmS1Al(..) => 20,
            Op::MovLsrImmS1(..) => 20,
            Op::MovLsrImm(..) => 20,
            Op::MulS0Al(..) => 21,
            Op::MulS0(..) => 21,
            Op::MulS1Al(..) => 21,
            Op::MulS1(..) => 21,
            Op::Mul(..) => 21,
            Op::QaddAl(..) => 22,
            Op::Qadd(..) => 22,
            Op::LdrOffImmAl(..) => 23,
            Op::LdrOffImm(..) => 23,
            Op::LdrPreImmAl(..) => 24,
            Op::LdrPreImm(..) => 24,
            Op::LdrPreRegAl(..) => 25,
            Op::LdrPreReg(..) => 25,
            Op::LdrPostImmAl(..) => 26,
            Op::LdrPostImm(..) => 26,
            Op::LdrbOffImmAl(..) => 27,
            Op::LdrbOffImm(..) => 27,
            Op::LdrbPreImmAl(..) => 28,
            Op::LdrbPreImm(..) => 28,
            Op::LdrbPreRegAl(..) => 29,
            Op::LdrbPreReg(..) => 29,
            Op::LdrbPostImmAl(..) => 30,
            Op::LdrbPostImm(..) => 30,
            Op::StrOffImmAl(..) => 31,
            Op::StrOffImm(..) => 31,
            Op::StrPreImmAl(..) => 32,
            Op::StrPreImm(..) => 32,
            Op::StrPreRegAl(..) => 33,
            Op::StrPreReg(..) => 33,
            Op::StrPostImmAl(..) => 34,
            Op::StrPostImm(..) => 34,
            Op::LdrbtAl(..) => 35,
            Op::Ldrbt(..) => 35,
            Op::UxtahAl(..) => 36,
            Op::Uxtah(..) => 36,
            Op::UxthAl(..) => 37,
            Op::Uxth(..) => 37,
            Op::LdmIaAl(..) => 38,
            Op::LdmIa(..) => 38,
            Op::LdmDbAl(..) => 39,
            Op::LdmDb(..) => 39,
            Op::StmIaAl(..) => 40,
            Op::StmIa(..) => 40,
            Op::StmDbAl(..) => 41,
            Op::StmDb(..) => 41,
            Op::LdmxIaAl(..) => 42,
            Op::LdmxIa(..) => 42,
            Op::LdmxDbAl(..) => 43,
            Op::LdmxDb(..) => 43,
            Op::SrsIaAl(..) => 44,
            Op::SrsIa(..) => 44,
            Op::SrsDbAl(..) => 45,
            Op::SrsDb(..) => 45,
            Op::RfeIaAl(..) => 46,
            Op::RfeIa(..) => 46,
            Op::RfeDbAl(..) => 47,
            Op::RfeDb(..) => 47,
            Op::BAl(..) => 48,
            Op::B(..) => 48,
            Op::BlAl(..) => 49,
            Op::Bl(..) => 49,
            Op::Halt(..) => 50,
        }
    }

    pub fn name(&self) -> &'static str {
        BASE_NAMES[self.base_id()]
    }

    pub fn disasm(&self) -> String {
        match self {
            Op::AndImmS0Al(p) => printer::and_imm(p),
            Op::AndImmS0(p) => printer::and_imm(p),
            Op::AndImmS1Al(p) => printer::and_imm(p),
            Op::AndImmS1(p) => printer::and_imm(p),
            Op::AndImm(p) => printer::and_imm(p),
            Op::AndLslImmS0Al(p) => printer::and_lsl_imm(p),
            Op::AndLslImmS0(p) => printer::and_lsl_imm(p),
            Op::AndLslImmS1Al(p) => printer::and_lsl_imm(p),
            Op::AndLslImmS1(p) => printer::and_lsl_imm(p),
            Op::AndLslImm(p) => printer::and_lsl_imm(p),
            Op::AndLsrImmS0Al(p) => printer::and_lsr_imm(p),
            Op::AndLsrImmS0(p) => printer::and_lsr_imm(p),
            Op::AndLsrImmS1Al(p) => printer::and_lsr_imm(p),
            Op::AndLsrImmS1(p) => printer::and_lsr_imm(p),
            Op::AndLsrImm(p) => printer::and_lsr_imm(p),
            Op::EorImmS0Al(p) => printer::eor_imm(p),
            Op::EorImmS0(p) => printer::eor_imm(p),
            Op::EorImmS1Al(p) => printer::eor_imm(p),
            Op::EorImmS1(p) => printer::eor_imm(p),
            Op::EorImm(p) => printer::eor_imm(p),
            Op::EorLslImmS0Al(p) => printer::eor_lsl_imm(p),
            Op::EorLslImmS0(p) => printer::eor_lsl_imm(p),
            Op::EorLslImmS1Al(p) => printer::eor_lsl_imm(p),
            Op::EorLslImmS1(p) => printer::eor_lsl_imm(p),
            Op::EorLslImm(p) => printer::eor_lsl_imm(p),
            Op::EorLsrImmS0Al(p) => printer::eor_lsr_imm(p),
            Op::EorLsrImmS0(p) => printer::eor_lsr_imm(p),
            Op::EorLsrImmS1Al(p) => printer::eor_lsr_imm(p),
            Op::EorLsrImmS1(p) => printer::eor_lsr_imm(p),
            Op::EorLsrImm(p) => printer::eor_lsr_imm(p),
            Op::SubImmS0Al(p) => printer::sub_imm(p),
            Op::SubImmS0(p) => printer::sub_imm(p),
            Op::SubImmS1Al(p) => printer::sub_imm(p),
            Op::SubImmS1(p) => printer::sub_imm(p),
            Op::SubImm(p) => printer::sub_imm(p),
            Op::SubLslImmS0Al(p) => printer::sub_lsl_imm(p),
            Op::SubLslImmS0(p) => printer::sub_lsl_imm(p),
            Op::SubLslImmS1Al(p) => printer::sub_lsl_imm(p),
            Op::SubLslImmS1(p) => printer::sub_lsl_imm(p),
            Op::SubLslImm(p) => printer::sub_lsl_imm(p),
            Op::SubLsrImmS0Al(p) => printer::sub_lsr_imm(p),
            Op::SubLsrImmS0(p) => printer::sub_lsr_imm(p),
            Op::SubLsrImmS1Al(p) => printer::sub_lsr_imm(p),
            Op::SubLsrImmS1(p) => printer::sub_lsr_imm(p),
            Op::SubLsrImm(p) => printer::sub_lsr_imm(p),
            Op::AddImmS0Al(p) => printer::add_imm(p),
            Op::AddImmS0(p) => printer::add_imm(p),
            Op::AddImmS1Al(p) => printer::add_imm(p),
            Op::AddImmS1(p) => printer::add_imm(p),
            Op::AddImm(p) => printer::add_imm(p),
            Op::AddLslImmS0Al(p) => printer::add_lsl_imm(p),
            Op::AddLslImmS0(p) => printer::add_lsl_imm(p),
            Op::AddLslImmS1Al(p) => printer::add_lsl_imm(p),
            Op::AddLslImmS1(p) => printer::add_lsl_imm(p),
            Op::AddLslImm(p) => printer::add_lsl_imm(p),
            Op::AddLsrImmS0Al(p) => printer::add_lsr_imm(p),
            Op::AddLsrImmS0(p) => printer::add_lsr_imm(p),
            Op::AddLsrImmS1Al(p) => printer::add_lsr_imm(p),
            Op::AddLsrImmS1(p) => printer::add_lsr_imm(p),
            Op::AddLsrImm(p) => printer::add_lsr_imm(p),
            Op::AdcImmS0Al(p) => printer::adc_imm(p),
            Op::AdcImmS0(p) => printer::adc_imm(p),
            Op::AdcImmS1Al(p) => printer::adc_imm(p),
            Op::AdcImmS1(p) => printer::adc_imm(p),
            Op::AdcImm(p) => printer::adc_imm(p),
            Op::AdcLslImmS0Al(p) => printer::adc_lsl_imm(p),
            Op::AdcLslImmS0(p) => printer::adc_lsl_imm(p),
            Op::AdcLslImmS1Al(p) => printer::adc_lsl_imm(p),
            Op::AdcLslImmS1(p) => printer::adc_lsl_imm(p),
            Op::AdcLslImm(p) => printer::adc_lsl_imm(p),
            Op::AdcLsrImmS0Al(p) => printer::adc_lsr_imm(p),
            Op::AdcLsrImmS0(p) => printer::adc_lsr_imm(p),
            Op::AdcLsrImmS1Al(p) => printer::adc_lsr_imm(p),
            Op::AdcLsrImmS1(p) => printer::adc_lsr_imm(p),
            Op::AdcLsrImm(p) => printer::adc_lsr_imm(p),
            Op::CmpImmAl(p) => printer::cmp_imm(p),
            Op::CmpImm(p) => printer::cmp_imm(p),
            Op::CmpLslImmAl(p) => printer::cmp_lsl_imm(p),
            Op::CmpLslImm(p) => printer::cmp_lsl_imm(p),
            Op::CmpLsrImmAl(p) => printer::cmp_lsr_imm(p),
            Op::CmpLsrImm(p) => printer::cmp_lsr_imm(p),
            Op::MovImmS0Al(p) => printer::mov_imm(p),
            Op::MovImmS0(p) => printer::mov_imm(p),
            Op::MovImmS1Al(p) => printer::mov_imm(p),
            Op::MovImmS1(p) => printer::mov_imm(p),
            Op::MovImm(p) => printer::mov_imm(p),
            Op::MovLslImmS0Al(p) => printer::mov_lsl_imm(p),
            Op::MovLslImmS0(p) => printer::mov_lsl_imm(p),
            Op::MovLslImmS1Al(p) => printer::mov_lsl_imm(p),
            Op::MovLslImmS1(p) => printer::mov_lsl_imm(p),
            Op::MovLslImm(p) => printer::mov_lsl_imm(p),
            Op::MovLsrImmS0Al(p) => printer::mov_lsr_imm(p),
            Op::MovLsrImmS0(p) => printer::mov_lsr_imm(p),
            Op::MovLsrImmS1Al(p) => printer::mov_lsr_imm(p),
            Op::MovLsrImmS1(p) => printer::mov_lsr_imm(p),
            Op::MovLsrImm(p) => printer::mov_lsr_imm(p),
            Op::MulS0Al(p) => printer::mul(p),
            Op::MulS0(p) => printer::mul(p),
            Op::MulS1Al(p) => printer::mul(p),
            Op::MulS1(p) => printer::mul(p),
            Op::Mul(p) => printer::mul(p),
            Op::QaddAl(p) => printer::qadd(p),
            Op::Qadd(p) => printer::qadd(p),
            Op::LdrOffImmAl(p) => printer::ldr_off_imm(p),
            Op::LdrOffImm(p) => printer::ldr_off_imm(p),
            Op::LdrPreImmAl(p) => printer::ldr_pre_imm(p),
            Op::LdrPreImm(p) => printer::ldr_pre_imm(p),
            Op::LdrPreRegAl(p) => printer::ldr_pre_reg(p),
            Op::LdrPreReg(p) => printer::ldr_pre_reg(p),
            Op::LdrPostImmAl(p) => printer::ldr_post_imm(p),
            Op::LdrPostImm(p) => printer::ldr_post_imm(p),
            Op::LdrbOffImmAl(p) => printer::ldrb_off_imm(p),
            Op::LdrbOffImm(p) => printer::ldrb_off_imm(p),
            Op::LdrbPreImmAl(p) => printer::ldrb_pre_imm(p),
            Op::LdrbPreImm(p) => printer::ldrb_pre_imm(p),
            Op::LdrbPreRegAl(p) => printer::ldrb_pre_reg(p),
            Op::LdrbPreReg(p) => printer::ldrb_pre_reg(p),
            Op::LdrbPostImmAl(p) => printer::ldrb_post_imm(p),
            Op::LdrbPostImm(p) => printer::ldrb_post_imm(p),
            Op::StrOffImmAl(p) => printer::str_off_imm(p),
            Op::StrOffImm(p) => printer::str_off_imm(p),
            Op::StrPreImmAl(p) => printer::str_pre_imm(p),
            Op::StrPreImm(p) => printer::str_pre_imm(p),
            Op::StrPreRegAl(p) => printer::str_pre_reg(p),
            Op::StrPreReg(p) => printer::str_pre_reg(p),
            Op::StrPostImmAl(p) => printer::str_post_imm(p),
            Op::StrPostImm(p) => printer::str_post_imm(p),
            Op::LdrbtAl(p) => printer::ldrbt(p),
            Op::Ldrbt(p) => printer::ldrbt(p),
            Op::UxtahAl(p) => printer::uxtah(p),
            Op::Uxtah(p) => printer::uxtah(p),
            Op::UxthAl(p) => printer::uxth(p),
            Op::Uxth(p) => printer::uxth(p),
            Op::LdmIaAl(p) => printer::ldm_ia(p),
            Op::LdmIa(p) => printer::ldm_ia(p),
            Op::LdmDbAl(p) => printer::ldm_db(p),
            Op::LdmDb(p) => printer::ldm_db(p),
            Op::StmIaAl(p) => printer::stm_ia(p),
            Op::StmIa(p) => printer::stm_ia(p),
            Op::StmDbAl(p) => printer::stm_db(p),
            Op::StmDb(p) => printer::stm_db(p),
            Op::LdmxIaAl(p) => printer::ldmx_ia(p),
            Op::LdmxIa(p) => printer::ldmx_ia(p),
            Op::LdmxDbAl(p) => printer::ldmx_db(p),
            Op::LdmxDb(p) => printer::ldmx_db(p),
            Op::SrsIaAl(p) => printer::srs_ia(p),
            Op::SrsIa(p) => printer::srs_ia(p),
            Op::SrsDbAl(p) => printer::srs_db(p),
            Op::SrsDb(p) => printer::srs_db(p),
            Op::RfeIaAl(p) => printer::rfe_ia(p),
            Op::RfeIa(p) => printer::rfe_ia(p),
            Op::RfeDbAl(p) => printer::rfe_db(p),
            Op::RfeDb(p) => printer::rfe_db(p),
            Op::BAl(p) => printer::b(p),
            Op::B(p) => printer::b(p),
            Op::BlAl(p) => printer::bl(p),
            Op::Bl(p) => printer::bl(p),
            Op::Halt(p) => printer::halt(p),
        }
    }
}

/// The engine the shared run loop drives.
#[derive(Debug, Default, Clone, Copy)]
pub struct UarmIss;

impl Engine for UarmIss {
    type Instr = Op;

    fn decode(&self, word: u32) -> DecodeResult<Op> {
        decoder::decode(word)
    }

    fn execute(&self, instr: &Op, cpu: &mut CpuState) -> Result<Outcome, Fault> {
        instr.execute(cpu)
    }

    fn is_terminator(&self, instr: &Op) -> bool {
        instr.is_terminator()
    }

    fn profile_id(&self, instr: &Op) -> usize {
        instr.base_id()
    }

    fn profile_names(&self) -> Vec<String> {
        BASE_NAMES.iter().map(|n| n.to_string()).collect()
    }

    fn disasm(&self, instr: &Op) -> String {
        instr.disasm()
    }
}
