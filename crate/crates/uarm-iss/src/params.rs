// Generated by `issforge gen-iss`. Do not edit; regenerate instead.
//! Parameter record types: one per distinct inferred parameter list.

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct P0 {
    pub cond: u32,
    pub s_flag: u32,
    pub n: u32,
    pub d: u32,
    pub immed_8: u32,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct P1 {
    pub cond: u32,
    pub s_flag: u32,
    pub n: u32,
    pub d: u32,
    pub shift_imm: u32,
    pub m: u32,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct P2 {
    pub cond: u32,
    pub n: u32,
    pub immed_8: u32,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct P3 {
    pub cond: u32,
    pub n: u32,
    pub shift_imm: u32,
    pub m: u32,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct P4 {
    pub cond: u32,
    pub s_flag: u32,
    pub d: u32,
    pub immed_8: u32,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct P5 {
    pub cond: u32,
    pub s_flag: u32,
    pub d: u32,
    pub shift_imm: u32,
    pub m: u32,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct P6 {
    pub cond: u32,
    pub s_flag: u32,
    pub d: u32,
    pub s: u32,
    pub m: u32,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct P7 {
    pub cond: u32,
    pub n: u32,
    pub d: u32,
    pub m: u32,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct P8 {
    pub cond: u32,
    pub n: u32,
    pub d: u32,
    pub offset_12: u32,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct P9 {
    pub cond: u32,
    pub w_flag: u32,
    pub n: u32,
    pub reglist: u32,
    pub nb_reg_x4: u32,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct P10 {
    pub cond: u32,
    pub w_flag: u32,
    pub mode: u32,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct P11 {
    pub cond: u32,
    pub w_flag: u32,
    pub n: u32,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct P12 {
    pub cond: u32,
    pub signed_immed_24: u32,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct P13;

