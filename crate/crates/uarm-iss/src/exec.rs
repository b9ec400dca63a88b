// Generated by `issforge gen-iss`. Do not edit; regenerate instead.
//! One semantics routine per flat instruction: a straight-line
//! translation of the transformed pseudo-code against the shared
//! runtime. A data abort unwinds the routine and takes the vector.

use issforge_core::ir::eval;
use issforge_core::ir::Flag;
use issforge_core::sim::interp::{load_multiple, restore_cpsr, store_multiple};
use issforge_core::sim::mode_from_value;
use issforge_core::sim::{CpuState, Fault, Outcome};

use crate::params::*;

pub fn and_imm_s0_al(p: &P0, cpu: &mut CpuState) -> Result<Outcome, Fault> {
    let r = (|| -> Result<(), Fault> {
        let result: u32;
        let _shifter_carry_out: u32;
        let shifter_operand: u32;
        shifter_operand = p.immed_8;
        _shifter_carry_out = cpu.flag(Flag::C) as u32;
        result = cpu.read_reg(p.n)? & shifter_operand;
        let __wval = result;
        cpu.write_reg(p.d, __wval)?;
        Ok(())
    })();
    match r {
        Ok(()) => Ok(Outcome::Completed),
        Err(Fault::DataAbort { addr }) => {
            cpu.enter_data_abort(addr);
            Ok(Outcome::Aborted { addr })
        }
        Err(e) => Err(e),
    }
}

pub fn and_imm_s0(p: &P0, cpu: &mut CpuState) -> Result<Outcome, Fault> {
    let r = (|| -> Result<(), Fault> {
        let result: u32;
        let _shifter_carry_out: u32;
        let shifter_operand: u32;
        shifter_operand = p.immed_8;
        _shifter_carry_out = cpu.flag(Flag::C) as u32;
        if cpu.condition_passed(p.cond) {
            result = cpu.read_reg(p.n)? & shifter_operand;
            let __wval = result;
            cpu.write_reg(p.d, __wval)?;
        }
        Ok(())
    })();
    match r {
        Ok(()) => Ok(Outcome::Completed),
        Err(Fault::DataAbort { addr }) => {
            cpu.enter_data_abort(addr);
            Ok(Outcome::Aborted { addr })
        }
        Err(e) => Err(e),
    }
}

pub fn and_imm_s1_al(p: &P0, cpu: &mut CpuState) -> Result<Outcome, Fault> {
    let r = (|| -> Result<(), Fault> {
        let result: u32;
        let shifter_carry_out: u32;
        let shifter_operand: u32;
        shifter_operand = p.immed_8;
        shifter_carry_out = cpu.flag(Flag::C) as u32;
        result = cpu.read_reg(p.n)? & shifter_operand;
        let __wval = result;
        cpu.write_reg(p.d, __wval)?;
        cpu.set_flag(Flag::N, eval::extract_bits(result, 31u32, 31u32) != 0);
        cpu.set_flag(Flag::Z, result == 0u32);
        cpu.set_flag(Flag::C, shifter_carry_out != 0);
        Ok(())
    })();
    match r {
        Ok(()) => Ok(Outcome::Completed),
        Err(Fault::DataAbort { addr }) => {
            cpu.enter_data_abort(addr);
            Ok(Outcome::Aborted { addr })
        }
        Err(e) => Err(e),
    }
}

pub fn and_imm_s1(p: &P0, cpu: &mut CpuState) -> Result<Outcome, Fault> {
    let r = (|| -> Result<(), Fault> {
        let result: u32;
        let shifter_carry_out: u32;
        let shifter_operand: u32;
        shifter_operand = p.immed_8;
        shifter_carry_out = cpu.flag(Flag::C) as u32;
        if cpu.condition_passed(p.cond) {
            result = cpu.read_reg(p.n)? & shifter_operand;
            let __wval = result;
            cpu.write_reg(p.d, __wval)?;
            cpu.set_flag(Flag::N, eval::extract_bits(result, 31u32, 31u32) != 0);
            cpu.set_flag(Flag::Z, result == 0u32);
            cpu.set_flag(Flag::C, shifter_carry_out != 0);
        }
        Ok(())
    })();
    match r {
        Ok(()) => Ok(Outcome::Completed),
        Err(Fault::DataAbort { addr }) => {
            cpu.enter_data_abort(addr);
            Ok(Outcome::Aborted { addr })
        }
        Err(e) => Err(e),
    }
}

pub fn and_imm(p: &P0, cpu: &mut CpuState) -> Result<Outcome, Fault> {
    let r = (|| -> Result<(), Fault> {
        let result: u32;
        let shifter_carry_out: u32;
        let shifter_operand: u32;
        shifter_operand = p.immed_8;
        shifter_carry_out = cpu.flag(Flag::C) as u32;
        if cpu.condition_passed(p.cond) {
            result = cpu.read_reg(p.n)? & shifter_operand;
            let __wval = result;
            cpu.write_reg(p.d, __wval)?;
            if p.s_flag == 1u32 {
                cpu.set_flag(Flag::N, eval::extract_bits(result, 31u32, 31u32) != 0);
                cpu.set_flag(Flag::Z, result == 0u32);
                cpu.set_flag(Flag::C, shifter_carry_out != 0);
            }
        }
        Ok(())
    })();
    match r {
        Ok(()) => Ok(Outcome::Completed),
        Err(Fault::DataAbort { addr }) => {
            cpu.enter_data_abort(addr);
            Ok(Outcome::Aborted { addr })
        }
        Err(e) => Err(e),
    }
}

pub fn and_lsl_imm_s0_al(p: &P1, cpu: &mut CpuState) -> Result<Outcome, Fault> {
    let r = (|| -> Result<(), Fault> {
        let result: u32;
        let _shifter_carry_out: u32;
        let shifter_operand: u32;
        if p.shift_imm == 0u32 {
            shifter_operand = cpu.read_reg(p.m)?;
            _shifter_carry_out = cpu.flag(Flag::C) as u32;
        } else {
            shifter_operand = eval::lsl(cpu.read_reg(p.m)?, p.shift_imm);
            _shifter_carry_out = eval::extract_bits(cpu.read_reg(p.m)?, 32u32.wrapping_sub(p.shift_imm), 32u32.wrapping_sub(p.shift_imm));
        }
        result = cpu.read_reg(p.n)? & shifter_operand;
        let __wval = result;
        cpu.write_reg(p.d, __wval)?;
        Ok(())
    })();
    match r {
        Ok(()) => Ok(Outcome::Completed),
        Err(Fault::DataAbort { addr }) => {
            cpu.enter_data_abort(addr);
            Ok(Outcome::Aborted { addr })
        }
        Err(e) => Err(e),
    }
}

pub fn and_lsl_imm_s0(p: &P1, cpu: &mut CpuState) -> Result<Outcome, Fault> {
    let r = (|| -> Result<(), Fault> {
        let result: u32;
        let _shifter_carry_out: u32;
        let shifter_operand: u32;
        if p.shift_imm == 0u32 {
            shifter_operand = cpu.read_reg(p.m)?;
            _shifter_carry_out = cpu.flag(Flag::C) as u32;
        } else {
            shifter_operand = eval::lsl(cpu.read_reg(p.m)?, p.shift_imm);
            _shifter_carry_out = eval::extract_bits(cpu.read_reg(p.m)?, 32u32.wrapping_sub(p.shift_imm), 32u32.wrapping_sub(p.shift_imm));
        }
        if cpu.condition_passed(p.cond) {
            result = cpu.read_reg(p.n)? & shifter_operand;
            let __wval = result;
            cpu.write_reg(p.d, __wval)?;
        }
        Ok(())
    })();
    match r {
        Ok(()) => Ok(Outcome::Completed),
        Err(Fault::DataAbort { addr }) => {
            cpu.enter_data_abort(addr);
            Ok(Outcome::Aborted { addr })
        }
        Err(e) => Err(e),
    }
}

pub fn and_lsl_imm_s1_al(p: &P1, cpu: &mut CpuState) -> Result<Outcome, Fault> {
    let r = (|| -> Result<(), Fault> {
        let result: u32;
        let shifter_carry_out: u32;
        let shifter_operand: u32;
        if p.shift_imm == 0u32 {
            shifter_operand = cpu.read_reg(p.m)?;
            shifter_carry_out = cpu.flag(Flag::C) as u32;
        } else {
            shifter_operand = eval::lsl(cpu.read_reg(p.m)?, p.shift_imm);
            shifter_carry_out = eval::extract_bits(cpu.read_reg(p.m)?, 32u32.wrapping_sub(p.shift_imm), 32u32.wrapping_sub(p.shift_imm));
        }
        result = cpu.read_reg(p.n)? & shifter_operand;
        let __wval = result;
        cpu.write_reg(p.d, __wval)?;
        cpu.set_flag(Flag::N, eval::extract_bits(result, 31u32, 31u32) != 0);
        cpu.set_flag(Flag::Z, result == 0u32);
        cpu.set_flag(Flag::C, shifter_carry_out != 0);
        Ok(())
    })();
    match r {
        Ok(()) => Ok(Outcome::Completed),
        Err(Fault::DataAbort { addr }) => {
            cpu.enter_data_abort(addr);
            Ok(Outcome::Aborted { addr })
        }
        Err(e) => Err(e),
    }
}

pub fn and_lsl_imm_s1(p: &P1, cpu: &mut CpuState) -> Result<Outcome, Fault> {
    let r = (|| -> Result<(), Fault> {
        let result: u32;
        let shifter_carry_out: u32;
        let shifter_operand: u32;
        if p.shift_imm == 0u32 {
            shifter_operand = cpu.read_reg(p.m)?;
            shifter_carry_out = cpu.flag(Flag::C) as u32;
        } else {
            shifter_operand = eval::lsl(cpu.read_reg(p.m)?, p.shift_imm);
            shifter_carry_out = eval::extract_bits(cpu.read_reg(p.m)?, 32u32.wrapping_sub(p.shift_imm), 32u32.wrapping_sub(p.shift_imm));
        }
        if cpu.condition_passed(p.cond) {
            result = cpu.read_reg(p.n)? & shifter_operand;
            let __wval = result;
            cpu.write_reg(p.d, __wval)?;
            cpu.set_flag(Flag::N, eval::extract_bits(result, 31u32, 31u32) != 0);
            cpu.set_flag(Flag::Z, result == 0u32);
            cpu.set_flag(Flag::C, shifter_carry_out != 0);
        }
        Ok(())
    })();
    match r {
        Ok(()) => Ok(Outcome::Completed),
        Err(Fault::DataAbort { addr }) => {
            cpu.enter_data_abort(addr);
            Ok(Outcome::Aborted { addr })
        }
        Err(e) => Err(e),
    }
}

pub fn and_lsl_imm(p: &P1, cpu: &mut CpuState) -> Result<Outcome, Fault> {
    let r = (|| -> Result<(), Fault> {
        let result: u32;
        let shifter_carry_out: u32;
        let shifter_operand: u32;
        if p.shift_imm == 0u32 {
            shifter_operand = cpu.read_reg(p.m)?;
            shifter_carry_out = cpu.flag(Flag::C) as u32;
        } else {
            shifter_operand = eval::lsl(cpu.read_reg(p.m)?, p.shift_imm);
            shifter_carry_out = eval::extract_bits(cpu.read_reg(p.m)?, 32u32.wrapping_sub(p.shift_imm), 32u32.wrapping_sub(p.shift_imm));
        }
        if cpu.condition_passed(p.cond) {
            result = cpu.read_reg(p.n)? & shifter_operand;
            let __wval = result;
            cpu.write_reg(p.d, __wval)?;
            if p.s_flag == 1u32 {
                cpu.set_flag(Flag::N, eval::extract_bits(result, 31u32, 31u32) != 0);
                cpu.set_flag(Flag::Z, result == 0u32);
                cpu.set_flag(Flag::C, shifter_carry_out != 0);
            }
        }
        Ok(())
    })();
    match r {
        Ok(()) => Ok(Outcome::Completed),
        Err(Fault::DataAbort { addr }) => {
            cpu.enter_data_abort(addr);
            Ok(Outcome::Aborted { addr })
        }
        Err(e) => Err(e),
    }
}

pub fn and_lsr_imm_s0_al(p: &P1, cpu: &mut CpuState) -> Result<Outcome, Fault> {
    let r = (|| -> Result<(), Fault> {
        let result: u32;
        let _shifter_carry_out: u32;
        let shifter_operand: u32;
        if p.shift_imm == 0u32 {
            shifter_operand = 0u32;
            _shifter_carry_out = eval::extract_bits(cpu.read_reg(p.m)?, 31u32, 31u32);
        } else {
            shifter_operand = eval::lsr(cpu.read_reg(p.m)?, p.shift_imm);
            _shifter_carry_out = eval::extract_bits(cpu.read_reg(p.m)?, p.shift_imm.wrapping_sub(1u32), p.shift_imm.wrapping_sub(1u32));
        }
        result = cpu.read_reg(p.n)? & shifter_operand;
        let __wval = result;
        cpu.write_reg(p.d, __wval)?;
        Ok(())
    })();
    match r {
        Ok(()) => Ok(Outcome::Completed),
        Err(Fault::DataAbort { addr }) => {
            cpu.enter_data_abort(addr);
            Ok(Outcome::Aborted { addr })
        }
        Err(e) => Err(e),
    }
}

pub fn and_lsr_imm_s0(p: &P1, cpu: &mut CpuState) -> Result<Outcome, Fault> {
    let r = (|| -> Result<(), Fault> {
        let result: u32;
        let _shifter_carry_out: u32;
        let shifter_operand: u32;
        if p.shift_imm == 0u32 {
            shifter_operand = 0u32;
            _shifter_carry_out = eval::extract_bits(cpu.read_reg(p.m)?, 31u32, 31u32);
        } else {
            shifter_operand = eval::lsr(cpu.read_reg(p.m)?, p.shift_imm);
            _shifter_carry_out = eval::extract_bits(cpu.read_reg(p.m)?, p.shift_imm.wrapping_sub(1u32), p.shift_imm.wrapping_sub(1u32));
        }
        if cpu.condition_passed(p.cond) {
            result = cpu.read_reg(p.n)? & shifter_operand;
            let __wval = result;
            cpu.write_reg(p.d, __wval)?;
        }
        Ok(())
    })();
    match r {
        Ok(()) => Ok(Outcome::Completed),
        Err(Fault::DataAbort { addr }) => {
            cpu.enter_data_abort(addr);
            Ok(Outcome::Aborted { addr })
        }
        Err(e) => Err(e),
    }
}

pub fn and_lsr_imm_s1_al(p: &P1, cpu: &mut CpuState) -> Result<Outcome, Fault> {
    let r = (|| -> Result<(), Fault> {
        let result: u32;
        let shifter_carry_out: u32;
        let shifter_operand: u32;
        if p.shift_imm == 0u32 {
            shifter_operand = 0u32;
            shifter_carry_out = eval::extract_bits(cpu.read_reg(p.m)?, 31u32, 31u32);
        } else {
            shifter_operand = eval::lsr(cpu.read_reg(p.m)?, p.shift_imm);
            shifter_carry_out = eval::extract_bits(cpu.read_reg(p.m)?, p.shift_imm.wrapping_sub(1u32), p.shift_imm.wrapping_sub(1u32));
        }
        result = cpu.read_reg(p.n)? & shifter_operand;
        let __wval = result;
        cpu.write_reg(p.d, __wval)?;
        cpu.set_flag(Flag::N, eval::extract_bits(result, 31u32, 31u32) != 0);
        cpu.set_flag(Flag::Z, result == 0u32);
        cpu.set_flag(Flag::C, shifter_carry_out != 0);
        Ok(())
    })();
    match r {
        Ok(()) => Ok(Outcome::Completed),
        Err(Fault::DataAbort { addr }) => {
            cpu.enter_data_abort(addr);
            Ok(Outcome::Aborted { addr })
        }
        Err(e) => Err(e),
    }
}

pub fn and_lsr_imm_s1(p: &P1, cpu: &mut CpuState) -> Result<Outcome, Fault> {
    let r = (|| -> Result<(), Fault> {
        let result: u32;
        let shifter_carry_out: u32;
        let shifter_operand: u32;
        if p.shift_imm == 0u32 {
            shifter_operand = 0u32;
            shifter_carry_out = eval::extract_bits(cpu.read_reg(p.m)?, 31u32, 31u32);
        } else {
            shifter_operand = eval::lsr(cpu.read_reg(p.m)?, p.shift_imm);
            shifter_carry_out = eval::extract_bits(cpu.read_reg(p.m)?, p.shift_imm.wrapping_sub(1u32), p.shift_imm.wrapping_sub(1u32));
        }
        if cpu.condition_passed(p.cond) {
            result = cpu.read_reg(p.n)? & shifter_operand;
            let __wval = result;
            cpu.write_reg(p.d, __wval)?;
            cpu.set_flag(Flag::N, eval::extract_bits(result, 31u32, 31u32) != 0);
            cpu.set_flag(Flag::Z, result == 0u32);
            cpu.set_flag(Flag::C, shifter_carry_out != 0);
        }
        Ok(())
    })();
    match r {
        Ok(()) => Ok(Outcome::Completed),
        Err(Fault::DataAbort { addr }) => {
            cpu.enter_data_abort(addr);
            Ok(Outcome::Aborted { addr })
        }
        Err(e) => Err(e),
    }
}

pub fn and_lsr_imm(p: &P1, cpu: &mut CpuState) -> Result<Outcome, Fault> {
    let r = (|| -> Result<(), Fault> {
        let result: u32;
        let shifter_carry_out: u32;
        let shifter_operand: u32;
        if p.shift_imm == 0u32 {
            shifter_operand = 0u32;
            shifter_carry_out = eval::extract_bits(cpu.read_reg(p.m)?, 31u32, 31u32);
        } else {
            shifter_operand = eval::lsr(cpu.read_reg(p.m)?, p.shift_imm);
            shifter_carry_out = eval::extract_bits(cpu.read_reg(p.m)?, p.shift_imm.wrapping_sub(1u32), p.shift_imm.wrapping_sub(1u32));
        }
        if cpu.condition_passed(p.cond) {
            result = cpu.read_reg(p.n)? & shifter_operand;
            let __wval = result;
            cpu.write_reg(p.d, __wval)?;
            if p.s_flag == 1u32 {
                cpu.set_flag(Flag::N, eval::extract_bits(result, 31u32, 31u32) != 0);
                cpu.set_flag(Flag::Z, result == 0u32);
                cpu.set_flag(Flag::C, shifter_carry_out != 0);
            }
        }
        Ok(())
    })();
    match r {
        Ok(()) => Ok(Outcome::Completed),
        Err(Fault::DataAbort { addr }) => {
            cpu.enter_data_abort(addr);
            Ok(Outcome::Aborted { addr })
        }
        Err(e) => Err(e),
    }
}

pub fn eor_imm_s0_al(p: &P0, cpu: &mut CpuState) -> Result<Outcome, Fault> {
    let r = (|| -> Result<(), Fault> {
        let result: u32;
        let _shifter_carry_out: u32;
        let shifter_operand: u32;
        shifter_operand = p.immed_8;
        _shifter_carry_out = cpu.flag(Flag::C) as u32;
        result = cpu.read_reg(p.n)? ^ shifter_operand;
        let __wval = result;
        cpu.write_reg(p.d, __wval)?;
        Ok(())
    })();
    match r {
        Ok(()) => Ok(Outcome::Completed),
        Err(Fault::DataAbort { addr }) => {
            cpu.enter_data_abort(addr);
            Ok(Outcome::Aborted { addr })
        }
        Err(e) => Err(e),
    }
}

pub fn eor_imm_s0(p: &P0, cpu: &mut CpuState) -> Result<Outcome, Fault> {
    let r = (|| -> Result<(), Fault> {
        let result: u32;
        let _shifter_carry_out: u32;
        let shifter_operand: u32;
        shifter_operand = p.immed_8;
        _shifter_carry_out = cpu.flag(Flag::C) as u32;
        if cpu.condition_passed(p.cond) {
            result = cpu.read_reg(p.n)? ^ shifter_operand;
            let __wval = result;
            cpu.write_reg(p.d, __wval)?;
        }
        Ok(())
    })();
    match r {
        Ok(()) => Ok(Outcome::Completed),
        Err(Fault::DataAbort { addr }) => {
            cpu.enter_data_abort(addr);
            Ok(Outcome::Aborted { addr })
        }
        Err(e) => Err(e),
    }
}

pub fn eor_imm_s1_al(p: &P0, cpu: &mut CpuState) -> Result<Outcome, Fault> {
    let r = (|| -> Result<(), Fault> {
        let result: u32;
        let shifter_carry_out: u32;
        let shifter_operand: u32;
        shifter_operand = p.immed_8;
        shifter_carry_out = cpu.flag(Flag::C) as u32;
        result = cpu.read_reg(p.n)? ^ shifter_operand;
        let __wval = result;
        cpu.write_reg(p.d, __wval)?;
        cpu.set_flag(Flag::N, eval::extract_bits(result, 31u32, 31u32) != 0);
        cpu.set_flag(Flag::Z, result == 0u32);
        cpu.set_flag(Flag::C, shifter_carry_out != 0);
        Ok(())
    })();
    match r {
        Ok(()) => Ok(Outcome::Completed),
        Err(Fault::DataAbort { addr }) => {
            cpu.enter_data_abort(addr);
            Ok(Outcome::Aborted { addr })
        }
        Err(e) => Err(e),
    }
}

pub fn eor_imm_s1(p: &P0, cpu: &mut CpuState) -> Result<Outcome, Fault> {
    let r = (|| -> Result<(), Fault> {
        let result: u32;
        let shifter_carry_out: u32;
        let shifter_operand: u32;
        shifter_operand = p.immed_8;
        shifter_carry_out = cpu.flag(Flag::C) as u32;
        if cpu.condition_passed(p.cond) {
            result = cpu.read_reg(p.n)? ^ shifter_operand;
            let __wval = result;
            cpu.write_reg(p.d, __wval)?;
            cpu.set_flag(Flag::N, eval::extract_bits(result, 31u32, 31u32) != 0);
            cpu.set_flag(Flag::Z, result == 0u32);
            cpu.set_flag(Flag::C, shifter_carry_out != 0);
        }
        Ok(())
    })();
    match r {
        Ok(()) => Ok(Outcome::Completed),
        Err(Fault::DataAbort { addr }) => {
            cpu.enter_data_abort(addr);
            Ok(Outcome::Aborted { addr })
        }
        Err(e) => Err(e),
    }
}

pub fn eor_imm(p: &P0, cpu: &mut CpuState) -> Result<Outcome, Fault> {
    let r = (|| -> Result<(), Fault> {
        let result: u32;
        let shifter_carry_out: u32;
        let shifter_operand: u32;
        shifter_operand = p.immed_8;
        shifter_carry_out = cpu.flag(Flag::C) as u32;
        if cpu.condition_passed(p.cond) {
            result = cpu.read_reg(p.n)? ^ shifter_operand;
            let __wval = result;
            cpu.write_reg(p.d, __wval)?;
            if p.s_flag == 1u32 {
                cpu.set_flag(Flag::N, eval::extract_bits(result, 31u32, 31u32) != 0);
                cpu.set_flag(Flag::Z, result == 0u32);
                cpu.set_flag(Flag::C, shifter_carry_out != 0);
            }
        }
        Ok(())
    })();
    match r {
        Ok(()) => Ok(Outcome::Completed),
        Err(Fault::DataAbort { addr }) => {
            cpu.enter_data_abort(addr);
            Ok(Outcome::Aborted { addr })
        }
        Err(e) => Err(e),
    }
}

pub fn eor_lsl_imm_s0_al(p: &P1, cpu: &mut CpuState) -> Result<Outcome, Fault> {
    let r = (|| -> Result<(), Fault> {
        let result: u32;
        let _shifter_carry_out: u32;
        let shifter_operand: u32;
        if p.shift_imm == 0u32 {
            shifter_operand = cpu.read_reg(p.m)?;
            _shifter_carry_out = cpu.flag(Flag::C) as u32;
        } else {
            shifter_operand = eval::lsl(cpu.read_reg(p.m)?, p.shift_imm);
            _shifter_carry_out = eval::extract_bits(cpu.read_reg(p.m)?, 32u32.wrapping_sub(p.shift_imm), 32u32.wrapping_sub(p.shift_imm));
        }
        result = cpu.read_reg(p.n)? ^ shifter_operand;
        let __wval = result;
        cpu.write_reg(p.d, __wval)?;
        Ok(())
    })();
    match r {
        Ok(()) => Ok(Outcome::Completed),
        Err(Fault::DataAbort { addr }) => {
            cpu.enter_data_abort(addr);
            Ok(Outcome::Aborted { addr })
        }
        Err(e) => Err(e),
    }
}

pub fn eor_lsl_imm_s0(p: &P1, cpu: &mut CpuState) -> Result<Outcome, Fault> {
    let r = (|| -> Result<(), Fault> {
        let result: u32;
        let _shifter_carry_out: u32;
        let shifter_operand: u32;
        if p.shift_imm == 0u32 {
            shifter_operand = cpu.read_reg(p.m)?;
            _shifter_carry_out = cpu.flag(Flag::C) as u32;
        } else {
            shifter_operand = eval::lsl(cpu.read_reg(p.m)?, p.shift_imm);
            _shifter_carry_out = eval::extract_bits(cpu.read_reg(p.m)?, 32u32.wrapping_sub(p.shift_imm), 32u32.wrapping_sub(p.shift_imm));
        }
        if cpu.condition_passed(p.cond) {
            result = cpu.read_reg(p.n)? ^ shifter_operand;
            let __wval = result;
            cpu.write_reg(p.d, __wval)?;
        }
        Ok(())
    })();
    match r {
        Ok(()) => Ok(Outcome::Completed),
        Err(Fault::DataAbort { addr }) => {
            cpu.enter_data_abort(addr);
            Ok(Outcome::Aborted { addr })
        }
        Err(e) => Err(e),
    }
}

pub fn eor_lsl_imm_s1_al(p: &P1, cpu: &mut CpuState) -> Result<Outcome, Fault> {
    let r = (|| -> Result<(), Fault> {
        let result: u32;
        let shifter_carry_out: u32;
        let shifter_operand: u32;
        if p.shift_imm == 0u32 {
            shifter_operand = cpu.read_reg(p.m)?;
            shifter_carry_out = cpu.flag(Flag::C) as u32;
        } else {
            shifter_operand = eval::lsl(cpu.read_reg(p.m)?, p.shift_imm);
            shifter_carry_out = eval::extract_bits(cpu.read_reg(p.m)?, 32u32.wrapping_sub(p.shift_imm), 32u32.wrapping_sub(p.shift_imm));
        }
        result = cpu.read_reg(p.n)? ^ shifter_operand;
        let __wval = result;
        cpu.write_reg(p.d, __wval)?;
        cpu.set_flag(Flag::N, eval::extract_bits(result, 31u32, 31u32) != 0);
        cpu.set_flag(Flag::Z, result == 0u32);
        cpu.set_flag(Flag::C, shifter_carry_out != 0);
        Ok(())
    })();
    match r {
        Ok(()) => Ok(Outcome::Completed),
        Err(Fault::DataAbort { addr }) => {
            cpu.enter_data_abort(addr);
            Ok(Outcome::Aborted { addr })
        }
        Err(e) => Err(e),
    }
}

pub fn eor_lsl_imm_s1(p: &P1, cpu: &mut CpuState) -> Result<Outcome, Fault> {
    let r = (|| -> Result<(), Fault> {
        let result: u32;
        let shifter_carry_out: u32;
        let shifter_operand: u32;
        if p.shift_imm == 0u32 {
            shifter_operand = cpu.read_reg(p.m)?;
            shifter_carry_out = cpu.flag(Flag::C) as u32;
        } else {
            shifter_operand = eval::lsl(cpu.read_reg(p.m)?, p.shift_imm);
            shifter_carry_out = eval::extract_bits(cpu.read_reg(p.m)?, 32u32.wrapping_sub(p.shift_imm), 32u32.wrapping_sub(p.shift_imm));
        }
        if cpu.condition_passed(p.cond) {
            result = cpu.read_reg(p.n)? ^ shifter_operand;
            let __wval = result;
            cpu.write_reg(p.d, __wval)?;
            cpu.set_flag(Flag::N, eval::extract_bits(result, 31u32, 31u32) != 0);
            cpu.set_flag(Flag::Z, result == 0u32);
            cpu.set_flag(Flag::C, shifter_carry_out != 0);
        }
        Ok(())
    })();
    match r {
        Ok(()) => Ok(Outcome::Completed),
        Err(Fault::DataAbort { addr }) => {
            cpu.enter_data_abort(addr);
            Ok(Outcome::Aborted { addr })
        }
        Err(e) => Err(e),
    }
}

pub fn eor_lsl_imm(p: &P1, cpu: &mut CpuState) -> Result<Outcome, Fault> {
    let r = (|| -> Result<(), Fault> {
        let result: u32;
        let shifter_carry_out: u32;
        let shifter_operand: u32;
        if p.shift_imm == 0u32 {
            shifter_operand = cpu.read_reg(p.m)?;
            shifter_carry_out = cpu.flag(Flag::C) as u32;
        } else {
            shifter_operand = eval::lsl(cpu.read_reg(p.m)?, p.shift_imm);
            shifter_carry_out = eval::extract_bits(cpu.read_reg(p.m)?, 32u32.wrapping_sub(p.shift_imm), 32u32.wrapping_sub(p.shift_imm));
        }
        if cpu.condition_passed(p.cond) {
            result = cpu.read_reg(p.n)? ^ shifter_operand;
            let __wval = result;
            cpu.write_reg(p.d, __wval)?;
            if p.s_flag == 1u32 {
                cpu.set_flag(Flag::N, eval::extract_bits(result, 31u32, 31u32) != 0);
                cpu.set_flag(Flag::Z, result == 0u32);
                cpu.set_flag(Flag::C, shifter_carry_out != 0);
            }
        }
        Ok(())
    })();
    match r {
        Ok(()) => Ok(Outcome::Completed),
        Err(Fault::DataAbort { addr }) => {
            cpu.enter_data_abort(addr);
            Ok(Outcome::Aborted { addr })
        }
        Err(e) => Err(e),
    }
}

pub fn eor_lsr_imm_s0_al(p: &P1, cpu: &mut CpuState) -> Result<Outcome, Fault> {
    let r = (|| -> Result<(), Fault> {
        let result: u32;
        let _shifter_carry_out: u32;
        let shifter_operand: u32;
        if p.shift_imm == 0u32 {
            shifter_operand = 0u32;
            _shifter_carry_out = eval::extract_bits(cpu.read_reg(p.m)?, 31u32, 31u32);
        } else {
            shifter_operand = eval::lsr(cpu.read_reg(p.m)?, p.shift_imm);
            _shifter_carry_out = eval::extract_bits(cpu.read_reg(p.m)?, p.shift_imm.wrapping_sub(1u32), p.shift_imm.wrapping_sub(1u32));
        }
        result = cpu.read_reg(p.n)? ^ shifter_operand;
        let __wval = result;
        cpu.write_reg(p.d, __wval)?;
        Ok(())
    })();
    match r {
        Ok(()) => Ok(Outcome::Completed),
        Err(Fault::DataAbort { addr }) => {
            cpu.enter_data_abort(addr);
            Ok(Outcome::Aborted { addr })
        }
        Err(e) => Err(e),
    }
}

pub fn eor_lsr_imm_s0(p: &P1, cpu: &mut CpuState) -> Result<Outcome, Fault> {
    let r = (|| -> Result<(), Fault> {
        let result: u32;
        let _shifter_carry_out: u32;
        let shifter_operand: u32;
        if p.shift_imm == 0u32 {
            shifter_operand = 0u32;
            _shifter_carry_out = eval::extract_bits(cpu.read_reg(p.m)?, 31u32, 31u32);
        } else {
            shifter_operand = eval::lsr(cpu.read_reg(p.m)?, p.shift_imm);
            _shifter_carry_out = eval::extract_bits(cpu.read_reg(p.m)?, p.shift_imm.wrapping_sub(1u32), p.shift_imm.wrapping_sub(1u32));
        }
        if cpu.condition_passed(p.cond) {
            result = cpu.read_reg(p.n)? ^ shifter_operand;
            let __wval = result;
            cpu.write_reg(p.d, __wval)?;
        }
        Ok(())
    })();
    match r {
        Ok(()) => Ok(Outcome::Completed),
        Err(Fault::DataAbort { addr }) => {
            cpu.enter_data_abort(addr);
            Ok(Outcome::Aborted { addr })
        }
        Err(e) => Err(e),
    }
}

pub fn eor_lsr_imm_s1_al(p: &P1, cpu: &mut CpuState) -> Result<Outcome, Fault> {
    let r = (|| -> Result<(), Fault> {
        let result: u32;
        let shifter_carry_out: u32;
        let shifter_operand: u32;
        if p.shift_imm == 0u32 {
            shifter_operand = 0u32;
            shifter_carry_out = eval::extract_bits(cpu.read_reg(p.m)?, 31u32, 31u32);
        } else {
            shifter_operand = eval::lsr(cpu.read_reg(p.m)?, p.shift_imm);
            shifter_carry_out = eval::extract_bits(cpu.read_reg(p.m)?, p.shift_imm.wrapping_sub(1u32), p.shift_imm.wrapping_sub(1u32));
        }
        result = cpu.read_reg(p.n)? ^ shifter_operand;
        let __wval = result;
        cpu.write_reg(p.d, __wval)?;
        cpu.set_flag(Flag::N, eval::extract_bits(result, 31u32, 31u32) != 0);
        cpu.set_flag(Flag::Z, result == 0u32);
        cpu.set_flag(Flag::C, shifter_carry_out != 0);
        Ok(())
    })();
    match r {
        Ok(()) => Ok(Outcome::Completed),
        Err(Fault::DataAbort { addr }) => {
            cpu.enter_data_abort(addr);
            Ok(Outcome::Aborted { addr })
        }
        Err(e) => Err(e),
    }
}

pub fn eor_lsr_imm_s1(p: &P1, cpu: &mut CpuState) -> Result<Outcome, Fault> {
    let r = (|| -> Result<(), Fault> {
        let result: u32;
        let shifter_carry_out: u32;
        let shifter_operand: u32;
        if p.shift_imm == 0u32 {
            shifter_operand = 0u32;
            shifter_carry_out = eval::extract_bits(cpu.read_reg(p.m)?, 31u32, 31u32);
        } else {
            shifter_operand = eval::lsr(cpu.read_reg(p.m)?, p.shift_imm);
            shifter_carry_out = eval::extract_bits(cpu.read_reg(p.m)?, p.shift_imm.wrapping_sub(1u32), p.shift_imm.wrapping_sub(1u32));
        }
        if cpu.condition_passed(p.cond) {
            result = cpu.read_reg(p.n)? ^ shifter_operand;
            let __wval = result;
            cpu.write_reg(p.d, __wval)?;
            cpu.set_flag(Flag::N, eval::extract_bits(result, 31u32, 31u32) != 0);
            cpu.set_flag(Flag::Z, result == 0u32);
            cpu.set_flag(Flag::C, shifter_carry_out != 0);
        }
        Ok(())
    })();
    match r {
        Ok(()) => Ok(Outcome::Completed),
        Err(Fault::DataAbort { addr }) => {
            cpu.enter_data_abort(addr);
            Ok(Outcome::Aborted { addr })
        }
        Err(e) => Err(e),
    }
}

pub fn eor_lsr_imm(p: &P1, cpu: &mut CpuState) -> Result<Outcome, Fault> {
    let r = (|| -> Result<(), Fault> {
        let result: u32;
        let shifter_carry_out: u32;
        let shifter_operand: u32;
        if p.shift_imm == 0u32 {
            shifter_operand = 0u32;
            shifter_carry_out = eval::extract_bits(cpu.read_reg(p.m)?, 31u32, 31u32);
        } else {
            shifter_operand = eval::lsr(cpu.read_reg(p.m)?, p.shift_imm);
            shifter_carry_out = eval::extract_bits(cpu.read_reg(p.m)?, p.shift_imm.wrapping_sub(1u32), p.shift_imm.wrapping_sub(1u32));
        }
        if cpu.condition_passed(p.cond) {
            result = cpu.read_reg(p.n)? ^ shifter_operand;
            let __wval = result;
            cpu.write_reg(p.d, __wval)?;
            if p.s_flag == 1u32 {
                cpu.set_flag(Flag::N, eval::extract_bits(result, 31u32, 31u32) != 0);
                cpu.set_flag(Flag::Z, result == 0u32);
                cpu.set_flag(Flag::C, shifter_carry_out != 0);
            }
        }
        Ok(())
    })();
    match r {
        Ok(()) => Ok(Outcome::Completed),
        Err(Fault::DataAbort { addr }) => {
            cpu.enter_data_abort(addr);
            Ok(Outcome::Aborted { addr })
        }
        Err(e) => Err(e),
    }
}

pub fn sub_imm_s0_al(p: &P0, cpu: &mut CpuState) -> Result<Outcome, Fault> {
    let r = (|| -> Result<(), Fault> {
        let operand1: u32;
        let result: u32;
        let _shifter_carry_out: u32;
        let shifter_operand: u32;
        shifter_operand = p.immed_8;
        _shifter_carry_out = cpu.flag(Flag::C) as u32;
        operand1 = cpu.read_reg(p.n)?;
        result = operand1.wrapping_sub(shifter_operand);
        let __wval = result;
        cpu.write_reg(p.d, __wval)?;
        Ok(())
    })();
    match r {
        Ok(()) => Ok(Outcome::Completed),
        Err(Fault::DataAbort { addr }) => {
            cpu.enter_data_abort(addr);
            Ok(Outcome::Aborted { addr })
        }
        Err(e) => Err(e),
    }
}

pub fn sub_imm_s0(p: &P0, cpu: &mut CpuState) -> Result<Outcome, Fault> {
    let r = (|| -> Result<(), Fault> {
        let operand1: u32;
        let result: u32;
        let _shifter_carry_out: u32;
        let shifter_operand: u32;
        shifter_operand = p.immed_8;
        _shifter_carry_out = cpu.flag(Flag::C) as u32;
        if cpu.condition_passed(p.cond) {
            operand1 = cpu.read_reg(p.n)?;
            result = operand1.wrapping_sub(shifter_operand);
            let __wval = result;
            cpu.write_reg(p.d, __wval)?;
        }
        Ok(())
    })();
    match r {
        Ok(()) => Ok(Outcome::Completed),
        Err(Fault::DataAbort { addr }) => {
            cpu.enter_data_abort(addr);
            Ok(Outcome::Aborted { addr })
        }
        Err(e) => Err(e),
    }
}

pub fn sub_imm_s1_al(p: &P0, cpu: &mut CpuState) -> Result<Outcome, Fault> {
    let r = (|| -> Result<(), Fault> {
        let operand1: u32;
        let result: u32;
        let _shifter_carry_out: u32;
        let shifter_operand: u32;
        shifter_operand = p.immed_8;
        _shifter_carry_out = cpu.flag(Flag::C) as u32;
        operand1 = cpu.read_reg(p.n)?;
        result = operand1.wrapping_sub(shifter_operand);
        let __wval = result;
        cpu.write_reg(p.d, __wval)?;
        cpu.set_flag(Flag::N, eval::extract_bits(result, 31u32, 31u32) != 0);
        cpu.set_flag(Flag::Z, result == 0u32);
        cpu.set_flag(Flag::C, !(eval::borrow_from_sub2(operand1, shifter_operand) != 0));
        cpu.set_flag(Flag::V, eval::overflow_from_sub2(operand1, shifter_operand) != 0);
        Ok(())
    })();
    match r {
        Ok(()) => Ok(Outcome::Completed),
        Err(Fault::DataAbort { addr }) => {
            cpu.enter_data_abort(addr);
            Ok(Outcome::Aborted { addr })
        }
        Err(e) => Err(e),
    }
}

pub fn sub_imm_s1(p: &P0, cpu: &mut CpuState) -> Result<Outcome, Fault> {
    let r = (|| -> Result<(), Fault> {
        let operand1: u32;
        let result: u32;
        let _shifter_carry_out: u32;
        let shifter_operand: u32;
        shifter_operand = p.immed_8;
        _shifter_carry_out = cpu.flag(Flag::C) as u32;
        if cpu.condition_passed(p.cond) {
            operand1 = cpu.read_reg(p.n)?;
            result = operand1.wrapping_sub(shifter_operand);
            let __wval = result;
            cpu.write_reg(p.d, __wval)?;
            cpu.set_flag(Flag::N, eval::extract_bits(result, 31u32, 31u32) != 0);
            cpu.set_flag(Flag::Z, result == 0u32);
            cpu.set_flag(Flag::C, !(eval::borrow_from_sub2(operand1, shifter_operand) != 0));
            cpu.set_flag(Flag::V, eval::overflow_from_sub2(operand1, shifter_operand) != 0);
        }
        Ok(())
    })();
    match r {
        Ok(()) => Ok(Outcome::Completed),
        Err(Fault::DataAbort { addr }) => {
            cpu.enter_data_abort(addr);
            Ok(Outcome::Aborted { addr })
        }
        Err(e) => Err(e),
    }
}

pub fn sub_imm(p: &P0, cpu: &mut CpuState) -> Result<Outcome, Fault> {
    let r = (|| -> Result<(), Fault> {
        let operand1: u32;
        let result: u32;
        let _shifter_carry_out: u32;
        let shifter_operand: u32;
        shifter_operand = p.immed_8;
        _shifter_carry_out = cpu.flag(Flag::C) as u32;
        if cpu.condition_passed(p.cond) {
            operand1 = cpu.read_reg(p.n)?;
            result = operand1.wrapping_sub(shifter_operand);
            let __wval = result;
            cpu.write_reg(p.d, __wval)?;
            if p.s_flag == 1u32 {
                cpu.set_flag(Flag::N, eval::extract_bits(result, 31u32, 31u32) != 0);
                cpu.set_flag(Flag::Z, result == 0u32);
                cpu.set_flag(Flag::C, !(eval::borrow_from_sub2(operand1, shifter_operand) != 0));
                cpu.set_flag(Flag::V, eval::overflow_from_sub2(operand1, shifter_operand) != 0);
            }
        }
        Ok(())
    })();
    match r {
        Ok(()) => Ok(Outcome::Completed),
        Err(Fault::DataAbort { addr }) => {
            cpu.enter_data_abort(addr);
            Ok(Outcome::Aborted { addr })
        }
        Err(e) => Err(e),
    }
}

pub fn sub_lsl_imm_s0_al(p: &P1, cpu: &mut CpuState) -> Result<Outcome, Fault> {
    let r = (|| -> Result<(), Fault> {
        let operand1: u32;
        let result: u32;
        let _shifter_carry_out: u32;
        let shifter_operand: u32;
        if p.shift_imm == 0u32 {
            shifter_operand = cpu.read_reg(p.m)?;
            _shifter_carry_out = cpu.flag(Flag::C) as u32;
        } else {
            shifter_operand = eval::lsl(cpu.read_reg(p.m)?, p.shift_imm);
            _shifter_carry_out = eval::extract_bits(cpu.read_reg(p.m)?, 32u32.wrapping_sub(p.shift_imm), 32u32.wrapping_sub(p.shift_imm));
        }
        operand1 = cpu.read_reg(p.n)?;
        result = operand1.wrapping_sub(shifter_operand);
        let __wval = result;
        cpu.write_reg(p.d, __wval)?;
        Ok(())
    })();
    match r {
        Ok(()) => Ok(Outcome::Completed),
        Err(Fault::DataAbort { addr }) => {
            cpu.enter_data_abort(addr);
            Ok(Outcome::Aborted { addr })
        }
        Err(e) => Err(e),
    }
}

pub fn sub_lsl_imm_s0(p: &P1, cpu: &mut CpuState) -> Result<Outcome, Fault> {
    let r = (|| -> Result<(), Fault> {
        let operand1: u32;
        let result: u32;
        let _shifter_carry_out: u32;
        let shifter_operand: u32;
        if p.shift_imm == 0u32 {
            shifter_operand = cpu.read_reg(p.m)?;
            _shifter_carry_out = cpu.flag(Flag::C) as u32;
        } else {
            shifter_operand = eval::lsl(cpu.read_reg(p.m)?, p.shift_imm);
            _shifter_carry_out = eval::extract_bits(cpu.read_reg(p.m)?, 32u32.wrapping_sub(p.shift_imm), 32u32.wrapping_sub(p.shift_imm));
        }
        if cpu.condition_passed(p.cond) {
            operand1 = cpu.read_reg(p.n)?;
            result = operand1.wrapping_sub(shifter_operand);
            let __wval = result;
            cpu.write_reg(p.d, __wval)?;
        }
        Ok(())
    })();
    match r {
        Ok(()) => Ok(Outcome::Completed),
        Err(Fault::DataAbort { addr }) => {
            cpu.enter_data_abort(addr);
            Ok(Outcome::Aborted { addr })
        }
        Err(e) => Err(e),
    }
}

pub fn sub_lsl_imm_s1_al(p: &P1, cpu: &mut CpuState) -> Result<Outcome, Fault> {
    let r = (|| -> Result<(), Fault> {
        let operand1: u32;
        let result: u32;
        let _shifter_carry_out: u32;
        let shifter_operand: u32;
        if p.shift_imm == 0u32 {
            shifter_operand = cpu.read_reg(p.m)?;
            _shifter_carry_out = cpu.flag(Flag::C) as u32;
        } else {
            shifter_operand = eval::lsl(cpu.read_reg(p.m)?, p.shift_imm);
            _shifter_carry_out = eval::extract_bits(cpu.read_reg(p.m)?, 32u32.wrapping_sub(p.shift_imm), 32u32.wrapping_sub(p.shift_imm));
        }
        operand1 = cpu.read_reg(p.n)?;
        result = operand1.wrapping_sub(shifter_operand);
        let __wval = result;
        cpu.write_reg(p.d, __wval)?;
        cpu.set_flag(Flag::N, eval::extract_bits(result, 31u32, 31u32) != 0);
        cpu.set_flag(Flag::Z, result == 0u32);
        cpu.set_flag(Flag::C, !(eval::borrow_from_sub2(operand1, shifter_operand) != 0));
        cpu.set_flag(Flag::V, eval::overflow_from_sub2(operand1, shifter_operand) != 0);
        Ok(())
    })();
    match r {
        Ok(()) => Ok(Outcome::Completed),
        Err(Fault::DataAbort { addr }) => {
            cpu.enter_data_abort(addr);
            Ok(Outcome::Aborted { addr })
        }
        Err(e) => Err(e),
    }
}

pub fn sub_lsl_imm_s1(p: &P1, cpu: &mut CpuState) -> Result<Outcome, Fault> {
    let r = (|| -> Result<(), Fault> {
        let operand1: u32;
        let result: u32;
        let _shifter_carry_out: u32;
        let shifter_operand: u32;
        if p.shift_imm == 0u32 {
            shifter_operand = cpu.read_reg(p.m)?;
            _shifter_carry_out = cpu.flag(Flag::C) as u32;
        } else {
            shifter_operand = eval::lsl(cpu.read_reg(p.m)?, p.shift_imm);
            _shifter_carry_out = eval::extract_bits(cpu.read_reg(p.m)?, 32u32.wrapping_sub(p.shift_imm), 32u32.wrapping_sub(p.shift_imm));
        }
        if cpu.condition_passed(p.cond) {
            operand1 = cpu.read_reg(p.n)?;
            result = operand1.wrapping_sub(shifter_operand);
            let __wval = result;
            cpu.write_reg(p.d, __wval)?;
            cpu.set_flag(Flag::N, eval::extract_bits(result, 31u32, 31u32) != 0);
            cpu.set_flag(Flag::Z, result == 0u32);
            cpu.set_flag(Flag::C, !(eval::borrow_from_sub2(operand1, shifter_operand) != 0));
            cpu.set_flag(Flag::V, eval::overflow_from_sub2(operand1, shifter_operand) != 0);
        }
        Ok(())
    })();
    match r {
        Ok(()) => Ok(Outcome::Completed),
        Err(Fault::DataAbort { addr }) => {
            cpu.enter_data_abort(addr);
            Ok(Outcome::Aborted { addr })
        }
        Err(e) => Err(e),
    }
}

pub fn sub_lsl_imm(p: &P1, cpu: &mut CpuState) -> Result<Outcome, Fault> {
    let r = (|| -> Result<(), Fault> {
        let operand1: u32;
        let result: u32;
        let _shifter_carry_out: u32;
        let shifter_operand: u32;
        if p.shift_imm == 0u32 {
            shifter_operand = cpu.read_reg(p.m)?;
            _shifter_carry_out = cpu.flag(Flag::C) as u32;
        } else {
            shifter_operand = eval::lsl(cpu.read_reg(p.m)?, p.shift_imm);
            _shifter_carry_out = eval::extract_bits(cpu.read_reg(p.m)?, 32u32.wrapping_sub(p.shift_imm), 32u32.wrapping_sub(p.shift_imm));
        }
        if cpu.condition_passed(p.cond) {
            operand1 = cpu.read_reg(p.n)?;
            result = operand1.wrapping_sub(shifter_operand);
            let __wval = result;
            cpu.write_reg(p.d, __wval)?;
            if p.s_flag == 1u32 {
                cpu.set_flag(Flag::N, eval::extract_bits(result, 31u32, 31u32) != 0);
                cpu.set_flag(Flag::Z, result == 0u32);
                cpu.set_flag(Flag::C, !(eval::borrow_from_sub2(operand1, shifter_operand) != 0));
                cpu.set_flag(Flag::V, eval::overflow_from_sub2(operand1, shifter_operand) != 0);
            }
        }
        Ok(())
    })();
    match r {
        Ok(()) => Ok(Outcome::Completed),
        Err(Fault::DataAbort { addr }) => {
            cpu.enter_data_abort(addr);
            Ok(Outcome::Aborted { addr })
        }
        Err(e) => Err(e),
    }
}

pub fn sub_lsr_imm_s0_al(p: &P1, cpu: &mut CpuState) -> Result<Outcome, Fault> {
    let r = (|| -> Result<(), Fault> {
        let operand1: u32;
        let result: u32;
        let _shifter_carry_out: u32;
        let shifter_operand: u32;
        if p.shift_imm == 0u32 {
            shifter_operand = 0u32;
            _shifter_carry_out = eval::extract_bits(cpu.read_reg(p.m)?, 31u32, 31u32);
        } else {
            shifter_operand = eval::lsr(cpu.read_reg(p.m)?, p.shift_imm);
            _shifter_carry_out = eval::extract_bits(cpu.read_reg(p.m)?, p.shift_imm.wrapping_sub(1u32), p.shift_imm.wrapping_sub(1u32));
        }
        operand1 = cpu.read_reg(p.n)?;
        result = operand1.wrapping_sub(shifter_operand);
        let __wval = result;
        cpu.write_reg(p.d, __wval)?;
        Ok(())
    })();
    match r {
        Ok(()) => Ok(Outcome::Completed),
        Err(Fault::DataAbort { addr }) => {
            cpu.enter_data_abort(addr);
            Ok(Outcome::Aborted { addr })
        }
        Err(e) => Err(e),
    }
}

pub fn sub_lsr_imm_s0(p: &P1, cpu: &mut CpuState) -> Result<Outcome, Fault> {
    let r = (|| -> Result<(), Fault> {
        let operand1: u32;
        let result: u32;
        let _shifter_carry_out: u32;
        let shifter_operand: u32;
        if p.shift_imm == 0u32 {
            shifter_operand = 0u32;
            _shifter_carry_out = eval::extract_bits(cpu.read_reg(p.m)?, 31u32, 31u32);
        } else {
            shifter_operand = eval::lsr(cpu.read_reg(p.m)?, p.shift_imm);
            _shifter_carry_out = eval::extract_bits(cpu.read_reg(p.m)?, p.shift_imm.wrapping_sub(1u32), p.shift_imm.wrapping_sub(1u32));
        }
        if cpu.condition_passed(p.cond) {
            operand1 = cpu.read_reg(p.n)?;
            result = operand1.wrapping_sub(shifter_operand);
            let __wval = result;
            cpu.write_reg(p.d, __wval)?;
        }
        Ok(())
    })();
    match r {
        Ok(()) => Ok(Outcome::Completed),
        Err(Fault::DataAbort { addr }) => {
            cpu.enter_data_abort(addr);
            Ok(Outcome::Aborted { addr })
        }
        Err(e) => Err(e),
    }
}

pub fn sub_lsr_imm_s1_al(p: &P1, cpu: &mut CpuState) -> Result<Outcome, Fault> {
    let r = (|| -> Result<(), Fault> {
        let operand1: u32;
        let result: u32;
        let _shifter_carry_out: u32;
        let shifter_operand: u32;
        if p.shift_imm == 0u32 {
            shifter_operand = 0u32;
            _shifter_carry_out = eval::extract_bits(cpu.read_reg(p.m)?, 31u32, 31u32);
        } else {
            shifter_operand = eval::lsr(cpu.read_reg(p.m)?, p.shift_imm);
            _shifter_carry_out = eval::extract_bits(cpu.read_reg(p.m)?, p.shift_imm.wrapping_sub(1u32), p.shift_imm.wrapping_sub(1u32));
        }
        operand1 = cpu.read_reg(p.n)?;
        result = operand1.wrapping_sub(shifter_operand);
        let __wval = result;
        cpu.write_reg(p.d, __wval)?;
        cpu.set_flag(Flag::N, eval::extract_bits(result, 31u32, 31u32) != 0);
        cpu.set_flag(Flag::Z, result == 0u32);
        cpu.set_flag(Flag::C, !(eval::borrow_from_sub2(operand1, shifter_operand) != 0));
        cpu.set_flag(Flag::V, eval::overflow_from_sub2(operand1, shifter_operand) != 0);
        Ok(())
    })();
    match r {
        Ok(()) => Ok(Outcome::Completed),
        Err(Fault::DataAbort { addr }) => {
            cpu.enter_data_abort(addr);
            Ok(Outcome::Aborted { addr })
        }
        Err(e) => Err(e),
    }
}

pub fn sub_lsr_imm_s1(p: &P1, cpu: &mut CpuState) -> Result<Outcome, Fault> {
    let r = (|| -> Result<(), Fault> {
        let operand1: u32;
        let result: u32;
        let _shifter_carry_out: u32;
        let shifter_operand: u32;
        if p.shift_imm == 0u32 {
            shifter_operand = 0u32;
            _shifter_carry_out = eval::extract_bits(cpu.read_reg(p.m)?, 31u32, 31u32);
        } else {
            shifter_operand = eval::lsr(cpu.read_reg(p.m)?, p.shift_imm);
            _shifter_carry_out = eval::extract_bits(cpu.read_reg(p.m)?, p.shift_imm.wrapping_sub(1u32), p.shift_imm.wrapping_sub(1u32));
        }
        if cpu.condition_passed(p.cond) {
            operand1 = cpu.read_reg(p.n)?;
            result = operand1.wrapping_sub(shifter_operand);
            let __wval = result;
            cpu.write_reg(p.d, __wval)?;
            cpu.set_flag(Flag::N, eval::extract_bits(result, 31u32, 31u32) != 0);
            cpu.set_flag(Flag::Z, result == 0u32);
            cpu.set_flag(Flag::C, !(eval::borrow_from_sub2(operand1, shifter_operand) != 0));
            cpu.set_flag(Flag::V, eval::overflow_from_sub2(operand1, shifter_operand) != 0);
        }
        Ok(())
    })();
    match r {
        Ok(()) => Ok(Outcome::Completed),
        Err(Fault::DataAbort { addr }) => {
            cpu.enter_data_abort(addr);
            Ok(Outcome::Aborted { addr })
        }
        Err(e) => Err(e),
    }
}

pub fn sub_lsr_imm(p: &P1, cpu: &mut CpuState) -> Result<Outcome, Fault> {
    let r = (|| -> Result<(), Fault> {
        let operand1: u32;
        let result: u32;
        let _shifter_carry_out: u32;
        let shifter_operand: u32;
        if p.shift_imm == 0u32 {
            shifter_operand = 0u32;
            _shifter_carry_out = eval::extract_bits(cpu.read_reg(p.m)?, 31u32, 31u32);
        } else {
            shifter_operand = eval::lsr(cpu.read_reg(p.m)?, p.shift_imm);
            _shifter_carry_out = eval::extract_bits(cpu.read_reg(p.m)?, p.shift_imm.wrapping_sub(1u32), p.shift_imm.wrapping_sub(1u32));
        }
        if cpu.condition_passed(p.cond) {
            operand1 = cpu.read_reg(p.n)?;
            result = operand1.wrapping_sub(shifter_operand);
            let __wval = result;
            cpu.write_reg(p.d, __wval)?;
            if p.s_flag == 1u32 {
                cpu.set_flag(Flag::N, eval::extract_bits(result, 31u32, 31u32) != 0);
                cpu.set_flag(Flag::Z, result == 0u32);
                cpu.set_flag(Flag::C, !(eval::borrow_from_sub2(operand1, shifter_operand) != 0));
                cpu.set_flag(Flag::V, eval::overflow_from_sub2(operand1, shifter_operand) != 0);
            }
        }
        Ok(())
    })();
    match r {
        Ok(()) => Ok(Outcome::Completed),
        Err(Fault::DataAbort { addr }) => {
            cpu.enter_data_abort(addr);
            Ok(Outcome::Aborted { addr })
        }
        Err(e) => Err(e),
    }
}

pub fn add_imm_s0_al(p: &P0, cpu: &mut CpuState) -> Result<Outcome, Fault> {
    let r = (|| -> Result<(), Fault> {
        let operand1: u32;
        let result: u32;
        let _shifter_carry_out: u32;
        let shifter_operand: u32;
        shifter_operand = p.immed_8;
        _shifter_carry_out = cpu.flag(Flag::C) as u32;
        operand1 = cpu.read_reg(p.n)?;
        result = operand1.wrapping_add(shifter_operand);
        let __wval = result;
        cpu.write_reg(p.d, __wval)?;
        Ok(())
    })();
    match r {
        Ok(()) => Ok(Outcome::Completed),
        Err(Fault::DataAbort { addr }) => {
            cpu.enter_data_abort(addr);
            Ok(Outcome::Aborted { addr })
        }
        Err(e) => Err(e),
    }
}

pub fn add_imm_s0(p: &P0, cpu: &mut CpuState) -> Result<Outcome, Fault> {
    let r = (|| -> Result<(), Fault> {
        let operand1: u32;
        let result: u32;
        let _shifter_carry_out: u32;
        let shifter_operand: u32;
        shifter_operand = p.immed_8;
        _shifter_carry_out = cpu.flag(Flag::C) as u32;
        if cpu.condition_passed(p.cond) {
            operand1 = cpu.read_reg(p.n)?;
            result = operand1.wrapping_add(shifter_operand);
            let __wval = result;
            cpu.write_reg(p.d, __wval)?;
        }
        Ok(())
    })();
    match r {
        Ok(()) => Ok(Outcome::Completed),
        Err(Fault::DataAbort { addr }) => {
            cpu.enter_data_abort(addr);
            Ok(Outcome::Aborted { addr })
        }
        Err(e) => Err(e),
    }
}

pub fn add_imm_s1_al(p: &P0, cpu: &mut CpuState) -> Result<Outcome, Fault> {
    let r = (|| -> Result<(), Fault> {
        let operand1: u32;
        let result: u32;
        let _shifter_carry_out: u32;
        let shifter_operand: u32;
        shifter_operand = p.immed_8;
        _shifter_carry_out = cpu.flag(Flag::C) as u32;
        operand1 = cpu.read_reg(p.n)?;
        result = operand1.wrapping_add(shifter_operand);
        let __wval = result;
        cpu.write_reg(p.d, __wval)?;
        cpu.set_flag(Flag::N, eval::extract_bits(result, 31u32, 31u32) != 0);
        cpu.set_flag(Flag::Z, result == 0u32);
        cpu.set_flag(Flag::C, eval::carry_from_add2(operand1, shifter_operand) != 0);
        cpu.set_flag(Flag::V, eval::overflow_from_add2(operand1, shifter_operand) != 0);
        Ok(())
    })();
    match r {
        Ok(()) => Ok(Outcome::Completed),
        Err(Fault::DataAbort { addr }) => {
            cpu.enter_data_abort(addr);
            Ok(Outcome::Aborted { addr })
        }
        Err(e) => Err(e),
    }
}

pub fn add_imm_s1(p: &P0, cpu: &mut CpuState) -> Result<Outcome, Fault> {
    let r = (|| -> Result<(), Fault> {
        let operand1: u32;
        let result: u32;
        let _shifter_carry_out: u32;
        let shifter_operand: u32;
        shifter_operand = p.immed_8;
        _shifter_carry_out = cpu.flag(Flag::C) as u32;
        if cpu.condition_passed(p.cond) {
            operand1 = cpu.read_reg(p.n)?;
            result = operand1.wrapping_add(shifter_operand);
            let __wval = result;
            cpu.write_reg(p.d, __wval)?;
            cpu.set_flag(Flag::N, eval::extract_bits(result, 31u32, 31u32) != 0);
            cpu.set_flag(Flag::Z, result == 0u32);
            cpu.set_flag(Flag::C, eval::carry_from_add2(operand1, shifter_operand) != 0);
            cpu.set_flag(Flag::V, eval::overflow_from_add2(operand1, shifter_operand) != 0);
        }
        Ok(())
    })();
    match r {
        Ok(()) => Ok(Outcome::Completed),
        Err(Fault::DataAbort { addr }) => {
            cpu.enter_data_abort(addr);
            Ok(Outcome::Aborted { addr })
        }
        Err(e) => Err(e),
    }
}

pub fn add_imm(p: &P0, cpu: &mut CpuState) -> Result<Outcome, Fault> {
    let r = (|| -> Result<(), Fault> {
        let operand1: u32;
        let result: u32;
        let _shifter_carry_out: u32;
        let shifter_operand: u32;
        shifter_operand = p.immed_8;
        _shifter_carry_out = cpu.flag(Flag::C) as u32;
        if cpu.condition_passed(p.cond) {
            operand1 = cpu.read_reg(p.n)?;
            result = operand1.wrapping_add(shifter_operand);
            let __wval = result;
            cpu.write_reg(p.d, __wval)?;
            if p.s_flag == 1u32 {
                cpu.set_flag(Flag::N, eval::extract_bits(result, 31u32, 31u32) != 0);
                cpu.set_flag(Flag::Z, result == 0u32);
                cpu.set_flag(Flag::C, eval::carry_from_add2(operand1, shifter_operand) != 0);
                cpu.set_flag(Flag::V, eval::overflow_from_add2(operand1, shifter_operand) != 0);
            }
        }
        Ok(())
    })();
    match r {
        Ok(()) => Ok(Outcome::Completed),
        Err(Fault::DataAbort { addr }) => {
            cpu.enter_data_abort(addr);
            Ok(Outcome::Aborted { addr })
        }
        Err(e) => Err(e),
    }
}

pub fn add_lsl_imm_s0_al(p: &P1, cpu: &mut CpuState) -> Result<Outcome, Fault> {
    let r = (|| -> Result<(), Fault> {
        let operand1: u32;
        let result: u32;
        let _shifter_carry_out: u32;
        let shifter_operand: u32;
        if p.shift_imm == 0u32 {
            shifter_operand = cpu.read_reg(p.m)?;
            _shifter_carry_out = cpu.flag(Flag::C) as u32;
        } else {
            shifter_operand = eval::lsl(cpu.read_reg(p.m)?, p.shift_imm);
            _shifter_carry_out = eval::extract_bits(cpu.read_reg(p.m)?, 32u32.wrapping_sub(p.shift_imm), 32u32.wrapping_sub(p.shift_imm));
        }
        operand1 = cpu.read_reg(p.n)?;
        result = operand1.wrapping_add(shifter_operand);
        let __wval = result;
        cpu.write_reg(p.d, __wval)?;
        Ok(())
    })();
    match r {
        Ok(()) => Ok(Outcome::Completed),
        Err(Fault::DataAbort { addr }) => {
            cpu.enter_data_abort(addr);
            Ok(Outcome::Aborted { addr })
        }
        Err(e) => Err(e),
    }
}

pub fn add_lsl_imm_s0(p: &P1, cpu: &mut CpuState) -> Result<Outcome, Fault> {
    let r = (|| -> Result<(), Fault> {
        let operand1: u32;
        let result: u32;
        let _shifter_carry_out: u32;
        let shifter_operand: u32;
        if p.shift_imm == 0u32 {
            shifter_operand = cpu.read_reg(p.m)?;
            _shifter_carry_out = cpu.flag(Flag::C) as u32;
        } else {
            shifter_operand = eval::lsl(cpu.read_reg(p.m)?, p.shift_imm);
            _shifter_carry_out = eval::extract_bits(cpu.read_reg(p.m)?, 32u32.wrapping_sub(p.shift_imm), 32u32.wrapping_sub(p.shift_imm));
        }
        if cpu.condition_passed(p.cond) {
            operand1 = cpu.read_reg(p.n)?;
            result = operand1.wrapping_add(shifter_operand);
            let __wval = result;
            cpu.write_reg(p.d, __wval)?;
        }
        Ok(())
    })();
    match r {
        Ok(()) => Ok(Outcome::Completed),
        Err(Fault::DataAbort { addr }) => {
            cpu.enter_data_abort(addr);
            Ok(Outcome::Aborted { addr })
        }
        Err(e) => Err(e),
    }
}

pub fn add_lsl_imm_s1_al(p: &P1, cpu: &mut CpuState) -> Result<Outcome, Fault> {
    let r = (|| -> Result<(), Fault> {
        let operand1: u32;
        let result: u32;
        let _shifter_carry_out: u32;
        let shifter_operand: u32;
        if p.shift_imm == 0u32 {
            shifter_operand = cpu.read_reg(p.m)?;
            _shifter_carry_out = cpu.flag(Flag::C) as u32;
        } else {
            shifter_operand = eval::lsl(cpu.read_reg(p.m)?, p.shift_imm);
            _shifter_carry_out = eval::extract_bits(cpu.read_reg(p.m)?, 32u32.wrapping_sub(p.shift_imm), 32u32.wrapping_sub(p.shift_imm));
        }
        operand1 = cpu.read_reg(p.n)?;
        result = operand1.wrapping_add(shifter_operand);
        let __wval = result;
        cpu.write_reg(p.d, __wval)?;
        cpu.set_flag(Flag::N, eval::extract_bits(result, 31u32, 31u32) != 0);
        cpu.set_flag(Flag::Z, result == 0u32);
        cpu.set_flag(Flag::C, eval::carry_from_add2(operand1, shifter_operand) != 0);
        cpu.set_flag(Flag::V, eval::overflow_from_add2(operand1, shifter_operand) != 0);
        Ok(())
    })();
    match r {
        Ok(()) => Ok(Outcome::Completed),
        Err(Fault::DataAbort { addr }) => {
            cpu.enter_data_abort(addr);
            Ok(Outcome::Aborted { addr })
        }
        Err(e) => Err(e),
    }
}

pub fn add_lsl_imm_s1(p: &P1, cpu: &mut CpuState) -> Result<Outcome, Fault> {
    let r = (|| -> Result<(), Fault> {
        let operand1: u32;
        let result: u32;
        let _shifter_carry_out: u32;
        let shifter_operand: u32;
        if p.shift_imm == 0u32 {
            shifter_operand = cpu.read_reg(p.m)?;
            _shifter_carry_out = cpu.flag(Flag::C) as u32;
        } else {
            shifter_operand = eval::lsl(cpu.read_reg(p.m)?, p.shift_imm);
            _shifter_carry_out = eval::extract_bits(cpu.read_reg(p.m)?, 32u32.wrapping_sub(p.shift_imm), 32u32.wrapping_sub(p.shift_imm));
        }
        if cpu.condition_passed(p.cond) {
            operand1 = cpu.read_reg(p.n)?;
            result = operand1.wrapping_add(shifter_operand);
            let __wval = result;
            cpu.write_reg(p.d, __wval)?;
            cpu.set_flag(Flag::N, eval::extract_bits(result, 31u32, 31u32) != 0);
            cpu.set_flag(Flag::Z, result == 0u32);
            cpu.set_flag(Flag::C, eval::carry_from_add2(operand1, shifter_operand) != 0);
            cpu.set_flag(Flag::V, eval::overflow_from_add2(operand1, shifter_operand) != 0);
        }
        Ok(())
    })();
    match r {
        Ok(()) => Ok(Outcome::Completed),
        Err(Fault::DataAbort { addr }) => {
            cpu.enter_data_abort(addr);
            Ok(Outcome::Aborted { addr })
        }
        Err(e) => Err(e),
    }
}

pub fn add_lsl_imm(p: &P1, cpu: &mut CpuState) -> Result<Outcome, Fault> {
    let r = (|| -> Result<(), Fault> {
        let operand1: u32;
        let result: u32;
        let _shifter_carry_out: u32;
        let shifter_operand: u32;
        if p.shift_imm == 0u32 {
            shifter_operand = cpu.read_reg(p.m)?;
            _shifter_carry_out = cpu.flag(Flag::C) as u32;
        } else {
            shifter_operand = eval::lsl(cpu.read_reg(p.m)?, p.shift_imm);
            _shifter_carry_out = eval::extract_bits(cpu.read_reg(p.m)?, 32u32.wrapping_sub(p.shift_imm), 32u32.wrapping_sub(p.shift_imm));
        }
        if cpu.condition_passed(p.cond) {
            operand1 = cpu.read_reg(p.n)?;
            result = operand1.wrapping_add(shifter_operand);
            let __wval = result;
            cpu.write_reg(p.d, __wval)?;
            if p.s_flag == 1u32 {
                cpu.set_flag(Flag::N, eval::extract_bits(result, 31u32, 31u32) != 0);
                cpu.set_flag(Flag::Z, result == 0u32);
                cpu.set_flag(Flag::C, eval::carry_from_add2(operand1, shifter_operand) != 0);
                cpu.set_flag(Flag::V, eval::overflow_from_add2(operand1, shifter_operand) != 0);
            }
        }
        Ok(())
    })();
    match r {
        Ok(()) => Ok(Outcome::Completed),
        Err(Fault::DataAbort { addr }) => {
            cpu.enter_data_abort(addr);
            Ok(Outcome::Aborted { addr })
        }
        Err(e) => Err(e),
    }
}

pub fn add_lsr_imm_s0_al(p: &P1, cpu: &mut CpuState) -> Result<Outcome, Fault> {
    let r = (|| -> Result<(), Fault> {
        let operand1: u32;
        let result: u32;
        let _shifter_carry_out: u32;
        let shifter_operand: u32;
        if p.shift_imm == 0u32 {
            shifter_operand = 0u32;
            _shifter_carry_out = eval::extract_bits(cpu.read_reg(p.m)?, 31u32, 31u32);
        } else {
            shifter_operand = eval::lsr(cpu.read_reg(p.m)?, p.shift_imm);
            _shifter_carry_out = eval::extract_bits(cpu.read_reg(p.m)?, p.shift_imm.wrapping_sub(1u32), p.shift_imm.wrapping_sub(1u32));
        }
        operand1 = cpu.read_reg(p.n)?;
        result = operand1.wrapping_add(shifter_operand);
        let __wval = result;
        cpu.write_reg(p.d, __wval)?;
        Ok(())
    })();
    match r {
        Ok(()) => Ok(Outcome::Completed),
        Err(Fault::DataAbort { addr }) => {
            cpu.enter_data_abort(addr);
            Ok(Outcome::Aborted { addr })
        }
        Err(e) => Err(e),
    }
}

pub fn add_lsr_imm_s0(p: &P1, cpu: &mut CpuState) -> Result<Outcome, Fault> {
    let r = (|| -> Result<(), Fault> {
        let operand1: u32;
        let result: u32;
        let _shifter_carry_out: u32;
        let shifter_operand: u32;
        if p.shift_imm == 0u32 {
            shifter_operand = 0u32;
            _shifter_carry_out = eval::extract_bits(cpu.read_reg(p.m)?, 31u32, 31u32);
        } else {
            shifter_operand = eval::lsr(cpu.read_reg(p.m)?, p.shift_imm);
            _shifter_carry_out = eval::extract_bits(cpu.read_reg(p.m)?, p.shift_imm.wrapping_sub(1u32), p.shift_imm.wrapping_sub(1u32));
        }
        if cpu.condition_passed(p.cond) {
            operand1 = cpu.read_reg(p.n)?;
            result = operand1.wrapping_add(shifter_operand);
            let __wval = result;
            cpu.write_reg(p.d, __wval)?;
        }
        Ok(())
    })();
    match r {
        Ok(()) => Ok(Outcome::Completed),
        Err(Fault::DataAbort { addr }) => {
            cpu.enter_data_abort(addr);
            Ok(Outcome::Aborted { addr })
        }
        Err(e) => Err(e),
    }
}

pub fn add_lsr_imm_s1_al(p: &P1, cpu: &mut CpuState) -> Result<Outcome, Fault> {
    let r = (|| -> Result<(), Fault> {
        let operand1: u32;
        let result: u32;
        let _shifter_carry_out: u32;
        let shifter_operand: u32;
        if p.shift_imm == 0u32 {
            shifter_operand = 0u32;
            _shifter_carry_out = eval::extract_bits(cpu.read_reg(p.m)?, 31u32, 31u32);
        } else {
            shifter_operand = eval::lsr(cpu.read_reg(p.m)?, p.shift_imm);
            _shifter_carry_out = eval::extract_bits(cpu.read_reg(p.m)?, p.shift_imm.wrapping_sub(1u32), p.shift_imm.wrapping_sub(1u32));
        }
        operand1 = cpu.read_reg(p.n)?;
        result = operand1.wrapping_add(shifter_operand);
        let __wval = result;
        cpu.write_reg(p.d, __wval)?;
        cpu.set_flag(Flag::N, eval::extract_bits(result, 31u32, 31u32) != 0);
        cpu.set_flag(Flag::Z, result == 0u32);
        cpu.set_flag(Flag::C, eval::carry_from_add2(operand1, shifter_operand) != 0);
        cpu.set_flag(Flag::V, eval::overflow_from_add2(operand1, shifter_operand) != 0);
        Ok(())
    })();
    match r {
        Ok(()) => Ok(Outcome::Completed),
        Err(Fault::DataAbort { addr }) => {
            cpu.enter_data_abort(addr);
            Ok(Outcome::Aborted { addr })
        }
        Err(e) => Err(e),
    }
}

pub fn add_lsr_imm_s1(p: &P1, cpu: &mut CpuState) -> Result<Outcome, Fault> {
    let r = (|| -> Result<(), Fault> {
        let operand1: u32;
        let result: u32;
        let _shifter_carry_out: u32;
        let shifter_operand: u32;
        if p.shift_imm == 0u32 {
            shifter_operand = 0u32;
            _shifter_carry_out = eval::extract_bits(cpu.read_reg(p.m)?, 31u32, 31u32);
        } else {
            shifter_operand = eval::lsr(cpu.read_reg(p.m)?, p.shift_imm);
            _shifter_carry_out = eval::extract_bits(cpu.read_reg(p.m)?, p.shift_imm.wrapping_sub(1u32), p.shift_imm.wrapping_sub(1u32));
        }
        if cpu.condition_passed(p.cond) {
            operand1 = cpu.read_reg(p.n)?;
            result = operand1.wrapping_add(shifter_operand);
            let __wval = result;
            cpu.write_reg(p.d, __wval)?;
            cpu.set_flag(Flag::N, eval::extract_bits(result, 31u32, 31u32) != 0);
            cpu.set_flag(Flag::Z, result == 0u32);
            cpu.set_flag(Flag::C, eval::carry_from_add2(operand1, shifter_operand) != 0);
            cpu.set_flag(Flag::V, eval::overflow_from_add2(operand1, shifter_operand) != 0);
        }
        Ok(())
    })();
    match r {
        Ok(()) => Ok(Outcome::Completed),
        Err(Fault::DataAbort { addr }) => {
            cpu.enter_data_abort(addr);
            Ok(Outcome::Aborted { addr })
        }
        Err(e) => Err(e),
    }
}

pub fn add_lsr_imm(p: &P1, cpu: &mut CpuState) -> Result<Outcome, Fault> {
    let r = (|| -> Result<(), Fault> {
        let operand1: u32;
        let result: u32;
        let _shifter_carry_out: u32;
        let shifter_operand: u32;
        if p.shift_imm == 0u32 {
            shifter_operand = 0u32;
            _shifter_carry_out = eval::extract_bits(cpu.read_reg(p.m)?, 31u32, 31u32);
        } else {
            shifter_operand = eval::lsr(cpu.read_reg(p.m)?, p.shift_imm);
            _shifter_carry_out = eval::extract_bits(cpu.read_reg(p.m)?, p.shift_imm.wrapping_sub(1u32), p.shift_imm.wrapping_sub(1u32));
        }
        if cpu.condition_passed(p.cond) {
            operand1 = cpu.read_reg(p.n)?;
            result = operand1.wrapping_add(shifter_operand);
            let __wval = result;
            cpu.write_reg(p.d, __wval)?;
            if p.s_flag == 1u32 {
                cpu.set_flag(Flag::N, eval::extract_bits(result, 31u32, 31u32) != 0);
                cpu.set_flag(Flag::Z, result == 0u32);
                cpu.set_flag(Flag::C, eval::carry_from_add2(operand1, shifter_operand) != 0);
                cpu.set_flag(Flag::V, eval::overflow_from_add2(operand1, shifter_operand) != 0);
            }
        }
        Ok(())
    })();
    match r {
        Ok(()) => Ok(Outcome::Completed),
        Err(Fault::DataAbort { addr }) => {
            cpu.enter_data_abort(addr);
            Ok(Outcome::Aborted { addr })
        }
        Err(e) => Err(e),
    }
}

pub fn adc_imm_s0_al(p: &P0, cpu: &mut CpuState) -> Result<Outcome, Fault> {
    let r = (|| -> Result<(), Fault> {
        let carry_in: u32;
        let operand1: u32;
        let result: u32;
        let _shifter_carry_out: u32;
        let shifter_operand: u32;
        shifter_operand = p.immed_8;
        _shifter_carry_out = cpu.flag(Flag::C) as u32;
        operand1 = cpu.read_reg(p.n)?;
        carry_in = cpu.flag(Flag::C) as u32;
        result = operand1.wrapping_add(shifter_operand).wrapping_add(carry_in);
        let __wval = result;
        cpu.write_reg(p.d, __wval)?;
        Ok(())
    })();
    match r {
        Ok(()) => Ok(Outcome::Completed),
        Err(Fault::DataAbort { addr }) => {
            cpu.enter_data_abort(addr);
            Ok(Outcome::Aborted { addr })
        }
        Err(e) => Err(e),
    }
}

pub fn adc_imm_s0(p: &P0, cpu: &mut CpuState) -> Result<Outcome, Fault> {
    let r = (|| -> Result<(), Fault> {
        let carry_in: u32;
        let operand1: u32;
        let result: u32;
        let _shifter_carry_out: u32;
        let shifter_operand: u32;
        shifter_operand = p.immed_8;
        _shifter_carry_out = cpu.flag(Flag::C) as u32;
        if cpu.condition_passed(p.cond) {
            operand1 = cpu.read_reg(p.n)?;
            carry_in = cpu.flag(Flag::C) as u32;
            result = operand1.wrapping_add(shifter_operand).wrapping_add(carry_in);
            let __wval = result;
            cpu.write_reg(p.d, __wval)?;
        }
        Ok(())
    })();
    match r {
        Ok(()) => Ok(Outcome::Completed),
        Err(Fault::DataAbort { addr }) => {
            cpu.enter_data_abort(addr);
            Ok(Outcome::Aborted { addr })
        }
        Err(e) => Err(e),
    }
}

pub fn adc_imm_s1_al(p: &P0, cpu: &mut CpuState) -> Result<Outcome, Fault> {
    let r = (|| -> Result<(), Fault> {
        let carry_in: u32;
        let operand1: u32;
        let result: u32;
        let _shifter_carry_out: u32;
        let shifter_operand: u32;
        shifter_operand = p.immed_8;
        _shifter_carry_out = cpu.flag(Flag::C) as u32;
        operand1 = cpu.read_reg(p.n)?;
        carry_in = cpu.flag(Flag::C) as u32;
        result = operand1.wrapping_add(shifter_operand).wrapping_add(carry_in);
        let __wval = result;
        cpu.write_reg(p.d, __wval)?;
        cpu.set_flag(Flag::N, eval::extract_bits(result, 31u32, 31u32) != 0);
        cpu.set_flag(Flag::Z, result == 0u32);
        cpu.set_flag(Flag::C, eval::carry_from_add3(operand1, shifter_operand, carry_in) != 0);
        cpu.set_flag(Flag::V, eval::overflow_from_add3(operand1, shifter_operand, carry_in) != 0);
        Ok(())
    })();
    match r {
        Ok(()) => Ok(Outcome::Completed),
        Err(Fault::DataAbort { addr }) => {
            cpu.enter_data_abort(addr);
            Ok(Outcome::Aborted { addr })
        }
        Err(e) => Err(e),
    }
}

pub fn adc_imm_s1(p: &P0, cpu: &mut CpuState) -> Result<Outcome, Fault> {
    let r = (|| -> Result<(), Fault> {
        let carry_in: u32;
        let operand1: u32;
        let result: u32;
        let _shifter_carry_out: u32;
        let shifter_operand: u32;
        shifter_operand = p.immed_8;
        _shifter_carry_out = cpu.flag(Flag::C) as u32;
        if cpu.condition_passed(p.cond) {
            operand1 = cpu.read_reg(p.n)?;
            carry_in = cpu.flag(Flag::C) as u32;
            result = operand1.wrapping_add(shifter_operand).wrapping_add(carry_in);
            let __wval = result;
            cpu.write_reg(p.d, __wval)?;
            cpu.set_flag(Flag::N, eval::extract_bits(result, 31u32, 31u32) != 0);
            cpu.set_flag(Flag::Z, result == 0u32);
            cpu.set_flag(Flag::C, eval::carry_from_add3(operand1, shifter_operand, carry_in) != 0);
            cpu.set_flag(Flag::V, eval::overflow_from_add3(operand1, shifter_operand, carry_in) != 0);
        }
        Ok(())
    })();
    match r {
        Ok(()) => Ok(Outcome::Completed),
        Err(Fault::DataAbort { addr }) => {
            cpu.enter_data_abort(addr);
            Ok(Outcome::Aborted { addr })
        }
        Err(e) => Err(e),
    }
}

pub fn adc_imm(p: &P0, cpu: &mut CpuState) -> Result<Outcome, Fault> {
    let r = (|| -> Result<(), Fault> {
        let carry_in: u32;
        let operand1: u32;
        let result: u32;
        let _shifter_carry_out: u32;
        let shifter_operand: u32;
        shifter_operand = p.immed_8;
        _shifter_carry_out = cpu.flag(Flag::C) as u32;
        if cpu.condition_passed(p.cond) {
            operand1 = cpu.read_reg(p.n)?;
            carry_in = cpu.flag(Flag::C) as u32;
            result = operand1.wrapping_add(shifter_operand).wrapping_add(carry_in);
            let __wval = result;
            cpu.write_reg(p.d, __wval)?;
            if p.s_flag == 1u32 {
                cpu.set_flag(Flag::N, eval::extract_bits(result, 31u32, 31u32) != 0);
                cpu.set_flag(Flag::Z, result == 0u32);
                cpu.set_flag(Flag::C, eval::carry_from_add3(operand1, shifter_operand, carry_in) != 0);
                cpu.set_flag(Flag::V, eval::overflow_from_add3(operand1, shifter_operand, carry_in) != 0);
            }
        }
        Ok(())
    })();
    match r {
        Ok(()) => Ok(Outcome::Completed),
        Err(Fault::DataAbort { addr }) => {
            cpu.enter_data_abort(addr);
            Ok(Outcome::Aborted { addr })
        }
        Err(e) => Err(e),
    }
}

pub fn adc_lsl_imm_s0_al(p: &P1, cpu: &mut CpuState) -> Result<Outcome, Fault> {
    let r = (|| -> Result<(), Fault> {
        let carry_in: u32;
        let operand1: u32;
        let result: u32;
        let _shifter_carry_out: u32;
        let shifter_operand: u32;
        if p.shift_imm == 0u32 {
            shifter_operand = cpu.read_reg(p.m)?;
            _shifter_carry_out = cpu.flag(Flag::C) as u32;
        } else {
            shifter_operand = eval::lsl(cpu.read_reg(p.m)?, p.shift_imm);
            _shifter_carry_out = eval::extract_bits(cpu.read_reg(p.m)?, 32u32.wrapping_sub(p.shift_imm), 32u32.wrapping_sub(p.shift_imm));
        }
        operand1 = cpu.read_reg(p.n)?;
        carry_in = cpu.flag(Flag::C) as u32;
        result = operand1.wrapping_add(shifter_operand).wrapping_add(carry_in);
        let __wval = result;
        cpu.write_reg(p.d, __wval)?;
        Ok(())
    })();
    match r {
        Ok(()) => Ok(Outcome::Completed),
        Err(Fault::DataAbort { addr }) => {
            cpu.enter_data_abort(addr);
            Ok(Outcome::Aborted { addr })
        }
        Err(e) => Err(e),
    }
}

pub fn adc_lsl_imm_s0(p: &P1, cpu: &mut CpuState) -> Result<Outcome, Fault> {
    let r = (|| -> Result<(), Fault> {
        let carry_in: u32;
        let operand1: u32;
        let result: u32;
        let _shifter_carry_out: u32;
        let shifter_operand: u32;
        if p.shift_imm == 0u32 {
            shifter_operand = cpu.read_reg(p.m)?;
            _shifter_carry_out = cpu.flag(Flag::C) as u32;
        } else {
            shifter_operand = eval::lsl(cpu.read_reg(p.m)?, p.shift_imm);
            _shifter_carry_out = eval::extract_bits(cpu.read_reg(p.m)?, 32u32.wrapping_sub(p.shift_imm), 32u32.wrapping_sub(p.shift_imm));
        }
        if cpu.condition_passed(p.cond) {
            operand1 = cpu.read_reg(p.n)?;
            carry_in = cpu.flag(Flag::C) as u32;
            result = operand1.wrapping_add(shifter_operand).wrapping_add(carry_in);
            let __wval = result;
            cpu.write_reg(p.d, __wval)?;
        }
        Ok(())
    })();
    match r {
        Ok(()) => Ok(Outcome::Completed),
        Err(Fault::DataAbort { addr }) => {
            cpu.enter_data_abort(addr);
            Ok(Outcome::Aborted { addr })
        }
        Err(e) => Err(e),
    }
}

pub fn adc_lsl_imm_s1_al(p: &P1, cpu: &mut CpuState) -> Result<Outcome, Fault> {
    let r = (|| -> Result<(), Fault> {
        let carry_in: u32;
        let operand1: u32;
        let result: u32;
        let _shifter_carry_out: u32;
        let shifter_operand: u32;
        if p.shift_imm == 0u32 {
            shifter_operand = cpu.read_reg(p.m)?;
            _shifter_carry_out = cpu.flag(Flag::C) as u32;
        } else {
            shifter_operand = eval::lsl(cpu.read_reg(p.m)?, p.shift_imm);
            _shifter_carry_out = eval::extract_bits(cpu.read_reg(p.m)?, 32u32.wrapping_sub(p.shift_imm), 32u32.wrapping_sub(p.shift_imm));
        }
        operand1 = cpu.read_reg(p.n)?;
        carry_in = cpu.flag(Flag::C) as u32;
        result = operand1.wrapping_add(shifter_operand).wrapping_add(carry_in);
        let __wval = result;
        cpu.write_reg(p.d, __wval)?;
        cpu.set_flag(Flag::N, eval::extract_bits(result, 31u32, 31u32) != 0);
        cpu.set_flag(Flag::Z, result == 0u32);
        cpu.set_flag(Flag::C, eval::carry_from_add3(operand1, shifter_operand, carry_in) != 0);
        cpu.set_flag(Flag::V, eval::overflow_from_add3(operand1, shifter_operand, carry_in) != 0);
        Ok(())
    })();
    match r {
        Ok(()) => Ok(Outcome::Completed),
        Err(Fault::DataAbort { addr }) => {
            cpu.enter_data_abort(addr);
            Ok(Outcome::Aborted { addr })
        }
        Err(e) => Err(e),
    }
}

pub fn adc_lsl_imm_s1(p: &P1, cpu: &mut CpuState) -> Result<Outcome, Fault> {
    let r = (|| -> Result<(), Fault> {
        let carry_in: u32;
        let operand1: u32;
        let result: u32;
        let _shifter_carry_out: u32;
        let shifter_operand: u32;
        if p.shift_imm == 0u32 {
            shifter_operand = cpu.read_reg(p.m)?;
            _shifter_carry_out = cpu.flag(Flag::C) as u32;
        } else {
            shifter_operand = eval::lsl(cpu.read_reg(p.m)?, p.shift_imm);
            _shifter_carry_out = eval::extract_bits(cpu.read_reg(p.m)?, 32u32.wrapping_sub(p.shift_imm), 32u32.wrapping_sub(p.shift_imm));
        }
        if cpu.condition_passed(p.cond) {
            operand1 = cpu.read_reg(p.n)?;
            carry_in = cpu.flag(Flag::C) as u32;
            result = operand1.wrapping_add(shifter_operand).wrapping_add(carry_in);
            let __wval = result;
            cpu.write_reg(p.d, __wval)?;
            cpu.set_flag(Flag::N, eval::extract_bits(result, 31u32, 31u32) != 0);
            cpu.set_flag(Flag::Z, result == 0u32);
            cpu.set_flag(Flag::C, eval::carry_from_add3(operand1, shifter_operand, carry_in) != 0);
            cpu.set_flag(Flag::V, eval::overflow_from_add3(operand1, shifter_operand, carry_in) != 0);
        }
        Ok(())
    })();
    match r {
        Ok(()) => Ok(Outcome::Completed),
        Err(Fault::DataAbort { addr }) => {
            cpu.enter_data_abort(addr);
            Ok(Outcome::Aborted { addr })
        }
        Err(e) => Err(e),
    }
}

pub fn adc_lsl_imm(p: &P1, cpu: &mut CpuState) -> Result<Outcome, Fault> {
    let r = (|| -> Result<(), Fault> {
        let carry_in: u32;
        let operand1: u32;
        let result: u32;
        let _shifter_carry_out: u32;
        let shifter_operand: u32;
        if p.shift_imm == 0u32 {
            shifter_operand = cpu.read_reg(p.m)?;
            _shifter_carry_out = cpu.flag(Flag::C) as u32;
        } else {
            shifter_operand = eval::lsl(cpu.read_reg(p.m)?, p.shift_imm);
            _shifter_carry_out = eval::extract_bits(cpu.read_reg(p.m)?, 32u32.wrapping_sub(p.shift_imm), 32u32.wrapping_sub(p.shift_imm));
        }
        if cpu.condition_passed(p.cond) {
            operand1 = cpu.read_reg(p.n)?;
            carry_in = cpu.flag(Flag::C) as u32;
            result = operand1.wrapping_add(shifter_operand).wrapping_add(carry_in);
            let __wval = result;
            cpu.write_reg(p.d, __wval)?;
            if p.s_flag == 1u32 {
                cpu.set_flag(Flag::N, eval::extract_bits(result, 31u32, 31u32) != 0);
                cpu.set_flag(Flag::Z, result == 0u32);
                cpu.set_flag(Flag::C, eval::carry_from_add3(operand1, shifter_operand, carry_in) != 0);
                cpu.set_flag(Flag::V, eval::overflow_from_add3(operand1, shifter_operand, carry_in) != 0);
            }
        }
        Ok(())
    })();
    match r {
        Ok(()) => Ok(Outcome::Completed),
        Err(Fault::DataAbort { addr }) => {
            cpu.enter_data_abort(addr);
            Ok(Outcome::Aborted { addr })
        }
        Err(e) => Err(e),
    }
}

pub fn adc_lsr_imm_s0_al(p: &P1, cpu: &mut CpuState) -> Result<Outcome, Fault> {
    let r = (|| -> Result<(), Fault> {
        let carry_in: u32;
        let operand1: u32;
        let result: u32;
        let _shifter_carry_out: u32;
        let shifter_operand: u32;
        if p.shift_imm == 0u32 {
            shifter_operand = 0u32;
            _shifter_carry_out = eval::extract_bits(cpu.read_reg(p.m)?, 31u32, 31u32);
        } else {
            shifter_operand = eval::lsr(cpu.read_reg(p.m)?, p.shift_imm);
            _shifter_carry_out = eval::extract_bits(cpu.read_reg(p.m)?, p.shift_imm.wrapping_sub(1u32), p.shift_imm.wrapping_sub(1u32));
        }
        operand1 = cpu.read_reg(p.n)?;
        carry_in = cpu.flag(Flag::C) as u32;
        result = operand1.wrapping_add(shifter_operand).wrapping_add(carry_in);
        let __wval = result;
        cpu.write_reg(p.d, __wval)?;
        Ok(())
    })();
    match r {
        Ok(()) => Ok(Outcome::Completed),
        Err(Fault::DataAbort { addr }) => {
            cpu.enter_data_abort(addr);
            Ok(Outcome::Aborted { addr })
        }
        Err(e) => Err(e),
    }
}

pub fn adc_lsr_imm_s0(p: &P1, cpu: &mut CpuState) -> Result<Outcome, Fault> {
    let r = (|| -> Result<(), Fault> {
        let carry_in: u32;
        let operand1: u32;
        let result: u32;
        let _shifter_carry_out: u32;
        let shifter_operand: u32;
        if p.shift_imm == 0u32 {
            shifter_operand = 0u32;
            _shifter_carry_out = eval::extract_bits(cpu.read_reg(p.m)?, 31u32, 31u32);
        } else {
            shifter_operand = eval::lsr(cpu.read_reg(p.m)?, p.shift_imm);
            _shifter_carry_out = eval::extract_bits(cpu.read_reg(p.m)?, p.shift_imm.wrapping_sub(1u32), p.shift_imm.wrapping_sub(1u32));
        }
        if cpu.condition_passed(p.cond) {
            operand1 = cpu.read_reg(p.n)?;
            carry_in = cpu.flag(Flag::C) as u32;
            result = operand1.wrapping_add(shifter_operand).wrapping_add(carry_in);
            let __wval = result;
            cpu.write_reg(p.d, __wval)?;
        }
        Ok(())
    })();
    match r {
        Ok(()) => Ok(Outcome::Completed),
        Err(Fault::DataAbort { addr }) => {
            cpu.enter_data_abort(addr);
            Ok(Outcome::Aborted { addr })
        }
        Err(e) => Err(e),
    }
}

pub fn adc_lsr_imm_s1_al(p: &P1, cpu: &mut CpuState) -> Result<Outcome, Fault> {
    let r = (|| -> Result<(), Fault> {
        let carry_in: u32;
        let operand1: u32;
        let result: u32;
        let _shifter_carry_out: u32;
        let shifter_operand: u32;
        if p.shift_imm == 0u32 {
            shifter_operand = 0u32;
            _shifter_carry_out = eval::extract_bits(cpu.read_reg(p.m)?, 31u32, 31u32);
        } else {
            shifter_operand = eval::lsr(cpu.read_reg(p.m)?, p.shift_imm);
            _shifter_carry_out = eval::extract_bits(cpu.read_reg(p.m)?, p.shift_imm.wrapping_sub(1u32), p.shift_imm.wrapping_sub(1u32));
        }
        operand1 = cpu.read_reg(p.n)?;
        carry_in = cpu.flag(Flag::C) as u32;
        result = operand1.wrapping_add(shifter_operand).wrapping_add(carry_in);
        let __wval = result;
        cpu.write_reg(p.d, __wval)?;
        cpu.set_flag(Flag::N, eval::extract_bits(result, 31u32, 31u32) != 0);
        cpu.set_flag(Flag::Z, result == 0u32);
        cpu.set_flag(Flag::C, eval::carry_from_add3(operand1, shifter_operand, carry_in) != 0);
        cpu.set_flag(Flag::V, eval::overflow_from_add3(operand1, shifter_operand, carry_in) != 0);
        Ok(())
    })();
    match r {
        Ok(()) => Ok(Outcome::Completed),
        Err(Fault::DataAbort { addr }) => {
            cpu.enter_data_abort(addr);
            Ok(Outcome::Aborted { addr })
        }
        Err(e) => Err(e),
    }
}

pub fn adc_lsr_imm_s1(p: &P1, cpu: &mut CpuState) -> Result<Outcome, Fault> {
    let r = (|| -> Result<(), Fault> {
        let carry_in: u32;
        let operand1: u32;
        let result: u32;
        let _shifter_carry_out: u32;
        let shifter_operand: u32;
        if p.shift_imm == 0u32 {
            shifter_operand = 0u32;
            _shifter_carry_out = eval::extract_bits(cpu.read_reg(p.m)?, 31u32, 31u32);
        } else {
            shifter_operand = eval::lsr(cpu.read_reg(p.m)?, p.shift_imm);
            _shifter_carry_out = eval::extract_bits(cpu.read_reg(p.m)?, p.shift_imm.wrapping_sub(1u32), p.shift_imm.wrapping_sub(1u32));
        }
        if cpu.condition_passed(p.cond) {
            operand1 = cpu.read_reg(p.n)?;
            carry_in = cpu.flag(Flag::C) as u32;
            result = operand1.wrapping_add(shifter_operand).wrapping_add(carry_in);
            let __wval = result;
            cpu.write_reg(p.d, __wval)?;
            cpu.set_flag(Flag::N, eval::extract_bits(result, 31u32, 31u32) != 0);
            cpu.set_flag(Flag::Z, result == 0u32);
            cpu.set_flag(Flag::C, eval::carry_from_add3(operand1, shifter_operand, carry_in) != 0);
            cpu.set_flag(Flag::V, eval::overflow_from_add3(operand1, shifter_operand, carry_in) != 0);
        }
        Ok(())
    })();
    match r {
        Ok(()) => Ok(Outcome::Completed),
        Err(Fault::DataAbort { addr }) => {
            cpu.enter_data_abort(addr);
            Ok(Outcome::Aborted { addr })
        }
        Err(e) => Err(e),
    }
}

pub fn adc_lsr_imm(p: &P1, cpu: &mut CpuState) -> Result<Outcome, Fault> {
    let r = (|| -> Result<(), Fault> {
        let carry_in: u32;
        let operand1: u32;
        let result: u32;
        let _shifter_carry_out: u32;
        let shifter_operand: u32;
        if p.shift_imm == 0u32 {
            shifter_operand = 0u32;
            _shifter_carry_out = eval::extract_bits(cpu.read_reg(p.m)?, 31u32, 31u32);
        } else {
            shifter_operand = eval::lsr(cpu.read_reg(p.m)?, p.shift_imm);
            _shifter_carry_out = eval::extract_bits(cpu.read_reg(p.m)?, p.shift_imm.wrapping_sub(1u32), p.shift_imm.wrapping_sub(1u32));
        }
        if cpu.condition_passed(p.cond) {
            operand1 = cpu.read_reg(p.n)?;
            carry_in = cpu.flag(Flag::C) as u32;
            result = operand1.wrapping_add(shifter_operand).wrapping_add(carry_in);
            let __wval = result;
            cpu.write_reg(p.d, __wval)?;
            if p.s_flag == 1u32 {
                cpu.set_flag(Flag::N, eval::extract_bits(result, 31u32, 31u32) != 0);
                cpu.set_flag(Flag::Z, result == 0u32);
                cpu.set_flag(Flag::C, eval::carry_from_add3(operand1, shifter_operand, carry_in) != 0);
                cpu.set_flag(Flag::V, eval::overflow_from_add3(operand1, shifter_operand, carry_in) != 0);
            }
        }
        Ok(())
    })();
    match r {
        Ok(()) => Ok(Outcome::Completed),
        Err(Fault::DataAbort { addr }) => {
            cpu.enter_data_abort(addr);
            Ok(Outcome::Aborted { addr })
        }
        Err(e) => Err(e),
    }
}

pub fn cmp_imm_al(p: &P2, cpu: &mut CpuState) -> Result<Outcome, Fault> {
    let r = (|| -> Result<(), Fault> {
        let alu_out: u32;
        let _shifter_carry_out: u32;
        let shifter_operand: u32;
        shifter_operand = p.immed_8;
        _shifter_carry_out = cpu.flag(Flag::C) as u32;
        alu_out = cpu.read_reg(p.n)?.wrapping_sub(shifter_operand);
        cpu.set_flag(Flag::N, eval::extract_bits(alu_out, 31u32, 31u32) != 0);
        cpu.set_flag(Flag::Z, alu_out == 0u32);
        cpu.set_flag(Flag::C, !(eval::borrow_from_sub2(cpu.read_reg(p.n)?, shifter_operand) != 0));
        cpu.set_flag(Flag::V, eval::overflow_from_sub2(cpu.read_reg(p.n)?, shifter_operand) != 0);
        Ok(())
    })();
    match r {
        Ok(()) => Ok(Outcome::Completed),
        Err(Fault::DataAbort { addr }) => {
            cpu.enter_data_abort(addr);
            Ok(Outcome::Aborted { addr })
        }
        Err(e) => Err(e),
    }
}

pub fn cmp_imm(p: &P2, cpu: &mut CpuState) -> Result<Outcome, Fault> {
    let r = (|| -> Result<(), Fault> {
        let alu_out: u32;
        let _shifter_carry_out: u32;
        let shifter_operand: u32;
        shifter_operand = p.immed_8;
        _shifter_carry_out = cpu.flag(Flag::C) as u32;
        if cpu.condition_passed(p.cond) {
            alu_out = cpu.read_reg(p.n)?.wrapping_sub(shifter_operand);
            cpu.set_flag(Flag::N, eval::extract_bits(alu_out, 31u32, 31u32) != 0);
            cpu.set_flag(Flag::Z, alu_out == 0u32);
            cpu.set_flag(Flag::C, !(eval::borrow_from_sub2(cpu.read_reg(p.n)?, shifter_operand) != 0));
            cpu.set_flag(Flag::V, eval::overflow_from_sub2(cpu.read_reg(p.n)?, shifter_operand) != 0);
        }
        Ok(())
    })();
    match r {
        Ok(()) => Ok(Outcome::Completed),
        Err(Fault::DataAbort { addr }) => {
            cpu.enter_data_abort(addr);
            Ok(Outcome::Aborted { addr })
        }
        Err(e) => Err(e),
    }
}

pub fn cmp_lsl_imm_al(p: &P3, cpu: &mut CpuState) -> Result<Outcome, Fault> {
    let r = (|| -> Result<(), Fault> {
        let alu_out: u32;
        let _shifter_carry_out: u32;
        let shifter_operand: u32;
        if p.shift_imm == 0u32 {
            shifter_operand = cpu.read_reg(p.m)?;
            _shifter_carry_out = cpu.flag(Flag::C) as u32;
        } else {
            shifter_operand = eval::lsl(cpu.read_reg(p.m)?, p.shift_imm);
            _shifter_carry_out = eval::extract_bits(cpu.read_reg(p.m)?, 32u32.wrapping_sub(p.shift_imm), 32u32.wrapping_sub(p.shift_imm));
        }
        alu_out = cpu.read_reg(p.n)?.wrapping_sub(shifter_operand);
        cpu.set_flag(Flag::N, eval::extract_bits(alu_out, 31u32, 31u32) != 0);
        cpu.set_flag(Flag::Z, alu_out == 0u32);
        cpu.set_flag(Flag::C, !(eval::borrow_from_sub2(cpu.read_reg(p.n)?, shifter_operand) != 0));
        cpu.set_flag(Flag::V, eval::overflow_from_sub2(cpu.read_reg(p.n)?, shifter_operand) != 0);
        Ok(())
    })();
    match r {
        Ok(()) => Ok(Outcome::Completed),
        Err(Fault::DataAbort { addr }) => {
            cpu.enter_data_abort(addr);
            Ok(Outcome::Aborted { addr })
        }
        Err(e) => Err(e),
    }
}

pub fn cmp_lsl_imm(p: &P3, cpu: &mut CpuState) -> Result<Outcome, Fault> {
    let r = (|| -> Result<(), Fault> {
        let alu_out: u32;
        let _shifter_carry_out: u32;
        let shifter_operand: u32;
        if p.shift_imm == 0u32 {
            shifter_operand = cpu.read_reg(p.m)?;
            _shifter_carry_out = cpu.flag(Flag::C) as u32;
        } else {
            shifter_operand = eval::lsl(cpu.read_reg(p.m)?, p.shift_imm);
            _shifter_carry_out = eval::extract_bits(cpu.read_reg(p.m)?, 32u32.wrapping_sub(p.shift_imm), 32u32.wrapping_sub(p.shift_imm));
        }
        if cpu.condition_passed(p.cond) {
            alu_out = cpu.read_reg(p.n)?.wrapping_sub(shifter_operand);
            cpu.set_flag(Flag::N, eval::extract_bits(alu_out, 31u32, 31u32) != 0);
            cpu.set_flag(Flag::Z, alu_out == 0u32);
            cpu.set_flag(Flag::C, !(eval::borrow_from_sub2(cpu.read_reg(p.n)?, shifter_operand) != 0));
            cpu.set_flag(Flag::V, eval::overflow_from_sub2(cpu.read_reg(p.n)?, shifter_operand) != 0);
        }
        Ok(())
    })();
    match r {
        Ok(()) => Ok(Outcome::Completed),
        Err(Fault::DataAbort { addr }) => {
            cpu.enter_data_abort(addr);
            Ok(Outcome::Aborted { addr })
        }
        Err(e) => Err(e),
    }
}

pub fn cmp_lsr_imm_al(p: &P3, cpu: &mut CpuState) -> Result<Outcome, Fault> {
    let r = (|| -> Result<(), Fault> {
        let alu_out: u32;
        let _shifter_carry_out: u32;
        let shifter_operand: u32;
        if p.shift_imm == 0u32 {
            shifter_operand = 0u32;
            _shifter_carry_out = eval::extract_bits(cpu.read_reg(p.m)?, 31u32, 31u32);
        } else {
            shifter_operand = eval::lsr(cpu.read_reg(p.m)?, p.shift_imm);
            _shifter_carry_out = eval::extract_bits(cpu.read_reg(p.m)?, p.shift_imm.wrapping_sub(1u32), p.shift_imm.wrapping_sub(1u32));
        }
        alu_out = cpu.read_reg(p.n)?.wrapping_sub(shifter_operand);
        cpu.set_flag(Flag::N, eval::extract_bits(alu_out, 31u32, 31u32) != 0);
        cpu.set_flag(Flag::Z, alu_out == 0u32);
        cpu.set_flag(Flag::C, !(eval::borrow_from_sub2(cpu.read_reg(p.n)?, shifter_operand) != 0));
        cpu.set_flag(Flag::V, eval::overflow_from_sub2(cpu.read_reg(p.n)?, shifter_operand) != 0);
        Ok(())
    })();
    match r {
        Ok(()) => Ok(Outcome::Completed),
        Err(Fault::DataAbort { addr }) => {
            cpu.enter_data_abort(addr);
            Ok(Outcome::Aborted { addr })
        }
        Err(e) => Err(e),
    }
}

pub fn cmp_lsr_imm(p: &P3, cpu: &mut CpuState) -> Result<Outcome, Fault> {
    let r = (|| -> Result<(), Fault> {
        let alu_out: u32;
        let _shifter_carry_out: u32;
        let shifter_operand: u32;
        if p.shift_imm == 0u32 {
            shifter_operand = 0u32;
            _shifter_carry_out = eval::extract_bits(cpu.read_reg(p.m)?, 31u32, 31u32);
        } else {
            shifter_operand = eval::lsr(cpu.read_reg(p.m)?, p.shift_imm);
            _shifter_carry_out = eval::extract_bits(cpu.read_reg(p.m)?, p.shift_imm.wrapping_sub(1u32), p.shift_imm.wrapping_sub(1u32));
        }
        if cpu.condition_passed(p.cond) {
            alu_out = cpu.read_reg(p.n)?.wrapping_sub(shifter_operand);
            cpu.set_flag(Flag::N, eval::extract_bits(alu_out, 31u32, 31u32) != 0);
            cpu.set_flag(Flag::Z, alu_out == 0u32);
            cpu.set_flag(Flag::C, !(eval::borrow_from_sub2(cpu.read_reg(p.n)?, shifter_operand) != 0));
            cpu.set_flag(Flag::V, eval::overflow_from_sub2(cpu.read_reg(p.n)?, shifter_operand) != 0);
        }
        Ok(())
    })();
    match r {
        Ok(()) => Ok(Outcome::Completed),
        Err(Fault::DataAbort { addr }) => {
            cpu.enter_data_abort(addr);
            Ok(Outcome::Aborted { addr })
        }
        Err(e) => Err(e),
    }
}

pub fn mov_imm_s0_al(p: &P4, cpu: &mut CpuState) -> Result<Outcome, Fault> {
    let r = (|| -> Result<(), Fault> {
        let result: u32;
        let _shifter_carry_out: u32;
        let shifter_operand: u32;
        shifter_operand = p.immed_8;
        _shifter_carry_out = cpu.flag(Flag::C) as u32;
        result = shifter_operand;
        let __wval = result;
        cpu.write_reg(p.d, __wval)?;
        Ok(())
    })();
    match r {
        Ok(()) => Ok(Outcome::Completed),
        Err(Fault::DataAbort { addr }) => {
            cpu.enter_data_abort(addr);
            Ok(Outcome::Aborted { addr })
        }
        Err(e) => Err(e),
    }
}

pub fn mov_imm_s0(p: &P4, cpu: &mut CpuState) -> Result<Outcome, Fault> {
    let r = (|| -> Result<(), Fault> {
        let result: u32;
        let _shifter_carry_out: u32;
        let shifter_operand: u32;
        shifter_operand = p.immed_8;
        _shifter_carry_out = cpu.flag(Flag::C) as u32;
        if cpu.condition_passed(p.cond) {
            result = shifter_operand;
            let __wval = result;
            cpu.write_reg(p.d, __wval)?;
        }
        Ok(())
    })();
    match r {
        Ok(()) => Ok(Outcome::Completed),
        Err(Fault::DataAbort { addr }) => {
            cpu.enter_data_abort(addr);
            Ok(Outcome::Aborted { addr })
        }
        Err(e) => Err(e),
    }
}

pub fn mov_imm_s1_al(p: &P4, cpu: &mut CpuState) -> Result<Outcome, Fault> {
    let r = (|| -> Result<(), Fault> {
        let result: u32;
        let shifter_carry_out: u32;
        let shifter_operand: u32;
        shifter_operand = p.immed_8;
        shifter_carry_out = cpu.flag(Flag::C) as u32;
        result = shifter_operand;
        let __wval = result;
        cpu.write_reg(p.d, __wval)?;
        cpu.set_flag(Flag::N, eval::extract_bits(result, 31u32, 31u32) != 0);
        cpu.set_flag(Flag::Z, result == 0u32);
        cpu.set_flag(Flag::C, shifter_carry_out != 0);
        Ok(())
    })();
    match r {
        Ok(()) => Ok(Outcome::Completed),
        Err(Fault::DataAbort { addr }) => {
            cpu.enter_data_abort(addr);
            Ok(Outcome::Aborted { addr })
        }
        Err(e) => Err(e),
    }
}

pub fn mov_imm_s1(p: &P4, cpu: &mut CpuState) -> Result<Outcome, Fault> {
    let r = (|| -> Result<(), Fault> {
        let result: u32;
        let shifter_carry_out: u32;
        let shifter_operand: u32;
        shifter_operand = p.immed_8;
        shifter_carry_out = cpu.flag(Flag::C) as u32;
        if cpu.condition_passed(p.cond) {
            result = shifter_operand;
            let __wval = result;
            cpu.write_reg(p.d, __wval)?;
            cpu.set_flag(Flag::N, eval::extract_bits(result, 31u32, 31u32) != 0);
            cpu.set_flag(Flag::Z, result == 0u32);
            cpu.set_flag(Flag::C, shifter_carry_out != 0);
        }
        Ok(())
    })();
    match r {
        Ok(()) => Ok(Outcome::Completed),
        Err(Fault::DataAbort { addr }) => {
            cpu.enter_data_abort(addr);
            Ok(Outcome::Aborted { addr })
        }
        Err(e) => Err(e),
    }
}

pub fn mov_imm(p: &P4, cpu: &mut CpuState) -> Result<Outcome, Fault> {
    let r = (|| -> Result<(), Fault> {
        let result: u32;
        let shifter_carry_out: u32;
        let shifter_operand: u32;
        shifter_operand = p.immed_8;
        shifter_carry_out = cpu.flag(Flag::C) as u32;
        if cpu.condition_passed(p.cond) {
            result = shifter_operand;
            let __wval = result;
            cpu.write_reg(p.d, __wval)?;
            if p.s_flag == 1u32 {
                cpu.set_flag(Flag::N, eval::extract_bits(result, 31u32, 31u32) != 0);
                cpu.set_flag(Flag::Z, result == 0u32);
                cpu.set_flag(Flag::C, shifter_carry_out != 0);
            }
        }
        Ok(())
    })();
    match r {
        Ok(()) => Ok(Outcome::Completed),
        Err(Fault::DataAbort { addr }) => {
            cpu.enter_data_abort(addr);
            Ok(Outcome::Aborted { addr })
        }
        Err(e) => Err(e),
    }
}

pub fn mov_lsl_imm_s0_al(p: &P5, cpu: &mut CpuState) -> Result<Outcome, Fault> {
    let r = (|| -> Result<(), Fault> {
        let result: u32;
        let _shifter_carry_out: u32;
        let shifter_operand: u32;
        if p.shift_imm == 0u32 {
            shifter_operand = cpu.read_reg(p.m)?;
            _shifter_carry_out = cpu.flag(Flag::C) as u32;
        } else {
            shifter_operand = eval::lsl(cpu.read_reg(p.m)?, p.shift_imm);
            _shifter_carry_out = eval::extract_bits(cpu.read_reg(p.m)?, 32u32.wrapping_sub(p.shift_imm), 32u32.wrapping_sub(p.shift_imm));
        }
        result = shifter_operand;
        let __wval = result;
        cpu.write_reg(p.d, __wval)?;
        Ok(())
    })();
    match r {
        Ok(()) => Ok(Outcome::Completed),
        Err(Fault::DataAbort { addr }) => {
            cpu.enter_data_abort(addr);
            Ok(Outcome::Aborted { addr })
        }
        Err(e) => Err(e),
    }
}

pub fn mov_lsl_imm_s0(p: &P5, cpu: &mut CpuState) -> Result<Outcome, Fault> {
    let r = (|| -> Result<(), Fault> {
        let result: u32;
        let _shifter_carry_out: u32;
        let shifter_operand: u32;
        if p.shift_imm == 0u32 {
            shifter_operand = cpu.read_reg(p.m)?;
            _shifter_carry_out = cpu.flag(Flag::C) as u32;
        } else {
            shifter_operand = eval::lsl(cpu.read_reg(p.m)?, p.shift_imm);
            _shifter_carry_out = eval::extract_bits(cpu.read_reg(p.m)?, 32u32.wrapping_sub(p.shift_imm), 32u32.wrapping_sub(p.shift_imm));
        }
        if cpu.condition_passed(p.cond) {
            result = shifter_operand;
            let __wval = result;
            cpu.write_reg(p.d, __wval)?;
        }
        Ok(())
    })();
    match r {
        Ok(()) => Ok(Outcome::Completed),
        Err(Fault::DataAbort { addr }) => {
            cpu.enter_data_abort(addr);
            Ok(Outcome::Aborted { addr })
        }
        Err(e) => Err(e),
    }
}

pub fn mov_lsl_imm_s1_al(p: &P5, cpu: &mut CpuState) -> Result<Outcome, Fault> {
    let r = (|| -> Result<(), Fault> {
        let result: u32;
        let shifter_carry_out: u32;
        let shifter_operand: u32;
        if p.shift_imm == 0u32 {
            shifter_operand = cpu.read_reg(p.m)?;
            shifter_carry_out = cpu.flag(Flag::C) as u32;
        } else {
            shifter_operand = eval::lsl(cpu.read_reg(p.m)?, p.shift_imm);
            shifter_carry_out = eval::extract_bits(cpu.read_reg(p.m)?, 32u32.wrapping_sub(p.shift_imm), 32u32.wrapping_sub(p.shift_imm));
        }
        result = shifter_operand;
        let __wval = result;
        cpu.write_reg(p.d, __wval)?;
        cpu.set_flag(Flag::N, eval::extract_bits(result, 31u32, 31u32) != 0);
        cpu.set_flag(Flag::Z, result == 0u32);
        cpu.set_flag(Flag::C, shifter_carry_out != 0);
        Ok(())
    })();
    match r {
        Ok(()) => Ok(Outcome::Completed),
        Err(Fault::DataAbort { addr }) => {
            cpu.enter_data_abort(addr);
            Ok(Outcome::Aborted { addr })
        }
        Err(e) => Err(e),
    }
}

pub fn mov_lsl_imm_s1(p: &P5, cpu: &mut CpuState) -> Result<Outcome, Fault> {
    let r = (|| -> Result<(), Fault> {
        let result: u32;
        let shifter_carry_out: u32;
        let shifter_operand: u32;
        if p.shift_imm == 0u32 {
            shifter_operand = cpu.read_reg(p.m)?;
            shifter_carry_out = cpu.flag(Flag::C) as u32;
        } else {
            shifter_operand = eval::lsl(cpu.read_reg(p.m)?, p.shift_imm);
            shifter_carry_out = eval::extract_bits(cpu.read_reg(p.m)?, 32u32.wrapping_sub(p.shift_imm), 32u32.wrapping_sub(p.shift_imm));
        }
        if cpu.condition_passed(p.cond) {
            result = shifter_operand;
            let __wval = result;
            cpu.write_reg(p.d, __wval)?;
            cpu.set_flag(Flag::N, eval::extract_bits(result, 31u32, 31u32) != 0);
            cpu.set_flag(Flag::Z, result == 0u32);
            cpu.set_flag(Flag::C, shifter_carry_out != 0);
        }
        Ok(())
    })();
    match r {
        Ok(()) => Ok(Outcome::Completed),
        Err(Fault::DataAbort { addr }) => {
            cpu.enter_data_abort(addr);
            Ok(Outcome::Aborted { addr })
        }
        Err(e) => Err(e),
    }
}

pub fn mov_lsl_imm(p: &P5, cpu: &mut CpuState) -> Result<Outcome, Fault> {
    let r = (|| -> Result<(), Fault> {
        let result: u32;
        let shifter_carry_out: u32;
        let shifter_operand: u32;
        if p.shift_imm == 0u32 {
            shifter_operand = cpu.read_reg(p.m)?;
            shifter_carry_out = cpu.flag(Flag::C) as u32;
        } else {
            shifter_operand = eval::lsl(cpu.read_reg(p.m)?, p.shift_imm);
            shifter_carry_out = eval::extract_bits(cpu.read_reg(p.m)?, 32u32.wrapping_sub(p.shift_imm), 32u32.wrapping_sub(p.shift_imm));
        }
        if cpu.condition_passed(p.cond) {
            result = shifter_operand;
            let __wval = result;
            cpu.write_reg(p.d, __wval)?;
            if p.s_flag == 1u32 {
                cpu.set_flag(Flag::N, eval::extract_bits(result, 31u32, 31u32) != 0);
                cpu.set_flag(Flag::Z, result == 0u32);
                cpu.set_flag(Flag::C, shifter_carry_out != 0);
            }
        }
        Ok(())
    })();
    match r {
        Ok(()) => Ok(Outcome::Completed),
        Err(Fault::DataAbort { addr }) => {
            cpu.enter_data_abort(addr);
            Ok(Outcome::Aborted { addr })
        }
        Err(e) => Err(e),
    }
}

pub fn mov_lsr_imm_s0_al(p: &P5, cpu: &mut CpuState) -> Result<Outcome, Fault> {
    let r = (|| -> Result<(), Fault> {
        let result: u32;
        let _shifter_carry_out: u32;
        let shifter_operand: u32;
        if p.shift_imm == 0u32 {
            shifter_operand = 0u32;
            _shifter_carry_out = eval::extract_bits(cpu.read_reg(p.m)?, 31u32, 31u32);
        } else {
            shifter_operand = eval::lsr(cpu.read_reg(p.m)?, p.shift_imm);
            _shifter_carry_out = eval::extract_bits(cpu.read_reg(p.m)?, p.shift_imm.wrapping_sub(1u32), p.shift_imm.wrapping_sub(1u32));
        }
        result = shifter_operand;
        let __wval = result;
        cpu.write_reg(p.d, __wval)?;
        Ok(())
    })();
    match r {
        Ok(()) => Ok(Outcome::Completed),
        Err(Fault::DataAbort { addr }) => {
            cpu.enter_data_abort(addr);
            Ok(Outcome::Aborted { addr })
        }
        Err(e) => Err(e),
    }
}

pub fn mov_lsr_imm_s0(p: &P5, cpu: &mut CpuState) -> Result<Outcome, Fault> {
    let r = (|| -> Result<(), Fault> {
        let result: u32;
        let _shifter_carry_out: u32;
        let shifter_operand: u32;
        if p.shift_imm == 0u32 {
            shifter_operand = 0u32;
            _shifter_carry_out = eval::extract_bits(cpu.read_reg(p.m)?, 31u32, 31u32);
        } else {
            shifter_operand = eval::lsr(cpu.read_reg(p.m)?, p.shift_imm);
            _shifter_carry_out = eval::extract_bits(cpu.read_reg(p.m)?, p.shift_imm.wrapping_sub(1u32), p.shift_imm.wrapping_sub(1u32));
        }
        if cpu.condition_passed(p.cond) {
            result = shifter_operand;
            let __wval = result;
            cpu.write_reg(p.d, __wval)?;
        }
        Ok(())
    })();
    match r {
        Ok(()) => Ok(Outcome::Completed),
        Err(Fault::DataAbort { addr }) => {
            cpu.enter_data_abort(addr);
            Ok(Outcome::Aborted { addr })
        }
        Err(e) => Err(e),
    }
}

pub fn mov_lsr_imm_s1_al(p: &P5, cpu: &mut CpuState) -> Result<Outcome, Fault> {
    let r = (|| -> Result<(), Fault> {
        let result: u32;
        let shifter_carry_out: u32;
        let shifter_operand: u32;
        if p.shift_imm == 0u32 {
            shifter_operand = 0u32;
            shifter_carry_out = eval::extract_bits(cpu.read_reg(p.m)?, 31u32, 31u32);
        } else {
            shifter_operand = eval::lsr(cpu.read_reg(p.m)?, p.shift_imm);
            shifter_carry_out = eval::extract_bits(cpu.read_reg(p.m)?, p.shift_imm.wrapping_sub(1u32), p.shift_imm.wrapping_sub(1u32));
        }
        result = shifter_operand;
        let __wval = result;
        cpu.write_reg(p.d, __wval)?;
        cpu.set_flag(Flag::N, eval::extract_bits(result, 31u32, 31u32) != 0);
        cpu.set_flag(Flag::Z, result == 0u32);
        cpu.set_flag(Flag::C, shifter_carry_out != 0);
        Ok(())
    })();
    match r {
        Ok(()) => Ok(Outcome::Completed),
        Err(Fault::DataAbort { addr }) => {
            cpu.enter_data_abort(addr);
            Ok(Outcome::Aborted { addr })
        }
        Err(e) => Err(e),
    }
}

pub fn mov_lsr_imm_s1(p: &P5, cpu: &mut CpuState) -> Result<Outcome, Fault> {
    let r = (|| -> Result<(), Fault> {
        let result: u32;
        let shifter_carry_out: u32;
        let shifter_operand: u32;
        if p.shift_imm == 0u32 {
            shifter_operand = 0u32;
            shifter_carry_out = eval::extract_bits(cpu.read_reg(p.m)?, 31u32, 31u32);
        } else {
            shifter_operand = eval::lsr(cpu.read_reg(p.m)?, p.shift_imm);
            shifter_carry_out = eval::extract_bits(cpu.read_reg(p.m)?, p.shift_imm.wrapping_sub(1u32), p.shift_imm.wrapping_sub(1u32));
        }
        if cpu.condition_passed(p.cond) {
            result = shifter_operand;
            let __wval = result;
            cpu.write_reg(p.d, __wval)?;
            cpu.set_flag(Flag::N, eval::extract_bits(result, 31u32, 31u32) != 0);
            cpu.set_flag(Flag::Z, result == 0u32);
            cpu.set_flag(Flag::C, shifter_carry_out != 0);
        }
        Ok(())
    })();
    match r {
        Ok(()) => Ok(Outcome::Completed),
        Err(Fault::DataAbort { addr }) => {
            cpu.enter_data_abort(addr);
            Ok(Outcome::Aborted { addr })
        }
        Err(e) => Err(e),
    }
}

pub fn mov_lsr_imm(p: &P5, cpu: &mut CpuState) -> Result<Outcome, Fault> {
    let r = (|| -> Result<(), Fault> {
        let result: u32;
        let shifter_carry_out: u32;
        let shifter_operand: u32;
        if p.shift_imm == 0u32 {
            shifter_operand = 0u32;
            shifter_carry_out = eval::extract_bits(cpu.read_reg(p.m)?, 31u32, 31u32);
        } else {
            shifter_operand = eval::lsr(cpu.read_reg(p.m)?, p.shift_imm);
            shifter_carry_out = eval::extract_bits(cpu.read_reg(p.m)?, p.shift_imm.wrapping_sub(1u32), p.shift_imm.wrapping_sub(1u32));
        }
        if cpu.condition_passed(p.cond) {
            result = shifter_operand;
            let __wval = result;
            cpu.write_reg(p.d, __wval)?;
            if p.s_flag == 1u32 {
                cpu.set_flag(Flag::N, eval::extract_bits(result, 31u32, 31u32) != 0);
                cpu.set_flag(Flag::Z, result == 0u32);
                cpu.set_flag(Flag::C, shifter_carry_out != 0);
            }
        }
        Ok(())
    })();
    match r {
        Ok(()) => Ok(Outcome::Completed),
        Err(Fault::DataAbort { addr }) => {
            cpu.enter_data_abort(addr);
            Ok(Outcome::Aborted { addr })
        }
        Err(e) => Err(e),
    }
}

pub fn mul_s0_al(p: &P6, cpu: &mut CpuState) -> Result<Outcome, Fault> {
    let r = (|| -> Result<(), Fault> {
        let result: u32;
        result = cpu.read_reg(p.m)?.wrapping_mul(cpu.read_reg(p.s)?);
        let __wval = result;
        cpu.write_reg(p.d, __wval)?;
        Ok(())
    })();
    match r {
        Ok(()) => Ok(Outcome::Completed),
        Err(Fault::DataAbort { addr }) => {
            cpu.enter_data_abort(addr);
            Ok(Outcome::Aborted { addr })
        }
        Err(e) => Err(e),
    }
}

pub fn mul_s0(p: &P6, cpu: &mut CpuState) -> Result<Outcome, Fault> {
    let r = (|| -> Result<(), Fault> {
        let result: u32;
        if cpu.condition_passed(p.cond) {
            result = cpu.read_reg(p.m)?.wrapping_mul(cpu.read_reg(p.s)?);
            let __wval = result;
            cpu.write_reg(p.d, __wval)?;
        }
        Ok(())
    })();
    match r {
        Ok(()) => Ok(Outcome::Completed),
        Err(Fault::DataAbort { addr }) => {
            cpu.enter_data_abort(addr);
            Ok(Outcome::Aborted { addr })
        }
        Err(e) => Err(e),
    }
}

pub fn mul_s1_al(p: &P6, cpu: &mut CpuState) -> Result<Outcome, Fault> {
    let r = (|| -> Result<(), Fault> {
        let result: u32;
        result = cpu.read_reg(p.m)?.wrapping_mul(cpu.read_reg(p.s)?);
        let __wval = result;
        cpu.write_reg(p.d, __wval)?;
        cpu.set_flag(Flag::N, eval::extract_bits(result, 31u32, 31u32) != 0);
        cpu.set_flag(Flag::Z, result == 0u32);
        Ok(())
    })();
    match r {
        Ok(()) => Ok(Outcome::Completed),
        Err(Fault::DataAbort { addr }) => {
            cpu.enter_data_abort(addr);
            Ok(Outcome::Aborted { addr })
        }
        Err(e) => Err(e),
    }
}

pub fn mul_s1(p: &P6, cpu: &mut CpuState) -> Result<Outcome, Fault> {
    let r = (|| -> Result<(), Fault> {
        let result: u32;
        if cpu.condition_passed(p.cond) {
            result = cpu.read_reg(p.m)?.wrapping_mul(cpu.read_reg(p.s)?);
            let __wval = result;
            cpu.write_reg(p.d, __wval)?;
            cpu.set_flag(Flag::N, eval::extract_bits(result, 31u32, 31u32) != 0);
            cpu.set_flag(Flag::Z, result == 0u32);
        }
        Ok(())
    })();
    match r {
        Ok(()) => Ok(Outcome::Completed),
        Err(Fault::DataAbort { addr }) => {
            cpu.enter_data_abort(addr);
            Ok(Outcome::Aborted { addr })
        }
        Err(e) => Err(e),
    }
}

pub fn mul(p: &P6, cpu: &mut CpuState) -> Result<Outcome, Fault> {
    let r = (|| -> Result<(), Fault> {
        let result: u32;
        if cpu.condition_passed(p.cond) {
            result = cpu.read_reg(p.m)?.wrapping_mul(cpu.read_reg(p.s)?);
            let __wval = result;
            cpu.write_reg(p.d, __wval)?;
            if p.s_flag == 1u32 {
                cpu.set_flag(Flag::N, eval::extract_bits(result, 31u32, 31u32) != 0);
                cpu.set_flag(Flag::Z, result == 0u32);
            }
        }
        Ok(())
    })();
    match r {
        Ok(()) => Ok(Outcome::Completed),
        Err(Fault::DataAbort { addr }) => {
            cpu.enter_data_abort(addr);
            Ok(Outcome::Aborted { addr })
        }
        Err(e) => Err(e),
    }
}

pub fn qadd_al(p: &P7, cpu: &mut CpuState) -> Result<Outcome, Fault> {
    let r = (|| -> Result<(), Fault> {
        let __wval = eval::signed_sat_add2(cpu.read_reg(p.n)?, cpu.read_reg(p.m)?, 32u32);
        cpu.write_reg(p.d, __wval)?;
        Ok(())
    })();
    match r {
        Ok(()) => Ok(Outcome::Completed),
        Err(Fault::DataAbort { addr }) => {
            cpu.enter_data_abort(addr);
            Ok(Outcome::Aborted { addr })
        }
        Err(e) => Err(e),
    }
}

pub fn qadd(p: &P7, cpu: &mut CpuState) -> Result<Outcome, Fault> {
    let r = (|| -> Result<(), Fault> {
        if cpu.condition_passed(p.cond) {
            let __wval = eval::signed_sat_add2(cpu.read_reg(p.n)?, cpu.read_reg(p.m)?, 32u32);
            cpu.write_reg(p.d, __wval)?;
        }
        Ok(())
    })();
    match r {
        Ok(()) => Ok(Outcome::Completed),
        Err(Fault::DataAbort { addr }) => {
            cpu.enter_data_abort(addr);
            Ok(Outcome::Aborted { addr })
        }
        Err(e) => Err(e),
    }
}

pub fn ldr_off_imm_al(p: &P8, cpu: &mut CpuState) -> Result<Outcome, Fault> {
    let r = (|| -> Result<(), Fault> {
        let address: u32;
        let data: u32;
        address = cpu.read_reg(p.n)?.wrapping_add(p.offset_12);
        data = cpu.read_mem(address, 4)?;
        if p.d == 15u32 {
            let __wval = data & 4294967292u32;
            cpu.write_reg(15u32, __wval)?;
        } else {
            let __wval = data;
            cpu.write_reg(p.d, __wval)?;
        }
        Ok(())
    })();
    match r {
        Ok(()) => Ok(Outcome::Completed),
        Err(Fault::DataAbort { addr }) => {
            cpu.enter_data_abort(addr);
            Ok(Outcome::Aborted { addr })
        }
        Err(e) => Err(e),
    }
}

pub fn ldr_off_imm(p: &P8, cpu: &mut CpuState) -> Result<Outcome, Fault> {
    let r = (|| -> Result<(), Fault> {
        let address: u32;
        let data: u32;
        address = cpu.read_reg(p.n)?.wrapping_add(p.offset_12);
        if cpu.condition_passed(p.cond) {
            data = cpu.read_mem(address, 4)?;
            if p.d == 15u32 {
                let __wval = data & 4294967292u32;
                cpu.write_reg(15u32, __wval)?;
            } else {
                let __wval = data;
                cpu.write_reg(p.d, __wval)?;
            }
        }
        Ok(())
    })();
    match r {
        Ok(()) => Ok(Outcome::Completed),
        Err(Fault::DataAbort { addr }) => {
            cpu.enter_data_abort(addr);
            Ok(Outcome::Aborted { addr })
        }
        Err(e) => Err(e),
    }
}

pub fn ldr_pre_imm_al(p: &P8, cpu: &mut CpuState) -> Result<Outcome, Fault> {
    let r = (|| -> Result<(), Fault> {
        let address: u32;
        let data: u32;
        let wb_cond: u32;
        address = cpu.read_reg(p.n)?.wrapping_add(p.offset_12);
        wb_cond = 1u32;
        data = cpu.read_mem(address, 4)?;
        if p.d == 15u32 {
            let __wval = data & 4294967292u32;
            cpu.write_reg(15u32, __wval)?;
        } else {
            let __wval = data;
            cpu.write_reg(p.d, __wval)?;
        }
        if wb_cond != 0 {
            let __wval = address;
            cpu.write_reg(p.n, __wval)?;
        }
        Ok(())
    })();
    match r {
        Ok(()) => Ok(Outcome::Completed),
        Err(Fault::DataAbort { addr }) => {
            cpu.enter_data_abort(addr);
            Ok(Outcome::Aborted { addr })
        }
        Err(e) => Err(e),
    }
}

pub fn ldr_pre_imm(p: &P8, cpu: &mut CpuState) -> Result<Outcome, Fault> {
    let r = (|| -> Result<(), Fault> {
        let address: u32;
        let data: u32;
        let wb_cond: u32;
        address = cpu.read_reg(p.n)?.wrapping_add(p.offset_12);
        wb_cond = cpu.condition_passed(p.cond) as u32;
        if cpu.condition_passed(p.cond) {
            data = cpu.read_mem(address, 4)?;
            if p.d == 15u32 {
                let __wval = data & 4294967292u32;
                cpu.write_reg(15u32, __wval)?;
            } else {
                let __wval = data;
                cpu.write_reg(p.d, __wval)?;
            }
        }
        if wb_cond != 0 {
            let __wval = address;
            cpu.write_reg(p.n, __wval)?;
        }
        Ok(())
    })();
    match r {
        Ok(()) => Ok(Outcome::Completed),
        Err(Fault::DataAbort { addr }) => {
            cpu.enter_data_abort(addr);
            Ok(Outcome::Aborted { addr })
        }
        Err(e) => Err(e),
    }
}

pub fn ldr_pre_reg_al(p: &P7, cpu: &mut CpuState) -> Result<Outcome, Fault> {
    let r = (|| -> Result<(), Fault> {
        let address: u32;
        let data: u32;
        let wb_cond: u32;
        address = cpu.read_reg(p.n)?.wrapping_add(cpu.read_reg(p.m)?);
        wb_cond = 1u32;
        data = cpu.read_mem(address, 4)?;
        if p.d == 15u32 {
            let __wval = data & 4294967292u32;
            cpu.write_reg(15u32, __wval)?;
        } else {
            let __wval = data;
            cpu.write_reg(p.d, __wval)?;
        }
        if wb_cond != 0 {
            let __wval = address;
            cpu.write_reg(p.n, __wval)?;
        }
        Ok(())
    })();
    match r {
        Ok(()) => Ok(Outcome::Completed),
        Err(Fault::DataAbort { addr }) => {
            cpu.enter_data_abort(addr);
            Ok(Outcome::Aborted { addr })
        }
        Err(e) => Err(e),
    }
}

pub fn ldr_pre_reg(p: &P7, cpu: &mut CpuState) -> Result<Outcome, Fault> {
    let r = (|| -> Result<(), Fault> {
        let address: u32;
        let data: u32;
        let wb_cond: u32;
        address = cpu.read_reg(p.n)?.wrapping_add(cpu.read_reg(p.m)?);
        wb_cond = cpu.condition_passed(p.cond) as u32;
        if cpu.condition_passed(p.cond) {
            data = cpu.read_mem(address, 4)?;
            if p.d == 15u32 {
                let __wval = data & 4294967292u32;
                cpu.write_reg(15u32, __wval)?;
            } else {
                let __wval = data;
                cpu.write_reg(p.d, __wval)?;
            }
        }
        if wb_cond != 0 {
            let __wval = address;
            cpu.write_reg(p.n, __wval)?;
        }
        Ok(())
    })();
    match r {
        Ok(()) => Ok(Outcome::Completed),
        Err(Fault::DataAbort { addr }) => {
            cpu.enter_data_abort(addr);
            Ok(Outcome::Aborted { addr })
        }
        Err(e) => Err(e),
    }
}

pub fn ldr_post_imm_al(p: &P8, cpu: &mut CpuState) -> Result<Outcome, Fault> {
    let r = (|| -> Result<(), Fault> {
        let address: u32;
        let data: u32;
        let wb_cond: u32;
        address = cpu.read_reg(p.n)?;
        wb_cond = 1u32;
        data = cpu.read_mem(address, 4)?;
        if p.d == 15u32 {
            let __wval = data & 4294967292u32;
            cpu.write_reg(15u32, __wval)?;
        } else {
            let __wval = data;
            cpu.write_reg(p.d, __wval)?;
        }
        if wb_cond != 0 {
            let __wval = cpu.read_reg(p.n)?.wrapping_add(p.offset_12);
            cpu.write_reg(p.n, __wval)?;
        }
        Ok(())
    })();
    match r {
        Ok(()) => Ok(Outcome::Completed),
        Err(Fault::DataAbort { addr }) => {
            cpu.enter_data_abort(addr);
            Ok(Outcome::Aborted { addr })
        }
        Err(e) => Err(e),
    }
}

pub fn ldr_post_imm(p: &P8, cpu: &mut CpuState) -> Result<Outcome, Fault> {
    let r = (|| -> Result<(), Fault> {
        let address: u32;
        let data: u32;
        let wb_cond: u32;
        address = cpu.read_reg(p.n)?;
        wb_cond = cpu.condition_passed(p.cond) as u32;
        if cpu.condition_passed(p.cond) {
            data = cpu.read_mem(address, 4)?;
            if p.d == 15u32 {
                let __wval = data & 4294967292u32;
                cpu.write_reg(15u32, __wval)?;
            } else {
                let __wval = data;
                cpu.write_reg(p.d, __wval)?;
            }
        }
        if wb_cond != 0 {
            let __wval = cpu.read_reg(p.n)?.wrapping_add(p.offset_12);
            cpu.write_reg(p.n, __wval)?;
        }
        Ok(())
    })();
    match r {
        Ok(()) => Ok(Outcome::Completed),
        Err(Fault::DataAbort { addr }) => {
            cpu.enter_data_abort(addr);
            Ok(Outcome::Aborted { addr })
        }
        Err(e) => Err(e),
    }
}

pub fn ldrb_off_imm_al(p: &P8, cpu: &mut CpuState) -> Result<Outcome, Fault> {
    let r = (|| -> Result<(), Fault> {
        let address: u32;
        address = cpu.read_reg(p.n)?.wrapping_add(p.offset_12);
        let __wval = cpu.read_mem(address, 1)?;
        cpu.write_reg(p.d, __wval)?;
        Ok(())
    })();
    match r {
        Ok(()) => Ok(Outcome::Completed),
        Err(Fault::DataAbort { addr }) => {
            cpu.enter_data_abort(addr);
            Ok(Outcome::Aborted { addr })
        }
        Err(e) => Err(e),
    }
}

pub fn ldrb_off_imm(p: &P8, cpu: &mut CpuState) -> Result<Outcome, Fault> {
    let r = (|| -> Result<(), Fault> {
        let address: u32;
        address = cpu.read_reg(p.n)?.wrapping_add(p.offset_12);
        if cpu.condition_passed(p.cond) {
            let __wval = cpu.read_mem(address, 1)?;
            cpu.write_reg(p.d, __wval)?;
        }
        Ok(())
    })();
    match r {
        Ok(()) => Ok(Outcome::Completed),
        Err(Fault::DataAbort { addr }) => {
            cpu.enter_data_abort(addr);
            Ok(Outcome::Aborted { addr })
        }
        Err(e) => Err(e),
    }
}

pub fn ldrb_pre_imm_al(p: &P8, cpu: &mut CpuState) -> Result<Outcome, Fault> {
    let r = (|| -> Result<(), Fault> {
        let address: u32;
        let wb_cond: u32;
        address = cpu.read_reg(p.n)?.wrapping_add(p.offset_12);
        wb_cond = 1u32;
        let __wval = cpu.read_mem(address, 1)?;
        cpu.write_reg(p.d, __wval)?;
        if wb_cond != 0 {
            let __wval = address;
            cpu.write_reg(p.n, __wval)?;
        }
        Ok(())
    })();
    match r {
        Ok(()) => Ok(Outcome::Completed),
        Err(Fault::DataAbort { addr }) => {
            cpu.enter_data_abort(addr);
            Ok(Outcome::Aborted { addr })
        }
        Err(e) => Err(e),
    }
}

pub fn ldrb_pre_imm(p: &P8, cpu: &mut CpuState) -> Result<Outcome, Fault> {
    let r = (|| -> Result<(), Fault> {
        let address: u32;
        let wb_cond: u32;
        address = cpu.read_reg(p.n)?.wrapping_add(p.offset_12);
        wb_cond = cpu.condition_passed(p.cond) as u32;
        if cpu.condition_passed(p.cond) {
            let __wval = cpu.read_mem(address, 1)?;
            cpu.write_reg(p.d, __wval)?;
        }
        if wb_cond != 0 {
            let __wval = address;
            cpu.write_reg(p.n, __wval)?;
        }
        Ok(())
    })();
    match r {
        Ok(()) => Ok(Outcome::Completed),
        Err(Fault::DataAbort { addr }) => {
            cpu.enter_data_abort(addr);
            Ok(Outcome::Aborted { addr })
        }
        Err(e) => Err(e),
    }
}

pub fn ldrb_pre_reg_al(p: &P7, cpu: &mut CpuState) -> Result<Outcome, Fault> {
    let r = (|| -> Result<(), Fault> {
        let address: u32;
        let wb_cond: u32;
        address = cpu.read_reg(p.n)?.wrapping_add(cpu.read_reg(p.m)?);
        wb_cond = 1u32;
        let __wval = cpu.read_mem(address, 1)?;
        cpu.write_reg(p.d, __wval)?;
        if wb_cond != 0 {
            let __wval = address;
            cpu.write_reg(p.n, __wval)?;
        }
        Ok(())
    })();
    match r {
        Ok(()) => Ok(Outcome::Completed),
        Err(Fault::DataAbort { addr }) => {
            cpu.enter_data_abort(addr);
            Ok(Outcome::Aborted { addr })
        }
        Err(e) => Err(e),
    }
}

pub fn ldrb_pre_reg(p: &P7, cpu: &mut CpuState) -> Result<Outcome, Fault> {
    let r = (|| -> Result<(), Fault> {
        let address: u32;
        let wb_cond: u32;
        address = cpu.read_reg(p.n)?.wrapping_add(cpu.read_reg(p.m)?);
        wb_cond = cpu.condition_passed(p.cond) as u32;
        if cpu.condition_passed(p.cond) {
            let __wval = cpu.read_mem(address, 1)?;
            cpu.write_reg(p.d, __wval)?;
        }
        if wb_cond != 0 {
            let __wval = address;
            cpu.write_reg(p.n, __wval)?;
        }
        Ok(())
    })();
    match r {
        Ok(()) => Ok(Outcome::Completed),
        Err(Fault::DataAbort { addr }) => {
            cpu.enter_data_abort(addr);
            Ok(Outcome::Aborted { addr })
        }
        Err(e) => Err(e),
    }
}

pub fn ldrb_post_imm_al(p: &P8, cpu: &mut CpuState) -> Result<Outcome, Fault> {
    let r = (|| -> Result<(), Fault> {
        let address: u32;
        let wb_cond: u32;
        address = cpu.read_reg(p.n)?;
        wb_cond = 1u32;
        let __wval = cpu.read_mem(address, 1)?;
        cpu.write_reg(p.d, __wval)?;
        if wb_cond != 0 {
            let __wval = cpu.read_reg(p.n)?.wrapping_add(p.offset_12);
            cpu.write_reg(p.n, __wval)?;
        }
        Ok(())
    })();
    match r {
        Ok(()) => Ok(Outcome::Completed),
        Err(Fault::DataAbort { addr }) => {
            cpu.enter_data_abort(addr);
            Ok(Outcome::Aborted { addr })
        }
        Err(e) => Err(e),
    }
}

pub fn ldrb_post_imm(p: &P8, cpu: &mut CpuState) -> Result<Outcome, Fault> {
    let r = (|| -> Result<(), Fault> {
        let address: u32;
        let wb_cond: u32;
        address = cpu.read_reg(p.n)?;
        wb_cond = cpu.condition_passed(p.cond) as u32;
        if cpu.condition_passed(p.cond) {
            let __wval = cpu.read_mem(address, 1)?;
            cpu.write_reg(p.d, __wval)?;
        }
        if wb_cond != 0 {
            let __wval = cpu.read_reg(p.n)?.wrapping_add(p.offset_12);
            cpu.write_reg(p.n, __wval)?;
        }
        Ok(())
    })();
    match r {
        Ok(()) => Ok(Outcome::Completed),
        Err(Fault::DataAbort { addr }) => {
            cpu.enter_data_abort(addr);
            Ok(Outcome::Aborted { addr })
        }
        Err(e) => Err(e),
    }
}

pub fn str_off_imm_al(p: &P8, cpu: &mut CpuState) -> Result<Outcome, Fault> {
    let r = (|| -> Result<(), Fault> {
        let address: u32;
        address = cpu.read_reg(p.n)?.wrapping_add(p.offset_12);
        let __wval = cpu.read_reg(p.d)?;
        cpu.write_mem(address, 4, __wval)?;
        Ok(())
    })();
    match r {
        Ok(()) => Ok(Outcome::Completed),
        Err(Fault::DataAbort { addr }) => {
            cpu.enter_data_abort(addr);
            Ok(Outcome::Aborted { addr })
        }
        Err(e) => Err(e),
    }
}

pub fn str_off_imm(p: &P8, cpu: &mut CpuState) -> Result<Outcome, Fault> {
    let r = (|| -> Result<(), Fault> {
        let address: u32;
        address = cpu.read_reg(p.n)?.wrapping_add(p.offset_12);
        if cpu.condition_passed(p.cond) {
            let __wval = cpu.read_reg(p.d)?;
            cpu.write_mem(address, 4, __wval)?;
        }
        Ok(())
    })();
    match r {
        Ok(()) => Ok(Outcome::Completed),
        Err(Fault::DataAbort { addr }) => {
            cpu.enter_data_abort(addr);
            Ok(Outcome::Aborted { addr })
        }
        Err(e) => Err(e),
    }
}

pub fn str_pre_imm_al(p: &P8, cpu: &mut CpuState) -> Result<Outcome, Fault> {
    let r = (|| -> Result<(), Fault> {
        let address: u32;
        let wb_cond: u32;
        address = cpu.read_reg(p.n)?.wrapping_add(p.offset_12);
        wb_cond = 1u32;
        let __wval = cpu.read_reg(p.d)?;
        cpu.write_mem(address, 4, __wval)?;
        if wb_cond != 0 {
            let __wval = address;
            cpu.write_reg(p.n, __wval)?;
        }
        Ok(())
    })();
    match r {
        Ok(()) => Ok(Outcome::Completed),
        Err(Fault::DataAbort { addr }) => {
            cpu.enter_data_abort(addr);
            Ok(Outcome::Aborted { addr })
        }
        Err(e) => Err(e),
    }
}

pub fn str_pre_imm(p: &P8, cpu: &mut CpuState) -> Result<Outcome, Fault> {
    let r = (|| -> Result<(), Fault> {
        let address: u32;
        let wb_cond: u32;
        address = cpu.read_reg(p.n)?.wrapping_add(p.offset_12);
        wb_cond = cpu.condition_passed(p.cond) as u32;
        if cpu.condition_passed(p.cond) {
            let __wval = cpu.read_reg(p.d)?;
            cpu.write_mem(address, 4, __wval)?;
        }
        if wb_cond != 0 {
            let __wval = address;
            cpu.write_reg(p.n, __wval)?;
        }
        Ok(())
    })();
    match r {
        Ok(()) => Ok(Outcome::Completed),
        Err(Fault::DataAbort { addr }) => {
            cpu.enter_data_abort(addr);
            Ok(Outcome::Aborted { addr })
        }
        Err(e) => Err(e),
    }
}

pub fn str_pre_reg_al(p: &P7, cpu: &mut CpuState) -> Result<Outcome, Fault> {
    let r = (|| -> Result<(), Fault> {
        let address: u32;
        let wb_cond: u32;
        address = cpu.read_reg(p.n)?.wrapping_add(cpu.read_reg(p.m)?);
        wb_cond = 1u32;
        let __wval = cpu.read_reg(p.d)?;
        cpu.write_mem(address, 4, __wval)?;
        if wb_cond != 0 {
            let __wval = address;
            cpu.write_reg(p.n, __wval)?;
        }
        Ok(())
    })();
    match r {
        Ok(()) => Ok(Outcome::Completed),
        Err(Fault::DataAbort { addr }) => {
            cpu.enter_data_abort(addr);
            Ok(Outcome::Aborted { addr })
        }
        Err(e) => Err(e),
    }
}

pub fn str_pre_reg(p: &P7, cpu: &mut CpuState) -> Result<Outcome, Fault> {
    let r = (|| -> Result<(), Fault> {
        let address: u32;
        let wb_cond: u32;
        address = cpu.read_reg(p.n)?.wrapping_add(cpu.read_reg(p.m)?);
        wb_cond = cpu.condition_passed(p.cond) as u32;
        if cpu.condition_passed(p.cond) {
            let __wval = cpu.read_reg(p.d)?;
            cpu.write_mem(address, 4, __wval)?;
        }
        if wb_cond != 0 {
            let __wval = address;
            cpu.write_reg(p.n, __wval)?;
        }
        Ok(())
    })();
    match r {
        Ok(()) => Ok(Outcome::Completed),
        Err(Fault::DataAbort { addr }) => {
            cpu.enter_data_abort(addr);
            Ok(Outcome::Aborted { addr })
        }
        Err(e) => Err(e),
    }
}

pub fn str_post_imm_al(p: &P8, cpu: &mut CpuState) -> Result<Outcome, Fault> {
    let r = (|| -> Result<(), Fault> {
        let address: u32;
        let wb_cond: u32;
        address = cpu.read_reg(p.n)?;
        wb_cond = 1u32;
        let __wval = cpu.read_reg(p.d)?;
        cpu.write_mem(address, 4, __wval)?;
        if wb_cond != 0 {
            let __wval = cpu.read_reg(p.n)?.wrapping_add(p.offset_12);
            cpu.write_reg(p.n, __wval)?;
        }
        Ok(())
    })();
    match r {
        Ok(()) => Ok(Outcome::Completed),
        Err(Fault::DataAbort { addr }) => {
            cpu.enter_data_abort(addr);
            Ok(Outcome::Aborted { addr })
        }
        Err(e) => Err(e),
    }
}

pub fn str_post_imm(p: &P8, cpu: &mut CpuState) -> Result<Outcome, Fault> {
    let r = (|| -> Result<(), Fault> {
        let address: u32;
        let wb_cond: u32;
        address = cpu.read_reg(p.n)?;
        wb_cond = cpu.condition_passed(p.cond) as u32;
        if cpu.condition_passed(p.cond) {
            let __wval = cpu.read_reg(p.d)?;
            cpu.write_mem(address, 4, __wval)?;
        }
        if wb_cond != 0 {
            let __wval = cpu.read_reg(p.n)?.wrapping_add(p.offset_12);
            cpu.write_reg(p.n, __wval)?;
        }
        Ok(())
    })();
    match r {
        Ok(()) => Ok(Outcome::Completed),
        Err(Fault::DataAbort { addr }) => {
            cpu.enter_data_abort(addr);
            Ok(Outcome::Aborted { addr })
        }
        Err(e) => Err(e),
    }
}

pub fn ldrbt_al(p: &P8, cpu: &mut CpuState) -> Result<Outcome, Fault> {
    let r = (|| -> Result<(), Fault> {
        let address: u32;
        address = cpu.read_reg(p.n)?;
        let __wval = cpu.read_mem(address, 1)?;
        cpu.write_reg(p.d, __wval)?;
        let __wval = address.wrapping_add(p.offset_12);
        cpu.write_reg(p.n, __wval)?;
        Ok(())
    })();
    match r {
        Ok(()) => Ok(Outcome::Completed),
        Err(Fault::DataAbort { addr }) => {
            cpu.enter_data_abort(addr);
            Ok(Outcome::Aborted { addr })
        }
        Err(e) => Err(e),
    }
}

pub fn ldrbt(p: &P8, cpu: &mut CpuState) -> Result<Outcome, Fault> {
    let r = (|| -> Result<(), Fault> {
        let address: u32;
        address = cpu.read_reg(p.n)?;
        if cpu.condition_passed(p.cond) {
            let __wval = cpu.read_mem(address, 1)?;
            cpu.write_reg(p.d, __wval)?;
            let __wval = address.wrapping_add(p.offset_12);
            cpu.write_reg(p.n, __wval)?;
        }
        Ok(())
    })();
    match r {
        Ok(()) => Ok(Outcome::Completed),
        Err(Fault::DataAbort { addr }) => {
            cpu.enter_data_abort(addr);
            Ok(Outcome::Aborted { addr })
        }
        Err(e) => Err(e),
    }
}

pub fn uxtah_al(p: &P7, cpu: &mut CpuState) -> Result<Outcome, Fault> {
    let r = (|| -> Result<(), Fault> {
        let __wval = cpu.read_reg(p.n)?.wrapping_add(cpu.read_reg(p.m)? & 65535u32);
        cpu.write_reg(p.d, __wval)?;
        Ok(())
    })();
    match r {
        Ok(()) => Ok(Outcome::Completed),
        Err(Fault::DataAbort { addr }) => {
            cpu.enter_data_abort(addr);
            Ok(Outcome::Aborted { addr })
        }
        Err(e) => Err(e),
    }
}

pub fn uxtah(p: &P7, cpu: &mut CpuState) -> Result<Outcome, Fault> {
    let r = (|| -> Result<(), Fault> {
        if cpu.condition_passed(p.cond) {
            let __wval = cpu.read_reg(p.n)?.wrapping_add(cpu.read_reg(p.m)? & 65535u32);
            cpu.write_reg(p.d, __wval)?;
        }
        Ok(())
    })();
    match r {
        Ok(()) => Ok(Outcome::Completed),
        Err(Fault::DataAbort { addr }) => {
            cpu.enter_data_abort(addr);
            Ok(Outcome::Aborted { addr })
        }
        Err(e) => Err(e),
    }
}

pub fn uxth_al(p: &P7, cpu: &mut CpuState) -> Result<Outcome, Fault> {
    let r = (|| -> Result<(), Fault> {
        let __wval = cpu.read_reg(p.m)? & 65535u32;
        cpu.write_reg(p.d, __wval)?;
        Ok(())
    })();
    match r {
        Ok(()) => Ok(Outcome::Completed),
        Err(Fault::DataAbort { addr }) => {
            cpu.enter_data_abort(addr);
            Ok(Outcome::Aborted { addr })
        }
        Err(e) => Err(e),
    }
}

pub fn uxth(p: &P7, cpu: &mut CpuState) -> Result<Outcome, Fault> {
    let r = (|| -> Result<(), Fault> {
        if cpu.condition_passed(p.cond) {
            let __wval = cpu.read_reg(p.m)? & 65535u32;
            cpu.write_reg(p.d, __wval)?;
        }
        Ok(())
    })();
    match r {
        Ok(()) => Ok(Outcome::Completed),
        Err(Fault::DataAbort { addr }) => {
            cpu.enter_data_abort(addr);
            Ok(Outcome::Aborted { addr })
        }
        Err(e) => Err(e),
    }
}

pub fn ldm_ia_al(p: &P9, cpu: &mut CpuState) -> Result<Outcome, Fault> {
    let r = (|| -> Result<(), Fault> {
        let address: u32;
        let _end_address: u32;
        let new_base: u32;
        let start_address: u32;
        let wb_cond: u32;
        start_address = cpu.read_reg(p.n)?;
        _end_address = cpu.read_reg(p.n)?.wrapping_add(p.nb_reg_x4).wrapping_sub(4u32);
        new_base = cpu.read_reg(p.n)?.wrapping_add(p.nb_reg_x4);
        wb_cond = ((1u32 != 0) & (((p.w_flag == 1u32) as u32) != 0)) as u32;
        address = start_address;
        let __a0 = address;
        let __a1 = p.reglist;
        load_multiple(cpu, __a0, __a1)?;
        if wb_cond != 0 {
            let __wval = new_base;
            cpu.write_reg(p.n, __wval)?;
        }
        Ok(())
    })();
    match r {
        Ok(()) => Ok(Outcome::Completed),
        Err(Fault::DataAbort { addr }) => {
            cpu.enter_data_abort(addr);
            Ok(Outcome::Aborted { addr })
        }
        Err(e) => Err(e),
    }
}

pub fn ldm_ia(p: &P9, cpu: &mut CpuState) -> Result<Outcome, Fault> {
    let r = (|| -> Result<(), Fault> {
        let address: u32;
        let _end_address: u32;
        let new_base: u32;
        let start_address: u32;
        let wb_cond: u32;
        start_address = cpu.read_reg(p.n)?;
        _end_address = cpu.read_reg(p.n)?.wrapping_add(p.nb_reg_x4).wrapping_sub(4u32);
        new_base = cpu.read_reg(p.n)?.wrapping_add(p.nb_reg_x4);
        wb_cond = (((cpu.condition_passed(p.cond) as u32) != 0) & (((p.w_flag == 1u32) as u32) != 0)) as u32;
        if cpu.condition_passed(p.cond) {
            address = start_address;
            let __a0 = address;
            let __a1 = p.reglist;
            load_multiple(cpu, __a0, __a1)?;
        }
        if wb_cond != 0 {
            let __wval = new_base;
            cpu.write_reg(p.n, __wval)?;
        }
        Ok(())
    })();
    match r {
        Ok(()) => Ok(Outcome::Completed),
        Err(Fault::DataAbort { addr }) => {
            cpu.enter_data_abort(addr);
            Ok(Outcome::Aborted { addr })
        }
        Err(e) => Err(e),
    }
}

pub fn ldm_db_al(p: &P9, cpu: &mut CpuState) -> Result<Outcome, Fault> {
    let r = (|| -> Result<(), Fault> {
        let address: u32;
        let _end_address: u32;
        let new_base: u32;
        let start_address: u32;
        let wb_cond: u32;
        start_address = cpu.read_reg(p.n)?.wrapping_sub(p.nb_reg_x4);
        _end_address = cpu.read_reg(p.n)?.wrapping_sub(4u32);
        new_base = cpu.read_reg(p.n)?.wrapping_sub(p.nb_reg_x4);
        wb_cond = ((1u32 != 0) & (((p.w_flag == 1u32) as u32) != 0)) as u32;
        address = start_address;
        let __a0 = address;
        let __a1 = p.reglist;
        load_multiple(cpu, __a0, __a1)?;
        if wb_cond != 0 {
            let __wval = new_base;
            cpu.write_reg(p.n, __wval)?;
        }
        Ok(())
    })();
    match r {
        Ok(()) => Ok(Outcome::Completed),
        Err(Fault::DataAbort { addr }) => {
            cpu.enter_data_abort(addr);
            Ok(Outcome::Aborted { addr })
        }
        Err(e) => Err(e),
    }
}

pub fn ldm_db(p: &P9, cpu: &mut CpuState) -> Result<Outcome, Fault> {
    let r = (|| -> Result<(), Fault> {
        let address: u32;
        let _end_address: u32;
        let new_base: u32;
        let start_address: u32;
        let wb_cond: u32;
        start_address = cpu.read_reg(p.n)?.wrapping_sub(p.nb_reg_x4);
        _end_address = cpu.read_reg(p.n)?.wrapping_sub(4u32);
        new_base = cpu.read_reg(p.n)?.wrapping_sub(p.nb_reg_x4);
        wb_cond = (((cpu.condition_passed(p.cond) as u32) != 0) & (((p.w_flag == 1u32) as u32) != 0)) as u32;
        if cpu.condition_passed(p.cond) {
            address = start_address;
            let __a0 = address;
            let __a1 = p.reglist;
            load_multiple(cpu, __a0, __a1)?;
        }
        if wb_cond != 0 {
            let __wval = new_base;
            cpu.write_reg(p.n, __wval)?;
        }
        Ok(())
    })();
    match r {
        Ok(()) => Ok(Outcome::Completed),
        Err(Fault::DataAbort { addr }) => {
            cpu.enter_data_abort(addr);
            Ok(Outcome::Aborted { addr })
        }
        Err(e) => Err(e),
    }
}

pub fn stm_ia_al(p: &P9, cpu: &mut CpuState) -> Result<Outcome, Fault> {
    let r = (|| -> Result<(), Fault> {
        let address: u32;
        let _end_address: u32;
        let new_base: u32;
        let start_address: u32;
        let wb_cond: u32;
        start_address = cpu.read_reg(p.n)?;
        _end_address = cpu.read_reg(p.n)?.wrapping_add(p.nb_reg_x4).wrapping_sub(4u32);
        new_base = cpu.read_reg(p.n)?.wrapping_add(p.nb_reg_x4);
        wb_cond = ((1u32 != 0) & (((p.w_flag == 1u32) as u32) != 0)) as u32;
        address = start_address;
        let __a0 = address;
        let __a1 = p.reglist;
        store_multiple(cpu, __a0, __a1)?;
        if wb_cond != 0 {
            let __wval = new_base;
            cpu.write_reg(p.n, __wval)?;
        }
        Ok(())
    })();
    match r {
        Ok(()) => Ok(Outcome::Completed),
        Err(Fault::DataAbort { addr }) => {
            cpu.enter_data_abort(addr);
            Ok(Outcome::Aborted { addr })
        }
        Err(e) => Err(e),
    }
}

pub fn stm_ia(p: &P9, cpu: &mut CpuState) -> Result<Outcome, Fault> {
    let r = (|| -> Result<(), Fault> {
        let address: u32;
        let _end_address: u32;
        let new_base: u32;
        let start_address: u32;
        let wb_cond: u32;
        start_address = cpu.read_reg(p.n)?;
        _end_address = cpu.read_reg(p.n)?.wrapping_add(p.nb_reg_x4).wrapping_sub(4u32);
        new_base = cpu.read_reg(p.n)?.wrapping_add(p.nb_reg_x4);
        wb_cond = (((cpu.condition_passed(p.cond) as u32) != 0) & (((p.w_flag == 1u32) as u32) != 0)) as u32;
        if cpu.condition_passed(p.cond) {
            address = start_address;
            let __a0 = address;
            let __a1 = p.reglist;
            store_multiple(cpu, __a0, __a1)?;
        }
        if wb_cond != 0 {
            let __wval = new_base;
            cpu.write_reg(p.n, __wval)?;
        }
        Ok(())
    })();
    match r {
        Ok(()) => Ok(Outcome::Completed),
        Err(Fault::DataAbort { addr }) => {
            cpu.enter_data_abort(addr);
            Ok(Outcome::Aborted { addr })
        }
        Err(e) => Err(e),
    }
}

pub fn stm_db_al(p: &P9, cpu: &mut CpuState) -> Result<Outcome, Fault> {
    let r = (|| -> Result<(), Fault> {
        let address: u32;
        let _end_address: u32;
        let new_base: u32;
        let start_address: u32;
        let wb_cond: u32;
        start_address = cpu.read_reg(p.n)?.wrapping_sub(p.nb_reg_x4);
        _end_address = cpu.read_reg(p.n)?.wrapping_sub(4u32);
        new_base = cpu.read_reg(p.n)?.wrapping_sub(p.nb_reg_x4);
        wb_cond = ((1u32 != 0) & (((p.w_flag == 1u32) as u32) != 0)) as u32;
        address = start_address;
        let __a0 = address;
        let __a1 = p.reglist;
        store_multiple(cpu, __a0, __a1)?;
        if wb_cond != 0 {
            let __wval = new_base;
            cpu.write_reg(p.n, __wval)?;
        }
        Ok(())
    })();
    match r {
        Ok(()) => Ok(Outcome::Completed),
        Err(Fault::DataAbort { addr }) => {
            cpu.enter_data_abort(addr);
            Ok(Outcome::Aborted { addr })
        }
        Err(e) => Err(e),
    }
}

pub fn stm_db(p: &P9, cpu: &mut CpuState) -> Result<Outcome, Fault> {
    let r = (|| -> Result<(), Fault> {
        let address: u32;
        let _end_address: u32;
        let new_base: u32;
        let start_address: u32;
        let wb_cond: u32;
        start_address = cpu.read_reg(p.n)?.wrapping_sub(p.nb_reg_x4);
        _end_address = cpu.read_reg(p.n)?.wrapping_sub(4u32);
        new_base = cpu.read_reg(p.n)?.wrapping_sub(p.nb_reg_x4);
        wb_cond = (((cpu.condition_passed(p.cond) as u32) != 0) & (((p.w_flag == 1u32) as u32) != 0)) as u32;
        if cpu.condition_passed(p.cond) {
            address = start_address;
            let __a0 = address;
            let __a1 = p.reglist;
            store_multiple(cpu, __a0, __a1)?;
        }
        if wb_cond != 0 {
            let __wval = new_base;
            cpu.write_reg(p.n, __wval)?;
        }
        Ok(())
    })();
    match r {
        Ok(()) => Ok(Outcome::Completed),
        Err(Fault::DataAbort { addr }) => {
            cpu.enter_data_abort(addr);
            Ok(Outcome::Aborted { addr })
        }
        Err(e) => Err(e),
    }
}

pub fn ldmx_ia_al(p: &P9, cpu: &mut CpuState) -> Result<Outcome, Fault> {
    let old_mode = cpu.mode;
    let r = (|| -> Result<(), Fault> {
        let address: u32;
        let _end_address: u32;
        let new_base: u32;
        let start_address: u32;
        let wb_cond: u32;
        start_address = cpu.read_reg(p.n)?;
        _end_address = cpu.read_reg(p.n)?.wrapping_add(p.nb_reg_x4).wrapping_sub(4u32);
        new_base = cpu.read_reg(p.n)?.wrapping_add(p.nb_reg_x4);
        wb_cond = ((1u32 != 0) & (((p.w_flag == 1u32) as u32) != 0)) as u32;
        address = start_address;
        restore_cpsr(cpu)?;
        let __a0 = address;
        let __a1 = p.reglist;
        load_multiple(cpu, __a0, __a1)?;
        if wb_cond != 0 {
            let __wval = new_base;
            cpu.write_reg_mode(p.n, old_mode, __wval)?;
        }
        Ok(())
    })();
    match r {
        Ok(()) => Ok(Outcome::Completed),
        Err(Fault::DataAbort { addr }) => {
            cpu.enter_data_abort(addr);
            Ok(Outcome::Aborted { addr })
        }
        Err(e) => Err(e),
    }
}

pub fn ldmx_ia(p: &P9, cpu: &mut CpuState) -> Result<Outcome, Fault> {
    let old_mode = cpu.mode;
    let r = (|| -> Result<(), Fault> {
        let address: u32;
        let _end_address: u32;
        let new_base: u32;
        let start_address: u32;
        let wb_cond: u32;
        start_address = cpu.read_reg(p.n)?;
        _end_address = cpu.read_reg(p.n)?.wrapping_add(p.nb_reg_x4).wrapping_sub(4u32);
        new_base = cpu.read_reg(p.n)?.wrapping_add(p.nb_reg_x4);
        wb_cond = (((cpu.condition_passed(p.cond) as u32) != 0) & (((p.w_flag == 1u32) as u32) != 0)) as u32;
        if cpu.condition_passed(p.cond) {
            address = start_address;
            restore_cpsr(cpu)?;
            let __a0 = address;
            let __a1 = p.reglist;
            load_multiple(cpu, __a0, __a1)?;
        }
        if wb_cond != 0 {
            let __wval = new_base;
            cpu.write_reg_mode(p.n, old_mode, __wval)?;
        }
        Ok(())
    })();
    match r {
        Ok(()) => Ok(Outcome::Completed),
        Err(Fault::DataAbort { addr }) => {
            cpu.enter_data_abort(addr);
            Ok(Outcome::Aborted { addr })
        }
        Err(e) => Err(e),
    }
}

pub fn ldmx_db_al(p: &P9, cpu: &mut CpuState) -> Result<Outcome, Fault> {
    let old_mode = cpu.mode;
    let r = (|| -> Result<(), Fault> {
        let address: u32;
        let _end_address: u32;
        let new_base: u32;
        let start_address: u32;
        let wb_cond: u32;
        start_address = cpu.read_reg(p.n)?.wrapping_sub(p.nb_reg_x4);
        _end_address = cpu.read_reg(p.n)?.wrapping_sub(4u32);
        new_base = cpu.read_reg(p.n)?.wrapping_sub(p.nb_reg_x4);
        wb_cond = ((1u32 != 0) & (((p.w_flag == 1u32) as u32) != 0)) as u32;
        address = start_address;
        restore_cpsr(cpu)?;
        let __a0 = address;
        let __a1 = p.reglist;
        load_multiple(cpu, __a0, __a1)?;
        if wb_cond != 0 {
            let __wval = new_base;
            cpu.write_reg_mode(p.n, old_mode, __wval)?;
        }
        Ok(())
    })();
    match r {
        Ok(()) => Ok(Outcome::Completed),
        Err(Fault::DataAbort { addr }) => {
            cpu.enter_data_abort(addr);
            Ok(Outcome::Aborted { addr })
        }
        Err(e) => Err(e),
    }
}

pub fn ldmx_db(p: &P9, cpu: &mut CpuState) -> Result<Outcome, Fault> {
    let old_mode = cpu.mode;
    let r = (|| -> Result<(), Fault> {
        let address: u32;
        let _end_address: u32;
        let new_base: u32;
        let start_address: u32;
        let wb_cond: u32;
        start_address = cpu.read_reg(p.n)?.wrapping_sub(p.nb_reg_x4);
        _end_address = cpu.read_reg(p.n)?.wrapping_sub(4u32);
        new_base = cpu.read_reg(p.n)?.wrapping_sub(p.nb_reg_x4);
        wb_cond = (((cpu.condition_passed(p.cond) as u32) != 0) & (((p.w_flag == 1u32) as u32) != 0)) as u32;
        if cpu.condition_passed(p.cond) {
            address = start_address;
            restore_cpsr(cpu)?;
            let __a0 = address;
            let __a1 = p.reglist;
            load_multiple(cpu, __a0, __a1)?;
        }
        if wb_cond != 0 {
            let __wval = new_base;
            cpu.write_reg_mode(p.n, old_mode, __wval)?;
        }
        Ok(())
    })();
    match r {
        Ok(()) => Ok(Outcome::Completed),
        Err(Fault::DataAbort { addr }) => {
            cpu.enter_data_abort(addr);
            Ok(Outcome::Aborted { addr })
        }
        Err(e) => Err(e),
    }
}

pub fn srs_ia_al(p: &P10, cpu: &mut CpuState) -> Result<Outcome, Fault> {
    let r = (|| -> Result<(), Fault> {
        let _end_address: u32;
        let new_base: u32;
        let start_address: u32;
        let wb_cond: u32;
        start_address = cpu.read_reg_mode(13u32, mode_from_value(p.mode)?)?;
        _end_address = cpu.read_reg_mode(13u32, mode_from_value(p.mode)?)?.wrapping_add(2u32.wrapping_mul(4u32)).wrapping_sub(4u32);
        new_base = cpu.read_reg_mode(13u32, mode_from_value(p.mode)?)?.wrapping_add(2u32.wrapping_mul(4u32));
        wb_cond = ((1u32 != 0) & (((p.w_flag == 1u32) as u32) != 0)) as u32;
        let __wval = cpu.read_reg(14u32)?;
        cpu.write_mem(start_address, 4, __wval)?;
        let __wval = cpu.spsr();
        cpu.write_mem(start_address.wrapping_add(4u32), 4, __wval)?;
        if wb_cond != 0 {
            let __wval = new_base;
            cpu.write_reg_mode(13u32, mode_from_value(p.mode)?, __wval)?;
        }
        Ok(())
    })();
    match r {
        Ok(()) => Ok(Outcome::Completed),
        Err(Fault::DataAbort { addr }) => {
            cpu.enter_data_abort(addr);
            Ok(Outcome::Aborted { addr })
        }
        Err(e) => Err(e),
    }
}

pub fn srs_ia(p: &P10, cpu: &mut CpuState) -> Result<Outcome, Fault> {
    let r = (|| -> Result<(), Fault> {
        let _end_address: u32;
        let new_base: u32;
        let start_address: u32;
        let wb_cond: u32;
        start_address = cpu.read_reg_mode(13u32, mode_from_value(p.mode)?)?;
        _end_address = cpu.read_reg_mode(13u32, mode_from_value(p.mode)?)?.wrapping_add(2u32.wrapping_mul(4u32)).wrapping_sub(4u32);
        new_base = cpu.read_reg_mode(13u32, mode_from_value(p.mode)?)?.wrapping_add(2u32.wrapping_mul(4u32));
        wb_cond = (((cpu.condition_passed(p.cond) as u32) != 0) & (((p.w_flag == 1u32) as u32) != 0)) as u32;
        if cpu.condition_passed(p.cond) {
            let __wval = cpu.read_reg(14u32)?;
            cpu.write_mem(start_address, 4, __wval)?;
            let __wval = cpu.spsr();
            cpu.write_mem(start_address.wrapping_add(4u32), 4, __wval)?;
        }
        if wb_cond != 0 {
            let __wval = new_base;
            cpu.write_reg_mode(13u32, mode_from_value(p.mode)?, __wval)?;
        }
        Ok(())
    })();
    match r {
        Ok(()) => Ok(Outcome::Completed),
        Err(Fault::DataAbort { addr }) => {
            cpu.enter_data_abort(addr);
            Ok(Outcome::Aborted { addr })
        }
        Err(e) => Err(e),
    }
}

pub fn srs_db_al(p: &P10, cpu: &mut CpuState) -> Result<Outcome, Fault> {
    let r = (|| -> Result<(), Fault> {
        let _end_address: u32;
        let new_base: u32;
        let start_address: u32;
        let wb_cond: u32;
        start_address = cpu.read_reg_mode(13u32, mode_from_value(p.mode)?)?.wrapping_sub(2u32.wrapping_mul(4u32));
        _end_address = cpu.read_reg_mode(13u32, mode_from_value(p.mode)?)?.wrapping_sub(4u32);
        new_base = cpu.read_reg_mode(13u32, mode_from_value(p.mode)?)?.wrapping_sub(2u32.wrapping_mul(4u32));
        wb_cond = ((1u32 != 0) & (((p.w_flag == 1u32) as u32) != 0)) as u32;
        let __wval = cpu.read_reg(14u32)?;
        cpu.write_mem(start_address, 4, __wval)?;
        let __wval = cpu.spsr();
        cpu.write_mem(start_address.wrapping_add(4u32), 4, __wval)?;
        if wb_cond != 0 {
            let __wval = new_base;
            cpu.write_reg_mode(13u32, mode_from_value(p.mode)?, __wval)?;
        }
        Ok(())
    })();
    match r {
        Ok(()) => Ok(Outcome::Completed),
        Err(Fault::DataAbort { addr }) => {
            cpu.enter_data_abort(addr);
            Ok(Outcome::Aborted { addr })
        }
        Err(e) => Err(e),
    }
}

pub fn srs_db(p: &P10, cpu: &mut CpuState) -> Result<Outcome, Fault> {
    let r = (|| -> Result<(), Fault> {
        let _end_address: u32;
        let new_base: u32;
        let start_address: u32;
        let wb_cond: u32;
        start_address = cpu.read_reg_mode(13u32, mode_from_value(p.mode)?)?.wrapping_sub(2u32.wrapping_mul(4u32));
        _end_address = cpu.read_reg_mode(13u32, mode_from_value(p.mode)?)?.wrapping_sub(4u32);
        new_base = cpu.read_reg_mode(13u32, mode_from_value(p.mode)?)?.wrapping_sub(2u32.wrapping_mul(4u32));
        wb_cond = (((cpu.condition_passed(p.cond) as u32) != 0) & (((p.w_flag == 1u32) as u32) != 0)) as u32;
        if cpu.condition_passed(p.cond) {
            let __wval = cpu.read_reg(14u32)?;
            cpu.write_mem(start_address, 4, __wval)?;
            let __wval = cpu.spsr();
            cpu.write_mem(start_address.wrapping_add(4u32), 4, __wval)?;
        }
        if wb_cond != 0 {
            let __wval = new_base;
            cpu.write_reg_mode(13u32, mode_from_value(p.mode)?, __wval)?;
        }
        Ok(())
    })();
    match r {
        Ok(()) => Ok(Outcome::Completed),
        Err(Fault::DataAbort { addr }) => {
            cpu.enter_data_abort(addr);
            Ok(Outcome::Aborted { addr })
        }
        Err(e) => Err(e),
    }
}

pub fn rfe_ia_al(p: &P11, cpu: &mut CpuState) -> Result<Outcome, Fault> {
    let old_mode = cpu.mode;
    let r = (|| -> Result<(), Fault> {
        let address: u32;
        let _end_address: u32;
        let new_base: u32;
        let start_address: u32;
        let target: u32;
        let wb_cond: u32;
        start_address = cpu.read_reg(p.n)?;
        _end_address = cpu.read_reg(p.n)?.wrapping_add(2u32.wrapping_mul(4u32)).wrapping_sub(4u32);
        new_base = cpu.read_reg(p.n)?.wrapping_add(2u32.wrapping_mul(4u32));
        wb_cond = ((1u32 != 0) & (((p.w_flag == 1u32) as u32) != 0)) as u32;
        address = start_address;
        target = cpu.read_mem(address, 4)?;
        let __a0 = cpu.read_mem(address.wrapping_add(4u32), 4)?;
        cpu.set_cpsr(__a0)?;
        let __wval = target & 4294967292u32;
        cpu.write_reg(15u32, __wval)?;
        if wb_cond != 0 {
            let __wval = new_base;
            cpu.write_reg_mode(p.n, old_mode, __wval)?;
        }
        Ok(())
    })();
    match r {
        Ok(()) => Ok(Outcome::Completed),
        Err(Fault::DataAbort { addr }) => {
            cpu.enter_data_abort(addr);
            Ok(Outcome::Aborted { addr })
        }
        Err(e) => Err(e),
    }
}

pub fn rfe_ia(p: &P11, cpu: &mut CpuState) -> Result<Outcome, Fault> {
    let old_mode = cpu.mode;
    let r = (|| -> Result<(), Fault> {
        let address: u32;
        let _end_address: u32;
        let new_base: u32;
        let start_address: u32;
        let target: u32;
        let wb_cond: u32;
        start_address = cpu.read_reg(p.n)?;
        _end_address = cpu.read_reg(p.n)?.wrapping_add(2u32.wrapping_mul(4u32)).wrapping_sub(4u32);
        new_base = cpu.read_reg(p.n)?.wrapping_add(2u32.wrapping_mul(4u32));
        wb_cond = (((cpu.condition_passed(p.cond) as u32) != 0) & (((p.w_flag == 1u32) as u32) != 0)) as u32;
        if cpu.condition_passed(p.cond) {
            address = start_address;
            target = cpu.read_mem(address, 4)?;
            let __a0 = cpu.read_mem(address.wrapping_add(4u32), 4)?;
            cpu.set_cpsr(__a0)?;
            let __wval = target & 4294967292u32;
            cpu.write_reg(15u32, __wval)?;
        }
        if wb_cond != 0 {
            let __wval = new_base;
            cpu.write_reg_mode(p.n, old_mode, __wval)?;
        }
        Ok(())
    })();
    match r {
        Ok(()) => Ok(Outcome::Completed),
        Err(Fault::DataAbort { addr }) => {
            cpu.enter_data_abort(addr);
            Ok(Outcome::Aborted { addr })
        }
        Err(e) => Err(e),
    }
}

pub fn rfe_db_al(p: &P11, cpu: &mut CpuState) -> Result<Outcome, Fault> {
    let old_mode = cpu.mode;
    let r = (|| -> Result<(), Fault> {
        let address: u32;
        let _end_address: u32;
        let new_base: u32;
        let start_address: u32;
        let target: u32;
        let wb_cond: u32;
        start_address = cpu.read_reg(p.n)?.wrapping_sub(2u32.wrapping_mul(4u32));
        _end_address = cpu.read_reg(p.n)?.wrapping_sub(4u32);
        new_base = cpu.read_reg(p.n)?.wrapping_sub(2u32.wrapping_mul(4u32));
        wb_cond = ((1u32 != 0) & (((p.w_flag == 1u32) as u32) != 0)) as u32;
        address = start_address;
        target = cpu.read_mem(address, 4)?;
        let __a0 = cpu.read_mem(address.wrapping_add(4u32), 4)?;
        cpu.set_cpsr(__a0)?;
        let __wval = target & 4294967292u32;
        cpu.write_reg(15u32, __wval)?;
        if wb_cond != 0 {
            let __wval = new_base;
            cpu.write_reg_mode(p.n, old_mode, __wval)?;
        }
        Ok(())
    })();
    match r {
        Ok(()) => Ok(Outcome::Completed),
        Err(Fault::DataAbort { addr }) => {
            cpu.enter_data_abort(addr);
            Ok(Outcome::Aborted { addr })
        }
        Err(e) => Err(e),
    }
}

pub fn rfe_db(p: &P11, cpu: &mut CpuState) -> Result<Outcome, Fault> {
    let old_mode = cpu.mode;
    let r = (|| -> Result<(), Fault> {
        let address: u32;
        let _end_address: u32;
        let new_base: u32;
        let start_address: u32;
        let target: u32;
        let wb_cond: u32;
        start_address = cpu.read_reg(p.n)?.wrapping_sub(2u32.wrapping_mul(4u32));
        _end_address = cpu.read_reg(p.n)?.wrapping_sub(4u32);
        new_base = cpu.read_reg(p.n)?.wrapping_sub(2u32.wrapping_mul(4u32));
        wb_cond = (((cpu.condition_passed(p.cond) as u32) != 0) & (((p.w_flag == 1u32) as u32) != 0)) as u32;
        if cpu.condition_passed(p.cond) {
            address = start_address;
            target = cpu.read_mem(address, 4)?;
            let __a0 = cpu.read_mem(address.wrapping_add(4u32), 4)?;
            cpu.set_cpsr(__a0)?;
            let __wval = target & 4294967292u32;
            cpu.write_reg(15u32, __wval)?;
        }
        if wb_cond != 0 {
            let __wval = new_base;
            cpu.write_reg_mode(p.n, old_mode, __wval)?;
        }
        Ok(())
    })();
    match r {
        Ok(()) => Ok(Outcome::Completed),
        Err(Fault::DataAbort { addr }) => {
            cpu.enter_data_abort(addr);
            Ok(Outcome::Aborted { addr })
        }
        Err(e) => Err(e),
    }
}

pub fn b_al(p: &P12, cpu: &mut CpuState) -> Result<Outcome, Fault> {
    let r = (|| -> Result<(), Fault> {
        let __wval = cpu.read_reg(15u32)?.wrapping_add(eval::lsl(eval::sign_extend(p.signed_immed_24, 24u32), 2u32));
        cpu.write_reg(15u32, __wval)?;
        Ok(())
    })();
    match r {
        Ok(()) => Ok(Outcome::Completed),
        Err(Fault::DataAbort { addr }) => {
            cpu.enter_data_abort(addr);
            Ok(Outcome::Aborted { addr })
        }
        Err(e) => Err(e),
    }
}

pub fn b(p: &P12, cpu: &mut CpuState) -> Result<Outcome, Fault> {
    let r = (|| -> Result<(), Fault> {
        if cpu.condition_passed(p.cond) {
            let __wval = cpu.read_reg(15u32)?.wrapping_add(eval::lsl(eval::sign_extend(p.signed_immed_24, 24u32), 2u32));
            cpu.write_reg(15u32, __wval)?;
        }
        Ok(())
    })();
    match r {
        Ok(()) => Ok(Outcome::Completed),
        Err(Fault::DataAbort { addr }) => {
            cpu.enter_data_abort(addr);
            Ok(Outcome::Aborted { addr })
        }
        Err(e) => Err(e),
    }
}

pub fn bl_al(p: &P12, cpu: &mut CpuState) -> Result<Outcome, Fault> {
    let r = (|| -> Result<(), Fault> {
        let __wval = cpu.read_reg(15u32)?.wrapping_sub(4u32);
        cpu.write_reg(14u32, __wval)?;
        let __wval = cpu.read_reg(15u32)?.wrapping_add(eval::lsl(eval::sign_extend(p.signed_immed_24, 24u32), 2u32));
        cpu.write_reg(15u32, __wval)?;
        Ok(())
    })();
    match r {
        Ok(()) => Ok(Outcome::Completed),
        Err(Fault::DataAbort { addr }) => {
            cpu.enter_data_abort(addr);
            Ok(Outcome::Aborted { addr })
        }
        Err(e) => Err(e),
    }
}

pub fn bl(p: &P12, cpu: &mut CpuState) -> Result<Outcome, Fault> {
    let r = (|| -> Result<(), Fault> {
        if cpu.condition_passed(p.cond) {
            let __wval = cpu.read_reg(15u32)?.wrapping_sub(4u32);
            cpu.write_reg(14u32, __wval)?;
            let __wval = cpu.read_reg(15u32)?.wrapping_add(eval::lsl(eval::sign_extend(p.signed_immed_24, 24u32), 2u32));
            cpu.write_reg(15u32, __wval)?;
        }
        Ok(())
    })();
    match r {
        Ok(()) => Ok(Outcome::Completed),
        Err(Fault::DataAbort { addr }) => {
            cpu.enter_data_abort(addr);
            Ok(Outcome::Aborted { addr })
        }
        Err(e) => Err(e),
    }
}

pub fn halt(_p: &P13, cpu: &mut CpuState) -> Result<Outcome, Fault> {
    let r = (|| -> Result<(), Fault> {
        cpu.halted = true;
        Ok(())
    })();
    match r {
        Ok(()) => Ok(Outcome::Completed),
        Err(Fault::DataAbort { addr }) => {
            cpu.enter_data_abort(addr);
            Ok(Outcome::Aborted { addr })
        }
        Err(e) => Err(e),
    }
}

