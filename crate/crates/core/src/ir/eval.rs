//! Pure expression evaluation: operator and builtin arithmetic shared by the
//! oracle interpreter, the decode-time pre-computation, the may-branch
//! evaluator, and the test generator. All values are u32 with wrapping
//! arithmetic; comparisons are unsigned; logical operators treat any nonzero
//! word as true and produce 0 or 1.

use super::ast::{BinOp, Expr};

pub fn bool_word(b: bool) -> u32 {
    b as u32
}

/// Shift semantics: amounts are full 32-bit values, not masked. Shifting a
/// word entirely out produces 0 (or the sign fill for `ASR`); `ROR` works
/// modulo 32.
pub fn shift(op: BinOp, a: u32, b: u32) -> u32 {
    match op {
        BinOp::Lsl => {
            if b >= 32 {
                0
            } else {
                a << b
            }
        }
        BinOp::Lsr => {
            if b >= 32 {
                0
            } else {
                a >> b
            }
        }
        BinOp::Asr => {
            if b >= 32 {
                if (a as i32) < 0 {
                    u32::MAX
                } else {
                    0
                }
            } else {
                ((a as i32) >> b) as u32
            }
        }
        BinOp::Ror => a.rotate_right(b % 32),
        _ => unreachable!("not a shift operator"),
    }
}

pub fn apply_binop(op: BinOp, a: u32, b: u32) -> u32 {
    match op {
        BinOp::Add => a.wrapping_add(b),
        BinOp::Sub => a.wrapping_sub(b),
        BinOp::Mul => a.wrapping_mul(b),
        BinOp::Eq => bool_word(a == b),
        BinOp::Ne => bool_word(a != b),
        BinOp::Lt => bool_word(a < b),
        BinOp::Gt => bool_word(a > b),
        BinOp::Le => bool_word(a <= b),
        BinOp::Ge => bool_word(a >= b),
        BinOp::And => bool_word(a != 0 && b != 0),
        BinOp::Or => bool_word(a != 0 || b != 0),
        BinOp::BitAnd => a & b,
        BinOp::BitOr => a | b,
        BinOp::BitXor => a ^ b,
        BinOp::Lsl | BinOp::Lsr | BinOp::Asr | BinOp::Ror => shift(op, a, b),
    }
}

fn sx(a: u32) -> i64 {
    a as i32 as i64
}

/// Saturate a signed wide value to the signed `n`-bit range and return its
/// two's-complement truncation.
fn signed_sat(v: i64, n: u32) -> u32 {
    let n = n.clamp(1, 32);
    let hi = (1i64 << (n - 1)) - 1;
    let lo = -(1i64 << (n - 1));
    v.clamp(lo, hi) as u32
}

// Named builtin semantics. The carry/overflow helpers are defined by
// wide-integer reference arithmetic, which is what the differential tests
// compare the transformed pseudo-code against. Generated code calls these
// directly, so the two back-ends share one definition.

#[inline]
pub fn carry_from_add2(a: u32, b: u32) -> u32 {
    bool_word((a as u64) + (b as u64) > u32::MAX as u64)
}

#[inline]
pub fn carry_from_add3(a: u32, b: u32, c: u32) -> u32 {
    bool_word((a as u64) + (b as u64) + (c as u64) > u32::MAX as u64)
}

#[inline]
pub fn borrow_from_sub2(a: u32, b: u32) -> u32 {
    bool_word(a < b)
}

#[inline]
pub fn overflow_from_add2(a: u32, b: u32) -> u32 {
    let r = sx(a) + sx(b);
    bool_word(r != (r as i32) as i64)
}

#[inline]
pub fn overflow_from_add3(a: u32, b: u32, c: u32) -> u32 {
    let r = sx(a) + sx(b) + sx(c);
    bool_word(r != (r as i32) as i64)
}

#[inline]
pub fn overflow_from_sub2(a: u32, b: u32) -> u32 {
    let r = sx(a) - sx(b);
    bool_word(r != (r as i32) as i64)
}

#[inline]
pub fn signed_sat_add2(a: u32, b: u32, n: u32) -> u32 {
    signed_sat(sx(a) + sx(b), n)
}

#[inline]
pub fn signed_sat_sub2(a: u32, b: u32, n: u32) -> u32 {
    signed_sat(sx(a) - sx(b), n)
}

#[inline]
pub fn nb_of_set_bits(a: u32) -> u32 {
    a.count_ones()
}

#[inline]
pub fn sign_extend(v: u32, w: u32) -> u32 {
    let w = w.clamp(1, 32);
    if w == 32 {
        v
    } else {
        let m = 1u32 << (w - 1);
        let x = v & ((1u32 << w) - 1);
        x.wrapping_sub((x & m) << 1)
    }
}

#[inline]
pub fn lsl(a: u32, b: u32) -> u32 {
    shift(BinOp::Lsl, a, b)
}

#[inline]
pub fn lsr(a: u32, b: u32) -> u32 {
    shift(BinOp::Lsr, a, b)
}

#[inline]
pub fn asr(a: u32, b: u32) -> u32 {
    shift(BinOp::Asr, a, b)
}

#[inline]
pub fn ror(a: u32, b: u32) -> u32 {
    shift(BinOp::Ror, a, b)
}

/// Evaluate a pure builtin by name.
pub fn apply_pure_builtin(name: &str, args: &[u32]) -> Option<u32> {
    let v = match (name, args) {
        ("CarryFromAdd2", [a, b]) => carry_from_add2(*a, *b),
        ("CarryFromAdd3", [a, b, c]) => carry_from_add3(*a, *b, *c),
        ("BorrowFromSub2", [a, b]) => borrow_from_sub2(*a, *b),
        ("OverflowFromAdd2", [a, b]) => overflow_from_add2(*a, *b),
        ("OverflowFromAdd3", [a, b, c]) => overflow_from_add3(*a, *b, *c),
        ("OverflowFromSub2", [a, b]) => overflow_from_sub2(*a, *b),
        ("SignedSatAdd2", [a, b, n]) => signed_sat_add2(*a, *b, *n),
        ("SignedSatSub2", [a, b, n]) => signed_sat_sub2(*a, *b, *n),
        ("NbOfSetBitsIn", [a]) => nb_of_set_bits(*a),
        ("SignExtend", [v, w]) => sign_extend(*v, *w),
        _ => return None,
    };
    Some(v)
}

/// Evaluate an expression that reads no processor state. `env` resolves
/// parameter names; `None` means the expression is not decode-time evaluable.
pub fn eval_pure(e: &Expr, env: &impl Fn(&str) -> Option<u32>) -> Option<u32> {
    match e {
        Expr::Num(n) => Some(*n),
        Expr::Var(v) => env(v),
        Expr::Bin { op, lhs, rhs } => Some(apply_binop(
            *op,
            eval_pure(lhs, env)?,
            eval_pure(rhs, env)?,
        )),
        Expr::Not(inner) => Some(bool_word(eval_pure(inner, env)? == 0)),
        Expr::Fun { name, args } => {
            let vals: Option<Vec<u32>> = args.iter().map(|a| eval_pure(a, env)).collect();
            apply_pure_builtin(name, &vals?)
        }
        Expr::BitRange { value, hi, lo } => {
            let v = eval_pure(value, env)?;
            let hi = eval_pure(hi, env)?;
            let lo = eval_pure(lo, env)?;
            Some(extract_bits(v, hi, lo))
        }
        Expr::Reg { .. } | Expr::Flag(_) | Expr::Memory { .. } => None,
    }
}

/// `value[hi:lo]`, tolerant of out-of-range indices (bits beyond 31 read 0,
/// hi < lo reads 0) so evaluation is total.
pub fn extract_bits(value: u32, hi: u32, lo: u32) -> u32 {
    if hi < lo || lo > 31 {
        return 0;
    }
    let hi = hi.min(31);
    let shifted = value >> lo;
    let width = hi - lo + 1;
    if width >= 32 {
        shifted
    } else {
        shifted & ((1u32 << width) - 1)
    }
}

/// Constant-fold without an environment.
pub fn eval_const(e: &Expr) -> Option<u32> {
    eval_pure(e, &|_| None)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn carry_and_overflow_reference_values() {
        // 0x7FFFFFFF + 1 + 0: no carry out, signed overflow.
        assert_eq!(apply_pure_builtin("CarryFromAdd3", &[0x7FFF_FFFF, 1, 0]), Some(0));
        assert_eq!(apply_pure_builtin("OverflowFromAdd3", &[0x7FFF_FFFF, 1, 0]), Some(1));
        assert_eq!(apply_pure_builtin("CarryFromAdd2", &[u32::MAX, 1]), Some(1));
        assert_eq!(apply_pure_builtin("BorrowFromSub2", &[0, 1]), Some(1));
        assert_eq!(apply_pure_builtin("OverflowFromSub2", &[0x8000_0000, 1]), Some(1));
    }

    #[test]
    fn carry_exhaustive_8bit_against_wide_addition() {
        // The 2-operand carry variant agrees with wide-integer addition on
        // every 8-bit pair placed in the top byte (where carries escape).
        for a in 0..=255u32 {
            for b in 0..=255u32 {
                let wa = a << 24;
                let wb = b << 24;
                let wide = (wa as u64 + wb as u64) >> 32;
                assert_eq!(
                    apply_pure_builtin("CarryFromAdd2", &[wa, wb]),
                    Some(wide as u32)
                );
            }
        }
    }

    #[test]
    fn sign_extend() {
        assert_eq!(apply_pure_builtin("SignExtend", &[0xFF_FFFC, 24]), Some(0xFFFF_FFFC));
        assert_eq!(apply_pure_builtin("SignExtend", &[0x7F_FFFF, 24]), Some(0x7F_FFFF));
        assert_eq!(apply_pure_builtin("SignExtend", &[1, 1]), Some(u32::MAX));
    }

    #[test]
    fn saturation_clamps() {
        assert_eq!(
            apply_pure_builtin("SignedSatAdd2", &[0x7FFF_FFFF, 0x7FFF_FFFF, 32]),
            Some(0x7FFF_FFFF)
        );
        assert_eq!(
            apply_pure_builtin("SignedSatAdd2", &[0x8000_0000, 0x8000_0000, 32]),
            Some(0x8000_0000)
        );
        assert_eq!(apply_pure_builtin("SignedSatAdd2", &[5, 6, 32]), Some(11));
    }

    #[test]
    fn shifts_are_total() {
        assert_eq!(shift(BinOp::Lsl, 1, 33), 0);
        assert_eq!(shift(BinOp::Lsr, 0x8000_0000, 64), 0);
        assert_eq!(shift(BinOp::Asr, 0x8000_0000, 40), u32::MAX);
        assert_eq!(shift(BinOp::Ror, 0x0000_0001, 1), 0x8000_0000);
    }

    #[test]
    fn bit_extraction_bounds() {
        assert_eq!(extract_bits(0xFFFF_FFFF, 31, 0), 0xFFFF_FFFF);
        assert_eq!(extract_bits(0b1011, 3, 1), 0b101);
        assert_eq!(extract_bits(0xF0, 3, 4), 0); // hi < lo
        assert_eq!(extract_bits(0xF0, 40, 36), 0); // out of range
    }
}
