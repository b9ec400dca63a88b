//! Shared assembly rendering conventions: one definition used by the
//! printer, the generated printers, and the test generator, so both sides of
//! the round-trip diff agree by construction.
//!
//! Conventions: registers render `R<n>`, condition fields render their
//! mnemonic suffix (empty for Always), register lists render `{R0,R4}`,
//! fields named `signed_*` render as sign-extended decimal, and everything
//! else renders as unsigned decimal. The `#` marker belongs to the syntax
//! template, not the value.

pub const COND_SUFFIX: [&str; 16] = [
    "EQ", "NE", "CS", "CC", "MI", "PL", "VS", "VC", "HI", "LS", "GE", "LT", "GT", "LE", "", "NV",
];

pub fn register(value: u32) -> String {
    format!("R{value}")
}

pub fn condition(value: u32) -> &'static str {
    COND_SUFFIX[(value & 0xF) as usize]
}

pub fn register_list(value: u32) -> String {
    let mut out = String::from("{");
    let mut first = true;
    for i in 0..16 {
        if value & (1 << i) != 0 {
            if !first {
                out.push(',');
            }
            out.push_str(&format!("R{i}"));
            first = false;
        }
    }
    out.push('}');
    out
}

pub fn signed_immediate(value: u32, width: u8) -> String {
    let v = crate::ir::eval::apply_pure_builtin("SignExtend", &[value, width as u32])
        .expect("SignExtend is total");
    format!("{}", v as i32)
}

pub fn unsigned_immediate(value: u32) -> String {
    value.to_string()
}

/// Render one field value by the shared conventions.
pub fn field_value(field: &str, value: u32, width: u8) -> String {
    if crate::ir::types::field_is_register(field) {
        register(value)
    } else if field == "cond" {
        condition(value).to_string()
    } else if field == "reglist" {
        register_list(value)
    } else if field.starts_with("signed_") {
        signed_immediate(value, width)
    } else {
        unsigned_immediate(value)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn conventions() {
        assert_eq!(register(3), "R3");
        assert_eq!(condition(14), "");
        assert_eq!(condition(0), "EQ");
        assert_eq!(register_list(0b1000_0000_0001_0001), "{R0,R4,R15}");
        assert_eq!(signed_immediate(0xFF_FFFC, 24), "-4");
        assert_eq!(signed_immediate(4, 24), "4");
    }
}
