//! The table of builtin functions and procedures the pseudo-code may call.
//!
//! Pure builtins are functions of their arguments only and are therefore
//! eligible for decode-time pre-computation. State builtins read or write the
//! processor state and must stay in the execute path.

pub struct Builtin {
    pub name: &'static str,
    pub arity: usize,
    /// Procedure (statement position) rather than value function.
    pub is_proc: bool,
    /// Function of its arguments only; no state access.
    pub pure: bool,
}

/// Variables that are always in scope without declaration. `old_mode` is the
/// processor mode sampled at instruction entry; relocated write-backs use it
/// to address the banked register file of the pre-instruction mode.
pub const BUILTIN_CONSTANTS: &[&str] = &["old_mode"];

pub const TABLE: &[Builtin] = &[
    Builtin { name: "ConditionPassed", arity: 1, is_proc: false, pure: false },
    Builtin { name: "GetSPSR", arity: 0, is_proc: false, pure: false },
    // Symbolic forms; the rewrite pass replaces these by the per-operator
    // variants below, so none survive into a transformed tree.
    Builtin { name: "CarryFrom", arity: 1, is_proc: false, pure: true },
    Builtin { name: "BorrowFrom", arity: 1, is_proc: false, pure: true },
    Builtin { name: "OverflowFrom", arity: 1, is_proc: false, pure: true },
    Builtin { name: "SignedSat", arity: 2, is_proc: false, pure: true },
    // Per-operator arithmetic helpers, defined by wide-integer reference
    // arithmetic in the evaluator.
    Builtin { name: "CarryFromAdd2", arity: 2, is_proc: false, pure: true },
    Builtin { name: "CarryFromAdd3", arity: 3, is_proc: false, pure: true },
    Builtin { name: "BorrowFromSub2", arity: 2, is_proc: false, pure: true },
    Builtin { name: "OverflowFromAdd2", arity: 2, is_proc: false, pure: true },
    Builtin { name: "OverflowFromAdd3", arity: 3, is_proc: false, pure: true },
    Builtin { name: "OverflowFromSub2", arity: 2, is_proc: false, pure: true },
    Builtin { name: "SignedSatAdd2", arity: 3, is_proc: false, pure: true },
    Builtin { name: "SignedSatSub2", arity: 3, is_proc: false, pure: true },
    Builtin { name: "NbOfSetBitsIn", arity: 1, is_proc: false, pure: true },
    Builtin { name: "SignExtend", arity: 2, is_proc: false, pure: true },
    // Procedures.
    Builtin { name: "LoadMultiple", arity: 2, is_proc: true, pure: false },
    Builtin { name: "StoreMultiple", arity: 2, is_proc: true, pure: false },
    Builtin { name: "RestoreCPSR", arity: 0, is_proc: true, pure: false },
    Builtin { name: "WriteCPSR", arity: 1, is_proc: true, pure: false },
    Builtin { name: "Halt", arity: 0, is_proc: true, pure: false },
];

pub fn lookup(name: &str) -> Option<&'static Builtin> {
    TABLE.iter().find(|b| b.name == name)
}

pub fn is_pure(name: &str) -> bool {
    lookup(name).map(|b| b.pure).unwrap_or(false)
}

pub fn is_builtin_constant(name: &str) -> bool {
    BUILTIN_CONSTANTS.contains(&name)
}

/// Procedures that change the processor mode. Their presence in a tree means
/// a relocated write-back must address the pre-instruction register bank.
pub fn changes_mode(proc: &str) -> bool {
    matches!(proc, "RestoreCPSR" | "WriteCPSR")
}

/// Procedures that access memory (relevant for write-back relocation and the
/// data-abort regression tests).
pub fn proc_accesses_memory(proc: &str) -> bool {
    matches!(proc, "LoadMultiple" | "StoreMultiple")
}
