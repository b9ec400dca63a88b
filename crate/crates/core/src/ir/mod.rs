//! Intermediate representation: pseudo-code trees, encoding tables, syntax
//! templates, constraints, and the utility layer (traversal, substitution,
//! simplification, identifier classification) the transforms build on.

pub mod ast;
pub mod builtins;
pub mod dump;
pub mod eval;
pub mod printer;
pub mod simplify;
pub mod types;
pub mod vars;

pub use ast::{replace_exp, Ast, BinOp, Expr, Flag, Stmt};
pub use simplify::simplify;
pub use types::{
    field_is_register, field_param_name, ConstraintKind, EncField, EncodingTable, FieldContent,
    FlatInstruction, InstrUnit, IsaDescription, ModeCase, ModePatch, ParamSpec, SynElem,
    SyntaxTemplate, ValidityConstraint,
};
pub use vars::{assigned_locals, free_vars, VarClasses};
