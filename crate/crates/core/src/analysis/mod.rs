//! Static analyses over flat instructions. Today that is the may-branch
//! condition, which identifies basic-block terminators for the dynamic
//! translation cache.

pub mod maybranch;

pub use maybranch::{eval_condition, may_branch, BranchReport, Contribution};
