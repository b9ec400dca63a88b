//! Bundled benchmark programs and the timing harness behind the `bench`
//! command.

pub mod harness;
pub mod programs;

pub use harness::{measure, run_once, Measurement};
pub use programs::{benchmark, crypto_program, loop_program, sorting_program, Asm, Program, AL, BENCHMARKS, ENTRY, LE, MEM_BASE, MEM_SIZE, NE};
