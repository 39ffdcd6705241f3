//! BioPathQA-PL: the pathway specification language.
//!
//! A pathway is a newline-separated list of statements describing fluents
//! (substances), actions (processes) with their effects and guard
//! conditions, inhibitions, stimulations, durations, and the initial state.
//! This crate parses that text into a [`PathwaySpec`], checks it for
//! consistency, and compiles it to a
//! [`GuardedNet`](biopathqa_model::GuardedNet) for execution.

mod ast;
mod check;
mod compile;
mod lexer;
mod parser;

pub use ast::{
    render, Delta, DomainType, Effect, ExecuteStatement, PathwaySpec, Statement,
};
pub use check::check_consistency;
pub use compile::{compile, CompileError};
pub use parser::{parse_pathway, ParseError};
