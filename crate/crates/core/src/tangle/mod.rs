//! String diagrams: a small language for composites of structure maps,
//! evaluated exactly against an environment of named generators.
//!
//! `a ; b` stacks `a` above `b` (apply `a` first); `a * b` places them side
//! by side. Crossings `swap[X,Y]` are the plain flip of vector spaces.

mod ast;
mod corpus;
mod env;
mod eval;
mod parser;

pub use ast::TangleExpr;
pub use corpus::{
    corpus_from_json, corpus_to_json, figure_corpus, EquationRecord, SMASH_ANTIPODE, SMASH_COMULT,
    SMASH_MULT,
};
pub use env::{Generator, TangleEnv};
pub use eval::{check_all, check_equation, eval, typecheck, TangleEquation, Wires};
pub use parser::parse;
