//! Exact verification of Hopf-algebraic structures and the biproduct
//! (Radford–Majid) construction over ℚ and prime fields.

pub mod biproduct;
pub mod catalog;
pub mod error;
pub mod exactla;
pub mod io;
pub mod report;
pub mod structures;
pub mod tangle;
pub mod ydcat;

pub use error::{Error, Result};
pub use exactla::{FieldSpec, LinMap, Scalar, SpaceSig};
pub use report::{AxiomId, AxiomResult, CheckReport, Status, Witness};
