//! Stable models for arbitrary propositional theories with aggregates.
//!
//! The crate is `no_std` and only needs `alloc`. Everything here is a pure
//! function over immutable values:
//!
//! * [`formula`]: atoms, formulas, theories, occurrence polarity.
//! * [`aggregate`]: exact weights, aggregate evaluation and compilation of
//!   aggregates into plain propositional formulas.
//! * [`semantics`]: classical and here-and-there satisfaction, the three
//!   reducts, stable and equilibrium models, strong equivalence.
//! * [`shape`]: recognizers for the program classes each semantics accepts.
//! * [`translate`]: weight constraints, PDB aggregates, disjunction
//!   elimination, completion and explicit definitions.
//! * [`syntax`]: the `.lpt` text format (parser and canonical printer).
//! * [`auction`]: the furniture-auction encoding and its brute-force oracle.
//!
//! Every search is exhaustive, so theories are limited to a small vocabulary
//! (see [`Budget`]).

#![no_std]

extern crate alloc;

pub mod aggregate;
pub mod auction;
mod error;
pub mod formula;
pub mod semantics;
pub mod shape;
pub mod simplify;
pub mod syntax;
pub mod translate;
pub mod weight;

pub use aggregate::{AggOp, Aggregate, Monotonicity, Rel};
pub use error::{Error, Result};
pub use formula::{Atom, Formula, Occurrence, Polarity, Sugar, Theory};
pub use semantics::{
    Budget, HtInterpretation, Interpretation, Semantics, StrongEqMethod, StrongEqReport, Verdict,
};
pub use shape::ProgramClass;
pub use weight::{ExtendedValue, Weight};
