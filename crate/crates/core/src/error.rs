use alloc::string::String;

use crate::formula::Atom;
use crate::syntax::ParseError;

pub type Result<T, E = Error> = core::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("invalid atom name `{0}`")]
    InvalidAtom(String),
    #[error("formula contains an aggregate; compile aggregates first")]
    AggregatePresent,
    #[error("budget exceeded: {what} is {size}, limit is {limit}")]
    BudgetExceeded {
        what: &'static str,
        size: usize,
        limit: usize,
    },
    #[error("aggregate is not monotone")]
    NotMonotone,
    #[error("aggregate is not antimonotone")]
    NotAntimonotone,
    #[error("not a program with nested expressions: {0}")]
    NotNested(String),
    #[error("not a program with FLP-aggregates: {0}")]
    NotFlp(String),
    #[error("not a program with weight constraints: {0}")]
    NotWeightConstraint(String),
    #[error("not a program with PDB-aggregates: {0}")]
    NotPdb(String),
    #[error("not a disjunctive rule: {0}")]
    NotDisjunctiveRule(String),
    #[error("polarity condition violated by `{atom}`: {detail}")]
    PolarityViolation { atom: Atom, detail: String },
    #[error("defined atom `{atom}` is not fresh: {detail}")]
    NotFresh { atom: Atom, detail: String },
    #[error("here-set is not a subset of there-set")]
    NotHtInterpretation,
    #[error(transparent)]
    Parse(#[from] ParseError),
}
