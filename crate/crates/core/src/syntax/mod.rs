//! The `.lpt` text format.
//!
//! ```text
//! % comment
//! p :- not q.
//! (p -> q) | (q -> p).
//! q :- sum{p = -1; q = 1} >= 0.
//! ```

mod lexer;
mod parser;
mod printer;

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

pub use parser::{parse_formula, parse_model, parse_theory};
pub use printer::{print_formula, print_models, print_statement, print_theory};

/// Byte offsets into the source plus the 1-based line and column of `start`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct SourceSpan {
    pub start: usize,
    pub end: usize,
    pub line: usize,
    pub column: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParseError {
    pub span: SourceSpan,
    pub message: String,
    /// Token descriptions that would have been accepted here.
    pub expected: Vec<String>,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}: {}", self.span.line, self.span.column, self.message)?;
        if !self.expected.is_empty() {
            write!(f, " (expected {})", self.expected.join(", "))?;
        }
        Ok(())
    }
}

impl core::error::Error for ParseError {}
