//! Shared error type for the small text grammars (Steenrod elements,
//! polynomial expressions, module target expressions).

use std::fmt;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError {
    /// 1-based line.
    pub line: usize,
    /// 1-based column (in characters).
    pub column: usize,
    pub message: String,
}

impl ParseError {
    pub fn new(line: usize, column: usize, message: impl Into<String>) -> Self {
        ParseError {
            line,
            column,
            message: message.into(),
        }
    }

    pub(crate) fn at(column: usize, message: impl Into<String>) -> Self {
        Self::new(1, column, message)
    }

    /// Re-anchors an error found inside a string that itself starts at
    /// `line:column` of an enclosing document.
    pub fn offset(mut self, line: usize, column: usize) -> Self {
        if self.line == 1 {
            self.column += column.saturating_sub(1);
        }
        self.line += line.saturating_sub(1);
        self
    }
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}: {}", self.line, self.column, self.message)
    }
}

impl std::error::Error for ParseError {}

/// Converts a serde_json error into a positioned parse error.
pub fn from_json_error(e: &serde_json::Error) -> ParseError {
    ParseError::new(e.line().max(1), e.column().max(1), e.to_string())
}
