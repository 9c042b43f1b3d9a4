//! JSON algebra files.
//!
//! ```json
//! {
//!   "generators": [{"name": "x", "degree": 1}],
//!   "relations": ["x^3"],
//!   "sq": {"x": {"1": "x^2"}},
//!   "dimension": 2
//! }
//! ```
//!
//! An optional `truncation` field keeps only degrees up to the given bound.

use crate::gradmod::format_position;
use crate::parse::{from_json_error, ParseError};

use super::{parse_poly, AlgebraSpec, PresentedAlgebra, SpdaError};

pub struct AlgebraFile;

impl AlgebraFile {
    pub fn parse_spec(text: &str) -> Result<AlgebraSpec, SpdaError> {
        let spec: AlgebraSpec = serde_json::from_str(text).map_err(|e| from_json_error(&e))?;
        let names: Vec<String> = spec.generators.iter().map(|g| g.name.clone()).collect();
        let exprs = spec
            .relations
            .iter()
            .chain(spec.sq.values().flat_map(|m| m.values()));
        for expr in exprs {
            if let Err(e) = parse_poly(expr, &names) {
                return Err(anchor(text, expr, e).into());
            }
        }
        Ok(spec)
    }

    pub fn parse(text: &str) -> Result<PresentedAlgebra, SpdaError> {
        Self::parse_spec(text)?.build()
    }

    pub fn to_json(spec: &AlgebraSpec) -> String {
        let mut s = serde_json::to_string_pretty(spec).expect("specs serialize");
        s.push('\n');
        s
    }
}

/// Moves an error inside the string `expr` to its position in `text`.
fn anchor(text: &str, expr: &str, e: ParseError) -> ParseError {
    let quoted = serde_json::to_string(expr).unwrap_or_default();
    match format_position(text, &quoted) {
        // one more column for the opening quote
        Some((line, column)) => e.offset(line, column + 1),
        None => e,
    }
}

impl PresentedAlgebra {
    pub fn to_json(&self) -> String {
        AlgebraFile::to_json(self.spec())
    }

    pub fn from_json(text: &str) -> Result<PresentedAlgebra, SpdaError> {
        AlgebraFile::parse(text)
    }
}
