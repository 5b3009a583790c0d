//! File formats: graph6 for graphs, JSON for colorings and witnesses, DOT
//! for pictures.

pub mod dot;
pub mod graph6;
pub mod json;

use balance_core::{NamedGraph, SmallGraph};

#[derive(Debug, thiserror::Error)]
pub enum FormatError {
    #[error("bad graph6 string `{0}`: {1}")]
    Graph6(String, String),
    #[error("bad coloring JSON: {0}")]
    Coloring(String),
    #[error("`{0}` is neither a graph name nor a graph6 string")]
    Target(String),
}

/// A named token such as `c5` or `lf:3+1+1`, or else a graph6 string.
pub fn parse_target(s: &str) -> Result<SmallGraph, FormatError> {
    if let Ok(name) = s.parse::<NamedGraph>() {
        return name.build().map_err(|e| FormatError::Target(format!("{s}: {e}")));
    }
    graph6::decode(s).map_err(|_| FormatError::Target(s.to_string()))
}
