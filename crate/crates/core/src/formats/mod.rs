//! Text encodings: graph6, DIMACS `col`, and the JSON gadget format.

pub mod dimacs;
pub mod graph6;
pub mod json;

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::graph::{Graph, GraphError};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Graph6,
    Dimacs,
    Json,
}

impl Format {
    /// Guess from a file extension (`.g6`, `.col`/`.dimacs`, `.json`).
    pub fn from_path(path: &std::path::Path) -> Option<Format> {
        match path.extension()?.to_str()? {
            "g6" | "graph6" => Some(Format::Graph6),
            "col" | "dimacs" => Some(Format::Dimacs),
            "json" => Some(Format::Json),
            _ => None,
        }
    }
}

impl FromStr for Format {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "graph6" | "g6" => Ok(Format::Graph6),
            "dimacs" | "col" => Ok(Format::Dimacs),
            "json" => Ok(Format::Json),
            other => Err(format!("unknown format `{other}` (expected graph6, dimacs or json)")),
        }
    }
}

impl fmt::Display for Format {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Format::Graph6 => "graph6",
            Format::Dimacs => "dimacs",
            Format::Json => "json",
        })
    }
}

#[derive(Debug, Error)]
pub enum ParseError {
    #[error("byte {offset}: {message}")]
    Syntax { offset: usize, message: String },
    #[error("graph6 header mismatch: expected `>>graph6<<`")]
    Header,
    #[error("invalid graph: {0}")]
    Graph(#[from] GraphError),
    #[error("json: {0}")]
    Json(#[from] serde_json::Error),
}

impl ParseError {
    pub(crate) fn at(offset: usize, message: impl Into<String>) -> Self {
        ParseError::Syntax {
            offset,
            message: message.into(),
        }
    }
}

pub fn encode(g: &Graph, format: Format) -> Vec<u8> {
    match format {
        Format::Graph6 => graph6::encode(g).into_bytes(),
        Format::Dimacs => dimacs::encode(g).into_bytes(),
        Format::Json => json::encode_graph(g).into_bytes(),
    }
}

pub fn decode(bytes: &[u8], format: Format) -> Result<Graph, ParseError> {
    match format {
        Format::Graph6 => graph6::decode(bytes),
        Format::Dimacs => dimacs::decode(bytes),
        Format::Json => json::decode_graph(bytes),
    }
}
