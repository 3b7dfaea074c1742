//! The APT text format for labelled Petri nets (`.type LPN`) and labelled
//! transition systems (`.type LTS`), and DOT export.
//!
//! Sections may appear in any order. Comments and layout are not preserved;
//! printing produces a canonical form that parses back to the same model.

mod dot;
mod lexer;
mod parse;
mod print;

use std::fmt;

use crate::lts::Lts;
use crate::net::PetriNet;

pub use dot::{lts_to_dot, net_to_dot, to_dot};
pub use parse::parse;
pub use print::{print, print_lts, print_lts_with_comments, print_net};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DocumentKind {
    Net,
    Lts,
}

#[derive(Clone, Debug)]
pub enum Document {
    Net(PetriNet),
    Lts(Lts),
}

impl Document {
    pub fn kind(&self) -> DocumentKind {
        match self {
            Document::Net(_) => DocumentKind::Net,
            Document::Lts(_) => DocumentKind::Lts,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
#[error("{line}:{column}: {message}")]
pub struct ParseError {
    pub line: usize,
    pub column: usize,
    pub message: String,
}

impl ParseError {
    pub(crate) fn new(line: usize, column: usize, message: impl Into<String>) -> Self {
        ParseError {
            line,
            column,
            message: message.into(),
        }
    }
}

/// Parses a document that must be a net.
pub fn parse_net(text: &str) -> Result<PetriNet, ParseError> {
    match parse(text)? {
        Document::Net(net) => Ok(net),
        Document::Lts(_) => Err(ParseError::new(1, 1, "expected an LPN document, found an LTS")),
    }
}

/// Parses a document that must be a transition system.
pub fn parse_lts(text: &str) -> Result<Lts, ParseError> {
    match parse(text)? {
        Document::Lts(lts) => Ok(lts),
        Document::Net(_) => Err(ParseError::new(1, 1, "expected an LTS document, found an LPN")),
    }
}

impl fmt::Display for Document {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&print(self))
    }
}

#[cfg(test)]
mod tests;
