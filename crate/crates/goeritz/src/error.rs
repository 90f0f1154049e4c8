//! Error type shared by all modules.
//!
//! Each variant names the precondition that failed; [`Error::code`] returns
//! the bare variant name, which the CLI reports in its structured error
//! output.

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("IndexOutOfRange: index {index} out of range for dimension {dim}")]
    IndexOutOfRange { index: usize, dim: usize },

    #[error("DiagonalPivot: row and column index coincide ({0})")]
    DiagonalPivot(usize),

    #[error("NotOrientable: diagonal entry {entry} at position {index} is odd")]
    NotOrientable { index: usize, entry: i64 },

    #[error("OddEuler: Euler number {0} is odd")]
    OddEuler(i64),

    #[error("OddExponent: exponent {0} of A is odd; cannot substitute t^(1/2) = A^(-2)")]
    OddExponent(i64),

    #[error("BadEdge: edge id {0} does not exist")]
    BadEdge(usize),

    #[error("ContractLoop: cannot contract loop edge {0}")]
    ContractLoop(usize),

    #[error("Disconnected: graph is not connected")]
    Disconnected,

    #[error("EmptyGraph: operation requires a graph with at least one edge")]
    EmptyGraph,

    #[error("NoRotation: graph carries no rotation system")]
    NoRotation,

    #[error("BadArcLabels: {0}")]
    BadArcLabels(String),

    #[error("SplitDiagram: underlying 4-valent graph is disconnected")]
    SplitDiagram,

    #[error("BadNumbering: {0}")]
    BadNumbering(String),

    #[error("NotCheckerboardColorable: some face abuts the same strand twice with equal color")]
    NotCheckerboardColorable,

    #[error("BadRegion: face {0} is not a white region of this shading")]
    BadRegion(usize),

    #[error("PositiveGenus: diagram has genus {0}; the planar state sum is not defined")]
    PositiveGenus(usize),

    #[error("BadMoveSite: {0}")]
    BadMoveSite(String),

    #[error("BadMatrix: {0}")]
    BadMatrix(String),

    #[error("BadGraph: {0}")]
    BadGraph(String),

    #[error("BadInput: {0}")]
    BadInput(String),

    #[error("MaxCrossingsExceeded: diagram has {found} crossings, limit is {limit}")]
    MaxCrossingsExceeded { found: usize, limit: usize },
}

impl Error {
    /// The bare name of the failed precondition, e.g. `"PositiveGenus"`.
    pub fn code(&self) -> &'static str {
        match self {
            Error::IndexOutOfRange { .. } => "IndexOutOfRange",
            Error::DiagonalPivot(_) => "DiagonalPivot",
            Error::NotOrientable { .. } => "NotOrientable",
            Error::OddEuler(_) => "OddEuler",
            Error::OddExponent(_) => "OddExponent",
            Error::BadEdge(_) => "BadEdge",
            Error::ContractLoop(_) => "ContractLoop",
            Error::Disconnected => "Disconnected",
            Error::EmptyGraph => "EmptyGraph",
            Error::NoRotation => "NoRotation",
            Error::BadArcLabels(_) => "BadArcLabels",
            Error::SplitDiagram => "SplitDiagram",
            Error::BadNumbering(_) => "BadNumbering",
            Error::NotCheckerboardColorable => "NotCheckerboardColorable",
            Error::BadRegion(_) => "BadRegion",
            Error::PositiveGenus(_) => "PositiveGenus",
            Error::BadMoveSite(_) => "BadMoveSite",
            Error::BadMatrix(_) => "BadMatrix",
            Error::BadGraph(_) => "BadGraph",
            Error::BadInput(_) => "BadInput",
            Error::MaxCrossingsExceeded { .. } => "MaxCrossingsExceeded",
        }
    }
}
