use crate::abutments::Side;

/// A named reason why an integer tuple is not a Kupisch series.
///
/// Positions are 1-based, matching vertex numbers.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Violation {
    #[error("empty series")]
    Empty,
    #[error("last-entry-not-one (found {found})")]
    LastEntryNotOne { found: usize },
    #[error("entry-below-two at position {position}")]
    EntryBelowTwo { position: usize },
    #[error("overflow-past-sink at position {position}")]
    OverflowPastSink { position: usize },
    #[error("kupisch-step at position {position}")]
    KupischStep { position: usize },
}

impl Violation {
    /// Short machine-readable name of the violated rule.
    pub fn name(&self) -> &'static str {
        match self {
            Violation::Empty => "empty",
            Violation::LastEntryNotOne { .. } => "last-entry-not-one",
            Violation::EntryBelowTwo { .. } => "entry-below-two",
            Violation::OverflowPastSink { .. } => "overflow-past-sink",
            Violation::KupischStep { .. } => "kupisch-step",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("invalid Kupisch series: {0}")]
    Invalid(#[from] Violation),
    #[error("M({i},{j}) is not an indecomposable module of this algebra")]
    NoSuchModule { i: usize, j: usize },
    #[error("invalid parameter: {0}")]
    Parameter(String),
    #[error("{height} is not a {side} abutment height")]
    NotAbutment { side: Side, height: usize },
    #[error("M({i},{j}) lies outside the {side} foundation of height {height}")]
    OutsideFoundation {
        side: Side,
        height: usize,
        i: usize,
        j: usize,
    },
    #[error("the coordinates do not form a basic tilting module over KA_{0}")]
    NotTilting(usize),
    #[error("the coordinates do not form a slice of KA_{0}")]
    NotSlice(usize),
    #[error("(n, d) = ({n}, {d}) is not covered by the known families")]
    Unsupported { n: usize, d: usize },
    #[error("precondition failed: {0}")]
    Precondition(String),
    #[error("fractures disagree on the overlap")]
    Incompatible,
    #[error("verification failed: {0}")]
    Verification(String),
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
