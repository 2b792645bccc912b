use thiserror::Error;

/// Errors reported by the engine. Locations are 1-based.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("expected a {n}x{n} matrix, row {row} has {found} entries")]
    Shape { n: usize, row: usize, found: usize },

    #[error("expected {n} rows, found {found}")]
    RowCount { n: usize, found: usize },

    #[error("entry ({row},{col}) = {value} is not in {{-1,0,1}}")]
    EntryOutOfRange { row: usize, col: usize, value: i64 },

    #[error("row prefix sum at ({row},{col}) is {sum}, expected 0 or 1")]
    RowPrefixSum { row: usize, col: usize, sum: i64 },

    #[error("column prefix sum at ({row},{col}) is {sum}, expected 0 or 1")]
    ColumnPrefixSum { row: usize, col: usize, sum: i64 },

    #[error("entries sum to {sum}, expected {n}")]
    TotalSum { n: usize, sum: i64 },

    #[error("rank value at ({row},{col}) is {found}, boundary requires {expected}")]
    RankBoundary {
        row: usize,
        col: usize,
        expected: i64,
        found: i64,
    },

    #[error("rank step into ({row},{col}) is {step}, expected 0 or 1")]
    RankStep { row: usize, col: usize, step: i64 },

    #[error("not a permutation of 1..={n}: {oneline:?}")]
    InvalidPermutation { n: usize, oneline: Vec<usize> },

    #[error("size mismatch: {left} vs {right}")]
    SizeMismatch { left: usize, right: usize },

    #[error("index {index} out of range 1..={max}")]
    IndexOutOfRange { index: usize, max: usize },

    #[error("empty input set")]
    EmptySet,

    #[error("cell ({row},{col}) is not an essential cell")]
    NotEssential { row: usize, col: usize },

    #[error("invalid bigrassmannian triple [({row},{col}),{rank}] in S_{n}")]
    InvalidBigrass {
        row: usize,
        col: usize,
        rank: usize,
        n: usize,
    },

    #[error("{what} at n = {n} exceeds the feasibility bound {bound}")]
    BoundExceeded {
        what: &'static str,
        n: usize,
        bound: usize,
    },

    #[error("permutations {0} and {1} are comparable, not an antichain")]
    NotAntichain(String, String),

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
