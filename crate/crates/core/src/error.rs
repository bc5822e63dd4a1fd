use thiserror::Error;

/// Errors surfaced by every fallible operation in this crate.
#[derive(Debug, Error)]
pub enum Error {
    #[error("pattern must have at least one row and one column, got {rows}x{cols}")]
    BadDimensions { rows: usize, cols: usize },

    #[error("operation requires a two-row pattern, got {rows} rows")]
    NotTwoRows { rows: usize },

    #[error("operation requires at least two columns, got {cols}")]
    NeedsTwoColumns { cols: usize },

    #[error("crease {label} does not exist in a two-row pattern with {cols} columns")]
    BadCrease { label: usize, cols: usize },

    #[error("interior vertex {index} out of range 1..={max}")]
    BadVertex { index: usize, max: usize },

    #[error("face ({row},{col}) out of range for a {rows}x{cols} pattern")]
    BadFace {
        row: usize,
        col: usize,
        rows: usize,
        cols: usize,
    },

    #[error("mountain-valley strings may only contain 'M' and 'V', found {found:?}")]
    BadParityChar { found: char },

    #[error("mountain-valley string of length {len} does not fit any column count (need 3n-2)")]
    BadParityLength { len: usize },

    #[error("assignment has {len} parities but the pattern needs {expected}")]
    LengthMismatch { len: usize, expected: usize },

    #[error("assignment is not locally valid at vertex {vertex}")]
    NotLocallyValid { vertex: usize },

    #[error(
        "coloring gives adjacent cells ({a_row},{a_col}) and ({b_row},{b_col}) the same color"
    )]
    NotProper {
        a_row: usize,
        a_col: usize,
        b_row: usize,
        b_col: usize,
    },

    #[error("coloring text must be equal-length rows of digits 0, 1, 2")]
    BadColoringText,

    #[error("coloring is not canonical (top-left cell must be color 0)")]
    NotCanonical,

    #[error("expected matching dimensions, got {a_rows}x{a_cols} and {b_rows}x{b_cols}")]
    DimensionMismatch {
        a_rows: usize,
        a_cols: usize,
        b_rows: usize,
        b_cols: usize,
    },

    #[error("cells ({a_row},{a_col}) and ({b_row},{b_col}) are not orthogonally adjacent")]
    NotAdjacent {
        a_row: usize,
        a_col: usize,
        b_row: usize,
        b_col: usize,
    },

    #[error("cell ({row},{col}) out of range for a {rows}x{cols} grid")]
    BadCell {
        row: usize,
        col: usize,
        rows: usize,
        cols: usize,
    },

    #[error("path must visit at least one cell")]
    EmptyPath,

    #[error("absolute heights are even, got {value}")]
    OddHeight { value: i64 },

    #[error("height residue class must be 0, 2 or 4 (mod 6), got {value}")]
    BadResidue { value: i64 },

    #[error("construction needs {needed} states, over the cap of {cap}; raise the cap to proceed")]
    StateCapExceeded { needed: u64, cap: u64 },

    #[error("graph does not contain the state {label:?}")]
    UnknownState { label: String },

    #[error("state index {index} out of range for a graph on {count} states")]
    BadState { index: usize, count: usize },

    #[error("graph is disconnected, so the requested quantity is undefined")]
    Disconnected,

    #[error("imported graph is inconsistent: {0}")]
    BadGraphData(String),

    #[error("generation tables only reach n={have}, but the check needs n={need}")]
    InsufficientGenerations { have: usize, need: usize },

    #[error("count overflowed a 64-bit integer; reduce the generation bound")]
    Overflow,

    #[error("internal arithmetic inconsistency: {0}")]
    Inconsistency(String),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
