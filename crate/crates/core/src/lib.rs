//! Flip graphs of two-row Miura-ori mountain-valley assignments.
//!
//! The crate covers the pipeline from crease patterns to exact graph
//! statistics:
//!
//! * [`miura`] — patterns, locally valid mountain-valley assignments, face
//!   flips;
//! * [`coloring`] — proper 3-colorings of grid graphs and the bijection with
//!   valid assignments;
//! * [`flip_graph`] — flip-graph construction (crease flips or vertex
//!   recolorings), BFS, and export;
//! * [`heights`] — edge weights, height profiles, and closed-form shortest
//!   flip distances;
//! * [`forest`] — the assignment extension forest, exact degree tables,
//!   recurrences, and polynomial growth laws;
//! * [`claims`] — the bundled verification suite over all of the above.

#![forbid(unsafe_code)]

pub mod claims;
pub mod coloring;
pub mod error;
pub mod flip_graph;
pub mod forest;
pub mod heights;
pub mod miura;

pub use coloring::{GridColoring, HeightProfile};
pub use error::{Error, Result};
pub use flip_graph::{BuildOptions, ExportFormat, FlipGraph};
pub use forest::{DegreeForest, GenerationTable, NodeColor};
pub use heights::AbsoluteHeight;
pub use miura::{CreaseId, DiagonalRow, FaceId, MiuraSpec, MvAssignment, Parity};
