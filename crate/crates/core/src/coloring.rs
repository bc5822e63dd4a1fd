//! Proper 3-colorings of grid graphs and their correspondence with locally
//! valid mountain-valley assignments.
//!
//! Faces of an `m x n` pattern form an `m x n` grid graph whose vertices we
//! color with `{0, 1, 2}`. Reading colors along the boustrophedon path (first
//! row left to right, second row right to left, and so on) and adding the
//! parity of the crossed crease at every step turns a locally valid
//! assignment into a proper coloring and back; flipping a face is exactly
//! recoloring its grid vertex.
//!
//! Colorings that differ by adding a constant to every cell describe the same
//! assignment, so a *canonical* coloring pins the top-left cell to color 0.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::miura::{CreaseId, MvAssignment, Parity};

/// A proper 3-coloring of the `rows x cols` grid graph, stored row-major.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct GridColoring {
    rows: usize,
    cols: usize,
    colors: Vec<u8>,
}

impl GridColoring {
    /// Builds a coloring from row-major colors, rejecting improper pairs and
    /// out-of-range values.
    pub fn new(rows: usize, cols: usize, colors: Vec<u8>) -> Result<Self> {
        if rows == 0 || cols == 0 {
            return Err(Error::BadDimensions { rows, cols });
        }
        if colors.len() != rows * cols || colors.iter().any(|&c| c > 2) {
            return Err(Error::BadColoringText);
        }
        let coloring = GridColoring { rows, cols, colors };
        coloring.check_proper()?;
        Ok(coloring)
    }

    fn check_proper(&self) -> Result<()> {
        for r in 0..self.rows {
            for c in 0..self.cols {
                if c + 1 < self.cols && self.get(r, c) == self.get(r, c + 1) {
                    return Err(Error::NotProper {
                        a_row: r,
                        a_col: c,
                        b_row: r,
                        b_col: c + 1,
                    });
                }
                if r + 1 < self.rows && self.get(r, c) == self.get(r + 1, c) {
                    return Err(Error::NotProper {
                        a_row: r,
                        a_col: c,
                        b_row: r + 1,
                        b_col: c,
                    });
                }
            }
        }
        Ok(())
    }

    /// Parses the text form: one line per row, each a string of digits 0-2.
    pub fn parse(text: &str) -> Result<Self> {
        let lines: Vec<&str> = text.lines().filter(|l| !l.trim().is_empty()).collect();
        if lines.is_empty() {
            return Err(Error::BadColoringText);
        }
        let cols = lines[0].trim().len();
        let mut colors = Vec::with_capacity(lines.len() * cols);
        for line in &lines {
            let line = line.trim();
            if line.len() != cols {
                return Err(Error::BadColoringText);
            }
            for ch in line.chars() {
                colors.push(match ch {
                    '0' => 0,
                    '1' => 1,
                    '2' => 2,
                    _ => return Err(Error::BadColoringText),
                });
            }
        }
        GridColoring::new(lines.len(), cols, colors)
    }

    /// The text form: rows of digits joined by newlines.
    pub fn to_text(&self) -> String {
        let mut out = String::with_capacity(self.colors.len() + self.rows);
        for r in 0..self.rows {
            if r > 0 {
                out.push('\n');
            }
            for c in 0..self.cols {
                out.push(char::from(b'0' + self.get(r, c)));
            }
        }
        out
    }

    /// Single-line form with rows joined by `/`, used as a graph state label.
    pub fn to_compact(&self) -> String {
        self.to_text().replace('\n', "/")
    }

    pub fn from_compact(s: &str) -> Result<Self> {
        GridColoring::parse(&s.replace('/', "\n"))
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    /// Color of the cell in (0-based) row `r`, column `c`.
    pub fn get(&self, r: usize, c: usize) -> u8 {
        debug_assert!(r < self.rows && c < self.cols);
        self.colors[r * self.cols + c]
    }

    pub fn colors(&self) -> &[u8] {
        &self.colors
    }

    /// Whether the top-left cell has color 0.
    pub fn is_canonical(&self) -> bool {
        self.colors[0] == 0
    }

    /// Adds `shift` to every cell mod 3.
    pub fn rotated(&self, shift: u8) -> GridColoring {
        GridColoring {
            rows: self.rows,
            cols: self.cols,
            colors: self.colors.iter().map(|&c| (c + shift) % 3).collect(),
        }
    }

    /// The rotation of this coloring whose top-left cell is 0.
    pub fn canonicalize(&self) -> GridColoring {
        self.rotated((3 - self.colors[0]) % 3)
    }

    /// Replaces one cell's color; the result must stay proper.
    pub fn recolored(&self, r: usize, c: usize, color: u8) -> Result<GridColoring> {
        if r >= self.rows || c >= self.cols {
            return Err(Error::BadCell {
                row: r,
                col: c,
                rows: self.rows,
                cols: self.cols,
            });
        }
        if color > 2 {
            return Err(Error::BadColoringText);
        }
        let mut colors = self.colors.clone();
        colors[r * self.cols + c] = color;
        GridColoring::new(self.rows, self.cols, colors)
    }

    /// All canonical proper colorings in row-major lexicographic order.
    pub fn enumerate_canonical(rows: usize, cols: usize) -> Result<Vec<GridColoring>> {
        enumerate(rows, cols, true)
    }

    /// All proper colorings (three rotations of each canonical one), in
    /// row-major lexicographic order.
    pub fn enumerate_all(rows: usize, cols: usize) -> Result<Vec<GridColoring>> {
        enumerate(rows, cols, false)
    }

    /// Number of canonical proper colorings, by column-by-column transfer
    /// counting. Cheap even when enumeration would not be.
    pub fn count_canonical(rows: usize, cols: usize) -> Result<u64> {
        if rows == 0 || cols == 0 {
            return Err(Error::BadDimensions { rows, cols });
        }
        let states = column_states(rows);
        // counts[i] = number of ways to fill the grid so far ending in column
        // state i.
        let mut counts: Vec<u64> = states.iter().map(|s| u64::from(s[0] == 0)).collect();
        for _ in 1..cols {
            let mut next = vec![0u64; states.len()];
            for (i, prev) in states.iter().enumerate() {
                if counts[i] == 0 {
                    continue;
                }
                for (j, cur) in states.iter().enumerate() {
                    if prev.iter().zip(cur).all(|(a, b)| a != b) {
                        next[j] = next[j].checked_add(counts[i]).ok_or(Error::Overflow)?;
                    }
                }
            }
            counts = next;
        }
        let mut total = 0u64;
        for c in counts {
            total = total.checked_add(c).ok_or(Error::Overflow)?;
        }
        Ok(total)
    }

    /// The coloring obtained by walking the boustrophedon path from the
    /// top-left face and adding each crossed crease's parity mod 3.
    ///
    /// Two-row patterns only; the assignment must be locally valid.
    pub fn from_assignment(mv: &MvAssignment) -> Result<GridColoring> {
        if let Some(vertex) = mv.first_invalid_vertex() {
            return Err(Error::NotLocallyValid { vertex });
        }
        let n = mv.cols();
        let mut colors = vec![0u8; 2 * n];
        let step = |color: u8, parity: Parity| -> u8 {
            (color as i32 + parity.sign()).rem_euclid(3) as u8
        };
        // Top row, left to right: crossing the upper diagonal above x_j.
        for j in 1..n {
            colors[j] = step(colors[j - 1], mv.parity(CreaseId::new(3 * j - 1))?);
        }
        // Down the right edge: crossing the rightmost horizontal crease.
        colors[2 * n - 1] = step(colors[n - 1], mv.parity(CreaseId::new(3 * n - 3))?);
        // Bottom row, right to left: crossing the lower diagonal below x_{j-1}.
        for j in (1..n).rev() {
            colors[n + j - 1] = step(colors[n + j], mv.parity(CreaseId::new(3 * j - 2 + 3))?);
        }
        GridColoring::new(2, n, colors)
    }

    /// Inverse of [`GridColoring::from_assignment`]: reads each crease parity
    /// off the color difference across the grid edge crossing it. Accepts any
    /// proper two-row coloring; rotations give the same assignment.
    pub fn to_assignment(&self) -> Result<MvAssignment> {
        if self.rows != 2 {
            return Err(Error::NotTwoRows { rows: self.rows });
        }
        let n = self.cols;
        let diff = |a: u8, b: u8| -> Parity {
            // Proper colorings only ever differ by 1 or 2 mod 3.
            if (b + 3 - a) % 3 == 1 {
                Parity::Mountain
            } else {
                Parity::Valley
            }
        };
        let mut parities = vec![Parity::Mountain; 3 * n - 2];
        // Horizontal creases cross the vertical edges, oriented downward.
        parities[CreaseId::new(0).slot()] = diff(self.get(0, 0), self.get(1, 0));
        for k in 1..n {
            parities[CreaseId::new(3 * k).slot()] = diff(self.get(0, k), self.get(1, k));
        }
        // Diagonal creases cross the horizontal edges: the upper row along
        // the path direction, the lower row against it.
        for k in 1..n {
            parities[CreaseId::new(3 * k - 1).slot()] = diff(self.get(0, k - 1), self.get(0, k));
            parities[CreaseId::new(3 * k + 1).slot()] = diff(self.get(1, k), self.get(1, k - 1));
        }
        let mv = MvAssignment::new(n, parities)?;
        debug_assert!(mv.is_locally_valid());
        Ok(mv)
    }

    /// Weight of the directed grid edge `a -> b`: `+1` if the color increases
    /// by one mod 3, `-1` if it decreases.
    pub fn edge_weight(&self, a: (usize, usize), b: (usize, usize)) -> Result<i64> {
        for &(r, c) in [&a, &b] {
            if r >= self.rows || c >= self.cols {
                return Err(Error::BadCell {
                    row: r,
                    col: c,
                    rows: self.rows,
                    cols: self.cols,
                });
            }
        }
        let adjacent =
            (a.0 == b.0 && a.1.abs_diff(b.1) == 1) || (a.1 == b.1 && a.0.abs_diff(b.0) == 1);
        if !adjacent {
            return Err(Error::NotAdjacent {
                a_row: a.0,
                a_col: a.1,
                b_row: b.0,
                b_col: b.1,
            });
        }
        match (self.get(b.0, b.1) + 3 - self.get(a.0, a.1)) % 3 {
            1 => Ok(1),
            2 => Ok(-1),
            _ => unreachable!("colorings are proper by construction"),
        }
    }

    /// Sum of edge weights along a walk of orthogonally adjacent cells.
    pub fn path_weight(&self, path: &[(usize, usize)]) -> Result<i64> {
        if path.is_empty() {
            return Err(Error::EmptyPath);
        }
        let mut total = 0;
        for pair in path.windows(2) {
            total += self.edge_weight(pair[0], pair[1])?;
        }
        Ok(total)
    }
}

impl fmt::Display for GridColoring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

/// The boustrophedon path over an `rows x cols` grid: first row left to
/// right, second row right to left, and so on. Visits every cell once.
pub fn boustrophedon_path(rows: usize, cols: usize) -> Vec<(usize, usize)> {
    let mut path = Vec::with_capacity(rows * cols);
    for r in 0..rows {
        if r % 2 == 0 {
            path.extend((0..cols).map(|c| (r, c)));
        } else {
            path.extend((0..cols).rev().map(|c| (r, c)));
        }
    }
    path
}

fn enumerate(rows: usize, cols: usize, canonical: bool) -> Result<Vec<GridColoring>> {
    if rows == 0 || cols == 0 {
        return Err(Error::BadDimensions { rows, cols });
    }
    let mut out = Vec::new();
    let mut cells = Vec::with_capacity(rows * cols);
    fill(rows, cols, canonical, &mut cells, &mut out);
    Ok(out)
}

// Row-major backtracking; trying colors in ascending order yields the output
// already in row-major lexicographic order.
fn fill(
    rows: usize,
    cols: usize,
    canonical: bool,
    cells: &mut Vec<u8>,
    out: &mut Vec<GridColoring>,
) {
    if cells.len() == rows * cols {
        out.push(GridColoring {
            rows,
            cols,
            colors: cells.clone(),
        });
        return;
    }
    let idx = cells.len();
    let (r, c) = (idx / cols, idx % cols);
    for color in 0u8..3 {
        if canonical && idx == 0 && color != 0 {
            break;
        }
        if c > 0 && cells[idx - 1] == color {
            continue;
        }
        if r > 0 && cells[idx - cols] == color {
            continue;
        }
        cells.push(color);
        fill(rows, cols, canonical, cells, out);
        cells.pop();
    }
}

/// Proper colorings of a single column (adjacent cells differ).
fn column_states(rows: usize) -> Vec<Vec<u8>> {
    let mut states = Vec::new();
    let mut cur = Vec::with_capacity(rows);
    fn rec(rows: usize, cur: &mut Vec<u8>, states: &mut Vec<Vec<u8>>) {
        if cur.len() == rows {
            states.push(cur.clone());
            return;
        }
        for color in 0u8..3 {
            if cur.last() == Some(&color) {
                continue;
            }
            cur.push(color);
            rec(rows, cur, states);
            cur.pop();
        }
    }
    rec(rows, &mut cur, &mut states);
    states
}

/// Difference of path weights `to` minus `from`, accumulated cell by cell
/// along the boustrophedon path from the top-left cell.
///
/// Entry `(r, c)` is even, the base cell is 0, and values across any grid
/// edge differ by 0 or +-2; the profile does not change when either coloring
/// is rotated.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HeightProfile {
    rows: usize,
    cols: usize,
    values: Vec<i64>,
}

impl HeightProfile {
    /// Relative heights of `to` against `from`; the colorings must have equal
    /// dimensions.
    pub fn between(from: &GridColoring, to: &GridColoring) -> Result<HeightProfile> {
        if from.rows != to.rows || from.cols != to.cols {
            return Err(Error::DimensionMismatch {
                a_rows: from.rows,
                a_cols: from.cols,
                b_rows: to.rows,
                b_cols: to.cols,
            });
        }
        let mut values = vec![0i64; from.rows * from.cols];
        let path = boustrophedon_path(from.rows, from.cols);
        let mut acc = 0i64;
        for pair in path.windows(2) {
            let (a, b) = (pair[0], pair[1]);
            acc += to.edge_weight(a, b)? - from.edge_weight(a, b)?;
            values[b.0 * from.cols + b.1] = acc;
        }
        Ok(HeightProfile {
            rows: from.rows,
            cols: from.cols,
            values,
        })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> i64 {
        debug_assert!(r < self.rows && c < self.cols);
        self.values[r * self.cols + c]
    }

    pub fn values(&self) -> &[i64] {
        &self.values
    }

    pub fn max_abs(&self) -> i64 {
        self.values.iter().map(|v| v.abs()).max().unwrap_or(0)
    }
}
