//! Two-row Miura-ori crease patterns and their mountain-valley assignments.
//!
//! A pattern with `cols = n` columns has two rows of parallelogram faces and
//! `n - 1` interior vertices `x_1 .. x_{n-1}` along the middle line. Creases
//! carry the labels `e_0, e_2, e_3, ..., e_{3n-2}`; the label 1 is an alias
//! of 0 because the leftmost horizontal crease occupies both slots. Around
//! vertex `x_k` the four incident creases are
//!
//! ```text
//!   left   = e_{3k-3}   (horizontal)
//!   top    = e_{3k-1}   (diagonal, upper row)
//!   right  = e_{3k}     (horizontal)
//!   bottom = e_{3k+1}   (diagonal, lower row)
//! ```
//!
//! An assignment is *locally valid* when every vertex is flat-foldable: three
//! creases of one parity and one of the other, with the minority crease never
//! on the horizontal left side.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Dimensions of a Miura-ori pattern: `rows x cols` parallelogram faces.
///
/// Crease-level operations require `rows == 2`; coloring-level operations
/// accept any dimensions.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct MiuraSpec {
    rows: usize,
    cols: usize,
}

impl MiuraSpec {
    pub fn new(rows: usize, cols: usize) -> Result<Self> {
        if rows == 0 || cols == 0 {
            return Err(Error::BadDimensions { rows, cols });
        }
        Ok(MiuraSpec { rows, cols })
    }

    /// The standard two-row pattern with `cols` columns.
    pub fn two_rows(cols: usize) -> Result<Self> {
        MiuraSpec::new(2, cols)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    fn require_two_rows(&self) -> Result<()> {
        if self.rows != 2 {
            return Err(Error::NotTwoRows { rows: self.rows });
        }
        Ok(())
    }

    /// Number of distinct creases: `3n - 2` for a two-row pattern.
    pub fn crease_count(&self) -> Result<usize> {
        self.require_two_rows()?;
        Ok(3 * self.cols - 2)
    }

    /// Number of interior vertices `x_1 .. x_{n-1}`.
    pub fn interior_vertex_count(&self) -> Result<usize> {
        self.require_two_rows()?;
        Ok(self.cols - 1)
    }

    /// The four creases incident to interior vertex `x_k`, as
    /// `[left, top, right, bottom]`.
    pub fn vertex_creases(&self, k: usize) -> Result<[CreaseId; 4]> {
        let max = self.interior_vertex_count()?;
        if k == 0 || k > max {
            return Err(Error::BadVertex { index: k, max });
        }
        Ok([
            CreaseId::new(3 * k - 3),
            CreaseId::new(3 * k - 1),
            CreaseId::new(3 * k),
            CreaseId::new(3 * k + 1),
        ])
    }

    /// All faces of the pattern in row-major order.
    pub fn faces(&self) -> impl Iterator<Item = FaceId> + '_ {
        let cols = self.cols;
        (1..=self.rows).flat_map(move |row| (1..=cols).map(move |col| FaceId { row, col }))
    }

    pub fn face_count(&self) -> usize {
        self.rows * self.cols
    }

    fn check_face(&self, face: FaceId) -> Result<()> {
        if face.row == 0 || face.row > self.rows || face.col == 0 || face.col > self.cols {
            return Err(Error::BadFace {
                row: face.row,
                col: face.col,
                rows: self.rows,
                cols: self.cols,
            });
        }
        Ok(())
    }

    /// Creases bordering face `alpha_{i,j}` of a two-row pattern.
    ///
    /// Every face touches one horizontal crease and the diagonal creases of
    /// its row on either side, so corner faces have two border creases and
    /// all other faces three.
    pub fn face_border_creases(&self, face: FaceId) -> Result<Vec<CreaseId>> {
        self.require_two_rows()?;
        self.check_face(face)?;
        let (i, j, n) = (face.row, face.col, self.cols);
        let mut border = Vec::with_capacity(3);
        if i == 1 {
            if j > 1 {
                border.push(CreaseId::new(3 * j - 4));
            }
            border.push(CreaseId::new(3 * j - 3));
            if j < n {
                border.push(CreaseId::new(3 * j - 1));
            }
        } else {
            if j > 1 {
                border.push(CreaseId::new(3 * j - 2));
            }
            border.push(CreaseId::new(3 * j - 3));
            if j < n {
                border.push(CreaseId::new(3 * j + 1));
            }
        }
        border.sort_unstable();
        Ok(border)
    }

    /// Interior vertices incident to a face: `x_{j-1}` and `x_j` where they
    /// exist.
    pub fn face_vertices(&self, face: FaceId) -> Result<Vec<usize>> {
        self.require_two_rows()?;
        self.check_face(face)?;
        let mut vertices = Vec::with_capacity(2);
        if face.col > 1 {
            vertices.push(face.col - 1);
        }
        if face.col < self.cols {
            vertices.push(face.col);
        }
        Ok(vertices)
    }

    /// Number of locally valid assignments: `2 * 3^(n-1)`.
    pub fn valid_assignment_count(&self) -> Result<u64> {
        self.require_two_rows()?;
        checked_pow3(self.cols - 1)?
            .checked_mul(2)
            .ok_or(Error::Overflow)
    }
}

pub(crate) fn checked_pow3(exp: usize) -> Result<u64> {
    let exp = u32::try_from(exp).map_err(|_| Error::Overflow)?;
    3u64.checked_pow(exp).ok_or(Error::Overflow)
}

/// Label of a crease in a two-row pattern.
///
/// Labels follow the scheme in the module docs; constructing label 1
/// normalizes it to the aliased label 0.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct CreaseId(usize);

impl CreaseId {
    pub fn new(label: usize) -> Self {
        CreaseId(if label == 1 { 0 } else { label })
    }

    pub fn label(self) -> usize {
        self.0
    }

    /// Position of this crease in an assignment's parity sequence.
    pub fn slot(self) -> usize {
        if self.0 == 0 {
            0
        } else {
            self.0 - 1
        }
    }

    pub fn from_slot(slot: usize) -> Self {
        if slot == 0 {
            CreaseId(0)
        } else {
            CreaseId(slot + 1)
        }
    }
}

impl fmt::Display for CreaseId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "e{}", self.0)
    }
}

/// A face `alpha_{row,col}`; both coordinates are 1-based.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct FaceId {
    pub row: usize,
    pub col: usize,
}

impl FaceId {
    pub fn new(row: usize, col: usize) -> Self {
        FaceId { row, col }
    }
}

impl fmt::Display for FaceId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.row, self.col)
    }
}

/// Mountain-valley parity of a single crease.
///
/// `Mountain` sorts before `Valley`, which makes derived lexicographic
/// orderings on parity sequences put `M` first.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Parity {
    Mountain,
    Valley,
}

impl Parity {
    pub fn sign(self) -> i32 {
        match self {
            Parity::Mountain => 1,
            Parity::Valley => -1,
        }
    }

    pub fn flipped(self) -> Parity {
        match self {
            Parity::Mountain => Parity::Valley,
            Parity::Valley => Parity::Mountain,
        }
    }

    pub fn to_char(self) -> char {
        match self {
            Parity::Mountain => 'M',
            Parity::Valley => 'V',
        }
    }

    pub fn from_char(c: char) -> Result<Parity> {
        match c {
            'M' => Ok(Parity::Mountain),
            'V' => Ok(Parity::Valley),
            found => Err(Error::BadParityChar { found }),
        }
    }
}

/// A mountain-valley assignment of a two-row pattern: one parity per crease,
/// stored in ascending label order `e_0, e_2, ..., e_{3n-2}`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct MvAssignment {
    cols: usize,
    parities: Vec<Parity>,
}

impl MvAssignment {
    pub fn new(cols: usize, parities: Vec<Parity>) -> Result<Self> {
        let spec = MiuraSpec::two_rows(cols)?;
        let expected = spec.crease_count()?;
        if parities.len() != expected {
            return Err(Error::LengthMismatch {
                len: parities.len(),
                expected,
            });
        }
        Ok(MvAssignment { cols, parities })
    }

    /// The all-`parity` assignment.
    pub fn uniform(cols: usize, parity: Parity) -> Result<Self> {
        let spec = MiuraSpec::two_rows(cols)?;
        Ok(MvAssignment {
            cols,
            parities: vec![parity; spec.crease_count()?],
        })
    }

    pub fn spec(&self) -> MiuraSpec {
        MiuraSpec {
            rows: 2,
            cols: self.cols,
        }
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn parities(&self) -> &[Parity] {
        &self.parities
    }

    pub fn parity(&self, crease: CreaseId) -> Result<Parity> {
        let slot = crease.slot();
        if crease.label() > 3 * self.cols - 2 {
            return Err(Error::BadCrease {
                label: crease.label(),
                cols: self.cols,
            });
        }
        Ok(self.parities[slot])
    }

    /// Parities `[left, top, right, bottom]` around interior vertex `x_k`.
    pub fn vertex_parities(&self, k: usize) -> Result<[Parity; 4]> {
        let creases = self.spec().vertex_creases(k)?;
        Ok(creases.map(|c| self.parities[c.slot()]))
    }

    fn vertex_is_valid(&self, k: usize) -> bool {
        let p = &self.parities;
        let left = p[CreaseId::new(3 * k - 3).slot()].sign();
        let top = p[CreaseId::new(3 * k - 1).slot()].sign();
        let right = p[CreaseId::new(3 * k).slot()].sign();
        let bottom = p[CreaseId::new(3 * k + 1).slot()].sign();
        let sum = left + top + right + bottom;
        sum.abs() == 2 && left == sum.signum()
    }

    /// Flat-foldability at every interior vertex: parities around each vertex
    /// sum to +-2 and the minority parity avoids the left crease.
    pub fn is_locally_valid(&self) -> bool {
        (1..self.cols).all(|k| self.vertex_is_valid(k))
    }

    /// Index `k` of the leftmost vertex `x_k` that is not flat-foldable, if
    /// any.
    pub fn first_invalid_vertex(&self) -> Option<usize> {
        (1..self.cols).find(|&k| !self.vertex_is_valid(k))
    }

    /// All locally valid assignments in lexicographic order (`M` before `V`).
    ///
    /// Built by choosing `e_0` and then, vertex by vertex, one of the three
    /// completions that keep the vertex flat-foldable; the choices are taken
    /// in lexicographic order, so the output is sorted.
    pub fn enumerate_valid(cols: usize) -> Result<Vec<MvAssignment>> {
        let spec = MiuraSpec::two_rows(cols)?;
        let len = spec.crease_count()?;
        let count = spec.valid_assignment_count()?;
        let mut out = Vec::with_capacity(count as usize);
        let mut prefix = Vec::with_capacity(len);
        for first in [Parity::Mountain, Parity::Valley] {
            prefix.push(first);
            extend_prefix(cols, &mut prefix, &mut out);
            prefix.pop();
        }
        Ok(out)
    }

    /// Negates the parities of the creases bordering `face`.
    ///
    /// The result is returned whether or not it is locally valid; use
    /// [`MvAssignment::is_flippable`] to test for validity-preserving flips.
    pub fn flip_face(&self, face: FaceId) -> Result<MvAssignment> {
        let border = self.spec().face_border_creases(face)?;
        let mut parities = self.parities.clone();
        for crease in border {
            let slot = crease.slot();
            parities[slot] = parities[slot].flipped();
        }
        Ok(MvAssignment {
            cols: self.cols,
            parities,
        })
    }

    /// Whether flipping `face` keeps the assignment locally valid.
    pub fn is_flippable(&self, face: FaceId) -> Result<bool> {
        let flipped = self.flip_face(face)?;
        // Only the vertices touching the face can change, but a full scan is
        // cheap and leaves no room for index slips.
        Ok(flipped.is_locally_valid())
    }

    /// The faces whose flip keeps the assignment locally valid.
    pub fn flippable_faces(&self) -> Vec<FaceId> {
        self.spec()
            .faces()
            .filter(|&f| self.is_flippable(f).expect("face comes from the pattern"))
            .collect()
    }

    /// Number of flippable faces; equals the assignment's degree in the flip
    /// graph for patterns with at least two columns.
    pub fn flip_degree(&self) -> usize {
        self.flippable_faces().len()
    }

    /// Negates every crease. Preserves local validity and the flippable set.
    pub fn opposite(&self) -> MvAssignment {
        MvAssignment {
            cols: self.cols,
            parities: self.parities.iter().map(|p| p.flipped()).collect(),
        }
    }

    /// Parities `[top, right, bottom]` introduced at the last interior
    /// vertex, or `None` for a single-column pattern.
    pub fn last_vertex_triple(&self) -> Option<[Parity; 3]> {
        if self.cols < 2 {
            return None;
        }
        let len = self.parities.len();
        Some([
            self.parities[len - 3],
            self.parities[len - 2],
            self.parities[len - 1],
        ])
    }

    /// The four assignments with exactly two flippable faces (`cols >= 2`).
    ///
    /// They come in opposite pairs: the first pair flips only faces `(1,1)`
    /// and `(2,n)`, the second only `(2,1)` and `(1,n)`. Each is a row of
    /// uniformly mountain diagonal creases against an all-valley background,
    /// or the negation of such an assignment.
    pub fn degree_two_assignments(cols: usize) -> Result<[MvAssignment; 4]> {
        if cols < 2 {
            return Err(Error::NeedsTwoColumns { cols });
        }
        let bottom = Self::diagonal_row_mountain(cols, DiagonalRow::Bottom)?;
        let top = Self::diagonal_row_mountain(cols, DiagonalRow::Top)?;
        let bottom_opp = bottom.opposite();
        let top_opp = top.opposite();
        Ok([bottom, bottom_opp, top, top_opp])
    }

    /// All diagonal creases of one row mountain, everything else valley.
    pub fn diagonal_row_mountain(cols: usize, row: DiagonalRow) -> Result<MvAssignment> {
        let mut mv = MvAssignment::uniform(cols, Parity::Valley)?;
        for k in 1..cols {
            let label = match row {
                DiagonalRow::Top => 3 * k - 1,
                DiagonalRow::Bottom => 3 * k + 1,
            };
            mv.parities[CreaseId::new(label).slot()] = Parity::Mountain;
        }
        Ok(mv)
    }
}

/// Selects the diagonal creases of the upper or lower face row.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DiagonalRow {
    Top,
    Bottom,
}

/// The three `[top, right, bottom]` completions for a new vertex whose left
/// crease has parity `left`, in lexicographic order: exactly one of the three
/// new creases takes the opposite parity.
pub(crate) fn vertex_completions(left: Parity) -> [[Parity; 3]; 3] {
    let p = left;
    let q = left.flipped();
    let mut triples = [[q, p, p], [p, q, p], [p, p, q]];
    triples.sort_unstable();
    triples
}

fn extend_prefix(cols: usize, prefix: &mut Vec<Parity>, out: &mut Vec<MvAssignment>) {
    if prefix.len() == 3 * cols - 2 {
        out.push(MvAssignment {
            cols,
            parities: prefix.clone(),
        });
        return;
    }
    // The next vertex's left crease is the most recent horizontal crease:
    // slot 0 for the first vertex, otherwise the slot of e_{3k-3}.
    let k = prefix.len() / 3 + 1;
    let left = prefix[CreaseId::new(3 * k - 3).slot()];
    for triple in vertex_completions(left) {
        prefix.extend_from_slice(&triple);
        extend_prefix(cols, prefix, out);
        prefix.truncate(prefix.len() - 3);
    }
}

impl fmt::Display for MvAssignment {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for p in &self.parities {
            write!(f, "{}", p.to_char())?;
        }
        Ok(())
    }
}

impl FromStr for MvAssignment {
    type Err = Error;

    /// Parses strings such as `"MMVM"`; the column count is inferred from the
    /// length, which must be of the form `3n - 2`.
    fn from_str(s: &str) -> Result<MvAssignment> {
        let parities = s
            .chars()
            .map(Parity::from_char)
            .collect::<Result<Vec<_>>>()?;
        let len = parities.len();
        if len % 3 != 1 {
            return Err(Error::BadParityLength { len });
        }
        MvAssignment::new(len.div_ceil(3), parities)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn mv(s: &str) -> MvAssignment {
        s.parse().unwrap()
    }

    fn labels(creases: &[CreaseId]) -> Vec<usize> {
        creases.iter().map(|c| c.label()).collect()
    }

    #[test]
    fn crease_counts() {
        for (cols, expected) in [(1, 1), (3, 7), (10, 28)] {
            let spec = MiuraSpec::two_rows(cols).unwrap();
            assert_eq!(spec.crease_count().unwrap(), expected);
        }
    }

    #[test]
    fn crease_label_one_aliases_zero() {
        assert_eq!(CreaseId::new(1), CreaseId::new(0));
        assert_eq!(CreaseId::new(1).slot(), 0);
        assert_eq!(CreaseId::from_slot(0).label(), 0);
        assert_eq!(CreaseId::from_slot(3).label(), 4);
        for slot in 0..40 {
            assert_eq!(CreaseId::from_slot(slot).slot(), slot);
        }
    }

    #[test]
    fn vertex_creases_follow_the_labeling() {
        let spec = MiuraSpec::two_rows(5).unwrap();
        assert_eq!(labels(&spec.vertex_creases(1).unwrap()), [0, 2, 3, 4]);
        assert_eq!(labels(&spec.vertex_creases(2).unwrap()), [3, 5, 6, 7]);
        assert_eq!(labels(&spec.vertex_creases(4).unwrap()), [9, 11, 12, 13]);
        assert!(spec.vertex_creases(0).is_err());
        assert!(spec.vertex_creases(5).is_err());
    }

    #[test]
    fn local_validity_examples() {
        assert!(mv("MMVM").is_locally_valid());
        assert!(!mv("MVVV").is_locally_valid());
        assert!(!mv("MMMM").is_locally_valid());
        // Single-column patterns have no interior vertex to violate.
        assert!(mv("M").is_locally_valid());
        assert!(mv("V").is_locally_valid());
    }

    #[test]
    fn first_invalid_vertex_is_the_leftmost_failure() {
        assert_eq!(mv("MMVM").first_invalid_vertex(), None);
        assert_eq!(mv("M").first_invalid_vertex(), None);
        assert_eq!(mv("MMMM").first_invalid_vertex(), Some(1));
        // Valid at x_1, broken only at x_2.
        assert_eq!(mv("MMVMVVV").first_invalid_vertex(), Some(2));
        assert!(mv("MMVMMVV").is_locally_valid());
    }

    #[test]
    fn enumeration_matches_brute_force() {
        for cols in 1..=4 {
            let len = 3 * cols - 2;
            let mut expected = Vec::new();
            for mask in 0u32..(1 << len) {
                let parities = (0..len)
                    .map(|slot| {
                        if mask >> (len - 1 - slot) & 1 == 0 {
                            Parity::Mountain
                        } else {
                            Parity::Valley
                        }
                    })
                    .collect();
                let candidate = MvAssignment::new(cols, parities).unwrap();
                if candidate.is_locally_valid() {
                    expected.push(candidate);
                }
            }
            let enumerated = MvAssignment::enumerate_valid(cols).unwrap();
            assert_eq!(enumerated, expected, "cols={cols}");
        }
    }

    #[test]
    fn enumeration_counts_and_order() {
        let singles = MvAssignment::enumerate_valid(1).unwrap();
        assert_eq!(
            singles.iter().map(|a| a.to_string()).collect::<Vec<_>>(),
            ["M", "V"]
        );
        assert_eq!(MvAssignment::enumerate_valid(3).unwrap().len(), 18);
        assert_eq!(MvAssignment::enumerate_valid(6).unwrap().len(), 486);
        for cols in 1..=6 {
            let states = MvAssignment::enumerate_valid(cols).unwrap();
            let spec = MiuraSpec::two_rows(cols).unwrap();
            assert_eq!(states.len() as u64, spec.valid_assignment_count().unwrap());
            assert!(
                states.windows(2).all(|w| w[0] < w[1]),
                "sorted, cols={cols}"
            );
        }
    }

    #[test]
    fn face_border_examples() {
        let spec = MiuraSpec::two_rows(3).unwrap();
        assert_eq!(
            labels(&spec.face_border_creases(FaceId::new(1, 1)).unwrap()),
            [0, 2]
        );
        assert_eq!(
            labels(&spec.face_border_creases(FaceId::new(1, 2)).unwrap()),
            [2, 3, 5]
        );
        assert_eq!(
            labels(&spec.face_border_creases(FaceId::new(2, 3)).unwrap()),
            [6, 7]
        );
        assert!(spec.face_border_creases(FaceId::new(3, 1)).is_err());
        assert!(spec.face_border_creases(FaceId::new(1, 4)).is_err());
    }

    #[test]
    fn single_column_faces_share_their_crease() {
        let spec = MiuraSpec::two_rows(1).unwrap();
        for face in [FaceId::new(1, 1), FaceId::new(2, 1)] {
            assert_eq!(labels(&spec.face_border_creases(face).unwrap()), [0]);
        }
    }

    #[test]
    fn every_face_borders_two_or_three_creases() {
        for cols in 2..=6 {
            let spec = MiuraSpec::two_rows(cols).unwrap();
            for face in spec.faces() {
                let border = spec.face_border_creases(face).unwrap();
                let corner = face.col == 1 || face.col == cols;
                assert_eq!(border.len(), if corner { 2 } else { 3 });
            }
        }
    }

    #[test]
    fn flip_examples() {
        let a = mv("MMVM");
        assert_eq!(a.flip_face(FaceId::new(1, 1)).unwrap(), mv("VVVM"));
        assert_eq!(a.flip_face(FaceId::new(2, 2)).unwrap(), mv("MMMV"));
        assert!(a.flip_face(FaceId::new(1, 3)).is_err());
    }

    #[test]
    fn flips_are_involutions() {
        for cols in 1..=4 {
            let spec = MiuraSpec::two_rows(cols).unwrap();
            for state in MvAssignment::enumerate_valid(cols).unwrap() {
                for face in spec.faces() {
                    let twice = state.flip_face(face).unwrap().flip_face(face).unwrap();
                    assert_eq!(twice, state);
                }
            }
        }
    }

    #[test]
    fn diagonal_row_assignments_have_two_flips() {
        // Uniformly mountain top diagonals leave only the top-right and
        // bottom-left faces flippable; the bottom row mirrors this.
        for cols in 2..=6 {
            let top = MvAssignment::diagonal_row_mountain(cols, DiagonalRow::Top).unwrap();
            assert!(top.is_locally_valid());
            assert_eq!(
                top.flippable_faces(),
                [FaceId::new(1, cols), FaceId::new(2, 1)]
            );
            let bottom = MvAssignment::diagonal_row_mountain(cols, DiagonalRow::Bottom).unwrap();
            assert!(bottom.is_locally_valid());
            assert_eq!(
                bottom.flippable_faces(),
                [FaceId::new(1, 1), FaceId::new(2, cols)]
            );
        }
    }

    #[test]
    fn degree_two_assignments_pair_up() {
        for cols in 2..=6 {
            let [a, b, c, d] = MvAssignment::degree_two_assignments(cols).unwrap();
            assert_eq!(a.opposite(), b);
            assert_eq!(c.opposite(), d);
            for state in [&a, &b, &c, &d] {
                assert!(state.is_locally_valid());
                assert_eq!(state.flip_degree(), 2);
            }
            assert_eq!(a.flippable_faces(), b.flippable_faces());
            assert_eq!(c.flippable_faces(), d.flippable_faces());
            assert_eq!(
                a.flippable_faces(),
                [FaceId::new(1, 1), FaceId::new(2, cols)]
            );
            assert_eq!(
                c.flippable_faces(),
                [FaceId::new(1, cols), FaceId::new(2, 1)]
            );
        }
        assert!(MvAssignment::degree_two_assignments(1).is_err());
    }

    #[test]
    fn opposite_preserves_validity_and_flips() {
        for cols in 1..=4 {
            for state in MvAssignment::enumerate_valid(cols).unwrap() {
                let opp = state.opposite();
                assert!(opp.is_locally_valid());
                assert_eq!(opp.flippable_faces(), state.flippable_faces());
                assert_eq!(opp.opposite(), state);
            }
        }
    }

    #[test]
    fn parse_and_display_round_trip() {
        for s in ["M", "V", "MMVM", "MMVVMMV"] {
            assert_eq!(mv(s).to_string(), s);
        }
        assert!(matches!(
            "MX".parse::<MvAssignment>(),
            Err(Error::BadParityChar { found: 'X' })
        ));
        assert!(matches!(
            "MM".parse::<MvAssignment>(),
            Err(Error::BadParityLength { len: 2 })
        ));
        assert!(matches!(
            "MMM".parse::<MvAssignment>(),
            Err(Error::BadParityLength { len: 3 })
        ));
    }

    #[test]
    fn parity_lookup_honors_aliasing() {
        let a = mv("MMVM");
        assert_eq!(a.parity(CreaseId::new(0)).unwrap(), Parity::Mountain);
        assert_eq!(a.parity(CreaseId::new(1)).unwrap(), Parity::Mountain);
        assert_eq!(a.parity(CreaseId::new(3)).unwrap(), Parity::Valley);
        assert!(a.parity(CreaseId::new(5)).is_err());
    }

    #[test]
    fn vertex_parities_example() {
        let a = mv("MMVM");
        assert_eq!(
            a.vertex_parities(1).unwrap(),
            [
                Parity::Mountain,
                Parity::Mountain,
                Parity::Valley,
                Parity::Mountain
            ]
        );
    }
}
