//! Exact flip distances from height profiles.
//!
//! A sequence of face flips from one coloring to another recolors the base
//! (top-left) cell some number of times; giving each recoloring of the base
//! cell weight +-2 yields an even *absolute height* `H` for the whole
//! sequence, and any sequence realizing it needs at least
//! `(1/2) * sum over cells |H + h(cell)|` flips, where `h` is the height
//! profile between the two colorings. The bound is attained, so minimizing
//! it over the feasible `H` values gives the exact distance:
//!
//! * between two assignments (colorings up to rotation), every even `H` is
//!   feasible;
//! * between two concrete colorings, `H` is pinned mod 6 by how much the base
//!   cell's color must change.

use rayon::prelude::*;

use crate::coloring::{GridColoring, HeightProfile};
use crate::error::{Error, Result};
use crate::flip_graph::{FlipGraph, StateSet};
use crate::miura::MvAssignment;

/// Total signed weight of base-cell recolorings along a flip sequence.
/// Always even; reductions mod 6 index the three coloring rotations.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct AbsoluteHeight(i64);

impl AbsoluteHeight {
    pub fn new(value: i64) -> Result<Self> {
        if value % 2 != 0 {
            return Err(Error::OddHeight { value });
        }
        Ok(AbsoluteHeight(value))
    }

    pub fn value(self) -> i64 {
        self.0
    }

    /// This height's class mod 6: one of 0, 2, 4.
    pub fn residue_class(self) -> u8 {
        self.0.rem_euclid(6) as u8
    }
}

/// The residue class mod 6 forced between two concrete colorings: twice the
/// color difference of their base cells.
pub fn height_residue(from: &GridColoring, to: &GridColoring) -> u8 {
    (2 * (i64::from(from.get(0, 0)) - i64::from(to.get(0, 0)))).rem_euclid(6) as u8
}

/// The lower bound `(1/2) * sum |H + h(cell)|` on the number of flips
/// realizing absolute height `H` across `profile`.
pub fn path_length_bound(profile: &HeightProfile, height: AbsoluteHeight) -> u64 {
    let sum: i64 = profile
        .values()
        .iter()
        .map(|&h| (height.value() + h).abs())
        .sum();
    // Heights and profile entries are all even, so the half-sum is an
    // integer; anything else indicates a broken profile.
    assert!(sum % 2 == 0, "odd absolute-value sum over even heights");
    (sum / 2) as u64
}

/// Minimizes [`path_length_bound`] over even heights, optionally restricted
/// to one residue class mod 6. Returns the smallest minimizing height.
///
/// The scan covers `[-max|h| - 6, max|h| + 6]`, which contains the minimum of
/// the convex bound for every residue class. For the unrestricted problem the
/// minimizing height makes a median of `{H + h(cell)}` zero, which is checked
/// before returning.
pub fn minimize_bound(
    profile: &HeightProfile,
    residue: Option<u8>,
) -> Result<(AbsoluteHeight, u64)> {
    if let Some(r) = residue {
        if r % 2 != 0 || r >= 6 {
            return Err(Error::BadResidue { value: r as i64 });
        }
    }
    let limit = profile.max_abs() + 6;
    let mut best: Option<(i64, u64)> = None;
    let mut h = -limit;
    while h <= limit {
        if residue.is_none_or(|r| h.rem_euclid(6) as u8 == r) {
            let height = AbsoluteHeight::new(h).expect("scan visits even heights");
            let bound = path_length_bound(profile, height);
            if best.is_none_or(|(_, b)| bound < b) {
                best = Some((h, bound));
            }
        }
        h += 2;
    }
    let (h, bound) = best.expect("scan range is never empty");
    if residue.is_none() {
        debug_assert!(
            has_zero_median(profile, h),
            "minimizing height must zero a median"
        );
    }
    Ok((AbsoluteHeight::new(h)?, bound))
}

/// Whether a median of the multiset `{h + value}` is zero.
fn has_zero_median(profile: &HeightProfile, h: i64) -> bool {
    let mut values: Vec<i64> = profile.values().iter().map(|&v| v + h).collect();
    values.sort_unstable();
    let n = values.len();
    values[(n - 1) / 2] == 0 || values[n / 2] == 0
}

/// Exact flip-graph distance between two locally valid assignments on the
/// same pattern: the bound minimized over all even heights.
pub fn ofg_distance(from: &MvAssignment, to: &MvAssignment) -> Result<u64> {
    if from.cols() != to.cols() {
        return Err(Error::DimensionMismatch {
            a_rows: 2,
            a_cols: from.cols(),
            b_rows: 2,
            b_cols: to.cols(),
        });
    }
    let from = GridColoring::from_assignment(from)?;
    let to = GridColoring::from_assignment(to)?;
    let profile = HeightProfile::between(&from, &to)?;
    Ok(minimize_bound(&profile, None)?.1)
}

/// Exact recoloring distance between two concrete proper colorings: the
/// bound minimized within the residue class their base cells force.
pub fn r3_distance(from: &GridColoring, to: &GridColoring) -> Result<u64> {
    let profile = HeightProfile::between(from, to)?;
    Ok(minimize_bound(&profile, Some(height_residue(from, to)))?.1)
}

/// Flip-graph diameter of the two-row pattern: `ceil(n^2 / 2)`.
///
/// Verified constructively on the way out: both opposite degree-two pairs
/// (for `n >= 2`) sit at exactly this distance.
pub fn diameter_formula(cols: usize) -> Result<u64> {
    if cols == 0 {
        return Err(Error::BadDimensions { rows: 2, cols });
    }
    let n = cols as u64;
    let value = (n * n).div_ceil(2);
    if cols >= 2 {
        let [a, b, c, d] = MvAssignment::degree_two_assignments(cols)?;
        for (x, y) in [(a, b), (c, d)] {
            let measured = ofg_distance(&x, &y)?;
            if measured != value {
                return Err(Error::Inconsistency(format!(
                    "degree-two pair sits at distance {measured}, formula says {value}"
                )));
            }
        }
    }
    Ok(value)
}

/// Result of scanning all state pairs of a flip graph for the largest
/// distance.
#[derive(Clone, Debug)]
pub struct DistanceScan {
    /// Largest pairwise distance.
    pub max: u64,
    /// All pairs `(i, j)`, `i < j`, attaining it.
    pub witnesses: Vec<(usize, usize)>,
    /// Whether some witness pair is a pair of opposite degree-two states.
    pub opposite_degree_two_attains: bool,
}

/// Computes every pairwise distance of an assignment-built graph through the
/// height formula and reports the maximum with its witnesses.
pub fn max_distance_scan(graph: &FlipGraph) -> Result<DistanceScan> {
    let StateSet::Assignments(states) = graph.states() else {
        return Err(Error::NotTwoRows {
            rows: graph.spec().rows(),
        });
    };
    let colorings: Vec<GridColoring> = states
        .iter()
        .map(GridColoring::from_assignment)
        .collect::<Result<Vec<_>>>()?;
    let per_source: Vec<(u64, Vec<(usize, usize)>)> = (0..states.len())
        .into_par_iter()
        .map(|i| {
            let mut max = 0u64;
            let mut witnesses = Vec::new();
            for j in (i + 1)..states.len() {
                let profile = HeightProfile::between(&colorings[i], &colorings[j])?;
                let d = minimize_bound(&profile, None)?.1;
                match d.cmp(&max) {
                    std::cmp::Ordering::Greater => {
                        max = d;
                        witnesses.clear();
                        witnesses.push((i, j));
                    }
                    std::cmp::Ordering::Equal => witnesses.push((i, j)),
                    std::cmp::Ordering::Less => {}
                }
            }
            Ok((max, witnesses))
        })
        .collect::<Result<Vec<_>>>()?;
    let max = per_source.iter().map(|(m, _)| *m).max().unwrap_or(0);
    let mut witnesses: Vec<(usize, usize)> = per_source
        .into_iter()
        .filter(|(m, _)| *m == max)
        .flat_map(|(_, w)| w)
        .collect();
    witnesses.sort_unstable();
    let opposite_degree_two_attains = witnesses
        .iter()
        .any(|&(i, j)| states[i].flip_degree() == 2 && states[j] == states[i].opposite());
    Ok(DistanceScan {
        max,
        witnesses,
        opposite_degree_two_attains,
    })
}
