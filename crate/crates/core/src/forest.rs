//! The assignment extension forest and its exact degree statistics.
//!
//! Every locally valid assignment on `n` columns extends to exactly three
//! valid assignments on `n + 1` columns (one per completion of the new
//! vertex), so the valid assignments of all sizes form a forest with two
//! roots, `M` and `V`. Labeling each node with its number of flippable faces
//! gives the *degree forest*: a child's label is its parent's plus 2, 1, or
//! 0, and which deltas occur depends only on whether the parent itself was
//! reached by a +2 step. Coloring nodes by their delta (blue +2, orange +1,
//! magenta +0, roots blue) makes the generation tables computable without
//! touching assignments at all, in O(n) per generation:
//!
//! * a blue node labeled `d` has children labeled `d+2` (blue), `d`, `d`
//!   (both magenta);
//! * any other node labeled `d` has children labeled `d+2` (blue), `d+1`
//!   (orange), `d` (magenta).
//!
//! Generation `n` of the table reproduces the exact degree distribution of
//! the flip graph on `n` columns.

use std::collections::BTreeMap;
use std::fmt;

use num_rational::Ratio;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::miura::{vertex_completions, CreaseId, MvAssignment};

/// The three valid one-column extensions of an assignment, in lexicographic
/// order. Over a whole generation the children partition the next
/// generation's assignments.
pub fn extend_assignment(mv: &MvAssignment) -> Result<Vec<MvAssignment>> {
    if let Some(vertex) = mv.first_invalid_vertex() {
        return Err(Error::NotLocallyValid { vertex });
    }
    let n = mv.cols();
    // The new vertex x_n hangs off the rightmost horizontal crease e_{3n-3}.
    let left = mv.parities()[CreaseId::new(3 * n - 3).slot()];
    let children = vertex_completions(left)
        .iter()
        .map(|triple| {
            let mut parities = mv.parities().to_vec();
            parities.extend_from_slice(triple);
            MvAssignment::new(n + 1, parities)
        })
        .collect::<Result<Vec<_>>>()?;
    debug_assert!(children.iter().all(|c| c.is_locally_valid()));
    Ok(children)
}

/// Whether an assignment is a +2 (blue) node of the degree forest: its last
/// vertex triple alternates against the left crease (`MVM` or `VMV`).
/// Single-column roots count as blue.
pub fn is_blue(mv: &MvAssignment) -> bool {
    match mv.last_vertex_triple() {
        None => true,
        Some([t, r, b]) => t == b && r == t.flipped(),
    }
}

/// Node colors of the degree forest, named by the label delta from the
/// parent.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum NodeColor {
    Blue,
    Orange,
    Magenta,
}

/// Node counts of one label within one generation, split by color.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct ColorCounts {
    pub blue: u64,
    pub orange: u64,
    pub magenta: u64,
}

impl ColorCounts {
    pub fn total(&self) -> u64 {
        self.blue + self.orange + self.magenta
    }

    /// Non-blue nodes: the counts the +1/+0 recurrences track jointly.
    pub fn non_blue(&self) -> u64 {
        self.orange + self.magenta
    }
}

/// Exact label counts for one generation of the degree forest.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GenerationTable {
    generation: usize,
    counts: BTreeMap<u32, ColorCounts>,
}

impl GenerationTable {
    pub fn generation(&self) -> usize {
        self.generation
    }

    pub fn color_counts(&self, label: u32) -> ColorCounts {
        self.counts.get(&label).copied().unwrap_or_default()
    }

    /// Number of generation nodes labeled `label` (any color).
    pub fn count(&self, label: u32) -> u64 {
        self.color_counts(label).total()
    }

    pub fn blue_count(&self, label: u32) -> u64 {
        self.color_counts(label).blue
    }

    pub fn non_blue_count(&self, label: u32) -> u64 {
        self.color_counts(label).non_blue()
    }

    /// Labels present in this generation, ascending.
    pub fn labels(&self) -> Vec<u32> {
        self.counts
            .iter()
            .filter(|(_, c)| c.total() > 0)
            .map(|(&d, _)| d)
            .collect()
    }

    /// Label-to-count map over every present label.
    pub fn totals(&self) -> BTreeMap<u32, u64> {
        self.counts
            .iter()
            .filter(|(_, c)| c.total() > 0)
            .map(|(&d, c)| (d, c.total()))
            .collect()
    }

    pub fn node_total(&self) -> u64 {
        self.counts.values().map(|c| c.total()).sum()
    }

    /// Whether the generation's label counts equal a flip graph's degree
    /// distribution.
    pub fn matches_degree_distribution(&self, distribution: &BTreeMap<usize, u64>) -> bool {
        let ours: BTreeMap<usize, u64> = self
            .totals()
            .into_iter()
            .map(|(d, c)| (d as usize, c))
            .collect();
        &ours == distribution
    }
}

/// Generation tables of the degree forest from generation 1 up to a bound.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DegreeForest {
    tables: Vec<GenerationTable>,
}

impl DegreeForest {
    /// Evolves the color rules generation by generation, starting from the
    /// two blue roots labeled 2.
    pub fn generate(max_generation: usize) -> Result<DegreeForest> {
        if max_generation == 0 {
            return Err(Error::BadDimensions { rows: 2, cols: 0 });
        }
        let mut tables = Vec::with_capacity(max_generation);
        let mut current: BTreeMap<u32, ColorCounts> = BTreeMap::new();
        current.insert(
            2,
            ColorCounts {
                blue: 2,
                ..Default::default()
            },
        );
        tables.push(GenerationTable {
            generation: 1,
            counts: current.clone(),
        });
        for generation in 2..=max_generation {
            let mut next: BTreeMap<u32, ColorCounts> = BTreeMap::new();
            for (&label, counts) in &current {
                let blue = counts.blue;
                let non_blue = counts.non_blue();
                if blue > 0 {
                    bump(&mut next, label + 2, NodeColor::Blue, blue)?;
                    bump(&mut next, label, NodeColor::Magenta, checked_mul2(blue)?)?;
                }
                if non_blue > 0 {
                    bump(&mut next, label + 2, NodeColor::Blue, non_blue)?;
                    bump(&mut next, label + 1, NodeColor::Orange, non_blue)?;
                    bump(&mut next, label, NodeColor::Magenta, non_blue)?;
                }
            }
            tables.push(GenerationTable {
                generation,
                counts: next.clone(),
            });
            current = next;
        }
        Ok(DegreeForest { tables })
    }

    pub fn max_generation(&self) -> usize {
        self.tables.len()
    }

    pub fn table(&self, generation: usize) -> Result<&GenerationTable> {
        if generation == 0 || generation > self.tables.len() {
            return Err(Error::InsufficientGenerations {
                have: self.tables.len(),
                need: generation,
            });
        }
        Ok(&self.tables[generation - 1])
    }

    pub fn tables(&self) -> &[GenerationTable] {
        &self.tables
    }

    /// Label count of one cell: generation `n`, label `d`.
    pub fn count(&self, generation: usize, label: u32) -> Result<u64> {
        Ok(self.table(generation)?.count(label))
    }

    /// Counts of label `d` across generations `start..=end`.
    pub fn label_row(&self, label: u32, start: usize, end: usize) -> Result<Vec<i64>> {
        (start..=end)
            .map(|n| Ok(self.count(n, label)? as i64))
            .collect()
    }

    /// Counts of label `2n - a` across generations `start..=end`.
    pub fn reverse_row(&self, a: u32, start: usize, end: usize) -> Result<Vec<i64>> {
        (start..=end)
            .map(|n| {
                let label = 2 * n as u32;
                if label < a {
                    return Err(Error::Inconsistency(format!(
                        "label 2n - a undefined at n={n}, a={a}"
                    )));
                }
                Ok(self.count(n, label - a)? as i64)
            })
            .collect()
    }

    /// Re-derives every generation from its predecessors through the label
    /// recurrences and reports any cell that disagrees:
    ///
    /// ```text
    /// b_n(d) = v_{n-1}(d-2)
    /// w_n(d) = v_{n-1}(d) + w_{n-1}(d-1) + v_{n-2}(d-2)
    /// v_n(d) = v_{n-1}(d) + w_{n-1}(d-1) + v_{n-1}(d-2) + v_{n-2}(d-2)
    /// ```
    ///
    /// where `v` counts all nodes, `b` blue ones, and `w` the rest.
    pub fn verify_recurrences(&self, start: usize, end: usize) -> Result<RecurrenceReport> {
        if start < 3 {
            return Err(Error::InsufficientGenerations {
                have: start,
                need: 3,
            });
        }
        let mut report = RecurrenceReport::default();
        for n in start..=end {
            let cur = self.table(n)?;
            let prev = self.table(n - 1)?;
            let prev2 = self.table(n - 2)?;
            for d in 0..=(2 * n as u32) {
                let v = |t: &GenerationTable, d: Option<u32>| d.map_or(0, |d| t.count(d));
                let w = |t: &GenerationTable, d: Option<u32>| d.map_or(0, |d| t.non_blue_count(d));
                let d2 = d.checked_sub(2);
                let d1 = d.checked_sub(1);
                let blue_expected = v(prev, d2);
                let non_blue_expected = v(prev, Some(d)) + w(prev, d1) + v(prev2, d2);
                let total_expected = v(prev, Some(d)) + w(prev, d1) + v(prev, d2) + v(prev2, d2);
                report.cells_checked += 3;
                if cur.blue_count(d) != blue_expected {
                    report.violations.push(format!(
                        "blue count at n={n}, d={d}: table {} vs recurrence {}",
                        cur.blue_count(d),
                        blue_expected
                    ));
                }
                if cur.non_blue_count(d) != non_blue_expected {
                    report.violations.push(format!(
                        "non-blue count at n={n}, d={d}: table {} vs recurrence {}",
                        cur.non_blue_count(d),
                        non_blue_expected
                    ));
                }
                if cur.count(d) != total_expected {
                    report.violations.push(format!(
                        "total count at n={n}, d={d}: table {} vs recurrence {}",
                        cur.count(d),
                        total_expected
                    ));
                }
            }
        }
        Ok(report)
    }

    /// Checks the structural shape of each generation `2..=end`: four
    /// magenta nodes at the minimum label 2, two blue nodes at the maximum
    /// label `2n`, nothing at `2n - 1`, and labels filling
    /// `{2, ..., 2n-2} ∪ {2n}`.
    pub fn structural_checks(&self, end: usize) -> Result<StructuralReport> {
        let mut report = StructuralReport::default();
        for n in 2..=end {
            let table = self.table(n)?;
            report.generations_checked += 1;
            let top = 2 * n as u32;
            let c2 = table.color_counts(2);
            if (c2.magenta, c2.blue, c2.orange) != (4, 0, 0) {
                report
                    .violations
                    .push(format!("n={n}: label 2 counts {c2:?}, want four magenta"));
            }
            let cmax = table.color_counts(top);
            if (cmax.blue, cmax.orange, cmax.magenta) != (2, 0, 0) {
                report
                    .violations
                    .push(format!("n={n}: label {top} counts {cmax:?}, want two blue"));
            }
            if table.count(top - 1) != 0 {
                report.violations.push(format!(
                    "n={n}: label {} should be absent, found {}",
                    top - 1,
                    table.count(top - 1)
                ));
            }
            let expected: Vec<u32> = (2..=top - 2).chain([top]).collect();
            if table.labels() != expected {
                report.violations.push(format!(
                    "n={n}: labels {:?} != {:?}",
                    table.labels(),
                    expected
                ));
            }
            // Consequently the label 2a debuts in generation a, as the blue
            // maximum.
            let total = table.node_total();
            let expected_total = 2u64 * crate::miura::checked_pow3(n - 1)?;
            if total != expected_total {
                report
                    .violations
                    .push(format!("n={n}: {total} nodes, expected {expected_total}"));
            }
        }
        Ok(report)
    }
}

fn bump(
    map: &mut BTreeMap<u32, ColorCounts>,
    label: u32,
    color: NodeColor,
    amount: u64,
) -> Result<()> {
    let entry = map.entry(label).or_default();
    let slot = match color {
        NodeColor::Blue => &mut entry.blue,
        NodeColor::Orange => &mut entry.orange,
        NodeColor::Magenta => &mut entry.magenta,
    };
    *slot = slot.checked_add(amount).ok_or(Error::Overflow)?;
    Ok(())
}

fn checked_mul2(value: u64) -> Result<u64> {
    value.checked_mul(2).ok_or(Error::Overflow)
}

/// Outcome of re-deriving table cells from the recurrences.
#[derive(Clone, Debug, Default, Serialize)]
pub struct RecurrenceReport {
    pub cells_checked: u64,
    pub violations: Vec<String>,
}

impl RecurrenceReport {
    pub fn pass(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Outcome of the per-generation shape checks.
#[derive(Clone, Debug, Default, Serialize)]
pub struct StructuralReport {
    pub generations_checked: u64,
    pub violations: Vec<String>,
}

impl StructuralReport {
    pub fn pass(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Iterated forward differences: applies `seq[i+1] - seq[i]` `order` times.
pub fn finite_differences(values: &[i64], order: usize) -> Result<Vec<i64>> {
    if values.len() <= order {
        return Err(Error::InsufficientGenerations {
            have: values.len(),
            need: order + 1,
        });
    }
    let mut seq = values.to_vec();
    for _ in 0..order {
        seq = seq.windows(2).map(|w| w[1] - w[0]).collect();
    }
    Ok(seq)
}

/// A polynomial with exact rational coefficients, ascending powers.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Polynomial {
    coeffs: Vec<Ratio<i64>>,
}

impl Polynomial {
    pub fn coeffs(&self) -> &[Ratio<i64>] {
        &self.coeffs
    }

    pub fn degree(&self) -> usize {
        self.coeffs
            .iter()
            .rposition(|c| *c != Ratio::from_integer(0))
            .unwrap_or(0)
    }

    pub fn eval(&self, x: i64) -> Ratio<i64> {
        let x = Ratio::from_integer(x);
        self.coeffs
            .iter()
            .rev()
            .fold(Ratio::from_integer(0), |acc, &c| acc * x + c)
    }

    /// Whether the polynomial has the given integer coefficients (ascending,
    /// trailing zeros allowed).
    pub fn has_integer_coeffs(&self, expected: &[i64]) -> bool {
        let len = self.coeffs.len().max(expected.len());
        (0..len).all(|i| {
            let ours = self.coeffs.get(i).copied().unwrap_or_default();
            let theirs = Ratio::from_integer(expected.get(i).copied().unwrap_or(0));
            ours == theirs
        })
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut wrote = false;
        for (power, &c) in self.coeffs.iter().enumerate().rev() {
            if c == Ratio::from_integer(0) {
                continue;
            }
            let magnitude = if c < Ratio::from_integer(0) { -c } else { c };
            if wrote {
                f.write_str(if c < Ratio::from_integer(0) {
                    " - "
                } else {
                    " + "
                })?;
            } else if c < Ratio::from_integer(0) {
                f.write_str("-")?;
            }
            let coeff_is_one = magnitude == Ratio::from_integer(1);
            match power {
                0 => write!(f, "{magnitude}")?,
                _ => {
                    if !coeff_is_one {
                        write!(f, "{magnitude}*")?;
                    }
                    if power == 1 {
                        write!(f, "n")?;
                    } else {
                        write!(f, "n^{power}")?;
                    }
                }
            }
            wrote = true;
        }
        if !wrote {
            f.write_str("0")?;
        }
        Ok(())
    }
}

/// Fits the unique degree-`degree` polynomial through
/// `(start, values[0]), (start+1, values[1]), ...` by Newton forward
/// differences, then checks it reproduces every remaining value.
pub fn fit_polynomial(start: i64, values: &[i64], degree: usize) -> Result<Polynomial> {
    if values.len() <= degree {
        return Err(Error::InsufficientGenerations {
            have: values.len(),
            need: degree + 1,
        });
    }
    // Leading entries of the iterated difference table at the anchor.
    let mut diffs = Vec::with_capacity(degree + 1);
    let mut seq = values.to_vec();
    for _ in 0..=degree {
        diffs.push(seq[0]);
        seq = seq.windows(2).map(|w| w[1] - w[0]).collect();
    }
    // p(x) = sum_k diff_k * C(x - start, k), expanded into monomials.
    let mut coeffs = vec![Ratio::from_integer(0); degree + 1];
    let mut basis = vec![Ratio::from_integer(1)]; // C(x - start, 0)
    for (k, &diff) in diffs.iter().enumerate() {
        for (power, &b) in basis.iter().enumerate() {
            coeffs[power] += Ratio::from_integer(diff) * b;
        }
        // basis *= (x - start - k) / (k + 1)
        let shift = Ratio::from_integer(-(start + k as i64));
        let scale = Ratio::from_integer(k as i64 + 1);
        let mut next = vec![Ratio::from_integer(0); basis.len() + 1];
        for (power, &b) in basis.iter().enumerate() {
            next[power] += b * shift / scale;
            next[power + 1] += b / scale;
        }
        basis = next;
    }
    let poly = Polynomial { coeffs };
    for (i, &value) in values.iter().enumerate() {
        if poly.eval(start + i as i64) != Ratio::from_integer(value) {
            return Err(Error::Inconsistency(format!(
                "values are not polynomial of degree {degree}: mismatch at x={}",
                start + i as i64
            )));
        }
    }
    Ok(poly)
}

/// First generation of the fixed-label row for `d`: where the count becomes
/// the stable polynomial (past the generation whose maximum is `d`).
pub fn label_row_start(d: u32) -> usize {
    (d as usize).div_ceil(2) + 1
}

/// First generation of the reverse row `2n - a`, skipping the cell where
/// `2n - a = 2` hits the four fixed minimum-label nodes instead of the
/// polynomial regime.
pub fn reverse_row_start(a: u32) -> usize {
    let start = (a as usize).div_ceil(2) + 1;
    if a > 0 && 2 * start == a as usize + 2 {
        start + 1
    } else {
        start
    }
}

/// One row's polynomial-growth check.
#[derive(Clone, Debug, Serialize)]
pub struct RowCheck {
    pub parameter: u32,
    pub start: usize,
    pub values: Vec<i64>,
    pub difference_order: usize,
    pub vanished: bool,
    /// Rendered fit of the expected degree, when the row is long enough.
    pub fitted: Option<String>,
}

/// Polynomial growth of table rows in both directions.
#[derive(Clone, Debug, Serialize)]
pub struct PolynomialLawReport {
    pub label_rows: Vec<RowCheck>,
    pub reverse_rows: Vec<RowCheck>,
}

impl PolynomialLawReport {
    pub fn pass(&self) -> bool {
        self.label_rows
            .iter()
            .chain(&self.reverse_rows)
            .all(|row| row.vanished)
    }
}

/// Checks that fixed-label rows `d = 2..=d_max` are polynomials of degree
/// `d - 2` in the generation (differences of order `d - 1` vanish), and that
/// reverse rows `a = 0..=a_max` are polynomials of degree `floor(a/2)`.
pub fn polynomial_law_checks(
    forest: &DegreeForest,
    d_max: u32,
    a_max: u32,
) -> Result<PolynomialLawReport> {
    let end = forest.max_generation();
    let mut label_rows = Vec::new();
    for d in 2..=d_max {
        let start = label_row_start(d);
        let order = d as usize - 1;
        if start + order + 1 > end {
            return Err(Error::InsufficientGenerations {
                have: end,
                need: start + order + 1,
            });
        }
        let values = forest.label_row(d, start, end)?;
        let vanished = finite_differences(&values, order)?.iter().all(|&v| v == 0);
        let fitted = fit_polynomial(start as i64, &values, order.saturating_sub(1))
            .ok()
            .map(|p| p.to_string());
        label_rows.push(RowCheck {
            parameter: d,
            start,
            values,
            difference_order: order,
            vanished,
            fitted,
        });
    }
    let mut reverse_rows = Vec::new();
    for a in 0..=a_max {
        let start = reverse_row_start(a);
        let order = a as usize / 2 + 1;
        if start + order + 1 > end {
            return Err(Error::InsufficientGenerations {
                have: end,
                need: start + order + 1,
            });
        }
        let values = forest.reverse_row(a, start, end)?;
        let vanished = finite_differences(&values, order)?.iter().all(|&v| v == 0);
        let fitted = fit_polynomial(start as i64, &values, order - 1)
            .ok()
            .map(|p| p.to_string());
        reverse_rows.push(RowCheck {
            parameter: a,
            start,
            values,
            difference_order: order,
            vanished,
            fitted,
        });
    }
    Ok(PolynomialLawReport {
        label_rows,
        reverse_rows,
    })
}

/// Degree counts of generation `cols`, split into blue and non-blue by
/// inspecting actual assignments. Exponential in `cols`; used to validate
/// the color bookkeeping on small sizes.
pub fn blue_split_from_assignments(
    cols: usize,
) -> Result<(BTreeMap<u32, u64>, BTreeMap<u32, u64>)> {
    let mut blue = BTreeMap::new();
    let mut non_blue = BTreeMap::new();
    for state in MvAssignment::enumerate_valid(cols)? {
        let d = state.flip_degree() as u32;
        let bucket = if is_blue(&state) {
            &mut blue
        } else {
            &mut non_blue
        };
        *bucket.entry(d).or_insert(0) += 1;
    }
    Ok((blue, non_blue))
}

/// Sorted label deltas (descending) from a parent's flip degree to its three
/// children's.
pub fn child_degree_deltas(parent: &MvAssignment) -> Result<[i64; 3]> {
    let base = parent.flip_degree() as i64;
    let mut deltas = [0i64; 3];
    for (slot, child) in extend_assignment(parent)?.iter().enumerate() {
        deltas[slot] = child.flip_degree() as i64 - base;
    }
    deltas.sort_unstable_by(|x, y| y.cmp(x));
    Ok(deltas)
}
