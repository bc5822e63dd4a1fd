//! A bundled verification suite over the whole crate.
//!
//! [`run_verification`] re-derives every headline quantity from first
//! principles and cross-checks independent computation routes against each
//! other: enumeration against closed-form counts, graph degrees against the
//! degree forest, the distance formula against breadth-first search, crease
//! flips against vertex recolorings, and the frozen reference tables against
//! freshly generated ones. Each check is reported as a [`ClaimResult`] with
//! a stable id so callers can track individual claims across runs.
//!
//! `n_max` bounds the column counts exercised. Checks whose cost explodes
//! with size clamp themselves to an internal ceiling (noted per claim in the
//! `params` field), so large `n_max` values stay affordable.

use serde::Serialize;

use crate::coloring::{boustrophedon_path, GridColoring, HeightProfile};
use crate::error::{Error, Result};
use crate::flip_graph::{
    build_from_assignments, build_from_colorings, expected_edge_count, expected_vertex_count,
    FlipGraph,
};
use crate::forest::{
    self, blue_split_from_assignments, child_degree_deltas, extend_assignment,
    polynomial_law_checks, DegreeForest,
};
use crate::heights::{diameter_formula, max_distance_scan, minimize_bound, ofg_distance};
use crate::miura::MvAssignment;

/// Flip-degree counts for 2 to 9 columns, one row per degree; index `i`
/// holds the count at `n = i + 2`. Frozen from enumeration so regressions
/// in either the forest evolution or the graph construction surface as
/// table mismatches.
const DEGREE_TABLE: [(u32, [u64; 8]); 17] = [
    (2, [4, 4, 4, 4, 4, 4, 4, 4]),
    (3, [0, 4, 8, 12, 16, 20, 24, 28]),
    (4, [2, 8, 20, 36, 56, 80, 108, 140]),
    (5, [0, 0, 8, 36, 88, 168, 280, 428]),
    (6, [0, 2, 12, 44, 128, 296, 584, 1032]),
    (7, [0, 0, 0, 12, 80, 296, 792, 1744]),
    (8, [0, 0, 2, 16, 76, 292, 924, 2428]),
    (9, [0, 0, 0, 0, 16, 140, 680, 2396]),
    (10, [0, 0, 0, 2, 20, 116, 544, 2144]),
    (11, [0, 0, 0, 0, 0, 20, 216, 1288]),
    (12, [0, 0, 0, 0, 2, 24, 164, 900]),
    (13, [0, 0, 0, 0, 0, 0, 24, 308]),
    (14, [0, 0, 0, 0, 0, 2, 28, 220]),
    (15, [0, 0, 0, 0, 0, 0, 0, 28]),
    (16, [0, 0, 0, 0, 0, 0, 2, 32]),
    (17, [0, 0, 0, 0, 0, 0, 0, 0]),
    (18, [0, 0, 0, 0, 0, 0, 0, 2]),
];

/// Frozen counts at label `2n - a` for `a = 0..=5`, starting at the first
/// generation of the polynomial regime and running to `n = 9`.
const REVERSE_ROWS: [(u32, usize, &[i64]); 6] = [
    (0, 2, &[2, 2, 2, 2, 2, 2, 2, 2]),
    (1, 2, &[0, 0, 0, 0, 0, 0, 0, 0]),
    (2, 3, &[8, 12, 16, 20, 24, 28, 32]),
    (3, 3, &[4, 8, 12, 16, 20, 24, 28]),
    (4, 4, &[20, 44, 76, 116, 164, 220]),
    (5, 4, &[8, 36, 80, 140, 216, 308]),
];

/// One verified claim: what was checked, what was expected, what came out.
#[derive(Clone, Debug, Serialize)]
pub struct ClaimResult {
    pub id: String,
    pub params: String,
    pub expected: String,
    pub actual: String,
    pub pass: bool,
}

/// The results of one full verification run.
#[derive(Clone, Debug, Serialize)]
pub struct VerifyReport {
    pub n_max: usize,
    pub claims: Vec<ClaimResult>,
    pub pass: bool,
}

impl VerifyReport {
    pub fn failures(&self) -> Vec<&ClaimResult> {
        self.claims.iter().filter(|c| !c.pass).collect()
    }
}

struct Recorder {
    claims: Vec<ClaimResult>,
}

impl Recorder {
    /// Records one claim; `mismatches` empty means pass, otherwise the first
    /// few entries become the reported actual value.
    fn claim(&mut self, id: &str, params: String, expected: &str, mismatches: Vec<String>) {
        let pass = mismatches.is_empty();
        let actual = if pass {
            "as expected".to_string()
        } else {
            let shown: Vec<&String> = mismatches.iter().take(4).collect();
            let suffix = if mismatches.len() > 4 {
                format!(" (+{} more)", mismatches.len() - 4)
            } else {
                String::new()
            };
            format!(
                "{}{suffix}",
                shown
                    .iter()
                    .map(|s| s.as_str())
                    .collect::<Vec<_>>()
                    .join("; ")
            )
        };
        self.claims.push(ClaimResult {
            id: id.to_string(),
            params,
            expected: expected.to_string(),
            actual,
            pass,
        });
    }
}

/// Runs every claim up to `n_max` columns (at least 2) and reports each
/// outcome.
pub fn run_verification(n_max: usize) -> Result<VerifyReport> {
    if n_max < 2 {
        return Err(Error::NeedsTwoColumns { cols: n_max });
    }
    let mut rec = Recorder { claims: Vec::new() };

    // Shared artifacts: graphs up to the BFS-friendly range and a deep
    // degree forest.
    let graph_max = n_max.min(9);
    let graphs: Vec<FlipGraph> = (2..=graph_max)
        .map(build_from_assignments)
        .collect::<Result<_>>()?;
    let forest = DegreeForest::generate(20)?;

    check_vertex_count(&mut rec, n_max.min(9))?;
    check_edge_count(&mut rec, &graphs)?;
    check_connected(&mut rec, &graphs, n_max)?;
    check_degree_table(&mut rec, &graphs, &forest, n_max.min(7));
    check_frozen_degree_rows(&mut rec, &forest);
    check_min_degree_states(&mut rec, &graphs, n_max.min(7))?;
    check_max_degree_states(&mut rec, &graphs, n_max.min(7))?;
    check_missing_degree(&mut rec, &graphs, &forest, n_max.min(7))?;
    check_extension_partition(&mut rec, n_max.min(5))?;
    check_child_degree_deltas(&mut rec, n_max.min(5))?;
    check_blue_color_split(&mut rec, &forest, n_max.min(6))?;
    check_extension_recurrences(&mut rec, &forest)?;
    check_polynomial_rows(&mut rec, &forest)?;
    check_frozen_reverse_rows(&mut rec, &forest)?;
    check_bijection_round_trip(&mut rec, n_max.min(6))?;
    check_construction_agreement(&mut rec, &graphs, n_max.min(5))?;
    check_flip_recolor_commutation(&mut rec, n_max.min(5))?;
    check_cycle_weights(&mut rec, n_max)?;
    check_path_independence(&mut rec, n_max)?;
    check_height_steps(&mut rec, n_max.min(4))?;
    check_median_zero(&mut rec, n_max.min(4))?;
    check_distance_formula(&mut rec, &graphs, n_max)?;
    check_opposite_pair_distance(&mut rec, n_max.min(12))?;
    check_bfs_diameter(&mut rec, &graphs, n_max.min(7))?;
    check_max_distance_attained(&mut rec, &graphs, n_max.min(5))?;

    let pass = rec.claims.iter().all(|c| c.pass);
    Ok(VerifyReport {
        n_max,
        claims: rec.claims,
        pass,
    })
}

fn check_vertex_count(rec: &mut Recorder, max: usize) -> Result<()> {
    let mut bad = Vec::new();
    for n in 1..=max {
        let enumerated = MvAssignment::enumerate_valid(n)?.len() as u64;
        let formula = expected_vertex_count(n)?;
        if enumerated != formula {
            bad.push(format!("n={n}: enumerated {enumerated}, formula {formula}"));
        }
    }
    rec.claim(
        "vertex-count",
        format!("n = 1..={max}"),
        "enumeration finds 2*3^(n-1) locally valid assignments",
        bad,
    );
    Ok(())
}

fn check_edge_count(rec: &mut Recorder, graphs: &[FlipGraph]) -> Result<()> {
    let mut bad = Vec::new();
    for g in graphs {
        let n = g.spec().cols();
        let formula = expected_edge_count(n)?;
        if g.edge_count() != formula {
            bad.push(format!(
                "n={n}: built {}, formula {formula}",
                g.edge_count()
            ));
        }
        let checks = g.count_checks();
        if !checks.pass {
            bad.push(format!("n={n}: count checks failed: {checks:?}"));
        }
    }
    rec.claim(
        "edge-count",
        format!("n = 2..={}", graphs.len() + 1),
        "built graphs have 8(n+1)*3^(n-3) edges and consistent degree sums",
        bad,
    );
    Ok(())
}

fn check_connected(rec: &mut Recorder, graphs: &[FlipGraph], n_max: usize) -> Result<()> {
    let mut bad = Vec::new();
    let two_row_max = n_max.min(8);
    for g in graphs.iter().take(two_row_max - 1) {
        if !g.is_connected() {
            bad.push(format!("two rows, n={}: disconnected", g.spec().cols()));
        }
    }
    let three_row_max = n_max.min(4);
    for cols in 2..=three_row_max {
        let g = build_from_colorings(3, cols)?;
        if !g.is_connected() {
            bad.push(format!("three rows, n={cols}: disconnected"));
        }
    }
    rec.claim(
        "connected",
        format!("two rows n = 2..={two_row_max}; three rows n = 2..={three_row_max}"),
        "every flip graph is connected",
        bad,
    );
    Ok(())
}

fn check_degree_table(rec: &mut Recorder, graphs: &[FlipGraph], forest: &DegreeForest, max: usize) {
    let mut bad = Vec::new();
    for g in graphs.iter().take(max - 1) {
        let n = g.spec().cols();
        let table = forest.table(n).expect("forest generated past max");
        if !table.matches_degree_distribution(&g.degree_distribution()) {
            bad.push(format!(
                "n={n}: graph {:?} vs forest {:?}",
                g.degree_distribution(),
                table.totals()
            ));
        }
    }
    rec.claim(
        "degree-table",
        format!("n = 2..={max}"),
        "flip-graph degree distributions equal degree-forest generations",
        bad,
    );
}

fn check_frozen_degree_rows(rec: &mut Recorder, forest: &DegreeForest) {
    let mut bad = Vec::new();
    for n in 2..=9usize {
        let table = forest.table(n).expect("forest generated past 9");
        for &(d, ref row) in &DEGREE_TABLE {
            let expected = row[n - 2];
            if table.count(d) != expected {
                bad.push(format!(
                    "n={n}, d={d}: forest {}, frozen {expected}",
                    table.count(d)
                ));
            }
        }
        let listed: u64 = DEGREE_TABLE.iter().map(|(_, row)| row[n - 2]).sum();
        if listed != table.node_total() {
            bad.push(format!(
                "n={n}: frozen rows sum to {listed}, generation holds {}",
                table.node_total()
            ));
        }
    }
    rec.claim(
        "frozen-degree-rows",
        "n = 2..=9, d = 2..=18".to_string(),
        "degree-forest generations match the frozen degree table",
        bad,
    );
}

fn check_min_degree_states(rec: &mut Recorder, graphs: &[FlipGraph], max: usize) -> Result<()> {
    let mut bad = Vec::new();
    for g in graphs.iter().take(max - 1) {
        let n = g.spec().cols();
        let mut expected: Vec<usize> = MvAssignment::degree_two_assignments(n)?
            .iter()
            .map(|a| g.find_assignment(a).expect("state present"))
            .collect();
        expected.sort_unstable();
        let found = g.degree_two_states();
        if found != expected {
            bad.push(format!("n={n}: degree-2 states {found:?} != {expected:?}"));
            continue;
        }
        for a in MvAssignment::degree_two_assignments(n)? {
            let faces: Vec<(usize, usize)> =
                a.flippable_faces().iter().map(|f| (f.row, f.col)).collect();
            let ok = faces == [(1, 1), (2, n)] || faces == [(1, n), (2, 1)];
            if !ok {
                bad.push(format!("n={n}, {a}: flippable faces {faces:?}"));
            }
        }
    }
    rec.claim(
        "min-degree-states",
        format!("n = 2..={max}"),
        "exactly the four diagonal-row states have degree 2, flippable only at opposite corners",
        bad,
    );
    Ok(())
}

fn check_max_degree_states(rec: &mut Recorder, graphs: &[FlipGraph], max: usize) -> Result<()> {
    let mut bad = Vec::new();
    for g in graphs.iter().take(max - 1) {
        let n = g.spec().cols();
        let top = 2 * n;
        let distribution = g.degree_distribution();
        if distribution.get(&top) != Some(&2) {
            bad.push(format!(
                "n={n}: {} states of degree {top}",
                distribution.get(&top).unwrap_or(&0)
            ));
            continue;
        }
        let maxed: Vec<MvAssignment> = (0..g.vertex_count())
            .filter(|&i| g.degree(i).unwrap() == top)
            .map(|i| g.state_label(i).unwrap().parse().unwrap())
            .collect();
        if maxed[0].opposite() != maxed[1] {
            bad.push(format!("n={n}: maximum-degree states are not opposites"));
        }
    }
    rec.claim(
        "max-degree-states",
        format!("n = 2..={max}"),
        "exactly one opposite pair of states attains the maximum degree 2n",
        bad,
    );
    Ok(())
}

fn check_missing_degree(
    rec: &mut Recorder,
    graphs: &[FlipGraph],
    forest: &DegreeForest,
    max: usize,
) -> Result<()> {
    let mut bad = Vec::new();
    for g in graphs.iter().take(max - 1) {
        let n = g.spec().cols();
        if g.degree_distribution().contains_key(&(2 * n - 1)) {
            bad.push(format!("n={n}: graph has a state of degree {}", 2 * n - 1));
        }
    }
    let structural = forest.structural_checks(20)?;
    bad.extend(structural.violations.iter().cloned());
    rec.claim(
        "degree-support",
        format!("graphs n = 2..={max}; forest generations 2..=20"),
        "degrees fill {2,...,2n-2} and 2n, skip 2n-1, with four at 2 and two at 2n",
        bad,
    );
    Ok(())
}

fn check_extension_partition(rec: &mut Recorder, max: usize) -> Result<()> {
    let mut bad = Vec::new();
    for n in 1..=max {
        let mut children: Vec<MvAssignment> = Vec::new();
        for parent in MvAssignment::enumerate_valid(n)? {
            children.extend(extend_assignment(&parent)?);
        }
        children.sort();
        let direct = MvAssignment::enumerate_valid(n + 1)?;
        if children != direct {
            bad.push(format!("n={n}: extensions do not partition size n+1"));
        }
    }
    rec.claim(
        "extension-partition",
        format!("n = 1..={max}"),
        "the three extensions of generation n exactly cover generation n+1",
        bad,
    );
    Ok(())
}

fn check_child_degree_deltas(rec: &mut Recorder, max: usize) -> Result<()> {
    let mut bad = Vec::new();
    for n in 1..=max {
        for parent in MvAssignment::enumerate_valid(n)? {
            let deltas = child_degree_deltas(&parent)?;
            let expected = if forest::is_blue(&parent) {
                [2, 0, 0]
            } else {
                [2, 1, 0]
            };
            if deltas != expected {
                bad.push(format!(
                    "n={n}, {parent}: deltas {deltas:?}, want {expected:?}"
                ));
            }
        }
    }
    rec.claim(
        "child-degree-deltas",
        format!("n = 1..={max}"),
        "children shift the flip degree by {+2,0,0} after a +2 step, else {+2,+1,0}",
        bad,
    );
    Ok(())
}

fn check_blue_color_split(rec: &mut Recorder, forest: &DegreeForest, max: usize) -> Result<()> {
    let mut bad = Vec::new();
    for n in 2..=max {
        let (blue, non_blue) = blue_split_from_assignments(n)?;
        let table = forest.table(n)?;
        for d in 0..=(2 * n as u32) {
            if table.blue_count(d) != blue.get(&d).copied().unwrap_or(0)
                || table.non_blue_count(d) != non_blue.get(&d).copied().unwrap_or(0)
            {
                bad.push(format!("n={n}, d={d}: color split disagrees"));
            }
        }
    }
    rec.claim(
        "blue-color-split",
        format!("n = 2..={max}"),
        "forest color counts match classifying assignments by their last vertex triple",
        bad,
    );
    Ok(())
}

fn check_extension_recurrences(rec: &mut Recorder, forest: &DegreeForest) -> Result<()> {
    let report = forest.verify_recurrences(3, 20)?;
    rec.claim(
        "extension-recurrences",
        format!("generations 3..=20, {} cells", report.cells_checked),
        "blue, non-blue, and total counts satisfy the two-step recurrences",
        report.violations,
    );
    Ok(())
}

fn check_polynomial_rows(rec: &mut Recorder, forest: &DegreeForest) -> Result<()> {
    let report = polynomial_law_checks(forest, 10, 6)?;
    let bad: Vec<String> = report
        .label_rows
        .iter()
        .filter(|r| !r.vanished)
        .map(|r| {
            format!(
                "d={}: differences of order {} persist",
                r.parameter, r.difference_order
            )
        })
        .collect();
    rec.claim(
        "degree-polynomial-rows",
        "d = 2..=10 over generations to 20".to_string(),
        "fixed-degree counts grow as polynomials of degree d-2 in n",
        bad,
    );
    let bad: Vec<String> = report
        .reverse_rows
        .iter()
        .filter(|r| !r.vanished)
        .map(|r| {
            format!(
                "a={}: differences of order {} persist",
                r.parameter, r.difference_order
            )
        })
        .collect();
    rec.claim(
        "reverse-degree-polynomial-rows",
        "a = 0..=6 over generations to 20".to_string(),
        "counts at degree 2n-a grow as polynomials of degree floor(a/2) in n",
        bad,
    );
    let d3 = report
        .label_rows
        .iter()
        .find(|r| r.parameter == 3)
        .expect("d=3 row present");
    let mut bad = Vec::new();
    if d3.fitted.as_deref() != Some("4*n - 8") {
        bad.push(format!("fit came out as {:?}", d3.fitted));
    }
    rec.claim(
        "degree-row-linear-fit",
        format!("d = 3, n = {}..=20", d3.start),
        "the degree-3 row fits 4*n - 8 exactly",
        bad,
    );
    Ok(())
}

fn check_frozen_reverse_rows(rec: &mut Recorder, forest: &DegreeForest) -> Result<()> {
    let mut bad = Vec::new();
    for &(a, start, expected) in &REVERSE_ROWS {
        let row = forest.reverse_row(a, start, 9)?;
        if row != expected {
            bad.push(format!("a={a}: {row:?} != {expected:?}"));
        }
    }
    rec.claim(
        "frozen-reverse-rows",
        "a = 0..=5, generations to 9".to_string(),
        "counts at degree 2n-a match the frozen reverse table",
        bad,
    );
    Ok(())
}

fn check_bijection_round_trip(rec: &mut Recorder, max: usize) -> Result<()> {
    let mut bad = Vec::new();
    for n in 1..=max {
        for mv in MvAssignment::enumerate_valid(n)? {
            let coloring = GridColoring::from_assignment(&mv)?;
            if coloring.to_assignment()? != mv {
                bad.push(format!("n={n}: {mv} does not round-trip"));
            }
        }
        for coloring in GridColoring::enumerate_canonical(2, n)? {
            let back = GridColoring::from_assignment(&coloring.to_assignment()?)?;
            if back != coloring {
                bad.push(format!(
                    "n={n}: coloring {} does not round-trip",
                    coloring.to_compact()
                ));
            }
        }
    }
    rec.claim(
        "bijection-round-trip",
        format!("n = 1..={max}, both directions"),
        "assignments and canonical colorings translate back and forth losslessly",
        bad,
    );
    Ok(())
}

fn check_construction_agreement(
    rec: &mut Recorder,
    graphs: &[FlipGraph],
    max: usize,
) -> Result<()> {
    let mut bad = Vec::new();
    for ga in graphs.iter().take(max - 1) {
        let n = ga.spec().cols();
        let gc = build_from_colorings(2, n)?;
        if ga.vertex_count() != gc.vertex_count() || ga.edge_count() != gc.edge_count() {
            bad.push(format!("n={n}: sizes differ between construction routes"));
            continue;
        }
        for i in 0..ga.vertex_count() {
            let mv: MvAssignment = ga.state_label(i)?.parse()?;
            let j = gc
                .find_coloring(&GridColoring::from_assignment(&mv)?)
                .expect("translated state present");
            let mapped: Vec<usize> = ga
                .neighbors(i)?
                .iter()
                .map(|&k| {
                    let mv: MvAssignment = ga.state_label(k as usize).unwrap().parse().unwrap();
                    gc.find_coloring(&GridColoring::from_assignment(&mv).unwrap())
                        .expect("translated neighbor present")
                })
                .collect();
            let mut mapped_sorted = mapped.clone();
            mapped_sorted.sort_unstable();
            let theirs: Vec<usize> = gc.neighbors(j)?.iter().map(|&k| k as usize).collect();
            if mapped_sorted != theirs {
                bad.push(format!("n={n}: neighborhoods differ at state {i}"));
                break;
            }
        }
    }
    rec.claim(
        "construction-agreement",
        format!("n = 2..={max}"),
        "crease-flip and recoloring constructions build isomorphic graphs under translation",
        bad,
    );
    Ok(())
}

fn check_flip_recolor_commutation(rec: &mut Recorder, max: usize) -> Result<()> {
    let mut bad = Vec::new();
    for n in 1..=max {
        for mv in MvAssignment::enumerate_valid(n)? {
            let coloring = GridColoring::from_assignment(&mv)?;
            for face in mv.spec().faces().collect::<Vec<_>>() {
                let (r, c) = (face.row - 1, face.col - 1);
                let current = coloring.get(r, c);
                let recolored: Vec<GridColoring> = (0..3u8)
                    .filter(|&color| color != current)
                    .filter_map(|color| coloring.recolored(r, c, color).ok())
                    .collect();
                let flippable = mv.is_flippable(face)?;
                if flippable != (recolored.len() == 1) {
                    bad.push(format!(
                        "n={n}, {mv}, face ({},{}): flip and recolor disagree on legality",
                        face.row, face.col
                    ));
                    continue;
                }
                if flippable {
                    let flipped = GridColoring::from_assignment(&mv.flip_face(face)?)?;
                    if recolored[0].canonicalize() != flipped {
                        bad.push(format!(
                            "n={n}, {mv}, face ({},{}): flip and recolor land on different states",
                            face.row, face.col
                        ));
                    }
                }
            }
        }
    }
    rec.claim(
        "flip-recolor-commutation",
        format!("n = 1..={max}, every state and face"),
        "flipping a face equals recoloring its grid cell through the translation",
        bad,
    );
    Ok(())
}

fn cycle_weight_grids(n_max: usize) -> Vec<(usize, usize)> {
    let mut grids: Vec<(usize, usize)> = (2..=n_max.min(6)).map(|n| (2, n)).collect();
    grids.push((3, 3));
    grids.push((3, 4));
    grids
}

fn check_cycle_weights(rec: &mut Recorder, n_max: usize) -> Result<()> {
    let mut bad = Vec::new();
    let grids = cycle_weight_grids(n_max);
    for &(rows, cols) in &grids {
        for coloring in GridColoring::enumerate_all(rows, cols)? {
            for r in 0..rows - 1 {
                for c in 0..cols - 1 {
                    let square = [(r, c), (r, c + 1), (r + 1, c + 1), (r + 1, c), (r, c)];
                    if coloring.path_weight(&square)? != 0 {
                        bad.push(format!(
                            "{rows}x{cols} {}: unit square at ({r},{c}) has nonzero weight",
                            coloring.to_compact()
                        ));
                    }
                }
            }
            let mut boundary: Vec<(usize, usize)> = Vec::new();
            boundary.extend((0..cols).map(|c| (0, c)));
            boundary.extend((1..rows).map(|r| (r, cols - 1)));
            boundary.extend((0..cols - 1).rev().map(|c| (rows - 1, c)));
            boundary.extend((1..rows - 1).rev().map(|r| (r, 0)));
            boundary.push((0, 0));
            if coloring.path_weight(&boundary)? != 0 {
                bad.push(format!(
                    "{rows}x{cols} {}: boundary cycle has nonzero weight",
                    coloring.to_compact()
                ));
            }
        }
    }
    rec.claim(
        "cycle-weight-zero",
        format!("grids {grids:?}, every proper coloring"),
        "edge weights sum to zero around unit squares and the boundary",
        bad,
    );
    Ok(())
}

fn check_path_independence(rec: &mut Recorder, n_max: usize) -> Result<()> {
    let mut bad = Vec::new();
    let grids = cycle_weight_grids(n_max);
    for &(rows, cols) in &grids {
        for coloring in GridColoring::enumerate_canonical(rows, cols)? {
            for (r1, c1) in [(0usize, 0usize), (rows - 1, cols - 1)] {
                for r2 in 0..rows {
                    for c2 in 0..cols {
                        let row_first = l_path((r1, c1), (r2, c2), true);
                        let col_first = l_path((r1, c1), (r2, c2), false);
                        if coloring.path_weight(&row_first)? != coloring.path_weight(&col_first)? {
                            bad.push(format!(
                                "{rows}x{cols} {}: L-paths ({r1},{c1})->({r2},{c2}) disagree",
                                coloring.to_compact()
                            ));
                        }
                    }
                }
            }
        }
    }
    rec.claim(
        "path-independence",
        format!("grids {grids:?}, L-path pairs from both corners"),
        "path weight between two cells does not depend on the route",
        bad,
    );
    Ok(())
}

/// Axis-aligned path between two cells, stepping through rows first or
/// columns first.
fn l_path(from: (usize, usize), to: (usize, usize), rows_first: bool) -> Vec<(usize, usize)> {
    let mut path = vec![from];
    let mut cur = from;
    let walk_rows = |path: &mut Vec<(usize, usize)>, cur: &mut (usize, usize)| {
        while cur.0 != to.0 {
            cur.0 = if cur.0 < to.0 { cur.0 + 1 } else { cur.0 - 1 };
            path.push(*cur);
        }
    };
    let walk_cols = |path: &mut Vec<(usize, usize)>, cur: &mut (usize, usize)| {
        while cur.1 != to.1 {
            cur.1 = if cur.1 < to.1 { cur.1 + 1 } else { cur.1 - 1 };
            path.push(*cur);
        }
    };
    if rows_first {
        walk_rows(&mut path, &mut cur);
        walk_cols(&mut path, &mut cur);
    } else {
        walk_cols(&mut path, &mut cur);
        walk_rows(&mut path, &mut cur);
    }
    path
}

fn check_height_steps(rec: &mut Recorder, max: usize) -> Result<()> {
    let mut bad = Vec::new();
    for n in 2..=max {
        let states = MvAssignment::enumerate_valid(n)?;
        let colorings: Vec<GridColoring> = states
            .iter()
            .map(GridColoring::from_assignment)
            .collect::<Result<_>>()?;
        let path = boustrophedon_path(2, n);
        for from in &colorings {
            for to in &colorings {
                let profile = HeightProfile::between(from, to)?;
                if profile.values().iter().any(|v| v % 2 != 0) {
                    bad.push(format!("n={n}: odd height value"));
                }
                for w in path.windows(2) {
                    let step = profile.get(w[1].0, w[1].1) - profile.get(w[0].0, w[0].1);
                    if ![-2, 0, 2].contains(&step) {
                        bad.push(format!("n={n}: height step {step}"));
                    }
                }
                let rotated = HeightProfile::between(&from.rotated(1), &to.rotated(1))?;
                if rotated.values() != profile.values() {
                    bad.push(format!("n={n}: profile changes under rotation"));
                }
            }
        }
    }
    rec.claim(
        "height-steps",
        format!("n = 2..={max}, all state pairs"),
        "height profiles are even, move in steps of at most 2, and ignore rotations",
        bad,
    );
    Ok(())
}

fn check_median_zero(rec: &mut Recorder, max: usize) -> Result<()> {
    let mut bad = Vec::new();
    for n in 2..=max {
        let colorings: Vec<GridColoring> = MvAssignment::enumerate_valid(n)?
            .iter()
            .map(GridColoring::from_assignment)
            .collect::<Result<_>>()?;
        for from in &colorings {
            for to in &colorings {
                let profile = HeightProfile::between(from, to)?;
                let (height, _) = minimize_bound(&profile, None)?;
                let shifted: Vec<i64> = profile
                    .values()
                    .iter()
                    .map(|v| v + height.value())
                    .collect();
                let half = shifted.len().div_ceil(2);
                let at_most = shifted.iter().filter(|&&v| v <= 0).count();
                let at_least = shifted.iter().filter(|&&v| v >= 0).count();
                if at_most < half || at_least < half {
                    bad.push(format!("n={n}: minimizing height is not a zero median"));
                }
            }
        }
    }
    rec.claim(
        "median-zero",
        format!("n = 2..={max}, all state pairs"),
        "the unrestricted minimizing height centers the profile on a zero median",
        bad,
    );
    Ok(())
}

fn check_distance_formula(rec: &mut Recorder, graphs: &[FlipGraph], n_max: usize) -> Result<()> {
    let mut bad = Vec::new();
    let exhaustive_max = n_max.min(5);
    for g in graphs.iter().take(exhaustive_max - 1) {
        let n = g.spec().cols();
        let states: Vec<MvAssignment> = (0..g.vertex_count())
            .map(|i| g.state_label(i).unwrap().parse().unwrap())
            .collect();
        for (i, from) in states.iter().enumerate() {
            let bfs = g.bfs_distances(i)?;
            for (j, to) in states.iter().enumerate().skip(i + 1) {
                let formula = ofg_distance(from, to)?;
                if formula != bfs[j] as u64 {
                    bad.push(format!(
                        "n={n}, {from} -> {to}: formula {formula}, BFS {}",
                        bfs[j]
                    ));
                }
            }
        }
    }
    let sampled: Vec<usize> = (6..=n_max.min(7)).collect();
    for &n in &sampled {
        let g = &graphs[n - 2];
        let states: Vec<MvAssignment> = (0..g.vertex_count())
            .map(|i| g.state_label(i).unwrap().parse().unwrap())
            .collect();
        let v = g.vertex_count();
        for s in 0..48 {
            let i = s * v / 48;
            let bfs = g.bfs_distances(i)?;
            for t in 0..40 {
                let j = ((s + 1) * 7919 * (t + 1)) % v;
                let formula = ofg_distance(&states[i], &states[j])?;
                if formula != bfs[j] as u64 {
                    bad.push(format!(
                        "n={n}, {} -> {}: formula {formula}, BFS {}",
                        states[i], states[j], bfs[j]
                    ));
                }
            }
        }
    }
    let params = if sampled.is_empty() {
        format!("all pairs for n = 2..={exhaustive_max}")
    } else {
        format!("all pairs for n = 2..={exhaustive_max}; strided samples for {sampled:?}")
    };
    rec.claim(
        "distance-formula-vs-bfs",
        params,
        "the height-minimization distance equals graph distance",
        bad,
    );
    Ok(())
}

fn check_opposite_pair_distance(rec: &mut Recorder, max: usize) -> Result<()> {
    let mut bad = Vec::new();
    for n in 2..=max {
        let formula = diameter_formula(n)?;
        let expected = (n as u64 * n as u64).div_ceil(2);
        if formula != expected {
            bad.push(format!(
                "n={n}: formula {formula} != ceil(n^2/2) = {expected}"
            ));
        }
        for pair in MvAssignment::degree_two_assignments(n)?.chunks(2) {
            let distance = ofg_distance(&pair[0], &pair[1])?;
            if distance != expected {
                bad.push(format!(
                    "n={n}: opposite pair at distance {distance}, want {expected}"
                ));
            }
        }
    }
    rec.claim(
        "opposite-pair-distance",
        format!("n = 2..={max}, both opposite degree-2 pairs"),
        "opposite degree-2 states sit at distance ceil(n^2/2)",
        bad,
    );
    Ok(())
}

fn check_bfs_diameter(rec: &mut Recorder, graphs: &[FlipGraph], max: usize) -> Result<()> {
    let mut bad = Vec::new();
    for g in graphs.iter().take(max - 1) {
        let n = g.spec().cols();
        let (diameter, _) = g.diameter_bfs()?;
        let formula = diameter_formula(n)?;
        if diameter as u64 != formula {
            bad.push(format!("n={n}: BFS diameter {diameter}, formula {formula}"));
        }
    }
    rec.claim(
        "bfs-diameter",
        format!("n = 2..={max}"),
        "exhaustive BFS reproduces the ceil(n^2/2) diameter",
        bad,
    );
    Ok(())
}

fn check_max_distance_attained(rec: &mut Recorder, graphs: &[FlipGraph], max: usize) -> Result<()> {
    let mut bad = Vec::new();
    for g in graphs.iter().take(max - 1) {
        let n = g.spec().cols();
        let scan = max_distance_scan(g)?;
        let formula = diameter_formula(n)?;
        if scan.max != formula {
            bad.push(format!("n={n}: scan max {} != {formula}", scan.max));
        }
        if !scan.opposite_degree_two_attains {
            bad.push(format!(
                "n={n}: no opposite degree-2 pair among the witnesses"
            ));
        }
    }
    rec.claim(
        "max-distance-attained",
        format!("n = 2..={max}, every pair via the formula"),
        "the maximum formula distance is the diameter and opposite degree-2 pairs attain it",
        bad,
    );
    Ok(())
}
