//! End-to-end gate for the whole crate: every headline result is recomputed
//! from scratch and cross-checked, one test per criterion, each printing a
//! single `[PASS]`/`[FAIL]` line (visible with `--nocapture`).

use std::collections::BTreeMap;
use std::panic::{catch_unwind, resume_unwind, AssertUnwindSafe};
use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use miura_ofg::coloring::{boustrophedon_path, GridColoring, HeightProfile};
use miura_ofg::flip_graph::{
    build_from_assignments, build_from_colorings, expected_edge_count, expected_vertex_count,
};
use miura_ofg::forest::{fit_polynomial, polynomial_law_checks, DegreeForest};
use miura_ofg::heights::{diameter_formula, minimize_bound, ofg_distance};
use miura_ofg::miura::MvAssignment;

fn report<F: FnOnce()>(criterion: &str, check: F) {
    let result = catch_unwind(AssertUnwindSafe(check));
    match &result {
        Ok(()) => println!("[PASS] {criterion}"),
        Err(_) => println!("[FAIL] {criterion}"),
    }
    if let Err(panic) = result {
        resume_unwind(panic);
    }
}

/// Flip-degree counts for n = 2..=9; row (d, counts), counts[i] at n = i+2.
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

/// Counts at degree 2n - a for a = 0..=5: (a, first n, values through n = 9).
const REVERSE_ROWS: [(u32, usize, &[i64]); 6] = [
    (0, 2, &[2, 2, 2, 2, 2, 2, 2, 2]),
    (1, 2, &[0, 0, 0, 0, 0, 0, 0, 0]),
    (2, 3, &[8, 12, 16, 20, 24, 28, 32]),
    (3, 3, &[4, 8, 12, 16, 20, 24, 28]),
    (4, 4, &[20, 44, 76, 116, 164, 220]),
    (5, 4, &[8, 36, 80, 140, 216, 308]),
];

#[test]
fn state_counts_match_the_closed_form() {
    report(
        "state counts: enumeration finds 2*3^(n-1) assignments for n = 1..=9 within 10s",
        || {
            let start = Instant::now();
            for n in 1..=9 {
                let states = MvAssignment::enumerate_valid(n).unwrap();
                assert_eq!(
                    states.len() as u64,
                    expected_vertex_count(n).unwrap(),
                    "n={n}"
                );
                assert!(states.windows(2).all(|w| w[0] < w[1]), "n={n}: unsorted");
            }
            assert!(start.elapsed().as_secs() < 10, "took {:?}", start.elapsed());
        },
    );
}

#[test]
fn edge_counts_match_the_closed_form() {
    report(
        "edge counts: graphs carry 8(n+1)*3^(n-3) edges with consistent degree sums for n = 2..=9",
        || {
            for n in 2..=9 {
                let graph = build_from_assignments(n).unwrap();
                assert_eq!(graph.edge_count(), expected_edge_count(n).unwrap(), "n={n}");
                let checks = graph.count_checks();
                assert!(checks.pass, "n={n}: {checks:?}");
            }
        },
    );
}

#[test]
fn degree_tables_match_the_frozen_reference() {
    report(
        "degree tables: graph and forest distributions reproduce the frozen table for n = 2..=9",
        || {
            let forest = DegreeForest::generate(9).unwrap();
            for n in 2..=9usize {
                let graph = build_from_assignments(n).unwrap();
                let distribution = graph.degree_distribution();
                for &(d, ref row) in &DEGREE_TABLE {
                    let expected = row[n - 2];
                    let graph_count = distribution.get(&(d as usize)).copied().unwrap_or(0);
                    assert_eq!(graph_count, expected, "graph n={n} d={d}");
                    assert_eq!(forest.count(n, d).unwrap(), expected, "forest n={n} d={d}");
                }
                let listed: u64 = DEGREE_TABLE.iter().map(|(_, row)| row[n - 2]).sum();
                assert_eq!(
                    listed,
                    graph.vertex_count() as u64,
                    "n={n}: rows incomplete"
                );
            }
        },
    );
}

#[test]
fn degree_structure_holds_deep_into_the_forest() {
    report(
        "degree structure: four at 2, two at 2n, none at 2n-1, support {2..2n-2} U {2n} for n = 2..=20",
        || {
            let forest = DegreeForest::generate(20).unwrap();
            let outcome = forest.structural_checks(20).unwrap();
            assert!(outcome.pass(), "{:?}", outcome.violations);
            assert_eq!(outcome.generations_checked, 19);
        },
    );
}

#[test]
fn recurrences_rebuild_every_generation() {
    report(
        "recurrences: blue/non-blue/total identities re-derive generations 3..=20",
        || {
            let forest = DegreeForest::generate(20).unwrap();
            let outcome = forest.verify_recurrences(3, 20).unwrap();
            assert!(outcome.pass(), "{:?}", outcome.violations);
        },
    );
}

#[test]
fn polynomial_growth_laws_hold() {
    report(
        "polynomial growth: difference laws for d <= 10 and a <= 6, the 4n-8 fit, frozen reverse rows",
        || {
            let forest = DegreeForest::generate(20).unwrap();
            let laws = polynomial_law_checks(&forest, 10, 6).unwrap();
            assert!(laws.pass());
            let d3 = forest.label_row(3, 3, 20).unwrap();
            let fit = fit_polynomial(3, &d3, 1).unwrap();
            assert!(fit.has_integer_coeffs(&[-8, 4]));
            assert_eq!(fit.to_string(), "4*n - 8");
            for &(a, start, expected) in &REVERSE_ROWS {
                assert_eq!(forest.reverse_row(a, start, 9).unwrap(), expected, "a={a}");
            }
        },
    );
}

#[test]
fn bijection_and_construction_routes_agree() {
    report(
        "bijection: lossless round trips and isomorphic construction routes for n <= 6",
        || {
            for n in 1..=6 {
                let states = MvAssignment::enumerate_valid(n).unwrap();
                for mv in &states {
                    let coloring = GridColoring::from_assignment(mv).unwrap();
                    assert!(coloring.is_canonical());
                    assert_eq!(&coloring.to_assignment().unwrap(), mv, "n={n}");
                }
                let canonical = GridColoring::enumerate_canonical(2, n).unwrap();
                assert_eq!(canonical.len(), states.len(), "n={n}: not a bijection");
                for coloring in &canonical {
                    let back =
                        GridColoring::from_assignment(&coloring.to_assignment().unwrap()).unwrap();
                    assert_eq!(&back, coloring, "n={n}");
                }
            }
            for n in 2..=6 {
                let by_flips = build_from_assignments(n).unwrap();
                let by_recoloring = build_from_colorings(2, n).unwrap();
                assert_eq!(by_flips.vertex_count(), by_recoloring.vertex_count());
                assert_eq!(by_flips.edge_count(), by_recoloring.edge_count());
                let translate = |i: usize| -> usize {
                    let mv: MvAssignment = by_flips.state_label(i).unwrap().parse().unwrap();
                    by_recoloring
                        .find_coloring(&GridColoring::from_assignment(&mv).unwrap())
                        .unwrap()
                };
                for i in 0..by_flips.vertex_count() {
                    let mut mapped: Vec<usize> = by_flips
                        .neighbors(i)
                        .unwrap()
                        .iter()
                        .map(|&k| translate(k as usize))
                        .collect();
                    mapped.sort_unstable();
                    let expected: Vec<usize> = by_recoloring
                        .neighbors(translate(i))
                        .unwrap()
                        .iter()
                        .map(|&k| k as usize)
                        .collect();
                    assert_eq!(mapped, expected, "n={n}, state {i}");
                }
            }
        },
    );
}

#[test]
fn distance_formula_equals_bfs() {
    report(
        "distance formula: equals BFS on all pairs for n <= 5 and 5000 seeded pairs each for n = 6, 7 within 60s",
        || {
            let start = Instant::now();
            for n in 2..=5 {
                let graph = build_from_assignments(n).unwrap();
                let states: Vec<MvAssignment> = (0..graph.vertex_count())
                    .map(|i| graph.state_label(i).unwrap().parse().unwrap())
                    .collect();
                for (i, from) in states.iter().enumerate() {
                    let bfs = graph.bfs_distances(i).unwrap();
                    for (j, to) in states.iter().enumerate().skip(i) {
                        assert_eq!(
                            ofg_distance(from, to).unwrap(),
                            bfs[j] as u64,
                            "n={n}, {from} -> {to}"
                        );
                    }
                }
            }
            for n in [6usize, 7] {
                let graph = build_from_assignments(n).unwrap();
                let states: Vec<MvAssignment> = (0..graph.vertex_count())
                    .map(|i| graph.state_label(i).unwrap().parse().unwrap())
                    .collect();
                let mut rng = ChaCha8Rng::seed_from_u64(0x0f1a + n as u64);
                for _ in 0..100 {
                    let i = rng.gen_range(0..states.len());
                    let bfs = graph.bfs_distances(i).unwrap();
                    for _ in 0..50 {
                        let j = rng.gen_range(0..states.len());
                        assert_eq!(
                            ofg_distance(&states[i], &states[j]).unwrap(),
                            bfs[j] as u64,
                            "n={n}, {} -> {}",
                            states[i],
                            states[j]
                        );
                    }
                }
            }
            assert!(start.elapsed().as_secs() < 60, "took {:?}", start.elapsed());
        },
    );
}

#[test]
fn diameter_matches_the_formula() {
    report(
        "diameter: BFS equals ceil(n^2/2) for n = 2..=7 and opposite degree-2 pairs attain it",
        || {
            assert_eq!(diameter_formula(3).unwrap(), 5);
            for n in 2..=12 {
                assert_eq!(
                    diameter_formula(n).unwrap(),
                    (n as u64 * n as u64).div_ceil(2),
                    "n={n}"
                );
            }
            for n in 2..=7 {
                let graph = build_from_assignments(n).unwrap();
                let formula = diameter_formula(n).unwrap();
                let (diameter, _) = graph.diameter_bfs().unwrap();
                assert_eq!(diameter as u64, formula, "n={n}");
                for pair in MvAssignment::degree_two_assignments(n).unwrap().chunks(2) {
                    let i = graph.find_assignment(&pair[0]).unwrap();
                    let j = graph.find_assignment(&pair[1]).unwrap();
                    let bfs = graph.bfs_distances(i).unwrap();
                    assert_eq!(bfs[j] as u64, formula, "n={n}: pair misses the diameter");
                }
            }
        },
    );
}

#[test]
#[ignore = "slow tier: eight-column exhaustive diameter"]
fn diameter_matches_the_formula_at_eight_columns() {
    report("diameter: BFS equals ceil(n^2/2) at n = 8", || {
        let graph = build_from_assignments(8).unwrap();
        let (diameter, _) = graph.diameter_bfs().unwrap();
        assert_eq!(diameter as u64, diameter_formula(8).unwrap());
    });
}

fn random_proper_coloring(rng: &mut ChaCha8Rng, rows: usize, cols: usize) -> GridColoring {
    let mut colors = vec![0u8; rows * cols];
    for r in 0..rows {
        for c in 0..cols {
            let options: Vec<u8> = (0..3u8)
                .filter(|&color| {
                    (c == 0 || colors[r * cols + c - 1] != color)
                        && (r == 0 || colors[(r - 1) * cols + c] != color)
                })
                .collect();
            colors[r * cols + c] = options[rng.gen_range(0..options.len())];
        }
    }
    GridColoring::new(rows, cols, colors).unwrap()
}

fn l_path(from: (usize, usize), to: (usize, usize), rows_first: bool) -> Vec<(usize, usize)> {
    let mut path = vec![from];
    let mut cur = from;
    let step_rows = |path: &mut Vec<(usize, usize)>, cur: &mut (usize, usize)| {
        while cur.0 != to.0 {
            cur.0 = if cur.0 < to.0 { cur.0 + 1 } else { cur.0 - 1 };
            path.push(*cur);
        }
    };
    let step_cols = |path: &mut Vec<(usize, usize)>, cur: &mut (usize, usize)| {
        while cur.1 != to.1 {
            cur.1 = if cur.1 < to.1 { cur.1 + 1 } else { cur.1 - 1 };
            path.push(*cur);
        }
    };
    if rows_first {
        step_rows(&mut path, &mut cur);
        step_cols(&mut path, &mut cur);
    } else {
        step_cols(&mut path, &mut cur);
        step_rows(&mut path, &mut cur);
    }
    path
}

#[test]
fn height_accounting_is_consistent() {
    report(
        "heights: zero cycle weights, path independence, even +-2 steps, zero median at the optimum",
        || {
            let mut rng = ChaCha8Rng::seed_from_u64(0x8e15);
            for (rows, cols) in [(2usize, 5usize), (3, 4), (4, 4)] {
                for _ in 0..1000 {
                    let coloring = random_proper_coloring(&mut rng, rows, cols);
                    for r in 0..rows - 1 {
                        for c in 0..cols - 1 {
                            let square = [(r, c), (r, c + 1), (r + 1, c + 1), (r + 1, c), (r, c)];
                            assert_eq!(coloring.path_weight(&square).unwrap(), 0);
                        }
                    }
                    let mut boundary: Vec<(usize, usize)> = Vec::new();
                    boundary.extend((0..cols).map(|c| (0, c)));
                    boundary.extend((1..rows).map(|r| (r, cols - 1)));
                    boundary.extend((0..cols - 1).rev().map(|c| (rows - 1, c)));
                    boundary.extend((1..rows - 1).rev().map(|r| (r, 0)));
                    boundary.push((0, 0));
                    assert_eq!(coloring.path_weight(&boundary).unwrap(), 0);
                    for _ in 0..5 {
                        let from = (rng.gen_range(0..rows), rng.gen_range(0..cols));
                        let to = (rng.gen_range(0..rows), rng.gen_range(0..cols));
                        assert_eq!(
                            coloring.path_weight(&l_path(from, to, true)).unwrap(),
                            coloring.path_weight(&l_path(from, to, false)).unwrap()
                        );
                    }
                }
            }
            let states = MvAssignment::enumerate_valid(6).unwrap();
            let colorings: Vec<GridColoring> = states
                .iter()
                .map(|s| GridColoring::from_assignment(s).unwrap())
                .collect();
            let path = boustrophedon_path(2, 6);
            for _ in 0..1000 {
                let from = &colorings[rng.gen_range(0..colorings.len())];
                let to = &colorings[rng.gen_range(0..colorings.len())];
                let profile = HeightProfile::between(from, to).unwrap();
                assert!(profile.values().iter().all(|v| v % 2 == 0));
                for w in path.windows(2) {
                    let step = profile.get(w[1].0, w[1].1) - profile.get(w[0].0, w[0].1);
                    assert!([-2, 0, 2].contains(&step), "step {step}");
                }
                let (height, _) = minimize_bound(&profile, None).unwrap();
                let shifted: Vec<i64> =
                    profile.values().iter().map(|v| v + height.value()).collect();
                let half = shifted.len().div_ceil(2);
                assert!(shifted.iter().filter(|&&v| v <= 0).count() >= half);
                assert!(shifted.iter().filter(|&&v| v >= 0).count() >= half);
            }
        },
    );
}

#[test]
fn flip_graphs_are_connected() {
    report(
        "connectivity: flip graphs connected for two rows n <= 8 and three rows n <= 4",
        || {
            for n in 1..=8 {
                assert!(build_from_assignments(n).unwrap().is_connected(), "n={n}");
            }
            for n in 2..=4 {
                assert!(
                    build_from_colorings(3, n).unwrap().is_connected(),
                    "3 rows, n={n}"
                );
            }
        },
    );
}

#[test]
fn frozen_tables_are_internally_consistent() {
    report(
        "frozen data: table columns sum to the state count and weigh to twice the edge count",
        || {
            for n in 2..=9usize {
                let total: u64 = DEGREE_TABLE.iter().map(|(_, row)| row[n - 2]).sum();
                assert_eq!(total, expected_vertex_count(n).unwrap(), "n={n}");
                let weighted: u64 = DEGREE_TABLE
                    .iter()
                    .map(|&(d, row)| d as u64 * row[n - 2])
                    .sum();
                assert_eq!(weighted, 2 * expected_edge_count(n).unwrap(), "n={n}");
            }
            let forest = DegreeForest::generate(9).unwrap();
            let mut by_reverse: BTreeMap<(usize, u32), i64> = BTreeMap::new();
            for &(a, start, values) in &REVERSE_ROWS {
                for (i, &v) in values.iter().enumerate() {
                    by_reverse.insert((start + i, a), v);
                }
            }
            for (&(n, a), &v) in &by_reverse {
                assert_eq!(
                    forest.count(n, 2 * n as u32 - a).unwrap() as i64,
                    v,
                    "n={n}, a={a}"
                );
            }
        },
    );
}
