//! The flip graph: locally valid assignments joined by single face flips.
//!
//! For two-row patterns the graph is built directly on assignments; for
//! general patterns it is built on canonical colorings joined by
//! single-vertex recolorings, which is the same graph under the
//! assignment/coloring correspondence. Both routes produce states in a fixed
//! sorted order, so indices, exports, and witnesses are reproducible
//! regardless of thread count.

use std::collections::{BTreeMap, VecDeque};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::coloring::GridColoring;
use crate::error::{Error, Result};
use crate::miura::{MiuraSpec, MvAssignment};

/// Safety cap on the number of states a construction may materialize.
#[derive(Clone, Copy, Debug)]
pub struct BuildOptions {
    pub max_states: u64,
}

impl Default for BuildOptions {
    fn default() -> Self {
        BuildOptions {
            max_states: 2_000_000,
        }
    }
}

/// States of a flip graph: assignments for two-row patterns, canonical
/// colorings otherwise.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum StateSet {
    Assignments(Vec<MvAssignment>),
    Colorings(Vec<GridColoring>),
}

impl StateSet {
    pub fn len(&self) -> usize {
        match self {
            StateSet::Assignments(v) => v.len(),
            StateSet::Colorings(v) => v.len(),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    fn label(&self, index: usize) -> String {
        match self {
            StateSet::Assignments(v) => v[index].to_string(),
            StateSet::Colorings(v) => v[index].to_compact(),
        }
    }
}

/// An undirected simple graph on flip states with sorted adjacency lists.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FlipGraph {
    spec: MiuraSpec,
    states: StateSet,
    adjacency: Vec<Vec<u32>>,
    edge_count: u64,
}

/// Builds the flip graph for `spec` with default resource limits.
pub fn build_ofg(spec: MiuraSpec) -> Result<FlipGraph> {
    build_ofg_with(spec, BuildOptions::default())
}

/// Builds the flip graph, choosing the crease-flip construction for two-row
/// patterns and the recoloring construction otherwise.
pub fn build_ofg_with(spec: MiuraSpec, options: BuildOptions) -> Result<FlipGraph> {
    if spec.rows() == 2 {
        build_from_assignments_with(spec.cols(), options)
    } else {
        build_from_colorings_with(spec.rows(), spec.cols(), options)
    }
}

/// Crease-flip construction over locally valid assignments (two-row).
pub fn build_from_assignments(cols: usize) -> Result<FlipGraph> {
    build_from_assignments_with(cols, BuildOptions::default())
}

pub fn build_from_assignments_with(cols: usize, options: BuildOptions) -> Result<FlipGraph> {
    let spec = MiuraSpec::two_rows(cols)?;
    let needed = spec.valid_assignment_count()?;
    if needed > options.max_states {
        return Err(Error::StateCapExceeded {
            needed,
            cap: options.max_states,
        });
    }
    let states = MvAssignment::enumerate_valid(cols)?;
    let faces: Vec<_> = spec.faces().collect();
    let adjacency: Vec<Vec<u32>> = states
        .par_iter()
        .map(|state| {
            let mut neighbors = Vec::with_capacity(faces.len());
            for &face in &faces {
                let flipped = state.flip_face(face).expect("face is in range");
                if flipped.is_locally_valid() {
                    let idx = states
                        .binary_search(&flipped)
                        .expect("flip of a valid state is a valid state");
                    neighbors.push(idx as u32);
                }
            }
            neighbors.sort_unstable();
            // Distinct faces can produce the same neighbor only in the
            // single-column pattern, where both faces share their crease.
            neighbors.dedup();
            neighbors
        })
        .collect();
    finish(spec, StateSet::Assignments(states), adjacency)
}

/// Recoloring construction over canonical colorings (any number of rows).
pub fn build_from_colorings(rows: usize, cols: usize) -> Result<FlipGraph> {
    build_from_colorings_with(rows, cols, BuildOptions::default())
}

pub fn build_from_colorings_with(
    rows: usize,
    cols: usize,
    options: BuildOptions,
) -> Result<FlipGraph> {
    let spec = MiuraSpec::new(rows, cols)?;
    let needed = GridColoring::count_canonical(rows, cols)?;
    if needed > options.max_states {
        return Err(Error::StateCapExceeded {
            needed,
            cap: options.max_states,
        });
    }
    let states = GridColoring::enumerate_canonical(rows, cols)?;
    let adjacency: Vec<Vec<u32>> = states
        .par_iter()
        .map(|state| {
            let mut neighbors = Vec::new();
            for r in 0..rows {
                for c in 0..cols {
                    let current = state.get(r, c);
                    for color in 0u8..3 {
                        if color == current {
                            continue;
                        }
                        let Ok(recolored) = state.recolored(r, c, color) else {
                            continue;
                        };
                        let canonical = recolored.canonicalize();
                        let idx = states
                            .binary_search(&canonical)
                            .expect("canonical proper coloring is enumerated");
                        neighbors.push(idx as u32);
                    }
                }
            }
            neighbors.sort_unstable();
            neighbors.dedup();
            neighbors
        })
        .collect();
    finish(spec, StateSet::Colorings(states), adjacency)
}

fn finish(spec: MiuraSpec, states: StateSet, adjacency: Vec<Vec<u32>>) -> Result<FlipGraph> {
    let degree_sum: u64 = adjacency.iter().map(|n| n.len() as u64).sum();
    if !degree_sum.is_multiple_of(2) {
        return Err(Error::Inconsistency(
            "adjacency degree sum is odd".to_string(),
        ));
    }
    let graph = FlipGraph {
        spec,
        states,
        adjacency,
        edge_count: degree_sum / 2,
    };
    debug_assert!(graph.check_symmetric());
    Ok(graph)
}

/// Expected number of states for a two-row pattern: `2 * 3^(n-1)`.
pub fn expected_vertex_count(cols: usize) -> Result<u64> {
    MiuraSpec::two_rows(cols)?.valid_assignment_count()
}

/// Expected number of edges for a two-row pattern with `n >= 2` columns:
/// `8(n+1) 3^(n-3)`.
pub fn expected_edge_count(cols: usize) -> Result<u64> {
    if cols < 2 {
        return Err(Error::NeedsTwoColumns { cols });
    }
    // Written as 8(n+1) 3^n / 27 so the n = 2 case stays in integers.
    let numerator = 8u64
        .checked_mul(cols as u64 + 1)
        .and_then(|v| v.checked_mul(crate::miura::checked_pow3(cols).ok()?))
        .ok_or(Error::Overflow)?;
    debug_assert_eq!(numerator % 27, 0);
    Ok(numerator / 27)
}

/// Outcome of checking a built graph against the closed-form counts.
#[derive(Clone, Debug, Serialize)]
pub struct CountCheck {
    pub vertex_count: u64,
    pub expected_vertices: Option<u64>,
    pub edge_count: u64,
    pub expected_edges: Option<u64>,
    pub handshake_ok: bool,
    pub pass: bool,
}

impl FlipGraph {
    pub fn spec(&self) -> MiuraSpec {
        self.spec
    }

    pub fn states(&self) -> &StateSet {
        &self.states
    }

    pub fn vertex_count(&self) -> usize {
        self.states.len()
    }

    pub fn edge_count(&self) -> u64 {
        self.edge_count
    }

    pub fn neighbors(&self, index: usize) -> Result<&[u32]> {
        self.adjacency
            .get(index)
            .map(|n| n.as_slice())
            .ok_or(Error::BadState {
                index,
                count: self.vertex_count(),
            })
    }

    pub fn degree(&self, index: usize) -> Result<usize> {
        Ok(self.neighbors(index)?.len())
    }

    /// Human-readable label of a state: the MV string or the compact coloring.
    pub fn state_label(&self, index: usize) -> Result<String> {
        if index >= self.states.len() {
            return Err(Error::BadState {
                index,
                count: self.vertex_count(),
            });
        }
        Ok(self.states.label(index))
    }

    /// Index of an assignment in an assignment-built graph.
    pub fn find_assignment(&self, mv: &MvAssignment) -> Option<usize> {
        match &self.states {
            StateSet::Assignments(v) => v.binary_search(mv).ok(),
            StateSet::Colorings(_) => None,
        }
    }

    /// Index of a coloring (canonicalized first) in a coloring-built graph.
    pub fn find_coloring(&self, coloring: &GridColoring) -> Option<usize> {
        match &self.states {
            StateSet::Colorings(v) => v.binary_search(&coloring.canonicalize()).ok(),
            StateSet::Assignments(_) => None,
        }
    }

    /// Count of states per degree.
    pub fn degree_distribution(&self) -> BTreeMap<usize, u64> {
        let mut distribution = BTreeMap::new();
        for neighbors in &self.adjacency {
            *distribution.entry(neighbors.len()).or_insert(0) += 1;
        }
        distribution
    }

    /// Indices of all states of degree 2.
    pub fn degree_two_states(&self) -> Vec<usize> {
        self.adjacency
            .iter()
            .enumerate()
            .filter(|(_, n)| n.len() == 2)
            .map(|(i, _)| i)
            .collect()
    }

    /// Compares the built graph against the closed-form vertex and edge
    /// counts (two-row patterns) and re-checks the handshake identity.
    pub fn count_checks(&self) -> CountCheck {
        let degree_sum: u64 = self.adjacency.iter().map(|n| n.len() as u64).sum();
        let handshake_ok = degree_sum == 2 * self.edge_count;
        let (expected_vertices, expected_edges) = if self.spec.rows() == 2 {
            (
                expected_vertex_count(self.spec.cols()).ok(),
                expected_edge_count(self.spec.cols()).ok(),
            )
        } else {
            (None, None)
        };
        let vertices_ok = expected_vertices.is_none_or(|e| e == self.vertex_count() as u64);
        let edges_ok = expected_edges.is_none_or(|e| e == self.edge_count);
        CountCheck {
            vertex_count: self.vertex_count() as u64,
            expected_vertices,
            edge_count: self.edge_count,
            expected_edges,
            handshake_ok,
            pass: handshake_ok && vertices_ok && edges_ok,
        }
    }

    fn check_symmetric(&self) -> bool {
        self.adjacency.iter().enumerate().all(|(i, neighbors)| {
            neighbors.iter().all(|&j| {
                self.adjacency[j as usize]
                    .binary_search(&(i as u32))
                    .is_ok()
            })
        })
    }

    /// BFS distances from `source`; unreachable states get `u32::MAX`.
    pub fn bfs_distances(&self, source: usize) -> Result<Vec<u32>> {
        Ok(self.bfs(source)?.0)
    }

    fn bfs(&self, source: usize) -> Result<(Vec<u32>, Vec<u32>)> {
        if source >= self.vertex_count() {
            return Err(Error::BadState {
                index: source,
                count: self.vertex_count(),
            });
        }
        let mut dist = vec![u32::MAX; self.vertex_count()];
        let mut parent = vec![u32::MAX; self.vertex_count()];
        let mut queue = VecDeque::new();
        dist[source] = 0;
        queue.push_back(source as u32);
        while let Some(u) = queue.pop_front() {
            let du = dist[u as usize];
            for &v in &self.adjacency[u as usize] {
                if dist[v as usize] == u32::MAX {
                    dist[v as usize] = du + 1;
                    parent[v as usize] = u;
                    queue.push_back(v);
                }
            }
        }
        Ok((dist, parent))
    }

    /// A shortest path between two states as state indices, or `None` if
    /// they are disconnected.
    pub fn shortest_path(&self, from: usize, to: usize) -> Result<Option<Vec<usize>>> {
        if to >= self.vertex_count() {
            return Err(Error::BadState {
                index: to,
                count: self.vertex_count(),
            });
        }
        let (dist, parent) = self.bfs(from)?;
        if dist[to] == u32::MAX {
            return Ok(None);
        }
        let mut path = vec![to];
        let mut cur = to;
        while cur != from {
            cur = parent[cur] as usize;
            path.push(cur);
        }
        path.reverse();
        Ok(Some(path))
    }

    pub fn is_connected(&self) -> bool {
        match self.bfs_distances(0) {
            Ok(dist) => dist.iter().all(|&d| d != u32::MAX),
            Err(_) => false,
        }
    }

    /// Exact diameter with a witness pair, by BFS from every state.
    ///
    /// The witness is the lexicographically smallest pair `(a, b)`, `a < b`,
    /// attaining the maximum, so results do not depend on thread count.
    pub fn diameter_bfs(&self) -> Result<(u32, (usize, usize))> {
        let n = self.vertex_count();
        if n == 0 {
            return Err(Error::Disconnected);
        }
        let best = (0..n)
            .into_par_iter()
            .map(|source| {
                let dist = self.bfs_distances(source).expect("source is in range");
                let mut ecc = 0u32;
                let mut farthest = source;
                for (j, &d) in dist.iter().enumerate() {
                    if d == u32::MAX {
                        return Err(Error::Disconnected);
                    }
                    if d > ecc {
                        ecc = d;
                        farthest = j;
                    }
                }
                let pair = if source <= farthest {
                    (source, farthest)
                } else {
                    (farthest, source)
                };
                Ok((ecc, pair))
            })
            .try_reduce(
                || (0u32, (usize::MAX, usize::MAX)),
                |a, b| {
                    Ok(if b.0 > a.0 || (b.0 == a.0 && b.1 < a.1) {
                        b
                    } else {
                        a
                    })
                },
            )?;
        Ok(best)
    }

    /// Serializes the graph in the requested format.
    pub fn export(&self, format: ExportFormat) -> Result<String> {
        match format {
            ExportFormat::Dot => Ok(self.to_dot()),
            ExportFormat::Json => self.to_json(),
            ExportFormat::EdgeList => Ok(self.to_edge_list()),
        }
    }

    /// Graphviz DOT with states as node labels; nodes and edges are emitted
    /// in ascending index order.
    pub fn to_dot(&self) -> String {
        let mut out = String::from("graph flip_graph {\n");
        for i in 0..self.vertex_count() {
            out.push_str(&format!("  {} [label=\"{}\"];\n", i, self.states.label(i)));
        }
        for (i, neighbors) in self.adjacency.iter().enumerate() {
            for &j in neighbors {
                if (j as usize) > i {
                    out.push_str(&format!("  {} -- {};\n", i, j));
                }
            }
        }
        out.push_str("}\n");
        out
    }

    /// One `a b` line per edge with `a < b`, in ascending order.
    pub fn to_edge_list(&self) -> String {
        let mut out = String::new();
        for (i, neighbors) in self.adjacency.iter().enumerate() {
            for &j in neighbors {
                if (j as usize) > i {
                    out.push_str(&format!("{} {}\n", i, j));
                }
            }
        }
        out
    }

    pub fn to_json(&self) -> Result<String> {
        let export = GraphJson {
            spec: SpecJson {
                rows: self.spec.rows(),
                cols: self.spec.cols(),
            },
            states: (0..self.vertex_count())
                .map(|i| self.states.label(i))
                .collect(),
            adjacency: self.adjacency.clone(),
            degrees: self.degree_distribution(),
            vertex_count: self.vertex_count() as u64,
            edge_count: self.edge_count,
        };
        let mut text = serde_json::to_string_pretty(&export)?;
        text.push('\n');
        Ok(text)
    }

    /// Parses a JSON export, re-validating state labels, adjacency symmetry,
    /// and the recorded counts.
    pub fn from_json(text: &str) -> Result<FlipGraph> {
        let raw: GraphJson = serde_json::from_str(text)?;
        let spec = MiuraSpec::new(raw.spec.rows, raw.spec.cols)?;
        if raw.states.len() != raw.adjacency.len() || raw.states.len() as u64 != raw.vertex_count {
            return Err(Error::BadGraphData(
                "state, adjacency, and count fields disagree".to_string(),
            ));
        }
        let states = if spec.rows() == 2 && raw.states.iter().all(|s| !s.contains('/')) {
            StateSet::Assignments(
                raw.states
                    .iter()
                    .map(|s| s.parse::<MvAssignment>())
                    .collect::<Result<Vec<_>>>()?,
            )
        } else {
            StateSet::Colorings(
                raw.states
                    .iter()
                    .map(|s| GridColoring::from_compact(s))
                    .collect::<Result<Vec<_>>>()?,
            )
        };
        let n = raw.adjacency.len();
        for neighbors in &raw.adjacency {
            if neighbors.windows(2).any(|w| w[0] >= w[1]) {
                return Err(Error::BadGraphData(
                    "adjacency lists must be strictly sorted".to_string(),
                ));
            }
            if neighbors.iter().any(|&v| v as usize >= n) {
                return Err(Error::BadGraphData(
                    "neighbor index out of range".to_string(),
                ));
            }
        }
        let graph = FlipGraph {
            spec,
            states,
            adjacency: raw.adjacency,
            edge_count: raw.edge_count,
        };
        if !graph.check_symmetric() {
            return Err(Error::BadGraphData(
                "adjacency is not symmetric".to_string(),
            ));
        }
        let degree_sum: u64 = graph.adjacency.iter().map(|a| a.len() as u64).sum();
        if degree_sum != 2 * graph.edge_count {
            return Err(Error::BadGraphData(
                "edge count does not match adjacency".to_string(),
            ));
        }
        Ok(graph)
    }
}

/// Supported graph serialization formats.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ExportFormat {
    Dot,
    Json,
    EdgeList,
}

#[derive(Serialize, Deserialize)]
struct SpecJson {
    rows: usize,
    cols: usize,
}

#[derive(Serialize, Deserialize)]
struct GraphJson {
    spec: SpecJson,
    states: Vec<String>,
    adjacency: Vec<Vec<u32>>,
    degrees: BTreeMap<usize, u64>,
    vertex_count: u64,
    edge_count: u64,
}
