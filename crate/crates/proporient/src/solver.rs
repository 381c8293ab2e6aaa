//! Exact computation of the proper orientation number: a branch-and-bound
//! decision procedure, the minimization loop on top of it, and a structurally
//! independent brute-force oracle for cross-validation.

use crate::bounds;
use crate::graph::{Graph, Orientation};
use rayon::prelude::*;
use std::sync::atomic::{AtomicU64, Ordering};
use std::time::{Duration, Instant};
use thiserror::Error;

/// Default edge cap for exhaustive certification in [`proper_orientation_number`].
pub const DEFAULT_SOLVE_EDGE_CAP: usize = 40;
/// Hard edge cap for the unpruned [`brute_force_oracle`].
pub const ORACLE_EDGE_CAP: usize = 22;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum SolveError {
    #[error("graph has {edges} edges, solve cap is {cap}")]
    EdgeCapExceeded { edges: usize, cap: usize },
    #[error("graph has {edges} edges, oracle cap is {cap}")]
    OracleCapExceeded { edges: usize, cap: usize },
}

/// Outcome of an exact solve: the value, a witness orientation attaining it,
/// and search statistics.
#[derive(Clone, Debug)]
pub struct SolveResult {
    pub value: usize,
    pub witness: Orientation,
    pub nodes_explored: u64,
    pub elapsed: Duration,
}

/// Knobs for [`solve_with`].
#[derive(Clone, Copy, Debug)]
pub struct SolveOptions {
    pub edge_cap: usize,
    /// Explore sibling branches in parallel. The value is always identical
    /// to the sequential result; only the witness may differ.
    pub parallel: bool,
}

impl Default for SolveOptions {
    fn default() -> Self {
        SolveOptions { edge_cap: DEFAULT_SOLVE_EDGE_CAP, parallel: false }
    }
}

/// Depth-first search state over a fixed edge order.
///
/// Edges are ordered lexicographically by (min endpoint, max endpoint), so
/// the edges inside a low-index vertex's neighborhood are decided in one
/// contiguous run and vertices become fully decided as early as possible.
struct Search<'a> {
    g: &'a Graph,
    k: usize,
    order: Vec<usize>,
    directions: Vec<bool>,
    indegree: Vec<usize>,
    undecided: Vec<usize>,
    nodes: u64,
}

impl<'a> Search<'a> {
    fn new(g: &'a Graph, k: usize) -> Self {
        let mut order: Vec<usize> = (0..g.edge_count()).collect();
        order.sort_by_key(|&e| {
            let (u, v) = g.endpoints(e);
            (u.min(v), u.max(v))
        });
        let undecided = g.vertices().map(|v| g.degree(v)).collect();
        Search {
            g,
            k,
            order,
            directions: vec![false; g.edge_count()],
            indegree: vec![0; g.vertex_count()],
            undecided,
            nodes: 0,
        }
    }

    /// Final indegree of `v` must land in [indegree, min(indegree+undecided, k)].
    /// Prune when the whole window is already taken by fully-decided
    /// neighbors (this also catches equal fully-decided endpoints, and an
    /// indegree that exceeded k shows up as an empty window).
    fn vertex_feasible(&self, v: usize) -> bool {
        let lo = self.indegree[v];
        if lo > self.k {
            return false;
        }
        let hi = self.k.min(lo + self.undecided[v]);
        let width = hi - lo + 1;
        if width > u64::BITS as usize {
            return true; // window too wide to trap; nothing to prune
        }
        let full = if width == 64 { u64::MAX } else { (1u64 << width) - 1 };
        let mut taken = 0u64;
        for &(u, _) in self.g.neighbors(v) {
            if self.undecided[u] == 0 {
                let f = self.indegree[u];
                if f >= lo && f <= hi {
                    taken |= 1 << (f - lo);
                    if taken == full {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// Checks an endpoint after an assignment; when it just became fully
    /// decided, its still-open neighbors get the window check too (a cheap
    /// lookahead for conflicts that are already forced).
    fn endpoint_ok(&self, v: usize) -> bool {
        if !self.vertex_feasible(v) {
            return false;
        }
        if self.undecided[v] == 0 {
            for &(u, _) in self.g.neighbors(v) {
                if self.undecided[u] > 0 && !self.vertex_feasible(u) {
                    return false;
                }
            }
        }
        true
    }

    fn assign(&mut self, edge: usize, head: usize) {
        let (u, v) = self.g.endpoints(edge);
        self.directions[edge] = head == u;
        self.indegree[head] += 1;
        self.undecided[u] -= 1;
        self.undecided[v] -= 1;
    }

    fn unassign(&mut self, edge: usize, head: usize) {
        let (u, v) = self.g.endpoints(edge);
        self.indegree[head] -= 1;
        self.undecided[u] += 1;
        self.undecided[v] += 1;
    }

    /// Exhausts all completions from position `pos` in the edge order.
    /// First branch orients the edge toward its lower-indexed endpoint.
    fn run(&mut self, pos: usize) -> bool {
        let Some(&edge) = self.order.get(pos) else { return true };
        let (u, v) = self.g.endpoints(edge);
        for head in [u.min(v), u.max(v)] {
            self.nodes += 1;
            self.assign(edge, head);
            if self.endpoint_ok(u) && self.endpoint_ok(v) && self.run(pos + 1) {
                return true;
            }
            self.unassign(edge, head);
        }
        false
    }

    fn into_orientation(self) -> Orientation {
        Orientation::new(self.g, self.directions).expect("search directions match the graph")
    }
}

fn decide_counting(g: &Graph, k: usize) -> (Option<Orientation>, u64) {
    let mut search = Search::new(g, k);
    if search.run(0) {
        let nodes = search.nodes;
        (Some(search.into_orientation()), nodes)
    } else {
        (None, search.nodes)
    }
}

/// Decides whether G has a proper orientation with maximum indegree at most
/// `k`, returning a witness if so. Absence is certified by exhausted search.
pub fn decide(g: &Graph, k: usize) -> Option<Orientation> {
    decide_counting(g, k).0
}

fn decide_parallel_counting(g: &Graph, k: usize) -> (Option<Orientation>, u64) {
    let m = g.edge_count();
    let threads = rayon::current_num_threads();
    if threads <= 1 || m < 8 {
        return decide_counting(g, k);
    }
    // Enough prefix assignments to keep the pool busy, at most 2^10 of them.
    let prefix_len = m.min(10);

    // Feasible assignments of the first `prefix_len` edges become seeds;
    // each seed records the head choice (true = first listed endpoint).
    let mut seeds: Vec<Vec<bool>> = Vec::new();
    let mut probe = Search::new(g, k);
    collect_seeds(&mut probe, prefix_len, &mut seeds);
    let nodes = AtomicU64::new(probe.nodes);

    let witness = seeds.par_iter().find_map_any(|seed| {
        let mut search = Search::new(g, k);
        for (pos, &head_is_first) in seed.iter().enumerate() {
            let edge = search.order[pos];
            let (u, v) = search.g.endpoints(edge);
            search.assign(edge, if head_is_first { u } else { v });
        }
        let found = search.run(prefix_len);
        nodes.fetch_add(search.nodes, Ordering::Relaxed);
        found.then(|| search.into_orientation())
    });
    (witness, nodes.into_inner())
}

fn collect_seeds(search: &mut Search, prefix_len: usize, seeds: &mut Vec<Vec<bool>>) {
    fn rec(search: &mut Search, pos: usize, prefix_len: usize, seeds: &mut Vec<Vec<bool>>) {
        if pos == prefix_len {
            seeds.push(search.order[..prefix_len].iter().map(|&e| search.directions[e]).collect());
            return;
        }
        let edge = search.order[pos];
        let (u, v) = search.g.endpoints(edge);
        for head in [u.min(v), u.max(v)] {
            search.nodes += 1;
            search.assign(edge, head);
            if search.endpoint_ok(u) && search.endpoint_ok(v) {
                rec(search, pos + 1, prefix_len, seeds);
            }
            search.unassign(edge, head);
        }
    }
    rec(search, 0, prefix_len, seeds);
}

/// Parallel variant of [`decide`]: same yes/no answer, possibly a different
/// witness.
pub fn decide_parallel(g: &Graph, k: usize) -> Option<Orientation> {
    decide_parallel_counting(g, k).0
}

/// Exact proper orientation number with default options.
pub fn proper_orientation_number(g: &Graph) -> Result<SolveResult, SolveError> {
    solve_with(g, &SolveOptions::default())
}

/// Tries k = lower bound, lower bound + 1, ... and returns the first success.
/// Decision cost grows steeply with k and the answer is typically within one
/// of the lower bound, so upward iteration beats binary search here.
pub fn solve_with(g: &Graph, opts: &SolveOptions) -> Result<SolveResult, SolveError> {
    let m = g.edge_count();
    if m > opts.edge_cap {
        return Err(SolveError::EdgeCapExceeded { edges: m, cap: opts.edge_cap });
    }
    let start = Instant::now();
    let report = bounds::bounds(g);
    let mut nodes = 0u64;
    for k in report.lower..=g.max_degree() {
        let (witness, n) = if opts.parallel {
            decide_parallel_counting(g, k)
        } else {
            decide_counting(g, k)
        };
        nodes += n;
        if let Some(witness) = witness {
            return Ok(SolveResult {
                value: k,
                witness,
                nodes_explored: nodes,
                elapsed: start.elapsed(),
            });
        }
    }
    unreachable!("a proper orientation with maximum indegree at most the maximum degree exists")
}

/// Enumerates all 2^m orientations with nothing but a properness check:
/// deliberately a separate code path from [`decide`] so the two can
/// cross-validate each other.
pub fn brute_force_oracle(g: &Graph) -> Result<usize, SolveError> {
    let m = g.edge_count();
    if m > ORACLE_EDGE_CAP {
        return Err(SolveError::OracleCapExceeded { edges: m, cap: ORACLE_EDGE_CAP });
    }
    let n = g.vertex_count();
    let edges = g.edges();
    let mut best: Option<usize> = None;
    let mut indegree = vec![0usize; n];
    'mask: for mask in 0u64..1u64 << m {
        indegree.iter_mut().for_each(|d| *d = 0);
        for (e, &(u, v)) in edges.iter().enumerate() {
            indegree[if mask >> e & 1 == 1 { u } else { v }] += 1;
        }
        for &(u, v) in edges {
            if indegree[u] == indegree[v] {
                continue 'mask;
            }
        }
        let max = indegree.iter().copied().max().unwrap_or(0);
        if best.is_none_or(|b| max < b) {
            best = Some(max);
        }
    }
    Ok(best.expect("every graph admits a proper orientation"))
}
