//! Lower and upper bounds on the proper orientation number.
//!
//! Every proper orientation induces a proper vertex coloring by indegree, so
//! the number is sandwiched between the chromatic number minus one and the
//! maximum degree. Regular graphs additionally obey an averaging lower bound,
//! and the value is exactly 1 precisely for star forests.

use crate::graph::Graph;
use thiserror::Error;

/// Default vertex cap for the exact chromatic-number backtracking.
pub const DEFAULT_CHROMATIC_VERTEX_CAP: usize = 20;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum BoundsError {
    #[error("graph has {vertices} vertices, chromatic cap is {cap}")]
    ChromaticCapExceeded { vertices: usize, cap: usize },
}

/// Which rule produced the winning lower bound.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LowerReason {
    /// chi(G) - 1.
    Chromatic,
    /// The ceil((r+1)/2) averaging bound for r-regular graphs.
    Regular,
    /// The graph is a star forest, where the value is exactly 1.
    Star,
    /// Base case: 1 with any edge present, 0 otherwise.
    Trivial,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum UpperReason {
    MaxDegree,
}

/// Sandwich bounds for one graph.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct BoundsReport {
    pub lower: usize,
    pub upper: usize,
    pub lower_reason: LowerReason,
    pub upper_reason: UpperReason,
    /// True when the chromatic term was dropped because the graph exceeds
    /// the vertex cap. The remaining lower bound is still valid, just weaker.
    pub chromatic_term_skipped: bool,
}

/// Exact chromatic number with the default vertex cap.
pub fn chromatic_number_exact(g: &Graph) -> Result<usize, BoundsError> {
    chromatic_number_exact_with_cap(g, DEFAULT_CHROMATIC_VERTEX_CAP)
}

/// Exact chromatic number by backtracking: vertices in descending-degree
/// order, and a new color may be opened only in increasing color order.
pub fn chromatic_number_exact_with_cap(g: &Graph, cap: usize) -> Result<usize, BoundsError> {
    let n = g.vertex_count();
    if n > cap {
        return Err(BoundsError::ChromaticCapExceeded { vertices: n, cap });
    }
    if n == 0 {
        return Ok(0);
    }
    if g.edge_count() == 0 {
        return Ok(1);
    }
    let mut order: Vec<usize> = g.vertices().collect();
    order.sort_by_key(|&v| (std::cmp::Reverse(g.degree(v)), v));
    for k in 2..=g.max_degree() + 1 {
        let mut colors = vec![usize::MAX; n];
        if color_rec(g, &order, 0, k, 0, &mut colors) {
            return Ok(k);
        }
    }
    unreachable!("every graph is (max degree + 1)-colorable")
}

fn color_rec(
    g: &Graph,
    order: &[usize],
    pos: usize,
    k: usize,
    used: usize,
    colors: &mut [usize],
) -> bool {
    let Some(&v) = order.get(pos) else { return true };
    // Symmetry pruning: at most one fresh color is worth trying.
    let limit = k.min(used + 1);
    for c in 0..limit {
        if g.neighbors(v).iter().any(|&(u, _)| colors[u] == c) {
            continue;
        }
        colors[v] = c;
        if color_rec(g, order, pos + 1, k, used.max(c + 1), colors) {
            return true;
        }
        colors[v] = usize::MAX;
    }
    false
}

/// ceil((r+1)/2) for r-regular graphs with r >= 1.
pub fn regular_lower_bound(g: &Graph) -> Option<usize> {
    match g.regularity() {
        Some(r) if r >= 1 => Some((r + 2) / 2),
        _ => None,
    }
}

/// True iff every connected component containing an edge is a star K_{1,t};
/// isolated vertices are allowed.
pub fn is_star_forest(g: &Graph) -> bool {
    g.connected_components().iter().all(|comp| {
        let edges_inside: usize = comp.iter().map(|&v| g.degree(v)).sum::<usize>() / 2;
        if edges_inside == 0 {
            return true;
        }
        let max_deg = comp.iter().map(|&v| g.degree(v)).max().unwrap_or(0);
        edges_inside == comp.len() - 1 && max_deg == comp.len() - 1
    })
}

/// Sandwich bounds with the default chromatic cap.
pub fn bounds(g: &Graph) -> BoundsReport {
    bounds_with_cap(g, DEFAULT_CHROMATIC_VERTEX_CAP)
}

/// Combines the chromatic, regular and base-case lower bounds with the
/// max-degree upper bound. Above the cap the chromatic term is dropped (and
/// flagged) rather than estimated: an optimistic guess would be harmless but
/// a wrong lower bound would poison solver pruning.
pub fn bounds_with_cap(g: &Graph, chromatic_cap: usize) -> BoundsReport {
    let has_edge = g.edge_count() > 0;
    let chromatic = chromatic_number_exact_with_cap(g, chromatic_cap).ok();
    let mut lower = usize::from(has_edge);
    let mut lower_reason = if has_edge && is_star_forest(g) {
        LowerReason::Star
    } else {
        LowerReason::Trivial
    };
    if let Some(bound) = regular_lower_bound(g) {
        if bound > lower {
            lower = bound;
            lower_reason = LowerReason::Regular;
        }
    }
    if let Some(chi) = chromatic {
        if chi.saturating_sub(1) > lower {
            lower = chi - 1;
            lower_reason = LowerReason::Chromatic;
        }
    }
    BoundsReport {
        lower,
        upper: g.max_degree(),
        lower_reason,
        upper_reason: UpperReason::MaxDegree,
        chromatic_term_skipped: chromatic.is_none(),
    }
}
