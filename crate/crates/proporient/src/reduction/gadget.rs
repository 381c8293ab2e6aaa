//! The clause gadget and its behavioral contract.
//!
//! A clause gadget sits on twelve local vertices s1..s12; s1, s2, s3 are the
//! boundary vertices, each reached by exactly one connector edge from a
//! literal vertex of the host graph. What the reduction needs from the
//! gadget is purely behavioral: with every connector forced inward and all
//! indegrees capped at 2, the boundary indegree pattern (a1, a2, a3) over
//! {1, 2}^3 must be completable by some orientation of the internal edges
//! exactly when it is not (1, 1, 1). [`gadget_contract_check`] certifies
//! that property exhaustively, so the edge set itself is configuration data.

use super::ReductionError;
use thiserror::Error;

/// Local gadget vertex labels run 1..=12; these three face the host graph.
pub const BOUNDARY: [u8; 3] = [1, 2, 3];

/// Largest internal edge set the exhaustive contract sweep will accept.
pub const MAX_GADGET_EDGES: usize = 20;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GadgetError {
    #[error("gadget vertex label {label} outside 1..=12")]
    LabelOutOfRange { label: u8 },
    #[error("gadget edge ({a}, {b}) is a loop or duplicate")]
    BadEdge { a: u8, b: u8 },
    #[error("boundary vertex s{label} has no internal edge")]
    BoundaryMissing { label: u8 },
    #[error("gadget has {edges} internal edges, the exhaustive sweep cap is {MAX_GADGET_EDGES}")]
    TooManyEdges { edges: usize },
}

/// A clause gadget topology: the internal edge set over s1..=s12.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClauseGadget {
    edges: Vec<(u8, u8)>,
}

impl ClauseGadget {
    /// Validates labels, simplicity, and that each boundary vertex touches
    /// at least one internal edge.
    pub fn new(edges: Vec<(u8, u8)>) -> Result<Self, ReductionError> {
        if edges.len() > MAX_GADGET_EDGES {
            return Err(GadgetError::TooManyEdges { edges: edges.len() }.into());
        }
        let mut seen = std::collections::HashSet::new();
        for &(a, b) in &edges {
            for label in [a, b] {
                if !(1..=12).contains(&label) {
                    return Err(GadgetError::LabelOutOfRange { label }.into());
                }
            }
            if a == b || !seen.insert((a.min(b), a.max(b))) {
                return Err(GadgetError::BadEdge { a, b }.into());
            }
        }
        for boundary in BOUNDARY {
            if !edges.iter().any(|&(a, b)| a == boundary || b == boundary) {
                return Err(GadgetError::BoundaryMissing { label: boundary }.into());
            }
        }
        Ok(ClauseGadget { edges })
    }

    /// The shipped gadget: a 9-cycle s4 s7 s8 s5 s9 s10 s6 s11 s12 with the
    /// boundary vertices s1, s2, s3 pendant on s4, s5, s6.
    pub fn standard() -> Self {
        ClauseGadget::new(vec![
            (1, 4),
            (2, 5),
            (3, 6),
            (4, 7),
            (7, 8),
            (8, 5),
            (5, 9),
            (9, 10),
            (10, 6),
            (6, 11),
            (11, 12),
            (12, 4),
        ])
        .expect("standard gadget is well formed")
    }

    pub fn edges(&self) -> &[(u8, u8)] {
        &self.edges
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }
}

impl Default for ClauseGadget {
    fn default() -> Self {
        ClauseGadget::standard()
    }
}

/// Result of the exhaustive boundary-pattern sweep. Patterns are indexed by
/// a 3-bit mask where bit t-1 set means the boundary vertex s^t carries
/// total indegree 2 (instead of 1).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ContractReport {
    pub extendable: [bool; 8],
}

impl ContractReport {
    /// The contract: every pattern except (1,1,1) extends, and (1,1,1)
    /// does not. Pattern (1,1,1) is mask 0.
    pub fn passes(&self) -> bool {
        !self.extendable[0] && self.extendable[1..].iter().all(|&ok| ok)
    }

    pub fn pattern_extendable(&self, a1: u8, a2: u8, a3: u8) -> bool {
        let mask = [a1, a2, a3]
            .iter()
            .enumerate()
            .fold(0usize, |m, (t, &a)| m | (usize::from(a == 2) << t));
        self.extendable[mask]
    }
}

/// Exhaustively decides, for each boundary pattern, whether the gadget's
/// internal edges admit an orientation that is proper under total indegrees
/// (internal plus the one incoming connector unit at each boundary vertex),
/// keeps every total at most 2, pins each boundary total to the pattern, and
/// keeps each boundary total distinct from its external neighbor's indegree
/// 3 - a_t.
pub fn gadget_contract_check(gadget: &ClauseGadget) -> Result<ContractReport, ReductionError> {
    let mut extendable = [false; 8];
    for (mask, slot) in extendable.iter_mut().enumerate() {
        let target = |t: usize| -> usize { 1 + (mask >> t & 1) };
        *slot = extension_exists(gadget, [target(0), target(1), target(2)]);
    }
    Ok(ContractReport { extendable })
}

/// Searches all 2^|E| internal orientations for one meeting the boundary
/// pattern; `targets[t]` is the required total indegree of s^(t+1).
pub(super) fn extension_exists(gadget: &ClauseGadget, targets: [usize; 3]) -> bool {
    find_extension(gadget, targets).is_some()
}

/// Returns the first internal orientation (in increasing-mask order, so the
/// choice is deterministic) that is proper under total indegrees, keeps
/// every total at most 2, and pins each boundary total s^(t+1) to
/// `targets[t]`. Entry `i` of the result is true when edge `i` points
/// toward its first listed endpoint.
pub(super) fn find_extension(gadget: &ClauseGadget, targets: [usize; 3]) -> Option<Vec<bool>> {
    let edges = gadget.edges();
    let m = edges.len();
    'mask: for mask in 0u64..1 << m {
        // Each boundary vertex starts with one unit along its connector.
        let mut total = [1usize, 1, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0];
        for (i, &(a, b)) in edges.iter().enumerate() {
            let head = if mask >> i & 1 == 1 { a } else { b };
            total[head as usize - 1] += 1;
        }
        if total.iter().any(|&d| d > 2) {
            continue;
        }
        for t in 0..3 {
            // The external literal neighbor ends with indegree 3 - a_t.
            if total[t] != targets[t] || total[t] == 3 - targets[t] {
                continue 'mask;
            }
        }
        for &(a, b) in edges {
            if total[a as usize - 1] == total[b as usize - 1] {
                continue 'mask;
            }
        }
        return Some((0..m).map(|i| mask >> i & 1 == 1).collect());
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn standard_gadget_is_well_formed() {
        let g = ClauseGadget::standard();
        assert_eq!(g.edge_count(), 12);
        let mut degree = [0usize; 12];
        for &(a, b) in g.edges() {
            degree[a as usize - 1] += 1;
            degree[b as usize - 1] += 1;
        }
        // Boundary vertices are pendant inside the gadget; the ring carries
        // the rest with maximum degree 3.
        assert_eq!(&degree[..3], &[1, 1, 1]);
        assert!(degree.iter().all(|&d| d <= 3));
    }

    #[test]
    fn standard_gadget_passes_the_contract() {
        let report = gadget_contract_check(&ClauseGadget::standard()).unwrap();
        assert!(report.passes(), "pattern table: {:?}", report.extendable);
        assert!(report.pattern_extendable(2, 1, 1));
        assert!(report.pattern_extendable(2, 2, 2));
        assert!(!report.pattern_extendable(1, 1, 1));
    }

    #[test]
    fn contract_check_rejects_malformed_gadgets() {
        assert!(matches!(
            ClauseGadget::new(vec![(1, 13)]),
            Err(ReductionError::Gadget(GadgetError::LabelOutOfRange { label: 13 }))
        ));
        assert!(matches!(
            ClauseGadget::new(vec![(4, 4)]),
            Err(ReductionError::Gadget(GadgetError::BadEdge { .. }))
        ));
        // No internal edge at s2.
        assert!(matches!(
            ClauseGadget::new(vec![(1, 4), (3, 6)]),
            Err(ReductionError::Gadget(GadgetError::BoundaryMissing { label: 2 }))
        ));
    }

    #[test]
    fn gadgets_without_the_blocking_structure_fail() {
        // Spokes with one pendant escape each: the all-false pattern (1,1,1)
        // completes by absorbing the pendant, so the contract fails.
        let leaky =
            ClauseGadget::new(vec![(1, 4), (2, 5), (3, 6), (4, 7), (5, 8), (6, 9)]).unwrap();
        let report = gadget_contract_check(&leaky).unwrap();
        assert!(!report.passes());
        assert!(report.pattern_extendable(1, 1, 1));

        // Bare spokes fail the other way: even satisfied patterns like
        // (2,1,1) have no proper completion.
        let bare = ClauseGadget::new(vec![(1, 4), (2, 5), (3, 6)]).unwrap();
        let report = gadget_contract_check(&bare).unwrap();
        assert!(!report.passes());
        assert!(!report.pattern_extendable(2, 1, 1));
    }
}
