//! Perfect matchings in bipartite graphs and the decomposition of a regular
//! bipartite graph into perfect matchings.

use super::ConstructionError;
use crate::graph::{Graph, VertexPartition};

/// A partition of the edge set of an r-regular bipartite graph into r
/// perfect matchings, each given as a set of edge indices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MatchingDecomposition {
    pub matchings: Vec<Vec<usize>>,
}

/// A perfect matching of a bipartite graph, as edge indices.
///
/// Augmenting-path search starting from the lowest-index free X-vertex, so
/// the result is deterministic.
pub fn perfect_matching(
    g: &Graph,
    partition: &VertexPartition,
) -> Result<Vec<usize>, ConstructionError> {
    if !partition.is_valid_for(g) {
        return Err(ConstructionError::InvalidPartition);
    }
    matching_on_alive(g, partition, &vec![true; g.edge_count()])
}

fn matching_on_alive(
    g: &Graph,
    partition: &VertexPartition,
    alive: &[bool],
) -> Result<Vec<usize>, ConstructionError> {
    let xs: Vec<usize> = partition.x_vertices().collect();
    let ys: Vec<usize> = partition.y_vertices().collect();
    if xs.len() != ys.len() {
        return Err(ConstructionError::NoPerfectMatching);
    }
    // match_edge[y] = edge currently matching y, if any.
    let mut match_edge: Vec<Option<usize>> = vec![None; g.vertex_count()];
    let mut visited = vec![false; g.vertex_count()];
    for &x in &xs {
        visited.iter_mut().for_each(|f| *f = false);
        if !augment(g, alive, x, &mut visited, &mut match_edge) {
            return Err(ConstructionError::NoPerfectMatching);
        }
    }
    let mut edges: Vec<usize> = ys.iter().filter_map(|&y| match_edge[y]).collect();
    edges.sort_unstable();
    Ok(edges)
}

fn augment(
    g: &Graph,
    alive: &[bool],
    x: usize,
    visited: &mut [bool],
    match_edge: &mut [Option<usize>],
) -> bool {
    for &(y, e) in g.neighbors(x) {
        if !alive[e] || visited[y] {
            continue;
        }
        visited[y] = true;
        let free = match match_edge[y] {
            None => true,
            Some(prev) => {
                let (a, b) = g.endpoints(prev);
                let other_x = if a == y { b } else { a };
                augment(g, alive, other_x, visited, match_edge)
            }
        };
        if free {
            match_edge[y] = Some(e);
            return true;
        }
    }
    false
}

/// Splits an r-regular bipartite graph (r >= 1) into r perfect matchings by
/// repeatedly extracting one and deleting its edges. Koenig's theorem
/// guarantees a perfect matching survives at every step.
pub fn matching_decomposition(g: &Graph) -> Result<MatchingDecomposition, ConstructionError> {
    let r = g.regularity().ok_or(ConstructionError::NotRegular)?;
    if r == 0 {
        return Err(ConstructionError::NotRegular);
    }
    let partition = g.is_bipartite().ok_or(ConstructionError::NotBipartite)?;
    let mut alive = vec![true; g.edge_count()];
    let mut matchings = Vec::with_capacity(r);
    for _ in 0..r {
        let matching = matching_on_alive(g, &partition, &alive)?;
        for &e in &matching {
            alive[e] = false;
        }
        matchings.push(matching);
    }
    debug_assert!(alive.iter().all(|&a| !a), "r rounds must consume every edge");
    Ok(MatchingDecomposition { matchings })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;

    fn is_perfect_matching(g: &Graph, edges: &[usize]) -> bool {
        let mut covered = vec![false; g.vertex_count()];
        for &e in edges {
            let (u, v) = g.endpoints(e);
            if covered[u] || covered[v] {
                return false;
            }
            covered[u] = true;
            covered[v] = true;
        }
        covered.iter().all(|&c| c)
    }

    #[test]
    fn k33_perfect_matching() {
        let g = catalog::complete_bipartite(3, 3);
        let p = g.is_bipartite().unwrap();
        let m = perfect_matching(&g, &p).unwrap();
        assert!(is_perfect_matching(&g, &m));
        // Deterministic: lowest-index augmentation pairs x_i with y_i here.
        assert_eq!(m, perfect_matching(&g, &p).unwrap());
    }

    #[test]
    fn c4_perfect_matching() {
        let g = catalog::cycle(4);
        let p = g.is_bipartite().unwrap();
        let m = perfect_matching(&g, &p).unwrap();
        assert!(is_perfect_matching(&g, &m));
        assert_eq!(m.len(), 2);
    }

    #[test]
    fn p3_has_none() {
        let g = catalog::path(3);
        let p = g.is_bipartite().unwrap();
        assert_eq!(perfect_matching(&g, &p), Err(ConstructionError::NoPerfectMatching));
    }

    #[test]
    fn decomposition_k33() {
        let g = catalog::complete_bipartite(3, 3);
        let d = matching_decomposition(&g).unwrap();
        assert_eq!(d.matchings.len(), 3);
        let mut seen = vec![false; g.edge_count()];
        for m in &d.matchings {
            assert!(is_perfect_matching(&g, m));
            for &e in m {
                assert!(!seen[e], "matchings must be disjoint");
                seen[e] = true;
            }
        }
        assert!(seen.iter().all(|&s| s));
    }

    #[test]
    fn decomposition_even_cycles() {
        for n in [6, 8] {
            let g = catalog::cycle(n);
            let d = matching_decomposition(&g).unwrap();
            assert_eq!(d.matchings.len(), 2);
            for m in &d.matchings {
                assert!(is_perfect_matching(&g, m));
            }
        }
    }

    #[test]
    fn decomposition_preconditions() {
        assert_eq!(
            matching_decomposition(&catalog::star(3)),
            Err(ConstructionError::NotRegular)
        );
        assert_eq!(
            matching_decomposition(&catalog::cycle(5)),
            Err(ConstructionError::NotBipartite)
        );
        assert_eq!(
            matching_decomposition(&Graph::new(2, &[]).unwrap()),
            Err(ConstructionError::NotRegular)
        );
    }
}
