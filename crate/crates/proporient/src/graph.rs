//! Immutable simple-graph and orientation representations plus the
//! structural queries everything else is built on.

use thiserror::Error;

/// Errors raised while constructing or combining graphs and orientations.
#[derive(Debug, Error, PartialEq, Eq)]
pub enum GraphError {
    #[error("loop detected at vertex {vertex}")]
    SelfLoop { vertex: usize },
    #[error("duplicate edge {{{u}, {v}}}")]
    DuplicateEdge { u: usize, v: usize },
    #[error("vertex index {vertex} out of range (vertex count {vertex_count})")]
    VertexOutOfRange { vertex: usize, vertex_count: usize },
    #[error("orientation has {actual} directions but the graph has {expected} edges")]
    EdgeCountMismatch { expected: usize, actual: usize },
}

/// A finite simple undirected graph.
///
/// Vertices are `0..vertex_count`. Edges keep their input order and are
/// identified by index, which keeps orientation serialization stable.
/// Values are immutable after construction and freely shareable.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graph {
    vertex_count: usize,
    edges: Vec<(usize, usize)>,
    /// Per-vertex list of (neighbor, edge index), in edge-input order.
    adj: Vec<Vec<(usize, usize)>>,
}

impl Graph {
    /// Builds a graph from an edge list, rejecting loops, duplicate edges
    /// (as unordered pairs) and out-of-range endpoints.
    pub fn new(vertex_count: usize, edge_pairs: &[(usize, usize)]) -> Result<Self, GraphError> {
        let mut adj: Vec<Vec<(usize, usize)>> = vec![Vec::new(); vertex_count];
        let mut seen = std::collections::HashSet::with_capacity(edge_pairs.len());
        for (idx, &(u, v)) in edge_pairs.iter().enumerate() {
            for w in [u, v] {
                if w >= vertex_count {
                    return Err(GraphError::VertexOutOfRange { vertex: w, vertex_count });
                }
            }
            if u == v {
                return Err(GraphError::SelfLoop { vertex: u });
            }
            if !seen.insert((u.min(v), u.max(v))) {
                return Err(GraphError::DuplicateEdge { u, v });
            }
            adj[u].push((v, idx));
            adj[v].push((u, idx));
        }
        Ok(Graph { vertex_count, edges: edge_pairs.to_vec(), adj })
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Edges in input order, as the originally listed (first, second) pairs.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn endpoints(&self, edge: usize) -> (usize, usize) {
        self.edges[edge]
    }

    pub fn vertices(&self) -> std::ops::Range<usize> {
        0..self.vertex_count
    }

    /// Incident (neighbor, edge index) pairs of `v` in edge-input order.
    pub fn neighbors(&self, v: usize) -> &[(usize, usize)] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    /// Maximum degree; 0 for graphs without vertices.
    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn contains_edge(&self, u: usize, v: usize) -> bool {
        if u >= self.vertex_count || v >= self.vertex_count {
            return false;
        }
        let (a, b) = if self.degree(u) <= self.degree(v) { (u, v) } else { (v, u) };
        self.adj[a].iter().any(|&(nb, _)| nb == b)
    }

    /// Degree `r` shared by all vertices, if the graph is regular.
    /// A graph without vertices is not considered regular.
    pub fn regularity(&self) -> Option<usize> {
        let mut degrees = self.adj.iter().map(Vec::len);
        let first = degrees.next()?;
        degrees.all(|d| d == first).then_some(first)
    }

    /// BFS 2-coloring. Within each connected component the lowest-index
    /// vertex is placed on side X, so the returned partition is deterministic.
    pub fn is_bipartite(&self) -> Option<VertexPartition> {
        let mut side = vec![None; self.vertex_count];
        let mut queue = std::collections::VecDeque::new();
        for root in self.vertices() {
            if side[root].is_some() {
                continue;
            }
            side[root] = Some(Side::X);
            queue.push_back(root);
            while let Some(v) = queue.pop_front() {
                let v_side = side[v].unwrap();
                for &(u, _) in &self.adj[v] {
                    match side[u] {
                        None => {
                            side[u] = Some(v_side.opposite());
                            queue.push_back(u);
                        }
                        Some(s) if s == v_side => return None,
                        Some(_) => {}
                    }
                }
            }
        }
        Some(VertexPartition { side: side.into_iter().map(Option::unwrap).collect() })
    }

    /// Connected components as sorted vertex lists, ordered by smallest member.
    pub fn connected_components(&self) -> Vec<Vec<usize>> {
        let mut component = vec![usize::MAX; self.vertex_count];
        let mut components = Vec::new();
        let mut stack = Vec::new();
        for root in self.vertices() {
            if component[root] != usize::MAX {
                continue;
            }
            let id = components.len();
            component[root] = id;
            stack.push(root);
            let mut members = vec![root];
            while let Some(v) = stack.pop() {
                for &(u, _) in &self.adj[v] {
                    if component[u] == usize::MAX {
                        component[u] = id;
                        members.push(u);
                        stack.push(u);
                    }
                }
            }
            members.sort_unstable();
            components.push(members);
        }
        components
    }

    /// The line graph L(G): one vertex per edge of `self` (same index), an
    /// edge between two of them iff the corresponding edges share an endpoint.
    ///
    /// Also returns the edge-of-G to vertex-of-L(G) correspondence, which is
    /// the identity under this indexing.
    pub fn line_graph(&self) -> (Graph, Vec<usize>) {
        let mut line_edges = Vec::new();
        for v in self.vertices() {
            let mut incident: Vec<usize> = self.adj[v].iter().map(|&(_, e)| e).collect();
            incident.sort_unstable();
            for i in 0..incident.len() {
                for j in i + 1..incident.len() {
                    line_edges.push((incident[i], incident[j]));
                }
            }
        }
        // Two distinct edges of a simple graph share at most one endpoint,
        // so no pair is generated twice.
        let graph = Graph::new(self.edge_count(), &line_edges)
            .expect("line graph construction cannot violate simple-graph invariants");
        (graph, (0..self.edge_count()).collect())
    }

    /// True iff `orientation` assigns distinct indegrees to the endpoints of
    /// every edge.
    pub fn is_proper_orientation(&self, orientation: &Orientation) -> Result<bool, GraphError> {
        if orientation.directions.len() != self.edge_count() {
            return Err(GraphError::EdgeCountMismatch {
                expected: self.edge_count(),
                actual: orientation.directions.len(),
            });
        }
        let indegrees = orientation.indegrees();
        Ok(self.edges.iter().all(|&(u, v)| indegrees[u] != indegrees[v]))
    }
}

/// Which side of a bipartition a vertex lies on.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Side {
    X,
    Y,
}

impl Side {
    pub fn opposite(self) -> Side {
        match self {
            Side::X => Side::Y,
            Side::Y => Side::X,
        }
    }
}

/// A 2-coloring of the vertices; valid bipartitions place the endpoints of
/// every edge on opposite sides.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VertexPartition {
    side: Vec<Side>,
}

impl VertexPartition {
    pub fn new(side: Vec<Side>) -> Self {
        VertexPartition { side }
    }

    pub fn side(&self, v: usize) -> Side {
        self.side[v]
    }

    pub fn sides(&self) -> &[Side] {
        &self.side
    }

    pub fn x_vertices(&self) -> impl Iterator<Item = usize> + '_ {
        self.side.iter().enumerate().filter(|(_, s)| **s == Side::X).map(|(v, _)| v)
    }

    pub fn y_vertices(&self) -> impl Iterator<Item = usize> + '_ {
        self.side.iter().enumerate().filter(|(_, s)| **s == Side::Y).map(|(v, _)| v)
    }

    /// Checks that every edge of `g` joins an X-vertex to a Y-vertex.
    pub fn is_valid_for(&self, g: &Graph) -> bool {
        self.side.len() == g.vertex_count()
            && g.edges().iter().all(|&(u, v)| self.side[u] != self.side[v])
    }
}

/// A direction assignment over the edges of a parent [`Graph`], with the
/// derived indegree vector.
///
/// Direction `false` means the edge runs from its first listed endpoint to
/// the second (the second is the head); `true` reverses it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Orientation {
    directions: Vec<bool>,
    indegrees: Vec<usize>,
}

impl Orientation {
    /// Binds a direction vector to `graph`, deriving indegrees.
    pub fn new(graph: &Graph, directions: Vec<bool>) -> Result<Self, GraphError> {
        if directions.len() != graph.edge_count() {
            return Err(GraphError::EdgeCountMismatch {
                expected: graph.edge_count(),
                actual: directions.len(),
            });
        }
        let mut indegrees = vec![0; graph.vertex_count()];
        for (edge, &reversed) in directions.iter().enumerate() {
            let (u, v) = graph.endpoints(edge);
            indegrees[if reversed { u } else { v }] += 1;
        }
        Ok(Orientation { directions, indegrees })
    }

    /// Orients every edge toward the endpoint selected by `head_of`.
    pub fn from_heads(
        graph: &Graph,
        mut head_of: impl FnMut(usize, (usize, usize)) -> usize,
    ) -> Self {
        let directions = graph
            .edges()
            .iter()
            .enumerate()
            .map(|(idx, &(u, v))| {
                let head = head_of(idx, (u, v));
                debug_assert!(head == u || head == v);
                head == u
            })
            .collect();
        Self::new(graph, directions).expect("direction vector built from the same graph")
    }

    pub fn directions(&self) -> &[bool] {
        &self.directions
    }

    pub fn indegrees(&self) -> &[usize] {
        &self.indegrees
    }

    pub fn indegree(&self, v: usize) -> usize {
        self.indegrees[v]
    }

    /// Maximum indegree over all vertices; 0 when there are none.
    pub fn max_indegree(&self) -> usize {
        self.indegrees.iter().copied().max().unwrap_or(0)
    }

    /// Head (receiving endpoint) of `edge` under this orientation.
    pub fn head(&self, graph: &Graph, edge: usize) -> usize {
        let (u, v) = graph.endpoints(edge);
        if self.directions[edge] {
            u
        } else {
            v
        }
    }

    /// Tail (sending endpoint) of `edge` under this orientation.
    pub fn tail(&self, graph: &Graph, edge: usize) -> usize {
        let (u, v) = graph.endpoints(edge);
        if self.directions[edge] {
            v
        } else {
            u
        }
    }

    /// The orientation with every edge flipped.
    pub fn reversed(&self, graph: &Graph) -> Self {
        Self::new(graph, self.directions.iter().map(|d| !d).collect())
            .expect("reversal preserves the edge count")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;

    #[test]
    fn build_k2_and_k4() {
        let k2 = Graph::new(2, &[(0, 1)]).unwrap();
        assert_eq!(k2.edge_count(), 1);
        let k4 = catalog::complete(4);
        assert_eq!(k4.edge_count(), 6);
        assert_eq!(k4.regularity(), Some(3));
    }

    #[test]
    fn build_rejects_invariant_violations() {
        assert_eq!(
            Graph::new(3, &[(0, 1), (0, 1)]).unwrap_err(),
            GraphError::DuplicateEdge { u: 0, v: 1 }
        );
        assert_eq!(
            Graph::new(3, &[(1, 0), (0, 1)]).unwrap_err(),
            GraphError::DuplicateEdge { u: 0, v: 1 }
        );
        assert_eq!(Graph::new(3, &[(2, 2)]).unwrap_err(), GraphError::SelfLoop { vertex: 2 });
        assert_eq!(
            Graph::new(2, &[(0, 2)]).unwrap_err(),
            GraphError::VertexOutOfRange { vertex: 2, vertex_count: 2 }
        );
    }

    #[test]
    fn adjacency_lists_cover_each_edge_twice() {
        let g = catalog::petersen();
        let mut counts = vec![0usize; g.edge_count()];
        for v in g.vertices() {
            for &(_, e) in g.neighbors(v) {
                counts[e] += 1;
            }
        }
        assert!(counts.iter().all(|&c| c == 2));
    }

    #[test]
    fn proper_orientation_examples() {
        let k2 = Graph::new(2, &[(0, 1)]).unwrap();
        let d = Orientation::new(&k2, vec![false]).unwrap();
        assert_eq!(d.indegrees(), &[0, 1]);
        assert!(k2.is_proper_orientation(&d).unwrap());

        // Directed 3-cycle: all indegrees equal 1.
        let k3 = catalog::cycle(3);
        let cyc = Orientation::from_heads(&k3, |_, (u, v)| if v == (u + 1) % 3 { v } else { u });
        assert_eq!(cyc.indegrees(), &[1, 1, 1]);
        assert!(!k3.is_proper_orientation(&cyc).unwrap());

        // Path 0-1-2 oriented 0->1, 2->1.
        let p3 = catalog::path(3);
        let d = Orientation::new(&p3, vec![false, true]).unwrap();
        assert_eq!(d.indegrees(), &[0, 2, 0]);
        assert!(p3.is_proper_orientation(&d).unwrap());
    }

    #[test]
    fn size_mismatch_is_an_error() {
        let k2 = Graph::new(2, &[(0, 1)]).unwrap();
        let k3 = catalog::cycle(3);
        let d = Orientation::new(&k3, vec![false; 3]).unwrap();
        assert!(matches!(
            k2.is_proper_orientation(&d),
            Err(GraphError::EdgeCountMismatch { expected: 1, actual: 3 })
        ));
        assert!(Orientation::new(&k2, vec![false; 3]).is_err());
    }

    #[test]
    fn max_indegree_star_cases() {
        let star = catalog::star(3);
        let inward = Orientation::from_heads(&star, |_, _| 0);
        assert_eq!(inward.max_indegree(), 3);
        let outward = inward.reversed(&star);
        assert_eq!(outward.max_indegree(), 1);
        let edgeless = Graph::new(4, &[]).unwrap();
        let empty = Orientation::new(&edgeless, vec![]).unwrap();
        assert_eq!(empty.max_indegree(), 0);
        assert!(edgeless.is_proper_orientation(&empty).unwrap());
    }

    #[test]
    fn bipartite_examples() {
        let c4 = catalog::cycle(4);
        let p = c4.is_bipartite().unwrap();
        assert_eq!(p.x_vertices().collect::<Vec<_>>(), vec![0, 2]);
        assert_eq!(p.y_vertices().collect::<Vec<_>>(), vec![1, 3]);
        assert!(catalog::cycle(5).is_bipartite().is_none());
        let k33 = catalog::complete_bipartite(3, 3);
        let p = k33.is_bipartite().unwrap();
        assert!(p.is_valid_for(&k33));
        assert_eq!(p.x_vertices().collect::<Vec<_>>(), vec![0, 1, 2]);
    }

    /// Independent 2-coloring oracle: try all 2^n side assignments.
    fn two_colorable_exhaustive(g: &Graph) -> bool {
        let n = g.vertex_count();
        (0u32..1 << n).any(|mask| {
            g.edges().iter().all(|&(u, v)| (mask >> u) & 1 != (mask >> v) & 1)
        })
    }

    #[test]
    fn bipartite_matches_exhaustive_oracle_on_small_graphs() {
        // Every labeled graph on up to 5 vertices.
        for n in 0..=5usize {
            let pairs: Vec<(usize, usize)> =
                (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
            for mask in 0u32..1 << pairs.len() {
                let chosen: Vec<_> = pairs
                    .iter()
                    .enumerate()
                    .filter(|(i, _)| (mask >> i) & 1 == 1)
                    .map(|(_, &e)| e)
                    .collect();
                let g = Graph::new(n, &chosen).unwrap();
                assert_eq!(g.is_bipartite().is_some(), two_colorable_exhaustive(&g));
                if let Some(p) = g.is_bipartite() {
                    assert!(p.is_valid_for(&g));
                }
            }
        }
    }

    #[test]
    fn regularity_examples() {
        assert_eq!(catalog::petersen().regularity(), Some(3));
        assert_eq!(catalog::star(3).regularity(), None);
        assert_eq!(Graph::new(4, &[]).unwrap().regularity(), Some(0));
    }

    #[test]
    fn line_graph_examples() {
        // P3 has two edges sharing the middle vertex: L(P3) = K2.
        let (l, map) = catalog::path(3).line_graph();
        assert_eq!((l.vertex_count(), l.edge_count()), (2, 1));
        assert_eq!(map, vec![0, 1]);

        // K3 is its own line graph.
        let (l, _) = catalog::cycle(3).line_graph();
        assert_eq!((l.vertex_count(), l.edge_count()), (3, 3));

        // L(K4): brute-force pairwise incidence over the 6 edges of K4.
        let k4 = catalog::complete(4);
        let mut expected = Vec::new();
        for i in 0..k4.edge_count() {
            for j in i + 1..k4.edge_count() {
                let (a, b) = k4.endpoints(i);
                let (c, d) = k4.endpoints(j);
                if a == c || a == d || b == c || b == d {
                    expected.push((i, j));
                }
            }
        }
        let (l, _) = k4.line_graph();
        assert_eq!(l.vertex_count(), 6);
        assert_eq!(l.edge_count(), expected.len());
        assert_eq!(expected.len(), 12);
        assert!(expected.iter().all(|&(i, j)| l.contains_edge(i, j)));
        assert_eq!(l.regularity(), Some(4));
    }

    #[test]
    fn line_graph_count_identities() {
        for g in [catalog::petersen(), catalog::complete(5), catalog::star(4)] {
            let (l, _) = g.line_graph();
            assert_eq!(l.vertex_count(), g.edge_count());
            let pairs: usize = g.vertices().map(|v| g.degree(v) * (g.degree(v) - 1) / 2).sum();
            assert_eq!(l.edge_count(), pairs);
        }
    }

    #[test]
    fn components_are_sorted_and_complete() {
        let g = Graph::new(6, &[(3, 4), (0, 1), (4, 5)]).unwrap();
        assert_eq!(g.connected_components(), vec![vec![0, 1], vec![2], vec![3, 4, 5]]);
    }
}
