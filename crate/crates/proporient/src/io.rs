//! Text formats: edge lists, orientation witness files, DOT export, and the
//! JSON role sidecar for reduction graphs.
//!
//! Edge-list format: a header line `n m`, then m lines `u v` (0-indexed).
//! Orientation format: m lines `tail head`, line i describing edge i.

use crate::constructions::EdgeColoring;
use crate::graph::{Graph, Orientation};
use crate::reduction::VertexRole;
use std::fmt::Write as _;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum FormatError {
    #[error("line {line}: {message}")]
    Line { line: usize, message: String },
    #[error("graph is invalid: {0}")]
    Graph(#[from] crate::graph::GraphError),
    #[error("role sidecar: {0}")]
    Sidecar(String),
    #[error("edge coloring: {0}")]
    Coloring(String),
}

fn line_error(line: usize, message: impl Into<String>) -> FormatError {
    FormatError::Line { line, message: message.into() }
}

fn parse_pair(line_no: usize, line: &str) -> Result<(usize, usize), FormatError> {
    let mut fields = line.split_whitespace();
    let mut next = |what: &str| {
        fields
            .next()
            .ok_or_else(|| line_error(line_no, format!("missing {what}")))?
            .parse::<usize>()
            .map_err(|_| line_error(line_no, format!("{what} is not a non-negative integer")))
    };
    let pair = (next("first field")?, next("second field")?);
    if fields.next().is_some() {
        return Err(line_error(line_no, "trailing fields"));
    }
    Ok(pair)
}

/// Parses the `n m` / `u v` edge-list format.
pub fn parse_edge_list(text: &str) -> Result<Graph, FormatError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
    let (line_no, header) = lines.next().ok_or_else(|| line_error(1, "empty input"))?;
    let (n, m) = parse_pair(line_no, header)?;
    let mut edges = Vec::with_capacity(m);
    for (line_no, line) in lines {
        edges.push(parse_pair(line_no, line)?);
    }
    if edges.len() != m {
        return Err(line_error(
            line_no,
            format!("header declares {m} edges, found {}", edges.len()),
        ));
    }
    Ok(Graph::new(n, &edges)?)
}

pub fn render_edge_list(g: &Graph) -> String {
    let mut out = format!("{} {}\n", g.vertex_count(), g.edge_count());
    for &(u, v) in g.edges() {
        writeln!(out, "{u} {v}").unwrap();
    }
    out
}

/// Parses an orientation witness against its graph: line i must name the
/// endpoints of edge i in tail-head order.
pub fn parse_orientation(g: &Graph, text: &str) -> Result<Orientation, FormatError> {
    let mut directions = Vec::with_capacity(g.edge_count());
    for (i, line) in text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
    {
        let (tail, head) = parse_pair(i, line)?;
        let edge = directions.len();
        if edge >= g.edge_count() {
            return Err(line_error(i, format!("graph has only {} edges", g.edge_count())));
        }
        let (u, v) = g.endpoints(edge);
        if (tail, head) == (u, v) {
            directions.push(false);
        } else if (tail, head) == (v, u) {
            directions.push(true);
        } else {
            return Err(line_error(
                i,
                format!("edge {edge} joins {u} and {v}, not {tail} and {head}"),
            ));
        }
    }
    Ok(Orientation::new(g, directions)?)
}

pub fn render_orientation(g: &Graph, orientation: &Orientation) -> String {
    let mut out = String::new();
    for edge in 0..g.edge_count() {
        writeln!(out, "{} {}", orientation.tail(g, edge), orientation.head(g, edge)).unwrap();
    }
    out
}

/// Serializes an edge coloring as m lines `edge_index color`.
pub fn render_edge_coloring(coloring: &EdgeColoring) -> String {
    let mut out = String::new();
    for (edge, &color) in coloring.colors().iter().enumerate() {
        writeln!(out, "{edge} {color}").unwrap();
    }
    out
}

/// Parses `edge_index color` lines back into a coloring for `g`; every edge
/// must be colored exactly once.
pub fn parse_edge_coloring(g: &Graph, text: &str) -> Result<EdgeColoring, FormatError> {
    let mut colors = vec![0usize; g.edge_count()];
    let mut assigned = vec![false; g.edge_count()];
    for (line_no, line) in text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
    {
        let (edge, color) = parse_pair(line_no, line)?;
        if edge >= g.edge_count() {
            return Err(line_error(line_no, format!("graph has only {} edges", g.edge_count())));
        }
        if assigned[edge] {
            return Err(line_error(line_no, format!("edge {edge} colored twice")));
        }
        if color == 0 {
            return Err(line_error(line_no, "colors start at 1"));
        }
        assigned[edge] = true;
        colors[edge] = color;
    }
    if let Some(missing) = assigned.iter().position(|&a| !a) {
        return Err(FormatError::Coloring(format!("edge {missing} has no color")));
    }
    let num_colors = colors.iter().copied().max().unwrap_or(0);
    Ok(EdgeColoring::new(colors, num_colors))
}

fn role_shape(role: &VertexRole) -> &'static str {
    match role {
        VertexRole::PositiveLiteral(_) | VertexRole::NegativeLiteral(_) => "box",
        VertexRole::TriangleVertex { .. } => "triangle",
        VertexRole::GadgetVertex { .. } => "diamond",
    }
}

/// Renders DOT text. With an orientation the output is a digraph and vertex
/// labels carry indegrees; with roles the vertices get role labels and
/// role-dependent shapes.
pub fn render_dot(
    g: &Graph,
    orientation: Option<&Orientation>,
    roles: Option<&[VertexRole]>,
) -> String {
    let mut out = String::new();
    let (keyword, connector) =
        if orientation.is_some() { ("digraph", "->") } else { ("graph", "--") };
    writeln!(out, "{keyword} proporient {{").unwrap();
    for v in g.vertices() {
        let mut label = match roles.and_then(|r| r.get(v)) {
            Some(role) => format!("{v}:{role}"),
            None => format!("{v}"),
        };
        if let Some(o) = orientation {
            write!(label, " (in={})", o.indegree(v)).unwrap();
        }
        let shape = roles
            .and_then(|r| r.get(v))
            .map(|role| format!(", shape={}", role_shape(role)))
            .unwrap_or_default();
        writeln!(out, "  {v} [label=\"{label}\"{shape}];").unwrap();
    }
    for edge in 0..g.edge_count() {
        let (a, b) = match orientation {
            Some(o) => (o.tail(g, edge), o.head(g, edge)),
            None => g.endpoints(edge),
        };
        writeln!(out, "  {a} {connector} {b};").unwrap();
    }
    out.push_str("}\n");
    out
}

/// JSON sidecar: an object mapping vertex index strings to role strings.
pub fn render_role_sidecar(roles: &[VertexRole]) -> String {
    let map: serde_json::Map<String, serde_json::Value> = roles
        .iter()
        .enumerate()
        .map(|(v, role)| (v.to_string(), serde_json::Value::String(role.to_string())))
        .collect();
    let mut text = serde_json::to_string_pretty(&serde_json::Value::Object(map))
        .expect("string map serializes");
    text.push('\n');
    text
}

/// Reads a role sidecar back; keys must cover 0..len contiguously.
pub fn parse_role_sidecar(text: &str) -> Result<Vec<VertexRole>, FormatError> {
    let map: std::collections::HashMap<String, String> =
        serde_json::from_str(text).map_err(|e| FormatError::Sidecar(e.to_string()))?;
    let mut roles = vec![None; map.len()];
    for (key, value) in &map {
        let index: usize = key
            .parse()
            .map_err(|_| FormatError::Sidecar(format!("non-integer vertex key `{key}`")))?;
        let role: VertexRole =
            value.parse().map_err(|e: String| FormatError::Sidecar(e))?;
        *roles
            .get_mut(index)
            .ok_or_else(|| FormatError::Sidecar(format!("vertex key {index} out of range")))? =
            Some(role);
    }
    roles
        .into_iter()
        .collect::<Option<Vec<_>>>()
        .ok_or_else(|| FormatError::Sidecar("vertex keys are not contiguous".to_string()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;
    use crate::reduction;
    use proptest::prelude::*;

    #[test]
    fn edge_list_round_trip() {
        let g = catalog::petersen();
        let text = render_edge_list(&g);
        assert!(text.starts_with("10 15\n"));
        assert_eq!(parse_edge_list(&text).unwrap(), g);
    }

    #[test]
    fn edge_list_errors() {
        assert!(matches!(parse_edge_list(""), Err(FormatError::Line { .. })));
        assert!(matches!(parse_edge_list("2 1\n"), Err(FormatError::Line { .. })));
        assert!(matches!(parse_edge_list("2 1\n0 1 9\n"), Err(FormatError::Line { .. })));
        assert!(matches!(parse_edge_list("2 1\n0 2\n"), Err(FormatError::Graph(_))));
    }

    #[test]
    fn orientation_round_trip_and_mismatch() {
        let g = catalog::cycle(4);
        let o = crate::solver::decide(&g, 2).unwrap();
        let text = render_orientation(&g, &o);
        assert_eq!(parse_orientation(&g, &text).unwrap(), o);

        let bad = "0 1\n1 2\n2 3\n0 3\n".replace("1 2", "1 3");
        assert!(matches!(parse_orientation(&g, &bad), Err(FormatError::Line { line: 2, .. })));
        assert!(matches!(parse_orientation(&g, "0 1\n"), Err(FormatError::Graph(_))));
    }

    #[test]
    fn dot_outputs() {
        let g = catalog::complete(4);
        let undirected = render_dot(&g, None, None);
        assert!(undirected.starts_with("graph"));
        assert_eq!(undirected.matches(" -- ").count(), 6);

        let o = crate::solver::decide(&g, 3).unwrap();
        let directed = render_dot(&g, Some(&o), None);
        assert!(directed.starts_with("digraph"));
        assert_eq!(directed.matches(" -> ").count(), 6);
        assert!(directed.contains("(in=3)"));
    }

    #[test]
    fn dot_with_roles_uses_shapes() {
        let phi = reduction::parse_cnf("p cnf 1 1\n1 1 1 0\n").unwrap();
        let rg = reduction::build_reduction(&phi);
        let dot = render_dot(&rg.graph, None, Some(&rg.roles));
        assert!(dot.contains("shape=box"));
        assert!(dot.contains("shape=triangle"));
        assert!(dot.contains("shape=diamond"));
    }

    #[test]
    fn edge_coloring_round_trip() {
        let g = catalog::complete(4);
        let (coloring, _) = crate::constructions::edge_coloring_exact(&g).unwrap();
        let text = render_edge_coloring(&coloring);
        let parsed = parse_edge_coloring(&g, &text).unwrap();
        assert_eq!(parsed, coloring);
        assert!(parsed.is_proper_for(&g));

        assert!(matches!(
            parse_edge_coloring(&g, "0 1\n"),
            Err(FormatError::Coloring(_))
        ));
        assert!(matches!(
            parse_edge_coloring(&g, &format!("{text}0 1\n")),
            Err(FormatError::Line { .. })
        ));
    }

    #[test]
    fn sidecar_round_trip() {
        let phi = reduction::parse_cnf("p cnf 2 1\n1 -2 1 0\n").unwrap();
        let rg = reduction::build_reduction(&phi);
        let text = render_role_sidecar(&rg.roles);
        assert_eq!(parse_role_sidecar(&text).unwrap(), rg.roles);
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(32))]

        #[test]
        fn edge_list_round_trips_any_small_graph(n in 1usize..8, mask in 0u32..1 << 21) {
            let all: Vec<(usize, usize)> =
                (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
            let chosen: Vec<_> = all
                .iter()
                .enumerate()
                .filter(|(i, _)| mask >> (i % 21) & 1 == 1)
                .map(|(_, &e)| e)
                .collect();
            let g = crate::graph::Graph::new(n, &chosen).unwrap();
            prop_assert_eq!(parse_edge_list(&render_edge_list(&g)).unwrap(), g);
        }
    }
}
