//! From 3-SAT formulas to graphs whose proper orientation number is 2
//! exactly when the formula is satisfiable, with certificate translation in
//! both directions.
//!
//! Each variable contributes a 5-vertex block H: the literal pair joined by
//! an edge, plus a triangle whose first corner points at both literals. Each
//! clause contributes a 12-vertex gadget (see [`ClauseGadget`]) whose three
//! boundary vertices are wired to the clause's literal occurrences. In any
//! proper orientation with maximum indegree 2 the triangle forces literal
//! indegrees {1, 2}, connector edges are forced outward from the literals,
//! and the gadget blocks the all-false boundary pattern.

mod gadget;

pub use gadget::{
    gadget_contract_check, ClauseGadget, ContractReport, GadgetError, BOUNDARY, MAX_GADGET_EDGES,
};

use crate::graph::{Graph, GraphError, Orientation};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ReductionError {
    #[error("cnf syntax: {message}")]
    CnfSyntax { message: String },
    #[error("clause {clause} has {arity} literals, exactly 3 required")]
    ClauseArity { clause: usize, arity: usize },
    #[error("literal references variable {variable} but the formula declares {declared}")]
    VariableOutOfRange { variable: usize, declared: usize },
    #[error(transparent)]
    Gadget(#[from] GadgetError),
    #[error("assignment covers {actual} variables, formula has {expected}")]
    AssignmentSize { expected: usize, actual: usize },
    #[error("clause {clause} admits no gadget extension; the assignment does not satisfy it")]
    UnsatisfiedClause { clause: usize },
    #[error("orientation has {actual} directions, reduction graph has {expected} edges")]
    WitnessEdgeCount { expected: usize, actual: usize },
    #[error("orientation is not proper on the reduction graph")]
    ImproperWitness,
    #[error("orientation has maximum indegree {max}, the reduction argument needs at most 2")]
    WitnessIndegreeTooHigh { max: usize },
    #[error("literal vertex {vertex} has indegree {indegree}, expected 1 or 2")]
    LiteralIndegreeUnexpected { vertex: usize, indegree: usize },
    #[error("extracted assignment does not satisfy the formula")]
    ExtractedUnsatisfying,
}

impl From<GraphError> for ReductionError {
    fn from(e: GraphError) -> Self {
        match e {
            GraphError::EdgeCountMismatch { expected, actual } => {
                ReductionError::WitnessEdgeCount { expected, actual }
            }
            other => ReductionError::CnfSyntax { message: other.to_string() },
        }
    }
}

/// A literal: variable index plus polarity.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Lit {
    pub var: usize,
    pub negated: bool,
}

impl Lit {
    pub fn positive(var: usize) -> Self {
        Lit { var, negated: false }
    }

    pub fn negative(var: usize) -> Self {
        Lit { var, negated: true }
    }

    pub fn satisfied_by(&self, assignment: &Assignment) -> bool {
        assignment.value(self.var) != self.negated
    }
}

/// A 3-SAT formula: every clause holds exactly three literal slots; repeats
/// within a clause are permitted.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Formula {
    variable_count: usize,
    clauses: Vec<[Lit; 3]>,
}

impl Formula {
    pub fn new(variable_count: usize, clauses: Vec<[Lit; 3]>) -> Result<Self, ReductionError> {
        for clause in &clauses {
            for lit in clause {
                if lit.var >= variable_count {
                    return Err(ReductionError::VariableOutOfRange {
                        variable: lit.var,
                        declared: variable_count,
                    });
                }
            }
        }
        Ok(Formula { variable_count, clauses })
    }

    pub fn variable_count(&self) -> usize {
        self.variable_count
    }

    pub fn clauses(&self) -> &[[Lit; 3]] {
        &self.clauses
    }

    pub fn evaluate(&self, assignment: &Assignment) -> bool {
        self.clauses.iter().all(|c| c.iter().any(|l| l.satisfied_by(assignment)))
    }
}

/// A total truth assignment.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Assignment {
    values: Vec<bool>,
}

impl Assignment {
    pub fn new(values: Vec<bool>) -> Self {
        Assignment { values }
    }

    pub fn value(&self, var: usize) -> bool {
        self.values[var]
    }

    pub fn values(&self) -> &[bool] {
        &self.values
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }
}

/// Parses DIMACS CNF text into a [`Formula`], requiring exactly three
/// literals per clause. Comment lines start with `c`; a `%` line ends the
/// input early, as in common benchmark files.
pub fn parse_cnf(text: &str) -> Result<Formula, ReductionError> {
    let syntax = |message: &str| ReductionError::CnfSyntax { message: message.to_string() };
    let mut header: Option<(usize, usize)> = None;
    let mut clauses: Vec<[Lit; 3]> = Vec::new();
    let mut current: Vec<Lit> = Vec::new();
    for line in text.lines() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('c') {
            continue;
        }
        if line.starts_with('%') {
            break;
        }
        if line.starts_with('p') {
            if header.is_some() {
                return Err(syntax("duplicate header"));
            }
            let fields: Vec<&str> = line.split_whitespace().collect();
            match fields.as_slice() {
                ["p", "cnf", vars, cls] => {
                    let vars = vars.parse().map_err(|_| syntax("bad variable count"))?;
                    let cls = cls.parse().map_err(|_| syntax("bad clause count"))?;
                    header = Some((vars, cls));
                }
                _ => return Err(syntax("malformed header, expected `p cnf VARS CLAUSES`")),
            }
            continue;
        }
        let Some((declared_vars, _)) = header else {
            return Err(syntax("clause data before the `p cnf` header"));
        };
        for token in line.split_whitespace() {
            let value: i64 = token
                .parse()
                .map_err(|_| syntax(&format!("unexpected token `{token}`")))?;
            if value == 0 {
                let arity = current.len();
                let Ok(clause): Result<[Lit; 3], _> = current.as_slice().try_into() else {
                    return Err(ReductionError::ClauseArity { clause: clauses.len(), arity });
                };
                clauses.push(clause);
                current.clear();
                continue;
            }
            let var = value.unsigned_abs() as usize - 1;
            if var >= declared_vars {
                return Err(ReductionError::VariableOutOfRange {
                    variable: var,
                    declared: declared_vars,
                });
            }
            current.push(Lit { var, negated: value < 0 });
        }
    }
    if !current.is_empty() {
        return Err(ReductionError::CnfSyntax {
            message: "unterminated clause at end of input".to_string(),
        });
    }
    let (vars, declared_clauses) = header.ok_or_else(|| syntax("missing `p cnf` header"))?;
    if clauses.len() != declared_clauses {
        return Err(syntax(&format!(
            "header declares {declared_clauses} clauses, found {}",
            clauses.len()
        )));
    }
    Formula::new(vars, clauses)
}

/// The incidence graph: one vertex per clause and per literal, a clause
/// adjacent to the literals it uses, and each positive literal adjacent to
/// its negation. Repeated literals collapse to a single edge.
///
/// Vertex layout: variable i occupies 2i (positive) and 2i+1 (negative);
/// clause j sits at 2 * variable_count + j.
#[derive(Clone, Debug)]
pub struct IncidenceReport {
    pub graph: Graph,
    /// The Euler necessary condition m <= 3n - 6 (planarity sanity flag;
    /// full planarity testing is out of scope).
    pub euler_condition_holds: bool,
}

pub fn incidence_graph(phi: &Formula) -> IncidenceReport {
    let nv = phi.variable_count();
    let vertex_count = 2 * nv + phi.clauses().len();
    let mut edges = Vec::new();
    for i in 0..nv {
        edges.push((2 * i, 2 * i + 1));
    }
    for (j, clause) in phi.clauses().iter().enumerate() {
        let cv = 2 * nv + j;
        let mut used = [usize::MAX; 3];
        for lit in clause {
            let lv = 2 * lit.var + usize::from(lit.negated);
            if !used.contains(&lv) {
                edges.push((lv, cv));
                *used.iter_mut().find(|slot| **slot == usize::MAX).unwrap() = lv;
            }
        }
    }
    let graph = Graph::new(vertex_count, &edges).expect("incidence construction is simple");
    let (n, m) = (graph.vertex_count(), graph.edge_count());
    let euler_condition_holds = n < 3 || m + 6 <= 3 * n;
    IncidenceReport { graph, euler_condition_holds }
}

/// What a reduction-graph vertex stands for.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum VertexRole {
    /// The vertex for x_i.
    PositiveLiteral(usize),
    /// The vertex for the negation of x_i.
    NegativeLiteral(usize),
    /// Triangle corner t (1..=3) of variable i's block.
    TriangleVertex { variable: usize, corner: u8 },
    /// Gadget vertex s^t (1..=12) of clause j.
    GadgetVertex { clause: usize, position: u8 },
}

impl std::fmt::Display for VertexRole {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            VertexRole::PositiveLiteral(i) => write!(f, "x{i}"),
            VertexRole::NegativeLiteral(i) => write!(f, "not_x{i}"),
            VertexRole::TriangleVertex { variable, corner } => write!(f, "x{variable}_t{corner}"),
            VertexRole::GadgetVertex { clause, position } => write!(f, "c{clause}_s{position}"),
        }
    }
}

impl std::str::FromStr for VertexRole {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || format!("unrecognized vertex role `{s}`");
        if let Some(rest) = s.strip_prefix("not_x") {
            return rest.parse().map(VertexRole::NegativeLiteral).map_err(|_| bad());
        }
        if let Some(rest) = s.strip_prefix('c') {
            let (clause, position) = rest.split_once("_s").ok_or_else(bad)?;
            return Ok(VertexRole::GadgetVertex {
                clause: clause.parse().map_err(|_| bad())?,
                position: position.parse().map_err(|_| bad())?,
            });
        }
        if let Some(rest) = s.strip_prefix('x') {
            if let Some((variable, corner)) = rest.split_once("_t") {
                return Ok(VertexRole::TriangleVertex {
                    variable: variable.parse().map_err(|_| bad())?,
                    corner: corner.parse().map_err(|_| bad())?,
                });
            }
            return rest.parse().map(VertexRole::PositiveLiteral).map_err(|_| bad());
        }
        Err(bad())
    }
}

/// The reduction graph with its vertex role map and the list of connector
/// edges (literal vertex, gadget boundary vertex) in clause and slot order.
#[derive(Clone, Debug)]
pub struct ReductionGraph {
    pub graph: Graph,
    pub roles: Vec<VertexRole>,
    pub connector_edges: Vec<(usize, usize)>,
    gadget: ClauseGadget,
}

impl ReductionGraph {
    pub fn gadget(&self) -> &ClauseGadget {
        &self.gadget
    }

    /// Vertex of the literal `lit` (layout: variable i occupies 5i..5i+5).
    pub fn literal_vertex(&self, lit: Lit) -> usize {
        5 * lit.var + usize::from(lit.negated)
    }
}

/// Number of vertices 5 per variable, 12 per clause; edges 6 per variable,
/// the gadget's internal edges plus 3 connectors per clause.
pub fn build_reduction(phi: &Formula) -> ReductionGraph {
    build_reduction_with_gadget(phi, ClauseGadget::standard())
}

pub fn build_reduction_with_gadget(phi: &Formula, gadget: ClauseGadget) -> ReductionGraph {
    let nv = phi.variable_count();
    let vertex_count = 5 * nv + 12 * phi.clauses().len();
    let mut edges = Vec::new();
    let mut roles = Vec::with_capacity(vertex_count);
    let mut connector_edges = Vec::with_capacity(3 * phi.clauses().len());

    for i in 0..nv {
        let [x, nx, t1, t2, t3] = [5 * i, 5 * i + 1, 5 * i + 2, 5 * i + 3, 5 * i + 4];
        edges.extend([(t1, t2), (t2, t3), (t1, t3), (x, t1), (nx, t1), (x, nx)]);
        roles.push(VertexRole::PositiveLiteral(i));
        roles.push(VertexRole::NegativeLiteral(i));
        for corner in 1..=3u8 {
            roles.push(VertexRole::TriangleVertex { variable: i, corner });
        }
    }
    for (j, clause) in phi.clauses().iter().enumerate() {
        let base = 5 * nv + 12 * j;
        for position in 1..=12u8 {
            roles.push(VertexRole::GadgetVertex { clause: j, position });
        }
        for &(a, b) in gadget.edges() {
            edges.push((base + a as usize - 1, base + b as usize - 1));
        }
        for (t, lit) in clause.iter().enumerate() {
            let lv = 5 * lit.var + usize::from(lit.negated);
            let sv = base + t;
            edges.push((lv, sv));
            connector_edges.push((lv, sv));
        }
    }
    let graph =
        Graph::new(vertex_count, &edges).expect("reduction construction yields a simple graph");
    ReductionGraph { graph, roles, connector_edges, gadget }
}

/// Orients the reduction graph of `phi` along a satisfying assignment,
/// producing a proper orientation with maximum indegree 2.
///
/// Fixed part: all edges leave the first triangle corner, the triangle runs
/// corner 2 to corner 3, the literal pair edge points from the true to the
/// false literal, and every connector leaves its literal. Each clause
/// gadget's interior is then completed by exhaustive search; a clause the
/// assignment fails to satisfy has no completion and is reported as the
/// error.
pub fn assignment_to_orientation(
    phi: &Formula,
    gamma: &Assignment,
) -> Result<Orientation, ReductionError> {
    orient_reduction(&build_reduction(phi), phi, gamma)
}

/// [`assignment_to_orientation`] against an already-built reduction graph.
pub fn orient_reduction(
    rg: &ReductionGraph,
    phi: &Formula,
    gamma: &Assignment,
) -> Result<Orientation, ReductionError> {
    let nv = phi.variable_count();
    if gamma.len() != nv {
        return Err(ReductionError::AssignmentSize { expected: nv, actual: gamma.len() });
    }
    let gadget_edges = rg.gadget.edge_count();
    let mut directions = vec![false; rg.graph.edge_count()];
    for i in 0..nv {
        let base = 6 * i;
        // (t1,t2), (t2,t3), (t1,t3) already run low-to-high: leave false.
        directions[base + 3] = true; // (x, t1) reversed: t1 -> x
        directions[base + 4] = true; // (nx, t1) reversed: t1 -> nx
        directions[base + 5] = !gamma.value(i); // (x, nx): true literal is the tail
    }
    for (j, clause) in phi.clauses().iter().enumerate() {
        let base = 6 * nv + (gadget_edges + 3) * j;
        let mut targets = [0usize; 3];
        for (t, lit) in clause.iter().enumerate() {
            let literal_indegree = if lit.satisfied_by(gamma) { 1 } else { 2 };
            targets[t] = 3 - literal_indegree;
        }
        let extension = gadget::find_extension(&rg.gadget, targets)
            .ok_or(ReductionError::UnsatisfiedClause { clause: j })?;
        directions[base..base + gadget_edges].copy_from_slice(&extension);
        // Connectors (lv, sv) stay false: literal to gadget.
    }
    let orientation =
        Orientation::new(&rg.graph, directions).expect("directions sized to the reduction graph");
    debug_assert!(rg.graph.is_proper_orientation(&orientation).unwrap());
    debug_assert!(orientation.max_indegree() <= 2);
    Ok(orientation)
}

/// Reads a truth assignment off a proper orientation of the reduction graph
/// with maximum indegree 2: a positive literal vertex with indegree 1 means
/// true, 2 means false. The extracted assignment is verified against `phi`
/// before being returned.
pub fn orientation_to_assignment(
    phi: &Formula,
    orientation: &Orientation,
) -> Result<Assignment, ReductionError> {
    let rg = build_reduction(phi);
    extract_assignment(&rg, phi, orientation)
}

/// [`orientation_to_assignment`] against an already-built reduction graph.
pub fn extract_assignment(
    rg: &ReductionGraph,
    phi: &Formula,
    orientation: &Orientation,
) -> Result<Assignment, ReductionError> {
    if !rg.graph.is_proper_orientation(orientation)? {
        return Err(ReductionError::ImproperWitness);
    }
    let max = orientation.max_indegree();
    if max > 2 {
        return Err(ReductionError::WitnessIndegreeTooHigh { max });
    }
    let mut values = Vec::with_capacity(phi.variable_count());
    for i in 0..phi.variable_count() {
        let vertex = 5 * i;
        match orientation.indegree(vertex) {
            1 => values.push(true),
            2 => values.push(false),
            indegree => {
                return Err(ReductionError::LiteralIndegreeUnexpected { vertex, indegree })
            }
        }
    }
    let gamma = Assignment::new(values);
    if !phi.evaluate(&gamma) {
        return Err(ReductionError::ExtractedUnsatisfying);
    }
    Ok(gamma)
}
