use core::fmt;

/// Graph construction failures.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GraphError {
    OrderOutOfRange { order: usize },
    VertexOutOfRange { u: usize, v: usize, order: usize },
    Loop { v: usize },
    DuplicateEdge { u: usize, v: usize },
    Asymmetric { u: usize, v: usize },
}

impl fmt::Display for GraphError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            GraphError::OrderOutOfRange { order } => {
                write!(f, "vertex count {order} outside supported range 1..={}", crate::MAX_ORDER)
            }
            GraphError::VertexOutOfRange { u, v, order } => {
                write!(f, "pair {u}{v} has an endpoint outside 0..{order}")
            }
            GraphError::Loop { v } => write!(f, "pair {v}{v} is a loop"),
            GraphError::DuplicateEdge { u, v } => write!(f, "pair {u}{v} appears twice"),
            GraphError::Asymmetric { u, v } => write!(f, "adjacency {u}->{v} has no reverse entry"),
        }
    }
}

impl core::error::Error for GraphError {}

/// Failures of orientation-level operations.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum OrientError {
    /// The direction assignment does not cover exactly the edges.
    AssignmentLength { expected: usize, found: usize },
    /// Two orientations were compared over different underlying graphs.
    BaseMismatch,
    /// `agree_status` was asked about a vertex that is not a common neighbor.
    NotCommonNeighbor { u: usize, v: usize, w: usize },
    /// A brute-force routine was given a graph above its order limit.
    OrderTooLarge { order: usize, limit: usize },
    /// Both `u -> v` and `v -> u`, or a loop, in a directed input.
    NotOriented { u: usize, v: usize },
}

impl fmt::Display for OrientError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            OrientError::AssignmentLength { expected, found } => {
                write!(f, "direction assignment has {found} entries, graph has {expected} edges")
            }
            OrientError::BaseMismatch => f.write_str("orientations have different underlying graphs"),
            OrientError::NotCommonNeighbor { u, v, w } => {
                write!(f, "vertex {w} is not a common neighbor of distinct vertices {u} and {v}")
            }
            OrientError::OrderTooLarge { order, limit } => {
                write!(f, "order {order} exceeds the brute-force limit {limit}")
            }
            OrientError::NotOriented { u, v } => {
                write!(f, "arcs {u}->{v} and {v}->{u} (or a loop) are not an oriented graph")
            }
        }
    }
}

impl core::error::Error for OrientError {}

/// Budget and range failures of the exhaustive deciders.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DecideError {
    /// More edges than the orientation search may enumerate.
    EdgeBudget {
        edges: usize,
        limit: usize,
    },
    /// More push classes than the class search may enumerate.
    ClassBudget {
        cycle_rank: usize,
        limit: usize,
    },
    /// An order argument outside the supported range.
    OrderOutOfRange {
        order: usize,
        min: usize,
        max: usize,
    },
    Graph(GraphError),
}

impl fmt::Display for DecideError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            DecideError::EdgeBudget { edges, limit } => {
                write!(f, "{edges} edges exceed the orientation budget of {limit} edges")
            }
            DecideError::ClassBudget { cycle_rank, limit } => {
                write!(f, "2^{cycle_rank} push classes exceed the budget of 2^{limit}")
            }
            DecideError::OrderOutOfRange { order, min, max } => {
                write!(f, "order {order} outside supported range {min}..={max}")
            }
            DecideError::Graph(e) => write!(f, "{e}"),
        }
    }
}

impl core::error::Error for DecideError {}

impl From<GraphError> for DecideError {
    fn from(e: GraphError) -> Self {
        DecideError::Graph(e)
    }
}
