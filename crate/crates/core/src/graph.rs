//! Simple undirected graphs of maximum degree three and the poles built on them.

use crate::error::{Error, Result};

pub type Vertex = usize;

/// An undirected edge, always stored with the smaller endpoint first.
pub type Edge = (Vertex, Vertex);

/// A simple undirected graph on vertices `0..order`.
///
/// Edges are normalized to `u < v` and kept sorted lexicographically, so an
/// edge index is a stable identifier that even factors refer to.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    order: usize,
    edges: Vec<Edge>,
    adjacency: Vec<Vec<Vertex>>,
}

impl Graph {
    /// Builds a graph, rejecting out-of-range endpoints, loops and duplicate edges.
    pub fn new(order: usize, edges: impl IntoIterator<Item = Edge>) -> Result<Self> {
        let mut normalized = Vec::new();
        for (u, v) in edges {
            for w in [u, v] {
                if w >= order {
                    return Err(Error::VertexOutOfRange { vertex: w, order });
                }
            }
            if u == v {
                return Err(Error::Loop(u));
            }
            normalized.push((u.min(v), u.max(v)));
        }
        normalized.sort_unstable();
        if let Some(w) = normalized.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::DuplicateEdge(w[0].0, w[0].1));
        }
        let mut adjacency = vec![Vec::new(); order];
        for &(u, v) in &normalized {
            adjacency[u].push(v);
            adjacency[v].push(u);
        }
        for list in &mut adjacency {
            list.sort_unstable();
        }
        Ok(Graph {
            order,
            edges: normalized,
            adjacency,
        })
    }

    pub fn empty(order: usize) -> Self {
        Graph {
            order,
            edges: Vec::new(),
            adjacency: vec![Vec::new(); order],
        }
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn size(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn edge(&self, index: usize) -> Edge {
        self.edges[index]
    }

    /// Neighbours of `v` in increasing order.
    pub fn neighbors(&self, v: Vertex) -> &[Vertex] {
        &self.adjacency[v]
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.adjacency[v].len()
    }

    pub fn max_degree(&self) -> usize {
        self.adjacency.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        self.edge_index(u, v).is_some()
    }

    pub fn edge_index(&self, u: Vertex, v: Vertex) -> Option<usize> {
        let key = (u.min(v), u.max(v));
        self.edges.binary_search(&key).ok()
    }

    /// True iff every vertex has degree exactly three.
    ///
    /// Graphs on fewer than four vertices are never cubic: no simple cubic
    /// graph exists below `K4`.
    pub fn is_cubic(&self) -> bool {
        self.order >= 4 && self.adjacency.iter().all(|a| a.len() == 3)
    }

    pub fn is_connected(&self) -> bool {
        self.components() <= 1
    }

    /// Number of connected components.
    pub fn components(&self) -> usize {
        let mut seen = vec![false; self.order];
        let mut count = 0;
        let mut stack = Vec::new();
        for s in 0..self.order {
            if seen[s] {
                continue;
            }
            count += 1;
            seen[s] = true;
            stack.push(s);
            while let Some(x) = stack.pop() {
                for &y in &self.adjacency[x] {
                    if !seen[y] {
                        seen[y] = true;
                        stack.push(y);
                    }
                }
            }
        }
        count
    }

    /// The graph with every vertex id shifted by `offset`, as an edge list.
    pub(crate) fn shifted_edges(&self, offset: usize) -> impl Iterator<Item = Edge> + '_ {
        self.edges.iter().map(move |&(u, v)| (u + offset, v + offset))
    }

    /// Subgraph induced by the vertices where `keep` is true, relabelled densely
    /// in increasing order. Returns the graph and the old-to-new map.
    pub fn induced(&self, keep: &[bool]) -> (Graph, Vec<Option<Vertex>>) {
        let mut map = vec![None; self.order];
        let mut next = 0;
        for v in 0..self.order {
            if keep[v] {
                map[v] = Some(next);
                next += 1;
            }
        }
        let edges = self
            .edges
            .iter()
            .filter_map(|&(u, v)| Some((map[u]?, map[v]?)))
            .collect::<Vec<_>>();
        (
            Graph::new(next, edges).expect("induced subgraph of a simple graph is simple"),
            map,
        )
    }
}

/// Checks a raw edge list: structural errors for malformed input, otherwise
/// whether the graph is cubic.
pub fn validate_cubic(order: usize, edges: &[Edge]) -> Result<bool> {
    Ok(Graph::new(order, edges.iter().copied())?.is_cubic())
}

/// A cubic graph fragment with two or three dangling edges.
///
/// `stubs[i]` is the inner vertex that dangling edge `i` is attached to. A
/// vertex may carry several stubs (the one-vertex 3-pole carries all three).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Pole {
    inner: Graph,
    stubs: Vec<Vertex>,
}

impl Pole {
    pub fn new(inner: Graph, stubs: Vec<Vertex>) -> Result<Self> {
        if !(2..=3).contains(&stubs.len()) {
            return Err(Error::InvalidPole(format!(
                "arity must be 2 or 3, got {}",
                stubs.len()
            )));
        }
        let mut stub_count = vec![0usize; inner.order()];
        for &s in &stubs {
            if s >= inner.order() {
                return Err(Error::VertexOutOfRange {
                    vertex: s,
                    order: inner.order(),
                });
            }
            stub_count[s] += 1;
        }
        for v in 0..inner.order() {
            let total = inner.degree(v) + stub_count[v];
            if total != 3 {
                return Err(Error::InvalidPole(format!(
                    "vertex {v} has degree {total} counting stubs"
                )));
            }
        }
        Ok(Pole { inner, stubs })
    }

    pub fn inner(&self) -> &Graph {
        &self.inner
    }

    pub fn stubs(&self) -> &[Vertex] {
        &self.stubs
    }

    pub fn arity(&self) -> usize {
        self.stubs.len()
    }

    pub fn order(&self) -> usize {
        self.inner.order()
    }

    pub(crate) fn expect_arity(&self, expected: usize) -> Result<()> {
        if self.arity() == expected {
            Ok(())
        } else {
            Err(Error::UnsupportedArity {
                expected,
                actual: self.arity(),
            })
        }
    }
}
