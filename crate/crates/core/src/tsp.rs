//! Exact graphic TSP via minimum excess, tour certificates, and a Held-Karp
//! oracle on the shortest-path metric.

use std::collections::VecDeque;

use crate::error::{Error, Result};
use crate::excess::{min_excess, SolverConfig};
use crate::factor::{factor_stats, EvenFactor};
use crate::graph::{Graph, Vertex};
use crate::par::Execution;

/// Default largest graph the Held-Karp oracle accepts.
pub const DEFAULT_ORACLE_BUDGET: usize = 18;

/// A closed walk given as a cyclic vertex sequence; the step from the last
/// vertex back to the first is part of the walk.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Tour {
    pub walk: Vec<Vertex>,
}

impl Tour {
    /// Number of edge traversals.
    pub fn length(&self) -> usize {
        if self.walk.len() < 2 {
            0
        } else {
            self.walk.len()
        }
    }

    /// Checks that the walk is closed over edges of `g`, visits every vertex,
    /// and traverses no edge more than twice.
    pub fn validate(&self, g: &Graph) -> Result<()> {
        let bad = |m: String| Err(Error::Domain(format!("invalid tour: {m}")));
        let mut seen = vec![false; g.order()];
        for &v in &self.walk {
            if v >= g.order() {
                return bad(format!("vertex {v} out of range"));
            }
            seen[v] = true;
        }
        if let Some(v) = seen.iter().position(|s| !s) {
            return bad(format!("vertex {v} not visited"));
        }
        if self.walk.len() < 2 {
            return Ok(());
        }
        let mut uses = vec![0u8; g.size()];
        for i in 0..self.walk.len() {
            let (a, b) = (self.walk[i], self.walk[(i + 1) % self.walk.len()]);
            let Some(e) = g.edge_index(a, b) else {
                return bad(format!("{a}-{b} is not an edge"));
            };
            uses[e] += 1;
            if uses[e] > 2 {
                return bad(format!("edge {a}-{b} traversed more than twice"));
            }
        }
        Ok(())
    }
}

#[derive(Debug, Clone)]
pub struct TspResult {
    pub length: u64,
    pub excess: u32,
    pub tour: Tour,
    pub factor: EvenFactor,
}

/// Exact graphic-TSP length of a connected subcubic graph: `|V| - 2` plus the
/// minimum excess, with a tour built from a minimizing even factor.
pub fn tsp_length(g: &Graph, cfg: &SolverConfig) -> Result<TspResult> {
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let best = min_excess(g, cfg)?;
    let tour = tour_from_even_factor(g, &best.witness)?;
    let length = (g.order() as u64 + best.excess as u64).saturating_sub(2);
    debug_assert_eq!(tour.length() as u64, length);
    Ok(TspResult {
        length,
        excess: best.excess,
        tour,
        factor: best.witness,
    })
}

/// Builds a tour of length `|V| - 2 + 2c + v` from an even factor: contract
/// each circuit, double a breadth-first spanning tree of the contracted
/// graph (rooted at the lowest-id class), and walk the resulting Eulerian
/// multigraph with Hierholzer's algorithm, always leaving by the lowest-id
/// neighbour.
pub fn tour_from_even_factor(g: &Graph, f: &EvenFactor) -> Result<Tour> {
    if !f.stubs.is_empty() {
        return Err(Error::InvalidFactor("closed graphs have no stubs".into()));
    }
    factor_stats(g, f)?;
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let n = g.order();
    if n == 1 {
        return Ok(Tour { walk: vec![0] });
    }
    let mut in_factor = vec![false; g.size()];
    for &e in &f.edges {
        in_factor[e] = true;
    }
    // classes: circuits of the factor and isolated vertices
    let mut class = vec![usize::MAX; n];
    let mut classes = 0;
    for s in 0..n {
        if class[s] != usize::MAX {
            continue;
        }
        let mut stack = vec![s];
        class[s] = classes;
        while let Some(x) = stack.pop() {
            for &y in g.neighbors(x) {
                if class[y] == usize::MAX && in_factor[g.edge_index(x, y).unwrap()] {
                    class[y] = classes;
                    stack.push(y);
                }
            }
        }
        classes += 1;
    }
    // breadth-first spanning tree over classes; class 0 holds vertex 0
    let mut multi: Vec<(Vertex, Vertex)> = f.edges.iter().map(|&e| g.edge(e)).collect();
    let mut reached = vec![false; classes];
    reached[class[0]] = true;
    let mut queue = VecDeque::new();
    let mut members = vec![Vec::new(); classes];
    for v in 0..n {
        members[class[v]].push(v);
    }
    queue.push_back(class[0]);
    while let Some(c) = queue.pop_front() {
        for &x in &members[c] {
            for &y in g.neighbors(x) {
                if !reached[class[y]] {
                    reached[class[y]] = true;
                    multi.push((x, y));
                    multi.push((x, y));
                    queue.push_back(class[y]);
                }
            }
        }
    }
    Ok(Tour {
        walk: euler_circuit(n, &multi, 0),
    })
}

/// Hierholzer's algorithm on a connected multigraph with even degrees.
fn euler_circuit(n: usize, edges: &[(Vertex, Vertex)], start: Vertex) -> Vec<Vertex> {
    let mut adj: Vec<Vec<(Vertex, usize)>> = vec![Vec::new(); n];
    for (id, &(u, v)) in edges.iter().enumerate() {
        adj[u].push((v, id));
        adj[v].push((u, id));
    }
    for list in &mut adj {
        // popped from the back, so keep the lowest neighbour last
        list.sort_unstable_by(|a, b| b.cmp(a));
    }
    let mut used = vec![false; edges.len()];
    let mut stack = vec![start];
    let mut circuit = Vec::with_capacity(edges.len() + 1);
    while let Some(&x) = stack.last() {
        while adj[x].last().is_some_and(|&(_, id)| used[id]) {
            adj[x].pop();
        }
        match adj[x].pop() {
            Some((y, id)) => {
                used[id] = true;
                stack.push(y);
            }
            None => {
                circuit.push(x);
                stack.pop();
            }
        }
    }
    circuit.reverse();
    circuit.pop();
    circuit
}

/// All-pairs shortest path lengths by breadth-first search.
fn distances(g: &Graph) -> Vec<Vec<u32>> {
    let n = g.order();
    (0..n)
        .map(|s| {
            let mut d = vec![u32::MAX; n];
            d[s] = 0;
            let mut queue = VecDeque::from([s]);
            while let Some(x) = queue.pop_front() {
                for &y in g.neighbors(x) {
                    if d[y] == u32::MAX {
                        d[y] = d[x] + 1;
                        queue.push_back(y);
                    }
                }
            }
            d
        })
        .collect()
}

/// Optimal Hamiltonian cycle of the shortest-path metric by subset dynamic
/// programming, which equals the graphic-TSP length.
pub fn held_karp_tsp(g: &Graph, max_vertices: usize) -> Result<u64> {
    held_karp_tsp_with(g, max_vertices, Execution::default())
}

/// [`held_karp_tsp`] with an explicit execution mode; subsets of equal size
/// are filled independently.
pub fn held_karp_tsp_with(g: &Graph, max_vertices: usize, exec: Execution) -> Result<u64> {
    let n = g.order();
    if n > max_vertices {
        return Err(Error::ResourceBound(format!(
            "Held-Karp oracle limited to {max_vertices} vertices, graph has {n}"
        )));
    }
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    if n <= 1 {
        return Ok(0);
    }
    let d = distances(g);
    // vertex 0 is the fixed start; subsets range over vertices 1..n
    let k = n - 1;
    const INF: u32 = u32::MAX / 2;
    let mut dp = vec![INF; (1usize << k) * k];
    for j in 0..k {
        dp[(1 << j) * k + j] = d[0][j + 1];
    }
    let mut by_size: Vec<Vec<usize>> = vec![Vec::new(); k + 1];
    for mask in 1usize..1 << k {
        by_size[mask.count_ones() as usize].push(mask);
    }
    for size in 2..=k {
        let layer = &by_size[size];
        let rows = exec.map_slice(layer, |&mask| {
            let mut row = vec![INF; k];
            for j in 0..k {
                if mask >> j & 1 == 0 {
                    continue;
                }
                let prev = mask ^ (1 << j);
                let mut best = INF;
                for i in 0..k {
                    if prev >> i & 1 == 1 {
                        best = best.min(dp[prev * k + i] + d[i + 1][j + 1]);
                    }
                }
                row[j] = best;
            }
            row
        });
        for (&mask, row) in layer.iter().zip(rows) {
            dp[mask * k..mask * k + k].copy_from_slice(&row);
        }
    }
    let full = (1usize << k) - 1;
    let best = (0..k).map(|j| dp[full * k + j] + d[j + 1][0]).min().unwrap();
    Ok(best as u64)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construct::{family, seed_graph, FamilyKind, Seed};

    fn cycle_factor(g: &Graph, cycles: &[&[Vertex]]) -> EvenFactor {
        let mut edges = Vec::new();
        for c in cycles {
            for i in 0..c.len() {
                edges.push(g.edge_index(c[i], c[(i + 1) % c.len()]).unwrap());
            }
        }
        EvenFactor::new(edges, vec![])
    }

    #[test]
    fn k4_tours() {
        let k4 = seed_graph(Seed::K4);
        let ham = tour_from_even_factor(&k4, &cycle_factor(&k4, &[&[0, 1, 2, 3]])).unwrap();
        assert_eq!(ham.length(), 4);
        ham.validate(&k4).unwrap();
        let empty = tour_from_even_factor(&k4, &EvenFactor::default()).unwrap();
        assert_eq!(empty.length(), 6);
        empty.validate(&k4).unwrap();
    }

    #[test]
    fn petersen_two_pentagons() {
        let p = seed_graph(Seed::Petersen);
        let f = cycle_factor(&p, &[&[0, 1, 2, 3, 4], &[5, 7, 9, 6, 8]]);
        let t = tour_from_even_factor(&p, &f).unwrap();
        assert_eq!(t.length(), 12);
        t.validate(&p).unwrap();
    }

    #[test]
    fn exact_values() {
        let cfg = SolverConfig::default();
        for (seed, expected) in [(Seed::K4, 4), (Seed::K33, 6), (Seed::Petersen, 11)] {
            let g = seed_graph(seed);
            let r = tsp_length(&g, &cfg).unwrap();
            assert_eq!(r.length, expected);
            assert_eq!(r.tour.length() as u64, expected);
            r.tour.validate(&g).unwrap();
            assert_eq!(held_karp_tsp(&g, 18).unwrap(), expected);
        }
        let g8 = family(FamilyKind::Planar, 0, 1 << 20).unwrap().closed;
        assert_eq!(held_karp_tsp(&g8, 18).unwrap(), 8);
    }

    #[test]
    fn oracle_modes_agree() {
        let g = family(FamilyKind::Planar, 1, 1 << 20).unwrap().closed;
        let a = held_karp_tsp_with(&g, 18, Execution::Sequential).unwrap();
        let b = held_karp_tsp_with(&g, 18, Execution::Parallel).unwrap();
        assert_eq!(a, b);
        assert_eq!(a, 18);
    }

    #[test]
    fn tour_validation_failures() {
        let k4 = seed_graph(Seed::K4);
        assert!(Tour { walk: vec![0, 1, 2] }.validate(&k4).is_err());
        let k33 = seed_graph(Seed::K33);
        assert!(Tour { walk: vec![0, 2, 1, 3, 4, 5] }.validate(&k33).is_err());
        let path = Graph::new(3, [(0, 1), (1, 2)]).unwrap();
        assert!(Tour { walk: vec![0, 1, 2, 1, 0, 1, 2, 1] }.validate(&path).is_err());
        assert!(Tour { walk: vec![0, 1, 2, 1] }.validate(&path).is_ok());
    }

    #[test]
    fn errors() {
        let g = Graph::new(8, [(0, 1), (1, 2), (2, 3), (3, 0), (4, 5), (5, 6), (6, 7), (7, 4)]).unwrap();
        assert_eq!(tsp_length(&g, &SolverConfig::default()).unwrap_err(), Error::Disconnected);
        assert!(matches!(
            held_karp_tsp(&seed_graph(Seed::Petersen), 9),
            Err(Error::ResourceBound(_))
        ));
        let k4 = seed_graph(Seed::K4);
        assert!(matches!(
            tour_from_even_factor(&k4, &EvenFactor::new(vec![0], vec![])),
            Err(Error::InvalidFactor(_))
        ));
    }
}
