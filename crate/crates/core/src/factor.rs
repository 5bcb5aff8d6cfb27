//! Even factors and the excess statistic.
//!
//! Poles are handled through their apex closure: a new vertex joined to every
//! stub. An even subgraph of the closure in which the apex has degree 0 is a
//! stub-free even factor of the pole; apex degree 2 selects two stubs, and the
//! circuit through the apex is the stub-to-stub path, which costs nothing.

use crate::error::{Error, Result};
use crate::graph::{Graph, Pole, Vertex};

/// An even factor given by the edges it uses (indices into the host's edge
/// list) and, for poles, the stub positions it uses.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct EvenFactor {
    pub edges: Vec<usize>,
    pub stubs: Vec<usize>,
}

impl EvenFactor {
    pub fn new(mut edges: Vec<usize>, mut stubs: Vec<usize>) -> Self {
        edges.sort_unstable();
        edges.dedup();
        stubs.sort_unstable();
        stubs.dedup();
        EvenFactor { edges, stubs }
    }
}

/// Circuits, isolated vertices and excess `2c + v` of an even factor.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FactorStats {
    pub circuits: u32,
    pub isolated: u32,
    pub excess: u32,
}

impl FactorStats {
    fn new(circuits: u32, isolated: u32) -> Self {
        FactorStats {
            circuits,
            isolated,
            excess: 2 * circuits + isolated,
        }
    }
}

/// A multigraph view on which every engine runs: a closed graph, or a pole
/// closed by an apex vertex. Edge ids `0..inner_edges` coincide with the
/// graph's edge indices; the apex edge for stub `i` is `inner_edges + i`.
#[derive(Debug, Clone)]
pub struct FactorHost {
    order: usize,
    edges: Vec<(Vertex, Vertex)>,
    /// (neighbour, edge id) pairs per vertex
    incidence: Vec<Vec<(Vertex, usize)>>,
    apex: Option<Vertex>,
    inner_edges: usize,
}

impl FactorHost {
    fn build(order: usize, edges: Vec<(Vertex, Vertex)>, apex: Option<Vertex>, inner_edges: usize) -> Self {
        let mut incidence = vec![Vec::new(); order];
        for (id, &(u, v)) in edges.iter().enumerate() {
            incidence[u].push((v, id));
            incidence[v].push((u, id));
        }
        FactorHost {
            order,
            edges,
            incidence,
            apex,
            inner_edges,
        }
    }

    pub fn from_graph(g: &Graph) -> Self {
        Self::build(g.order(), g.edges().to_vec(), None, g.size())
    }

    pub fn from_pole(p: &Pole) -> Self {
        let apex = p.order();
        let mut edges = p.inner().edges().to_vec();
        edges.extend(p.stubs().iter().map(|&s| (s, apex)));
        Self::build(apex + 1, edges, Some(apex), p.inner().size())
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(Vertex, Vertex)] {
        &self.edges
    }

    pub fn incidence(&self, v: Vertex) -> &[(Vertex, usize)] {
        &self.incidence[v]
    }

    pub fn apex(&self) -> Option<Vertex> {
        self.apex
    }

    pub fn stub_count(&self) -> usize {
        self.edges.len() - self.inner_edges
    }

    /// Edge id of the apex edge for stub `i`.
    pub fn stub_edge(&self, i: usize) -> usize {
        self.inner_edges + i
    }

    pub fn is_connected(&self) -> bool {
        if self.order == 0 {
            return true;
        }
        let mut seen = vec![false; self.order];
        let mut stack = vec![0];
        seen[0] = true;
        let mut count = 1;
        while let Some(x) = stack.pop() {
            for &(y, _) in &self.incidence[x] {
                if !seen[y] {
                    seen[y] = true;
                    count += 1;
                    stack.push(y);
                }
            }
        }
        count == self.order
    }

    /// Dimension of the binary cycle space, `m - n + 1` for a connected host.
    pub fn cycle_space_dimension(&self) -> usize {
        self.edges.len() + 1 - self.order.min(self.edges.len() + 1)
    }

    pub fn factor_to_mask(&self, f: &EvenFactor) -> Result<Vec<bool>> {
        let mut mask = vec![false; self.edges.len()];
        for &e in &f.edges {
            if e >= self.inner_edges {
                return Err(Error::InvalidFactor(format!("edge index {e} out of range")));
            }
            mask[e] = true;
        }
        for &s in &f.stubs {
            if s >= self.stub_count() {
                return Err(Error::InvalidFactor(format!("stub index {s} out of range")));
            }
            mask[self.stub_edge(s)] = true;
        }
        Ok(mask)
    }

    pub fn mask_to_factor(&self, mask: &[bool]) -> EvenFactor {
        let edges = (0..self.inner_edges).filter(|&e| mask[e]).collect();
        let stubs = (0..self.stub_count())
            .filter(|&i| mask[self.stub_edge(i)])
            .collect();
        EvenFactor { edges, stubs }
    }

    /// Statistics of the even subgraph given by `mask`, with the apex and its
    /// circuit excluded from the counts.
    pub fn mask_stats(&self, mask: &[bool]) -> Result<FactorStats> {
        let mut scratch = StatsScratch::new(self.order);
        scratch.stats(self, mask)
    }

    /// Selected stubs as a bit set (bit `i` for stub `i`).
    pub(crate) fn stub_class(&self, mask: &[bool]) -> usize {
        (0..self.stub_count())
            .filter(|&i| mask[self.stub_edge(i)])
            .fold(0, |acc, i| acc | 1 << i)
    }
}

/// Reusable buffers for computing factor statistics in hot loops.
pub(crate) struct StatsScratch {
    degree: Vec<u8>,
    stamp: Vec<u32>,
    epoch: u32,
}

impl StatsScratch {
    pub(crate) fn new(order: usize) -> Self {
        StatsScratch {
            degree: vec![0; order],
            stamp: vec![0; order],
            epoch: 0,
        }
    }

    pub(crate) fn stats(&mut self, host: &FactorHost, mask: &[bool]) -> Result<FactorStats> {
        self.degree.iter_mut().for_each(|d| *d = 0);
        for (e, &(u, v)) in host.edges.iter().enumerate() {
            if mask[e] {
                self.degree[u] += 1;
                self.degree[v] += 1;
            }
        }
        if let Some(v) = self.degree.iter().position(|d| d % 2 == 1) {
            return Err(Error::InvalidFactor(format!("vertex {v} has odd degree")));
        }
        Ok(self.stats_with_degrees(host, mask))
    }

    /// Counts circuits and isolated vertices, trusting that `degree` holds
    /// the even degrees of `mask`.
    pub(crate) fn stats_with_degrees_from(
        &mut self,
        host: &FactorHost,
        mask: &[bool],
        degree: &[u8],
    ) -> FactorStats {
        self.epoch = self.epoch.wrapping_add(1);
        if self.epoch == 0 {
            self.stamp.iter_mut().for_each(|s| *s = 0);
            self.epoch = 1;
        }
        let mut isolated = 0;
        let mut circuits = 0;
        for s in 0..host.order {
            if Some(s) == host.apex {
                continue;
            }
            if degree[s] == 0 {
                isolated += 1;
                continue;
            }
            if self.stamp[s] == self.epoch {
                continue;
            }
            // walk the component of s; in a subcubic host it is a circuit
            let mut through_apex = false;
            let mut stack = vec![s];
            self.stamp[s] = self.epoch;
            while let Some(x) = stack.pop() {
                through_apex |= Some(x) == host.apex;
                for &(y, e) in &host.incidence[x] {
                    if mask[e] && self.stamp[y] != self.epoch {
                        self.stamp[y] = self.epoch;
                        stack.push(y);
                    }
                }
            }
            if !through_apex {
                circuits += 1;
            }
        }
        FactorStats::new(circuits, isolated)
    }

    fn stats_with_degrees(&mut self, host: &FactorHost, mask: &[bool]) -> FactorStats {
        let degree = std::mem::take(&mut self.degree);
        let out = self.stats_with_degrees_from(host, mask, &degree);
        self.degree = degree;
        out
    }
}

/// Something even factors can be taken of.
pub trait FactorDomain {
    fn factor_host(&self) -> FactorHost;
}

impl FactorDomain for Graph {
    fn factor_host(&self) -> FactorHost {
        FactorHost::from_graph(self)
    }
}

impl FactorDomain for Pole {
    fn factor_host(&self) -> FactorHost {
        FactorHost::from_pole(self)
    }
}

/// Decomposes `f` into circuits, stub-to-stub paths and isolated vertices.
/// The path contributes nothing to the excess.
pub fn factor_stats<H: FactorDomain + ?Sized>(host: &H, f: &EvenFactor) -> Result<FactorStats> {
    let host = host.factor_host();
    if f.stubs.len() % 2 == 1 {
        return Err(Error::InvalidFactor(format!(
            "odd number of stubs ({})",
            f.stubs.len()
        )));
    }
    let mask = host.factor_to_mask(f)?;
    host.mask_stats(&mask)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construct::{seed_graph, seed_pole, FamilyKind, Seed};

    fn factor_from_cycle(g: &Graph, cycle: &[Vertex]) -> EvenFactor {
        let edges = (0..cycle.len())
            .map(|i| g.edge_index(cycle[i], cycle[(i + 1) % cycle.len()]).unwrap())
            .collect();
        EvenFactor::new(edges, vec![])
    }

    #[test]
    fn k4_examples() {
        let k4 = seed_graph(Seed::K4);
        let ham = factor_from_cycle(&k4, &[0, 1, 2, 3]);
        assert_eq!(factor_stats(&k4, &ham).unwrap(), FactorStats::new(1, 0));
        assert_eq!(
            factor_stats(&k4, &EvenFactor::default()).unwrap(),
            FactorStats {
                circuits: 0,
                isolated: 4,
                excess: 4
            }
        );
        let tri = factor_from_cycle(&k4, &[0, 1, 2]);
        assert_eq!(factor_stats(&k4, &tri).unwrap().excess, 3);
    }

    #[test]
    fn stub_path_costs_nothing() {
        // stubs at 0 and 1; Hamiltonian path 0-2-3-1
        let a0 = seed_pole(FamilyKind::Planar);
        let g = a0.inner();
        let edges = vec![
            g.edge_index(0, 2).unwrap(),
            g.edge_index(2, 3).unwrap(),
            g.edge_index(1, 3).unwrap(),
        ];
        let f = EvenFactor::new(edges, vec![0, 1]);
        assert_eq!(factor_stats(&a0, &f).unwrap(), FactorStats::new(0, 0));
    }

    #[test]
    fn parity_violations() {
        let k4 = seed_graph(Seed::K4);
        let f = EvenFactor::new(vec![0], vec![]);
        assert!(matches!(factor_stats(&k4, &f), Err(Error::InvalidFactor(_))));
        let a0 = seed_pole(FamilyKind::Planar);
        let f = EvenFactor::new(vec![], vec![0]);
        assert!(matches!(factor_stats(&a0, &f), Err(Error::InvalidFactor(_))));
        let f = EvenFactor::new(vec![99], vec![]);
        assert!(matches!(factor_stats(&k4, &f), Err(Error::InvalidFactor(_))));
    }

    #[test]
    fn single_vertex_pole() {
        let b0 = crate::construct::single_vertex_3pole();
        assert_eq!(
            factor_stats(&b0, &EvenFactor::default()).unwrap().excess,
            1
        );
        let through = EvenFactor::new(vec![], vec![0, 2]);
        assert_eq!(factor_stats(&b0, &through).unwrap().excess, 0);
    }
}
