//! Exhaustive enumeration of even subgraphs over the binary cycle space.
//!
//! The fundamental cycles of a breadth-first spanning tree form a basis. The
//! space is walked in Gray-code order, so each step toggles one basis cycle
//! and updates vertex degrees incrementally. For parallel runs the high
//! coordinates are fixed per block and blocks are searched independently.

use crate::error::{Error, Result};
use crate::factor::{EvenFactor, FactorHost, StatsScratch};
use crate::par::Execution;

/// Default cap on the number of even subgraphs visited exhaustively.
pub const DEFAULT_ENUM_BUDGET: u64 = 1 << 28;

/// Fundamental cycles (as edge id lists) of a breadth-first spanning tree
/// rooted at vertex 0.
pub(crate) fn cycle_basis(host: &FactorHost) -> Result<Vec<Vec<usize>>> {
    let n = host.order();
    if !host.is_connected() {
        return Err(Error::Disconnected);
    }
    let mut parent_edge = vec![usize::MAX; n];
    let mut parent = vec![usize::MAX; n];
    let mut depth = vec![usize::MAX; n];
    let mut tree_edge = vec![false; host.edge_count()];
    let mut queue = std::collections::VecDeque::new();
    if n > 0 {
        depth[0] = 0;
        queue.push_back(0);
    }
    while let Some(x) = queue.pop_front() {
        for &(y, e) in host.incidence(x) {
            if depth[y] == usize::MAX {
                depth[y] = depth[x] + 1;
                parent[y] = x;
                parent_edge[y] = e;
                tree_edge[e] = true;
                queue.push_back(y);
            }
        }
    }
    let mut basis = Vec::new();
    for (e, &(u, v)) in host.edges().iter().enumerate() {
        if tree_edge[e] {
            continue;
        }
        let mut cycle = vec![e];
        let (mut a, mut b) = (u, v);
        while a != b {
            if depth[a] >= depth[b] {
                cycle.push(parent_edge[a]);
                a = parent[a];
            } else {
                cycle.push(parent_edge[b]);
                b = parent[b];
            }
        }
        basis.push(cycle);
    }
    Ok(basis)
}

pub(crate) fn check_budget(dimension: usize, budget: u64) -> Result<()> {
    let candidates = 1u128 << dimension.min(127);
    if candidates > budget as u128 {
        return Err(Error::ResourceBound(format!(
            "cycle space has dimension {dimension} (2^{dimension} even subgraphs) beyond the \
             exhaustive budget of {budget}; use the branch-and-bound or frontier solver"
        )));
    }
    Ok(())
}

/// Which stub selections an enumeration yields.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum StubSelection {
    None,
    Two,
    Any,
}

impl StubSelection {
    fn accepts(self, class: usize) -> bool {
        match self {
            StubSelection::None => class == 0,
            StubSelection::Two => class.count_ones() == 2,
            StubSelection::Any => true,
        }
    }
}

/// Iterator over every even subgraph of a host, in Gray-code order.
pub struct EvenFactors {
    host: FactorHost,
    basis: Vec<Vec<usize>>,
    mask: Vec<bool>,
    step: u64,
    total: u64,
    selection: StubSelection,
}

impl Iterator for EvenFactors {
    type Item = EvenFactor;

    fn next(&mut self) -> Option<EvenFactor> {
        while self.step < self.total {
            if self.step > 0 {
                let flip = self.step.trailing_zeros() as usize;
                for &e in &self.basis[flip] {
                    self.mask[e] = !self.mask[e];
                }
            }
            self.step += 1;
            if self.selection.accepts(self.host.stub_class(&self.mask)) {
                return Some(self.host.mask_to_factor(&self.mask));
            }
        }
        None
    }
}

/// Every even factor of `host` exactly once, filtered by stub selection.
pub fn enumerate_even_factors(
    host: FactorHost,
    selection: StubSelection,
    budget: u64,
) -> Result<EvenFactors> {
    let basis = cycle_basis(&host)?;
    check_budget(basis.len(), budget)?;
    let mask = vec![false; host.edge_count()];
    Ok(EvenFactors {
        total: 1u64 << basis.len(),
        basis,
        mask,
        step: 0,
        host,
        selection,
    })
}

/// Minimum excess per stub class (bit set of selected stubs, so up to 8
/// classes for 3-poles), with the Gray-code word of the first minimizer.
#[derive(Debug, Clone, Default)]
pub(crate) struct ClassMinima {
    pub best: [Option<(u32, u64)>; 8],
}

impl ClassMinima {
    fn offer(&mut self, class: usize, excess: u32, code: u64) {
        let slot = &mut self.best[class];
        if slot.is_none_or(|cur| (excess, code) < cur) {
            *slot = Some((excess, code));
        }
    }

    fn merge(mut self, other: ClassMinima) -> ClassMinima {
        for (class, entry) in other.best.iter().enumerate() {
            if let Some((q, code)) = *entry {
                self.offer(class, q, code);
            }
        }
        self
    }
}

/// Result of an exhaustive minimization, able to rebuild witnesses.
pub(crate) struct Exhaustive {
    pub host: FactorHost,
    basis: Vec<Vec<usize>>,
    pub minima: ClassMinima,
}

impl Exhaustive {
    pub fn mask_for(&self, code: u64) -> Vec<bool> {
        let mut mask = vec![false; self.host.edge_count()];
        for (i, cycle) in self.basis.iter().enumerate() {
            if code >> i & 1 == 1 {
                for &e in cycle {
                    mask[e] = !mask[e];
                }
            }
        }
        mask
    }
}

const BLOCK_BITS: usize = 6;

/// Visits every even subgraph and records the minimum excess per stub class.
pub(crate) fn exhaustive_minima(host: FactorHost, budget: u64, exec: Execution) -> Result<Exhaustive> {
    let basis = cycle_basis(&host)?;
    let dim = basis.len();
    check_budget(dim, budget)?;
    let high = dim.min(BLOCK_BITS);
    let low = dim - high;
    let blocks = exec.map(1usize << high, |block| search_block(&host, &basis, low, block as u64));
    let minima = blocks
        .into_iter()
        .fold(ClassMinima::default(), ClassMinima::merge);
    Ok(Exhaustive {
        host,
        basis,
        minima,
    })
}

fn search_block(host: &FactorHost, basis: &[Vec<usize>], low: usize, block: u64) -> ClassMinima {
    let mut mask = vec![false; host.edge_count()];
    let mut degree = vec![0u8; host.order()];
    let toggle = |cycle: &[usize], mask: &mut [bool], degree: &mut [u8]| {
        for &e in cycle {
            let (u, v) = host.edges()[e];
            if mask[e] {
                degree[u] -= 1;
                degree[v] -= 1;
            } else {
                degree[u] += 1;
                degree[v] += 1;
            }
            mask[e] = !mask[e];
        }
    };
    for (i, cycle) in basis[low..].iter().enumerate() {
        if block >> i & 1 == 1 {
            toggle(cycle, &mut mask, &mut degree);
        }
    }
    let mut scratch = StatsScratch::new(host.order());
    let mut minima = ClassMinima::default();
    let prefix = block << low;
    for step in 0..1u64 << low {
        if step > 0 {
            toggle(&basis[step.trailing_zeros() as usize], &mut mask, &mut degree);
        }
        let stats = scratch.stats_with_degrees_from(host, &mask, &degree);
        let code = prefix | (step ^ (step >> 1));
        minima.offer(host.stub_class(&mask), stats.excess, code);
    }
    minima
}
