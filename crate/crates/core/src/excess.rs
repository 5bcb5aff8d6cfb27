//! Minimum excess of closed graphs and the excess triples of poles.

use std::collections::BTreeMap;
use std::fmt;

use crate::enumerate::{check_budget, exhaustive_minima, DEFAULT_ENUM_BUDGET};
use crate::error::{Error, Result};
use crate::factor::{EvenFactor, FactorHost};
use crate::graph::{Graph, Pole};
use crate::par::Execution;
use crate::search::{branch_and_bound, frontier_dp, Restriction, Solution, DEG0, DEG2};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Strategy {
    /// Exhaustive within the enumeration budget, otherwise the frontier
    /// program, otherwise branch-and-bound.
    Auto,
    Exhaustive,
    BranchAndBound,
    Frontier,
}

/// The engine that produced a result.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Method {
    Exhaustive,
    BranchAndBound,
    Frontier,
}

#[derive(Debug, Clone)]
pub struct SolverConfig {
    pub strategy: Strategy,
    /// Largest number of even subgraphs visited exhaustively.
    pub enum_budget: u64,
    pub bnb_node_budget: u64,
    pub frontier_state_budget: usize,
    pub execution: Execution,
}

impl Default for SolverConfig {
    fn default() -> Self {
        SolverConfig {
            strategy: Strategy::Auto,
            enum_budget: DEFAULT_ENUM_BUDGET,
            bnb_node_budget: 1 << 24,
            frontier_state_budget: 1 << 22,
            execution: Execution::default(),
        }
    }
}

impl SolverConfig {
    pub fn with_strategy(mut self, strategy: Strategy) -> Self {
        self.strategy = strategy;
        self
    }
}

/// Pole summary `(q0, q2, n)`: the least excess of a stub-free even factor,
/// the least excess of one using two stubs, and the order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct ExcessTriple {
    pub q0: u32,
    pub q2: u32,
    pub n: u64,
}

impl ExcessTriple {
    pub const fn new(q0: u32, q2: u32, n: u64) -> Self {
        ExcessTriple { q0, q2, n }
    }
}

impl fmt::Display for ExcessTriple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {})", self.q0, self.q2, self.n)
    }
}

#[derive(Debug, Clone)]
pub struct MinExcess {
    pub excess: u32,
    pub witness: EvenFactor,
    pub method: Method,
}

fn check_subcubic_connected(g: &Graph) -> Result<()> {
    if let Some(v) = (0..g.order()).find(|&v| g.degree(v) > 3) {
        return Err(Error::NotSubcubic {
            vertex: v,
            degree: g.degree(v),
        });
    }
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    Ok(())
}

fn use_exhaustive(host: &FactorHost, cfg: &SolverConfig) -> Result<bool> {
    match cfg.strategy {
        Strategy::Exhaustive => {
            check_budget(host.cycle_space_dimension(), cfg.enum_budget)?;
            Ok(true)
        }
        Strategy::Auto => Ok(check_budget(host.cycle_space_dimension(), cfg.enum_budget).is_ok()),
        _ => Ok(false),
    }
}

/// Runs the restriction-based engines per the strategy.
fn solve_restricted(host: &FactorHost, r: &Restriction, cfg: &SolverConfig) -> Result<(Solution, Method)> {
    match cfg.strategy {
        Strategy::BranchAndBound => Ok((
            branch_and_bound(host, r, cfg.bnb_node_budget)?,
            Method::BranchAndBound,
        )),
        Strategy::Frontier => Ok((
            frontier_dp(host, r, cfg.frontier_state_budget)?,
            Method::Frontier,
        )),
        _ => match frontier_dp(host, r, cfg.frontier_state_budget) {
            Ok(s) => Ok((s, Method::Frontier)),
            Err(e) if e.is_resource_bound() => Ok((
                branch_and_bound(host, r, cfg.bnb_node_budget)?,
                Method::BranchAndBound,
            )),
            Err(e) => Err(e),
        },
    }
}

/// Least excess `2c + v` over all even factors of a connected subcubic graph,
/// with a minimizing factor.
pub fn min_excess(g: &Graph, cfg: &SolverConfig) -> Result<MinExcess> {
    check_subcubic_connected(g)?;
    let host = FactorHost::from_graph(g);
    if use_exhaustive(&host, cfg)? {
        let ex = exhaustive_minima(host, cfg.enum_budget, cfg.execution)?;
        let (q, code) = ex.minima.best[0].expect("the empty factor always exists");
        let witness = ex.host.mask_to_factor(&ex.mask_for(code));
        return Ok(MinExcess {
            excess: q,
            witness,
            method: Method::Exhaustive,
        });
    }
    let (solution, method) = solve_restricted(&host, &Restriction::free(&host), cfg)?;
    let (q, mask) = solution.expect("the empty factor always exists");
    Ok(MinExcess {
        excess: q,
        witness: host.mask_to_factor(&mask),
        method,
    })
}

/// Least excess per unordered stub pair, in the pair's natural order.
fn stub_pairs(arity: usize) -> Vec<(usize, usize)> {
    (0..arity)
        .flat_map(|i| (i + 1..arity).map(move |j| (i, j)))
        .collect()
}

fn check_pole(p: &Pole) -> Result<FactorHost> {
    let host = FactorHost::from_pole(p);
    if !host.is_connected() {
        return Err(Error::Disconnected);
    }
    Ok(host)
}

/// Restricted minimum over factors whose apex degree is `apex_degree` and
/// that avoid the listed stubs, converted from uniform cost to pole excess.
fn restricted_pole_min(
    host: &FactorHost,
    apex_degree: u8,
    forbidden_stubs: &[usize],
    cfg: &SolverConfig,
) -> Result<u32> {
    let apex = host.apex().expect("pole host has an apex");
    let mut r = Restriction::free(host);
    r.allowed[apex] = if apex_degree == 0 { DEG0 } else { DEG2 };
    for &i in forbidden_stubs {
        r.edge_allowed[host.stub_edge(i)] = false;
    }
    let (solution, _) = solve_restricted(host, &r, cfg)?;
    let (cost, _) = solution.ok_or(Error::Infeasible)?;
    // the apex counted as isolated (1) or on a circuit (2) in the uniform cost
    Ok(cost - if apex_degree == 0 { 1 } else { 2 })
}

/// The excess triple of a pole. For 3-poles `q2` is minimized over all
/// three stub pairs.
pub fn pole_triple(p: &Pole, cfg: &SolverConfig) -> Result<ExcessTriple> {
    let host = check_pole(p)?;
    let n = p.order() as u64;
    if use_exhaustive(&host, cfg)? {
        let ex = exhaustive_minima(host, cfg.enum_budget, cfg.execution)?;
        let q0 = ex.minima.best[0].expect("empty factor").0;
        let q2 = stub_pairs(p.arity())
            .into_iter()
            .filter_map(|(i, j)| ex.minima.best[1 << i | 1 << j].map(|b| b.0))
            .min()
            .ok_or(Error::Infeasible)?;
        return Ok(ExcessTriple::new(q0, q2, n));
    }
    let q0 = restricted_pole_min(&host, 0, &[], cfg)?;
    let q2 = restricted_pole_min(&host, 2, &[], cfg)?;
    Ok(ExcessTriple::new(q0, q2, n))
}

/// Least excess of an even factor using exactly the stubs `i` and `j`, for
/// every pair `i < j`.
pub fn per_pair_q2(p: &Pole, cfg: &SolverConfig) -> Result<BTreeMap<(usize, usize), u32>> {
    let host = check_pole(p)?;
    let pairs = stub_pairs(p.arity());
    let mut out = BTreeMap::new();
    if use_exhaustive(&host, cfg)? {
        let ex = exhaustive_minima(host, cfg.enum_budget, cfg.execution)?;
        for (i, j) in pairs {
            let q = ex.minima.best[1 << i | 1 << j].ok_or(Error::Infeasible)?.0;
            out.insert((i, j), q);
        }
        return Ok(out);
    }
    for (i, j) in pairs {
        let others: Vec<usize> = (0..p.arity()).filter(|&k| k != i && k != j).collect();
        out.insert((i, j), restricted_pole_min(&host, 2, &others, cfg)?);
    }
    Ok(out)
}
