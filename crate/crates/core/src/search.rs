//! Exact minimization of the uniform excess `2 * circuits + isolated` (every
//! vertex counted, apex included) under per-vertex degree restrictions.
//!
//! Two engines share one edge order, taken from a vertex order that keeps the
//! frontier (processed vertices with unprocessed edges) small:
//!
//! * branch-and-bound over edge inclusion, with parity pruning and the bound
//!   `cost so far + 2 (if a path is open) + vertices forced to stay isolated`;
//! * a frontier dynamic program whose state records, for each frontier vertex,
//!   whether it is unused, saturated, or the end of an open path (and which).

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::factor::FactorHost;

/// Final degree 0 allowed.
pub(crate) const DEG0: u8 = 1;
/// Final degree 2 allowed.
pub(crate) const DEG2: u8 = 4;

#[derive(Debug, Clone)]
pub(crate) struct Restriction {
    pub allowed: Vec<u8>,
    pub edge_allowed: Vec<bool>,
}

impl Restriction {
    pub fn free(host: &FactorHost) -> Self {
        Restriction {
            allowed: vec![DEG0 | DEG2; host.order()],
            edge_allowed: vec![true; host.edge_count()],
        }
    }
}

/// A minimizer: uniform cost and the edge mask realizing it.
pub(crate) type Solution = Option<(u32, Vec<bool>)>;

/// Vertex order greedily minimizing the frontier, best of several starts.
pub(crate) fn vertex_order(host: &FactorHost) -> Vec<usize> {
    let n = host.order();
    let starts: Vec<usize> = if n <= 128 {
        (0..n).collect()
    } else {
        (0..16).map(|i| i * n / 16).collect()
    };
    starts
        .into_iter()
        .map(|s| greedy_order(host, s))
        .min_by_key(|(width, _)| *width)
        .map(|(_, order)| order)
        .unwrap_or_default()
}

fn greedy_order(host: &FactorHost, start: usize) -> (usize, Vec<usize>) {
    let n = host.order();
    let mut placed = vec![false; n];
    // incidences towards unplaced vertices
    let mut outside: Vec<usize> = (0..n).map(|v| host.incidence(v).len()).collect();
    let mut order = Vec::with_capacity(n);
    let mut frontier = 0usize;
    let mut width = 0usize;
    let mut candidates = vec![start];
    while order.len() < n {
        let pick = candidates
            .iter()
            .copied()
            .filter(|&x| !placed[x])
            .min_by_key(|&x| {
                let inside = host.incidence(x).iter().filter(|&&(y, _)| placed[y]).count();
                let leaving = host
                    .incidence(x)
                    .iter()
                    .filter(|&&(y, _)| placed[y] && outside[y] == 1)
                    .count();
                let stays = usize::from(host.incidence(x).len() > inside);
                ((stays as isize - leaving as isize), usize::MAX - inside, x)
            })
            .or_else(|| (0..n).find(|&x| !placed[x]))
            .unwrap();
        placed[pick] = true;
        order.push(pick);
        let mut remaining = host.incidence(pick).len();
        for &(y, _) in host.incidence(pick) {
            if placed[y] && y != pick {
                outside[y] -= 1;
                remaining -= 1;
                if outside[y] == 0 {
                    frontier -= 1;
                }
            } else if !placed[y] {
                candidates.push(y);
            }
        }
        outside[pick] = remaining;
        if remaining > 0 {
            frontier += 1;
        }
        width = width.max(frontier);
        candidates.retain(|&x| !placed[x]);
        candidates.sort_unstable();
        candidates.dedup();
    }
    (width, order)
}

/// Edges ordered by the later endpoint's position in `order`.
pub(crate) fn edge_order(host: &FactorHost, order: &[usize]) -> Vec<usize> {
    let mut pos = vec![0; host.order()];
    for (i, &v) in order.iter().enumerate() {
        pos[v] = i;
    }
    let mut edges: Vec<usize> = (0..host.edge_count()).collect();
    edges.sort_by_key(|&e| {
        let (u, v) = host.edges()[e];
        (pos[u].max(pos[v]), pos[u].min(pos[v]), e)
    });
    edges
}

// ---------------------------------------------------------------------------
// branch and bound

pub(crate) fn branch_and_bound(host: &FactorHost, r: &Restriction, node_budget: u64) -> Result<Solution> {
    let order = vertex_order(host);
    let edges: Vec<usize> = edge_order(host, &order)
        .into_iter()
        .filter(|&e| r.edge_allowed[e])
        .collect();
    let n = host.order();
    let mut remaining = vec![0usize; n];
    for &e in &edges {
        let (u, v) = host.edges()[e];
        remaining[u] += 1;
        remaining[v] += 1;
    }
    let mut search = Bnb {
        host,
        allowed: &r.allowed,
        edges,
        degree: vec![0; n],
        mate: vec![usize::MAX; n],
        remaining,
        taken: vec![false; host.edge_count()],
        cost: 0,
        open: 0,
        best: None,
        nodes: 0,
        node_budget,
    };
    // vertices without any allowed edge are decided up front
    for v in 0..n {
        if search.remaining[v] == 0
            && !search.finalize(v) {
                return Ok(None);
            }
    }
    search.dfs(0)?;
    Ok(search.best)
}

struct Bnb<'a> {
    host: &'a FactorHost,
    allowed: &'a [u8],
    edges: Vec<usize>,
    degree: Vec<u8>,
    mate: Vec<usize>,
    remaining: Vec<usize>,
    taken: Vec<bool>,
    cost: u32,
    open: u32,
    best: Solution,
    nodes: u64,
    node_budget: u64,
}

impl Bnb<'_> {
    /// Accounts for a vertex whose edges are all decided. False if its
    /// final degree is not allowed.
    fn finalize(&mut self, v: usize) -> bool {
        match self.degree[v] {
            0 if self.allowed[v] & DEG0 != 0 => {
                self.cost += 1;
                true
            }
            2 => self.allowed[v] & DEG2 != 0,
            _ => false,
        }
    }

    fn unfinalize(&mut self, v: usize) {
        if self.degree[v] == 0 {
            self.cost -= 1;
        }
    }

    fn usable(&self, v: usize) -> bool {
        self.degree[v] < 2 && self.allowed[v] & DEG2 != 0
    }

    fn lower_bound(&self, from: usize) -> Option<u32> {
        let mut bound = self.cost + if self.open > 0 { 2 } else { 0 };
        // vertices still open whose remaining edges all lead to saturated vertices
        let mut live = vec![false; self.host.order()];
        for &e in &self.edges[from..] {
            let (u, v) = self.host.edges()[e];
            if self.usable(u) && self.usable(v) && u != v {
                live[u] = true;
                live[v] = true;
            }
        }
        for v in 0..self.host.order() {
            if self.remaining[v] > 0 && !live[v] {
                match self.degree[v] {
                    0 if self.allowed[v] & DEG0 != 0 => bound += 1,
                    1 => return None,
                    0 => return None,
                    _ => {}
                }
            }
        }
        Some(bound)
    }

    fn dfs(&mut self, idx: usize) -> Result<()> {
        self.nodes += 1;
        if self.nodes > self.node_budget {
            return Err(Error::ResourceBound(format!(
                "branch-and-bound exceeded {} search nodes",
                self.node_budget
            )));
        }
        if idx == self.edges.len() {
            if self.best.as_ref().is_none_or(|(b, _)| self.cost < *b) {
                self.best = Some((self.cost, self.taken.clone()));
            }
            return Ok(());
        }
        match self.lower_bound(idx) {
            Some(lb) if self.best.as_ref().is_none_or(|(b, _)| lb < *b) => {}
            _ => return Ok(()),
        }
        let e = self.edges[idx];
        let (u, v) = self.host.edges()[e];
        if self.usable(u) && self.usable(v) {
            let saved = (self.mate.clone(), self.cost, self.open);
            self.take(u, v);
            self.taken[e] = true;
            self.descend(idx, u, v)?;
            self.taken[e] = false;
            self.degree[u] -= 1;
            self.degree[v] -= 1;
            (self.mate, self.cost, self.open) = saved;
        }
        self.descend(idx, u, v)
    }

    /// Marks edge `idx` decided and recurses if both endpoints stay valid.
    fn descend(&mut self, idx: usize, u: usize, v: usize) -> Result<()> {
        self.remaining[u] -= 1;
        self.remaining[v] -= 1;
        let mut finalized = Vec::with_capacity(2);
        let mut ok = true;
        for w in [u, v] {
            if self.remaining[w] == 0 && !finalized.contains(&w) {
                if self.finalize(w) {
                    finalized.push(w);
                } else {
                    ok = false;
                    break;
                }
            }
        }
        let result = if ok { self.dfs(idx + 1) } else { Ok(()) };
        for &w in &finalized {
            self.unfinalize(w);
        }
        self.remaining[u] += 1;
        self.remaining[v] += 1;
        result
    }

    fn take(&mut self, u: usize, v: usize) {
        match (self.degree[u], self.degree[v]) {
            (0, 0) => {
                self.mate[u] = v;
                self.mate[v] = u;
                self.open += 1;
            }
            (0, 1) => {
                let w = self.mate[v];
                self.mate[u] = w;
                self.mate[w] = u;
            }
            (1, 0) => {
                let w = self.mate[u];
                self.mate[v] = w;
                self.mate[w] = v;
            }
            _ => {
                if self.mate[u] == v {
                    self.cost += 2;
                } else {
                    let (a, b) = (self.mate[u], self.mate[v]);
                    self.mate[a] = b;
                    self.mate[b] = a;
                }
                self.open -= 1;
            }
        }
        self.degree[u] += 1;
        self.degree[v] += 1;
    }
}

// ---------------------------------------------------------------------------
// frontier dynamic program

const UNUSED: u8 = 0;
const SATURATED: u8 = 1;
const FIRST_LABEL: u8 = 2;

enum Step {
    Edge(usize),
    Project,
}

struct Layer {
    step: Step,
    /// (parent state index, edge taken) per state
    back: Vec<(u32, bool)>,
}

/// Relabels path ends by first occurrence so equal states compare equal.
fn canonical(state: &mut [u8]) {
    let mut map = [0u8; 256];
    let mut next = FIRST_LABEL;
    for x in state.iter_mut() {
        if *x >= FIRST_LABEL {
            let slot = &mut map[*x as usize];
            if *slot == 0 {
                *slot = next;
                next += 1;
            }
            *x = *slot;
        }
    }
}

struct Frontier {
    states: Vec<Vec<u8>>,
    cost: Vec<u32>,
    back: Vec<(u32, bool)>,
    index: HashMap<Vec<u8>, u32>,
}

impl Frontier {
    fn new() -> Self {
        Frontier {
            states: Vec::new(),
            cost: Vec::new(),
            back: Vec::new(),
            index: HashMap::new(),
        }
    }

    fn offer(&mut self, state: Vec<u8>, cost: u32, parent: u32, took: bool) {
        match self.index.get(&state) {
            Some(&i) => {
                let i = i as usize;
                if cost < self.cost[i] {
                    self.cost[i] = cost;
                    self.back[i] = (parent, took);
                }
            }
            None => {
                self.index.insert(state.clone(), self.states.len() as u32);
                self.states.push(state);
                self.cost.push(cost);
                self.back.push((parent, took));
            }
        }
    }
}

pub(crate) fn frontier_dp(host: &FactorHost, r: &Restriction, state_budget: usize) -> Result<Solution> {
    let n = host.order();
    let order = vertex_order(host);
    let mut pos = vec![0usize; n];
    for (i, &v) in order.iter().enumerate() {
        pos[v] = i;
    }
    let mut remaining: Vec<usize> = (0..n).map(|v| host.incidence(v).len()).collect();
    let mut slots: Vec<usize> = Vec::new();
    let mut layers: Vec<Layer> = Vec::new();
    let mut states = vec![Vec::new()];
    let mut costs = vec![0u32];

    for &x in &order {
        slots.push(x);
        for s in &mut states {
            s.push(UNUSED);
        }
        let mut incident: Vec<usize> = host
            .incidence(x)
            .iter()
            .filter(|&&(y, _)| pos[y] < pos[x])
            .map(|&(_, e)| e)
            .collect();
        incident.sort_unstable();
        for e in incident {
            let (u, v) = host.edges()[e];
            let iu = slots.iter().position(|&s| s == u).unwrap();
            let iv = slots.iter().position(|&s| s == v).unwrap();
            let mut next = Frontier::new();
            for (i, state) in states.iter().enumerate() {
                next.offer(state.clone(), costs[i], i as u32, false);
                if !r.edge_allowed[e] || r.allowed[u] & DEG2 == 0 || r.allowed[v] & DEG2 == 0 {
                    continue;
                }
                let (a, b) = (state[iu], state[iv]);
                if a == SATURATED || b == SATURATED {
                    continue;
                }
                let mut s = state.clone();
                let mut c = costs[i];
                match (a, b) {
                    (UNUSED, UNUSED) => {
                        s[iu] = u8::MAX;
                        s[iv] = u8::MAX;
                    }
                    (UNUSED, l) => {
                        s[iu] = l;
                        s[iv] = SATURATED;
                    }
                    (l, UNUSED) => {
                        s[iv] = l;
                        s[iu] = SATURATED;
                    }
                    (l, m) if l == m => {
                        s[iu] = SATURATED;
                        s[iv] = SATURATED;
                        c += 2;
                    }
                    (l, m) => {
                        s[iu] = SATURATED;
                        s[iv] = SATURATED;
                        for y in s.iter_mut() {
                            if *y == m {
                                *y = l;
                            }
                        }
                    }
                }
                canonical(&mut s);
                next.offer(s, c, i as u32, true);
            }
            if next.states.len() > state_budget {
                return Err(Error::ResourceBound(format!(
                    "frontier search exceeded {state_budget} states"
                )));
            }
            states = next.states;
            costs = next.cost;
            layers.push(Layer {
                step: Step::Edge(e),
                back: next.back,
            });
            remaining[u] -= 1;
            remaining[v] -= 1;
        }
        // retire vertices whose edges are all processed
        let retire: Vec<usize> = (0..slots.len()).filter(|&i| remaining[slots[i]] == 0).collect();
        if retire.is_empty() {
            continue;
        }
        let mut next = Frontier::new();
        for (i, state) in states.iter().enumerate() {
            let mut c = costs[i];
            let mut valid = true;
            for &k in &retire {
                let w = slots[k];
                match state[k] {
                    UNUSED if r.allowed[w] & DEG0 != 0 => c += 1,
                    SATURATED if r.allowed[w] & DEG2 != 0 => {}
                    _ => valid = false,
                }
            }
            if !valid {
                continue;
            }
            let mut s: Vec<u8> = state
                .iter()
                .enumerate()
                .filter(|(k, _)| !retire.contains(k))
                .map(|(_, &x)| x)
                .collect();
            canonical(&mut s);
            next.offer(s, c, i as u32, false);
        }
        slots = slots
            .iter()
            .enumerate()
            .filter(|(k, _)| !retire.contains(k))
            .map(|(_, &w)| w)
            .collect();
        states = next.states;
        costs = next.cost;
        layers.push(Layer {
            step: Step::Project,
            back: next.back,
        });
    }

    if states.is_empty() {
        return Ok(None);
    }
    debug_assert_eq!(states.len(), 1);
    let mut mask = vec![false; host.edge_count()];
    let mut at = 0u32;
    for layer in layers.iter().rev() {
        let (parent, took) = layer.back[at as usize];
        if let (Step::Edge(e), true) = (&layer.step, took) {
            mask[*e] = true;
        }
        at = parent;
    }
    Ok(Some((costs[0], mask)))
}
