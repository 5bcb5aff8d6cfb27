//! Connectivity levels and bipartiteness.

use crate::error::Result;
use crate::graph::{Graph, Pole, Vertex};

/// Largest `k <= 3` such that `g` is `k`-vertex-connected.
///
/// A graph is `k`-connected when it has more than `k` vertices and stays
/// connected after deleting any `k - 1` of them.
pub fn connectivity_level(g: &Graph) -> u8 {
    let n = g.order();
    if n < 2 || !g.is_connected() {
        return 0;
    }
    if n < 3 || !biconnected_without(g, None) {
        return 1;
    }
    if n < 4 || !(0..n).all(|v| biconnected_without(g, Some(v))) {
        return 2;
    }
    3
}

/// Largest `k <= 3` such that `g` is `k`-edge-connected.
pub fn edge_connectivity_level(g: &Graph) -> u8 {
    if g.order() < 2 || !g.is_connected() {
        return 0;
    }
    if !bridgeless_without(g, None) {
        return 1;
    }
    if !(0..g.size()).all(|e| bridgeless_without(g, Some(e))) {
        return 2;
    }
    3
}

/// Whether `g` minus the optional vertex is connected with no cut vertex.
fn biconnected_without(g: &Graph, removed: Option<Vertex>) -> bool {
    let n = g.order();
    let alive = |v: Vertex| Some(v) != removed;
    let Some(root) = (0..n).find(|&v| alive(v)) else {
        return true;
    };
    let mut disc = vec![usize::MAX; n];
    let mut low = vec![0usize; n];
    disc[root] = 0;
    let mut timer = 1;
    let mut root_children = 0;
    // (vertex, parent, next neighbour index)
    let mut stack = vec![(root, usize::MAX, 0usize)];
    while let Some(&(v, parent, idx)) = stack.last() {
        if idx < g.degree(v) {
            stack.last_mut().unwrap().2 += 1;
            let w = g.neighbors(v)[idx];
            if !alive(w) || w == parent {
                continue;
            }
            if disc[w] == usize::MAX {
                disc[w] = timer;
                low[w] = timer;
                timer += 1;
                if v == root {
                    root_children += 1;
                }
                stack.push((w, v, 0));
            } else {
                low[v] = low[v].min(disc[w]);
            }
        } else {
            stack.pop();
            if let Some(&(p, _, _)) = stack.last() {
                low[p] = low[p].min(low[v]);
                if p != root && low[v] >= disc[p] {
                    return false;
                }
            }
        }
    }
    if (0..n).any(|v| alive(v) && disc[v] == usize::MAX) {
        return false;
    }
    root_children <= 1
}

/// Whether `g` minus the optional edge (by index) is connected with no bridge.
fn bridgeless_without(g: &Graph, removed: Option<usize>) -> bool {
    let n = g.order();
    let mut disc = vec![usize::MAX; n];
    let mut low = vec![0usize; n];
    disc[0] = 0;
    let mut timer = 1;
    // (vertex, edge used to enter, next neighbour index)
    let mut stack = vec![(0usize, usize::MAX, 0usize)];
    while let Some(&(v, via, idx)) = stack.last() {
        if idx < g.degree(v) {
            stack.last_mut().unwrap().2 += 1;
            let w = g.neighbors(v)[idx];
            let e = g.edge_index(v, w).expect("adjacency and edge list agree");
            if Some(e) == removed || e == via {
                continue;
            }
            if disc[w] == usize::MAX {
                disc[w] = timer;
                low[w] = timer;
                timer += 1;
                stack.push((w, e, 0));
            } else {
                low[v] = low[v].min(disc[w]);
            }
        } else {
            stack.pop();
            if let Some(&(p, _, _)) = stack.last() {
                low[p] = low[p].min(low[v]);
                if low[v] > disc[p] {
                    return false;
                }
            }
        }
    }
    disc.iter().all(|&d| d != usize::MAX)
}

/// A proper 2-colouring of `g`, if one exists. `seeds` fixes the colours of
/// some vertices before propagation.
fn two_coloring(g: &Graph, seeds: &[(Vertex, u8)]) -> Option<Vec<u8>> {
    const UNSET: u8 = u8::MAX;
    let n = g.order();
    let mut color = vec![UNSET; n];
    let mut queue = std::collections::VecDeque::new();
    let starts = seeds
        .iter()
        .map(|&(v, c)| (v, c, true))
        .chain((0..n).map(|v| (v, 0, false)))
        .collect::<Vec<_>>();
    for (s, c, seeded) in starts {
        if color[s] != UNSET {
            if seeded && color[s] != c {
                return None;
            }
            continue;
        }
        color[s] = c;
        queue.push_back(s);
        while let Some(x) = queue.pop_front() {
            for &y in g.neighbors(x) {
                if color[y] == UNSET {
                    color[y] = 1 - color[x];
                    queue.push_back(y);
                } else if color[y] == color[x] {
                    return None;
                }
            }
        }
    }
    Some(color)
}

pub fn is_bipartite(g: &Graph) -> bool {
    two_coloring(g, &[]).is_some()
}

/// A 2-pole is truly bipartite when its inner graph has no odd circuit and
/// every stub-to-stub path has an even number of vertices, i.e. the two stub
/// vertices take different colours in a proper 2-colouring.
pub fn is_truly_bipartite(p: &Pole) -> Result<bool> {
    p.expect_arity(2)?;
    let (s0, s1) = (p.stubs()[0], p.stubs()[1]);
    if s0 == s1 {
        return Ok(false);
    }
    Ok(two_coloring(p.inner(), &[(s0, 0), (s1, 1)]).is_some())
}
