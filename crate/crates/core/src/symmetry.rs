//! Symmetry of 3-poles by exhaustive automorphism search.

use crate::error::Result;
use crate::graph::{Graph, Pole, Vertex};

/// Default largest inner graph the automorphism search will attempt.
pub const DEFAULT_SYMMETRY_BUDGET: usize = 16;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Symmetry {
    Symmetric,
    Asymmetric,
    /// The pole exceeds the search budget; nothing was decided.
    Unverified,
}

const PERMUTATIONS: [[usize; 3]; 6] = [
    [0, 1, 2],
    [0, 2, 1],
    [1, 0, 2],
    [1, 2, 0],
    [2, 0, 1],
    [2, 1, 0],
];

/// Whether every permutation of the three stubs is realized by an
/// automorphism of the inner graph carrying stub `i` to stub `pi(i)`.
pub fn is_symmetric_3pole(p: &Pole, max_vertices: usize) -> Result<Symmetry> {
    p.expect_arity(3)?;
    if p.order() > max_vertices {
        return Ok(Symmetry::Unverified);
    }
    for pi in PERMUTATIONS {
        if find_automorphism(p.inner(), p.stubs(), &pi).is_none() {
            return Ok(Symmetry::Asymmetric);
        }
    }
    Ok(Symmetry::Symmetric)
}

/// An automorphism `phi` with `phi(stubs[i]) == stubs[pi[i]]`, if any.
pub(crate) fn find_automorphism(g: &Graph, stubs: &[Vertex], pi: &[usize]) -> Option<Vec<Vertex>> {
    let n = g.order();
    let mut map = Mapping {
        image: vec![UNSET; n],
        preimage: vec![UNSET; n],
    };
    for (i, &s) in stubs.iter().enumerate() {
        let t = stubs[pi[i]];
        if map.image[s] == UNSET {
            if map.preimage[t] != UNSET {
                return None;
            }
            map.assign(s, t);
        } else if map.image[s] != t {
            return None;
        }
    }
    if !stubs.iter().all(|&s| map.consistent(g, s)) {
        return None;
    }
    // extend in breadth-first order from the stubs so candidates stay constrained
    let mut order = Vec::with_capacity(n);
    let mut queued = vec![false; n];
    for &s in stubs {
        if !queued[s] {
            queued[s] = true;
            order.push(s);
        }
    }
    let mut k = 0;
    while order.len() < n {
        if k == order.len() {
            let v = (0..n).find(|&v| !queued[v]).unwrap();
            queued[v] = true;
            order.push(v);
        }
        let x = order[k];
        k += 1;
        for &y in g.neighbors(x) {
            if !queued[y] {
                queued[y] = true;
                order.push(y);
            }
        }
    }
    let fixed = order.iter().take_while(|&&v| map.image[v] != UNSET).count();
    if map.extend(g, &order[fixed..]) {
        Some(map.image)
    } else {
        None
    }
}

const UNSET: usize = usize::MAX;

struct Mapping {
    image: Vec<Vertex>,
    preimage: Vec<Vertex>,
}

impl Mapping {
    fn assign(&mut self, v: Vertex, t: Vertex) {
        self.image[v] = t;
        self.preimage[t] = v;
    }

    fn unassign(&mut self, v: Vertex) {
        self.preimage[self.image[v]] = UNSET;
        self.image[v] = UNSET;
    }

    /// Adjacency between `v` and every mapped vertex is preserved both ways.
    fn consistent(&self, g: &Graph, v: Vertex) -> bool {
        let t = self.image[v];
        g.degree(v) == g.degree(t)
            && g
                .neighbors(v)
                .iter()
                .all(|&w| self.image[w] == UNSET || g.has_edge(t, self.image[w]))
            && g
                .neighbors(t)
                .iter()
                .all(|&x| self.preimage[x] == UNSET || g.has_edge(v, self.preimage[x]))
    }

    fn extend(&mut self, g: &Graph, rest: &[Vertex]) -> bool {
        let Some((&v, tail)) = rest.split_first() else {
            return true;
        };
        for t in 0..g.order() {
            if self.preimage[t] != UNSET || g.degree(t) != g.degree(v) {
                continue;
            }
            self.assign(v, t);
            if self.consistent(g, v) && self.extend(g, tail) {
                return true;
            }
            self.unassign(v);
        }
        false
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construct::{remove_vertex_to_3pole, seed_graph, Seed};

    fn is_automorphism(g: &Graph, phi: &[Vertex]) -> bool {
        g.edges().iter().all(|&(u, v)| g.has_edge(phi[u], phi[v]))
    }

    #[test]
    fn single_vertex_pole_is_symmetric() {
        let b0 = Pole::new(Graph::empty(1), vec![0, 0, 0]).unwrap();
        assert_eq!(is_symmetric_3pole(&b0, 16).unwrap(), Symmetry::Symmetric);
    }

    #[test]
    fn petersen_minus_vertex_is_symmetric() {
        let b1 = remove_vertex_to_3pole(&seed_graph(Seed::Petersen), 0).unwrap();
        assert_eq!(is_symmetric_3pole(&b1, 16).unwrap(), Symmetry::Symmetric);
        for pi in PERMUTATIONS {
            let phi = find_automorphism(b1.inner(), b1.stubs(), &pi).unwrap();
            assert!(is_automorphism(b1.inner(), &phi));
            for i in 0..3 {
                assert_eq!(phi[b1.stubs()[i]], b1.stubs()[pi[i]]);
            }
        }
    }

    #[test]
    fn triangle_pole_is_symmetric() {
        let tri = remove_vertex_to_3pole(&seed_graph(Seed::K4), 3).unwrap();
        assert_eq!(is_symmetric_3pole(&tri, 16).unwrap(), Symmetry::Symmetric);
    }

    #[test]
    fn prism_minus_vertex_is_not_symmetric() {
        // triangular prism: triangles 0-1-2 and 3-4-5 with rungs i to i+3
        let prism = Graph::new(
            6,
            [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5), (0, 3), (1, 4), (2, 5)],
        )
        .unwrap();
        let p = remove_vertex_to_3pole(&prism, 0).unwrap();
        assert_eq!(is_symmetric_3pole(&p, 16).unwrap(), Symmetry::Asymmetric);
    }

    #[test]
    fn budget_and_arity() {
        let b1 = remove_vertex_to_3pole(&seed_graph(Seed::Petersen), 0).unwrap();
        assert_eq!(is_symmetric_3pole(&b1, 8).unwrap(), Symmetry::Unverified);
        let two = crate::construct::cut_edge_to_2pole(&seed_graph(Seed::K4), (0, 1)).unwrap();
        assert!(is_symmetric_3pole(&two, 16).is_err());
    }
}
