//! Seed graphs, pole gadgets, the two recursive compositions, and the three
//! extremal families built from them.
//!
//! Vertex labelings are fixed so that every construction is reproducible:
//!
//! * `K4` uses vertices `0..4`.
//! * `K3,3` has parts `{0, 2, 4}` and `{1, 3, 5}`, so `{0, 1}` is an edge.
//! * Petersen has the outer cycle `0..5`, spokes `i -- i + 5` and the inner
//!   pentagram `i + 5 -- (i + 2) % 5 + 5`.

use crate::error::{Error, Result};
use crate::graph::{Edge, Graph, Pole, Vertex};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Seed {
    K4,
    K33,
    Petersen,
}

pub fn seed_graph(seed: Seed) -> Graph {
    let edges: Vec<Edge> = match seed {
        Seed::K4 => (0..4).flat_map(|u| (u + 1..4).map(move |v| (u, v))).collect(),
        Seed::K33 => [0, 2, 4]
            .into_iter()
            .flat_map(|u| [1, 3, 5].into_iter().map(move |v| (u, v)))
            .collect(),
        Seed::Petersen => (0..5)
            .flat_map(|i| [(i, (i + 1) % 5), (i, i + 5), (i + 5, (i + 2) % 5 + 5)])
            .collect(),
    };
    let order = match seed {
        Seed::K4 => 4,
        Seed::K33 => 6,
        Seed::Petersen => 10,
    };
    Graph::new(order, edges).expect("seed graphs are simple")
}

/// Cuts edge `e` of `g` into two dangling edges. The stubs sit at the two
/// endpoints, smaller id first.
pub fn cut_edge_to_2pole(g: &Graph, e: Edge) -> Result<Pole> {
    let (u, v) = (e.0.min(e.1), e.0.max(e.1));
    let index = g.edge_index(u, v).ok_or(Error::MissingEdge(u, v))?;
    let edges = g
        .edges()
        .iter()
        .enumerate()
        .filter(|&(i, _)| i != index)
        .map(|(_, &e)| e);
    Pole::new(Graph::new(g.order(), edges)?, vec![u, v])
}

/// Removes vertex `v`, replacing its three edges by dangling edges at its
/// former neighbours (ordered by id). Vertices above `v` shift down by one.
pub fn remove_vertex_to_3pole(g: &Graph, v: Vertex) -> Result<Pole> {
    if v >= g.order() {
        return Err(Error::VertexOutOfRange {
            vertex: v,
            order: g.order(),
        });
    }
    let mut keep = vec![true; g.order()];
    keep[v] = false;
    let (inner, map) = g.induced(&keep);
    let stubs = g
        .neighbors(v)
        .iter()
        .map(|&w| map[w].expect("neighbour survives"))
        .collect();
    Pole::new(inner, stubs)
}

/// The doubling composition `A -> A'`.
///
/// Layout: copy 1 of `a` keeps ids `0..n`, copy 2 occupies `n..2n`, then
/// `x1 = 2n`, `x2 = 2n + 1`, `y1 = 2n + 2`, `y2 = 2n + 3`. The first stubs of
/// both copies join `x1`, the second stubs join `x2`, and `x1 y1 y2 x2` is a
/// path. The result has stubs at `y1` and `y2`.
pub fn prime(a: &Pole) -> Result<Pole> {
    a.expect_arity(2)?;
    let n = a.order();
    let (s0, s1) = (a.stubs()[0], a.stubs()[1]);
    let (x1, x2, y1, y2) = (2 * n, 2 * n + 1, 2 * n + 2, 2 * n + 3);
    let mut edges: Vec<Edge> = a.inner().shifted_edges(0).collect();
    edges.extend(a.inner().shifted_edges(n));
    edges.extend([
        (x1, s0),
        (x1, s0 + n),
        (x2, s1),
        (x2, s1 + n),
        (x1, y1),
        (y1, y2),
        (y2, x2),
    ]);
    Pole::new(Graph::new(2 * n + 4, edges)?, vec![y1, y2])
}

/// The Petersen vertex removed by [`double_prime`].
const REMOVED_POSITION: Vertex = 0;

/// The nine-copy composition `B -> B''`.
///
/// Petersen minus vertex 0 gives nine positions `1..=9`; the copy of `b` at
/// position `p` occupies ids `(p - 1) * n .. p * n`. Each copy's stubs are
/// assigned to the position's Petersen neighbours in ascending order. The
/// three neighbours of vertex 0 carry the outer stubs of `B''`, in ascending
/// order of position.
pub fn double_prime(b: &Pole) -> Result<Pole> {
    b.expect_arity(3)?;
    let n = b.order();
    let petersen = seed_graph(Seed::Petersen);
    let block = |p: Vertex| (p - 1) * n;
    // vertex of the copy at position p carrying the stub towards neighbour q
    let port = |p: Vertex, q: Vertex| {
        let rank = petersen.neighbors(p).iter().position(|&w| w == q).unwrap();
        block(p) + b.stubs()[rank]
    };
    let mut edges: Vec<Edge> = Vec::new();
    for p in 1..10 {
        edges.extend(b.inner().shifted_edges(block(p)));
    }
    for &(p, q) in petersen.edges() {
        if p != REMOVED_POSITION && q != REMOVED_POSITION {
            edges.push((port(p, q), port(q, p)));
        }
    }
    let stubs = petersen
        .neighbors(REMOVED_POSITION)
        .iter()
        .map(|&p| port(p, REMOVED_POSITION))
        .collect();
    Pole::new(Graph::new(9 * n, edges)?, stubs)
}

/// Replaces edge `e = {u, v}` (`u < v`) of `host` by the 2-pole `p`: `u` is
/// joined to the first stub vertex and `v` to the second. The pole's ids are
/// shifted past the host's.
pub fn insert_2pole(host: &Graph, e: Edge, p: &Pole) -> Result<Graph> {
    p.expect_arity(2)?;
    let (u, v) = (e.0.min(e.1), e.0.max(e.1));
    let index = host.edge_index(u, v).ok_or(Error::MissingEdge(u, v))?;
    let offset = host.order();
    let mut edges: Vec<Edge> = host
        .edges()
        .iter()
        .enumerate()
        .filter(|&(i, _)| i != index)
        .map(|(_, &e)| e)
        .collect();
    edges.extend(p.inner().shifted_edges(offset));
    edges.push((u, p.stubs()[0] + offset));
    edges.push((v, p.stubs()[1] + offset));
    Graph::new(offset + p.order(), edges).map_err(|err| match err {
        Error::DuplicateEdge(a, b) => Error::Multigraph(format!("parallel edge {a}-{b}")),
        other => other,
    })
}

/// Attaches a new vertex (id `|V(p)|`) to the three stub vertices.
pub fn close_3pole_with_vertex(p: &Pole) -> Result<Graph> {
    p.expect_arity(3)?;
    let s = p.stubs();
    if s[0] == s[1] || s[1] == s[2] || s[0] == s[2] {
        return Err(Error::Multigraph(
            "stub vertices are not distinct, closing vertex would have parallel edges".into(),
        ));
    }
    let apex = p.order();
    let edges = p
        .inner()
        .edges()
        .iter()
        .copied()
        .chain(s.iter().map(|&x| (x, apex)));
    Graph::new(apex + 1, edges)
}

/// The one-vertex 3-pole.
pub fn single_vertex_3pole() -> Pole {
    Pole::new(Graph::empty(1), vec![0, 0, 0]).expect("valid pole")
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FamilyKind {
    /// 2-poles grown from `K4` by the doubling composition, inserted into `K4`.
    Planar,
    /// 2-poles grown from `K3,3` by the doubling composition, inserted into `K3,3`.
    Bipartite,
    /// 3-poles grown from a single vertex by the nine-copy composition, closed
    /// by one new vertex.
    ThreeConnected,
}

impl FamilyKind {
    pub const ALL: [FamilyKind; 3] = [
        FamilyKind::Planar,
        FamilyKind::Bipartite,
        FamilyKind::ThreeConnected,
    ];

    pub fn name(self) -> &'static str {
        match self {
            FamilyKind::Planar => "planar",
            FamilyKind::Bipartite => "bipartite",
            FamilyKind::ThreeConnected => "threeconn",
        }
    }

    /// Smallest `k` whose closure is a simple graph.
    pub fn min_k(self) -> u32 {
        match self {
            FamilyKind::ThreeConnected => 1,
            _ => 0,
        }
    }

    /// Supremum of tsp/|V| over the family.
    pub fn limit_ratio(self) -> (u64, u64) {
        match self {
            FamilyKind::Planar => (5, 4),
            FamilyKind::Bipartite => (6, 5),
            FamilyKind::ThreeConnected => (9, 8),
        }
    }

    /// Vertices the closure adds to the pole.
    pub fn host_order(self) -> u64 {
        match self {
            FamilyKind::Planar => 4,
            FamilyKind::Bipartite => 6,
            FamilyKind::ThreeConnected => 1,
        }
    }

    fn host(self) -> Seed {
        match self {
            FamilyKind::Planar => Seed::K4,
            FamilyKind::Bipartite => Seed::K33,
            FamilyKind::ThreeConnected => Seed::Petersen,
        }
    }
}

impl std::str::FromStr for FamilyKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "planar" => Ok(FamilyKind::Planar),
            "bipartite" => Ok(FamilyKind::Bipartite),
            "threeconn" => Ok(FamilyKind::ThreeConnected),
            other => Err(Error::Domain(format!("unknown family {other:?}"))),
        }
    }
}

/// Closed-form excess parameter and pole order of the `k`-th family member.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ClosedForm {
    /// `a_k` for the 2-pole families, `b_k` for the 3-pole family.
    pub excess_param: u64,
    /// `n_k`, the order of the pole.
    pub pole_vertices: u64,
}

impl ClosedForm {
    /// `a_k = 2^(k+1) - 2` with `n_k = 8 * 2^k - 4` or `10 * 2^k - 4`;
    /// `b_k = (9^k - 1) / 8` with `n_k = 9^k`. `None` on overflow.
    pub fn predict(kind: FamilyKind, k: u32) -> Option<ClosedForm> {
        match kind {
            FamilyKind::Planar | FamilyKind::Bipartite => {
                let pow = 1u64.checked_shl(k).filter(|&p| p.leading_zeros() >= 4)?;
                let base = if kind == FamilyKind::Planar { 8 } else { 10 };
                Some(ClosedForm {
                    excess_param: 2 * pow - 2,
                    pole_vertices: base * pow - 4,
                })
            }
            FamilyKind::ThreeConnected => {
                let pow = 9u64.checked_pow(k)?;
                Some(ClosedForm {
                    excess_param: (pow - 1) / 8,
                    pole_vertices: pow,
                })
            }
        }
    }

    /// Order of the closed family graph.
    pub fn closed_vertices(&self, kind: FamilyKind) -> u64 {
        self.pole_vertices + kind.host_order()
    }
}

/// Largest pole order [`family`] builds by default.
pub const DEFAULT_MAX_FAMILY_VERTICES: u64 = 1 << 20;

#[derive(Debug, Clone)]
pub struct Family {
    pub kind: FamilyKind,
    pub k: u32,
    pub pole: Pole,
    pub closed: Graph,
    pub predicted: ClosedForm,
}

/// The seed pole of a family: `K4` or `K3,3` with edge `{0, 1}` cut, or the
/// one-vertex 3-pole.
pub fn seed_pole(kind: FamilyKind) -> Pole {
    match kind {
        FamilyKind::ThreeConnected => single_vertex_3pole(),
        _ => cut_edge_to_2pole(&seed_graph(kind.host()), (0, 1)).expect("seed edge exists"),
    }
}

/// The `k`-th pole of the family, without closing it.
pub fn family_pole(kind: FamilyKind, k: u32, max_vertices: u64) -> Result<Pole> {
    let predicted = ClosedForm::predict(kind, k)
        .filter(|c| c.pole_vertices <= max_vertices)
        .ok_or_else(|| {
            Error::ResourceBound(format!(
                "{} family at k = {k} exceeds {max_vertices} pole vertices",
                kind.name()
            ))
        })?;
    let step = match kind {
        FamilyKind::ThreeConnected => double_prime,
        _ => prime,
    };
    let mut pole = seed_pole(kind);
    for _ in 0..k {
        pole = step(&pole)?;
    }
    debug_assert_eq!(pole.order() as u64, predicted.pole_vertices);
    Ok(pole)
}

/// Builds the `k`-th member of a family: its pole, the closed cubic graph
/// (2-poles inserted into edge `{0, 1}` of their seed graph, 3-poles closed
/// by a new vertex), and the closed-form prediction.
pub fn family(kind: FamilyKind, k: u32, max_vertices: u64) -> Result<Family> {
    if k < kind.min_k() {
        return Err(Error::Multigraph(format!(
            "the {} family closure at k = {k} has parallel edges",
            kind.name()
        )));
    }
    let pole = family_pole(kind, k, max_vertices)?;
    let closed = match kind {
        FamilyKind::ThreeConnected => close_3pole_with_vertex(&pole)?,
        _ => insert_2pole(&seed_graph(kind.host()), (0, 1), &pole)?,
    };
    let predicted = ClosedForm::predict(kind, k).expect("checked by family_pole");
    Ok(Family {
        kind,
        k,
        pole,
        closed,
        predicted,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::structure::is_truly_bipartite;

    #[test]
    fn seed_sizes() {
        for (seed, n, m) in [(Seed::K4, 4, 6), (Seed::K33, 6, 9), (Seed::Petersen, 10, 15)] {
            let g = seed_graph(seed);
            assert_eq!((g.order(), g.size()), (n, m));
            assert!(g.is_cubic());
        }
        assert!(seed_graph(Seed::K33).has_edge(0, 1));
    }

    #[test]
    fn cutting_edges() {
        let a = cut_edge_to_2pole(&seed_graph(Seed::K4), (1, 0)).unwrap();
        assert_eq!((a.order(), a.inner().size(), a.stubs()), (4, 5, &[0, 1][..]));
        let b = cut_edge_to_2pole(&seed_graph(Seed::K33), (0, 1)).unwrap();
        assert_eq!((b.order(), b.inner().size()), (6, 8));
        let c = cut_edge_to_2pole(&seed_graph(Seed::Petersen), (0, 1)).unwrap();
        assert_eq!((c.order(), c.inner().size()), (10, 14));
        assert_eq!(
            cut_edge_to_2pole(&seed_graph(Seed::K33), (0, 2)),
            Err(Error::MissingEdge(0, 2))
        );
    }

    #[test]
    fn removing_vertices() {
        let t = remove_vertex_to_3pole(&seed_graph(Seed::K4), 2).unwrap();
        assert_eq!((t.order(), t.inner().size(), t.stubs()), (3, 3, &[0, 1, 2][..]));
        let p = remove_vertex_to_3pole(&seed_graph(Seed::Petersen), 0).unwrap();
        assert_eq!((p.order(), p.inner().size(), p.stubs()), (9, 12, &[0, 3, 4][..]));
        let k = remove_vertex_to_3pole(&seed_graph(Seed::K33), 5).unwrap();
        assert_eq!((k.order(), k.inner().size()), (5, 6));
        assert!(matches!(
            remove_vertex_to_3pole(&seed_graph(Seed::K4), 4),
            Err(Error::VertexOutOfRange { .. })
        ));
    }

    #[test]
    fn prime_sizes_and_bipartiteness() {
        let a0 = seed_pole(FamilyKind::Planar);
        assert_eq!(prime(&a0).unwrap().order(), 12);
        let b0 = seed_pole(FamilyKind::Bipartite);
        let b1 = prime(&b0).unwrap();
        assert_eq!(b1.order(), 16);
        assert!(is_truly_bipartite(&b1).unwrap());
        assert!(is_truly_bipartite(&prime(&b1).unwrap()).unwrap());
        assert!(matches!(
            prime(&single_vertex_3pole()),
            Err(Error::UnsupportedArity { expected: 2, actual: 3 })
        ));
    }

    #[test]
    fn double_prime_of_single_vertex_is_petersen_minus_vertex() {
        let b1 = double_prime(&single_vertex_3pole()).unwrap();
        let expected = remove_vertex_to_3pole(&seed_graph(Seed::Petersen), 0).unwrap();
        assert_eq!(b1, expected);
        let b2 = double_prime(&b1).unwrap();
        assert_eq!((b2.order(), b2.arity()), (81, 3));
        assert!(matches!(
            double_prime(&seed_pole(FamilyKind::Planar)),
            Err(Error::UnsupportedArity { expected: 3, actual: 2 })
        ));
    }

    #[test]
    fn closing_three_poles() {
        let b1 = double_prime(&single_vertex_3pole()).unwrap();
        let g = close_3pole_with_vertex(&b1).unwrap();
        assert_eq!(g.order(), 10);
        assert!(g.is_cubic());
        assert!(matches!(
            close_3pole_with_vertex(&single_vertex_3pole()),
            Err(Error::Multigraph(_))
        ));
    }

    #[test]
    fn insertion() {
        let a0 = seed_pole(FamilyKind::Planar);
        let g = insert_2pole(&seed_graph(Seed::K4), (0, 1), &a0).unwrap();
        assert_eq!(g.order(), 8);
        assert!(g.is_cubic());
        let b0 = seed_pole(FamilyKind::Bipartite);
        let h = insert_2pole(&seed_graph(Seed::K33), (0, 1), &b0).unwrap();
        assert_eq!(h.order(), 12);
        assert!(h.is_cubic());
        assert_eq!(
            insert_2pole(&seed_graph(Seed::K33), (0, 2), &b0),
            Err(Error::MissingEdge(0, 2))
        );
    }

    #[test]
    fn family_examples() {
        let f = family(FamilyKind::Planar, 1, DEFAULT_MAX_FAMILY_VERTICES).unwrap();
        assert_eq!((f.pole.order(), f.closed.order()), (12, 16));
        assert_eq!((f.predicted.excess_param, f.predicted.pole_vertices), (2, 12));
        let f = family(FamilyKind::Bipartite, 2, DEFAULT_MAX_FAMILY_VERTICES).unwrap();
        assert_eq!((f.predicted.excess_param, f.predicted.pole_vertices), (6, 36));
        assert_eq!(f.closed.order(), 42);
        let f = family(FamilyKind::ThreeConnected, 1, DEFAULT_MAX_FAMILY_VERTICES).unwrap();
        assert_eq!((f.predicted.excess_param, f.predicted.pole_vertices), (1, 9));
        assert_eq!(f.closed.order(), 10);
        assert!(matches!(
            family(FamilyKind::ThreeConnected, 0, DEFAULT_MAX_FAMILY_VERTICES),
            Err(Error::Multigraph(_))
        ));
        assert!(matches!(
            family(FamilyKind::Planar, 30, DEFAULT_MAX_FAMILY_VERTICES),
            Err(Error::ResourceBound(_))
        ));
    }

    #[test]
    fn closed_form_overflow_is_none() {
        assert!(ClosedForm::predict(FamilyKind::Planar, 64).is_none());
        assert!(ClosedForm::predict(FamilyKind::ThreeConnected, 30).is_none());
        assert!(ClosedForm::predict(FamilyKind::ThreeConnected, 20).is_some());
    }
}
