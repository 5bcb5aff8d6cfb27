//! Exact planarity testing by path addition over biconnected blocks.
//!
//! Each block is embedded starting from a cycle. At every step the fragments
//! of the block relative to the embedded part are computed; a fragment with
//! no admissible face proves non-planarity, otherwise a path through a
//! fragment (preferring one with a single admissible face) is drawn into a
//! face, splitting it in two.

use std::collections::HashSet;

use crate::graph::{Edge, Graph, Vertex};

pub fn is_planar(g: &Graph) -> bool {
    planar_embedding_faces(g).is_some()
}

/// Face boundaries of a planar embedding of every block with at least two
/// edges, or `None` when some block is non-planar.
pub(crate) fn planar_embedding_faces(g: &Graph) -> Option<Vec<Vec<Vec<Vertex>>>> {
    let mut all = Vec::new();
    for block in biconnected_blocks(g) {
        if block.len() < 2 {
            continue;
        }
        let mut vertices = block.iter().flat_map(|&(u, v)| [u, v]).collect::<Vec<_>>();
        vertices.sort_unstable();
        vertices.dedup();
        let local = |x: Vertex| vertices.binary_search(&x).unwrap();
        let h = Graph::new(
            vertices.len(),
            block.iter().map(|&(u, v)| (local(u), local(v))),
        )
        .expect("block of a simple graph is simple");
        let faces = embed_biconnected(&h)?;
        all.push(
            faces
                .into_iter()
                .map(|f| f.into_iter().map(|x| vertices[x]).collect())
                .collect(),
        );
    }
    Some(all)
}

/// Edge sets of the biconnected blocks of `g`.
fn biconnected_blocks(g: &Graph) -> Vec<Vec<Edge>> {
    let n = g.order();
    let mut disc = vec![usize::MAX; n];
    let mut low = vec![0usize; n];
    let mut timer = 0;
    let mut blocks = Vec::new();
    let mut edge_stack: Vec<Edge> = Vec::new();
    for root in 0..n {
        if disc[root] != usize::MAX {
            continue;
        }
        disc[root] = timer;
        low[root] = timer;
        timer += 1;
        let mut stack = vec![(root, usize::MAX, 0usize)];
        while let Some(&(v, parent, idx)) = stack.last() {
            if idx < g.degree(v) {
                stack.last_mut().unwrap().2 += 1;
                let w = g.neighbors(v)[idx];
                if w == parent {
                    continue;
                }
                if disc[w] == usize::MAX {
                    edge_stack.push((v, w));
                    disc[w] = timer;
                    low[w] = timer;
                    timer += 1;
                    stack.push((w, v, 0));
                } else if disc[w] < disc[v] {
                    edge_stack.push((v, w));
                    low[v] = low[v].min(disc[w]);
                }
            } else {
                stack.pop();
                if let Some(&(p, _, _)) = stack.last() {
                    low[p] = low[p].min(low[v]);
                    if low[v] >= disc[p] {
                        let mut block = Vec::new();
                        while let Some(e) = edge_stack.pop() {
                            block.push(e);
                            if e == (p, v) {
                                break;
                            }
                        }
                        blocks.push(block);
                    }
                }
            }
        }
    }
    blocks
}

fn find_cycle(g: &Graph) -> Vec<Vertex> {
    let n = g.order();
    let mut parent = vec![usize::MAX; n];
    let mut depth = vec![usize::MAX; n];
    depth[0] = 0;
    let mut stack = vec![(0usize, 0usize)];
    while let Some(&(v, idx)) = stack.last() {
        if idx == g.degree(v) {
            stack.pop();
            continue;
        }
        stack.last_mut().unwrap().1 += 1;
        let w = g.neighbors(v)[idx];
        if w == parent[v] {
            continue;
        }
        if depth[w] == usize::MAX {
            parent[w] = v;
            depth[w] = depth[v] + 1;
            stack.push((w, 0));
        } else if depth[w] < depth[v] {
            let mut cycle = vec![v];
            let mut x = v;
            while x != w {
                x = parent[x];
                cycle.push(x);
            }
            return cycle;
        }
    }
    unreachable!("a biconnected block with two or more edges contains a cycle")
}

struct Fragment {
    attachments: Vec<Vertex>,
    /// Vertices not yet embedded; empty for a single chord.
    interior: Vec<Vertex>,
    chord: Option<Edge>,
}

fn embed_biconnected(g: &Graph) -> Option<Vec<Vec<Vertex>>> {
    let n = g.order();
    if n >= 3 && g.size() > 3 * n - 6 {
        return None;
    }
    let cycle = find_cycle(g);
    let mut placed = vec![false; n];
    let mut placed_edge = vec![false; g.size()];
    for (i, &v) in cycle.iter().enumerate() {
        placed[v] = true;
        let w = cycle[(i + 1) % cycle.len()];
        placed_edge[g.edge_index(v, w).unwrap()] = true;
    }
    let mut faces = vec![cycle.clone(), cycle];
    loop {
        let fragments = fragments(g, &placed, &placed_edge);
        if fragments.is_empty() {
            return Some(faces);
        }
        let face_sets = faces
            .iter()
            .map(|f| f.iter().copied().collect::<HashSet<_>>())
            .collect::<Vec<_>>();
        let mut choice = None;
        for (fi, frag) in fragments.iter().enumerate() {
            let admissible = face_sets
                .iter()
                .enumerate()
                .filter(|(_, s)| frag.attachments.iter().all(|a| s.contains(a)))
                .map(|(i, _)| i)
                .collect::<Vec<_>>();
            match admissible.len() {
                0 => return None,
                1 => {
                    choice = Some((fi, admissible[0]));
                    break;
                }
                _ => {
                    if choice.is_none() {
                        choice = Some((fi, admissible[0]));
                    }
                }
            }
        }
        let (fi, face_index) = choice.unwrap();
        let path = fragment_path(g, &fragments[fi], &placed);
        for w in path.windows(2) {
            placed_edge[g.edge_index(w[0], w[1]).unwrap()] = true;
        }
        for &v in &path {
            placed[v] = true;
        }
        let face = faces.swap_remove(face_index);
        let (a, b) = (path[0], *path.last().unwrap());
        let interior = &path[1..path.len() - 1];
        let i = face.iter().position(|&x| x == a).unwrap();
        let j = face.iter().position(|&x| x == b).unwrap();
        let arc = |from: usize, to: usize| {
            let mut out = Vec::new();
            let mut k = from;
            loop {
                out.push(face[k]);
                if k == to {
                    break;
                }
                k = (k + 1) % face.len();
            }
            out
        };
        let mut first = arc(i, j);
        first.extend(interior.iter().rev());
        let mut second = arc(j, i);
        second.extend(interior.iter());
        faces.push(first);
        faces.push(second);
    }
}

fn fragments(g: &Graph, placed: &[bool], placed_edge: &[bool]) -> Vec<Fragment> {
    let n = g.order();
    let mut out = Vec::new();
    for (e, &(u, v)) in g.edges().iter().enumerate() {
        if !placed_edge[e] && placed[u] && placed[v] {
            out.push(Fragment {
                attachments: vec![u, v],
                interior: Vec::new(),
                chord: Some((u, v)),
            });
        }
    }
    let mut seen = vec![false; n];
    for s in 0..n {
        if placed[s] || seen[s] {
            continue;
        }
        seen[s] = true;
        let mut interior = vec![s];
        let mut attachments = Vec::new();
        let mut k = 0;
        while k < interior.len() {
            let x = interior[k];
            k += 1;
            for &y in g.neighbors(x) {
                if placed[y] {
                    attachments.push(y);
                } else if !seen[y] {
                    seen[y] = true;
                    interior.push(y);
                }
            }
        }
        attachments.sort_unstable();
        attachments.dedup();
        out.push(Fragment {
            attachments,
            interior,
            chord: None,
        });
    }
    out
}

/// A path through the fragment joining two distinct attachment vertices.
fn fragment_path(g: &Graph, frag: &Fragment, placed: &[bool]) -> Vec<Vertex> {
    if let Some((u, v)) = frag.chord {
        return vec![u, v];
    }
    let start = frag.attachments[0];
    let in_frag = frag.interior.iter().copied().collect::<HashSet<_>>();
    let mut prev = std::collections::HashMap::new();
    let mut queue = std::collections::VecDeque::new();
    for &c in g.neighbors(start) {
        if in_frag.contains(&c) && !prev.contains_key(&c) {
            prev.insert(c, start);
            queue.push_back(c);
        }
    }
    while let Some(x) = queue.pop_front() {
        if let Some(&end) = g
            .neighbors(x)
            .iter()
            .find(|&&y| placed[y] && y != start)
        {
            let mut path = vec![end, x];
            let mut cur = x;
            while let Some(&p) = prev.get(&cur) {
                path.push(p);
                if p == start {
                    break;
                }
                cur = p;
            }
            path.reverse();
            return path;
        }
        for &y in g.neighbors(x) {
            if in_frag.contains(&y) && !prev.contains_key(&y) {
                prev.insert(y, x);
                queue.push_back(y);
            }
        }
    }
    unreachable!("fragments of a biconnected block have two attachments")
}
