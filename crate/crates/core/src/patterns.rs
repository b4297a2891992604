//! Exact-shape detectors for θ-graphs and T-graphs, and the small named graphs
//! used throughout the crate and its tests.

use serde::{Deserialize, Serialize};

use crate::canon::canonical_labeling;
use crate::graph::Graph;

/// Two poles joined by three internally disjoint paths.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ThetaWitness {
    /// Sorted.
    pub poles: (usize, usize),
    /// Each runs from `poles.0` to `poles.1`; sorted by length, then lexicographically.
    pub paths: [Vec<usize>; 3],
}

impl ThetaWitness {
    pub fn path_lengths(&self) -> [usize; 3] {
        self.paths.clone().map(|p| p.len() - 1)
    }
}

/// `K4` with the three edges at the apex subdivided.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TGraphWitness {
    pub apex: usize,
    /// Sorted; `paths[i]` ends at `triangle[i]`.
    pub triangle: [usize; 3],
    /// Apex-to-`triangle[i]` vertex sequences.
    pub paths: [Vec<usize>; 3],
    pub path_lengths: [usize; 3],
}

/// Follow degree-2 vertices from `start` (entered from `from`) until a vertex
/// of another degree. Returns the walk including both ends.
fn walk(g: &Graph, from: usize, start: usize) -> Vec<usize> {
    let mut path = vec![from, start];
    let (mut prev, mut cur) = (from, start);
    while g.degree(cur) == 2 {
        let next = (g.neighbors_mask(cur) & !(1 << prev)).trailing_zeros() as usize;
        if next == from || path.len() > g.n() {
            path.push(next);
            return path;
        }
        path.push(next);
        prev = cur;
        cur = next;
    }
    path
}

/// Witness iff `g` is exactly a θ-graph.
pub fn detect_theta(g: &Graph) -> Option<ThetaWitness> {
    let n = g.n();
    let branch: Vec<usize> = (0..n).filter(|&v| g.degree(v) != 2).collect();
    if branch.len() != 2 || branch.iter().any(|&v| g.degree(v) != 3) || g.m() != n + 1 {
        return None;
    }
    let (a, b) = (branch[0], branch[1]);
    let mut paths: Vec<Vec<usize>> = Vec::with_capacity(3);
    for w in g.neighbors(a) {
        let p = walk(g, a, w);
        if *p.last().unwrap() != b {
            return None;
        }
        paths.push(p);
    }
    let internal: usize = paths.iter().map(|p| p.len() - 2).sum();
    if internal + 2 != n {
        return None;
    }
    paths.sort_by(|p, q| p.len().cmp(&q.len()).then_with(|| p.cmp(q)));
    Some(ThetaWitness {
        poles: (a, b),
        paths: [paths[0].clone(), paths[1].clone(), paths[2].clone()],
    })
}

/// Witness iff `g` is exactly a T-graph with apex `x`.
pub fn detect_t_graph(g: &Graph, x: usize) -> Option<TGraphWitness> {
    let n = g.n();
    if x >= n || g.degree(x) != 3 || g.m() != n + 2 {
        return None;
    }
    let mut paths: Vec<Vec<usize>> = g.neighbors(x).map(|w| walk(g, x, w)).collect();
    let ends: Vec<usize> = paths.iter().map(|p| *p.last().unwrap()).collect();
    if ends.iter().any(|&z| z == x || g.degree(z) != 3) {
        return None;
    }
    if ends[0] == ends[1] || ends[0] == ends[2] || ends[1] == ends[2] {
        return None;
    }
    if !(g.has_edge(ends[0], ends[1]) && g.has_edge(ends[0], ends[2]) && g.has_edge(ends[1], ends[2])) {
        return None;
    }
    let internal: usize = paths.iter().map(|p| p.len() - 2).sum();
    if internal + 4 != n {
        return None;
    }
    paths.sort_by_key(|p| *p.last().unwrap());
    let triangle = [0, 1, 2].map(|i| *paths[i].last().unwrap());
    let path_lengths = [0, 1, 2].map(|i| paths[i].len() - 1);
    Some(TGraphWitness {
        apex: x,
        triangle,
        paths: [paths[0].clone(), paths[1].clone(), paths[2].clone()],
        path_lengths,
    })
}

/// `K4` on `0..4`, marked vertex 3.
pub fn k4_seed() -> (Graph, usize) {
    (Graph::complete(4), 3)
}

/// Triangle `0 1 2`, apex 3 joined to each triangle vertex through one
/// subdivision vertex (4, 5, 6).
pub fn subdivided_seed() -> (Graph, usize) {
    let g = Graph::from_edges(
        7,
        [(0, 1), (0, 2), (1, 2), (3, 4), (0, 4), (3, 5), (1, 5), (3, 6), (2, 6)],
    )
    .unwrap();
    (g, 3)
}

/// The Moser spindle; vertex 6 is the unique vertex of degree 4.
pub fn moser_spindle() -> (Graph, usize) {
    let g = Graph::from_edges(
        7,
        [
            (0, 2),
            (0, 3),
            (0, 1),
            (2, 3),
            (1, 4),
            (1, 5),
            (4, 5),
            (2, 6),
            (3, 6),
            (4, 6),
            (5, 6),
        ],
    )
    .unwrap();
    (g, 6)
}

/// `K_{2,3}` on parts `{1, 2}` and `{0, 3, 4}` plus the edge `3 4`, marked on
/// 1 and 2: choosable but not paintable.
pub fn choosable_not_paintable() -> (Graph, usize, usize) {
    let g = Graph::from_edges(5, [(0, 1), (0, 2), (1, 3), (2, 3), (3, 4), (1, 4), (2, 4)]).unwrap();
    (g, 1, 2)
}

/// `K_{2,3}` marked on the two vertices of degree 3.
pub fn paintable_not_at() -> (Graph, usize, usize) {
    (Graph::complete_bipartite(2, 3), 0, 1)
}

/// T-graph with apex 0, triangle 1 2 3 and the given apex path lengths (each ≥ 1).
/// Internal path vertices are numbered from 4 in path order.
pub fn t_graph(lengths: [usize; 3]) -> (Graph, TGraphWitness) {
    assert!(lengths.iter().all(|&l| l >= 1));
    let n = 4 + lengths.iter().map(|l| l - 1).sum::<usize>();
    let mut edges = vec![(1, 2), (1, 3), (2, 3)];
    let mut next = 4;
    for (i, &len) in lengths.iter().enumerate() {
        let mut prev = 0;
        for _ in 1..len {
            edges.push((prev, next));
            prev = next;
            next += 1;
        }
        edges.push((prev, i + 1));
    }
    let g = Graph::from_edges(n, edges).unwrap();
    let w = detect_t_graph(&g, 0).expect("constructed T-graph");
    (g, w)
}

/// θ-graph with poles 0 and 1 and the given path lengths (at most one equal to 1).
pub fn theta_graph(lengths: [usize; 3]) -> (Graph, ThetaWitness) {
    assert!(lengths.iter().all(|&l| l >= 1));
    assert!(lengths.iter().filter(|&&l| l == 1).count() <= 1);
    let n = 2 + lengths.iter().map(|l| l - 1).sum::<usize>();
    let mut edges = Vec::new();
    let mut next = 2;
    for &len in &lengths {
        let mut prev = 0;
        for _ in 1..len {
            edges.push((prev, next));
            prev = next;
            next += 1;
        }
        edges.push((prev, 1));
    }
    let g = Graph::from_edges(n, edges).unwrap();
    let w = detect_theta(&g).expect("constructed θ-graph");
    (g, w)
}

/// If `(g, x)` is the Moser spindle with `x` its degree-4 vertex, a bijection
/// `map[v]` onto the vertices of [`moser_spindle`].
pub fn moser_spindle_map(g: &Graph, x: usize) -> Option<Vec<usize>> {
    let (s, sx) = moser_spindle();
    if g.n() != 7 || g.m() != 11 || x >= 7 || g.degree(x) != 4 {
        return None;
    }
    let mark = |n: usize, v: usize| -> Vec<u32> { (0..n).map(|u| (u == v) as u32).collect() };
    let pg = canonical_labeling(g, &mark(7, x)).ok()?;
    let ps = canonical_labeling(&s, &mark(7, sx)).ok()?;
    if g.relabel(&pg) != s.relabel(&ps) {
        return None;
    }
    let mut inv_ps = [0usize; 7];
    for v in 0..7 {
        inv_ps[ps[v]] = v;
    }
    Some((0..7).map(|v| inv_ps[pg[v]]).collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn theta_k4_minus_edge() {
        let g = Graph::complete(4).without_edge(Graph::complete(4).edge_index(2, 3).unwrap()).unwrap();
        let w = detect_theta(&g).unwrap();
        assert_eq!(w.poles, (0, 1));
        assert_eq!(w.path_lengths(), [1, 2, 2]);
        assert!(detect_theta(&Graph::complete(4)).is_none());
        assert!(detect_theta(&Graph::cycle(6)).is_none());
    }

    #[test]
    fn theta_k23() {
        let w = detect_theta(&Graph::complete_bipartite(2, 3)).unwrap();
        assert_eq!(w.path_lengths(), [2, 2, 2]);
    }

    #[test]
    fn t_graph_seeds() {
        let (k4, _) = k4_seed();
        for x in 0..4 {
            assert_eq!(detect_t_graph(&k4, x).unwrap().path_lengths, [1, 1, 1]);
        }
        let (g, x) = subdivided_seed();
        let w = detect_t_graph(&g, x).unwrap();
        assert_eq!(w.path_lengths, [2, 2, 2]);
        assert_eq!(w.triangle, [0, 1, 2]);
        assert!(detect_t_graph(&g, 0).is_none());
        let (theta, _) = theta_graph([1, 2, 3]);
        assert!((0..theta.n()).all(|v| detect_t_graph(&theta, v).is_none()));
    }

    #[test]
    fn t_graph_builder_orders_paths_by_triangle_vertex() {
        let (_, w) = t_graph([3, 1, 2]);
        assert_eq!(w.path_lengths, [3, 1, 2]);
        assert_eq!(w.triangle, [1, 2, 3]);
        assert_eq!(w.paths[0], vec![0, 4, 5, 1]);
    }

    #[test]
    fn spindle_shape() {
        let (g, x) = moser_spindle();
        assert_eq!((g.n(), g.m()), (7, 11));
        assert_eq!(g.degree(x), 4);
        let map = moser_spindle_map(&g, x).unwrap();
        let (s, _) = moser_spindle();
        assert_eq!(g.relabel(&map), s);
        assert!(moser_spindle_map(&g, 0).is_none());
        let perm = [3, 5, 0, 6, 1, 2, 4];
        let h = g.relabel(&perm);
        let map = moser_spindle_map(&h, perm[x]).unwrap();
        assert_eq!(h.relabel(&map), s);
    }
}
