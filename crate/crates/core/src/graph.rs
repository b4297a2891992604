//! Simple undirected graphs on dense vertex indices, and labeled pairs `(G, h)`.
//!
//! Vertex sets are `u64` bitmasks throughout, so a graph has at most
//! [`MAX_VERTICES`] vertices. Edges are kept sorted lexicographically by
//! `(min endpoint, max endpoint)`; an edge's position in that list is its
//! stable index, used by orientations and certificates.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub const MAX_VERTICES: usize = 64;

/// Iterate the set bits of a vertex mask in increasing order.
pub fn bits(mut mask: u64) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if mask == 0 {
            None
        } else {
            let v = mask.trailing_zeros() as usize;
            mask &= mask - 1;
            Some(v)
        }
    })
}

pub fn mask_of(vertices: impl IntoIterator<Item = usize>) -> u64 {
    vertices.into_iter().fold(0u64, |m, v| m | (1u64 << v))
}

#[inline]
pub fn full_mask(n: usize) -> u64 {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    edges: Vec<(usize, usize)>,
    adj: Vec<u64>,
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges)
    }
}

impl Graph {
    pub fn empty(n: usize) -> Self {
        assert!(n <= MAX_VERTICES, "at most {MAX_VERTICES} vertices");
        Graph {
            n,
            edges: Vec::new(),
            adj: vec![0; n],
        }
    }

    /// Build from an edge list. Loops and repeated edges are rejected.
    pub fn from_edges(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        if n > MAX_VERTICES {
            return Err(Error::guard("vertex count", n, MAX_VERTICES));
        }
        let mut adj = vec![0u64; n];
        for (u, v) in edges {
            if u >= n {
                return Err(Error::InvalidVertex(u));
            }
            if v >= n {
                return Err(Error::InvalidVertex(v));
            }
            if u == v {
                return Err(Error::InvalidGraph(format!("loop at vertex {u}")));
            }
            if adj[u] >> v & 1 == 1 {
                return Err(Error::InvalidGraph(format!("parallel edge {u}-{v}")));
            }
            adj[u] |= 1 << v;
            adj[v] |= 1 << u;
        }
        Ok(Self::from_adjacency(adj))
    }

    /// Build from symmetric, loop-free adjacency masks.
    pub fn from_adjacency(adj: Vec<u64>) -> Self {
        let n = adj.len();
        assert!(n <= MAX_VERTICES);
        let mut edges = Vec::new();
        for (u, &row) in adj.iter().enumerate() {
            debug_assert_eq!(row >> u & 1, 0, "loop at {u}");
            for v in bits(row) {
                debug_assert_eq!(adj[v] >> u & 1, 1, "asymmetric adjacency");
                if u < v {
                    edges.push((u, v));
                }
            }
        }
        Graph { n, edges, adj }
    }

    pub fn complete(n: usize) -> Self {
        let adj = (0..n).map(|v| full_mask(n) & !(1 << v)).collect();
        Self::from_adjacency(adj)
    }

    pub fn cycle(n: usize) -> Self {
        assert!(n >= 3);
        Self::from_edges(n, (0..n).map(|i| (i, (i + 1) % n))).unwrap()
    }

    pub fn path(n: usize) -> Self {
        Self::from_edges(n, (1..n).map(|i| (i - 1, i))).unwrap()
    }

    /// `K_{a,b}` with parts `0..a` and `a..a+b`.
    pub fn complete_bipartite(a: usize, b: usize) -> Self {
        let edges = (0..a).flat_map(|u| (a..a + b).map(move |v| (u, v)));
        Self::from_edges(a + b, edges).unwrap()
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn m(&self) -> usize {
        self.edges.len()
    }

    #[inline]
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn edge(&self, e: usize) -> Result<(usize, usize)> {
        self.edges.get(e).copied().ok_or(Error::InvalidEdge(e))
    }

    #[inline]
    pub fn neighbors_mask(&self, v: usize) -> u64 {
        self.adj[v]
    }

    pub fn adjacency(&self) -> &[u64] {
        &self.adj
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> {
        bits(self.adj[v])
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    pub fn degrees(&self) -> Vec<usize> {
        (0..self.n).map(|v| self.degree(v)).collect()
    }

    pub fn max_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && self.adj[u] >> v & 1 == 1
    }

    pub fn edge_index(&self, u: usize, v: usize) -> Option<usize> {
        let key = (u.min(v), u.max(v));
        self.edges.binary_search(&key).ok()
    }

    pub fn vertex_mask(&self) -> u64 {
        full_mask(self.n)
    }

    pub fn check_vertex(&self, v: usize) -> Result<()> {
        if v < self.n {
            Ok(())
        } else {
            Err(Error::InvalidVertex(v))
        }
    }

    /// Induced subgraph on `mask`; also returns the new-to-old vertex map.
    pub fn induced(&self, mask: u64) -> (Graph, Vec<usize>) {
        let mask = mask & self.vertex_mask();
        let map: Vec<usize> = bits(mask).collect();
        let mut pos = [usize::MAX; MAX_VERTICES];
        for (i, &v) in map.iter().enumerate() {
            pos[v] = i;
        }
        let adj = map
            .iter()
            .map(|&v| bits(self.adj[v] & mask).fold(0u64, |acc, w| acc | 1 << pos[w]))
            .collect();
        (Graph::from_adjacency(adj), map)
    }

    pub fn without_vertex(&self, v: usize) -> (Graph, Vec<usize>) {
        self.induced(self.vertex_mask() & !(1 << v))
    }

    pub fn without_edge(&self, e: usize) -> Result<Graph> {
        let (u, v) = self.edge(e)?;
        let mut adj = self.adj.clone();
        adj[u] &= !(1 << v);
        adj[v] &= !(1 << u);
        Ok(Graph::from_adjacency(adj))
    }

    pub fn with_edge(&self, u: usize, v: usize) -> Result<Graph> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if u == v || self.has_edge(u, v) {
            return Err(Error::InvalidGraph(format!("cannot add edge {u}-{v}")));
        }
        let mut adj = self.adj.clone();
        adj[u] |= 1 << v;
        adj[v] |= 1 << u;
        Ok(Graph::from_adjacency(adj))
    }

    /// Append a vertex adjacent to `neighbors`.
    pub fn with_vertex(&self, neighbors: u64) -> Result<Graph> {
        if self.n + 1 > MAX_VERTICES {
            return Err(Error::guard("vertex count", self.n + 1, MAX_VERTICES));
        }
        let neighbors = neighbors & self.vertex_mask();
        let new = self.n;
        let mut adj = self.adj.clone();
        for v in bits(neighbors) {
            adj[v] |= 1 << new;
        }
        adj.push(neighbors);
        Ok(Graph::from_adjacency(adj))
    }

    /// `perm[old] = new`.
    pub fn relabel(&self, perm: &[usize]) -> Graph {
        assert_eq!(perm.len(), self.n);
        let mut adj = vec![0u64; self.n];
        for &(u, v) in &self.edges {
            adj[perm[u]] |= 1 << perm[v];
            adj[perm[v]] |= 1 << perm[u];
        }
        Graph::from_adjacency(adj)
    }

    /// Vertices reachable from `start` inside `within`.
    pub fn reach(&self, start: usize, within: u64) -> u64 {
        let mut seen = 1u64 << start;
        let mut frontier = seen;
        while frontier != 0 {
            let mut next = 0;
            for v in bits(frontier) {
                next |= self.adj[v] & within;
            }
            frontier = next & !seen;
            seen |= next;
        }
        seen & (within | 1 << start)
    }

    /// Connected components of the subgraph induced by `within`, ordered by smallest vertex.
    pub fn components_within(&self, within: u64) -> Vec<u64> {
        let mut rest = within & self.vertex_mask();
        let mut out = Vec::new();
        while rest != 0 {
            let v = rest.trailing_zeros() as usize;
            let comp = self.reach(v, within);
            out.push(comp);
            rest &= !comp;
        }
        out
    }

    pub fn components(&self) -> Vec<u64> {
        self.components_within(self.vertex_mask())
    }

    /// The empty graph on zero vertices is not considered connected.
    pub fn is_connected(&self) -> bool {
        self.n > 0 && self.reach(0, self.vertex_mask()) == self.vertex_mask()
    }

    pub fn is_connected_within(&self, within: u64) -> bool {
        within != 0 && self.reach(within.trailing_zeros() as usize, within) == within
    }

    /// Connected, at least three vertices, no cut vertex.
    pub fn is_two_connected(&self) -> bool {
        if self.n < 3 || !self.is_connected() {
            return false;
        }
        let all = self.vertex_mask();
        (0..self.n).all(|v| self.is_connected_within(all & !(1 << v)))
    }

    pub fn is_complete(&self) -> bool {
        2 * self.m() == self.n * self.n.saturating_sub(1)
    }

    /// Connected and 2-regular.
    pub fn is_cycle(&self) -> bool {
        self.n >= 3 && (0..self.n).all(|v| self.degree(v) == 2) && self.is_connected()
    }

    pub fn is_independent(&self, set: u64) -> bool {
        bits(set).all(|v| self.adj[v] & set == 0)
    }
}

/// A graph together with a vertex labeling `h: V -> N`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LabeledPair {
    pub graph: Graph,
    pub labels: Vec<u32>,
}

impl LabeledPair {
    pub fn new(graph: Graph, labels: Vec<u32>) -> Result<Self> {
        if labels.len() != graph.n() {
            return Err(Error::Labeling(format!(
                "{} labels for {} vertices",
                labels.len(),
                graph.n()
            )));
        }
        Ok(LabeledPair { graph, labels })
    }

    pub fn zero(graph: Graph) -> Self {
        let labels = vec![0; graph.n()];
        LabeledPair { graph, labels }
    }

    /// The labeling `h_x`.
    pub fn marked(graph: Graph, x: usize) -> Result<Self> {
        graph.check_vertex(x)?;
        let mut labels = vec![0; graph.n()];
        labels[x] = 1;
        Ok(LabeledPair { graph, labels })
    }

    /// The labeling `h_{x,y}`.
    pub fn two_marked(graph: Graph, x: usize, y: usize) -> Result<Self> {
        graph.check_vertex(x)?;
        graph.check_vertex(y)?;
        if x == y {
            return Err(Error::Labeling("marked vertices must differ".into()));
        }
        let mut labels = vec![0; graph.n()];
        labels[x] = 1;
        labels[y] = 1;
        Ok(LabeledPair { graph, labels })
    }

    /// The marked vertex if this is an `h_x` labeling.
    pub fn single_mark(&self) -> Result<usize> {
        let ones: Vec<usize> = (0..self.labels.len()).filter(|&v| self.labels[v] == 1).collect();
        let others = self.labels.iter().filter(|&&h| h > 1).count();
        if ones.len() == 1 && others == 0 {
            Ok(ones[0])
        } else {
            Err(Error::Labeling("expected exactly one vertex labeled 1".into()))
        }
    }

    pub fn label_sum(&self) -> u32 {
        self.labels.iter().sum()
    }

    /// `f = d_G - h`, saturating at zero.
    pub fn degree_bound(&self) -> DegreeBound {
        DegreeBound(
            (0..self.graph.n())
                .map(|v| (self.graph.degree(v) as u32).saturating_sub(self.labels[v]))
                .collect(),
        )
    }

    pub fn induced(&self, mask: u64) -> (LabeledPair, Vec<usize>) {
        let (g, map) = self.graph.induced(mask);
        let labels = map.iter().map(|&v| self.labels[v]).collect();
        (LabeledPair { graph: g, labels }, map)
    }
}

/// Per-vertex bound `f`; an `f`-AT orientation has out-degree at most `f(v) - 1`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct DegreeBound(pub Vec<u32>);

impl DegreeBound {
    pub fn degrees(g: &Graph) -> Self {
        DegreeBound(g.degrees().into_iter().map(|d| d as u32).collect())
    }

    pub fn constant(n: usize, k: u32) -> Self {
        DegreeBound(vec![k; n])
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn total(&self) -> u64 {
        self.0.iter().map(|&x| x as u64).sum()
    }

    pub(crate) fn check_len(&self, g: &Graph) -> Result<()> {
        if self.0.len() == g.n() {
            Ok(())
        } else {
            Err(Error::precondition(format!(
                "degree bound has {} entries for {} vertices",
                self.0.len(),
                g.n()
            )))
        }
    }
}

impl std::ops::Index<usize> for DegreeBound {
    type Output = u32;
    fn index(&self, v: usize) -> &u32 {
        &self.0[v]
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn edges_sorted_and_symmetric() {
        let g = Graph::from_edges(4, [(3, 0), (2, 1), (0, 1)]).unwrap();
        assert_eq!(g.edges(), &[(0, 1), (0, 3), (1, 2)]);
        assert_eq!(g.edge_index(3, 0), Some(1));
        for v in 0..4 {
            for w in g.neighbors(v) {
                assert!(g.has_edge(w, v));
            }
        }
    }

    #[test]
    fn rejects_loops_and_parallel_edges() {
        assert!(Graph::from_edges(3, [(1, 1)]).is_err());
        assert!(Graph::from_edges(3, [(0, 1), (1, 0)]).is_err());
        assert!(Graph::from_edges(3, [(0, 5)]).is_err());
    }

    #[test]
    fn connectivity() {
        assert!(Graph::cycle(5).is_two_connected());
        assert!(!Graph::path(3).is_two_connected());
        assert!(Graph::path(3).is_connected());
        assert!(!Graph::empty(0).is_connected());
        assert!(Graph::empty(1).is_connected());
        assert_eq!(Graph::empty(3).components().len(), 3);
    }

    #[test]
    fn induced_subgraph_map() {
        let g = Graph::complete(5);
        let (h, map) = g.induced(0b10110);
        assert_eq!(map, vec![1, 2, 4]);
        assert!(h.is_complete());
        assert_eq!(h.m(), 3);
    }

    #[test]
    fn labels() {
        let p = LabeledPair::marked(Graph::cycle(4), 2).unwrap();
        assert_eq!(p.single_mark().unwrap(), 2);
        assert_eq!(p.degree_bound().0, vec![2, 2, 1, 2]);
        let q = LabeledPair::two_marked(Graph::cycle(4), 0, 1).unwrap();
        assert!(q.single_mark().is_err());
    }
}
