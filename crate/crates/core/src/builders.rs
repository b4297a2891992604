//! Explicit AT orientations for the basic reducible configurations. Each
//! builder checks its hypotheses, constructs the orientation, and recounts the
//! Eulerian subgraphs to confirm the promised parity imbalance.

use std::collections::VecDeque;

use crate::error::{Error, Result};
use crate::euler::eulerian_counts;
use crate::graph::{bits, Graph, LabeledPair};
use crate::orientation::{EulerCounts, Orientation};
use crate::patterns::{TGraphWitness, ThetaWitness};

fn hypothesis(msg: impl Into<String>) -> Error {
    Error::Precondition(msg.into())
}

/// Arcs along `path` in its own order, or against it when `reverse`.
fn path_arcs(path: &[usize], reverse: bool) -> impl Iterator<Item = (usize, usize)> + '_ {
    path.windows(2)
        .map(move |w| if reverse { (w[1], w[0]) } else { (w[0], w[1]) })
}

fn check_bounds(d: &Orientation, p: &LabeledPair) -> Result<()> {
    if d.respects(&p.degree_bound()) {
        Ok(())
    } else {
        Err(Error::Postcondition(format!(
            "out-degrees {:?} exceed bound {:?}",
            d.out_degrees(),
            p.degree_bound().0
        )))
    }
}

/// Orientation for `x` adjacent to `z1` but not to its closed twin `z2` in the
/// connected graph `H = G - x`: order `H` from `z1`, `z2` so each later vertex
/// has an earlier neighbour, orient `H` forward, `x -> z1`, and every other
/// edge at `x` into `x`. `EE = EO + 1`, `d+(x) = 1`, `d+(v) <= d(v) - 1` elsewhere.
pub fn build_euler_lemma_orientation(g: &Graph, x: usize, z1: usize, z2: usize) -> Result<Orientation> {
    for v in [x, z1, z2] {
        g.check_vertex(v)?;
    }
    if x == z1 || x == z2 || z1 == z2 {
        return Err(hypothesis("x, z1, z2 must be distinct"));
    }
    let h = g.vertex_mask() & !(1 << x);
    if !g.is_connected_within(h) {
        return Err(hypothesis("G - x is not connected"));
    }
    let closed = |v: usize| (g.neighbors_mask(v) | 1 << v) & h;
    if closed(z1) != closed(z2) {
        return Err(hypothesis("N_H[z1] != N_H[z2]"));
    }
    if !g.has_edge(x, z1) {
        return Err(hypothesis("x is not adjacent to z1"));
    }
    if g.has_edge(x, z2) {
        return Err(hypothesis("x is adjacent to z2"));
    }
    let mut rank = vec![usize::MAX; g.n()];
    rank[z1] = 0;
    rank[z2] = 1;
    let mut next = 2;
    let mut queue = VecDeque::from([z1, z2]);
    while let Some(v) = queue.pop_front() {
        for w in bits(g.neighbors_mask(v) & h) {
            if rank[w] == usize::MAX {
                rank[w] = next;
                next += 1;
                queue.push_back(w);
            }
        }
    }
    let arcs = g.edges().iter().map(|&(u, v)| {
        if u == x || v == x {
            let other = if u == x { v } else { u };
            if other == z1 {
                (x, z1)
            } else {
                (other, x)
            }
        } else if rank[u] < rank[v] {
            (u, v)
        } else {
            (v, u)
        }
    });
    let d = Orientation::from_arcs(g.clone(), arcs)?;
    let out = d.out_degrees();
    if out[x] > 1 || (0..g.n()).any(|v| v != x && out[v] + 1 > g.degree(v)) {
        return Err(Error::Postcondition("out-degree bound violated".into()));
    }
    let c = eulerian_counts(&d)?;
    if c.even != c.odd + 1 {
        return Err(Error::Postcondition(format!("expected EE = EO + 1, got {c:?}")));
    }
    Ok(d)
}

/// Paths 0 and 1 of the witness directed into the pole `x`, path 2 out of it.
/// Exactly three Eulerian subgraphs.
pub fn build_theta_orientation(g: &Graph, w: &ThetaWitness, x: usize) -> Result<Orientation> {
    if x != w.poles.0 && x != w.poles.1 {
        return Err(hypothesis(format!("{x} is not a pole of the θ-graph")));
    }
    // Witness paths run poles.0 -> poles.1.
    let toward_x = x == w.poles.1;
    let arcs = path_arcs(&w.paths[0], !toward_x)
        .chain(path_arcs(&w.paths[1], !toward_x))
        .chain(path_arcs(&w.paths[2], toward_x));
    let d = Orientation::from_arcs(g.clone(), arcs)?;
    check_bounds(&d, &LabeledPair::marked(g.clone(), x)?)?;
    let c = eulerian_counts(&d)?;
    if c.total() != 3 {
        return Err(Error::Postcondition(format!("expected three Eulerian subgraphs, got {c:?}")));
    }
    Ok(d)
}

fn check_t_witness(g: &Graph, w: &TGraphWitness, extra_edges: usize) -> Result<()> {
    let mut used = 1u64 << w.apex;
    for (i, p) in w.paths.iter().enumerate() {
        if p.first() != Some(&w.apex) || p.last() != Some(&w.triangle[i]) || p.len() != w.path_lengths[i] + 1 {
            return Err(hypothesis(format!("path {i} does not join the apex to z{}", i + 1)));
        }
        for pair in p.windows(2) {
            if !g.has_edge(pair[0], pair[1]) {
                return Err(hypothesis(format!("{}-{} is not an edge", pair[0], pair[1])));
            }
        }
        for &v in &p[1..] {
            if used >> v & 1 == 1 {
                return Err(hypothesis("apex paths are not disjoint"));
            }
            used |= 1 << v;
        }
    }
    let [a, b, c] = w.triangle;
    if !(g.has_edge(a, b) && g.has_edge(b, c) && g.has_edge(a, c)) {
        return Err(hypothesis("z1 z2 z3 is not a triangle"));
    }
    let m: usize = w.path_lengths.iter().sum::<usize>() + 3 + extra_edges;
    if g.m() != m {
        return Err(hypothesis(format!("graph has {} edges, expected {m}", g.m())));
    }
    Ok(())
}

fn t_arcs(w: &TGraphWitness, into: [usize; 2], out: usize) -> Vec<(usize, usize)> {
    let mut arcs: Vec<(usize, usize)> = Vec::new();
    for i in into {
        arcs.extend(path_arcs(&w.paths[i], true));
    }
    arcs.extend(path_arcs(&w.paths[out], false));
    let z = |i: usize| w.triangle[i];
    arcs.extend([(z(into[0]), z(into[1])), (z(into[1]), z(out)), (z(out), z(into[0]))]);
    arcs
}

/// Two apex paths of opposite parity directed into the apex, the third out of
/// it, and the triangle as a directed cycle through them in that order.
/// Four Eulerian subgraphs split 3/1 by parity.
pub fn build_t_orientation(g: &Graph, w: &TGraphWitness) -> Result<Orientation> {
    check_t_witness(g, w, 0)?;
    let l = w.path_lengths;
    let (i, j) = [(0, 1), (0, 2), (1, 2)]
        .into_iter()
        .find(|&(i, j)| (l[i] + l[j]) % 2 == 1)
        .ok_or_else(|| hypothesis("all apex paths have the same parity"))?;
    let k = 3 - i - j;
    let d = Orientation::from_arcs(g.clone(), t_arcs(w, [i, j], k))?;
    check_bounds(&d, &LabeledPair::marked(g.clone(), w.apex)?)?;
    let c = eulerian_counts(&d)?;
    if c.total() != 4 || c.difference().abs() != 2 {
        return Err(Error::Postcondition(format!("expected a 3/1 split, got {c:?}")));
    }
    Ok(d)
}

/// T-graph plus a vertex `u` adjacent to exactly the triangle. On `K5 - xu`
/// this is the closed-twin orientation with `z1` and `u` as the twins, the
/// triangle ordered `z1, u, z2, z3`; subdivided apex edges become directed
/// paths in the direction of the original edge. `EE + EO` is odd.
pub fn build_t_plus_orientation(g: &Graph, w: &TGraphWitness, u: usize) -> Result<Orientation> {
    g.check_vertex(u)?;
    let tri = w.triangle;
    if g.neighbors_mask(u) != (1 << tri[0] | 1 << tri[1] | 1 << tri[2]) {
        return Err(hypothesis(format!("N({u}) is not the triangle")));
    }
    if w.paths.iter().any(|p| p.contains(&u)) {
        return Err(hypothesis("u lies on an apex path"));
    }
    check_t_witness(g, w, 3)?;
    if g.n() != w.path_lengths.iter().sum::<usize>() + 2 {
        return Err(hypothesis("graph has vertices outside the T-graph and u"));
    }
    let rank = |v: usize| [tri[0], u, tri[1], tri[2]].iter().position(|&z| z == v).unwrap();
    let mut arcs: Vec<(usize, usize)> = Vec::new();
    arcs.extend(path_arcs(&w.paths[0], false));
    arcs.extend(path_arcs(&w.paths[1], true));
    arcs.extend(path_arcs(&w.paths[2], true));
    for (a, b) in [(tri[0], tri[1]), (tri[0], tri[2]), (tri[1], tri[2]), (u, tri[0]), (u, tri[1]), (u, tri[2])] {
        arcs.push(if rank(a) < rank(b) { (a, b) } else { (b, a) });
    }
    let d = Orientation::from_arcs(g.clone(), arcs)?;
    check_bounds(&d, &LabeledPair::marked(g.clone(), w.apex)?)?;
    let c = eulerian_counts(&d)?;
    if c.total() % 2 != 1 {
        return Err(Error::Postcondition(format!("expected EE + EO odd, got {c:?}")));
    }
    Ok(d)
}

/// Result of [`build_added_path_orientation`]: the enlarged graph, its
/// orientation, and the new path's vertices from one end of `P` to the other.
#[derive(Clone, Debug)]
pub struct AddedPath {
    pub graph: Graph,
    pub orientation: Orientation,
    pub new_path: Vec<usize>,
    pub counts: EulerCounts,
}

/// T-graph with all apex paths of one parity, plus a path `P'` of length
/// `p_prime_len >= 2` joining the ends of a subpath `P` of apex path `i` that
/// stops short of one end of that path. Path `i` and the lower-indexed other
/// path are directed into the apex, the remaining one out of it, the triangle
/// cyclically in that order, and `P'` against `P`. `|EE - EO| = 1`.
pub fn build_added_path_orientation(
    g: &Graph,
    w: &TGraphWitness,
    p_endpoints: (usize, usize),
    p_prime_len: usize,
) -> Result<AddedPath> {
    check_t_witness(g, w, 0)?;
    if p_prime_len < 2 {
        return Err(hypothesis("P' must have length at least 2"));
    }
    let l = w.path_lengths;
    if l[0] % 2 != l[1] % 2 || l[0] % 2 != l[2] % 2 {
        return Err(hypothesis("apex paths have mixed parity; the T-graph alone is already AT"));
    }
    let (a, b) = p_endpoints;
    let (i, ia, ib) = (0..3)
        .find_map(|i| {
            let p = &w.paths[i];
            let ia = p.iter().position(|&v| v == a)?;
            let ib = p.iter().position(|&v| v == b)?;
            Some((i, ia, ib))
        })
        .ok_or_else(|| hypothesis("P is not a subpath of an apex path"))?;
    let (lo, hi) = (ia.min(ib), ia.max(ib));
    if lo == hi {
        return Err(hypothesis("P must have distinct ends"));
    }
    let path = &w.paths[i];
    let (near, far) = (path[lo], path[hi]);
    if g.degree(near) != 2 && g.degree(far) != 2 {
        return Err(hypothesis("neither end of P has degree 2"));
    }
    let (j, k) = match i {
        0 => (1, 2),
        1 => (0, 2),
        _ => (0, 1),
    };
    let n = g.n();
    let new_path: Vec<usize> = std::iter::once(near)
        .chain(n..n + p_prime_len - 1)
        .chain(std::iter::once(far))
        .collect();
    let mut edges = g.edges().to_vec();
    edges.extend(new_path.windows(2).map(|p| (p[0], p[1])));
    let big = Graph::from_edges(n + p_prime_len - 1, edges)?;
    let mut arcs = t_arcs(w, [i, j], k);
    // Path i points at the apex, so P runs far -> near and P' near -> far.
    arcs.extend(path_arcs(&new_path, false));
    let d = Orientation::from_arcs(big.clone(), arcs)?;
    check_bounds(&d, &LabeledPair::marked(big.clone(), w.apex)?)?;
    let counts = eulerian_counts(&d)?;
    if counts.difference().abs() != 1 {
        return Err(Error::Postcondition(format!("expected |EE - EO| = 1, got {counts:?}")));
    }
    Ok(AddedPath {
        graph: big,
        orientation: d,
        new_path,
        counts,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::patterns::{detect_t_graph, t_graph, theta_graph};

    #[test]
    fn euler_lemma_on_k5_minus_edge() {
        let g = Graph::complete(5).without_edge(Graph::complete(5).edge_index(0, 1).unwrap()).unwrap();
        let d = build_euler_lemma_orientation(&g, 0, 2, 1).unwrap();
        let c = eulerian_counts(&d).unwrap();
        assert_eq!(c.even, c.odd + 1);
        assert!(build_euler_lemma_orientation(&g, 0, 1, 2).is_err());
    }

    #[test]
    fn euler_lemma_smallest() {
        // triangle z1 z2 w, x pendant at z1
        let g = Graph::from_edges(4, [(0, 1), (0, 2), (1, 2), (3, 0)]).unwrap();
        let d = build_euler_lemma_orientation(&g, 3, 0, 1).unwrap();
        assert_eq!(d.out_degree(3), 1);
    }

    #[test]
    fn theta_counts() {
        for lens in [[1, 2, 2], [2, 2, 2], [1, 2, 3], [3, 3, 4]] {
            let (g, w) = theta_graph(lens);
            for x in [w.poles.0, w.poles.1] {
                let d = build_theta_orientation(&g, &w, x).unwrap();
                assert_eq!(eulerian_counts(&d).unwrap().total(), 3);
                assert_eq!(d.in_degree(x), 2);
            }
            assert!(build_theta_orientation(&g, &w, w.paths[2][1]).is_err());
        }
    }

    #[test]
    fn t_split() {
        for lens in [[1, 2, 1], [2, 3, 2], [1, 1, 2], [3, 2, 5]] {
            let (g, w) = t_graph(lens);
            let c = eulerian_counts(&build_t_orientation(&g, &w).unwrap()).unwrap();
            assert_eq!(c.total(), 4);
            assert_eq!(c.difference().abs(), 2);
        }
        let (g, w) = t_graph([1, 1, 1]);
        assert!(build_t_orientation(&g, &w).is_err());
    }

    #[test]
    fn t_plus() {
        for lens in [[1, 1, 1], [3, 1, 1], [2, 1, 1], [2, 2, 3]] {
            let (t, w) = t_graph(lens);
            let g = t.with_vertex(0b1110).unwrap();
            let d = build_t_plus_orientation(&g, &w, t.n()).unwrap();
            let c = eulerian_counts(&d).unwrap();
            assert_eq!(c.total() % 2, 1);
            if lens == [1, 1, 1] {
                assert_eq!(c.even, c.odd + 1);
            }
        }
        let (t, w) = t_graph([1, 1, 1]);
        let g = t.with_vertex(0b0110).unwrap();
        assert!(build_t_plus_orientation(&g, &w, 4).is_err());
    }

    #[test]
    fn added_path() {
        let (g, w) = t_graph([3, 1, 1]);
        // last two edges of path 0: 4 - 5 - z1
        let r = build_added_path_orientation(&g, &w, (4, 1), 2).unwrap();
        assert_eq!(r.counts.difference().abs(), 1);
        assert!(detect_t_graph(&r.graph, 0).is_none());
        assert!(build_added_path_orientation(&g, &w, (4, 1), 1).is_err());
        let (g, w) = t_graph([1, 2, 1]);
        assert!(build_added_path_orientation(&g, &w, (0, 4), 2).is_err());
    }
}
