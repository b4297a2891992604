//! Stretching (double subdivision of an edge) and its inverse.

use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::graph::{Graph, LabeledPair};

/// An induced path `u1 v1 v2 u2` whose inner vertices have degree 2 and label 0.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct StretchedPath {
    pub u1: usize,
    pub v1: usize,
    pub v2: usize,
    pub u2: usize,
}

/// Replace edge `e = u1u2` (with `u1 < u2`) by the path `u1 n n+1 u2`; new vertices get label 0.
pub fn stretch(p: &LabeledPair, e: usize) -> Result<LabeledPair> {
    let g = &p.graph;
    let (u1, u2) = g.edge(e)?;
    let n = g.n();
    let mut edges: Vec<(usize, usize)> = g.edges().iter().copied().filter(|&uv| uv != (u1, u2)).collect();
    edges.extend([(u1, n), (n, n + 1), (n + 1, u2)]);
    let graph = Graph::from_edges(n + 2, edges)?;
    let mut labels = p.labels.clone();
    labels.extend([0, 0]);
    LabeledPair::new(graph, labels)
}

/// Every path that [`unstretch`] can contract, each listed once (`v1 < v2`).
pub fn unstretch_candidates(p: &LabeledPair) -> Vec<StretchedPath> {
    let g = &p.graph;
    let inner = |v: usize| g.degree(v) == 2 && p.labels[v] == 0;
    let mut out = Vec::new();
    for &(v1, v2) in g.edges() {
        if !inner(v1) || !inner(v2) {
            continue;
        }
        let u1 = (g.neighbors_mask(v1) & !(1 << v2)).trailing_zeros() as usize;
        let u2 = (g.neighbors_mask(v2) & !(1 << v1)).trailing_zeros() as usize;
        if u1 != u2 && !g.has_edge(u1, u2) {
            out.push(StretchedPath { u1, v1, v2, u2 });
        }
    }
    out
}

/// `(G - v1 - v2) + u1u2`, with the old-to-new vertex map (`None` for removed vertices).
pub fn unstretch(p: &LabeledPair, path: StretchedPath) -> Result<(LabeledPair, Vec<Option<usize>>)> {
    let ok = unstretch_candidates(p).contains(&path)
        || unstretch_candidates(p).contains(&StretchedPath {
            u1: path.u2,
            v1: path.v2,
            v2: path.v1,
            u2: path.u1,
        });
    if !ok {
        return Err(crate::error::Error::precondition(format!(
            "{path:?} is not an induced path with unlabeled degree-2 inner vertices"
        )));
    }
    let keep = p.graph.vertex_mask() & !(1 << path.v1) & !(1 << path.v2);
    let (reduced, map) = p.induced(keep);
    let mut old_to_new = vec![None; p.graph.n()];
    for (new, &old) in map.iter().enumerate() {
        old_to_new[old] = Some(new);
    }
    let graph = reduced
        .graph
        .with_edge(old_to_new[path.u1].unwrap(), old_to_new[path.u2].unwrap())?;
    Ok((LabeledPair::new(graph, reduced.labels)?, old_to_new))
}
