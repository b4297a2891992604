//! Constructive AT orientations for pairs the classifier accepts.
//!
//! Each AT pair is certified by small induced subgraphs with an explicit
//! orientation (an even cycle or θ-graph for degree-AT parts; θ, mixed-parity
//! T, twin, T-plus or added-path configurations for the marked block). The
//! rest of the graph is oriented away from those subgraphs in breadth-first
//! layers, and lobes at a cut vertex are glued. The result is recounted.

use std::collections::VecDeque;

use serde::{Deserialize, Serialize};

use super::{classify_connected, classify_two_connected};
use crate::blocks::{block_kind, blocks, is_gallai_forest, lobes, Anchor};
use crate::builders::{
    build_added_path_orientation, build_euler_lemma_orientation, build_t_orientation,
    build_t_plus_orientation, build_theta_orientation,
};
use crate::cert::verify_orientation;
use crate::error::{Error, Result};
use crate::graph::{bits, Graph, LabeledPair};
use crate::orientation::{EulerCounts, Orientation};
use crate::patterns::{detect_t_graph, detect_theta, TGraphWitness};
use crate::search::is_pair_at;
use crate::stretch::{stretch, unstretch, unstretch_candidates};
use crate::transfer::lift_through_stretch;

/// Blocks larger than this skip the induced-subgraph scan.
const SUBSET_SCAN_MAX: usize = 16;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum WitnessMethod {
    EvenCycle,
    DegreeTheta,
    Theta,
    TMixedParity,
    Twin,
    TPlus,
    AddedPath,
    /// Orientation of a contracted block carried back through a stretch.
    StretchLift,
    /// Exhaustive orientation search.
    Search,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WitnessPart {
    pub method: WitnessMethod,
    /// Vertices of the induced subgraph in the input graph.
    pub vertices: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AtWitness {
    pub parts: Vec<WitnessPart>,
    /// Serialized as the reversal bitstring over the graph's edge list.
    #[serde(serialize_with = "as_bitstring")]
    pub orientation: Orientation,
    pub counts: EulerCounts,
}

impl AtWitness {
    pub fn uses_search(&self) -> bool {
        self.parts.iter().any(|p| p.method == WitnessMethod::Search)
    }
}

fn as_bitstring<S: serde::Serializer>(d: &Orientation, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&d.bitstring())
}

type Arcs = Vec<(usize, usize)>;

struct Found {
    parts: Vec<WitnessPart>,
    arcs: Arcs,
}

impl Found {
    fn mapped(self, map: &[usize]) -> Found {
        Found {
            parts: self
                .parts
                .into_iter()
                .map(|p| WitnessPart {
                    method: p.method,
                    vertices: p.vertices.into_iter().map(|v| map[v]).collect(),
                })
                .collect(),
            arcs: self.arcs.into_iter().map(|(a, b)| (map[a], map[b])).collect(),
        }
    }
}

/// Induced subgraph `H` and an AT orientation of `(G, h_x)` built from it.
pub fn find_at_witness_subgraph(p: &LabeledPair) -> Result<AtWitness> {
    let x = p.single_mark()?;
    let c = classify_connected(p)?;
    if !c.at {
        return Err(Error::precondition(format!("pair is not AT ({:?})", c.case)));
    }
    let found = marked_witness(&p.graph, x)?;
    let orientation = Orientation::from_arcs(p.graph.clone(), found.arcs)?;
    let counts = verify_orientation(&orientation, &p.degree_bound())?;
    if !counts.is_at() {
        return Err(Error::Postcondition(format!("witness orientation has {counts:?}")));
    }
    Ok(AtWitness {
        parts: found.parts,
        orientation,
        counts,
    })
}

/// Arcs for every edge of `g` outside `core`, pointing away from `core` in
/// breadth-first layers (ties by vertex index). `g` must be connected.
fn orient_away(g: &Graph, core: u64) -> Arcs {
    let mut dist = vec![usize::MAX; g.n()];
    let mut queue: VecDeque<usize> = bits(core).collect();
    for v in bits(core) {
        dist[v] = 0;
    }
    while let Some(v) = queue.pop_front() {
        for w in g.neighbors(v) {
            if dist[w] == usize::MAX {
                dist[w] = dist[v] + 1;
                queue.push_back(w);
            }
        }
    }
    g.edges()
        .iter()
        .filter(|&&(u, v)| core >> u & 1 == 0 || core >> v & 1 == 0)
        .map(|&(u, v)| if (dist[u], u) < (dist[v], v) { (u, v) } else { (v, u) })
        .collect()
}

/// Place a witness found on the induced subgraph `h_mask` of `g` and orient
/// the rest of `g` away from it.
fn extend(g: &Graph, h_mask: u64, inner: Found) -> Found {
    let mut arcs = inner.arcs;
    arcs.extend(orient_away(g, h_mask));
    Found {
        parts: inner.parts,
        arcs,
    }
}

fn marked_witness(g: &Graph, x: usize) -> Result<Found> {
    let dec = blocks(g);
    if dec.is_cut_vertex(x) {
        return cut_vertex_witness(g, x);
    }
    let (rest, map) = g.without_vertex(x);
    if !is_gallai_forest(&rest) {
        // Orient G - x with a degree-AT witness and every x-edge into x.
        let mut inner = degree_witness(&rest)?.mapped(&map);
        inner.arcs.extend(g.neighbors(x).map(|v| (v, x)));
        return Ok(inner);
    }
    let bi = dec.blocks_containing(x).next().expect("x lies in a block");
    let b = dec.blocks[bi].vertices;
    let (bg, bmap) = g.induced(b);
    let lx = bmap.iter().position(|&v| v == x).expect("x in block");
    let inner = block_witness(&bg, lx)?.mapped(&bmap);
    Ok(extend(g, b, inner))
}

/// Glue lobe orientations at the cut vertex `x`: either one lobe that is AT
/// with `x` marked, or two lobes that are degree-AT; the rest acyclic.
fn cut_vertex_witness(g: &Graph, x: usize) -> Result<Found> {
    let ls = lobes(g, Anchor::Vertex(x))?;
    let mut marked = None;
    let mut degree: Vec<(u64, Found)> = Vec::new();
    for &l in &ls {
        let (lg, lmap) = g.induced(l);
        let lx = lmap.iter().position(|&v| v == x).expect("x in lobe");
        if classify_connected(&LabeledPair::marked(lg.clone(), lx)?)?.at {
            marked = Some((l, marked_witness(&lg, lx)?.mapped(&lmap)));
            break;
        }
        if degree.len() < 2 && !is_gallai_forest(&lg) {
            degree.push((l, degree_witness(&lg)?.mapped(&lmap)));
        }
    }
    let chosen = match marked {
        Some(m) => vec![m],
        None if degree.len() == 2 => degree,
        None => return Err(Error::Postcondition("no lobe combination supports an AT orientation".into())),
    };
    let mut parts = Vec::new();
    let mut arcs = Vec::new();
    let used: u64 = chosen.iter().fold(0, |acc, (l, _)| acc | l);
    for (_, f) in chosen {
        parts.extend(f.parts);
        arcs.extend(f.arcs);
    }
    for &l in &ls {
        if used & l & !(1 << x) == 0 {
            let (lg, lmap) = g.induced(l);
            let lx = lmap.iter().position(|&v| v == x).expect("x in lobe");
            arcs.extend(orient_away(&lg, 1 << lx).into_iter().map(|(a, b)| (lmap[a], lmap[b])));
        }
    }
    Ok(Found { parts, arcs })
}

/// Degree-AT orientation of a connected graph that is not a Gallai tree:
/// an induced even cycle or θ-graph inside a non-Gallai block, extended outward.
fn degree_witness(g: &Graph) -> Result<Found> {
    let dec = blocks(g);
    let b = dec
        .blocks
        .iter()
        .find(|b| !block_kind(g, b.vertices).is_gallai())
        .ok_or_else(|| Error::precondition("graph is a Gallai tree"))?
        .vertices;
    let (h_mask, inner) = degree_core(g, b)?;
    Ok(extend(g, h_mask, inner))
}

fn subsets_by_size(pool: &[usize], required: u64, mut visit: impl FnMut(u64) -> bool) -> bool {
    for k in 0..=pool.len() {
        let mut idx: Vec<usize> = (0..k).collect();
        loop {
            let mask = idx.iter().fold(required, |acc, &i| acc | 1 << pool[i]);
            if visit(mask) {
                return true;
            }
            // Next k-combination in lexicographic order.
            let Some(i) = (0..k).rev().find(|&i| idx[i] != i + pool.len() - k) else {
                break;
            };
            idx[i] += 1;
            for j in i + 1..k {
                idx[j] = idx[j - 1] + 1;
            }
        }
    }
    false
}

fn degree_core(g: &Graph, b: u64) -> Result<(u64, Found)> {
    let pool: Vec<usize> = bits(b).collect();
    let mut out = None;
    if pool.len() <= SUBSET_SCAN_MAX {
        subsets_by_size(&pool, 0, |mask| {
            if mask.count_ones() < 4 {
                return false;
            }
            let (h, map) = g.induced(mask);
            let found = if h.is_cycle() && h.n() % 2 == 0 {
                let mut order = vec![0usize];
                let mut prev = usize::MAX;
                while order.len() < h.n() {
                    let cur = *order.last().unwrap();
                    let next = h.neighbors(cur).find(|&w| w != prev && !order.contains(&w)).unwrap();
                    prev = cur;
                    order.push(next);
                }
                let arcs = (0..h.n()).map(|i| (order[i], order[(i + 1) % h.n()])).collect();
                Some((WitnessMethod::EvenCycle, arcs))
            } else if let Some(w) = detect_theta(&h) {
                build_theta_orientation(&h, &w, w.poles.0)
                    .ok()
                    .map(|d| (WitnessMethod::DegreeTheta, d.arcs().collect()))
            } else {
                None
            };
            if let Some((method, arcs)) = found {
                let f = Found {
                    parts: vec![WitnessPart {
                        method,
                        vertices: (0..h.n()).collect(),
                    }],
                    arcs,
                };
                out = Some((mask, f.mapped(&map)));
                return true;
            }
            false
        });
    }
    if let Some(o) = out {
        return Ok(o);
    }
    let (h, map) = g.induced(b);
    let d = is_pair_at(&LabeledPair::zero(h.clone()))?
        .ok_or_else(|| Error::Postcondition("non-Gallai block is not degree-AT".into()))?;
    let f = Found {
        parts: vec![WitnessPart {
            method: WitnessMethod::Search,
            vertices: (0..h.n()).collect(),
        }],
        arcs: d.arcs().collect(),
    };
    Ok((b, f.mapped(&map)))
}

/// AT orientation of a 2-connected `(B, h_x)` with `d(x) >= 3` that is neither
/// complete nor exceptional.
fn block_witness(b: &Graph, x: usize) -> Result<Found> {
    let pool: Vec<usize> = (0..b.n()).filter(|&v| v != x).collect();
    let mut out = None;
    if b.n() <= SUBSET_SCAN_MAX {
        subsets_by_size(&pool, 1 << x, |mask| {
            if mask.count_ones() < 4 || (b.neighbors_mask(x) & mask).count_ones() < 2 {
                return false;
            }
            let (h, map) = b.induced(mask);
            if !h.is_connected() {
                return false;
            }
            let hx = map.iter().position(|&v| v == x).unwrap();
            if let Some((method, arcs)) = match_pattern(&h, hx) {
                let f = Found {
                    parts: vec![WitnessPart {
                        method,
                        vertices: (0..h.n()).collect(),
                    }],
                    arcs,
                };
                out = Some(extend(b, mask, f.mapped(&map)));
                return true;
            }
            false
        });
    }
    if let Some(f) = out {
        return Ok(f);
    }
    if let Some(f) = stretch_lift(b, x)? {
        return Ok(f);
    }
    let d = is_pair_at(&LabeledPair::marked(b.clone(), x)?)?
        .ok_or_else(|| Error::Postcondition("block is not AT with x marked".into()))?;
    Ok(Found {
        parts: vec![WitnessPart {
            method: WitnessMethod::Search,
            vertices: (0..b.n()).collect(),
        }],
        arcs: d.arcs().collect(),
    })
}

/// Recognise one of the basic AT configurations on all of `h` with `x` marked.
fn match_pattern(h: &Graph, x: usize) -> Option<(WitnessMethod, Arcs)> {
    let dx = h.degree(x);
    if let Some(w) = detect_theta(h) {
        if w.poles.0 == x || w.poles.1 == x {
            let d = build_theta_orientation(h, &w, x).ok()?;
            return Some((WitnessMethod::Theta, d.arcs().collect()));
        }
    }
    if let Some(w) = detect_t_graph(h, x) {
        let l = w.path_lengths;
        if !(l[0] % 2 == l[1] % 2 && l[1] % 2 == l[2] % 2) {
            let d = build_t_orientation(h, &w).ok()?;
            return Some((WitnessMethod::TMixedParity, d.arcs().collect()));
        }
    }
    if dx >= 3 {
        if let Some(arcs) = twin_pattern(h, x) {
            return Some((WitnessMethod::Twin, arcs));
        }
    }
    for u in (0..h.n()).filter(|&u| u != x && !h.has_edge(u, x)) {
        let (t, map) = h.without_vertex(u);
        let tx = map.iter().position(|&v| v == x).unwrap();
        if let Some(w) = detect_t_graph(&t, tx) {
            let w = map_t_witness(&w, &map);
            if let Ok(d) = build_t_plus_orientation(h, &w, u) {
                return Some((WitnessMethod::TPlus, d.arcs().collect()));
            }
        }
    }
    added_path_pattern(h, x).map(|arcs| (WitnessMethod::AddedPath, arcs))
}

fn map_t_witness(w: &TGraphWitness, map: &[usize]) -> TGraphWitness {
    let mut w = w.clone();
    w.apex = map[w.apex];
    w.triangle = w.triangle.map(|v| map[v]);
    for p in w.paths.iter_mut() {
        for v in p.iter_mut() {
            *v = map[*v];
        }
    }
    w
}

/// `x` adjacent to `z1` but not its closed twin `z2` in the connected `h - x`.
fn twin_pattern(h: &Graph, x: usize) -> Option<Arcs> {
    let rest = h.vertex_mask() & !(1 << x);
    if !h.is_connected_within(rest) {
        return None;
    }
    let closed = |v: usize| (h.neighbors_mask(v) | 1 << v) & rest;
    for z1 in h.neighbors(x) {
        for z2 in bits(rest & !h.neighbors_mask(x)) {
            if closed(z1) == closed(z2) {
                let d = build_euler_lemma_orientation(h, x, z1, z2).ok()?;
                return Some(d.arcs().collect());
            }
        }
    }
    None
}

/// A same-parity T-graph plus a path of new degree-2 vertices joining two
/// vertices of one apex path.
fn added_path_pattern(h: &Graph, x: usize) -> Option<Arcs> {
    let inner = |v: usize| v != x && h.degree(v) == 2;
    for start in (0..h.n()).filter(|&v| inner(v)) {
        // Grow the maximal chain of inner vertices through `start`.
        let mut chain = vec![start];
        let mut ends = [usize::MAX; 2];
        for (side, first) in h.neighbors(start).enumerate().take(2) {
            let (mut prev, mut cur) = (start, first);
            let mut seg = Vec::new();
            while inner(cur) && cur != start {
                seg.push(cur);
                let next = (h.neighbors_mask(cur) & !(1 << prev)).trailing_zeros() as usize;
                prev = cur;
                cur = next;
            }
            if cur == start {
                return None;
            }
            ends[side] = cur;
            if side == 0 {
                seg.reverse();
                seg.extend(chain);
                chain = seg;
            } else {
                chain.extend(seg);
            }
        }
        if chain[0] != start && chain.iter().any(|&v| v < start) {
            continue;
        }
        let [a, b] = ends;
        if a == b {
            continue;
        }
        let keep = h.vertex_mask() & !chain.iter().fold(0u64, |acc, &v| acc | 1 << v);
        let (t, map) = h.induced(keep);
        let tx = map.iter().position(|&v| v == x)?;
        let Some(w) = detect_t_graph(&t, tx) else {
            continue;
        };
        let (la, lb) = (
            map.iter().position(|&v| v == a).unwrap(),
            map.iter().position(|&v| v == b).unwrap(),
        );
        let Ok(ap) = build_added_path_orientation(&t, &w, (la, lb), chain.len() + 1) else {
            continue;
        };
        // `new_path` runs near -> far through fresh vertices; pair them with the chain.
        let near = map[ap.new_path[0]];
        let ordered: Vec<usize> = if near == a { chain.clone() } else { chain.iter().rev().copied().collect() };
        let mut big_to_h: Vec<usize> = map.clone();
        big_to_h.extend(ordered);
        return Some(ap.orientation.arcs().map(|(u, v)| (big_to_h[u], big_to_h[v])).collect());
    }
    None
}

/// Contract a stretched path, solve the smaller block, and carry the
/// orientation back through the stretch.
fn stretch_lift(b: &Graph, x: usize) -> Result<Option<Found>> {
    let p = LabeledPair::marked(b.clone(), x)?;
    for path in unstretch_candidates(&p) {
        let (q, old_to_new) = unstretch(&p, path)?;
        if !classify_two_connected(&q)?.at {
            continue;
        }
        let qx = old_to_new[x].expect("x survives");
        let inner = block_witness(&q.graph, qx)?;
        let d = Orientation::from_arcs(q.graph.clone(), inner.arcs)?;
        let (nu1, nu2) = (old_to_new[path.u1].unwrap(), old_to_new[path.u2].unwrap());
        let e = q.graph.edge_index(nu1, nu2).expect("contracted edge");
        let stretched = stretch(&q, e)?;
        let lifted = lift_through_stretch(&d, e, &stretched)?;
        // Stretched vertex `n` sits next to the smaller end of the contracted edge.
        let n = q.graph.n();
        let (first, second) = if nu1 < nu2 { (path.v1, path.v2) } else { (path.v2, path.v1) };
        let mut to_b = vec![usize::MAX; n + 2];
        for (old, new) in old_to_new.iter().enumerate() {
            if let Some(new) = new {
                to_b[*new] = old;
            }
        }
        to_b[n] = first;
        to_b[n + 1] = second;
        let mut parts: Vec<WitnessPart> = inner
            .parts
            .into_iter()
            .map(|p| WitnessPart {
                method: p.method,
                vertices: p.vertices.into_iter().map(|v| to_b[v]).collect(),
            })
            .collect();
        parts.push(WitnessPart {
            method: WitnessMethod::StretchLift,
            vertices: vec![path.u1, path.v1, path.v2, path.u2],
        });
        return Ok(Some(Found {
            parts,
            arcs: lifted.arcs().map(|(u, v)| (to_b[u], to_b[v])).collect(),
        }));
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::patterns::t_graph;

    fn witness(g: Graph, x: usize) -> AtWitness {
        find_at_witness_subgraph(&LabeledPair::marked(g, x).unwrap()).unwrap()
    }

    #[test]
    fn k4_minus_edge_theta() {
        let k4 = Graph::complete(4);
        let g = k4.without_edge(k4.edge_index(1, 2).unwrap()).unwrap();
        let w = witness(g, 0);
        assert_eq!(w.parts[0].method, WitnessMethod::Theta);
        assert_eq!(w.parts[0].vertices, vec![0, 1, 2, 3]);
    }

    #[test]
    fn subdivided_k4_mixed_parity() {
        let (g, _) = t_graph([2, 2, 1]);
        let w = witness(g, 0);
        assert_eq!(w.parts[0].method, WitnessMethod::TMixedParity);
        assert_eq!(w.counts.difference().abs(), 2);
    }

    #[test]
    fn k5_minus_edge_twin() {
        let k5 = Graph::complete(5);
        let g = k5.without_edge(k5.edge_index(0, 1).unwrap()).unwrap();
        let w = witness(g, 0);
        assert_eq!(w.parts[0].method, WitnessMethod::Twin);
        assert_eq!(w.counts.even, w.counts.odd + 1);
    }

    #[test]
    fn rejects_non_at() {
        let p = LabeledPair::marked(Graph::complete(4), 0).unwrap();
        assert!(find_at_witness_subgraph(&p).is_err());
    }

    #[test]
    fn lobes_and_degree_two() {
        // Two C4 lobes at x = 0.
        let g = Graph::from_edges(7, [(0, 1), (1, 2), (2, 3), (3, 0), (0, 4), (4, 5), (5, 6), (6, 0)]).unwrap();
        let w = witness(g, 0);
        assert_eq!(w.parts.len(), 2);
        // x of degree 2 next to a C4.
        let g = Graph::from_edges(5, [(0, 1), (1, 2), (2, 3), (3, 0), (4, 0), (4, 2)]).unwrap();
        let w = witness(g, 4);
        assert_eq!(w.parts[0].method, WitnessMethod::EvenCycle);
    }
}
