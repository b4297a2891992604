//! Counting spanning Eulerian sub-digraphs.
//!
//! Three routes: plain Gray-code enumeration of all edge subsets, a frontier
//! dynamic program over per-vertex balances, and a meet-in-the-middle signed
//! count `EE - EO` used inside the orientation search.

use rustc_hash::FxHashMap;

use crate::config::guards;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::orientation::{EulerCounts, Orientation};

/// Below this many edges [`eulerian_counts`] enumerates subsets directly.
pub const SUBSET_THRESHOLD: usize = 16;
/// Frontier slots available to the dynamic program (8 bits each in a `u128`).
pub const DP_MAX_FRONTIER: usize = 16;
const SUBSET_MAX_EDGES: usize = 30;

fn check_count_guard(m: usize) -> Result<()> {
    let limit = guards().count_max_edges;
    if m > limit {
        return Err(Error::Guard {
            what: "edges for Eulerian counting",
            value: m,
            limit,
            hint: "; use the coefficient oracle instead",
        });
    }
    Ok(())
}

/// Exact `(EE, EO)`; subset enumeration below [`SUBSET_THRESHOLD`] edges, the
/// dynamic program above.
pub fn eulerian_counts(d: &Orientation) -> Result<EulerCounts> {
    let m = d.graph().m();
    check_count_guard(m)?;
    if m < SUBSET_THRESHOLD {
        eulerian_counts_subsets(d)
    } else {
        eulerian_counts_dp(d)
    }
}

/// Reference count over all `2^m` edge subsets.
pub fn eulerian_counts_subsets(d: &Orientation) -> Result<EulerCounts> {
    let m = d.graph().m();
    if m > SUBSET_MAX_EDGES {
        return Err(Error::guard("edges for subset enumeration", m, SUBSET_MAX_EDGES));
    }
    let arcs: Vec<(usize, usize)> = d.arcs().collect();
    let mut bal = vec![0i32; d.graph().n()];
    let mut unbalanced = 0usize;
    let mut size = 0u32;
    let mut counts = EulerCounts { even: 1, odd: 0 };
    let bump = |v: usize, by: i32, bal: &mut [i32], unbalanced: &mut usize| {
        let before = bal[v];
        bal[v] += by;
        match (before == 0, bal[v] == 0) {
            (true, false) => *unbalanced += 1,
            (false, true) => *unbalanced -= 1,
            _ => {}
        }
    };
    for i in 1u64..(1u64 << m) {
        let e = i.trailing_zeros() as usize;
        let gray = i ^ (i >> 1);
        let s = if gray >> e & 1 == 1 { 1 } else { -1 };
        let (t, h) = arcs[e];
        bump(t, s, &mut bal, &mut unbalanced);
        bump(h, -s, &mut bal, &mut unbalanced);
        size = (size as i32 + s) as u32;
        if unbalanced == 0 {
            if size.is_multiple_of(2) {
                counts.even += 1;
            } else {
                counts.odd += 1;
            }
        }
    }
    Ok(counts)
}

/// Breadth-first vertex order from each component's smallest vertex.
fn bfs_positions(g: &Graph) -> Vec<usize> {
    let n = g.n();
    let mut pos = vec![usize::MAX; n];
    let mut next = 0;
    for s in 0..n {
        if pos[s] != usize::MAX {
            continue;
        }
        pos[s] = next;
        next += 1;
        let mut queue = std::collections::VecDeque::from([s]);
        while let Some(v) = queue.pop_front() {
            for w in g.neighbors(v) {
                if pos[w] == usize::MAX {
                    pos[w] = next;
                    next += 1;
                    queue.push_back(w);
                }
            }
        }
    }
    pos
}

/// Dynamic program over edges; the state is the balance vector of the
/// vertices that have seen some but not all of their edges.
pub fn eulerian_counts_dp(d: &Orientation) -> Result<EulerCounts> {
    let g = d.graph();
    check_count_guard(g.m())?;
    let n = g.n();
    let pos = bfs_positions(g);
    let mut order: Vec<usize> = (0..g.m()).collect();
    order.sort_by_key(|&e| {
        let (u, v) = g.edges()[e];
        (pos[u].max(pos[v]), pos[u].min(pos[v]))
    });
    let mut last = vec![usize::MAX; n];
    for (i, &e) in order.iter().enumerate() {
        let (u, v) = g.edges()[e];
        last[u] = i;
        last[v] = i;
    }
    const ZERO: u128 = u128::from_ne_bytes([128; 16]);
    let mut slot = vec![usize::MAX; n];
    let mut free: Vec<usize> = (0..DP_MAX_FRONTIER).rev().collect();
    let mut states: FxHashMap<u128, (u64, u64)> = FxHashMap::default();
    states.insert(ZERO, (1, 0));
    for (i, &e) in order.iter().enumerate() {
        let (t, h) = d.arc(e);
        for v in [t, h] {
            if slot[v] == usize::MAX {
                slot[v] = free.pop().ok_or(Error::Guard {
                    what: "Eulerian DP frontier width",
                    value: DP_MAX_FRONTIER + 1,
                    limit: DP_MAX_FRONTIER,
                    hint: "",
                })?;
            }
        }
        let (st, sh) = (8 * slot[t] as u32, 8 * slot[h] as u32);
        let mut next: FxHashMap<u128, (u64, u64)> =
            FxHashMap::with_capacity_and_hasher(states.len() * 2, Default::default());
        for (&key, &(ev, od)) in &states {
            let entry = next.entry(key).or_default();
            entry.0 += ev;
            entry.1 += od;
            let taken = key.wrapping_add(1 << st).wrapping_sub(1 << sh);
            let entry = next.entry(taken).or_default();
            entry.0 += od;
            entry.1 += ev;
        }
        for v in [t, h] {
            if last[v] == i {
                let s = 8 * slot[v] as u32;
                next.retain(|&k, _| (k >> s) as u8 == 128);
                free.push(slot[v]);
            }
        }
        states = next;
    }
    Ok(states.get(&ZERO).map_or(EulerCounts::default(), |&(even, odd)| EulerCounts { even, odd }))
}

/// Signed count `EE - EO` for many orientations of one graph, by meeting in
/// the middle: balance vectors of subsets of each edge half are encoded as
/// signed base-`2^k` integers, so a subset pair is Eulerian exactly when the
/// two codes sum to zero.
pub struct SignedCounter {
    /// `2^(k*u) - 2^(k*v)` for edge `(u, v)` with `u < v`.
    weights: Vec<u128>,
    split: usize,
    table: FxHashMap<u128, i64>,
    packed: bool,
    graph: Graph,
}

impl SignedCounter {
    pub fn new(g: &Graph) -> Self {
        let delta = g.max_degree().max(1);
        let k = (usize::BITS - delta.leading_zeros() + 1) as usize;
        let packed = g.n() * k <= 128;
        let weights = g
            .edges()
            .iter()
            .map(|&(u, v)| {
                if packed {
                    (1u128 << (k * u)).wrapping_sub(1u128 << (k * v))
                } else {
                    0
                }
            })
            .collect();
        SignedCounter {
            weights,
            split: g.m() / 2,
            table: FxHashMap::default(),
            packed,
            graph: g.clone(),
        }
    }

    /// `EE - EO` of the orientation given by `reversed`.
    pub fn difference(&mut self, reversed: &[bool]) -> Result<i128> {
        debug_assert_eq!(reversed.len(), self.weights.len());
        if !self.packed {
            let d = Orientation::new(self.graph.clone(), reversed.to_vec())?;
            return Ok(eulerian_counts_dp(&d)?.difference());
        }
        let w: Vec<u128> = self
            .weights
            .iter()
            .zip(reversed)
            .map(|(&w, &r)| if r { w.wrapping_neg() } else { w })
            .collect();
        let (wa, wb) = w.split_at(self.split);
        self.table.clear();
        walk_gray(wa, |key, sign| *self.table.entry(key).or_insert(0) += sign);
        let mut total = 0i128;
        let table = &self.table;
        walk_gray(wb, |key, sign| {
            if let Some(&s) = table.get(&key.wrapping_neg()) {
                total += (s * sign) as i128;
            }
        });
        Ok(total)
    }
}

/// Visit every subset of `weights` in Gray-code order with its code and `(-1)^size`.
fn walk_gray(weights: &[u128], mut visit: impl FnMut(u128, i64)) {
    let mut key = 0u128;
    let mut sign = 1i64;
    visit(key, sign);
    for i in 1u64..(1u64 << weights.len()) {
        let e = i.trailing_zeros() as usize;
        if (i ^ (i >> 1)) >> e & 1 == 1 {
            key = key.wrapping_add(weights[e]);
        } else {
            key = key.wrapping_sub(weights[e]);
        }
        sign = -sign;
        visit(key, sign);
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn consistent_cycle(n: usize) -> Orientation {
        let g = Graph::cycle(n);
        Orientation::from_arcs(g, (0..n).map(|i| (i, (i + 1) % n))).unwrap()
    }

    #[test]
    fn cycles() {
        let c4 = consistent_cycle(4);
        assert_eq!(eulerian_counts(&c4).unwrap(), EulerCounts { even: 2, odd: 0 });
        let c3 = consistent_cycle(3);
        assert_eq!(eulerian_counts(&c3).unwrap(), EulerCounts { even: 1, odd: 1 });
        assert_eq!(eulerian_counts_dp(&c3).unwrap(), EulerCounts { even: 1, odd: 1 });
        assert_eq!(SignedCounter::new(c4.graph()).difference(c4.reversed()).unwrap(), 2);
    }

    #[test]
    fn acyclic() {
        let d = Orientation::forward(Graph::complete(6));
        assert_eq!(eulerian_counts(&d).unwrap(), EulerCounts { even: 1, odd: 0 });
        assert_eq!(eulerian_counts_dp(&d).unwrap(), EulerCounts { even: 1, odd: 0 });
    }

    #[test]
    fn routes_agree_on_k5_orientations() {
        let g = Graph::complete(5);
        let mut counter = SignedCounter::new(&g);
        for bits in (0u32..1 << 10).step_by(7) {
            let rev: Vec<bool> = (0..10).map(|e| bits >> e & 1 == 1).collect();
            let d = Orientation::new(g.clone(), rev.clone()).unwrap();
            let a = eulerian_counts_subsets(&d).unwrap();
            assert_eq!(a, eulerian_counts_dp(&d).unwrap());
            assert_eq!(a.difference(), counter.difference(&rev).unwrap());
        }
    }

    #[test]
    fn guard() {
        let d = Orientation::forward(Graph::complete(9));
        assert!(eulerian_counts(&d).unwrap_err().is_guard());
    }
}
