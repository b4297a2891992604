//! Brute-force oracles shared by the integration tests. Nothing here calls
//! the library's search, canonical labelling or enumeration code.

#![allow(dead_code)]

use std::collections::BTreeSet;

use alon_tarsi::{DegreeBound, Graph};
use proptest::prelude::*;

/// Heap's algorithm; calls `visit` with every permutation of `0..n`.
pub fn for_each_permutation(n: usize, mut visit: impl FnMut(&[usize])) {
    let mut p: Vec<usize> = (0..n).collect();
    let mut c = vec![0; n];
    visit(&p);
    let mut i = 0;
    while i < n {
        if c[i] < i {
            if i % 2 == 0 {
                p.swap(0, i);
            } else {
                p.swap(c[i], i);
            }
            visit(&p);
            c[i] += 1;
            i = 0;
        } else {
            c[i] = 0;
            i += 1;
        }
    }
}

fn pair_index(n: usize, u: usize, v: usize) -> usize {
    let (a, b) = if u < v { (u, v) } else { (v, u) };
    a * n - a * (a + 1) / 2 + (b - a - 1)
}

/// Upper-triangle edge bits.
pub fn edge_code(g: &Graph) -> u64 {
    let n = g.n();
    g.edges().iter().fold(0, |acc, &(u, v)| acc | 1 << pair_index(n, u, v))
}

/// Smallest `(colours, edge code)` over all relabellings.
pub fn brute_canonical(g: &Graph, colors: &[u32]) -> (Vec<u32>, u64) {
    let n = g.n();
    let mut best: Option<(Vec<u32>, u64)> = None;
    for_each_permutation(n, |p| {
        let code = g.edges().iter().fold(0u64, |acc, &(u, v)| acc | 1 << pair_index(n, p[u], p[v]));
        let mut c = vec![0; n];
        for v in 0..n {
            c[p[v]] = colors[v];
        }
        let cand = (c, code);
        if best.as_ref().is_none_or(|b| cand < *b) {
            best = Some(cand);
        }
    });
    best.unwrap_or_default()
}

pub fn graph_from_code(n: usize, code: u64) -> Graph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if code >> pair_index(n, u, v) & 1 == 1 {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(n, edges).unwrap()
}

/// Isomorphism classes on `n` vertices by deduplicating all edge subsets.
pub fn brute_force_classes(n: usize, connected_only: bool) -> BTreeSet<u64> {
    let pairs = n * n.saturating_sub(1) / 2;
    let mut seen = BTreeSet::new();
    for code in 0..1u64 << pairs {
        let g = graph_from_code(n, code);
        if connected_only && !is_connected(&g) {
            continue;
        }
        seen.insert(brute_canonical(&g, &vec![0; n]).1);
    }
    seen
}

pub fn is_connected(g: &Graph) -> bool {
    if g.n() == 0 {
        return true;
    }
    let mut seen = vec![false; g.n()];
    let mut stack = vec![0];
    seen[0] = true;
    while let Some(v) = stack.pop() {
        for w in g.neighbors(v) {
            if !seen[w] {
                seen[w] = true;
                stack.push(w);
            }
        }
    }
    seen.into_iter().all(|s| s)
}

/// Number of graphs on `n` unlabelled vertices by Burnside's lemma on vertex pairs.
pub fn burnside_graph_count(n: usize) -> u64 {
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    let mut fixed_total: u128 = 0;
    let mut perms: u128 = 0;
    for_each_permutation(n, |p| {
        perms += 1;
        let mut done = vec![false; pairs.len()];
        let mut cycles = 0;
        for start in 0..pairs.len() {
            if done[start] {
                continue;
            }
            cycles += 1;
            let mut i = start;
            while !done[i] {
                done[i] = true;
                let (u, v) = pairs[i];
                let (a, b) = (p[u].min(p[v]), p[u].max(p[v]));
                i = pairs.iter().position(|&q| q == (a, b)).unwrap();
            }
        }
        fixed_total += 1u128 << cycles;
    });
    (fixed_total / perms) as u64
}

fn mobius(mut n: u64) -> i64 {
    let mut result = 1;
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            n /= p;
            if n.is_multiple_of(p) {
                return 0;
            }
            result = -result;
        }
        p += 1;
    }
    if n > 1 {
        -result
    } else {
        result
    }
}

/// Connected unlabelled graph counts for `1..=n_max`, from the total counts
/// by inverting the Euler transform.
pub fn connected_counts(n_max: usize) -> Vec<u64> {
    let b: Vec<i128> = (0..=n_max).map(|n| burnside_graph_count(n) as i128).collect();
    let mut c = vec![0i128; n_max + 1];
    for n in 1..=n_max {
        let s: i128 = (1..n).map(|k| c[k] * b[n - k]).sum();
        c[n] = n as i128 * b[n] - s;
    }
    (1..=n_max)
        .map(|n| {
            let s: i128 = (1..=n)
                .filter(|d| n % d == 0)
                .map(|d| mobius((n / d) as u64) as i128 * c[d])
                .sum();
            (s / n as i128) as u64
        })
        .collect()
}

/// `EE - EO` of the orientation given by `reversed`.
pub fn brute_difference(g: &Graph, reversed: u64) -> i64 {
    let (even, odd) = brute_counts(g, reversed);
    even as i64 - odd as i64
}

/// `(EE, EO)` of the orientation given by `reversed`, by checking every arc subset.
pub fn brute_counts(g: &Graph, reversed: u64) -> (u64, u64) {
    let arcs: Vec<(usize, usize)> = g
        .edges()
        .iter()
        .enumerate()
        .map(|(i, &(u, v))| if reversed >> i & 1 == 1 { (v, u) } else { (u, v) })
        .collect();
    let (mut even, mut odd) = (0, 0);
    for s in 0..1u64 << arcs.len() {
        let mut bal = vec![0i32; g.n()];
        for (i, &(t, h)) in arcs.iter().enumerate() {
            if s >> i & 1 == 1 {
                bal[t] += 1;
                bal[h] -= 1;
            }
        }
        if bal.iter().all(|&b| b == 0) {
            if s.count_ones() % 2 == 0 {
                even += 1;
            } else {
                odd += 1;
            }
        }
    }
    (even, odd)
}

/// Parse a direction bitstring into a mask.
pub fn bits_mask(bits: &str) -> u64 {
    bits.chars().enumerate().fold(0, |acc, (i, c)| acc | ((c == '1') as u64) << i)
}

/// Whether some orientation with out-degree below `f` everywhere has `EE != EO`.
pub fn brute_f_at(g: &Graph, f: &DegreeBound) -> bool {
    let m = g.m();
    (0..1u64 << m).any(|r| {
        let mut out = vec![0u32; g.n()];
        for (i, &(u, v)) in g.edges().iter().enumerate() {
            out[if r >> i & 1 == 1 { v } else { u }] += 1;
        }
        (0..g.n()).all(|v| out[v] < f[v]) && brute_difference(g, r) != 0
    })
}

/// Whether some proper colouring picks from the lists.
pub fn brute_colorable(g: &Graph, lists: &[Vec<u32>]) -> bool {
    fn rec(g: &Graph, lists: &[Vec<u32>], v: usize, col: &mut Vec<u32>) -> bool {
        if v == lists.len() {
            return true;
        }
        for &c in &lists[v] {
            if g.neighbors(v).all(|w| w >= v || col[w] != c) {
                col.push(c);
                if rec(g, lists, v + 1, col) {
                    return true;
                }
                col.pop();
            }
        }
        false
    }
    rec(g, lists, 0, &mut Vec::new())
}

/// Random graph on `n` vertices: a random spanning tree (when `connected`)
/// plus independent extra edges.
pub fn arb_graph(n: std::ops::RangeInclusive<usize>, connected: bool) -> impl Strategy<Value = Graph> {
    n.prop_flat_map(move |n| {
        let pairs = n * n.saturating_sub(1) / 2;
        (
            Just(n),
            proptest::collection::vec(any::<prop::sample::Index>(), n.saturating_sub(1)),
            proptest::collection::vec(proptest::bool::weighted(0.4), pairs),
        )
    })
    .prop_map(move |(n, parents, extra)| {
        let mut edges = BTreeSet::new();
        if connected {
            for v in 1..n {
                let p = parents[v - 1].index(v);
                edges.insert((p, v));
            }
        }
        for u in 0..n {
            for v in u + 1..n {
                if extra[pair_index(n, u, v)] {
                    edges.insert((u, v));
                }
            }
        }
        Graph::from_edges(n, edges).unwrap()
    })
}

/// A graph with a vertex index and a permutation of its vertices.
pub fn arb_permutation(n: usize) -> impl Strategy<Value = Vec<usize>> {
    Just((0..n).collect::<Vec<usize>>()).prop_shuffle()
}
