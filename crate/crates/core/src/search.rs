//! Exhaustive search for `f`-AT orientations.
//!
//! Edges are decided in index order, direction bit 0 first, abandoning a
//! branch as soon as an out-degree bound would be exceeded. At a leaf the
//! signed Eulerian count is evaluated. `EE - EO` agrees up to sign with the
//! coefficient of `prod x_v^{d+(v)}` in the graph polynomial, so it vanishes
//! for every orientation with a given out-degree sequence or for none of them;
//! leaves whose sequence was already seen with a zero count are skipped. This
//! never changes the returned witness.

use rustc_hash::FxHashSet;
use serde::{Deserialize, Serialize};

use crate::config::guards;
use crate::error::{Error, Result};
use crate::euler::SignedCounter;
use crate::exec::Exec;
use crate::graph::{DegreeBound, Graph, LabeledPair};
use crate::orientation::Orientation;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchConfig {
    /// Skip leaves whose out-degree sequence was already evaluated.
    pub dedup_scores: bool,
    /// Number of leading edges whose choices are farmed out to workers.
    pub parallel_depth: usize,
    pub exec: Exec,
}

impl Default for SearchConfig {
    fn default() -> Self {
        SearchConfig {
            dedup_scores: true,
            parallel_depth: 0,
            exec: Exec::Parallel,
        }
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchStats {
    pub leaves: u64,
    pub evaluations: u64,
}

/// In-degrees forced by `f` exceed the number of edges.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Infeasibility {
    /// `sum_v max(d(v) - f(v) + 1, 0)`.
    pub required_in_degree: u64,
    pub edges: usize,
}

pub fn edge_count_infeasibility(g: &Graph, f: &DegreeBound) -> Option<Infeasibility> {
    let required: u64 = (0..g.n())
        .map(|v| (g.degree(v) as i64 - f[v] as i64 + 1).max(0) as u64)
        .sum();
    (required > g.m() as u64).then_some(Infeasibility {
        required_in_degree: required,
        edges: g.m(),
    })
}

fn check_search_guard(g: &Graph) -> Result<()> {
    let limit = guards().search_max_edges;
    if g.m() > limit {
        return Err(Error::guard("edges for orientation search", g.m(), limit));
    }
    Ok(())
}

/// First `f`-AT orientation in search order, or `None`.
pub fn is_f_at(g: &Graph, f: &DegreeBound) -> Result<Option<Orientation>> {
    Ok(is_f_at_with(g, f, &SearchConfig::default())?.0)
}

pub fn is_f_at_with(
    g: &Graph,
    f: &DegreeBound,
    cfg: &SearchConfig,
) -> Result<(Option<Orientation>, SearchStats)> {
    f.check_len(g)?;
    check_search_guard(g)?;
    if f.0.contains(&0) || edge_count_infeasibility(g, f).is_some() {
        return Ok((None, SearchStats::default()));
    }
    let cap: Vec<u32> = f.0.iter().map(|&x| x - 1).collect();
    let prefixes = if cfg.parallel_depth > 0 && cfg.exec.is_parallel() {
        prefixes(g, &cap, cfg.parallel_depth.min(g.m()))
    } else {
        vec![Vec::new()]
    };
    let results = cfg.exec.map(&prefixes, |prefix| {
        let mut s = Searcher::new(g, &cap, cfg.dedup_scores);
        let found = s.run(prefix);
        (found, s.stats)
    });
    let mut stats = SearchStats::default();
    let mut witness = None;
    for (found, st) in results {
        stats.leaves += st.leaves;
        stats.evaluations += st.evaluations;
        if witness.is_none() {
            if let Some(rev) = found {
                witness = Some(Orientation::new(g.clone(), rev)?);
            }
        }
    }
    Ok((witness, stats))
}

/// `(G, h)` is AT iff `G` is `(d - h)`-AT. Vertices with `h(v) >= d(v)` make this impossible.
pub fn is_pair_at(p: &LabeledPair) -> Result<Option<Orientation>> {
    is_f_at(&p.graph, &p.degree_bound())
}

pub fn is_pair_at_with(p: &LabeledPair, cfg: &SearchConfig) -> Result<(Option<Orientation>, SearchStats)> {
    is_f_at_with(&p.graph, &p.degree_bound(), cfg)
}

/// Direction prefixes of length `depth` that respect the caps, in search order.
fn prefixes(g: &Graph, cap: &[u32], depth: usize) -> Vec<Vec<bool>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(depth);
    let mut outdeg = vec![0u32; g.n()];
    fn rec(
        g: &Graph,
        cap: &[u32],
        depth: usize,
        cur: &mut Vec<bool>,
        outdeg: &mut [u32],
        out: &mut Vec<Vec<bool>>,
    ) {
        if cur.len() == depth {
            out.push(cur.clone());
            return;
        }
        let (u, v) = g.edges()[cur.len()];
        for (rev, tail) in [(false, u), (true, v)] {
            if outdeg[tail] < cap[tail] {
                outdeg[tail] += 1;
                cur.push(rev);
                rec(g, cap, depth, cur, outdeg, out);
                cur.pop();
                outdeg[tail] -= 1;
            }
        }
    }
    rec(g, cap, depth, &mut cur, &mut outdeg, &mut out);
    out
}

struct Searcher<'a> {
    g: &'a Graph,
    cap: &'a [u32],
    outdeg: Vec<u32>,
    reversed: Vec<bool>,
    counter: SignedCounter,
    score_bits: Option<u32>,
    score: u128,
    seen: FxHashSet<u128>,
    stats: SearchStats,
}

impl<'a> Searcher<'a> {
    fn new(g: &'a Graph, cap: &'a [u32], dedup: bool) -> Self {
        let top = cap.iter().copied().max().unwrap_or(0).max(1);
        let bits = u32::BITS - top.leading_zeros();
        let score_bits = (dedup && g.n() as u32 * bits <= 128).then_some(bits);
        Searcher {
            g,
            cap,
            outdeg: vec![0; g.n()],
            reversed: Vec::with_capacity(g.m()),
            counter: SignedCounter::new(g),
            score_bits,
            score: 0,
            seen: FxHashSet::default(),
            stats: SearchStats::default(),
        }
    }

    fn push(&mut self, rev: bool) -> bool {
        let (u, v) = self.g.edges()[self.reversed.len()];
        let tail = if rev { v } else { u };
        if self.outdeg[tail] >= self.cap[tail] {
            return false;
        }
        self.outdeg[tail] += 1;
        if let Some(b) = self.score_bits {
            self.score += 1u128 << (b as usize * tail);
        }
        self.reversed.push(rev);
        true
    }

    fn pop(&mut self) {
        let e = self.reversed.len() - 1;
        let rev = self.reversed.pop().unwrap();
        let (u, v) = self.g.edges()[e];
        let tail = if rev { v } else { u };
        self.outdeg[tail] -= 1;
        if let Some(b) = self.score_bits {
            self.score -= 1u128 << (b as usize * tail);
        }
    }

    fn run(&mut self, prefix: &[bool]) -> Option<Vec<bool>> {
        for &rev in prefix {
            let ok = self.push(rev);
            debug_assert!(ok, "prefixes respect the caps");
        }
        if self.dfs() {
            Some(self.reversed.clone())
        } else {
            None
        }
    }

    fn dfs(&mut self) -> bool {
        if self.reversed.len() == self.g.m() {
            return self.leaf();
        }
        for rev in [false, true] {
            if self.push(rev) {
                if self.dfs() {
                    return true;
                }
                self.pop();
            }
        }
        false
    }

    fn leaf(&mut self) -> bool {
        self.stats.leaves += 1;
        if self.score_bits.is_some() && self.seen.contains(&self.score) {
            return false;
        }
        self.stats.evaluations += 1;
        let diff = self
            .counter
            .difference(&self.reversed)
            .expect("orientation length matches graph");
        if diff != 0 {
            return true;
        }
        if self.score_bits.is_some() {
            self.seen.insert(self.score);
        }
        false
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::euler::eulerian_counts;
    use crate::patterns::{moser_spindle, paintable_not_at, subdivided_seed, theta_graph};

    fn verify(g: &Graph, f: &DegreeBound, d: &Orientation) {
        assert!(d.respects(f));
        assert!(eulerian_counts(d).unwrap().is_at());
        assert_eq!(d.graph(), g);
    }

    #[test]
    fn theta_pole_is_at() {
        let (g, w) = theta_graph([1, 2, 2]);
        let p = LabeledPair::marked(g.clone(), w.poles.0).unwrap();
        let d = is_pair_at(&p).unwrap().unwrap();
        verify(&g, &p.degree_bound(), &d);
    }

    #[test]
    fn non_at_examples() {
        let k4 = LabeledPair::marked(Graph::complete(4), 0).unwrap();
        assert!(is_pair_at(&k4).unwrap().is_none());
        let (g, x) = moser_spindle();
        assert!(is_pair_at(&LabeledPair::marked(g, x).unwrap()).unwrap().is_none());
        let (g, x) = subdivided_seed();
        assert!(is_pair_at(&LabeledPair::marked(g, x).unwrap()).unwrap().is_none());
    }

    #[test]
    fn k23_edge_count() {
        let (g, x, y) = paintable_not_at();
        let p = LabeledPair::two_marked(g.clone(), x, y).unwrap();
        let inf = edge_count_infeasibility(&g, &p.degree_bound()).unwrap();
        assert_eq!((inf.required_in_degree, inf.edges), (7, 6));
        assert!(is_pair_at(&p).unwrap().is_none());
    }

    #[test]
    fn c4_degree_at() {
        let g = Graph::cycle(4);
        let d = is_pair_at(&LabeledPair::zero(g.clone())).unwrap().unwrap();
        verify(&g, &DegreeBound::degrees(&g), &d);
    }

    #[test]
    fn dedup_and_fanout_do_not_change_witness() {
        let g = Graph::complete(5).without_edge(0).unwrap();
        let f = DegreeBound::degrees(&g);
        let plain = SearchConfig {
            dedup_scores: false,
            parallel_depth: 0,
            exec: Exec::Sequential,
        };
        let fanned = SearchConfig {
            dedup_scores: true,
            parallel_depth: 4,
            exec: Exec::Parallel,
        };
        let a = is_f_at_with(&g, &f, &plain).unwrap().0;
        let b = is_f_at_with(&g, &f, &fanned).unwrap().0;
        let c = is_f_at(&g, &f).unwrap();
        assert!(a.is_some());
        assert_eq!(a, b);
        assert_eq!(a, c);
    }

    #[test]
    fn zero_bound_and_guard() {
        let g = Graph::empty(1);
        assert!(is_f_at(&g, &DegreeBound(vec![0])).unwrap().is_none());
        assert!(is_f_at(&g, &DegreeBound(vec![1])).unwrap().is_some());
        assert!(is_f_at(&Graph::complete(8), &DegreeBound::constant(8, 8))
            .unwrap_err()
            .is_guard());
        assert!(is_f_at(&g, &DegreeBound(vec![1, 1])).is_err());
    }
}
