//! List colouring, choosability, paintability, and explicit bad list assignments.

mod bad_lists;
mod choose;
mod equivalence;
mod paint;

use serde::{Deserialize, Serialize};

pub use bad_lists::{bad_lists_for_d, bad_lists_for_pair, bad_lists_gallai};
pub use choose::{is_f_choosable, is_f_choosable_with};
pub use equivalence::{equivalence_check_hx, EquivalenceReport};
pub use paint::{is_f_paintable, PaintInstance};

use crate::config::guards;
use crate::error::{Error, Result};
use crate::graph::Graph;

/// Per-vertex colour lists; colours are positive integers.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct ListAssignment {
    pub lists: Vec<Vec<u32>>,
}

impl ListAssignment {
    pub fn new(mut lists: Vec<Vec<u32>>) -> Self {
        for l in &mut lists {
            l.sort_unstable();
            l.dedup();
        }
        ListAssignment { lists }
    }

    pub fn sizes(&self) -> Vec<usize> {
        self.lists.iter().map(Vec::len).collect()
    }

    pub fn max_color(&self) -> u32 {
        self.lists.iter().flatten().copied().max().unwrap_or(0)
    }
}

/// Smallest-last order: each vertex has few neighbours before it.
fn degeneracy_order(g: &Graph) -> Vec<usize> {
    let n = g.n();
    let mut alive = g.vertex_mask();
    let mut removed = Vec::with_capacity(n);
    while alive != 0 {
        let v = crate::graph::bits(alive)
            .min_by_key(|&v| ((g.neighbors_mask(v) & alive).count_ones(), v))
            .unwrap();
        removed.push(v);
        alive &= !(1 << v);
    }
    removed.reverse();
    removed
}

/// Backtracking without a size guard, lowest colour first.
pub(crate) fn find_coloring(g: &Graph, lists: &[Vec<u32>]) -> Option<Vec<u32>> {
    let order = degeneracy_order(g);
    let mut color = vec![0u32; g.n()];
    fn rec(g: &Graph, lists: &[Vec<u32>], order: &[usize], i: usize, color: &mut [u32]) -> bool {
        let Some(&v) = order.get(i) else {
            return true;
        };
        for &c in &lists[v] {
            if g.neighbors(v).all(|w| color[w] != c) {
                color[v] = c;
                if rec(g, lists, order, i + 1, color) {
                    return true;
                }
            }
        }
        color[v] = 0;
        false
    }
    let mut sorted: Vec<Vec<u32>> = lists.to_vec();
    for l in &mut sorted {
        l.sort_unstable();
        l.retain(|&c| c != 0);
    }
    rec(g, &sorted, &order, 0, &mut color).then_some(color)
}

/// A proper colouring with `color[v]` in `lists[v]`, or `None`.
pub fn exists_proper_coloring(g: &Graph, lists: &ListAssignment) -> Result<Option<Vec<u32>>> {
    let limit = guards().coloring_max_vertices;
    if g.n() > limit {
        return Err(Error::guard("vertices for list colouring", g.n(), limit));
    }
    if lists.lists.len() != g.n() {
        return Err(Error::precondition(format!(
            "{} lists for {} vertices",
            lists.lists.len(),
            g.n()
        )));
    }
    Ok(find_coloring(g, &lists.lists))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::patterns::k4_seed;

    #[test]
    fn k4_seed_lists_fail() {
        let (g, x) = k4_seed();
        let mut lists = vec![vec![1, 2, 3]; 4];
        lists[x] = vec![1, 2];
        assert_eq!(exists_proper_coloring(&g, &ListAssignment::new(lists)).unwrap(), None);
    }

    #[test]
    fn full_palette_always_works() {
        for g in [Graph::complete(6), Graph::cycle(7), Graph::complete_bipartite(3, 3)] {
            let lists = ListAssignment::new(vec![(1..=g.n() as u32).collect(); g.n()]);
            let c = exists_proper_coloring(&g, &lists).unwrap().unwrap();
            assert!(g.edges().iter().all(|&(u, v)| c[u] != c[v]));
        }
    }

    #[test]
    fn alternating_c4() {
        // Sizes 1, 2, 1, 2 with the singletons forcing both colours out of the pairs.
        let g = Graph::cycle(4);
        let lists = ListAssignment::new(vec![vec![1], vec![1, 2], vec![2], vec![1, 2]]);
        assert_eq!(exists_proper_coloring(&g, &lists).unwrap(), None);
    }

    #[test]
    fn guard() {
        let g = Graph::empty(13);
        let lists = ListAssignment::new(vec![vec![1]; 13]);
        assert!(exists_proper_coloring(&g, &lists).unwrap_err().is_guard());
    }
}
