//! Exhaustive choosability.
//!
//! A list assignment is determined up to renaming of colours by the multiset
//! of its colour classes (for each colour, the set of vertices whose list
//! contains it). Classes are generated in a canonical order: by lowest vertex,
//! then by mask. Lists only grow along a branch, so once every vertex has a
//! colour and the partial lists are colourable the whole branch is skipped.
//! Vertices with `f(v) > d(v)` are removed first; they can always be coloured last.

use crate::config::guards;
use crate::error::{Error, Result};
use crate::exec::Exec;
use crate::graph::{bits, DegreeBound, Graph};

use super::ListAssignment;

/// A list assignment with `|L(v)| = f(v)` admitting no proper colouring, or `None`.
pub fn is_f_choosable(g: &Graph, f: &DegreeBound) -> Result<Option<ListAssignment>> {
    is_f_choosable_with(g, f, Exec::default())
}

pub fn is_f_choosable_with(g: &Graph, f: &DegreeBound, exec: Exec) -> Result<Option<ListAssignment>> {
    f.check_len(g)?;
    let gd = guards();
    if g.n() > gd.choose_max_vertices {
        return Err(Error::guard("vertices for choosability", g.n(), gd.choose_max_vertices));
    }
    let total = f.total() as usize;
    if total > gd.choose_max_palette {
        return Err(Error::guard("total list size for choosability", total, gd.choose_max_palette));
    }
    let n = g.n();
    if let Some(v) = (0..n).find(|&v| f[v] == 0) {
        let mut lists = filler(g, f, 0);
        lists[v].clear();
        return Ok(Some(ListAssignment::new(lists)));
    }
    let mut alive = g.vertex_mask();
    loop {
        let drop = bits(alive).find(|&v| f[v] as usize > (g.neighbors_mask(v) & alive).count_ones() as usize);
        match drop {
            Some(v) => alive &= !(1 << v),
            None => break,
        }
    }
    if alive == 0 {
        return Ok(None);
    }
    let (core, map) = g.induced(alive);
    let cf: Vec<u32> = map.iter().map(|&v| f[v]).collect();
    let classes = Search::new(&core, &cf).run(exec);
    Ok(classes.map(|classes| {
        let mut lists = vec![Vec::new(); n];
        for (i, &c) in classes.iter().enumerate() {
            for v in bits(c) {
                lists[map[v]].push(i as u32 + 1);
            }
        }
        let extra = filler(g, f, classes.len() as u32);
        for v in 0..n {
            if alive >> v & 1 == 0 {
                lists[v] = extra[v].clone();
            }
        }
        ListAssignment::new(lists)
    }))
}

/// Disjoint fresh lists of the demanded sizes, starting after colour `base`.
fn filler(g: &Graph, f: &DegreeBound, base: u32) -> Vec<Vec<u32>> {
    let mut next = base + 1;
    (0..g.n())
        .map(|v| {
            let l: Vec<u32> = (next..next + f[v]).collect();
            next += f[v];
            l
        })
        .collect()
}

struct Search<'a> {
    g: &'a Graph,
    f: &'a [u32],
}

impl<'a> Search<'a> {
    fn new(g: &'a Graph, f: &'a [u32]) -> Self {
        Search { g, f }
    }

    fn run(&self, exec: Exec) -> Option<Vec<u64>> {
        let residual: Vec<u32> = self.f.to_vec();
        let firsts = self.candidates(&residual, None);
        exec.find_map_first(&firsts, |&c| {
            let mut st = State {
                residual: residual.clone(),
                lists: vec![0; self.g.n()],
                classes: Vec::new(),
            };
            st.push(c);
            self.dfs(&mut st).then(|| st.classes.clone())
        })
    }

    /// Classes allowed next: contain the first unfilled vertex, stay inside
    /// the unfilled set, and do not precede `prev` among classes with the same
    /// lowest vertex.
    fn candidates(&self, residual: &[u32], prev: Option<u64>) -> Vec<u64> {
        let open = (0..residual.len()).fold(0u64, |acc, v| if residual[v] > 0 { acc | 1 << v } else { acc });
        if open == 0 {
            return Vec::new();
        }
        let v = open.trailing_zeros();
        let rest = open & !(1 << v);
        let floor = prev.filter(|p| p.trailing_zeros() == v).unwrap_or(0);
        let mut out = Vec::new();
        let mut sub = rest;
        loop {
            let c = sub | 1 << v;
            if c >= floor {
                out.push(c);
            }
            if sub == 0 {
                break;
            }
            sub = (sub - 1) & rest;
        }
        out.sort_unstable();
        out
    }

    /// True if a bad completion exists below this node.
    fn dfs(&self, st: &mut State) -> bool {
        if st.lists.iter().all(|&l| l != 0) && colorable(self.g, &st.lists) {
            return false;
        }
        if st.residual.iter().all(|&r| r == 0) {
            return true;
        }
        for c in self.candidates(&st.residual, st.classes.last().copied()) {
            st.push(c);
            if self.dfs(st) {
                return true;
            }
            st.pop();
        }
        false
    }
}

struct State {
    residual: Vec<u32>,
    /// Bit `i` of `lists[v]`: class `i` contains `v`.
    lists: Vec<u32>,
    classes: Vec<u64>,
}

impl State {
    fn push(&mut self, c: u64) {
        let i = self.classes.len();
        for v in bits(c) {
            self.residual[v] -= 1;
            self.lists[v] |= 1 << i;
        }
        self.classes.push(c);
    }

    fn pop(&mut self) {
        let c = self.classes.pop().unwrap();
        let i = self.classes.len();
        for v in bits(c) {
            self.residual[v] += 1;
            self.lists[v] &= !(1 << i);
        }
    }
}

fn colorable(g: &Graph, lists: &[u32]) -> bool {
    fn rec(g: &Graph, lists: &[u32], v: usize, used: &mut [u32]) -> bool {
        if v == lists.len() {
            return true;
        }
        let blocked = bits(g.neighbors_mask(v) & ((1u64 << v) - 1)).fold(0u32, |acc, w| acc | used[w]);
        let mut avail = lists[v] & !blocked;
        while avail != 0 {
            let c = avail & avail.wrapping_neg();
            used[v] = c;
            if rec(g, lists, v + 1, used) {
                return true;
            }
            avail &= !c;
        }
        false
    }
    rec(g, lists, 0, &mut vec![0; lists.len()])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::color::find_coloring;
    use crate::graph::LabeledPair;
    use crate::patterns::choosable_not_paintable;

    fn assert_bad(g: &Graph, f: &DegreeBound, l: &ListAssignment) {
        assert_eq!(l.sizes(), f.0.iter().map(|&x| x as usize).collect::<Vec<_>>());
        assert!(find_coloring(g, &l.lists).is_none());
    }

    #[test]
    fn k4_three() {
        let g = Graph::complete(4);
        let f = DegreeBound::constant(4, 3);
        let l = is_f_choosable(&g, &f).unwrap().unwrap();
        assert_bad(&g, &f, &l);
        assert!(is_f_choosable(&g, &DegreeBound::constant(4, 4)).unwrap().is_none());
    }

    #[test]
    fn p3_degree() {
        let g = Graph::path(3);
        let f = DegreeBound::degrees(&g);
        assert_bad(&g, &f, &is_f_choosable(&g, &f).unwrap().unwrap());
    }

    #[test]
    fn c4_and_even_cycles_are_two_choosable() {
        assert!(is_f_choosable(&Graph::cycle(4), &DegreeBound::constant(4, 2)).unwrap().is_none());
        assert!(is_f_choosable(&Graph::cycle(6), &DegreeBound::constant(6, 2)).unwrap().is_none());
        let c5 = Graph::cycle(5);
        let f = DegreeBound::constant(5, 2);
        assert_bad(&c5, &f, &is_f_choosable(&c5, &f).unwrap().unwrap());
    }

    #[test]
    fn k33_is_not_two_choosable() {
        let g = Graph::complete_bipartite(3, 3);
        let f = DegreeBound::constant(6, 2);
        assert_bad(&g, &f, &is_f_choosable(&g, &f).unwrap().unwrap());
    }

    #[test]
    fn separation_graph_is_choosable() {
        let (g, x, y) = choosable_not_paintable();
        let p = LabeledPair::two_marked(g.clone(), x, y).unwrap();
        assert!(is_f_choosable(&g, &p.degree_bound()).unwrap().is_none());
    }

    #[test]
    fn sequential_matches_parallel() {
        let g = Graph::complete(5).without_edge(0).unwrap();
        let p = LabeledPair::marked(g.clone(), 2).unwrap();
        let f = p.degree_bound();
        assert_eq!(
            is_f_choosable_with(&g, &f, Exec::Sequential).unwrap(),
            is_f_choosable_with(&g, &f, Exec::Parallel).unwrap()
        );
    }

    #[test]
    fn zero_list_and_guards() {
        let g = Graph::path(2);
        let l = is_f_choosable(&g, &DegreeBound(vec![0, 1])).unwrap().unwrap();
        assert!(l.lists[0].is_empty());
        assert!(is_f_choosable(&Graph::empty(8), &DegreeBound::constant(8, 1)).unwrap_err().is_guard());
        assert!(is_f_choosable(&Graph::complete(7), &DegreeBound::constant(7, 6)).unwrap_err().is_guard());
    }
}
