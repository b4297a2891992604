//! The online list-colouring game. Lister reveals a set `S`; Painter colours
//! an independent `I ⊆ S`; uncoloured vertices of `S` lose one token. Painter
//! wins once every vertex is coloured and loses when a vertex runs out.

use rustc_hash::FxHashMap;

use crate::config::guards;
use crate::error::{Error, Result};
use crate::graph::{bits, DegreeBound, Graph};

const TOKEN_BITS: usize = 4;

/// Game state memoised on `(remaining vertices, residual tokens)`.
pub struct PaintInstance<'a> {
    pub graph: &'a Graph,
    memo: FxHashMap<(u64, u64), bool>,
}

impl<'a> PaintInstance<'a> {
    pub fn new(graph: &'a Graph) -> Self {
        PaintInstance {
            graph,
            memo: FxHashMap::default(),
        }
    }

    pub fn states(&self) -> usize {
        self.memo.len()
    }

    /// Painter's value of the game with `f` tokens on the vertices of `alive`.
    pub fn painter_wins(&mut self, mut alive: u64, f: &mut [u32]) -> bool {
        let g = self.graph;
        // Vertices with more tokens than live neighbours are always coloured in time.
        loop {
            let drop = bits(alive).find(|&v| f[v] > (g.neighbors_mask(v) & alive).count_ones());
            match drop {
                Some(v) => alive &= !(1 << v),
                None => break,
            }
        }
        if alive == 0 {
            return true;
        }
        if bits(alive).any(|v| f[v] == 0) {
            return false;
        }
        let key = (alive, pack(alive, f));
        if let Some(&w) = self.memo.get(&key) {
            return w;
        }
        let mut win = true;
        let mut s = alive;
        while s != 0 {
            if !self.painter_answers(alive, s, f) {
                win = false;
                break;
            }
            s = (s - 1) & alive;
        }
        self.memo.insert(key, win);
        win
    }

    /// Some maximal independent `I ⊆ s` leaves a Painter win. Colouring more
    /// never hurts Painter, so only maximal sets are tried.
    fn painter_answers(&mut self, alive: u64, s: u64, f: &mut [u32]) -> bool {
        let mut sets = Vec::new();
        maximal_independent(self.graph, s, 0, s, &mut sets);
        for i in sets {
            let hit = s & !i;
            for v in bits(hit) {
                f[v] -= 1;
            }
            let w = self.painter_wins(alive & !i, f);
            for v in bits(hit) {
                f[v] += 1;
            }
            if w {
                return true;
            }
        }
        false
    }
}

fn pack(alive: u64, f: &[u32]) -> u64 {
    bits(alive).fold(0u64, |acc, v| acc | (f[v] as u64) << (TOKEN_BITS * v))
}

/// Maximal independent subsets of `pool` extending `chosen`; `candidates` are
/// vertices still addable.
fn maximal_independent(g: &Graph, pool: u64, chosen: u64, candidates: u64, out: &mut Vec<u64>) {
    if candidates == 0 {
        // Maximal iff no vertex of the pool outside `chosen` is free of it.
        let addable = bits(pool & !chosen).any(|v| g.neighbors_mask(v) & chosen == 0);
        if !addable {
            out.push(chosen);
        }
        return;
    }
    let v = candidates.trailing_zeros() as usize;
    let rest = candidates & !(1 << v);
    maximal_independent(g, pool, chosen | 1 << v, rest & !g.neighbors_mask(v), out);
    maximal_independent(g, pool, chosen, rest, out);
}

/// Whether Painter wins with `f(v)` tokens on each vertex.
pub fn is_f_paintable(g: &Graph, f: &DegreeBound) -> Result<bool> {
    f.check_len(g)?;
    let limit = guards().paint_max_vertices;
    if g.n() > limit {
        return Err(Error::guard("vertices for the paint game", g.n(), limit));
    }
    if g.n() * TOKEN_BITS > 64 {
        return Err(Error::guard("vertices for the paint game", g.n(), 64 / TOKEN_BITS));
    }
    // Tokens above the degree never matter; capping keeps them within TOKEN_BITS.
    let mut tokens: Vec<u32> = (0..g.n()).map(|v| f[v].min(g.degree(v) as u32 + 1)).collect();
    Ok(PaintInstance::new(g).painter_wins(g.vertex_mask(), &mut tokens))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::LabeledPair;
    use crate::patterns::{choosable_not_paintable, paintable_not_at};

    #[test]
    fn empty_and_trivial() {
        assert!(is_f_paintable(&Graph::empty(0), &DegreeBound(vec![])).unwrap());
        assert!(is_f_paintable(&Graph::empty(3), &DegreeBound::constant(3, 1)).unwrap());
        assert!(!is_f_paintable(&Graph::empty(1), &DegreeBound(vec![0])).unwrap());
        assert!(!is_f_paintable(&Graph::path(2), &DegreeBound::constant(2, 1)).unwrap());
    }

    #[test]
    fn cliques_and_cycles() {
        assert!(is_f_paintable(&Graph::complete(4), &DegreeBound::constant(4, 4)).unwrap());
        assert!(!is_f_paintable(&Graph::complete(4), &DegreeBound::constant(4, 3)).unwrap());
        assert!(is_f_paintable(&Graph::cycle(4), &DegreeBound::constant(4, 2)).unwrap());
        assert!(!is_f_paintable(&Graph::cycle(5), &DegreeBound::constant(5, 2)).unwrap());
    }

    #[test]
    fn separations() {
        let (g, x, y) = choosable_not_paintable();
        let p = LabeledPair::two_marked(g.clone(), x, y).unwrap();
        assert!(!is_f_paintable(&g, &p.degree_bound()).unwrap());
        let (g, x, y) = paintable_not_at();
        let p = LabeledPair::two_marked(g.clone(), x, y).unwrap();
        assert!(is_f_paintable(&g, &p.degree_bound()).unwrap());
    }

    #[test]
    fn maximal_sets_of_path() {
        let mut out = Vec::new();
        let g = Graph::path(3);
        maximal_independent(&g, 0b111, 0, 0b111, &mut out);
        out.sort();
        assert_eq!(out, vec![0b010, 0b101]);
    }

    #[test]
    fn guard() {
        assert!(is_f_paintable(&Graph::empty(9), &DegreeBound::constant(9, 1)).unwrap_err().is_guard());
    }
}
