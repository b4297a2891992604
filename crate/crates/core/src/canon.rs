//! Canonical labeling for small graphs: colour refinement to an equitable
//! partition, then individualization of each vertex of the first non-singleton
//! cell, keeping the labeling with the lexicographically largest adjacency word.
//! Transposing two twins inside a cell is an automorphism, so only one vertex
//! per twin class is individualized.

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::graph6::emit_graph6;

pub const CANON_MAX_VERTICES: usize = 12;

fn refine(g: &Graph, mut cells: Vec<Vec<usize>>) -> Vec<Vec<usize>> {
    let n = g.n();
    let mut cell_of = vec![0usize; n];
    loop {
        for (i, c) in cells.iter().enumerate() {
            for &v in c {
                cell_of[v] = i;
            }
        }
        let k = cells.len();
        let mut next: Vec<Vec<usize>> = Vec::with_capacity(n);
        for cell in &cells {
            if cell.len() == 1 {
                next.push(cell.clone());
                continue;
            }
            let mut sig: Vec<(Vec<u8>, usize)> = cell
                .iter()
                .map(|&v| {
                    let mut s = vec![0u8; k];
                    for w in g.neighbors(v) {
                        s[cell_of[w]] += 1;
                    }
                    (s, v)
                })
                .collect();
            sig.sort();
            let mut start = 0;
            for i in 1..=sig.len() {
                if i == sig.len() || sig[i].0 != sig[start].0 {
                    next.push(sig[start..i].iter().map(|p| p.1).collect());
                    start = i;
                }
            }
        }
        let grew = next.len() > cells.len();
        cells = next;
        if !grew {
            return cells;
        }
    }
}

fn word(g: &Graph, order: &[usize]) -> u64 {
    // order[position] = vertex
    let mut w = 0u64;
    for j in 1..order.len() {
        for i in 0..j {
            w = w << 1 | g.has_edge(order[i], order[j]) as u64;
        }
    }
    w
}

fn search(g: &Graph, cells: Vec<Vec<usize>>, best: &mut Option<(u64, Vec<usize>)>) {
    let cells = refine(g, cells);
    let Some(c) = cells.iter().position(|cell| cell.len() > 1) else {
        let order: Vec<usize> = cells.iter().map(|cell| cell[0]).collect();
        let w = word(g, &order);
        if best.as_ref().is_none_or(|(bw, _)| w > *bw) {
            *best = Some((w, order));
        }
        return;
    };
    let cell = &cells[c];
    let mut tried: Vec<usize> = Vec::new();
    for &v in cell {
        let twin = tried.iter().any(|&u| {
            g.neighbors_mask(u) & !(1 << v) == g.neighbors_mask(v) & !(1 << u)
        });
        if twin {
            continue;
        }
        tried.push(v);
        let mut next = Vec::with_capacity(cells.len() + 1);
        next.extend_from_slice(&cells[..c]);
        next.push(vec![v]);
        next.push(cell.iter().copied().filter(|&w| w != v).collect());
        next.extend_from_slice(&cells[c + 1..]);
        search(g, next, best);
    }
}

/// Canonical permutation `perm[old] = new` respecting a vertex colouring.
pub fn canonical_labeling(g: &Graph, colors: &[u32]) -> Result<Vec<usize>> {
    let n = g.n();
    if n > CANON_MAX_VERTICES {
        return Err(Error::guard("canonical form vertex count", n, CANON_MAX_VERTICES));
    }
    if colors.len() != n {
        return Err(Error::precondition("one colour per vertex required"));
    }
    if n == 0 {
        return Ok(Vec::new());
    }
    let mut palette: Vec<u32> = colors.to_vec();
    palette.sort_unstable();
    palette.dedup();
    let cells: Vec<Vec<usize>> = palette
        .iter()
        .map(|&c| (0..n).filter(|&v| colors[v] == c).collect())
        .collect();
    let mut best = None;
    search(g, cells, &mut best);
    let (_, order) = best.expect("search reaches a leaf");
    let mut perm = vec![0; n];
    for (pos, &v) in order.iter().enumerate() {
        perm[v] = pos;
    }
    Ok(perm)
}

/// Equal outputs iff the graphs are isomorphic.
pub fn canonical_form(g: &Graph) -> Result<Vec<u8>> {
    let perm = canonical_labeling(g, &vec![0; g.n()])?;
    Ok(emit_graph6(&g.relabel(&perm)).into_bytes())
}

/// Equal outputs iff there is an isomorphism preserving the colours.
pub fn canonical_form_colored(g: &Graph, colors: &[u32]) -> Result<Vec<u8>> {
    let perm = canonical_labeling(g, colors)?;
    let mut out = emit_graph6(&g.relabel(&perm)).into_bytes();
    let mut recolored = vec![0u32; g.n()];
    for v in 0..g.n() {
        recolored[perm[v]] = colors[v];
    }
    out.push(b'|');
    for c in recolored {
        out.extend_from_slice(c.to_string().as_bytes());
        out.push(b',');
    }
    Ok(out)
}

pub fn canonical_graph(g: &Graph) -> Result<Graph> {
    let perm = canonical_labeling(g, &vec![0; g.n()])?;
    Ok(g.relabel(&perm))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn c4_variants() {
        let c4 = Graph::cycle(4);
        let k4_minus_matching =
            Graph::from_edges(4, [(0, 2), (0, 3), (1, 2), (1, 3)]).unwrap();
        assert_eq!(
            canonical_form(&c4).unwrap(),
            canonical_form(&k4_minus_matching).unwrap()
        );
        assert_ne!(
            canonical_form(&c4).unwrap(),
            canonical_form(&Graph::complete(4)).unwrap()
        );
    }

    #[test]
    fn colours_matter() {
        let p = Graph::path(3);
        let end = canonical_form_colored(&p, &[1, 0, 0]).unwrap();
        let other_end = canonical_form_colored(&p, &[0, 0, 1]).unwrap();
        let middle = canonical_form_colored(&p, &[0, 1, 0]).unwrap();
        assert_eq!(end, other_end);
        assert_ne!(end, middle);
    }

    #[test]
    fn guard() {
        assert!(canonical_form(&Graph::empty(CANON_MAX_VERTICES + 1)).is_err());
        assert!(canonical_form(&Graph::complete(CANON_MAX_VERTICES)).is_ok());
    }
}
