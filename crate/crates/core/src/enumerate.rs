//! Isomorphism classes of small graphs.
//!
//! Classes on `n` vertices are generated by adding a vertex with every
//! possible neighbourhood to each class on `n - 1` vertices; every graph
//! arises this way from the class of any of its vertex-deleted subgraphs.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::canon::{canonical_form, canonical_graph};
use crate::error::{Error, Result};
use crate::graph::{full_mask, Graph};
use crate::graph6::parse_graph6;

pub const ENUMERATE_MAX_VERTICES: usize = 8;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Filter {
    All,
    Connected,
    TwoConnected,
}

impl Filter {
    pub fn accepts(self, g: &Graph) -> bool {
        match self {
            Filter::All => true,
            Filter::Connected => g.is_connected(),
            Filter::TwoConnected => g.is_two_connected(),
        }
    }
}

fn all_classes(n: usize) -> Vec<(Vec<u8>, Graph)> {
    if n == 0 {
        return vec![(canonical_form(&Graph::empty(0)).unwrap(), Graph::empty(0))];
    }
    let mut seen: BTreeSet<Vec<u8>> = BTreeSet::new();
    let mut out = Vec::new();
    for (_, h) in all_classes(n - 1) {
        for nb in 0..=full_mask(n - 1) {
            let g = h.with_vertex(nb).unwrap();
            let key = canonical_form(&g).unwrap();
            if seen.insert(key.clone()) {
                out.push((key, canonical_graph(&g).unwrap()));
            }
        }
    }
    out
}

/// One canonically labeled representative per class, ordered by edge count and
/// then canonical string.
pub fn enumerate_graphs(n: usize, filter: Filter) -> Result<Vec<Graph>> {
    if n > ENUMERATE_MAX_VERTICES {
        return Err(Error::guard("enumeration vertex count", n, ENUMERATE_MAX_VERTICES));
    }
    let mut classes: Vec<(usize, Vec<u8>, Graph)> = all_classes(n)
        .into_iter()
        .filter(|(_, g)| filter.accepts(g))
        .map(|(k, g)| (g.m(), k, g))
        .collect();
    classes.sort_by(|a, b| (a.0, &a.1).cmp(&(b.0, &b.1)));
    Ok(classes.into_iter().map(|(_, _, g)| g).collect())
}

/// Classes for every order in `lo..=hi`, concatenated in order of `n`.
pub fn enumerate_range(lo: usize, hi: usize, filter: Filter) -> Result<Vec<Graph>> {
    let mut out = Vec::new();
    for n in lo..=hi {
        out.extend(enumerate_graphs(n, filter)?);
    }
    Ok(out)
}

/// Parse graph6 lines, skipping blank lines and `>>graph6<<` headers.
pub fn read_graph6_lines(text: &str) -> Result<Vec<Graph>> {
    text.lines()
        .map(|l| l.trim().trim_start_matches(">>graph6<<"))
        .filter(|l| !l.is_empty())
        .map(parse_graph6)
        .collect()
}
