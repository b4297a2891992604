//! Block decomposition, Gallai trees and lobes.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{bits, Graph};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Block {
    /// Vertex set as a mask.
    pub vertices: u64,
    /// Edge indices of the block.
    pub edges: Vec<usize>,
}

impl Block {
    pub fn size(&self) -> usize {
        self.vertices.count_ones() as usize
    }

    pub fn vertex_list(&self) -> Vec<usize> {
        bits(self.vertices).collect()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BlockDecomposition {
    /// Ordered by smallest vertex; isolated vertices form edgeless blocks.
    pub blocks: Vec<Block>,
    pub cut_vertices: u64,
    /// `(block index, cut vertex)` incidences of the block-cut tree.
    pub block_cut_tree: Vec<(usize, usize)>,
}

impl BlockDecomposition {
    pub fn blocks_containing(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.blocks
            .iter()
            .enumerate()
            .filter(move |(_, b)| b.vertices >> v & 1 == 1)
            .map(|(i, _)| i)
    }

    pub fn is_cut_vertex(&self, v: usize) -> bool {
        self.cut_vertices >> v & 1 == 1
    }
}

struct Tarjan<'a> {
    g: &'a Graph,
    disc: Vec<usize>,
    low: Vec<usize>,
    time: usize,
    stack: Vec<usize>,
    out: Vec<Block>,
}

impl Tarjan<'_> {
    fn visit(&mut self, v: usize, parent_edge: Option<usize>) {
        self.time += 1;
        self.disc[v] = self.time;
        self.low[v] = self.time;
        for w in self.g.neighbors(v) {
            let e = self.g.edge_index(v, w).unwrap();
            if Some(e) == parent_edge {
                continue;
            }
            if self.disc[w] == 0 {
                self.stack.push(e);
                self.visit(w, Some(e));
                self.low[v] = self.low[v].min(self.low[w]);
                if self.low[w] >= self.disc[v] {
                    let mut edges = Vec::new();
                    let mut verts = 0u64;
                    while let Some(f) = self.stack.pop() {
                        let (a, b) = self.g.edges()[f];
                        verts |= 1 << a | 1 << b;
                        edges.push(f);
                        if f == e {
                            break;
                        }
                    }
                    edges.sort_unstable();
                    self.out.push(Block {
                        vertices: verts,
                        edges,
                    });
                }
            } else if self.disc[w] < self.disc[v] {
                self.stack.push(e);
                self.low[v] = self.low[v].min(self.disc[w]);
            }
        }
    }
}

/// Blocks of `g` (per component for disconnected input).
pub fn blocks(g: &Graph) -> BlockDecomposition {
    let n = g.n();
    let mut t = Tarjan {
        g,
        disc: vec![0; n],
        low: vec![0; n],
        time: 0,
        stack: Vec::new(),
        out: Vec::new(),
    };
    for v in 0..n {
        if t.disc[v] == 0 {
            if g.degree(v) == 0 {
                t.disc[v] = usize::MAX;
                t.out.push(Block {
                    vertices: 1 << v,
                    edges: Vec::new(),
                });
            } else {
                t.visit(v, None);
            }
        }
    }
    let mut blocks = t.out;
    blocks.sort_by_key(|b| (b.vertices.trailing_zeros(), b.vertices));
    let mut seen_once = 0u64;
    let mut cut = 0u64;
    for b in &blocks {
        cut |= seen_once & b.vertices;
        seen_once |= b.vertices;
    }
    let mut tree = Vec::new();
    for (i, b) in blocks.iter().enumerate() {
        for v in bits(b.vertices & cut) {
            tree.push((i, v));
        }
    }
    BlockDecomposition {
        blocks,
        cut_vertices: cut,
        block_cut_tree: tree,
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum BlockKind {
    Complete,
    OddCycle,
    EvenCycle,
    Other,
}

impl BlockKind {
    pub fn is_gallai(self) -> bool {
        matches!(self, BlockKind::Complete | BlockKind::OddCycle)
    }
}

/// Classify the subgraph induced by a block's vertices. `K3` is reported as complete.
pub fn block_kind(g: &Graph, vertices: u64) -> BlockKind {
    let k = vertices.count_ones();
    let inner = |v: usize| (g.neighbors_mask(v) & vertices).count_ones();
    if bits(vertices).all(|v| inner(v) == k - 1) {
        BlockKind::Complete
    } else if bits(vertices).all(|v| inner(v) == 2) {
        if k % 2 == 1 {
            BlockKind::OddCycle
        } else {
            BlockKind::EvenCycle
        }
    } else {
        BlockKind::Other
    }
}

/// True iff every block of the connected graph `g` is complete or an odd cycle.
pub fn is_gallai_tree(g: &Graph) -> Result<bool> {
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    Ok(is_gallai_forest(g))
}

/// Every block complete or an odd cycle, without a connectivity requirement.
pub fn is_gallai_forest(g: &Graph) -> bool {
    blocks(g)
        .blocks
        .iter()
        .all(|b| block_kind(g, b.vertices).is_gallai())
}

/// Gallai-tree test on the subgraph induced by `within` (which must be connected).
pub fn is_gallai_within(g: &Graph, within: u64) -> bool {
    let (h, _) = g.induced(within);
    is_gallai_forest(&h)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Anchor {
    Vertex(usize),
    /// A block given by its vertex mask.
    Block(u64),
}

/// `x`-lobes (components of `G - x` plus `x`) or `B`-lobes (components of
/// `G - B` plus their attachment vertex in `B`), sorted by smallest member.
pub fn lobes(g: &Graph, anchor: Anchor) -> Result<Vec<u64>> {
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let all = g.vertex_mask();
    let mut out = match anchor {
        Anchor::Vertex(x) => {
            g.check_vertex(x)?;
            g.components_within(all & !(1 << x))
                .into_iter()
                .map(|c| c | 1 << x)
                .collect::<Vec<_>>()
        }
        Anchor::Block(b) => {
            let dec = blocks(g);
            if !dec.blocks.iter().any(|blk| blk.vertices == b) {
                return Err(Error::precondition("anchor is not a block of the graph"));
            }
            let mut out = Vec::new();
            for comp in g.components_within(all & !b) {
                let attach = bits(comp).fold(0u64, |acc, v| acc | (g.neighbors_mask(v) & b));
                if attach.count_ones() != 1 {
                    return Err(Error::Postcondition(
                        "component of G - B attaches at more than one vertex".into(),
                    ));
                }
                out.push(comp | attach);
            }
            out
        }
    };
    out.sort_by_key(|&m| (m.trailing_zeros(), m));
    Ok(out)
}
