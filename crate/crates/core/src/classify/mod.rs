//! Polynomial-time AT decisions for `(G, 0)` and `(G, h_x)`.
//!
//! A connected pair `(G, h_x)` fails to be AT exactly when one of five
//! obstructions is present. They are checked in a fixed order and the first
//! one found is reported:
//!
//! 1. `G` is a Gallai tree;
//! 2. `d(x) = 1`;
//! 3. `d(x) = 2` and some component of `G - x` is a Gallai tree;
//! 4. `x` is not a cut vertex, its block `B` has `(B, h_x)` in the exceptional
//!    family, and all other blocks are complete or odd cycles;
//! 5. `x` is a cut vertex, exactly one `x`-lobe `A` is not a Gallai tree, and
//!    `A` has `d_A(x) = 1`, or `d_A(x) = 2` with `A - x` a Gallai tree, or the
//!    block `B` of `A` at `x` is exceptional with every `B`-lobe of `A` a
//!    Gallai tree.

mod membership;
mod witness;

use serde::{Deserialize, Serialize};

pub use membership::{membership_d, membership_in_d, DMembership, DVerdict};
pub use witness::{find_at_witness_subgraph, AtWitness, WitnessMethod, WitnessPart};

use crate::blocks::{block_kind, blocks, is_gallai_forest, is_gallai_within, lobes, Anchor, BlockKind};
use crate::error::{Error, Result};
use crate::graph::{bits, Graph, LabeledPair};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CaseTag {
    // Degree-AT.
    GallaiTree,
    NonGallaiBlock,
    // Two-connected pairs.
    DegreeTwoGallai,
    DegreeTwoNonGallai,
    Complete,
    Exceptional,
    NotExceptional,
    // Connected pairs: obstructions in order, then their absence.
    ObstructionGallaiTree,
    ObstructionPendant,
    ObstructionDegreeTwo,
    ObstructionBlock,
    ObstructionLobePendant,
    ObstructionLobeDegreeTwo,
    ObstructionLobeBlock,
    NoObstruction,
}

impl CaseTag {
    pub fn is_at(self) -> bool {
        matches!(
            self,
            CaseTag::NonGallaiBlock
                | CaseTag::DegreeTwoNonGallai
                | CaseTag::NotExceptional
                | CaseTag::NoObstruction
        )
    }

    /// Obstruction number 1..=5 for connected-pair tags.
    pub fn obstruction(self) -> Option<u8> {
        match self {
            CaseTag::ObstructionGallaiTree => Some(1),
            CaseTag::ObstructionPendant => Some(2),
            CaseTag::ObstructionDegreeTwo => Some(3),
            CaseTag::ObstructionBlock => Some(4),
            CaseTag::ObstructionLobePendant
            | CaseTag::ObstructionLobeDegreeTwo
            | CaseTag::ObstructionLobeBlock => Some(5),
            _ => None,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BlockSummary {
    pub vertices: Vec<usize>,
    pub kind: BlockKind,
}

impl BlockSummary {
    fn of(g: &Graph, mask: u64) -> Self {
        BlockSummary {
            vertices: bits(mask).collect(),
            kind: block_kind(g, mask),
        }
    }
}

/// Case-dependent evidence; vertex lists refer to the input graph.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "snake_case")]
pub enum Evidence {
    Blocks { blocks: Vec<BlockSummary> },
    Block { block: BlockSummary },
    Degree { degree: usize },
    /// Components of `G - x`, flagged by whether each is a Gallai tree.
    Components { components: Vec<Vec<usize>>, gallai: Vec<bool> },
    Membership { block: Vec<usize>, membership: DMembership },
    Lobe {
        lobe: Vec<usize>,
        degree_in_lobe: usize,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        block: Option<Vec<usize>>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        membership: Option<DMembership>,
    },
    /// Lobes of `x` that are not Gallai trees (at least two when none is exceptional).
    Lobes { non_gallai: Vec<Vec<usize>> },
    None,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Classification {
    pub at: bool,
    pub case: CaseTag,
    pub witness: Evidence,
}

impl Classification {
    fn new(case: CaseTag, witness: Evidence) -> Self {
        Classification {
            at: case.is_at(),
            case,
            witness,
        }
    }
}

/// A connected graph is degree-AT iff it is not a Gallai tree.
pub fn classify_degree_at(g: &Graph) -> Result<Classification> {
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let dec = blocks(g);
    if let Some(b) = dec.blocks.iter().find(|b| !block_kind(g, b.vertices).is_gallai()) {
        return Ok(Classification::new(
            CaseTag::NonGallaiBlock,
            Evidence::Block {
                block: BlockSummary::of(g, b.vertices),
            },
        ));
    }
    let blocks = dec.blocks.iter().map(|b| BlockSummary::of(g, b.vertices)).collect();
    Ok(Classification::new(CaseTag::GallaiTree, Evidence::Blocks { blocks }))
}

fn components_evidence(g: &Graph, x: usize) -> (Vec<bool>, Evidence) {
    let comps = g.components_within(g.vertex_mask() & !(1 << x));
    let gallai: Vec<bool> = comps.iter().map(|&c| is_gallai_within(g, c)).collect();
    let ev = Evidence::Components {
        components: comps.iter().map(|&c| bits(c).collect()).collect(),
        gallai: gallai.clone(),
    };
    (gallai, ev)
}

/// Decision for 2-connected `(G, h_x)`: AT iff `d(x) = 2` and `G - x` is not a
/// Gallai tree, or `d(x) >= 3`, `G` is not complete and the pair is not exceptional.
pub fn classify_two_connected(p: &LabeledPair) -> Result<Classification> {
    let x = p.single_mark()?;
    let g = &p.graph;
    if !g.is_two_connected() {
        return Err(Error::NotTwoConnected);
    }
    if g.degree(x) == 2 {
        let (gallai, ev) = components_evidence(g, x);
        let tag = if gallai[0] { CaseTag::DegreeTwoGallai } else { CaseTag::DegreeTwoNonGallai };
        return Ok(Classification::new(tag, ev));
    }
    if g.is_complete() {
        return Ok(Classification::new(CaseTag::Complete, Evidence::None));
    }
    let membership = membership_in_d(g, x);
    let tag = if membership.is_member() { CaseTag::Exceptional } else { CaseTag::NotExceptional };
    Ok(Classification::new(
        tag,
        Evidence::Membership {
            block: (0..g.n()).collect(),
            membership,
        },
    ))
}

/// Decision for connected `(G, h_x)` by the five obstructions above.
pub fn classify_connected(p: &LabeledPair) -> Result<Classification> {
    let x = p.single_mark()?;
    let g = &p.graph;
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let dec = blocks(g);
    if is_gallai_forest(g) {
        let blocks = dec.blocks.iter().map(|b| BlockSummary::of(g, b.vertices)).collect();
        return Ok(Classification::new(CaseTag::ObstructionGallaiTree, Evidence::Blocks { blocks }));
    }
    let dx = g.degree(x);
    if dx == 1 {
        return Ok(Classification::new(CaseTag::ObstructionPendant, Evidence::Degree { degree: 1 }));
    }
    if dx == 2 {
        let (gallai, ev) = components_evidence(g, x);
        if gallai.iter().any(|&t| t) {
            return Ok(Classification::new(CaseTag::ObstructionDegreeTwo, ev));
        }
    }
    if !dec.is_cut_vertex(x) {
        let bi = dec.blocks_containing(x).next().expect("x lies in a block");
        let b = dec.blocks[bi].vertices;
        let others_gallai = dec
            .blocks
            .iter()
            .enumerate()
            .all(|(i, blk)| i == bi || block_kind(g, blk.vertices).is_gallai());
        let membership = block_membership(g, b, x);
        let tag = if others_gallai && membership.is_member() {
            CaseTag::ObstructionBlock
        } else {
            CaseTag::NoObstruction
        };
        let ev = Evidence::Membership {
            block: bits(b).collect(),
            membership,
        };
        return Ok(Classification::new(tag, ev));
    }
    let non_gallai: Vec<u64> = lobes(g, Anchor::Vertex(x))?
        .into_iter()
        .filter(|&l| !is_gallai_within(g, l))
        .collect();
    if let [a] = non_gallai[..] {
        if let Some(c) = lobe_obstruction(g, x, a)? {
            return Ok(c);
        }
    }
    Ok(Classification::new(
        CaseTag::NoObstruction,
        Evidence::Lobes {
            non_gallai: non_gallai.iter().map(|&l| bits(l).collect()).collect(),
        },
    ))
}

/// Membership of the block `b` with `x` marked, with the witness mapped back
/// to `g`. The induced-subgraph map is increasing, so witness order survives.
fn block_membership(g: &Graph, b: u64, x: usize) -> DMembership {
    let (h, map) = g.induced(b);
    let lx = map.iter().position(|&v| v == x).expect("x in block");
    if !h.is_two_connected() {
        return DMembership::not_member();
    }
    let mut m = membership_in_d(&h, lx);
    if let Some(w) = m.t_graph.as_mut() {
        w.apex = map[w.apex];
        w.triangle = w.triangle.map(|v| map[v]);
        for path in w.paths.iter_mut() {
            for v in path.iter_mut() {
                *v = map[*v];
            }
        }
    }
    if let Some(sm) = m.spindle_map.as_mut() {
        let mut full = vec![usize::MAX; g.n()];
        for (i, &v) in map.iter().enumerate() {
            full[v] = sm[i];
        }
        *sm = full;
    }
    m
}

fn lobe_obstruction(g: &Graph, x: usize, a: u64) -> Result<Option<Classification>> {
    let da = (g.neighbors_mask(x) & a).count_ones() as usize;
    let lobe: Vec<usize> = bits(a).collect();
    let plain = |tag| {
        Classification::new(
            tag,
            Evidence::Lobe {
                lobe: lobe.clone(),
                degree_in_lobe: da,
                block: None,
                membership: None,
            },
        )
    };
    if da == 1 {
        return Ok(Some(plain(CaseTag::ObstructionLobePendant)));
    }
    if da == 2 && is_gallai_within(g, a & !(1 << x)) {
        return Ok(Some(plain(CaseTag::ObstructionLobeDegreeTwo)));
    }
    let (sub, map) = g.induced(a);
    let lx = map.iter().position(|&v| v == x).expect("x in lobe");
    let dec = blocks(&sub);
    let Some(bi) = dec.blocks_containing(lx).next() else {
        return Ok(None);
    };
    let b_local = dec.blocks[bi].vertices;
    let b: u64 = bits(b_local).fold(0, |acc, v| acc | 1 << map[v]);
    let membership = block_membership(g, b, x);
    if !membership.is_member() {
        return Ok(None);
    }
    let b_lobes_gallai = lobes(&sub, Anchor::Block(b_local))?
        .into_iter()
        .all(|l| is_gallai_within(&sub, l));
    if !b_lobes_gallai {
        return Ok(None);
    }
    Ok(Some(Classification::new(
        CaseTag::ObstructionLobeBlock,
        Evidence::Lobe {
            lobe,
            degree_in_lobe: da,
            block: Some(bits(b).collect()),
            membership: Some(membership),
        },
    )))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::patterns::{k4_seed, moser_spindle, t_graph};
    use crate::search::is_pair_at;

    fn marked(g: Graph, x: usize) -> LabeledPair {
        LabeledPair::marked(g, x).unwrap()
    }

    #[test]
    fn degree_at_examples() {
        assert!(!classify_degree_at(&Graph::cycle(7)).unwrap().at);
        let c6 = classify_degree_at(&Graph::cycle(6)).unwrap();
        assert!(c6.at);
        assert_eq!(
            c6.witness,
            Evidence::Block {
                block: BlockSummary {
                    vertices: (0..6).collect(),
                    kind: BlockKind::EvenCycle
                }
            }
        );
        let k4_tri =
            Graph::from_edges(6, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3), (3, 4), (3, 5), (4, 5)]).unwrap();
        assert!(!classify_degree_at(&k4_tri).unwrap().at);
        assert_eq!(classify_degree_at(&Graph::empty(2)), Err(Error::Disconnected));
    }

    #[test]
    fn two_connected_examples() {
        let k4e = Graph::complete(4).without_edge(Graph::complete(4).edge_index(1, 2).unwrap()).unwrap();
        let c = classify_two_connected(&marked(k4e.clone(), 0)).unwrap();
        assert_eq!(c.case, CaseTag::NotExceptional);
        assert!(is_pair_at(&marked(k4e, 0)).unwrap().is_some());
        let c5 = classify_two_connected(&marked(Graph::cycle(5), 0)).unwrap();
        assert_eq!((c5.at, c5.case), (false, CaseTag::DegreeTwoGallai));
        let (g, x) = moser_spindle();
        assert_eq!(classify_two_connected(&marked(g, x)).unwrap().case, CaseTag::Exceptional);
        let (g, x) = k4_seed();
        assert_eq!(classify_two_connected(&marked(g, x)).unwrap().case, CaseTag::Complete);
        assert_eq!(
            classify_two_connected(&marked(Graph::path(3), 0)),
            Err(Error::NotTwoConnected)
        );
    }

    #[test]
    fn connected_examples() {
        let star = Graph::complete_bipartite(1, 3);
        let c = classify_connected(&marked(star, 1)).unwrap();
        // The star is a tree, hence a Gallai tree; the first obstruction wins.
        assert_eq!(c.case, CaseTag::ObstructionGallaiTree);
        let bowtie = Graph::from_edges(5, [(0, 1), (0, 2), (1, 2), (2, 3), (2, 4), (3, 4)]).unwrap();
        let c = classify_connected(&marked(bowtie, 2)).unwrap();
        assert_eq!((c.at, c.case), (false, CaseTag::ObstructionGallaiTree));
        // C4 with a pendant x: the lobe containing C4 meets x once.
        let g = Graph::from_edges(5, [(0, 1), (1, 2), (2, 3), (3, 0), (0, 4)]).unwrap();
        assert_eq!(classify_connected(&marked(g.clone(), 4)).unwrap().case, CaseTag::ObstructionPendant);
        // Give x two more pendant neighbours so the degree-two test does not fire.
        let h = g.with_vertex(1 << 4).unwrap().with_vertex(1 << 4).unwrap();
        assert_eq!(classify_connected(&marked(h, 4)).unwrap().case, CaseTag::ObstructionLobePendant);
    }

    #[test]
    fn chorded_c6_with_degree_two_mark() {
        // C6 plus chord 0-3, and x = 6 adjacent to 1 and 2.
        let g = Graph::from_edges(
            7,
            [(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 0), (0, 3), (6, 1), (6, 2)],
        )
        .unwrap();
        let p = marked(g, 6);
        let c = classify_connected(&p).unwrap();
        assert_eq!((c.at, c.case), (true, CaseTag::NoObstruction));
        assert!(is_pair_at(&p).unwrap().is_some());
    }

    #[test]
    fn exceptional_block_with_tail() {
        // T(1,1,1) = K4 with apex 0, plus a triangle hanging off vertex 1.
        let (g, _) = t_graph([1, 1, 1]);
        let g = g.with_vertex(1 << 1).unwrap().with_vertex(1 << 1 | 1 << 4).unwrap();
        let c = classify_connected(&marked(g.clone(), 0)).unwrap();
        assert_eq!(c.case, CaseTag::ObstructionGallaiTree);
        let (g, _) = t_graph([1, 2, 1]);
        let c = classify_connected(&marked(g, 0)).unwrap();
        assert!(c.at);
    }

    #[test]
    fn obstruction_numbers() {
        assert_eq!(CaseTag::ObstructionLobeBlock.obstruction(), Some(5));
        assert_eq!(CaseTag::NoObstruction.obstruction(), None);
    }
}
