//! Explicit list assignments with `|L(v)| = d(v) - h(v)` and no proper colouring.
//!
//! Gallai trees get a fresh palette per block (`k - 1` colours for `K_k`, two
//! for an odd cycle) and each vertex takes the union over its blocks. The
//! same palettes extend an uncolourable core: peeling leaf blocks shows a
//! colouring of the whole graph would restrict to one of the core.

use crate::blocks::{block_kind, blocks, BlockKind};
use crate::classify::{classify_connected, CaseTag, DMembership, DVerdict, Evidence};
use crate::error::{Error, Result};
use crate::graph::{bits, Graph, LabeledPair};

use super::{find_coloring, ListAssignment};

/// Adds a fresh palette to every block not inside `core`. Colours start after `next`.
fn add_palettes(g: &Graph, lists: &mut [Vec<u32>], core: u64, mut next: u32) -> Result<u32> {
    for b in blocks(g).blocks {
        if b.vertices & !core == 0 && core != 0 {
            continue;
        }
        let size = match block_kind(g, b.vertices) {
            BlockKind::Complete => b.size() as u32 - 1,
            BlockKind::OddCycle => 2,
            _ => return Err(Error::precondition("a block outside the core is not complete or an odd cycle")),
        };
        let palette: Vec<u32> = (next + 1..=next + size).collect();
        next += size;
        for v in bits(b.vertices) {
            lists[v].extend(&palette);
        }
    }
    Ok(next)
}

fn finish(p: &LabeledPair, lists: Vec<Vec<u32>>) -> Result<ListAssignment> {
    let la = ListAssignment::new(lists);
    let f = p.degree_bound();
    for v in 0..p.graph.n() {
        if la.lists[v].len() != f[v] as usize {
            return Err(Error::Postcondition(format!(
                "vertex {v} has {} colours, expected {}",
                la.lists[v].len(),
                f[v]
            )));
        }
    }
    if find_coloring(&p.graph, &la.lists).is_some() {
        return Err(Error::Postcondition("constructed lists admit a proper colouring".into()));
    }
    Ok(la)
}

/// Per-block palettes on a connected Gallai tree; `|L(v)| = d(v)`.
pub fn bad_lists_gallai(g: &Graph) -> Result<ListAssignment> {
    if !crate::blocks::is_gallai_tree(g)? {
        return Err(Error::precondition("graph is not a Gallai tree"));
    }
    let mut lists = vec![Vec::new(); g.n()];
    add_palettes(g, &mut lists, 0, 0)?;
    finish(&LabeledPair::zero(g.clone()), lists)
}

/// Lists for an exceptional pair: on a T-graph `{1,2,3}` on the triangle and
/// `{1,2}` elsewhere; on the spindle `{1,2,3}` everywhere.
pub fn bad_lists_for_d(p: &LabeledPair, membership: &DMembership) -> Result<ListAssignment> {
    p.single_mark()?;
    let n = p.graph.n();
    let lists = match membership.verdict {
        DVerdict::NotMember => return Err(Error::precondition("pair is not exceptional")),
        DVerdict::MoserSpindle => vec![vec![1, 2, 3]; n],
        DVerdict::TGraphOdd | DVerdict::TGraphEven => {
            let w = membership
                .t_graph
                .as_ref()
                .ok_or_else(|| Error::precondition("T-graph verdict without a witness"))?;
            let mut lists = vec![vec![1, 2]; n];
            for &z in &w.triangle {
                lists[z] = vec![1, 2, 3];
            }
            lists
        }
    };
    finish(p, lists)
}

/// Bad lists for any connected `(G, h_x)` that is not AT, following the
/// obstruction the classifier reports.
pub fn bad_lists_for_pair(p: &LabeledPair) -> Result<ListAssignment> {
    let x = p.single_mark()?;
    let g = &p.graph;
    let c = classify_connected(p)?;
    if c.at {
        return Err(Error::precondition("pair is AT, so every list assignment of these sizes is colourable"));
    }
    let lists = match (c.case, &c.witness) {
        (CaseTag::ObstructionGallaiTree, _) => {
            let mut lists = vec![Vec::new(); g.n()];
            add_palettes(g, &mut lists, 0, 0)?;
            lists[x].pop();
            lists
        }
        (CaseTag::ObstructionPendant, _) => pendant_lists(g, x),
        (CaseTag::ObstructionDegreeTwo, Evidence::Components { components, gallai }) => {
            let ci = gallai.iter().position(|&t| t).expect("a Gallai component");
            degree_two_lists(g, x, &components[ci])?
        }
        (CaseTag::ObstructionBlock, Evidence::Membership { block, membership }) => {
            let core: u64 = block.iter().fold(0, |acc, &v| acc | 1 << v);
            let (bp, map) = p.induced(core);
            let local = crate::classify::membership_in_d(&bp.graph, map.iter().position(|&v| v == x).unwrap());
            debug_assert_eq!(local.verdict, membership.verdict);
            let inner = bad_lists_for_d(&bp, &local)?;
            let mut lists = vec![Vec::new(); g.n()];
            for (i, &v) in map.iter().enumerate() {
                lists[v] = inner.lists[i].clone();
            }
            add_palettes(g, &mut lists, core, inner.max_color())?;
            lists
        }
        (
            CaseTag::ObstructionLobePendant | CaseTag::ObstructionLobeDegreeTwo | CaseTag::ObstructionLobeBlock,
            Evidence::Lobe { lobe, .. },
        ) => {
            let core: u64 = lobe.iter().fold(0, |acc, &v| acc | 1 << v);
            let (ap, map) = p.induced(core);
            let inner = bad_lists_for_pair(&ap)?;
            let mut lists = vec![Vec::new(); g.n()];
            for (i, &v) in map.iter().enumerate() {
                lists[v] = inner.lists[i].clone();
            }
            add_palettes(g, &mut lists, core, inner.max_color())?;
            lists
        }
        (tag, _) => return Err(Error::Postcondition(format!("unexpected evidence for {tag:?}"))),
    };
    finish(p, lists)
}

/// `L(x)` empty; every other vertex gets `{1..d(v)}`.
fn pendant_lists(g: &Graph, x: usize) -> Vec<Vec<u32>> {
    (0..g.n())
        .map(|v| if v == x { Vec::new() } else { (1..=g.degree(v) as u32).collect() })
        .collect()
}

/// `d(x) = 2` with a Gallai-tree component `C` of `G - x`: Gallai palettes on
/// `C`, a new colour `c` as `L(x)` and on the neighbours of `x` in `C`;
/// vertices outside `C + x` get unrelated fresh colours.
fn degree_two_lists(g: &Graph, x: usize, component: &[usize]) -> Result<Vec<Vec<u32>>> {
    let cmask: u64 = component.iter().fold(0, |acc, &v| acc | 1 << v);
    let (cg, map) = g.induced(cmask);
    let mut local = vec![Vec::new(); cg.n()];
    let mut next = add_palettes(&cg, &mut local, 0, 0)?;
    next += 1;
    let c = next;
    let mut lists = vec![Vec::new(); g.n()];
    for (i, &v) in map.iter().enumerate() {
        lists[v] = std::mem::take(&mut local[i]);
        if g.has_edge(v, x) {
            lists[v].push(c);
        }
    }
    lists[x] = vec![c];
    for v in (0..g.n()).filter(|&v| v != x && cmask >> v & 1 == 0) {
        lists[v] = (next + 1..=next + g.degree(v) as u32).collect();
        next += g.degree(v) as u32;
    }
    Ok(lists)
}
