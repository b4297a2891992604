//! Moving AT orientations across a stretch, and the two-way transfer check.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::LabeledPair;
use crate::orientation::Orientation;
use crate::search::is_pair_at;
use crate::stretch::stretch;

/// Given an orientation of `G` and the stretch `G'` of edge `e` (as produced
/// by [`stretch`]), replace `e` by a directed path in the same direction.
/// Eulerian subgraphs correspond with parity kept.
pub fn lift_through_stretch(d: &Orientation, e: usize, stretched: &LabeledPair) -> Result<Orientation> {
    let g = d.graph();
    let (t, h) = d.arc(e);
    let (v1, v2) = (g.n(), g.n() + 1);
    let (u1, _) = g.edge(e)?;
    // The new path is u1 v1 v2 u2 with u1 the smaller endpoint.
    let path = if t == u1 { [t, v1, v2, h] } else { [t, v2, v1, h] };
    let arcs = (0..g.m())
        .filter(|&f| f != e)
        .map(|f| d.arc(f))
        .chain(path.windows(2).map(|w| (w[0], w[1])));
    Orientation::from_arcs(stretched.graph.clone(), arcs)
}

/// Pull an orientation of `G'` back to `G` when the stretched path is
/// directed, or to `G - e` otherwise (second graph index: `None` keeps `e`).
pub fn project_from_stretch(
    d: &Orientation,
    base: &LabeledPair,
    e: usize,
) -> Result<(Orientation, bool)> {
    let g = &base.graph;
    let (u1, u2) = g.edge(e)?;
    let (v1, v2) = (g.n(), g.n() + 1);
    let dir = |a: usize, b: usize| -> Result<bool> {
        let idx = d
            .graph()
            .edge_index(a, b)
            .ok_or_else(|| Error::precondition("orientation is not of the stretched graph"))?;
        Ok(d.arc(idx) == (a, b))
    };
    let forward = dir(u1, v1)? && dir(v1, v2)? && dir(v2, u2)?;
    let backward = dir(u2, v2)? && dir(v2, v1)? && dir(v1, u1)?;
    let kept = d.arcs().filter(|&(a, b)| a < g.n() && b < g.n());
    if forward || backward {
        let arc = if forward { (u1, u2) } else { (u2, u1) };
        Ok((Orientation::from_arcs(g.clone(), kept.chain([arc]))?, true))
    } else {
        Ok((Orientation::from_arcs(g.without_edge(e)?, kept)?, false))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct StretchTransfer {
    pub edge: usize,
    pub base_at: bool,
    pub deleted_at: bool,
    pub stretched_at: bool,
    /// `(G,h)` AT implies `(G',h')` AT.
    pub forward_holds: bool,
    /// `(G',h')` AT implies `(G,h)` or `(G-e,h)` AT.
    pub backward_holds: bool,
    /// Direction bitstrings of the witnesses found.
    pub base_witness: Option<String>,
    pub deleted_witness: Option<String>,
    pub stretched_witness: Option<String>,
}

impl StretchTransfer {
    pub fn holds(&self) -> bool {
        self.forward_holds && self.backward_holds
    }
}

/// Decide `(G,h)`, `(G-e,h)` and the stretch `(G',h')` by search and check
/// both directions of the transfer. Witnesses are also moved across the
/// stretch constructively and re-verified.
pub fn stretch_transfer_check(p: &LabeledPair, e: usize) -> Result<StretchTransfer> {
    let q = stretch(p, e)?;
    let deleted = LabeledPair::new(p.graph.without_edge(e)?, p.labels.clone())?;
    let base = is_pair_at(p)?;
    let del = is_pair_at(&deleted)?;
    let st = is_pair_at(&q)?;
    if let Some(d) = &base {
        let lifted = lift_through_stretch(d, e, &q)?;
        if !crate::cert::verify_orientation(&lifted, &q.degree_bound())?.is_at() {
            return Err(Error::Postcondition("lifted orientation is not AT".into()));
        }
    }
    if let Some(d) = &st {
        let (proj, _) = project_from_stretch(d, p, e)?;
        let target = if proj.graph() == &p.graph { p } else { &deleted };
        if !crate::cert::verify_orientation(&proj, &target.degree_bound())?.is_at() {
            return Err(Error::Postcondition("projected orientation is not AT".into()));
        }
    }
    Ok(StretchTransfer {
        edge: e,
        base_at: base.is_some(),
        deleted_at: del.is_some(),
        stretched_at: st.is_some(),
        forward_holds: base.is_none() || st.is_some(),
        backward_holds: st.is_none() || base.is_some() || del.is_some(),
        base_witness: base.map(|d| d.bitstring()),
        deleted_witness: del.map(|d| d.bitstring()),
        stretched_witness: st.map(|d| d.bitstring()),
    })
}
