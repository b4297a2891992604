//! Self-contained certificates and their independent re-verification.
//!
//! An orientation certificate claims `(G, h)` is AT and records the Eulerian
//! counts of its orientation; a list certificate claims a list assignment
//! admits no proper colouring. Checking recomputes everything from the graph6
//! string with routines that share no search code with the deciders.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::euler::{eulerian_counts_dp, eulerian_counts_subsets, SUBSET_THRESHOLD};
use crate::graph::{DegreeBound, Graph, LabeledPair};
use crate::graph6::{emit_graph6, parse_graph6};
use crate::orientation::{EulerCounts, Orientation};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OrientationCertificate {
    pub graph6: String,
    pub labels: Vec<u32>,
    /// One direction bit per edge index.
    pub orientation: String,
    #[serde(rename = "EE")]
    pub ee: u64,
    #[serde(rename = "EO")]
    pub eo: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ListCertificate {
    pub graph6: String,
    pub lists: Vec<Vec<u32>>,
    /// When present, list sizes must equal `d - h`.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub labels: Option<Vec<u32>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Certificate {
    Orientation(OrientationCertificate),
    Lists(ListCertificate),
}

/// Recount `(EE, EO)` after checking `d+(v) <= f(v) - 1`.
pub fn verify_orientation(d: &Orientation, f: &DegreeBound) -> Result<EulerCounts> {
    if !d.respects(f) {
        return Err(Error::Certificate(format!(
            "out-degrees {:?} violate bound {:?}",
            d.out_degrees(),
            f.0
        )));
    }
    if d.graph().m() < SUBSET_THRESHOLD {
        eulerian_counts_subsets(d)
    } else {
        eulerian_counts_dp(d)
    }
}

pub fn orientation_certificate(p: &LabeledPair, d: &Orientation) -> Result<OrientationCertificate> {
    if d.graph() != &p.graph {
        return Err(Error::precondition("orientation is of a different graph"));
    }
    let c = verify_orientation(d, &p.degree_bound())?;
    Ok(OrientationCertificate {
        graph6: emit_graph6(&p.graph),
        labels: p.labels.clone(),
        orientation: d.bitstring(),
        ee: c.even,
        eo: c.odd,
    })
}

pub fn check_orientation_certificate(c: &OrientationCertificate) -> Result<EulerCounts> {
    let g = parse_graph6(&c.graph6)?;
    let p = LabeledPair::new(g, c.labels.clone()).map_err(|e| Error::Certificate(e.to_string()))?;
    if c.orientation.len() != p.graph.m() {
        return Err(Error::Certificate(format!(
            "{} direction bits for {} edges",
            c.orientation.len(),
            p.graph.m()
        )));
    }
    let d = Orientation::from_bitstring(p.graph.clone(), &c.orientation)?;
    let counts = verify_orientation(&d, &p.degree_bound())?;
    if (counts.even, counts.odd) != (c.ee, c.eo) {
        return Err(Error::Certificate(format!(
            "claimed (EE, EO) = ({}, {}), recomputed ({}, {})",
            c.ee, c.eo, counts.even, counts.odd
        )));
    }
    if !counts.is_at() {
        return Err(Error::Certificate("EE = EO; not an AT orientation".into()));
    }
    Ok(counts)
}

pub fn list_certificate(p: &LabeledPair, lists: &[Vec<u32>]) -> ListCertificate {
    ListCertificate {
        graph6: emit_graph6(&p.graph),
        lists: lists.to_vec(),
        labels: Some(p.labels.clone()),
    }
}

/// Plain backtracking in vertex order; true if some proper colouring exists.
fn colorable(g: &Graph, lists: &[Vec<u32>], v: usize, chosen: &mut Vec<u32>) -> bool {
    if v == g.n() {
        return true;
    }
    for &c in &lists[v] {
        if g.neighbors(v).filter(|&w| w < v).all(|w| chosen[w] != c) {
            chosen.push(c);
            if colorable(g, lists, v + 1, chosen) {
                return true;
            }
            chosen.pop();
        }
    }
    false
}

pub fn check_list_certificate(c: &ListCertificate) -> Result<()> {
    let g = parse_graph6(&c.graph6)?;
    if c.lists.len() != g.n() {
        return Err(Error::Certificate(format!("{} lists for {} vertices", c.lists.len(), g.n())));
    }
    for (v, l) in c.lists.iter().enumerate() {
        let mut s = l.clone();
        s.sort_unstable();
        s.dedup();
        if s.len() != l.len() {
            return Err(Error::Certificate(format!("list of vertex {v} repeats a colour")));
        }
    }
    if let Some(labels) = &c.labels {
        let p = LabeledPair::new(g.clone(), labels.clone()).map_err(|e| Error::Certificate(e.to_string()))?;
        let f = p.degree_bound();
        for v in 0..g.n() {
            if c.lists[v].len() != f[v] as usize {
                return Err(Error::Certificate(format!(
                    "vertex {v} has {} colours, expected {}",
                    c.lists[v].len(),
                    f[v]
                )));
            }
        }
    }
    if colorable(&g, &c.lists, 0, &mut Vec::with_capacity(g.n())) {
        return Err(Error::Certificate("the lists admit a proper colouring".into()));
    }
    Ok(())
}

pub fn check_certificate(c: &Certificate) -> Result<String> {
    match c {
        Certificate::Orientation(o) => {
            let counts = check_orientation_certificate(o)?;
            Ok(format!("AT orientation confirmed: EE = {}, EO = {}", counts.even, counts.odd))
        }
        Certificate::Lists(l) => {
            check_list_certificate(l)?;
            Ok("list assignment confirmed uncolourable".into())
        }
    }
}

pub fn parse_certificate(text: &str) -> Result<Certificate> {
    Ok(serde_json::from_str(text)?)
}
