use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Graph, LabeledPair};
use crate::patterns::{detect_t_graph, moser_spindle_map, TGraphWitness};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum DVerdict {
    NotMember,
    /// Apex paths all odd: stretchings of `K4`.
    TGraphOdd,
    /// Apex paths all even: stretchings of the subdivided `K4`.
    TGraphEven,
    MoserSpindle,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DMembership {
    pub verdict: DVerdict,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub t_graph: Option<TGraphWitness>,
    /// `map[v]` is the matching vertex of the reference spindle.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub spindle_map: Option<Vec<usize>>,
}

impl DMembership {
    pub fn not_member() -> Self {
        DMembership {
            verdict: DVerdict::NotMember,
            t_graph: None,
            spindle_map: None,
        }
    }

    pub fn is_member(&self) -> bool {
        self.verdict != DVerdict::NotMember
    }
}

/// Closed-form test: a T-graph with apex `x` whose apex paths share one
/// parity, or the Moser spindle with `x` of degree 4. No connectivity check.
pub fn membership_in_d(g: &Graph, x: usize) -> DMembership {
    if let Some(w) = detect_t_graph(g, x) {
        let parity = w.path_lengths[0] % 2;
        if w.path_lengths.iter().all(|l| l % 2 == parity) {
            let verdict = if parity == 1 { DVerdict::TGraphOdd } else { DVerdict::TGraphEven };
            return DMembership {
                verdict,
                t_graph: Some(w),
                spindle_map: None,
            };
        }
    }
    if let Some(map) = moser_spindle_map(g, x) {
        return DMembership {
            verdict: DVerdict::MoserSpindle,
            t_graph: None,
            spindle_map: Some(map),
        };
    }
    DMembership::not_member()
}

/// Membership of a 2-connected `(G, h_x)` pair.
pub fn membership_d(p: &LabeledPair) -> Result<DMembership> {
    let x = p.single_mark()?;
    if !p.graph.is_two_connected() {
        return Err(Error::NotTwoConnected);
    }
    Ok(membership_in_d(&p.graph, x))
}
