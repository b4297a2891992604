use serde::Serialize;

use crate::classify::find_at_witness_subgraph;
use crate::error::{Error, Result};
use crate::graph::LabeledPair;
use crate::search::is_pair_at;

use super::{bad_lists_for_pair, is_f_choosable, is_f_paintable, ListAssignment};

/// AT, choosability and paintability of one `(G, h_x)` pair.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EquivalenceReport {
    pub at: bool,
    pub choosable: bool,
    pub paintable: bool,
    /// Reversal bitstring of an AT orientation from the constructive witness.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub orientation: Option<String>,
    /// Constructive bad lists when not AT.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub bad_lists: Option<ListAssignment>,
    /// Bad lists found by the choosability search.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub searched_lists: Option<ListAssignment>,
}

impl EquivalenceReport {
    pub fn agree(&self) -> bool {
        self.at == self.choosable && self.choosable == self.paintable
    }
}

/// All three verdicts with certificates; errors if they disagree.
pub fn equivalence_check_hx(p: &LabeledPair) -> Result<EquivalenceReport> {
    let report = equivalence_verdicts(p)?;
    if !report.agree() {
        return Err(Error::Postcondition(format!(
            "verdicts differ: AT {}, choosable {}, paintable {}",
            report.at, report.choosable, report.paintable
        )));
    }
    Ok(report)
}

pub(crate) fn equivalence_verdicts(p: &LabeledPair) -> Result<EquivalenceReport> {
    p.single_mark()?;
    let f = p.degree_bound();
    let at = is_pair_at(p)?.is_some();
    let searched_lists = is_f_choosable(&p.graph, &f)?;
    let paintable = is_f_paintable(&p.graph, &f)?;
    let (orientation, bad_lists) = if !p.graph.is_connected() {
        (None, None)
    } else if at {
        (Some(find_at_witness_subgraph(p)?.orientation.bitstring()), None)
    } else {
        (None, Some(bad_lists_for_pair(p)?))
    };
    Ok(EquivalenceReport {
        at,
        choosable: searched_lists.is_none(),
        paintable,
        orientation,
        bad_lists,
        searched_lists,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Graph;

    #[test]
    fn c5_and_k4_minus_edge() {
        let r = equivalence_check_hx(&LabeledPair::marked(Graph::cycle(5), 0).unwrap()).unwrap();
        assert_eq!((r.at, r.choosable, r.paintable), (false, false, false));
        assert!(r.bad_lists.is_some() && r.searched_lists.is_some());
        let k4 = Graph::complete(4);
        let g = k4.without_edge(k4.edge_index(1, 2).unwrap()).unwrap();
        let r = equivalence_check_hx(&LabeledPair::marked(g, 0).unwrap()).unwrap();
        assert_eq!((r.at, r.choosable, r.paintable), (true, true, true));
        assert!(r.orientation.is_some());
    }
}
