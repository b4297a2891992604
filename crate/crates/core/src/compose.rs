//! Gluing two oriented graphs at a vertex.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::euler::eulerian_counts;
use crate::graph::Graph;
use crate::orientation::{EulerCounts, Orientation};

#[derive(Clone, Debug)]
pub struct Glued {
    pub orientation: Orientation,
    pub counts: EulerCounts,
    /// Vertex maps from each part into the glued graph.
    pub map1: Vec<usize>,
    pub map2: Vec<usize>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ProductCheck {
    pub left: i128,
    pub right: i128,
    pub glued: i128,
}

/// Identify `x1` of the first graph with `x2` of the second. The first graph
/// keeps its labels; the second's other vertices follow in order. No directed
/// cycle meets both sides, so `EE - EO` of the union is the product of the
/// parts' differences; this is asserted.
pub fn compose_cutvertex(d1: &Orientation, d2: &Orientation, x1: usize, x2: usize) -> Result<Glued> {
    let (g1, g2) = (d1.graph(), d2.graph());
    g1.check_vertex(x1)?;
    g2.check_vertex(x2)?;
    let n1 = g1.n();
    let map1: Vec<usize> = (0..n1).collect();
    let map2: Vec<usize> = (0..g2.n())
        .map(|v| match v.cmp(&x2) {
            std::cmp::Ordering::Equal => x1,
            std::cmp::Ordering::Less => n1 + v,
            std::cmp::Ordering::Greater => n1 + v - 1,
        })
        .collect();
    let arcs: Vec<(usize, usize)> = d1
        .arcs()
        .chain(d2.arcs().map(|(t, h)| (map2[t], map2[h])))
        .collect();
    let g = Graph::from_edges(n1 + g2.n() - 1, arcs.iter().copied())
        .map_err(|e| Error::precondition(format!("gluing failed: {e}")))?;
    let orientation = Orientation::from_arcs(g, arcs)?;
    let counts = eulerian_counts(&orientation)?;
    let check = ProductCheck {
        left: eulerian_counts(d1)?.difference(),
        right: eulerian_counts(d2)?.difference(),
        glued: counts.difference(),
    };
    if check.left * check.right != check.glued {
        return Err(Error::Postcondition(format!("product identity fails: {check:?}")));
    }
    Ok(Glued {
        orientation,
        counts,
        map1,
        map2,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c4() -> Orientation {
        Orientation::from_arcs(Graph::cycle(4), [(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap()
    }

    #[test]
    fn squares() {
        let g = compose_cutvertex(&c4(), &c4(), 0, 2).unwrap();
        assert_eq!(g.orientation.graph().n(), 7);
        assert_eq!(g.counts.difference(), 4);
        assert_eq!(g.map2, vec![4, 5, 0, 6]);
    }

    #[test]
    fn zero_factor_and_acyclic() {
        let c3 = Orientation::from_arcs(Graph::cycle(3), [(0, 1), (1, 2), (2, 0)]).unwrap();
        assert_eq!(compose_cutvertex(&c3, &c4(), 1, 1).unwrap().counts.difference(), 0);
        let a = Orientation::forward(Graph::complete(3));
        let g = compose_cutvertex(&a, &a, 2, 0).unwrap();
        assert_eq!(g.counts, EulerCounts { even: 1, odd: 0 });
    }
}
