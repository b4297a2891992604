use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{DegreeBound, Graph};

/// One direction bit per edge index: `false` sends the edge from its smaller
/// endpoint to its larger one.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Orientation {
    graph: Graph,
    reversed: Vec<bool>,
}

impl Orientation {
    pub fn new(graph: Graph, reversed: Vec<bool>) -> Result<Self> {
        if reversed.len() != graph.m() {
            return Err(Error::precondition(format!(
                "{} direction bits for {} edges",
                reversed.len(),
                graph.m()
            )));
        }
        Ok(Orientation { graph, reversed })
    }

    /// Every edge from smaller to larger index; acyclic.
    pub fn forward(graph: Graph) -> Self {
        let reversed = vec![false; graph.m()];
        Orientation { graph, reversed }
    }

    /// From `(tail, head)` arcs covering every edge exactly once.
    pub fn from_arcs(graph: Graph, arcs: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let mut reversed = vec![None; graph.m()];
        for (t, h) in arcs {
            let e = graph
                .edge_index(t, h)
                .ok_or_else(|| Error::precondition(format!("{t}->{h} is not an edge")))?;
            if reversed[e].replace(t > h).is_some() {
                return Err(Error::precondition(format!("edge {t}-{h} oriented twice")));
            }
        }
        let reversed = reversed
            .into_iter()
            .enumerate()
            .map(|(e, r)| r.ok_or_else(|| Error::precondition(format!("edge {e} not oriented"))))
            .collect::<Result<Vec<bool>>>()?;
        Ok(Orientation { graph, reversed })
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn reversed(&self) -> &[bool] {
        &self.reversed
    }

    /// `(tail, head)` of edge `e`.
    pub fn arc(&self, e: usize) -> (usize, usize) {
        let (u, v) = self.graph.edges()[e];
        if self.reversed[e] {
            (v, u)
        } else {
            (u, v)
        }
    }

    pub fn arcs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.graph.m()).map(|e| self.arc(e))
    }

    pub fn out_degrees(&self) -> Vec<usize> {
        let mut out = vec![0; self.graph.n()];
        for (t, _) in self.arcs() {
            out[t] += 1;
        }
        out
    }

    pub fn in_degrees(&self) -> Vec<usize> {
        let mut inn = vec![0; self.graph.n()];
        for (_, h) in self.arcs() {
            inn[h] += 1;
        }
        inn
    }

    pub fn out_degree(&self, v: usize) -> usize {
        self.arcs().filter(|&(t, _)| t == v).count()
    }

    pub fn in_degree(&self, v: usize) -> usize {
        self.graph.degree(v) - self.out_degree(v)
    }

    /// `d+(v) <= f(v) - 1` everywhere.
    pub fn respects(&self, f: &DegreeBound) -> bool {
        f.len() == self.graph.n()
            && self
                .out_degrees()
                .iter()
                .zip(&f.0)
                .all(|(&d, &fv)| (d as u64) < fv as u64)
    }

    /// Every edge reversed.
    pub fn reverse_all(&self) -> Self {
        Orientation {
            graph: self.graph.clone(),
            reversed: self.reversed.iter().map(|b| !b).collect(),
        }
    }

    /// `'0'`/`'1'` per edge index.
    pub fn bitstring(&self) -> String {
        self.reversed.iter().map(|&b| if b { '1' } else { '0' }).collect()
    }

    pub fn from_bitstring(graph: Graph, bits: &str) -> Result<Self> {
        let reversed = bits
            .chars()
            .map(|c| match c {
                '0' => Ok(false),
                '1' => Ok(true),
                other => Err(Error::Certificate(format!("invalid direction bit {other:?}"))),
            })
            .collect::<Result<Vec<bool>>>()?;
        Orientation::new(graph, reversed)
    }
}

/// Numbers of spanning Eulerian sub-digraphs with an even and an odd number of edges.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct EulerCounts {
    pub even: u64,
    pub odd: u64,
}

impl EulerCounts {
    pub fn difference(&self) -> i128 {
        self.even as i128 - self.odd as i128
    }

    pub fn total(&self) -> u128 {
        self.even as u128 + self.odd as u128
    }

    pub fn is_at(&self) -> bool {
        self.even != self.odd
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn arcs_and_degrees() {
        let g = Graph::cycle(4);
        let d = Orientation::from_arcs(g.clone(), [(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
        assert_eq!(d.out_degrees(), vec![1; 4]);
        // edges (0,1) (0,3) (1,2) (2,3); only 3->0 runs against index order
        assert_eq!(d.bitstring(), "0100");
        let back = Orientation::from_bitstring(g.clone(), &d.bitstring()).unwrap();
        assert_eq!(back, d);
        assert!(d.respects(&DegreeBound::constant(4, 2)));
        assert!(!d.respects(&DegreeBound::constant(4, 1)));
        assert!(Orientation::from_arcs(g.clone(), [(0, 1)]).is_err());
        assert!(Orientation::from_bitstring(g, "01x0").is_err());
    }
}
