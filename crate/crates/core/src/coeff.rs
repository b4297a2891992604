//! Independent AT oracle through the graph polynomial `prod_{u<v} (x_u - x_v)`:
//! `G` is `f`-AT iff some monomial with every exponent `e_v <= f(v) - 1` has a
//! nonzero coefficient.

use rustc_hash::FxHashMap;

use crate::config::guards;
use crate::error::{Error, Result};
use crate::graph::{DegreeBound, Graph};

const BITS: usize = 6;

fn check(g: &Graph, f: &DegreeBound) -> Result<()> {
    f.check_len(g)?;
    let gd = guards();
    if g.n() > gd.coeff_max_vertices {
        return Err(Error::guard("vertices for coefficient expansion", g.n(), gd.coeff_max_vertices));
    }
    if g.m() > gd.coeff_max_edges {
        return Err(Error::guard("edges for coefficient expansion", g.m(), gd.coeff_max_edges));
    }
    if g.n() * BITS > 64 {
        return Err(Error::guard("vertices for coefficient expansion", g.n(), 64 / BITS));
    }
    Ok(())
}

/// Smallest (by packed exponent vector) admissible monomial with nonzero
/// coefficient, as `(exponents, coefficient)`.
pub fn coefficient_witness(g: &Graph, f: &DegreeBound) -> Result<Option<(Vec<u32>, i64)>> {
    check(g, f)?;
    if f.0.contains(&0) {
        return Ok(None);
    }
    let cap: Vec<u64> = f.0.iter().map(|&x| (x - 1) as u64).collect();
    let exp = |key: u64, v: usize| key >> (BITS * v) & ((1 << BITS) - 1);
    let mut poly: FxHashMap<u64, i64> = FxHashMap::default();
    poly.insert(0, 1);
    for &(u, v) in g.edges() {
        let mut next: FxHashMap<u64, i64> =
            FxHashMap::with_capacity_and_hasher(poly.len() * 2, Default::default());
        for (&key, &c) in &poly {
            if exp(key, u) < cap[u] {
                *next.entry(key + (1 << (BITS * u))).or_insert(0) += c;
            }
            if exp(key, v) < cap[v] {
                *next.entry(key + (1 << (BITS * v))).or_insert(0) -= c;
            }
        }
        next.retain(|_, c| *c != 0);
        poly = next;
        if poly.is_empty() {
            return Ok(None);
        }
    }
    Ok(poly
        .into_iter()
        .min_by_key(|&(k, _)| k)
        .map(|(k, c)| ((0..g.n()).map(|v| exp(k, v) as u32).collect(), c)))
}

pub fn coefficient_oracle(g: &Graph, f: &DegreeBound) -> Result<bool> {
    Ok(coefficient_witness(g, f)?.is_some())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn single_edge() {
        let g = Graph::path(2);
        assert!(!coefficient_oracle(&g, &DegreeBound(vec![1, 1])).unwrap());
        assert_eq!(
            coefficient_witness(&g, &DegreeBound(vec![2, 1])).unwrap(),
            Some((vec![1, 0], 1))
        );
    }

    #[test]
    fn triangle_and_k4() {
        // (x0-x1)(x0-x2)(x1-x2) has x0^2 x1 with coefficient 1.
        let k3 = Graph::complete(3);
        assert!(coefficient_oracle(&k3, &DegreeBound::constant(3, 3)).unwrap());
        assert!(!coefficient_oracle(&k3, &DegreeBound::constant(3, 2)).unwrap());
        assert!(!coefficient_oracle(&Graph::complete(4), &DegreeBound::constant(4, 3)).unwrap());
        assert!(coefficient_oracle(&Graph::cycle(4), &DegreeBound::constant(4, 2)).unwrap());
    }

    #[test]
    fn guard() {
        let g = Graph::complete(11);
        assert!(coefficient_oracle(&g, &DegreeBound::degrees(&g)).unwrap_err().is_guard());
    }
}
