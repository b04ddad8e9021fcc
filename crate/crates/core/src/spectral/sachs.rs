use super::CharPoly;
use crate::error::{Error, Result};
use crate::multigraph::{enumerate_simple_cycles_capped, MixedMultigraph, DEFAULT_CYCLE_CAP};
use crate::switching::cycle_weight;
use crate::Scalar;

/// Largest order accepted by [`char_poly_sachs`].
pub const SACHS_MAX_ORDER: usize = 12;

pub fn char_poly_sachs<T: Scalar>(graph: &MixedMultigraph) -> Result<CharPoly<T>> {
    char_poly_sachs_capped(graph, SACHS_MAX_ORDER)
}

/// Characteristic polynomial as a sum over Sachs subgraphs:
/// `c_i = Σ_S (−1)^{r(S)} Π_{C ⊂ S} ν(C)` over spanning sets `S` of `i`
/// vertices whose components are single edges or simple cycles.
///
/// Components sharing a vertex set are aggregated first (`μ` for the single
/// edges of a pair, `Σν` for cycles); then a dynamic program over vertex
/// subsets peels off the component containing the lowest vertex:
/// `f(X) = −Σ_{K ∋ min X, K ⊆ X} g(K)·f(X∖K)` with `f(∅) = 1`, and `c_i`
/// sums `f` over the `i`-subsets.
pub fn char_poly_sachs_capped<T: Scalar>(graph: &MixedMultigraph, max_order: usize) -> Result<CharPoly<T>> {
    let n = graph.order();
    if n > max_order {
        return Err(Error::TooLarge {
            what: "graph order for Sachs expansion",
            actual: n,
            limit: max_order,
        });
    }
    let int = |k: i64| T::from_i64(k).expect("small integer fits the scalar type");

    // aggregated component weights, bucketed by lowest vertex
    let mut components: Vec<Vec<(usize, T)>> = vec![Vec::new(); n];
    let mut add = |mask: usize, w: T| {
        let low = mask.trailing_zeros() as usize;
        match components[low].iter_mut().find(|(m, _)| *m == mask) {
            Some((_, acc)) => *acc = acc.clone() + w,
            None => components[low].push((mask, w)),
        }
    };
    for ((lo, hi), c) in graph.pairs() {
        add((1 << lo) | (1 << hi), int(c.total() as i64));
    }
    for cycle in enumerate_simple_cycles_capped(graph, DEFAULT_CYCLE_CAP)? {
        let nu = cycle_weight(graph, &cycle)?.value();
        add(cycle.vertex_mask() as usize, int(nu));
    }

    let mut f = vec![T::zero(); 1 << n];
    f[0] = T::one();
    let mut coeffs = vec![T::zero(); n + 1];
    coeffs[0] = T::one();
    for mask in 1usize..(1 << n) {
        let low = mask.trailing_zeros() as usize;
        let mut acc = T::zero();
        for (k, w) in &components[low] {
            if k & mask == *k {
                acc = acc + w.clone() * f[mask ^ k].clone();
            }
        }
        f[mask] = -acc;
        let i = mask.count_ones() as usize;
        coeffs[i] = coeffs[i].clone() + f[mask].clone();
    }
    CharPoly::new(coeffs)
}
