use super::BasicPair;
use crate::combinat::{gcd, lcm};
use crate::lattice::CurveId;

/// Connected components of `|E_0|` with their local indices
/// `a / gcd(a, coefficients on the component)`.
pub fn component_indices(p: &BasicPair) -> Vec<(Vec<CurveId>, u32)> {
    let support = p.e0.support();
    let Ok(graph) = p.model.dual_graph(&support, Some(&p.e0)) else {
        return Vec::new();
    };
    graph
        .components()
        .into_iter()
        .map(|comp| {
            let g = comp
                .iter()
                .fold(p.a as u64, |g, &v| gcd(g, graph.vertices[v].coeff.unwrap_or(0).unsigned_abs()));
            let curves = comp.iter().map(|&v| graph.vertices[v].curve).collect();
            (curves, (p.a as u64 / g) as u32)
        })
        .collect()
}

/// Smallest `a'` with `-a'K_S` Cartier: the lcm of the local indices.
pub fn index_of(p: &BasicPair) -> u32 {
    component_indices(p)
        .into_iter()
        .fold(1u64, |acc, (_, q)| lcm(acc, q as u64)) as u32
}

/// Sufficient condition for index exactly `a`: some component has
/// `(C^2) < -a` or a coefficient coprime to `a`.
pub fn certificate_index_is_a(p: &BasicPair) -> bool {
    let a = p.a as i64;
    p.e0.terms().any(|(c, e)| {
        p.model.self_intersection(c).map_or(false, |s| s < -a) || gcd(a as u64, e.unsigned_abs()) == 1
    })
}
