//! Canonical form of vertex-labelled graphs by colour refinement and
//! exhaustive individualization. Components are encoded separately and the
//! encodings sorted, so the result is a complete isomorphism invariant.

use std::collections::BTreeMap;
use std::fmt;

use num_rational::BigRational;
use serde::Serialize;

use crate::lattice::DualGraph;
use crate::multiplet::{index_of, BasicPair};

/// Canonical encoding of one connected labelled graph: vertex labels in
/// canonical order followed by the edge list in canonical positions.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct ComponentCode {
    pub labels: Vec<(i64, i64)>,
    pub edges: Vec<(usize, usize)>,
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct GraphCode(pub Vec<ComponentCode>);

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct CanonicalKey {
    pub a: u32,
    pub volume: String,
    pub index: u32,
    pub graph: GraphCode,
}

impl fmt::Display for GraphCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .0
            .iter()
            .map(|c| {
                let labels: Vec<String> = c.labels.iter().map(|(s, e)| format!("{s}:{e}")).collect();
                let edges: Vec<String> = c.edges.iter().map(|(i, j)| format!("{i}-{j}")).collect();
                format!("[{}|{}]", labels.join(","), edges.join(","))
            })
            .collect();
        f.write_str(&parts.join(""))
    }
}

impl fmt::Display for CanonicalKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "a={};vol={};idx={};{}", self.a, self.volume, self.index, self.graph)
    }
}

struct Graph {
    labels: Vec<(i64, i64)>,
    adj: Vec<Vec<usize>>,
}

/// Relabels colours by sorting their signatures, which keeps the process
/// equivariant under vertex permutations.
fn refine(g: &Graph, mut colors: Vec<usize>) -> Vec<usize> {
    loop {
        let sigs: Vec<(usize, Vec<usize>)> = (0..colors.len())
            .map(|v| {
                let mut nb: Vec<usize> = g.adj[v].iter().map(|&u| colors[u]).collect();
                nb.sort_unstable();
                (colors[v], nb)
            })
            .collect();
        let mut distinct: Vec<&(usize, Vec<usize>)> = sigs.iter().collect();
        distinct.sort();
        distinct.dedup();
        let rank: BTreeMap<&(usize, Vec<usize>), usize> = distinct.iter().enumerate().map(|(i, s)| (*s, i)).collect();
        let next: Vec<usize> = sigs.iter().map(|s| rank[s]).collect();
        let before = colors.iter().collect::<std::collections::BTreeSet<_>>().len();
        let after = distinct.len();
        colors = next;
        if after == before {
            return colors;
        }
    }
}

fn encode(g: &Graph, colors: &[usize]) -> ComponentCode {
    // colors is discrete: it is a permutation position
    let n = colors.len();
    let mut order = vec![0; n];
    for v in 0..n {
        order[colors[v]] = v;
    }
    let labels = order.iter().map(|&v| g.labels[v]).collect();
    let mut edges: Vec<(usize, usize)> = (0..n)
        .flat_map(|v| g.adj[v].iter().map(move |&u| (v, u)))
        .filter(|(v, u)| v < u)
        .map(|(v, u)| {
            let (x, y) = (colors[v], colors[u]);
            (x.min(y), x.max(y))
        })
        .collect();
    edges.sort_unstable();
    ComponentCode { labels, edges }
}

fn search(g: &Graph, colors: Vec<usize>, best: &mut Option<ComponentCode>) {
    let colors = refine(g, colors);
    let n = colors.len();
    let mut count = vec![0usize; n];
    for &c in &colors {
        count[c] += 1;
    }
    let Some(target) = (0..n).find(|&c| count[c] > 1) else {
        let code = encode(g, &colors);
        if best.as_ref().map_or(true, |b| code < *b) {
            *best = Some(code);
        }
        return;
    };
    for v in 0..n {
        if colors[v] != target {
            continue;
        }
        // split v off in front of the rest of its cell
        let next: Vec<usize> = colors
            .iter()
            .enumerate()
            .map(|(u, &c)| if c > target || (c == target && u != v) { 2 * c + 1 } else { 2 * c })
            .collect();
        search(g, next, best);
    }
}

fn canonical_component(g: &Graph) -> ComponentCode {
    let mut distinct = g.labels.clone();
    distinct.sort();
    distinct.dedup();
    let colors = g
        .labels
        .iter()
        .map(|l| distinct.binary_search(l).unwrap_or(0))
        .collect();
    let mut best = None;
    search(g, colors, &mut best);
    best.unwrap_or(ComponentCode {
        labels: vec![],
        edges: vec![],
    })
}

/// Canonical code of a dual graph with vertex labels `(self-intersection, coefficient)`.
pub fn canonical_graph(g: &DualGraph) -> GraphCode {
    let mut codes: Vec<ComponentCode> = g
        .components()
        .into_iter()
        .map(|comp| {
            let pos: BTreeMap<usize, usize> = comp.iter().enumerate().map(|(i, &v)| (v, i)).collect();
            let labels = comp
                .iter()
                .map(|&v| (g.vertices[v].self_int, g.vertices[v].coeff.unwrap_or(0)))
                .collect();
            let mut adj = vec![Vec::new(); comp.len()];
            for &(x, y) in &g.edges {
                if let (Some(&i), Some(&j)) = (pos.get(&x), pos.get(&y)) {
                    adj[i].push(j);
                    adj[j].push(i);
                }
            }
            canonical_component(&Graph { labels, adj })
        })
        .collect();
    codes.sort();
    GraphCode(codes)
}

/// Weighted dual graph of the curves contracted to the singular points.
pub fn exceptional_graph(pair: &BasicPair) -> DualGraph {
    pair.model
        .dual_graph(&pair.exceptional_locus(), Some(&pair.e0))
        .expect("exceptional curves are tracked")
}

pub fn canonical_form(pair: &BasicPair, volume: &BigRational) -> CanonicalKey {
    CanonicalKey {
        a: pair.a,
        volume: volume.to_string(),
        index: index_of(pair),
        graph: canonical_graph(&exceptional_graph(pair)),
    }
}
