use std::fmt::Write;

use serde::{Deserialize, Serialize};

use super::CurveId;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphVertex {
    pub curve: CurveId,
    pub name: String,
    pub self_int: i64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub coeff: Option<i64>,
}

/// Weighted dual graph; vertices in creation order, edges as index pairs `i < j`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DualGraph {
    pub vertices: Vec<GraphVertex>,
    pub edges: Vec<(usize, usize)>,
}

impl DualGraph {
    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.edges.iter().filter_map(move |&(i, j)| {
            if i == v {
                Some(j)
            } else if j == v {
                Some(i)
            } else {
                None
            }
        })
    }

    pub fn degree(&self, v: usize) -> usize {
        self.neighbors(v).count()
    }

    /// Connected components as sorted vertex index lists.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let n = self.vertices.len();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for s in 0..n {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            let mut comp = vec![s];
            let mut k = 0;
            while k < comp.len() {
                let v = comp[k];
                k += 1;
                for u in self.neighbors(v) {
                    if !seen[u] {
                        seen[u] = true;
                        comp.push(u);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    /// Whether the graph is a disjoint union of paths.
    pub fn is_chain_union(&self) -> bool {
        let n = self.vertices.len();
        (0..n).all(|v| self.degree(v) <= 2) && self.edges.len() + self.components().len() == n
    }

    pub fn to_dot(&self, graph_name: &str) -> String {
        let mut s = String::new();
        writeln!(s, "graph \"{}\" {{", escape(graph_name)).unwrap();
        for (i, v) in self.vertices.iter().enumerate() {
            let label = match v.coeff {
                Some(c) => format!("{}\\n(s={}, c={})", escape(&v.name), v.self_int, c),
                None => format!("{}\\n(s={})", escape(&v.name), v.self_int),
            };
            writeln!(s, "  v{i} [label=\"{label}\"];").unwrap();
        }
        for &(i, j) in &self.edges {
            writeln!(s, "  v{i} -- v{j};").unwrap();
        }
        s.push_str("}\n");
        s
    }
}

fn escape(s: &str) -> String {
    s.replace('\\', "\\\\").replace('"', "\\\"")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn vertex(id: u32, s: i64, c: i64) -> GraphVertex {
        GraphVertex {
            curve: CurveId(id),
            name: format!("C{id}"),
            self_int: s,
            coeff: Some(c),
        }
    }

    #[test]
    fn dot_is_stable() {
        let g = DualGraph {
            vertices: vec![vertex(0, -6, 3), vertex(1, -2, 1)],
            edges: vec![(0, 1)],
        };
        let dot = g.to_dot("B4");
        assert_eq!(
            dot,
            "graph \"B4\" {\n  v0 [label=\"C0\\n(s=-6, c=3)\"];\n  v1 [label=\"C1\\n(s=-2, c=1)\"];\n  v0 -- v1;\n}\n"
        );
        assert_eq!(dot, g.clone().to_dot("B4"));
    }

    #[test]
    fn components_and_chains() {
        let g = DualGraph {
            vertices: (0..4).map(|i| vertex(i, -2, 1)).collect(),
            edges: vec![(0, 2), (2, 3)],
        };
        assert_eq!(g.components(), vec![vec![0, 2, 3], vec![1]]);
        assert!(g.is_chain_union());
        let star = DualGraph {
            vertices: (0..4).map(|i| vertex(i, -2, 1)).collect(),
            edges: vec![(0, 1), (0, 2), (0, 3)],
        };
        assert!(!star.is_chain_union());
    }
}
