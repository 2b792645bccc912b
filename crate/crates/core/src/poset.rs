//! Labeled operator graphs and Hasse diagrams with DOT and JSON export.

use std::collections::{BTreeSet, VecDeque};
use std::fmt::{self, Display, Write as _};

use rayon::prelude::*;
use serde_json::{json, Value};

/// Nodes are canonical encodings; an edge `(s, t, Some(i))` means
/// `t = pi_i(s) != s`, and `(s, t, None)` is a strong-order cover `t < s`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PosetGraph {
    pub n: usize,
    pub nodes: Vec<String>,
    pub edges: Vec<(usize, usize, Option<usize>)>,
}

impl PosetGraph {
    pub fn node_count(&self) -> usize {
        self.nodes.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn index_of(&self, node: &str) -> Option<usize> {
        self.nodes.iter().position(|s| s == node)
    }

    /// Edges as `(source, target, label)` strings, sorted.
    pub fn labeled_edges(&self) -> BTreeSet<(String, String, Option<usize>)> {
        self.edges
            .iter()
            .map(|&(s, t, l)| (self.nodes[s].clone(), self.nodes[t].clone(), l))
            .collect()
    }

    /// Multiset of `(out-degree, in-degree)` pairs, a cheap isomorphism invariant.
    pub fn degree_profile(&self) -> Vec<(usize, usize)> {
        let mut deg = vec![(0, 0); self.nodes.len()];
        for &(s, t, _) in &self.edges {
            deg[s].0 += 1;
            deg[t].1 += 1;
        }
        deg.sort();
        deg
    }

    pub fn to_dot(&self) -> String {
        let mut out = String::from("digraph poset {\n");
        for (k, node) in self.nodes.iter().enumerate() {
            let _ = writeln!(out, "  n{k} [label=\"{node}\"];");
        }
        for &(s, t, l) in &self.edges {
            match l {
                Some(i) => {
                    let _ = writeln!(out, "  n{s} -> n{t} [label=\"{i}\"];");
                }
                None => {
                    let _ = writeln!(out, "  n{s} -> n{t};");
                }
            }
        }
        out.push_str("}\n");
        out
    }

    pub fn to_json(&self) -> Value {
        let edges: Vec<Value> = self
            .edges
            .iter()
            .map(|&(s, t, l)| json!([s, t, l]))
            .collect();
        json!({ "n": self.n, "nodes": self.nodes, "edges": edges })
    }
}

impl Display for PosetGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_dot())
    }
}

/// Everything reachable from `root` under the operators `1..n`, sorted.
pub(crate) fn reachable<T, F>(n: usize, root: T, op: F) -> Vec<T>
where
    T: Ord + Clone,
    F: Fn(&T, usize) -> T,
{
    let mut seen = BTreeSet::new();
    let mut queue = VecDeque::new();
    seen.insert(root.clone());
    queue.push_back(root);
    while let Some(x) = queue.pop_front() {
        for i in 1..n {
            let y = op(&x, i);
            if y != x && seen.insert(y.clone()) {
                queue.push_back(y);
            }
        }
    }
    seen.into_iter().collect()
}

/// Labeled graph of strict operator applications on a sorted node list
/// closed under the operators.
pub(crate) fn operator_graph<T, F>(n: usize, nodes: &[T], op: F) -> PosetGraph
where
    T: Ord + Clone + Display + Send + Sync,
    F: Fn(&T, usize) -> T + Send + Sync,
{
    let edges: Vec<(usize, usize, Option<usize>)> = nodes
        .par_iter()
        .enumerate()
        .map(|(s, x)| {
            (1..n)
                .filter_map(|i| {
                    let y = op(x, i);
                    if &y == x {
                        return None;
                    }
                    let t = nodes.binary_search(&y).expect("node set closed under operators");
                    Some((s, t, Some(i)))
                })
                .collect::<Vec<_>>()
        })
        .flatten()
        .collect();
    PosetGraph {
        n,
        nodes: nodes.iter().map(|x| x.to_string()).collect(),
        edges,
    }
}

/// Hasse diagram from a `leq` relation on a sorted node list; edges point
/// from the larger element to the one it covers.
pub(crate) fn hasse_graph<T, F>(n: usize, nodes: &[T], leq: F) -> PosetGraph
where
    T: Display + Sync,
    F: Fn(&T, &T) -> bool + Sync,
{
    let m = nodes.len();
    let rel: Vec<Vec<bool>> = (0..m)
        .into_par_iter()
        .map(|a| (0..m).map(|b| a != b && leq(&nodes[a], &nodes[b])).collect())
        .collect();
    let mut edges = Vec::new();
    for hi in 0..m {
        for lo in 0..m {
            if rel[lo][hi] && !(0..m).any(|c| rel[lo][c] && rel[c][hi]) {
                edges.push((hi, lo, None));
            }
        }
    }
    PosetGraph {
        n,
        nodes: nodes.iter().map(|x| x.to_string()).collect(),
        edges,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn hasse_of_divisibility() {
        let nodes = [1u32, 2, 3, 6];
        let g = hasse_graph(0, &nodes, |a, b| b % a == 0);
        let e: BTreeSet<_> = g.labeled_edges();
        let want: BTreeSet<_> = [("2", "1"), ("3", "1"), ("6", "2"), ("6", "3")]
            .iter()
            .map(|&(a, b)| (a.to_string(), b.to_string(), None))
            .collect();
        assert_eq!(e, want);
    }

    #[test]
    fn operator_graph_and_exports() {
        // halving on 0..4 as a single operator
        let nodes = [0u32, 1, 2, 4];
        let g = operator_graph(2, &nodes, |x, _| x / 2);
        assert_eq!(g.edge_count(), 3);
        assert_eq!(reachable(2, 4u32, |x, _| x / 2), vec![0, 1, 2, 4]);
        let dot = g.to_dot();
        assert!(dot.starts_with("digraph poset {"));
        assert!(dot.contains("n3 -> n2 [label=\"1\"];"));
        let j = g.to_json();
        assert_eq!(j["edges"][0], json!([1, 0, 1]));
        assert_eq!(j["nodes"][3], json!("4"));
        assert_eq!(g.degree_profile(), vec![(0, 1), (1, 0), (1, 1), (1, 1)]);
    }
}
