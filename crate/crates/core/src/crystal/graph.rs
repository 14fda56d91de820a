use std::collections::{HashMap, VecDeque};
use std::fmt::Write as _;

use serde::Serialize;
use thiserror::Error;

use super::CrystalElt;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GraphError {
    #[error("graph was truncated at {0} nodes; connectivity is undecidable")]
    Truncated(usize),
}

/// Nodes are display strings; an edge `(a, i, b)` means `f̃_i a = b`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CrystalGraph {
    pub nodes: Vec<String>,
    pub edges: Vec<(usize, usize, usize)>,
    pub truncated: bool,
}

impl CrystalGraph {
    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("graph serializes")
    }

    pub fn to_dot(&self) -> String {
        const COLORS: [&str; 3] = ["red", "blue", "darkgreen"];
        let mut s = String::from("digraph crystal {\n");
        for (k, n) in self.nodes.iter().enumerate() {
            let _ = writeln!(s, "  n{k} [label=\"{}\"];", n.replace('"', "\\\""));
        }
        for &(a, i, b) in &self.edges {
            let _ = writeln!(s, "  n{a} -> n{b} [label=\"{i}\", color={}];", COLORS[i]);
        }
        s.push_str("}\n");
        s
    }
}

/// Breadth-first closure of `seeds` under `f̃_i`, `ẽ_i` for `i ∈ ops`.
/// Stops admitting new nodes once `node_cap` is reached and flags the result.
pub fn bfs_graph<E: CrystalElt>(seeds: &[E], ops: &[usize], node_cap: usize) -> CrystalGraph {
    assert!(node_cap >= 1, "node_cap must be positive");
    let mut index: HashMap<E, usize> = HashMap::new();
    let mut order: Vec<E> = Vec::new();
    let mut queue = VecDeque::new();
    let mut truncated = false;

    let admit = |b: &E, index: &mut HashMap<E, usize>, order: &mut Vec<E>, queue: &mut VecDeque<usize>| {
        if let Some(&k) = index.get(b) {
            return Some(k);
        }
        if order.len() >= node_cap {
            return None;
        }
        let k = order.len();
        index.insert(b.clone(), k);
        order.push(b.clone());
        queue.push_back(k);
        Some(k)
    };

    for s in seeds {
        if admit(s, &mut index, &mut order, &mut queue).is_none() {
            truncated = true;
        }
    }
    let mut edges = Vec::new();
    while let Some(k) = queue.pop_front() {
        let b = order[k].clone();
        for &i in ops {
            if let Some(fb) = b.f(i) {
                match admit(&fb, &mut index, &mut order, &mut queue) {
                    Some(t) => edges.push((k, i, t)),
                    None => truncated = true,
                }
            }
            if let Some(eb) = b.e(i) {
                match admit(&eb, &mut index, &mut order, &mut queue) {
                    Some(t) => edges.push((t, i, k)),
                    None => truncated = true,
                }
            }
        }
    }
    edges.sort_unstable();
    edges.dedup();
    CrystalGraph { nodes: order.iter().map(|b| b.to_string()).collect(), edges, truncated }
}

pub fn is_connected(g: &CrystalGraph) -> Result<bool, GraphError> {
    if g.truncated {
        return Err(GraphError::Truncated(g.nodes.len()));
    }
    let n = g.nodes.len();
    if n == 0 {
        return Ok(true);
    }
    let mut adj = vec![Vec::new(); n];
    for &(a, _, b) in &g.edges {
        adj[a].push(b);
        adj[b].push(a);
    }
    let mut seen = vec![false; n];
    let mut stack = vec![0];
    seen[0] = true;
    let mut count = 1;
    while let Some(v) = stack.pop() {
        for &w in &adj[v] {
            if !seen[w] {
                seen[w] = true;
                count += 1;
                stack.push(w);
            }
        }
    }
    Ok(count == n)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(n: usize, edges: Vec<(usize, usize, usize)>) -> CrystalGraph {
        CrystalGraph { nodes: (0..n).map(|k| k.to_string()).collect(), edges, truncated: false }
    }

    #[test]
    fn connectivity_basics() {
        assert_eq!(is_connected(&g(1, vec![])), Ok(true));
        assert_eq!(is_connected(&g(2, vec![])), Ok(false));
        assert_eq!(is_connected(&g(3, vec![(2, 1, 0), (1, 0, 2)])), Ok(true));
        let mut t = g(2, vec![(0, 0, 1)]);
        t.truncated = true;
        assert_eq!(is_connected(&t), Err(GraphError::Truncated(2)));
    }

    #[test]
    fn dot_and_json_shapes() {
        let x = g(2, vec![(0, 2, 1)]);
        assert_eq!(x.to_json(), r#"{"nodes":["0","1"],"edges":[[0,2,1]],"truncated":false}"#);
        let dot = x.to_dot();
        assert!(dot.contains("n0 -> n1 [label=\"2\", color=darkgreen]"));
    }
}
