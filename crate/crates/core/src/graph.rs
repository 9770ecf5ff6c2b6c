//! Simple undirected graphs and the structural queries used throughout.

use std::collections::{BTreeSet, VecDeque};

use crate::error::{Error, Result};

/// Loop-free undirected graph on vertices `0..vertex_count`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Graph {
    adj: Vec<BTreeSet<usize>>,
}

impl Graph {
    pub fn new(vertex_count: usize) -> Self {
        Graph {
            adj: vec![BTreeSet::new(); vertex_count],
        }
    }

    /// Builds a graph, rejecting loops, out-of-range endpoints and repeated pairs.
    pub fn from_edges(vertex_count: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Graph::new(vertex_count);
        for (i, &(u, v)) in edges.iter().enumerate() {
            if u == v {
                return Err(Error::InvalidGraph(format!("edge {i}: self-loop at vertex {u}")));
            }
            if u >= vertex_count || v >= vertex_count {
                return Err(Error::InvalidGraph(format!(
                    "edge {i}: ({u}, {v}) out of range for {vertex_count} vertices"
                )));
            }
            if !g.add_edge(u, v) {
                return Err(Error::InvalidGraph(format!("edge {i}: duplicate edge ({u}, {v})")));
            }
        }
        Ok(g)
    }

    pub fn complete(n: usize) -> Self {
        let mut g = Graph::new(n);
        for u in 0..n {
            for v in u + 1..n {
                g.add_edge(u, v);
            }
        }
        g
    }

    pub fn path(n: usize) -> Self {
        let mut g = Graph::new(n);
        for v in 1..n {
            g.add_edge(v - 1, v);
        }
        g
    }

    pub fn cycle(n: usize) -> Self {
        let mut g = Graph::path(n);
        if n >= 3 {
            g.add_edge(n - 1, 0);
        }
        g
    }

    /// Complete bipartite `K_{a,b}`; the first `a` vertices form one side.
    pub fn complete_bipartite(a: usize, b: usize) -> Self {
        let mut g = Graph::new(a + b);
        for u in 0..a {
            for v in a..a + b {
                g.add_edge(u, v);
            }
        }
        g
    }

    pub fn vertex_count(&self) -> usize {
        self.adj.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(BTreeSet::len).sum::<usize>() / 2
    }

    /// Adds `{u, v}`; returns false if it was already present.
    ///
    /// Panics on loops or out-of-range endpoints.
    pub fn add_edge(&mut self, u: usize, v: usize) -> bool {
        assert!(u != v, "self-loop at {u}");
        assert!(u < self.adj.len() && v < self.adj.len(), "edge ({u}, {v}) out of range");
        let fresh = self.adj[u].insert(v);
        self.adj[v].insert(u);
        fresh
    }

    pub fn add_vertex(&mut self) -> usize {
        self.adj.push(BTreeSet::new());
        self.adj.len() - 1
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj.get(u).is_some_and(|s| s.contains(&v))
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.adj[v].iter().copied()
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, nbrs)| nbrs.range(u + 1..).map(move |&v| (u, v)))
            .collect()
    }

    /// Non-adjacent pairs `(u, v)` with `u < v`, in lexicographic order.
    pub fn non_edges(&self) -> Vec<(usize, usize)> {
        let n = self.vertex_count();
        (0..n)
            .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
            .filter(|&(u, v)| !self.has_edge(u, v))
            .collect()
    }

    pub fn complement(&self) -> Graph {
        let n = self.vertex_count();
        let mut g = Graph::new(n);
        for (u, v) in self.non_edges() {
            g.add_edge(u, v);
        }
        g
    }

    /// Subgraph induced by `vertices`, relabelled `0..vertices.len()` in the given order.
    pub fn induced(&self, vertices: &[usize]) -> Graph {
        let mut g = Graph::new(vertices.len());
        for (i, &u) in vertices.iter().enumerate() {
            for (j, &v) in vertices.iter().enumerate().skip(i + 1) {
                if self.has_edge(u, v) {
                    g.add_edge(i, j);
                }
            }
        }
        g
    }

    pub fn is_universal(&self, v: usize) -> bool {
        self.degree(v) + 1 == self.vertex_count()
    }

    pub fn universal_vertices(&self) -> Vec<usize> {
        (0..self.vertex_count()).filter(|&v| self.is_universal(v)).collect()
    }

    pub fn is_complete(&self) -> bool {
        (0..self.vertex_count()).all(|v| self.is_universal(v))
    }

    pub fn min_degree(&self) -> Option<usize> {
        (0..self.vertex_count()).map(|v| self.degree(v)).min()
    }

    /// Breadth-first distances from `source`; `None` marks unreachable vertices.
    pub fn bfs(&self, source: usize) -> Vec<Option<usize>> {
        let mut dist = vec![None; self.vertex_count()];
        dist[source] = Some(0);
        let mut queue = VecDeque::from([source]);
        while let Some(u) = queue.pop_front() {
            let d = dist[u].unwrap_or(0);
            for v in self.neighbors(u) {
                if dist[v].is_none() {
                    dist[v] = Some(d + 1);
                    queue.push_back(v);
                }
            }
        }
        dist
    }

    pub fn is_connected(&self) -> bool {
        self.vertex_count() == 0 || self.bfs(0).iter().all(Option::is_some)
    }

    /// If the graph is a simple path, the vertices from one end to the other.
    /// The single vertex and the empty graph count as paths.
    pub fn path_order(&self) -> Option<Vec<usize>> {
        let n = self.vertex_count();
        if n == 0 {
            return Some(Vec::new());
        }
        if self.edge_count() != n - 1 || (0..n).any(|v| self.degree(v) > 2) {
            return None;
        }
        let start = (0..n).find(|&v| self.degree(v) <= 1)?;
        let mut order = vec![start];
        let mut prev = usize::MAX;
        let mut cur = start;
        while let Some(next) = self.neighbors(cur).find(|&w| w != prev) {
            prev = cur;
            cur = next;
            order.push(cur);
            if order.len() > n {
                return None;
            }
        }
        (order.len() == n).then_some(order)
    }

    pub fn is_path(&self) -> bool {
        self.path_order().is_some()
    }

    /// Largest shortest-path distance. Requires at least one vertex.
    pub fn diameter(&self) -> Result<Diameter> {
        if self.vertex_count() == 0 {
            return Err(Error::Domain("diameter of the empty graph".into()));
        }
        let mut best = 0;
        for s in 0..self.vertex_count() {
            for d in self.bfs(s) {
                match d {
                    Some(d) => best = best.max(d),
                    None => return Ok(Diameter::Infinite),
                }
            }
        }
        Ok(Diameter::Finite(best))
    }

    /// Appends `count` vertices adjacent to every vertex, including each other.
    pub fn add_universal(&self, count: usize) -> Graph {
        let mut g = self.clone();
        for _ in 0..count {
            let v = g.add_vertex();
            for u in 0..v {
                g.add_edge(u, v);
            }
        }
        g
    }

    /// Degree sequence in non-increasing order.
    pub fn degree_sequence(&self) -> Vec<usize> {
        let mut seq: Vec<usize> = (0..self.vertex_count()).map(|v| self.degree(v)).collect();
        seq.sort_unstable_by(|a, b| b.cmp(a));
        seq
    }
}

/// Diameter of a graph; disconnected graphs have no finite diameter.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Diameter {
    Finite(usize),
    Infinite,
}
