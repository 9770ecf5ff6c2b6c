//! Point visibility graphs of exact embeddings.

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::geometry::{convex_layers, ensure_distinct, point_on_open_segment, Point};
use crate::graph::Graph;

/// Points in the plane; point `i` embeds vertex `i`. Points are pairwise distinct.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Embedding {
    points: Vec<Point>,
}

impl Embedding {
    pub fn new(points: Vec<Point>) -> Result<Self> {
        ensure_distinct(&points)?;
        Ok(Embedding { points })
    }

    pub fn points(&self) -> &[Point] {
        &self.points
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn into_points(self) -> Vec<Point> {
        self.points
    }

    /// Appends a point, rejecting duplicates.
    pub fn push(&mut self, p: Point) -> Result<()> {
        if let Some(first) = self.points.iter().position(|q| *q == p) {
            return Err(Error::DuplicatePoints {
                first,
                second: self.points.len(),
            });
        }
        self.points.push(p);
        Ok(())
    }
}

/// True iff no third point of `points` lies strictly between `points[i]` and `points[j]`.
pub fn sees(points: &[Point], i: usize, j: usize) -> bool {
    (0..points.len()).filter(|&k| k != i && k != j).all(|k| {
        !point_on_open_segment(&points[k], &points[i], &points[j])
            .expect("embedding points are distinct")
    })
}

/// The visibility graph: `{i, j}` is an edge iff no other point lies on the open segment.
pub fn visibility_graph(emb: &Embedding) -> Graph {
    let pts = emb.points();
    let n = pts.len();
    let edges: Vec<(usize, usize)> = (0..n)
        .into_par_iter()
        .flat_map_iter(|i| (i + 1..n).filter(move |&j| sees(pts, i, j)).map(move |j| (i, j)))
        .collect();
    let mut g = Graph::new(n);
    for (u, v) in edges {
        g.add_edge(u, v);
    }
    g
}

/// True iff `emb` is a visibility embedding of `g` under the identity correspondence.
pub fn realizes(emb: &Embedding, g: &Graph) -> Result<bool> {
    if emb.len() != g.vertex_count() {
        return Err(Error::SizeMismatch {
            points: emb.len(),
            vertices: g.vertex_count(),
        });
    }
    Ok(visibility_graph(emb) == *g)
}

/// Checks that `cycle` visits every vertex of `g` once with consecutive vertices adjacent.
pub fn is_hamiltonian_cycle(g: &Graph, cycle: &[usize]) -> bool {
    let n = g.vertex_count();
    if cycle.len() != n || n < 3 {
        return false;
    }
    let mut seen = vec![false; n];
    for &v in cycle {
        if v >= n || seen[v] {
            return false;
        }
        seen[v] = true;
    }
    (0..n).all(|i| g.has_edge(cycle[i], cycle[(i + 1) % n]))
}

/// A Hamiltonian cycle of the visibility graph of a non-path embedding.
///
/// Convex layers are stitched outermost to innermost first; when no
/// stitching closes, an exhaustive backtracking search takes over. The
/// returned cycle is always verified against the graph.
pub fn hamiltonian_cycle(emb: &Embedding) -> Result<Vec<usize>> {
    let g = visibility_graph(emb);
    if g.vertex_count() < 3 || g.is_path() {
        return Err(Error::NotNonPath);
    }
    let layers = convex_layers(emb.points())?;
    let cycle = match stitch_layers(&g, &layers) {
        Some(c) => c,
        None => backtrack_cycle(&g).ok_or(Error::NoHamiltonianCycle)?,
    };
    if !is_hamiltonian_cycle(&g, &cycle) {
        return Err(Error::NoHamiltonianCycle);
    }
    Ok(cycle)
}

const STITCH_BUDGET: usize = 20_000;

/// Walks each layer around its hull (either direction, any rotation) and
/// chains the layers together, outermost first.
pub(crate) fn stitch_layers(g: &Graph, layers: &[Vec<usize>]) -> Option<Vec<usize>> {
    let mut budget = STITCH_BUDGET;
    let mut cycle = Vec::with_capacity(g.vertex_count());
    stitch_from(g, layers, 0, &mut cycle, &mut budget).then_some(cycle)
}

fn layer_walk(layer: &[usize], start: usize, forward: bool) -> impl Iterator<Item = usize> + '_ {
    let len = layer.len();
    (0..len).map(move |s| {
        let idx = if forward { (start + s) % len } else { (start + len - s) % len };
        layer[idx]
    })
}

fn stitch_from(
    g: &Graph,
    layers: &[Vec<usize>],
    depth: usize,
    cycle: &mut Vec<usize>,
    budget: &mut usize,
) -> bool {
    if depth == layers.len() {
        return g.has_edge(cycle[cycle.len() - 1], cycle[0]);
    }
    let layer = &layers[depth];
    let directions: &[bool] = if layer.len() > 2 { &[true, false] } else { &[true] };
    for start in 0..layer.len() {
        for &forward in directions {
            if *budget == 0 {
                return false;
            }
            *budget -= 1;
            let mark = cycle.len();
            let mut ok = true;
            for v in layer_walk(layer, start, forward) {
                if let Some(&last) = cycle.last() {
                    if !g.has_edge(last, v) {
                        ok = false;
                        break;
                    }
                }
                cycle.push(v);
            }
            if ok && stitch_from(g, layers, depth + 1, cycle, budget) {
                return true;
            }
            cycle.truncate(mark);
        }
        if depth == 0 {
            // rotating the outer layer only relabels the cycle start
            break;
        }
    }
    false
}

/// Exhaustive depth-first search for a Hamiltonian cycle starting at vertex 0.
pub(crate) fn backtrack_cycle(g: &Graph) -> Option<Vec<usize>> {
    let n = g.vertex_count();
    if n < 3 {
        return None;
    }
    let adj: Vec<Vec<usize>> = (0..n).map(|v| g.neighbors(v).collect()).collect();
    let mut on_path = vec![false; n];
    let mut path = vec![0];
    on_path[0] = true;
    extend(&adj, &mut path, &mut on_path).then_some(path)
}

fn extend(adj: &[Vec<usize>], path: &mut Vec<usize>, on_path: &mut [bool]) -> bool {
    let n = adj.len();
    let cur = *path.last().expect("path is never empty");
    if path.len() == n {
        return adj[cur].contains(&path[0]);
    }
    // every unvisited vertex needs two usable neighbours (unvisited, current, or the start)
    for v in 0..n {
        if !on_path[v] {
            let usable = adj[v]
                .iter()
                .filter(|&&w| !on_path[w] || w == cur || w == path[0])
                .count();
            if usable < 2 {
                return false;
            }
        }
    }
    let free_degree = |v: usize| adj[v].iter().filter(|&&w| !on_path[w]).count();
    let mut candidates: Vec<usize> = adj[cur].iter().copied().filter(|&w| !on_path[w]).collect();
    candidates.sort_by_key(|&w| (free_degree(w), w));
    for w in candidates {
        on_path[w] = true;
        path.push(w);
        if extend(adj, path, on_path) {
            return true;
        }
        path.pop();
        on_path[w] = false;
    }
    false
}
