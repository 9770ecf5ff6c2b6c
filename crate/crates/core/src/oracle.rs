//! Exhaustive solvers used as ground truth for the reductions.
//!
//! Every solver works on 64-bit adjacency masks and is exact. Deletion
//! problems whose target property is hereditary (acyclicity, F-freeness) are
//! decided by enumerating kept vertex sets of exactly `n - k` vertices in
//! lexicographic order; the first hit is then shrunk to an inclusion-minimal
//! deletion set. Every positive answer carries a certificate that is checked
//! against the definition before it is returned.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::family::Family;
use crate::graph::Graph;

/// Largest vertex count the mask-based solvers accept.
pub const MASK_LIMIT: usize = 64;
/// Largest vertex count for solvers that enumerate all bipartitions.
pub const PARTITION_LIMIT: usize = 30;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Certificate {
    Vertices(Vec<usize>),
    Path(Vec<usize>),
    Partition { left: Vec<usize>, right: Vec<usize> },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Witness {
    pub answer: bool,
    pub certificate: Option<Certificate>,
}

impl Witness {
    pub fn yes(certificate: Certificate) -> Self {
        Witness {
            answer: true,
            certificate: Some(certificate),
        }
    }

    pub fn no() -> Self {
        Witness {
            answer: false,
            certificate: None,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DominatingWitness {
    pub set: Vec<usize>,
    pub verified: bool,
}

/// Adjacency bitmasks of a graph with at most 64 vertices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Masks {
    n: usize,
    adj: Vec<u64>,
}

impl Masks {
    pub fn new(g: &Graph) -> Result<Self> {
        Masks::with_limit(g, MASK_LIMIT)
    }

    fn with_limit(g: &Graph, limit: usize) -> Result<Self> {
        let n = g.vertex_count();
        if n > limit {
            return Err(Error::TooLarge { vertices: n, limit });
        }
        let adj = (0..n)
            .map(|v| g.neighbors(v).fold(0u64, |m, w| m | 1 << w))
            .collect();
        Ok(Masks { n, adj })
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    pub fn full(&self) -> u64 {
        full_mask(self.n)
    }

    pub fn adj(&self, v: usize) -> u64 {
        self.adj[v]
    }

    /// True iff the subgraph induced by `keep` has no cycle.
    pub fn is_forest(&self, keep: u64) -> bool {
        let vertices = keep.count_ones() as usize;
        let edges: usize = bits(keep).map(|v| (self.adj[v] & keep).count_ones() as usize).sum::<usize>() / 2;
        edges + self.components(keep) == vertices
    }

    pub fn components(&self, keep: u64) -> usize {
        let mut unseen = keep;
        let mut count = 0;
        while unseen != 0 {
            count += 1;
            let mut frontier = unseen & unseen.wrapping_neg();
            unseen &= !frontier;
            while frontier != 0 {
                let v = frontier.trailing_zeros() as usize;
                frontier &= frontier - 1;
                let fresh = self.adj[v] & unseen;
                unseen &= !fresh;
                frontier |= fresh;
            }
        }
        count
    }

    /// Number of edges with exactly one endpoint in `side`.
    pub fn cut(&self, side: u64) -> usize {
        let other = self.full() & !side;
        bits(side).map(|v| (self.adj[v] & other).count_ones() as usize).sum()
    }

    pub fn dominates(&self, set: u64) -> bool {
        let covered = bits(set).fold(set, |acc, v| acc | self.adj[v]);
        covered == self.full()
    }

    /// True iff some induced subgraph on vertices of `allowed` is isomorphic to `pattern`.
    pub fn contains_induced(&self, allowed: u64, pattern: &Masks) -> bool {
        let h = pattern.n;
        if h == 0 {
            return true;
        }
        if h > allowed.count_ones() as usize {
            return false;
        }
        // pattern vertices by descending degree, so the most constrained go first
        let mut order: Vec<usize> = (0..h).collect();
        order.sort_by_key(|&v| std::cmp::Reverse(pattern.adj[v].count_ones()));
        let mut image = vec![0usize; h];
        self.embed_from(allowed, pattern, &order, &mut image, 0, 0)
    }

    fn embed_from(
        &self,
        allowed: u64,
        pattern: &Masks,
        order: &[usize],
        image: &mut [usize],
        used: u64,
        depth: usize,
    ) -> bool {
        if depth == order.len() {
            return true;
        }
        let hv = order[depth];
        let need = pattern.adj[hv].count_ones();
        let mut candidates = allowed & !used;
        for j in 0..depth {
            let gv = image[j];
            if pattern.adj[hv] >> order[j] & 1 == 1 {
                candidates &= self.adj[gv];
            } else {
                candidates &= !self.adj[gv];
            }
        }
        for c in bits(candidates) {
            if (self.adj[c] & allowed).count_ones() < need {
                continue;
            }
            image[depth] = c;
            if self.embed_from(allowed, pattern, order, image, used | 1 << c, depth + 1) {
                return true;
            }
        }
        false
    }
}

pub(crate) fn full_mask(n: usize) -> u64 {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

/// Indices of set bits, ascending.
pub fn bits(mut m: u64) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if m == 0 {
            None
        } else {
            let v = m.trailing_zeros() as usize;
            m &= m - 1;
            Some(v)
        }
    })
}

pub(crate) fn to_vec(m: u64) -> Vec<usize> {
    bits(m).collect()
}

/// Visits the `r`-subsets of `pool` (given ascending) in lexicographic order
/// until `visit` returns true; returns that subset as a mask.
pub fn first_combination(pool: &[usize], r: usize, mut visit: impl FnMut(u64) -> bool) -> Option<u64> {
    let n = pool.len();
    if r > n {
        return None;
    }
    let mut idx: Vec<usize> = (0..r).collect();
    loop {
        let mask = idx.iter().fold(0u64, |m, &i| m | 1 << pool[i]);
        if visit(mask) {
            return Some(mask);
        }
        // advance to the next combination
        let mut i = r;
        while i > 0 && idx[i - 1] == i - 1 + n - r {
            i -= 1;
        }
        if i == 0 {
            return None;
        }
        idx[i - 1] += 1;
        for j in i..r {
            idx[j] = idx[j - 1] + 1;
        }
    }
}

/// Deletion search for a hereditary property: find a kept set of `n - min(k, n)`
/// vertices satisfying `good`, then shrink the deletion set greedily.
fn hereditary_deletion(n: usize, k: usize, good: impl Fn(u64) -> bool) -> Option<Vec<usize>> {
    let all: Vec<usize> = (0..n).collect();
    let keep_size = n - k.min(n);
    let mut keep = first_combination(&all, keep_size, &good)?;
    for v in 0..n {
        if keep >> v & 1 == 0 && good(keep | 1 << v) {
            keep |= 1 << v;
        }
    }
    Some(to_vec(full_mask(n) & !keep))
}

/// Feedback Vertex Set: is there a set of at most `k` vertices meeting every cycle?
pub fn solve_fvs(g: &Graph, k: usize) -> Result<Witness> {
    let m = Masks::new(g)?;
    Ok(match hereditary_deletion(m.n, k, |keep| m.is_forest(keep)) {
        Some(x) => {
            assert!(verify_fvs(g, &x), "FVS certificate failed verification");
            Witness::yes(Certificate::Vertices(x))
        }
        None => Witness::no(),
    })
}

pub fn verify_fvs(g: &Graph, deleted: &[usize]) -> bool {
    let Ok(m) = Masks::new(g) else { return false };
    let removed = deleted.iter().fold(0u64, |acc, &v| acc | 1 << v);
    m.is_forest(m.full() & !removed)
}

/// Longest Induced Path: is there an induced path with at least `k` edges?
pub fn solve_lip(g: &Graph, k: usize) -> Result<Witness> {
    let m = Masks::new(g)?;
    let mut path = Vec::new();
    for s in 0..m.n {
        path.clear();
        path.push(s);
        if grow_induced_path(&m, &mut path, 1 << s, k) {
            assert!(is_induced_path(g, &path), "induced path certificate failed verification");
            return Ok(Witness::yes(Certificate::Path(path)));
        }
    }
    Ok(Witness::no())
}

/// Number of edges of a longest induced path (`None` for the empty graph).
pub fn longest_induced_path(g: &Graph) -> Result<Option<usize>> {
    let mut best = None;
    for k in 0..=g.vertex_count() {
        if solve_lip(g, k)?.answer {
            best = Some(k);
        } else {
            break;
        }
    }
    Ok(best)
}

/// `blocked` holds the path vertices and everything adjacent to an inner path vertex.
fn grow_induced_path(m: &Masks, path: &mut Vec<usize>, blocked: u64, k: usize) -> bool {
    if path.len() > k {
        return true;
    }
    let last = *path.last().expect("non-empty path");
    let candidates = m.adj[last] & !blocked;
    for w in bits(candidates) {
        path.push(w);
        if grow_induced_path(m, path, blocked | m.adj[last] | 1 << w, k) {
            return true;
        }
        path.pop();
    }
    false
}

pub fn is_induced_path(g: &Graph, path: &[usize]) -> bool {
    let n = g.vertex_count();
    let mut seen = vec![false; n];
    for &v in path {
        if v >= n || seen[v] {
            return false;
        }
        seen[v] = true;
    }
    path.iter().enumerate().all(|(i, &u)| {
        path.iter()
            .enumerate()
            .skip(i + 1)
            .all(|(j, &v)| g.has_edge(u, v) == (j == i + 1))
    })
}

/// Bisection: is there a balanced bipartition cutting at most `k` edges?
pub fn solve_bisection(g: &Graph, k: usize) -> Result<Witness> {
    let m = Masks::new(g)?;
    let n = m.n;
    if n % 2 == 1 {
        return Err(Error::OddVertexCount(n));
    }
    if n == 0 {
        return Ok(Witness::yes(Certificate::Partition {
            left: vec![],
            right: vec![],
        }));
    }
    // vertex 0 is always on the left side
    let rest: Vec<usize> = (1..n).collect();
    let hit = first_combination(&rest, n / 2 - 1, |side| m.cut(side | 1) <= k);
    Ok(match hit {
        Some(side) => {
            let left = side | 1;
            Witness::yes(Certificate::Partition {
                left: to_vec(left),
                right: to_vec(m.full() & !left),
            })
        }
        None => Witness::no(),
    })
}

/// Max Cut: is there a bipartition cutting at least `k` edges?
pub fn solve_max_cut(g: &Graph, k: usize) -> Result<Witness> {
    let m = Masks::with_limit(g, PARTITION_LIMIT)?;
    let n = m.n;
    if k == 0 {
        return Ok(Witness::yes(Certificate::Partition {
            left: (0..n).collect(),
            right: vec![],
        }));
    }
    if n < 2 {
        return Ok(Witness::no());
    }
    // vertex 0 is on the left; enumerate the others in counting order
    for rest in 0..1u64 << (n - 1) {
        let left = 1 | rest << 1;
        if m.cut(left) >= k {
            return Ok(Witness::yes(Certificate::Partition {
                left: to_vec(left),
                right: to_vec(m.full() & !left),
            }));
        }
    }
    Ok(Witness::no())
}

/// Number of edges between `left` and the remaining vertices.
pub fn cut_size(g: &Graph, left: &[usize]) -> usize {
    let mut in_left = vec![false; g.vertex_count()];
    for &v in left {
        in_left[v] = true;
    }
    g.edges().into_iter().filter(|&(u, v)| in_left[u] != in_left[v]).count()
}

/// True iff no member of `family` is an induced subgraph of `g`.
pub fn is_f_free(g: &Graph, family: &Family) -> Result<bool> {
    let m = Masks::new(g)?;
    let patterns = family_masks(family)?;
    Ok(patterns.iter().all(|h| !m.contains_induced(m.full(), h)))
}

fn family_masks(family: &Family) -> Result<Vec<Masks>> {
    family.members().iter().map(Masks::new).collect()
}

/// F-free Vertex Deletion: can at most `k` deletions make `g` F-free?
pub fn solve_ffvd(g: &Graph, k: usize, family: &Family) -> Result<Witness> {
    let m = Masks::new(g)?;
    let patterns = family_masks(family)?;
    let free = |keep: u64| patterns.iter().all(|h| !m.contains_induced(keep, h));
    Ok(match hereditary_deletion(m.n, k, free) {
        Some(x) => {
            let keep: Vec<usize> = (0..m.n).filter(|v| !x.contains(v)).collect();
            assert!(is_f_free(&g.induced(&keep), family)?, "F-free certificate failed verification");
            Witness::yes(Certificate::Vertices(x))
        }
        None => Witness::no(),
    })
}

pub fn is_dominating(g: &Graph, set: &[usize]) -> bool {
    let n = g.vertex_count();
    let mut covered = vec![false; n];
    for &v in set {
        if v >= n {
            return false;
        }
        covered[v] = true;
        for w in g.neighbors(v) {
            covered[w] = true;
        }
    }
    covered.into_iter().all(|c| c)
}

/// Repeatedly picks the vertex covering the most undominated vertices (lowest index on ties).
pub fn greedy_dominating(g: &Graph) -> Vec<usize> {
    let n = g.vertex_count();
    let mut covered = vec![false; n];
    let mut set = Vec::new();
    while covered.iter().any(|c| !c) {
        let gain = |v: usize| usize::from(!covered[v]) + g.neighbors(v).filter(|&w| !covered[w]).count();
        let best = (0..n).max_by_key(|&v| (gain(v), std::cmp::Reverse(v))).expect("n > 0");
        covered[best] = true;
        for w in g.neighbors(best) {
            covered[w] = true;
        }
        set.push(best);
    }
    set.sort_unstable();
    set
}

fn smallest_dominating_up_to(m: &Masks, cap: usize) -> Option<u64> {
    let all: Vec<usize> = (0..m.n).collect();
    (1..=cap.min(m.n)).find_map(|size| first_combination(&all, size, |set| m.dominates(set)))
}

/// A minimum dominating set, by increasing cardinality (lexicographically first at that size).
pub fn solve_min_dominating(g: &Graph) -> Result<DominatingWitness> {
    if g.vertex_count() == 0 {
        return Err(Error::Domain("dominating set of the empty graph".into()));
    }
    let m = Masks::new(g)?;
    let cap = greedy_dominating(g).len();
    let set = to_vec(smallest_dominating_up_to(&m, cap).expect("the greedy set bounds the search"));
    let verified = is_dominating(g, &set);
    Ok(DominatingWitness { set, verified })
}

/// Dominating Set: is there a dominating set of at most `k` vertices?
pub fn solve_dominating(g: &Graph, k: usize) -> Result<Witness> {
    let m = Masks::new(g)?;
    if m.n == 0 {
        return Ok(Witness::yes(Certificate::Vertices(vec![])));
    }
    Ok(match smallest_dominating_up_to(&m, k) {
        Some(set) => Witness::yes(Certificate::Vertices(to_vec(set))),
        None => Witness::no(),
    })
}
