//! The blocker transformation: every non-edge `{u, v}` receives a universal
//! vertex `b_uv` that sits on the segment `uv` in a visibility embedding.

use std::collections::HashSet;

use num_bigint::BigInt;
use num_integer::Integer;

use crate::geometry::{collinear, segment_line_params, Point, Rational};
use crate::graph::Graph;
use crate::visibility::Embedding;

/// Output of [`phi`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PhiResult {
    pub graph: Graph,
    /// Number of original vertices; they keep indices `0..original_count`.
    pub original_count: usize,
    /// The non-edge blocked by blocker `original_count + i` is `blocked_pairs[i]`.
    pub blocked_pairs: Vec<(usize, usize)>,
}

impl PhiResult {
    pub fn original_vertices(&self) -> std::ops::Range<usize> {
        0..self.original_count
    }

    pub fn blockers(&self) -> std::ops::Range<usize> {
        self.original_count..self.graph.vertex_count()
    }

    pub fn blocker_count(&self) -> usize {
        self.blocked_pairs.len()
    }

    pub fn is_blocker(&self, v: usize) -> bool {
        v >= self.original_count && v < self.graph.vertex_count()
    }
}

/// Adds one blocker per non-edge (in lexicographic order), joins each
/// blocker to every original vertex and makes the blockers a clique.
pub fn phi(g: &Graph) -> PhiResult {
    let n = g.vertex_count();
    let blocked_pairs = g.non_edges();
    let out = g.add_universal(blocked_pairs.len());
    PhiResult {
        graph: out,
        original_count: n,
        blocked_pairs,
    }
}

/// Rationals in `(0, 1)` ordered by denominator, then numerator:
/// 1/2, 1/3, 2/3, 1/4, 3/4, 1/5, ...
pub fn unit_interval_rationals() -> impl Iterator<Item = Rational> {
    (2i64..).flat_map(|den| {
        (1..den)
            .filter(move |num| num.gcd(&den) == 1)
            .map(move |num| Rational::new(BigInt::from(num), BigInt::from(den)))
    })
}

/// A certified visibility embedding of `phi(g).graph`.
///
/// Original vertex `i` goes to `(i + 1, (i + 1)^2)` on the moment curve, so no
/// three originals are collinear. Each blocker is put on its segment `uv` at
/// the first parameter of [`unit_interval_rationals`] that keeps it off every
/// line through two earlier points other than `u` and `v`.
pub fn phi_embedding(g: &Graph) -> Embedding {
    let n = g.vertex_count();
    let mut points: Vec<Point> = (1..=n as i64).map(|i| Point::from_ints(i, i * i)).collect();
    for (u, v) in g.non_edges() {
        let (a, b) = (points[u].clone(), points[v].clone());
        let mut forbidden: HashSet<Rational> = HashSet::new();
        for x in 0..points.len() {
            for y in x + 1..points.len() {
                if (x, y) == (u, v) {
                    continue;
                }
                let t = segment_line_params(&a, &b, &points[x], &points[y])
                    .expect("embedded points are distinct");
                match t {
                    Some(t) => {
                        forbidden.insert(t);
                    }
                    None => debug_assert!(
                        !collinear(&a, &b, &points[x]),
                        "no earlier point lies on the line through u and v"
                    ),
                }
            }
        }
        let t = unit_interval_rationals()
            .find(|t| !forbidden.contains(t))
            .expect("only finitely many parameters are forbidden");
        points.push(a.lerp(&b, &t));
    }
    Embedding::new(points).expect("blockers avoid every existing point")
}

/// Appends a point that sees every existing point without blocking any pair.
///
/// Candidates are scanned on the vertical line one unit right of the largest
/// x-coordinate at heights 0, 1, 2, ...
pub fn add_universal_point(emb: &Embedding) -> Embedding {
    let pts = emb.points();
    let x = match pts.iter().map(|p| &p.x).max() {
        Some(max_x) => max_x.floor() + Rational::from_integer(1.into()),
        None => Rational::from_integer(0.into()),
    };
    let candidate = (0i64..)
        .map(|h| Point::new(x.clone(), Rational::from_integer(h.into())))
        .find(|c| {
            (0..pts.len()).all(|i| (i + 1..pts.len()).all(|j| !collinear(&pts[i], &pts[j], c)))
        })
        .expect("finitely many lines cross the vertical line");
    let mut out = emb.clone();
    out.push(candidate).expect("candidate lies right of every point");
    out
}
