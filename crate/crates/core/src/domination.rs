//! Dominating sets of size at most `floor(delta / 2) + 1` for non-path point
//! visibility graphs, built from the lines through a minimum-degree point.

use std::cmp::Ordering;

use num_traits::{One, Signed, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::geometry::{Point, Rational};
use crate::graph::Graph;
use crate::oracle::{self, DominatingWitness};
use crate::visibility::{visibility_graph, Embedding};

/// A line through the centre, keyed by its canonical direction.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct StarLine {
    /// `(0, 1)` for vertical lines, otherwise `(1, slope)`.
    #[serde(serialize_with = "serialize_direction")]
    pub direction: (Rational, Rational),
    /// Neighbours of the centre on this line (one per side at most).
    pub neighbors: Vec<usize>,
    /// Every point on the line other than the centre.
    pub points: Vec<usize>,
}

fn serialize_direction<S: serde::Serializer>(d: &(Rational, Rational), s: S) -> std::result::Result<S::Ok, S::Error> {
    use serde::ser::SerializeTuple;
    let mut t = s.serialize_tuple(2)?;
    t.serialize_element(&d.0.to_string())?;
    t.serialize_element(&d.1.to_string())?;
    t.end()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct StarLines {
    pub center: usize,
    pub delta: usize,
    /// Sorted by angle, starting from the vertical direction.
    pub lines: Vec<StarLine>,
}

fn direction(from: &Point, to: &Point) -> (Rational, Rational) {
    let dx = &to.x - &from.x;
    let dy = &to.y - &from.y;
    if dx.is_zero() {
        (Rational::zero(), Rational::one())
    } else {
        (Rational::one(), dy / dx)
    }
}

fn non_path_graph(emb: &Embedding) -> Result<Graph> {
    let g = visibility_graph(emb);
    if g.vertex_count() < 3 || g.is_path() {
        return Err(Error::NotNonPath);
    }
    Ok(g)
}

/// Lowest-index vertex of minimum degree.
pub fn min_degree_vertex(g: &Graph) -> Option<usize> {
    (0..g.vertex_count()).min_by_key(|&v| (g.degree(v), v))
}

/// Star lines around the lowest-index minimum-degree vertex.
pub fn star_lines(emb: &Embedding) -> Result<StarLines> {
    let g = non_path_graph(emb)?;
    let center = min_degree_vertex(&g).expect("at least three vertices");
    lines_around(emb, &g, center)
}

/// Star lines around a chosen centre.
pub fn star_lines_at(emb: &Embedding, center: usize) -> Result<StarLines> {
    let g = non_path_graph(emb)?;
    if center >= g.vertex_count() {
        return Err(Error::Domain(format!("centre {center} is not a vertex")));
    }
    lines_around(emb, &g, center)
}

fn lines_around(emb: &Embedding, g: &Graph, center: usize) -> Result<StarLines> {
    let pts = emb.points();
    let c = &pts[center];
    let mut lines: Vec<StarLine> = Vec::new();
    for v in (0..pts.len()).filter(|&v| v != center) {
        let d = direction(c, &pts[v]);
        match lines.iter_mut().find(|l| l.direction == d) {
            Some(l) => l.points.push(v),
            None => lines.push(StarLine {
                direction: d,
                neighbors: Vec::new(),
                points: vec![v],
            }),
        }
    }
    for l in &mut lines {
        l.neighbors = l.points.iter().copied().filter(|&v| g.has_edge(center, v)).collect();
        if l.neighbors.is_empty() {
            return Err(Error::CoverageViolation(l.points[0]));
        }
    }
    // (0, 1) first, then (1, s) by increasing slope: one half-turn of angles
    lines.sort_by(|a, b| a.direction.cmp(&b.direction));
    Ok(StarLines {
        center,
        delta: g.degree(center),
        lines,
    })
}

fn half_plane(d: &(Rational, Rational)) -> u8 {
    if d.1.is_positive() || (d.1.is_zero() && d.0.is_positive()) {
        0
    } else {
        1
    }
}

/// Counter-clockwise angular order of vectors starting at the positive x-axis.
fn by_angle(a: &(Rational, Rational), b: &(Rational, Rational)) -> Ordering {
    half_plane(a).cmp(&half_plane(b)).then_with(|| {
        let cross = &a.0 * &b.1 - &a.1 * &b.0;
        Rational::zero().cmp(&cross)
    })
}

/// Neighbours of `center` in counter-clockwise order around its point.
pub fn neighbor_rays(emb: &Embedding, g: &Graph, center: usize) -> Vec<usize> {
    let pts = emb.points();
    let c = &pts[center];
    let mut ns: Vec<(usize, (Rational, Rational))> = g
        .neighbors(center)
        .map(|u| (u, (&pts[u].x - &c.x, &pts[u].y - &c.y)))
        .collect();
    ns.sort_by(|a, b| by_angle(&a.1, &b.1));
    ns.into_iter().map(|(u, _)| u).collect()
}

/// 1-based positions picked from `u_1..u_delta`: `u_{4i-2}, u_{4i-1}` for
/// each block of four, then `u_delta` when `delta mod 4 = 1`, or
/// `u_{delta-1}, u_delta` when `delta mod 4` is 2 or 3.
pub fn selection_pattern(delta: usize) -> Vec<usize> {
    let mut picks: Vec<usize> = (1..=delta / 4).flat_map(|i| [4 * i - 2, 4 * i - 1]).collect();
    match delta % 4 {
        1 => picks.push(delta),
        2 | 3 => picks.extend([delta - 1, delta]),
        _ => {}
    }
    picks.dedup();
    picks
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Method {
    /// The selection pattern applied to the neighbour rays, at some rotation.
    Pattern { rotation: usize },
    /// Greedy cover, used when no rotation of the pattern dominates.
    Greedy,
    /// Exhaustive minimum, used when greedy overshoots the bound.
    Exact,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MinDegreeDomination {
    pub center: usize,
    pub delta: usize,
    pub bound: usize,
    pub size: usize,
    pub set: Vec<usize>,
    pub verified: bool,
    pub method: Method,
}

impl MinDegreeDomination {
    pub fn witness(&self) -> DominatingWitness {
        DominatingWitness {
            set: self.set.clone(),
            verified: self.verified,
        }
    }
}

/// A verified dominating set of size at most `floor(delta / 2) + 1`.
///
/// The pattern is tried at every cyclic rotation of the neighbour rays; if
/// none dominates, greedy cover and then an exhaustive search are used. The
/// bound is checked before returning.
pub fn min_degree_dominating(emb: &Embedding) -> Result<MinDegreeDomination> {
    let g = non_path_graph(emb)?;
    let star = lines_around(emb, &g, min_degree_vertex(&g).expect("at least three vertices"))?;
    let (center, delta) = (star.center, star.delta);
    let bound = delta / 2 + 1;
    let rays = neighbor_rays(emb, &g, center);
    let pattern = selection_pattern(delta);

    let from_pattern = (0..delta).find_map(|rotation| {
        let mut set: Vec<usize> = pattern.iter().map(|&i| rays[(i - 1 + rotation) % delta]).collect();
        set.sort_unstable();
        set.dedup();
        oracle::is_dominating(&g, &set).then_some((set, Method::Pattern { rotation }))
    });
    let (set, method) = match from_pattern {
        Some(found) => found,
        None => {
            let greedy = oracle::greedy_dominating(&g);
            if greedy.len() <= bound {
                (greedy, Method::Greedy)
            } else {
                (oracle::solve_min_dominating(&g)?.set, Method::Exact)
            }
        }
    };
    let verified = oracle::is_dominating(&g, &set);
    if set.len() > bound || !verified {
        return Err(Error::BoundViolation { size: set.len(), bound });
    }
    Ok(MinDegreeDomination {
        center,
        delta,
        bound,
        size: set.len(),
        set,
        verified,
        method,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn six_point_example() -> Embedding {
        Embedding::new(vec![
            Point::from_ints(2, 2),
            Point::from_ratios(2, 1, 2, 3).unwrap(),
            Point::from_ints(1, 1),
            Point::from_ints(3, 1),
            Point::from_ints(0, 0),
            Point::from_ints(4, 0),
        ])
        .unwrap()
    }

    fn moment(n: i64) -> Embedding {
        Embedding::new((1..=n).map(|i| Point::from_ints(i, i * i)).collect()).unwrap()
    }

    fn all_covered(s: &StarLines, n: usize) -> bool {
        let mut seen = vec![false; n];
        seen[s.center] = true;
        for l in &s.lines {
            for &v in &l.points {
                seen[v] = true;
            }
        }
        seen.into_iter().all(|x| x)
    }

    #[test]
    fn pattern_positions() {
        assert_eq!(selection_pattern(2), vec![1, 2]);
        assert_eq!(selection_pattern(3), vec![2, 3]);
        assert_eq!(selection_pattern(4), vec![2, 3]);
        assert_eq!(selection_pattern(5), vec![2, 3, 5]);
        assert_eq!(selection_pattern(6), vec![2, 3, 5, 6]);
        assert_eq!(selection_pattern(7), vec![2, 3, 6, 7]);
        for d in 1..40 {
            assert!(selection_pattern(d).len() <= d / 2 + 1, "delta={d}");
        }
    }

    #[test]
    fn six_point_lines_around_lowest_index_centre() {
        let s = star_lines(&six_point_example()).unwrap();
        assert_eq!((s.center, s.delta), (0, 3));
        assert_eq!(s.lines.len(), 3);
        assert!(all_covered(&s, 6));
    }

    #[test]
    fn six_point_lines_around_origin() {
        let s = star_lines_at(&six_point_example(), 4).unwrap();
        assert_eq!(s.delta, 3);
        assert_eq!(s.lines.len(), 3);
        assert!(all_covered(&s, 6));
        // (1,1) and (2,2) share the diagonal; (2,2/3) and (3,1) share slope 1/3
        let diag = s.lines.iter().find(|l| l.points.contains(&0)).unwrap();
        assert_eq!(diag.points, vec![0, 2]);
        assert_eq!(diag.neighbors, vec![2]);
        let shallow = s.lines.iter().find(|l| l.points.contains(&3)).unwrap();
        assert_eq!(shallow.neighbors, vec![1]);
    }

    #[test]
    fn opposite_neighbours_share_a_line() {
        let emb = Embedding::new(vec![
            Point::from_ints(0, 0),
            Point::from_ints(-1, 0),
            Point::from_ints(1, 0),
            Point::from_ints(0, 1),
        ])
        .unwrap();
        let s = star_lines_at(&emb, 0).unwrap();
        assert_eq!(s.delta, 3);
        assert_eq!(s.lines.len(), 2);
        assert_eq!(s.lines[0].direction, (Rational::zero(), Rational::one()));
        assert_eq!(s.lines[1].neighbors, vec![1, 2]);
    }

    #[test]
    fn six_point_construction() {
        let d = min_degree_dominating(&six_point_example()).unwrap();
        assert!(d.verified);
        assert!(d.size <= 2);
        let opt = oracle::solve_min_dominating(&visibility_graph(&six_point_example())).unwrap();
        assert!(opt.set.len() <= d.size);
    }

    #[test]
    fn triangle_construction() {
        let s = star_lines(&moment(3)).unwrap();
        assert_eq!(s.lines.len(), 2);
        let d = min_degree_dominating(&moment(3)).unwrap();
        assert!(d.size <= 2 && d.verified);
    }

    #[test]
    fn rejects_paths() {
        let line = Embedding::new((0..3).map(|i| Point::from_ints(i, 0)).collect()).unwrap();
        assert_eq!(star_lines(&line), Err(Error::NotNonPath));
        assert!(matches!(min_degree_dominating(&line), Err(Error::NotNonPath)));
    }

    #[test]
    fn rays_are_counter_clockwise() {
        let emb = Embedding::new(vec![
            Point::from_ints(0, 0),
            Point::from_ints(0, -1),
            Point::from_ints(-1, 0),
            Point::from_ints(0, 1),
            Point::from_ints(1, 0),
        ])
        .unwrap();
        let g = visibility_graph(&emb);
        assert_eq!(neighbor_rays(&emb, &g, 0), vec![4, 3, 2, 1]);
    }

    #[test]
    fn sheared_grid_construction() {
        let mut points = Vec::new();
        for x in 1..=4i64 {
            for y in 1..=4i64 {
                points.push(Point::from_ratios(x * 1000 + y, 1000, y * 1000 + x * x, 1000).unwrap());
            }
        }
        let emb = Embedding::new(points).unwrap();
        let g = visibility_graph(&emb);
        let d = min_degree_dominating(&emb).unwrap();
        assert!(oracle::is_dominating(&g, &d.set));
        assert!(d.size <= g.min_degree().unwrap() / 2 + 1);
    }
}
