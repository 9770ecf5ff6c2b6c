//! Checks against values computed here by independent brute force.

use pvgkit::graph::Graph;
use pvgkit::grid::{grid_min_dominating, grid_pvg, GridSpec};
use pvgkit::harness::isomorphism_classes;
use pvgkit::oracle;
use pvgkit::reductions::ramsey_threshold;

#[allow(clippy::needless_range_loop)]
fn graph_from_mask(n: usize, mask: u32) -> Vec<Vec<bool>> {
    let mut adj = vec![vec![false; n]; n];
    let mut bit = 0;
    for u in 0..n {
        for v in u + 1..n {
            let on = mask >> bit & 1 == 1;
            adj[u][v] = on;
            adj[v][u] = on;
            bit += 1;
        }
    }
    adj
}

fn has_clique_or_independent(adj: &[Vec<bool>], t: usize, s: usize) -> bool {
    let n = adj.len();
    let subsets = |size: usize| (0u32..1 << n).filter(move |m| m.count_ones() as usize == size);
    let uniform = |m: u32, want: bool| {
        let vs: Vec<usize> = (0..n).filter(|&v| m >> v & 1 == 1).collect();
        vs.iter().enumerate().all(|(i, &u)| vs[i + 1..].iter().all(|&v| adj[u][v] == want))
    };
    subsets(t).any(|m| uniform(m, true)) || subsets(s).any(|m| uniform(m, false))
}

fn ramsey_brute_force(t: usize, s: usize) -> usize {
    (1..)
        .find(|&n| {
            let pairs = n * (n - 1) / 2;
            (0u32..1 << pairs).all(|m| has_clique_or_independent(&graph_from_mask(n, m), t, s))
        })
        .unwrap()
}

#[test]
fn small_ramsey_values() {
    assert_eq!(ramsey_brute_force(3, 2), 3);
    assert_eq!(ramsey_threshold(3, 2).unwrap(), 3);
    assert_eq!(ramsey_brute_force(3, 3), 6);
    assert_eq!(ramsey_threshold(3, 3).unwrap(), 6);
    assert_eq!(ramsey_brute_force(4, 2), 4);
    assert_eq!(ramsey_threshold(4, 2).unwrap(), 4);
}

fn gcd(a: i64, b: i64) -> i64 {
    if b == 0 {
        a.abs()
    } else {
        gcd(b, a % b)
    }
}

#[test]
fn f4_by_plain_enumeration() {
    let pts: Vec<(i64, i64)> = (1..=4).flat_map(|x| (1..=4).map(move |y| (x, y))).collect();
    let sees = |a: (i64, i64), b: (i64, i64)| a == b || gcd(a.0 - b.0, a.1 - b.1) == 1;
    let dominates = |set: &[usize]| pts.iter().all(|&p| set.iter().any(|&s| sees(pts[s], p)));
    assert!((0..16).all(|a| !dominates(&[a])));
    let pair = (0..16).flat_map(|a| (a + 1..16).map(move |b| [a, b])).find(|s| dominates(s));
    assert!(pair.is_some());
    assert_eq!(grid_min_dominating(4).unwrap().size, 2);
    let s = GridSpec::square(4).unwrap();
    assert!(oracle::is_dominating(&grid_pvg(s), &[s.index(2, 2), s.index(2, 3)]));
}

#[test]
fn small_grids_by_hand() {
    assert_eq!(grid_min_dominating(2).unwrap().size, 1);
    let three = grid_min_dominating(3).unwrap();
    assert_eq!(three.size, 1);
    assert_eq!(three.points, vec![(2, 2)]);
}

#[test]
fn six_vertex_class_count() {
    // number of unlabelled graphs on 6 vertices
    assert_eq!(isomorphism_classes(6).len(), 156);
}

#[test]
fn exhaustive_max_cut_matches_bisection_parity() {
    // the max cut of K4 is 4, attained by a balanced split
    let k4 = Graph::complete(4);
    assert!(oracle::solve_max_cut(&k4, 4).unwrap().answer);
    assert!(!oracle::solve_max_cut(&k4, 5).unwrap().answer);
    assert!(oracle::solve_bisection(&k4, 4).unwrap().answer);
    assert!(!oracle::solve_bisection(&k4, 3).unwrap().answer);
}
