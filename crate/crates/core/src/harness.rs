//! Graph generators and the oracle-equivalence check for reductions.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::family::{Case, Family};
use crate::geometry::Point;
use crate::graph::Graph;
use crate::reductions::{self, Problem, ReducedInstance};
use crate::visibility::{visibility_graph, Embedding};

fn permutations(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut p: Vec<usize> = (0..n).collect();
    loop {
        out.push(p.clone());
        let Some(i) = (1..n).rev().find(|&i| p[i - 1] < p[i]) else {
            return out;
        };
        let j = (i..n).rev().find(|&j| p[j] > p[i - 1]).expect("p[i] qualifies");
        p.swap(i - 1, j);
        p[i..].reverse();
    }
}

/// One graph per isomorphism class on `n` vertices, each the member of its
/// class with the smallest edge mask. Practical up to `n = 7`.
pub fn isomorphism_classes(n: usize) -> Vec<Graph> {
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    let pair_index = |u: usize, v: usize| pairs.iter().position(|&p| p == (u.min(v), u.max(v))).expect("pair");
    // bit i of a mask moves to bit maps[p][i] under permutation p
    let maps: Vec<Vec<usize>> = permutations(n)
        .into_iter()
        .skip(1)
        .map(|p| pairs.iter().map(|&(u, v)| pair_index(p[u], p[v])).collect())
        .collect();
    let canonical = |mask: u64| {
        maps.iter().all(|map| {
            let image = map.iter().enumerate().fold(0u64, |acc, (i, &j)| acc | (mask >> i & 1) << j);
            image >= mask
        })
    };
    (0..1u64 << pairs.len())
        .into_par_iter()
        .filter(|&mask| canonical(mask))
        .map(|mask| {
            let edges: Vec<(usize, usize)> = (0..pairs.len()).filter(|&i| mask >> i & 1 == 1).map(|i| pairs[i]).collect();
            Graph::from_edges(n, &edges).expect("pairs are valid edges")
        })
        .collect()
}

/// `G(n, p)` with each pair included independently.
pub fn random_graph<R: Rng>(n: usize, p: f64, rng: &mut R) -> Graph {
    let mut g = Graph::new(n);
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                g.add_edge(u, v);
            }
        }
    }
    g
}

/// `count` random graphs with `n` uniform in `min_n..=max_n` and an edge
/// probability drawn per graph from `[0.1, 0.9]`.
pub fn seeded_graphs(count: usize, min_n: usize, max_n: usize, seed: u64) -> Vec<Graph> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let n = rng.gen_range(min_n..=max_n);
            let p = rng.gen_range(0.1..0.9);
            random_graph(n, p, &mut rng)
        })
        .collect()
}

/// Distinct integer points in `[0, side)^2` whose visibility graph is not a path.
pub fn random_non_path_embedding<R: Rng>(n: usize, side: i64, rng: &mut R) -> Result<Embedding> {
    if n < 3 || (side * side) < n as i64 {
        return Err(Error::Domain(format!("cannot place {n} non-collinear points in a {side}x{side} box")));
    }
    loop {
        let mut points: Vec<Point> = Vec::with_capacity(n);
        while points.len() < n {
            let p = Point::from_ints(rng.gen_range(0..side), rng.gen_range(0..side));
            if !points.contains(&p) {
                points.push(p);
            }
        }
        let emb = Embedding::new(points)?;
        if !visibility_graph(&emb).is_path() {
            return Ok(emb);
        }
    }
}

/// Budgets tried for each source graph.
pub fn feasible_ks(problem: Problem, g: &Graph) -> Vec<usize> {
    match problem {
        Problem::Bisection | Problem::MaxCut => (0..=g.edge_count() + 1).collect(),
        Problem::Ffvd => (0..=3.min(g.vertex_count())).collect(),
        _ => (0..=g.vertex_count()).collect(),
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Check {
    pub source: bool,
    pub target: bool,
    pub presolved: bool,
}

fn reduce(problem: Problem, g: &Graph, k: usize, family: Option<(&Family, Case)>) -> Result<ReducedInstance> {
    match (problem, family) {
        (Problem::Fvs, _) => reductions::reduce_fvs(g, k),
        (Problem::Lip, _) => reductions::reduce_lip(g, k),
        (Problem::Bisection, _) => reductions::reduce_bisection(g, k),
        (Problem::Ffvd, Some((f, case))) => reductions::reduce_ffvd(g, k, f, case),
        (Problem::Ffvd, None) => Err(Error::InvalidInstance("FFVD needs a family".into())),
        (p, _) => Err(Error::InvalidInstance(format!("{p} has no reduction"))),
    }
}

/// Reduces `(g, k)` and decides both sides with the oracles.
pub fn check_reduction(problem: Problem, g: &Graph, k: usize, family: Option<(&Family, Case)>) -> Result<Check> {
    let reduced = reduce(problem, g, k, family)?;
    let source = reductions::source_instance(problem, g, k, &reduced)?;
    Ok(Check {
        source: source.solve()?.answer,
        target: reduced.instance.solve()?.answer,
        presolved: reduced.provenance.presolved.is_some(),
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Disagreement {
    pub n: usize,
    pub edges: Vec<(usize, usize)>,
    pub k: usize,
    pub source: bool,
    pub target: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Report {
    pub problem: Problem,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub case: Option<Case>,
    pub graphs: usize,
    pub checked: usize,
    pub agreed: usize,
    pub presolved: usize,
    pub yes_instances: usize,
    pub disagreements: Vec<Disagreement>,
}

impl Report {
    pub fn all_agree(&self) -> bool {
        self.checked == self.agreed
    }
}

/// Checks every graph at every feasible budget. Results are collected in
/// input order, so the report does not depend on scheduling.
pub fn verify_reduction(problem: Problem, graphs: &[Graph], family: Option<(&Family, Case)>) -> Result<Report> {
    let per_graph: Vec<Vec<(usize, Check)>> = graphs
        .par_iter()
        .map(|g| {
            feasible_ks(problem, g)
                .into_iter()
                .map(|k| Ok((k, check_reduction(problem, g, k, family)?)))
                .collect::<Result<Vec<_>>>()
        })
        .collect::<Result<Vec<_>>>()?;
    let mut report = Report {
        problem,
        case: family.map(|(_, c)| c),
        graphs: graphs.len(),
        checked: 0,
        agreed: 0,
        presolved: 0,
        yes_instances: 0,
        disagreements: Vec::new(),
    };
    for (g, checks) in graphs.iter().zip(per_graph) {
        for (k, c) in checks {
            report.checked += 1;
            report.presolved += usize::from(c.presolved);
            report.yes_instances += usize::from(c.source);
            if c.source == c.target {
                report.agreed += 1;
            } else {
                report.disagreements.push(Disagreement {
                    n: g.vertex_count(),
                    edges: g.edges(),
                    k,
                    source: c.source,
                    target: c.target,
                });
            }
        }
    }
    Ok(report)
}

/// All isomorphism classes on `1..=n_max` vertices.
pub fn all_small_graphs(n_max: usize) -> Vec<Graph> {
    (1..=n_max).flat_map(isomorphism_classes).collect()
}
