//! Polynomial-time reductions from general graphs to point visibility graphs.
//!
//! Each reduction returns the target instance together with a provenance
//! record (blocker count, universal padding, presolve outcome) so that the
//! equivalence harness can audit it.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::blocker::phi;
use crate::error::{Error, Result};
use crate::family::{validate_family, Case, Family};
use crate::graph::Graph;
use crate::oracle::{self, Witness};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Problem {
    #[serde(rename = "FVS")]
    Fvs,
    #[serde(rename = "LIP")]
    Lip,
    #[serde(rename = "BISECTION")]
    Bisection,
    #[serde(rename = "MAXCUT")]
    MaxCut,
    #[serde(rename = "FFVD")]
    Ffvd,
    #[serde(rename = "DOMSET")]
    DomSet,
}

impl fmt::Display for Problem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Problem::Fvs => "FVS",
            Problem::Lip => "LIP",
            Problem::Bisection => "BISECTION",
            Problem::MaxCut => "MAXCUT",
            Problem::Ffvd => "FFVD",
            Problem::DomSet => "DOMSET",
        })
    }
}

impl FromStr for Problem {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "fvs" => Ok(Problem::Fvs),
            "lip" => Ok(Problem::Lip),
            "bisection" => Ok(Problem::Bisection),
            "maxcut" => Ok(Problem::MaxCut),
            "ffvd" => Ok(Problem::Ffvd),
            "domset" => Ok(Problem::DomSet),
            other => Err(Error::InvalidInstance(format!("unknown problem {other:?}"))),
        }
    }
}

/// A decision instance. `family` is present exactly for F-free deletion.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Instance {
    pub problem: Problem,
    pub graph: Graph,
    pub k: usize,
    pub family: Option<Family>,
}

impl Instance {
    pub fn new(problem: Problem, graph: Graph, k: usize, family: Option<Family>) -> Result<Self> {
        match (problem, &family) {
            (Problem::Ffvd, None) => Err(Error::InvalidInstance("FFVD needs a family".into())),
            (p, Some(_)) if p != Problem::Ffvd => {
                Err(Error::InvalidInstance(format!("{p} takes no family")))
            }
            _ => Ok(Instance {
                problem,
                graph,
                k,
                family,
            }),
        }
    }

    /// Decides the instance with the exhaustive oracle for its problem.
    pub fn solve(&self) -> Result<Witness> {
        match self.problem {
            Problem::Fvs => oracle::solve_fvs(&self.graph, self.k),
            Problem::Lip => oracle::solve_lip(&self.graph, self.k),
            Problem::Bisection => oracle::solve_bisection(&self.graph, self.k),
            Problem::MaxCut => oracle::solve_max_cut(&self.graph, self.k),
            Problem::Ffvd => {
                let family = self.family.as_ref().expect("checked on construction");
                oracle::solve_ffvd(&self.graph, self.k, family)
            }
            Problem::DomSet => oracle::solve_dominating(&self.graph, self.k),
        }
    }
}

/// Constant-size instance with a known answer, used when a reduction
/// decides its input directly.
///
/// | problem   | yes                 | no                          |
/// |-----------|---------------------|-----------------------------|
/// | FVS       | K1, k = 0           | K3, k = 0                   |
/// | LIP       | K1, k = 0           | K1, k = 1                   |
/// | BISECTION | 2 isolated, k = 0   | K2, k = 0                   |
/// | MAXCUT    | K1, k = 0           | K1, k = 1                   |
/// | FFVD      | K1, k = 0           | smallest member of F, k = 0 |
/// | DOMSET    | K1, k = 1           | K1, k = 0                   |
pub fn trivial_instance(problem: Problem, answer: bool, family: Option<&Family>) -> Result<Instance> {
    let k1 = Graph::new(1);
    let (graph, k) = match (problem, answer) {
        (Problem::Fvs, true) => (k1, 0),
        (Problem::Fvs, false) => (Graph::complete(3), 0),
        (Problem::Lip, true) => (k1, 0),
        (Problem::Lip, false) => (k1, 1),
        (Problem::Bisection, true) => (Graph::new(2), 0),
        (Problem::Bisection, false) => (Graph::complete(2), 0),
        (Problem::MaxCut, true) => (k1, 0),
        (Problem::MaxCut, false) => (k1, 1),
        (Problem::Ffvd, true) => (k1, 0),
        (Problem::Ffvd, false) => {
            let f = family.ok_or_else(|| Error::InvalidInstance("FFVD needs a family".into()))?;
            let smallest = f
                .members()
                .iter()
                .min_by_key(|h| h.vertex_count())
                .expect("families are nonempty");
            (smallest.clone(), 0)
        }
        (Problem::DomSet, true) => (k1, 1),
        (Problem::DomSet, false) => (k1, 0),
    };
    Instance::new(problem, graph, k, family.filter(|_| problem == Problem::Ffvd).cloned())
}

#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize)]
pub struct Provenance {
    pub reduction: String,
    /// Blockers added by the transformation.
    pub blockers: usize,
    /// Universal vertices appended after the transformation.
    pub universal_pad: usize,
    /// Largest number of universal vertices in a family member (case i).
    #[serde(skip_serializing_if = "Option::is_none")]
    pub ell: Option<usize>,
    /// Set when the source was decided directly and a trivial instance returned.
    pub presolved: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub case: Option<Case>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub ramsey_threshold: Option<usize>,
    /// Whether `ramsey_threshold` is the exact Ramsey number or an upper bound.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub ramsey_exact: Option<bool>,
    /// Family the source instance is posed over when it differs from the target's (case i).
    #[serde(skip)]
    pub source_family: Option<Family>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReducedInstance {
    pub instance: Instance,
    pub provenance: Provenance,
}

fn presolved(problem: Problem, answer: bool, family: Option<&Family>, mut provenance: Provenance) -> Result<ReducedInstance> {
    provenance.presolved = Some(answer);
    Ok(ReducedInstance {
        instance: trivial_instance(problem, answer, family)?,
        provenance,
    })
}

/// Feedback Vertex Set: `(G, k) -> (Φ(G), k + |B|)`.
pub fn reduce_fvs(g: &Graph, k: usize) -> Result<ReducedInstance> {
    let r = phi(g);
    let blockers = r.blocker_count();
    Ok(ReducedInstance {
        instance: Instance::new(Problem::Fvs, r.graph, k + blockers, None)?,
        provenance: Provenance {
            reduction: "fvs".into(),
            blockers,
            ..Provenance::default()
        },
    })
}

/// Longest Induced Path: solved directly for `k <= 2`, otherwise `(Φ(G), k)`.
pub fn reduce_lip(g: &Graph, k: usize) -> Result<ReducedInstance> {
    let provenance = Provenance {
        reduction: "lip".into(),
        ..Provenance::default()
    };
    if k <= 2 {
        let answer = oracle::solve_lip(g, k)?.answer;
        return presolved(Problem::Lip, answer, None, provenance);
    }
    let r = phi(g);
    Ok(ReducedInstance {
        provenance: Provenance {
            blockers: r.blocker_count(),
            ..provenance
        },
        instance: Instance::new(Problem::Lip, r.graph, k, None)?,
    })
}

/// Max Cut `(G, k)` to Bisection on a PVG.
///
/// Φ is applied to the complement of `G`; universal vertices pad the
/// blocker set up to `|V|` and the total vertex count up to an even number.
/// The budget becomes `(|V'| / 2)^2 - k`; if that is negative the source is
/// a no-instance and a trivial one is returned.
pub fn reduce_bisection(g: &Graph, k: usize) -> Result<ReducedInstance> {
    let n = g.vertex_count();
    let r = phi(&g.complement());
    let blockers = r.blocker_count();
    let pad = if blockers < n {
        n - blockers
    } else if (blockers + n) % 2 == 1 {
        1
    } else {
        0
    };
    let target = r.graph.add_universal(pad);
    let half = target.vertex_count() / 2;
    let provenance = Provenance {
        reduction: "bisection".into(),
        blockers,
        universal_pad: pad,
        ..Provenance::default()
    };
    match (half * half).checked_sub(k) {
        Some(budget) => Ok(ReducedInstance {
            instance: Instance::new(Problem::Bisection, target, budget, None)?,
            provenance,
        }),
        None => presolved(Problem::Bisection, false, None, provenance),
    }
}

/// Exact Ramsey numbers known to the table (symmetric closure applied).
pub fn known_ramsey(t: usize, t2: usize) -> Option<usize> {
    let (a, b) = (t.min(t2), t.max(t2));
    match (a, b) {
        (2, s) => Some(s),
        (3, 3) => Some(6),
        (3, 4) => Some(9),
        (4, 4) => Some(18),
        _ => None,
    }
}

fn binomial(n: u64, k: u64) -> u64 {
    let k = k.min(n - k);
    (1..=k).fold(1u64, |acc, i| acc.saturating_mul(n - k + i) / i)
}

/// A number `R` such that every graph on at least `R` vertices contains
/// `K_t` or `t2` pairwise non-adjacent vertices: the exact value when
/// tabulated, otherwise the bound `C(t + t2 - 2, t - 1)`.
pub fn ramsey_threshold(t: usize, t2: usize) -> Result<usize> {
    if t < 2 || t2 < 2 {
        return Err(Error::Domain(format!("Ramsey threshold needs t, t' >= 2, got ({t}, {t2})")));
    }
    Ok(known_ramsey(t, t2).unwrap_or_else(|| binomial((t + t2 - 2) as u64, (t - 1) as u64) as usize))
}

/// F-free Vertex Deletion under one of the three family cases.
pub fn reduce_ffvd(g: &Graph, k: usize, f: &Family, case: Case) -> Result<ReducedInstance> {
    let profile = validate_family(f);
    if !profile.satisfies(case) {
        return Err(Error::InvalidCase(case.to_string()));
    }
    let r = phi(g);
    let blockers = r.blocker_count();
    let provenance = Provenance {
        reduction: "ffvd".into(),
        blockers,
        case: Some(case),
        ..Provenance::default()
    };
    match case {
        Case::NoCompleteMember => {
            let ell = f.max_universal();
            let target = r.graph.add_universal(k + ell);
            Ok(ReducedInstance {
                instance: Instance::new(Problem::Ffvd, target, k, Some(f.clone()))?,
                provenance: Provenance {
                    universal_pad: k + ell,
                    ell: Some(ell),
                    source_family: Some(f.strip_universal()?),
                    ..provenance
                },
            })
        }
        Case::RobustClique => Ok(ReducedInstance {
            instance: Instance::new(Problem::Ffvd, r.graph, k + blockers, Some(f.clone()))?,
            provenance,
        }),
        Case::CliqueAndStar => {
            let (t, t2) = profile.clique_star.expect("case iii carries (t, t')");
            let threshold = ramsey_threshold(t, t2)?;
            let provenance = Provenance {
                ramsey_threshold: Some(threshold),
                ramsey_exact: Some(known_ramsey(t, t2).is_some()),
                ..provenance
            };
            if g.vertex_count() < k + threshold {
                let answer = oracle::solve_ffvd(g, k, f)?.answer;
                return presolved(Problem::Ffvd, answer, Some(f), provenance);
            }
            Ok(ReducedInstance {
                instance: Instance::new(Problem::Ffvd, r.graph, k + blockers, Some(f.clone()))?,
                provenance,
            })
        }
    }
}

/// The source instance a reduction output should agree with.
pub fn source_instance(problem: Problem, g: &Graph, k: usize, reduced: &ReducedInstance) -> Result<Instance> {
    match problem {
        Problem::Bisection => Instance::new(Problem::MaxCut, g.clone(), k, None),
        Problem::Ffvd => {
            let family = reduced
                .provenance
                .source_family
                .clone()
                .or_else(|| reduced.instance.family.clone());
            Instance::new(Problem::Ffvd, g.clone(), k, family)
        }
        p => Instance::new(p, g.clone(), k, None),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn answer(inst: &Instance) -> bool {
        inst.solve().unwrap().answer
    }

    #[test]
    fn trivial_instances_have_their_answers() {
        let fam = Family::new(vec![Graph::complete(3)]).unwrap();
        for problem in [Problem::Fvs, Problem::Lip, Problem::Bisection, Problem::MaxCut, Problem::DomSet] {
            for expected in [true, false] {
                let inst = trivial_instance(problem, expected, None).unwrap();
                assert_eq!(answer(&inst), expected, "{problem} {expected}");
            }
        }
        for expected in [true, false] {
            let inst = trivial_instance(Problem::Ffvd, expected, Some(&fam)).unwrap();
            assert_eq!(answer(&inst), expected);
        }
    }

    #[test]
    fn fvs_examples() {
        let r = reduce_fvs(&Graph::complete(3), 1).unwrap();
        assert_eq!(r.instance.graph, Graph::complete(3));
        assert_eq!(r.instance.k, 1);
        assert!(answer(&r.instance));

        let r = reduce_fvs(&Graph::cycle(4), 1).unwrap();
        assert_eq!(r.provenance.blockers, 2);
        assert_eq!(r.instance.k, 3);
        assert!(answer(&r.instance));

        let r = reduce_fvs(&Graph::cycle(4), 0).unwrap();
        assert_eq!(r.instance.k, 2);
        assert!(!answer(&r.instance));
        assert!(!oracle::solve_fvs(&Graph::cycle(4), 0).unwrap().answer);
    }

    #[test]
    fn lip_examples() {
        let r = reduce_lip(&Graph::path(5), 4).unwrap();
        assert_eq!(r.provenance.blockers, 6);
        assert_eq!(r.instance.k, 4);
        assert!(answer(&r.instance));

        let r = reduce_lip(&Graph::path(5), 2).unwrap();
        assert_eq!(r.provenance.presolved, Some(true));
        assert!(answer(&r.instance));

        let r = reduce_lip(&Graph::complete(4), 3).unwrap();
        assert_eq!(r.instance.graph, Graph::complete(4));
        assert!(!answer(&r.instance));
    }

    #[test]
    fn bisection_examples() {
        let edge = Graph::complete(2);
        let r = reduce_bisection(&edge, 1).unwrap();
        assert_eq!(r.provenance.blockers, 1);
        assert_eq!(r.provenance.universal_pad, 1);
        assert_eq!(r.instance.graph.vertex_count(), 4);
        assert_eq!(r.instance.k, 3);
        assert!(answer(&r.instance));
        assert!(oracle::solve_max_cut(&edge, 1).unwrap().answer);

        let r = reduce_bisection(&edge, 2).unwrap();
        assert_eq!(r.instance.k, 2);
        assert!(!answer(&r.instance));
        assert!(!oracle::solve_max_cut(&edge, 2).unwrap().answer);

        let r = reduce_bisection(&Graph::new(2), 0).unwrap();
        assert!(answer(&r.instance));
        assert_eq!(r.instance.graph.vertex_count() % 2, 0);
    }

    #[test]
    fn bisection_padding_keeps_vertex_count_even() {
        for n in 1..=6 {
            for g in [Graph::complete(n), Graph::new(n), Graph::path(n)] {
                let r = reduce_bisection(&g, 0).unwrap();
                let v = r.instance.graph.vertex_count();
                assert_eq!(v % 2, 0);
                assert!(r.provenance.blockers + r.provenance.universal_pad >= n);
                assert_eq!(r.provenance.blockers, g.edge_count());
            }
        }
    }

    #[test]
    fn ramsey_values() {
        assert_eq!(ramsey_threshold(3, 2), Ok(3));
        assert_eq!(ramsey_threshold(2, 3), Ok(3));
        assert_eq!(ramsey_threshold(3, 3), Ok(6));
        assert_eq!(ramsey_threshold(4, 3), Ok(9));
        assert_eq!(ramsey_threshold(4, 4), Ok(18));
        assert_eq!(ramsey_threshold(5, 5), Ok(70));
        assert!(ramsey_threshold(1, 3).is_err());
        assert!(ramsey_threshold(3, 1).is_err());
    }

    #[test]
    fn ffvd_case_two_example() {
        let f = Family::new(vec![Graph::complete(3)]).unwrap();
        let r = reduce_ffvd(&Graph::complete(4), 1, &f, Case::RobustClique).unwrap();
        assert_eq!(r.instance.graph, Graph::complete(4));
        assert_eq!(r.instance.k, 1);
        assert!(!answer(&r.instance));
        assert!(!oracle::solve_ffvd(&Graph::complete(4), 1, &f).unwrap().answer);
    }

    #[test]
    fn ffvd_case_one_example() {
        let f = Family::new(vec![Graph::path(3)]).unwrap();
        let g = Graph::path(3);
        let r = reduce_ffvd(&g, 1, &f, Case::NoCompleteMember).unwrap();
        assert_eq!(r.provenance.ell, Some(1));
        assert_eq!(r.instance.graph.vertex_count(), 3 + 1 + 2);
        assert_eq!(r.instance.k, 1);
        let source = source_instance(Problem::Ffvd, &g, 1, &r).unwrap();
        assert_eq!(source.family.as_ref().unwrap().members(), &[Graph::new(2)]);
        assert_eq!(answer(&source), answer(&r.instance));
    }

    #[test]
    fn ffvd_case_three_presolves_small_inputs() {
        let f = Family::new(vec![Graph::complete(3), Graph::complete_bipartite(1, 2)]).unwrap();
        let g = Graph::cycle(4);
        let r = reduce_ffvd(&g, 2, &f, Case::CliqueAndStar).unwrap();
        assert_eq!(r.provenance.ramsey_threshold, Some(3));
        assert_eq!(r.provenance.ramsey_exact, Some(true));
        let expected = oracle::solve_ffvd(&g, 2, &f).unwrap().answer;
        assert_eq!(r.provenance.presolved, Some(expected));
        assert_eq!(answer(&r.instance), expected);

        let g = Graph::cycle(6);
        let r = reduce_ffvd(&g, 1, &f, Case::CliqueAndStar).unwrap();
        assert_eq!(r.provenance.presolved, None);
        assert_eq!(r.instance.k, 1 + 9 + 6 - 6);
    }

    #[test]
    fn ffvd_rejects_unsatisfied_case() {
        let f = Family::new(vec![Graph::complete(3)]).unwrap();
        assert!(matches!(
            reduce_ffvd(&Graph::path(3), 0, &f, Case::NoCompleteMember),
            Err(Error::InvalidCase(_))
        ));
    }

    #[test]
    fn instance_family_invariant() {
        assert!(Instance::new(Problem::Ffvd, Graph::new(1), 0, None).is_err());
        let f = Family::new(vec![Graph::complete(3)]).unwrap();
        assert!(Instance::new(Problem::Fvs, Graph::new(1), 0, Some(f)).is_err());
    }
}
