//! Finite families of forbidden induced subgraphs and the case analysis
//! that decides which F-free deletion reduction applies.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::oracle::Masks;

/// A nonempty list of forbidden induced subgraphs.
///
/// Members need at least two vertices: with `K1` in the family no nonempty
/// graph is F-free, so it is rejected up front.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Family {
    members: Vec<Graph>,
}

impl Family {
    pub fn new(members: Vec<Graph>) -> Result<Self> {
        if members.is_empty() {
            return Err(Error::InvalidFamily("family has no members".into()));
        }
        for (i, h) in members.iter().enumerate() {
            match h.vertex_count() {
                0 => return Err(Error::InvalidFamily(format!("member {i} has no vertices"))),
                1 => return Err(Error::InvalidFamily(format!("member {i} is K1"))),
                _ => {}
            }
            if h.vertex_count() > crate::oracle::MASK_LIMIT {
                return Err(Error::InvalidFamily(format!("member {i} is too large")));
            }
        }
        Ok(Family { members })
    }

    pub fn members(&self) -> &[Graph] {
        &self.members
    }

    /// Largest number of universal vertices in any member.
    pub fn max_universal(&self) -> usize {
        self.members.iter().map(|h| h.universal_vertices().len()).max().unwrap_or(0)
    }

    /// Every member with its universal vertices removed.
    pub fn strip_universal(&self) -> Result<Family> {
        let stripped = self
            .members
            .iter()
            .map(|h| {
                let keep: Vec<usize> = (0..h.vertex_count()).filter(|&v| !h.is_universal(v)).collect();
                h.induced(&keep)
            })
            .collect();
        Family::new(stripped)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Case {
    #[serde(rename = "i")]
    NoCompleteMember,
    #[serde(rename = "ii")]
    RobustClique,
    #[serde(rename = "iii")]
    CliqueAndStar,
}

impl fmt::Display for Case {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Case::NoCompleteMember => "i",
            Case::RobustClique => "ii",
            Case::CliqueAndStar => "iii",
        })
    }
}

impl FromStr for Case {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "i" => Ok(Case::NoCompleteMember),
            "ii" => Ok(Case::RobustClique),
            "iii" => Ok(Case::CliqueAndStar),
            other => Err(Error::InvalidCase(other.to_string())),
        }
    }
}

/// Which reduction cases a family satisfies, with the parameters each uses.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FamilyProfile {
    pub cases: Vec<Case>,
    /// Smallest `t >= 3` witnessing case ii.
    pub clique_t: Option<usize>,
    /// Smallest `(t, t')` witnessing case iii.
    pub clique_star: Option<(usize, usize)>,
}

impl FamilyProfile {
    pub fn satisfies(&self, case: Case) -> bool {
        self.cases.contains(&case)
    }
}

pub fn isomorphic(a: &Graph, b: &Graph) -> bool {
    if a.vertex_count() != b.vertex_count()
        || a.edge_count() != b.edge_count()
        || a.degree_sequence() != b.degree_sequence()
    {
        return false;
    }
    match (Masks::new(a), Masks::new(b)) {
        (Ok(ma), Ok(mb)) => ma.contains_induced(ma.full(), &mb),
        _ => false,
    }
}

fn contains_induced(g: &Graph, h: &Graph) -> bool {
    match (Masks::new(g), Masks::new(h)) {
        (Ok(mg), Ok(mh)) => mg.contains_induced(mg.full(), &mh),
        _ => false,
    }
}

/// True iff deleting fewer than two vertices can make `h` free of `K_s`.
fn cheaply_clique_free(h: &Graph, s: usize) -> bool {
    let ks = Graph::complete(s);
    if !contains_induced(h, &ks) {
        return true;
    }
    (0..h.vertex_count()).any(|v| {
        let keep: Vec<usize> = (0..h.vertex_count()).filter(|&w| w != v).collect();
        !contains_induced(&h.induced(&keep), &ks)
    })
}

/// Checks each case hypothesis exhaustively on the members.
pub fn validate_family(f: &Family) -> FamilyProfile {
    let members = f.members();
    let clique_sizes: Vec<usize> = {
        let mut ts: Vec<usize> = members
            .iter()
            .filter(|h| isomorphic(h, &Graph::complete(h.vertex_count())))
            .map(Graph::vertex_count)
            .collect();
        ts.sort_unstable();
        ts
    };
    let star_sizes: Vec<usize> = {
        let mut ts: Vec<usize> = members
            .iter()
            .filter(|h| h.vertex_count() >= 3)
            .filter(|h| isomorphic(h, &Graph::complete_bipartite(1, h.vertex_count() - 1)))
            .map(|h| h.vertex_count() - 1)
            .collect();
        ts.sort_unstable();
        ts
    };

    let mut cases = Vec::new();
    if clique_sizes.is_empty() {
        cases.push(Case::NoCompleteMember);
    }

    let clique_t = clique_sizes
        .iter()
        .copied()
        .filter(|&t| t >= 3)
        .find(|&t| members.iter().all(|h| !cheaply_clique_free(h, t - 1)));
    if clique_t.is_some() {
        cases.push(Case::RobustClique);
    }

    let has_edgeless = members.iter().any(|h| h.edge_count() == 0);
    let clique_star = match (clique_sizes.iter().find(|&&t| t >= 3), star_sizes.first()) {
        (Some(&t), Some(&s)) if !has_edgeless => Some((t, s)),
        _ => None,
    };
    if clique_star.is_some() {
        cases.push(Case::CliqueAndStar);
    }

    FamilyProfile {
        cases,
        clique_t,
        clique_star,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fam(members: Vec<Graph>) -> Family {
        Family::new(members).unwrap()
    }

    #[test]
    fn rejects_degenerate_members() {
        assert!(Family::new(vec![]).is_err());
        assert!(Family::new(vec![Graph::new(0)]).is_err());
        assert!(Family::new(vec![Graph::new(1)]).is_err());
    }

    #[test]
    fn triangle_is_case_two() {
        let p = validate_family(&fam(vec![Graph::complete(3)]));
        assert_eq!(p.cases, vec![Case::RobustClique]);
        assert_eq!(p.clique_t, Some(3));
    }

    #[test]
    fn p3_is_case_one() {
        let p = validate_family(&fam(vec![Graph::path(3)]));
        assert_eq!(p.cases, vec![Case::NoCompleteMember]);
    }

    #[test]
    fn triangle_and_cherry_is_case_three() {
        let p = validate_family(&fam(vec![Graph::complete(3), Graph::complete_bipartite(1, 2)]));
        assert_eq!(p.cases, vec![Case::CliqueAndStar]);
        assert_eq!(p.clique_star, Some((3, 2)));
        // P3 becomes K2-free by deleting its centre
        assert_eq!(p.clique_t, None);
    }

    #[test]
    fn k4_is_case_two() {
        let p = validate_family(&fam(vec![Graph::complete(4)]));
        assert_eq!(p.cases, vec![Case::RobustClique]);
        assert_eq!(p.clique_t, Some(4));
    }

    #[test]
    fn k2_is_no_case() {
        let p = validate_family(&fam(vec![Graph::complete(2)]));
        assert!(p.cases.is_empty());
    }

    #[test]
    fn star_detection_is_structural() {
        // relabelled K_{1,3} with the centre last
        let star = Graph::from_edges(4, &[(0, 3), (1, 3), (2, 3)]).unwrap();
        let p = validate_family(&fam(vec![Graph::complete(3), star]));
        assert_eq!(p.clique_star, Some((3, 3)));
        let p = validate_family(&fam(vec![Graph::complete(3), Graph::path(4)]));
        assert_eq!(p.clique_star, None);
    }

    #[test]
    fn stripping_universal_vertices() {
        let f = fam(vec![Graph::path(3)]);
        assert_eq!(f.max_universal(), 1);
        let stripped = f.strip_universal().unwrap();
        assert_eq!(stripped.members(), &[Graph::new(2)]);
    }
}
