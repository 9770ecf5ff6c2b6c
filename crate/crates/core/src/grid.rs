//! Grid point visibility graphs, their minimum dominating sets and the
//! logarithmic bounds on those sets.
//!
//! Logarithms are natural throughout.

use num_integer::Integer;
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::geometry::Point;
use crate::graph::Graph;
use crate::oracle::{Certificate, DominatingWitness, Witness};
use crate::visibility::Embedding;

/// The `n x m` lattice rectangle `{1..=n} x {1..=m}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct GridSpec {
    n: usize,
    m: usize,
}

impl GridSpec {
    pub fn new(n: usize, m: usize) -> Result<Self> {
        if n == 0 || m == 0 {
            return Err(Error::Domain(format!("grid dimensions must be positive, got {n}x{m}")));
        }
        Ok(GridSpec { n, m })
    }

    pub fn square(n: usize) -> Result<Self> {
        GridSpec::new(n, n)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn len(&self) -> usize {
        self.n * self.m
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// `(x, y) -> (x - 1) * m + (y - 1)`.
    pub fn index(&self, x: usize, y: usize) -> usize {
        assert!((1..=self.n).contains(&x) && (1..=self.m).contains(&y), "({x}, {y}) is off the grid");
        (x - 1) * self.m + (y - 1)
    }

    pub fn coords(&self, index: usize) -> (usize, usize) {
        assert!(index < self.len());
        (index / self.m + 1, index % self.m + 1)
    }

    /// The literal lattice points, in index order.
    pub fn embedding(&self) -> Embedding {
        let points = (0..self.len())
            .map(|i| {
                let (x, y) = self.coords(i);
                Point::from_ints(x as i64, y as i64)
            })
            .collect();
        Embedding::new(points).expect("lattice points are distinct")
    }
}

/// Two lattice points see each other iff their coordinate differences are coprime.
pub fn grid_visible(p: (i64, i64), q: (i64, i64)) -> Result<bool> {
    if p == q {
        return Err(Error::DegenerateSegment(format!("({}, {})", p.0, p.1)));
    }
    Ok((p.0 - q.0).abs().gcd(&(p.1 - q.1).abs()) == 1)
}

pub fn grid_pvg(spec: GridSpec) -> Graph {
    let mut g = Graph::new(spec.len());
    for i in 0..spec.len() {
        let (x1, y1) = spec.coords(i);
        for j in i + 1..spec.len() {
            let (x2, y2) = spec.coords(j);
            if grid_visible((x1 as i64, y1 as i64), (x2 as i64, y2 as i64)).expect("distinct indices") {
                g.add_edge(i, j);
            }
        }
    }
    g
}

/// The eight symmetries of the `n x n` grid as index permutations.
pub fn square_symmetries(n: usize) -> Vec<Vec<usize>> {
    let spec = GridSpec::square(n).expect("n >= 1");
    let r = |c: usize| n + 1 - c;
    let apply = |sym: usize, x: usize, y: usize| match sym {
        0 => (x, y),
        1 => (r(x), y),
        2 => (x, r(y)),
        3 => (r(x), r(y)),
        4 => (y, x),
        5 => (r(y), x),
        6 => (y, r(x)),
        _ => (r(y), r(x)),
    };
    (0..8)
        .map(|sym| {
            (0..spec.len())
                .map(|i| {
                    let (x, y) = spec.coords(i);
                    let (a, b) = apply(sym, x, y);
                    spec.index(a, b)
                })
                .collect()
        })
        .collect()
}

/// Closed neighbourhoods of a graph as multiword bitsets.
struct Closed {
    words: usize,
    rows: Vec<Vec<u64>>,
}

impl Closed {
    fn new(g: &Graph) -> Self {
        let n = g.vertex_count();
        let words = n.div_ceil(64).max(1);
        let rows = (0..n)
            .map(|v| {
                let mut row = vec![0u64; words];
                for w in std::iter::once(v).chain(g.neighbors(v)) {
                    row[w / 64] |= 1 << (w % 64);
                }
                row
            })
            .collect();
        Closed { words, rows }
    }

    fn full(&self) -> Vec<u64> {
        let n = self.rows.len();
        (0..self.words)
            .map(|w| {
                let lo = w * 64;
                match n.saturating_sub(lo) {
                    0 => 0,
                    k if k >= 64 => u64::MAX,
                    k => (1u64 << k) - 1,
                }
            })
            .collect()
    }

    /// Depth-first search for `need` more vertices from `pool[from..]` that
    /// together with `covered` dominate everything.
    fn extend(&self, covered: &[u64], full: &[u64], pool: &[usize], from: usize, need: usize, chosen: &mut Vec<usize>) -> bool {
        if covered == full {
            return true;
        }
        if need == 0 {
            return false;
        }
        for i in from..pool.len() {
            if pool.len() - i < need {
                break;
            }
            let v = pool[i];
            let next: Vec<u64> = covered.iter().zip(&self.rows[v]).map(|(a, b)| a | b).collect();
            chosen.push(v);
            if self.extend(&next, full, pool, i + 1, need - 1, chosen) {
                return true;
            }
            chosen.pop();
        }
        false
    }

    /// Smallest (lexicographically first) set of at most `size` vertices
    /// containing `first` and dominating everything.
    fn with_first(&self, first: usize, size: usize, pool: &[usize]) -> Option<Vec<usize>> {
        let full = self.full();
        let mut chosen = vec![first];
        self.extend(&self.rows[first].clone(), &full, pool, 0, size - 1, &mut chosen)
            .then_some(chosen)
    }
}

/// Points of the `n x n` grid whose orbit under the square's symmetries they
/// represent: `x <= y <= ceil(n / 2)`.
fn fundamental_domain(spec: GridSpec) -> Vec<usize> {
    let half = spec.n.div_ceil(2);
    (1..=half)
        .flat_map(|x| (x..=half).map(move |y| (x, y)))
        .map(|(x, y)| spec.index(x, y))
        .collect()
}

/// Whether some dominating set of exactly `size` vertices exists.
///
/// Every dominating set has an image under the symmetry group containing a
/// point of the fundamental domain, so only those need to be tried first.
fn exists_of_size(c: &Closed, spec: GridSpec, size: usize) -> bool {
    fundamental_domain(spec).into_par_iter().any(|p| {
        let pool: Vec<usize> = (0..spec.len()).filter(|&v| v != p).collect();
        c.with_first(p, size, &pool).is_some()
    })
}

/// The lexicographically least dominating set of exactly `size` vertices.
fn lex_least_of_size(c: &Closed, n: usize, size: usize) -> Option<Vec<usize>> {
    (0..n).into_par_iter().find_map_first(|p| {
        let pool: Vec<usize> = (p + 1..n).collect();
        c.with_first(p, size, &pool)
    })
}

/// Upper end of the search for `f(n)`: `ceil(4 ln n)`, at least 1.
pub fn search_cap(n: usize) -> usize {
    if n < 2 {
        1
    } else {
        (4.0 * (n as f64).ln()).ceil() as usize
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GridDomination {
    pub n: usize,
    pub size: usize,
    pub set: Vec<usize>,
    /// The set as 1-based `(x, y)` lattice points.
    pub points: Vec<(usize, usize)>,
    pub verified: bool,
    /// Set when no dominating set within `ceil(4 ln n)` existed and the search went past it.
    pub exceeded_upper_bound: bool,
}

impl GridDomination {
    pub fn witness(&self) -> DominatingWitness {
        DominatingWitness {
            set: self.set.clone(),
            verified: self.verified,
        }
    }
}

/// `f(n)` with the lexicographically least optimal set of the `n x n` grid.
pub fn grid_min_dominating(n: usize) -> Result<GridDomination> {
    let spec = GridSpec::square(n)?;
    let g = grid_pvg(spec);
    let c = Closed::new(&g);
    let cap = search_cap(n);
    let size = (1..=spec.len())
        .find(|&s| exists_of_size(&c, spec, s))
        .expect("the whole grid dominates itself");
    let set = lex_least_of_size(&c, spec.len(), size).expect("a set of this size exists");
    Ok(GridDomination {
        n,
        size,
        points: set.iter().map(|&v| spec.coords(v)).collect(),
        verified: crate::oracle::is_dominating(&g, &set),
        set,
        exceeded_upper_bound: size > cap,
    })
}

pub fn abbott_upper(n: usize) -> Result<f64> {
    if n < 2 {
        return Err(Error::Domain(format!("upper bound needs n >= 2, got {n}")));
    }
    Ok(4.0 * (n as f64).ln())
}

/// `ln n / (2 ln ln n)`. Only meaningful asymptotically.
pub fn abbott_lower(n: usize) -> Result<f64> {
    if n < 3 {
        return Err(Error::Domain(format!("lower bound needs n >= 3, got {n}")));
    }
    let l = (n as f64).ln();
    Ok(l / (2.0 * l.ln()))
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct AbbottBounds {
    /// `None` below `n = 3`, where `ln ln n <= 0`.
    pub lower: Option<f64>,
    pub upper: f64,
    /// The lower bound holds only for sufficiently large `n`.
    pub asymptotic_only: bool,
}

pub fn abbott_bounds(n: usize) -> Result<AbbottBounds> {
    Ok(AbbottBounds {
        upper: abbott_upper(n)?,
        lower: abbott_lower(n).ok(),
        asymptotic_only: true,
    })
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct BoundRow {
    pub n: usize,
    pub f_n: usize,
    pub lower: Option<f64>,
    pub upper: f64,
}

pub fn bounds_table(n_max: usize) -> Result<Vec<BoundRow>> {
    if n_max < 2 {
        return Err(Error::Domain(format!("bounds table needs n_max >= 2, got {n_max}")));
    }
    (2..=n_max)
        .map(|n| {
            let b = abbott_bounds(n)?;
            Ok(BoundRow {
                n,
                f_n: grid_min_dominating(n)?.size,
                lower: b.lower,
                upper: b.upper,
            })
        })
        .collect()
}

/// `n,f,lower,upper` with six fractional digits; an undefined lower bound is left empty.
pub fn bounds_csv(rows: &[BoundRow]) -> String {
    let mut out = String::from("n,f,lower,upper\n");
    for r in rows {
        let lower = r.lower.map(|l| format!("{l:.6}")).unwrap_or_default();
        out.push_str(&format!("{},{},{},{:.6}\n", r.n, r.f_n, lower, r.upper));
    }
    out
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct FptConfig {
    /// Answer "no" without searching when `k` is below the lower bound and
    /// `n` exceeds this. `None` disables the shortcut.
    pub presolve_above: Option<usize>,
}

/// Does the `n x n` grid have a dominating set of at most `k` points?
pub fn fpt_dominating(n: usize, k: usize, config: FptConfig) -> Result<Witness> {
    let spec = GridSpec::square(n)?;
    if let Some(threshold) = config.presolve_above {
        if n > threshold && abbott_lower(n).is_ok_and(|l| (k as f64) < l) {
            return Ok(Witness::no());
        }
    }
    let g = grid_pvg(spec);
    let c = Closed::new(&g);
    match (1..=k.min(spec.len())).find(|&s| exists_of_size(&c, spec, s)) {
        Some(s) => {
            let set = lex_least_of_size(&c, spec.len(), s).expect("a set of this size exists");
            Ok(Witness::yes(Certificate::Vertices(set)))
        }
        None => Ok(Witness::no()),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::is_dominating;
    use crate::visibility::visibility_graph;

    #[test]
    fn visibility_rule_examples() {
        assert_eq!(grid_visible((1, 1), (2, 3)), Ok(true));
        assert_eq!(grid_visible((1, 1), (3, 3)), Ok(false));
        assert_eq!(grid_visible((1, 1), (1, 3)), Ok(false));
        assert_eq!(grid_visible((1, 1), (1, 2)), Ok(true));
        assert!(grid_visible((2, 2), (2, 2)).is_err());
    }

    #[test]
    fn small_grids() {
        assert_eq!(grid_pvg(GridSpec::new(2, 2).unwrap()), Graph::complete(4));
        let g = grid_pvg(GridSpec::new(3, 3).unwrap());
        assert_eq!(g.degree(GridSpec::new(3, 3).unwrap().index(2, 2)), 8);
        assert_eq!(grid_pvg(GridSpec::new(1, 5).unwrap()), Graph::path(5));
        assert!(GridSpec::new(0, 3).is_err());
    }

    #[test]
    fn index_map_is_column_major_from_origin() {
        let s = GridSpec::new(3, 4).unwrap();
        assert_eq!(s.index(1, 1), 0);
        assert_eq!(s.index(1, 4), 3);
        assert_eq!(s.index(2, 1), 4);
        assert_eq!(s.coords(11), (3, 4));
    }

    #[test]
    fn coprimality_matches_geometry() {
        for n in 1..=5 {
            for m in 1..=5 {
                let s = GridSpec::new(n, m).unwrap();
                assert_eq!(grid_pvg(s), visibility_graph(&s.embedding()), "{n}x{m}");
            }
        }
    }

    #[test]
    fn symmetries_are_automorphisms() {
        let g = grid_pvg(GridSpec::square(5).unwrap());
        for perm in square_symmetries(5) {
            for (u, v) in g.edges() {
                assert!(g.has_edge(perm[u], perm[v]));
            }
        }
    }

    #[test]
    fn fundamental_domain_meets_every_orbit() {
        for n in 1..=7 {
            let dom = fundamental_domain(GridSpec::square(n).unwrap());
            let syms = square_symmetries(n);
            for v in 0..n * n {
                assert!(syms.iter().any(|p| dom.contains(&p[v])), "n={n} v={v}");
            }
        }
    }

    #[test]
    fn small_f_values() {
        assert_eq!(grid_min_dominating(1).unwrap().size, 1);
        assert_eq!(grid_min_dominating(2).unwrap().size, 1);
        let three = grid_min_dominating(3).unwrap();
        assert_eq!(three.size, 1);
        let four = grid_min_dominating(4).unwrap();
        assert_eq!(four.size, 2);
        assert!(four.verified);
        assert!(!four.exceeded_upper_bound);
        let g = grid_pvg(GridSpec::square(4).unwrap());
        let s = GridSpec::square(4).unwrap();
        assert!(is_dominating(&g, &[s.index(2, 2), s.index(2, 3)]));
        assert!(!is_dominating(&g, &[s.index(2, 2)]));
    }

    #[test]
    fn reported_set_is_lexicographically_least() {
        let s = GridSpec::square(4).unwrap();
        let g = grid_pvg(s);
        let found = grid_min_dominating(4).unwrap().set;
        let n = s.len();
        let least = (0..n)
            .flat_map(|a| (a + 1..n).map(move |b| vec![a, b]))
            .find(|set| is_dominating(&g, set))
            .unwrap();
        assert_eq!(found, least);
    }

    #[test]
    fn bound_values() {
        assert!((abbott_upper(16).unwrap() - 11.090355).abs() < 1e-6);
        assert!((abbott_upper(2).unwrap() - 2.772589).abs() < 1e-6);
        assert!(abbott_lower(2).is_err());
        let l3 = abbott_lower(3).unwrap();
        assert!((l3 - 3f64.ln() / (2.0 * 3f64.ln().ln())).abs() < 1e-12);
        let b = abbott_bounds(2).unwrap();
        assert_eq!(b.lower, None);
        assert!(abbott_bounds(1).is_err());
    }

    #[test]
    fn table_and_csv() {
        let rows = bounds_table(4).unwrap();
        assert_eq!(rows.iter().map(|r| r.f_n).collect::<Vec<_>>(), vec![1, 1, 2]);
        let csv = bounds_csv(&rows);
        let lines: Vec<&str> = csv.lines().collect();
        assert_eq!(lines[0], "n,f,lower,upper");
        assert_eq!(lines[1], "2,1,,2.772589");
        assert!(lines[2].starts_with("3,1,5.84"), "{}", lines[2]);
        assert!(bounds_table(1).is_err());
    }

    #[test]
    fn fpt_examples() {
        let cfg = FptConfig::default();
        assert!(fpt_dominating(3, 1, cfg).unwrap().answer);
        assert!(!fpt_dominating(4, 1, cfg).unwrap().answer);
        assert!(fpt_dominating(4, 2, cfg).unwrap().answer);
        assert!(!fpt_dominating(4, 0, cfg).unwrap().answer);
        let eager = FptConfig { presolve_above: Some(3) };
        assert!(!fpt_dominating(20, 1, eager).unwrap().answer);
    }
}
