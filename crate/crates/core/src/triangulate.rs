//! Fine star triangulations of reflexive polytopes and their Stanley-Reisner
//! ideals.
//!
//! Simplices are index sets over the divisor points of the polytope (the
//! nonzero points not interior to a facet), sorted ascending.

use std::collections::{BTreeSet, HashMap, HashSet};

use crate::arith::{self, Q};
use crate::error::{Error, Result};
use crate::ipsimplex::{circuits, Circuit};
use crate::lp;
use crate::polytope::LatticePolytope;
use crate::words::{is_subset, word, word_cmp};

pub const DEFAULT_CAP: usize = 16;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StarTriangulation {
    dim: usize,
    vectors: Vec<Vec<i64>>,
    simplices: Vec<Vec<usize>>,
    facet_of: Vec<usize>,
}

impl StarTriangulation {
    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Divisor vectors, in divisor order.
    pub fn vectors(&self) -> &[Vec<i64>] {
        &self.vectors
    }

    pub fn num_divisors(&self) -> usize {
        self.vectors.len()
    }

    /// Maximal simplices in print order.
    pub fn simplices(&self) -> &[Vec<usize>] {
        &self.simplices
    }

    /// Index of the facet of the polytope carrying each simplex.
    pub fn facet_of(&self) -> &[usize] {
        &self.facet_of
    }

    pub fn words(&self) -> Vec<String> {
        self.simplices.iter().map(|s| word(s, self.vectors.len())).collect()
    }

    /// Lattice volume `|det|` of simplex `k`.
    pub fn volume(&self, k: usize) -> Result<i64> {
        simplex_det(&self.vectors, &self.simplices[k]).and_then(|d| arith::checked(d.abs()))
    }

    /// Whether `set` (sorted) lies in a common simplex.
    pub fn is_face(&self, set: &[usize]) -> bool {
        self.simplices.iter().any(|s| is_subset(set, s))
    }

    /// Some maximal simplex containing `set`, searching from the front or
    /// the back of the simplex list.
    pub fn simplex_containing(&self, set: &[usize], from_back: bool) -> Option<&[usize]> {
        let found = if from_back {
            self.simplices.iter().rev().find(|s| is_subset(set, s))
        } else {
            self.simplices.iter().find(|s| is_subset(set, s))
        };
        found.map(|s| s.as_slice())
    }

    fn sorted_key(&self) -> Vec<Vec<usize>> {
        let mut v = self.simplices.clone();
        v.sort_by(|a, b| word_cmp(a, b));
        v
    }
}

fn columns(vectors: &[Vec<i64>], set: &[usize]) -> Vec<Vec<i64>> {
    set.iter().map(|&i| vectors[i].clone()).collect()
}

fn simplex_det(vectors: &[Vec<i64>], set: &[usize]) -> Result<i128> {
    arith::det(&columns(vectors, set))
}

fn subsets(items: &[usize], k: usize) -> Vec<Vec<usize>> {
    fn go(items: &[usize], k: usize, start: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..items.len() {
            if items.len() - i < k - cur.len() {
                break;
            }
            cur.push(items[i]);
            go(items, k, i + 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(items, k, 0, &mut Vec::new(), &mut out);
    out
}

/// Whether two simplices meet in a common face: no circuit has its positive
/// part in one and its negative part in the other.
fn proper(circuits: &[Circuit], a: &[usize], b: &[usize]) -> bool {
    circuits.iter().all(|c| {
        let (pos, neg) = (c.positive(), c.negative());
        !((is_subset(&pos, a) && is_subset(&neg, b)) || (is_subset(&pos, b) && is_subset(&neg, a)))
    })
}

/// Fine triangulations of one facet, given its divisor indices.
struct FacetSearch<'a> {
    vectors: &'a [Vec<i64>],
    points: Vec<usize>,
    circuits: Vec<Circuit>,
    found: BTreeSet<Vec<Vec<usize>>>,
}

impl<'a> FacetSearch<'a> {
    fn new(vectors: &'a [Vec<i64>], points: Vec<usize>) -> Result<Self> {
        let local: Vec<Vec<i64>> = points.iter().map(|&i| vectors[i].clone()).collect();
        let circuits = circuits(&local)?
            .into_iter()
            .map(|c| Circuit { support: c.support.iter().map(|&k| points[k]).collect(), coeffs: c.coeffs })
            .collect();
        Ok(FacetSearch { vectors, points, circuits, found: BTreeSet::new() })
    }

    fn sign(&self, ridge: &[usize], q: usize) -> Result<i32> {
        let mut cols = columns(self.vectors, ridge);
        cols.push(self.vectors[q].clone());
        Ok(arith::det(&cols)?.signum() as i32)
    }

    fn run(&mut self) -> Result<Vec<Vec<Vec<usize>>>> {
        let dim = self.vectors[0].len();
        let first = self.points[0];
        for s in subsets(&self.points, dim) {
            if s[0] == first && simplex_det(self.vectors, &s)? != 0 {
                let mut open = HashMap::new();
                let mut tri = Vec::new();
                self.add(&s, &mut tri, &mut open);
                self.extend(&mut tri, &mut open)?;
            }
        }
        let mut out: Vec<Vec<Vec<usize>>> = std::mem::take(&mut self.found).into_iter().collect();
        for t in &mut out {
            t.sort_by(|a, b| word_cmp(a, b));
        }
        out.sort_by(|a, b| cmp_lists(a, b));
        Ok(out)
    }

    fn add(&self, s: &[usize], tri: &mut Vec<Vec<usize>>, open: &mut HashMap<Vec<usize>, usize>) {
        for k in 0..s.len() {
            let mut ridge = s.to_vec();
            let apex = ridge.remove(k);
            if open.remove(&ridge).is_none() {
                open.insert(ridge, apex);
            }
        }
        tri.push(s.to_vec());
    }

    fn remove(&self, tri: &mut Vec<Vec<usize>>, open: &mut HashMap<Vec<usize>, usize>) {
        let s = tri.pop().expect("nonempty");
        for k in 0..s.len() {
            let mut ridge = s.clone();
            let apex = ridge.remove(k);
            if open.remove(&ridge).is_none() {
                // the ridge was closed by `s`; reopen it from the other side
                let other = tri.iter().find(|t| is_subset(&ridge, t)).expect("closed ridge has two sides");
                let opp = *other.iter().find(|x| !ridge.contains(x)).expect("apex");
                debug_assert_ne!(opp, apex);
                open.insert(ridge, opp);
            }
        }
    }

    fn extend(&mut self, tri: &mut Vec<Vec<usize>>, open: &mut HashMap<Vec<usize>, usize>) -> Result<()> {
        // the smallest open ridge with points beyond it
        let mut ridges: Vec<(&Vec<usize>, &usize)> = open.iter().collect();
        ridges.sort();
        let mut target = None;
        for (ridge, &apex) in ridges {
            let side = self.sign(ridge, apex)?;
            let mut beyond = Vec::new();
            for &q in &self.points {
                if self.sign(ridge, q)? == -side {
                    beyond.push(q);
                }
            }
            if !beyond.is_empty() {
                target = Some((ridge.clone(), beyond));
                break;
            }
        }
        let Some((ridge, beyond)) = target else {
            let used: HashSet<usize> = tri.iter().flatten().copied().collect();
            if self.points.iter().all(|p| used.contains(p)) {
                let mut t = tri.clone();
                t.sort();
                self.found.insert(t);
            }
            return Ok(());
        };
        for q in beyond {
            let mut s = ridge.clone();
            s.push(q);
            s.sort();
            if tri.contains(&s) || !tri.iter().all(|t| proper(&self.circuits, t, &s)) {
                continue;
            }
            self.add(&s, tri, open);
            self.extend(tri, open)?;
            self.remove(tri, open);
        }
        Ok(())
    }

    /// Whether some height function induces `tri`.
    fn is_regular(&self, tri: &[Vec<usize>]) -> Result<bool> {
        let index: HashMap<usize, usize> = self.points.iter().enumerate().map(|(k, &p)| (p, k)).collect();
        let n = self.points.len();
        let mut rows = Vec::new();
        for s in tri {
            let cols = columns(self.vectors, s);
            for &q in &self.points {
                if s.contains(&q) {
                    continue;
                }
                let lambda = arith::solve(&cols, &self.vectors[q]).expect("simplex spans");
                let mut row = vec![Q::from_integer(0.into()); n];
                row[index[&q]] += arith::q(1);
                for (l, &p) in lambda.iter().zip(s) {
                    row[index[&p]] -= l;
                }
                rows.push(row);
            }
        }
        Ok(lp::strictly_feasible(&rows))
    }
}

fn cmp_lists(a: &[Vec<usize>], b: &[Vec<usize>]) -> std::cmp::Ordering {
    for (x, y) in a.iter().zip(b) {
        let c = word_cmp(x, y);
        if c.is_ne() {
            return c;
        }
    }
    a.len().cmp(&b.len())
}

/// Regular fine triangulations of every facet, combined into all compatible
/// star triangulations of `p`.
///
/// Facets with more than `cap` non-interior points abort with
/// [`Error::TriangulationCap`].
pub fn star_triangulations(p: &LatticePolytope, cap: usize) -> Result<Vec<StarTriangulation>> {
    let dim = p.dim();
    let vectors = p.divisor_vectors();
    let map = p.divisor_index();

    // per facet: the list of admissible triangulations
    let mut options: Vec<Vec<Vec<Vec<usize>>>> = Vec::new();
    for (k, f) in p.facets().iter().enumerate() {
        let pts: Vec<usize> = f.boundary_points().filter_map(|i| map[i]).collect();
        if pts.len() == dim {
            options.push(vec![vec![pts]]);
            continue;
        }
        if pts.len() > cap {
            return Err(Error::TriangulationCap { facet: k + 1, points: pts.len(), cap });
        }
        let mut search = FacetSearch::new(&vectors, pts)?;
        let all = search.run()?;
        let mut regular = Vec::new();
        for t in all {
            if search.is_regular(&t)? {
                regular.push(t);
            }
        }
        options.push(regular);
    }

    // facet pairs whose choices can conflict
    let facet_pts: Vec<Vec<usize>> = p
        .facets()
        .iter()
        .map(|f| f.boundary_points().filter_map(|i| map[i]).collect())
        .collect();
    let nf = options.len();
    let mut pair_circuits: HashMap<(usize, usize), Vec<Circuit>> = HashMap::new();
    for a in 0..nf {
        for b in a + 1..nf {
            let shared = facet_pts[a].iter().filter(|x| facet_pts[b].contains(x)).count();
            if shared >= 2 && (options[a].len() > 1 || options[b].len() > 1) {
                let union: Vec<usize> = {
                    let mut u: Vec<usize> = facet_pts[a].iter().chain(&facet_pts[b]).copied().collect();
                    u.sort();
                    u.dedup();
                    u
                };
                let local: Vec<Vec<i64>> = union.iter().map(|&i| vectors[i].clone()).collect();
                let cs = circuits(&local)?
                    .into_iter()
                    .map(|c| Circuit { support: c.support.iter().map(|&k| union[k]).collect(), coeffs: c.coeffs })
                    .collect();
                pair_circuits.insert((a, b), cs);
            }
        }
    }

    let mut results = Vec::new();
    let mut choice = Vec::with_capacity(nf);
    combine(&options, &pair_circuits, &mut choice, &mut results);

    let mut out: Vec<StarTriangulation> = results
        .into_iter()
        .map(|choice| assemble(dim, &vectors, &options, &choice))
        .collect();
    out.sort_by(|a, b| cmp_lists(&a.sorted_key(), &b.sorted_key()));
    Ok(out)
}

fn combine(
    options: &[Vec<Vec<Vec<usize>>>],
    pair_circuits: &HashMap<(usize, usize), Vec<Circuit>>,
    choice: &mut Vec<usize>,
    results: &mut Vec<Vec<usize>>,
) {
    let k = choice.len();
    if k == options.len() {
        results.push(choice.clone());
        return;
    }
    for (c, tri) in options[k].iter().enumerate() {
        let ok = (0..k).all(|a| match pair_circuits.get(&(a, k)) {
            None => true,
            Some(cs) => options[a][choice[a]].iter().all(|s| tri.iter().all(|t| proper(cs, s, t))),
        });
        if ok {
            choice.push(c);
            combine(options, pair_circuits, choice, results);
            choice.pop();
        }
    }
}

fn assemble(dim: usize, vectors: &[Vec<i64>], options: &[Vec<Vec<Vec<usize>>>], choice: &[usize]) -> StarTriangulation {
    let mut simplices = Vec::new();
    let mut facet_of = Vec::new();
    let mut rest: Vec<(Vec<usize>, usize)> = Vec::new();
    for (f, (opts, &c)) in options.iter().zip(choice).enumerate() {
        let tri = &opts[c];
        if tri.len() == 1 {
            simplices.push(tri[0].clone());
            facet_of.push(f);
        } else {
            rest.extend(tri.iter().map(|s| (s.clone(), f)));
        }
    }
    rest.sort_by(|a, b| word_cmp(&a.0, &b.0));
    for (s, f) in rest {
        simplices.push(s);
        facet_of.push(f);
    }
    StarTriangulation { dim, vectors: vectors.to_vec(), simplices, facet_of }
}

/// Minimal non-faces, as sorted index sets.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SrIdeal {
    pub generators: Vec<Vec<usize>>,
    len: usize,
}

impl SrIdeal {
    pub fn words(&self) -> Vec<String> {
        self.generators.iter().map(|g| word(g, self.len)).collect()
    }
}

pub fn stanley_reisner(t: &StarTriangulation) -> SrIdeal {
    let n = t.num_divisors();
    let mut faces: HashSet<Vec<usize>> = HashSet::new();
    for s in t.simplices() {
        for mask in 0u32..(1 << s.len()) {
            let f: Vec<usize> = (0..s.len()).filter(|&k| mask & (1 << k) != 0).map(|k| s[k]).collect();
            faces.insert(f);
        }
    }
    let mut gens: BTreeSet<(usize, Vec<usize>)> = BTreeSet::new();
    for f in &faces {
        for p in 0..n {
            if f.contains(&p) {
                continue;
            }
            let mut g = f.clone();
            g.push(p);
            g.sort();
            if faces.contains(&g) {
                continue;
            }
            let minimal = (0..g.len()).all(|k| {
                let mut h = g.clone();
                h.remove(k);
                faces.contains(&h)
            });
            if minimal {
                gens.insert((g.len(), g));
            }
        }
    }
    SrIdeal { generators: gens.into_iter().map(|(_, g)| g).collect(), len: n }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p2() -> LatticePolytope {
        LatticePolytope::new(2, vec![vec![1, 0], vec![0, 1], vec![-1, -1]]).unwrap()
    }

    #[test]
    fn projective_plane_has_one_triangulation() {
        let ts = star_triangulations(&p2(), DEFAULT_CAP).unwrap();
        assert_eq!(ts.len(), 1);
        assert_eq!(ts[0].simplices().len(), 3);
        assert_eq!(stanley_reisner(&ts[0]).words(), vec!["111"]);
    }

    #[test]
    fn hexagon_edges_are_subdivided() {
        // every edge of the hexagon is primitive
        let p = LatticePolytope::new(2, vec![vec![1, 0], vec![0, 1], vec![-1, -1], vec![-1, 0], vec![0, -1], vec![1, 1]]).unwrap();
        let ts = star_triangulations(&p, DEFAULT_CAP).unwrap();
        assert_eq!(ts.len(), 1);
        assert_eq!(ts[0].simplices().len(), 6);
    }

    #[test]
    fn cap_is_enforced() {
        let p = LatticePolytope::new(
            3,
            vec![vec![1, 0, 0], vec![-1, 0, 0], vec![0, 1, 0], vec![0, -1, 0], vec![0, 0, 1], vec![0, 0, -1]],
        )
        .unwrap()
        .dual()
        .unwrap();
        // the cube has 9 points per square facet, 8 of them on the boundary
        assert!(matches!(star_triangulations(&p, 4), Err(Error::TriangulationCap { points: 8, .. })));
    }

    #[test]
    fn subsets_count() {
        assert_eq!(subsets(&[0, 1, 2, 3, 4], 3).len(), 10);
    }
}
