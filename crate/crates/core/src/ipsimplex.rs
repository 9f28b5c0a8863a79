//! Circuits of vector configurations and IP-simplices.

use crate::arith;
use crate::error::Result;
use crate::polytope::LatticePolytope;

/// A minimal linear dependency `sum_k coeffs[k] * v[support[k]] = 0`,
/// primitive, with the first coefficient positive.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Circuit {
    pub support: Vec<usize>,
    pub coeffs: Vec<i64>,
}

impl Circuit {
    pub fn positive(&self) -> Vec<usize> {
        self.part(|c| c > 0)
    }

    pub fn negative(&self) -> Vec<usize> {
        self.part(|c| c < 0)
    }

    fn part(&self, keep: impl Fn(i64) -> bool) -> Vec<usize> {
        self.support
            .iter()
            .zip(&self.coeffs)
            .filter(|&(_, &c)| keep(c))
            .map(|(&i, _)| i)
            .collect()
    }
}

fn columns_as_rows(vectors: &[Vec<i64>], cols: &[usize]) -> Vec<Vec<i64>> {
    let dim = vectors[cols[0]].len();
    (0..dim).map(|k| cols.iter().map(|&c| vectors[c][k]).collect()).collect()
}

/// All circuits among `vectors`, each support sorted ascending.
pub fn circuits(vectors: &[Vec<i64>]) -> Result<Vec<Circuit>> {
    let mut out = Vec::new();
    if vectors.is_empty() {
        return Ok(out);
    }
    let mut set = Vec::new();
    extend(vectors, 0, &mut set, &mut out)?;
    out.sort_by(|a, b| (a.support.len(), &a.support).cmp(&(b.support.len(), &b.support)));
    Ok(out)
}

// `set` is linearly independent; every circuit is found from its support
// minus its largest element.
fn extend(vectors: &[Vec<i64>], start: usize, set: &mut Vec<usize>, out: &mut Vec<Circuit>) -> Result<()> {
    let dim = vectors[0].len();
    for p in start..vectors.len() {
        set.push(p);
        let ker = arith::integer_kernel(&columns_as_rows(vectors, set), set.len())?;
        if ker.is_empty() {
            if set.len() <= dim {
                extend(vectors, p + 1, set, out)?;
            }
        } else {
            let mut coeffs = arith::primitive(&ker[0]);
            if coeffs.iter().all(|&c| c != 0) {
                if coeffs[0] < 0 {
                    coeffs.iter_mut().for_each(|c| *c = -*c);
                }
                out.push(Circuit { support: set.clone(), coeffs });
            }
        }
        set.pop();
    }
    Ok(())
}

/// A positive relation among divisor points whose support spans a simplex
/// with the origin in its relative interior.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IpSimplex {
    /// One entry per divisor point.
    pub coefficients: Vec<i64>,
    pub degree: i64,
    pub codim: usize,
}

/// IP-simplices among the points of `p` that are neither the origin nor
/// interior to a facet, sorted by descending degree.
pub fn ip_simplices(p: &LatticePolytope) -> Result<Vec<IpSimplex>> {
    let vectors = p.divisor_vectors();
    let n = vectors.len();
    let mut out: Vec<IpSimplex> = circuits(&vectors)?
        .into_iter()
        .filter(|c| c.coeffs.iter().all(|&x| x > 0))
        .map(|c| {
            let mut coefficients = vec![0; n];
            for (&i, &x) in c.support.iter().zip(&c.coeffs) {
                coefficients[i] = x;
            }
            IpSimplex {
                degree: c.coeffs.iter().sum(),
                codim: p.dim() + 1 - c.support.len(),
                coefficients,
            }
        })
        .collect();
    out.sort_by(|a, b| b.degree.cmp(&a.degree).then_with(|| b.coefficients.cmp(&a.coefficients)));
    Ok(out)
}

/// Incidence words of the facets over the divisor points.
pub fn incidence(p: &LatticePolytope) -> Vec<String> {
    let map = p.divisor_index();
    let n = p.divisor_points().len();
    p.facets()
        .iter()
        .map(|f| {
            let set: Vec<usize> = f.points.iter().filter_map(|&i| map[i]).collect();
            crate::words::word(&set, n)
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn circuits_of_square() {
        // (1,0),(0,1),(-1,0),(0,-1): circuits {0,2}, {1,3}
        let v = vec![vec![1, 0], vec![0, 1], vec![-1, 0], vec![0, -1]];
        let c = circuits(&v).unwrap();
        let supports: Vec<Vec<usize>> = c.iter().map(|c| c.support.clone()).collect();
        assert!(supports.contains(&vec![0, 2]));
        assert!(supports.contains(&vec![1, 3]));
        assert_eq!(c.len(), 2);
        for c in &c {
            let mut s = vec![0i64; 2];
            for (&i, &x) in c.support.iter().zip(&c.coeffs) {
                s[0] += x * v[i][0];
                s[1] += x * v[i][1];
            }
            assert_eq!(s, vec![0, 0]);
        }
    }

    #[test]
    fn projective_plane_has_one_ip_simplex() {
        let p = LatticePolytope::new(2, vec![vec![1, 0], vec![0, 1], vec![-1, -1]]).unwrap();
        let ip = ip_simplices(&p).unwrap();
        assert_eq!(ip, vec![IpSimplex { coefficients: vec![1, 1, 1], degree: 3, codim: 0 }]);
        let mut inc = incidence(&p);
        inc.sort();
        assert_eq!(inc, vec!["011", "101", "110"]);
    }
}
