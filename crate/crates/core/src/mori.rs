//! Mori cone generators of a simplicial toric variety from the relations of
//! adjacent maximal cones (Oda-Park).

use crate::arith;
use crate::error::Result;
use crate::lp;
use crate::triangulate::StarTriangulation;

/// Two maximal simplices sharing a ridge, with the relation among their
/// rays that is positive on the two rays off the ridge.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Wall {
    pub simplices: (usize, usize),
    pub ridge: Vec<usize>,
    /// One entry per divisor.
    pub relation: Vec<i64>,
}

pub fn walls(t: &StarTriangulation) -> Result<Vec<Wall>> {
    let s = t.simplices();
    let n = t.num_divisors();
    let mut out = Vec::new();
    for a in 0..s.len() {
        for b in a + 1..s.len() {
            let ridge: Vec<usize> = s[a].iter().copied().filter(|x| s[b].contains(x)).collect();
            if ridge.len() + 1 != t.dim() {
                continue;
            }
            let mut support = s[a].clone();
            support.extend(s[b].iter().copied().filter(|x| !ridge.contains(x)));
            let rows: Vec<Vec<i64>> = (0..t.dim()).map(|k| support.iter().map(|&i| t.vectors()[i][k]).collect()).collect();
            let ker = arith::integer_kernel(&rows, support.len())?;
            assert_eq!(ker.len(), 1, "adjacent simplicial cones have a unique relation");
            let mut r = arith::primitive(&ker[0]);
            let apex = support.iter().position(|x| !ridge.contains(x)).expect("apex of first simplex");
            if r[apex] < 0 {
                r.iter_mut().for_each(|x| *x = -*x);
            }
            let mut relation = vec![0; n];
            for (&i, &c) in support.iter().zip(&r) {
                relation[i] = c;
            }
            out.push(Wall { simplices: (a, b), ridge, relation });
        }
    }
    Ok(out)
}

/// Extremal rays of the cone spanned by the wall relations, primitive and
/// sorted lexicographically.
pub fn mori_generators(walls: &[Wall]) -> Vec<Vec<i64>> {
    let mut rays: Vec<Vec<i64>> = walls.iter().map(|w| arith::primitive(&w.relation)).collect();
    rays.sort();
    rays.dedup();
    let mut k = 0;
    while k < rays.len() {
        let others: Vec<Vec<i64>> = rays.iter().enumerate().filter(|&(j, _)| j != k).map(|(_, r)| r.clone()).collect();
        if !others.is_empty() && lp::in_cone(&others, &rays[k]) {
            rays.remove(k);
        } else {
            k += 1;
        }
    }
    rays
}
