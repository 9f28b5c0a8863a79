//! Divisor classes of the toric ambient space and their intersection numbers.

use std::collections::{BTreeMap, HashMap};

use num_traits::{One, Zero};

use crate::arith::{self, q, Q};
use crate::error::{Error, Result};
use crate::triangulate::StarTriangulation;

/// The relations `sum_i <m, v_i> D_i ~ 0`, one row per coordinate `m = e_k`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinearRelations {
    pub rows: Vec<Vec<i64>>,
}

impl LinearRelations {
    pub fn new(vectors: &[Vec<i64>]) -> Self {
        let dim = vectors.first().map_or(0, |v| v.len());
        LinearRelations { rows: (0..dim).map(|k| vectors.iter().map(|v| v[k]).collect()).collect() }
    }

    pub fn num_divisors(&self) -> usize {
        self.rows.first().map_or(0, |r| r.len())
    }

    fn column(&self, i: usize) -> Vec<i64> {
        self.rows.iter().map(|r| r[i]).collect()
    }

    /// Order of the torsion subgroup of the divisor class group.
    pub fn torsion(&self) -> Result<i128> {
        arith::lattice_index(&self.rows, self.num_divisors())
    }
}

/// A basis `J_a = D_{basis[a]}` of divisor classes with the expansion of every
/// toric divisor in it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DivisorBasis {
    pub basis: Vec<usize>,
    /// `expansion[i][a]` is the coefficient of `J_a` in `D_i`.
    pub expansion: Vec<Vec<Q>>,
    /// Whether every `D_i` is an integral combination of the basis.
    pub integral: bool,
}

impl DivisorBasis {
    pub fn rank(&self) -> usize {
        self.basis.len()
    }

    /// Lines like `d2=-3*J1+J2`, one per toric divisor.
    pub fn expansion_strings(&self) -> Vec<String> {
        self.expansion
            .iter()
            .enumerate()
            .map(|(i, row)| format!("d{}={}", i + 1, linear_form(row, "J")))
            .collect()
    }

    /// Coefficients in the basis of the class `sum_i c_i D_i`.
    pub fn express(&self, c: &[i64]) -> Vec<Q> {
        let mut out = vec![Q::zero(); self.rank()];
        for (ci, row) in c.iter().zip(&self.expansion) {
            for (o, x) in out.iter_mut().zip(row) {
                *o += x * q(*ci);
            }
        }
        out
    }
}

/// Renders `sum_a c_a J_{a+1}` as `c1*J1+J2-J3`, or `0`.
pub fn linear_form(c: &[Q], var: &str) -> String {
    let mut s = String::new();
    for (a, x) in c.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        let name = format!("{var}{}", a + 1);
        let term = if x.is_one() {
            name
        } else if (-x).is_one() {
            format!("-{name}")
        } else {
            format!("{}*{name}", arith::fmt_q(x))
        };
        if !s.is_empty() && !term.starts_with('-') {
            s.push('+');
        }
        s.push_str(&term);
    }
    if s.is_empty() {
        s.push('0');
    }
    s
}

fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(k);
    fn go(n: usize, k: usize, start: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            go(n, k, i + 1, cur, out);
            cur.pop();
        }
    }
    go(n, k, 0, &mut cur, &mut out);
    out
}

/// Basis of divisor classes among single toric divisors.
///
/// Prefers bases whose complement has unit determinant, so that all
/// expansions are integral; among those, the basis with the largest indices
/// (compared from the largest down).
pub fn divisor_basis(rel: &LinearRelations) -> Result<DivisorBasis> {
    let n = rel.num_divisors();
    let d = rel.rows.len();
    if n < d {
        return Err(Error::InvalidBasis("fewer divisors than dimensions".into()));
    }
    let mut best: Option<(i128, Vec<usize>)> = None;
    for basis in subsets(n, n - d) {
        let comp: Vec<usize> = (0..n).filter(|i| !basis.contains(i)).collect();
        let cols: Vec<Vec<i64>> = comp.iter().map(|&i| rel.column(i)).collect();
        let det = arith::det(&cols)?.abs();
        if det == 0 {
            continue;
        }
        let mut key = basis.clone();
        key.reverse();
        let better = match &best {
            None => true,
            Some((bd, bk)) => det < *bd || (det == *bd && key > *bk),
        };
        if better {
            best = Some((det, key));
        }
    }
    let (_, mut basis) = best.ok_or_else(|| Error::InvalidBasis("divisors do not span".into()))?;
    basis.reverse();
    pinned_basis(rel, &basis)
}

/// Expansions in a basis chosen by the caller.
pub fn pinned_basis(rel: &LinearRelations, basis: &[usize]) -> Result<DivisorBasis> {
    let n = rel.num_divisors();
    let d = rel.rows.len();
    if basis.len() + d != n || basis.iter().any(|&b| b >= n) {
        return Err(Error::InvalidBasis(format!("expected {} distinct divisors below {n}", n - d)));
    }
    let comp: Vec<usize> = (0..n).filter(|i| !basis.contains(i)).collect();
    if comp.len() != d {
        return Err(Error::InvalidBasis("repeated basis divisor".into()));
    }
    let cols: Vec<Vec<i64>> = comp.iter().map(|&i| rel.column(i)).collect();
    let mut expansion = vec![vec![Q::zero(); basis.len()]; n];
    for (a, &b) in basis.iter().enumerate() {
        expansion[b][a] = Q::one();
        let x = arith::solve(&cols, &rel.column(b))
            .ok_or_else(|| Error::InvalidBasis("basis classes are dependent".into()))?;
        for (k, &i) in comp.iter().enumerate() {
            expansion[i][a] = -x[k].clone();
        }
    }
    let integral = expansion.iter().flatten().all(arith::is_integral) && rel.torsion()? == 1;
    Ok(DivisorBasis { basis: basis.to_vec(), expansion, integral })
}

/// Which maximal simplex through a support is used to eliminate a repeated
/// index. Results do not depend on the choice.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Reduction {
    #[default]
    FirstSimplex,
    LastSimplex,
}

/// Symmetric intersection numbers keyed by sorted index tuples; absent
/// entries are zero.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntersectionTensor {
    order: usize,
    size: usize,
    entries: BTreeMap<Vec<usize>, Q>,
}

impl IntersectionTensor {
    pub fn order(&self) -> usize {
        self.order
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn get(&self, idx: &[usize]) -> Q {
        let mut k = idx.to_vec();
        k.sort();
        self.entries.get(&k).cloned().unwrap_or_else(Q::zero)
    }

    /// Nonzero entries in ascending index order.
    pub fn entries(&self) -> impl Iterator<Item = (&Vec<usize>, &Q)> {
        self.entries.iter()
    }

    /// Integral of a product of `order` classes, each given by coefficients
    /// over the tensor's index set.
    pub fn integrate(&self, classes: &[Vec<Q>]) -> Q {
        assert_eq!(classes.len(), self.order);
        let mut total = Q::zero();
        for (idx, value) in &self.entries {
            // sum over the distinct orderings of the multiset `idx`
            total += value * permanent_term(classes, idx);
        }
        total
    }

    /// Contracts the last slot with the class `c`.
    pub fn contract(&self, c: &[Q]) -> IntersectionTensor {
        let mut entries: BTreeMap<Vec<usize>, Q> = BTreeMap::new();
        for (idx, value) in &self.entries {
            // each distinct index of the multiset can fill the contracted slot
            let mut seen = Vec::new();
            for (k, &i) in idx.iter().enumerate() {
                if seen.contains(&i) || c[i].is_zero() {
                    continue;
                }
                seen.push(i);
                let mut rest = idx.clone();
                rest.remove(k);
                *entries.entry(rest).or_insert_with(Q::zero) += value * &c[i];
            }
        }
        entries.retain(|_, v| !v.is_zero());
        IntersectionTensor { order: self.order - 1, size: self.size, entries }
    }

    /// The tensor over new classes `J_a = sum_i classes[a][i] D_i`.
    pub fn change_basis(&self, classes: &[Vec<Q>]) -> IntersectionTensor {
        let mut entries = BTreeMap::new();
        for idx in multisets(classes.len(), self.order) {
            let picked: Vec<Vec<Q>> = idx.iter().map(|&a| classes[a].clone()).collect();
            let v = self.integrate(&picked);
            if !v.is_zero() {
                entries.insert(idx, v);
            }
        }
        IntersectionTensor { order: self.order, size: classes.len(), entries }
    }

    /// The tensor restricted to the indices `basis`, renumbered in order.
    pub fn restrict(&self, basis: &[usize]) -> IntersectionTensor {
        let unit = |b: usize| (0..self.size).map(|i| if i == b { Q::one() } else { Q::zero() }).collect();
        self.change_basis(&basis.iter().map(|&b| unit(b)).collect::<Vec<_>>())
    }

    pub fn is_integral(&self) -> bool {
        self.entries.values().all(arith::is_integral)
    }
}

// sum over distinct permutations pi of idx of prod_k classes[k][idx[pi(k)]]
fn permanent_term(classes: &[Vec<Q>], idx: &[usize]) -> Q {
    fn go(classes: &[Vec<Q>], slot: usize, remaining: &mut Vec<usize>) -> Q {
        if slot == classes.len() {
            return Q::one();
        }
        let mut total = Q::zero();
        let mut tried = Vec::new();
        for k in 0..remaining.len() {
            let i = remaining[k];
            if tried.contains(&i) || classes[slot][i].is_zero() {
                continue;
            }
            tried.push(i);
            remaining.remove(k);
            total += &classes[slot][i] * go(classes, slot + 1, remaining);
            remaining.insert(k, i);
        }
        total
    }
    go(classes, 0, &mut idx.to_vec())
}

/// Sorted multisets of size `k` over `0..n`.
pub fn multisets(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn go(n: usize, k: usize, start: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            go(n, k, i, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(n, k, 0, &mut Vec::new(), &mut out);
    out
}

struct Reducer<'a> {
    t: &'a StarTriangulation,
    strategy: Reduction,
    memo: HashMap<Vec<usize>, Q>,
}

impl Reducer<'_> {
    fn value(&mut self, idx: &[usize]) -> Result<Q> {
        if let Some(v) = self.memo.get(idx) {
            return Ok(v.clone());
        }
        let mut support = idx.to_vec();
        support.dedup();
        let v = match self.t.simplex_containing(&support, self.strategy == Reduction::LastSimplex) {
            None => Q::zero(),
            Some(_) if support.len() == idx.len() => {
                let cols: Vec<Vec<i64>> = idx.iter().map(|&i| self.t.vectors()[i].clone()).collect();
                Q::new(1.into(), arith::det(&cols)?.abs().into())
            }
            Some(tau) => {
                let tau = tau.to_vec();
                let i = idx.windows(2).find(|w| w[0] == w[1]).expect("repeated index")[0];
                // m with <m, v_t> = delta_{t,i} on tau
                let v = self.t.vectors();
                let dim = self.t.dim();
                let cols: Vec<Vec<Q>> = (0..dim).map(|k| tau.iter().map(|&t| q(v[t][k])).collect()).collect();
                let rhs: Vec<Q> = tau.iter().map(|&t| if t == i { Q::one() } else { Q::zero() }).collect();
                let m = arith::solve_q(&cols, &rhs).expect("simplex is unimodular over Q");
                let pos = idx.iter().position(|&x| x == i).expect("present");
                let mut total = Q::zero();
                for l in 0..v.len() {
                    if tau.contains(&l) {
                        continue;
                    }
                    let ml: Q = (0..dim).map(|k| &m[k] * q(v[l][k])).sum();
                    if ml.is_zero() {
                        continue;
                    }
                    let mut next = idx.to_vec();
                    next[pos] = l;
                    next.sort();
                    total -= ml * self.value(&next)?;
                }
                total
            }
        };
        self.memo.insert(idx.to_vec(), v.clone());
        Ok(v)
    }
}

/// Top intersection numbers `D_{i1} ... D_{id}` of the toric divisors,
/// `d` the dimension.
pub fn quadruple_intersections(t: &StarTriangulation, strategy: Reduction) -> Result<IntersectionTensor> {
    let n = t.num_divisors();
    let d = t.dim();
    let mut r = Reducer { t, strategy, memo: HashMap::new() };
    let mut entries = BTreeMap::new();
    for idx in multisets(n, d) {
        let mut support = idx.clone();
        support.dedup();
        if !t.is_face(&support) {
            continue;
        }
        let v = r.value(&idx)?;
        if !v.is_zero() {
            entries.insert(idx, v);
        }
    }
    Ok(IntersectionTensor { order: d, size: n, entries })
}
