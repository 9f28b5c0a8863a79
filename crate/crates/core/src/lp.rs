//! Exact phase-one simplex for feasibility questions.

use num_traits::{Signed, Zero};

use crate::arith::{q, Q};

/// Finds `x >= 0` with `a x = b`, or `None` if no such vector exists.
///
/// Dense tableau, Bland's rule, exact rationals.
pub fn nonneg_solution(a: &[Vec<Q>], b: &[Q]) -> Option<Vec<Q>> {
    let m = a.len();
    let n = a.first().map_or(0, |r| r.len());
    if m == 0 {
        return Some(vec![Q::zero(); n]);
    }
    let width = n + m + 1;
    let mut t: Vec<Vec<Q>> = Vec::with_capacity(m + 1);
    for i in 0..m {
        let flip = b[i].is_negative();
        let mut row = Vec::with_capacity(width);
        for j in 0..n {
            row.push(if flip { -a[i][j].clone() } else { a[i][j].clone() });
        }
        for k in 0..m {
            row.push(q(i64::from(k == i)));
        }
        row.push(if flip { -b[i].clone() } else { b[i].clone() });
        t.push(row);
    }
    // reduced costs of the phase-one objective (sum of artificials)
    let mut cost = vec![Q::zero(); width];
    for row in &t {
        for j in 0..n {
            cost[j] -= &row[j];
        }
        cost[width - 1] -= &row[width - 1];
    }
    let mut basis: Vec<usize> = (n..n + m).collect();

    loop {
        let Some(enter) = (0..n + m).find(|&j| cost[j].is_negative()) else {
            break;
        };
        let mut leave: Option<(usize, Q)> = None;
        for i in 0..m {
            if t[i][enter].is_positive() {
                let ratio = &t[i][width - 1] / &t[i][enter];
                let better = match &leave {
                    None => true,
                    Some((li, lr)) => ratio < *lr || (ratio == *lr && basis[i] < basis[*li]),
                };
                if better {
                    leave = Some((i, ratio));
                }
            }
        }
        let Some((r, _)) = leave else {
            // unbounded direction cannot occur for a bounded-below objective
            break;
        };
        pivot(&mut t, &mut cost, r, enter);
        basis[r] = enter;
    }

    if !cost[width - 1].is_zero() {
        return None;
    }
    let mut x = vec![Q::zero(); n];
    for (i, &bv) in basis.iter().enumerate() {
        if bv < n {
            x[bv] = t[i][width - 1].clone();
        }
    }
    Some(x)
}

fn pivot(t: &mut [Vec<Q>], cost: &mut [Q], r: usize, c: usize) {
    let inv = t[r][c].recip();
    for x in t[r].iter_mut() {
        *x *= &inv;
    }
    let prow = t[r].clone();
    for (i, row) in t.iter_mut().enumerate() {
        if i != r && !row[c].is_zero() {
            let f = row[c].clone();
            for (x, p) in row.iter_mut().zip(&prow) {
                if !p.is_zero() {
                    *x -= p * &f;
                }
            }
        }
    }
    if !cost[c].is_zero() {
        let f = cost[c].clone();
        for (x, p) in cost.iter_mut().zip(&prow) {
            if !p.is_zero() {
                *x -= p * &f;
            }
        }
    }
}

/// Whether `target` lies in the cone spanned by `generators`.
pub fn in_cone(generators: &[Vec<i64>], target: &[i64]) -> bool {
    let rows = target.len();
    let a: Vec<Vec<Q>> = (0..rows)
        .map(|i| generators.iter().map(|g| q(g[i])).collect())
        .collect();
    let b: Vec<Q> = target.iter().map(|&x| q(x)).collect();
    nonneg_solution(&a, &b).is_some()
}

/// Whether some `x` satisfies `rows * x >= 1` componentwise (free `x`).
pub fn strictly_feasible(rows: &[Vec<Q>]) -> bool {
    if rows.is_empty() {
        return true;
    }
    let n = rows[0].len();
    let m = rows.len();
    // x = p - n, slack s: rows*p - rows*n - s = 1
    let a: Vec<Vec<Q>> = rows
        .iter()
        .enumerate()
        .map(|(i, r)| {
            let mut v: Vec<Q> = r.clone();
            v.extend(r.iter().map(|x| -x.clone()));
            v.extend((0..m).map(|k| if k == i { q(-1) } else { Q::zero() }));
            v
        })
        .collect();
    debug_assert!(a.iter().all(|r| r.len() == 2 * n + m));
    nonneg_solution(&a, &vec![q(1); m]).is_some()
}
