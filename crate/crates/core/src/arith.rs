//! Exact integer and rational linear algebra on small dense matrices.
//!
//! Integer routines run in checked `i128` and report [`Error::Overflow`]
//! instead of wrapping; rational routines use arbitrary precision.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Exact rational number.
pub type Q = BigRational;

pub fn q(n: i64) -> Q {
    Q::from_integer(BigInt::from(n))
}

pub fn q_frac(n: i64, d: i64) -> Q {
    Q::new(BigInt::from(n), BigInt::from(d))
}

pub fn is_integral(x: &Q) -> bool {
    x.denom().is_one()
}

/// Renders a rational as `p` or `p/q`.
pub fn fmt_q(x: &Q) -> String {
    if x.denom().is_one() {
        x.numer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

pub(crate) fn checked(x: i128) -> Result<i64> {
    i64::try_from(x).map_err(|_| Error::Overflow)
}

pub fn gcd(a: i64, b: i64) -> i64 {
    a.gcd(&b)
}

/// Divides a vector by the gcd of its entries. The zero vector is returned unchanged.
pub fn primitive(v: &[i64]) -> Vec<i64> {
    let g = v.iter().fold(0i64, |g, &x| g.gcd(&x));
    if g <= 1 {
        v.to_vec()
    } else {
        v.iter().map(|x| x / g).collect()
    }
}

pub fn dot(a: &[i64], b: &[i64]) -> Result<i64> {
    let mut s: i128 = 0;
    for (x, y) in a.iter().zip(b) {
        s = s
            .checked_add(*x as i128 * *y as i128)
            .ok_or(Error::Overflow)?;
    }
    checked(s)
}

/// Fraction-free (Bareiss) elimination; returns the rank and, for square
/// input, the determinant.
fn bareiss(rows: &[Vec<i64>]) -> Result<(usize, i128)> {
    let m = rows.len();
    if m == 0 {
        return Ok((0, 1));
    }
    let n = rows[0].len();
    let mut a: Vec<Vec<i128>> = rows
        .iter()
        .map(|r| r.iter().map(|&x| x as i128).collect())
        .collect();
    let mut rank = 0;
    let mut prev: i128 = 1;
    let mut sign: i128 = 1;
    for col in 0..n {
        if rank == m {
            break;
        }
        let Some(piv) = (rank..m).find(|&r| a[r][col] != 0) else {
            continue;
        };
        if piv != rank {
            a.swap(piv, rank);
            sign = -sign;
        }
        for r in rank + 1..m {
            for c in col + 1..n {
                let v = a[r][c]
                    .checked_mul(a[rank][col])
                    .and_then(|x| x.checked_sub(a[r][col].checked_mul(a[rank][c])?))
                    .ok_or(Error::Overflow)?;
                a[r][c] = v / prev;
            }
            a[r][col] = 0;
        }
        prev = a[rank][col];
        rank += 1;
    }
    let det = if m == n && rank == n {
        sign * a[n - 1][n - 1]
    } else {
        0
    };
    Ok((rank, det))
}

pub fn rank(rows: &[Vec<i64>]) -> Result<usize> {
    Ok(bareiss(rows)?.0)
}

/// Determinant of a square matrix (rows or columns, the value is the same).
pub fn det(rows: &[Vec<i64>]) -> Result<i128> {
    if let Some(r) = rows.first() {
        assert_eq!(r.len(), rows.len(), "determinant of a non-square matrix");
    }
    Ok(bareiss(rows)?.1)
}

/// Column-style integer echelon form: returns `(rank, reduced, u)` with
/// `rows * u = reduced`, `u` unimodular and the last `ncols - rank` columns
/// of `reduced` zero.
fn column_echelon(rows: &[Vec<i64>], ncols: usize) -> Result<(usize, Vec<Vec<i128>>, Vec<Vec<i128>>)> {
    let mut a: Vec<Vec<i128>> = rows
        .iter()
        .map(|r| r.iter().map(|&x| x as i128).collect())
        .collect();
    // u[i][j]: row i, column j
    let mut u: Vec<Vec<i128>> = (0..ncols)
        .map(|i| (0..ncols).map(|j| i128::from(i == j)).collect())
        .collect();

    fn col_axpy(m: &mut [Vec<i128>], dst: usize, src: usize, f: i128) -> Result<()> {
        for row in m.iter_mut() {
            row[dst] = row[src]
                .checked_mul(f)
                .and_then(|x| row[dst].checked_sub(x))
                .ok_or(Error::Overflow)?;
        }
        Ok(())
    }
    fn col_swap(m: &mut [Vec<i128>], a: usize, b: usize) {
        for row in m.iter_mut() {
            row.swap(a, b);
        }
    }

    let mut p = 0;
    for i in 0..a.len() {
        if p == ncols {
            break;
        }
        for j in p + 1..ncols {
            while a[i][j] != 0 {
                let f = a[i][p].div_euclid(a[i][j]);
                col_axpy(&mut a, p, j, f)?;
                col_axpy(&mut u, p, j, f)?;
                col_swap(&mut a, p, j);
                col_swap(&mut u, p, j);
            }
        }
        if a[i][p] != 0 {
            p += 1;
        }
    }
    Ok((p, a, u))
}

/// A lattice basis of `{x in Z^n : rows * x = 0}`.
pub fn integer_kernel(rows: &[Vec<i64>], ncols: usize) -> Result<Vec<Vec<i64>>> {
    let (r, _, u) = column_echelon(rows, ncols)?;
    (r..ncols)
        .map(|j| (0..ncols).map(|i| checked(u[i][j])).collect())
        .collect()
}

/// Index of the lattice spanned by the columns of `rows` inside `Z^m`, or 0
/// when the columns do not span a full-rank sublattice.
pub fn lattice_index(rows: &[Vec<i64>], ncols: usize) -> Result<i128> {
    let (r, a, _) = column_echelon(rows, ncols)?;
    if r < rows.len() {
        return Ok(0);
    }
    let mut idx: i128 = 1;
    for (i, row) in a.iter().enumerate() {
        idx = idx.checked_mul(row[i]).ok_or(Error::Overflow)?;
    }
    Ok(idx.abs())
}

/// Solves `sum_j y_j * cols[j] = rhs` over the rationals. The columns must be
/// linearly independent; returns `None` if `rhs` is outside their span.
pub fn solve(cols: &[Vec<i64>], rhs: &[i64]) -> Option<Vec<Q>> {
    let qcols: Vec<Vec<Q>> = cols
        .iter()
        .map(|c| c.iter().map(|&x| q(x)).collect())
        .collect();
    let qrhs: Vec<Q> = rhs.iter().map(|&x| q(x)).collect();
    solve_q(&qcols, &qrhs)
}

pub fn solve_q(cols: &[Vec<Q>], rhs: &[Q]) -> Option<Vec<Q>> {
    let m = rhs.len();
    let k = cols.len();
    // augmented matrix, one row per coordinate
    let mut a: Vec<Vec<Q>> = (0..m)
        .map(|i| {
            let mut row: Vec<Q> = cols.iter().map(|c| c[i].clone()).collect();
            row.push(rhs[i].clone());
            row
        })
        .collect();
    let mut pivots = Vec::with_capacity(k);
    let mut r = 0;
    for c in 0..k {
        let piv = (r..m).find(|&i| !a[i][c].is_zero())?;
        a.swap(r, piv);
        let inv = a[r][c].recip();
        for x in a[r].iter_mut() {
            *x *= &inv;
        }
        for i in 0..m {
            if i != r && !a[i][c].is_zero() {
                let f = a[i][c].clone();
                for j in c..=k {
                    let t = &a[r][j] * &f;
                    a[i][j] -= t;
                }
            }
        }
        pivots.push(r);
        r += 1;
    }
    if a[r..].iter().any(|row| !row[k].is_zero()) {
        return None;
    }
    Some(pivots.iter().map(|&i| a[i][k].clone()).collect())
}

/// Scales a rational vector to a primitive integer vector with the same direction.
pub fn to_primitive_integer(v: &[Q]) -> Result<Vec<i64>> {
    let l = v
        .iter()
        .fold(BigInt::one(), |l, x| l.lcm(x.denom()));
    let ints: Vec<BigInt> = v.iter().map(|x| (x * &l).to_integer()).collect();
    let g = ints.iter().fold(BigInt::zero(), |g, x| g.gcd(x));
    ints.iter()
        .map(|x| {
            let y = if g.is_zero() { x.clone() } else { x / &g };
            y.to_i64().ok_or(Error::Overflow)
        })
        .collect()
}

/// Converts a rational vector with integral entries; errors otherwise.
pub fn to_integer_vec(v: &[Q]) -> Result<Vec<i64>> {
    v.iter()
        .map(|x| {
            if !x.denom().is_one() {
                return Err(Error::Parse(format!("non-integral coordinate {x}")));
            }
            x.numer().to_i64().ok_or(Error::Overflow)
        })
        .collect()
}
