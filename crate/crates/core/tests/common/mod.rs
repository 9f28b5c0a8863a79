#![allow(dead_code)]

use moricone_core::input::{parse_point_matrix, parse_cws};
use moricone_core::polytope::{cws_to_dual_pair, facets_and_reflexivity, LatticePolytope};

/// P^1 fibred over P^3, points in the order printed by the `-DP` transcript.
pub const FIBRATION_MATRIX: &str = "1 0 0 -1  0 0 0
0 1 0 -1  0 0 0
0 0 1 -1  0 0 0
0 0 0  1 -1 1 0";

/// The two-parameter example with a non-simplicial facet, in the printed point order.
pub const TWO_PARAM_MATRIX: &str = " 3 1 0 0 0 -1  1 0
-1 0 1 0 0  0  0 0
 3 0 0 0 1 -1  1 0
-4 0 0 1 0  1 -1 0";

pub const TWO_PARAM_CWS: &str = "8 4 1 1 1 1 0  6 3 1 0 1 0 1";
pub const FIBRATION_CWS: &str = "5 1 1 1 1 1 0  2 0 0 0 0 1 1";

pub fn from_matrix(lines: i64, cols: i64, text: &str) -> LatticePolytope {
    let vals: Vec<i64> = text.split_whitespace().map(|t| t.parse().unwrap()).collect();
    facets_and_reflexivity(&parse_point_matrix(lines, cols, &vals).unwrap()).unwrap()
}

pub fn two_param() -> LatticePolytope {
    from_matrix(4, 8, TWO_PARAM_MATRIX)
}

pub fn fibration() -> LatticePolytope {
    from_matrix(4, 7, FIBRATION_MATRIX)
}

pub fn from_points(points: &[&[i64]]) -> LatticePolytope {
    let dim = points[0].len();
    LatticePolytope::new(dim, points.iter().map(|p| p.to_vec()).collect()).unwrap()
}

pub fn quintic() -> LatticePolytope {
    from_points(&[&[1, 0, 0, 0], &[0, 1, 0, 0], &[0, 0, 1, 0], &[0, 0, 0, 1], &[-1, -1, -1, -1]])
}

pub fn p2() -> LatticePolytope {
    from_points(&[&[1, 0], &[0, 1], &[-1, -1]])
}

pub fn p1xp1() -> LatticePolytope {
    from_points(&[&[1, 0], &[-1, 0], &[0, 1], &[0, -1]])
}

pub fn from_cws(text: &str) -> (LatticePolytope, LatticePolytope) {
    cws_to_dual_pair(&parse_cws(text).unwrap()).unwrap()
}

pub fn sorted(mut v: Vec<String>) -> Vec<String> {
    v.sort();
    v
}

pub fn strs(v: &[&str]) -> Vec<String> {
    v.iter().map(|s| s.to_string()).collect()
}

/// Normalized volume of the facet `<normal, x> = -1` from its Ehrhart
/// polynomial, fitted through point counts of dilates 0..=k.
pub fn ehrhart_facet_volume(p: &LatticePolytope, normal: &[i64]) -> i64 {
    let k = p.dim() - 1;
    let hull: Vec<(Vec<i64>, i64)> = p.facets().iter().map(|f| (f.normal.clone(), f.distance)).collect();
    let bound = p.points().iter().flatten().map(|x| x.abs()).max().unwrap() * k as i64;
    let count = |t: i64| -> i64 {
        let mut n = 0;
        let mut x = vec![-bound; p.dim()];
        loop {
            let on = normal.iter().zip(&x).map(|(a, b)| a * b).sum::<i64>() == -t;
            if on && hull.iter().all(|(u, c)| u.iter().zip(&x).map(|(a, b)| a * b).sum::<i64>() >= -c * t) {
                n += 1;
            }
            let mut i = 0;
            while i < x.len() && x[i] == bound {
                x[i] = -bound;
                i += 1;
            }
            if i == x.len() {
                return n;
            }
            x[i] += 1;
        }
    };
    // leading coefficient by k-th finite difference: k! * a_k = sum (-1)^(k-t) C(k,t) L(t)
    let mut diff = 0;
    let mut binom = 1;
    for t in 0..=k as i64 {
        let sign = if (k as i64 - t) % 2 == 0 { 1 } else { -1 };
        diff += sign * binom * count(t);
        binom = binom * (k as i64 - t) / (t + 1);
    }
    diff
}
