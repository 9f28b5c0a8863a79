mod common;

use common::*;
use moricone_core::ipsimplex::{incidence, ip_simplices, IpSimplex};
use moricone_core::kreuzer::kreuzer_polynomial;
use moricone_core::polytope::LatticePolytope;

fn ip(coefficients: &[i64], degree: i64, codim: usize) -> IpSimplex {
    IpSimplex { coefficients: coefficients.to_vec(), degree, codim }
}

/// Brute-force lattice point count: scan a generous box and test against
/// all supporting hyperplanes through `dim`-subsets of the vertices.
fn brute_force_point_count(p: &LatticePolytope) -> usize {
    let dim = p.dim();
    let pts = p.points();
    let mut halfspaces: Vec<(Vec<i64>, i64)> = Vec::new();
    let idx = p.vertices();
    for combo in combinations(&idx, dim) {
        // normal through the points of `combo` (affine hyperplane), via cofactors
        let base = &pts[combo[0]];
        let diffs: Vec<Vec<i64>> = combo[1..].iter().map(|&i| pts[i].iter().zip(base).map(|(a, b)| a - b).collect()).collect();
        let normal: Vec<i64> = (0..dim)
            .map(|k| {
                let minor: Vec<Vec<i64>> = diffs
                    .iter()
                    .map(|d| d.iter().enumerate().filter(|&(j, _)| j != k).map(|(_, &x)| x).collect())
                    .collect();
                let det = if minor.is_empty() { 1 } else { moricone_core::arith::det(&minor).unwrap() as i64 };
                if k % 2 == 0 { det } else { -det }
            })
            .collect();
        if normal.iter().all(|&x| x == 0) {
            continue;
        }
        let c: i64 = normal.iter().zip(base).map(|(a, b)| a * b).sum();
        let vals: Vec<i64> = pts.iter().map(|x| normal.iter().zip(x).map(|(a, b)| a * b).sum()).collect();
        if vals.iter().all(|&v| v >= c) {
            halfspaces.push((normal, c));
        } else if vals.iter().all(|&v| v <= c) {
            halfspaces.push((normal.iter().map(|x| -x).collect(), -c));
        }
    }
    let r = pts.iter().flatten().map(|x| x.abs()).max().unwrap() + 1;
    let mut count = 0;
    let mut x = vec![-r; dim];
    loop {
        if halfspaces.iter().all(|(n, c)| n.iter().zip(&x).map(|(a, b)| a * b).sum::<i64>() >= *c) {
            count += 1;
        }
        let mut k = 0;
        while k < dim && x[k] == r {
            x[k] = -r;
            k += 1;
        }
        if k == dim {
            return count;
        }
        x[k] += 1;
    }
}

fn combinations(items: &[usize], k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for (i, &x) in items.iter().enumerate() {
        for mut rest in combinations(&items[i + 1..], k - 1) {
            rest.insert(0, x);
            out.push(rest);
        }
    }
    out
}

#[test]
fn fibration_matrix_ip_simplices() {
    let p = fibration();
    assert_eq!(p.num_points(), 7);
    assert_eq!(p.origin(), Some(6));
    let ips = ip_simplices(&p).unwrap();
    assert_eq!(ips, vec![ip(&[1, 1, 1, 1, 1, 0], 5, 0), ip(&[0, 0, 0, 0, 1, 1], 2, 3)]);
    assert_eq!(incidence(&p).len(), 8);
}

#[test]
fn fibration_from_weights() {
    let (_, ps) = from_cws(FIBRATION_CWS);
    assert_eq!(ps.num_points(), 7);
    let ips = ip_simplices(&ps).unwrap();
    assert_eq!(ips.len(), 2);
    assert_eq!((ips[0].degree, ips[0].codim), (5, 0));
    assert_eq!((ips[1].degree, ips[1].codim), (2, 3));
}

#[test]
fn two_param_structure() {
    let p = two_param();
    assert_eq!(p.num_points(), 8);
    assert_eq!(p.vertices().len(), 6);
    assert_eq!(p.num_facet_interior(), 1);
    assert!(p.is_facet_interior(6));
    assert_eq!(p.facets().len(), 7);
    assert_eq!(
        sorted(incidence(&p)),
        sorted(strs(&["101011", "001111", "111110", "110101", "011101", "111001", "100111"]))
    );
    let ips = ip_simplices(&p).unwrap();
    assert_eq!(ips, vec![ip(&[1, 1, 1, 0, 1, 4], 8, 0), ip(&[1, 0, 1, 1, 0, 3], 6, 1)]);
}

#[test]
fn two_param_from_weights() {
    let (_, ps) = from_cws(TWO_PARAM_CWS);
    assert_eq!(ps.num_points(), 8);
    assert_eq!(ps.vertices().len(), 6);
    assert_eq!(ps.num_facet_interior(), 1);
    assert_eq!(ps.origin(), Some(7));
    let degrees: Vec<(i64, usize)> = ip_simplices(&ps).unwrap().iter().map(|s| (s.degree, s.codim)).collect();
    assert_eq!(degrees, vec![(8, 0), (6, 1)]);
}

#[test]
fn two_param_kreuzer_polynomial() {
    assert_eq!(
        kreuzer_polynomial(&two_param()),
        "t_1^3t_3^3/(t_2t_4^4)+t_1+t_2+t_4+t_3+t_4/(t_1t_3)"
    );
}

#[test]
fn facet_normals_are_primitive_and_tight() {
    for p in [two_param(), fibration(), quintic(), p2(), p1xp1()] {
        for f in p.facets() {
            assert_eq!(moricone_core::arith::primitive(&f.normal), f.normal);
            for (i, x) in p.points().iter().enumerate() {
                let v = moricone_core::arith::dot(&f.normal, x).unwrap();
                assert!(v >= -1);
                assert_eq!(v == -1, f.points.contains(&i));
            }
        }
    }
}

#[test]
fn polar_dual_is_an_involution() {
    for p in [two_param(), fibration(), quintic(), p2(), p1xp1(), from_cws(TWO_PARAM_CWS).0] {
        let dd = p.dual().unwrap().dual().unwrap();
        let mut a: Vec<Vec<i64>> = p.vertices().iter().map(|&i| p.point(i).to_vec()).collect();
        let mut b: Vec<Vec<i64>> = dd.vertices().iter().map(|&i| dd.point(i).to_vec()).collect();
        a.sort();
        b.sort();
        assert_eq!(a, b);
    }
}

#[test]
fn point_completion_matches_brute_force() {
    for p in [two_param(), fibration(), quintic(), p2(), p1xp1(), quintic().dual().unwrap()] {
        assert_eq!(p.num_points(), brute_force_point_count(&p));
        let again = LatticePolytope::new(p.dim(), p.points().to_vec()).unwrap();
        assert_eq!(again.points(), p.points());
    }
}

#[test]
fn vertices_lie_on_enough_facets() {
    for p in [two_param(), fibration(), quintic(), p2(), p1xp1()] {
        let words = incidence(&p);
        let map = p.divisor_index();
        for i in p.divisor_points() {
            let k = map[i].unwrap();
            let count = words.iter().filter(|w| w.as_bytes()[k] == b'1').count();
            if p.is_vertex(i) {
                assert!(count >= p.dim());
            } else {
                assert!(count >= 2);
            }
        }
    }
}

#[test]
fn quintic_mirror_has_126_points() {
    let m = quintic().dual().unwrap();
    assert_eq!(m.num_points(), 126);
    assert_eq!(m.facets().len(), 5);
}
