mod common;

use std::collections::HashSet;

use common::*;
use moricone_core::arith::{self, Q};
use moricone_core::lp;
use moricone_core::polytope::LatticePolytope;
use moricone_core::triangulate::{stanley_reisner, star_triangulations, StarTriangulation, DEFAULT_CAP};

const T1: [&str; 9] = ["101011", "001111", "110101", "011101", "111001", "100111", "011110", "110110", "111010"];
const T2: [&str; 8] = ["101011", "001111", "110101", "011101", "111001", "100111", "101110", "111100"];

#[test]
fn two_param_has_two_triangulations() {
    let ts = star_triangulations(&two_param(), DEFAULT_CAP).unwrap();
    assert_eq!(ts.len(), 2);
    assert_eq!(sorted(ts[0].words()), sorted(strs(&T1)));
    assert_eq!(stanley_reisner(&ts[0]).words(), strs(&["101100", "010011"]));
    assert_eq!(sorted(ts[1].words()), sorted(strs(&T2)));
    assert_eq!(stanley_reisner(&ts[1]).words(), strs(&["010010", "101101"]));
}

#[test]
fn subdivided_simplices_are_printed_last() {
    let ts = star_triangulations(&two_param(), DEFAULT_CAP).unwrap();
    assert_eq!(ts[0].words()[6..], strs(&["011110", "110110", "111010"]));
    assert_eq!(ts[1].words()[6..], strs(&["101110", "111100"]));
}

#[test]
fn weights_input_gives_the_same_count() {
    let (_, ps) = from_cws(TWO_PARAM_CWS);
    let ts = star_triangulations(&ps, DEFAULT_CAP).unwrap();
    assert_eq!(ts.len(), 2);
    let sizes: Vec<usize> = ts.iter().map(|t| t.simplices().len()).collect();
    assert_eq!(sizes, vec![9, 8]);
}

#[test]
fn simplicial_polytopes_have_one_triangulation() {
    for p in [quintic(), p2(), p1xp1(), fibration()] {
        let ts = star_triangulations(&p, DEFAULT_CAP).unwrap();
        assert_eq!(ts.len(), 1);
        assert_eq!(ts[0].simplices().len(), p.facets().len());
    }
}

fn all_triangulations() -> Vec<(LatticePolytope, StarTriangulation)> {
    let mut out = Vec::new();
    for p in [two_param(), fibration(), quintic(), p2(), p1xp1(), from_cws(TWO_PARAM_CWS).1] {
        for t in star_triangulations(&p, DEFAULT_CAP).unwrap() {
            out.push((p.clone(), t));
        }
    }
    out
}

#[test]
fn facet_volumes_are_covered() {
    for (p, t) in all_triangulations() {
        for (f, facet) in p.facets().iter().enumerate() {
            let sum: i64 = (0..t.simplices().len()).filter(|&k| t.facet_of()[k] == f).map(|k| t.volume(k).unwrap()).sum();
            assert_eq!(sum, ehrhart_facet_volume(&p, &facet.normal));
        }
    }
}

#[test]
fn triangulations_are_fine_and_form_a_fan() {
    for (_, t) in all_triangulations() {
        let used: HashSet<usize> = t.simplices().iter().flatten().copied().collect();
        assert_eq!(used.len(), t.num_divisors());
        let v = t.vectors();
        for (a, s) in t.simplices().iter().enumerate() {
            let cols: Vec<Vec<i64>> = s.iter().map(|&i| v[i].clone()).collect();
            assert_ne!(arith::det(&cols).unwrap(), 0);
            for s2 in &t.simplices()[a + 1..] {
                assert!(cones_meet_in_a_face(v, s, s2), "cones {s:?} and {s2:?} overlap");
                assert!(cones_meet_in_a_face(v, s2, s), "cones {s2:?} and {s:?} overlap");
            }
        }
    }
}

/// Simplicial cones meet in a common face iff no point of both has a positive
/// coordinate on a ray of `s` outside `s2`: checked as LP infeasibility of
/// `sum a_i v_i = sum b_j v_j`, `a, b >= 0`, `sum_{i in s minus s2} a_i = 1`.
fn cones_meet_in_a_face(v: &[Vec<i64>], s: &[usize], s2: &[usize]) -> bool {
    let dim = v[0].len();
    let mut a: Vec<Vec<Q>> = (0..dim)
        .map(|k| s.iter().map(|&i| arith::q(v[i][k])).chain(s2.iter().map(|&j| arith::q(-v[j][k]))).collect())
        .collect();
    a.push(s.iter().map(|i| arith::q(!s2.contains(i) as i64)).chain(s2.iter().map(|_| arith::q(0))).collect());
    let mut b = vec![arith::q(0); dim];
    b.push(arith::q(1));
    lp::nonneg_solution(&a, &b).is_none()
}

#[test]
fn stanley_reisner_is_dual_to_faces() {
    for (_, t) in all_triangulations() {
        let sr = stanley_reisner(&t);
        let n = t.num_divisors();
        for mask in 1u32..(1 << n) {
            let set: Vec<usize> = (0..n).filter(|&k| mask & (1 << k) != 0).collect();
            let avoids = sr.generators.iter().all(|g| !g.iter().all(|x| set.contains(x)));
            assert_eq!(t.is_face(&set), avoids, "{set:?}");
        }
        for g in &sr.generators {
            for h in &sr.generators {
                assert!(g == h || !g.iter().all(|x| h.contains(x)));
            }
        }
    }
}

#[test]
fn output_is_deterministic() {
    let a: Vec<Vec<String>> = star_triangulations(&two_param(), DEFAULT_CAP).unwrap().iter().map(|t| t.words()).collect();
    let b: Vec<Vec<String>> = star_triangulations(&two_param(), DEFAULT_CAP).unwrap().iter().map(|t| t.words()).collect();
    assert_eq!(a, b);
}
