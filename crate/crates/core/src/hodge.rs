//! Hodge numbers of Calabi-Yau hypersurfaces from lattice point counts over
//! the faces of a reflexive pair in dimension four.

use crate::arith;
use crate::error::{Error, Result};
use crate::polytope::LatticePolytope;

/// `(h11, h21)` of the generic anticanonical hypersurface in the toric variety
/// of the fan over `ps`, with `p` its polar dual.
pub fn batyrev(p: &LatticePolytope, ps: &LatticePolytope) -> Result<(i64, i64)> {
    if ps.dim() != 4 {
        return Err(Error::UnsupportedDimension(ps.dim()));
    }
    Ok((face_sum(ps, p)?, face_sum(p, ps)?))
}

// l(a) - 5 - sum over facets of interior points + sum over codimension-two
// faces of interior points times interior points of the dual face in `b`
fn face_sum(a: &LatticePolytope, b: &LatticePolytope) -> Result<i64> {
    let mut total = a.num_points() as i64 - 5;
    total -= a.num_facet_interior() as i64;

    let tight: Vec<Vec<usize>> = (0..a.num_points())
        .map(|i| a.tight_facets(i).ones().collect())
        .collect();
    let facets = a.facets();
    let mut seen: Vec<Vec<usize>> = Vec::new();
    for f in 0..facets.len() {
        for g in f + 1..facets.len() {
            let pts: Vec<usize> = facets[f].points.iter().copied().filter(|x| facets[g].points.contains(x)).collect();
            if pts.is_empty() {
                continue;
            }
            let vectors: Vec<Vec<i64>> = pts.iter().map(|&i| a.point(i).to_vec()).collect();
            if arith::rank(&vectors)? != 3 {
                continue;
            }
            // facets containing the face identify it
            let owners: Vec<usize> = (0..facets.len()).filter(|&h| pts.iter().all(|x| facets[h].points.contains(x))).collect();
            if seen.contains(&owners) {
                continue;
            }
            seen.push(owners.clone());
            let interior = pts.iter().filter(|&&x| tight[x] == owners).count() as i64;
            if interior == 0 {
                continue;
            }
            total += interior * dual_interior(a, b, &pts)?;
        }
    }
    Ok(total)
}

// interior points of the face of `b` dual to the face of `a` with points `face`
fn dual_interior(a: &LatticePolytope, b: &LatticePolytope, face: &[usize]) -> Result<i64> {
    let verts: Vec<usize> = face.iter().copied().filter(|&i| a.is_vertex(i)).collect();
    let all = a.vertices();
    let mut count = 0;
    for y in b.points() {
        let mut tight = Vec::new();
        for &v in &all {
            if arith::dot(y, a.point(v))? == -1 {
                tight.push(v);
            }
        }
        if tight == verts {
            count += 1;
        }
    }
    Ok(count)
}
