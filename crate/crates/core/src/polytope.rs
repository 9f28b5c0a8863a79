//! Lattice polytopes: convex hulls, facets, reflexivity, duality and the
//! construction of the dual pair from a combined weight system.

use std::cmp::Reverse;
use std::collections::HashSet;

use fixedbitset::FixedBitSet;

use crate::arith::{self, dot, primitive};
use crate::error::{Error, Result};
use crate::input::{Cws, PointMatrix};

/// A facet `<normal, x> >= -distance` with its incident lattice points.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Facet {
    /// Primitive inner normal.
    pub normal: Vec<i64>,
    pub distance: i64,
    /// All lattice points on the facet, in point order.
    pub points: Vec<usize>,
    /// Points in the relative interior of the facet.
    pub interior_points: Vec<usize>,
    pub simplicial: bool,
}

impl Facet {
    /// Incident points that are not interior to the facet.
    pub fn boundary_points(&self) -> impl Iterator<Item = usize> + '_ {
        self.points.iter().copied().filter(|p| !self.interior_points.contains(p))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LatticePolytope {
    dim: usize,
    points: Vec<Vec<i64>>,
    vertex: Vec<bool>,
    facet_interior: Vec<bool>,
    origin: Option<usize>,
    facets: Vec<Facet>,
}

impl LatticePolytope {
    /// Builds the polytope spanned by `points`, completing the list with all
    /// missing lattice points of the hull (appended in lexicographic order).
    /// The origin must lie in the interior.
    pub fn new(dim: usize, points: Vec<Vec<i64>>) -> Result<Self> {
        Self::build(dim, points, true)
    }

    /// Like [`LatticePolytope::new`], for a point list known to be complete.
    pub fn from_complete_points(dim: usize, points: Vec<Vec<i64>>) -> Result<Self> {
        Self::build(dim, points, false)
    }

    fn build(dim: usize, mut points: Vec<Vec<i64>>, complete: bool) -> Result<Self> {
        if !(1..=4).contains(&dim) {
            return Err(Error::UnsupportedDimension(dim));
        }
        if points.iter().any(|p| p.len() != dim) {
            return Err(Error::Parse("point of wrong dimension".into()));
        }
        let mut seen = HashSet::new();
        for p in &points {
            if !seen.insert(p.clone()) {
                return Err(Error::Parse(format!("duplicate point {p:?}")));
            }
        }
        let hull = hull_facets(dim, &points)?;
        if hull.iter().any(|(_, c)| *c <= 0) {
            return Err(Error::OriginNotInterior);
        }
        if complete {
            let mut extra: Vec<Vec<i64>> = enumerate_lattice_points(dim, &points, &hull)?
                .into_iter()
                .filter(|p| !seen.contains(p))
                .collect();
            extra.sort();
            points.extend(extra);
        }
        Self::assemble(dim, points, hull)
    }

    fn assemble(dim: usize, points: Vec<Vec<i64>>, hull: Vec<(Vec<i64>, i64)>) -> Result<Self> {
        let mut facets = Vec::with_capacity(hull.len());
        let mut count = vec![0usize; points.len()];
        for (normal, distance) in hull {
            let mut on = Vec::new();
            for (i, p) in points.iter().enumerate() {
                if dot(&normal, p)? == -distance {
                    on.push(i);
                    count[i] += 1;
                }
            }
            facets.push(Facet { normal, distance, points: on, interior_points: vec![], simplicial: false });
        }
        let origin = points.iter().position(|p| p.iter().all(|&x| x == 0));
        let facet_interior: Vec<bool> = (0..points.len())
            .map(|i| count[i] == 1 && Some(i) != origin)
            .collect();
        for f in &mut facets {
            f.interior_points = f.points.iter().copied().filter(|&i| facet_interior[i]).collect();
            f.simplicial = f.points.len() - f.interior_points.len() == dim;
        }
        let mut vertex = vec![false; points.len()];
        for (i, v) in vertex.iter_mut().enumerate() {
            if count[i] >= dim {
                let normals: Vec<Vec<i64>> = facets
                    .iter()
                    .filter(|f| f.points.contains(&i))
                    .map(|f| f.normal.clone())
                    .collect();
                *v = arith::rank(&normals)? == dim;
            }
        }
        Ok(LatticePolytope { dim, points, vertex, facet_interior, origin, facets })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn points(&self) -> &[Vec<i64>] {
        &self.points
    }

    pub fn point(&self, i: usize) -> &[i64] {
        &self.points[i]
    }

    pub fn num_points(&self) -> usize {
        self.points.len()
    }

    pub fn is_vertex(&self, i: usize) -> bool {
        self.vertex[i]
    }

    pub fn vertices(&self) -> Vec<usize> {
        (0..self.points.len()).filter(|&i| self.vertex[i]).collect()
    }

    pub fn is_facet_interior(&self, i: usize) -> bool {
        self.facet_interior[i]
    }

    pub fn origin(&self) -> Option<usize> {
        self.origin
    }

    pub fn facets(&self) -> &[Facet] {
        &self.facets
    }

    pub fn is_reflexive(&self) -> bool {
        self.facets.iter().all(|f| f.distance == 1)
    }

    pub fn ensure_reflexive(&self) -> Result<()> {
        match self.facets.iter().find(|f| f.distance != 1) {
            Some(f) => Err(Error::NotReflexive { distance: f.distance }),
            None => Ok(()),
        }
    }

    /// Indices (into the point list) of the points that carry toric divisors:
    /// nonzero points not interior to a facet.
    pub fn divisor_points(&self) -> Vec<usize> {
        (0..self.points.len())
            .filter(|&i| Some(i) != self.origin && !self.facet_interior[i])
            .collect()
    }

    pub fn divisor_vectors(&self) -> Vec<Vec<i64>> {
        self.divisor_points().into_iter().map(|i| self.points[i].clone()).collect()
    }

    /// Number of points interior to facets.
    pub fn num_facet_interior(&self) -> usize {
        self.facet_interior.iter().filter(|&&b| b).count()
    }

    /// Map from point index to divisor index.
    pub fn divisor_index(&self) -> Vec<Option<usize>> {
        let mut map = vec![None; self.points.len()];
        for (k, i) in self.divisor_points().into_iter().enumerate() {
            map[i] = Some(k);
        }
        map
    }

    /// Facets containing point `i`, as a bitset over facet indices.
    pub fn tight_facets(&self, i: usize) -> FixedBitSet {
        let mut s = FixedBitSet::with_capacity(self.facets.len());
        for (k, f) in self.facets.iter().enumerate() {
            if f.points.binary_search(&i).is_ok() {
                s.insert(k);
            }
        }
        s
    }

    /// The polar dual `{y : <y, x> >= -1 for all x}` of a reflexive polytope,
    /// with points in canonical order.
    pub fn dual(&self) -> Result<LatticePolytope> {
        self.ensure_reflexive()?;
        let verts: Vec<Vec<i64>> = self.facets.iter().map(|f| f.normal.clone()).collect();
        LatticePolytope::new(self.dim, verts)?.canonical()
    }

    /// Reorders the points: vertices, other boundary points, facet-interior
    /// points, origin; each group in descending lexicographic order.
    pub fn canonical(self) -> Result<LatticePolytope> {
        let mut idx: Vec<usize> = (0..self.points.len()).collect();
        let class = |i: usize| {
            if Some(i) == self.origin {
                3
            } else if self.facet_interior[i] {
                2
            } else if self.vertex[i] {
                0
            } else {
                1
            }
        };
        idx.sort_by_key(|&i| (class(i), Reverse(self.points[i].clone())));
        let points: Vec<Vec<i64>> = idx.iter().map(|&i| self.points[i].clone()).collect();
        let hull = self.facets.iter().map(|f| (f.normal.clone(), f.distance)).collect();
        LatticePolytope::assemble(self.dim, points, hull)
    }
}

/// Polytope from an explicit point matrix, checked for reflexivity.
pub fn facets_and_reflexivity(m: &PointMatrix) -> Result<LatticePolytope> {
    let p = LatticePolytope::new(m.dim, m.points.clone())?;
    p.ensure_reflexive()?;
    Ok(p)
}

/// Facets of `conv(points)` as `(primitive normal, distance)` with
/// `<normal, x> >= -distance`, sorted by normal.
///
/// Double description on the homogenized cone: the facets are the extreme
/// rays of `{(c, u) : c + <u, p> >= 0 for all p}`.
pub fn hull_facets(dim: usize, points: &[Vec<i64>]) -> Result<Vec<(Vec<i64>, i64)>> {
    let rows: Vec<Vec<i64>> = points
        .iter()
        .map(|p| std::iter::once(1).chain(p.iter().copied()).collect())
        .collect();
    let width = dim + 1;

    let mut basis: Vec<usize> = Vec::new();
    for i in 0..rows.len() {
        let mut trial: Vec<Vec<i64>> = basis.iter().map(|&b| rows[b].clone()).collect();
        trial.push(rows[i].clone());
        if arith::rank(&trial)? == trial.len() {
            basis.push(i);
            if basis.len() == width {
                break;
            }
        }
    }
    if basis.len() < width {
        return Err(Error::NotFullDimensional);
    }

    struct Ray {
        v: Vec<i64>,
        zeros: FixedBitSet,
    }
    let n = rows.len();
    let mut processed = FixedBitSet::with_capacity(n);
    for &b in &basis {
        processed.insert(b);
    }
    let mut rays: Vec<Ray> = Vec::with_capacity(width);
    for (k, &bk) in basis.iter().enumerate() {
        let others: Vec<Vec<i64>> = basis
            .iter()
            .enumerate()
            .filter(|&(j, _)| j != k)
            .map(|(_, &b)| rows[b].clone())
            .collect();
        let ker = arith::integer_kernel(&others, width)?;
        debug_assert_eq!(ker.len(), 1);
        let mut v = ker.into_iter().next().ok_or(Error::NotFullDimensional)?;
        if dot(&rows[bk], &v)? < 0 {
            v.iter_mut().for_each(|x| *x = -*x);
        }
        let mut zeros = FixedBitSet::with_capacity(n);
        for (j, &b) in basis.iter().enumerate() {
            if j != k {
                zeros.insert(b);
            }
        }
        rays.push(Ray { v, zeros });
    }

    for i in 0..n {
        if processed.contains(i) {
            continue;
        }
        processed.insert(i);
        let vals: Vec<i64> = rays.iter().map(|r| dot(&rows[i], &r.v)).collect::<Result<_>>()?;
        if vals.iter().all(|&s| s >= 0) {
            for (r, &s) in rays.iter_mut().zip(&vals) {
                if s == 0 {
                    r.zeros.insert(i);
                }
            }
            continue;
        }
        let mut next: Vec<Ray> = Vec::new();
        for (a, &sa) in vals.iter().enumerate() {
            if sa <= 0 {
                continue;
            }
            for (b, &sb) in vals.iter().enumerate() {
                if sb >= 0 {
                    continue;
                }
                let mut common = rays[a].zeros.clone();
                common.intersect_with(&rays[b].zeros);
                if common.count_ones(..) + 2 < width {
                    continue;
                }
                let adjacent = rays
                    .iter()
                    .enumerate()
                    .all(|(c, r)| c == a || c == b || !common.is_subset(&r.zeros));
                if !adjacent {
                    continue;
                }
                let v: Vec<i64> = rays[a]
                    .v
                    .iter()
                    .zip(&rays[b].v)
                    .map(|(&x, &y)| arith::checked(sa as i128 * y as i128 - sb as i128 * x as i128))
                    .collect::<Result<_>>()?;
                let mut zeros = common;
                zeros.insert(i);
                next.push(Ray { v: primitive(&v), zeros });
            }
        }
        for (mut r, &s) in rays.into_iter().zip(&vals) {
            if s >= 0 {
                if s == 0 {
                    r.zeros.insert(i);
                }
                next.push(r);
            }
        }
        rays = next;
    }

    let mut out = Vec::with_capacity(rays.len());
    for r in rays {
        let normal = primitive(&r.v[1..]);
        let mut min = i64::MAX;
        for p in points {
            min = min.min(dot(&normal, p)?);
        }
        out.push((normal, -min));
    }
    out.sort();
    out.dedup();
    Ok(out)
}

/// All lattice points satisfying the facet inequalities, scanning the
/// bounding box of `points`.
pub fn enumerate_lattice_points(
    dim: usize,
    points: &[Vec<i64>],
    facets: &[(Vec<i64>, i64)],
) -> Result<Vec<Vec<i64>>> {
    let lo: Vec<i64> = (0..dim).map(|k| points.iter().map(|p| p[k]).min().unwrap_or(0)).collect();
    let hi: Vec<i64> = (0..dim).map(|k| points.iter().map(|p| p[k]).max().unwrap_or(0)).collect();
    let mut out = Vec::new();
    let mut x = lo.clone();
    loop {
        let mut inside = true;
        for (u, c) in facets {
            if dot(u, &x)? < -c {
                inside = false;
                break;
            }
        }
        if inside {
            out.push(x.clone());
        }
        let mut k = 0;
        loop {
            if k == dim {
                return Ok(out);
            }
            if x[k] < hi[k] {
                x[k] += 1;
                break;
            }
            x[k] = lo[k];
            k += 1;
        }
    }
}

/// Lattice points `x in Z^n` with `x_i >= -1` and `sum_i w_ji x_i = 0` for
/// every weight system, i.e. the shifted monomials of the combined degree.
pub fn weight_system_points(cws: &Cws) -> Vec<Vec<i64>> {
    let n = cws.num_coordinates();
    let w: Vec<&[i64]> = cws.systems.iter().map(|s| s.weights.as_slice()).collect();
    let ub: Vec<i64> = (0..n)
        .map(|i| {
            w.iter()
                .zip(&cws.systems)
                .filter(|(wj, _)| wj[i] > 0)
                .map(|(wj, s)| (s.degree - wj[i]) / wj[i])
                .min()
                .expect("validated: every coordinate has a positive weight")
        })
        .collect();
    // rest[i][j]: sum of weights of system j over coordinates i..n
    let mut rest = vec![vec![0i64; w.len()]; n + 1];
    let mut rest_max = vec![vec![0i64; w.len()]; n + 1];
    for i in (0..n).rev() {
        for j in 0..w.len() {
            rest[i][j] = rest[i + 1][j] + w[j][i];
            rest_max[i][j] = rest_max[i + 1][j] + w[j][i] * ub[i];
        }
    }

    fn go(
        i: usize,
        x: &mut Vec<i64>,
        sums: &mut Vec<i64>,
        ctx: (&[&[i64]], &[i64], &[Vec<i64>], &[Vec<i64>]),
        out: &mut Vec<Vec<i64>>,
    ) {
        let (w, ub, rest, rest_max) = ctx;
        let n = ub.len();
        if i == n {
            if sums.iter().all(|&s| s == 0) {
                out.push(x.clone());
            }
            return;
        }
        for v in -1..=ub[i] {
            let mut ok = true;
            for j in 0..w.len() {
                let s = sums[j] + w[j][i] * v;
                // remaining coordinates contribute within [-rest, rest_max]
                if s > rest[i + 1][j] || -s > rest_max[i + 1][j] {
                    ok = false;
                }
            }
            if !ok {
                continue;
            }
            x.push(v);
            for j in 0..w.len() {
                sums[j] += w[j][i] * v;
            }
            go(i + 1, x, sums, ctx, out);
            for j in 0..w.len() {
                sums[j] -= w[j][i] * v;
            }
            x.pop();
        }
    }
    let mut out = Vec::new();
    let mut sums = vec![0i64; w.len()];
    go(0, &mut Vec::with_capacity(n), &mut sums, (&w, &ub, &rest, &rest_max), &mut out);
    out
}

/// The dual pair `(P, P*)` of a combined weight system. `P` lives in the
/// lattice of integer solutions of the weight equations, written in a lattice
/// basis of that solution space; `P*` lives in the dual lattice.
pub fn cws_to_dual_pair(cws: &Cws) -> Result<(LatticePolytope, LatticePolytope)> {
    let n = cws.num_coordinates();
    let w: Vec<Vec<i64>> = cws.systems.iter().map(|s| s.weights.clone()).collect();
    let basis = arith::integer_kernel(&w, n)?;
    let dim = basis.len();
    if dim != cws.dim() {
        return Err(Error::InvalidWeights("weight systems are linearly dependent".into()));
    }
    let mut pts = Vec::new();
    for x in weight_system_points(cws) {
        let c = arith::solve(&basis, &x).ok_or(Error::NotFullDimensional)?;
        pts.push(arith::to_integer_vec(&c)?);
    }
    let p = LatticePolytope::from_complete_points(dim, pts)?;
    p.ensure_reflexive()?;
    let p = p.canonical()?;
    let p_star = p.dual()?;
    Ok((p, p_star))
}
