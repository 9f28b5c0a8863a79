//! Topology of a hypersurface `H = sum_i c_i D_i` in a four-dimensional toric
//! ambient space: restricted intersection ring, Chern classes, Euler number,
//! arithmetic genera and divisor data.

use std::collections::BTreeMap;

use num_traits::{One, Zero};

use crate::arith::{self, q, Q};
use crate::chow::{DivisorBasis, IntersectionTensor};
use crate::error::{Error, Result};
use crate::ipsimplex::IpSimplex;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HypersurfaceClass {
    pub coefficients: Vec<i64>,
}

impl HypersurfaceClass {
    /// The anticanonical class `sum_i D_i`.
    pub fn anticanonical(n: usize) -> Self {
        HypersurfaceClass { coefficients: vec![1; n] }
    }

    pub fn is_cy(&self) -> bool {
        self.coefficients.iter().all(|&c| c == 1)
    }

    /// Line `Hypersurface class: 1*d1 1*d6 `.
    pub fn class_line(&self) -> String {
        let mut s = "Hypersurface class: ".to_string();
        for (i, &c) in self.coefficients.iter().enumerate() {
            if c != 0 {
                s.push_str(&format!("{c}*d{} ", i + 1));
            }
        }
        s
    }
}

/// Class from user coefficients, or the anticanonical class.
pub fn resolve_hypersurface(coefficients: Option<&[i64]>, n: usize) -> Result<HypersurfaceClass> {
    match coefficients {
        None => Ok(HypersurfaceClass::anticanonical(n)),
        Some(c) if c.len() == n => Ok(HypersurfaceClass { coefficients: c.to_vec() }),
        Some(c) => Err(Error::InvalidHypersurface(format!("expected {n} coefficients, got {}", c.len()))),
    }
}

/// Degrees of `h` under the weight systems given by a maximal independent
/// prefix of the IP-simplices.
pub fn degrees(ips: &[IpSimplex], h: &HypersurfaceClass) -> Result<Vec<i64>> {
    let mut chosen: Vec<Vec<i64>> = Vec::new();
    for s in ips {
        chosen.push(s.coefficients.clone());
        if arith::rank(&chosen)? < chosen.len() {
            chosen.pop();
        }
    }
    chosen.iter().map(|w| arith::dot(w, &h.coefficients)).collect()
}

/// Line `Hypersurface degrees: ( 5  4 )`.
pub fn degrees_line(degrees: &[i64]) -> String {
    let inner: String = degrees.iter().map(|d| format!("{d:>2} ")).collect();
    format!("Hypersurface degrees: ({inner})")
}

/// Commutative polynomial in the basis classes, keyed by sorted index
/// multisets.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Poly(BTreeMap<Vec<usize>, Q>);

impl Poly {
    pub fn constant(c: Q) -> Self {
        let mut m = BTreeMap::new();
        if !c.is_zero() {
            m.insert(vec![], c);
        }
        Poly(m)
    }

    pub fn linear(c: &[Q]) -> Self {
        Poly(c.iter().enumerate().filter(|(_, x)| !x.is_zero()).map(|(a, x)| (vec![a], x.clone())).collect())
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<usize>, &Q)> {
        self.0.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn add(&self, other: &Poly) -> Poly {
        let mut m = self.0.clone();
        for (k, v) in &other.0 {
            *m.entry(k.clone()).or_insert_with(Q::zero) += v;
        }
        m.retain(|_, v| !v.is_zero());
        Poly(m)
    }

    pub fn scale(&self, c: &Q) -> Poly {
        if c.is_zero() {
            return Poly::default();
        }
        Poly(self.0.iter().map(|(k, v)| (k.clone(), v * c)).collect())
    }

    pub fn sub(&self, other: &Poly) -> Poly {
        self.add(&other.scale(&q(-1)))
    }

    /// Product, dropping terms above degree `max`.
    pub fn mul(&self, other: &Poly, max: usize) -> Poly {
        let mut m: BTreeMap<Vec<usize>, Q> = BTreeMap::new();
        for (a, x) in &self.0 {
            for (b, y) in &other.0 {
                if a.len() + b.len() > max {
                    continue;
                }
                let mut k: Vec<usize> = a.iter().chain(b).copied().collect();
                k.sort();
                *m.entry(k).or_insert_with(Q::zero) += x * y;
            }
        }
        m.retain(|_, v| !v.is_zero());
        Poly(m)
    }

    pub fn homogeneous(&self, degree: usize) -> Poly {
        Poly(self.0.iter().filter(|(k, _)| k.len() == degree).map(|(k, v)| (k.clone(), v.clone())).collect())
    }

    /// Integral of the top-degree part against a tensor over the same basis.
    pub fn integrate(&self, t: &IntersectionTensor) -> Q {
        self.0.iter().filter(|(k, _)| k.len() == t.order()).map(|(k, v)| v * t.get(k)).sum()
    }

    /// Renders like `2*J1^3+108*J2^3+8*J1^2*J2+30*J2^2*J1`: monomials with
    /// fewer distinct factors first; factors by descending power.
    pub fn render(&self, var: &str) -> String {
        let mut terms: Vec<(Vec<(usize, usize)>, &Q)> = self
            .0
            .iter()
            .map(|(k, v)| {
                let mut powers: Vec<(usize, usize)> = Vec::new();
                for &a in k {
                    match powers.iter_mut().find(|(b, _)| *b == a) {
                        Some(p) => p.1 += 1,
                        None => powers.push((a, 1)),
                    }
                }
                powers.sort_by(|x, y| y.1.cmp(&x.1).then(x.0.cmp(&y.0)));
                (powers, v)
            })
            .collect();
        terms.sort_by(|(a, _), (b, _)| {
            let pa: Vec<usize> = a.iter().map(|p| p.1).collect();
            let pb: Vec<usize> = b.iter().map(|p| p.1).collect();
            a.len().cmp(&b.len()).then(pb.cmp(&pa)).then(a.cmp(b))
        });
        let mut s = String::new();
        for (powers, v) in terms {
            let mono: Vec<String> = powers
                .iter()
                .map(|&(a, e)| if e == 1 { format!("{var}{}", a + 1) } else { format!("{var}{}^{e}", a + 1) })
                .collect();
            let mono = mono.join("*");
            let term = if mono.is_empty() {
                arith::fmt_q(v)
            } else if v.is_one() {
                mono
            } else if (-v).is_one() {
                format!("-{mono}")
            } else {
                format!("{}*{mono}", arith::fmt_q(v))
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
}

/// Chern classes of `H` as ambient polynomials, restricted by adjunction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChernData {
    pub c1: Poly,
    pub c2: Poly,
    pub c3: Poly,
    /// `int_H c3`.
    pub euler: Q,
}

/// Per-divisor data of `S = D_i` restricted to `H`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DivisorTopology {
    pub divisor: usize,
    pub c1_squared: Q,
    pub euler: Q,
    pub chi0: Q,
    /// `n` if `S` passes the necessary conditions for a del Pezzo surface of
    /// degree `9 - n`.
    pub del_pezzo: Option<i64>,
}

/// Intersection theory of `H` in the basis `J_a`.
#[derive(Debug, Clone)]
pub struct Hypersurface {
    basis: DivisorBasis,
    /// Order-4 tensor over the basis classes.
    tensor: IntersectionTensor,
    class: HypersurfaceClass,
    h: Poly,
    divisors: Vec<Poly>,
}

impl Hypersurface {
    /// `tensor4` is the ambient tensor over the toric divisors.
    pub fn new(basis: &DivisorBasis, tensor4: &IntersectionTensor, class: &HypersurfaceClass) -> Result<Self> {
        if tensor4.order() != 4 {
            return Err(Error::UnsupportedDimension(tensor4.order()));
        }
        if class.coefficients.len() != basis.expansion.len() {
            return Err(Error::InvalidHypersurface(format!(
                "expected {} coefficients, got {}",
                basis.expansion.len(),
                class.coefficients.len()
            )));
        }
        let tensor = tensor4.restrict(&basis.basis);
        let h = Poly::linear(&basis.express(&class.coefficients));
        let divisors = basis.expansion.iter().map(|row| Poly::linear(row)).collect();
        Ok(Hypersurface { basis: basis.clone(), tensor, class: class.clone(), h, divisors })
    }

    pub fn class(&self) -> &HypersurfaceClass {
        &self.class
    }

    pub fn basis(&self) -> &DivisorBasis {
        &self.basis
    }

    pub fn h(&self) -> &Poly {
        &self.h
    }

    /// `int_H p` for a cubic `p`.
    pub fn integrate_on_h(&self, p: &Poly) -> Q {
        p.homogeneous(3).mul(&self.h, 4).integrate(&self.tensor)
    }

    /// Triple intersections `J_a J_b J_c H`.
    pub fn triple_intersections(&self) -> IntersectionTensor {
        let rank = self.basis.rank();
        let h: Vec<Q> = (0..rank).map(|a| self.h.0.get(&vec![a]).cloned().unwrap_or_else(Q::zero)).collect();
        self.tensor.contract(&h)
    }

    /// The intersection polynomial `sum t_abc J_a J_b J_c`, printed with the
    /// intersection numbers as coefficients.
    pub fn intersection_polynomial(&self) -> Poly {
        let t = self.triple_intersections();
        Poly(t.entries().map(|(k, v)| (k.clone(), v.clone())).collect())
    }

    /// `int D_i D_j D_k H` over the toric divisors, for `i <= j <= k`, nonzero only.
    pub fn divisor_triples(&self) -> Vec<(Vec<usize>, Q)> {
        let n = self.divisors.len();
        let mut out = Vec::new();
        for idx in crate::chow::multisets(n, 3) {
            let p = self.divisors[idx[0]].mul(&self.divisors[idx[1]], 4).mul(&self.divisors[idx[2]], 4);
            let v = self.integrate_on_h(&p);
            if !v.is_zero() {
                out.push((idx, v));
            }
        }
        out
    }

    pub fn chern(&self) -> ChernData {
        // elementary symmetric functions of the toric divisors up to degree 3
        let mut total = Poly::constant(Q::one());
        for d in &self.divisors {
            total = total.mul(&Poly::constant(Q::one()).add(d), 3);
        }
        let s = |k: usize| total.homogeneous(k);
        let h = &self.h;
        let h2 = h.mul(h, 4);
        let h3 = h2.mul(h, 4);
        let c1 = s(1).sub(h);
        let c2 = s(2).sub(&s(1).mul(h, 4)).add(&h2);
        let c3 = s(3).sub(&s(2).mul(h, 4)).add(&s(1).mul(&h2, 4)).sub(&h3);
        let euler = self.integrate_on_h(&c3);
        ChernData { c1, c2, c3, euler }
    }

    /// `(chi_0, chi_1, e)` with `chi_0 = int_H c1 c2 / 24` and
    /// `chi_1 = chi_0 - e/2`.
    pub fn genera(&self) -> (Q, Q, Q) {
        let c = self.chern();
        let chi0 = self.integrate_on_h(&c.c1.mul(&c.c2, 3)) / q(24);
        let chi1 = &chi0 - &c.euler / q(2);
        (chi0, chi1, c.euler)
    }

    fn integrate_on_s(&self, i: usize, p: &Poly) -> Q {
        self.integrate_on_h(&p.homogeneous(2).mul(&self.divisors[i], 3))
    }

    fn curve_is_nonzero(&self, i: usize, j: usize) -> bool {
        let curve = self.divisors[i].mul(&self.divisors[j], 2);
        (0..self.basis.rank()).any(|a| !self.integrate_on_h(&curve.mul(&Poly::linear(&unit(a, self.basis.rank())), 3)).is_zero())
    }

    pub fn divisor_topology(&self) -> Vec<DivisorTopology> {
        let c = self.chern();
        let n = self.divisors.len();
        (0..n)
            .map(|i| {
                let l = &self.divisors[i];
                let c1s = c.c1.sub(l);
                let c2s = c.c2.sub(&c.c1.mul(l, 2)).add(&l.mul(l, 2));
                let c1_squared = self.integrate_on_s(i, &c1s.mul(&c1s, 2));
                let euler = self.integrate_on_s(i, &c2s);
                let chi0 = (&c1_squared + &euler) / q(12);
                let mut del_pezzo = None;
                if arith::is_integral(&c1_squared) && arith::is_integral(&euler) {
                    let n_type = q(9) - &c1_squared;
                    if n_type >= q(0) && n_type <= q(8) && euler == &n_type + q(3) {
                        let positive = (0..n).filter(|&j| j != i && self.curve_is_nonzero(i, j)).all(|j| {
                            self.integrate_on_s(i, &self.divisors[j].mul(&c1s, 2)) > Q::zero()
                        });
                        if positive {
                            del_pezzo = Some(n_type.to_integer().try_into().expect("small"));
                        }
                    }
                }
                DivisorTopology { divisor: i, c1_squared, euler, chi0, del_pezzo }
            })
            .collect()
    }

    /// Del Pezzo candidates meeting no other candidate on `H`.
    pub fn isolated_del_pezzos(&self, topo: &[DivisorTopology]) -> Vec<usize> {
        let dps: Vec<usize> = topo.iter().filter(|t| t.del_pezzo.is_some()).map(|t| t.divisor).collect();
        dps.iter()
            .copied()
            .filter(|&i| dps.iter().all(|&j| j == i || !self.curve_is_nonzero(i, j)))
            .collect()
    }
}

fn unit(a: usize, n: usize) -> Vec<Q> {
    (0..n).map(|b| if a == b { Q::one() } else { Q::zero() }).collect()
}
