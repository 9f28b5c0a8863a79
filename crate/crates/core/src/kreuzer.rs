//! Laurent-polynomial serialization of a polytope's points.

use crate::polytope::LatticePolytope;

fn monomial(x: &[i64]) -> String {
    let factor = |k: usize, e: i64| {
        if e == 1 {
            format!("t_{}", k + 1)
        } else {
            format!("t_{}^{}", k + 1, e)
        }
    };
    let num: String = x.iter().enumerate().filter(|(_, &e)| e > 0).map(|(k, &e)| factor(k, e)).collect();
    let den: String = x.iter().enumerate().filter(|(_, &e)| e < 0).map(|(k, &e)| factor(k, -e)).collect();
    let num = if num.is_empty() { "1".to_string() } else { num };
    if den.is_empty() {
        num
    } else {
        format!("{num}/({den})")
    }
}

/// One monomial per divisor point: `+` for vertices, `-` for other points;
/// negative exponents are written in a denominator.
pub fn kreuzer_polynomial(p: &LatticePolytope) -> String {
    let mut s = String::new();
    for i in p.divisor_points() {
        let sign = if p.is_vertex(i) { '+' } else { '-' };
        if !(s.is_empty() && sign == '+') {
            s.push(sign);
        }
        s.push_str(&monomial(p.point(i)));
    }
    s
}

/// The full `-K` line; `pic` is appended when known.
pub fn kreuzer_line(p: &LatticePolytope, pic: Option<i64>) -> String {
    let mut s = format!("KreuzerPoly={}; intpts={};", kreuzer_polynomial(p), p.num_facet_interior());
    if let Some(pic) = pic {
        s.push_str(&format!("  Pic={pic}"));
    }
    s
}
