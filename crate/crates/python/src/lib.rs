//! Python bindings: polytopes, their star triangulations and the intersection
//! theory of hypersurfaces in the resulting toric varieties.

use pyo3::exceptions::{PyRuntimeError, PyValueError};
use pyo3::prelude::*;

use moricone_core::arith::Q;
use moricone_core::chow::{divisor_basis, pinned_basis, quadruple_intersections, DivisorBasis, LinearRelations, Reduction};
use moricone_core::cli::Record;
use moricone_core::hodge::batyrev;
use moricone_core::hypersurface::{resolve_hypersurface, Hypersurface};
use moricone_core::input::{parse_cws, PointMatrix};
use moricone_core::ipsimplex::{incidence, ip_simplices};
use moricone_core::kreuzer::kreuzer_line;
use moricone_core::mori::{mori_generators, walls};
use moricone_core::polytope::{cws_to_dual_pair, facets_and_reflexivity};
use moricone_core::triangulate::{stanley_reisner, star_triangulations, StarTriangulation, DEFAULT_CAP};
use moricone_core::Error;

fn err(e: Error) -> PyErr {
    match e {
        Error::TriangulationCap { .. } | Error::Overflow | Error::Io(_) => PyRuntimeError::new_err(e.to_string()),
        _ => PyValueError::new_err(e.to_string()),
    }
}

fn fraction(py: Python<'_>, x: &Q) -> PyResult<Py<PyAny>> {
    let cls = py.import("fractions")?.getattr("Fraction")?;
    Ok(cls.call1((x.to_string(),))?.unbind())
}

/// A reflexive polytope `P*` whose boundary points span the fan, together
/// with its dual `P`.
#[pyclass(module = "moricone")]
struct Polytope {
    record: Record,
}

#[pymethods]
impl Polytope {
    /// Builds the pair from a combined weight system such as `"8 4 1 1 1 1 0  6 3 1 0 1 0 1"`.
    #[staticmethod]
    fn from_weights(cws: &str) -> PyResult<Self> {
        let (p, ps) = cws_to_dual_pair(&parse_cws(cws).map_err(err)?).map_err(err)?;
        Ok(Polytope { record: Record { p, ps } })
    }

    /// Builds the pair from the points of `P*`, kept in the given order.
    #[staticmethod]
    fn from_points(points: Vec<Vec<i64>>) -> PyResult<Self> {
        let dim = points.first().map_or(0, |p| p.len());
        let ps = facets_and_reflexivity(&PointMatrix { dim, points }).map_err(err)?;
        let p = ps.dual().map_err(err)?;
        Ok(Polytope { record: Record { p, ps } })
    }

    #[getter]
    fn dim(&self) -> usize {
        self.record.ps.dim()
    }

    /// All lattice points of `P*` in their fixed order.
    #[getter]
    fn points(&self) -> Vec<Vec<i64>> {
        self.record.ps.points().to_vec()
    }

    /// Points labelling the toric divisors.
    #[getter]
    fn divisor_points(&self) -> Vec<Vec<i64>> {
        self.record.ps.divisor_vectors()
    }

    /// Facet incidence words over the divisor points.
    fn incidence(&self) -> Vec<String> {
        incidence(&self.record.ps)
    }

    /// Positive relations among the points, as `(coefficients, degree, codim)`.
    fn ip_simplices(&self) -> PyResult<Vec<(Vec<i64>, i64, usize)>> {
        Ok(ip_simplices(&self.record.ps)
            .map_err(err)?
            .into_iter()
            .map(|s| (s.coefficients, s.degree, s.codim))
            .collect())
    }

    fn kreuzer(&self) -> PyResult<String> {
        let ps = &self.record.ps;
        let pic = if ps.dim() == 4 { Some(batyrev(&self.record.p, ps).map_err(err)?.0) } else { None };
        Ok(kreuzer_line(ps, pic))
    }

    /// `(h11, h21)` of the Calabi-Yau hypersurface; four dimensions only.
    fn hodge_numbers(&self) -> PyResult<(i64, i64)> {
        batyrev(&self.record.p, &self.record.ps).map_err(err)
    }

    /// Expansions `d_i = sum_a c_a J_a`; `basis` pins the divisors used as `J_a`.
    #[pyo3(signature = (basis=None))]
    fn divisor_basis(&self, basis: Option<Vec<usize>>) -> PyResult<Vec<String>> {
        Ok(self.basis(basis.as_deref())?.expansion_strings())
    }

    /// Fine regular star triangulations of the boundary.
    #[pyo3(signature = (cap=DEFAULT_CAP))]
    fn triangulations(&self, cap: usize) -> PyResult<Vec<Triangulation>> {
        let basis = self.basis(None)?;
        Ok(star_triangulations(&self.record.ps, cap)
            .map_err(err)?
            .into_iter()
            .map(|t| Triangulation { t, basis: basis.clone() })
            .collect())
    }

    fn __repr__(&self) -> String {
        format!("Polytope(dim={}, points={})", self.record.ps.dim(), self.record.ps.num_points())
    }
}

impl Polytope {
    fn basis(&self, pinned: Option<&[usize]>) -> PyResult<DivisorBasis> {
        let rel = LinearRelations::new(&self.record.ps.divisor_vectors());
        match pinned {
            Some(b) => pinned_basis(&rel, b).map_err(err),
            None => divisor_basis(&rel).map_err(err),
        }
    }
}

/// One star triangulation with its divisor basis.
#[pyclass(module = "moricone")]
struct Triangulation {
    t: StarTriangulation,
    basis: DivisorBasis,
}

#[pymethods]
impl Triangulation {
    /// Maximal simplices as incidence words.
    fn simplices(&self) -> Vec<String> {
        self.t.words()
    }

    fn sr_ideal(&self) -> Vec<String> {
        stanley_reisner(&self.t).words()
    }

    fn mori_generators(&self) -> PyResult<Vec<Vec<i64>>> {
        Ok(mori_generators(&walls(&self.t).map_err(err)?))
    }

    /// `J_a J_b J_c H` as a polynomial in the basis; `H` defaults to the
    /// anticanonical class.
    #[pyo3(signature = (hypersurface=None))]
    fn intersection_polynomial(&self, hypersurface: Option<Vec<i64>>) -> PyResult<String> {
        Ok(self.hypersurface(hypersurface)?.intersection_polynomial().render("J"))
    }

    /// `(c1, c2, c3)` of `H` as polynomials in the basis.
    #[pyo3(signature = (hypersurface=None))]
    fn chern_classes(&self, hypersurface: Option<Vec<i64>>) -> PyResult<(String, String, String)> {
        let c = self.hypersurface(hypersurface)?.chern();
        Ok((c.c1.render("J"), c.c2.render("J"), c.c3.render("J")))
    }

    /// `(chi_0, chi_1, euler)` of `H` as fractions.
    #[pyo3(signature = (hypersurface=None))]
    fn genera(&self, py: Python<'_>, hypersurface: Option<Vec<i64>>) -> PyResult<(Py<PyAny>, Py<PyAny>, Py<PyAny>)> {
        let (chi0, chi1, e) = self.hypersurface(hypersurface)?.genera();
        Ok((fraction(py, &chi0)?, fraction(py, &chi1)?, fraction(py, &e)?))
    }

    /// Indices of divisors whose restriction to `H` passes the del Pezzo test,
    /// with the number of blown-up points.
    #[pyo3(signature = (hypersurface=None))]
    fn del_pezzos(&self, hypersurface: Option<Vec<i64>>) -> PyResult<Vec<(usize, i64)>> {
        Ok(self
            .hypersurface(hypersurface)?
            .divisor_topology()
            .into_iter()
            .filter_map(|d| d.del_pezzo.map(|n| (d.divisor, n)))
            .collect())
    }

    fn __repr__(&self) -> String {
        format!("Triangulation({})", self.t.words().join(" "))
    }
}

impl Triangulation {
    fn hypersurface(&self, class: Option<Vec<i64>>) -> PyResult<Hypersurface> {
        let class = resolve_hypersurface(class.as_deref(), self.t.num_divisors()).map_err(err)?;
        let tensor = quadruple_intersections(&self.t, Reduction::default()).map_err(err)?;
        Hypersurface::new(&self.basis, &tensor, &class).map_err(err)
    }
}

#[pymodule]
fn moricone(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<Polytope>()?;
    m.add_class::<Triangulation>()?;
    Ok(())
}
