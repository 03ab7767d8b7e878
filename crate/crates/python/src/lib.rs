//! Python bindings for `k3toric`.
//!
//! Integers cross the boundary as Python `int`, rationals as
//! `fractions.Fraction`. Invalid input and failed computations raise
//! `ValueError`; structured results are returned as plain dicts.

use std::collections::BTreeMap;

use k3toric::arith::{parse_rat, Int, Rat};
use k3toric::curve::{classify_ade, classify_curve, milnor_number, ProjPoint, SingularPointReport, TorusCurve};
use k3toric::lattice::{
    check_duality, find_congruence, invariants, recognize, verify_congruence, CongruenceWitness, GramMatrix, IntMatrix,
};
use k3toric::monomial::{monomial_to_point, point_to_monomial, WeightedMonomial};
use k3toric::picard::{build_intersection_graph_labeled, picard_gram, picard_rank, rank_l0, SourceKind};
use k3toric::polytope::{convex_hull, is_reflexive, polar_dual, LatticePoint, RationalPoint};
use k3toric::report::{verify_paper as run_verify_paper, GRID_RADIUS};
use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;
use pyo3::types::{PyDict, PyList, PyTuple};

fn value_error(e: impl std::fmt::Display) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn fraction(py: Python<'_>, r: &Rat) -> PyResult<PyObject> {
    let cls = py.import_bound("fractions")?.getattr("Fraction")?;
    Ok(cls.call1((r.numer().clone(), r.denom().clone()))?.unbind())
}

/// An `int`, a `Fraction` or a string `"p/q"`.
fn extract_rat(v: &Bound<'_, PyAny>) -> PyResult<Rat> {
    if let Ok(s) = v.extract::<String>() {
        return parse_rat(&s).ok_or_else(|| value_error(format!("'{s}' is not a rational number")));
    }
    if let Ok(n) = v.extract::<Int>() {
        return Ok(Rat::from_integer(n));
    }
    let num: Int = v.getattr("numerator")?.extract()?;
    let den: Int = v.getattr("denominator")?.extract()?;
    if den == Int::from(0) {
        return Err(value_error("zero denominator"));
    }
    Ok(Rat::new(num, den))
}

fn point_tuple(py: Python<'_>, p: &LatticePoint) -> Py<PyTuple> {
    PyTuple::new_bound(py, p.0.iter().cloned()).unbind()
}

fn rational_tuple(py: Python<'_>, p: &RationalPoint) -> PyResult<Py<PyTuple>> {
    let items = p.0.iter().map(|c| fraction(py, c)).collect::<PyResult<Vec<_>>>()?;
    Ok(PyTuple::new_bound(py, items).unbind())
}

fn rows(m: &IntMatrix) -> Vec<Vec<Int>> {
    m.to_rows()
}

/// A 3-dimensional polytope, the convex hull of integral points.
#[pyclass(module = "k3toric", frozen)]
#[derive(Clone)]
struct Polytope {
    inner: k3toric::Polytope,
}

#[pymethods]
impl Polytope {
    #[new]
    fn new(vertices: Vec<(i64, i64, i64)>) -> PyResult<Self> {
        let pts: Vec<LatticePoint> = vertices.iter().map(|&(x, y, z)| LatticePoint::new(x, y, z)).collect();
        Ok(Polytope { inner: convex_hull(&pts).map_err(value_error)? })
    }

    /// Vertices as tuples of `Fraction`, sorted.
    fn vertices(&self, py: Python<'_>) -> PyResult<Vec<Py<PyTuple>>> {
        let mut v = self.inner.vertices().to_vec();
        v.sort();
        v.iter().map(|p| rational_tuple(py, p)).collect()
    }

    fn is_integral(&self) -> bool {
        self.inner.is_integral()
    }

    fn is_reflexive(&self) -> bool {
        is_reflexive(&self.inner)
    }

    fn polar_dual(&self) -> PyResult<Polytope> {
        Ok(Polytope { inner: polar_dual(&self.inner).map_err(value_error)? })
    }

    fn lattice_points(&self, py: Python<'_>) -> Vec<Py<PyTuple>> {
        self.inner.lattice_points().iter().map(|p| point_tuple(py, p)).collect()
    }

    fn interior_points(&self, py: Python<'_>) -> Vec<Py<PyTuple>> {
        self.inner.interior_lattice_points().iter().map(|p| point_tuple(py, p)).collect()
    }

    fn rank_l0(&self) -> PyResult<usize> {
        rank_l0(&self.inner).map_err(value_error)
    }

    fn picard_rank(&self) -> PyResult<usize> {
        picard_rank(&self.inner).map_err(value_error)
    }

    /// Divisor intersection graph and Picard basis, as a dict.
    fn picard(&self, py: Python<'_>) -> PyResult<PyObject> {
        let labeling = k3toric::fixtures::reference_labeling(&self.inner);
        let g = build_intersection_graph_labeled(&self.inner, labeling.as_ref().map(|l| &l.1)).map_err(value_error)?;
        let basis = picard_gram(&g, &self.inner).map_err(value_error)?;
        let d = PyDict::new_bound(py);
        d.set_item("labels", g.labels())?;
        d.set_item("sources", g.nodes.iter().map(|n| point_tuple(py, &n.source)).collect::<Vec<_>>())?;
        let kinds: Vec<&str> = g
            .nodes
            .iter()
            .map(|n| match n.kind {
                SourceKind::Vertex => "vertex",
                SourceKind::EdgeInterior => "edge-interior",
            })
            .collect();
        d.set_item("kinds", kinds)?;
        d.set_item("self_intersections", g.self_intersections())?;
        d.set_item("intersection_matrix", rows(&g.gram_full))?;
        d.set_item("basis", basis.labels.clone())?;
        d.set_item("gram", Py::new(py, Gram { inner: basis.gram })?)?;
        Ok(d.into_any().unbind())
    }

    fn __repr__(&self) -> String {
        let v: Vec<String> = self.inner.vertices().iter().map(|p| p.to_string()).collect();
        format!("Polytope([{}])", v.join(", "))
    }
}

/// An integral symmetric bilinear form.
#[pyclass(module = "k3toric", name = "GramMatrix", frozen)]
#[derive(Clone)]
struct Gram {
    inner: GramMatrix,
}

fn int_matrix(rows: Vec<Vec<Int>>) -> PyResult<IntMatrix> {
    let n = rows.first().map_or(0, Vec::len);
    if rows.iter().any(|r| r.len() != n) {
        return Err(value_error("rows have different lengths"));
    }
    Ok(IntMatrix::from_rows(rows))
}

#[pymethods]
impl Gram {
    #[new]
    fn new(rows: Vec<Vec<Int>>) -> PyResult<Self> {
        Ok(Gram { inner: GramMatrix::new(int_matrix(rows)?).map_err(value_error)? })
    }

    fn rows(&self) -> Vec<Vec<Int>> {
        rows(self.inner.matrix())
    }

    fn det(&self) -> Int {
        self.inner.det()
    }

    fn signature(&self) -> (usize, usize) {
        self.inner.signature()
    }

    fn is_even(&self) -> bool {
        self.inner.is_even()
    }

    /// Rank, signature, determinant and discriminant form.
    fn invariants(&self, py: Python<'_>) -> PyResult<PyObject> {
        let inv = invariants(&self.inner).map_err(value_error)?;
        let d = PyDict::new_bound(py);
        d.set_item("rank", inv.rank)?;
        d.set_item("signature", inv.signature)?;
        d.set_item("determinant", inv.determinant.clone())?;
        d.set_item("disc_group", inv.disc_group.clone())?;
        let q = inv.disc_form.q.iter().map(|r| fraction(py, r)).collect::<PyResult<Vec<_>>>()?;
        d.set_item("disc_q", q)?;
        Ok(d.into_any().unbind())
    }

    /// `(name, level)`; `name` is `None` when nothing in the catalog matches.
    fn recognize(&self) -> (Option<String>, String) {
        let r = recognize(&self.inner);
        (r.name.map(|n| n.to_string()), r.level.to_string())
    }

    /// A matrix `P` with `P self P^T = target`, searching entries up to `bound`.
    #[pyo3(signature = (target, bound = 2))]
    fn find_congruence(&self, target: &Gram, bound: u32) -> Option<Vec<Vec<Int>>> {
        find_congruence(&self.inner, &target.inner, bound).witness().map(|w| rows(&w.p))
    }

    fn verify_congruence(&self, p: Vec<Vec<Int>>, target: &Gram) -> PyResult<bool> {
        let w = CongruenceWitness::new(int_matrix(p)?, self.inner.clone(), target.inner.clone());
        Ok(verify_congruence(&w))
    }

    fn __len__(&self) -> usize {
        self.inner.dim()
    }

    fn __eq__(&self, other: &Gram) -> bool {
        self.inner == other.inner
    }

    fn __repr__(&self) -> String {
        format!("GramMatrix({:?})", self.inner.to_i64_rows().unwrap_or_default())
    }
}

/// Duality of `s` with `U + t` as complements in the K3 lattice.
#[pyfunction]
fn duality(py: Python<'_>, s: &Gram, t: &Gram) -> PyResult<PyObject> {
    let r = check_duality(&s.inner, &t.inner);
    let d = PyDict::new_bound(py);
    d.set_item("rank_s", r.rank_s)?;
    d.set_item("rank_t_prime", r.rank_t_prime)?;
    d.set_item("rank_ok", r.rank_ok)?;
    d.set_item("signature_ok", r.signature_ok)?;
    d.set_item("disc_anti_isometric", r.disc_anti_isometric)?;
    d.set_item("failed_stage", r.failed_stage())?;
    d.set_item("all_pass", r.all_pass())?;
    Ok(d.into_any().unbind())
}

#[pyfunction(name = "monomial_to_point")]
fn py_monomial_to_point(m: &str) -> PyResult<(Int, Int, Int)> {
    let w = WeightedMonomial::parse(m).map_err(value_error)?;
    let p = monomial_to_point(&w).map_err(value_error)?;
    let [x, y, z] = p.0;
    Ok((x, y, z))
}

#[pyfunction(name = "point_to_monomial")]
fn py_point_to_monomial(p: (i64, i64, i64)) -> PyResult<String> {
    let m = point_to_monomial(&LatticePoint::new(p.0, p.1, p.2)).map_err(value_error)?;
    Ok(m.to_string())
}

fn proj_point(p: &Bound<'_, PyAny>) -> PyResult<ProjPoint> {
    let c: Vec<Bound<'_, PyAny>> = p.iter()?.collect::<PyResult<_>>()?;
    if c.len() != 3 {
        return Err(value_error("a projective point has three coordinates"));
    }
    let c = [extract_rat(&c[0])?, extract_rat(&c[1])?, extract_rat(&c[2])?];
    ProjPoint::new(c).map_err(value_error)
}

fn point_report(py: Python<'_>, r: &SingularPointReport) -> PyResult<PyObject> {
    let d = PyDict::new_bound(py);
    let coords = r.point.coords().iter().map(|c| fraction(py, c)).collect::<PyResult<Vec<_>>>()?;
    d.set_item("point", PyTuple::new_bound(py, coords))?;
    d.set_item("type", r.ade_type.to_string())?;
    d.set_item("milnor", r.milnor)?;
    d.set_item("hessian_corank", r.hessian_corank)?;
    Ok(d.into_any().unbind())
}

/// The sextic `f2^3 + f3^2 = 0` for a conic `f2` and a cubic `f3`.
#[pyclass(module = "k3toric", frozen)]
struct TorusSextic {
    inner: TorusCurve,
}

#[pymethods]
impl TorusSextic {
    #[new]
    #[pyo3(signature = (f2, f3, params = None))]
    fn new(f2: &str, f3: &str, params: Option<&Bound<'_, PyDict>>) -> PyResult<Self> {
        let mut values = BTreeMap::new();
        if let Some(params) = params {
            for (k, v) in params.iter() {
                values.insert(k.extract::<String>()?, extract_rat(&v)?);
            }
        }
        Ok(TorusSextic { inner: TorusCurve::parse(f2, f3, &values).map_err(value_error)? })
    }

    /// The expanded sextic.
    fn expanded(&self) -> String {
        self.inner.f.to_string()
    }

    fn milnor_number(&self, point: &Bound<'_, PyAny>) -> PyResult<u32> {
        milnor_number(&self.inner.f, &proj_point(point)?, 40).map_err(value_error)
    }

    /// ADE type of a singular point, e.g. `"A5"` or `"E6"`.
    fn classify_point(&self, point: &Bound<'_, PyAny>) -> PyResult<String> {
        let r = classify_ade(&self.inner.f, &proj_point(point)?).map_err(value_error)?;
        Ok(r.ade_type.to_string())
    }

    /// Classify the given points and all rational singular points found on
    /// the search grid.
    #[pyo3(signature = (points = None, grid = GRID_RADIUS))]
    fn classify(&self, py: Python<'_>, points: Option<&Bound<'_, PyList>>, grid: i64) -> PyResult<PyObject> {
        let stated = match points {
            Some(l) => l.iter().map(|p| proj_point(&p)).collect::<PyResult<Vec<_>>>()?,
            None => Vec::new(),
        };
        let k = classify_curve(&self.inner, &stated, grid).map_err(value_error)?;
        let d = PyDict::new_bound(py);
        d.set_item("configuration", k.configuration())?;
        let singular = k.singular_points.iter().map(|r| point_report(py, r)).collect::<PyResult<Vec<_>>>()?;
        d.set_item("singular_points", singular)?;
        let rejected: Vec<String> =
            k.stated.iter().filter_map(|(p, r)| r.as_ref().err().map(|e| format!("{p}: {e}"))).collect();
        d.set_item("rejected", rejected)?;
        d.set_item("conic_cubic_points", k.intersection.distinct_points)?;
        d.set_item("transversal", k.intersection.transversal)?;
        Ok(d.into_any().unbind())
    }
}

/// Recompute the reference claims. Returns `(exit_code, report)` where the
/// report is text or JSON.
#[pyfunction]
#[pyo3(signature = (json = false))]
fn verify_paper(json: bool) -> (i32, String) {
    let r = run_verify_paper();
    (r.exit_code(), if json { r.to_json() } else { r.to_text() })
}

#[pymodule]
#[pyo3(name = "k3toric")]
fn k3toric_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<Polytope>()?;
    m.add_class::<Gram>()?;
    m.add_class::<TorusSextic>()?;
    m.add_function(wrap_pyfunction!(duality, m)?)?;
    m.add_function(wrap_pyfunction!(py_monomial_to_point, m)?)?;
    m.add_function(wrap_pyfunction!(py_point_to_monomial, m)?)?;
    m.add_function(wrap_pyfunction!(verify_paper, m)?)?;
    Ok(())
}
