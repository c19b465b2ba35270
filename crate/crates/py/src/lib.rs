//! Python module `maxstn`: instances, generators, the two approximation
//! algorithms, the exact oracle, upper bounds, rendering and the theory
//! checks.

use pyo3::exceptions::{PyOSError, PyRuntimeError, PyValueError};
use pyo3::prelude::*;

use maxstn_core::spanning::Selection;
use maxstn_core::theory::{self, RatioConstants};
use maxstn_core::{generators, render, BoundsReport, Error, Instance, Neighborhood, Point, Solution};

fn to_py(e: Error) -> PyErr {
    match e {
        Error::Io(io) => PyOSError::new_err(io.to_string()),
        e @ Error::BudgetExceeded { .. } => PyRuntimeError::new_err(e.to_string()),
        e => PyValueError::new_err(e.to_string()),
    }
}

fn coords(points: &[Point]) -> Vec<Vec<f64>> {
    points.iter().map(|p| p.coords().to_vec()).collect()
}

/// A problem instance: a list of `(label, vertices)` regions in `R^dim`.
#[pyclass(name = "Instance", module = "maxstn", frozen)]
struct PyInstance {
    inner: Instance,
}

#[pymethods]
impl PyInstance {
    #[new]
    fn new(dim: usize, regions: Vec<(String, Vec<Vec<f64>>)>) -> PyResult<Self> {
        let regions = regions
            .into_iter()
            .map(|(label, vs)| Neighborhood::new(label, vs.into_iter().map(Point::new).collect()))
            .collect();
        Ok(PyInstance { inner: Instance::new(dim, regions).map_err(to_py)? })
    }

    #[staticmethod]
    fn from_json(text: &str) -> PyResult<Self> {
        Ok(PyInstance { inner: Instance::from_json_str(text).map_err(to_py)? })
    }

    fn to_json(&self) -> String {
        self.inner.to_json_string()
    }

    #[getter]
    fn dim(&self) -> usize {
        self.inner.dim()
    }

    #[getter]
    fn n(&self) -> usize {
        self.inner.n()
    }

    #[getter]
    fn total_vertices(&self) -> usize {
        self.inner.total_vertices()
    }

    fn regions(&self) -> Vec<(String, Vec<Vec<f64>>)> {
        self.inner
            .regions()
            .iter()
            .map(|r| (r.label.clone(), coords(&r.vertices)))
            .collect()
    }

    fn __len__(&self) -> usize {
        self.inner.n()
    }

    fn __repr__(&self) -> String {
        format!(
            "Instance(dim={}, n={}, N={})",
            self.inner.dim(),
            self.inner.n(),
            self.inner.total_vertices()
        )
    }
}

/// One vertex per region plus a spanning tree on those representatives.
#[pyclass(name = "Solution", module = "maxstn", frozen)]
struct PySolution {
    inner: Solution,
}

#[pymethods]
impl PySolution {
    #[getter]
    fn producer(&self) -> &'static str {
        self.inner.producer.as_str()
    }

    #[getter]
    fn length(&self) -> f64 {
        self.inner.length
    }

    #[getter]
    fn choice(&self) -> Vec<usize> {
        self.inner.choice.clone()
    }

    #[getter]
    fn selection(&self) -> Vec<Vec<f64>> {
        coords(&self.inner.selection.points)
    }

    #[getter]
    fn edges(&self) -> Vec<(usize, usize)> {
        self.inner.tree.edges.clone()
    }

    fn is_valid_for(&self, inst: PyRef<'_, PyInstance>) -> bool {
        self.inner.is_valid_for(&inst.inner)
    }

    fn __repr__(&self) -> String {
        format!("Solution(producer={}, length={})", self.inner.producer.as_str(), self.inner.length)
    }
}

/// Upper bounds on the optimum, in the instance's units.
#[pyclass(name = "Bounds", module = "maxstn", frozen, get_all)]
struct PyBounds {
    n: usize,
    d: f64,
    y: f64,
    r_y: f64,
    x: Option<f64>,
    z_hat: Option<f64>,
    ub_trivial: f64,
    ub_dmax: f64,
    ub_omega: Option<f64>,
    ub_refined: Option<f64>,
    ub_best: f64,
}

impl From<BoundsReport> for PyBounds {
    fn from(r: BoundsReport) -> Self {
        PyBounds {
            n: r.n,
            d: r.d,
            y: r.y,
            r_y: r.r_y,
            x: r.x,
            z_hat: r.z_hat,
            ub_trivial: r.ub_trivial,
            ub_dmax: r.ub_dmax,
            ub_omega: r.ub_omega,
            ub_refined: r.ub_refined,
            ub_best: r.ub_best,
        }
    }
}

#[pymethods]
impl PyBounds {
    fn __repr__(&self) -> String {
        format!("Bounds(d={}, ub_best={})", self.d, self.ub_best)
    }
}

#[pyfunction]
fn read_instance(path: &str) -> PyResult<PyInstance> {
    Ok(PyInstance { inner: maxstn_core::read_instance(path).map_err(to_py)? })
}

#[pyfunction]
fn gen_example_star() -> PyInstance {
    PyInstance { inner: generators::gen_example_star() }
}

#[pyfunction]
fn gen_example_greedy() -> PyInstance {
    PyInstance { inner: generators::gen_example_greedy() }
}

#[pyfunction]
#[pyo3(signature = (n, eps = None))]
fn gen_tight(n: usize, eps: Option<f64>) -> PyResult<PyInstance> {
    let eps = eps.unwrap_or(1.0 / (n as f64 - 1.0));
    Ok(PyInstance { inner: generators::gen_tight(n, eps).map_err(to_py)? })
}

#[pyfunction]
#[pyo3(signature = (n, k_max = 3, dim = 2, seed = 0))]
fn gen_random(n: usize, k_max: usize, dim: usize, seed: u64) -> PyResult<PyInstance> {
    Ok(PyInstance { inner: generators::gen_random(n, k_max, dim, seed).map_err(to_py)? })
}

#[pyfunction]
fn algo_a1(inst: PyRef<'_, PyInstance>) -> PyResult<PySolution> {
    Ok(PySolution { inner: maxstn_core::algo_a1(&inst.inner).map_err(to_py)? })
}

#[pyfunction]
#[pyo3(signature = (inst, budget = maxstn_core::DEFAULT_BUDGET))]
fn algo_a2(inst: PyRef<'_, PyInstance>, budget: u64) -> PyResult<PySolution> {
    Ok(PySolution { inner: maxstn_core::algo_a2_with_budget(&inst.inner, budget).map_err(to_py)? })
}

#[pyfunction]
#[pyo3(signature = (inst, budget = maxstn_core::DEFAULT_BUDGET))]
fn exact_opt(inst: PyRef<'_, PyInstance>, budget: u64) -> PyResult<PySolution> {
    Ok(PySolution { inner: maxstn_core::exact_opt(&inst.inner, budget).map_err(to_py)? })
}

#[pyfunction]
fn bounds_report(inst: PyRef<'_, PyInstance>) -> PyResult<PyBounds> {
    Ok(maxstn_core::bounds_report(&inst.inner).map_err(to_py)?.into())
}

/// `len(solution) / ub_best`.
#[pyfunction]
fn certified_ratio(inst: PyRef<'_, PyInstance>, solution: PyRef<'_, PySolution>) -> PyResult<f64> {
    let report = maxstn_core::bounds_report(&inst.inner).map_err(to_py)?;
    Ok(maxstn_core::certified_ratio(&solution.inner, &report))
}

/// Longest spanning tree on the points: `(edges, length)`.
#[pyfunction]
fn max_spanning_tree(points: Vec<Vec<f64>>) -> PyResult<(Vec<(usize, usize)>, f64)> {
    if let Some(d) = points.first().map(Vec::len) {
        if points.iter().any(|p| p.len() != d) {
            return Err(PyValueError::new_err("points must share one dimension"));
        }
    }
    let tree = maxstn_core::max_spanning_tree(&Selection::new(points.into_iter().map(Point::new).collect()));
    Ok((tree.edges, tree.length))
}

#[pyfunction]
#[pyo3(signature = (inst, solution = None))]
fn render_svg(inst: PyRef<'_, PyInstance>, solution: Option<PyRef<'_, PySolution>>) -> PyResult<String> {
    render::render_svg(&inst.inner, solution.as_ref().map(|s| &s.inner)).map_err(to_py)
}

#[pyfunction]
fn g(z: f64, y: f64) -> PyResult<f64> {
    theory::g(z, y).map_err(to_py)
}

#[pyfunction]
fn f(z: f64) -> PyResult<f64> {
    theory::f(z).map_err(to_py)
}

/// Run the theory checks: `(all_pass, [(name, value, expected, tol, pass), ...])`.
#[pyfunction]
#[pyo3(signature = (grid_step = 1e-3, perturb = 0.0))]
#[allow(clippy::type_complexity)]
fn verify_theory(grid_step: f64, perturb: f64) -> PyResult<(bool, Vec<(String, f64, f64, f64, bool)>)> {
    let a = theory::verify_with_offset(grid_step, perturb).map_err(to_py)?;
    let rows = a
        .checks
        .iter()
        .map(|c| (c.name.clone(), c.value, c.expected, c.tol, c.pass))
        .collect();
    Ok((a.all_pass(), rows))
}

#[pymodule]
fn maxstn(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyInstance>()?;
    m.add_class::<PySolution>()?;
    m.add_class::<PyBounds>()?;
    m.add("RHO", RatioConstants::closed_form().rho)?;
    m.add("DEFAULT_BUDGET", maxstn_core::DEFAULT_BUDGET)?;
    m.add_function(wrap_pyfunction!(read_instance, m)?)?;
    m.add_function(wrap_pyfunction!(gen_example_star, m)?)?;
    m.add_function(wrap_pyfunction!(gen_example_greedy, m)?)?;
    m.add_function(wrap_pyfunction!(gen_tight, m)?)?;
    m.add_function(wrap_pyfunction!(gen_random, m)?)?;
    m.add_function(wrap_pyfunction!(algo_a1, m)?)?;
    m.add_function(wrap_pyfunction!(algo_a2, m)?)?;
    m.add_function(wrap_pyfunction!(exact_opt, m)?)?;
    m.add_function(wrap_pyfunction!(bounds_report, m)?)?;
    m.add_function(wrap_pyfunction!(certified_ratio, m)?)?;
    m.add_function(wrap_pyfunction!(max_spanning_tree, m)?)?;
    m.add_function(wrap_pyfunction!(render_svg, m)?)?;
    m.add_function(wrap_pyfunction!(g, m)?)?;
    m.add_function(wrap_pyfunction!(f, m)?)?;
    m.add_function(wrap_pyfunction!(verify_theory, m)?)?;
    Ok(())
}
