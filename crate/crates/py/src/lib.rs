//! Python bindings: `import cyclo_schur_py`.

use std::collections::BTreeMap;
use std::sync::Arc;

use cyclo_schur::combin::{enumerate_hook_multipartitions, enumerate_weights, HookProfile, Multipartition};
use cyclo_schur::hecke as core_hecke;
use cyclo_schur::ring::SpecializationTarget;
use cyclo_schur::schur as core_schur;
use cyclo_schur::supermod::{filtration_multiplicities, PermSupermodule};
use cyclo_schur::{golden, Error};
use pyo3::exceptions::{PyOverflowError, PyRuntimeError, PyValueError};
use pyo3::prelude::*;
use pyo3::types::PyDict;

fn py_err(e: Error) -> PyErr {
    match e {
        Error::Parse(_) | Error::InvalidTarget(_) | Error::InvalidInput(_) => PyValueError::new_err(e.to_string()),
        Error::ScaleLimit { .. } => PyOverflowError::new_err(e.to_string()),
        Error::NotMember | Error::Internal(_) => PyRuntimeError::new_err(e.to_string()),
    }
}

fn profile(bk: Vec<usize>, bl: Vec<usize>) -> PyResult<HookProfile> {
    HookProfile::new(bk, bl).map_err(py_err)
}

fn spec(s: &str, m: usize) -> PyResult<SpecializationTarget> {
    let t = SpecializationTarget::parse_spec(s).map_err(py_err)?;
    t.validate().map_err(py_err)?;
    if t.num_params() < m {
        return Err(PyValueError::new_err(format!("'{s}' gives {} of the {m} parameters", t.num_params())));
    }
    Ok(t)
}

/// The cyclotomic Hecke algebra H(m, n) over Z[q^±1, Q_1, …, Q_m].
#[pyclass(frozen)]
struct HeckeAlgebra(Arc<core_hecke::HeckeAlgebra>);

/// An element of H; arithmetic stays inside its algebra.
#[pyclass(frozen)]
struct HeckeElement {
    alg: Arc<core_hecke::HeckeAlgebra>,
    el: core_hecke::HeckeElement,
}

impl HeckeAlgebra {
    fn wrap(&self, el: core_hecke::HeckeElement) -> HeckeElement {
        HeckeElement { alg: self.0.clone(), el }
    }
}

#[pymethods]
impl HeckeAlgebra {
    #[new]
    #[pyo3(signature = (m, n, limit = core_hecke::DEFAULT_DIM_LIMIT))]
    fn new(m: usize, n: usize, limit: usize) -> PyResult<Self> {
        Ok(HeckeAlgebra(Arc::new(core_hecke::HeckeAlgebra::with_limit(m, n, limit).map_err(py_err)?)))
    }

    #[getter]
    fn dim(&self) -> usize {
        self.0.dim()
    }

    /// `(dim, closed)` from closing the normal form under the generators.
    fn dim_check(&self) -> (usize, bool) {
        self.0.dim_check()
    }

    /// `(count, rank)` of the Murphy basis.
    fn murphy_basis_check(&self) -> PyResult<(usize, usize)> {
        self.0.murphy_basis_check().map_err(py_err)
    }

    fn one(&self) -> HeckeElement {
        self.wrap(self.0.one())
    }

    /// `T_i`, `0 ≤ i < n`.
    fn t(&self, i: usize) -> PyResult<HeckeElement> {
        Ok(self.wrap(self.0.t(i).map_err(py_err)?))
    }

    /// Jucys–Murphy element `J_i`, `1 ≤ i ≤ n`.
    fn j(&self, i: usize) -> PyResult<HeckeElement> {
        Ok(self.wrap(self.0.j(i).map_err(py_err)?))
    }

    fn basis(&self, label: usize) -> PyResult<HeckeElement> {
        if label >= self.0.dim() {
            return Err(PyValueError::new_err(format!("label {label} out of range")));
        }
        Ok(self.wrap(self.0.basis_label(label)))
    }

    fn from_json(&self, s: &str) -> PyResult<HeckeElement> {
        Ok(self.wrap(core_hecke::HeckeElement::from_json(self.0.m(), self.0.n(), s).map_err(py_err)?))
    }
}

impl HeckeElement {
    fn same(&self, other: &HeckeElement) -> PyResult<()> {
        if Arc::ptr_eq(&self.alg, &other.alg) || (self.alg.m() == other.alg.m() && self.alg.n() == other.alg.n()) {
            Ok(())
        } else {
            Err(PyValueError::new_err("elements of different algebras"))
        }
    }

    fn with(&self, el: core_hecke::HeckeElement) -> HeckeElement {
        HeckeElement { alg: self.alg.clone(), el }
    }
}

#[pymethods]
impl HeckeElement {
    fn __add__(&self, other: &HeckeElement) -> PyResult<HeckeElement> {
        self.same(other)?;
        Ok(self.with(self.el.add(&other.el)))
    }

    fn __sub__(&self, other: &HeckeElement) -> PyResult<HeckeElement> {
        self.same(other)?;
        Ok(self.with(self.el.sub(&other.el)))
    }

    fn __mul__(&self, other: &HeckeElement) -> PyResult<HeckeElement> {
        self.same(other)?;
        Ok(self.with(self.alg.mul(&self.el, &other.el)))
    }

    fn __eq__(&self, other: &HeckeElement) -> bool {
        self.el == other.el
    }

    /// The anti-involution `T_w ↦ T_{w^-1}`.
    fn star(&self) -> HeckeElement {
        self.with(self.alg.star(&self.el))
    }

    fn is_zero(&self) -> bool {
        self.el.is_zero()
    }

    /// Canonical text of the coefficient of a basis label.
    fn coefficient(&self, label: usize) -> String {
        self.el.coefficient(label).to_string()
    }

    fn to_json(&self) -> String {
        self.el.to_json()
    }

    fn __len__(&self) -> usize {
        self.el.len()
    }

    fn __str__(&self) -> String {
        self.el.to_string()
    }

    fn __repr__(&self) -> String {
        format!("HeckeElement({})", self.el)
    }
}

/// The q-Schur superalgebra S(bk|bl; n) with its φ_ST basis.
#[pyclass(frozen)]
struct SchurAlgebra(core_schur::SchurAlgebra);

#[pymethods]
impl SchurAlgebra {
    #[new]
    fn new(bk: Vec<usize>, bl: Vec<usize>, n: usize) -> PyResult<Self> {
        Ok(SchurAlgebra(core_schur::SchurAlgebra::new(&profile(bk, bl)?, n).map_err(py_err)?))
    }

    #[getter]
    fn dim(&self) -> usize {
        self.0.dim()
    }

    fn dimension_formula(&self) -> usize {
        self.0.dimension_formula()
    }

    fn basis_rank(&self) -> usize {
        self.0.basis_rank()
    }

    #[getter]
    fn shapes(&self) -> Vec<String> {
        self.0.shapes.iter().map(|s| s.to_string()).collect()
    }

    #[getter]
    fn weights(&self) -> Vec<String> {
        self.0.weights.iter().map(|w| w.to_string()).collect()
    }

    /// Parity of every basis label.
    fn parities(&self) -> Vec<u8> {
        self.0.labels.iter().map(|l| l.parity()).collect()
    }

    /// Coefficients of `φ_i ∘ φ_j` as `{label: text}`.
    fn compose(&self, i: usize, j: usize) -> PyResult<BTreeMap<usize, String>> {
        if i >= self.0.dim() || j >= self.0.dim() {
            return Err(PyValueError::new_err("label out of range"));
        }
        let f = self.0.compose_basis(i, j).map_err(py_err)?;
        Ok(f.coeffs.iter().filter(|(_, c)| !c.is_zero()).map(|(&k, c)| (k, c.to_string())).collect())
    }

    fn cellularity_check<'py>(&self, py: Python<'py>) -> PyResult<Bound<'py, PyDict>> {
        let r = self.0.cellularity_check().map_err(py_err)?;
        let d = PyDict::new(py);
        d.set_item("passed", r.passed())?;
        d.set_item("products", r.products)?;
        d.set_item("star_violations", r.star_violations)?;
        d.set_item("independence_violations", r.independence_violations)?;
        d.set_item("ideal_violations", r.ideal_violations)?;
        Ok(d)
    }

    /// `(index tableaux, entries)` of the Gram matrix of a shape.
    fn gram(&self, shape: &str) -> PyResult<(Vec<String>, Vec<Vec<String>>)> {
        let lam: Multipartition = shape.parse().map_err(py_err)?;
        let g = self.0.gram(&lam).map_err(py_err)?;
        Ok((
            g.index.iter().map(|(t, _)| t.to_string()).collect(),
            g.entries.iter().map(|r| r.iter().map(|p| p.to_string()).collect()).collect(),
        ))
    }

    #[pyo3(signature = (spec = "generic"))]
    fn simple_dims(&self, spec: &str) -> PyResult<BTreeMap<String, usize>> {
        let t = self::spec(spec, self.0.profile.m())?;
        Ok(self.0.simple_dims(&t).map_err(py_err)?.into_iter().map(|(l, d)| (l.to_string(), d)).collect())
    }

    #[pyo3(signature = (spec = "generic"))]
    fn double_centralizer_check<'py>(&self, py: Python<'py>, spec: &str) -> PyResult<Bound<'py, PyDict>> {
        let t = self::spec(spec, self.0.profile.m())?;
        let r = self.0.double_centralizer_check(&t).map_err(py_err)?;
        let d = PyDict::new(py);
        d.set_item("dim_v", r.dim_v)?;
        d.set_item("dim_schur", r.dim_schur)?;
        d.set_item("commutant_dim", r.commutant_dim)?;
        d.set_item("dim_hecke", r.dim_hecke)?;
        d.set_item("hecke_image_rank", r.hecke_image_rank)?;
        d.set_item("bicommutant_dim", r.bicommutant_dim)?;
        d.set_item("faithful", r.faithful)?;
        d.set_item("centralizes", r.centralizes())?;
        Ok(d)
    }
}

/// Hook multipartitions of `n` for the profile, in display form.
#[pyfunction]
fn hook_multipartitions(bk: Vec<usize>, bl: Vec<usize>, n: usize) -> PyResult<Vec<String>> {
    Ok(enumerate_hook_multipartitions(&profile(bk, bl)?, n).iter().map(|l| l.to_string()).collect())
}

/// Per-weight `{weight, parity, rank, multiplicities}` of the permutation
/// supermodules.
#[pyfunction]
fn supermodules<'py>(py: Python<'py>, bk: Vec<usize>, bl: Vec<usize>, n: usize) -> PyResult<Vec<Bound<'py, PyDict>>> {
    let p = profile(bk, bl)?;
    let h = core_hecke::HeckeAlgebra::new(p.m(), n).map_err(py_err)?;
    enumerate_weights(&p, n)
        .iter()
        .map(|w| {
            let module = PermSupermodule::new(&h, &p, w).map_err(py_err)?;
            let mult: BTreeMap<String, usize> = filtration_multiplicities(&p, w).into_iter().map(|(l, c)| (l.to_string(), c)).collect();
            let d = PyDict::new(py);
            d.set_item("weight", w.to_string())?;
            d.set_item("parity", module.parity)?;
            d.set_item("rank", module.basis_rank())?;
            d.set_item("multiplicities", mult)?;
            Ok(d)
        })
        .collect()
}

/// `[(name, passed)]` for the worked examples.
#[pyfunction]
fn golden_suite() -> Vec<(String, bool)> {
    golden::suite().into_iter().map(|r| (r.name, r.pass)).collect()
}

#[pymodule]
fn cyclo_schur_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<HeckeAlgebra>()?;
    m.add_class::<HeckeElement>()?;
    m.add_class::<SchurAlgebra>()?;
    m.add_function(wrap_pyfunction!(hook_multipartitions, m)?)?;
    m.add_function(wrap_pyfunction!(supermodules, m)?)?;
    m.add_function(wrap_pyfunction!(golden_suite, m)?)?;
    Ok(())
}
