//! Python bindings. Structured results come back as plain dicts and lists,
//! built from the same JSON the `braided` CLI emits.

use std::str::FromStr;

use pyo3::create_exception;
use pyo3::exceptions::PyException;
use pyo3::prelude::*;
use serde_json::Value;

use braided_core::calculus::{braided_exp, ev_pairing, exp_eigenfunction_check, graded_kernel, graded_rank};
use braided_core::combinatorics::Combinatorics;
use braided_core::free_algebra::FreeElement;
use braided_core::io;
use braided_core::lie::{
    check_lie_bialgebra, induction_step, self_transmute, solve_central_charge, transmute_closed_form,
    LieBialgebra as CoreLie, Q,
};
use braided_core::tensor::{yang_baxter_check, RMatrix as CoreRMatrix};
use braided_core::Error;

create_exception!(
    braided,
    BraidedError,
    PyException,
    "Base class for errors raised by braided."
);
create_exception!(
    braided,
    InputError,
    BraidedError,
    "Malformed input or a configured limit was hit."
);
create_exception!(
    braided,
    PropertyViolation,
    BraidedError,
    "A mathematical property the operation depends on does not hold."
);

fn to_py(e: Error) -> PyErr {
    if e.is_property_violation() {
        PropertyViolation::new_err(e.to_string())
    } else {
        InputError::new_err(e.to_string())
    }
}

fn json_to_py(py: Python<'_>, v: &Value) -> PyResult<Py<PyAny>> {
    let text = serde_json::to_string(v).expect("json serializes");
    Ok(py.import("json")?.call_method1("loads", (text,))?.unbind())
}

fn parse_q(s: &str, what: &str) -> PyResult<Q> {
    Q::from_str(s.trim()).map_err(|_| InputError::new_err(format!("{what} must be a rational number, got {s:?}")))
}

fn check_letters(word: &[usize], n: usize) -> PyResult<()> {
    match word.iter().find(|&&i| i >= n) {
        Some(i) => Err(InputError::new_err(format!(
            "letter {i} out of range for dimension {n}"
        ))),
        None => Ok(()),
    }
}

/// An R-matrix with rational-function entries in q.
#[pyclass(module = "braided", frozen, skip_from_py_object)]
#[derive(Clone)]
struct RMatrix {
    inner: CoreRMatrix,
}

#[pymethods]
impl RMatrix {
    /// Parses the JSON R-matrix format. With `check`, the Yang-Baxter equation
    /// is verified eagerly and a failure raises PropertyViolation.
    #[staticmethod]
    #[pyo3(signature = (text, check = true))]
    fn from_json(text: &str, check: bool) -> PyResult<Self> {
        Ok(Self {
            inner: io::parse_rmatrix(text, check).map_err(to_py)?,
        })
    }

    /// Diagonal R-matrix `q^{β_ij}` from an integer bilinear form.
    #[staticmethod]
    fn from_bilinear_form(beta: Vec<Vec<i64>>) -> PyResult<Self> {
        Ok(Self {
            inner: CoreRMatrix::from_bilinear_form(&beta).map_err(to_py)?,
        })
    }

    /// The symmetrized Cartan data format (`cartan`, optional `symmetrizers`).
    #[staticmethod]
    fn from_cartan_json(text: &str) -> PyResult<Self> {
        Ok(Self {
            inner: io::parse_cartan(text).map_err(to_py)?.rmatrix(),
        })
    }

    #[getter]
    fn dim(&self) -> usize {
        self.inner.dim()
    }

    /// Entry `R^{ab}_{ij}` as a canonical string.
    fn entry(&self, a: usize, i: usize, b: usize, j: usize) -> PyResult<String> {
        let n = self.inner.dim();
        if [a, i, b, j].iter().any(|&k| k >= n) {
            return Err(InputError::new_err(format!("index out of range for dimension {n}")));
        }
        Ok(self.inner.entry(a, i, b, j).to_string())
    }

    /// `{"holds": bool, "failure": None | {...}}`, failure indices 1-based.
    fn ybe_check(&self, py: Python<'_>) -> PyResult<Py<PyAny>> {
        let rep = yang_baxter_check(&self.inner);
        let failure = rep.failure.as_ref().map(io::ybe_failure_to_json);
        json_to_py(py, &serde_json::json!({ "holds": rep.holds, "failure": failure }))
    }

    fn to_json(&self) -> String {
        io::rmatrix_to_json(&self.inner).to_string()
    }

    fn __repr__(&self) -> String {
        format!("RMatrix(dim={})", self.inner.dim())
    }
}

/// Braided integers, factorials and the pairing for one R-matrix, with caching.
#[pyclass(module = "braided", frozen)]
struct Calculus {
    inner: Combinatorics,
}

#[pymethods]
impl Calculus {
    /// Without `check`, the Yang-Baxter equation is assumed rather than verified.
    #[new]
    #[pyo3(signature = (r, check = true))]
    fn new(r: &RMatrix, check: bool) -> PyResult<Self> {
        let inner = if check {
            Combinatorics::new(r.inner.clone()).map_err(to_py)?
        } else {
            Combinatorics::unchecked(r.inner.clone())
        };
        Ok(Self { inner })
    }

    #[getter]
    fn dim(&self) -> usize {
        self.inner.dim()
    }

    /// Rank of the degree-m pairing block.
    fn rank(&self, py: Python<'_>, m: usize) -> PyResult<usize> {
        py.detach(|| graded_rank(m, &self.inner)).map_err(to_py)
    }

    /// Ranks in degrees 0..=max_degree.
    fn ranks(&self, py: Python<'_>, max_degree: usize) -> PyResult<Vec<usize>> {
        py.detach(|| {
            (0..=max_degree)
                .map(|m| graded_rank(m, &self.inner))
                .collect::<Result<Vec<_>, _>>()
        })
        .map_err(to_py)
    }

    /// Kernel generators of the pairing in degree m, as the relation-set dict.
    fn kernel(&self, py: Python<'_>, m: usize) -> PyResult<Py<PyAny>> {
        let value = py
            .detach(|| -> Result<Value, Error> {
                let ranks = (0..=m)
                    .map(|k| graded_rank(k, &self.inner))
                    .collect::<Result<Vec<_>, _>>()?;
                let rel = graded_kernel(m, &self.inner)?;
                Ok(io::relation_set_to_json(&rel, &ranks))
            })
            .map_err(to_py)?;
        json_to_py(py, &value)
    }

    /// `ev(y^u, x_w)` for 0-based words `u` (dual) and `w`.
    fn pairing(&self, dual_word: Vec<usize>, word: Vec<usize>) -> PyResult<String> {
        let n = self.inner.dim();
        check_letters(&dual_word, n)?;
        check_letters(&word, n)?;
        let y = FreeElement::dual_word(n, &dual_word);
        let x = FreeElement::word(n, &word);
        Ok(ev_pairing(&y, &x, &self.inner).map_err(to_py)?.to_string())
    }

    /// The truncated braided exponential as a dict, plus `eigenfunction`.
    fn exp(&self, py: Python<'_>, truncate: usize) -> PyResult<Py<PyAny>> {
        let value = py
            .detach(|| -> Result<Value, Error> {
                let e = braided_exp(&self.inner, truncate)?;
                let mut v = io::exp_to_json(&e);
                v["eigenfunction"] = serde_json::json!(exp_eigenfunction_check(&self.inner, truncate)?);
                Ok(v)
            })
            .map_err(to_py)?;
        json_to_py(py, &value)
    }
}

/// A finite-dimensional Lie bialgebra over the rationals, optionally with an r-matrix.
#[pyclass(module = "braided", frozen, skip_from_py_object)]
#[derive(Clone)]
struct LieBialgebra {
    inner: CoreLie,
}

#[pymethods]
impl LieBialgebra {
    #[staticmethod]
    fn from_json(text: &str) -> PyResult<Self> {
        Ok(Self {
            inner: io::parse_lie(text).map_err(to_py)?,
        })
    }

    /// sl2 in the basis h, e, f with r = e⊗f + h⊗h/4.
    #[staticmethod]
    fn sl2() -> Self {
        Self {
            inner: CoreLie::sl2_standard(),
        }
    }

    #[getter]
    fn dim(&self) -> usize {
        self.inner.dim()
    }

    #[getter]
    fn labels(&self) -> Vec<String> {
        self.inner.algebra.labels().to_vec()
    }

    #[getter]
    fn quasitriangular(&self) -> bool {
        self.inner.r.is_some()
    }

    /// Named axiom checks: `{"checks": [{"name", "passed", "detail"}, ...]}`.
    fn check(&self, py: Python<'_>) -> PyResult<Py<PyAny>> {
        let rep = check_lie_bialgebra(&self.inner);
        json_to_py(py, &serde_json::to_value(&rep).expect("report serializes"))
    }

    fn to_json(&self) -> String {
        io::lie_to_json(&self.inner).to_string()
    }

    /// Central charge for a module given in the representation JSON format.
    #[pyo3(signature = (rep, mu = "1"))]
    fn central_charge(&self, rep: &str, mu: &str) -> PyResult<String> {
        let r = self
            .inner
            .r
            .as_ref()
            .ok_or_else(|| InputError::new_err("the Lie bialgebra has no r-matrix"))?;
        let module = io::parse_representation(rep, &self.inner.algebra).map_err(to_py)?;
        let mu = parse_q(mu, "mu")?;
        Ok(solve_central_charge(&self.inner.algebra, r, &module, &mu)
            .map_err(to_py)?
            .to_string())
    }

    /// One induction step. Returns `(bialgebra, info)` where info holds the
    /// certificate and the central charge used.
    #[pyo3(signature = (rep, mu = None, lam = None))]
    fn induct(&self, py: Python<'_>, rep: &str, mu: Option<&str>, lam: Option<&str>) -> PyResult<(Self, Py<PyAny>)> {
        let module = io::parse_representation(rep, &self.inner.algebra).map_err(to_py)?;
        let mu = mu.map(|s| parse_q(s, "mu")).transpose()?;
        let lam = lam.map(|s| parse_q(s, "lam")).transpose()?;
        let ind = py
            .detach(|| induction_step(&self.inner, &module, mu, lam))
            .map_err(to_py)?;
        let info = serde_json::json!({
            "certificate": serde_json::to_value(&ind.certificate).expect("certificate serializes"),
            "all_passed": ind.certificate.all_passed(),
            "lambda": ind.lambda.to_string(),
            "mu": ind.mu.to_string(),
        });
        Ok((Self { inner: ind.bialgebra }, json_to_py(py, &info)?))
    }

    /// Braided cobracket of the self-transmutation, one display string per
    /// basis label, with the closed-form comparison and axiom checks.
    fn transmute(&self, py: Python<'_>) -> PyResult<Py<PyAny>> {
        let b = self_transmute(&self.inner).map_err(to_py)?;
        let closed = transmute_closed_form(&self.inner).map_err(to_py)?;
        let display: serde_json::Map<String, Value> = self
            .inner
            .algebra
            .labels()
            .iter()
            .zip(b.cobracket.images())
            .map(|(l, t)| (l.clone(), Value::from(self.inner.algebra.format_tensor(t))))
            .collect();
        let value = serde_json::json!({
            "cobracket": display,
            "closed_form_agrees": closed == b.cobracket,
            "checks": serde_json::to_value(b.axiom_check()).expect("report serializes"),
        });
        json_to_py(py, &value)
    }

    fn __repr__(&self) -> String {
        format!(
            "LieBialgebra(dim={}, labels={:?})",
            self.inner.dim(),
            self.inner.algebra.labels()
        )
    }
}

#[pymodule]
pub fn braided(m: &Bound<'_, PyModule>) -> PyResult<()> {
    let py = m.py();
    m.add_class::<RMatrix>()?;
    m.add_class::<Calculus>()?;
    m.add_class::<LieBialgebra>()?;
    m.add("BraidedError", py.get_type::<BraidedError>())?;
    m.add("InputError", py.get_type::<InputError>())?;
    m.add("PropertyViolation", py.get_type::<PropertyViolation>())?;
    Ok(())
}
