//! Python bindings for `catalan-core`.

use num_bigint::BigInt;
use pyo3::create_exception;
use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;
use pyo3::types::PyDict;

use catalan_core::cli::{self, canonical_fraction, parse_term, CertificateRecord, TermExpression};
use catalan_core::exact_math::{Integer, Rational};
use catalan_core::identities::{self as ids, IdentityReport};
use catalan_core::summation::{self as sum, BivariateHyperTerm, HyperTerm};
use catalan_core::trees::{self, LabeledTree, Outcome};

create_exception!(catalan_py, ParseError, PyValueError);
create_exception!(catalan_py, NotGosperSummable, PyValueError);

fn value_err(e: impl std::fmt::Display) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn fraction<'py>(py: Python<'py>, q: &Rational) -> PyResult<Bound<'py, PyAny>> {
    py.import("fractions")?.getattr("Fraction")?.call1((q.numer().clone(), q.denom().clone()))
}

#[pyfunction]
fn catalan(n: i64) -> PyResult<BigInt> {
    ids::catalan(n).map_err(value_err)
}

/// Generalized binomial: falling factorial over `k!`, zero for `k < 0`.
#[pyfunction]
fn binomial(n: i64, k: i64) -> BigInt {
    ids::binomial_gen(n, k)
}

#[pyfunction]
fn lhs_identity1(s: i64) -> PyResult<BigInt> {
    ids::lhs_identity1(s).map_err(value_err)
}

#[pyfunction]
fn lhs_identity2prime(l: i64, m: i64) -> PyResult<BigInt> {
    ids::lhs_identity2prime(l, m).map_err(value_err)
}

#[pyfunction]
fn rhs_identity2prime(m: i64) -> PyResult<BigInt> {
    ids::rhs_identity2prime(m).map_err(value_err)
}

#[pyfunction]
fn a_table_by_recurrence(l: i64, mmax: i64) -> PyResult<Vec<(i64, BigInt)>> {
    Ok(ids::a_table_by_recurrence(l, mmax).map_err(value_err)?.into_iter().collect())
}

#[pyfunction]
fn lhs_identity3(l: i64, m: i64) -> PyResult<BigInt> {
    ids::lhs_identity3(l, m).map_err(value_err)
}

#[pyfunction]
fn rhs_identity3(l: i64, m: i64) -> BigInt {
    ids::rhs_identity3(l, m)
}

#[pyfunction]
fn f_value(py: Python<'_>, l: i64, m: i64) -> PyResult<Bound<'_, PyAny>> {
    fraction(py, &ids::f_value(l, m).map_err(value_err)?)
}

#[pyfunction]
fn compositions(m: i64) -> PyResult<Vec<Vec<u32>>> {
    Ok(ids::compositions(m).map_err(value_err)?.map(|c| c.parts().to_vec()).collect())
}

fn report_dict<'py>(py: Python<'py>, r: &IdentityReport) -> PyResult<Bound<'py, PyDict>> {
    let d = PyDict::new(py);
    d.set_item("identity", r.id.to_string())?;
    d.set_item("params", r.params.iter().cloned().collect::<Vec<_>>())?;
    d.set_item("lhs", r.lhs.clone())?;
    d.set_item("rhs", r.rhs.clone())?;
    d.set_item("holds", r.holds())?;
    d.set_item("documented_exception", r.is_documented_exception())?;
    Ok(d)
}

/// Check one identity at one point. `name` is one of identity1,
/// identity2prime, identity3.
#[pyfunction]
#[pyo3(signature = (name, s=None, l=None, m=None))]
fn check_identity<'py>(
    py: Python<'py>,
    name: &str,
    s: Option<i64>,
    l: Option<i64>,
    m: Option<i64>,
) -> PyResult<Bound<'py, PyDict>> {
    let missing = || PyValueError::new_err(format!("{name}: missing parameter"));
    let report = match name {
        "identity1" => ids::check_identity1(s.ok_or_else(missing)?),
        "identity2prime" => ids::check_identity2prime(l.ok_or_else(missing)?, m.ok_or_else(missing)?),
        "identity3" => ids::check_identity3(l.ok_or_else(missing)?, m.ok_or_else(missing)?),
        _ => return Err(PyValueError::new_err(format!("unknown identity `{name}`"))),
    }
    .map_err(value_err)?;
    report_dict(py, &report)
}

/// A complete binary tree with leaves labeled 1 or 2.
#[pyclass(name = "Creature", frozen, eq, hash, skip_from_py_object)]
#[derive(Clone, PartialEq, Eq, Hash)]
struct PyCreature(LabeledTree);

#[pymethods]
impl PyCreature {
    #[new]
    fn new(src: &str) -> PyResult<Self> {
        LabeledTree::parse(src).map(PyCreature).map_err(value_err)
    }

    #[getter]
    fn weight(&self) -> u64 {
        self.0.weight()
    }

    #[getter]
    fn leaf_count(&self) -> usize {
        self.0.leaf_count()
    }

    #[getter]
    fn labels(&self) -> Vec<u8> {
        self.0.labels().to_vec()
    }

    /// The image under the involution, or `None` at a fixed point.
    fn involution(&self) -> Option<PyCreature> {
        trees::involution1(&self.0).image().map(PyCreature)
    }

    fn __str__(&self) -> String {
        self.0.to_string()
    }

    fn __repr__(&self) -> String {
        format!("Creature('{}')", self.0)
    }
}

/// A tree-word pair for parameters `(l, m)`, written `tree|tail`.
#[pyclass(name = "CreaturePair", frozen, eq, hash, skip_from_py_object)]
#[derive(Clone, PartialEq, Eq, Hash)]
struct PyCreaturePair(trees::CreaturePair);

#[pymethods]
impl PyCreaturePair {
    #[new]
    fn new(src: &str, l: i64, m: i64) -> PyResult<Self> {
        trees::CreaturePair::parse(src, l, m).map(PyCreaturePair).map_err(value_err)
    }

    #[getter]
    fn params(&self) -> (i64, i64) {
        self.0.params()
    }

    #[getter]
    fn word(&self) -> Vec<u8> {
        self.0.word().to_vec()
    }

    #[getter]
    fn leaf_count(&self) -> usize {
        self.0.leaf_count()
    }

    fn is_survivor(&self) -> bool {
        self.0.is_survivor_form()
    }

    fn involution(&self) -> Option<PyCreaturePair> {
        match trees::involution3(&self.0) {
            Outcome::Image(p, _) => Some(PyCreaturePair(p)),
            Outcome::Fixed => None,
        }
    }

    fn __str__(&self) -> String {
        self.0.to_string()
    }

    fn __repr__(&self) -> String {
        let (l, m) = self.0.params();
        format!("CreaturePair('{}', l={l}, m={m})", self.0)
    }
}

#[pyfunction]
fn enumerate_creatures1(s: i64) -> PyResult<Vec<PyCreature>> {
    Ok(trees::enumerate_creatures1(s).map_err(value_err)?.into_iter().map(PyCreature).collect())
}

#[pyfunction]
fn enumerate_creatures3(l: i64, m: i64) -> PyResult<Vec<PyCreaturePair>> {
    Ok(trees::enumerate_creatures3(l, m).map_err(value_err)?.into_iter().map(PyCreaturePair).collect())
}

/// Census of the first involution as a JSON-compatible dict.
#[pyfunction]
fn census1(py: Python<'_>, s: i64) -> PyResult<Bound<'_, PyAny>> {
    let c = trees::census1(s).map_err(value_err)?;
    json_to_py(py, &serde_json::to_string(&c).map_err(value_err)?)
}

#[pyfunction]
fn census3(py: Python<'_>, l: i64, m: i64) -> PyResult<Bound<'_, PyAny>> {
    let c = trees::census3(l, m).map_err(value_err)?;
    json_to_py(py, &serde_json::to_string(&c).map_err(value_err)?)
}

fn json_to_py<'py>(py: Python<'py>, text: &str) -> PyResult<Bound<'py, PyAny>> {
    py.import("json")?.getattr("loads")?.call1((text,))
}

/// A hypergeometric summand parsed from text such as
/// `"(-1)^k*binomial(2*k,k)/(k+1)"`.
#[pyclass(name = "Term", frozen)]
struct PyTerm {
    expr: TermExpression,
    hyper: HyperTerm,
}

fn parse_err(e: cli::ParseError) -> PyErr {
    ParseError::new_err(e.to_string())
}

#[pymethods]
impl PyTerm {
    #[new]
    #[pyo3(signature = (src, var="k", params=Vec::new()))]
    fn new(src: &str, var: &str, params: Vec<String>) -> PyResult<Self> {
        let expr = parse_term(src, var, &params).map_err(parse_err)?;
        let hyper = expr.hyper_term().map_err(value_err)?;
        Ok(PyTerm { expr, hyper })
    }

    #[getter]
    fn variable(&self) -> String {
        self.expr.variable().to_string()
    }

    #[getter]
    fn parameters(&self) -> Vec<String> {
        self.expr.parameters().to_vec()
    }

    /// `t(k+1)/t(k)` as text.
    fn ratio(&self) -> String {
        self.hyper.ratio().to_string()
    }

    /// Shift quotient in any declared symbol.
    fn ratio_of(&self, var: &str) -> PyResult<String> {
        Ok(self.expr.ratio_of(var).map_err(value_err)?.to_string())
    }

    /// `t` at integer parameters and variable; `None` where undefined.
    fn value<'py>(&self, py: Python<'py>, params: Vec<BigInt>, k: BigInt) -> PyResult<Option<Bound<'py, PyAny>>> {
        if params.len() != self.expr.parameters().len() {
            return Err(PyValueError::new_err("one value per parameter"));
        }
        self.hyper.eval(&params, &k).map(|q| fraction(py, &q)).transpose()
    }

    /// Run Gosper's algorithm; raises `NotGosperSummable` naming the
    /// failing stage.
    fn gosper(&self) -> PyResult<PyGosperCertificate> {
        match sum::gosper(&self.hyper) {
            Ok(cert) => Ok(PyGosperCertificate { expr: self.expr.clone(), hyper: self.hyper.clone(), cert }),
            Err(e) => {
                let stage = serde_json::to_value(e.stage).map_err(value_err)?;
                Err(NotGosperSummable::new_err((e.to_string(), stage.as_str().unwrap_or_default().to_string())))
            }
        }
    }

    fn __str__(&self) -> String {
        self.expr.to_string()
    }

    fn __repr__(&self) -> String {
        format!("Term('{}', var='{}')", self.expr, self.expr.variable())
    }
}

#[pyclass(name = "GosperCertificate", frozen)]
struct PyGosperCertificate {
    expr: TermExpression,
    hyper: HyperTerm,
    cert: sum::GosperCertificate,
}

#[pymethods]
impl PyGosperCertificate {
    /// `R` with `R(k) t(k)` an antidifference, as a canonical fraction.
    #[getter]
    fn r(&self) -> String {
        canonical_fraction(&self.cert.r)
    }

    fn verify(&self) -> bool {
        sum::verify_gosper(&self.hyper, &self.cert)
    }

    /// `sum_{var=lower}^{upper}` at each value of the single parameter
    /// `upper`; returns `(value, endpoint_singular)` pairs.
    fn definite<'py>(
        &self,
        py: Python<'py>,
        lower: i64,
        upper: &str,
        values: Vec<i64>,
    ) -> PyResult<Vec<(Bound<'py, PyAny>, bool)>> {
        let definite = sum::telescope_definite(&self.hyper, Integer::from(lower), upper).map_err(value_err)?;
        if self.expr.parameters().len() != 1 {
            return Err(PyValueError::new_err("definite sums need exactly one parameter"));
        }
        values
            .into_iter()
            .map(|v| {
                let d = definite.evaluate(&[Integer::from(v)]).map_err(value_err)?;
                if !d.agrees {
                    return Err(PyValueError::new_err(format!("telescoped and direct sums differ at {v}")));
                }
                Ok((fraction(py, &d.value)?, d.endpoint_singular))
            })
            .collect()
    }

    #[pyo3(signature = (identity="custom"))]
    fn to_toml(&self, identity: &str) -> String {
        CertificateRecord::gosper(identity, &self.expr, &self.cert).to_toml()
    }

    fn __repr__(&self) -> String {
        format!("GosperCertificate(r='{}')", self.r())
    }
}

/// A recurrence `sum_j a_j(n) S(n+j) = rhs(n)` for `S(n) = sum_{k=0}^{n} F(n, k)`.
#[pyclass(name = "Recurrence", frozen)]
struct PyRecurrence {
    expr: TermExpression,
    hyper: BivariateHyperTerm,
    recvar: String,
    rec: sum::TelescopedRecurrence,
}

#[pymethods]
impl PyRecurrence {
    #[getter]
    fn order(&self) -> usize {
        self.rec.order()
    }

    #[getter]
    fn coefficients(&self) -> Vec<String> {
        self.rec.coefficients.iter().map(|c| c.to_string()).collect()
    }

    #[getter]
    fn inhomogeneous(&self) -> String {
        self.rec.inhomogeneous.to_string()
    }

    #[getter]
    fn certificate(&self) -> String {
        canonical_fraction(&self.rec.certificate)
    }

    fn verify(&self) -> bool {
        sum::verify_zeilberger(&self.hyper, &self.rec)
    }

    #[pyo3(signature = (identity="custom"))]
    fn to_toml(&self, identity: &str) -> String {
        CertificateRecord::zeilberger(identity, &self.expr, &self.recvar, &self.rec).to_toml()
    }

    fn __repr__(&self) -> String {
        format!("Recurrence(coefficients={:?}, inhomogeneous='{}')", self.coefficients(), self.inhomogeneous())
    }
}

/// Creative telescoping for `sum_{sumvar=0}^{recvar} F`.
#[pyfunction]
#[pyo3(signature = (src, sumvar="k", recvar="n", params=Vec::new(), max_order=2))]
fn zeilberger(src: &str, sumvar: &str, recvar: &str, params: Vec<String>, max_order: usize) -> PyResult<PyRecurrence> {
    let mut all = params.clone();
    all.push(recvar.to_string());
    let expr = parse_term(src, sumvar, &all).map_err(parse_err)?;
    let form = expr.product_form().map_err(value_err)?;
    let hyper = BivariateHyperTerm::from_product(&form, recvar, sumvar, &params).map_err(value_err)?;
    let rec = sum::zeilberger(&hyper, max_order).map_err(value_err)?;
    Ok(PyRecurrence { expr, hyper, recvar: recvar.to_string(), rec })
}

/// Re-verify a certificate document; returns `(recomputed, stored)` verdicts.
#[pyfunction]
fn check_certificate(text: &str) -> PyResult<(String, String)> {
    let (record, stored) = CertificateRecord::load(text).map_err(value_err)?;
    Ok((record.verdict.to_string(), stored.to_string()))
}

/// Run the command line in-process; returns `(exit_status, output)`.
#[pyfunction]
fn run_cli(args: Vec<String>) -> (i32, String) {
    let mut out = Vec::new();
    let code = cli::run(std::iter::once("catalan".to_string()).chain(args), &mut out);
    (code, String::from_utf8_lossy(&out).into_owned())
}

#[pymodule]
fn catalan_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add("ParseError", m.py().get_type::<ParseError>())?;
    m.add("NotGosperSummable", m.py().get_type::<NotGosperSummable>())?;
    m.add_class::<PyCreature>()?;
    m.add_class::<PyCreaturePair>()?;
    m.add_class::<PyTerm>()?;
    m.add_class::<PyGosperCertificate>()?;
    m.add_class::<PyRecurrence>()?;
    m.add_function(wrap_pyfunction!(catalan, m)?)?;
    m.add_function(wrap_pyfunction!(binomial, m)?)?;
    m.add_function(wrap_pyfunction!(lhs_identity1, m)?)?;
    m.add_function(wrap_pyfunction!(lhs_identity2prime, m)?)?;
    m.add_function(wrap_pyfunction!(rhs_identity2prime, m)?)?;
    m.add_function(wrap_pyfunction!(a_table_by_recurrence, m)?)?;
    m.add_function(wrap_pyfunction!(lhs_identity3, m)?)?;
    m.add_function(wrap_pyfunction!(rhs_identity3, m)?)?;
    m.add_function(wrap_pyfunction!(f_value, m)?)?;
    m.add_function(wrap_pyfunction!(compositions, m)?)?;
    m.add_function(wrap_pyfunction!(check_identity, m)?)?;
    m.add_function(wrap_pyfunction!(enumerate_creatures1, m)?)?;
    m.add_function(wrap_pyfunction!(enumerate_creatures3, m)?)?;
    m.add_function(wrap_pyfunction!(census1, m)?)?;
    m.add_function(wrap_pyfunction!(census3, m)?)?;
    m.add_function(wrap_pyfunction!(zeilberger, m)?)?;
    m.add_function(wrap_pyfunction!(check_certificate, m)?)?;
    m.add_function(wrap_pyfunction!(run_cli, m)?)?;
    Ok(())
}
