//! Python bindings for `prymcheck`.

use std::sync::Arc;

use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;

use prymcheck::curves::{self, Parity};
use prymcheck::invariants::catalog::{labelled_presentation, LabelScheme};
use prymcheck::invariants::{self, DiagonalAction, FiniteFactor};
use prymcheck::ledger::{self, Ledger, Mode};
use prymcheck::lines27::{self, Configuration27};
use prymcheck::report::{self, ConfigDocument, RunFlags};
use prymcheck::singularity::{self, CyclicDiagonalElement, FiniteDiagonalGroup};
use prymcheck::surface::{self, ClassBasis};

fn err(e: prymcheck::Error) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn parse_mode(mode: Option<&str>) -> PyResult<Option<Mode>> {
    match mode {
        None => Ok(None),
        Some("paper") => Ok(Some(Mode::Paper)),
        Some("derived") => Ok(Some(Mode::Derived)),
        Some(other) => Err(PyValueError::new_err(format!("unknown mode {other}"))),
    }
}

/// A diagonal action of a torus times finite cyclic groups on `C^n`.
#[pyclass(name = "DiagonalAction", frozen)]
struct PyDiagonalAction {
    inner: DiagonalAction,
}

#[pymethods]
impl PyDiagonalAction {
    /// `finite` is a list of `(modulus, weights)` pairs.
    #[new]
    #[pyo3(signature = (ambient_dim, torus_weights=Vec::new(), finite=Vec::new()))]
    fn new(ambient_dim: usize, torus_weights: Vec<Vec<i64>>, finite: Vec<(u32, Vec<i64>)>) -> PyResult<Self> {
        let finite = finite.into_iter().map(|(modulus, weights)| FiniteFactor { modulus, weights }).collect();
        Ok(Self { inner: DiagonalAction::new(ambient_dim, torus_weights, finite).map_err(err)? })
    }

    #[getter]
    fn ambient_dim(&self) -> usize {
        self.inner.ambient_dim()
    }

    fn is_invariant(&self, exponents: Vec<u32>) -> bool {
        self.inner.is_invariant(&exponents)
    }

    /// Exponent vectors of the minimal invariant generators.
    #[pyo3(signature = (degree_bound=invariants::DEFAULT_DEGREE_BOUND))]
    fn generators(&self, degree_bound: u32) -> PyResult<Vec<Vec<u32>>> {
        let p = invariants::invariant_generators(&self.inner, degree_bound).map_err(err)?;
        Ok(p.generators.into_iter().map(|m| m.into_exponents()).collect())
    }

    /// Generators with minimal binomial relations.
    #[pyo3(signature = (degree_bound=invariants::DEFAULT_DEGREE_BOUND, variable_names=Vec::new()))]
    fn presentation(&self, degree_bound: u32, variable_names: Vec<String>) -> PyResult<Presentation> {
        let p = labelled_presentation(&self.inner, degree_bound, LabelScheme::Generic, variable_names).map_err(err)?;
        Ok(Presentation { inner: p })
    }
}

#[pyclass(frozen)]
struct Presentation {
    inner: invariants::MonoidPresentation,
}

#[pymethods]
impl Presentation {
    #[getter]
    fn labels(&self) -> Vec<String> {
        self.inner.labels.clone()
    }

    #[getter]
    fn generators(&self) -> Vec<Vec<u32>> {
        self.inner.generators.iter().map(|m| m.exponents().to_vec()).collect()
    }

    /// Relations as `(lhs, rhs)` generator-exponent words.
    #[getter]
    fn relations(&self) -> Vec<(Vec<u32>, Vec<u32>)> {
        self.inner.relations.iter().map(|r| (r.lhs.clone(), r.rhs.clone())).collect()
    }

    fn relation_strings(&self) -> Vec<String> {
        self.inner.relations.iter().map(|r| self.inner.relation_to_string(r)).collect()
    }

    fn generator_degree_profile(&self) -> Vec<(u32, usize)> {
        self.inner.generator_degree_profile().into_iter().collect()
    }

    fn relation_degree_profile(&self) -> Vec<(u32, usize)> {
        self.inner.degree_profile().into_iter().collect()
    }

    fn __len__(&self) -> usize {
        self.inner.len()
    }

    fn __repr__(&self) -> String {
        format!("Presentation({} generators, {} relations)", self.inner.len(), self.inner.relations.len())
    }
}

fn group(generators: Vec<(u32, Vec<i64>)>) -> PyResult<FiniteDiagonalGroup> {
    let elems = generators
        .into_iter()
        .map(|(order, w)| CyclicDiagonalElement::from_weights(order, &w))
        .collect::<Result<Vec<_>, _>>()
        .map_err(err)?;
    FiniteDiagonalGroup::generated_by(elems).map_err(err)
}

/// Age of a diagonal element as `(numerator, denominator)`.
#[pyfunction]
fn age(order: u32, exponents: Vec<i64>) -> PyResult<(u64, u64)> {
    let g = CyclicDiagonalElement::from_weights(order, &exponents).map_err(err)?;
    let a = singularity::age(&g);
    Ok((*a.numer(), *a.denom()))
}

/// `"terminal"`, `"canonical_not_terminal"` or `"not_canonical"` for the group generated by `(order, exponents)` pairs.
#[pyfunction]
fn classify_quotient(generators: Vec<(u32, Vec<i64>)>) -> PyResult<String> {
    let c = singularity::classify_quotient(&group(generators)?).map_err(err)?;
    Ok(c.to_string())
}

#[pyfunction]
fn symplectic_resolution_verdict(generators: Vec<(u32, Vec<i64>)>) -> PyResult<String> {
    let c = singularity::classify_quotient(&group(generators)?).map_err(err)?;
    Ok(singularity::symplectic_resolution_verdict(c).to_string())
}

#[pyfunction]
fn pluecker_dual_degree(d: i64, delta: i64, kappa: i64) -> PyResult<i64> {
    curves::pluecker_dual_degree(d, delta, kappa).map_err(err)
}

/// Bitangents and flexes `(b, f)` from degree, dual degree and genus.
#[pyfunction]
fn pluecker_solve_bf(d: i64, d_star: i64, g: i64) -> PyResult<(i64, i64)> {
    curves::pluecker_solve_bf(d, d_star, g).map_err(err)
}

#[pyfunction]
fn flex_count(d: i64, delta: i64, kappa: i64) -> PyResult<i64> {
    curves::flex_count(d, delta, kappa).map_err(err)
}

#[pyfunction]
fn riemann_hurwitz_branch(g_source: i64, g_target: i64, degree: i64) -> PyResult<i64> {
    curves::riemann_hurwitz_branch(g_source, g_target, degree).map_err(err)
}

#[pyfunction]
#[pyo3(signature = (genus, parity="odd"))]
fn theta_characteristics(genus: u32, parity: &str) -> PyResult<u64> {
    let parity = match parity {
        "odd" => Parity::Odd,
        "even" => Parity::Even,
        other => return Err(PyValueError::new_err(format!("parity must be odd or even, not {other}"))),
    };
    curves::theta_characteristics(genus, parity).map_err(err)
}

/// Euler characteristic from `(count, fiber_chi)` special fibers.
#[pyfunction]
#[pyo3(signature = (strata, smooth_fiber_chi=0, base_chi=2))]
fn fibration_euler(strata: Vec<(i64, i64)>, smooth_fiber_chi: i64, base_chi: i64) -> PyResult<i64> {
    curves::fibration_euler(&strata, smooth_fiber_chi, base_chi).map_err(err)
}

/// Intersection number of two classes in a basis with the given pairing matrix.
#[pyfunction]
fn intersect(labels: Vec<String>, pairing: Vec<Vec<i64>>, a: Vec<i64>, b: Vec<i64>) -> PyResult<i64> {
    let basis = Arc::new(ClassBasis::new(labels, pairing).map_err(err)?);
    let a = surface::DivisorClass::new(&basis, a).map_err(err)?;
    let b = surface::DivisorClass::new(&basis, b).map_err(err)?;
    surface::intersect(&a, &b).map_err(err)
}

/// The curve chain on `B x B` as a JSON object.
#[pyfunction]
#[pyo3(signature = (genus, cover_degree, diag_f=1))]
fn product_curve_chain(genus: i64, cover_degree: i64, diag_f: i64) -> PyResult<String> {
    let c = surface::ProductCurveChain::compute(genus, diag_f, cover_degree).map_err(err)?;
    Ok(serde_json::to_string(&c).expect("plain data"))
}

/// The 45 tritangent triples as label strings.
#[pyfunction]
fn tritangent_triples() -> Vec<[String; 3]> {
    lines27::tritangent_triples(&Configuration27::build())
        .into_iter()
        .map(|t| t.map(|l| l.to_string()))
        .collect()
}

fn stated_ledger(surface: &str) -> PyResult<Ledger> {
    match surface {
        "cubic" => Ok(Ledger::stated_cubic()),
        "del-pezzo-2" => Ok(Ledger::stated_del_pezzo_2()),
        other => Err(PyValueError::new_err(format!("unknown surface {other}"))),
    }
}

/// Total Euler characteristic of the built-in ledger for `surface`.
#[pyfunction]
#[pyo3(signature = (surface="cubic", mode="paper"))]
fn ledger_total(surface: &str, mode: &str) -> PyResult<i64> {
    let stated = stated_ledger(surface)?;
    let l = match parse_mode(Some(mode))? {
        Some(Mode::Derived) => Ledger::derive_from(&stated, false).map_err(err)?,
        _ => stated,
    };
    ledger::total_chi(&l).map_err(err)
}

/// Rows where the stated and derived ledgers differ, as a JSON array.
#[pyfunction]
#[pyo3(signature = (surface="cubic"))]
fn discrepancy_report(surface: &str) -> PyResult<String> {
    let stated = stated_ledger(surface)?;
    let derived = Ledger::derive_from(&stated, false).map_err(err)?;
    let d = ledger::discrepancy_report(&stated, &derived).map_err(err)?;
    Ok(serde_json::to_string(&d).expect("plain data"))
}

/// Run a subcommand and return the canonical JSON report.
#[pyfunction]
#[pyo3(signature = (subcommand="verify-all", config=None, mode=None, strict=false, check=None))]
fn run(subcommand: &str, config: Option<&str>, mode: Option<&str>, strict: bool, check: Option<String>) -> PyResult<String> {
    let doc = match config {
        Some(text) => ConfigDocument::from_toml(text).map_err(err)?,
        None => ConfigDocument::builtin_suite(),
    };
    let flags = RunFlags { mode: parse_mode(mode)?, strict, check };
    let r = report::run_subcommand(subcommand, &doc, &flags).map_err(err)?;
    Ok(r.canonical_json())
}

#[pyfunction]
#[pyo3(signature = (mode=None))]
fn verify_all(mode: Option<&str>) -> PyResult<String> {
    run("verify-all", None, mode, false, None)
}

#[pymodule]
pub fn prymcheck_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add("__version__", prymcheck::TOOLKIT_VERSION)?;
    m.add_class::<PyDiagonalAction>()?;
    m.add_class::<Presentation>()?;
    m.add_function(wrap_pyfunction!(age, m)?)?;
    m.add_function(wrap_pyfunction!(classify_quotient, m)?)?;
    m.add_function(wrap_pyfunction!(symplectic_resolution_verdict, m)?)?;
    m.add_function(wrap_pyfunction!(pluecker_dual_degree, m)?)?;
    m.add_function(wrap_pyfunction!(pluecker_solve_bf, m)?)?;
    m.add_function(wrap_pyfunction!(flex_count, m)?)?;
    m.add_function(wrap_pyfunction!(riemann_hurwitz_branch, m)?)?;
    m.add_function(wrap_pyfunction!(theta_characteristics, m)?)?;
    m.add_function(wrap_pyfunction!(fibration_euler, m)?)?;
    m.add_function(wrap_pyfunction!(intersect, m)?)?;
    m.add_function(wrap_pyfunction!(product_curve_chain, m)?)?;
    m.add_function(wrap_pyfunction!(tritangent_triples, m)?)?;
    m.add_function(wrap_pyfunction!(ledger_total, m)?)?;
    m.add_function(wrap_pyfunction!(discrepancy_report, m)?)?;
    m.add_function(wrap_pyfunction!(run, m)?)?;
    m.add_function(wrap_pyfunction!(verify_all, m)?)?;
    Ok(())
}
