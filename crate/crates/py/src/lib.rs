//! Python bindings: models, law checks, ideals, intra-regularity, the
//! theorem suite and enumeration.

use gag_core::format::{model_to_json, parse_any, serialize_model, PAPER_EXAMPLE};
use gag_core::regularity::intra_witness;
use gag_core::search::{self, canonicalize, SearchSpec};
use gag_core::subset::{generated_two_sided_ideal, sweep_cap_from_env};
use gag_core::theorems::{run_suite, SuiteDocument, TheoremId};
use gag_core::{Axioms, Filter, GammaGroupoid, IdealKind, Subset};
use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;

/// `(x, y, β, δ, γ)`.
type WitnessTuple = (usize, usize, usize, usize, usize);

fn value_error(e: impl std::fmt::Display) -> PyErr {
    PyValueError::new_err(e.to_string())
}

/// A finite Γ-groupoid given by its operation tables.
#[pyclass(name = "Model", frozen, eq, skip_from_py_object)]
#[derive(Clone, PartialEq)]
struct PyModel {
    inner: GammaGroupoid,
}

#[pymethods]
impl PyModel {
    /// Flat table in `(i, k, j)` order: `cells[(i*gammas + k)*order + j] = i γk j`.
    #[new]
    fn new(order: usize, gammas: usize, cells: Vec<u8>) -> PyResult<Self> {
        GammaGroupoid::new(order, gammas, cells)
            .map(|inner| PyModel { inner })
            .map_err(value_error)
    }

    /// Parses the text format or its JSON form.
    #[staticmethod]
    fn parse(text: &str) -> PyResult<Self> {
        parse_any(text)
            .map(|inner| PyModel { inner })
            .map_err(value_error)
    }

    /// The bundled five-element example.
    #[staticmethod]
    fn example() -> Self {
        PyModel {
            inner: parse_any(PAPER_EXAMPLE).expect("bundled fixture parses"),
        }
    }

    #[getter]
    fn order(&self) -> usize {
        self.inner.order()
    }

    #[getter]
    fn gammas(&self) -> usize {
        self.inner.gammas()
    }

    #[getter]
    fn elements(&self) -> Vec<String> {
        self.inner.labels().elements.clone()
    }

    #[getter]
    fn cells(&self) -> Vec<u8> {
        self.inner.cells().to_vec()
    }

    fn op(&self, i: usize, k: usize, j: usize) -> PyResult<usize> {
        self.inner.product(i, k, j).map_err(value_error)
    }

    /// `{law name: holds}` plus the left identities.
    fn profile(&self) -> (Vec<(String, bool)>, Vec<usize>) {
        let laws = gag_core::Law::ALL
            .iter()
            .map(|&l| (l.name().to_string(), self.inner.satisfies(l)))
            .collect();
        (laws, self.inner.left_identities())
    }

    /// Members of an ideal family as sorted element-index lists.
    fn ideals(&self, kind: &str) -> PyResult<Vec<Vec<usize>>> {
        let kind: IdealKind = kind.parse().map_err(value_error)?;
        let family = kind
            .family(&self.inner, sweep_cap_from_env())
            .map_err(value_error)?;
        Ok(family.into_iter().map(Subset::elements).collect())
    }

    fn generated_ideal(&self, elements: Vec<usize>) -> PyResult<Vec<usize>> {
        let x = Subset::from_elements(self.inner.order(), elements).map_err(value_error)?;
        generated_two_sided_ideal(&self.inner, x)
            .map(Subset::elements)
            .map_err(value_error)
    }

    /// Least `(x, y, β, δ, γ)` with `a = (x β (a δ a)) γ y`, or None.
    fn intra_witness(&self, a: usize) -> PyResult<Option<WitnessTuple>> {
        let w = intra_witness(&self.inner, a).map_err(value_error)?;
        Ok(w.map(|w| (w.x, w.y, w.beta, w.delta, w.gamma)))
    }

    fn is_intra_regular(&self) -> bool {
        gag_core::regularity::is_intra_regular(&self.inner)
    }

    /// `(theorem id, status)` for the selected theorems, all when omitted.
    #[pyo3(signature = (theorems=None))]
    fn verify(&self, theorems: Option<Vec<String>>) -> PyResult<Vec<(String, String)>> {
        let selection = parse_ids(theorems)?;
        Ok(run_suite(&self.inner, &selection)
            .into_iter()
            .map(|r| (r.theorem.to_string(), r.status.to_string()))
            .collect())
    }

    /// The full structured suite report.
    #[pyo3(signature = (theorems=None))]
    fn verify_json(&self, theorems: Option<Vec<String>>) -> PyResult<String> {
        let selection = parse_ids(theorems)?;
        let doc = SuiteDocument::new(&self.inner, run_suite(&self.inner, &selection));
        serde_json::to_string(&doc).map_err(value_error)
    }

    fn canonical(&self) -> PyResult<Self> {
        canonicalize(&self.inner)
            .map(|c| PyModel {
                inner: c.to_model(),
            })
            .map_err(value_error)
    }

    fn to_text(&self) -> String {
        serialize_model(&self.inner)
    }

    fn to_json(&self) -> String {
        model_to_json(&self.inner)
    }

    fn __repr__(&self) -> String {
        format!(
            "Model(order={}, gammas={})",
            self.inner.order(),
            self.inner.gammas()
        )
    }
}

fn parse_ids(ids: Option<Vec<String>>) -> PyResult<Vec<TheoremId>> {
    ids.unwrap_or_default()
        .iter()
        .map(|s| s.parse().map_err(value_error))
        .collect()
}

/// Representatives of every isomorphism class, in canonical order.
#[pyfunction]
#[pyo3(signature = (order, gammas=1, axiom="ag", filter="any", workers=1))]
fn enumerate(
    order: usize,
    gammas: usize,
    axiom: &str,
    filter: &str,
    workers: usize,
) -> PyResult<Vec<PyModel>> {
    let axioms = match axiom {
        "ag" => Axioms::AG,
        "agss" => Axioms::AG_STAR_STAR,
        other => return Err(value_error(format!("unknown axiom set `{other}`"))),
    };
    let filter: Filter = filter.parse().map_err(value_error)?;
    let spec = SearchSpec::new(order, gammas, axioms)
        .filter(filter)
        .workers(workers);
    let result = search::enumerate(&spec).map_err(value_error)?;
    Ok(result
        .models
        .into_iter()
        .map(|f| PyModel {
            inner: f.to_model(),
        })
        .collect())
}

#[pyfunction]
fn theorem_ids() -> Vec<&'static str> {
    TheoremId::ALL.iter().map(|t| t.as_str()).collect()
}

#[pymodule]
fn gag(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyModel>()?;
    m.add_function(wrap_pyfunction!(enumerate, m)?)?;
    m.add_function(wrap_pyfunction!(theorem_ids, m)?)?;
    Ok(())
}
