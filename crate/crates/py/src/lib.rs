use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;
use pyo3::types::PyDict;

use vlink_core::catalog::{self, ExampleFamily, Slot};
use vlink_core::moves::loop_descriptor;
use vlink_core::{script, Conjugacy};

fn err<E: std::fmt::Display>(e: E) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn verdict_dict<'py>(py: Python<'py>, v: &catalog::Verdict) -> PyResult<Bound<'py, PyDict>> {
    let d = PyDict::new(py);
    for slot in Slot::ALL {
        d.set_item(slot.key(), v.get(slot).word())?;
    }
    let prov = PyDict::new(py);
    for slot in Slot::ALL {
        let rules: Vec<&str> = v.rules_for(slot).iter().map(|r| r.id()).collect();
        if !rules.is_empty() {
            prov.set_item(slot.key(), rules)?;
        }
    }
    d.set_item("provenance", prov)?;
    d.set_item("flags", v.flags.clone())?;
    Ok(d)
}

/// First homology class of the genus-`g` surface, e.g. `H1Class("2*A1 - B2", 2)`.
#[pyclass(name = "H1Class", frozen, eq, skip_from_py_object)]
#[derive(Clone, PartialEq)]
struct PyH1Class(vlink_core::H1Class);

#[pymethods]
impl PyH1Class {
    #[new]
    fn new(text: &str, genus: u32) -> PyResult<Self> {
        vlink_core::H1Class::parse(text, genus).map(Self).map_err(err)
    }

    #[getter]
    fn coords(&self) -> Vec<i64> {
        self.0.coords().to_vec()
    }

    #[getter]
    fn genus(&self) -> u32 {
        self.0.genus()
    }

    fn intersection(&self, other: &Self) -> PyResult<i64> {
        self.0.intersection_number(&other.0).map_err(err)
    }

    fn __str__(&self) -> String {
        self.0.to_string()
    }

    fn __repr__(&self) -> String {
        format!("H1Class(\"{}\", {})", self.0, self.0.genus())
    }
}

/// Fundamental group of the closed genus-`g` surface. Words use `A1 B1^-1 ...`.
#[pyclass(name = "SurfaceGroup", frozen)]
struct PySurfaceGroup(vlink_core::SurfaceGroup);

impl PySurfaceGroup {
    fn word(&self, text: &str) -> PyResult<vlink_core::SurfaceWord> {
        let w = vlink_core::SurfaceWord::parse(text).map_err(err)?;
        self.0.check(&w).map_err(err)?;
        Ok(w)
    }
}

#[pymethods]
impl PySurfaceGroup {
    #[new]
    fn new(genus: u32) -> PyResult<Self> {
        vlink_core::SurfaceGroup::with_genus(genus).map(Self).map_err(err)
    }

    fn is_trivial(&self, word: &str) -> PyResult<bool> {
        Ok(self.0.is_trivial(&self.word(word)?))
    }

    fn abelianize(&self, word: &str) -> PyResult<PyH1Class> {
        self.0.abelianize(&self.word(word)?).map(PyH1Class).map_err(err)
    }

    /// "yes", "no" or "unknown"
    fn conjugate(&self, u: &str, v: &str) -> PyResult<&'static str> {
        Ok(match self.0.conjugate(&self.word(u)?, &self.word(v)?) {
            Conjugacy::Yes => "yes",
            Conjugacy::No => "no",
            Conjugacy::Unknown => "unknown",
        })
    }
}

type Terms = Vec<(i64, (String, String))>;

/// A parsed script file: ambient data, components and named homotopies.
#[pyclass(name = "Script", frozen)]
struct PyScript(script::ScriptFile);

impl PyScript {
    fn homotopy(&self, name: Option<&str>) -> PyResult<vlink_core::HomotopyScript> {
        self.0.script(name).map_err(err)
    }
}

#[pymethods]
impl PyScript {
    #[staticmethod]
    fn parse(text: &str) -> PyResult<Self> {
        script::parse(text).map(Self).map_err(err)
    }

    #[staticmethod]
    fn load(path: std::path::PathBuf) -> PyResult<Self> {
        let text = std::fs::read_to_string(&path).map_err(err)?;
        Self::parse(&text)
    }

    #[getter]
    fn homotopies(&self) -> Vec<String> {
        self.0.homotopies.iter().map(|(n, _)| n.clone()).collect()
    }

    #[getter]
    fn components(&self) -> Vec<String> {
        self.0.components.iter().map(|c| c.name.clone()).collect()
    }

    fn to_text(&self) -> String {
        self.0.to_text()
    }

    /// Raises `ValueError` with the first failing event.
    fn validate(&self) -> PyResult<()> {
        for s in self.0.scripts().map_err(err)? {
            s.validate().map_err(err)?;
        }
        Ok(())
    }

    /// `(verdict, terms)` where each term is `(sign, (left, right))` with lifts as strings.
    #[pyo3(signature = (homotopy=None))]
    fn nu(&self, homotopy: Option<&str>) -> PyResult<(&'static str, Terms)> {
        let s = self.homotopy(homotopy)?;
        let value = vlink_core::nu(&s).map_err(err)?;
        let verdict = vlink_core::is_zero(&value, &s.ambient).keyword();
        let terms = value.terms.iter().map(|t| (t.sign.value(), (t.left.to_string(), t.right.to_string()))).collect();
        Ok((verdict, terms))
    }

    #[pyo3(signature = (homotopy=None))]
    fn verdict<'py>(&self, py: Python<'py>, homotopy: Option<&str>) -> PyResult<Bound<'py, PyDict>> {
        let v = vlink_core::verdict_for_script(&self.homotopy(homotopy)?).map_err(err)?;
        verdict_dict(py, &v)
    }

    #[pyo3(signature = (homotopy=None, loose_components=false, loose_link=false))]
    fn legendrian<'py>(
        &self,
        py: Python<'py>,
        homotopy: Option<&str>,
        loose_components: bool,
        loose_link: bool,
    ) -> PyResult<Bound<'py, PyDict>> {
        let v = vlink_core::verdict_for_script(&self.homotopy(homotopy)?).map_err(err)?;
        let l = vlink_core::promote_to_legendrian(&v, loose_components, loose_link);
        verdict_dict(py, &l.verdict)
    }

    /// Total `h_V` of a loop written in event syntax, e.g. `"drag K1 path=B2"`.
    fn hv(&self, events: &str) -> PyResult<i64> {
        let amb = self.0.ambient().map_err(err)?;
        let events = script::parse_events(events, amb.genus()).map_err(err)?;
        let word = loop_descriptor(&amb, &self.0.components, &events).map_err(err)?;
        vlink_core::h_v(&amb.field, &word).map_err(err)
    }

    fn normal_form(&self, events: &str) -> PyResult<String> {
        let amb = self.0.ambient().map_err(err)?;
        let events = script::parse_events(events, amb.genus()).map_err(err)?;
        let name = events
            .first()
            .and_then(|e| e.components().first().map(|c| c.to_string()))
            .ok_or_else(|| PyValueError::new_err("empty loop"))?;
        let decl = self
            .0
            .components
            .iter()
            .find(|c| c.name == name)
            .ok_or_else(|| PyValueError::new_err(format!("unknown component `{name}`")))?;
        vlink_core::normal_form_loop(&amb, decl, &events).map(|nf| nf.to_string()).map_err(err)
    }
}

/// The seven summary rows as CSV lines, header first.
#[pyfunction]
#[pyo3(signature = (g=2, k=1))]
fn table(g: u32, k: i64) -> PyResult<Vec<String>> {
    let rows = vlink_core::table_all(g, k).map_err(err)?;
    let mut out = vec![catalog::CSV_HEADER.to_string()];
    out.extend(rows.iter().map(|r| r.csv()));
    Ok(out)
}

/// Verdict for one catalog family at the given levels.
#[pyfunction]
#[pyo3(signature = (family, i1, i2, g=2, k=1))]
fn table_verdict<'py>(py: Python<'py>, family: &str, i1: i64, i2: i64, g: u32, k: i64) -> PyResult<Bound<'py, PyDict>> {
    let p = vlink_core::Params::new(ExampleFamily::parse(family).map_err(err)?, g, k, i1, i2).map_err(err)?;
    verdict_dict(py, &vlink_core::table_verdict(&p).map_err(err)?)
}

/// Script text for a catalog family.
#[pyfunction]
#[pyo3(signature = (family, i1, i2, g=2, k=1))]
fn example_script(family: &str, i1: i64, i2: i64, g: u32, k: i64) -> PyResult<String> {
    let p = vlink_core::Params::new(ExampleFamily::parse(family).map_err(err)?, g, k, i1, i2).map_err(err)?;
    let s = vlink_core::build_example(&p).map_err(err)?;
    Ok(script::ScriptFile::from(&s).to_text())
}

/// "simple" when the Euler class of the field is torsion, else "not guaranteed".
#[pyfunction]
fn simplicity(k: i64, dual: &PyH1Class) -> PyResult<&'static str> {
    let bundle = vlink_core::BundleData::product(dual.0.genus()).map_err(err)?;
    let field = vlink_core::FieldData::new(k, dual.0.clone());
    Ok(match vlink_core::simplicity_check(&bundle, &field) {
        vlink_core::Simplicity::Simple => "simple",
        vlink_core::Simplicity::NotGuaranteed => "not guaranteed",
    })
}

#[pymodule]
fn vlink(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyH1Class>()?;
    m.add_class::<PySurfaceGroup>()?;
    m.add_class::<PyScript>()?;
    m.add_function(wrap_pyfunction!(table, m)?)?;
    m.add_function(wrap_pyfunction!(table_verdict, m)?)?;
    m.add_function(wrap_pyfunction!(example_script, m)?)?;
    m.add_function(wrap_pyfunction!(simplicity, m)?)?;
    Ok(())
}
