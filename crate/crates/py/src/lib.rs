//! Python bindings for the semigroup library.

use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;

use semigroup_forge::error::Error;
use semigroup_forge::families::{family_j1 as fam_j1, family_jn1 as fam_jn1, FamilyParams};
use semigroup_forge::groebner::Caps;
use semigroup_forge::report::run_record;
use semigroup_forge::semigroup::NumericalSemigroup;
use semigroup_forge::stretched::stretched_profile;
use semigroup_forge::structure::verify_main_theorem;
use semigroup_forge::toric::minimal_generators;

fn err(e: Error) -> PyErr {
    PyValueError::new_err(e.to_string())
}

/// A numerical semigroup given by positive coprime generators.
#[pyclass(frozen)]
struct Semigroup {
    inner: NumericalSemigroup,
}

#[pymethods]
impl Semigroup {
    #[new]
    fn new(generators: Vec<i64>) -> PyResult<Self> {
        Ok(Semigroup { inner: NumericalSemigroup::new(&generators).map_err(err)? })
    }

    #[getter]
    fn generators(&self) -> Vec<i64> {
        self.inner.generators().to_vec()
    }

    #[getter]
    fn multiplicity(&self) -> i64 {
        self.inner.multiplicity()
    }

    #[getter]
    fn embedding_dimension(&self) -> usize {
        self.inner.embedding_dimension()
    }

    #[getter]
    fn frobenius(&self) -> i64 {
        self.inner.frobenius()
    }

    #[getter]
    fn genus(&self) -> usize {
        self.inner.genus()
    }

    fn gaps(&self) -> Vec<i64> {
        self.inner.gaps()
    }

    /// Apéry set, sorted; `base` defaults to the multiplicity.
    #[pyo3(signature = (base=None))]
    fn apery(&self, base: Option<i64>) -> PyResult<Vec<i64>> {
        match base {
            Some(b) => Ok(self.inner.apery_set(b).map_err(err)?.sorted()),
            None => Ok(self.inner.apery().sorted()),
        }
    }

    fn pseudo_frobenius(&self) -> Vec<i64> {
        self.inner.pseudo_frobenius().values
    }

    fn contains(&self, z: i64) -> bool {
        self.inner.contains(z)
    }

    /// Maximal factorization length of `d`, or None if `d` is not in the
    /// semigroup.
    fn max_order(&self, d: i64) -> Option<i64> {
        self.inner.max_order(d)
    }

    fn is_stretched(&self) -> bool {
        stretched_profile(&self.inner).is_stretched()
    }

    /// Minimal binomial generators of the defining ideal, as strings,
    /// with their degrees.
    fn ideal(&self) -> PyResult<Vec<(String, i64)>> {
        let gens = minimal_generators(&self.inner, &Caps::default()).map_err(err)?;
        Ok(gens
            .binomials
            .iter()
            .zip(&gens.betti_degrees)
            .map(|(b, &d)| (b.to_string(), d))
            .collect())
    }

    /// The certified determinantal matrix, or None when the hypotheses
    /// fail.
    fn matrix(&self) -> PyResult<Option<String>> {
        let report = verify_main_theorem(&self.inner, &Caps::default()).map_err(err)?;
        Ok(report.certificate().map(|c| c.matrix.to_string()))
    }

    /// Cohen-Macaulayness of the tangent cone, or None when no
    /// certificate exists.
    fn tangent_cone_cm(&self) -> PyResult<Option<bool>> {
        let h = &self.inner;
        let record = run_record(h, &Caps::default()).map_err(err)?;
        Ok(record.tangent_cone.map(|t| t.cm_formula))
    }

    /// Full analysis record as a JSON string.
    fn analyze_json(&self) -> PyResult<String> {
        let record = run_record(&self.inner, &Caps::default()).map_err(err)?;
        serde_json::to_string(&record).map_err(|e| PyValueError::new_err(e.to_string()))
    }

    fn __repr__(&self) -> String {
        let gens: Vec<String> = self.inner.generators().iter().map(|g| g.to_string()).collect();
        format!("Semigroup(<{}>)", gens.join(", "))
    }
}

#[pyfunction]
fn family_j1(ell: i64, n: i64, alpha: i64, h1: i64) -> PyResult<Semigroup> {
    let h = fam_j1(&FamilyParams { ell, n, alpha, h1 }).map_err(err)?;
    Ok(Semigroup { inner: h })
}

#[pyfunction]
fn family_jn1(ell: i64, n: i64, alpha: i64, h1: i64) -> PyResult<Semigroup> {
    let h = fam_jn1(&FamilyParams { ell, n, alpha, h1 }).map_err(err)?;
    Ok(Semigroup { inner: h })
}

/// All numerical semigroups within the given multiplicity and Frobenius
/// bounds.
#[pyfunction]
fn enumerate_semigroups(max_multiplicity: i64, max_frobenius: i64) -> PyResult<Vec<Semigroup>> {
    let all = semigroup_forge::enumerate::enumerate(max_multiplicity, max_frobenius).map_err(err)?;
    Ok(all.into_iter().map(|inner| Semigroup { inner }).collect())
}

#[pymodule]
fn semigroup_forge_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<Semigroup>()?;
    m.add_function(wrap_pyfunction!(family_j1, m)?)?;
    m.add_function(wrap_pyfunction!(family_jn1, m)?)?;
    m.add_function(wrap_pyfunction!(enumerate_semigroups, m)?)?;
    Ok(())
}
