//! Python bindings: states are lists of complex amplitudes, the mapping is a
//! `Mapping` object whose `apply` reuses the O(d) closed-form applicator.

use num_complex::Complex64;
use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;

use statemap::exponential::{exp_matrix as exp_matrix_rs, map_state as map_state_rs};
use statemap::spectral::min_poly_residual as min_poly_residual_rs;
use statemap::{Branch, Generator, StateVector};

fn to_state(amps: Vec<Complex64>) -> PyResult<StateVector> {
    StateVector::new(amps).map_err(|e| PyValueError::new_err(e.to_string()))
}

fn parse_branch(branch: &str) -> PyResult<Branch> {
    match branch {
        "short" => Ok(Branch::ShortWay),
        "long" => Ok(Branch::LongWay),
        other => Err(PyValueError::new_err(format!(
            "branch must be 'short' or 'long', got '{other}'"
        ))),
    }
}

fn matrix_rows(m: &statemap::DenseMatrix) -> Vec<Vec<Complex64>> {
    let d = m.dimension();
    (0..d)
        .map(|i| (0..d).map(|j| m.get(i, j)).collect())
        .collect()
}

/// A solved state mapping: the angle, case, predicted scale, and a reusable
/// applicator for the unitary.
#[pyclass]
struct Mapping {
    result: statemap::MappingResult,
    applicator: statemap::UnitaryApplicator,
}

#[pymethods]
impl Mapping {
    #[getter]
    fn case(&self) -> &'static str {
        self.result.case_tag.as_str()
    }

    #[getter]
    fn theta_prime(&self) -> f64 {
        self.result.theta_prime
    }

    #[getter]
    fn branch(&self) -> &'static str {
        self.result.branch.as_str()
    }

    /// The complex s with U(a) = s * b.
    #[getter]
    fn scale(&self) -> Complex64 {
        self.result.scale
    }

    #[getter]
    fn exponent_normalizer(&self) -> Option<f64> {
        self.result.exponent_normalizer
    }

    /// Applies the unitary to an arbitrary vector of the same dimension.
    fn apply(&self, c: Vec<Complex64>) -> PyResult<Vec<Complex64>> {
        let c = to_state(c)?;
        let out = self
            .applicator
            .apply(&c)
            .map_err(|e| PyValueError::new_err(e.to_string()))?;
        Ok(out.amplitudes().to_vec())
    }

    fn __repr__(&self) -> String {
        format!(
            "Mapping(case='{}', theta_prime={}, branch='{}', scale={})",
            self.case(),
            self.result.theta_prime,
            self.branch(),
            self.result.scale
        )
    }
}

/// Solve for the single-exponential unitary sending a to the ray of b.
#[pyfunction]
#[pyo3(signature = (a, b, branch = "short"))]
fn map_state(a: Vec<Complex64>, b: Vec<Complex64>, branch: &str) -> PyResult<Mapping> {
    let a = to_state(a)?;
    let b = to_state(b)?;
    let branch = parse_branch(branch)?;
    let (result, applicator) =
        map_state_rs(&a, &b, branch).map_err(|e| PyValueError::new_err(e.to_string()))?;
    Ok(Mapping { result, applicator })
}

/// The four real invariants (g, sigma, G^2, Gamma) of a state pair.
#[pyfunction]
fn invariants(a: Vec<Complex64>, b: Vec<Complex64>) -> PyResult<(f64, f64, f64, f64)> {
    let a = to_state(a)?;
    let b = to_state(b)?;
    let inv =
        statemap::invariants(&a, &b).map_err(|e| PyValueError::new_err(e.to_string()))?;
    Ok((inv.g, inv.sigma, inv.g_sq, inv.gamma))
}

/// Case classification of a pair: 'generic', 'phase_collinear', or
/// 'real_collinear'.
#[pyfunction]
fn classify(a: Vec<Complex64>, b: Vec<Complex64>) -> PyResult<&'static str> {
    let gen = Generator::new(to_state(a)?, to_state(b)?)
        .map_err(|e| PyValueError::new_err(e.to_string()))?;
    Ok(gen.case_tag().as_str())
}

/// Apply exp(theta T[a,b] / normalizer) to c.
#[pyfunction]
fn exp_apply(
    a: Vec<Complex64>,
    b: Vec<Complex64>,
    theta: f64,
    c: Vec<Complex64>,
) -> PyResult<Vec<Complex64>> {
    let gen = Generator::new(to_state(a)?, to_state(b)?)
        .map_err(|e| PyValueError::new_err(e.to_string()))?;
    let out = statemap::exponential::exp_apply(&gen, theta, &to_state(c)?)
        .map_err(|e| PyValueError::new_err(e.to_string()))?;
    Ok(out.amplitudes().to_vec())
}

/// Dense matrix of exp(theta T[a,b] / normalizer), as a list of rows.
#[pyfunction]
fn exp_matrix(
    a: Vec<Complex64>,
    b: Vec<Complex64>,
    theta: f64,
) -> PyResult<Vec<Vec<Complex64>>> {
    let gen = Generator::new(to_state(a)?, to_state(b)?)
        .map_err(|e| PyValueError::new_err(e.to_string()))?;
    let m = exp_matrix_rs(&gen, theta).map_err(|e| PyValueError::new_err(e.to_string()))?;
    Ok(matrix_rows(&m))
}

/// Residual of the annihilating polynomial of T[a,b] applied to c.
#[pyfunction]
fn min_poly_residual(
    a: Vec<Complex64>,
    b: Vec<Complex64>,
    c: Vec<Complex64>,
) -> PyResult<f64> {
    let gen = Generator::new(to_state(a)?, to_state(b)?)
        .map_err(|e| PyValueError::new_err(e.to_string()))?;
    min_poly_residual_rs(&gen, &to_state(c)?).map_err(|e| PyValueError::new_err(e.to_string()))
}

/// The Gram-Schmidt baseline unitary sending a/||a|| to b/||b||, as a list of
/// rows.
#[pyfunction]
fn gram_schmidt_unitary(
    a: Vec<Complex64>,
    b: Vec<Complex64>,
) -> PyResult<Vec<Vec<Complex64>>> {
    let a = to_state(a)?;
    let b = to_state(b)?;
    let u = statemap::oracle::gram_schmidt_unitary(&a, &b)
        .map_err(|e| PyValueError::new_err(e.to_string()))?;
    Ok(matrix_rows(&u))
}

#[pymodule]
fn statemap_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<Mapping>()?;
    m.add_function(wrap_pyfunction!(map_state, m)?)?;
    m.add_function(wrap_pyfunction!(invariants, m)?)?;
    m.add_function(wrap_pyfunction!(classify, m)?)?;
    m.add_function(wrap_pyfunction!(exp_apply, m)?)?;
    m.add_function(wrap_pyfunction!(exp_matrix, m)?)?;
    m.add_function(wrap_pyfunction!(min_poly_residual, m)?)?;
    m.add_function(wrap_pyfunction!(gram_schmidt_unitary, m)?)?;
    Ok(())
}
