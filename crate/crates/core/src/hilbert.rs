//! Complex vectors, the sesquilinear inner product, and the four real scalar
//! invariants of a state pair.
//!
//! The inner product is conjugate-linear in the first argument and linear in
//! the second. Every downstream formula assumes this convention.

use num_complex::Complex64;

use crate::{Error, Result};

/// Relative tolerance below which a negative Gram determinant is treated as
/// floating-point cancellation and clamped to zero.
pub const GRAM_CLAMP_REL: f64 = 1e-12;

/// A finite-dimensional (possibly unnormalized) pure state.
#[derive(Debug, Clone, PartialEq)]
pub struct StateVector {
    amplitudes: Vec<Complex64>,
}

impl StateVector {
    /// Builds a state from its amplitudes, rejecting empty and non-finite input.
    pub fn new(amplitudes: Vec<Complex64>) -> Result<Self> {
        if amplitudes.is_empty() {
            return Err(Error::EmptyVector);
        }
        for (i, z) in amplitudes.iter().enumerate() {
            if !z.re.is_finite() || !z.im.is_finite() {
                return Err(Error::NonFinite(i));
            }
        }
        Ok(Self { amplitudes })
    }

    /// Convenience constructor from real amplitudes.
    pub fn from_reals(xs: &[f64]) -> Result<Self> {
        Self::new(xs.iter().map(|&x| Complex64::new(x, 0.0)).collect())
    }

    pub fn dimension(&self) -> usize {
        self.amplitudes.len()
    }

    pub fn amplitudes(&self) -> &[Complex64] {
        &self.amplitudes
    }

    pub fn is_zero(&self) -> bool {
        self.amplitudes.iter().all(|z| z.norm_sqr() == 0.0)
    }

    pub fn norm(&self) -> f64 {
        self.amplitudes
            .iter()
            .map(|z| z.norm_sqr())
            .sum::<f64>()
            .sqrt()
    }

    pub fn scale(&self, alpha: Complex64) -> StateVector {
        StateVector {
            amplitudes: self.amplitudes.iter().map(|z| alpha * z).collect(),
        }
    }

    pub fn add(&self, other: &StateVector) -> Result<StateVector> {
        check_dims(self, other)?;
        Ok(StateVector {
            amplitudes: self
                .amplitudes
                .iter()
                .zip(&other.amplitudes)
                .map(|(x, y)| x + y)
                .collect(),
        })
    }

    pub fn sub(&self, other: &StateVector) -> Result<StateVector> {
        check_dims(self, other)?;
        Ok(StateVector {
            amplitudes: self
                .amplitudes
                .iter()
                .zip(&other.amplitudes)
                .map(|(x, y)| x - y)
                .collect(),
        })
    }

    /// self + alpha * other, the workhorse of the matrix-free paths.
    pub fn axpy(&self, alpha: Complex64, other: &StateVector) -> Result<StateVector> {
        check_dims(self, other)?;
        Ok(StateVector {
            amplitudes: self
                .amplitudes
                .iter()
                .zip(&other.amplitudes)
                .map(|(x, y)| x + alpha * y)
                .collect(),
        })
    }

    pub fn zeros(dimension: usize) -> Result<Self> {
        if dimension == 0 {
            return Err(Error::EmptyVector);
        }
        Ok(Self {
            amplitudes: vec![Complex64::new(0.0, 0.0); dimension],
        })
    }

    /// Standard basis vector e_k.
    pub fn basis(dimension: usize, k: usize) -> Result<Self> {
        let mut v = Self::zeros(dimension)?;
        v.amplitudes[k] = Complex64::new(1.0, 0.0);
        Ok(v)
    }
}

fn check_dims(x: &StateVector, y: &StateVector) -> Result<()> {
    if x.dimension() != y.dimension() {
        return Err(Error::DimensionMismatch {
            left: x.dimension(),
            right: y.dimension(),
        });
    }
    Ok(())
}

/// `<x,y>`, conjugate-linear in `x`, linear in `y`.
pub fn inner_product(x: &StateVector, y: &StateVector) -> Result<Complex64> {
    check_dims(x, y)?;
    Ok(x.amplitudes
        .iter()
        .zip(&y.amplitudes)
        .map(|(a, b)| a.conj() * b)
        .sum())
}

/// The four real scalars characterizing a state pair:
/// g and sigma package `<b,a> = g + i sigma`, G^2 is the Gram determinant,
/// and Gamma = sqrt(G^2 + sigma^2).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct InvariantSet {
    pub g: f64,
    pub sigma: f64,
    pub g_sq: f64,
    pub gamma: f64,
}

/// Computes the invariant set of a nonzero pair.
///
/// G^2 is clamped to zero when a tiny negative value arises from cancellation
/// (within `GRAM_CLAMP_REL` of the scale `<a,a><b,b>`).
pub fn invariants(a: &StateVector, b: &StateVector) -> Result<InvariantSet> {
    check_dims(a, b)?;
    if a.is_zero() || b.is_zero() {
        return Err(Error::ZeroVector);
    }
    let aa = inner_product(a, a)?.re;
    let bb = inner_product(b, b)?.re;
    let ab = inner_product(a, b)?;
    let ba = ab.conj();
    let g = ba.re;
    let sigma = ba.im;
    // |G^2| at or below the cancellation noise floor is indistinguishable
    // from zero; clamping both signs keeps numerically collinear pairs out
    // of the generic case.
    let mut g_sq = aa * bb - ab.norm_sqr();
    if g_sq.abs() <= GRAM_CLAMP_REL * aa * bb {
        g_sq = 0.0;
    }
    let gamma = (g_sq + sigma * sigma).sqrt();
    Ok(InvariantSet {
        g,
        sigma,
        g_sq,
        gamma,
    })
}
