//! Eigenvalues and matrix-free algebraic eigenprojectors of `T[a,b]`,
//! obtained from its minimal polynomial rather than from eigenvectors.
//!
//! Generic pair: minimal polynomial `x (x^2 + 2 i sigma x + G^2)` with
//! eigenvalues `{0, -i(Gamma + sigma), i(Gamma - sigma)}`. Phase-collinear
//! pair: `x (x + 2 i sigma)` with eigenvalues `{0, -2 i sigma}`. Projectors
//! are evaluated as polynomials in `T` applied to a vector, never
//! materialized, so each application stays O(d).

use num_complex::Complex64;

use crate::generator::{CaseTag, Generator};
use crate::hilbert::StateVector;
use crate::{Error, Result};

/// Eigenvalue list and projector count for a generator's case.
#[derive(Debug, Clone, PartialEq)]
pub struct SpectralData {
    pub case_tag: CaseTag,
    pub eigenvalues: Vec<Complex64>,
    pub projector_count: usize,
}

/// Eigenvalues of `T[a,b]` restricted to its nontrivial action.
///
/// The kernel eigenvalue 0 is listed first; in a d-dimensional space it has
/// multiplicity d - 2 (generic) or d - 1 (phase-collinear) in the dense
/// spectrum.
pub fn spectral_data(gen: &Generator) -> Result<SpectralData> {
    let inv = gen.invariants();
    match gen.case_tag() {
        CaseTag::GenericPair => Ok(SpectralData {
            case_tag: CaseTag::GenericPair,
            eigenvalues: vec![
                Complex64::new(0.0, 0.0),
                Complex64::new(0.0, -(inv.gamma + inv.sigma)),
                Complex64::new(0.0, inv.gamma - inv.sigma),
            ],
            projector_count: 3,
        }),
        CaseTag::PhaseCollinear => Ok(SpectralData {
            case_tag: CaseTag::PhaseCollinear,
            eigenvalues: vec![Complex64::new(0.0, 0.0), Complex64::new(0.0, -2.0 * inv.sigma)],
            projector_count: 2,
        }),
        CaseTag::RealCollinear => Err(Error::UnsupportedCase),
    }
}

/// Applies the k-th eigenprojector to `c`, matrix-free (at most two generator
/// applications plus scalar combinations).
pub fn apply_projector(gen: &Generator, k: usize, c: &StateVector) -> Result<StateVector> {
    let inv = gen.invariants();
    let i = Complex64::new(0.0, 1.0);
    match gen.case_tag() {
        CaseTag::GenericPair => {
            if k >= 3 {
                return Err(Error::ProjectorIndex { index: k, count: 3 });
            }
            let gamma = inv.gamma;
            let sigma = inv.sigma;
            let t1 = gen.apply(c)?;
            let t2 = gen.apply(&t1)?;
            let lambda1 = -i * (gamma + sigma);
            let lambda2 = i * (gamma - sigma);
            match k {
                // (T - l1)(T - l2) / (l1 l2), with l1 l2 = G^2, l1 + l2 = -2 i sigma
                0 => {
                    let denom = Complex64::new(inv.g_sq, 0.0);
                    let num = t2
                        .axpy(2.0 * i * sigma, &t1)?
                        .axpy(Complex64::new(inv.g_sq, 0.0), c)?;
                    Ok(num.scale(denom.inv()))
                }
                // T (T - l2) / (l1 (l1 - l2)) = (t2 - l2 t1) / (-2 Gamma (Gamma + sigma))
                1 => {
                    let denom = Complex64::new(-2.0 * gamma * (gamma + sigma), 0.0);
                    Ok(t2.axpy(-lambda2, &t1)?.scale(denom.inv()))
                }
                // T (T - l1) / (l2 (l2 - l1)) = (t2 - l1 t1) / (-2 Gamma (Gamma - sigma))
                _ => {
                    let denom = Complex64::new(-2.0 * gamma * (gamma - sigma), 0.0);
                    Ok(t2.axpy(-lambda1, &t1)?.scale(denom.inv()))
                }
            }
        }
        CaseTag::PhaseCollinear => {
            if k >= 2 {
                return Err(Error::ProjectorIndex { index: k, count: 2 });
            }
            let two_i_sigma = 2.0 * i * inv.sigma;
            let t1 = gen.apply(c)?;
            match k {
                0 => Ok(c.axpy(two_i_sigma.inv(), &t1)?),
                _ => Ok(t1.scale(-two_i_sigma.inv())),
            }
        }
        CaseTag::RealCollinear => Err(Error::UnsupportedCase),
    }
}

/// Norm of the annihilating (minimal) polynomial applied to `c`, normalized so
/// the value is scale-invariant: by `||c|| Gamma^3` for the generic cubic, by
/// `||c|| sigma^2` for the phase-collinear quadratic, by `||c||` for the
/// real-collinear `x`.
pub fn min_poly_residual(gen: &Generator, c: &StateVector) -> Result<f64> {
    let inv = gen.invariants();
    let i = Complex64::new(0.0, 1.0);
    let norm_c = c.norm();
    if norm_c == 0.0 {
        return Ok(0.0);
    }
    match gen.case_tag() {
        CaseTag::GenericPair => {
            let t1 = gen.apply(c)?;
            let t2 = gen.apply(&t1)?;
            let poly = t2
                .axpy(2.0 * i * inv.sigma, &t1)?
                .axpy(Complex64::new(inv.g_sq, 0.0), c)?;
            let t3 = gen.apply(&poly)?;
            Ok(t3.norm() / (norm_c * inv.gamma.powi(3)))
        }
        CaseTag::PhaseCollinear => {
            let t1 = gen.apply(c)?;
            let t2 = gen.apply(&t1)?;
            let poly = t2.axpy(2.0 * i * inv.sigma, &t1)?;
            Ok(poly.norm() / (norm_c * inv.sigma * inv.sigma))
        }
        CaseTag::RealCollinear => Ok(gen.apply(c)?.norm() / norm_c),
    }
}
