//! Closed-form exponentials of a single generator and the headline state
//! mapping.
//!
//! For a generic pair the operator is `exp(theta T / Gamma)`; written out via
//! the eigenprojectors it is
//!
//! `Id + (T/G^2) {2 i sigma + e^{-i theta sigma/Gamma} [(Gamma + sigma^2/Gamma) sin theta - 2 i sigma cos theta]}`
//! `   + (T^2/G^2) {1 - e^{-i theta sigma/Gamma} [cos theta + i (sigma/Gamma) sin theta]}`
//!
//! which costs exactly two generator applications. For a phase-collinear pair
//! the operator is `exp(theta T / sigma) = Id + (T/sigma) e^{-i theta} sin theta`
//! (one application). When `sigma = 0` the generic form collapses to the
//! Rodrigues rotation formula.

use num_complex::Complex64;

use crate::generator::{CaseTag, Generator};
use crate::hilbert::StateVector;
use crate::{Error, Result};

/// Which of the two fundamental mapping angles (differing by pi) to take.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Branch {
    ShortWay,
    LongWay,
}

impl Branch {
    pub fn as_str(&self) -> &'static str {
        match self {
            Branch::ShortWay => "short",
            Branch::LongWay => "long",
        }
    }
}

/// Outcome of [`map_state`]: the solved angle, the branch taken, and the
/// complex scale `s` with `U(a) = s b`.
#[derive(Debug, Clone, PartialEq)]
pub struct MappingResult {
    pub case_tag: CaseTag,
    pub theta_prime: f64,
    pub branch: Branch,
    pub scale: Complex64,
    /// Gamma for a generic pair, sigma for a phase-collinear one, absent for
    /// the identity (real-collinear) case.
    pub exponent_normalizer: Option<f64>,
}

enum ExpCoefficients {
    /// c + c1 T(c) + c2 T(T(c))
    Generic { c1: Complex64, c2: Complex64 },
    /// c + c1 T(c)
    Phase { c1: Complex64 },
    Identity,
}

/// The exponential at a fixed angle, with its scalar coefficients precomputed
/// so each application is two inner products and two axpy combinations.
/// Immutable; share and apply concurrently at will.
pub struct UnitaryApplicator {
    gen: Generator,
    theta: f64,
    coeffs: ExpCoefficients,
}

impl UnitaryApplicator {
    pub fn new(gen: Generator, theta: f64) -> Self {
        let coeffs = coefficients(&gen, theta);
        Self { gen, theta, coeffs }
    }

    pub fn theta(&self) -> f64 {
        self.theta
    }

    pub fn generator(&self) -> &Generator {
        &self.gen
    }

    pub fn apply(&self, c: &StateVector) -> Result<StateVector> {
        if c.dimension() != self.gen.dimension() {
            return Err(Error::DimensionMismatch {
                left: self.gen.dimension(),
                right: c.dimension(),
            });
        }
        match &self.coeffs {
            ExpCoefficients::Generic { c1, c2 } => {
                let t1 = self.gen.apply(c)?;
                let t2 = self.gen.apply(&t1)?;
                c.axpy(*c1, &t1)?.axpy(*c2, &t2)
            }
            ExpCoefficients::Phase { c1 } => {
                let t1 = self.gen.apply(c)?;
                c.axpy(*c1, &t1)
            }
            ExpCoefficients::Identity => Ok(c.clone()),
        }
    }
}

fn coefficients(gen: &Generator, theta: f64) -> ExpCoefficients {
    let inv = gen.invariants();
    let i = Complex64::new(0.0, 1.0);
    match gen.case_tag() {
        CaseTag::GenericPair => {
            let gamma = inv.gamma;
            let sigma = inv.sigma;
            let g_sq = inv.g_sq;
            let phase = (-i * theta * sigma / gamma).exp();
            let braces1 = 2.0 * i * sigma
                + phase
                    * (Complex64::new((gamma + sigma * sigma / gamma) * theta.sin(), 0.0)
                        - 2.0 * i * sigma * theta.cos());
            let braces2 = Complex64::new(1.0, 0.0)
                - phase * (Complex64::new(theta.cos(), 0.0) + i * (sigma / gamma) * theta.sin());
            ExpCoefficients::Generic {
                c1: braces1 / g_sq,
                c2: braces2 / g_sq,
            }
        }
        CaseTag::PhaseCollinear => {
            let phase = (-i * theta).exp();
            ExpCoefficients::Phase {
                c1: phase * theta.sin() / inv.sigma,
            }
        }
        CaseTag::RealCollinear => ExpCoefficients::Identity,
    }
}

/// Applies `exp(theta T / normalizer)` to `c`. For a real-collinear pair the
/// exponential is the identity and `c` is returned unchanged.
pub fn exp_apply(gen: &Generator, theta: f64, c: &StateVector) -> Result<StateVector> {
    UnitaryApplicator::new(gen.clone(), theta).apply(c)
}

/// Dense realization of the exponential, column-wise on the standard basis.
/// For export and oracle comparison only.
pub fn exp_matrix(gen: &Generator, theta: f64) -> Result<crate::oracle::DenseMatrix> {
    let d = gen.dimension();
    let applicator = UnitaryApplicator::new(gen.clone(), theta);
    let mut m = crate::oracle::DenseMatrix::zeros(d);
    for k in 0..d {
        let col = applicator.apply(&StateVector::basis(d, k)?)?;
        for (j, z) in col.amplitudes().iter().enumerate() {
            m.set(j, k, *z);
        }
    }
    Ok(m)
}

/// Solves for the angle sending `a` to the ray of `b`.
///
/// Generic pair: `cot(theta') = g / Gamma`, fundamental solution in (0, pi).
/// Phase-collinear pair: the angle accruing no extra phase, picked among the
/// solutions of `tan(2 theta') = sigma / g` by numerically evaluating the
/// scale formula and keeping the positive-real one. `LongWay` adds pi.
pub fn solve_angle(gen: &Generator, branch: Branch) -> f64 {
    let inv = gen.invariants();
    let short = match gen.case_tag() {
        CaseTag::GenericPair => inv.gamma.atan2(inv.g),
        CaseTag::PhaseCollinear => {
            let base = if inv.g != 0.0 {
                0.5 * (inv.sigma / inv.g).atan()
            } else {
                inv.sigma.signum() * std::f64::consts::FRAC_PI_4
            };
            // pi/2 shifts flip the sign of the scale; keep the positive-real one
            let mut best = base;
            let mut best_re = f64::NEG_INFINITY;
            for k in 0..4 {
                let theta = base + k as f64 * std::f64::consts::FRAC_PI_2;
                let s = predicted_scale(gen, theta);
                if s.re > best_re {
                    best_re = s.re;
                    best = theta;
                }
            }
            best
        }
        CaseTag::RealCollinear => 0.0,
    };
    match branch {
        Branch::ShortWay => short,
        Branch::LongWay => {
            if gen.case_tag() == CaseTag::RealCollinear {
                short
            } else {
                short + std::f64::consts::PI
            }
        }
    }
}

/// The complex `s` with `exp(theta T / normalizer)(a) = s b` for the given
/// angle: `sqrt(<a,a>/<b,b>) e^{-i theta sigma/Gamma}` for a generic pair
/// (valid at the solving angles), `(<b,a>/<b,b>) e^{-2 i theta}` for a
/// phase-collinear pair at any angle, and the real `<b,a>/<b,b>` for the
/// identity case.
pub fn predicted_scale(gen: &Generator, theta: f64) -> Complex64 {
    let inv = gen.invariants();
    let i = Complex64::new(0.0, 1.0);
    match gen.case_tag() {
        CaseTag::GenericPair => {
            let magnitude = (gen.norm_a_sq() / gen.norm_b_sq()).sqrt();
            magnitude * (-i * theta * inv.sigma / inv.gamma).exp()
        }
        CaseTag::PhaseCollinear => {
            (gen.inner_ba() / gen.norm_b_sq()) * (-2.0 * i * theta).exp()
        }
        CaseTag::RealCollinear => Complex64::new(gen.inner_ba().re / gen.norm_b_sq(), 0.0),
    }
}

/// Builds the single-exponential unitary sending `a` to the ray of `b` and
/// returns it as a reusable O(d) applicator together with the solved angle
/// and predicted scale.
pub fn map_state(
    a: &StateVector,
    b: &StateVector,
    branch: Branch,
) -> Result<(MappingResult, UnitaryApplicator)> {
    let gen = Generator::new(a.clone(), b.clone())?;
    Ok(map_with_generator(gen, branch))
}

/// As [`map_state`] for an already-constructed generator (e.g. one built with
/// a custom classification threshold).
pub fn map_with_generator(gen: Generator, branch: Branch) -> (MappingResult, UnitaryApplicator) {
    let theta_prime = solve_angle(&gen, branch);
    let scale = predicted_scale(&gen, theta_prime);
    let inv = gen.invariants();
    let exponent_normalizer = match gen.case_tag() {
        CaseTag::GenericPair => Some(inv.gamma),
        CaseTag::PhaseCollinear => Some(inv.sigma),
        CaseTag::RealCollinear => None,
    };
    let result = MappingResult {
        case_tag: gen.case_tag(),
        theta_prime,
        branch,
        scale,
        exponent_normalizer,
    };
    (result, UnitaryApplicator::new(gen, theta_prime))
}
