//! The anti-Hermitian generator `T[a,b]` of a state pair, applied matrix-free,
//! and the three-way case classification that drives the closed forms.

use num_complex::Complex64;

use crate::hilbert::{inner_product, invariants, InvariantSet, StateVector};
use crate::oracle::DenseMatrix;
use crate::Result;

/// Relative threshold (on squared quantities) separating the three cases.
/// 1e-10 per amplitude, squared.
pub const CLASSIFY_EPS: f64 = 1e-20;

/// Relative eigenvalue underflow at which a generic pair is handed off to the
/// phase-collinear formulas: |Gamma - |sigma|| <= this times Gamma.
pub const DEGENERATE_EIGENVALUE_REL: f64 = 1e-12;

/// Which of the paper's cases a state pair falls into.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CaseTag {
    /// G != 0: the generic pair, cubic minimal polynomial.
    GenericPair,
    /// G = 0 but T != 0: b is a non-real complex multiple of a.
    PhaseCollinear,
    /// T = 0: b = k a with k real. The exponential is the identity.
    RealCollinear,
}

impl CaseTag {
    pub fn as_str(&self) -> &'static str {
        match self {
            CaseTag::GenericPair => "generic",
            CaseTag::PhaseCollinear => "phase_collinear",
            CaseTag::RealCollinear => "real_collinear",
        }
    }
}

/// Classifies a pair from its invariants. `scale` must be `<a,a><b,b>`.
///
/// Pairs nominally generic but with an eigenvalue Gamma -+ sigma underflowing
/// relative to Gamma are handed off to the phase-collinear case rather than
/// dividing by a vanishing eigenvalue downstream.
pub fn classify(inv: &InvariantSet, scale: f64) -> CaseTag {
    classify_with_eps(inv, scale, CLASSIFY_EPS)
}

pub fn classify_with_eps(inv: &InvariantSet, scale: f64, eps: f64) -> CaseTag {
    if inv.g_sq > eps * scale {
        let lambda_min = inv.gamma - inv.sigma.abs();
        if lambda_min > DEGENERATE_EIGENVALUE_REL * inv.gamma {
            return CaseTag::GenericPair;
        }
    }
    if inv.sigma * inv.sigma > eps * scale {
        CaseTag::PhaseCollinear
    } else {
        CaseTag::RealCollinear
    }
}

/// A state pair with its cached invariants and classification.
///
/// Applying the generator costs two inner products and one axpy-style
/// combination; nothing is recomputed after construction. Immutable, so safe
/// to share across threads.
#[derive(Debug, Clone)]
pub struct Generator {
    a: StateVector,
    b: StateVector,
    inv: InvariantSet,
    case_tag: CaseTag,
    norm_a_sq: f64,
    norm_b_sq: f64,
    inner_ab: Complex64,
}

impl Generator {
    pub fn new(a: StateVector, b: StateVector) -> Result<Self> {
        Self::with_eps(a, b, CLASSIFY_EPS)
    }

    /// As [`Generator::new`] with an explicit classification threshold.
    pub fn with_eps(a: StateVector, b: StateVector, eps: f64) -> Result<Self> {
        let inv = invariants(&a, &b)?;
        let norm_a_sq = inner_product(&a, &a)?.re;
        let norm_b_sq = inner_product(&b, &b)?.re;
        let inner_ab = inner_product(&a, &b)?;
        let case_tag = classify_with_eps(&inv, norm_a_sq * norm_b_sq, eps);
        Ok(Self {
            a,
            b,
            inv,
            case_tag,
            norm_a_sq,
            norm_b_sq,
            inner_ab,
        })
    }

    pub fn dimension(&self) -> usize {
        self.a.dimension()
    }

    pub fn a(&self) -> &StateVector {
        &self.a
    }

    pub fn b(&self) -> &StateVector {
        &self.b
    }

    pub fn invariants(&self) -> &InvariantSet {
        &self.inv
    }

    pub fn case_tag(&self) -> CaseTag {
        self.case_tag
    }

    pub fn norm_a_sq(&self) -> f64 {
        self.norm_a_sq
    }

    pub fn norm_b_sq(&self) -> f64 {
        self.norm_b_sq
    }

    /// Cached `<a,b>`.
    pub fn inner_ab(&self) -> Complex64 {
        self.inner_ab
    }

    /// Cached `<b,a>` = g + i sigma.
    pub fn inner_ba(&self) -> Complex64 {
        self.inner_ab.conj()
    }

    /// `T[a,b](c) = <a,c> b - <b,c> a`, in O(d).
    pub fn apply(&self, c: &StateVector) -> Result<StateVector> {
        raw_apply(&self.a, &self.b, c)
    }

    /// Dense realization `b a^H - a b^H`, column-wise equal to [`Generator::apply`]
    /// on the standard basis. For the oracle and export only.
    pub fn dense_matrix(&self) -> DenseMatrix {
        let d = self.dimension();
        let av = self.a.amplitudes();
        let bv = self.b.amplitudes();
        let mut m = DenseMatrix::zeros(d);
        for j in 0..d {
            for k in 0..d {
                m.set(j, k, bv[j] * av[k].conj() - av[j] * bv[k].conj());
            }
        }
        m
    }
}

/// Applies `T[a,b]` without constructing a `Generator`; used where the pair
/// may be degenerate (zero vectors are fine here, the map is just zero).
pub fn raw_apply(a: &StateVector, b: &StateVector, c: &StateVector) -> Result<StateVector> {
    let ac = inner_product(a, c)?;
    let bc = inner_product(b, c)?;
    b.scale(ac).axpy(-bc, a)
}

/// Residual of the commutator closure identity
/// `[T[a,b], T[c,d]] = T[T[a,b](c), d] + T[c, T[a,b](d)]`
/// evaluated on `v`, matrix-free.
pub fn commutator_residual(p: &Generator, q: &Generator, v: &StateVector) -> Result<f64> {
    let lhs = p.apply(&q.apply(v)?)?.sub(&q.apply(&p.apply(v)?)?)?;
    let pc = p.apply(q.a())?;
    let pd = p.apply(q.b())?;
    let rhs = raw_apply(&pc, q.b(), v)?.add(&raw_apply(q.a(), &pd, v)?)?;
    Ok(lhs.sub(&rhs)?.norm())
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_complex::Complex64;

    fn sv(entries: &[(f64, f64)]) -> StateVector {
        StateVector::new(entries.iter().map(|&(r, i)| Complex64::new(r, i)).collect()).unwrap()
    }

    #[test]
    fn orthonormal_pair_is_generic() {
        let g = Generator::new(sv(&[(1.0, 0.0), (0.0, 0.0)]), sv(&[(0.0, 0.0), (1.0, 0.0)]))
            .unwrap();
        assert_eq!(g.case_tag(), CaseTag::GenericPair);
        assert_eq!(g.invariants().gamma, 1.0);
    }

    #[test]
    fn imaginary_multiple_is_phase_collinear() {
        let g = Generator::new(sv(&[(1.0, 0.0), (0.0, 0.0)]), sv(&[(0.0, 1.0), (0.0, 0.0)]))
            .unwrap();
        assert_eq!(g.case_tag(), CaseTag::PhaseCollinear);
        assert_eq!(g.invariants().sigma, -1.0);
    }

    #[test]
    fn real_multiple_is_real_collinear() {
        let g = Generator::new(sv(&[(1.0, 0.0), (0.0, 0.0)]), sv(&[(3.0, 0.0), (0.0, 0.0)]))
            .unwrap();
        assert_eq!(g.case_tag(), CaseTag::RealCollinear);
    }

    #[test]
    fn apply_on_spanning_vectors() {
        let a = sv(&[(1.0, 0.0), (0.0, 0.0)]);
        let b = sv(&[(0.0, 0.0), (1.0, 0.0)]);
        let g = Generator::new(a.clone(), b.clone()).unwrap();
        assert_eq!(g.apply(&a).unwrap(), b);
        assert_eq!(
            g.apply(&b).unwrap(),
            sv(&[(-1.0, 0.0), (0.0, 0.0)])
        );
    }

    #[test]
    fn apply_oblique_pair() {
        let s = 1.0 / 2f64.sqrt();
        let a = sv(&[(1.0, 0.0), (0.0, 0.0)]);
        let b = sv(&[(s, 0.0), (s, 0.0)]);
        let g = Generator::new(a.clone(), b).unwrap();
        let out = g.apply(&a).unwrap();
        assert!((out.amplitudes()[0] - Complex64::new(0.0, 0.0)).norm() < 1e-15);
        assert!((out.amplitudes()[1] - Complex64::new(s, 0.0)).norm() < 1e-15);
    }

    #[test]
    fn dense_matrix_matches_examples() {
        let g = Generator::new(sv(&[(1.0, 0.0), (0.0, 0.0)]), sv(&[(0.0, 0.0), (1.0, 0.0)]))
            .unwrap();
        let m = g.dense_matrix();
        assert_eq!(m.get(0, 0), Complex64::new(0.0, 0.0));
        assert_eq!(m.get(0, 1), Complex64::new(-1.0, 0.0));
        assert_eq!(m.get(1, 0), Complex64::new(1.0, 0.0));

        let g2 = Generator::new(sv(&[(1.0, 0.0), (0.0, 0.0)]), sv(&[(0.0, 1.0), (0.0, 0.0)]))
            .unwrap();
        let m2 = g2.dense_matrix();
        assert_eq!(m2.get(0, 0), Complex64::new(0.0, 2.0));
        assert_eq!(m2.get(1, 1), Complex64::new(0.0, 0.0));
    }

    #[test]
    fn dense_matrix_is_anti_hermitian() {
        let g = Generator::new(
            sv(&[(0.3, -0.2), (1.0, 0.4), (0.0, 0.9)]),
            sv(&[(-0.5, 0.1), (0.2, 0.2), (0.7, -0.3)]),
        )
        .unwrap();
        let m = g.dense_matrix();
        let sum = m.add(&m.adjoint());
        assert!(sum.frobenius_norm() < 1e-13);
    }

    #[test]
    fn classify_thresholds() {
        let inv = InvariantSet {
            g: 0.0,
            sigma: 0.0,
            g_sq: 1.0,
            gamma: 1.0,
        };
        assert_eq!(classify(&inv, 1.0), CaseTag::GenericPair);
        let inv = InvariantSet {
            g: 0.0,
            sigma: -1.0,
            g_sq: 0.0,
            gamma: 1.0,
        };
        assert_eq!(classify(&inv, 1.0), CaseTag::PhaseCollinear);
        let inv = InvariantSet {
            g: 3.0,
            sigma: 0.0,
            g_sq: 0.0,
            gamma: 0.0,
        };
        assert_eq!(classify(&inv, 9.0), CaseTag::RealCollinear);
    }

    #[test]
    fn commutator_with_itself_vanishes() {
        let p = Generator::new(
            sv(&[(0.3, -0.2), (1.0, 0.4), (0.0, 0.9)]),
            sv(&[(-0.5, 0.1), (0.2, 0.2), (0.7, -0.3)]),
        )
        .unwrap();
        let v = sv(&[(0.1, 0.7), (-0.4, 0.2), (0.5, 0.5)]);
        assert!(commutator_residual(&p, &p, &v).unwrap() < 1e-12);
    }

    #[test]
    fn commutator_closure_d2() {
        let a = sv(&[(1.0, 0.0), (0.0, 0.0)]);
        let b = sv(&[(0.0, 0.0), (1.0, 0.0)]);
        let p = Generator::new(a.clone(), b.clone()).unwrap();
        let q = Generator::new(a, b).unwrap();
        let v = sv(&[(0.3, -0.6), (0.8, 0.1)]);
        assert!(commutator_residual(&p, &q, &v).unwrap() < 1e-12);
    }

    #[test]
    fn commutator_closure_orthonormal_d4() {
        let e: Vec<StateVector> = (0..4).map(|k| StateVector::basis(4, k).unwrap()).collect();
        let p = Generator::new(e[0].clone(), e[1].clone()).unwrap();
        let q = Generator::new(e[2].clone(), e[3].clone()).unwrap();
        let v = sv(&[(0.2, 0.1), (-0.3, 0.5), (0.9, -0.2), (0.0, 0.4)]);
        assert!(commutator_residual(&p, &q, &v).unwrap() < 1e-12);
    }
}
