//! Shared helpers for the integration suites: seeded random states and
//! forced-case pair construction.

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use statemap::StateVector;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn random_complex(r: &mut ChaCha8Rng) -> Complex64 {
    Complex64::new(r.gen_range(-1.0..1.0), r.gen_range(-1.0..1.0))
}

/// Random state with norm bounded away from zero.
pub fn random_state(r: &mut ChaCha8Rng, dim: usize) -> StateVector {
    loop {
        let v: Vec<Complex64> = (0..dim).map(|_| random_complex(r)).collect();
        let s = StateVector::new(v).unwrap();
        if s.norm() > 1e-2 {
            return s;
        }
    }
}

/// A pair forced into the phase-collinear case: b = alpha a, alpha non-real.
pub fn forced_phase_pair(r: &mut ChaCha8Rng, dim: usize) -> (StateVector, StateVector) {
    let a = random_state(r, dim);
    let alpha = loop {
        let z = random_complex(r);
        if z.im.abs() > 0.1 && z.norm() > 0.1 {
            break z;
        }
    };
    let b = a.scale(alpha);
    (a, b)
}

/// A pair forced into the real-collinear case: b = k a, k real nonzero.
pub fn forced_real_pair(r: &mut ChaCha8Rng, dim: usize) -> (StateVector, StateVector) {
    let a = random_state(r, dim);
    let k = loop {
        let k: f64 = r.gen_range(-2.0..2.0);
        if k.abs() > 0.1 {
            break k;
        }
    };
    let b = a.scale(Complex64::new(k, 0.0));
    (a, b)
}

/// A random vector orthogonal to both given states (requires dim >= 3).
#[allow(dead_code)]
pub fn random_orthogonal_to(
    r: &mut ChaCha8Rng,
    a: &StateVector,
    b: &StateVector,
) -> StateVector {
    // orthonormalize {a, b} first so the projections are exact
    let u1 = a.scale(Complex64::new(1.0 / a.norm(), 0.0));
    let mut u2 = b.clone();
    for _ in 0..2 {
        let p = statemap::inner_product(&u1, &u2).unwrap();
        u2 = u2.axpy(-p, &u1).unwrap();
    }
    let span: Vec<StateVector> = if u2.norm() > 1e-8 {
        vec![u1, u2.scale(Complex64::new(1.0 / u2.norm(), 0.0))]
    } else {
        vec![u1]
    };
    loop {
        let mut c = random_state(r, a.dimension());
        for _ in 0..2 {
            for u in &span {
                let p = statemap::inner_product(u, &c).unwrap();
                c = c.axpy(-p, u).unwrap();
            }
        }
        if c.norm() > 1e-3 {
            return c;
        }
    }
}
