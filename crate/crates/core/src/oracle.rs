//! Brute-force references: a dense Pade matrix exponential and the
//! Gram-Schmidt basis-pairing unitary. Everything here is O(d^2) storage and
//! O(d^3) work, by design; it exists to validate the closed forms and to serve
//! as the benchmark baseline.

use num_complex::Complex64;

use crate::hilbert::{inner_product, StateVector};
use crate::{Error, Result};

/// Row-major dense square complex matrix.
#[derive(Debug, Clone, PartialEq)]
pub struct DenseMatrix {
    dim: usize,
    data: Vec<Complex64>,
}

impl DenseMatrix {
    pub fn zeros(dim: usize) -> Self {
        Self {
            dim,
            data: vec![Complex64::new(0.0, 0.0); dim * dim],
        }
    }

    pub fn identity(dim: usize) -> Self {
        let mut m = Self::zeros(dim);
        for i in 0..dim {
            m.set(i, i, Complex64::new(1.0, 0.0));
        }
        m
    }

    /// Builds from a row-major slice; must contain dim*dim entries.
    pub fn from_row_major(dim: usize, data: Vec<Complex64>) -> Result<Self> {
        if data.len() != dim * dim {
            return Err(Error::NonSquareMatrix);
        }
        Ok(Self { dim, data })
    }

    pub fn dimension(&self) -> usize {
        self.dim
    }

    pub fn data(&self) -> &[Complex64] {
        &self.data
    }

    #[inline]
    pub fn get(&self, row: usize, col: usize) -> Complex64 {
        self.data[row * self.dim + col]
    }

    #[inline]
    pub fn set(&mut self, row: usize, col: usize, value: Complex64) {
        self.data[row * self.dim + col] = value;
    }

    pub fn adjoint(&self) -> DenseMatrix {
        let mut out = DenseMatrix::zeros(self.dim);
        for i in 0..self.dim {
            for j in 0..self.dim {
                out.set(j, i, self.get(i, j).conj());
            }
        }
        out
    }

    pub fn add(&self, other: &DenseMatrix) -> DenseMatrix {
        assert_eq!(self.dim, other.dim);
        let data = self
            .data
            .iter()
            .zip(&other.data)
            .map(|(x, y)| x + y)
            .collect();
        DenseMatrix {
            dim: self.dim,
            data,
        }
    }

    pub fn sub(&self, other: &DenseMatrix) -> DenseMatrix {
        assert_eq!(self.dim, other.dim);
        let data = self
            .data
            .iter()
            .zip(&other.data)
            .map(|(x, y)| x - y)
            .collect();
        DenseMatrix {
            dim: self.dim,
            data,
        }
    }

    pub fn scale(&self, alpha: Complex64) -> DenseMatrix {
        DenseMatrix {
            dim: self.dim,
            data: self.data.iter().map(|x| alpha * x).collect(),
        }
    }

    /// Matrix product, ikj loop order for locality.
    pub fn multiply(&self, other: &DenseMatrix) -> DenseMatrix {
        assert_eq!(self.dim, other.dim);
        let d = self.dim;
        let mut out = DenseMatrix::zeros(d);
        for i in 0..d {
            for k in 0..d {
                let aik = self.get(i, k);
                if aik.norm_sqr() == 0.0 {
                    continue;
                }
                let orow = &other.data[k * d..(k + 1) * d];
                let out_row = &mut out.data[i * d..(i + 1) * d];
                for j in 0..d {
                    out_row[j] += aik * orow[j];
                }
            }
        }
        out
    }

    pub fn apply(&self, c: &StateVector) -> Result<StateVector> {
        if c.dimension() != self.dim {
            return Err(Error::DimensionMismatch {
                left: self.dim,
                right: c.dimension(),
            });
        }
        let cv = c.amplitudes();
        let mut out = Vec::with_capacity(self.dim);
        for i in 0..self.dim {
            let row = &self.data[i * self.dim..(i + 1) * self.dim];
            out.push(row.iter().zip(cv).map(|(m, x)| m * x).sum());
        }
        StateVector::new(out)
    }

    pub fn frobenius_norm(&self) -> f64 {
        self.data.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt()
    }

    pub fn frobenius_distance(&self, other: &DenseMatrix) -> f64 {
        self.sub(other).frobenius_norm()
    }

    /// Maximum absolute column sum.
    pub fn one_norm(&self) -> f64 {
        let mut best = 0.0f64;
        for j in 0..self.dim {
            let mut s = 0.0;
            for i in 0..self.dim {
                s += self.get(i, j).norm();
            }
            best = best.max(s);
        }
        best
    }
}

// Pade-13 numerator coefficients; theta_13 per Higham's scaling analysis.
const PADE13: [f64; 14] = [
    64764752532480000.0,
    32382376266240000.0,
    7771770303897600.0,
    1187353796428800.0,
    129060195264000.0,
    10559470521600.0,
    670442572800.0,
    33522128640.0,
    1323241920.0,
    40840800.0,
    960960.0,
    16380.0,
    182.0,
    1.0,
];
const THETA13: f64 = 5.371920351148152;

/// Matrix exponential by scaling-and-squaring with a diagonal [13/13] Pade
/// approximant. Scaling power from the 1-norm; no balancing step.
pub fn dense_expm(m: &DenseMatrix) -> DenseMatrix {
    let d = m.dimension();
    let norm = m.one_norm();
    let s = if norm > THETA13 {
        (norm / THETA13).log2().ceil() as u32
    } else {
        0
    };
    let a = m.scale(Complex64::new(1.0 / 2f64.powi(s as i32), 0.0));

    let a2 = a.multiply(&a);
    let a4 = a2.multiply(&a2);
    let a6 = a2.multiply(&a4);
    let id = DenseMatrix::identity(d);

    let re = |x: f64| Complex64::new(x, 0.0);
    let w1 = a6
        .scale(re(PADE13[13]))
        .add(&a4.scale(re(PADE13[11])))
        .add(&a2.scale(re(PADE13[9])));
    let w2 = a6
        .scale(re(PADE13[7]))
        .add(&a4.scale(re(PADE13[5])))
        .add(&a2.scale(re(PADE13[3])))
        .add(&id.scale(re(PADE13[1])));
    let u = a.multiply(&a6.multiply(&w1).add(&w2));

    let z1 = a6
        .scale(re(PADE13[12]))
        .add(&a4.scale(re(PADE13[10])))
        .add(&a2.scale(re(PADE13[8])));
    let z2 = a6
        .scale(re(PADE13[6]))
        .add(&a4.scale(re(PADE13[4])))
        .add(&a2.scale(re(PADE13[2])))
        .add(&id.scale(re(PADE13[0])));
    let v = a6.multiply(&z1).add(&z2);

    // (V - U) X = (V + U)
    let mut r = solve(v.sub(&u), v.add(&u));
    for _ in 0..s {
        r = r.multiply(&r);
    }
    r
}

/// Solves A X = B by LU with partial pivoting; consumes both operands.
fn solve(mut a: DenseMatrix, mut b: DenseMatrix) -> DenseMatrix {
    let d = a.dim;
    for col in 0..d {
        let mut pivot = col;
        let mut best = a.get(col, col).norm();
        for r in col + 1..d {
            let v = a.get(r, col).norm();
            if v > best {
                best = v;
                pivot = r;
            }
        }
        if pivot != col {
            for j in 0..d {
                let t = a.get(col, j);
                a.set(col, j, a.get(pivot, j));
                a.set(pivot, j, t);
                let t = b.get(col, j);
                b.set(col, j, b.get(pivot, j));
                b.set(pivot, j, t);
            }
        }
        let diag = a.get(col, col);
        for r in col + 1..d {
            let factor = a.get(r, col) / diag;
            if factor.norm_sqr() == 0.0 {
                continue;
            }
            for j in col..d {
                let v = a.get(r, j) - factor * a.get(col, j);
                a.set(r, j, v);
            }
            for j in 0..d {
                let v = b.get(r, j) - factor * b.get(col, j);
                b.set(r, j, v);
            }
        }
    }
    // back substitution
    let mut x = DenseMatrix::zeros(d);
    for j in 0..d {
        for i in (0..d).rev() {
            let mut s = b.get(i, j);
            for k in i + 1..d {
                s -= a.get(i, k) * x.get(k, j);
            }
            x.set(i, j, s / a.get(i, i));
        }
    }
    x
}

/// Residual threshold below which a Gram-Schmidt seed candidate is considered
/// linearly dependent and skipped.
const SEED_SKIP_REL: f64 = 1e-10;

/// Completes `seed / ||seed||` to an orthonormal basis using modified
/// Gram-Schmidt with a second re-orthogonalization pass, seeding with the
/// standard basis and skipping near-dependent candidates.
fn orthonormal_basis_from(seed: &StateVector) -> Result<Vec<StateVector>> {
    let d = seed.dimension();
    let norm = seed.norm();
    if norm == 0.0 {
        return Err(Error::ZeroVector);
    }
    let mut basis: Vec<StateVector> = vec![seed.scale(Complex64::new(1.0 / norm, 0.0))];
    let mut candidate = 0usize;
    while basis.len() < d {
        if candidate >= d {
            // cannot happen for finite-precision independent seeds
            return Err(Error::ZeroVector);
        }
        let mut v = StateVector::basis(d, candidate)?;
        candidate += 1;
        // two MGS passes
        for _ in 0..2 {
            for u in &basis {
                let proj = inner_product(u, &v)?;
                v = v.axpy(-proj, u)?;
            }
        }
        let r = v.norm();
        if r <= SEED_SKIP_REL {
            continue;
        }
        basis.push(v.scale(Complex64::new(1.0 / r, 0.0)));
    }
    Ok(basis)
}

/// The classical baseline: orthonormal bases seeded by `a` and `b`, paired
/// element-wise into `U = sum_i |phi_i><psi_i|`, so `U` sends `a/||a||` to
/// `b/||b||`.
pub fn gram_schmidt_unitary(a: &StateVector, b: &StateVector) -> Result<DenseMatrix> {
    if a.dimension() != b.dimension() {
        return Err(Error::DimensionMismatch {
            left: a.dimension(),
            right: b.dimension(),
        });
    }
    let psi = orthonormal_basis_from(a)?;
    let phi = orthonormal_basis_from(b)?;
    let d = a.dimension();
    let mut u = DenseMatrix::zeros(d);
    for i in 0..d {
        let pv = phi[i].amplitudes();
        let sv = psi[i].amplitudes();
        for row in 0..d {
            for col in 0..d {
                let v = u.get(row, col) + pv[row] * sv[col].conj();
                u.set(row, col, v);
            }
        }
    }
    Ok(u)
}
