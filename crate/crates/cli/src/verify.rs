//! The `verify` command: runs the full identity suite on supplied or random
//! pairs and reports the worst observed residual per property.

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use statemap::exponential::{exp_apply, exp_matrix};
use statemap::generator::{commutator_residual, raw_apply};
use statemap::oracle::dense_expm;
use statemap::spectral::{apply_projector, min_poly_residual, spectral_data};
use statemap::{inner_product, map_state, Branch, CaseTag, Generator, StateVector};

use crate::io::{PropertyResult, VerifyReport};

struct Tracker {
    name: &'static str,
    tolerance: f64,
    max: f64,
}

impl Tracker {
    fn new(name: &'static str, tolerance: f64, override_tol: Option<f64>) -> Self {
        Self {
            name,
            tolerance: override_tol.unwrap_or(tolerance),
            max: 0.0,
        }
    }

    fn record(&mut self, residual: f64) {
        if residual > self.max {
            self.max = residual;
        }
    }

    fn finish(self) -> PropertyResult {
        PropertyResult {
            name: self.name.to_string(),
            max_residual: self.max,
            tolerance: self.tolerance,
            pass: self.max <= self.tolerance,
        }
    }
}

pub fn random_state(r: &mut ChaCha8Rng, dim: usize) -> StateVector {
    loop {
        let v: Vec<Complex64> = (0..dim)
            .map(|_| Complex64::new(r.gen_range(-1.0..1.0), r.gen_range(-1.0..1.0)))
            .collect();
        let s = StateVector::new(v).unwrap();
        if s.norm() > 1e-2 {
            return s;
        }
    }
}

pub fn run(
    pairs: &[(StateVector, StateVector)],
    trials: usize,
    seed: u64,
    override_tol: Option<f64>,
) -> VerifyReport {
    let mut r = ChaCha8Rng::seed_from_u64(seed);

    let mut antisymmetry = Tracker::new("antisymmetry", 1e-13, override_tol);
    let mut middle_linearity = Tracker::new("middle_conjugate_linearity", 1e-12, override_tol);
    let mut anti_hermiticity = Tracker::new("anti_hermiticity", 1e-12, override_tol);
    let mut commutator = Tracker::new("commutator_closure", 1e-10, override_tol);
    let mut annihilation = Tracker::new("annihilation", 1e-10, override_tol);
    let mut idempotency = Tracker::new("projector_idempotency", 1e-10, override_tol);
    let mut mutual = Tracker::new("projector_mutual_annihilation", 1e-10, override_tol);
    let mut resolution = Tracker::new("resolution_of_identity", 1e-12, override_tol);
    let mut eigenspace = Tracker::new("eigenspace_property", 1e-10, override_tol);
    let mut reconstruction = Tracker::new("spectral_reconstruction", 1e-10, override_tol);
    let mut unitarity = Tracker::new("unitarity", 1e-11, override_tol);
    let mut group_law = Tracker::new("group_law", 1e-10, override_tol);
    let mut oracle_eq = Tracker::new("oracle_equivalence", 1e-9, override_tol);
    let mut mapping = Tracker::new("mapping_residual", 1e-10, override_tol);

    for (a, b) in pairs {
        for _ in 0..trials {
            let d = a.dimension();
            let c = random_state(&mut r, d);
            let norm_c = c.norm();
            let pair_scale = a.norm() * b.norm();

            let anti = raw_apply(a, b, &c)
                .unwrap()
                .add(&raw_apply(b, a, &c).unwrap())
                .unwrap();
            antisymmetry.record(anti.norm() / (pair_scale * norm_c));

            let alpha = Complex64::new(r.gen_range(-1.0..1.0), r.gen_range(-1.0..1.0));
            let lhs = raw_apply(&a.scale(alpha), b, &c).unwrap();
            let rhs = raw_apply(a, &b.scale(alpha.conj()), &c).unwrap();
            middle_linearity.record(
                lhs.sub(&rhs).unwrap().norm()
                    / (pair_scale * norm_c * alpha.norm().max(1e-3)),
            );

            let y = random_state(&mut r, d);
            let tc = raw_apply(a, b, &c).unwrap();
            let ty = raw_apply(a, b, &y).unwrap();
            let herm = inner_product(&tc, &y).unwrap() + inner_product(&c, &ty).unwrap();
            anti_hermiticity.record(herm.norm() / (pair_scale * norm_c * y.norm()));

            let gen = Generator::new(a.clone(), b.clone()).unwrap();
            let q = Generator::new(random_state(&mut r, d), random_state(&mut r, d)).unwrap();
            let qscale = q.a().norm() * q.b().norm();
            commutator.record(
                commutator_residual(&gen, &q, &c).unwrap()
                    / (pair_scale * qscale * norm_c),
            );

            annihilation.record(min_poly_residual(&gen, &c).unwrap());

            if gen.case_tag() != CaseTag::RealCollinear {
                let sd = spectral_data(&gen).unwrap();
                let gamma = gen.invariants().gamma;
                let mut sum = StateVector::zeros(d).unwrap();
                let mut recon = StateVector::zeros(d).unwrap();
                for k in 0..sd.projector_count {
                    let pk = apply_projector(&gen, k, &c).unwrap();
                    let pkk = apply_projector(&gen, k, &pk).unwrap();
                    idempotency.record(pkk.sub(&pk).unwrap().norm() / norm_c);
                    for j in 0..sd.projector_count {
                        if j != k {
                            mutual.record(
                                apply_projector(&gen, j, &pk).unwrap().norm() / norm_c,
                            );
                        }
                    }
                    let tpk = gen.apply(&pk).unwrap();
                    eigenspace.record(
                        tpk.sub(&pk.scale(sd.eigenvalues[k])).unwrap().norm()
                            / (norm_c * gamma),
                    );
                    sum = sum.add(&pk).unwrap();
                    recon = recon.add(&pk.scale(sd.eigenvalues[k])).unwrap();
                }
                resolution.record(sum.sub(&c).unwrap().norm() / norm_c);
                reconstruction.record(
                    recon.sub(&gen.apply(&c).unwrap()).unwrap().norm() / (norm_c * gamma),
                );

                let theta: f64 = r.gen_range(-3.0..3.0);
                let uc = exp_apply(&gen, theta, &c).unwrap();
                unitarity.record((uc.norm() - norm_c).abs() / norm_c);
                let theta2: f64 = r.gen_range(-3.0..3.0);
                let two = exp_apply(&gen, theta2, &uc).unwrap();
                let one = exp_apply(&gen, theta + theta2, &c).unwrap();
                group_law.record(two.sub(&one).unwrap().norm() / norm_c);

                if d <= 64 {
                    let normalizer = match gen.case_tag() {
                        CaseTag::GenericPair => gen.invariants().gamma,
                        _ => gen.invariants().sigma,
                    };
                    let closed = exp_matrix(&gen, theta).unwrap();
                    let dense = dense_expm(
                        &gen.dense_matrix()
                            .scale(Complex64::new(theta / normalizer, 0.0)),
                    );
                    oracle_eq.record(closed.frobenius_distance(&dense));
                }
            }

            let (res, u) = map_state(a, b, Branch::ShortWay).unwrap();
            let ua = u.apply(a).unwrap();
            mapping.record(
                ua.sub(&b.scale(res.scale)).unwrap().norm() / a.norm(),
            );
        }
    }

    let properties: Vec<PropertyResult> = vec![
        antisymmetry.finish(),
        middle_linearity.finish(),
        anti_hermiticity.finish(),
        commutator.finish(),
        annihilation.finish(),
        idempotency.finish(),
        mutual.finish(),
        resolution.finish(),
        eigenspace.finish(),
        reconstruction.finish(),
        unitarity.finish(),
        group_law.finish(),
        oracle_eq.finish(),
        mapping.finish(),
    ];
    let pass = properties.iter().all(|p| p.pass);
    VerifyReport {
        seed,
        trials,
        properties,
        pass,
    }
}
