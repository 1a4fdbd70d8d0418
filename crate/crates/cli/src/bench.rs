//! The `bench` command: median timings for the closed-form path against the
//! dense exponential and Gram-Schmidt baselines.

use std::time::Instant;

use num_complex::Complex64;
use rand_chacha::ChaCha8Rng;
use statemap::exponential::solve_angle;
use statemap::oracle::{dense_expm, gram_schmidt_unitary};
use statemap::{map_state, Branch, CaseTag, Generator};

use crate::io::{BenchRecord, BenchReport};
use crate::verify::random_state;

fn median(mut xs: Vec<u128>) -> u128 {
    xs.sort_unstable();
    xs[xs.len() / 2].max(1)
}

pub fn run(dims: &[usize], trials: usize, r: &mut ChaCha8Rng) -> BenchReport {
    let mut records = Vec::new();
    for &d in dims {
        let mut construct = Vec::new();
        let mut apply = Vec::new();
        let mut dense = Vec::new();
        let mut gs = Vec::new();
        for _ in 0..trials {
            let a = random_state(r, d);
            let b = random_state(r, d);
            let c = random_state(r, d);

            let t0 = Instant::now();
            let (_, u) = map_state(&a, &b, Branch::ShortWay).unwrap();
            construct.push(t0.elapsed().as_nanos());

            // repeat the O(d) apply so the measurement rises above timer noise
            let reps = (4096 / d).max(1) as u32;
            let t0 = Instant::now();
            for _ in 0..reps {
                std::hint::black_box(u.apply(std::hint::black_box(&c)).unwrap());
            }
            apply.push((t0.elapsed().as_nanos() / reps as u128).max(1));

            let gen = Generator::new(a.clone(), b.clone()).unwrap();
            let theta = solve_angle(&gen, Branch::ShortWay);
            let normalizer = match gen.case_tag() {
                CaseTag::GenericPair => gen.invariants().gamma,
                CaseTag::PhaseCollinear => gen.invariants().sigma,
                CaseTag::RealCollinear => 1.0,
            };
            let t0 = Instant::now();
            let m = gen
                .dense_matrix()
                .scale(Complex64::new(theta / normalizer, 0.0));
            std::hint::black_box(dense_expm(&m));
            dense.push(t0.elapsed().as_nanos());

            let t0 = Instant::now();
            std::hint::black_box(gram_schmidt_unitary(&a, &b).unwrap());
            gs.push(t0.elapsed().as_nanos());
        }
        let closed_form_construct_ns = median(construct);
        let closed_form_apply_ns = median(apply);
        let dense_expm_ns = median(dense);
        let gram_schmidt_ns = median(gs);
        records.push(BenchRecord {
            dimension: d,
            closed_form_construct_ns,
            closed_form_apply_ns,
            dense_expm_ns,
            gram_schmidt_ns,
            speedup_apply: dense_expm_ns as f64 / closed_form_apply_ns as f64,
        });
    }
    BenchReport { trials, records }
}
