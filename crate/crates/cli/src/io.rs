//! File formats: state pairs, vectors, and reports, all JSON with complex
//! numbers as [re, im] pairs.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};
use statemap::StateVector;

#[derive(Debug, Serialize, Deserialize)]
pub struct StatePairFile {
    pub dimension: usize,
    pub a: Vec<[f64; 2]>,
    pub b: Vec<[f64; 2]>,
}

impl StatePairFile {
    pub fn states(&self) -> Result<(StateVector, StateVector), String> {
        if self.a.len() != self.dimension || self.b.len() != self.dimension {
            return Err(format!(
                "dimension field {} does not match amplitude list lengths {} and {}",
                self.dimension,
                self.a.len(),
                self.b.len()
            ));
        }
        let a = parse_state(&self.a)?;
        let b = parse_state(&self.b)?;
        Ok((a, b))
    }
}

pub fn parse_state(pairs: &[[f64; 2]]) -> Result<StateVector, String> {
    StateVector::new(
        pairs
            .iter()
            .map(|&[re, im]| Complex64::new(re, im))
            .collect(),
    )
    .map_err(|e| e.to_string())
}

pub fn to_pairs(s: &StateVector) -> Vec<[f64; 2]> {
    s.amplitudes().iter().map(|z| [z.re, z.im]).collect()
}

#[derive(Debug, Serialize)]
pub struct InvariantsOut {
    pub g: f64,
    pub sigma: f64,
    pub g_sq: f64,
    pub gamma: f64,
}

#[derive(Debug, Serialize)]
pub struct MappingReport {
    pub case_tag: String,
    pub invariants: InvariantsOut,
    pub theta_prime: f64,
    pub branch: String,
    pub scale: [f64; 2],
    pub residual_map: f64,
    pub unitarity_residual: f64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub oracle_frobenius_distance: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub matrix: Option<Vec<Vec<[f64; 2]>>>,
}

#[derive(Debug, Serialize)]
pub struct PropertyResult {
    pub name: String,
    pub max_residual: f64,
    pub tolerance: f64,
    pub pass: bool,
}

#[derive(Debug, Serialize)]
pub struct VerifyReport {
    pub seed: u64,
    pub trials: usize,
    pub properties: Vec<PropertyResult>,
    pub pass: bool,
}

#[derive(Debug, Serialize)]
pub struct BenchRecord {
    pub dimension: usize,
    pub closed_form_construct_ns: u128,
    pub closed_form_apply_ns: u128,
    pub dense_expm_ns: u128,
    pub gram_schmidt_ns: u128,
    pub speedup_apply: f64,
}

#[derive(Debug, Serialize)]
pub struct BenchReport {
    pub trials: usize,
    pub records: Vec<BenchRecord>,
}

pub fn bench_csv(report: &BenchReport) -> String {
    let mut out = String::from(
        "dimension,closed_form_construct_ns,closed_form_apply_ns,dense_expm_ns,gram_schmidt_ns,speedup_apply\n",
    );
    for r in &report.records {
        out.push_str(&format!(
            "{},{},{},{},{},{}\n",
            r.dimension,
            r.closed_form_construct_ns,
            r.closed_form_apply_ns,
            r.dense_expm_ns,
            r.gram_schmidt_ns,
            r.speedup_apply
        ));
    }
    out
}
