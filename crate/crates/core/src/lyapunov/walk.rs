use std::time::Instant;

use rand::distr::weighted::WeightedIndex;
use rand::distr::Distribution;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::qr::{qr_in_place, Csr};
use super::LyapunovError;
use crate::cohomology::{plat_generators, plat_space};
use crate::exact::{parse_rational, RationalMatrix};

/// Exponents above this count as strictly positive.
pub const POSITIVE_THRESHOLD: f64 = 0.05;
pub const DEFAULT_PERIOD: usize = 10;
pub const DEFAULT_SYMMETRY_TOLERANCE: f64 = 1e-2;

/// A random walk on `GL(n, R)`: at every step one generator is drawn from `weights`
/// and multiplied on the left.
#[derive(Clone, Debug, Serialize)]
pub struct RandomWalkSpec {
    pub labels: Vec<String>,
    /// Row-major `n×n` matrices.
    pub generators: Vec<Vec<f64>>,
    pub dimension: usize,
    pub weights: Vec<f64>,
    pub steps: u64,
    pub period: usize,
    pub seed: u64,
    pub replicas: usize,
}

impl RandomWalkSpec {
    /// Uniform walk on the given `(label, rows)` pairs.
    pub fn uniform(generators: Vec<(String, Vec<Vec<f64>>)>) -> Result<Self, LyapunovError> {
        let k = generators.len();
        Self::new(generators, vec![1.0 / k as f64; k])
    }

    pub fn new(
        generators: Vec<(String, Vec<Vec<f64>>)>,
        weights: Vec<f64>,
    ) -> Result<Self, LyapunovError> {
        let dimension = generators.first().map_or(0, |g| g.1.len());
        let mut labels = Vec::new();
        let mut mats = Vec::new();
        for (label, rows) in generators {
            if rows.len() != dimension || rows.iter().any(|r| r.len() != dimension) {
                return Err(LyapunovError::Shape);
            }
            labels.push(label);
            mats.push(rows.concat());
        }
        let spec = RandomWalkSpec {
            labels,
            generators: mats,
            dimension,
            weights,
            steps: 10_000,
            period: DEFAULT_PERIOD,
            seed: 0,
            replicas: 1,
        };
        spec.validate()?;
        Ok(spec)
    }

    /// Uniform walk on exact matrices, optionally closed under inverses
    /// (labelled `X^-1`). Invertibility is checked exactly.
    pub fn from_exact(
        generators: &[(&str, &RationalMatrix)],
        with_inverses: bool,
    ) -> Result<Self, LyapunovError> {
        let mut labelled: Vec<(String, Vec<Vec<f64>>)> = generators
            .iter()
            .map(|(l, m)| (l.to_string(), m.to_f64_rows()))
            .collect();
        for (l, m) in generators {
            let inv = m
                .inverse()
                .ok_or_else(|| LyapunovError::Singular(l.to_string()))?;
            if with_inverses {
                labelled.push((format!("{l}^-1"), inv.to_f64_rows()));
            }
        }
        Self::uniform(labelled)
    }

    /// Reads a walk from JSON:
    /// `{"generators": [{"label": "A", "matrix": [["1", "1"], [0, 1]]}], "inverses": true}`.
    /// Entries are integers or rational strings. An optional `weights` list
    /// covers the generators followed by their inverses.
    pub fn from_json(text: &str) -> Result<Self, LyapunovError> {
        let file: WalkFile =
            serde_json::from_str(text).map_err(|e| LyapunovError::Parse(e.to_string()))?;
        let mut exact = Vec::new();
        for g in &file.generators {
            let rows = g
                .matrix
                .iter()
                .map(|r| r.iter().map(entry).collect::<Result<Vec<_>, _>>())
                .collect::<Result<Vec<_>, _>>()?;
            exact.push(RationalMatrix::from_rows(&rows).map_err(|_| LyapunovError::Shape)?);
        }
        let named: Vec<(&str, &RationalMatrix)> = file
            .generators
            .iter()
            .map(|g| g.label.as_str())
            .zip(exact.iter())
            .collect();
        let spec = Self::from_exact(&named, file.inverses)?;
        match file.weights {
            Some(w) if w.len() == spec.generators.len() => {
                let spec = RandomWalkSpec { weights: w, ..spec };
                spec.validate()?;
                Ok(spec)
            }
            Some(_) => Err(LyapunovError::InvalidWeights),
            None => Ok(spec),
        }
    }

    pub fn with_steps(mut self, steps: u64) -> Self {
        self.steps = steps;
        self
    }

    pub fn with_seed(mut self, seed: u64) -> Self {
        self.seed = seed;
        self
    }

    pub fn with_replicas(mut self, replicas: usize) -> Self {
        self.replicas = replicas;
        self
    }

    pub fn with_period(mut self, period: usize) -> Self {
        self.period = period;
        self
    }

    /// Same walk with every generator replaced by `c·g·c⁻¹`.
    pub fn conjugated(&self, c: &[f64], c_inv: &[f64]) -> Self {
        let n = self.dimension;
        let mut out = self.clone();
        for g in &mut out.generators {
            *g = dense_mul(&dense_mul(c, g, n), c_inv, n);
        }
        out
    }

    pub fn validate(&self) -> Result<(), LyapunovError> {
        if self.generators.is_empty() || self.dimension == 0 {
            return Err(LyapunovError::Shape);
        }
        let total: f64 = self.weights.iter().sum();
        if self.weights.len() != self.generators.len()
            || self.weights.iter().any(|w| !(*w > 0.0))
            || (total - 1.0).abs() > 1e-9
        {
            return Err(LyapunovError::InvalidWeights);
        }
        if self.steps == 0 || self.replicas == 0 || self.period == 0 {
            return Err(LyapunovError::EmptyRun);
        }
        for (l, g) in self.labels.iter().zip(&self.generators) {
            if !log_abs_det(g, self.dimension).is_finite() {
                return Err(LyapunovError::Singular(l.clone()));
            }
        }
        Ok(())
    }

    /// `Σ wᵢ log|det gᵢ|`, the expected sum of all exponents.
    pub fn mean_log_det(&self) -> f64 {
        self.weights
            .iter()
            .zip(&self.generators)
            .map(|(w, g)| w * log_abs_det(g, self.dimension))
            .sum()
    }
}

/// The 18-dimensional Plat walk, uniform on `{T², S², T⁻², S⁻²}`.
pub fn plat_walk() -> Result<RandomWalkSpec, LyapunovError> {
    let (t, s) = plat_generators(&plat_space()?)?;
    RandomWalkSpec::from_exact(&[("T2", &t.matrix), ("S2", &s.matrix)], true)
}

#[derive(Deserialize)]
struct WalkFile {
    generators: Vec<NamedMatrix>,
    #[serde(default)]
    inverses: bool,
    weights: Option<Vec<f64>>,
}

#[derive(Deserialize)]
struct NamedMatrix {
    label: String,
    matrix: Vec<Vec<serde_json::Value>>,
}

fn entry(v: &serde_json::Value) -> Result<crate::exact::Rational, LyapunovError> {
    let text = match v {
        serde_json::Value::String(s) => s.clone(),
        serde_json::Value::Number(n) if n.is_i64() => n.to_string(),
        other => {
            return Err(LyapunovError::Parse(format!(
                "entry {other} is not an integer or rational string"
            )))
        }
    };
    parse_rational(&text).map_err(|e| LyapunovError::Parse(e.to_string()))
}

#[derive(Clone, Debug, Serialize)]
pub struct LyapunovReport {
    /// Replica means, descending.
    pub spectrum: Vec<f64>,
    /// Standard errors of the means; absent with a single replica.
    pub std_errors: Option<Vec<f64>>,
    pub symmetry_defect: f64,
    pub positive_count: usize,
    pub threshold: f64,
    pub mean_log_det: f64,
    pub steps: u64,
    pub period: usize,
    pub seed: u64,
    pub replica_spectra: Vec<Vec<f64>>,
    pub runtime_secs: f64,
}

impl LyapunovReport {
    pub fn dimension(&self) -> usize {
        self.spectrum.len()
    }

    pub fn sum(&self) -> f64 {
        self.spectrum.iter().sum()
    }

    /// Equality of everything except the wall-clock runtime.
    pub fn same_estimates(&self, o: &LyapunovReport) -> bool {
        let bits = |v: &[f64]| v.iter().map(|x| x.to_bits()).collect::<Vec<_>>();
        bits(&self.spectrum) == bits(&o.spectrum)
            && self.std_errors.as_deref().map(bits) == o.std_errors.as_deref().map(bits)
            && self
                .replica_spectra
                .iter()
                .map(|r| bits(r))
                .eq(o.replica_spectra.iter().map(|r| bits(r)))
    }
}

/// Estimates the Lyapunov spectrum. Replica `r` uses a ChaCha8 stream seeded
/// with `seed + r`.
pub fn spectrum(spec: &RandomWalkSpec) -> Result<LyapunovReport, LyapunovError> {
    spec.validate()?;
    let start = Instant::now();
    let sparse: Vec<Csr> = spec
        .generators
        .iter()
        .map(|g| Csr::from_dense(spec.dimension, g))
        .collect();
    let replica_spectra: Vec<Vec<f64>> = (0..spec.replicas)
        .into_par_iter()
        .map(|r| run_replica(spec, &sparse, spec.seed.wrapping_add(r as u64)))
        .collect::<Result<_, _>>()?;
    let (spectrum, std_errors) = mean_and_se(&replica_spectra);
    Ok(LyapunovReport {
        symmetry_defect: defect(&spectrum),
        positive_count: spectrum.iter().filter(|x| **x > POSITIVE_THRESHOLD).count(),
        threshold: POSITIVE_THRESHOLD,
        mean_log_det: spec.mean_log_det(),
        steps: spec.steps,
        period: spec.period,
        seed: spec.seed,
        spectrum,
        std_errors,
        replica_spectra,
        runtime_secs: start.elapsed().as_secs_f64(),
    })
}

/// Per-exponent mean and, with two or more replicas, standard error of the mean.
fn mean_and_se(replicas: &[Vec<f64>]) -> (Vec<f64>, Option<Vec<f64>>) {
    let n = replicas.first().map_or(0, Vec::len);
    let reps = replicas.len() as f64;
    let mean: Vec<f64> = (0..n)
        .map(|i| replicas.iter().map(|s| s[i]).sum::<f64>() / reps)
        .collect();
    let se = (replicas.len() > 1).then(|| {
        (0..n)
            .map(|i| {
                let var = replicas
                    .iter()
                    .map(|s| (s[i] - mean[i]).powi(2))
                    .sum::<f64>()
                    / (reps - 1.0);
                (var / reps).sqrt()
            })
            .collect()
    });
    (mean, se)
}

fn run_replica(spec: &RandomWalkSpec, gens: &[Csr], seed: u64) -> Result<Vec<f64>, LyapunovError> {
    let n = spec.dimension;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let pick = WeightedIndex::new(&spec.weights).map_err(|_| LyapunovError::InvalidWeights)?;
    let mut q = vec![0.0; n * n];
    for i in 0..n {
        q[i * n + i] = 1.0;
    }
    let mut tmp = vec![0.0; n * n];
    let mut sums = vec![0.0; n];
    let mut since = 0;
    for step in 0..spec.steps {
        gens[pick.sample(&mut rng)].mul_into(&q, n, &mut tmp);
        std::mem::swap(&mut q, &mut tmp);
        since += 1;
        if since == spec.period || step + 1 == spec.steps {
            since = 0;
            if q.iter().any(|x| !x.is_finite()) {
                return Err(LyapunovError::NonFinite);
            }
            for (s, l) in sums.iter_mut().zip(qr_in_place(&mut q, n, n)) {
                if !l.is_finite() {
                    return Err(LyapunovError::NonFinite);
                }
                *s += l;
            }
        }
    }
    let mut out: Vec<f64> = sums.iter().map(|s| s / spec.steps as f64).collect();
    out.sort_by(|a, b| b.total_cmp(a));
    Ok(out)
}

fn defect(spectrum: &[f64]) -> f64 {
    let d = spectrum.len();
    (0..d)
        .map(|i| (spectrum[i] + spectrum[d - 1 - i]).abs())
        .fold(0.0, f64::max)
}

fn log_abs_det(g: &[f64], n: usize) -> f64 {
    let mut a = g.to_vec();
    qr_in_place(&mut a, n, n).iter().sum()
}

fn dense_mul(a: &[f64], b: &[f64], n: usize) -> Vec<f64> {
    let mut out = vec![0.0; n * n];
    for i in 0..n {
        for k in 0..n {
            let x = a[i * n + k];
            for j in 0..n {
                out[i * n + j] += x * b[k * n + j];
            }
        }
    }
    out
}

#[derive(Clone, Debug, Serialize)]
pub struct SymmetryCheck {
    pub pass: bool,
    pub defect: f64,
    pub tolerance: f64,
}

/// Passes iff `max |λᵢ + λ_{d+1−i}| < tolerance`.
pub fn symmetry_check(spectrum: &[f64], tolerance: f64) -> Result<SymmetryCheck, LyapunovError> {
    if spectrum.len() % 2 != 0 {
        return Err(LyapunovError::OddDimension);
    }
    let d = defect(spectrum);
    Ok(SymmetryCheck {
        pass: d < tolerance,
        defect: d,
        tolerance,
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct ReplicaAgreement {
    /// Largest `|aᵢ − bᵢ| / sqrt(σaᵢ² + σbᵢ²)`.
    pub max_z: f64,
    pub pass: bool,
}

/// Compares two multi-replica reports exponent by exponent against `k` combined standard errors.
pub fn replica_agreement(
    a: &LyapunovReport,
    b: &LyapunovReport,
    k: f64,
) -> Option<ReplicaAgreement> {
    let (sa, sb) = (a.std_errors.as_ref()?, b.std_errors.as_ref()?);
    let max_z = (0..a.dimension())
        .map(|i| {
            (a.spectrum[i] - b.spectrum[i]).abs()
                / (sa[i].powi(2) + sb[i].powi(2)).sqrt().max(1e-300)
        })
        .fold(0.0, f64::max);
    Some(ReplicaAgreement {
        max_z,
        pass: max_z <= k,
    })
}

/// Splits one report's replicas into a first and second half and compares
/// the two half-means. Needs at least two replicas per half.
pub fn half_split_agreement(report: &LyapunovReport, k: f64) -> Option<ReplicaAgreement> {
    let half = report.replica_spectra.len() / 2;
    if half < 2 {
        return None;
    }
    let (m1, s1) = mean_and_se(&report.replica_spectra[..half]);
    let (m2, s2) = mean_and_se(&report.replica_spectra[half..]);
    let (s1, s2) = (s1?, s2?);
    let max_z = (0..m1.len())
        .map(|i| (m1[i] - m2[i]).abs() / (s1[i].powi(2) + s2[i].powi(2)).sqrt().max(1e-300))
        .fold(0.0, f64::max);
    Some(ReplicaAgreement {
        max_z,
        pass: max_z <= k,
    })
}
