use rand::distr::weighted::WeightedIndex;
use rand::distr::Distribution;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;
use serde::Serialize;

use super::walk::RandomWalkSpec;

/// Words are enumerated exactly while `#generators^n₀` stays at or below this.
const EXACT_WORD_LIMIT: usize = 4096;
const MONTE_CARLO_WORDS: usize = 4096;

/// Empirical estimate of `min_v (1/n₀) ∫ log‖g v‖ dν^(n₀)(g)`. Not a proof.
#[derive(Clone, Debug, Serialize)]
pub struct ProbeReport {
    pub c_hat: f64,
    pub minimizer: Vec<f64>,
    pub n0: usize,
    pub vectors: usize,
    pub words: usize,
    pub exact_enumeration: bool,
    pub empirical: bool,
}

/// Probes uniform expansion on the deterministic set `{eᵢ, (eᵢ ± eⱼ)/√2}` plus
/// `sample_count` normalised Gaussian vectors drawn from the spec's seed.
pub fn uniform_expansion_probe(
    spec: &RandomWalkSpec,
    n0: usize,
    sample_count: usize,
) -> ProbeReport {
    let n = spec.dimension;
    let mut rng = ChaCha8Rng::seed_from_u64(spec.seed);
    let vectors = probe_vectors(n, sample_count, &mut rng);
    let k = spec.generators.len();
    let exact = n0 > 0 && (k as f64).powi(n0 as i32) <= EXACT_WORD_LIMIT as f64;
    let mut acc = vec![0.0; vectors.len()];
    let mut words = 0;
    let mut add = |m: &[f64], w: f64| {
        for (a, v) in acc.iter_mut().zip(&vectors) {
            *a += w * apply(m, v, n)
                .iter()
                .map(|x| x * x)
                .sum::<f64>()
                .sqrt()
                .ln();
        }
    };
    let id: Vec<f64> = (0..n * n)
        .map(|x| f64::from(u8::from(x % (n + 1) == 0)))
        .collect();
    if exact {
        let mut stack = vec![(id, 1.0, 0usize)];
        while let Some((m, w, len)) = stack.pop() {
            if len == n0 {
                add(&m, w);
                words += 1;
                continue;
            }
            for (g, p) in spec.generators.iter().zip(&spec.weights) {
                stack.push((left_mul(g, &m, n), w * p, len + 1));
            }
        }
    } else {
        let pick = WeightedIndex::new(&spec.weights).expect("validated weights");
        for _ in 0..MONTE_CARLO_WORDS {
            let m = (0..n0).fold(id.clone(), |m, _| {
                left_mul(&spec.generators[pick.sample(&mut rng)], &m, n)
            });
            add(&m, 1.0 / MONTE_CARLO_WORDS as f64);
        }
        words = MONTE_CARLO_WORDS;
    }
    let (best, c) = acc
        .iter()
        .map(|a| a / n0.max(1) as f64)
        .enumerate()
        .min_by(|a, b| a.1.total_cmp(&b.1))
        .expect("at least one vector");
    ProbeReport {
        c_hat: c,
        minimizer: vectors[best].clone(),
        n0,
        vectors: vectors.len(),
        words,
        exact_enumeration: exact,
        empirical: true,
    }
}

fn probe_vectors(n: usize, random: usize, rng: &mut ChaCha8Rng) -> Vec<Vec<f64>> {
    let mut out = Vec::new();
    let r = std::f64::consts::FRAC_1_SQRT_2;
    for i in 0..n {
        let mut e = vec![0.0; n];
        e[i] = 1.0;
        out.push(e);
        for j in i + 1..n {
            for s in [1.0, -1.0] {
                let mut v = vec![0.0; n];
                v[i] = r;
                v[j] = s * r;
                out.push(v);
            }
        }
    }
    for _ in 0..random {
        let v: Vec<f64> = (0..n).map(|_| rng.sample(StandardNormal)).collect();
        let norm = v.iter().map(|x| x * x).sum::<f64>().sqrt();
        out.push(v.iter().map(|x| x / norm).collect());
    }
    out
}

fn apply(m: &[f64], v: &[f64], n: usize) -> Vec<f64> {
    (0..n)
        .map(|i| (0..n).map(|j| m[i * n + j] * v[j]).sum())
        .collect()
}

fn left_mul(g: &[f64], m: &[f64], n: usize) -> Vec<f64> {
    let mut out = vec![0.0; n * n];
    for i in 0..n {
        for k in 0..n {
            let x = g[i * n + k];
            if x != 0.0 {
                for j in 0..n {
                    out[i * n + j] += x * m[k * n + j];
                }
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn contracting_direction_is_found() {
        let w = RandomWalkSpec::uniform(vec![("D".into(), vec![vec![2.0, 0.0], vec![0.0, 0.5]])])
            .unwrap();
        let p = uniform_expansion_probe(&w, 1, 16);
        assert!((p.c_hat + 2f64.ln()).abs() < 1e-12);
        assert_eq!(p.minimizer, vec![0.0, 1.0]);
        assert!(p.exact_enumeration && p.empirical);
    }

    #[test]
    fn isometries_give_zero() {
        let (c, s) = (0.6, 0.8);
        let w = RandomWalkSpec::uniform(vec![
            ("R".into(), vec![vec![c, -s], vec![s, c]]),
            ("F".into(), vec![vec![1.0, 0.0], vec![0.0, -1.0]]),
        ])
        .unwrap();
        let p = uniform_expansion_probe(&w, 5, 32);
        assert!(p.c_hat.abs() < 1e-12);
    }

    #[test]
    fn monte_carlo_branch_runs() {
        let w = RandomWalkSpec::uniform(vec![
            ("A".into(), vec![vec![2.0, 1.0], vec![1.0, 1.0]]),
            ("B".into(), vec![vec![1.0, 1.0], vec![1.0, 2.0]]),
        ])
        .unwrap();
        let p = uniform_expansion_probe(&w, 13, 8);
        assert!(!p.exact_enumeration && p.words == MONTE_CARLO_WORDS && p.c_hat > 0.0);
    }
}
