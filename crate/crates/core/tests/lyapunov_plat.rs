use charvar::cohomology::{plat_block_monodromy, G1_WORD, H1_WORD};
use charvar::lyapunov::{
    plat_walk, replica_agreement, spectrum, symmetry_check, uniform_expansion_probe, RandomWalkSpec,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

#[test]
fn plat_spectrum_has_nine_positive_exponents() {
    let spec = plat_walk()
        .unwrap()
        .with_steps(1_000_000)
        .with_seed(7)
        .with_replicas(4);
    let r = spectrum(&spec).unwrap();
    assert_eq!(r.dimension(), 18);
    assert_eq!(r.positive_count, 9);
    assert!(r.spectrum.iter().all(|x| x.is_finite()));
    assert!(symmetry_check(&r.spectrum, 1e-2).unwrap().pass);
    assert!(r.mean_log_det.abs() < 1e-9);
    assert!((r.sum() - r.mean_log_det).abs() < 1e-3);
}

#[test]
fn disjoint_replicas_agree() {
    let base = plat_walk().unwrap().with_steps(200_000).with_replicas(8);
    let a = spectrum(&base.clone().with_seed(0)).unwrap();
    let b = spectrum(&base.with_seed(1000)).unwrap();
    let agree = replica_agreement(&a, &b, 3.0).unwrap();
    assert!(agree.pass, "max z = {}", agree.max_z);
}

#[test]
fn same_seed_is_bitwise_reproducible() {
    let spec = plat_walk()
        .unwrap()
        .with_steps(20_000)
        .with_seed(3)
        .with_replicas(3);
    let a = spectrum(&spec).unwrap();
    let b = spectrum(&spec).unwrap();
    assert!(a.same_estimates(&b));
    let c = spectrum(&spec.with_seed(4)).unwrap();
    assert!(!a.same_estimates(&c));
}

#[test]
fn spectrum_is_conjugation_invariant() {
    let spec = plat_walk()
        .unwrap()
        .with_steps(200_000)
        .with_seed(11)
        .with_replicas(4);
    let n = spec.dimension;
    let mut rng = ChaCha8Rng::seed_from_u64(99);
    // unipotent upper triangular, so the inverse is available by back substitution
    let mut c = vec![0.0; n * n];
    for i in 0..n {
        c[i * n + i] = 1.0;
        for j in i + 1..n {
            c[i * n + j] = rng.random_range(-1.0..1.0);
        }
    }
    let mut c_inv = vec![0.0; n * n];
    for col in 0..n {
        for i in (0..n).rev() {
            let rhs = f64::from(u8::from(i == col));
            let s: f64 = (i + 1..n).map(|k| c[i * n + k] * c_inv[k * n + col]).sum();
            c_inv[i * n + col] = rhs - s;
        }
    }
    let a = spectrum(&spec).unwrap();
    let b = spectrum(&spec.conjugated(&c, &c_inv)).unwrap();
    let se = a.std_errors.as_ref().unwrap();
    for i in 0..n {
        assert!(
            (a.spectrum[i] - b.spectrum[i]).abs() <= 2.0 * se[i],
            "exponent {i}"
        );
    }
}

#[test]
fn u1_block_walk_expands() {
    let g1 = plat_block_monodromy(G1_WORD, 0).unwrap();
    let h1 = plat_block_monodromy(H1_WORD, 0).unwrap();
    let spec = RandomWalkSpec::from_exact(&[("g1", &g1), ("h1", &h1)], false).unwrap();
    let p = uniform_expansion_probe(&spec, 8, 256);
    assert!(p.exact_enumeration && p.empirical);
    assert!(p.c_hat > 0.0, "c_hat = {}", p.c_hat);
}
