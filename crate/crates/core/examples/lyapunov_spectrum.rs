//! Lyapunov spectrum of the random walk on T², S² and inverses.
//!
//! `cargo run --release --example lyapunov_spectrum -- 1000000 8`

use charvar::lyapunov::{half_split_agreement, plat_walk, spectrum, symmetry_check};

fn main() {
    let mut args = std::env::args().skip(1).map(|a| a.parse::<u64>().unwrap());
    let steps = args.next().unwrap_or(50_000);
    let replicas = args.next().unwrap_or(4) as usize;
    let spec = plat_walk()
        .unwrap()
        .with_steps(steps)
        .with_replicas(replicas)
        .with_seed(0);
    let r = spectrum(&spec).unwrap();
    for (i, x) in r.spectrum.iter().enumerate() {
        let se = r.std_errors.as_ref().map_or(0.0, |s| s[i]);
        println!("λ{:<2} {x:+.5} ± {se:.5}", i + 1);
    }
    let sym = symmetry_check(&r.spectrum, 1e-2).unwrap();
    println!(
        "positive {}, symmetry defect {:.2e}",
        r.positive_count, sym.defect
    );
    if let Some(a) = half_split_agreement(&r, 3.0) {
        println!("half-split max z {:.2}", a.max_z);
    }
}
