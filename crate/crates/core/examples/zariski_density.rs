//! Certifies that g₁, h₁ generate a Zariski-dense subgroup of Sp(6).

use charvar::cohomology::{plat_block_monodromy, G1_WORD, H1_WORD};
use charvar::zariski::{
    delta31, density_certificate, discriminant, factor_degrees, trace_polynomial,
};

fn main() {
    let g = plat_block_monodromy(G1_WORD, 0).unwrap();
    let h = plat_block_monodromy(H1_WORD, 0).unwrap();
    let p = g.charpoly().unwrap().to_int().unwrap();
    let q = trace_polynomial(&p, 2).unwrap();
    println!("P = {p}");
    println!(
        "Q = {q}, Disc {}, Δ₃,₁ {}",
        discriminant(&q).unwrap(),
        delta31(&q)
    );
    println!(
        "P mod 53 factors into degrees {:?}",
        factor_degrees(&p, 53).unwrap()
    );
    let cert = density_certificate(&g, &h).unwrap();
    println!(
        "eigenplane rank {:?}, verdict {:?}",
        cert.eigenplane_rank, cert.verdict
    );
}
