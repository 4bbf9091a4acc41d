//! Genus, holomorphic and quadratic differentials of a superelliptic curve.
//!
//! `cargo run --example curve_invariants -- "N=6; k=1,1,1,3"`

use charvar::superell::{genus, holomorphic_basis, quadratic_basis, CurveSpec};

fn main() {
    let spec = std::env::args()
        .nth(1)
        .unwrap_or_else(|| "N=4; k=1,1,1,1".into());
    let c = CurveSpec::parse(&spec).unwrap();
    println!("{spec}: genus {}", genus(&c));
    for w in holomorphic_basis(&c).unwrap() {
        println!("  ω  {w}");
    }
    println!(
        "{} quadratic differentials",
        quadratic_basis(&c).unwrap().len()
    );
}
