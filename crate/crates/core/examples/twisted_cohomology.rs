//! Twisted cohomology H¹(Γ; su(2)_ad ρ) for the two built-in representations.

use charvar::cohomology::{axis_blocks, cohomology};
use charvar::quaternions::{rho0, rho_ew};

fn main() {
    for (name, rho) in [("rho0", rho0()), ("ew", rho_ew())] {
        let h = cohomology(&rho).unwrap();
        print!(
            "{name}: Z¹ {}, B¹ {}, H¹ {}",
            h.dim_z1(),
            h.dim_b1(),
            h.dim_h1()
        );
        match axis_blocks(&h) {
            Ok(b) => println!(
                ", axis blocks {:?}",
                b.iter().map(Vec::len).collect::<Vec<_>>()
            ),
            Err(_) => println!(),
        }
    }
}
