//! Irreducible BTet-characters of the square-tiled surface group, up to BOct conjugation.

use charvar::groups::builtin;
use charvar::quaternions::{
    boct, btet, check_fixed, classify_conjugacy, enumerate_homs, filter_irreducible, pushforward,
};

fn main() {
    let homs = enumerate_homs(&builtin::gamma6662(), &btet());
    let pushed = pushforward(&homs, &builtin::phi_plat()).unwrap();
    let irr = filter_irreducible(&pushed);
    let orbits = classify_conjugacy(&irr, &boct());
    println!(
        "{} homs, {} pushforwards, {} irreducible, {} orbits",
        homs.len(),
        pushed.len(),
        irr.len(),
        orbits.len()
    );
    for (i, o) in orbits.iter().enumerate() {
        let fixed = check_fixed(&o.representative, &builtin::t2_plat(), &btet())
            .unwrap()
            .fixed;
        let names: Vec<String> = o
            .representative
            .values()
            .iter()
            .map(|q| q.to_string())
            .collect();
        println!(
            "orbit {i} (size {}): {}  fixed by T²: {fixed}",
            o.size(),
            names.join(" ")
        );
    }
}
