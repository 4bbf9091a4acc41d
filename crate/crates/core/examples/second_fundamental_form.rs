//! Second fundamental form on the twisted sections of both surfaces.

use charvar::superell::surface_sff;

fn main() {
    for name in ["plat", "ew"] {
        let s = surface_sff(name).unwrap();
        println!("{name}: rank {} of {}", s.rank, s.sections.len());
        for (label, i) in s.labels.iter().zip(0..) {
            let row: Vec<String> = (0..s.sections.len())
                .map(|j| s.matrix.get(i, j).to_string())
                .collect();
            println!("  {:>3}  {label}", row.join(" "));
        }
    }
}
