//! Monodromy of a word in T², S² on the first invariant block, and its char poly.

use charvar::cohomology::{plat_block_monodromy, G1_WORD, H1_WORD};

fn main() {
    for word in [G1_WORD, H1_WORD] {
        let m = plat_block_monodromy(word, 0).unwrap();
        println!("{word}:\n{m}");
        println!("charpoly {}\n", m.charpoly().unwrap());
    }
}
