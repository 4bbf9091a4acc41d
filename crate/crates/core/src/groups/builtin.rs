//! Presentations and substitutions used for the Platypus and
//! Eierlegende Wollmilchsau surfaces.

use super::{GroupError, Presentation, Substitution};

pub const PRESENTATION_NAMES: &[&str] = &[
    "plat",
    "sigma3",
    "torus2222",
    "sphere4444",
    "gamma6662",
    "gamma6662_alt",
];

pub const SUBSTITUTION_NAMES: &[&str] = &[
    "phi_plat",
    "t2_plat",
    "s2_plat",
    "sigma3_to_torus",
    "torus_to_sphere",
];

/// π₁ of the Platypus on the nine generators a..i.
pub const PLAT: &str = "
gens: a b c d e f g h i;
rels:
  DfEaBc;          # d = f e^-1 a b^-1 c
  ihgacfGIHDEB;    # ihgacf = bedhig
";

pub const SIGMA3: &str = "
gens: xi1 xi2 xi3 xi4 xi5 xi6;
rels:
  xi1 xi2 xi1^-1 xi2^-1 xi3 xi4 xi3^-1 xi4^-1 xi5 xi6 xi5^-1 xi6^-1;
";

pub const TORUS2222: &str = "
gens: mu1 mu2 alpha1 alpha2 alpha3 alpha4;
rels:
  alpha1^2; alpha2^2; alpha3^2; alpha4^2;
  mu1 mu2 mu1^-1 mu2^-1 alpha1 alpha2 alpha3 alpha4;
";

pub const SPHERE4444: &str = "
gens: eta1 eta2 eta3 eta4;
rels:
  eta1 eta2 eta3 eta4;
  eta1^4; eta2^4; eta3^4; eta4^4;
";

/// Orbifold group of the pillowcase with cone orders (6,6,6,2), product relator p1 p2 p3 p4.
pub const GAMMA6662: &str = "
gens: p1 p2 p3 p4;
rels:
  p1 p2 p3 p4;
  p1^6; p2^6; p3^6; p4^2;
";

/// Same group written with the product relator p1 p2 p4 p3.
pub const GAMMA6662_ALT: &str = "
gens: p1 p2 p3 p4;
rels:
  p1 p2 p4 p3;
  p1^6; p2^6; p3^6; p4^2;
";

pub const PHI_PLAT: &str = "
map:
  a -> p1 p2^-1;
  b -> p1^-1 p2;
  c -> p1^-1 p2^-1 p1^2;
  d -> p1^-3 p2 p1^2;
  e -> p1 p2 p1^-2;
  f -> p1^3 p2^-1 p1^-2;
  g -> p1^-2 p3^-3 p1^-1;
  h -> p1^-2 p3 p4 p3^2 p1^2;
  i -> p1^-2 p3^-1 p4 p3^-2 p1^2;
";

pub const T2_PLAT: &str = "
map:
  a -> c;
  b -> d;
  c -> f;
  d -> e;
  e -> b;
  f -> a;
  g -> d g a;
  h -> d h D;
  i -> d i D;
";

pub const S2_PLAT: &str = "
map:
  a -> E B i h g a B i g;
  b -> B i h i g F C i g;
  c -> B i h i g F D E B i h g a;
  d -> i g F E B i h g a;
  e -> E B i h g B i h i g F;
  f -> i g E B i h i g F;
  g -> B i h i g F C A G H I b e d i g F;
  h -> B i g B i h i g F C A G H I b e d h i g F D E B i h g a c f G I H I b;
  i -> B i h i g F C i g E B i h I b;
";

/// Three of the nine loops as words in a..i, from which the S² images of a..g follow.
pub const ZETA_PATHS: &[(&str, &str)] = &[
    ("zeta1' zeta2", "E B i h g"),
    ("zeta1' zeta1", "E B i h i g F"),
    ("zeta0' zeta1", "i g F"),
];

pub const SIGMA3_TO_TORUS: &str = "
map:
  xi1 -> alpha1 alpha2;
  xi2 -> alpha3 alpha2;
  xi3 -> alpha4 mu1 alpha4^-1;
  xi4 -> alpha4 mu2 alpha4^-1;
  xi5 -> mu1;
  xi6 -> mu2;
";

pub const TORUS_TO_SPHERE: &str = "
map:
  mu1 -> eta1 eta2;
  mu2 -> eta3 eta2;
  alpha1 -> eta3^2;
  alpha2 -> eta3^-1 eta2 eta3 eta3^-1 eta2 eta3;
  alpha3 -> eta3^-1 eta2 eta2 eta2^-1 eta3 eta3^-1 eta2 eta2 eta2^-1 eta3;
  alpha4 -> eta4^2;
";

pub fn presentation(name: &str) -> Result<Presentation, GroupError> {
    let text = match name {
        "plat" => PLAT,
        "sigma3" => SIGMA3,
        "torus2222" => TORUS2222,
        "sphere4444" => SPHERE4444,
        "gamma6662" => GAMMA6662,
        "gamma6662_alt" => GAMMA6662_ALT,
        _ => return Err(GroupError::UnknownBuiltin(name.to_string())),
    };
    Presentation::parse(text)
}

pub fn substitution(name: &str) -> Result<Substitution, GroupError> {
    let (text, src, dst) = match name {
        "phi_plat" => (PHI_PLAT, "plat", "gamma6662"),
        "t2_plat" => (T2_PLAT, "plat", "plat"),
        "s2_plat" => (S2_PLAT, "plat", "plat"),
        "sigma3_to_torus" => (SIGMA3_TO_TORUS, "sigma3", "torus2222"),
        "torus_to_sphere" => (TORUS_TO_SPHERE, "torus2222", "sphere4444"),
        _ => return Err(GroupError::UnknownBuiltin(name.to_string())),
    };
    Substitution::parse(text, &presentation(src)?, &presentation(dst)?)
}

/// A builtin dataset of either kind.
#[derive(Clone, Debug)]
pub enum Builtin {
    Presentation(Presentation),
    Substitution(Substitution),
}

pub fn builtin(name: &str) -> Result<Builtin, GroupError> {
    if PRESENTATION_NAMES.contains(&name) {
        presentation(name).map(Builtin::Presentation)
    } else {
        substitution(name).map(Builtin::Substitution)
    }
}

pub fn plat() -> Presentation {
    presentation("plat").expect("builtin plat parses")
}

pub fn sigma3() -> Presentation {
    presentation("sigma3").expect("builtin sigma3 parses")
}

pub fn gamma6662() -> Presentation {
    presentation("gamma6662").expect("builtin gamma6662 parses")
}

pub fn phi_plat() -> Substitution {
    substitution("phi_plat").expect("builtin phi_plat parses")
}

pub fn t2_plat() -> Substitution {
    substitution("t2_plat").expect("builtin t2_plat parses")
}

pub fn s2_plat() -> Substitution {
    substitution("s2_plat").expect("builtin s2_plat parses")
}

/// Substitution Σ₃ → S²(4,4,4,4) through the torus orbifold.
pub fn sigma3_to_sphere() -> Substitution {
    let a = substitution("sigma3_to_torus").expect("builtin parses");
    let b = substitution("torus_to_sphere").expect("builtin parses");
    Substitution::compose(&b, &a).expect("alphabets match")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groups::Word;

    #[test]
    fn all_builtins_parse() {
        for n in PRESENTATION_NAMES.iter().chain(SUBSTITUTION_NAMES) {
            builtin(n).unwrap_or_else(|e| panic!("{n}: {e}"));
        }
        assert!(matches!(
            builtin("nope"),
            Err(GroupError::UnknownBuiltin(_))
        ));
    }

    #[test]
    fn gamma_shape() {
        let g = gamma6662();
        assert_eq!((g.n_gens(), g.relators().len()), (4, 5));
    }

    #[test]
    fn plat_shape() {
        let p = plat();
        assert_eq!(p.gens().join(""), "abcdefghi");
        assert_eq!(p.relators().len(), 2);
    }

    #[test]
    fn phi_of_a() {
        let phi = phi_plat();
        assert_eq!(phi.target().fmt_word(phi.image(0)), "p1 p2^-1");
    }

    #[test]
    fn t2_on_letters() {
        let t = t2_plat();
        let p = plat();
        let got: Vec<String> = (0..6).map(|g| p.fmt_word(t.image(g))).collect();
        assert_eq!(got, ["c", "d", "f", "e", "b", "a"]);
        assert_eq!(p.fmt_word(t.image(6)), "dga");
    }

    #[test]
    fn sigma3_chain_on_xi5() {
        let s = sigma3_to_sphere();
        let w = s.apply(&Word::gen(4)).unwrap();
        assert_eq!(s.target().fmt_word(&w), "eta1 eta2");
    }
}

#[cfg(test)]
mod path_tests {
    use super::*;
    use crate::groups::Word;

    /// S² images of a..g and i rebuilt from the three loop words and the
    /// square relations between the σ and ζ sides.
    #[test]
    fn s2_table_matches_path_expansion() {
        let p = plat();
        let w = |s: &str| p.word(s).unwrap();
        let z12 = w(ZETA_PATHS[0].1);
        let z11 = w(ZETA_PATHS[1].1);
        let z01 = w(ZETA_PATHS[2].1);
        let (a, b, c, d, e, f) = (w("a"), w("b"), w("c"), w("d"), w("e"), w("f"));
        let z00 = d.inverse().mul(&z12).mul(&a);
        let z20 = e.mul(&z11).mul(&c.inverse());
        let z22 = b.inverse().mul(&z01).mul(&f);
        let cat = |ws: &[&Word]| ws.iter().fold(Word::identity(), |acc, x| acc.mul(x));
        let z2_0inv = z20.mul(&z00.inverse());
        let z1_2inv = z12.mul(&z22.inverse());
        let expected = [
            (0, cat(&[&z12, &a, &z22])),
            (1, cat(&[&z20, &b, &z22])),
            (2, cat(&[&z20, &c, &z00])),
            (3, cat(&[&z01, &d, &z00])),
            (4, cat(&[&z12, &e, &z11])),
            (5, cat(&[&z01, &f, &z11])),
            (6, cat(&[&z2_0inv, &z01])),
            (8, cat(&[&z20, &w("i g"), &z1_2inv])),
        ];
        let s2 = s2_plat();
        for (g, word) in expected {
            assert_eq!(s2.image(g), &word, "generator {}", p.name(g));
        }
        // h: the table routes ζ₂′A₁ζ₁ through ζ₀′
        let h_img = cat(&[&z22, &z2_0inv, &w("h"), &z01, &z2_0inv.inverse()]);
        assert_eq!(s2.image(7), &h_img);
    }
}
