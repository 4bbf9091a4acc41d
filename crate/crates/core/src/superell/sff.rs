use std::sync::Arc;

use num_traits::Zero;
use serde::Serialize;

use super::curve::CurveSpec;
use super::differential::{MonomialDifferential, Pauli};
use super::SuperellError;
use crate::exact::{int, rank, Rational, RationalMatrix};

pub const UNIT_AREA_NOTE: &str = "unit-area convention: the pairing of a constant c is c·area = c";

#[derive(Clone, Debug, Serialize)]
pub struct SffMatrix {
    pub labels: Vec<String>,
    pub sections: Vec<MonomialDifferential>,
    pub matrix: RationalMatrix,
    pub rank: usize,
    pub normalization: &'static str,
}

impl SffMatrix {
    pub fn is_symmetric(&self) -> bool {
        self.matrix == self.matrix.transpose()
    }

    /// Zero whenever the two sections carry different Pauli coefficients.
    pub fn is_block_diagonal(&self) -> bool {
        let n = self.sections.len();
        (0..n).all(|i| {
            (0..n).all(|j| {
                self.sections[i].pauli() == self.sections[j].pauli()
                    || self.matrix.get(i, j).is_zero()
            })
        })
    }
}

/// `(i/2)∫ f |ω|²` for a function `f` (no `dz`), under the unit-area normalisation.
/// Zero when the reduced `f` has nontrivial character under `w ↦ ζw`;
/// `c` when it reduces to the constant `c`.
pub fn pairing_integral(f: &MonomialDifferential) -> Result<Rational, SuperellError> {
    let r = f.reduce_by_relation();
    if r.dz_power() != 0 || !r.is_single_valued() {
        return Err(SuperellError::Indeterminate(f.to_string()));
    }
    if r.w_power() != 0 {
        return Ok(int(0));
    }
    if r.halves().iter().all(|h| *h == 0) {
        return Ok(r.scalar().clone());
    }
    Err(SuperellError::Indeterminate(f.to_string()))
}

/// `b(u, u′) = −½ tr(uu′)`: orthonormal on `u1, u2, u3`; the trivial coefficient pairs with itself.
fn pauli_form(a: Option<Pauli>, b: Option<Pauli>) -> Rational {
    int(i64::from(a == b))
}

/// Matrix of `(η₁⊗u, η₂⊗u′) ↦ b(u, u′) · I(η₁η₂/ω²)`.
pub fn second_fundamental_form(
    sections: &[MonomialDifferential],
    omega: &MonomialDifferential,
) -> Result<SffMatrix, SuperellError> {
    let n = sections.len();
    let omega2 = omega.multiply(omega)?;
    let mut data = Vec::with_capacity(n * n);
    for a in sections {
        for b in sections {
            let b_uu = pauli_form(a.pauli(), b.pauli());
            data.push(if b_uu.is_zero() {
                b_uu
            } else {
                &b_uu * &pairing_integral(&a.multiply(b)?.divide(&omega2)?)?
            });
        }
    }
    let matrix = RationalMatrix::new(n, n, data).expect("square");
    Ok(SffMatrix {
        labels: sections.iter().map(|s| s.to_string()).collect(),
        sections: sections.to_vec(),
        rank: rank(&matrix),
        matrix,
        normalization: UNIT_AREA_NOTE,
    })
}

/// `ω = (z−z4) dz/w³`.
pub fn plat_omega() -> MonomialDifferential {
    MonomialDifferential::from_halves(Arc::new(CurveSpec::plat()), vec![0, 0, 0, 2], 3, 1)
}

/// `ω = dx/y²`.
pub fn ew_omega() -> MonomialDifferential {
    MonomialDifferential::from_halves(Arc::new(CurveSpec::ew()), vec![0, 0, 0], 2, 1)
}

/// For each `i ∈ {1,2,3}` (coefficient `uᵢ`):
/// `(z−zᵢ)^½(z−z4)^{3/2}dz/w⁴`, `(z−zᵢ)^½(z−z4)^{5/2}dz/w⁵`, `(z−zⱼ)^½(z−zₖ)^½(z−z4)²dz/w⁵`.
pub fn plat_twisted_basis() -> Vec<MonomialDifferential> {
    let c = Arc::new(CurveSpec::plat());
    let mut out = Vec::new();
    for (i, u) in [Pauli::U1, Pauli::U2, Pauli::U3].into_iter().enumerate() {
        let single = |a4: i64| {
            let mut h = vec![0, 0, 0, a4];
            h[i] = 1;
            h
        };
        let mut pair = vec![1, 1, 1, 4];
        pair[i] = 0;
        out.push(MonomialDifferential::from_halves(c.clone(), single(3), 4, 1).with_pauli(u));
        out.push(MonomialDifferential::from_halves(c.clone(), single(5), 5, 1).with_pauli(u));
        out.push(MonomialDifferential::from_halves(c.clone(), pair, 5, 1).with_pauli(u));
    }
    out
}

/// `√x, √((x−1)(x−λ))` on `𝐢`; `√(x−1), √(x(x−λ))` on `𝐣`; `√(x−λ), √(x(x−1))` on `𝐤`; each times `dx/y³`.
pub fn ew_twisted_basis() -> Vec<MonomialDifferential> {
    let c = Arc::new(CurveSpec::ew());
    let axes = [(0, Pauli::U3), (1, Pauli::U1), (2, Pauli::U2)];
    let mut out = Vec::new();
    for (x1, u) in axes {
        let mut single = vec![0, 0, 0];
        single[x1] = 1;
        let pair: Vec<i64> = single.iter().map(|h| 1 - h).collect();
        out.push(MonomialDifferential::from_halves(c.clone(), single, 3, 1).with_pauli(u));
        out.push(MonomialDifferential::from_halves(c.clone(), pair, 3, 1).with_pauli(u));
    }
    out
}

/// SFF of a named surface (`plat` or `ew`).
pub fn surface_sff(name: &str) -> Result<SffMatrix, SuperellError> {
    match name {
        "plat" => second_fundamental_form(&plat_twisted_basis(), &plat_omega()),
        "ew" => second_fundamental_form(&ew_twisted_basis(), &ew_omega()),
        _ => Err(SuperellError::UnknownSurface(name.to_string())),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn plat_blocks() {
        let s = surface_sff("plat").unwrap();
        let block = [[0, 0, 1], [0, 0, 0], [1, 0, 0]];
        for i in 0..9 {
            for j in 0..9 {
                let want = if i / 3 == j / 3 {
                    block[i % 3][j % 3]
                } else {
                    0
                };
                assert_eq!(*s.matrix.get(i, j), int(want), "({i},{j})");
            }
        }
        assert_eq!(s.rank, 6);
        assert!(s.is_symmetric() && s.is_block_diagonal());
    }

    #[test]
    fn ew_pairs() {
        let s = surface_sff("ew").unwrap();
        for i in 0..6 {
            for j in 0..6 {
                let want = i64::from(i / 2 == j / 2 && i != j);
                assert_eq!(*s.matrix.get(i, j), int(want));
            }
        }
        assert_eq!(s.rank, 6);
    }

    #[test]
    fn omega_squared_has_unit_area() {
        let w = plat_omega();
        let f = w
            .multiply(&w)
            .unwrap()
            .divide(&w.multiply(&w).unwrap())
            .unwrap();
        assert_eq!(pairing_integral(&f).unwrap(), int(1));
        let s = second_fundamental_form(&[w.clone()], &w).unwrap();
        assert_eq!(*s.matrix.get(0, 0), int(1));
    }

    #[test]
    fn nontrivial_character_pairs_to_zero() {
        let t = &plat_twisted_basis()[0];
        let f = t
            .multiply(t)
            .unwrap()
            .divide(&plat_omega().multiply(&plat_omega()).unwrap())
            .unwrap();
        assert_eq!(f.reduce_by_relation().w_power(), 2);
        assert_eq!(pairing_integral(&f).unwrap(), int(0));
    }

    #[test]
    fn non_constant_invariant_function_is_indeterminate() {
        let f =
            MonomialDifferential::from_halves(Arc::new(CurveSpec::plat()), vec![2, 0, 0, 0], 0, 0);
        assert!(matches!(
            pairing_integral(&f),
            Err(SuperellError::Indeterminate(_))
        ));
        assert!(matches!(
            surface_sff("torus"),
            Err(SuperellError::UnknownSurface(_))
        ));
    }
}
