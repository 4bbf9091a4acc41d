//! The quartic identity `U⁴ + V⁴ = −XZ(X² − Z²)` for
//! `U = (−iX + Z)/⁴√(−8i)` and `V = (X − iZ)/⁴√(8i)`, checked in `Q[ζ]/(ζ⁸ + 1)`.

use std::ops::{Add, Mul, Neg};

use num_traits::Zero;

use crate::exact::{int, Rational, RationalMatrix};

/// Element of `Q(ζ₁₆) = Q[ζ]/(ζ⁸ + 1)`, coefficients of `1, ζ, …, ζ⁷`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cyclo16(pub [Rational; 8]);

impl Cyclo16 {
    pub fn zero() -> Self {
        Cyclo16(std::array::from_fn(|_| int(0)))
    }

    pub fn from_int(c: i64) -> Self {
        let mut z = Self::zero();
        z.0[0] = int(c);
        z
    }

    /// `ζᵏ`, reduced with `ζ⁸ = −1`.
    pub fn zeta_pow(k: i64) -> Self {
        let k = k.rem_euclid(16) as usize;
        let mut z = Self::zero();
        z.0[k % 8] = int(if k < 8 { 1 } else { -1 });
        z
    }

    /// `i = ζ⁴`.
    pub fn i() -> Self {
        Self::zeta_pow(4)
    }

    /// `√2 = ζ² + ζ⁻²`.
    pub fn sqrt2() -> Self {
        &Self::zeta_pow(2) + &Self::zeta_pow(-2)
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(Zero::is_zero)
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Cyclo16(std::array::from_fn(|k| &self.0[k] * c))
    }

    /// Inverse, by solving `self · x = 1` in the power basis.
    pub fn inverse(&self) -> Option<Self> {
        let cols: Vec<Vec<Rational>> = (0..8)
            .map(|k| (self * &Self::zeta_pow(k as i64)).0.to_vec())
            .collect();
        let m = RationalMatrix::from_columns(&cols).ok()?;
        let x = m.solve(&Self::from_int(1).0)?;
        Some(Cyclo16(std::array::from_fn(|k| x[k].clone())))
    }
}

impl Add for &Cyclo16 {
    type Output = Cyclo16;
    fn add(self, o: &Cyclo16) -> Cyclo16 {
        Cyclo16(std::array::from_fn(|k| &self.0[k] + &o.0[k]))
    }
}

impl Neg for &Cyclo16 {
    type Output = Cyclo16;
    fn neg(self) -> Cyclo16 {
        Cyclo16(std::array::from_fn(|k| -&self.0[k]))
    }
}

impl Mul for &Cyclo16 {
    type Output = Cyclo16;
    fn mul(self, o: &Cyclo16) -> Cyclo16 {
        let mut out = Cyclo16::zero();
        for (a, x) in self.0.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (b, y) in o.0.iter().enumerate() {
                let p = x * y;
                if a + b < 8 {
                    out.0[a + b] += p;
                } else {
                    out.0[a + b - 8] -= p;
                }
            }
        }
        out
    }
}

/// Binary form `Σ cₖ XᵏZ^{d−k}`, stored by the power of `X`.
type BinaryForm = Vec<Cyclo16>;

fn form_mul(p: &BinaryForm, q: &BinaryForm) -> BinaryForm {
    let mut out = vec![Cyclo16::zero(); p.len() + q.len() - 1];
    for (i, a) in p.iter().enumerate() {
        for (j, b) in q.iter().enumerate() {
            out[i + j] = &out[i + j] + &(a * b);
        }
    }
    out
}

/// `L⁴ / r` for the linear form `L = zx·X + zz·Z` and a fourth-root radicand `r`.
fn fourth_power_over(zx: Cyclo16, zz: Cyclo16, radicand: &Cyclo16) -> Option<BinaryForm> {
    let l = vec![zz, zx];
    let l2 = form_mul(&l, &l);
    let inv = radicand.inverse()?;
    Some(form_mul(&l2, &l2).iter().map(|c| c * &inv).collect())
}

/// `U⁴ + V⁴` with `U = (−iX + Z)/⁴√ru` and `V = (X − iZ)/⁴√rv`.
pub fn quartic_sum(ru: &Cyclo16, rv: &Cyclo16) -> Option<Vec<Cyclo16>> {
    let i = Cyclo16::i();
    let u4 = fourth_power_over(-&i, Cyclo16::from_int(1), ru)?;
    let v4 = fourth_power_over(Cyclo16::from_int(1), -&i, rv)?;
    Some(u4.iter().zip(&v4).map(|(a, b)| a + b).collect())
}

/// Whether `U⁴ + V⁴ = −XZ(X² − Z²) = −X³Z + XZ³` coefficientwise.
pub fn fermat_identity_with(ru: &Cyclo16, rv: &Cyclo16) -> bool {
    let Some(sum) = quartic_sum(ru, rv) else {
        return false;
    };
    let rhs = [0, 1, 0, -1, 0].map(Cyclo16::from_int);
    sum.len() == rhs.len() && sum.iter().zip(&rhs).all(|(a, b)| a == b)
}

pub fn fermat_ew_identity() -> bool {
    let eight_i = Cyclo16::i().scale(&int(8));
    fermat_identity_with(&-&eight_i, &eight_i)
}
