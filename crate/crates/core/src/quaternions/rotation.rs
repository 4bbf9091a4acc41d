use std::fmt;
use std::ops::Mul;

use super::{QuatError, UnitQuaternion};
use crate::exact::{QSqrt2, RationalMatrix};

/// 3×3 rotation in the basis `u₁ = 𝐣, u₂ = 𝐤, u₃ = 𝐢` of su(2).
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RotationMatrix {
    m: [[QSqrt2; 3]; 3],
}

/// Index of the quaternion coefficient carrying coordinate `u_{m+1}`.
const AXIS_COEFF: [usize; 3] = [2, 3, 1];

impl RotationMatrix {
    pub fn identity() -> Self {
        let z = QSqrt2::zero;
        let o = QSqrt2::one;
        RotationMatrix {
            m: [[o(), z(), z()], [z(), o(), z()], [z(), z(), o()]],
        }
    }

    pub fn entry(&self, i: usize, j: usize) -> &QSqrt2 {
        &self.m[i][j]
    }

    pub fn transpose(&self) -> Self {
        let m = std::array::from_fn(|i| std::array::from_fn(|j| self.m[j][i].clone()));
        RotationMatrix { m }
    }

    pub fn det(&self) -> QSqrt2 {
        let m = &self.m;
        let minor = |a: usize, b: usize, c: usize, d: usize| {
            &(&m[1][a] * &m[2][b]) - &(&m[1][c] * &m[2][d])
        };
        let t0 = &m[0][0] * &minor(1, 2, 2, 1);
        let t1 = &m[0][1] * &minor(0, 2, 2, 0);
        let t2 = &m[0][2] * &minor(0, 1, 1, 0);
        &(&t0 - &t1) + &t2
    }

    pub fn is_orthogonal(&self) -> bool {
        &self.transpose() * self == Self::identity()
    }

    /// Exact rational matrix, if no entry involves √2.
    pub fn to_rational(&self) -> Option<RationalMatrix> {
        let mut data = Vec::with_capacity(9);
        for row in &self.m {
            for x in row {
                data.push(x.as_rational()?.clone());
            }
        }
        RationalMatrix::new(3, 3, data).ok()
    }

    pub fn apply(&self, v: &[QSqrt2; 3]) -> [QSqrt2; 3] {
        std::array::from_fn(|i| {
            (0..3).fold(QSqrt2::zero(), |acc, j| &acc + &(&self.m[i][j] * &v[j]))
        })
    }
}

impl Mul for &RotationMatrix {
    type Output = RotationMatrix;
    fn mul(self, o: &RotationMatrix) -> RotationMatrix {
        let m = std::array::from_fn(|i| {
            std::array::from_fn(|j| {
                (0..3).fold(QSqrt2::zero(), |acc, k| {
                    &acc + &(&self.m[i][k] * &o.m[k][j])
                })
            })
        });
        RotationMatrix { m }
    }
}

impl fmt::Debug for RotationMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for row in &self.m {
            writeln!(f, "[{}, {}, {}]", row[0], row[1], row[2])?;
        }
        Ok(())
    }
}

/// The Pauli direction `u_{axis+1}` as a pure quaternion.
pub fn pauli(axis: usize) -> UnitQuaternion {
    [
        UnitQuaternion::j(),
        UnitQuaternion::k(),
        UnitQuaternion::i(),
    ][axis]
        .clone()
}

/// Adjoint action `x ↦ q x q⁻¹` on su(2).
pub fn ad(q: &UnitQuaternion) -> Result<RotationMatrix, QuatError> {
    if q.norm_squared() != QSqrt2::one() {
        return Err(QuatError::NotUnit(q.to_string()));
    }
    let qi = q.inverse();
    let mut m: [[QSqrt2; 3]; 3] = Default::default();
    for (col, row_src) in (0..3).map(|c| (c, &(q * &pauli(c)) * &qi)) {
        for (row, &coeff) in AXIS_COEFF.iter().enumerate() {
            m[row][col] = row_src.coeffs()[coeff].clone();
        }
    }
    Ok(RotationMatrix { m })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn images(r: &RotationMatrix) -> Vec<(usize, i64)> {
        (0..3)
            .map(|c| {
                let row = (0..3).find(|&i| !r.entry(i, c).is_zero()).unwrap();
                (row, r.entry(row, c).signum() as i64)
            })
            .collect()
    }

    #[test]
    fn ad_of_central_is_identity() {
        assert_eq!(
            ad(&UnitQuaternion::one()).unwrap(),
            RotationMatrix::identity()
        );
        assert_eq!(
            ad(&UnitQuaternion::minus_one()).unwrap(),
            RotationMatrix::identity()
        );
    }

    #[test]
    fn ad_a_and_ad_b_tables() {
        // Ad_A: u1 -> u2, u2 -> -u3, u3 -> -u1
        assert_eq!(
            images(&ad(&UnitQuaternion::A()).unwrap()),
            vec![(1, 1), (2, -1), (0, -1)]
        );
        // Ad_B: u1 -> u3, u2 -> -u1, u3 -> -u2
        assert_eq!(
            images(&ad(&UnitQuaternion::B()).unwrap()),
            vec![(2, 1), (0, -1), (1, -1)]
        );
    }

    #[test]
    fn ad_of_c8_is_rational_rotation() {
        let r = ad(&UnitQuaternion::c8()).unwrap();
        assert!(r.is_orthogonal());
        assert_eq!(r.det(), QSqrt2::one());
        assert!(r.to_rational().is_some());
    }
}
