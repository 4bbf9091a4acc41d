use std::fmt;
use std::ops::{Mul, Neg};

use super::QuatError;
use crate::exact::{int, rat, QSqrt2, Rational};

/// Quaternion `q0 + q1·𝐢 + q2·𝐣 + q3·𝐤` with coefficients in Q(√2).
///
/// As a matrix in SU(2) this is `[[q0 + i·q1, −q3 + i·q2], [q3 + i·q2, q0 − i·q1]]`,
/// so `𝐢 = diag(i, −i)`, `𝐣 = [[0, i], [i, 0]]`, `𝐤 = [[0, −1], [1, 0]]`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct UnitQuaternion {
    q: [QSqrt2; 4],
}

impl UnitQuaternion {
    /// Builds a quaternion without checking the norm.
    pub fn from_coeffs(q0: QSqrt2, q1: QSqrt2, q2: QSqrt2, q3: QSqrt2) -> Self {
        UnitQuaternion {
            q: [q0, q1, q2, q3],
        }
    }

    pub fn try_new(q0: QSqrt2, q1: QSqrt2, q2: QSqrt2, q3: QSqrt2) -> Result<Self, QuatError> {
        let q = Self::from_coeffs(q0, q1, q2, q3);
        if q.norm_squared() != QSqrt2::one() {
            return Err(QuatError::NotUnit(q.to_string()));
        }
        Ok(q)
    }

    /// Rational coefficients `(n0, n1, n2, n3) / den`.
    pub fn from_rationals(q: [Rational; 4]) -> Result<Self, QuatError> {
        let [a, b, c, d] = q.map(QSqrt2::from_rational);
        Self::try_new(a, b, c, d)
    }

    fn from_ints(q: [i64; 4], den: i64) -> Self {
        let [a, b, c, d] = q.map(|x| QSqrt2::from_rational(rat(x, den)));
        Self::from_coeffs(a, b, c, d)
    }

    /// SU(2) matrix `[[α, β], [−β̄, ᾱ]]` from the real and imaginary parts of α and β.
    pub fn from_su2(alpha: (QSqrt2, QSqrt2), beta: (QSqrt2, QSqrt2)) -> Result<Self, QuatError> {
        let (q0, q1) = alpha;
        let (br, bi) = beta;
        Self::try_new(q0, q1, bi, -br)
    }

    /// Entries `(α, β)` of the SU(2) matrix as (real, imaginary) pairs.
    pub fn to_su2(&self) -> ((QSqrt2, QSqrt2), (QSqrt2, QSqrt2)) {
        let [q0, q1, q2, q3] = &self.q;
        ((q0.clone(), q1.clone()), (-q3, q2.clone()))
    }

    pub fn one() -> Self {
        Self::from_ints([1, 0, 0, 0], 1)
    }

    pub fn minus_one() -> Self {
        Self::from_ints([-1, 0, 0, 0], 1)
    }

    pub fn i() -> Self {
        Self::from_ints([0, 1, 0, 0], 1)
    }

    pub fn j() -> Self {
        Self::from_ints([0, 0, 1, 0], 1)
    }

    pub fn k() -> Self {
        Self::from_ints([0, 0, 0, 1], 1)
    }

    /// `t = ½[[1+i, 1−i], [−1−i, 1−i]]`, an element of order 6 in BTet.
    pub fn t() -> Self {
        Self::from_ints([1, 1, -1, -1], 2)
    }

    /// `s = ½[[1+i, 1+i], [−1+i, 1−i]]`.
    pub fn s() -> Self {
        Self::from_ints([1, 1, 1, -1], 2)
    }

    /// `A = −t`, the element of order 3 mapping to [[1,1],[0,1]] in SL(2, F₃).
    #[allow(non_snake_case)]
    pub fn A() -> Self {
        -&Self::t()
    }

    /// `B = −s`, mapping to [[1,0],[1,1]] in SL(2, F₃).
    #[allow(non_snake_case)]
    pub fn B() -> Self {
        -&Self::s()
    }

    /// `c₈ = diag((1+i)/√2, (1−i)/√2) = (1 + 𝐢)/√2`.
    pub fn c8() -> Self {
        let h = QSqrt2::new(int(0), rat(1, 2));
        Self::from_coeffs(h.clone(), h, QSqrt2::zero(), QSqrt2::zero())
    }

    pub fn coeffs(&self) -> &[QSqrt2; 4] {
        &self.q
    }

    pub fn norm_squared(&self) -> QSqrt2 {
        self.q
            .iter()
            .fold(QSqrt2::zero(), |acc, x| &acc + &x.square())
    }

    pub fn is_rational(&self) -> bool {
        self.q.iter().all(QSqrt2::is_rational)
    }

    pub fn is_one(&self) -> bool {
        *self == Self::one()
    }

    /// ±1, the centre of SU(2).
    pub fn is_central(&self) -> bool {
        self.q[1].is_zero() && self.q[2].is_zero() && self.q[3].is_zero()
    }

    /// Inverse of a unit quaternion (its conjugate).
    pub fn inverse(&self) -> Self {
        let [q0, q1, q2, q3] = &self.q;
        Self::from_coeffs(q0.clone(), -q1, -q2, -q3)
    }

    pub fn pow(&self, e: i64) -> Self {
        let base = if e < 0 { self.inverse() } else { self.clone() };
        (0..e.unsigned_abs()).fold(Self::one(), |acc, _| &acc * &base)
    }

    pub fn conjugate_by(&self, h: &UnitQuaternion) -> Self {
        &(h * self) * &h.inverse()
    }

    pub fn commutes_with(&self, o: &UnitQuaternion) -> bool {
        self * o == o * self
    }

    /// Multiplicative order (searched up to 120).
    pub fn order(&self) -> Option<u32> {
        let mut x = self.clone();
        for n in 1..=120 {
            if x.is_one() {
                return Some(n);
            }
            x = &x * self;
        }
        None
    }

    /// Coefficients as floats.
    pub fn to_f64(&self) -> [f64; 4] {
        [
            self.q[0].to_f64(),
            self.q[1].to_f64(),
            self.q[2].to_f64(),
            self.q[3].to_f64(),
        ]
    }

    /// Compact symbolic name for elements of the quaternion group Q.
    pub fn pauli_name(&self) -> Option<&'static str> {
        Q_NAMES
            .iter()
            .find(|(_, c)| *self == Self::from_ints(*c, 1))
            .map(|(n, _)| *n)
    }

    /// Inverse of [`pauli_name`](Self::pauli_name): `"1"`, `"-i"`, `"k"`, ...
    pub fn from_pauli_name(name: &str) -> Option<Self> {
        Q_NAMES
            .iter()
            .find(|(n, _)| *n == name.trim())
            .map(|(_, c)| Self::from_ints(*c, 1))
    }

    /// The four coefficients as `a+b*sqrt2` strings.
    pub fn to_strings(&self) -> [String; 4] {
        self.q.clone().map(|x| x.to_string())
    }
}

const Q_NAMES: [(&str, [i64; 4]); 8] = [
    ("1", [1, 0, 0, 0]),
    ("-1", [-1, 0, 0, 0]),
    ("i", [0, 1, 0, 0]),
    ("-i", [0, -1, 0, 0]),
    ("j", [0, 0, 1, 0]),
    ("-j", [0, 0, -1, 0]),
    ("k", [0, 0, 0, 1]),
    ("-k", [0, 0, 0, -1]),
];

impl fmt::Display for UnitQuaternion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some(n) = self.pauli_name() {
            return write!(f, "{n}");
        }
        let [a, b, c, d] = self.to_strings();
        write!(f, "({a}, {b}, {c}, {d})")
    }
}

impl fmt::Debug for UnitQuaternion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl Mul for &UnitQuaternion {
    type Output = UnitQuaternion;
    fn mul(self, o: &UnitQuaternion) -> UnitQuaternion {
        let [a0, a1, a2, a3] = &self.q;
        let [b0, b1, b2, b3] = &o.q;
        let p = |x: &QSqrt2, y: &QSqrt2| x * y;
        let r0 = &(&p(a0, b0) - &p(a1, b1)) - &(&p(a2, b2) + &p(a3, b3));
        let r1 = &(&p(a0, b1) + &p(a1, b0)) + &(&p(a2, b3) - &p(a3, b2));
        let r2 = &(&p(a0, b2) - &p(a1, b3)) + &(&p(a2, b0) + &p(a3, b1));
        let r3 = &(&p(a0, b3) + &p(a1, b2)) + &(&p(a3, b0) - &p(a2, b1));
        UnitQuaternion {
            q: [r0, r1, r2, r3],
        }
    }
}

impl Mul for UnitQuaternion {
    type Output = UnitQuaternion;
    fn mul(self, o: UnitQuaternion) -> UnitQuaternion {
        &self * &o
    }
}

impl Neg for &UnitQuaternion {
    type Output = UnitQuaternion;
    fn neg(self) -> UnitQuaternion {
        UnitQuaternion {
            q: self.q.clone().map(|x| -x),
        }
    }
}

impl Neg for UnitQuaternion {
    type Output = UnitQuaternion;
    fn neg(self) -> UnitQuaternion {
        -&self
    }
}
