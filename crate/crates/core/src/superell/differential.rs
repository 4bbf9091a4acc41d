use std::fmt;
use std::sync::Arc;

use num_rational::Rational64;
use num_traits::{One, Zero};
use serde::Serialize;

use super::curve::{CurveSpec, Place, PlaceId};
use super::SuperellError;
use crate::exact::{int, Rational};

/// Pauli coefficient of a twisted section, with `u1 = 𝐣`, `u2 = 𝐤`, `u3 = 𝐢`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Pauli {
    U1,
    U2,
    U3,
}

impl fmt::Display for Pauli {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Pauli::U1 => "u1",
            Pauli::U2 => "u2",
            Pauli::U3 => "u3",
        })
    }
}

/// `c · ∏ (z − zᵢ)^{aᵢ} · w^{−n} · dz^m (⊗ u)` with `aᵢ ∈ ½ℤ` and `n ∈ ℤ`.
#[derive(Clone, Debug)]
pub struct MonomialDifferential {
    curve: Arc<CurveSpec>,
    /// `2aᵢ`.
    halves: Vec<i64>,
    w_power: i64,
    dz_power: u32,
    pauli: Option<Pauli>,
    scalar: Rational,
}

impl MonomialDifferential {
    /// From doubled exponents `2aᵢ`.
    pub fn from_halves(
        curve: Arc<CurveSpec>,
        halves: Vec<i64>,
        w_power: i64,
        dz_power: u32,
    ) -> Self {
        assert_eq!(
            halves.len(),
            curve.n_branch(),
            "one exponent per branch point"
        );
        MonomialDifferential {
            curve,
            halves,
            w_power,
            dz_power,
            pauli: None,
            scalar: int(1),
        }
    }

    /// Checked constructor: exponents must lie in `½ℤ` and the w-exponent in `ℤ`.
    pub fn new(
        curve: Arc<CurveSpec>,
        exponents: &[Rational64],
        w_power: Rational64,
        dz_power: u32,
    ) -> Result<Self, SuperellError> {
        if exponents.len() != curve.n_branch() {
            return Err(SuperellError::InvalidCurve(format!(
                "{} exponents for {} branch points",
                exponents.len(),
                curve.n_branch()
            )));
        }
        if !w_power.is_integer() {
            return Err(SuperellError::HalfIntegralWPower(w_power.to_string()));
        }
        let halves = exponents
            .iter()
            .map(|a| {
                let h = a * 2;
                h.is_integer()
                    .then(|| h.to_integer())
                    .ok_or_else(|| SuperellError::BadExponent(a.to_string()))
            })
            .collect::<Result<Vec<_>, _>>()?;
        Ok(Self::from_halves(
            curve,
            halves,
            w_power.to_integer(),
            dz_power,
        ))
    }

    /// The constant function `c`.
    pub fn constant(curve: Arc<CurveSpec>, c: Rational) -> Self {
        let n = curve.n_branch();
        Self::from_halves(curve, vec![0; n], 0, 0).with_scalar(c)
    }

    pub fn with_pauli(mut self, u: Pauli) -> Self {
        self.pauli = Some(u);
        self
    }

    pub fn with_scalar(mut self, c: Rational) -> Self {
        self.scalar = c;
        self
    }

    pub fn curve(&self) -> &CurveSpec {
        &self.curve
    }

    pub fn curve_arc(&self) -> &Arc<CurveSpec> {
        &self.curve
    }

    pub fn exponent(&self, i: usize) -> Rational64 {
        Rational64::new(self.halves[i], 2)
    }

    pub fn halves(&self) -> &[i64] {
        &self.halves
    }

    pub fn w_power(&self) -> i64 {
        self.w_power
    }

    pub fn dz_power(&self) -> u32 {
        self.dz_power
    }

    pub fn pauli(&self) -> Option<Pauli> {
        self.pauli
    }

    pub fn scalar(&self) -> &Rational {
        &self.scalar
    }

    /// Order at each point above `place`.
    pub fn order_at(&self, place: PlaceId) -> Rational64 {
        let p = self.curve.place(place);
        let e = i64::from(p.ramification);
        let m = i64::from(self.dz_power);
        let n = self.w_power;
        match place {
            PlaceId::Branch(j) => self.exponent(j) * e - n * p.w_order + m * (e - 1),
            PlaceId::Infinity => {
                let sum: Rational64 = (0..self.halves.len()).map(|i| self.exponent(i)).sum();
                -sum * e - n * p.w_order - m * (e + 1)
            }
        }
    }

    /// Places with their point counts and orders.
    pub fn divisor(&self) -> Vec<(Place, Rational64)> {
        self.curve
            .places()
            .into_iter()
            .map(|p| (p.clone(), self.order_at(p.id)))
            .collect()
    }

    /// Total degree `Σ points · order`.
    pub fn degree(&self) -> Rational64 {
        self.divisor()
            .iter()
            .map(|(p, o)| o * i64::from(p.points))
            .sum()
    }

    pub fn is_holomorphic(&self) -> bool {
        self.divisor().iter().all(|(_, o)| *o >= Rational64::zero())
    }

    /// Doubled fractional parts `2aᵢ mod 2` of the reduced form.
    pub fn character(&self) -> Vec<u8> {
        self.reduce_by_relation()
            .halves
            .iter()
            .map(|h| h.rem_euclid(2) as u8)
            .collect()
    }

    /// All reduced exponents integral.
    pub fn is_single_valued(&self) -> bool {
        self.character().iter().all(|c| *c == 0)
    }

    pub fn multiply(
        &self,
        o: &MonomialDifferential,
    ) -> Result<MonomialDifferential, SuperellError> {
        if self.curve != o.curve {
            return Err(SuperellError::CurveMismatch);
        }
        Ok(MonomialDifferential {
            curve: self.curve.clone(),
            halves: self
                .halves
                .iter()
                .zip(&o.halves)
                .map(|(a, b)| a + b)
                .collect(),
            w_power: self.w_power + o.w_power,
            dz_power: self.dz_power + o.dz_power,
            pauli: None,
            scalar: &self.scalar * &o.scalar,
        })
    }

    /// `η · ω^{−k}` for the 1-form `ω`: divides exponents, w-power and the `dz` power.
    pub fn divide(&self, o: &MonomialDifferential) -> Result<MonomialDifferential, SuperellError> {
        if self.curve != o.curve {
            return Err(SuperellError::CurveMismatch);
        }
        if o.scalar.is_zero() || o.dz_power > self.dz_power {
            return Err(SuperellError::InvalidCurve(
                "division by a zero or higher-order differential".into(),
            ));
        }
        Ok(MonomialDifferential {
            curve: self.curve.clone(),
            halves: self
                .halves
                .iter()
                .zip(&o.halves)
                .map(|(a, b)| a - b)
                .collect(),
            w_power: self.w_power - o.w_power,
            dz_power: self.dz_power - o.dz_power,
            pauli: None,
            scalar: &self.scalar / &o.scalar,
        })
    }

    /// Canonical form. For even `N` the square root `w^{N/2} = ∏ (z − zᵢ)^{kᵢ/2}` is
    /// applied when it makes the half-integral pattern lexicographically smaller;
    /// then `w^N = ∏ (z − zᵢ)^{kᵢ}` brings the w-exponent into `0 ≤ n < N`.
    pub fn reduce_by_relation(&self) -> MonomialDifferential {
        let n = i64::from(self.curve.degree());
        let ks: Vec<i64> = self.curve.branch().iter().map(|b| i64::from(b.1)).collect();
        let mut halves = self.halves.clone();
        let mut w = self.w_power;
        if n % 2 == 0 {
            let parity: Vec<i64> = halves.iter().map(|h| h.rem_euclid(2)).collect();
            let alt: Vec<i64> = parity.iter().zip(&ks).map(|(p, k)| (p + k) % 2).collect();
            if alt < parity {
                for (h, k) in halves.iter_mut().zip(&ks) {
                    *h -= k;
                }
                w -= n / 2;
            }
        }
        let shift = w.div_euclid(n);
        for (h, k) in halves.iter_mut().zip(&ks) {
            *h -= 2 * k * shift;
        }
        w -= shift * n;
        MonomialDifferential {
            halves,
            w_power: w,
            ..self.clone()
        }
    }

    /// Same differential up to the curve relation, ignoring the Pauli coefficient.
    pub fn same_differential(&self, o: &MonomialDifferential) -> bool {
        let (a, b) = (self.reduce_by_relation(), o.reduce_by_relation());
        a.curve == b.curve
            && a.halves == b.halves
            && a.w_power == b.w_power
            && a.dz_power == b.dz_power
            && a.scalar == b.scalar
    }

    /// Reduced `(halves, w_power, dz_power)`.
    pub(crate) fn canonical_key(&self) -> (Vec<i64>, i64, u32) {
        let r = self.reduce_by_relation();
        (r.halves, r.w_power, r.dz_power)
    }
}

impl PartialEq for MonomialDifferential {
    /// Syntactic equality of the stored form.
    fn eq(&self, o: &Self) -> bool {
        self.curve == o.curve
            && self.halves == o.halves
            && self.w_power == o.w_power
            && self.dz_power == o.dz_power
            && self.pauli == o.pauli
            && self.scalar == o.scalar
    }
}

impl fmt::Display for MonomialDifferential {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let c = &self.curve;
        let mut parts: Vec<String> = Vec::new();
        if !self.scalar.is_one() {
            parts.push(self.scalar.to_string());
        }
        for (i, h) in self.halves.iter().enumerate() {
            let name = c.factor_name(i);
            match (h % 2 == 0, *h) {
                (_, 0) => {}
                (true, 2) => parts.push(name),
                (true, _) => parts.push(format!("{name}^{}", h / 2)),
                (false, _) => parts.push(format!("{name}^({h}/2)")),
            }
        }
        if self.w_power < 0 {
            parts.push(match -self.w_power {
                1 => c.w_name().to_string(),
                p => format!("{}^{p}", c.w_name()),
            });
        }
        let dz = match self.dz_power {
            0 => String::new(),
            1 => format!("d{}", c.z_name()),
            m => format!("d{}^{m}", c.z_name()),
        };
        let mut s = parts.join(" ");
        if !dz.is_empty() {
            s = if s.is_empty() {
                dz
            } else {
                format!("{s} {dz}")
            };
        }
        if s.is_empty() {
            s = "1".into();
        }
        match self.w_power {
            p if p > 0 => write!(f, "{s}/{}^{p}", c.w_name())?,
            _ => write!(f, "{s}")?,
        }
        if let Some(u) = self.pauli {
            write!(f, " ⊗ {u}")?;
        }
        Ok(())
    }
}

impl Serialize for MonomialDifferential {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut st = s.serialize_struct("MonomialDifferential", 6)?;
        let exps: Vec<String> = (0..self.halves.len())
            .map(|i| self.exponent(i).to_string())
            .collect();
        st.serialize_field("label", &self.to_string())?;
        st.serialize_field("exponents", &exps)?;
        st.serialize_field("w_power", &self.w_power)?;
        st.serialize_field("dz_power", &self.dz_power)?;
        st.serialize_field("pauli", &self.pauli)?;
        st.serialize_field("scalar", &self.scalar.to_string())?;
        st.end()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::superell::genus;

    fn plat() -> Arc<CurveSpec> {
        Arc::new(CurveSpec::plat())
    }

    fn ew() -> Arc<CurveSpec> {
        Arc::new(CurveSpec::ew())
    }

    fn r(n: i64, d: i64) -> Rational64 {
        Rational64::new(n, d)
    }

    #[test]
    fn ew_section_divisor() {
        // √x dx / y³
        let s = MonomialDifferential::from_halves(ew(), vec![1, 0, 0], 3, 1);
        assert_eq!(s.order_at(PlaceId::Branch(0)), r(2, 1));
        assert_eq!(s.order_at(PlaceId::Branch(1)), r(0, 1));
        assert_eq!(s.order_at(PlaceId::Branch(2)), r(0, 1));
        assert_eq!(s.order_at(PlaceId::Infinity), r(2, 1));
        assert!(s.is_holomorphic() && !s.is_single_valued());
    }

    #[test]
    fn plat_omega_is_holomorphic_with_canonical_degree() {
        let c = plat();
        let w = MonomialDifferential::from_halves(c.clone(), vec![0, 0, 0, 2], 3, 1);
        assert!(w.is_holomorphic() && w.is_single_valued());
        assert_eq!(w.degree(), r(2 * genus(&c) - 2, 1));
        assert_eq!(w.to_string(), "(z-z4) dz/w^3");
    }

    #[test]
    fn elliptic_dz_orders() {
        let c = Arc::new(CurveSpec::with_multiplicities(2, &[1, 1, 1, 1]).unwrap());
        let dz = MonomialDifferential::from_halves(c, vec![0; 4], 0, 1);
        for j in 0..4 {
            assert_eq!(dz.order_at(PlaceId::Branch(j)), r(1, 1));
        }
    }

    #[test]
    fn half_integral_w_power_rejected() {
        let e = [r(0, 1), r(0, 1), r(0, 1), r(3, 2)];
        let err = MonomialDifferential::new(plat(), &e, r(7, 2), 1).unwrap_err();
        assert_eq!(err, SuperellError::HalfIntegralWPower("7/2".into()));
        assert!(matches!(
            MonomialDifferential::new(plat(), &[r(1, 3), r(0, 1), r(0, 1), r(0, 1)], r(1, 1), 1),
            Err(SuperellError::BadExponent(_))
        ));
    }

    #[test]
    fn constants() {
        let one = MonomialDifferential::constant(plat(), int(1));
        assert!(one.is_single_valued() && one.is_holomorphic());
        let eta = MonomialDifferential::from_halves(plat(), vec![1, 0, 0, 3], 4, 1);
        assert!(eta.multiply(&one).unwrap().same_differential(&eta));
    }

    #[test]
    fn defining_relations_reduce_to_one() {
        let one = MonomialDifferential::constant(plat(), int(1));
        let rel = MonomialDifferential::from_halves(plat(), vec![2, 2, 2, 6], 6, 0);
        assert_eq!(rel.reduce_by_relation(), one);
        let rel = MonomialDifferential::from_halves(ew(), vec![2, 2, 2], 4, 0);
        assert!(rel.same_differential(&MonomialDifferential::constant(ew(), int(1))));
    }

    #[test]
    fn reduction_keeps_bookkeeping() {
        // (z−z4)³ dz²/w⁸ = (z−z4)^0 (z−z1)^-1 (z−z2)^-1 (z−z3)^-1 dz²/w²
        let q = MonomialDifferential::from_halves(plat(), vec![0, 0, 0, 6], 8, 2);
        let red = q.reduce_by_relation();
        assert_eq!((red.halves(), red.w_power()), (&[-2, -2, -2, 0][..], 2));
        assert_eq!(
            red.order_at(PlaceId::Infinity),
            q.order_at(PlaceId::Infinity)
        );
    }

    #[test]
    fn product_of_triple_members() {
        let c = plat();
        let a = MonomialDifferential::from_halves(c.clone(), vec![1, 0, 0, 3], 4, 1);
        let b = MonomialDifferential::from_halves(c.clone(), vec![0, 1, 1, 4], 5, 1);
        let q1 = MonomialDifferential::from_halves(c.clone(), vec![0, 0, 0, 4], 6, 2);
        assert!(a.multiply(&b).unwrap().same_differential(&q1));
        let a2 = MonomialDifferential::from_halves(c.clone(), vec![1, 0, 0, 5], 5, 1);
        let q2 = MonomialDifferential::from_halves(c, vec![0, 0, 0, 6], 7, 2);
        assert!(a2.multiply(&b).unwrap().same_differential(&q2));
    }

    #[test]
    fn square_roots_multiply_to_y_squared() {
        // √x · √((x−1)(x−λ)) = y²
        let s0 = MonomialDifferential::from_halves(ew(), vec![1, 0, 0], 0, 0);
        let s1l = MonomialDifferential::from_halves(ew(), vec![0, 1, 1], 0, 0);
        let y2 = MonomialDifferential::from_halves(ew(), vec![0, 0, 0], -2, 0);
        assert!(s0.multiply(&s1l).unwrap().same_differential(&y2));
    }

    #[test]
    fn curves_must_match() {
        let a = MonomialDifferential::constant(plat(), int(1));
        let b = MonomialDifferential::constant(ew(), int(1));
        assert_eq!(a.multiply(&b).unwrap_err(), SuperellError::CurveMismatch);
    }
}
