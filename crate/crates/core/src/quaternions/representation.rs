use std::sync::Arc;

use super::{ad, QuatError, RotationMatrix, UnitQuaternion};
use crate::exact::RationalMatrix;
use crate::groups::{builtin, Presentation, Substitution, Word};

/// Homomorphism from a finitely presented group to the unit quaternions,
/// stored as one value per generator.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Representation {
    presentation: Arc<Presentation>,
    values: Vec<UnitQuaternion>,
}

impl Representation {
    /// Checks that every relator evaluates to 1.
    pub fn new(
        presentation: Arc<Presentation>,
        values: Vec<UnitQuaternion>,
    ) -> Result<Self, QuatError> {
        let rep = Self::new_unchecked(presentation, values)?;
        for r in rep.presentation.relators() {
            let v = rep.eval_unchecked(r);
            if !v.is_one() {
                return Err(QuatError::RelatorViolated {
                    relator: rep.presentation.fmt_word(r),
                    value: v.to_string(),
                });
            }
        }
        Ok(rep)
    }

    /// Skips the relator check, still requiring one value per generator.
    pub fn new_unchecked(
        presentation: Arc<Presentation>,
        values: Vec<UnitQuaternion>,
    ) -> Result<Self, QuatError> {
        if values.len() != presentation.n_gens() {
            return Err(QuatError::AlphabetMismatch {
                expected: presentation.n_gens(),
                got: values.len(),
            });
        }
        Ok(Representation {
            presentation,
            values,
        })
    }

    pub fn presentation(&self) -> &Presentation {
        &self.presentation
    }

    pub fn presentation_arc(&self) -> &Arc<Presentation> {
        &self.presentation
    }

    pub fn values(&self) -> &[UnitQuaternion] {
        &self.values
    }

    pub fn value(&self, g: usize) -> &UnitQuaternion {
        &self.values[g]
    }

    fn eval_unchecked(&self, w: &Word) -> UnitQuaternion {
        w.letters().iter().fold(UnitQuaternion::one(), |acc, l| {
            let v = &self.values[l.gen];
            if l.inverse {
                &acc * &v.inverse()
            } else {
                &acc * v
            }
        })
    }

    pub fn evaluate(&self, w: &Word) -> Result<UnitQuaternion, QuatError> {
        self.presentation.check_word(w)?;
        Ok(self.eval_unchecked(w))
    }

    pub fn evaluate_text(&self, text: &str) -> Result<UnitQuaternion, QuatError> {
        let w = self.presentation.word(text)?;
        Ok(self.eval_unchecked(&w))
    }

    pub fn relators_hold(&self) -> bool {
        self.presentation
            .relators()
            .iter()
            .all(|r| self.eval_unchecked(r).is_one())
    }

    /// `Ad ρ(w)` as a rotation of span{u₁,u₂,u₃}.
    pub fn ad(&self, w: &Word) -> Result<RotationMatrix, QuatError> {
        ad(&self.evaluate(w)?)
    }

    /// `Ad ρ(w)` as a rational matrix, when its entries are rational.
    pub fn ad_rational(&self, w: &Word) -> Result<Option<RationalMatrix>, QuatError> {
        Ok(self.ad(w)?.to_rational())
    }

    /// Generator-wise `Ad ρ(g)`.
    pub fn ad_values(&self) -> Vec<RotationMatrix> {
        self.values
            .iter()
            .map(|q| ad(q).expect("values are unit"))
            .collect()
    }

    /// `ρ ∘ s`, a representation of `s.source()`.
    pub fn precompose(&self, s: &Substitution) -> Result<Representation, QuatError> {
        if s.target().gens() != self.presentation.gens() {
            return Err(QuatError::AlphabetMismatch {
                expected: self.presentation.n_gens(),
                got: s.target().n_gens(),
            });
        }
        let values = s.images().iter().map(|w| self.eval_unchecked(w)).collect();
        Representation::new(Arc::new(s.source().clone()), values)
    }

    /// `h ρ h⁻¹`.
    pub fn conjugate(&self, h: &UnitQuaternion) -> Representation {
        let hi = h.inverse();
        let values = self.values.iter().map(|q| &(h * q) * &hi).collect();
        Representation {
            presentation: self.presentation.clone(),
            values,
        }
    }

    /// `g ↦ ρ(g)⁻¹`. Turns a homomorphism for one loop-composition order into
    /// one for the opposite order (relators read backwards).
    pub fn pointwise_inverse(&self) -> Representation {
        let values = self.values.iter().map(UnitQuaternion::inverse).collect();
        Representation {
            presentation: self.presentation.clone(),
            values,
        }
    }

    /// Values as `"a+b*sqrt2"` 4-tuples.
    pub fn to_strings(&self) -> Vec<[String; 4]> {
        self.values.iter().map(UnitQuaternion::to_strings).collect()
    }
}

impl std::fmt::Debug for Representation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let parts: Vec<String> = self
            .values
            .iter()
            .enumerate()
            .map(|(g, q)| format!("{}->{}", self.presentation.name(g), q))
            .collect();
        write!(f, "Rep[{}]", parts.join(", "))
    }
}

/// ρ₀ on the (6,6,6,2) orbifold group: `p1 ↦ A`, `p2 ↦ BAB⁻¹`, `p3 ↦ B⁻¹`, `p4 ↦ −1`.
pub fn rho0_gamma() -> Representation {
    let (a, b) = (UnitQuaternion::A(), UnitQuaternion::B());
    let values = vec![
        a.clone(),
        a.conjugate_by(&b),
        b.inverse(),
        UnitQuaternion::minus_one(),
    ];
    Representation::new(Arc::new(builtin::gamma6662()), values).expect("rho0 respects the relators")
}

/// ρ₀ on π₁ of the Platypus, pulled back along φ.
pub fn rho0() -> Representation {
    rho0_gamma()
        .precompose(&builtin::phi_plat())
        .expect("phi targets the orbifold group")
}

/// ρ̂ on the (4,4,4,4) sphere group: `(𝐢, 𝐣, 𝐤, −1)`.
pub fn rho_hat() -> Representation {
    let values = vec![
        UnitQuaternion::i(),
        UnitQuaternion::j(),
        UnitQuaternion::k(),
        UnitQuaternion::minus_one(),
    ];
    Representation::new(
        Arc::new(builtin::presentation("sphere4444").expect("builtin")),
        values,
    )
    .expect("rho_hat respects the relators")
}

/// ρ̂ pulled back to the genus 3 surface group.
pub fn rho_ew() -> Representation {
    rho_hat()
        .precompose(&builtin::sigma3_to_sphere())
        .expect("alphabets match")
}
