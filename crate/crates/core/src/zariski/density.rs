use std::rc::Rc;

use serde::Serialize;

use super::galois::{galois_pinching_certificate, irreducibility_witness, PinchingCertificate};
use super::quotient::{KMatrix, QuotientRingElement};
use super::roots::roots_outside_unit_interval;
use super::ZariskiError;
use crate::exact::RationalMatrix;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Verdict {
    Sp6,
    Inconclusive,
}

#[derive(Clone, Debug, Serialize)]
pub struct DensityCertificate {
    pub pinching: PinchingCertificate,
    /// Real roots of `h`'s char poly with `|x| > 1`.
    pub h_roots_outside_unit_interval: usize,
    pub h_infinite_order: bool,
    pub commute: bool,
    pub eigenplane_rank: Option<usize>,
    pub verdict: Verdict,
    pub reasons: Vec<String>,
}

/// Rank over `K = Q[x]/(P)` of `[v₁ v₂ h·v₁ h·v₂]`, where `v₁`, `v₂` are
/// eigenvectors of `g` for θ and θ⁻¹ and θ is the class of `x`.
pub fn eigenplane_rank_test(g: &RationalMatrix, h: &RationalMatrix) -> Result<usize, ZariskiError> {
    if !g.is_square() || g.rows() != h.rows() || g.cols() != h.cols() {
        return Err(ZariskiError::Shape);
    }
    let p = g.charpoly()?;
    let pi = p.to_int().ok_or(ZariskiError::Reducible)?;
    if irreducibility_witness(&pi).is_none() {
        return Err(ZariskiError::Reducible);
    }
    let modulus = Rc::new(p);
    let theta = QuotientRingElement::generator(modulus.clone());
    let theta_inv = theta.inverse().ok_or(ZariskiError::ZeroEigenvector)?;
    let gk = KMatrix::from_rational(g, &modulus);
    let hk = KMatrix::from_rational(h, &modulus);
    let eigen = |lambda: &QuotientRingElement| {
        gk.shift(lambda)
            .kernel()
            .into_iter()
            .next()
            .ok_or(ZariskiError::ZeroEigenvector)
    };
    let v1 = eigen(&theta)?;
    let v2 = eigen(&theta_inv)?;
    let hv1 = hk.mul_vec(&v1);
    let hv2 = hk.mul_vec(&v2);
    Ok(KMatrix::from_columns(&[v1, v2, hv1, hv2]).rank())
}

/// Verdict `SP6` when `g` is Galois-pinching, `h` has infinite order, they do
/// not commute and `h` moves the dominant eigenplane of `g`.
pub fn density_certificate(
    g: &RationalMatrix,
    h: &RationalMatrix,
) -> Result<DensityCertificate, ZariskiError> {
    if !g.is_square() || g.rows() != h.rows() || g.cols() != h.cols() {
        return Err(ZariskiError::Shape);
    }
    let pinching = galois_pinching_certificate(g)?;
    let ph = h.charpoly()?;
    let squarefree = ph.div_rem(&ph.gcd(&ph.derivative())).0;
    let outside = roots_outside_unit_interval(&squarefree)?;
    let commute = &(g * h) == &(h * g);
    let eigenplane_rank = if pinching.pinching {
        eigenplane_rank_test(g, h).ok()
    } else {
        None
    };
    let mut reasons = Vec::new();
    if !pinching.pinching {
        reasons.push("G_NOT_PINCHING".to_string());
    }
    if outside == 0 {
        reasons.push("H_INFINITE_ORDER_NOT_CERTIFIED".into());
    }
    if commute {
        reasons.push("COMMUTING".into());
    }
    if eigenplane_rank != Some(4) {
        reasons.push("EIGENPLANE_PRESERVED".into());
    }
    let verdict = if reasons.is_empty() {
        Verdict::Sp6
    } else {
        Verdict::Inconclusive
    };
    Ok(DensityCertificate {
        pinching,
        h_roots_outside_unit_interval: outside,
        h_infinite_order: outside > 0,
        commute,
        eigenplane_rank,
        verdict,
        reasons,
    })
}
