//! Real root isolation with Sturm sequences, over exact rationals.

use num_traits::{Signed, Zero};
use serde::Serialize;

use super::ZariskiError;
use crate::exact::{int, rat, to_f64, RatPoly, Rational};

/// A real root known to lie in `(lo, hi]`, or equal to `lo` when `lo == hi`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RootInterval {
    pub lo: Rational,
    pub hi: Rational,
}

impl RootInterval {
    pub fn width(&self) -> Rational {
        &self.hi - &self.lo
    }

    pub fn midpoint_f64(&self) -> f64 {
        (to_f64(&self.lo) + to_f64(&self.hi)) / 2.0
    }

    pub fn contains(&self, x: f64) -> bool {
        to_f64(&self.lo) <= x && x <= to_f64(&self.hi)
    }

    /// Range of `|root|`, or `None` while the interval straddles 0.
    pub fn modulus_range(&self) -> Option<(Rational, Rational)> {
        if !self.lo.is_negative() {
            Some((self.lo.clone(), self.hi.clone()))
        } else if !self.hi.is_positive() {
            Some((-&self.hi, -&self.lo))
        } else {
            None
        }
    }
}

impl Serialize for RootInterval {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut st = s.serialize_struct("RootInterval", 3)?;
        st.serialize_field("lo", &self.lo.to_string())?;
        st.serialize_field("hi", &self.hi.to_string())?;
        st.serialize_field("approx", &self.midpoint_f64())?;
        st.end()
    }
}

pub fn sturm_sequence(p: &RatPoly) -> Vec<RatPoly> {
    let mut seq = vec![p.clone(), p.derivative()];
    while !seq[seq.len() - 1].is_zero() {
        let n = seq.len();
        let r = seq[n - 2].rem(&seq[n - 1]);
        seq.push(-&r);
    }
    seq.pop();
    seq
}

fn sign_changes(seq: &[RatPoly], x: &Rational) -> usize {
    let signs: Vec<bool> = seq
        .iter()
        .map(|q| q.eval(x))
        .filter(|v| !v.is_zero())
        .map(|v| v.is_positive())
        .collect();
    signs.windows(2).filter(|w| w[0] != w[1]).count()
}

/// Number of distinct real roots in `(a, b]`.
pub fn count_roots(seq: &[RatPoly], a: &Rational, b: &Rational) -> usize {
    sign_changes(seq, a) - sign_changes(seq, b)
}

/// Cauchy bound `1 + max |aᵢ / aₙ|`, so every root lies in `(−B, B)`.
pub fn root_bound(p: &RatPoly) -> Rational {
    let l = p.leading();
    int(1)
        + p.coeffs()
            .iter()
            .map(|c| (c / &l).abs())
            .max()
            .unwrap_or_else(Rational::zero)
}

fn check_squarefree(p: &RatPoly) -> Result<(), ZariskiError> {
    if p.degree().unwrap_or(0) == 0 || p.gcd(&p.derivative()).degree() != Some(0) {
        return Err(ZariskiError::NotSquarefree);
    }
    Ok(())
}

/// Isolating intervals for all real roots, ascending, each narrower than `eps`.
pub fn isolate_real_roots(p: &RatPoly, eps: &Rational) -> Result<Vec<RootInterval>, ZariskiError> {
    check_squarefree(p)?;
    let seq = sturm_sequence(p);
    let b = root_bound(p);
    let mut out = Vec::new();
    let mut stack = vec![(-&b, b.clone())];
    while let Some((lo, hi)) = stack.pop() {
        let n = count_roots(&seq, &lo, &hi);
        if n == 0 {
            continue;
        }
        if n == 1 {
            out.push(RootInterval { lo, hi });
            continue;
        }
        let m = (&lo + &hi) / int(2);
        stack.push((m.clone(), hi));
        stack.push((lo, m));
    }
    out.sort_by(|a, b| a.lo.cmp(&b.lo));
    for r in out.iter_mut() {
        refine(p, r, eps);
    }
    Ok(out)
}

/// Bisects until narrower than `eps` (or the root is hit exactly).
pub fn refine(p: &RatPoly, r: &mut RootInterval, eps: &Rational) {
    while r.lo != r.hi && &r.width() >= eps {
        halve(p, r);
    }
}

fn halve(p: &RatPoly, r: &mut RootInterval) {
    if r.lo == r.hi {
        return;
    }
    let m = (&r.lo + &r.hi) / int(2);
    let pm = p.eval(&m);
    if pm.is_zero() {
        r.lo = m.clone();
        r.hi = m;
        return;
    }
    let phi = p.eval(&r.hi);
    if phi.is_zero() || (phi.is_positive() != pm.is_positive()) {
        r.lo = m;
    } else {
        r.hi = m;
    }
}

/// Refines until the `|root|` ranges are pairwise disjoint. Gives up after
/// `max_rounds` halvings, which happens when two roots share a modulus.
pub fn separate_moduli(p: &RatPoly, roots: &mut [RootInterval], max_rounds: usize) -> bool {
    for _ in 0..=max_rounds {
        let ranges: Option<Vec<(Rational, Rational)>> =
            roots.iter().map(RootInterval::modulus_range).collect();
        if let Some(mut ranges) = ranges {
            ranges.sort();
            if ranges.windows(2).all(|w| w[0].1 < w[1].0) {
                return true;
            }
        }
        for r in roots.iter_mut() {
            halve(p, r);
        }
    }
    false
}

/// Number of real roots with `|x| > 1`.
pub fn roots_outside_unit_interval(p: &RatPoly) -> Result<usize, ZariskiError> {
    check_squarefree(p)?;
    let seq = sturm_sequence(p);
    let b = root_bound(p);
    let above = count_roots(&seq, &int(1), &b);
    let below = count_roots(&seq, &-&b, &int(-1)) - usize::from(p.eval(&int(-1)).is_zero());
    Ok(above + below)
}

/// Default isolation width, 10⁻⁴.
pub fn default_eps() -> Rational {
    rat(1, 10_000)
}
