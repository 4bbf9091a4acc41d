use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use serde::Serialize;

use super::modp::{factor_degrees, is_prime};
use super::roots::{default_eps, isolate_real_roots, separate_moduli, RootInterval};
use super::ZariskiError;
use crate::exact::{int, IntPolynomial, RatPoly, Rational, RationalMatrix};

/// Primes are searched below this bound.
pub const WITNESS_PRIME_BOUND: u64 = 10_000;

/// Degree-`n` `Q` with `xⁿ·Q(x + 1/x + shift) = P(x)`, for palindromic `P` of degree `2n`.
pub fn trace_polynomial(p: &IntPolynomial, shift: i64) -> Result<IntPolynomial, ZariskiError> {
    let d = p.degree().ok_or(ZariskiError::NotPalindromic)?;
    if d % 2 != 0 || !p.is_palindromic() {
        return Err(ZariskiError::NotPalindromic);
    }
    let n = d / 2;
    // xⁿ·yᵏ with y = x + 1/x + shift is x^(n−k)·(x² + shift·x + 1)^k
    let y = RatPoly::from_i64(&[1, shift, 1]);
    let basis: Vec<RatPoly> = (0..=n)
        .map(|k| &RatPoly::monomial(int(1), n - k) * &y.pow(k as u32))
        .collect();
    let cols: Vec<Vec<Rational>> = basis
        .iter()
        .map(|b| (0..=d).map(|i| b.coeff(i)).collect())
        .collect();
    let target: Vec<Rational> = (0..=d).map(|i| p.to_rat().coeff(i)).collect();
    let q = RationalMatrix::from_columns(&cols)?
        .solve(&target)
        .ok_or(ZariskiError::NotPalindromic)?;
    let expanded = basis
        .iter()
        .zip(&q)
        .fold(RatPoly::zero(), |acc, (b, c)| &acc + &b.scale(c));
    if expanded != p.to_rat() {
        return Err(ZariskiError::NotPalindromic);
    }
    RatPoly::new(q).to_int().ok_or(ZariskiError::NotPalindromic)
}

/// `Res(f, g)` as the determinant of the Sylvester matrix.
fn resultant(f: &RatPoly, g: &RatPoly) -> Rational {
    let (m, n) = (f.degree().unwrap_or(0), g.degree().unwrap_or(0));
    let size = m + n;
    let mut rows = Vec::with_capacity(size);
    for i in 0..n {
        rows.push(
            (0..size)
                .map(|j| {
                    if j >= i && j - i <= m {
                        f.coeff(m - (j - i))
                    } else {
                        int(0)
                    }
                })
                .collect(),
        );
    }
    for i in 0..m {
        rows.push(
            (0..size)
                .map(|j| {
                    if j >= i && j - i <= n {
                        g.coeff(n - (j - i))
                    } else {
                        int(0)
                    }
                })
                .collect(),
        );
    }
    RationalMatrix::from_rows(&rows)
        .expect("square")
        .det()
        .expect("square")
}

/// `(−1)^(n(n−1)/2) · Res(f, f′) / lc(f)`.
pub fn discriminant(q: &IntPolynomial) -> Result<BigInt, ZariskiError> {
    let n = q
        .degree()
        .filter(|&n| n >= 2)
        .ok_or(ZariskiError::DegreeTooSmall(2))?;
    let f = q.to_rat();
    let mut d = resultant(&f, &f.derivative()) / f.leading();
    if (n * (n - 1) / 2) % 2 == 1 {
        d = -d;
    }
    Ok(d.to_integer())
}

pub fn is_square(n: &BigInt) -> bool {
    !n.is_negative() && {
        let r = n.sqrt();
        &r * &r == *n
    }
}

/// `Q(0)·Q(4)`.
pub fn delta31(q: &IntPolynomial) -> BigInt {
    q.eval(&BigInt::zero()) * q.eval(&BigInt::from(4))
}

/// `Disc(Q)·Δ₃,₁`.
pub fn delta32(q: &IntPolynomial) -> Result<BigInt, ZariskiError> {
    Ok(discriminant(q)? * delta31(q))
}

/// Rational roots of an integer polynomial, by the rational root theorem.
pub fn rational_roots(q: &IntPolynomial) -> Vec<Rational> {
    let f = q.to_rat();
    let c: Vec<BigInt> = q.coeffs().to_vec();
    let Some(k) = c.iter().position(|x| !x.is_zero()) else {
        return Vec::new();
    };
    let mut out: Vec<Rational> = if k > 0 { vec![int(0)] } else { Vec::new() };
    let (a0, an) = (c[k].abs(), q.leading().abs());
    for p in divisors(&a0) {
        for d in divisors(&an) {
            for s in [1, -1] {
                let r = Rational::new(BigInt::from(s) * &p, d.clone());
                if f.eval(&r).is_zero() && !out.contains(&r) {
                    out.push(r);
                }
            }
        }
    }
    out.sort();
    out
}

fn divisors(n: &BigInt) -> Vec<BigInt> {
    let mut out = Vec::new();
    let mut d = BigInt::from(1);
    while &d * &d <= *n {
        if (n % &d).is_zero() {
            out.push(d.clone());
            out.push(n / &d);
        }
        d += 1;
    }
    out.sort();
    out.dedup();
    out
}

/// Primes whose factor-degree patterns together leave no room for a nontrivial
/// factorization over Q: a rational factor of degree `k` forces `k` to be a
/// subset sum of every pattern.
pub fn irreducibility_witness(p: &IntPolynomial) -> Option<Vec<u64>> {
    let n = p.degree()?;
    let mut possible: Vec<bool> = vec![true; n + 1];
    let mut used = Vec::new();
    for q in (2..WITNESS_PRIME_BOUND).filter(|&q| is_prime(q)) {
        let Ok(degs) = factor_degrees(p, q) else {
            continue;
        };
        let mut sums = vec![false; n + 1];
        sums[0] = true;
        for d in degs {
            for s in (d..=n).rev() {
                sums[s] |= sums[s - d];
            }
        }
        if (1..n).any(|k| possible[k] && !sums[k]) {
            used.push(q);
            for k in 0..=n {
                possible[k] &= sums[k];
            }
        }
        if (1..n).all(|k| !possible[k]) {
            return Some(used);
        }
    }
    None
}

/// Least good prime below the bound where `p` has the given factor-degree pattern.
pub fn witness_prime(p: &IntPolynomial, pattern: &[usize]) -> Option<u64> {
    let mut want = pattern.to_vec();
    want.sort_unstable();
    (2..WITNESS_PRIME_BOUND)
        .filter(|&q| is_prime(q))
        .find(|&q| factor_degrees(p, q).is_ok_and(|d| d == want))
}

/// Evidence that a degree-6 palindromic char poly has the full hyperoctahedral Galois group.
#[derive(Clone, Debug, Serialize)]
pub struct PinchingCertificate {
    #[serde(serialize_with = "ser_poly")]
    pub charpoly: IntPolynomial,
    pub root_intervals: Vec<RootInterval>,
    pub simple_real_roots: bool,
    pub distinct_moduli: bool,
    #[serde(serialize_with = "ser_opt_poly")]
    pub trace_polynomial: Option<IntPolynomial>,
    pub trace_polynomial_irreducible: bool,
    #[serde(serialize_with = "ser_opt_int")]
    pub disc_trace_polynomial: Option<BigInt>,
    pub disc_positive_nonsquare: bool,
    #[serde(serialize_with = "ser_opt_int")]
    pub delta31: Option<BigInt>,
    pub delta31_nonsquare: bool,
    #[serde(serialize_with = "ser_opt_int")]
    pub delta32: Option<BigInt>,
    pub delta32_nonsquare: bool,
    /// Least prime with factor degrees (1, 1, 4).
    pub witness_prime: Option<u64>,
    pub witness_degrees: Option<Vec<usize>>,
    /// Primes whose patterns rule out any factorization over Q.
    pub irreducibility_primes: Option<Vec<u64>>,
    /// Proper subgroups of the hyperoctahedral group ruled out.
    pub excluded: Vec<String>,
    pub failures: Vec<String>,
    pub pinching: bool,
}

fn ser_poly<S: serde::Serializer>(p: &IntPolynomial, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(&p.to_string())
}

fn ser_opt_poly<S: serde::Serializer>(p: &Option<IntPolynomial>, s: S) -> Result<S::Ok, S::Error> {
    match p {
        Some(p) => s.serialize_str(&p.to_string()),
        None => s.serialize_none(),
    }
}

fn ser_opt_int<S: serde::Serializer>(n: &Option<BigInt>, s: S) -> Result<S::Ok, S::Error> {
    match n {
        Some(n) => s.serialize_str(&n.to_string()),
        None => s.serialize_none(),
    }
}

/// Runs every check on the char poly; failures are recorded, not raised.
pub fn pinching_certificate_for_poly(p: &IntPolynomial) -> PinchingCertificate {
    let mut c = PinchingCertificate {
        charpoly: p.clone(),
        root_intervals: Vec::new(),
        simple_real_roots: false,
        distinct_moduli: false,
        trace_polynomial: None,
        trace_polynomial_irreducible: false,
        disc_trace_polynomial: None,
        disc_positive_nonsquare: false,
        delta31: None,
        delta31_nonsquare: false,
        delta32: None,
        delta32_nonsquare: false,
        witness_prime: None,
        witness_degrees: None,
        irreducibility_primes: None,
        excluded: Vec::new(),
        failures: Vec::new(),
        pinching: false,
    };
    let n = p.degree().unwrap_or(0);
    if n != 6 {
        c.failures.push("UNSUPPORTED_DEGREE".into());
        return c;
    }
    let f = p.to_rat();
    match isolate_real_roots(&f, &default_eps()) {
        Ok(mut roots) => {
            c.simple_real_roots = roots.len() == n;
            if c.simple_real_roots {
                c.distinct_moduli = separate_moduli(&f, &mut roots, 64);
            }
            roots.sort_by(|a, b| b.modulus_range().cmp(&a.modulus_range()));
            c.root_intervals = roots;
        }
        Err(_) => c.failures.push("NOT_SQUAREFREE".into()),
    }
    if !c.simple_real_roots {
        c.failures.push("NOT_ALL_ROOTS_REAL_AND_SIMPLE".into());
        return c;
    }
    if !c.distinct_moduli {
        c.failures.push("EQUAL_MODULI".into());
    }
    let Ok(q) = trace_polynomial(p, 2) else {
        c.failures.push("NOT_PALINDROMIC".into());
        return c;
    };
    c.trace_polynomial_irreducible = rational_roots(&q).is_empty();
    if !c.trace_polynomial_irreducible {
        c.failures.push("TRACE_POLYNOMIAL_REDUCIBLE".into());
    }
    let disc = discriminant(&q).expect("cubic");
    c.disc_positive_nonsquare = disc.is_positive() && !is_square(&disc);
    if c.disc_positive_nonsquare {
        c.excluded.push("A3".into());
    } else {
        c.failures.push("DISC_SQUARE_OR_NONPOSITIVE".into());
    }
    let d31 = delta31(&q);
    let d32 = &disc * &d31;
    c.delta31_nonsquare = !is_square(&d31);
    c.delta32_nonsquare = !is_square(&d32);
    if c.delta31_nonsquare {
        c.excluded.push("H3,1".into());
    } else {
        c.failures.push("DELTA31_SQUARE".into());
    }
    if c.delta32_nonsquare {
        c.excluded.push("H3,2".into());
    } else {
        c.failures.push("DELTA32_SQUARE".into());
    }
    c.disc_trace_polynomial = Some(disc);
    c.delta31 = Some(d31);
    c.delta32 = Some(d32);
    c.trace_polynomial = Some(q);
    c.witness_prime = witness_prime(p, &[1, 1, 4]);
    match c.witness_prime {
        Some(w) => {
            c.witness_degrees = factor_degrees(p, w).ok();
            c.excluded.push("S3".into());
            c.excluded.push("H3,3".into());
        }
        None => c.failures.push("NO_411_WITNESS_PRIME".into()),
    }
    c.irreducibility_primes = irreducibility_witness(p);
    if c.irreducibility_primes.is_none() {
        c.failures.push("CHARPOLY_NOT_CERTIFIED_IRREDUCIBLE".into());
    }
    c.pinching = c.failures.is_empty();
    c
}

/// Pinching certificate for the char poly of `m`.
pub fn galois_pinching_certificate(
    m: &RationalMatrix,
) -> Result<PinchingCertificate, ZariskiError> {
    let p = m.charpoly()?.to_int().ok_or(ZariskiError::Shape)?;
    Ok(pinching_certificate_for_poly(&p))
}
