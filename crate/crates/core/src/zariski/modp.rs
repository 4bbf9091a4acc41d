//! Polynomials over F_p for small primes, and factorization by distinct- and
//! equal-degree splitting.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::ToPrimitive;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::ZariskiError;
use crate::exact::IntPolynomial;

/// Polynomial over F_p, coefficients ascending, trimmed.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct FpPoly {
    p: u64,
    c: Vec<u64>,
}

impl FpPoly {
    pub fn new(p: u64, mut c: Vec<u64>) -> Self {
        for x in c.iter_mut() {
            *x %= p;
        }
        while c.last() == Some(&0) {
            c.pop();
        }
        FpPoly { p, c }
    }

    pub fn reduce(poly: &IntPolynomial, p: u64) -> Self {
        let pb = BigInt::from(p);
        let c = poly
            .coeffs()
            .iter()
            .map(|x| x.mod_floor(&pb).to_u64().expect("reduced"))
            .collect();
        Self::new(p, c)
    }

    pub fn prime(&self) -> u64 {
        self.p
    }

    pub fn coeffs(&self) -> &[u64] {
        &self.c
    }

    pub fn degree(&self) -> Option<usize> {
        self.c.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.c.is_empty()
    }

    fn one(p: u64) -> Self {
        Self::new(p, vec![1])
    }

    fn x(p: u64) -> Self {
        Self::new(p, vec![0, 1])
    }

    fn inv(&self, a: u64) -> u64 {
        pow_mod(a, self.p - 2, self.p)
    }

    pub fn monic(&self) -> Self {
        match self.c.last() {
            None => self.clone(),
            Some(&l) => {
                let li = self.inv(l);
                Self::new(self.p, self.c.iter().map(|x| x * li % self.p).collect())
            }
        }
    }

    pub fn add(&self, o: &Self) -> Self {
        let n = self.c.len().max(o.c.len());
        let c = (0..n)
            .map(|i| self.c.get(i).unwrap_or(&0) + o.c.get(i).unwrap_or(&0))
            .collect();
        Self::new(self.p, c)
    }

    pub fn sub(&self, o: &Self) -> Self {
        let n = self.c.len().max(o.c.len());
        let c = (0..n)
            .map(|i| self.c.get(i).unwrap_or(&0) + self.p - o.c.get(i).unwrap_or(&0))
            .collect();
        Self::new(self.p, c)
    }

    pub fn mul(&self, o: &Self) -> Self {
        if self.is_zero() || o.is_zero() {
            return Self::new(self.p, vec![]);
        }
        let mut c = vec![0u64; self.c.len() + o.c.len() - 1];
        for (i, a) in self.c.iter().enumerate() {
            for (j, b) in o.c.iter().enumerate() {
                c[i + j] = (c[i + j] + a * b) % self.p;
            }
        }
        Self::new(self.p, c)
    }

    pub fn div_rem(&self, d: &Self) -> (Self, Self) {
        let dd = d.degree().expect("division by zero polynomial");
        let li = self.inv(*d.c.last().expect("nonzero"));
        let mut r = self.c.clone();
        let mut q = vec![0u64; self.c.len().saturating_sub(dd).max(1)];
        while r.len() > dd && !r.is_empty() {
            let k = r.len() - 1 - dd;
            let f = r[r.len() - 1] * li % self.p;
            q[k] = f;
            for (i, x) in d.c.iter().enumerate() {
                r[k + i] = (r[k + i] + self.p - f * x % self.p) % self.p;
            }
            while r.last() == Some(&0) {
                r.pop();
            }
        }
        (Self::new(self.p, q), Self::new(self.p, r))
    }

    pub fn rem(&self, d: &Self) -> Self {
        self.div_rem(d).1
    }

    pub fn gcd(&self, o: &Self) -> Self {
        let (mut a, mut b) = (self.clone(), o.clone());
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    pub fn derivative(&self) -> Self {
        let c = self
            .c
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, x)| (i as u64 % self.p) * x % self.p)
            .collect();
        Self::new(self.p, c)
    }

    /// `self^e mod m`.
    pub fn pow_mod(&self, mut e: u64, m: &Self) -> Self {
        let mut base = self.rem(m);
        let mut acc = Self::one(self.p).rem(m);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base).rem(m);
            }
            base = base.mul(&base).rem(m);
            e >>= 1;
        }
        acc
    }

    pub fn is_squarefree(&self) -> bool {
        self.gcd(&self.derivative()).degree() == Some(0)
    }
}

fn pow_mod(mut a: u64, mut e: u64, p: u64) -> u64 {
    let mut acc = 1 % p;
    a %= p;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * a % p;
        }
        a = a * a % p;
        e >>= 1;
    }
    acc
}

pub fn is_prime(n: u64) -> bool {
    n >= 2 && (2..).take_while(|d| d * d <= n).all(|d| n % d != 0)
}

/// Monic `f` reduced mod `p`, checked to stay squarefree of the same degree.
fn good_reduction(poly: &IntPolynomial, p: u64) -> Result<FpPoly, ZariskiError> {
    if !is_prime(p) {
        return Err(ZariskiError::NotPrime(p));
    }
    let f = FpPoly::reduce(poly, p);
    if f.degree() != poly.degree() || !f.is_squarefree() {
        return Err(ZariskiError::BadPrime(p));
    }
    Ok(f.monic())
}

/// Distinct-degree factorization: `(d, product of all degree-d factors)`.
fn distinct_degree(f: &FpPoly) -> Vec<(usize, FpPoly)> {
    let p = f.prime();
    let mut out = Vec::new();
    let mut rest = f.clone();
    let mut h = FpPoly::x(p);
    let mut d = 0;
    while rest.degree().unwrap_or(0) > 0 {
        d += 1;
        if 2 * d > rest.degree().unwrap() {
            let n = rest.degree().unwrap();
            out.push((n, rest.clone()));
            break;
        }
        h = h.pow_mod(p, &rest);
        let g = rest.gcd(&h.sub(&FpPoly::x(p)));
        if g.degree().unwrap_or(0) > 0 {
            rest = rest.div_rem(&g).0.monic();
            h = h.rem(&rest);
            out.push((d, g));
        }
    }
    out
}

/// Splits a product of distinct degree-`d` monic irreducibles.
fn equal_degree(f: &FpPoly, d: usize, rng: &mut ChaCha8Rng) -> Vec<FpPoly> {
    let n = f.degree().unwrap();
    if n == d {
        return vec![f.clone()];
    }
    let p = f.prime();
    loop {
        let a = FpPoly::new(p, (0..n).map(|_| rng.random_range(0..p)).collect());
        if a.degree().unwrap_or(0) == 0 {
            continue;
        }
        let b = if p == 2 {
            // trace map a + a² + … + a^(2^(d−1))
            let mut t = a.rem(f);
            let mut acc = t.clone();
            for _ in 1..d {
                t = t.mul(&t).rem(f);
                acc = acc.add(&t);
            }
            acc
        } else {
            let e = (p.pow(d as u32) - 1) / 2;
            a.pow_mod(e, f).sub(&FpPoly::one(p))
        };
        let g = f.gcd(&b);
        let gd = g.degree().unwrap_or(0);
        if gd > 0 && gd < n {
            let h = f.div_rem(&g).0.monic();
            let mut out = equal_degree(&g, d, rng);
            out.extend(equal_degree(&h, d, rng));
            return out;
        }
    }
}

/// Monic irreducible factors of `poly` mod `p`, sorted by degree then coefficients.
pub fn factor_mod_p(poly: &IntPolynomial, p: u64) -> Result<Vec<FpPoly>, ZariskiError> {
    let f = good_reduction(poly, p)?;
    let mut rng = ChaCha8Rng::seed_from_u64(p);
    let mut out: Vec<FpPoly> = distinct_degree(&f)
        .iter()
        .flat_map(|(d, g)| equal_degree(g, *d, &mut rng))
        .collect();
    out.sort_by(|a, b| a.degree().cmp(&b.degree()).then_with(|| a.c.cmp(&b.c)));
    Ok(out)
}

/// Degrees of the irreducible factors mod `p`, ascending.
pub fn factor_degrees(poly: &IntPolynomial, p: u64) -> Result<Vec<usize>, ZariskiError> {
    let f = good_reduction(poly, p)?;
    let mut out: Vec<usize> = distinct_degree(&f)
        .iter()
        .flat_map(|(d, g)| std::iter::repeat_n(*d, g.degree().unwrap() / d))
        .collect();
    out.sort_unstable();
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p_plat() -> IntPolynomial {
        IntPolynomial::from_i64(&[1, -2, -125, -404, -125, -2, 1])
    }

    #[test]
    fn x2_plus_1_mod_5_splits() {
        let f = IntPolynomial::from_i64(&[1, 0, 1]);
        assert_eq!(factor_degrees(&f, 5).unwrap(), [1, 1]);
        assert_eq!(factor_degrees(&f, 3).unwrap(), [2]);
    }

    #[test]
    fn mod_53_factors() {
        let fs = factor_mod_p(&p_plat(), 53).unwrap();
        let got: Vec<Vec<u64>> = fs.iter().map(|f| f.coeffs().to_vec()).collect();
        assert_eq!(got, [vec![14, 1], vec![19, 1], vec![1, 18, 22, 18, 1]]);
        assert_eq!(factor_degrees(&p_plat(), 53).unwrap(), [1, 1, 4]);
    }

    #[test]
    fn product_of_factors_is_the_reduction() {
        for p in [3, 7, 13, 31, 37, 53] {
            let fs = factor_mod_p(&p_plat(), p).unwrap();
            let prod = fs.iter().fold(FpPoly::one(p), |a, f| a.mul(f));
            assert_eq!(prod, FpPoly::reduce(&p_plat(), p), "p = {p}");
        }
    }

    #[test]
    fn bad_primes_rejected() {
        assert_eq!(factor_degrees(&p_plat(), 2), Err(ZariskiError::BadPrime(2)));
        assert_eq!(
            factor_degrees(&p_plat(), 11),
            Err(ZariskiError::BadPrime(11))
        );
        assert_eq!(factor_degrees(&p_plat(), 9), Err(ZariskiError::NotPrime(9)));
    }

    #[test]
    fn characteristic_two_equal_degree_split() {
        // (x³ + x + 1)(x³ + x² + 1) over F₂
        let f = IntPolynomial::from_i64(&[1, 1, 1, 1, 1, 1, 1]);
        let got: Vec<Vec<u64>> = factor_mod_p(&f, 2)
            .unwrap()
            .iter()
            .map(|g| g.coeffs().to_vec())
            .collect();
        assert_eq!(got, [vec![1, 0, 1, 1], vec![1, 1, 0, 1]]);
    }
}
