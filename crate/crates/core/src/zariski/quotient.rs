//! The number field `K = Q[x]/(P)` and linear algebra over it.

use std::ops::{Add, Mul, Neg, Sub};
use std::rc::Rc;

use crate::exact::{RatPoly, Rational, RationalMatrix};

/// Element of `Q[x]/(P)`, kept reduced mod `P`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuotientRingElement {
    modulus: Rc<RatPoly>,
    value: RatPoly,
}

impl QuotientRingElement {
    pub fn new(modulus: Rc<RatPoly>, value: RatPoly) -> Self {
        let value = value.rem(&modulus);
        QuotientRingElement { modulus, value }
    }

    pub fn from_rational(modulus: Rc<RatPoly>, c: Rational) -> Self {
        Self::new(modulus, RatPoly::constant(c))
    }

    /// The class θ of `x`.
    pub fn generator(modulus: Rc<RatPoly>) -> Self {
        Self::new(modulus, RatPoly::x())
    }

    pub fn zero(modulus: Rc<RatPoly>) -> Self {
        Self::new(modulus, RatPoly::zero())
    }

    pub fn one(modulus: Rc<RatPoly>) -> Self {
        Self::new(modulus, RatPoly::one())
    }

    pub fn value(&self) -> &RatPoly {
        &self.value
    }

    pub fn modulus(&self) -> &Rc<RatPoly> {
        &self.modulus
    }

    pub fn is_zero(&self) -> bool {
        self.value.is_zero()
    }

    /// Inverse via the extended gcd; `None` if not a unit.
    pub fn inverse(&self) -> Option<Self> {
        let (g, s, _) = self.value.ext_gcd(&self.modulus);
        (g.degree() == Some(0)).then(|| Self::new(self.modulus.clone(), s))
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Self::new(self.modulus.clone(), self.value.scale(c))
    }
}

impl Add for &QuotientRingElement {
    type Output = QuotientRingElement;
    fn add(self, o: &QuotientRingElement) -> QuotientRingElement {
        QuotientRingElement::new(self.modulus.clone(), &self.value + &o.value)
    }
}

impl Sub for &QuotientRingElement {
    type Output = QuotientRingElement;
    fn sub(self, o: &QuotientRingElement) -> QuotientRingElement {
        QuotientRingElement::new(self.modulus.clone(), &self.value - &o.value)
    }
}

impl Mul for &QuotientRingElement {
    type Output = QuotientRingElement;
    fn mul(self, o: &QuotientRingElement) -> QuotientRingElement {
        QuotientRingElement::new(self.modulus.clone(), &self.value * &o.value)
    }
}

impl Neg for &QuotientRingElement {
    type Output = QuotientRingElement;
    fn neg(self) -> QuotientRingElement {
        QuotientRingElement::new(self.modulus.clone(), -&self.value)
    }
}

/// Dense matrix over `K`, row-major.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KMatrix {
    rows: usize,
    cols: usize,
    data: Vec<QuotientRingElement>,
}

impl KMatrix {
    pub fn from_rational(m: &RationalMatrix, modulus: &Rc<RatPoly>) -> Self {
        let data = m
            .entries()
            .iter()
            .map(|c| QuotientRingElement::from_rational(modulus.clone(), c.clone()))
            .collect();
        KMatrix {
            rows: m.rows(),
            cols: m.cols(),
            data,
        }
    }

    pub fn from_columns(cols: &[Vec<QuotientRingElement>]) -> Self {
        let rows = cols.first().map_or(0, Vec::len);
        let data = (0..rows)
            .flat_map(|r| cols.iter().map(move |c| c[r].clone()))
            .collect();
        KMatrix {
            rows,
            cols: cols.len(),
            data,
        }
    }

    pub fn get(&self, r: usize, c: usize) -> &QuotientRingElement {
        &self.data[r * self.cols + c]
    }

    /// `self − λ·I`.
    pub fn shift(&self, lambda: &QuotientRingElement) -> Self {
        let mut out = self.clone();
        for i in 0..self.rows.min(self.cols) {
            out.data[i * self.cols + i] = &out.data[i * self.cols + i] - lambda;
        }
        out
    }

    pub fn mul_vec(&self, v: &[QuotientRingElement]) -> Vec<QuotientRingElement> {
        (0..self.rows)
            .map(|r| {
                (0..self.cols).fold(
                    QuotientRingElement::zero(v[0].modulus().clone()),
                    |acc, c| &acc + &(self.get(r, c) * &v[c]),
                )
            })
            .collect()
    }

    /// Reduced row echelon form and pivot columns; `K` must be a field.
    fn rref(&self) -> (Vec<Vec<QuotientRingElement>>, Vec<usize>) {
        let mut m: Vec<Vec<QuotientRingElement>> = (0..self.rows)
            .map(|r| self.data[r * self.cols..(r + 1) * self.cols].to_vec())
            .collect();
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..self.cols {
            let Some(pr) = (row..self.rows).find(|&r| !m[r][col].is_zero()) else {
                continue;
            };
            m.swap(row, pr);
            let inv = m[row][col]
                .inverse()
                .expect("nonzero element of a field is invertible");
            m[row] = m[row].iter().map(|x| x * &inv).collect();
            for r in 0..self.rows {
                if r != row && !m[r][col].is_zero() {
                    let f = m[r][col].clone();
                    let pivot_row = m[row].clone();
                    m[r] = m[r]
                        .iter()
                        .zip(&pivot_row)
                        .map(|(a, b)| a - &(&f * b))
                        .collect();
                }
            }
            pivots.push(col);
            row += 1;
            if row == self.rows {
                break;
            }
        }
        (m, pivots)
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// One kernel vector per free column.
    pub fn kernel(&self) -> Vec<Vec<QuotientRingElement>> {
        let (m, pivots) = self.rref();
        let modulus = self.data[0].modulus().clone();
        (0..self.cols)
            .filter(|c| !pivots.contains(c))
            .map(|free| {
                let mut v = vec![QuotientRingElement::zero(modulus.clone()); self.cols];
                v[free] = QuotientRingElement::one(modulus.clone());
                for (r, &pc) in pivots.iter().enumerate() {
                    v[pc] = -&m[r][free];
                }
                v
            })
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn theta_times_inverse_is_one() {
        let p = Rc::new(RatPoly::from_i64(&[1, -2, -125, -404, -125, -2, 1]));
        let t = QuotientRingElement::generator(p.clone());
        let ti = t.inverse().unwrap();
        assert_eq!(&t * &ti, QuotientRingElement::one(p));
    }

    #[test]
    fn eigenvector_of_companion() {
        // companion matrix of x² − 2
        let p = Rc::new(RatPoly::from_i64(&[-2, 0, 1]));
        let m = KMatrix::from_rational(&RationalMatrix::from_i64_rows(&[&[0, 2], &[1, 0]]), &p);
        let theta = QuotientRingElement::generator(p);
        let ker = m.shift(&theta).kernel();
        assert_eq!(ker.len(), 1);
        let v = &ker[0];
        let mv = m.mul_vec(v);
        assert!(mv.iter().zip(v).all(|(a, b)| *a == b * &theta));
    }
}
